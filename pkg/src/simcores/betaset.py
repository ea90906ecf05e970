"""The beta-set encoding of partitions by finite sets of distinct integers.

A partition with r parts corresponds to the set of its first-column hook
lengths {parts[i] + r - 1 - i}.  Down in the gap poset world these sets are
exactly the order ideals, and the partition size can be read off a set
without decoding it.
"""

from collections.abc import Iterable

from .partitions import check_partition


class NotBetaSetError(ValueError):
    """Raised when an integer set fails to decode to a valid partition."""


def partition_to_ideal(parts: Iterable[int]) -> frozenset[int]:
    """First-column hook lengths of a partition, as a set."""
    parts = check_partition(parts)
    r = len(parts)
    return frozenset(p + r - 1 - i for i, p in enumerate(parts))


def _validated_descending(members: Iterable[int]) -> list[int]:
    hooks = sorted(members, reverse=True)
    for i, h in enumerate(hooks):
        if not isinstance(h, int) or h < 1:
            raise NotBetaSetError(f"members must be distinct positive integers, got {h!r}")
        if i and hooks[i - 1] == h:
            raise NotBetaSetError(f"members must be distinct, {h} repeats")
    return hooks


def ideal_to_partition(members: Iterable[int]) -> tuple[int, ...]:
    """The partition whose first-column hooks are exactly `members`."""
    hooks = _validated_descending(members)
    r = len(hooks)
    parts = tuple(h - (r - 1 - i) for i, h in enumerate(hooks))
    if any(p < 1 for p in parts):
        raise NotBetaSetError(f"{sorted(hooks)} is not the hook set of a partition")
    return parts


def size_via_ideal(members: Iterable[int]) -> int:
    """Partition size recovered directly from a hook set.

    Equals sum(members) - C(r, 2); computed without building the partition,
    so it is an independent route to size(ideal_to_partition(members)).
    """
    hooks = _validated_descending(members)
    r = len(hooks)
    return sum(hooks) - r * (r - 1) // 2
