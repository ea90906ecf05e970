"""Integer partitions, hook lengths, and exhaustive searches for cores.

Partitions are plain tuples of weakly decreasing positive parts; the empty
tuple is the empty partition.
"""

from collections.abc import Iterable, Iterator


def check_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Coerce to a tuple and validate positivity and weak decrease."""
    out = tuple(parts)
    for i, p in enumerate(out):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"parts must be positive integers, got {p!r}")
        if i and out[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing, got {out}")
    return out


def conjugate(parts: Iterable[int]) -> tuple[int, ...]:
    """Column lengths of the Young diagram (the transposed partition)."""
    return _conjugate(check_partition(parts))


def _conjugate(parts: tuple[int, ...]) -> tuple[int, ...]:
    if not parts:
        return ()
    cols = [0] * parts[0]
    for p in parts:
        for j in range(p):
            cols[j] += 1
    return tuple(cols)


def hook_lengths(parts: Iterable[int]) -> list[list[int]]:
    """Ragged hook-length matrix, one row per part.

    The hook of cell (i, j) counts the cell itself, the cells to its right
    in row i, and the cells below it in column j (rows and columns are
    0-indexed; row i has parts[i] entries).
    """
    parts = check_partition(parts)
    cols = _conjugate(parts)
    return [[(p - j) + (cols[j] - i) - 1 for j in range(p)]
            for i, p in enumerate(parts)]


def is_core(parts: Iterable[int], forbidden: Iterable[int]) -> bool:
    """True when no hook length of the partition lies in `forbidden`."""
    banned = frozenset(forbidden)
    if not banned:
        raise ValueError("forbidden hook set must be nonempty")
    parts = check_partition(parts)
    cols = _conjugate(parts)
    for i, p in enumerate(parts):
        for j in range(p):
            if (p - j) + (cols[j] - i) - 1 in banned:
                return False
    return True


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield all partitions of n in descending lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def enumerate_cores_bounded(forbidden: Iterable[int], max_size: int) -> list[tuple[int, ...]]:
    """Every partition of size <= max_size whose hooks avoid `forbidden`.

    Exhaustive by construction: filters all partitions of each n <= max_size,
    so it is an independent (if slow) oracle for any smarter enumerator.
    Output is canonically ordered: ascending size, then descending
    lexicographic parts.
    """
    if max_size < 0:
        raise ValueError("max_size must be >= 0")
    banned = frozenset(forbidden)
    return [parts
            for n in range(max_size + 1)
            for parts in partitions_of(n)
            if is_core(parts, banned)]
