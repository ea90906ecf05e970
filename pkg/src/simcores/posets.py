"""Gap posets of two-generator numerical semigroups and their order ideals.

The poset on the gaps of the semigroup generated by coprime {a, b} has
q <= p exactly when p - q is a nonnegative combination of a and b, and
p covers q exactly when p - q is a or b.  A two-parameter family of
truncations of these posets (drop the bottom j layers, where the layer of
p is floor(p / (n + 1))) drives all the statistics in this package.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import gcd


class NonCoprimeError(ValueError):
    """The generators share a factor, so the gap set would be infinite."""


class InvalidFamilyError(ValueError):
    """A family index (m, j, n) outside the allowed ranges."""


class ElementNotInPosetError(LookupError):
    """An element was addressed that the poset does not contain."""


def _representable(d: int, a: int, b: int) -> bool:
    """Is d a nonnegative integer combination of a and b?"""
    if d < 0:
        return False
    if a == 1 or b == 1:
        return True
    while d >= 0:
        if d % a == 0:
            return True
        d -= b
    return False


@dataclass(frozen=True)
class GapPoset:
    """Finite poset of semigroup gaps, possibly restricted to a subset.

    `elements` may be any subset of the full gap set of {a, b}; sub-poset
    views keep their original integer labels so explicit element maps apply
    verbatim.  `covers` always holds the Hasse diagram of the induced order
    as (upper, lower) pairs, sorted.
    """

    a: int
    b: int
    elements: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]

    @cached_property
    def _element_set(self) -> frozenset[int]:
        return frozenset(self.elements)

    def __contains__(self, p: int) -> bool:
        return p in self._element_set

    def __len__(self) -> int:
        return len(self.elements)

    def leq(self, q: int, p: int) -> bool:
        """q <= p in the semigroup order (both must be elements)."""
        for e in (q, p):
            if e not in self:
                raise ElementNotInPosetError(f"{e} is not an element of this poset")
        return _representable(p - q, self.a, self.b)

    def incomparable(self, p: int, q: int) -> bool:
        return not self.leq(p, q) and not self.leq(q, p)


@lru_cache(maxsize=None)
def gap_poset(a: int, b: int) -> GapPoset:
    """The poset of all positive integers outside the semigroup of {a, b}."""
    if a < 1 or b < 1:
        raise ValueError("generators must be positive")
    if gcd(a, b) != 1:
        raise NonCoprimeError(f"gcd({a}, {b}) != 1; the gap set is infinite")
    frontier = a * b - a - b
    reachable = bytearray(max(frontier + 1, 1))
    reachable[0] = 1
    for v in range(1, frontier + 1):
        if (v >= a and reachable[v - a]) or (v >= b and reachable[v - b]):
            reachable[v] = 1
    gaps = tuple(v for v in range(1, frontier + 1) if not reachable[v])
    assert len(gaps) == (a - 1) * (b - 1) // 2
    gap_set = frozenset(gaps)
    covers = sorted((p, p - d) for p in gaps for d in {a, b} if p - d in gap_set)
    return GapPoset(a, b, gaps, tuple(covers))


def induced_subposet(poset: GapPoset, keep) -> GapPoset:
    """Sub-poset on `keep` (original labels) with its own Hasse diagram.

    Covers are recomputed from the induced order, not merely restricted,
    so removed intermediate elements cannot hide a covering pair.
    """
    keep = tuple(sorted(set(keep)))
    for p in keep:
        if p not in poset:
            raise ElementNotInPosetError(f"{p} is not an element of the ambient poset")
    k = len(keep)
    less = [[q < p and _representable(p - q, poset.a, poset.b) for p in keep]
            for q in keep]
    covers = []
    for t in range(k):
        for i in range(k):
            if less[i][t] and not any(less[i][u] and less[u][t] for u in range(k)):
                covers.append((keep[t], keep[i]))
    return GapPoset(poset.a, poset.b, keep, tuple(sorted(covers)))


@dataclass(frozen=True)
class FamilyId:
    """Names one poset in the two-parameter truncation family.

    j = 0 names the plain gap poset of (n, m*n + 1).  For j in [1, m - 1]
    the poset is the gap poset of (n + 1, m*(n + 1) + 1) with its bottom j
    layers removed, the layer of p being floor(p / (n + 1)).
    """

    m: int
    j: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 0 or not 0 <= self.j <= self.m - 1:
            raise InvalidFamilyError(
                f"no family poset named (m={self.m}, j={self.j}, n={self.n})")

    @property
    def layer_divisor(self) -> int:
        """Denominator of the layer statistic on this poset's elements."""
        return self.n if self.j == 0 else self.n + 1


@lru_cache(maxsize=None)
def family_poset(family: FamilyId) -> GapPoset:
    """Materialize the poset named by `family`, with original labels."""
    m, j, n = family.m, family.j, family.n
    if j == 0:
        if n == 0:
            return GapPoset(1, m + 1, (), ())
        return gap_poset(n, m * n + 1)
    big = gap_poset(n + 1, m * (n + 1) + 1)
    return induced_subposet(big, (p for p in big.elements if p // (n + 1) >= j))


def layer_index(family: FamilyId, p: int) -> int:
    """Layer of element p inside the poset named by `family`."""
    if p not in family_poset(family):
        raise ElementNotInPosetError(f"{p} is not an element of {family}")
    return p // family.layer_divisor


def _bit_indices(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def _ideal_masks(poset: GapPoset) -> tuple[int, ...]:
    """Bitmasks (over ascending element index) of every order ideal.

    Elements are visited in increasing numeric order, which is a linear
    extension, so an element may join exactly when all its lower covers are
    already in.  Each ideal is produced once, by its sorted inclusion order.
    """
    elems = poset.elements
    index = {e: i for i, e in enumerate(elems)}
    need = [0] * len(elems)
    for hi, lo in poset.covers:
        need[index[hi]] |= 1 << index[lo]
    k = len(elems)
    out = []

    def grow(start: int, acc: int) -> None:
        out.append(acc)
        for i in range(start, k):
            ni = need[i]
            if acc & ni == ni:
                grow(i + 1, acc | (1 << i))

    grow(0, 0)
    return tuple(out)


def order_ideals(poset: GapPoset) -> tuple[tuple[int, ...], ...]:
    """Every order ideal exactly once, canonically ordered.

    Ideals are returned as ascending member tuples, sorted first by
    cardinality and then lexicographically.
    """
    elems = poset.elements
    ideals = [tuple(elems[i] for i in _bit_indices(mask))
              for mask in _ideal_masks(poset)]
    ideals.sort(key=lambda members: (len(members), members))
    return tuple(ideals)


def minimal_elements(poset: GapPoset) -> tuple[int, ...]:
    """Elements that cover nothing, in ascending order."""
    uppers = {hi for hi, _ in poset.covers}
    return tuple(e for e in poset.elements if e not in uppers)


def above_prefix_part(poset: GapPoset, i: int) -> GapPoset:
    """Elements above one of the first i - 1 minimal elements and
    incomparable to every later minimal element."""
    mins = minimal_elements(poset)
    if not 1 <= i <= len(mins) + 1:
        raise ValueError(f"i must be in [1, {len(mins) + 1}], got {i}")
    prefix, rest = mins[:i - 1], mins[i - 1:]
    keep = [p for p in poset.elements
            if any(p != q and poset.leq(q, p) for q in prefix)
            and all(poset.incomparable(p, q) for q in rest)]
    return induced_subposet(poset, keep)


def detached_part(poset: GapPoset, i: int) -> GapPoset:
    """Elements incomparable to each of the first i minimal elements."""
    mins = minimal_elements(poset)
    if not 1 <= i <= len(mins):
        raise ValueError(f"i must be in [1, {len(mins)}], got {i}")
    keep = [p for p in poset.elements
            if all(poset.incomparable(p, q) for q in mins[:i])]
    return induced_subposet(poset, keep)


@dataclass(frozen=True, eq=False)
class IsomorphismInstance:
    """One named poset pair together with an explicit element map."""

    name: str
    source: GapPoset
    target: GapPoset
    mapping: dict[int, int]


@dataclass(frozen=True)
class IsomorphismReport:
    ok: bool
    witness: str | None = None


def check_isomorphism(source: GapPoset, target: GapPoset, mapping) -> IsomorphismReport:
    """Verify that `mapping` is an order isomorphism from source onto target.

    `mapping` may be a dict or a callable on source elements.  Failures are
    reported with a witness rather than raised, so a broken map is a test
    diagnostic, not a crash.
    """
    if callable(mapping):
        mapping = {p: mapping(p) for p in source.elements}
    for p in source.elements:
        if p not in mapping:
            return IsomorphismReport(False, f"map not total: no image for {p}")
    images = [mapping[p] for p in source.elements]
    seen = set()
    for p, fp in zip(source.elements, images):
        if fp in seen:
            return IsomorphismReport(False, f"map not injective: {fp} is hit twice")
        seen.add(fp)
    if seen != set(target.elements):
        off = min(seen ^ set(target.elements))
        return IsomorphismReport(False, f"image and target differ at {off}")
    mapped_covers = {(mapping[hi], mapping[lo]) for hi, lo in source.covers}
    target_covers = set(target.covers)
    if mapped_covers != target_covers:
        bad = min(mapped_covers ^ target_covers)
        return IsomorphismReport(False, f"cover relation differs at {bad}")
    return IsomorphismReport(True, None)


# The catalog below fixes the slope-two family: plain posets are the gap
# posets of (n, 2n + 1), trimmed posets drop the bottom layer of the gap
# poset of (n + 1, 2n + 3).

def _plain(n: int) -> GapPoset:
    return family_poset(FamilyId(2, 0, n))


def _trimmed(n: int) -> GapPoset:
    return family_poset(FamilyId(2, 1, n))


def trimmed_reflection_iso(n: int) -> IsomorphismInstance:
    """Trimmed poset of index n onto the gap poset of (n + 1, 2n + 1),
    reflecting every element inside its layer."""
    source = _trimmed(n)
    target = gap_poset(n + 1, 2 * n + 1)
    mapping = {q: (2 * n + 2) * (q // (n + 1)) - q for q in source.elements}
    return IsomorphismInstance(f"trimmed-reflection(n={n})", source, target, mapping)


def above_prefix_iso(n: int, i: int) -> IsomorphismInstance:
    """Trimmed poset of index i - 1 onto the above-prefix part of the plain
    poset of index n, shifting each element by its layer."""
    source = _trimmed(i - 1)
    target = above_prefix_part(_plain(n), i)
    mapping = {q: q + (n - i) * (q // i) for q in source.elements}
    return IsomorphismInstance(f"above-prefix(n={n}, i={i})", source, target, mapping)


def detached_iso(n: int, i: int) -> IsomorphismInstance:
    """Plain poset of index n - i onto the detached part of the plain poset
    of index n."""
    source = _plain(n - i)
    target = detached_part(_plain(n), i)
    mapping = {p: p + i + i * (p // (n - i)) for p in source.elements}
    return IsomorphismInstance(f"detached(n={n}, i={i})", source, target, mapping)


def trimmed_above_prefix_iso(n: int, i: int) -> IsomorphismInstance:
    """Plain poset of index i - 1 onto the above-prefix part of the trimmed
    poset of index n."""
    source = _plain(i - 1)
    target = above_prefix_part(_trimmed(n), i)
    mapping = {p: p + 2 * n + 3 + (n + 2 - i) * (p // (i - 1))
               for p in source.elements}
    return IsomorphismInstance(f"trimmed-above-prefix(n={n}, i={i})",
                               source, target, mapping)


def trimmed_detached_iso(n: int, i: int) -> IsomorphismInstance:
    """Plain poset of index n - i + 1 onto the detached part of the trimmed
    poset of index n."""
    source = _plain(n - i + 1)
    target = detached_part(_trimmed(n), i)
    mapping = {p: p + n + 1 + i + i * (p // (n - i + 1))
               for p in source.elements}
    return IsomorphismInstance(f"trimmed-detached(n={n}, i={i})",
                               source, target, mapping)


def to_dot(poset: GapPoset) -> str:
    """Hasse diagram in DOT: one node per element, one edge upper -> lower."""
    lines = ["digraph hasse {"]
    for e in poset.elements:
        lines.append(f'  "{e}";')
    for hi, lo in sorted(poset.covers):
        lines.append(f'  "{hi}" -> "{lo}";')
    lines.append("}")
    return "\n".join(lines)
