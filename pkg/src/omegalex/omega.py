"""The intersection-weight functional over k-uniform families.

For a family F the weight is

    omega(F) = sum of |A ∩ B| over unordered pairs {A, B} of distinct members,

with the degree form omega(F) = sum_x C(deg(x), 2) where deg(x) counts the
members containing x.  Both routes are implemented independently: omega()
walks the pairs with word-encoded sets, omega_via_degrees() goes through
the degree vector, and the test suite holds them equal.

Cross-weights, covers, full stars, minimum-element classes, and the exact
degree identity for the weight of the complement family live here too.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .combinat import Family, KSet, binomial


@dataclass(frozen=True)
class DegreeVector:
    """Per-element incidence counts deg(x) = |{F in family : x in F}|."""

    universe: int
    counts: tuple[int, ...]  # index x - 1

    def __getitem__(self, x: int) -> int:
        if not 1 <= x <= self.universe:
            raise ValueError(f"element {x} outside universe [1, {self.universe}]")
        return self.counts[x - 1]

    def total(self) -> int:
        return sum(self.counts)

    def squares(self) -> int:
        return sum(d * d for d in self.counts)

    def as_dict(self) -> dict[int, int]:
        return {x: d for x, d in enumerate(self.counts, start=1)}


def degree_vector(f: Family) -> DegreeVector:
    """Incidence counts of every element of [n]; their sum is k * m."""
    counts = [0] * f.universe
    for s in f.members:
        for e in s.elements:
            counts[e - 1] += 1
    return DegreeVector(f.universe, tuple(counts))


def omega(f: Family) -> int:
    """Pairwise weight: sum of |A ∩ B| over unordered pairs of distinct members."""
    masks = f.masks
    total = 0
    for i, mi in enumerate(masks):
        for mj in masks[i + 1 :]:
            total += (mi & mj).bit_count()
    return total


def omega_via_degrees(f: Family) -> int:
    """Degree form of the weight: sum_x C(deg(x), 2)."""
    return sum(d * (d - 1) // 2 for d in degree_vector(f).counts)


def cross_omega(f: Family, g: Family) -> int:
    """Sum of |A ∩ B| over ordered pairs (A in f, B in g).

    Computed through the exact identity sum_x deg_f(x) * deg_g(x); the
    ordered-pair definition is what the tests enumerate against.  Requires
    both families to share (universe, arity).
    """
    if (f.universe, f.arity) != (g.universe, g.arity):
        raise ValueError(
            f"families are incompatible: (n={f.universe}, k={f.arity}) vs "
            f"(n={g.universe}, k={g.arity})"
        )
    df = degree_vector(f).counts
    dg = degree_vector(g).counts
    return sum(a * b for a, b in zip(df, dg))


def disjoint_pairs(f: Family) -> int:
    """Number of unordered pairs of members with empty intersection."""
    masks = f.masks
    total = 0
    for i, mi in enumerate(masks):
        for mj in masks[i + 1 :]:
            if mi & mj == 0:
                total += 1
    return total


def full_stars(f: Family) -> frozenset[int]:
    """Elements x whose incidence count reaches the maximum C(n-1, k-1)."""
    n, k = f.universe, f.arity
    if k == 0:
        return frozenset()
    star_size = binomial(n - 1, k - 1)
    deg = degree_vector(f)
    return frozenset(x for x in range(1, n + 1) if deg[x] == star_size)


def is_cover(f: Family, xs: Iterable[int]) -> bool:
    """True iff every member of f meets the element set xs.

    When true, the covered-union property (the members containing some
    x in xs exhaust f) is re-asserted before returning.
    """
    xs = frozenset(xs)
    for x in xs:
        if not 1 <= x <= f.universe:
            raise ValueError(f"cover element {x} outside universe [1, {f.universe}]")
    xmask = 0
    for x in xs:
        xmask |= 1 << (x - 1)
    if any(m & xmask == 0 for m in f.masks):
        return False
    covered = {s.elements for x in xs for s in f.members if x in s}
    assert covered == {s.elements for s in f.members}
    return True


def minimum_cover(f: Family, size_limit: int) -> frozenset[int] | None:
    """Smallest cover of size <= size_limit, or None if there is none.

    Exhaustive search by increasing size; among covers of the minimal
    size the lexicographically smallest element subset wins.
    """
    n = f.universe
    if not 0 <= size_limit <= n:
        raise ValueError(f"size_limit must be in [0, {n}], got {size_limit}")
    masks = f.masks
    for size in range(size_limit + 1):
        for xs in combinations(range(1, n + 1), size):
            xmask = 0
            for x in xs:
                xmask |= 1 << (x - 1)
            if all(m & xmask for m in masks):
                return frozenset(xs)
    return None


def min_element_classes(f: Family) -> dict[int, Family]:
    """Partition of f into classes indexed by each member's minimum element."""
    if f.arity == 0 and f.size > 0:
        raise ValueError("empty sets have no minimum element")
    classes: dict[int, list[KSet]] = {}
    for s in f.members:
        classes.setdefault(s.elements[0], []).append(s)
    return {
        x: Family(f.universe, f.arity, tuple(members))
        for x, members in sorted(classes.items())
    }


def complement_omega(f: Family) -> int:
    """Weight of the complement family, from f's degrees alone.

    Uses deg_comp(x) = C(n-1, k-1) - deg_f(x) elementwise:

        2 * omega(comp) = n * C(n-1, k-1)^2 - 2 k m C(n-1, k-1)
                          + sum_x deg_f(x)^2 - k * (C(n, k) - m)
    """
    n, k, m = f.universe, f.arity, f.size
    star = binomial(n - 1, k - 1) if k >= 1 else 0
    doubled = (
        n * star * star
        - 2 * k * m * star
        + degree_vector(f).squares()
        - k * (binomial(n, k) - m)
    )
    assert doubled % 2 == 0
    return doubled // 2


def family_of(s: KSet) -> Family:
    """Single-member family around s; handy for cross-weights of one set."""
    return Family(s.universe, len(s.elements), (s,))
