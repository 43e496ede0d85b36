"""Named extremal constructions and the degree-square upper bound.

For graphs (k = 2) the two classical candidates are the quasi-complete
graph (clique on [a] plus b pendant edges at vertex a+1, from the unique
m = C(a,2) + b with 0 <= b < a) and the quasi-star (its complement at the
complementary size); by the Ahlswede-Katona theorem one of the two always
maximizes the weight among m-edge graphs.  For general k, Bey's bound

    omega(F) <= k(k-1)/(2(n-1)) * m^2 + C(n-2, k-1) * m / 2 - k * m / 2

holds for every size-m family, with equality exactly on a short catalog
of families (the complete family, a full star, the sets of [k+1]
containing a fixed prefix, and complements of these).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Literal, NamedTuple

from .combinat import Family, KSet, binomial, complement_family, complete_family
from .omega import omega_via_degrees


def full_star_family(n: int, k: int, x: int) -> Family:
    """All k-sets of [n] containing the element x; size C(n-1, k-1)."""
    if not 1 <= x <= n:
        raise ValueError(f"x must be in [1, {n}], got {x}")
    ground = complete_family(n, k)
    return Family(n, k, tuple(s for s in ground.members if x in s))


def quasi_complete(n: int, m: int) -> Family:
    """Clique on [a] plus pendant edges (i, a+1) for i in [b], m = C(a,2) + b."""
    total = binomial(n, 2)
    if not 0 <= m <= total:
        raise ValueError(f"m must be in [0, {total}] for n={n}, got {m}")
    a = 1
    while binomial(a + 1, 2) <= m:
        a += 1
    b = m - binomial(a, 2)
    if a > n or (b > 0 and a + 1 > n):
        raise ValueError(f"quasi-complete graph with m={m} does not fit in [1, {n}]")
    edges = [(i, j) for j in range(2, a + 1) for i in range(1, j)]
    edges.extend((i, a + 1) for i in range(1, b + 1))
    return Family(n, 2, tuple(KSet(n, e) for e in sorted(edges)))


def quasi_star(n: int, m: int) -> Family:
    """Complement of the quasi-complete graph at the complementary size."""
    total = binomial(n, 2)
    if not 0 <= m <= total:
        raise ValueError(f"m must be in [0, {total}] for n={n}, got {m}")
    return complement_family(quasi_complete(n, total - m))


class AkBest(NamedTuple):
    value: int
    which: Literal["quasi_complete", "quasi_star", "tie"]


def ak_best(n: int, m: int) -> AkBest:
    """Larger weight of the two k=2 candidates, recomputed from scratch.

    For k = 2 all intersections have size <= 1, so the weight equals the
    number of adjacent (intersecting) edge pairs.
    """
    w_complete = omega_via_degrees(quasi_complete(n, m))
    w_star = omega_via_degrees(quasi_star(n, m))
    if w_complete > w_star:
        return AkBest(w_complete, "quasi_complete")
    if w_star > w_complete:
        return AkBest(w_star, "quasi_star")
    return AkBest(w_star, "tie")


def bey_bound(n: int, k: int, m: int) -> Fraction:
    """Exact rational value of the degree-square upper bound."""
    if not 0 < m <= binomial(n, k):
        raise ValueError(f"m must be in [1, {binomial(n, k)}] for (n={n}, k={k}), got {m}")
    quadratic = Fraction(k * (k - 1), 2 * (n - 1)) * m * m if n > 1 else Fraction(0)
    return quadratic + Fraction(binomial(n - 2, k - 1) * m, 2) - Fraction(k * m, 2)


def _prefix_family(k: int, r: int, n: int) -> Family:
    """k-sets of [k+1] containing the prefix [r], viewed inside universe [n]."""
    prefix = tuple(range(1, r + 1))
    members = tuple(
        KSet(n, prefix + tail) for tail in combinations(range(r + 1, k + 2), k - r)
    )
    return Family(n, k, members)


def bey_equality_catalog(n: int, k: int, m: int) -> list[Family]:
    """Catalog families of size m that attain the bound exactly.

    Covers the complete family, the full star at 1, the prefix families
    inside [k+1] (only available when n = k+1), and complements of all of
    these.  Every returned family is checked to attain the bound; the list
    is empty when no catalog size matches m.
    """
    bound = bey_bound(n, k, m)
    candidates: list[Family] = []
    if m == binomial(n, k):
        candidates.append(complete_family(n, k))
    if m == binomial(n - 1, k - 1):
        candidates.append(full_star_family(n, k, 1))
    if m == binomial(n - 1, k):
        candidates.append(complement_family(full_star_family(n, k, 1)))
    if n == k + 1:
        for r in range(2, (k + 1) // 2 + 1):
            prefix = _prefix_family(k, r, n)
            if prefix.size == m:
                candidates.append(prefix)
            comp = complement_family(prefix)
            if comp.size == m:
                candidates.append(comp)
    result: list[Family] = []
    for fam in candidates:
        if fam not in result:
            attained = omega_via_degrees(fam)
            assert Fraction(attained) == bound, (
                f"catalog family of size {m} misses the bound: {attained} != {bound}"
            )
            result.append(fam)
    return result


@dataclass(frozen=True)
class BoundReport:
    """Evaluation of the bound at (n, k, m) with an attaining witness if any."""

    n: int
    k: int
    m: int
    bey_bound: Fraction
    attained: bool
    witness: Family | None


def bound_report(n: int, k: int, m: int) -> BoundReport:
    catalog = bey_equality_catalog(n, k, m)
    return BoundReport(
        n=n,
        k=k,
        m=m,
        bey_bound=bey_bound(n, k, m),
        attained=bool(catalog),
        witness=catalog[0] if catalog else None,
    )
