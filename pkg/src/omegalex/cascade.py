"""Cascade decomposition of C(n, k) - m and the last set of a lex segment.

Every positive integer N has a unique k-cascade representation

    N = C(a_1, k) + C(a_2, k-1) + ... + C(a_s, k-s+1),   a_1 > a_2 > ... > a_s >= 1,

realized here by the greedy rule: at step i pick the maximal a_i with
C(a_i, k-i+1) <= remainder.  Applied to N = C(n, k) - m and re-expressed
through r_i = n - a_i, this yields 1 <= r_1 < r_2 < ... < r_s <= n - 1.
The value r_s is the cascade end (0 for the empty decomposition at
m = C(n, k)).  The r-sequence also spells out the m-th k-set of [n] in
lex order: {r_1, ..., r_s} followed by the tail {n-k+s+1, ..., n}.
"""
from __future__ import annotations

from dataclasses import dataclass

from .combinat import KSet, binomial, lex_unrank


@dataclass(frozen=True)
class CascadeForm:
    """Greedy cascade decomposition of C(n, k) - m with derived r-values."""

    n: int
    k: int
    m: int
    terms: tuple[tuple[int, int], ...]  # (a_i, j_i) with j_i = k - i + 1

    @property
    def r_values(self) -> tuple[int, ...]:
        return tuple(self.n - a for a, _ in self.terms)

    @property
    def end(self) -> int:
        """r_s, or 0 when the decomposition is empty (m = C(n, k))."""
        return self.n - self.terms[-1][0] if self.terms else 0

    @property
    def residual(self) -> int:
        return binomial(self.n, self.k) - self.m


def cascade_decompose(n: int, k: int, m: int) -> CascadeForm:
    """Greedy cascade decomposition of C(n, k) - m.

    Requires 1 <= m <= C(n, k).  The greedy output is validated against
    the defining constraints (strictly decreasing a_i, positive terms,
    exact sum, r-values inside [1, n-1]); a violation raises rather than
    being repaired, since it would mean the greedy rule is wrong.
    """
    total = binomial(n, k)
    if not 1 <= m <= total:
        raise ValueError(f"m must be in [1, {total}] for (n={n}, k={k}), got {m}")
    remainder = total - m
    terms: list[tuple[int, int]] = []
    j = k
    while remainder > 0:
        if j < 1:
            raise AssertionError(f"cascade of {total - m} did not terminate within k terms")
        a = j  # C(j, j) = 1 <= remainder
        while binomial(a + 1, j) <= remainder:
            a += 1
        terms.append((a, j))
        remainder -= binomial(a, j)
        j -= 1
    _validate(n, k, m, terms)
    return CascadeForm(n, k, m, tuple(terms))


def _validate(n: int, k: int, m: int, terms: list[tuple[int, int]]) -> None:
    prev_a = n
    acc = 0
    for i, (a, j) in enumerate(terms, start=1):
        if j != k - i + 1:
            raise AssertionError(f"term {i} has lower index {j}, expected {k - i + 1}")
        if not 1 <= a < prev_a:
            raise AssertionError(f"a-values not strictly decreasing below n: {terms}")
        term = binomial(a, j)
        if term <= 0:
            raise AssertionError(f"term C({a}, {j}) is not positive")
        acc += term
        prev_a = a
    if acc != binomial(n, k) - m:
        raise AssertionError(f"cascade sum {acc} != C({n},{k}) - {m}")
    if terms and not terms[-1][0] >= 1:
        raise AssertionError(f"last a-value below 1: {terms}")


def cascade_end(n: int, k: int, m: int) -> int:
    """The cascade end r_s of m for universe n and arity k (0 when m = C(n, k))."""
    return cascade_decompose(n, k, m).end


def last_lex_set(n: int, k: int, m: int) -> KSet:
    """The m-th k-set of [n] in lex order, built from the cascade r-values.

    Equals {r_1, ..., r_s} followed by the tail {n-k+s+1, ..., n}; agrees
    with lex_unrank(n, k, m) for every m in [1, C(n, k)].
    """
    form = cascade_decompose(n, k, m)
    rs = form.r_values
    s = len(rs)
    tail = range(n - k + s + 1, n + 1)
    return KSet(n, tuple(rs) + tuple(tail))


def case1_reduction(n: int, k: int, m: int) -> tuple[int, int, int]:
    """Full-star peeling arithmetic: (n, k, m) -> (n-1, k, m - C(n-1, k-1)).

    Applicable when r_1 >= 2, equivalently m > C(n-1, k-1).  The reduced
    size satisfies C(n-1, k) - m' = C(n, k) - m, and the cascade r-values
    of m' in the smaller universe are (r_1 - 1, ..., r_s - 1).
    """
    form = cascade_decompose(n, k, m)
    if not (form.terms and form.r_values[0] >= 2):
        raise ValueError(f"reduction requires r_1 >= 2, got r-values {form.r_values}")
    return (n - 1, k, m - binomial(n - 1, k - 1))


def case2_reduction(n: int, k: int, m: int) -> tuple[int, int, int]:
    """Cover-complement arithmetic: (n, k, m) -> (n-1, k-1, m'').

    With m' = C(n, k) - C(n - r_1, k) - m (the complement size inside the
    sets meeting [r_1]) and m'' = C(n-1, k-1) - m'.  Applicable when the
    cascade has at least two terms, i.e. m < C(n, k) - C(n - r_1, k).
    The cascade r-values of m'' at (n-1, k-1) are (r_2 - 1, ..., r_s - 1).
    """
    form = cascade_decompose(n, k, m)
    if len(form.terms) < 2:
        raise ValueError(f"reduction requires a cascade with >= 2 terms, got {form.terms}")
    r1 = form.r_values[0]
    m_prime = binomial(n, k) - binomial(n - r1, k) - m
    return (n - 1, k - 1, binomial(n - 1, k - 1) - m_prime)
