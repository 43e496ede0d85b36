"""Exact combinatorics over k-element subsets of [n] = {1, ..., n}.

A k-set is a strictly increasing tuple of elements from [n]; a family is a
collection of distinct k-sets over a shared (universe, arity) pair.  The
ordering used throughout is lexicographic: A precedes B iff the minimum
element of A \\ B is smaller than the minimum element of B \\ A, which for
increasing tuples coincides with plain tuple order.  Ranks are 1-based:
the first k-set of [n] has rank 1, the last has rank C(n, k).

Every quantity here is an exact integer.  Binomials are capped at 128 bits
and raise OverflowError beyond that instead of degrading silently.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations, islice
from typing import Iterable, Iterator

U128_MAX = (1 << 128) - 1
MAX_UNIVERSE = 64

# Members above this count are refused rather than materialized; protects
# complement/ground-set construction from absurd (n, k) combinations.
MAX_MATERIALIZED = 10_000_000


class FamilyParseError(ValueError):
    """Malformed family file; carries the offending 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k): 0 when k > n, 1 when k == 0.

    Raises OverflowError when the value exceeds 128 bits and ValueError on
    negative arguments.
    """
    if n < 0 or k < 0:
        raise ValueError(f"binomial arguments must be non-negative, got ({n}, {k})")
    value = math.comb(n, k)
    if value > U128_MAX:
        raise OverflowError(f"C({n}, {k}) exceeds 128-bit checked arithmetic")
    return value


@dataclass(frozen=True)
class KSet:
    """A k-element subset of [universe], stored as an increasing tuple."""

    universe: int
    elements: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "elements", tuple(self.elements))
        n = self.universe
        if not 1 <= n <= MAX_UNIVERSE:
            raise ValueError(f"universe must be in [1, {MAX_UNIVERSE}], got {n}")
        prev = 0
        for e in self.elements:
            if e <= prev:
                raise ValueError(f"elements must be strictly increasing, got {self.elements}")
            prev = e
        if prev > n:
            raise ValueError(f"element {prev} outside universe [1, {n}]")

    @cached_property
    def mask(self) -> int:
        """Machine-word encoding: bit (e - 1) set for each element e."""
        m = 0
        for e in self.elements:
            m |= 1 << (e - 1)
        return m

    def intersection_size(self, other: KSet) -> int:
        return (self.mask & other.mask).bit_count()

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __str__(self) -> str:
        return "{" + " ".join(str(e) for e in self.elements) + "}"


@dataclass(frozen=True, eq=False)
class Family:
    """Distinct k-sets over a shared universe.

    Insertion order of ``members`` is preserved, but equality and hashing
    are order-insensitive: two families are equal iff they hold the same
    member sets over the same (universe, arity).
    """

    universe: int
    arity: int
    members: tuple[KSet, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        n, k = self.universe, self.arity
        if not 1 <= n <= MAX_UNIVERSE:
            raise ValueError(f"universe must be in [1, {MAX_UNIVERSE}], got {n}")
        # k > n is allowed but forces emptiness: no k-subset of [n] exists then
        if not 0 <= k <= MAX_UNIVERSE:
            raise ValueError(f"arity must be in [0, {MAX_UNIVERSE}], got {k}")
        seen = set()
        for s in self.members:
            if s.universe != n:
                raise ValueError(f"member {s} has universe {s.universe}, family has {n}")
            if len(s.elements) != k:
                raise ValueError(f"member {s} has {len(s.elements)} elements, family arity is {k}")
            if s.elements in seen:
                raise ValueError(f"duplicate member {s}")
            seen.add(s.elements)

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> Family:
        return cls(n, k, tuple(KSet(n, tuple(s)) for s in sets))

    @property
    def size(self) -> int:
        return len(self.members)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(s.mask for s in self.members)

    @cached_property
    def _key(self) -> frozenset[tuple[int, ...]]:
        return frozenset(s.elements for s in self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[KSet]:
        return iter(self.members)

    def __contains__(self, s: KSet) -> bool:
        return s.elements in self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return (
            self.universe == other.universe
            and self.arity == other.arity
            and self._key == other._key
        )

    def __hash__(self) -> int:
        return hash((self.universe, self.arity, self._key))


def lex_rank(s: KSet) -> int:
    """1-based position of s in the lexicographic order of all len(s)-sets of [n]."""
    n, k = s.universe, len(s.elements)
    rank = 1
    prev = 0
    for i, e in enumerate(s.elements, start=1):
        for v in range(prev + 1, e):
            rank += binomial(n - v, k - i)
        prev = e
    return rank


def lex_unrank(n: int, k: int, rank: int) -> KSet:
    """The rank-th k-set of [n] in lexicographic order (1-based); inverse of lex_rank."""
    total = binomial(n, k)
    if not 1 <= rank <= total:
        raise ValueError(f"rank must be in [1, {total}] for (n={n}, k={k}), got {rank}")
    elems = []
    r = rank
    prev = 0
    for i in range(1, k + 1):
        v = prev + 1
        while True:
            block = binomial(n - v, k - i)
            if r <= block:
                break
            r -= block
            v += 1
        elems.append(v)
        prev = v
    return KSet(n, tuple(elems))


def lex_segment(n: int, k: int, m: int) -> Family:
    """The family of the m lexicographically smallest k-sets of [n], in lex order."""
    total = binomial(n, k)
    if not 0 <= m <= total:
        raise ValueError(f"m must be in [0, {total}] for (n={n}, k={k}), got {m}")
    members = tuple(
        KSet(n, elems) for elems in islice(combinations(range(1, n + 1), k), m)
    )
    return Family(n, k, members)


@lru_cache(maxsize=None)
def complete_family(n: int, k: int) -> Family:
    """All C(n, k) k-sets of [n] in lex order.  Cached; members are shared."""
    total = binomial(n, k)
    if total > MAX_MATERIALIZED:
        raise ValueError(f"refusing to materialize C({n},{k}) = {total} sets")
    return lex_segment(n, k, total)


def complement_family(f: Family) -> Family:
    """All k-sets of [n] not in f, in lex order."""
    ground = complete_family(f.universe, f.arity)
    key = f._key
    return Family(
        f.universe, f.arity, tuple(s for s in ground.members if s.elements not in key)
    )


# ---------------------------------------------------------------------------
# Family text format.
#
#   - first non-comment, non-blank line:  `n k`
#   - each further such line: k strictly increasing elements of [1, n]
#   - lines whose first non-blank character is `#` are comments
# ---------------------------------------------------------------------------

def parse_family(text: str) -> Family:
    """Parse the family text format; raises FamilyParseError with a line number."""
    header: tuple[int, int] | None = None
    members: list[KSet] = []
    seen: set[tuple[int, ...]] = set()
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            values = [int(tok) for tok in stripped.split()]
        except ValueError:
            raise FamilyParseError(line_no, f"non-integer token in {stripped!r}") from None
        if header is None:
            if len(values) != 2:
                raise FamilyParseError(line_no, "header must be two integers `n k`")
            n, k = values
            if not 1 <= n <= MAX_UNIVERSE:
                raise FamilyParseError(line_no, f"n must be in [1, {MAX_UNIVERSE}], got {n}")
            if not 0 <= k <= n:
                raise FamilyParseError(line_no, f"k must be in [0, {n}], got {k}")
            header = (n, k)
            continue
        n, k = header
        if len(values) != k:
            raise FamilyParseError(line_no, f"expected {k} elements, got {len(values)}")
        try:
            s = KSet(n, tuple(values))
        except ValueError as exc:
            raise FamilyParseError(line_no, str(exc)) from None
        if s.elements in seen:
            raise FamilyParseError(line_no, f"duplicate set {s}")
        seen.add(s.elements)
        members.append(s)
    if header is None:
        raise FamilyParseError(1, "missing `n k` header line")
    return Family(header[0], header[1], tuple(members))


def format_family(f: Family) -> str:
    """Serialize a family in the text format; inverse of parse_family."""
    if f.arity == 0 and f.size > 0:
        raise ValueError("text format cannot represent the empty set as a member")
    lines = [f"{f.universe} {f.arity}"]
    lines.extend(" ".join(str(e) for e in s.elements) for s in f.members)
    return "\n".join(lines) + "\n"


def load_family(path) -> Family:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_family(fh.read())


def save_family(f: Family, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_family(f))
