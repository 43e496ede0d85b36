"""Seeded pseudo-random families for reproducible invariant suites.

The draws are fully determined by the seed: universe sizes, arities and
member ranks all come from one random.Random stream, and members are
materialized through lex_unrank, so a corpus is identical across runs
and platforms.
"""
from __future__ import annotations

import random
from typing import Iterator

from .combinat import Family, binomial, lex_unrank

DEFAULT_CORPUS_SEED = 94041


def random_family(rng: random.Random, n: int, k: int, m: int) -> Family:
    """m distinct k-sets of [n] sampled uniformly, in increasing rank order."""
    total = binomial(n, k)
    if not 0 <= m <= total:
        raise ValueError(f"m must be in [0, {total}], got {m}")
    ranks = sorted(rng.sample(range(1, total + 1), m))
    return Family(n, k, tuple(lex_unrank(n, k, r) for r in ranks))


def random_corpus(
    count: int = 1000,
    seed: int = DEFAULT_CORPUS_SEED,
    max_n: int = 12,
    max_k: int = 4,
    max_m: int = 48,
) -> Iterator[Family]:
    """Stream of `count` seeded families with n <= max_n, k <= max_k.

    Small universes are as likely as large ones, so complete families and
    full stars occur regularly alongside sparse ones.
    """
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, max_n)
        k = rng.randint(1, min(max_k, n))
        m = rng.randint(0, min(binomial(n, k), max_m))
        yield random_family(rng, n, k, m)
