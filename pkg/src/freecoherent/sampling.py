"""Seeded random pools used by the verification sweeps."""

from __future__ import annotations

import random
from fractions import Fraction

from .coherent import GammaParams, IndexSequence
from .fock import FockVector


def random_word(rng: random.Random, max_len: int) -> str:
    return "".join(rng.choice("01") for _ in range(rng.randint(0, max_len)))


def random_rational(rng: random.Random, bound: int = 50) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_fock_vector(rng: random.Random, max_support: int = 16, max_len: int = 10) -> FockVector:
    return FockVector(
        {random_word(rng, max_len): random_rational(rng) for _ in range(rng.randint(0, max_support))}
    )


def random_sequence(rng: random.Random, max_pre: int = 6, max_period: int = 4) -> IndexSequence:
    pre = random_word(rng, max_pre)
    per = "".join(rng.choice("01") for _ in range(rng.randint(1, max_period)))
    return IndexSequence(pre, per)


def random_gamma(rng: random.Random, max_den: int = 20) -> Fraction:
    den = rng.randint(2, max_den)
    return Fraction(rng.randint(1, den - 1), den)


def random_gammas(rng: random.Random, ordered: bool = False) -> GammaParams:
    a, b = random_gamma(rng), random_gamma(rng)
    if ordered and a > b:
        a, b = b, a
    return GammaParams(a, b)


def random_distinct_pair(rng: random.Random, **kw) -> tuple[IndexSequence, IndexSequence]:
    while True:
        u, v = random_sequence(rng, **kw), random_sequence(rng, **kw)
        if u != v:
            return u, v
