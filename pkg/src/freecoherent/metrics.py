"""The ultrametric rho, the Fock-space metric tau, and the checks tying them
to the 2-adic topology.

Everything is compared in squared form with exact rationals, so no square
root is ever taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Optional, Union

from .coherent import GammaParams, IndexSequence, coherent_truncate, digit_at, level_norm
from .fock import norm_squared
from .padic import PadicBall, ball_contains, from_sequence

IDENTICAL = math.inf

CommonPrefix = Union[int, float]


def common_prefix(u: IndexSequence, v: IndexSequence) -> CommonPrefix:
    """Largest ``k`` with ``u_i == v_i`` for ``i <= k``; IDENTICAL if ``u == v``."""
    if u == v:
        return IDENTICAL
    # past max preperiod + lcm of periods both sequences repeat with a common period
    horizon = max(len(u.preperiod), len(v.preperiod)) + math.lcm(len(u.period), len(v.period))
    for i in range(1, horizon + 1):
        if digit_at(u, i) != digit_at(v, i):
            return i - 1
    raise AssertionError(f"canonical forms differ but digits agree: {u} vs {v}")


def rho(u: IndexSequence, v: IndexSequence, g: GammaParams) -> Fraction:
    k = common_prefix(u, v)
    if k == IDENTICAL:
        return Fraction(0)
    return level_norm(u, g, k)


def tail_sum(s: IndexSequence, g: GammaParams) -> Fraction:
    """``sum_{i>=1} prod_{j<=i} gamma_{s_j}**2`` in closed form."""
    total = Fraction(0)
    p = Fraction(1)
    for ch in s.preperiod:
        p *= g[int(ch)] ** 2
        total += p
    q = Fraction(1)
    one_period = Fraction(0)
    for ch in s.period:
        q *= g[int(ch)] ** 2
        one_period += q
    # q < 1, so the periodic part is a convergent geometric series
    return total + p * one_period / (1 - q)


def tau_squared_closed(u: IndexSequence, v: IndexSequence, g: GammaParams) -> Fraction:
    k = common_prefix(u, v)
    if k == IDENTICAL:
        raise ValueError("tau_squared_closed needs distinct sequences (tau(U, U) = 0)")
    return level_norm(u, g, k) ** 2 * (tail_sum(u.shift(k), g) + tail_sum(v.shift(k), g))


@dataclass(frozen=True)
class NumericTau:
    value: Fraction
    tail_bound: Fraction


def tau_squared_numeric(u: IndexSequence, v: IndexSequence, g: GammaParams, depth: int = 40) -> NumericTau:
    """``||X_U^(K) - X_V^(K)||^2`` from explicit truncations, plus an exact
    bound on the distance to the untruncated ``tau**2``."""
    k = common_prefix(u, v)
    if k != IDENTICAL and depth < k:
        raise ValueError(f"depth {depth} is below the common prefix length {k}")
    diff = coherent_truncate(u, g, depth).vector - coherent_truncate(v, g, depth).vector
    m2 = g.max ** 2
    bound = 2 * m2 ** (depth + 1) / (1 - m2)
    return NumericTau(norm_squared(diff), bound)


@dataclass(frozen=True)
class MetricBoundConstants:
    c0_sq: Fraction
    c1_sq: Fraction

    @classmethod
    def from_gammas(cls, g: GammaParams) -> "MetricBoundConstants":
        g = g.normalized()
        return cls(_bound_const(g.gamma0), _bound_const(g.gamma1))


def _bound_const(gamma: Fraction) -> Fraction:
    return 2 * gamma ** 2 / (1 - gamma ** 2)


@dataclass(frozen=True)
class BoundsReport:
    rho_sq: Fraction
    tau_sq_closed: Fraction
    tau_sq_numeric: Fraction
    tail_bound: Fraction
    c0_sq: Fraction
    c1_sq: Fraction
    lower_ok: bool
    upper_ok: bool
    oracle_ok: bool

    @property
    def ok(self) -> bool:
        return self.lower_ok and self.upper_ok and self.oracle_ok


def check_equivalence_bounds(
    u: IndexSequence, v: IndexSequence, g: GammaParams, depth: int = 40
) -> BoundsReport:
    """Check ``c0**2 rho**2 <= tau**2 <= c1**2 rho**2`` exactly.

    The gammas are swapped into ascending order first; the closed-form tau
    is also sandwiched against the truncation oracle.
    """
    g = g.normalized()
    consts = MetricBoundConstants.from_gammas(g)
    rho_sq = rho(u, v, g) ** 2
    tau_sq = tau_squared_closed(u, v, g)
    num = tau_squared_numeric(u, v, g, max(depth, common_prefix(u, v)))
    return BoundsReport(
        rho_sq=rho_sq,
        tau_sq_closed=tau_sq,
        tau_sq_numeric=num.value,
        tail_bound=num.tail_bound,
        c0_sq=consts.c0_sq,
        c1_sq=consts.c1_sq,
        lower_ok=consts.c0_sq * rho_sq <= tau_sq,
        upper_ok=tau_sq <= consts.c1_sq * rho_sq,
        oracle_ok=abs(tau_sq - num.value) <= num.tail_bound,
    )


# -- ball correspondence -----------------------------------------------------

@dataclass(frozen=True)
class BallReport:
    prefix: str
    n: int
    checked: int
    members: int
    counterexample: Optional[dict] = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None


@lru_cache(maxsize=16)
def enumerate_sequences(n: int) -> tuple:
    """All ``w|0`` and ``w|1`` with ``len(w) == n``: ``2**(n+1)`` distinct sequences.

    Each entry is ``(sequence, first n digits, 2-adic image at precision n+1)``.
    """
    out = []
    for tail in "01":
        for bits in product("01", repeat=n):
            s = IndexSequence("".join(bits), tail)
            out.append((s, s.prefix(n), from_sequence(s, n + 1)))
    return tuple(out)


def check_ball_correspondence(prefix: str, n: int) -> BallReport:
    """Coherent ball ``B_{prefix,k}`` vs the 2-adic ball of radius ``2**-k``.

    The coherent side is membership by digit prefix; the 2-adic side is
    :func:`ball_contains` around the image of ``prefix`` padded with zeros.
    """
    k = len(prefix)
    if not k <= n <= 12:
        raise ValueError(f"need len(prefix) <= n <= 12, got k={k}, n={n}")
    center = from_sequence(IndexSequence(prefix, "0"), n + 1)
    ball = PadicBall(center, k)
    members = 0
    for s, digits, image in enumerate_sequences(n):
        in_coherent = digits[:k] == prefix
        in_padic = ball_contains(ball, image)
        if in_coherent != in_padic:
            return BallReport(
                prefix, n, 2 ** (n + 1), members,
                {"sequence": str(s), "coherent": in_coherent, "padic": in_padic},
            )
        members += in_coherent
    return BallReport(prefix, n, 2 ** (n + 1), members)


def all_prefixes(max_len: int):
    for k in range(max_len + 1):
        for bits in product("01", repeat=k):
            yield "".join(bits)
