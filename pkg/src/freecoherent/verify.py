"""Seeded property sweeps behind ``freecoherent verify``.

Each check returns a plain dict ``{"check", "cases", "pass", ...}``; a
failing check carries a ``counterexample``.
"""

from __future__ import annotations

import random
from itertools import combinations

from . import fock
from .coherent import GammaParams, coherent_truncate, eigen_residual, level_norm
from .metrics import (
    IDENTICAL,
    all_prefixes,
    check_ball_correspondence,
    check_equivalence_bounds,
    common_prefix,
    rho,
    tau_squared_closed,
    tau_squared_numeric,
)
from .padic import from_sequence, padic_distance_exponent
from .sampling import (
    random_distinct_pair,
    random_fock_vector,
    random_gamma,
    random_gammas,
    random_sequence,
)


def _result(name, cases, counterexample=None, **extra):
    out = {"check": name, "cases": cases, "pass": counterexample is None}
    out.update(extra)
    if counterexample is not None:
        out["counterexample"] = counterexample
    return out


def check_commutation(rng: random.Random, count: int):
    for _ in range(count):
        v = random_fock_vector(rng)
        for i in fock.LETTERS:
            for j in fock.LETTERS:
                got = fock.annihilate(i, fock.create(j, v))
                want = v if i == j else fock.zero()
                if got != want:
                    return _result("commutation", count, {"i": i, "j": j, "v": fock.to_records(v)})
    return _result("commutation", count)


def check_vacuum():
    for i in fock.LETTERS:
        if fock.annihilate(i, fock.vacuum()):
            return _result("vacuum", 2, {"i": i})
    return _result("vacuum", 2)


def check_coherent_levels(rng: random.Random, count: int, depth: int):
    """Norm product formula and the eigen-residual identity."""
    for _ in range(count):
        s, g = random_sequence(rng), random_gammas(rng)
        t = coherent_truncate(s, g, depth)
        for k in range(depth + 1):
            if fock.norm_squared(t.level(k)) != level_norm(s, g, k) ** 2:
                return _result("coherent_levels", count, {"sequence": str(s), "k": k})
        if eigen_residual(t) != level_norm(s, g, depth) ** 2:
            return _result("coherent_levels", count, {"sequence": str(s), "residual": True})
    return _result("coherent_levels", count, depth=depth)


def check_ultrametric(rng: random.Random, pool_size: int):
    g = random_gammas(rng)
    pool = sorted({random_sequence(rng) for _ in range(pool_size)}, key=str)
    n = len(pool)
    d = [[rho(a, b, g) for b in pool] for a in pool]
    for a in range(n):
        for b in range(n):
            if d[a][b] != d[b][a] or (d[a][b] == 0) != (a == b):
                return _result("ultrametric", n, {"u": str(pool[a]), "v": str(pool[b])})
    triples = 0
    for a, b, c in combinations(range(n), 3):
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            triples += 1
            if d[x][y] > max(d[x][z], d[y][z]):
                return _result(
                    "ultrametric", triples, {"u": str(pool[x]), "v": str(pool[y]), "w": str(pool[z])}
                )
    return _result("ultrametric", triples, pool=n)


def check_tau_oracle(rng: random.Random, count: int, depth: int = 40):
    for _ in range(count):
        u, v = random_distinct_pair(rng)
        g = random_gammas(rng)
        closed = tau_squared_closed(u, v, g)
        num = tau_squared_numeric(u, v, g, max(depth, common_prefix(u, v)))
        if abs(closed - num.value) > num.tail_bound:
            return _result("tau_oracle", count, {"u": str(u), "v": str(v)})
    return _result("tau_oracle", count, depth=depth)


def check_bounds(rng: random.Random, count: int):
    for _ in range(count):
        u, v = random_distinct_pair(rng)
        g = random_gammas(rng, ordered=True)
        rep = check_equivalence_bounds(u, v, g)
        if not rep.ok:
            return _result("equivalence_bounds", count, {"u": str(u), "v": str(v)})
        gamma = random_gamma(rng)
        rep = check_equivalence_bounds(u, v, GammaParams(gamma, gamma))
        if not (rep.c0_sq * rep.rho_sq == rep.tau_sq_closed == rep.c1_sq * rep.rho_sq):
            return _result("equivalence_bounds", count, {"u": str(u), "v": str(v), "equal_gammas": True})
    return _result("equivalence_bounds", count)


def check_special_case(rng: random.Random, count: int):
    for _ in range(count):
        u, v = random_distinct_pair(rng)
        gamma = random_gamma(rng)
        k = common_prefix(u, v)
        if rho(u, v, GammaParams(gamma, gamma)) != gamma ** k:
            return _result("special_case", count, {"u": str(u), "v": str(v)})
    return _result("special_case", count)


def check_padic_distance(rng: random.Random, count: int, precision: int):
    """The 2-adic image sees the first disagreement of two sequences."""
    for _ in range(count):
        u, v = random_distinct_pair(rng)
        k = common_prefix(u, v)
        got = padic_distance_exponent(from_sequence(u, precision), from_sequence(v, precision))
        want = k if k < precision else IDENTICAL
        if got != want:
            return _result("padic_distance", count, {"u": str(u), "v": str(v)})
    return _result("padic_distance", count, precision=precision)


def check_balls(n: int):
    checked = 0
    for prefix in all_prefixes(n):
        rep = check_ball_correspondence(prefix, n)
        checked += 1
        if not rep.ok:
            return _result("ball_correspondence", checked, dict(rep.counterexample, prefix=prefix))
    return _result("ball_correspondence", checked, n=n)


def run_verification(seed: int = 0, n: int = 10, depth: int = 32, precision: int = 64) -> list[dict]:
    rng = random.Random(seed)
    return [
        check_commutation(rng, 200),
        check_vacuum(),
        check_coherent_levels(rng, 25, depth),
        check_ultrametric(rng, 30),
        check_tau_oracle(rng, 100),
        check_bounds(rng, 100),
        check_special_case(rng, 100),
        check_padic_distance(rng, 100, precision),
        check_balls(n),
    ]

