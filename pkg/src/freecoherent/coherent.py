"""Eventually periodic index sequences and truncated free coherent states."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .fock import FockVector, annihilate, check_word, create, linear_combination, norm_squared, scale, vacuum

DEFAULT_DEPTH = 32


def _primitive_root(period: str) -> str:
    n = len(period)
    for d in range(1, n + 1):
        if n % d == 0 and period[:d] * (n // d) == period:
            return period[:d]
    return period


@dataclass(frozen=True)
class IndexSequence:
    """Infinite binary sequence ``preperiod + period + period + ...``.

    Always stored in canonical form (primitive period, shortest preperiod),
    so dataclass equality is equality of the infinite sequences.
    """

    preperiod: str
    period: str

    def __post_init__(self):
        pre, per = check_word(self.preperiod), check_word(self.period)
        if not per:
            raise ValueError("period must be nonempty")
        per = _primitive_root(per)
        while pre and pre[-1] == per[-1]:
            pre = pre[:-1]
            per = per[-1] + per[:-1]
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text: str) -> "IndexSequence":
        """Parse the ``"preperiod|period"`` text form, e.g. ``"1|0"`` or ``"|10"``."""
        if not isinstance(text, str) or text.count("|") != 1:
            raise ValueError(f"expected 'preperiod|period', got {text!r}")
        pre, per = text.split("|")
        for ch in pre + per:
            if ch not in "01":
                raise ValueError(f"invalid character {ch!r} in sequence {text!r}")
        if not per:
            raise ValueError(f"empty period in sequence {text!r}")
        return cls(pre, per)

    def __str__(self):
        return f"{self.preperiod}|{self.period}"

    def digit(self, n: int) -> int:
        return digit_at(self, n)

    def prefix(self, n: int) -> str:
        """First ``n`` digits as a word."""
        pre, per = self.preperiod, self.period
        if n <= len(pre):
            return pre[:n]
        rest = n - len(pre)
        reps = -(-rest // len(per))
        return pre + (per * reps)[:rest]

    def shift(self, k: int) -> "IndexSequence":
        """Drop the first ``k`` digits."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        pre, per = self.preperiod, self.period
        if k <= len(pre):
            return IndexSequence(pre[k:], per)
        r = (k - len(pre)) % len(per)
        return IndexSequence("", per[r:] + per[:r])


SequenceLike = Union[IndexSequence, str]


def as_sequence(s: SequenceLike) -> IndexSequence:
    return s if isinstance(s, IndexSequence) else IndexSequence.parse(s)


def digit_at(s: IndexSequence, n: int) -> int:
    """Return ``u_n`` (1-based)."""
    if n < 1:
        raise ValueError(f"sequence indices are 1-based, got {n}")
    pre, per = s.preperiod, s.period
    if n <= len(pre):
        return int(pre[n - 1])
    return int(per[(n - 1 - len(pre)) % len(per)])


@dataclass(frozen=True)
class GammaParams:
    gamma0: Fraction
    gamma1: Fraction

    def __post_init__(self):
        for name in ("gamma0", "gamma1"):
            g = Fraction(getattr(self, name))
            if not 0 < g < 1:
                raise ValueError(f"{name} must satisfy 0 < gamma < 1, got {g}")
            object.__setattr__(self, name, g)

    def __getitem__(self, letter: int) -> Fraction:
        return self.gamma1 if letter else self.gamma0

    @property
    def max(self) -> Fraction:
        return max(self.gamma0, self.gamma1)

    def normalized(self) -> "GammaParams":
        """Ordered so that ``gamma0 <= gamma1``."""
        if self.gamma0 <= self.gamma1:
            return self
        return GammaParams(self.gamma1, self.gamma0)


@dataclass(frozen=True)
class CoherentTruncation:
    sequence: IndexSequence
    gammas: GammaParams
    depth: int
    vector: FockVector

    def level(self, k: int) -> FockVector:
        """The single-term level ``X_k`` (``k <= depth``)."""
        if not 0 <= k <= self.depth:
            raise ValueError(f"level {k} outside 0..{self.depth}")
        w = level_word(self.sequence, k)
        return FockVector({w: self.vector[w]})


def level_word(s: IndexSequence, k: int) -> str:
    """Word carrying ``X_k``: ``u_k ... u_1``, since creation prepends."""
    return s.prefix(k)[::-1]


def coherent_truncate(s: IndexSequence, g: GammaParams, depth: int = DEFAULT_DEPTH) -> CoherentTruncation:
    """Partial sum ``X_0 + ... + X_K`` with ``X_0 = vacuum`` and
    ``X_k = gamma_{u_k} * create(u_k, X_{k-1})``.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    x = vacuum()
    levels = [x]
    for k in range(1, depth + 1):
        u = digit_at(s, k)
        x = scale(g[u], create(u, x))
        levels.append(x)
    total = linear_combination((1, lv) for lv in levels)
    return CoherentTruncation(s, g, depth, total)


def level_norm(s: IndexSequence, g: GammaParams, k: int) -> Fraction:
    """``prod_{i<=k} gamma_{u_i}``; 1 for ``k = 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= g[digit_at(s, i)]
    return out


def lowering(g: GammaParams, v: FockVector) -> FockVector:
    """Apply ``gamma0^-1 A_0 + gamma1^-1 A_1``."""
    return linear_combination([(1 / g.gamma0, annihilate(0, v)), (1 / g.gamma1, annihilate(1, v))])


def eigen_residual(t: CoherentTruncation) -> Fraction:
    """``|| L X - X ||^2`` for the truncation ``X``; equals ``level_norm(K)**2``."""
    x = t.vector
    return norm_squared(lowering(t.gammas, x) - x)
