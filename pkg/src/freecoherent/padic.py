"""2-adic integers truncated to a finite number of binary digits.

A :class:`PadicInt` holds the residue ``x mod 2**N`` together with ``N``.
Digit ``i - 1`` is the coefficient of ``2**(i - 1)`` (least significant
first), so sequence index ``i`` lines up with the sum ``u_1 + 2 u_2 + ...``.
A valuation that cannot be seen at precision ``N`` is reported as
:data:`INFINITE`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .coherent import IndexSequence, digit_at

DEFAULT_PRECISION = 64
INFINITE = math.inf

Exponent = Union[int, float]


@dataclass(frozen=True)
class PadicInt:
    value: int
    precision: int = DEFAULT_PRECISION

    def __post_init__(self):
        if self.precision < 1:
            raise ValueError("precision must be a positive integer")
        object.__setattr__(self, "value", self.value % (1 << self.precision))

    @classmethod
    def from_digits(cls, digits) -> "PadicInt":
        """Build from least-significant-first digits, e.g. ``"1100"`` is 3."""
        digits = list(digits)
        if not digits:
            raise ValueError("need at least one digit")
        value = 0
        for i, d in enumerate(digits):
            d = int(d) if isinstance(d, str) and d in "01" else d
            if d not in (0, 1):
                raise ValueError(f"2-adic digits must be 0 or 1, got {d!r}")
            value |= d << i
        return cls(value, len(digits))

    @classmethod
    def from_int(cls, n: int, precision: int = DEFAULT_PRECISION) -> "PadicInt":
        """Integer-literal constructor for ``0 <= n < 2**precision``."""
        if not 0 <= n < (1 << precision):
            raise ValueError(f"{n} is outside [0, 2**{precision})")
        return cls(n, precision)

    @property
    def digits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.precision))

    def digit_string(self) -> str:
        return "".join(map(str, self.digits))

    def __str__(self):
        return self.digit_string()

    def __add__(self, other):
        return padd(self, other)

    def __sub__(self, other):
        return psub(self, other)

    def __neg__(self):
        return PadicInt(-self.value, self.precision)


def parse_padic(text: str, precision: int = DEFAULT_PRECISION) -> PadicInt:
    """``"d:1100"`` is a digit string (LSB first); a bare decimal ``"12"`` is an integer literal."""
    text = text.strip()
    if text.startswith("d:"):
        return PadicInt.from_digits(text[2:])
    if not text.isdigit():
        raise ValueError(f"not a 2-adic literal: {text!r}")
    return PadicInt.from_int(int(text), precision)


def from_sequence(s: IndexSequence, n: int = DEFAULT_PRECISION) -> PadicInt:
    """First ``n`` digits of ``sum_i u_i 2**(i-1)``."""
    if n < 1:
        raise ValueError("precision must be a positive integer")
    return PadicInt.from_digits(digit_at(s, i) for i in range(1, n + 1))


def padd(a: PadicInt, b: PadicInt) -> PadicInt:
    return PadicInt(a.value + b.value, min(a.precision, b.precision))


def psub(a: PadicInt, b: PadicInt) -> PadicInt:
    return PadicInt(a.value - b.value, min(a.precision, b.precision))


def valuation(a: PadicInt) -> Exponent:
    """Index of the lowest nonzero digit, or INFINITE if all are zero."""
    if a.value == 0:
        return INFINITE
    return (a.value & -a.value).bit_length() - 1


def padic_distance_exponent(a: PadicInt, b: PadicInt) -> Exponent:
    """``v`` with ``|a - b|_2 = 2**-v``."""
    return valuation(psub(a, b))


@dataclass(frozen=True)
class PadicBall:
    """Closed ball ``{x : |x - center|_2 <= 2**-k}``."""

    center: PadicInt
    radius_exponent: int

    def __post_init__(self):
        if not 0 <= self.radius_exponent <= self.center.precision:
            raise ValueError(
                f"radius exponent {self.radius_exponent} must lie in 0..{self.center.precision}"
            )

    def __contains__(self, x: PadicInt) -> bool:
        return ball_contains(self, x)


def ball_contains(ball: PadicBall, x: PadicInt) -> bool:
    k = ball.radius_exponent
    if x.precision < k:
        raise ValueError(f"point precision {x.precision} is below ball radius exponent {k}")
    mask = (1 << k) - 1
    return (x.value ^ ball.center.value) & mask == 0
