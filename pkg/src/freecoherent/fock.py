"""Free (Boltzmannian) Fock space over a two-letter alphabet.

Basis vectors are words over ``{0, 1}``; the empty word is the vacuum.
Vectors are finitely supported maps ``word -> Fraction`` kept in canonical
sparse form (no zero amplitudes stored), so ``==`` is mathematical equality.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union[int, Fraction]
Word = str  # over "01"; "" is the vacuum label

LETTERS = (0, 1)


def check_letter(i: int) -> int:
    if isinstance(i, bool) or i not in LETTERS:
        raise ValueError(f"letter must be 0 or 1, got {i!r}")
    return int(i)


def check_word(w: str) -> str:
    if not isinstance(w, str) or any(ch not in "01" for ch in w):
        raise ValueError(f"word must be a string over '01', got {w!r}")
    return w


@dataclass(frozen=True)
class FockVector:
    """Immutable sparse vector with exact rational amplitudes."""

    terms: Mapping[Word, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for w, c in self.terms.items():
            check_word(w)
            c = Fraction(c)
            if c:
                clean[w] = c
        object.__setattr__(self, "terms", clean)

    @classmethod
    def basis(cls, word: Word, coeff: Scalar = 1) -> "FockVector":
        return cls({word: coeff})

    def __eq__(self, other):
        if not isinstance(other, FockVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __getitem__(self, word: Word) -> Fraction:
        return self.terms.get(word, Fraction(0))

    def __add__(self, other: "FockVector") -> "FockVector":
        return add(self, other)

    def __sub__(self, other: "FockVector") -> "FockVector":
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __rmul__(self, c: Scalar) -> "FockVector":
        return scale(c, self)

    def __repr__(self):
        inner = ", ".join(f"{w or 'ε'!s}: {c}" for w, c in sorted(self.terms.items(), key=_word_key))
        return f"FockVector({{{inner}}})"

    @property
    def support(self) -> frozenset:
        return frozenset(self.terms)

    def to_json(self) -> str:
        return dumps(self)


def _word_key(item):
    w = item[0] if isinstance(item, tuple) else item
    return (len(w), w)


def zero() -> FockVector:
    return FockVector()


def vacuum() -> FockVector:
    return FockVector({"": Fraction(1)})


def create(i: int, v: FockVector) -> FockVector:
    """Creation operator: prepend letter ``i`` to every word."""
    a = str(check_letter(i))
    return FockVector({a + w: c for w, c in v})


def annihilate(i: int, v: FockVector) -> FockVector:
    """Annihilation operator: strip a leading ``i``; other terms (and the vacuum) die."""
    a = str(check_letter(i))
    return FockVector({w[1:]: c for w, c in v if w[:1] == a})


def inner_product(u: FockVector, v: FockVector) -> Fraction:
    if len(u) > len(v):
        u, v = v, u
    return sum((c * v.terms[w] for w, c in u if w in v.terms), Fraction(0))


def add(u: FockVector, v: FockVector) -> FockVector:
    out = dict(u.terms)
    for w, c in v:
        out[w] = out.get(w, 0) + c
    return FockVector(out)


def scale(c: Scalar, v: FockVector) -> FockVector:
    c = Fraction(c)
    if not c:
        return FockVector()
    return FockVector({w: c * a for w, a in v})


def norm_squared(v: FockVector) -> Fraction:
    return sum((c * c for _, c in v), Fraction(0))


def linear_combination(pairs: Iterable[tuple[Scalar, FockVector]]) -> FockVector:
    out: dict[Word, Fraction] = {}
    for c, v in pairs:
        for w, a in v:
            out[w] = out.get(w, 0) + Fraction(c) * a
    return FockVector(out)


# -- canonical JSON form ----------------------------------------------------

def to_records(v: FockVector) -> list[dict]:
    return [
        {"word": w, "num": str(c.numerator), "den": str(c.denominator)}
        for w, c in sorted(v.terms.items(), key=_word_key)
    ]


def from_records(records: Iterable[Mapping]) -> FockVector:
    terms: dict[Word, Fraction] = {}
    for rec in records:
        w = check_word(rec["word"])
        if w in terms:
            raise ValueError(f"duplicate word {w!r}")
        den = int(rec["den"])
        if den <= 0:
            raise ValueError("denominator must be positive")
        terms[w] = Fraction(int(rec["num"]), den)
    return FockVector(terms)


def dumps(v: FockVector) -> str:
    return json.dumps(to_records(v), separators=(",", ":"))


def loads(text: str) -> FockVector:
    return from_records(json.loads(text))
