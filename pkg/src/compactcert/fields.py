"""Exact scalar arithmetic: rationals and prime fields.

Every certificate in this package is computed over one of two substrates:

* the rationals, represented by :class:`fractions.Fraction` (always stored
  reduced, with positive denominator), and
* a prime field GF(p), represented by :class:`GFElement` residues in
  ``[0, p)``.

Both element kinds support ``+ - * /`` and exact equality, so the linear
algebra in :mod:`compactcert.linalg` is written once against that duck type.
No floating point enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

Scalar = Union[Fraction, "GFElement"]


def is_prime(n: int) -> bool:
    """Trial-division primality test (the fields used here are tiny)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class GFElement:
    """A residue in GF(p). Arithmetic stays in ``[0, p)`` exactly."""

    residue: int
    p: int

    def __post_init__(self):
        object.__setattr__(self, "residue", self.residue % self.p)

    def _check(self, other: GFElement) -> None:
        if not isinstance(other, GFElement) or other.p != self.p:
            raise ValueError(f"mixed fields: GF({self.p}) vs {other!r}")

    def __add__(self, other: GFElement) -> GFElement:
        self._check(other)
        return GFElement((self.residue + other.residue) % self.p, self.p)

    def __sub__(self, other: GFElement) -> GFElement:
        self._check(other)
        return GFElement((self.residue - other.residue) % self.p, self.p)

    def __mul__(self, other: GFElement) -> GFElement:
        self._check(other)
        return GFElement((self.residue * other.residue) % self.p, self.p)

    def __truediv__(self, other: GFElement) -> GFElement:
        self._check(other)
        if other.residue == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        inv = pow(other.residue, self.p - 2, self.p)
        return GFElement((self.residue * inv) % self.p, self.p)

    def __neg__(self) -> GFElement:
        return GFElement(-self.residue % self.p, self.p)

    def __bool__(self) -> bool:
        return self.residue != 0

    def __str__(self) -> str:
        return f"{self.residue} mod {self.p}"


class QQField:
    """The field of rationals; elements are ``Fraction`` values."""

    name = "Q"

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, GFElement):
            raise ValueError("cannot coerce a GF(p) element into Q")
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        return Fraction(text.strip())

    def format(self, x: Fraction) -> str:
        return str(x)

    def element_of(self, x) -> bool:
        return isinstance(x, Fraction)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, QQField)

    def __hash__(self) -> int:
        return hash("QQField")


class GFField:
    """The prime field GF(p); primality is checked at construction."""

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"GF modulus must be prime, got {p}")
        self.p = p
        self.name = f"GF({p})"

    @property
    def zero(self) -> GFElement:
        return GFElement(0, self.p)

    @property
    def one(self) -> GFElement:
        return GFElement(1, self.p)

    def __call__(self, value) -> GFElement:
        if isinstance(value, GFElement):
            if value.p != self.p:
                raise ValueError(f"mixed fields: GF({self.p}) vs GF({value.p})")
            return value
        if isinstance(value, Fraction):
            num = value.numerator % self.p
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return GFElement(num, self.p) / GFElement(den, self.p)
        return GFElement(int(value), self.p)

    def parse(self, text: str) -> GFElement:
        text = text.strip()
        if "mod" in text:
            value, modulus = text.split("mod")
            if int(modulus) != self.p:
                raise ValueError(f"scalar {text!r} does not belong to GF({self.p})")
            return GFElement(int(value), self.p)
        return GFElement(int(text), self.p)

    def format(self, x: GFElement) -> str:
        return f"{x.residue} mod {self.p}"

    def element_of(self, x) -> bool:
        return isinstance(x, GFElement) and x.p == self.p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GFField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GFField", self.p))


Field = Union[QQField, GFField]

QQ = QQField()


@lru_cache(maxsize=None)
def GF(p: int) -> GFField:
    return GFField(p)


def field_from_name(name: str) -> Field:
    """Parse a field tag as used in the JSON interchange formats."""
    name = name.strip()
    if name == "Q":
        return QQ
    if name.startswith("GF(") and name.endswith(")"):
        return GF(int(name[3:-1]))
    raise ValueError(f"unknown field name {name!r}")
