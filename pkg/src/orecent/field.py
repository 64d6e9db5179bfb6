"""Exact scalar fields: the rationals and prime fields F_p.

Scalars are plain Python numbers.  Over Q a value is an ``int`` or a
normalized :class:`fractions.Fraction` (integral values are stored as
``int``); over F_p a value is an ``int`` residue in ``[0, p)``.  The
:class:`Field` descriptor carries the arithmetic that needs to know which
field we are in (normalization, inversion, parsing, printing).
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Union

FieldElem = Union[int, Fraction]


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
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


class Field:
    """Field descriptor; ``Field()`` is Q, ``Field(p)`` is F_p."""

    __slots__ = ("modulus",)

    def __init__(self, modulus: int | None = None):
        if modulus is not None:
            modulus = int(modulus)
            if not is_prime(modulus):
                raise ValueError(f"modulus {modulus} is not prime")
        self.modulus = modulus

    @classmethod
    def rationals(cls) -> Field:
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> Field:
        return cls(p)

    @classmethod
    def from_name(cls, name: str) -> Field:
        """Parse ``"rationals"`` / ``"QQ"`` / ``"fp:<p>"``."""
        text = name.strip().lower()
        if text in ("rationals", "qq", "q"):
            return cls(None)
        if text.startswith("fp:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ValueError(f"bad field descriptor {name!r}") from None
            return cls(p)
        raise ValueError(f"unknown field {name!r} (expected 'rationals' or 'fp:<prime>')")

    @property
    def name(self) -> str:
        return "rationals" if self.modulus is None else f"fp:{self.modulus}"

    @property
    def characteristic(self) -> int:
        return 0 if self.modulus is None else self.modulus

    def __eq__(self, other):
        return isinstance(other, Field) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("Field", self.modulus))

    def __repr__(self):
        return f"Field({self.name!r})"

    # -- element arithmetic ------------------------------------------------

    def __call__(self, value) -> FieldElem:
        """Coerce an int, Fraction or literal string into this field."""
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"cannot coerce {value!r} into {self.name}")
        if self.modulus is not None and isinstance(value, Fraction):
            if value.denominator % self.modulus == 0:
                raise ZeroDivisionError(f"{value} has no image in {self.name}")
            return value.numerator * pow(value.denominator, -1, self.modulus) % self.modulus
        return self.norm(value)

    def norm(self, a: FieldElem) -> FieldElem:
        if self.modulus is not None:
            return a % self.modulus
        if type(a) is Fraction and a.denominator == 1:
            return a.numerator
        return a

    @property
    def zero(self) -> FieldElem:
        return 0

    @property
    def one(self) -> FieldElem:
        return 1

    def add(self, a, b):
        return self.norm(a + b)

    def sub(self, a, b):
        return self.norm(a - b)

    def neg(self, a):
        return self.norm(-a)

    def mul(self, a, b):
        return self.norm(a * b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in " + self.name)
        if self.modulus is not None:
            return pow(a, -1, self.modulus)
        return self.norm(1 / Fraction(a))

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def format(self, a: FieldElem) -> str:
        return str(a)

    def bitsize(self, a: FieldElem) -> int:
        if type(a) is Fraction:
            return a.numerator.bit_length() + a.denominator.bit_length()
        return int(a).bit_length()

    def random(self, rng: random.Random, height: int = 9) -> FieldElem:
        """Random element; over Q numerator/denominator are bounded by ``height``."""
        if self.modulus is not None:
            return rng.randrange(self.modulus)
        num = rng.randint(-height, height)
        den = rng.randint(1, height) if rng.random() < 0.3 else 1
        return self.norm(Fraction(num, den))


QQ = Field()
