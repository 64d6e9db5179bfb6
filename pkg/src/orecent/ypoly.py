"""Dense univariate polynomials in ``y`` over an exact field.

This is the commutative coefficient ring R = K[y].  Polynomials are
immutable; ``coeffs[e]`` is the coefficient of ``y**e`` and the top
coefficient of a nonzero polynomial is nonzero.
"""

from __future__ import annotations

import random

from .field import QQ, Field, FieldElem

NEG_INF = float("-inf")


class YPoly:
    __slots__ = ("coeffs", "field", "_hash")

    def __init__(self, coeffs=(), field: Field = QQ):
        norm = field.norm
        cs = [norm(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: list, field: Field) -> YPoly:
        # coeffs already normalized element-wise; only trim
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.field = field
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, field: Field = QQ) -> YPoly:
        return cls._raw([], field)

    @classmethod
    def const(cls, c, field: Field = QQ) -> YPoly:
        return cls._raw([field(c)], field)

    @classmethod
    def monomial(cls, c, e: int, field: Field = QQ) -> YPoly:
        return cls._raw([0] * e + [field(c)], field)

    @classmethod
    def gen(cls, field: Field = QQ) -> YPoly:
        return cls._raw([0, 1], field)

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self):
        """Degree in ``y``; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, e: int) -> FieldElem:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, YPoly):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == ((self.field(other),) if self.field(other) else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.coeffs, self.field))
        return self._hash

    def __repr__(self):
        return f"YPoly({list(self.coeffs)!r}, {self.field!r})"

    def __str__(self):
        from .parse import format_ypoly

        return format_ypoly(self)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other) -> YPoly:
        if isinstance(other, YPoly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        return YPoly.const(other, self.field)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        norm = self.field.norm
        out = list(a)
        for i, c in enumerate(b):
            out[i] = norm(out[i] + c)
        return YPoly._raw(out, self.field)

    __radd__ = __add__

    def __neg__(self):
        norm = self.field.norm
        return YPoly._raw([norm(-c) for c in self.coeffs], self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, YPoly):
            c = self.field(other)
            norm = self.field.norm
            return YPoly._raw([norm(c * a) for a in self.coeffs] if c else [], self.field)
        other = self._coerce(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = YPoly.const(1, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))

    def __call__(self, q):
        """Evaluate at a scalar, or substitute a polynomial for ``y``."""
        if isinstance(q, YPoly):
            return poly_compose(self, q)
        f = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = f.norm(acc * q + c)
        return acc

    def shift(self, e: int) -> YPoly:
        """Multiply by ``y**e``."""
        if not self.coeffs or e == 0:
            return self
        return YPoly._raw([0] * e + list(self.coeffs), self.field)

    def monic(self) -> YPoly:
        if not self.coeffs:
            return self
        return self * self.field.inv(self.lc)

    @classmethod
    def random(cls, rng: random.Random, field: Field = QQ, max_degree: int = 3, height: int = 9) -> YPoly:
        d = rng.randint(0, max_degree)
        return cls([field.random(rng, height) for _ in range(d + 1)], field)


def poly_mul(a: YPoly, b: YPoly) -> YPoly:
    ac, bc = a.coeffs, b.coeffs
    if not ac or not bc:
        return YPoly._raw([], a.field)
    out = [0] * (len(ac) + len(bc) - 1)
    for i, x in enumerate(ac):
        if not x:
            continue
        for j, z in enumerate(bc):
            if z:
                out[i + j] += x * z
    norm = a.field.norm
    return YPoly._raw([norm(c) for c in out], a.field)


def poly_compose(p: YPoly, q: YPoly) -> YPoly:
    """Return ``p(q(y))`` by Horner's rule."""
    acc = YPoly.zero(p.field)
    for c in reversed(p.coeffs):
        acc = acc * q + c
    return acc


def poly_divrem(a: YPoly, b: YPoly) -> tuple[YPoly, YPoly]:
    if not b.coeffs:
        raise ZeroDivisionError("polynomial division by zero")
    f = a.field
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv_lc = f.inv(b.lc)
    if len(rem) - 1 < db:
        return YPoly.zero(f), a
    quot = [0] * (len(rem) - db)
    for k in range(len(rem) - 1 - db, -1, -1):
        c = f.norm(rem[k + db] * inv_lc)
        quot[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                rem[k + j] = f.norm(rem[k + j] - c * bj)
    return YPoly._raw(quot, f), YPoly._raw(rem[:db], f)


def poly_gcd(a: YPoly, b: YPoly) -> YPoly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    while b.coeffs:
        a, b = b, poly_divrem(a, b)[1]
    return a.monic()
