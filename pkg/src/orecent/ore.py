"""The Ore extension S = K[y][x; sigma, delta].

An :class:`OreContext` fixes ``sigma(y)`` (y-degree at least 2) and
``delta(y)``.  Elements of S are :class:`SkewPoly` values stored in the
canonical form ``sum a_i(y) x**i``; products are normalized with the
defining relation ``x r = sigma(r) x + delta(r)``.
"""

from __future__ import annotations

import random
import threading

from .field import QQ, Field
from .ypoly import NEG_INF, YPoly


class OreContext:
    """The data (K, sigma, delta) of an Ore extension of K[y].

    ``sigma`` is the K-algebra endomorphism with ``sigma(y) = sigma_y`` and
    ``delta`` is the unique sigma-derivation with ``delta(y) = delta_y``.
    Instances are immutable; internal tables (powers of ``sigma(y)``,
    ``delta(y**e)``, ``x**i * y**e``) are memoized on demand.
    """

    def __init__(self, sigma_y: YPoly, delta_y: YPoly | None = None, field: Field | None = None):
        field = field or sigma_y.field
        if delta_y is None:
            delta_y = YPoly.zero(field)
        if sigma_y.field != field or delta_y.field != field:
            raise ValueError("sigma(y), delta(y) and the context must share one field")
        if sigma_y.degree < 2:
            raise ValueError(
                "deg_y sigma(y) must be at least 2 (sigma of degree <= 1 is excluded "
                f"by the standing assumption); got {sigma_y.degree}"
            )
        self.field = field
        self.sigma_y = sigma_y
        self.delta_y = delta_y
        self._sigma_pows = [YPoly.const(1, field), sigma_y]
        self._delta_pows = [YPoly.zero(field), delta_y]
        self._x_times_y = {}
        self._lock = threading.Lock()

    @classmethod
    def from_strings(cls, sigma_y: str, delta_y: str = "0", field: Field | str = QQ) -> OreContext:
        from .parse import parse_ypoly

        if isinstance(field, str):
            field = Field.from_name(field)
        return cls(parse_ypoly(sigma_y, field), parse_ypoly(delta_y, field), field)

    @property
    def s(self) -> int:
        """``deg_y sigma(y)``."""
        return self.sigma_y.degree

    def is_pure_power(self) -> bool:
        """True when ``sigma(y) = y**k``."""
        return self.sigma_y.coeffs[:-1] == (0,) * self.s and self.sigma_y.lc == 1

    def __eq__(self, other):
        return (
            isinstance(other, OreContext)
            and self.field == other.field
            and self.sigma_y == other.sigma_y
            and self.delta_y == other.delta_y
        )

    def __hash__(self):
        return hash((self.field, self.sigma_y, self.delta_y))

    def __repr__(self):
        return f"OreContext(sigma(y)={self.sigma_y}, delta(y)={self.delta_y}, field={self.field.name})"

    # -- element constructors ---------------------------------------------

    def x(self) -> SkewPoly:
        return SkewPoly(self, [YPoly.zero(self.field), YPoly.const(1, self.field)])

    def y(self) -> SkewPoly:
        return SkewPoly(self, [YPoly.gen(self.field)])

    def const(self, c) -> SkewPoly:
        return SkewPoly(self, [YPoly.const(c, self.field)])

    def zero(self) -> SkewPoly:
        return SkewPoly(self, [])

    def one(self) -> SkewPoly:
        return self.const(1)

    def lift(self, r: YPoly) -> SkewPoly:
        return SkewPoly(self, [r])

    def monomial(self, c, ydeg: int, xdeg: int) -> SkewPoly:
        coeffs = [YPoly.zero(self.field)] * xdeg + [YPoly.monomial(c, ydeg, self.field)]
        return SkewPoly(self, coeffs)

    def random(
        self, rng: random.Random, max_xdeg: int = 3, max_ydeg: int = 3, height: int = 9
    ) -> SkewPoly:
        d = rng.randint(0, max_xdeg)
        return SkewPoly(
            self, [YPoly.random(rng, self.field, max_ydeg, height) for _ in range(d + 1)]
        )

    # -- sigma and delta on R ------------------------------------------------

    def _sigma_pow(self, e: int) -> YPoly:
        pows = self._sigma_pows
        if e >= len(pows):
            with self._lock:
                while len(pows) <= e:
                    pows.append(pows[-1] * self.sigma_y)
        return pows[e]

    def _delta_pow(self, e: int) -> YPoly:
        # delta(y^e) = sigma(y) delta(y^(e-1)) + delta(y) y^(e-1)
        pows = self._delta_pows
        if e >= len(pows):
            with self._lock:
                while len(pows) <= e:
                    k = len(pows)
                    pows.append(self.sigma_y * pows[k - 1] + self.delta_y.shift(k - 1))
        return pows[e]

    def sigma(self, p: YPoly) -> YPoly:
        acc = YPoly.zero(self.field)
        for e, c in enumerate(p.coeffs):
            if c:
                acc = acc + self._sigma_pow(e) * c
        return acc

    def sigma_iter(self, p: YPoly, k: int) -> YPoly:
        if k < 0:
            raise ValueError("k must be nonnegative")
        for _ in range(k):
            p = self.sigma(p)
        return p

    def delta(self, p: YPoly) -> YPoly:
        acc = YPoly.zero(self.field)
        if not self.delta_y:
            return acc
        for e, c in enumerate(p.coeffs):
            if c and e:
                acc = acc + self._delta_pow(e) * c
        return acc

    # -- normalization -------------------------------------------------------

    def x_times_ypow(self, i: int, e: int) -> tuple:
        """Canonical coefficients of ``x**i * y**e`` (a tuple of YPoly)."""
        key = (i, e)
        hit = self._x_times_y.get(key)
        if hit is not None:
            return hit
        f = self.field
        if i == 0:
            out = (YPoly.monomial(1, e, f),)
        elif e == 0:
            out = (YPoly.zero(f),) * i + (YPoly.const(1, f),)
        elif e == 1:
            # x * (x^(i-1) y) = sum sigma(c_k) x^(k+1) + delta(c_k) x^k
            prev = self.x_times_ypow(i - 1, 1)
            acc = [YPoly.zero(f)] * (len(prev) + 1)
            for k, c in enumerate(prev):
                if c:
                    acc[k + 1] = acc[k + 1] + self.sigma(c)
                    acc[k] = acc[k] + self.delta(c)
            out = _trim(acc)
        else:
            # (x^i y^(e-1)) * y = sum c_k (x^k y)
            prev = self.x_times_ypow(i, e - 1)
            acc = [YPoly.zero(f)] * (i + 1)
            for k, c in enumerate(prev):
                if c:
                    for t, term in enumerate(self.x_times_ypow(k, 1)):
                        if term:
                            acc[t] = acc[t] + c * term
            out = _trim(acc)
        self._x_times_y[key] = out
        return out

    def x_times(self, i: int, r: YPoly) -> list:
        """Coefficient list of ``x**i * r`` for ``r`` in R."""
        f = self.field
        acc = [YPoly.zero(f)] * (i + 1)
        for e, c in enumerate(r.coeffs):
            if c:
                for t, term in enumerate(self.x_times_ypow(i, e)):
                    if term:
                        acc[t] = acc[t] + term * c
        return acc

    def mul(self, A: SkewPoly, B: SkewPoly) -> SkewPoly:
        f = self.field
        if not A.coeffs or not B.coeffs:
            return self.zero()
        acc = [YPoly.zero(f)] * (len(A.coeffs) + len(B.coeffs) - 1)
        for j, b in enumerate(B.coeffs):
            if not b:
                continue
            for i, a in enumerate(A.coeffs):
                if not a:
                    continue
                for t, c in enumerate(self.x_times(i, b)):
                    if c:
                        acc[t + j] = acc[t + j] + a * c
        return SkewPoly(self, acc)


def _trim(cs: list) -> tuple:
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


class SkewPoly:
    """An element ``sum coeffs[i] * x**i`` of S (coefficients on the left)."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: OreContext, coeffs=()):
        cs = []
        for c in coeffs:
            if not isinstance(c, YPoly):
                c = YPoly.const(c, ctx.field)
            elif c.field != ctx.field:
                raise ValueError("coefficient over the wrong field")
            cs.append(c)
        self.ctx = ctx
        self.coeffs = _trim(cs)

    @property
    def degree(self):
        """Degree in ``x``; ``-inf`` for zero."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self) -> YPoly:
        return self.coeffs[-1] if self.coeffs else YPoly.zero(self.ctx.field)

    def coeff(self, i: int) -> YPoly:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else YPoly.zero(self.ctx.field)

    @property
    def ydegree(self):
        """Largest y-degree among the coefficients."""
        return max((c.degree for c in self.coeffs), default=NEG_INF)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        """True for elements of K (including 0)."""
        return len(self.coeffs) <= 1 and self.lc.is_constant()

    def is_in_R(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.coeffs == other.coeffs and self.ctx == other.ctx
        if isinstance(other, (int, YPoly)):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"SkewPoly({self})"

    def __str__(self):
        from .parse import format_skew

        return format_skew(self)

    def _coerce(self, other) -> SkewPoly:
        if isinstance(other, SkewPoly):
            if other.ctx != self.ctx:
                raise ValueError("elements of different Ore extensions")
            return other
        if isinstance(other, YPoly):
            return SkewPoly(self.ctx, [other])
        return self.ctx.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return SkewPoly(self.ctx, [self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return SkewPoly(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        return self.ctx.mul(self, self._coerce(other))

    def __rmul__(self, other):
        return self.ctx.mul(self._coerce(other), self)

    def scale(self, c) -> SkewPoly:
        return SkewPoly(self.ctx, [a * c for a in self.coeffs])

    def __pow__(self, e: int):
        return skew_pow(self, e)


def sigma_apply(ctx: OreContext, p: YPoly) -> YPoly:
    return ctx.sigma(p)


def sigma_iter(ctx: OreContext, p: YPoly, k: int) -> YPoly:
    return ctx.sigma_iter(p, k)


def delta_apply(ctx: OreContext, p: YPoly) -> YPoly:
    return ctx.delta(p)


def skew_mul(A: SkewPoly, B: SkewPoly) -> SkewPoly:
    return A * B


def skew_pow(A: SkewPoly, e: int) -> SkewPoly:
    if e < 0:
        raise ValueError("negative exponent")
    result = A.ctx.one()
    base = A
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def commutator(A: SkewPoly, B: SkewPoly) -> SkewPoly:
    """``A*B - B*A``."""
    return A * B - B * A
