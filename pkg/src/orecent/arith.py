"""Repunit arithmetic and the integer criteria for singly generated centralizers.

A repunit in base ``s`` of length ``n`` is ``1 + s + ... + s**(n-1)``.
The criteria here decide, from integer data of ``P`` alone, when the
centralizer of ``P`` is guaranteed to be ``K[P]``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import Poly, QQ as SymQQ, Symbol, integer_nthroot

from .field import is_prime
from .ypoly import YPoly


def repunit(s: int, n: int) -> int:
    if s < 2:
        raise ValueError("base must be at least 2")
    if n < 0:
        raise ValueError("length must be nonnegative")
    return (s**n - 1) // (s - 1)


def repunit_gcd(s: int, m: int, n: int) -> int:
    """``gcd(repunit(s, m), repunit(s, n))``, which is ``repunit(s, gcd(m, n))``."""
    return repunit(s, math.gcd(m, n))


def criterion_prime_degree(n: int, s: int, rho: int) -> bool:
    """True when ``n`` is prime and ``repunit(s, n)`` does not divide ``rho``."""
    return is_prime(n) and rho % repunit(s, n) != 0


def criterion_small_leading(n: int, rho: int) -> bool:
    """True when the leading coefficient has y-degree in ``1..n``."""
    return 0 < rho <= n


@dataclass(frozen=True)
class ViolationFound:
    """``a**i`` and ``a**j`` (``i < j``) are both roots of the leading coefficient."""

    a: object
    i: int
    j: int

    def to_dict(self):
        return {"verdict": "ViolationFound", "a": str(self.a), "i": self.i, "j": self.j}


@dataclass(frozen=True)
class NoViolationUpTo:
    """No witness in K with exponents up to ``max_exp``; not a proof over the closure."""

    max_exp: int

    def to_dict(self):
        return {"verdict": "NoViolationUpTo", "max_exp": self.max_exp}


def roots_in_field(p: YPoly) -> list:
    """Distinct roots of ``p`` lying in its coefficient field, ascending."""
    if p.degree < 1:
        return []
    f = p.field
    if f.modulus is not None:
        return [a for a in range(f.modulus) if p(a) == 0]
    t = Symbol("t")
    sp = Poly([Fraction(c) for c in reversed(p.coeffs)], t, domain=SymQQ)
    found = {f(Fraction(int(r.numerator), int(r.denominator))) for r in sp.ground_roots()}
    return sorted(found)


def _nth_roots(b, i: int, field) -> list:
    """All ``a`` in the field with ``a**i == b``."""
    if field.modulus is not None:
        return [a for a in range(field.modulus) if pow(a, i, field.modulus) == b]
    b = Fraction(b)
    if b == 0:
        return [0]
    num, den = abs(b.numerator), b.denominator
    rn, exact_n = integer_nthroot(num, i)
    rd, exact_d = integer_nthroot(den, i)
    if not (exact_n and exact_d):
        return []
    a = field(Fraction(int(rn), int(rd)))
    if b < 0:
        return [field.neg(a)] if i % 2 else []
    return sorted({a, field.neg(a)}) if i % 2 == 0 else [a]


def criterion_pure_power_sigma(p_n: YPoly, max_exp: int):
    """Search K for ``a`` and ``i < j <= max_exp`` with ``a**i``, ``a**j`` roots of ``p_n``.

    Only witnesses inside K are searched, so :class:`ViolationFound` is
    sound while :class:`NoViolationUpTo` proves nothing about the
    algebraic closure.
    """
    roots = roots_in_field(p_n)
    if not roots:
        return NoViolationUpTo(max_exp)
    f = p_n.field
    root_set = set(roots)
    for i in range(1, max_exp + 1):
        for b in roots:
            for a in _nth_roots(b, i, f):
                power = b
                for j in range(i + 1, max_exp + 1):
                    power = f.mul(power, a)
                    if power in root_set:
                        return ViolationFound(a, i, j)
    return NoViolationUpTo(max_exp)


def monomial_generator(i: int, j: int, s: int) -> tuple[int, int]:
    """Exponents ``(l, k)`` of the generator ``y**l x**k`` of the centralizer of ``y**i x**j``.

    Valid for ``sigma(y) = y**s`` and ``delta = 0``.  ``k`` is the least
    positive integer for which ``l = repunit(s, k) * i / repunit(s, j)`` is
    an integer.  For ``j = 0`` the centralizer is K[y] and ``(1, 0)`` is
    returned.
    """
    if i < 0 or j < 0 or i + j == 0:
        raise ValueError("need i >= 0, j >= 0 and i + j > 0")
    if s < 2:
        raise ValueError("s must be at least 2")
    if j == 0:
        return 1, 0
    den = repunit(s, j)
    for k in range(1, j + 1):
        num = repunit(s, k) * i
        if num % den == 0:
            return num // den, k
    raise AssertionError("unreachable: k = j always works")
