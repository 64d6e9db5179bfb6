"""Centralizers C_S(P) of single elements, computed inside a bounded box.

The solver linearizes ``P Q - Q P = 0`` over the unknown coefficients of
``Q`` with ``deg_x Q <= D`` and every coefficient of y-degree at most ``B``
and solves it exactly.  From the solution space we read off module
generators over K[P] (one minimal-degree element per residue class of
degrees mod ``deg P``) and run the structural checks: one-dimensional
leading coefficients per degree, constants in degree 0, the rank bound and
commutativity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from . import arith
from .linalg import _echelon, nullspace_sparse
from .ore import OreContext, SkewPoly, commutator
from .ypoly import YPoly

DEFAULT_Y_MARGIN = 8
DEFAULT_STABILITY_DELTA = 5


@dataclass(frozen=True)
class DegreeConstraint:
    """Integrality of the leading y-degree ``k`` a centralizer element of degree ``m`` needs."""

    m: int
    k: Fraction
    admissible: bool


def leading_constraint(n: int, rho: int, s: int, m: int) -> DegreeConstraint:
    # rho + s^n k = k + s^m rho
    k = Fraction(rho * (s**m - 1), s**n - 1)
    return DegreeConstraint(m, k, k.denominator == 1 and k >= 0)


def _leading_data(P: SkewPoly) -> tuple[int, int, int]:
    n = P.degree
    if n == float("-inf") or n < 1:
        raise ValueError("P must have positive x-degree")
    return n, P.lc.degree, P.ctx.s


def admissible_degrees(P: SkewPoly, max_m: int) -> list[DegreeConstraint]:
    """Degrees ``1 <= m <= max_m`` at which a centralizer element may exist."""
    n, rho, s = _leading_data(P)
    out = []
    for m in range(1, max_m + 1):
        dc = leading_constraint(n, rho, s, m)
        if dc.admissible:
            out.append(dc)
    return out


def default_ydeg_bound(P: SkewPoly, max_xdeg: int) -> int:
    if P.degree < 1:
        return DEFAULT_Y_MARGIN
    ks = [int(dc.k) for dc in admissible_degrees(P, max_xdeg)]
    return max(ks, default=0) + DEFAULT_Y_MARGIN


# -- the bounded solver ----------------------------------------------------


def _solve(P: SkewPoly, D: int, B: int) -> list[SkewPoly]:
    """Canonical basis of {Q in the box : PQ = QP}.

    Unknowns are ordered by descending (x-degree, y-degree); the basis is
    the reduced echelon form of the solution space in that order, so each
    element has a distinct leading monomial with coefficient 1.
    """
    ctx = P.ctx
    f = ctx.field
    width = B + 1

    def unknown(col):
        return D - col // width, B - col % width

    equations: dict[tuple[int, int], dict[int, object]] = {}
    for col in range(width * (D + 1)):
        d, b = unknown(col)
        C = commutator(P, ctx.monomial(1, b, d))
        for t, c in enumerate(C.coeffs):
            for e, v in enumerate(c.coeffs):
                if v:
                    equations.setdefault((t, e), {})[col] = v
    vectors = nullspace_sparse(list(equations.values()), width * (D + 1), f)
    rows = _echelon([{j: v for j, v in enumerate(vec) if v} for vec in vectors], f)
    basis = []
    for row in rows.values():
        coeffs = [[0] * width for _ in range(D + 1)]
        for col, v in row.items():
            d, b = unknown(col)
            coeffs[d][b] = v
        basis.append(SkewPoly(ctx, [YPoly(c, f) for c in coeffs]))
    basis.sort(key=lambda q: (q.degree, q.lc.degree))
    return basis


def leading_space_dims(basis: list[SkewPoly]) -> dict[int, int]:
    """Dimension of the span of leading coefficients, per occurring x-degree."""
    by_degree: dict[int, list[YPoly]] = {}
    for q in basis:
        by_degree.setdefault(q.degree, []).append(q.lc)
    dims = {}
    for d, lcs in sorted(by_degree.items()):
        f = lcs[0].field
        rows = [{e: v for e, v in enumerate(c.coeffs) if v} for c in lcs]
        dims[d] = len(_echelon(rows, f))
    return dims


def generators_from_basis(P: SkewPoly, basis: list[SkewPoly]) -> list[SkewPoly]:
    """One minimal-degree element per residue class of degrees mod ``deg P``; ``p_0 = 1``."""
    n = P.degree
    gens: dict[int, SkewPoly] = {0: P.ctx.one()}
    for q in sorted(basis, key=lambda q: (q.degree, q.lc.degree)):
        if not q:
            continue
        r = q.degree % n
        if r not in gens:
            lc = q.lc
            gens[r] = q.scale(lc.field.inv(lc.lc))
    return [gens[r] for r in sorted(gens, key=lambda r: gens[r].degree)]


@dataclass
class CentralizerReport:
    context: OreContext
    P: SkewPoly
    max_xdeg: int
    ydeg_bound: int
    basis: list[SkewPoly]
    module_generators: list[SkewPoly]
    generator_count: int
    commutative: bool
    stable: bool
    stability_delta: int
    dimension: int
    dimension_extended: int
    leading_dims: dict[int, int]
    constants_only_in_degree_zero: bool
    rank_bound_ok: bool
    truncated_powers: list[int] = dc_field(default_factory=list)
    degenerate: bool = False
    criteria: dict = dc_field(default_factory=dict)
    notes: list[str] = dc_field(default_factory=list)

    @property
    def leading_space_ok(self) -> bool:
        return all(v <= 1 for v in self.leading_dims.values())

    @property
    def sound(self) -> bool:
        """False signals a counterexample to a structural theorem at these bounds."""
        return (
            self.commutative
            and self.leading_space_ok
            and self.constants_only_in_degree_zero
            and self.rank_bound_ok
        )


def centralizer_space(
    P: SkewPoly,
    max_xdeg: int,
    ydeg_bound: int | None = None,
    stability_delta: int = DEFAULT_STABILITY_DELTA,
    with_criteria: bool = True,
) -> CentralizerReport:
    """Solve for the centralizer of ``P`` inside the box and check its structure."""
    if P.is_constant():
        raise ValueError("P must not be a constant")
    if max_xdeg < 0:
        raise ValueError("max_xdeg must be nonnegative")
    D = max_xdeg
    B = default_ydeg_bound(P, D) if ydeg_bound is None else ydeg_bound
    if B < 0:
        raise ValueError("ydeg_bound must be nonnegative")
    ctx = P.ctx
    notes = []

    basis = _solve(P, D, B)
    extended = _solve(P, D, B + stability_delta) if stability_delta > 0 else basis
    stable = len(extended) == len(basis)
    if not stable:
        notes.append(
            f"dimension changes from {len(basis)} to {len(extended)} when the y-bound "
            f"grows from {B} to {B + stability_delta}"
        )

    degenerate = P.degree == 0
    if degenerate:
        notes.append("P lies in K[y] \\ K: its centralizer is K[y] itself")
        gens: list[SkewPoly] = []
        truncated = []
    else:
        gens = generators_from_basis(P, basis)
        truncated = []
        power = ctx.one()
        for q in range(1, D // P.degree + 1):
            power = power * P
            if power.ydegree > B:
                truncated.append(q)
        if truncated:
            notes.append(
                "powers P^q for q in " + str(truncated) + " exceed the y-bound and are missing"
            )

    degree_zero = [q for q in basis if q.degree == 0]
    constants_ok = degenerate or all(q.is_constant() for q in degree_zero)
    rank_ok = degenerate or len(gens) <= P.degree

    report = CentralizerReport(
        context=ctx,
        P=P,
        max_xdeg=D,
        ydeg_bound=B,
        basis=basis,
        module_generators=gens,
        generator_count=len(gens),
        commutative=check_commutative(basis),
        stable=stable,
        stability_delta=stability_delta,
        dimension=len(basis),
        dimension_extended=len(extended),
        leading_dims=leading_space_dims(basis),
        constants_only_in_degree_zero=constants_ok,
        rank_bound_ok=rank_ok,
        truncated_powers=truncated,
        degenerate=degenerate,
        notes=notes,
    )
    if with_criteria and not degenerate:
        report.criteria = criteria_verdicts(P, D)
    if not report.commutative:
        notes.append("SOUNDNESS: basis elements fail to commute")
    return report


def module_generators(P: SkewPoly, max_xdeg: int, ydeg_bound: int | None = None) -> list[SkewPoly]:
    if P.degree < 1:
        raise ValueError("P must have positive x-degree")
    B = default_ydeg_bound(P, max_xdeg) if ydeg_bound is None else ydeg_bound
    return generators_from_basis(P, _solve(P, max_xdeg, B))


def reduce_by(P: SkewPoly, Q: SkewPoly, gens: list[SkewPoly]) -> SkewPoly:
    """Eliminate leading terms of ``Q`` with multiples ``alpha P^q g``.

    Returns 0 when ``Q`` lies in the K[P]-span of ``gens``; otherwise the
    first remainder whose leading term cannot be matched.
    """
    n = P.degree
    if n < 1:
        raise ValueError("P must have positive x-degree")
    f = P.ctx.field
    powers = [P.ctx.one()]
    while Q:
        j = Q.degree
        target = None
        for g in gens:
            dg = g.degree
            if dg <= j and (j - dg) % n == 0:
                q = (j - dg) // n
                while len(powers) <= q:
                    powers.append(powers[-1] * P)
                target = powers[q] * g
                break
        if target is None:
            return Q
        alpha = f.div(Q.lc.lc, target.lc.lc)
        if Q.lc != target.lc * alpha:
            return Q
        Q = Q - target.scale(alpha)
    return Q


def is_polynomial_in_P(P: SkewPoly, Q: SkewPoly) -> bool:
    """True iff ``Q`` is a K-linear combination of powers of ``P``."""
    if Q.is_zero():
        return True
    if P.is_constant():
        return Q.is_constant()
    if P.degree == 0:
        # leading-term elimination by y-degree inside K[y]
        if Q.degree > 0:
            return False
        p, q = P.lc, Q.lc
        f = p.field
        powers = [YPoly.const(1, f)]
        while q:
            j = q.degree
            if j % p.degree:
                return False
            while len(powers) <= j // p.degree:
                powers.append(powers[-1] * p)
            t = powers[j // p.degree]
            q = q - t * f.div(q.lc, t.lc)
        return True
    return reduce_by(P, Q, [P.ctx.one()]).is_zero()


def check_commutative(elems) -> bool:
    elems = list(elems)
    return all(not commutator(a, b) for a, b in itertools.combinations(elems, 2))


@dataclass(frozen=True)
class Classification:
    """Centralizer of a set: ``AllOfS``, ``ConstantsOnly`` or ``CentralizerOf`` a generator."""

    kind: str
    generator: SkewPoly | None = None
    report: CentralizerReport | None = None


def classify_set(elems, max_xdeg: int | None = None, ydeg_bound: int | None = None) -> Classification:
    elems = list(elems)
    nonconst = [a for a in elems if not a.is_constant()]
    if not nonconst:
        return Classification("AllOfS")
    if not check_commutative(elems):
        return Classification("ConstantsOnly")
    P = min(nonconst, key=lambda a: (a.degree, a.ydegree))
    report = None
    if max_xdeg is not None:
        report = centralizer_space(P, max_xdeg, ydeg_bound)
    return Classification("CentralizerOf", P, report)


# -- criteria --------------------------------------------------------------


def _monomial_exponents(P: SkewPoly):
    nonzero = [(i, c) for i, c in enumerate(P.coeffs) if c]
    if len(nonzero) != 1:
        return None
    j, c = nonzero[0]
    terms = [(e, v) for e, v in enumerate(c.coeffs) if v]
    if len(terms) != 1:
        return None
    return terms[0][0], j


def criteria_verdicts(P: SkewPoly, max_exp: int = 8) -> dict:
    """Integer criteria that guarantee ``C_S(P) = K[P]``, evaluated for ``P``."""
    n, rho, s = _leading_data(P)
    ctx = P.ctx
    out = {
        "n": n,
        "rho": rho,
        "s": s,
        "prime_degree": arith.criterion_prime_degree(n, s, rho),
        "small_leading": arith.criterion_small_leading(n, rho),
    }
    y, x = ctx.y(), ctx.x()
    out["y^n x^n"] = P == (y**n) * (x**n)
    out["x^n y^n"] = P == (x**n) * (y**n)
    if ctx.is_pure_power():
        out["pure_power_sigma"] = arith.criterion_pure_power_sigma(P.lc, max_exp).to_dict()
        mono = _monomial_exponents(P)
        if mono is not None and not ctx.delta_y:
            l, k = arith.monomial_generator(mono[0], mono[1], s)
            out["monomial_generator"] = {"l": l, "k": k, "generator": str(ctx.monomial(1, l, k))}
    out["guaranteed_KP"] = bool(
        out["prime_degree"]
        or out["small_leading"]
        or out["y^n x^n"]
        or out["x^n y^n"]
        or (out.get("monomial_generator") or {}).get("k") == n
    )
    return out
