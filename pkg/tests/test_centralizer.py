from fractions import Fraction

import pytest

from orecent import (
    OreContext,
    admissible_degrees,
    centralizer_space,
    check_commutative,
    classify_set,
    commutator,
    is_polynomial_in_P,
    leading_constraint,
    module_generators,
    parse_skew,
    reduce_by,
)
from orecent.centralizer import default_ydeg_bound


def monomial_centralizer(i, j, s, D, B):
    """Monomials y^l x^k in the box commuting with y^i x^j when sigma(y) = y^s, delta = 0.

    y^i x^j y^l x^k = y^(i + l s^j) x^(j+k), so commuting means i + l s^j = l + i s^k.
    """
    return sorted(
        (k, l) for k in range(D + 1) for l in range(B + 1) if i + l * s**j == l + i * s**k
    )


def as_monomials(basis):
    out = []
    for q in basis:
        terms = [(k, e) for k, c in enumerate(q.coeffs) for e, v in enumerate(c.coeffs) if v]
        assert len(terms) == 1, "expected a monomial basis for a graded instance"
        out.append(terms[0])
    return sorted(out)


class TestLeadingConstraint:
    def test_examples(self):
        assert leading_constraint(2, 3, 2, 1).k == 1 and leading_constraint(2, 3, 2, 1).admissible
        dc = leading_constraint(3, 7, 5, 3)
        assert dc.k == 7 and dc.admissible
        dc = leading_constraint(2, 1, 2, 1)
        assert dc.k == Fraction(1, 3) and not dc.admissible

    def test_multiples_of_n_always_admissible(self):
        for n in range(1, 5):
            for s in range(2, 5):
                for rho in range(0, 6):
                    for q in range(1, 4):
                        dc = leading_constraint(n, rho, s, q * n)
                        assert dc.admissible
                        assert dc.k == rho * (s ** (q * n) - 1) // (s**n - 1)

    def test_admissible_degrees(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        got = admissible_degrees(y * x**2, 8)
        assert [(d.m, d.k) for d in got] == [(2, 1), (4, 5), (6, 21), (8, 85)]
        assert [(d.m, d.k) for d in admissible_degrees(x, 3)] == [(1, 0), (2, 0), (3, 0)]
        assert [d.m for d in admissible_degrees(y**5 * x**2, 4)] == [2, 4]


class TestCentralizerSpace:
    def test_x(self, ctx_plain):
        r = centralizer_space(ctx_plain.x(), 6, 10)
        assert r.dimension == 7
        assert r.basis == [ctx_plain.x() ** k for k in range(7)]

    def test_y_x2_bounded(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        P = y * x**2
        r = centralizer_space(P, 8, 40)
        assert as_monomials(r.basis) == monomial_centralizer(1, 2, 2, 8, 40)
        # P^4 = y^85 x^8 does not fit under y-degree 40
        assert r.dimension == 4 and r.truncated_powers == [4]
        assert r.stable
        r = centralizer_space(P, 8)
        assert r.ydeg_bound == 85 + 8
        assert r.dimension == 5
        assert r.basis == [P**q for q in range(5)]

    def test_y3_x2(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        r = centralizer_space(y**3 * x**2, 4, 40)
        assert r.dimension == 5
        assert r.basis == [(y * x) ** k for k in range(5)]
        assert [str(q) for q in r.basis] == ["1", "(y)*x", "(y^3)*x^2", "(y^7)*x^3", "(y^15)*x^4"]

    @pytest.mark.parametrize("i,j", [(0, 1), (1, 1), (2, 1), (1, 2), (3, 2), (5, 2), (2, 3), (4, 3)])
    def test_monomial_oracle(self, i, j):
        s, D, B = 2, 6, 30
        ctx = OreContext.from_strings("y^2", "0")
        r = centralizer_space(ctx.monomial(1, i, j), D, B, stability_delta=0)
        assert as_monomials(r.basis) == monomial_centralizer(i, j, s, D, B)

    def test_monomial_oracle_cubic_sigma(self):
        ctx = OreContext.from_strings("y^3", "0")
        r = centralizer_space(ctx.monomial(1, 4, 2), 4, 60, stability_delta=0)
        assert as_monomials(r.basis) == monomial_centralizer(4, 2, 3, 4, 60)

    def test_basis_elements_commute_with_P(self, any_ctx, rng):
        x, y = any_ctx.x(), any_ctx.y()
        for P in (y * x, x**2 + y):
            r = centralizer_space(P, 3, 10, stability_delta=0)
            assert all(not commutator(P, q) for q in r.basis)
            assert r.sound
            assert any_ctx.one() in r.basis and P in r.basis

    def test_degenerate_P_in_R(self, ctx_delta):
        y = ctx_delta.y()
        r = centralizer_space(y**2 + y, 3, 6, stability_delta=0)
        assert r.degenerate and r.module_generators == []
        assert r.basis == [y**e for e in range(7)]

    def test_constant_P_rejected(self, ctx_plain):
        with pytest.raises(ValueError):
            centralizer_space(ctx_plain.const(3), 2, 2)

    def test_default_bound(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        assert default_ydeg_bound(x, 5) == 8
        assert default_ydeg_bound(y**3 * x**2, 4) == 15 + 8


class TestGenerators:
    def test_examples(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        assert module_generators(y**3 * x**2, 4, 40) == [ctx_plain.one(), y * x]
        assert module_generators(y * x**2, 8, 40) == [ctx_plain.one()]
        assert module_generators(x, 3) == [ctx_plain.one()]

    def test_reduce_by(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        P = y * x**2
        assert reduce_by(P, P**3, [ctx_plain.one()]).is_zero()
        P = y**3 * x**2
        gens = [ctx_plain.one(), y * x]
        Q = ctx_plain.monomial(1, 7, 3)
        assert P * (y * x) == Q
        assert reduce_by(P, Q.scale(5), gens).is_zero()
        assert reduce_by(P, ctx_plain.one(), gens).is_zero()
        # without y*x the degree-1 part cannot be reduced
        assert reduce_by(P, Q, [ctx_plain.one()]) == Q

    def test_every_basis_element_reduces(self, ctx_delta):
        x, y = ctx_delta.x(), ctx_delta.y()
        P = y * x**2 + x
        r = centralizer_space(P, 6, 20, stability_delta=0)
        assert all(reduce_by(P, q, r.module_generators).is_zero() for q in r.basis)
        degrees = [g.degree % P.degree for g in r.module_generators]
        assert len(set(degrees)) == len(degrees) <= P.degree

    def test_is_polynomial_in_P(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        P = y**3 * x**2
        assert is_polynomial_in_P(P, P * P * 3 - P + 2)
        assert not is_polynomial_in_P(P, y * x)
        assert is_polynomial_in_P(P, ctx_plain.zero())
        assert not is_polynomial_in_P(P, y * x**2)
        Py = y**2 + 1
        assert is_polynomial_in_P(Py, Py * Py + Py)
        assert not is_polynomial_in_P(Py, y)


class TestCommutativity:
    def test_check_commutative(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        P = y * x**2 + x
        assert check_commutative([ctx_plain.one(), P, P * P])
        assert not check_commutative([x, y])
        assert check_commutative([])

    def test_classify(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        assert classify_set([ctx_plain.const(2), ctx_plain.const(5)]).kind == "AllOfS"
        assert classify_set([x, y]).kind == "ConstantsOnly"
        P = y * x**2
        c = classify_set([P, P * P])
        assert c.kind == "CentralizerOf" and c.generator == P
        c = classify_set([P * P, P], max_xdeg=4)
        assert c.report.basis == [P**0, P, P * P]
        assert classify_set([]).kind == "AllOfS"


def test_leading_space_and_constants(any_ctx):
    x, y = any_ctx.x(), any_ctx.y()
    for P in (x, y * x, x**2 + y * x):
        r = centralizer_space(P, 3, 8, stability_delta=0)
        assert r.leading_space_ok, r.leading_dims
        assert r.constants_only_in_degree_zero
        assert r.rank_bound_ok
        assert r.commutative


def test_criteria_attached(ctx_plain):
    x, y = ctx_plain.x(), ctx_plain.y()
    crit = centralizer_space(y**3 * x**2, 2, 10, stability_delta=0).criteria
    assert crit["n"] == 2 and crit["rho"] == 3 and crit["s"] == 2
    assert not crit["prime_degree"] and not crit["guaranteed_KP"]
    assert crit["monomial_generator"] == {"l": 1, "k": 1, "generator": "(y)*x"}
    crit = centralizer_space(y**2 * x**2, 2, 10, stability_delta=0).criteria
    assert crit["y^n x^n"] and crit["guaranteed_KP"]


def test_stability_flag(ctx_plain):
    x, y = ctx_plain.x(), ctx_plain.y()
    # P^2 = y^5 x^4 lies just above the bound and enters at B + 5
    r = centralizer_space(y * x**2, 4, 4)
    assert not r.stable and r.dimension == 2 and r.dimension_extended == 3
    assert r.notes
