import pytest

from orecent import (
    Field,
    OreContext,
    SkewPoly,
    YPoly,
    commutator,
    delta_apply,
    parse_skew,
    parse_ypoly,
    sigma_apply,
    sigma_iter,
    skew_mul,
    skew_pow,
)


def yp(text, ctx):
    return parse_ypoly(text, ctx.field)


def sk(text, ctx):
    return parse_skew(text, ctx)


def act(A, f):
    """A acting on R with x acting as delta: a left S-module structure on K[y]."""
    ctx = A.ctx
    out = YPoly.zero(ctx.field)
    g = f
    for a in A.coeffs:
        out = out + a * g
        g = ctx.delta(g)
    return out


def twisted_product(A, B):
    """A*B when delta = 0: sum a_i sigma^i(b_j) x^(i+j)."""
    ctx = A.ctx
    acc = ctx.zero()
    for i, a in enumerate(A.coeffs):
        for j, b in enumerate(B.coeffs):
            acc = acc + ctx.lift(a * ctx.sigma_iter(b, i)) * SkewPoly(ctx, [0] * (i + j) + [1])
    return acc


class TestContext:
    def test_rejects_degree_one_sigma(self):
        with pytest.raises(ValueError, match="standing assumption"):
            OreContext.from_strings("y", "1")
        with pytest.raises(ValueError):
            OreContext.from_strings("3", "0")

    def test_s_and_pure_power(self, ctx_plain):
        assert ctx_plain.s == 2 and ctx_plain.is_pure_power()
        assert not OreContext.from_strings("y^2 + 1").is_pure_power()
        assert not OreContext.from_strings("2*y^2").is_pure_power()


class TestSigmaDelta:
    def test_sigma_examples(self, ctx_plain):
        assert sigma_apply(ctx_plain, yp("y^3", ctx_plain)) == yp("y^6", ctx_plain)
        assert sigma_apply(ctx_plain, yp("5/3", ctx_plain)) == yp("5/3", ctx_plain)
        c = OreContext.from_strings("y^2 + 1")
        # (y^2+1)^2 + (y^2+1) = y^4 + 3y^2 + 2
        assert sigma_apply(c, yp("y^2 + y", c)) == yp("y^4 + 3*y^2 + 2", c)

    def test_sigma_iter_examples(self, ctx_plain):
        p = yp("y^3 - y", ctx_plain)
        assert sigma_iter(ctx_plain, p, 0) == p
        assert sigma_iter(ctx_plain, yp("y", ctx_plain), 3) == yp("y^8", ctx_plain)
        assert sigma_iter(ctx_plain, yp("y + 1", ctx_plain), 2) == yp("y^4 + 1", ctx_plain)

    def test_delta_examples(self, ctx_delta):
        assert delta_apply(ctx_delta, yp("7", ctx_delta)).is_zero()
        assert delta_apply(ctx_delta, yp("y", ctx_delta)) == ctx_delta.delta_y
        # delta(y^2) = sigma(y) delta(y) + delta(y) y = y^2 + y
        assert delta_apply(ctx_delta, yp("y^2", ctx_delta)) == yp("y^2 + y", ctx_delta)

    def test_sigma_degree(self, any_ctx, rng):
        for _ in range(50):
            p = YPoly.random(rng, any_ctx.field, 4)
            if p.degree >= 1:
                assert any_ctx.sigma(p).degree == p.degree * any_ctx.s

    def test_sigma_is_ring_map(self, any_ctx, rng):
        for _ in range(100):
            a, b = YPoly.random(rng, any_ctx.field, 3), YPoly.random(rng, any_ctx.field, 3)
            assert any_ctx.sigma(a * b) == any_ctx.sigma(a) * any_ctx.sigma(b)
            assert any_ctx.sigma(a + b) == any_ctx.sigma(a) + any_ctx.sigma(b)

    def test_leibniz(self, any_ctx, rng):
        for _ in range(500):
            a, b = YPoly.random(rng, any_ctx.field, 3), YPoly.random(rng, any_ctx.field, 3)
            d = any_ctx.delta
            assert d(a * b) == any_ctx.sigma(a) * d(b) + d(a) * b


class TestProducts:
    def test_defining_relation_example(self, ctx_delta):
        x, y = ctx_delta.x(), ctx_delta.y()
        assert skew_mul(x, y) == sk("(y^2)*x + 1", ctx_delta)

    def test_unit(self, any_ctx, rng):
        A = any_ctx.random(rng)
        assert A * any_ctx.one() == A == any_ctx.one() * A

    def test_iterated_relation(self, ctx_plain):
        x, y = ctx_plain.x(), ctx_plain.y()
        assert (x**2) * (y * x) == ctx_plain.monomial(1, 4, 3)

    def test_defining_relation_random(self, any_ctx, rng):
        x = any_ctx.x()
        for _ in range(500):
            r = YPoly.random(rng, any_ctx.field, 4)
            assert x * any_ctx.lift(r) == any_ctx.lift(any_ctx.sigma(r)) * x + any_ctx.lift(any_ctx.delta(r))

    def test_associative_distributive(self, any_ctx, rng):
        # sigma^6 of a cubic already has y-degree 2187, keep s = 3 products small
        max_x = 3 if any_ctx.s == 2 else 1
        for _ in range(60):
            A, B, C = (any_ctx.random(rng, max_x, 3, 5) for _ in range(3))
            assert (A * B) * C == A * (B * C)
            assert A * (B + C) == A * B + A * C
            assert (A + B) * C == A * C + B * C

    def test_degree_and_leading_coefficient(self, any_ctx, rng):
        for _ in range(100):
            A, B = any_ctx.random(rng), any_ctx.random(rng)
            if not A or not B:
                continue
            AB = A * B
            assert AB.degree == A.degree + B.degree
            assert AB.lc == A.lc * any_ctx.sigma_iter(B.lc, A.degree)

    def test_module_action_oracle(self, any_ctx, rng):
        # x -> delta makes K[y] a left module, so products must act as compositions
        if not any_ctx.delta_y:
            pytest.skip("action is trivial when delta = 0")
        for _ in range(40):
            A, B = any_ctx.random(rng, 2, 2, 5), any_ctx.random(rng, 2, 2, 5)
            f = YPoly.random(rng, any_ctx.field, 3)
            assert act(A * B, f) == act(A, act(B, f))

    @pytest.mark.parametrize("sigma", ["y^2", "y^3 + 2*y", "y^2 - y + 1"])
    def test_delta_zero_closed_form(self, sigma, rng):
        ctx = OreContext.from_strings(sigma, "0")
        for _ in range(40):
            A, B = ctx.random(rng, 3, 2, 5), ctx.random(rng, 3, 2, 5)
            assert A * B == twisted_product(A, B)

    def test_monomial_closed_form(self, rng):
        for s in (2, 3):
            ctx = OreContext.from_strings(f"y^{s}", "0")
            for _ in range(50):
                a, b, c, d = (rng.randint(0, 4) for _ in range(4))
                prod = ctx.monomial(1, a, b) * ctx.monomial(1, c, d)
                assert prod == ctx.monomial(1, a + c * s**b, b + d)


class TestPowAndCommutator:
    def test_pow(self, ctx_plain, rng):
        A = ctx_plain.random(rng)
        assert skew_pow(A, 0) == ctx_plain.one()
        assert skew_pow(A, 1) == A
        yx = ctx_plain.y() * ctx_plain.x()
        assert skew_pow(yx, 2) == ctx_plain.monomial(1, 3, 2)
        assert skew_pow(yx, 3) == yx * yx * yx

    def test_pow_degree(self, any_ctx, rng):
        for _ in range(10):
            A = any_ctx.random(rng, 2, 2)
            if A:
                assert skew_pow(A, 3).degree == 3 * A.degree
        with pytest.raises(ValueError):
            skew_pow(any_ctx.x(), -1)

    def test_commutator_examples(self, ctx_plain, ctx_delta, rng):
        A = ctx_delta.random(rng)
        assert commutator(A, A).is_zero()
        assert commutator(ctx_delta.x(), ctx_delta.y()) == sk("(y^2 - y)*x + 1", ctx_delta)
        yx = ctx_plain.y() * ctx_plain.x()
        P = ctx_plain.monomial(1, 3, 2)
        assert yx * P == ctx_plain.monomial(1, 7, 3) == P * yx
        assert commutator(yx, P).is_zero()


def test_mixing_contexts_rejected(ctx_plain, ctx_delta):
    with pytest.raises(ValueError):
        ctx_plain.x() * ctx_delta.x()
    with pytest.raises(ValueError):
        SkewPoly(ctx_plain, [YPoly.gen(Field(5))])
