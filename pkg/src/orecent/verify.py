"""Named, seedable verification suites (``orecent verify --suite NAME``).

Each suite returns a list of :class:`Check` results; a suite passes when
every check passes.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import arith
from .centralizer import (
    centralizer_space,
    check_commutative,
    classify_set,
    is_polynomial_in_P,
)
from .field import Field
from .ore import OreContext, commutator
from .parse import format_skew, parse_skew
from .ypoly import YPoly

F10007 = Field(10007)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _contexts():
    return [
        OreContext.from_strings("y^2", "1"),
        OreContext.from_strings("y^2 + y", "y", "fp:10007"),
        OreContext.from_strings("y^3 - 2*y + 1/2", "y^2 - 3"),
    ]


def suite_ore_relation(seed: int = 0, count: int = 1000) -> list[Check]:
    """``x r = sigma(r) x + delta(r)`` and the Leibniz rule on random data."""
    rng = random.Random(seed)
    checks = []
    for ctx in (OreContext.from_strings("y^2 + 1", "y - 1"), OreContext.from_strings("y^2 + 3*y", "2", "fp:10007")):
        x = ctx.x()
        rel = leib = 0
        for _ in range(count):
            r = YPoly.random(rng, ctx.field, 4)
            a = YPoly.random(rng, ctx.field, 3)
            b = YPoly.random(rng, ctx.field, 3)
            rel += x * ctx.lift(r) == ctx.lift(ctx.sigma(r)) * x + ctx.lift(ctx.delta(r))
            leib += ctx.delta(a * b) == ctx.sigma(a) * ctx.delta(b) + ctx.delta(a) * b
        checks.append(Check(f"relation {ctx.field.name}", rel == count, f"{rel}/{count}"))
        checks.append(Check(f"leibniz {ctx.field.name}", leib == count, f"{leib}/{count}"))
    return checks


def suite_ring_laws(seed: int = 0, triples: int = 300, pairs: int = 500) -> list[Check]:
    """Associativity, distributivity and degree additivity in S."""
    rng = random.Random(seed)
    checks = []
    for ctx in (OreContext.from_strings("y^2", "1"), OreContext.from_strings("y^2 + y", "y", "fp:10007")):
        assoc = dist = deg = 0
        for _ in range(triples):
            A, B, C = (ctx.random(rng, 3, 3, 5) for _ in range(3))
            assoc += (A * B) * C == A * (B * C)
            dist += A * (B + C) == A * B + A * C and (A + B) * C == A * C + B * C
        n = 0
        while n < pairs:
            A, B = ctx.random(rng, 3, 3, 5), ctx.random(rng, 3, 3, 5)
            if not A or not B:
                continue
            n += 1
            deg += (A * B).degree == A.degree + B.degree
        name = ctx.field.name
        checks += [
            Check(f"associativity {name}", assoc == triples, f"{assoc}/{triples}"),
            Check(f"distributivity {name}", dist == triples, f"{dist}/{triples}"),
            Check(f"degree additivity {name}", deg == pairs, f"{deg}/{pairs}"),
        ]
    return checks


def suite_repunit_gcd(seed: int = 0) -> list[Check]:
    """Exhaustive gcd law for repunits, 2 <= s <= 10, 1 <= m, n <= 40."""
    total = law = coprime = 0
    for s in range(2, 11):
        for m in range(1, 41):
            rm = arith.repunit(s, m)
            for n in range(1, 41):
                g = math.gcd(rm, arith.repunit(s, n))
                total += 1
                law += arith.repunit_gcd(s, m, n) == g
                coprime += (g == 1) == (math.gcd(m, n) == 1)
    return [
        Check("gcd law", law == total, f"{law}/{total}"),
        Check("gcd is 1 iff gcd(m, n) is 1", coprime == total, f"{coprime}/{total}"),
    ]


def lemma_instances():
    """(label, P, max_xdeg, ydeg_bound) covering monomial and delta != 0 cases."""
    c0 = OreContext.from_strings("y^2", "0")
    c1 = OreContext.from_strings("y^2", "1")
    x, y = c0.x(), c0.y()
    return [
        ("x", x, 6, 10),
        ("y*x^2", y * x**2, 8, 40),
        ("y^3*x^2", y**3 * x**2, 4, 40),
        ("y^5*x^2", y**5 * x**2, 6, None),
        ("y*x (delta=1)", c1.y() * c1.x(), 4, None),
        ("x^2 + y (delta=1)", c1.x() ** 2 + c1.y(), 4, 12),
    ]


def suite_lemma_onedim(seed: int = 0) -> list[Check]:
    """Leading coefficients one-dimensional per degree; degree-0 solutions constant."""
    checks = []
    for label, P, D, B in lemma_instances():
        r = centralizer_space(P, D, B)
        checks.append(Check(f"{label}: leading space <= 1 per degree", r.leading_space_ok, str(r.leading_dims)))
        checks.append(Check(f"{label}: degree-0 solutions constant", r.constants_only_in_degree_zero))
    return checks


def suite_rank_bound(seed: int = 0) -> list[Check]:
    """Module generator count at most deg P; generators of y^3*x^2."""
    checks = []
    for label, P, D, B in lemma_instances():
        r = centralizer_space(P, D, B, stability_delta=0)
        checks.append(Check(f"{label}: generators <= deg P", r.generator_count <= P.degree, str(r.generator_count)))
    c0 = OreContext.from_strings("y^2", "0")
    x, y = c0.x(), c0.y()
    P = y**3 * x**2
    gens = centralizer_space(P, 4, 40).module_generators
    checks.append(Check("y^3*x^2 generators are {1, y*x}", gens == [c0.one(), y * x], str([str(g) for g in gens])))
    checks.append(Check("(y*x)^2 == y^3*x^2", (y * x) ** 2 == P))
    return checks


def suite_commutativity(seed: int = 0) -> list[Check]:
    """Solved bases commute; centralizers of sets classified."""
    checks = []
    for label, P, D, B in lemma_instances():
        r = centralizer_space(P, D, B, stability_delta=0)
        checks.append(Check(f"{label}: basis commutes", check_commutative(r.basis)))
    c0 = OreContext.from_strings("y^2", "0")
    x, y = c0.x(), c0.y()
    P = y * x**2
    checks.append(Check("classify {x, y}", classify_set([x, y]).kind == "ConstantsOnly"))
    checks.append(Check("classify {2}", classify_set([c0.const(2)]).kind == "AllOfS"))
    cls = classify_set([P, P * P])
    checks.append(Check("classify {P, P^2}", cls.kind == "CentralizerOf" and cls.generator == P))
    return checks


def suite_singly_generated(seed: int = 0) -> list[Check]:
    """Centralizers equal to K[P]: y*x^2, monomial generators, y^n x^n and x^n y^n."""
    checks = []
    c0 = OreContext.from_strings("y^2", "0")
    x, y = c0.x(), c0.y()
    P = y * x**2
    r = centralizer_space(P, 8)
    checks.append(Check("y*x^2: all powers up to P^4 found", r.dimension == 5, f"dim {r.dimension} at B={r.ydeg_bound}"))
    checks.append(Check("y*x^2: basis inside K[P]", all(is_polynomial_in_P(P, q) for q in r.basis)))
    for (i, j, s), want in {(1, 2, 2): (1, 2), (3, 2, 2): (1, 1), (0, 1, 2): (0, 1)}.items():
        got = arith.monomial_generator(i, j, s)
        ctx = OreContext.from_strings(f"y^{s}", "0")
        gen = ctx.monomial(1, got[0], got[1])
        ok = got == want and not commutator(gen, ctx.monomial(1, i, j))
        checks.append(Check(f"monomial_generator({i},{j},{s})", ok, str(got)))
    for ctx in (c0, OreContext.from_strings("y^2 + y", "1")):
        cx, cy = ctx.x(), ctx.y()
        for n in (1, 2):
            for label, P in ((f"y^{n} x^{n}", cy**n * cx**n), (f"x^{n} y^{n}", cx**n * cy**n)):
                r = centralizer_space(P, 2 * n, stability_delta=0)
                ok = all(is_polynomial_in_P(P, q) for q in r.basis) and r.dimension == 3
                checks.append(Check(f"{label} [sigma(y)={ctx.sigma_y}, delta(y)={ctx.delta_y}] in K[P]", ok, f"dim {r.dimension}"))
    return checks


def suite_criteria_consistency(seed: int = 0) -> list[Check]:
    """Prime-degree criterion agrees with the bounded solver."""
    c0 = OreContext.from_strings("y^2", "0")
    x, y = c0.x(), c0.y()
    P3 = y**3 * x**2
    r3 = centralizer_space(P3, 4, 40, stability_delta=0)
    P5 = y**5 * x**2
    r5 = centralizer_space(P5, 6, stability_delta=0)
    return [
        Check("prime_degree(2,2,3) is false", not arith.criterion_prime_degree(2, 2, 3)),
        Check("y^3*x^2 centralizer exceeds K[P]", not is_polynomial_in_P(P3, y * x) and (y * x) in r3.basis),
        Check("prime_degree(2,2,5) is true", arith.criterion_prime_degree(2, 2, 5)),
        Check("y^5*x^2 centralizer inside K[P]", all(is_polynomial_in_P(P5, q) for q in r5.basis)),
    ]


def suite_pure_power(seed: int = 0) -> list[Check]:
    """Root-power hypothesis search and its conclusion on (y-2)*x^2."""
    Y = YPoly.gen()
    v1 = arith.criterion_pure_power_sigma((Y - 2) * (Y - 4), 3)
    v2 = arith.criterion_pure_power_sigma(Y - 2, 6)
    c0 = OreContext.from_strings("y^2", "0")
    P = (c0.y() - 2) * c0.x() ** 2
    r = centralizer_space(P, 6, stability_delta=0)
    return [
        Check("(y-2)(y-4): violation a=2, i=1, j=2", v1 == arith.ViolationFound(2, 1, 2), str(v1)),
        Check("y-2: no violation", isinstance(v2, arith.NoViolationUpTo), str(v2)),
        Check("(y-2)*x^2 centralizer inside K[P]", all(is_polynomial_in_P(P, q) for q in r.basis), f"dim {r.dimension}"),
    ]


def suite_frontend(seed: int = 0, count: int = 200) -> list[Check]:
    """Parser round trip and normalization of x*y."""
    rng = random.Random(seed)
    checks = []
    for ctx in _contexts():
        ok = 0
        for _ in range(count):
            P = ctx.random(rng, 3, 4, 7)
            ok += parse_skew(format_skew(P), ctx) == P
        checks.append(Check(f"round trip {ctx!r}", ok == count, f"{ok}/{count}"))
    ctx = OreContext.from_strings("y^2", "1")
    text = format_skew(parse_skew("x*y", ctx))
    checks.append(Check("x*y normalizes", text == "(y^2)*x + 1", text))
    return checks


SUITES = {
    "ore-relation": suite_ore_relation,
    "ring-laws": suite_ring_laws,
    "repunit-gcd": suite_repunit_gcd,
    "lemma-onedim": suite_lemma_onedim,
    "rank-bound": suite_rank_bound,
    "commutativity": suite_commutativity,
    "singly-generated": suite_singly_generated,
    "criteria-consistency": suite_criteria_consistency,
    "pure-power": suite_pure_power,
    "frontend": suite_frontend,
}


def run_suite(name: str, seed: int = 0) -> list[Check]:
    try:
        fn = SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(SUITES)}") from None
    return fn(seed)
