"""Exact arithmetic in Ore extensions K[y][x; sigma, delta] with deg sigma(y) > 1,
and bounded computation of centralizers of their elements."""

from .arith import (
    NoViolationUpTo,
    ViolationFound,
    criterion_prime_degree,
    criterion_pure_power_sigma,
    criterion_small_leading,
    monomial_generator,
    repunit,
    repunit_gcd,
)
from .centralizer import (
    CentralizerReport,
    Classification,
    DegreeConstraint,
    admissible_degrees,
    centralizer_space,
    check_commutative,
    classify_set,
    is_polynomial_in_P,
    leading_constraint,
    module_generators,
    reduce_by,
)
from .field import QQ, Field
from .linalg import ExactMatrix, nullspace, rref
from .ore import (
    OreContext,
    SkewPoly,
    commutator,
    delta_apply,
    sigma_apply,
    sigma_iter,
    skew_mul,
    skew_pow,
)
from .parse import ParseError, format_skew, format_ypoly, parse_skew, parse_ypoly
from .ypoly import NEG_INF, YPoly, poly_compose, poly_divrem, poly_gcd, poly_mul

__version__ = "0.1.0"
