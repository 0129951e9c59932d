import pickle
from fractions import Fraction as F

import pytest

from esacert.exact import (AlgebraicReal, RationalPolynomial, algebraic_refine,
                           exact_real_roots, sqrt_bounds, value_compare)

Z = RationalPolynomial.variable()
SQRT2 = lambda: AlgebraicReal(Z * Z - 2, F(1), F(2))


def test_refine_reaches_width_and_contains_sqrt2():
    x = SQRT2()
    lo, hi = algebraic_refine(x, F(1, 1000))
    assert hi - lo <= F(1, 1000)
    assert lo < F(141421357, 10 ** 8)
    assert hi > F(141421356, 10 ** 8)


def test_refinements_nest():
    x = SQRT2()
    prev = x.interval
    for w in (F(1, 10), F(1, 1000), F(1, 10 ** 9)):
        cur = x.refine(w)
        assert prev[0] <= cur[0] and cur[1] <= prev[1]
        prev = cur


def test_rational_detection_and_comparison():
    x = AlgebraicReal.from_rational(F(7, 3))
    assert x.is_rational and x.rational_value == F(7, 3)
    assert x == F(7, 3)
    assert x > 2 and x < F(5, 2)


def test_equality_through_gcd():
    a = SQRT2()
    b = AlgebraicReal.from_sqrt(2)
    assert a.equals(b)
    assert a == b
    # same defining polynomial, other root
    c = AlgebraicReal(Z * Z - 2, F(-2), F(-1))
    assert not a.equals(c)
    assert c < a


def test_compare_against_nearby_rationals():
    x = SQRT2()
    assert x > F(141421356, 10 ** 8)
    assert x < F(141421357, 10 ** 8)
    assert x != F(3, 2)


def test_quadratic_surd():
    x = AlgebraicReal.from_quadratic_surd(F(3), F(2), F(5))  # 3 + 2 sqrt(5)
    assert not x.is_rational
    lo, hi = x.refine(F(1, 10 ** 8))
    import math
    target = 3 + 2 * math.sqrt(5)
    assert lo <= F(target).limit_denominator(10 ** 9) <= hi or abs(float(x) - target) < 1e-7
    # perfect-square radicand collapses to a rational
    y = AlgebraicReal.from_quadratic_surd(F(1, 2), F(3), F(49))
    assert y.is_rational and y.rational_value == F(1, 2) + 21


def test_decimal_rendering():
    assert SQRT2().decimal(6) == "1.41421"
    assert AlgebraicReal.from_rational(F(45)).decimal(5) == "45"


def test_validation_rejects_bad_intervals():
    AlgebraicReal(Z * Z - 2, F(1), F(3))  # isolates the positive root: fine
    with pytest.raises(ValueError):
        AlgebraicReal(Z * Z - 2, F(-2), F(2))  # holds both roots
    with pytest.raises(ValueError):
        AlgebraicReal(Z * Z - 2, F(3), F(4))  # holds none
    with pytest.raises(ValueError):
        AlgebraicReal(Z * Z - 2, F(1), F(1))  # collapsed but not a root


def test_exact_real_roots_mixed():
    p = (Z - F(7, 2)) * (Z * Z - 2) * (Z + 1)
    roots = exact_real_roots(p)
    assert len(roots) == 4
    rationals = [r for r in roots if isinstance(r, F)]
    assert sorted(rationals) == [F(-1), F(7, 2)]
    algebraics = [r for r in roots if isinstance(r, AlgebraicReal)]
    assert len(algebraics) == 2
    # sorted order: -sqrt2 < -1 < sqrt2 < 7/2
    assert value_compare(roots[0], roots[1]) < 0
    assert value_compare(roots[1], roots[2]) < 0
    assert value_compare(roots[2], roots[3]) < 0


def test_sqrt_bounds():
    lo, hi = sqrt_bounds(F(2), F(1, 10 ** 6))
    assert lo * lo <= 2 <= hi * hi
    assert hi - lo <= F(1, 10 ** 6)


def test_pickle_roundtrip():
    x = SQRT2()
    x.refine(F(1, 1 << 20))
    y = pickle.loads(pickle.dumps(x))
    assert y.equals(x)
    p = pickle.loads(pickle.dumps(Z * Z - 2))
    assert p == Z * Z - 2
