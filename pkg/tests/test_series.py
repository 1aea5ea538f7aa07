import math

import pytest

from eulerchow.monoid import GradedMonoid, MonoidMismatchError, MonoidMorphism
from eulerchow.series import (POLY_ONE, FormalSeries, IntPolynomial,
                              RationalSeries, TruncationError, convolve,
                              delta, dumps, equals_up_to,
                              evaluate_polynomial_coefficients, exterior,
                              first_difference, loads, one, pullback,
                              pullback_bound, pushforward, pushforward_bound,
                              zero)

T = GradedMonoid.free(["t"])
XY = GradedMonoid.free(["x", "y"])


def geometric(monoid, bound):
    """All-ones series: 1/(1-t) in each variable jointly (for T: 1/(1-t))."""
    return FormalSeries(monoid, bound,
                        {m: 1 for m in monoid.enumerate_up_to(bound)})


# ---------------------------------------------------------------------------
# IntPolynomial

def test_polynomial_arithmetic():
    p = IntPolynomial((1, 2))      # 1 + 2u
    q = IntPolynomial((0, 1))      # u
    assert (p + q).coeffs == (1, 3)
    assert (p * q).coeffs == (0, 1, 2)
    assert (p - p).coeffs == ()
    assert p.evaluate(-1) == -1
    assert not IntPolynomial((0, 0))


def test_polynomial_strips_trailing_zeros():
    assert IntPolynomial((1, 0, 0)).coeffs == (1,)


def test_polynomial_rejects_int_operands():
    with pytest.raises(TypeError):
        IntPolynomial((1,)) + 1


# ---------------------------------------------------------------------------
# FormalSeries basics

def test_zero_coefficients_dropped():
    f = FormalSeries(T, 3, {(1,): 0, (2,): 5})
    assert f.coefficients == {(2,): 5}
    assert f.coefficient((1,)) == 0


def test_coefficient_beyond_bound_raises():
    f = one(T, 3)
    with pytest.raises(TruncationError):
        f.coefficient((4,))


def test_constructor_rejects_terms_beyond_bound():
    with pytest.raises(TruncationError):
        FormalSeries(T, 2, {(3,): 1})


def test_restrict_cannot_extend():
    f = one(T, 3)
    assert f.restrict(1).bound == 1
    with pytest.raises(TruncationError):
        f.restrict(4)


def test_addition_takes_min_bound():
    f = FormalSeries(T, 5, {(1,): 2})
    g = FormalSeries(T, 3, {(1,): 3, (2,): 1})
    h = f + g
    assert h.bound == 3
    assert h.coefficient((1,)) == 5


def test_addition_requires_same_monoid():
    with pytest.raises(MonoidMismatchError):
        one(T, 3) + one(XY, 3)


def test_kind_detection_and_mixing():
    f = FormalSeries(T, 2, {(1,): 1})
    g = FormalSeries(T, 2, {(1,): POLY_ONE})
    assert f.kind == "int" and g.kind == "poly"
    assert zero(T, 2).kind is None
    with pytest.raises(TypeError):
        f + g
    with pytest.raises(TypeError):
        convolve(f, g)


def test_scale_and_negate():
    f = FormalSeries(T, 2, {(1,): 3})
    assert f.scale(2).coefficient((1,)) == 6
    assert (-f).coefficient((1,)) == -3
    assert (f - f).coefficients == {}


# ---------------------------------------------------------------------------
# Convolution

def test_convolve_geometric_squares():
    # (1/(1-t))^2 has coefficients d+1
    f = geometric(T, 8)
    sq = convolve(f, f)
    for d in range(9):
        assert sq.coefficient((d,)) == d + 1


def test_convolve_bound_is_min():
    assert convolve(one(T, 5), one(T, 3)).bound == 3


def test_convolve_delta_shifts():
    f = FormalSeries(T, 4, {(1,): 2, (3,): 5})
    g = convolve(f, FormalSeries(T, 4, {(1,): 1}))
    assert g.coefficients == {(2,): 2, (4,): 5}


def test_delta_bound_is_grade():
    d = delta(XY, (1, 2), 7)
    assert d.bound == 3 and d.coefficient((1, 2)) == 7


# ---------------------------------------------------------------------------
# Exterior product

def test_exterior_concatenates_exponents():
    f = FormalSeries(T, 4, {(1,): 2})
    g = FormalSeries(GradedMonoid.free(["s"]), 4, {(2,): 3})
    h, prod = exterior(f, g)
    assert prod.labels == ("t", "s")
    assert h.coefficients == {(1, 2): 6}
    assert h.bound == 4


def test_exterior_drops_terms_beyond_joint_bound():
    f = FormalSeries(T, 3, {(2,): 1})
    g = FormalSeries(GradedMonoid.free(["s"]), 3, {(2,): 1})
    h, _ = exterior(f, g)
    assert h.coefficients == {}  # joint grade 4 > bound 3


# ---------------------------------------------------------------------------
# Push-forward / pull-back

def test_pushforward_sums_fibers():
    phi = MonoidMorphism(XY, T, ((1,), (1,)))
    f = FormalSeries(XY, 3, {(1, 0): 2, (0, 1): 3, (2, 1): 1})
    g = pushforward(phi, f)
    assert g.bound == 3
    assert g.coefficients == {(1,): 5, (3,): 1}


def test_pushforward_bound_scales_with_image_grade():
    # generator of weight 1 mapping to grade-2 image doubles the bound
    phi = MonoidMorphism(T, XY, ((1, 1),))
    assert pushforward_bound(phi, 5) == 10
    f = geometric(T, 5)
    assert pushforward(phi, f).bound == 10


def test_pushforward_requires_finite_fibers():
    phi = MonoidMorphism(XY, T, ((1,), (0,)))
    with pytest.raises(ValueError):
        pushforward(phi, one(XY, 2))


def test_pullback_precomposes():
    phi = MonoidMorphism(T, XY, ((1, 1),))
    g = FormalSeries(XY, 6, {(2, 2): 7, (1, 0): 4})
    f = pullback(phi, g)
    assert f.bound == 3  # 6 * min(1/2)
    assert f.coefficients == {(2,): 7}


def test_pullback_bound_contracts():
    phi = MonoidMorphism(T, XY, ((2, 1),))
    assert pullback_bound(phi, 10) == 3  # floor(10 * 1/3)


def test_push_pull_adjoint_on_monomials():
    # coefficient of pushforward at n equals sum of pullback-matched terms
    phi = MonoidMorphism(XY, T, ((1,), (2,)))
    f = FormalSeries(XY, 4, {(2, 1): 5, (0, 2): 1})
    g = pushforward(phi, f)
    assert g.coefficient((4,)) == 6


# ---------------------------------------------------------------------------
# Comparison helpers

def test_equals_up_to_and_first_difference():
    f = geometric(T, 6)
    g = f + FormalSeries(T, 6, {(5,): 1})
    assert equals_up_to(f, g, 4)
    assert not equals_up_to(f, g, 5)
    assert first_difference(f, g, 6) == ((5,), 1, 2)
    with pytest.raises(TruncationError):
        equals_up_to(f, g, 7)


# ---------------------------------------------------------------------------
# Polynomial coefficients

def test_evaluate_polynomial_coefficients():
    f = FormalSeries(T, 2, {(1,): IntPolynomial((1, 1))})  # 1 + u
    g = evaluate_polynomial_coefficients(f, -1)
    assert g.coefficients == {}  # (1 + u)(-1) = 0
    with pytest.raises(TypeError):
        evaluate_polynomial_coefficients(one(T, 2), -1)


# ---------------------------------------------------------------------------
# Rational series

def test_rational_expand_single_factor():
    r = RationalSeries(T, ((T.zero(), 1),), (((1,), 3),))
    f = r.expand(6)
    for d in range(7):
        assert f.coefficient((d,)) == math.comb(d + 2, 2)


def test_rational_numerator_and_multiply():
    # (1+t)/(1-t) = 1 + 2t + 2t^2 + ...
    r = RationalSeries(T, (((0,), 1), ((1,), 1)), (((1,), 1),))
    f = r.expand(5)
    assert [f.coefficient((d,)) for d in range(4)] == [1, 2, 2, 2]
    sq = r.multiply(r)
    g = sq.expand(5)
    # (1+t)^2/(1-t)^2 = 1 + 4t + 8t^2 + 12t^3 + ...
    assert [g.coefficient((d,)) for d in range(4)] == [1, 4, 8, 12]


def test_rational_rejects_grade_zero_denominator():
    m = GradedMonoid.free(["a", "b"])
    with pytest.raises(ValueError):
        RationalSeries(m, ((m.zero(), 1),), (((0, 0), 1),))


def test_rational_merges_repeated_factors():
    r = RationalSeries(T, ((T.zero(), 1),), (((1,), 1), ((1,), 2)))
    assert r.denominator == (((1,), 3),)


# ---------------------------------------------------------------------------
# Serialization

def test_series_json_round_trip():
    f = FormalSeries(XY, 4, {(1, 2): 3, (0, 0): 10 ** 40})
    assert loads(dumps(f)) == f


def test_poly_series_json_round_trip():
    f = FormalSeries(T, 3, {(2,): IntPolynomial((1, 0, -2))})
    assert loads(dumps(f)) == f


def test_rational_json_round_trip():
    r = RationalSeries(XY, (((0, 0), 1), ((1, 1), -1)),
                       (((1, 0), 3), ((0, 1), 3)))
    assert loads(dumps(r)) == r


def test_dumps_is_byte_deterministic():
    def build():
        return FormalSeries(XY, 3, {(2, 1): 4, (1, 0): -1, (0, 0): 1})
    assert dumps(build()) == dumps(build())
    assert dumps(build()).endswith("\n")
