from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import count_lattice
from singclass.exactmath import (
    ExactScalar,
    InexactDivisionError,
    PolyParseError,
    RingMismatchError,
    SeriesSpec,
    SparsePoly,
    parse_poly,
    poly_arith,
    poly_gcd,
    series_coeffs,
)

s = SparsePoly.var("s")
r3 = ExactScalar.sqrt(3)


# scalars


def test_rationals_reduce():
    x = ExactScalar(Fraction(6, -4))
    assert x.a == Fraction(-3, 2)
    assert x.a.denominator == 2


def test_quadratic_arithmetic():
    x = ExactScalar(1, 2, 3)
    assert x * x == ExactScalar(13, 4, 3)
    assert x * x.inverse() == 1
    assert r3 * r3 == 3
    assert (r3 ** 2).is_rational


def test_sqrt_pulls_squares():
    assert ExactScalar.sqrt(12) == 2 * r3
    assert ExactScalar.sqrt(16) == 4


def test_radicand_mixing_rejected():
    with pytest.raises(RingMismatchError):
        _ = r3 + ExactScalar.sqrt(5)
    with pytest.raises(ValueError):
        ExactScalar(0, 1, 12)


def test_scalar_immutable():
    with pytest.raises(AttributeError):
        r3.a = 5


# polynomial arithmetic


def test_difference_of_squares():
    assert str(poly_arith("mul", s + 1, s - 1)) == "s^2 - 1"


def test_dihedral_binomial():
    assert (s ** 5 + 1) ** 2 - (s ** 5 - 1) ** 2 == 4 * s ** 5


def test_tetrahedral_difference_of_cubes():
    lhs = (1 + (s ** 2).scale(2 * r3) - s ** 4) ** 3 - (1 - (s ** 2).scale(2 * r3) - s ** 4) ** 3
    assert lhs == (s * (1 + s ** 4)) ** 2 * (12 * r3)


def test_exact_div():
    x, y = SparsePoly.var("x", "xy"), SparsePoly.var("y", "xy")
    a = x ** 2 * y - y ** 3 + x
    b = x - y + 3
    assert poly_arith("exact_div", a * b, b) == a
    with pytest.raises(InexactDivisionError):
        (a * b + 1).exact_div(b)


def test_variable_mismatch():
    with pytest.raises(RingMismatchError):
        _ = s + SparsePoly.var("t")


def test_canonical_form_drops_zeros():
    p = SparsePoly(("s",), {(1,): 2, (0,): 0})
    assert len(p) == 1
    assert (s - s).is_zero
    assert (s - s) == SparsePoly.zero()


def test_weighted_degree():
    x = SparsePoly.var("x", "xyz")
    y = SparsePoly.var("y", "xyz")
    z = SparsePoly.var("z", "xyz")
    f = x ** 2 + y ** 3 + z ** 7
    assert f.weighted_degree((21, 14, 6)) == 42
    assert f.degree() == 7


def test_render_graded_lex():
    x, y = SparsePoly.var("x", "xy"), SparsePoly.var("y", "xy")
    assert str(3 * y ** 2 - x * y + x ** 2 - 7) == "x^2 - x*y + 3*y^2 - 7"
    assert str((s ** 2).scale(12 * r3) - 1) == "12*sqrt(3)*s^2 - 1"
    assert str(SparsePoly.constant(ExactScalar(1, -2, 3))) == "(1-2*sqrt(3))"


polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)),
    st.integers(-5, 5),
    max_size=5,
).map(lambda t: SparsePoly(("x", "y"), t))


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert all(coeff for _, coeff in (a * b - c).items())


@settings(max_examples=40, deadline=None)
@given(polys)
def test_render_parse_roundtrip(a):
    assert parse_poly(str(a), ("x", "y")) == a


# gcd


def test_gcd_examples():
    assert poly_gcd(s ** 2 - 1, s - 1) == s - 1
    f = 2 * s ** 3 - 4 * s
    assert poly_gcd(f, f) == f.scale(Fraction(1, 2))
    assert poly_gcd(SparsePoly.zero(), SparsePoly.zero()).is_zero


def test_gcd_icosahedral_forms_coprime():
    phi12 = s * (1 - 11 * s ** 5 - s ** 10)
    phi20 = 1 + 228 * s ** 5 + 494 * s ** 10 - 228 * s ** 15 + s ** 20
    assert poly_gcd(phi12, phi20) == 1


def test_gcd_rejects_multivariate():
    x = SparsePoly.var("x", "xy")
    with pytest.raises(ValueError):
        poly_gcd(x, x)


def test_gcd_over_quadratic_field():
    a = s - r3
    assert poly_gcd(a * (s + 1), a * (s - 2)) == a


uni = st.lists(st.integers(-4, 4), min_size=1, max_size=4).map(SparsePoly.from_coeffs)


@settings(max_examples=60, deadline=None)
@given(uni, uni, uni)
def test_gcd_divides_and_is_greatest(common, a, b):
    if common.is_zero or a.is_zero or b.is_zero:
        return
    x, y = common * a, common * b
    g = poly_gcd(x, y)
    x.exact_div(g)
    y.exact_div(g)
    g.exact_div(poly_gcd(common, common))
    assert g.leading()[1] == 1


# series


def test_series_binary_forms():
    assert series_coeffs(SeriesSpec((), (1, 1), 3)) == [1, 2, 3, 4]


def test_series_237():
    c = series_coeffs(SeriesSpec((42,), (21, 14, 6), 14))
    assert [i for i, v in enumerate(c) if v] == [0, 6, 12, 14]
    assert all(v in (0, 1) for v in c)


def test_series_two_three():
    assert series_coeffs(SeriesSpec((), (2, 3), 6)) == [1, 0, 1, 1, 1, 1, 2]


def test_series_rejects_bad_spec():
    with pytest.raises(ValueError):
        SeriesSpec((0,), (1,), 3)
    with pytest.raises(ValueError):
        SeriesSpec((), (1,), -1)


def test_series_big_integers():
    # many unit weights force the exact object-dtype path
    c = series_coeffs(SeriesSpec((), (1,) * 12, 4000))
    from math import comb

    assert c[4000] == comb(4011, 11)
    assert c[4000] > 2**63


@settings(max_examples=40, deadline=None)
@given(
    st.lists(st.integers(1, 25), min_size=1, max_size=4),
    st.integers(1, 60),
    st.integers(0, 200),
)
def test_series_matches_lattice_count(weights, degree, order):
    c = series_coeffs(SeriesSpec((degree,), tuple(weights), order))
    assert c[0] == 1
    for nu in range(0, order + 1, max(1, order // 25)):
        assert c[nu] == count_lattice(weights, nu) - count_lattice(weights, nu - degree)


# parsing


def test_parse_quadratic_coefficients():
    p = parse_poly("(1 + 2*sqrt(3))*s^2 - s^4")
    assert p == (s ** 2).scale(ExactScalar(1, 2, 3)) - s ** 4


def test_parse_error_offset():
    with pytest.raises(PolyParseError) as info:
        parse_poly("s + $")
    assert info.value.offset == 4
    with pytest.raises(PolyParseError) as info:
        parse_poly("x + y", ("x",))
    assert info.value.offset == 4
