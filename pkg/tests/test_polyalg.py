import warnings
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from coxgrowth.errors import PoleAtOrigin
from coxgrowth.polyalg import (
    ONE,
    T,
    DegreeDropWarning,
    IntPoly,
    RatFunc,
    arith,
    cyclotomic,
    format_poly,
    parse_poly,
    poly_gcd,
    qint,
    reciprocal_poly,
    substitute_inverse,
    taylor_coeffs,
)

small_ints = st.integers(min_value=-20, max_value=20)
polys = st.lists(small_ints, min_size=1, max_size=7).map(IntPoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def long_division_series(num, den, count):
    """Power series of num/den by schoolbook long division with Fractions."""
    rem = [Fraction(c) for c in num] + [Fraction(0)] * (count + len(den))
    out = []
    for k in range(count):
        c = rem[k] / den[0]
        out.append(c)
        for j, d in enumerate(den):
            rem[k + j] -= c * d
    return out


def test_zero_polynomial_representation():
    z = IntPoly([0, 0])
    assert z.coeffs == () and z.degree == -1 and z.is_zero()


def test_qint_examples():
    assert qint(1) == ONE
    assert qint(2) == IntPoly([1, 1])
    assert qint(6) == IntPoly([1] * 6)
    with pytest.raises(ValueError):
        qint(0)


@pytest.mark.parametrize("k", range(1, 40))
def test_qint_times_t_minus_one(k):
    assert qint(k) * (T - 1) == IntPoly.monomial(k) - 1


def test_cyclotomic_examples():
    assert cyclotomic(1) == T - 1
    assert cyclotomic(6) == IntPoly([1, -1, 1])
    assert cyclotomic(5) == qint(5)


def test_cyclotomic_product_identity_up_to_200():
    for k in range(1, 201):
        prod = ONE
        for d in range(1, k + 1):
            if k % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly.monomial(k) - 1, k


def test_reciprocal_examples():
    assert reciprocal_poly(T - 8) == IntPoly([1, -8])
    assert reciprocal_poly(IntPoly([-1, 7, 9, 9])) == IntPoly([9, 9, 7, -1])
    assert reciprocal_poly(IntPoly([1, 1])) == IntPoly([1, 1])
    with pytest.raises(ValueError):
        reciprocal_poly(IntPoly())


def test_reciprocal_degree_drop_is_flagged():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        reciprocal_poly(IntPoly([0, 1, 2]))
    assert any(issubclass(w.category, DegreeDropWarning) for w in caught)


@given(nonzero_polys.filter(lambda p: p[0] != 0))
def test_reciprocal_involution(p):
    assert reciprocal_poly(reciprocal_poly(p)) == p


def test_arith_examples():
    assert arith(T - 1, IntPoly([1, -8, 1]), "mul") == IntPoly([-1, 9, -9, 1])
    assert arith(IntPoly([-1, 0, 1]), T - 1, "div") == T + 1
    a = RatFunc(1, ONE - T)
    assert arith(a, a, "sub") == RatFunc(0)
    with pytest.raises(ZeroDivisionError):
        arith(T, IntPoly(), "div")


@given(polys, polys)
def test_mul_matches_convolution(a, b):
    conv = [0] * (len(a.coeffs) + len(b.coeffs))
    for i, x in enumerate(a.coeffs):
        for j, y in enumerate(b.coeffs):
            conv[i + j] += x * y
    assert a * b == IntPoly(conv)


def test_ratfunc_canonical_form():
    f = RatFunc(IntPoly([2, 2]), IntPoly([-4, 0, 4]))  # 2(1+t) / (4(t^2-1))
    assert f.den.lc > 0
    assert poly_gcd(f.num, f.den).degree == 0
    assert f == RatFunc(1, IntPoly([-2, 2]))


def test_substitute_inverse_examples():
    f_inf = RatFunc((ONE + T) ** 3, (ONE - T) * IntPoly([1, -8]))
    F = substitute_inverse(f_inf)
    # the reciprocal of f(1/t) is F_inf = t(t-1)(t-8)/(t+1)^3
    assert RatFunc(1) / F == RatFunc(T * (T - 1) * (T - 8), (T + 1) ** 3)
    assert substitute_inverse(RatFunc(1)) == RatFunc(1)
    assert substitute_inverse(RatFunc(T)) == RatFunc(1, T)


@given(nonzero_polys, nonzero_polys)
def test_substitute_inverse_involution(a, b):
    f = RatFunc(a, b)
    if f.is_zero():
        return
    assert substitute_inverse(substitute_inverse(f)) == f


def test_taylor_of_ideal_dodecahedron_function():
    f = RatFunc((ONE + T) ** 3, (ONE - T) * IntPoly([1, -8]))
    assert taylor_coeffs(f, 4) == [1, 12, 103, 832]
    assert taylor_coeffs(f, 4) == long_division_series(f.num, f.den, 4)


def test_taylor_trivial_examples():
    assert taylor_coeffs(RatFunc(1, ONE - T), 3) == [1, 1, 1]
    assert taylor_coeffs(RatFunc(IntPoly([1, 3])), 4) == [1, 3, 0, 0]
    with pytest.raises(PoleAtOrigin):
        taylor_coeffs(RatFunc(1, T), 2)


@given(polys, nonzero_polys.filter(lambda p: p[0] != 0), st.integers(1, 15))
def test_taylor_recurrence_reproduces_numerator(num, den, n):
    f = RatFunc(num, den)
    a = taylor_coeffs(f, n)
    for k in range(n):
        conv = sum(f.den[j] * a[k - j] for j in range(min(k, f.den.degree) + 1))
        assert conv == f.num[k]


@given(nonzero_polys)
def test_parse_format_roundtrip(p):
    assert parse_poly(format_poly(p)) == p
    assert parse_poly(str(list(p.coeffs))) == p


def test_parse_examples():
    assert parse_poly("1 - 8*t + 8*t^5 - t^6") == IntPoly([1, -8, 0, 0, 0, 8, -1])
    assert parse_poly("[1, -8, 1]") == IntPoly([1, -8, 1])
    with pytest.raises(ValueError):
        parse_poly("1 + * t")
