import pytest
from hypothesis import given, settings, strategies as st

from vancoh.polynomial import IntPolynomial, poly_divides, poly_product


def P(*coeffs):
    return IntPolynomial.from_coeffs(coeffs)


def test_normalization():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P().is_zero
    assert P(0, 0).is_zero
    assert P(3).degree == 0
    assert P(0, 1).degree == 1


def test_str():
    assert str(P(-1, 1)) == "t - 1"
    assert str(P(1, -2, 1)) == "t^2 - 2*t + 1"
    assert str(P()) == "0"


def test_product():
    assert poly_product([P(-1, 1), P(1, 1)]).coeffs == (-1, 0, 1)
    assert poly_product([]).coeffs == (1,)


def test_divides_basics():
    # (t-1) | (t-1)(t+1)
    assert poly_divides(P(-1, 1), P(-1, 0, 1))
    # t^2 does not divide t-1
    assert not poly_divides(P(0, 0, 1), P(-1, 1))
    # rational division: 2t-2 divides t^2-1 over Q[t]
    assert poly_divides(P(-2, 2), P(-1, 0, 1))
    assert poly_divides(P(2), P(-1, 1))
    assert not poly_divides(P(), P(1))


def test_divides_zero_divisor_errors():
    with pytest.raises(ValueError):
        poly_divides(P(-1, 1), P())


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=5),
       st.lists(st.integers(-5, 5), min_size=1, max_size=5))
def test_property_products_divide(a, b):
    pa, pb = IntPolynomial.from_coeffs(a), IntPolynomial.from_coeffs(b)
    if pa.is_zero or pb.is_zero:
        return
    prod = pa * pb
    assert poly_divides(pa, prod)
    assert poly_divides(pb, prod)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=2, max_size=6),
       st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_property_division_evaluation(q, p):
    pq, pp = IntPolynomial.from_coeffs(q), IntPolynomial.from_coeffs(p)
    if pq.is_zero or pp.is_zero or pp.degree > pq.degree:
        return
    # pseudo-division oracle: p | q over Q forces p(t) | lc(p)^k q(t) in Z
    if poly_divides(pp, pq):
        k = pq.degree - pp.degree + 1
        lead = pp.coeffs[-1]
        for t in range(-4, 5):
            if pp(t) != 0:
                assert (lead ** k * pq(t)) % pp(t) == 0
