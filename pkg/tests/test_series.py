from fractions import Fraction
from math import comb
import random

import pytest
from hypothesis import given, settings, strategies as st

from fqcluster.formulas import _u, inverse_u_series
from fqcluster.series import (Polynomial, TruncatedSeries, TruncationError, hadamard_identity,
                              hadamard_inv, hadamard_pow, hadamard_t, invert, mul, q_binomial,
                              q_factorial, q_integer, sqrt_one_plus, substitute, x_slice)

TR = (2, 3, 2, 3)


def ser(text, trunc=TR):
    return Polynomial.parse(text).to_series(trunc)


def series_st(trunc=TR, const=None):
    box = st.tuples(*(st.integers(0, b) for b in trunc))
    coeffs = st.dictionaries(box, st.integers(-5, 5), max_size=6)

    def build(d):
        if const is not None:
            d = dict(d)
            d[(0, 0, 0, 0)] = const
        return TruncatedSeries(d, trunc)
    return coeffs.map(build)


def test_basic_products():
    assert ser("1 + x") * ser("1 - x") == ser("1 - x^2")
    geo = TruncatedSeries.geometric("x", TR)
    assert ser("1 - x") * geo == TruncatedSeries.const(1, TR)
    a = ser("x + x^2 + x^3")
    assert (a * a).coeff(x=3) == 2


def test_invert_examples():
    assert invert(ser("1 - x")) == TruncatedSeries.geometric("x", TR)
    f = ser("1 - x - s*x^2 + x^2")   # 1 - x - (s-1)x^2
    assert invert(f).slice("x", 3).to_polynomial() == Polynomial.parse("2*s - 1")
    assert invert(TruncatedSeries.const(2, TR)).constant_term() == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        invert(ser("x"))


def test_hadamard_examples():
    tr = (0, 6, 0, 0)
    f = ser("3*t + t^2", tr)
    assert hadamard_pow(f, 0) == hadamard_identity(tr)
    for n in range(1, 5):
        assert hadamard_pow(f, n) == ser(f"{3 ** n}*t + t^2", tr)
    tr = (0, 4, 0, 4)
    g = hadamard_identity(tr) - ser("2*x*t", tr)
    expect = hadamard_identity(tr) + ser("2*x*t + 4*x^2*t + 8*x^3*t + 16*x^4*t", tr)
    assert hadamard_inv(g) == expect
    h = ser("1 + s*t + x*t^2 - t^3*q", TR)
    assert hadamard_t(h, hadamard_identity(TR)) == h


def test_substitute_examples():
    tr = (0, 4, 0, 4)
    x = TruncatedSeries.var("x", tr)
    z = x * TruncatedSeries.geometric("t", tr)
    got = substitute(x * x, "x", z)
    assert x_slice(got, 2) == (TruncatedSeries.const(1, tr) / (1 - TruncatedSeries.var("t", tr)) ** 2).slice("x", 0)
    assert substitute(ser("1 + x + t*x^2", tr), "x", x) == ser("1 + x + t*x^2", tr)
    u = _u((0, 4, 0, 0))
    assert u == ser("4*t - 8*t^2 + 12*t^3 - 16*t^4", (0, 4, 0, 0))


def test_sqrt_examples():
    tr = (0, 4, 0, 0)
    root = sqrt_one_plus(-TruncatedSeries.var("t", tr))
    want = {0: 1, 1: Fraction(-1, 2), 2: Fraction(-1, 8), 3: Fraction(-1, 16), 4: Fraction(-5, 128)}
    assert all(root.coeff(t=k) == c for k, c in want.items())
    assert sqrt_one_plus(TruncatedSeries({}, tr)) == TruncatedSeries.const(1, tr)
    v = inverse_u_series((0, 3, 0, 0))
    assert [v.coeff(t=k) for k in range(4)] == [0, Fraction(1, 4), Fraction(1, 8), Fraction(5, 64)]


def test_q_analogues():
    assert q_binomial(4, 2) == Polynomial.parse("1 + q + 2*q^2 + q^3 + q^4")
    assert q_binomial(7, 0) == Polynomial.const(1)
    assert q_factorial(3) == Polynomial.parse("1 + 2*q + 2*q^2 + q^3")
    assert q_integer(3) == Polynomial.parse("1 + q + q^2")


def test_coefficients_and_slices():
    geo = TruncatedSeries.geometric("x", TR)
    assert geo.coeff(x=3) == 1
    assert geo.coeff(t=1) == 0
    with pytest.raises(TruncationError):
        geo.coeff(x=4)
    tr = (0, 4, 0, 3)
    f = TruncatedSeries.var("x", tr) / (1 - TruncatedSeries.var("t", tr)) ** 2
    assert x_slice(f, 1) == (TruncatedSeries.const(1, tr) / (1 - TruncatedSeries.var("t", tr)) ** 2).slice("x", 0)


def test_truncation_meets_on_binary_ops():
    a = TruncatedSeries.geometric("x", (0, 0, 0, 5))
    b = TruncatedSeries.geometric("x", (0, 0, 0, 2))
    assert (a * b).trunc == (0, 0, 0, 2)
    assert (a + b).trunc == (0, 0, 0, 2)


def test_polynomial_parse_and_format():
    p = Polynomial.parse("4*t^2 + 39*t^3 + 26*t^4 + t^5")
    assert str(p) == "4*t^2 + 39*t^3 + 26*t^4 + t^5"
    assert p.coeff_list("t") == [0, 0, 4, 39, 26, 1]
    assert p.evaluate(t=1) == Polynomial.const(70)


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st(), series_st())
def test_ring_laws(f, g, h):
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@settings(max_examples=60, deadline=None)
@given(series_st(const=1), st.integers(1, 4))
def test_invert_then_multiply(f, scale):
    f = f.scale(scale)
    assert mul(f, invert(f)) == TruncatedSeries.const(1, TR)


def test_invert_hundred_random_inputs():
    rng = random.Random(20240611)
    for _ in range(100):
        d = {(rng.randint(0, 2), rng.randint(0, 3), rng.randint(0, 2), rng.randint(0, 3)): rng.randint(-4, 4)
             for _ in range(5)}
        d[(0, 0, 0, 0)] = rng.choice([1, -1, 2, 3])
        f = TruncatedSeries(d, TR)
        assert f * invert(f) == TruncatedSeries.const(1, TR)


@settings(max_examples=60, deadline=None)
@given(series_st(), series_st())
def test_hadamard_is_slicewise_product(f, g):
    h = hadamard_t(f, g)
    for k in range(TR[1] + 1):
        want = (f.slice("t", k) * g.slice("t", k)).to_polynomial()
        assert h.slice("t", k).to_polynomial() == want


@settings(max_examples=60, deadline=None)
@given(series_st())
def test_hadamard_identity_law(f):
    assert hadamard_t(f, hadamard_identity(TR)) == f


@settings(max_examples=40, deadline=None)
@given(series_st(trunc=(1, 3, 1, 3)))
def test_hadamard_inverse_is_geometric_sum(f):
    # remove the x^0 part so the Hadamard powers die out past T_x
    tr = f.trunc
    f = TruncatedSeries({e: c for e, c in f.coeffs.items() if e[3] > 0}, tr)
    one = hadamard_identity(tr)
    total = one
    for n in range(1, tr[3] + 1):
        total = total + hadamard_pow(f, n)
    assert hadamard_t(one - f, total) == one
    assert hadamard_inv(one - f) == total


@settings(max_examples=40, deadline=None)
@given(series_st(trunc=(1, 3, 1, 3), const=0))
def test_sqrt_squares_back(f):
    r = sqrt_one_plus(f)
    assert r * r == TruncatedSeries.const(1, f.trunc) + f


def test_u_of_v_is_t():
    tr = (0, 12, 0, 0)
    u = _u(tr)
    v = inverse_u_series(tr)
    assert substitute(u, "t", v) == TruncatedSeries.var("t", tr)


@given(st.integers(0, 10), st.integers(0, 10))
def test_q_binomial_symmetry(n, k):
    if k > n:
        with pytest.raises(ValueError):
            q_binomial(n, k)
        return
    p = q_binomial(n, k)
    assert p == q_binomial(n, n - k)
    d = k * (n - k)
    assert p.coeff_list("q") == list(reversed(p.coeff_list("q")))
    assert p.degree("q") == d
    assert p.evaluate(q=1) == Polynomial.const(comb(n, k))


@pytest.mark.parametrize("n", range(0, 9))
def test_product_expansion_identity(n):
    K = 6
    tr = (0, K, K * n, 0)
    den = TruncatedSeries.const(1, tr)
    for i in range(n + 1):
        den = den * (1 - TruncatedSeries({(0, 1, i, 0): 1}, tr))
    lhs = invert(den)
    rhs = {}
    for k in range(K + 1):
        for e, c in q_binomial(n + k, k).terms.items():
            rhs[(0, k, e[2], 0)] = c
    assert lhs == TruncatedSeries(rhs, tr)


@settings(max_examples=80)
@given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 6), st.integers(0, 20)),
                       st.integers(-10 ** 30, 10 ** 30), max_size=8))
def test_polynomial_json_round_trip(d):
    p = Polynomial({(a, b, c, 0): v for (a, b, c), v in d.items()})
    assert Polynomial.from_json(p.to_json()) == p
    assert Polynomial.parse(str(p)) == p
