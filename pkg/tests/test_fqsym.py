from fractions import Fraction
from itertools import permutations

import pytest

from fqcluster import spoly
from fqcluster.distributions import brute_distribution
from fqcluster.fqsym import (HOMS, FQSymElement, QSymElement, apply_hom, f_bar, f_bar_from_clusters,
                             fqsym_distribution, g_product, hom_is_multiplicative_check,
                             qsym_product, r_bar, rho, verify_cluster_identity)
from fqcluster.perm import inv_count, iter_shifted_concats
from fqcluster.series import TruncatedSeries, hadamard_identity, hadamard_t, invert, q_binomial

G = FQSymElement.basis
CAP = 6


def test_products_of_basis_elements():
    assert g_product(G((1,), CAP), G((1,), CAP)) == FQSymElement({(1, 2): [1], (2, 1): [1]}, CAP)
    assert g_product(G((1, 2), CAP), G((1,), CAP)) == FQSymElement(
        {(1, 2, 3): [1], (1, 3, 2): [1], (2, 3, 1): [1]}, CAP)
    f = FQSymElement({(2, 1): [0, 1], (1,): [3]}, CAP)
    assert g_product(FQSymElement.one(CAP), f) == f == g_product(f, FQSymElement.one(CAP))


def test_truncation_drops_high_degrees():
    small = FQSymElement({(1, 2): [1]}, 3)
    assert g_product(small, small).terms == {}


def test_f_bar_and_r_bar_examples():
    fb = f_bar("123", 3)
    assert fb.coeff((1, 2, 3)) == [0, 1]
    assert all(fb.coeff(p) == [1] for p in permutations((1, 2, 3)) if p != (1, 2, 3))
    assert f_bar("1234", 1) == FQSymElement({(): [1], (1,): [1]}, 1)
    assert r_bar("123", 3, shift=True) == FQSymElement({(1, 2, 3): [-1, 1]}, 3)


@pytest.mark.parametrize("gamma, cap", [("123", 6), ("21", 5)])
def test_cluster_identity_examples(gamma, cap):
    report = []
    assert verify_cluster_identity(gamma, cap, report)
    assert report[-1] == (cap, len(list(permutations(range(cap)))), 0)


@pytest.mark.parametrize("gamma", ["21", "123", "321", "132,231", "1234", "12435", "13245"])
def test_cluster_identity_degree_seven(gamma):
    assert verify_cluster_identity(gamma, 7)


def test_cluster_solution_matches_direct_count():
    for gamma in ("123", "132,231", "2143"):
        assert f_bar_from_clusters(gamma, 6) == f_bar(gamma, 6)


def test_rho_examples():
    assert rho(G((2, 3, 1), 3)) == QSymElement.fundamental((1, 2), 3)
    assert rho(FQSymElement.one(3)) == QSymElement.fundamental((), 3)
    assert rho(G((1, 2, 3, 4), 4)) == QSymElement.fundamental((4,), 4)


def test_qsym_products():
    F = QSymElement.fundamental
    assert qsym_product(F((1,), 4), F((1,), 4)) == F((2,), 4) + F((1, 1), 4)
    assert qsym_product(F((), 4), F((2, 1), 4)) == F((2, 1), 4)
    g1 = G((1,), 4)
    assert rho(g1 * g1) == rho(g1) * rho(g1)


def test_rho_is_an_algebra_map():
    cap = 6
    for m in range(0, 4):
        for k in range(0, cap - m + 1):
            for a in permutations(range(1, m + 1)):
                for b in list(permutations(range(1, k + 1)))[:12]:
                    ga, gb = G(a, cap), G(b, cap)
                    assert rho(ga * gb) == rho(ga) * rho(gb)


def test_g_product_associative():
    cap = 6
    basis = [p for n in range(0, 4) for p in permutations(range(1, n + 1))]
    for a in basis:
        for b in basis:
            for c in basis:
                if len(a) + len(b) + len(c) > cap:
                    continue
                x, y, z = G(a, cap), G(b, cap), G(c, cap)
                lhs, rhs = (x * y) * z, x * (y * z)
                assert lhs == rhs
                assert all(len(p) == len(a) + len(b) + len(c) for p in lhs.terms)


def test_q_vandermonde_transport():
    for m in range(0, 5):
        for n in range(0, 8 - m):
            for a in list(permutations(range(1, m + 1)))[:6]:
                for b in list(permutations(range(1, n + 1)))[:6]:
                    got = {}
                    for tau in iter_shifted_concats(a, b):
                        got[inv_count(tau)] = got.get(inv_count(tau), 0) + 1
                    shift = inv_count(a) + inv_count(b)
                    want = {e[2] + shift: c for e, c in q_binomial(m + n, n).terms.items()}
                    assert got == want


def test_hom_examples():
    img = apply_hom(G((2, 1), 3), "Psi")
    assert img.coeff(x=2) == Fraction(1, 2)
    tr = (0, 0, 5, 3)
    psi_q = apply_hom(G((2, 1), 3), "Psi_q", tr)
    q = TruncatedSeries.var("q", tr)
    x2 = TruncatedSeries.var("x", tr, 2)
    assert psi_q == q * x2 * invert(1 + q)
    tr = (0, 5, 0, 3)
    assert apply_hom(FQSymElement.one(3), "Psi_ilpk", tr) == hadamard_identity(tr)


def test_hom_pair_examples():
    tr = (0, 0, 4, 3)
    one_one = G((1,), 3) * G((1,), 3)
    assert apply_hom(one_one, "Psi_q", tr) == TruncatedSeries.var("x", tr, 2)
    tr = (0, 6, 0, 3)
    gx = apply_hom(G((1,), 3), "Psi_ilpk", tr)
    t = TruncatedSeries.var("t", tr)
    assert gx == TruncatedSeries.var("x", tr) * (1 + t) / (1 - t) ** 2
    assert hadamard_t(gx, gx) == apply_hom(one_one, "Psi_ilpk", tr)


@pytest.mark.parametrize("hom", HOMS)
def test_homs_multiplicative(hom):
    report = []
    assert hom_is_multiplicative_check(hom, 5, report)
    assert report[0][2] == 0


def test_unknown_hom():
    with pytest.raises(ValueError):
        apply_hom(FQSymElement.one(2), "Psi_des")


@pytest.mark.parametrize("gamma", ["123", "321", "1324", "132,231"])
@pytest.mark.parametrize("family", ["A_ides", "A_ides_icomaj", "P_ipk", "P_ilpk", "F_q"])
def test_fqsym_route_matches_brute(gamma, family):
    for n in range(0, 7):
        for s in (None, 0):
            assert fqsym_distribution(gamma, n, family, s) == brute_distribution(gamma, n, family, s).poly


def test_spoly_shift():
    assert spoly.shift_minus_one([0, 0, 1]) == [1, -2, 1]
    assert spoly.evaluate([1, 2, 3], 2) == 17
