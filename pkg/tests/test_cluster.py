from itertools import permutations
from math import factorial

import pytest

from fqcluster.cluster import (Cluster, MarkedOccurrence, PatternSet, as_pattern_set, cluster_carriers,
                               cluster_polynomial, clusters, count_avoiders, is_chain, iter_avoiders,
                               monotone, occ_count, occurrences, overlap_set, transpositional)
from fqcluster.formulas import monotone_cluster_gf, trans_cluster_gf
from fqcluster.perm import inverse, parse_perm, symmetry
from fqcluster.series import Polynomial


def test_occurrences_of_213():
    occ = occurrences(parse_perm("315497628"), "213")
    assert [m.start for m in occ] == [1, 3, 7]
    assert occ_count(parse_perm("137258469"), "213") == 0
    assert occ_count(tuple(range(1, 8)), "21") == 0


def test_count_avoiders():
    assert count_avoiders(3, "123") == 5
    assert count_avoiders(4, "1234") == 23
    assert count_avoiders(5, None) == factorial(5)
    assert sorted(iter_avoiders(3, "123")) == sorted(p for p in permutations((1, 2, 3)) if p != (1, 2, 3))


def test_empty_pattern_set_rejected():
    with pytest.raises(ValueError):
        PatternSet([])
    with pytest.raises(ValueError):
        PatternSet(["1"])


def test_clusters_examples():
    cs = clusters(parse_perm("1234"), "1234")
    assert len(cs) == 1 and cs[0].mk == 1
    poly = Polynomial({})
    for c in clusters(tuple(range(1, 8)), "1234"):
        assert c.is_valid()
        poly = poly + Polynomial.monomial(1, s=c.mk)
    assert poly == Polynomial.parse("s^2 + 2*s^3 + s^4")
    assert clusters(parse_perm("21"), "123") == []


def test_cluster_validity_rules():
    base = parse_perm("1234")
    m = lambda a, p: MarkedOccurrence(a, parse_perm(p))
    assert Cluster(base, (m(1, "123"), m(2, "123"))).is_valid()
    assert not Cluster(base, (m(1, "123"),)).is_valid()           # misses position 4
    assert not Cluster(parse_perm("123456"), (m(1, "123"), m(4, "123"))).is_valid()  # no overlap
    assert is_chain([(1, 3), (3, 5)], 5)
    assert not is_chain([(1, 3), (4, 5)], 5)


def test_cluster_polynomial_examples():
    assert cluster_polynomial("123", 5, "ides") == Polynomial.parse("s^2*t + s^3*t")
    assert cluster_polynomial("13245", 9, "ides") == Polynomial.parse("s^2*t^3")
    assert cluster_polynomial("13245", 4, "ides") == Polynomial({})


def test_overlap_sets():
    assert overlap_set(parse_perm("1234")) == {1, 2, 3}
    assert overlap_set(parse_perm("12435")) == {3, 4}
    assert overlap_set(parse_perm("132")) == {2}


def test_cluster_polynomial_methods_agree():
    for gamma in ("123", "132,231", "2143", "1324"):
        for n in range(2, 8):
            for tag in ("none", "ides", "ipk"):
                a = cluster_polynomial(gamma, n, tag, method="carriers")
                b = cluster_polynomial(gamma, n, tag, method="brute")
                assert a == b, (gamma, n, tag)


def test_marks_at_s_one_count_chains():
    # setting s = 1 counts covering chains
    gamma = as_pattern_set("123,132")
    for n in range(3, 7):
        total = sum(len(clusters(p, gamma)) for p in permutations(range(1, n + 1)))
        assert cluster_polynomial(gamma, n, "none").evaluate(s=1) == Polynomial.const(total)


def _series_slice(S, n):
    return S.slice("x", n).to_polynomial()


@pytest.mark.parametrize("m", [3, 4, 5])
def test_monotone_oracle(m):
    tr = (9, 11, 0, 9)
    S = monotone_cluster_gf(m, "ides", tr)
    for n in range(m, 10):
        assert _series_slice(S, n) == cluster_polynomial(monotone(m), n, "ides"), n


@pytest.mark.parametrize("m, a", [(5, 2), (5, 3), (6, 2), (6, 3)])
def test_transpositional_oracle(m, a):
    tr = (11, 13, 0, 11)
    S = trans_cluster_gf(m, a, "ides", tr)
    for n in range(m, 12):
        assert _series_slice(S, n) == cluster_polynomial(transpositional(m, a), n, "ides"), n


def test_cluster_carrier_shapes():
    for n in range(3, 8):
        for p in cluster_carriers(n, "123"):
            assert p == tuple(range(1, n + 1))
    for n in range(5, 11):
        for p in cluster_carriers(n, "13245"):
            assert inverse(p) == p


def test_occurrences_transport_under_symmetries():
    pats = [p for k in (2, 3, 4) for p in permutations(range(1, k + 1))]
    for sigma in pats[::3]:
        for kind in ("reverse", "complement", "reverse_complement"):
            img = symmetry(sigma, kind)
            for n in (5, 7):
                for p in list(permutations(range(1, n + 1)))[::97]:
                    assert occ_count(p, [sigma]) == occ_count(symmetry(p, kind), [img])
