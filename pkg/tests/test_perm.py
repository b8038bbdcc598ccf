from itertools import permutations
from math import comb

import pytest
from hypothesis import given, strategies as st

from fqcluster.perm import (Composition, Permutation, descent_composition, inverse, lpk,
                            parse_perm, pk, shifted_concats, shuffles, standardize, stats, symmetry)


def perms(max_n=8):
    return st.integers(0, max_n).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


@pytest.mark.parametrize("word, std", [("73184", "42153"), ("145411", "146523"), ("123", "123")])
def test_standardize(word, std):
    assert standardize([int(c) for c in word]) == parse_perm(std)


def test_worked_example_stats():
    st_ = stats(parse_perm("72163584"))
    assert sorted(st_.des_set) == [1, 2, 4, 7]
    assert (st_.des, st_.maj, st_.comaj, st_.pk, st_.lpk) == (4, 14, 18, 2, 3)
    assert (st_.ides, st_.imaj, st_.icomaj, st_.ipk, st_.ilpk) == (4, 16, 16, 1, 2)


def test_identity_stats_vanish():
    for n in range(0, 7):
        r = stats(tuple(range(1, n + 1)))
        assert r.des == r.maj == r.pk == r.lpk == r.inv == 0


def test_inverse_examples():
    assert inverse(parse_perm("72163584")) == parse_perm("32586417")
    assert inverse(parse_perm("231")) == parse_perm("312")
    assert inverse(Permutation()) == Permutation()


def test_symmetry_examples():
    assert symmetry(parse_perm("123"), "reverse") == parse_perm("321")
    assert symmetry(parse_perm("231"), "complement") == parse_perm("213")
    assert symmetry(parse_perm("1234"), "reverse_complement") == parse_perm("1234")
    with pytest.raises(ValueError):
        symmetry(parse_perm("12"), "rotate")


def test_descent_composition():
    assert descent_composition(parse_perm("85712643")) == Composition((1, 2, 3, 1, 1))
    assert descent_composition(parse_perm("12345")) == Composition((5,))
    assert descent_composition(parse_perm("321")) == Composition((1, 1, 1))


def test_shuffles():
    assert shuffles((3, 1), (2, 5)) == {(3, 1, 2, 5), (3, 2, 1, 5), (3, 2, 5, 1),
                                        (2, 3, 1, 5), (2, 3, 5, 1), (2, 5, 3, 1)}
    assert shuffles((), (2, 1)) == {(2, 1)}
    assert len(shuffles((1, 2), (3, 4))) == 6


def test_shifted_concats():
    assert shifted_concats((1,), (1,)) == {(1, 2), (2, 1)}
    assert shifted_concats((), (2, 1)) == {(2, 1)}
    assert shifted_concats((1, 2), (1,)) == {(1, 2, 3), (1, 3, 2), (2, 3, 1)}


def test_rejects_non_bijections():
    for bad in ([1, 1], [0, 1], [2, 3]):
        with pytest.raises(ValueError):
            Permutation(bad)


def test_sizes_of_shuffles_and_concats():
    for m in range(0, 5):
        for n in range(0, 9 - m):
            if m + n > 8:
                continue
            p, s = tuple(range(m, 0, -1)), tuple(range(1, n + 1))
            assert len(shifted_concats(p, s)) == comb(m + n, m)
            word = tuple(range(m + 1, m + n + 1))
            assert len(shuffles(tuple(range(1, m + 1)), word)) == comb(m + n, m)


def test_comaj_identity_exhaustive():
    for n in range(0, 9):
        for p in permutations(range(1, n + 1)):
            r = stats(p)
            assert r.comaj == n * r.des - r.maj
            assert r.imaj == n * r.ides - r.icomaj
            assert r.lpk in (r.pk, r.pk + 1)


@given(perms(8))
def test_comaj_and_inverse_relations(p):
    n = len(p)
    r = stats(p)
    q = inverse(p)
    assert r.comaj == n * r.des - r.maj
    rq = stats(q)
    assert (r.ides, r.imaj, r.icomaj, r.ipk, r.ilpk) == (rq.des, rq.maj, rq.comaj, rq.pk, rq.lpk)


@given(perms(8))
def test_lpk_is_pk_of_zero_prefixed(p):
    # peaks of 0p, counted on the word directly
    w = (0,) + tuple(p)
    assert lpk(p) == sum(1 for i in range(1, len(w) - 1) if w[i - 1] < w[i] > w[i + 1])
    assert pk(p) == sum(1 for i in range(1, len(p) - 1) if p[i - 1] < p[i] > p[i + 1])


@given(perms(8), st.sampled_from(["reverse", "complement", "reverse_complement"]))
def test_symmetries_are_involutions(p, kind):
    assert symmetry(symmetry(p, kind), kind) == tuple(p)


@given(perms(8))
def test_inverse_intertwines_reverse_and_complement(p):
    assert inverse(symmetry(p, "reverse")) == symmetry(inverse(p), "complement")
    assert inverse(symmetry(p, "complement")) == symmetry(inverse(p), "reverse")


@given(perms(8))
def test_inverse_statistics_under_symmetries(p):
    n = len(p)
    if n == 0:
        return
    r = stats(p)
    assert stats(symmetry(p, "reverse")).imaj == comb(n, 2) - r.imaj
    assert stats(symmetry(p, "reverse_complement")).imaj == r.icomaj
    assert stats(symmetry(p, "reverse")).ides == n - 1 - r.ides
    assert stats(symmetry(p, "reverse_complement")).ides == r.ides
    assert stats(symmetry(p, "complement")).ipk == r.ipk
