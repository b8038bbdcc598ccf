"""The ten acceptance criteria, each at its stated tolerance (exact equality)."""

import random
import time

from conftest import ACCEPTANCE
from fqcluster.checks import (carlitz_check, claim_ilpk_check, claim_ipk_check,
                              inverse_stat_identities_check, log_concavity_check, prop_123_ides_check,
                              transport_identities_check)
from fqcluster.formulas import _u, inverse_u_series
from fqcluster.fqsym import HOMS, hom_is_multiplicative_check, verify_cluster_identity
from fqcluster.series import (TruncatedSeries, hadamard_identity, hadamard_inv, hadamard_pow,
                              hadamard_t, invert, q_binomial, sqrt_one_plus, substitute)
from fqcluster.tables import TABLES, compute_table, golden
from fqcluster.words import verify_word_cluster_method

_COMPUTED: dict = {}


def record(num: int, name: str, ok: bool, detail: str = ""):
    ACCEPTANCE[num] = (name, ok, detail)
    print(f"{'PASS' if ok else 'FAIL'} criterion {num}: {name}" + (f" ({detail})" if detail else ""))
    assert ok, detail


def _tables():
    if not _COMPUTED:
        for tid in TABLES:
            for method in ("brute", "closed"):
                _COMPUTED[tid, method] = compute_table(tid, method, 9)
    return _COMPUTED


def test_criterion_01_tables_by_two_methods():
    t0 = time.perf_counter()
    computed = _tables()
    bad = []
    for tid in TABLES:
        want = golden(tid)
        for method in ("brute", "closed"):
            for n, (w, g) in enumerate(zip(want, computed[tid, method])):
                if w != g:
                    bad.append(f"table {tid} n={n} {method}: printed {w}, computed {g}")
    secs = time.perf_counter() - t0
    ok = not bad and secs < 600
    record(1, "Tables 1-11 by brute force and closed forms, n = 0..9",
           ok, "; ".join(bad) or f"{secs:.1f}s")


def test_criterion_02_fqsym_cluster_identity():
    bad = [g for g in ("21", "123", "321", "132,231", "1234", "13245")
           if not verify_cluster_identity(g, 7)]
    record(2, "FQSym cluster identity to degree 7", not bad, ", ".join(bad))


def test_criterion_03_homomorphisms():
    bad = [h for h in HOMS if not hom_is_multiplicative_check(h, 6)]
    record(3, "five homomorphisms multiplicative to total degree 6", not bad, ", ".join(bad))


def test_criterion_04_carlitz():
    record(4, "Carlitz identity, n <= 5, t-degree <= 6", carlitz_check(5, 6))


def test_criterion_05_claims():
    ok = all(claim_ipk_check(m, 9) for m in (3, 4, 5)) and claim_ilpk_check(9)
    record(5, "Fibonacci claims for ipk = 0 and ilpk = 1", ok)


def test_criterion_06_ides_one_on_123_avoiders():
    report = []
    ok = prop_123_ides_check(11, report)
    record(6, "ides = 1 on S_n(123): 4 or 5 witnesses, 3 <= n <= 11", ok,
           " ".join(f"{n}:{c}" for n, c, _, _ in report))


def test_criterion_07_symmetries():
    ok = inverse_stat_identities_check(7)
    ok = all([transport_identities_check(g, 7) for g in ("123", "321", "132")]) and ok
    record(7, "inverse-statistic and transport identities, n <= 7", ok)


def test_criterion_08_word_clusters():
    record(8, "word cluster method on {a,b,c}, B = {cab, bc}, length <= 8",
           verify_word_cluster_method("abc", ["cab", "bc"], 8))


def _random_series(rng, trunc, const=None):
    d = {tuple(rng.randint(0, b) for b in trunc): rng.randint(-6, 6) for _ in range(rng.randint(0, 7))}
    if const is not None:
        d[(0, 0, 0, 0)] = const
    return TruncatedSeries(d, trunc)


def test_criterion_09_property_suites():
    rng = random.Random(9)
    tr = (2, 3, 2, 3)
    fails = []
    for _ in range(100):
        f, g, h = (_random_series(rng, tr) for _ in range(3))
        if (f * g) * h != f * (g * h):
            fails.append("associativity")
        if hadamard_t(f, hadamard_identity(tr)) != f:
            fails.append("hadamard identity")
        k = TruncatedSeries({e: c for e, c in f.coeffs.items() if e[3] > 0}, tr)
        one = hadamard_identity(tr)
        geo = one
        for n in range(1, tr[3] + 1):
            geo = geo + hadamard_pow(k, n)
        if hadamard_inv(one - k) != geo or hadamard_t(one - k, geo) != one:
            fails.append("hadamard inverse")
        z = _random_series(rng, tr, const=0)
        r = sqrt_one_plus(z)
        if r * r != TruncatedSeries.const(1, tr) + z:
            fails.append("sqrt")
        u = _random_series(rng, tr, const=rng.choice([1, -2, 3]))
        if u * invert(u) != TruncatedSeries.const(1, tr):
            fails.append("invert")
    t12 = (0, 12, 0, 0)
    if substitute(_u(t12), "t", inverse_u_series(t12)) != TruncatedSeries.var("t", t12):
        fails.append("u(v) = t")
    for n in range(0, 9):
        for k in range(0, n + 1):
            p = q_binomial(n, k)
            if p != q_binomial(n, n - k) or p.coeff_list("q") != p.coeff_list("q")[::-1]:
                fails.append(f"q-binomial symmetry {n},{k}")
        K = 6
        box = (0, K, K * n, 0)
        den = TruncatedSeries.const(1, box)
        for i in range(n + 1):
            den = den * (1 - TruncatedSeries({(0, 1, i, 0): 1}, box))
        rhs = {(0, k, e[2], 0): c for k in range(K + 1) for e, c in q_binomial(n + k, k).terms.items()}
        if invert(den) != TruncatedSeries(rhs, box):
            fails.append(f"product expansion n={n}")
    record(9, "series laws, q-binomial symmetry, product expansion", not fails, ", ".join(sorted(set(fails))))


def test_criterion_10_log_concavity():
    computed = _tables()
    bad = [f"table {tid} n={n} ({method})" for (tid, method), polys in computed.items()
           for n, p in enumerate(polys) if not log_concavity_check(p)]
    bad += [f"table {tid} n={n} (printed)" for tid in TABLES
            for n, p in enumerate(golden(tid)) if not log_concavity_check(p)]
    record(10, "log-concavity and unimodality of every table polynomial", not bad, ", ".join(bad))
