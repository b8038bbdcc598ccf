"""Numeric checks of the propositions, claims and identities that sit around
the main theorems.  Each check returns a bool and can append human-readable
rows to a ``report`` list."""

from __future__ import annotations

from itertools import combinations
from math import comb
from typing import Sequence

from .cluster import PatternSet, as_pattern_set, occ_count
from .distributions import brute_distribution, joint_table
from .formulas import (c_coeff, c_prime_coeff, d_coeff, d_prime_coeff, e_coeff,
                       e_prime_coeff)
from .perm import all_perms, des, inverse, maj, stats, symmetry
from .series import Polynomial, TruncatedSeries, q_integer

__all__ = [
    "carlitz_check", "q_eulerian", "fibonacci_order", "claim_ipk_check", "claim_ilpk_check",
    "reading_sequences", "prop_123_witnesses", "prop_123_ides_check", "log_concavity_check",
    "inverse_stat_identities_check", "transport_identities_check", "coefficient_series_check",
    "three_way_check",
]


# -- Carlitz ----------------------------------------------------------------------

def q_eulerian(n: int) -> Polynomial:
    """``A_n(t, q) = sum t^(des+1) q^maj`` over S_n, with A_0 = 1."""
    if n == 0:
        return Polynomial.const(1)
    terms: dict = {}
    for p in all_perms(n):
        key = (0, des(p) + 1, maj(p), 0)
        terms[key] = terms.get(key, 0) + 1
    return Polynomial(terms)


def carlitz_check(N_n: int, N_k: int, report: list | None = None) -> bool:
    """``A_n(t,q) / prod_{i=0}^n (1 - t q^i) = sum_{k>=1} [k]_q^n t^k`` for n <= N_n.

    Compared on t-degree <= N_k and every q-degree those t-powers can reach;
    at n = 0 the right side carries the extra constant 1.
    """
    ok = True
    for n in range(N_n + 1):
        tr = (0, N_k, max(N_k - 1, 0) * n, 0)
        den = TruncatedSeries.const(1, tr)
        for i in range(n + 1):
            den = den * (1 - TruncatedSeries({(0, 1, i, 0): 1}, tr))
        lhs = q_eulerian(n).to_series(tr) / den
        rhs_terms = {(0, 0, 0, 0): 1} if n == 0 else {}
        for k in range(1, N_k + 1):
            for (_, _, e, _), c in (q_integer(k) ** n).terms.items():
                rhs_terms[(0, k, e, 0)] = rhs_terms.get((0, k, e, 0), 0) + c
        good = lhs == TruncatedSeries(rhs_terms, tr)
        if report is not None:
            report.append((n, good))
        ok = ok and good
    return ok


# -- Fibonacci claims ----------------------------------------------------------------

def fibonacci_order(k: int, n: int) -> int:
    """``f_n = f_{n-1} + ... + f_{n-k}`` with f_0 = 1 and f_n = 0 for n < 0."""
    if k < 1:
        raise ValueError("order must be >= 1")
    if n < 0:
        return 0
    f = [1]
    for i in range(1, n + 1):
        f.append(sum(f[max(0, i - k):i]))
    return f[n]


def _count_joint(gamma, n: int, pred) -> int:
    return sum(c for key, c in joint_table(gamma, n, avoiders_only=True).items() if pred(*key))


def claim_ipk_check(m: int, N: int, report: list | None = None) -> bool:
    """#{pi in S_n(12...m) : ipk = 0} = f_n^(m-1) for 1 <= n <= N."""
    gamma = PatternSet([tuple(range(1, m + 1))])
    ok = True
    for n in range(1, N + 1):
        got = _count_joint(gamma, n, lambda occ, ides, imaj, ipk, ilpk, inv: ipk == 0)
        want = fibonacci_order(m - 1, n)
        if report is not None:
            report.append((n, got, want))
        ok = ok and got == want
    return ok


def claim_ilpk_check(N: int, report: list | None = None) -> bool:
    """#{pi in S_n(321) : ilpk = 1} = f_{n-1} f_n - floor((n+1)/2) for 1 <= n <= N,
    also matched against the double-sum form."""
    f = lambda i: fibonacci_order(2, i)
    ok = True
    for n in range(1, N + 1):
        got = _count_joint("321", n, lambda occ, ides, imaj, ipk, ilpk, inv: ilpk == 1)
        closed = f(n - 1) * f(n) - (n + 1) // 2
        double = sum(f(j - 1) * f(j) for i in range(1, n) for j in range(1, i + 1))
        if report is not None:
            report.append((n, got, closed, double))
        ok = ok and got == closed == double
    return ok


# -- the proposition on S_n(123) and ides = 1 ----------------------------------------

def reading_sequences(p: Sequence[int]) -> list[list[int]]:
    """Read 1, 2, ..., n left to right, wrapping to the start when needed."""
    pos = {v: i for i, v in enumerate(p)}
    out: list[list[int]] = []
    for v in range(1, len(p) + 1):
        if out and pos[v] > pos[v - 1]:
            out[-1].append(v)
        else:
            out.append([v])
    return out


def prop_123_witnesses(n: int) -> list[tuple[int, ...]]:
    """Permutations with one descent whose inverse avoids 123, built from the
    families listed in the combinatorial proof."""
    if n < 3:
        raise ValueError("the families start at n = 3")
    odds = lambda lo, hi: list(range(lo, hi + 1, 2))
    if n % 2:
        fams = [
            odds(1, n) + odds(2, n - 1),
            odds(2, n - 1) + odds(1, n),
            odds(2, n - 1) + [n] + odds(1, n - 2),
            odds(3, n) + [1] + odds(2, n - 1),
        ]
    else:
        fams = [
            odds(1, n - 1) + odds(2, n),
            odds(1, n - 1) + [n] + odds(2, n - 2),
            odds(2, n) + odds(1, n - 1),
            odds(3, n - 1) + [1] + odds(2, n),
            odds(3, n - 1) + [n, 1] + odds(2, n - 2),
        ]
    return [tuple(w) for w in fams]


def _one_descent_perms(n: int):
    # choose the letters of the first increasing run; the rest form the second
    for k in range(1, n):
        for first in combinations(range(1, n + 1), k):
            chosen = set(first)
            rest = [v for v in range(1, n + 1) if v not in chosen]
            if first[-1] > rest[0]:
                yield tuple(first) + tuple(rest)


def prop_123_ides_check(N: int, report: list | None = None) -> bool:
    """For 3 <= n <= N, #{pi in S_n(123) : ides = 1} is 4 (n odd) or 5 (n even),
    and the solutions are exactly the inverses of the witness families."""
    ok = True
    gamma = PatternSet(["123"])
    for n in range(3, N + 1):
        found = {s for s in _one_descent_perms(n) if occ_count(inverse(s), gamma) == 0}
        wits = prop_123_witnesses(n)
        wits_ok = all(
            des(w) == 1
            and all(len(r) < 3 for r in reading_sequences(w))
            and occ_count(inverse(w), gamma) == 0
            for w in wits)
        want = 4 if n % 2 else 5
        good = len(found) == want and found == set(wits) and len(set(wits)) == want and wits_ok
        if report is not None:
            report.append((n, len(found), want, sorted(wits)))
        ok = ok and good
    return ok


# -- log-concavity ---------------------------------------------------------------------

def log_concavity_check(poly: Polynomial | Sequence[int], var: str = "t") -> bool:
    """No internal zeros, c_k^2 >= c_{k-1} c_{k+1}, and unimodal.

    Numeric support for real-rootedness only; this proves nothing about roots.
    """
    c = poly.coeff_list(var) if isinstance(poly, Polynomial) else list(poly)
    nz = [i for i, v in enumerate(c) if v]
    if not nz:
        return True
    c = c[nz[0]:nz[-1] + 1]
    if any(v <= 0 for v in c):
        return False
    if any(c[k] ** 2 < c[k - 1] * c[k + 1] for k in range(1, len(c) - 1)):
        return False
    peak = c.index(max(c))
    return (all(c[i] <= c[i + 1] for i in range(peak))
            and all(c[i] >= c[i + 1] for i in range(peak, len(c) - 1)))


# -- symmetries ------------------------------------------------------------------------

def inverse_stat_identities_check(N: int, report: list | None = None) -> bool:
    """The five inverse-statistic identities under r, c and rc, for 1 <= n <= N."""
    ok = True
    for n in range(1, N + 1):
        bad = [0] * 5
        for p in all_perms(n):
            st = stats(p)
            r, c, rc = (stats(symmetry(p, k)) for k in ("reverse", "complement", "reverse_complement"))
            bad[0] += r.imaj != comb(n, 2) - st.imaj
            bad[1] += rc.imaj != st.icomaj
            bad[2] += not (r.ides == c.ides == n - 1 - st.ides)
            bad[3] += rc.ides != st.ides
            bad[4] += c.ipk != st.ipk
        if report is not None:
            report.append((n, tuple(bad)))
        ok = ok and not any(bad)
    return ok


def _reflect_ides_imaj(poly: Polynomial, n: int) -> Polynomial:
    # t^(n+1) q^C(n,2) A(s, 1/t, 1/q)
    return poly.map_monomials(lambda e: (e[0], n + 1 - e[1], comb(n, 2) - e[2], e[3]))


def transport_identities_check(gamma, N: int, report: list | None = None) -> bool:
    """The five polynomial identities relating Gamma to Gamma^r, Gamma^c, Gamma^rc."""
    gamma = as_pattern_set(gamma)
    images = {k: gamma.map(lambda p, k=k: symmetry(p, k))
              for k in ("reverse", "complement", "reverse_complement")}
    ok = True
    for n in range(1, N + 1):
        A = lambda g, fam: brute_distribution(g, n, fam).poly
        res = (
            A(images["reverse"], "A_ides_imaj") == _reflect_ides_imaj(A(gamma, "A_ides_imaj"), n),
            A(images["reverse_complement"], "A_ides_imaj") == A(gamma, "A_ides_icomaj"),
            A(images["reverse_complement"], "A_ides") == A(gamma, "A_ides"),
            A(images["reverse"], "A_ides")
            == A(images["complement"], "A_ides")
            == A(gamma, "A_ides").map_monomials(lambda e: (e[0], n + 1 - e[1], e[2], e[3])),
            A(images["complement"], "P_ipk") == A(gamma, "P_ipk"),
        )
        if report is not None:
            report.append((n, res))
        ok = ok and all(res)
    return ok


# -- the (c)-variant coefficients ----------------------------------------------------

def coefficient_series_check(jm_max: int = 12, k_max: int = 8, report: list | None = None) -> bool:
    """c, c', d, d', e, e' against the series they are meant to expand.

    c:  2t(1+t)^(jm-1)/(1-t)^(jm+1)    c': 2t(1+t)^(jm)/(1-t)^(jm+2)
    d:  (1+t)^(jm)/(1-t)^(jm+1)        d': (1+t)^(jm+1)/(1-t)^(jm+2)
    e:  4t(1+t)^(jm-2)/(1-t)^(jm+1)    e': 4t(1+t)^(jm-1)/(1-t)^(jm+2)
    """
    tr = (0, k_max, 0, 0)
    t = TruncatedSeries.var("t", tr)
    one = TruncatedSeries.const(1, tr)

    def ser(lead, a, b):
        return lead * (one + t) ** a / (one - t) ** b

    ok = True
    for m in range(2, jm_max + 1):
        for j in range(1, jm_max // m + 1):
            jm = j * m
            pairs = [
                (c_coeff, ser(t.scale(2), jm - 1, jm + 1)),
                (c_prime_coeff, ser(t.scale(2), jm, jm + 2)),
                (d_coeff, ser(one, jm, jm + 1)),
                (d_prime_coeff, ser(one, jm + 1, jm + 2)),
            ]
            if jm >= 2:
                pairs += [(e_coeff, ser(t.scale(4), jm - 2, jm + 1)),
                          (e_prime_coeff, ser(t.scale(4), jm - 1, jm + 2))]
            for fn, s in pairs:
                for k in range(k_max + 1):
                    good = fn(m, j, k) == s.coeff(t=k)
                    if not good and report is not None:
                        report.append((fn.__name__, m, j, k))
                    ok = ok and good
    return ok


# -- brute = spec = closed ---------------------------------------------------------------

def three_way_check(gamma, family: str, N: int, report: list | None = None) -> bool:
    """Brute force, the specialized cluster route and (when a theorem covers
    gamma) the closed form agree for n <= N, at s = 0 and with s symbolic."""
    from .formulas import FAMILY_OF, closed_formula_for, run_formula

    gamma = as_pattern_set(gamma)
    stat = {v: k for k, v in FAMILY_OF.items()}[family]
    ok = True
    for s in (0, None):
        spec = run_formula(f"spec-{stat.replace('_', '-')}", N, s, gamma=gamma)
        hit = closed_formula_for(gamma, family, s)
        closed = run_formula(hit[0], N, s, m=hit[1], a=hit[2]) if hit else None
        for n in range(N + 1):
            brute = brute_distribution(gamma, n, family, s).poly
            routes = ["brute", "spec"]
            good = brute == spec[n]
            if closed is not None:
                routes.append(hit[0])
                good = good and closed[n] == brute
            if report is not None:
                report.append((gamma.spec(), family, "symbolic" if s is None else s, n,
                               "=".join(routes), good))
            ok = ok and good
    return ok
