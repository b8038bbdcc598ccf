"""Closed-form cluster generating functions, the refined cluster-method
specializations, polynomial extraction, and a registry of named theorems.

Every theorem is evaluated the same way: build a series in (s, t, q, x)
truncated at x^N, take the Hadamard sum ``sum_{n<=N} f^{*<n>}`` (or use a
form that already equals that sum), then undo the normalization of the
left-hand side to read off one polynomial per n.

Conventions for the peak statistics: ``u = 4t/(1+t)^2`` and
``z = (1+t)x/(1-t)``; for ides, ``z = x/(1-t)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable

from .cluster import PatternSet, as_pattern_set, cluster_polynomial
from .series import (Polynomial, TruncatedSeries, TruncationError, hadamard_sum, invert,
                     q_binomial, sqrt_one_plus, substitute)

__all__ = [
    "STATS", "FAMILY_OF", "trunc_for", "monotone_cluster_gf", "trans_cluster_gf",
    "brute_cluster_gf", "shift_s", "specialize", "specialize_rhs",
    "extract_A_ides", "extract_A_ides_icomaj", "extract_P_ipk", "extract_P_ilpk",
    "extract", "inverse_u_series", "monotone_idesimaj", "c_coeff", "c_prime_coeff",
    "d_coeff", "d_prime_coeff", "e_coeff", "e_prime_coeff",
    "Formula", "FORMULAS", "run_formula", "closed_formula_for", "gj_plain", "gj_q",
]

STATS = ("ides", "ides_icomaj", "ipk", "ilpk")
FAMILY_OF = {"ides": "A_ides", "ides_icomaj": "A_ides_icomaj", "ipk": "P_ipk", "ilpk": "P_ilpk"}


# -- small series helpers --------------------------------------------------------

def _c(c, tr) -> TruncatedSeries:
    return TruncatedSeries.const(c, tr)


def _v(name: str, tr, k: int = 1) -> TruncatedSeries:
    return TruncatedSeries.var(name, tr, k)


def _mark(tr, s) -> TruncatedSeries:
    """The value standing in for the mark variable (a series or a number)."""
    if s is None:
        return _v("s", tr)
    if isinstance(s, TruncatedSeries):
        return TruncatedSeries(s.coeffs, tr)
    return _c(s, tr)


def _powsum(z: TruncatedSeries, exponents) -> TruncatedSeries:
    out = _c(0, z.trunc)
    for e in exponents:
        out = out + z ** e
    return out


def _z(stat: str, tr) -> TruncatedSeries:
    t, x = _v("t", tr), _v("x", tr)
    if stat in ("ides", "ides_icomaj"):
        return x / (1 - t)
    return x * (1 + t) / (1 - t)


def _u(tr) -> TruncatedSeries:
    t = _v("t", tr)
    return t.scale(4) / (1 + t) ** 2


def _t_products(tr, k: int) -> TruncatedSeries:
    """``prod_{i=0}^{k} (1 - t q^i)``."""
    out = _c(1, tr)
    for i in range(k + 1):
        out = out * (1 - TruncatedSeries({(0, 1, i, 0): 1}, tr))
    return out


def trunc_for(stat: str, N: int, symbolic_s: bool) -> tuple[int, int, int, int]:
    """Truncation box that leaves room for a tail check on every extracted n <= N."""
    Ts = N if symbolic_s else 0
    if stat == "ides":
        return (Ts, N + 2, 0, N)
    if stat == "ides_icomaj":
        return (Ts, N + 2, comb(N, 2), N)
    if stat == "ipk":
        return (Ts, (N + 1) // 2 + 2, 0, N)
    if stat == "ilpk":
        return (Ts, N // 2 + 2, 0, N)
    raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")


# -- cluster generating functions ---------------------------------------------

_MONO_TAGS = ("none", "ides", "ides_icomaj", "ipk", "ilpk")


def monotone_cluster_gf(m: int, tag: str, trunc, decreasing: bool = False, s=None) -> TruncatedSeries:
    """``s t^e x^m / (1 - s sum_{l=1}^{m-1} x^l)`` for the pattern 12...m (or m...21).

    ``e`` is 1 for ides, (ides, icomaj) and ipk, and for ilpk it is 0 on
    12...m but 1 on m...21, whose clusters have exactly one left peak.
    """
    if m < 2:
        raise ValueError("monotone patterns need m >= 2")
    if tag not in _MONO_TAGS:
        raise ValueError(f"unsupported tag {tag!r} for monotone patterns")
    if decreasing and tag in ("ides", "ides_icomaj"):
        raise ValueError(f"tag {tag!r} has no closed form here for m...21; use the reverse symmetry")
    tr = trunc
    sv, x = _mark(tr, s), _v("x", tr)
    e = 0 if tag == "none" or (tag == "ilpk" and not decreasing) else 1
    num = sv * _v("t", tr, e) * x ** m if e else sv * x ** m
    return num / (1 - sv * _powsum(x, range(1, m)))


def trans_cluster_gf(m: int, a: int, tag: str, trunc, s=None) -> TruncatedSeries:
    """Cluster GF of 12...(a-1)(a+1)a(a+2)...m, which depends on a only through
    ``i = min(a, m-a)``."""
    if m < 5 or not 2 <= a <= m - 2:
        raise ValueError(f"transpositional patterns need m >= 5 and 2 <= a <= m-2, got m={m}, a={a}")
    tr = trunc
    i = min(a, m - a)
    sv, t, x = _mark(tr, s), _v("t", tr), _v("x", tr)
    if tag in ("ides", "ipk"):
        lead, step = t * t, t
    elif tag == "ilpk":
        lead, step = t, t
    elif tag == "none":
        lead, step = _c(1, tr), _c(1, tr)
    else:
        raise ValueError(f"unsupported tag {tag!r} for transpositional patterns")
    tail = _powsum(x, [m - l for l in range(1, i + 1)])
    return sv * lead * x ** m / (1 - sv * step * tail)


def brute_cluster_gf(gamma, tag: str, trunc) -> TruncatedSeries:
    """``sum_k R_k(s, t, q) x^k`` from enumerated clusters (no closed form)."""
    gamma = as_pattern_set(gamma)
    terms: dict = {}
    for k in range(gamma.min_len, trunc[3] + 1):
        for (ks, te, qe, _), c in cluster_polynomial(gamma, k, tag).terms.items():
            terms[(ks, te, qe, k)] = c
    return TruncatedSeries(terms, trunc)


def shift_s(f: TruncatedSeries, s=None, tr=None) -> TruncatedSeries:
    """Replace the mark variable by ``s - 1`` (symbolic) or ``s0 - 1`` (number).

    Exact because every cluster series has s-degree at most its x-degree;
    the input box must keep T_s >= T_x for that to be visible.
    """
    if f.trunc[0] < f.trunc[3]:
        raise TruncationError("s-truncation below x-truncation; the shift s -> s-1 would be inexact")
    tr = tr or f.trunc
    out: dict = {}
    for (es, et, eq, ex), c in f.coeffs.items():
        if s is None:
            for j in range(es + 1):
                key = (j, et, eq, ex)
                out[key] = out.get(key, 0) + c * comb(es, j) * (-1) ** (es - j)
        else:
            key = (0, et, eq, ex)
            out[key] = out.get(key, 0) + c * (s - 1) ** es
    return TruncatedSeries(out, tr)


# -- the four specializations ----------------------------------------------------

def specialize_rhs(stat: str, shifted: TruncatedSeries) -> TruncatedSeries:
    """The series whose Hadamard powers are summed, given ``sum_k R_k(s-1,t,q) x^k``."""
    tr = shifted.trunc
    t, x = _v("t", tr), _v("x", tr)
    if stat == "ides_icomaj":
        q = _v("q", tr)
        f = t * x / ((1 - t) * (1 - t * q))
        for k in range(2, tr[3] + 1):
            part = shifted.slice("x", k)
            if part.is_zero():
                continue
            f = f + TruncatedSeries(part.coeffs, tr) * x ** k / _t_products(tr, k)
        return f
    if stat == "ides":
        return t * x / (1 - t) ** 2 + substitute(shifted, "x", _z(stat, tr)) / (1 - t)
    if stat in ("ipk", "ilpk"):
        inner = substitute(substitute(shifted, "t", _u(tr)), "x", _z(stat, tr))
        if stat == "ipk":
            return t.scale(2) * x / (1 - t) ** 2 + inner * (1 + t) / (1 - t).scale(2)
        return (_z(stat, tr) + inner) / (1 - t)
    raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")


def specialize(stat: str, source, N: int, s=None) -> list[Polynomial]:
    """Distribution polynomials for n = 0..N from refined cluster polynomials.

    ``source`` is a pattern set (clusters are enumerated) or a callable
    ``trunc -> cluster series`` such as a closed form.
    """
    tr = trunc_for(stat, N, s is None)
    tag = stat
    wide = (N, tr[1], tr[2], N)
    if isinstance(source, (str, PatternSet)) or (isinstance(source, (list, tuple)) and source):
        raw = brute_cluster_gf(source, tag, wide)
    elif callable(source):
        raw = source(wide)
    else:
        raise TypeError("source must be a pattern set or a callable trunc -> series")
    shifted = shift_s(raw, s, tr)
    S = hadamard_sum(specialize_rhs(stat, shifted), N)
    return extract(stat, S, N)


# -- extraction -------------------------------------------------------------------

def _need(S: TruncatedSeries, n: int, t_needed: int):
    if S.trunc[3] < n:
        raise TruncationError(f"x-truncation {S.trunc[3]} too small to extract n={n}")
    if S.trunc[1] < t_needed:
        raise TruncationError(f"t-truncation {S.trunc[1]} too small to extract n={n}")


def _poly_of(sl: TruncatedSeries, max_t: int, n: int) -> Polynomial:
    terms = {}
    for e, c in sl.coeffs.items():
        if e[1] > max_t:
            raise ValueError(f"tail not cleared at n={n}: t^{e[1]} coefficient {c}")
        terms[e] = c
    return Polynomial(terms)


def extract_A_ides(S: TruncatedSeries, n: int) -> Polynomial:
    """Read A_n from ``sum A_n/(1-t)^(n+1) x^n``; coefficients above t^n must vanish."""
    _need(S, n, n + 1)
    sl = S.slice("x", n)
    tr = sl.trunc
    return _poly_of(sl * (1 - _v("t", tr)) ** (n + 1), n, n)


def extract_A_ides_icomaj(S: TruncatedSeries, n: int) -> Polynomial:
    """Read A_n from ``sum A_n / prod_{i=0}^n (1 - t q^i) x^n``."""
    _need(S, n, n + 1)
    sl = S.slice("x", n)
    return _poly_of(sl * _t_products(sl.trunc, n), n, n)


def inverse_u_series(tr) -> TruncatedSeries:
    """``v = 2t^{-1}(1 - sqrt(1-t)) - 1``, the compositional inverse of u.

    The square root is taken one t-degree deeper because of the division by t.
    """
    T = tr[1]
    deep = (0, T + 1, 0, 0)
    root = sqrt_one_plus(-_v("t", deep))
    v = (1 - root).shift("t", -1).scale(2) - 1
    return TruncatedSeries(v.coeffs, tr)


def _undo_peak_normalization(S: TruncatedSeries) -> tuple[TruncatedSeries, TruncatedSeries]:
    tr = S.trunc
    t, x = _v("t", tr), _v("x", tr)
    S1 = substitute(S, "x", x * (1 - t) / (1 + t))
    v = inverse_u_series(S1.trunc)
    return substitute(S1, "t", v), v


def _peak_polys(R: TruncatedSeries, N: int, bound: Callable[[int], int]) -> list[Polynomial]:
    if R.trunc[1] <= bound(N):
        raise TruncationError(f"t-truncation {R.trunc[1]} leaves no tail to check at n={N}")
    if R.trunc[3] < N:
        raise TruncationError(f"x-truncation {R.trunc[3]} too small to extract n={N}")
    return [_poly_of(R.slice("x", n), bound(n), n) for n in range(N + 1)]


def extract_P_ipk(S: TruncatedSeries, N: int) -> list[Polynomial]:
    """P^ipk_n for n = 0..N from the Hadamard sum in raw (t, x).

    ``sum_{n>=1} P_n x^n = 2(1-v)/(1+v) * S|_{x->(1-t)x/(1+t), t->v} - 2/(1+v)``.
    """
    S2, v = _undo_peak_normalization(S)
    R = (1 - v).scale(2) / (1 + v) * S2 - _c(2, v.trunc) / (1 + v)
    polys = _peak_polys(R, N, lambda n: (n + 1) // 2)
    if polys[0]:
        raise ValueError(f"constant term {polys[0]} should vanish for ipk")
    polys[0] = Polynomial.const(1)
    return polys


def extract_P_ilpk(S: TruncatedSeries, N: int) -> list[Polynomial]:
    """P^ilpk_n for n = 0..N: ``sum P_n x^n = (1 - v) S|_{x->(1-t)x/(1+t), t->v}``."""
    S2, v = _undo_peak_normalization(S)
    return _peak_polys((1 - v) * S2, N, lambda n: n // 2)


def extract(stat: str, S: TruncatedSeries, N: int) -> list[Polynomial]:
    if stat == "ides":
        return [extract_A_ides(S, n) for n in range(N + 1)]
    if stat == "ides_icomaj":
        return [extract_A_ides_icomaj(S, n) for n in range(N + 1)]
    if stat == "ipk":
        return extract_P_ipk(S, N)
    if stat == "ilpk":
        return extract_P_ilpk(S, N)
    raise ValueError(f"unknown statistic {stat!r}; expected one of {STATS}")


# -- coefficient formulas of the (c) variants -------------------------------------

def c_coeff(m: int, j: int, k: int) -> int:
    return 2 * sum(comb(l + j * m - 1, l - 1) * comb(j * m - 1, k - l) for l in range(1, k + 1))


def c_prime_coeff(m: int, j: int, k: int) -> int:
    return 2 * sum(comb(l + j * m, l - 1) * comb(j * m, k - l) for l in range(1, k + 1))


def d_coeff(m: int, j: int, k: int) -> int:
    return sum(comb(l + j * m, l) * comb(j * m, k - l) for l in range(k + 1))


def d_prime_coeff(m: int, j: int, k: int) -> int:
    return sum(comb(l + j * m + 1, l) * comb(j * m + 1, k - l) for l in range(k + 1))


def e_coeff(m: int, j: int, k: int) -> int:
    return 4 * sum(comb(l + j * m - 1, l - 1) * comb(j * m - 2, k - l) for l in range(1, k + 1))


def e_prime_coeff(m: int, j: int, k: int) -> int:
    return 4 * sum(comb(l + j * m, l - 1) * comb(j * m - 1, k - l) for l in range(1, k + 1))


def _per_t_power(tr, denominators: Callable[[int], dict[int, object]], k0: int,
                 head: TruncatedSeries | None = None) -> TruncatedSeries:
    """``head + sum_{k>=k0} [D_k(x)]^{-1} t^k`` with ``D_k`` given by its x-coefficients."""
    xt = (tr[0], 0, tr[2], tr[3])
    out: dict = dict(head.coeffs) if head is not None else {}
    for k in range(k0, tr[1] + 1):
        D = TruncatedSeries({(0, 0, 0, e): c for e, c in denominators(k).items()}, xt)
        for (es, _, eq, ex), c in invert(D).coeffs.items():
            key = (es, k, eq, ex)
            out[key] = out.get(key, 0) + c
    return TruncatedSeries(out, tr)


def _jm_terms(m: int, top: int, lead: dict, fn, fn_prime) -> dict:
    out = dict(lead)
    j = 1
    while j * m <= top:
        out[j * m] = out.get(j * m, 0) + fn(j)
        if j * m + 1 <= top:
            out[j * m + 1] = out.get(j * m + 1, 0) - fn_prime(j)
        j += 1
    return out


# -- theorem builders ------------------------------------------------------------
# Each builder takes (trunc, s, params) and returns either the series f whose
# Hadamard powers are summed ("hadamard") or the summed series itself ("direct").

def _mono_ides_a(tr, s, m):
    t, x, z = _v("t", tr), _v("x", tr), _z("ides", tr)
    sm = _mark(tr, s) - 1
    return t * x / (1 - t) ** 2 + sm * t * z ** m / ((1 - t) * (1 - sm * _powsum(z, range(1, m))))


def _mono_ides_b(tr, s, m):
    t, z = _v("t", tr), _z("ides", tr)
    return t * z * (1 - z ** (m - 1)) / ((1 - t) * (1 - z ** m))


def _mono_ides_c(tr, s, m):
    top = tr[3]

    def den(k):
        out: dict = {}
        j = 0
        while j * m <= top:
            out[j * m] = out.get(j * m, 0) + comb(k + j * m - 1, k - 1)
            if j * m + 1 <= top:
                out[j * m + 1] = out.get(j * m + 1, 0) - comb(k + j * m, k - 1)
            j += 1
        return out
    return _per_t_power(tr, den, 1, head=_c(1, tr))


def _mono_ipk_a(tr, s, m):
    t, x, z = _v("t", tr), _v("x", tr), _z("ipk", tr)
    sm = _mark(tr, s) - 1
    return (t.scale(2) * x / (1 - t) ** 2
            + t.scale(2) * sm * z ** m / ((1 - t * t) * (1 - sm * _powsum(z, range(1, m)))))


def _mono_ipk_b(tr, s, m):
    t, z = _v("t", tr), _z("ipk", tr)
    return t.scale(2) * z * (1 - z ** (m - 1)) / ((1 - t * t) * (1 - z ** m))


def _mono_ipk_c(tr, s, m):
    top = tr[3]
    den = lambda k: _jm_terms(m, top, {0: 1, 1: -2 * k},
                              lambda j: c_coeff(m, j, k), lambda j: c_prime_coeff(m, j, k))
    return _per_t_power(tr, den, 1, head=_c(1, tr))


def _mono_ilpk_a(tr, s, m):
    t, z = _v("t", tr), _z("ilpk", tr)
    sm = _mark(tr, s) - 1
    return z / (1 - t) + sm * z ** m / ((1 - t) * (1 - sm * _powsum(z, range(1, m))))


def _mono_ilpk_b(tr, s, m):
    t, z = _v("t", tr), _z("ilpk", tr)
    return z * (1 - z ** (m - 1)) / ((1 - t) * (1 - z ** m))


def _mono_ilpk_c(tr, s, m):
    top = tr[3]
    den = lambda k: _jm_terms(m, top, {0: d_coeff(m, 0, k), 1: -d_prime_coeff(m, 0, k)},
                              lambda j: d_coeff(m, j, k), lambda j: d_prime_coeff(m, j, k))
    return _per_t_power(tr, den, 0)


def _dec_ilpk_a(tr, s, m):
    t, z = _v("t", tr), _z("ilpk", tr)
    sm = _mark(tr, s) - 1
    return (z / (1 - t)
            + t.scale(4) * sm * z ** m / ((1 - t * t) * (1 + t) * (1 - sm * _powsum(z, range(1, m)))))


def _dec_ilpk_b(tr, s, m):
    t, z = _v("t", tr), _z("ilpk", tr)
    num = (1 + t) ** 2 * z - t.scale(4) * z ** m - (1 - t) ** 2 * z ** (m + 1)
    return num / ((1 - t * t) * (1 + t) * (1 - z ** m))


def _dec_ilpk_c(tr, s, m):
    top = tr[3]
    head = TruncatedSeries.geometric("x", tr)
    den = lambda k: _jm_terms(m, top, {0: 1, 1: -(2 * k + 1)},
                              lambda j: e_coeff(m, j, k), lambda j: e_prime_coeff(m, j, k))
    return _per_t_power(tr, den, 1, head=head)


def _trans_sum(z, m, a):
    i = min(a, m - a)
    return _powsum(z, [m - l for l in range(1, i + 1)])


def _trans_ides_a(tr, s, m, a):
    t, x, z = _v("t", tr), _v("x", tr), _z("ides", tr)
    sm = _mark(tr, s) - 1
    return t * x / (1 - t) ** 2 + sm * t * t * z ** m / ((1 - t) * (1 - sm * t * _trans_sum(z, m, a)))


def _trans_ides_b(tr, s, m, a):
    t, x, z = _v("t", tr), _v("x", tr), _z("ides", tr)
    return t * x / (1 - t) ** 2 - t * t * z ** m / ((1 - t) * (1 + t * _trans_sum(z, m, a)))


def _trans_ipk_a(tr, s, m, a):
    t, x, z, u = _v("t", tr), _v("x", tr), _z("ipk", tr), _u(tr)
    sm = _mark(tr, s) - 1
    return (t.scale(2) * x / (1 - t) ** 2
            + (1 + t) * sm * u * u * z ** m / ((1 - t).scale(2) * (1 - sm * u * _trans_sum(z, m, a))))


def _trans_ipk_b(tr, s, m, a):
    t, x, z, u = _v("t", tr), _v("x", tr), _z("ipk", tr), _u(tr)
    return (t.scale(2) * x / (1 - t) ** 2
            - (1 + t) * u * u * z ** m / ((1 - t).scale(2) * (1 + u * _trans_sum(z, m, a))))


def _trans_ilpk_a(tr, s, m, a):
    t, z, u = _v("t", tr), _z("ilpk", tr), _u(tr)
    sm = _mark(tr, s) - 1
    return z / (1 - t) + sm * u * z ** m / ((1 - t) * (1 - sm * u * _trans_sum(z, m, a)))


def _trans_ilpk_b(tr, s, m, a):
    t, z, u = _v("t", tr), _z("ilpk", tr), _u(tr)
    return z / (1 - t) - u * z ** m / ((1 - t) * (1 + u * _trans_sum(z, m, a)))


def _mono_idesimaj_a(tr, s, m):
    t, x, q = _v("t", tr), _v("x", tr), _v("q", tr)
    f = t * x / ((1 - t) * (1 - t * q))
    j = 1
    while j * m <= tr[3]:
        f = f - t * x ** (j * m) / _t_products(tr, j * m)
        if j * m + 1 <= tr[3]:
            f = f + t * x ** (j * m + 1) / _t_products(tr, j * m + 1)
        j += 1
    return f


def _mono_idesimaj_b(tr, s, m):
    top = tr[3]
    xq = (0, 0, tr[2], top)

    def den_series(k):
        out = TruncatedSeries({}, xq)
        j = 0
        while j * m <= top:
            out = out + TruncatedSeries({(0, 0, e[2], j * m): c
                                         for e, c in q_binomial(k + j * m - 1, k - 1).terms.items()}, xq)
            if j * m + 1 <= top:
                out = out - TruncatedSeries({(0, 0, e[2], j * m + 1): c
                                             for e, c in q_binomial(k + j * m, k - 1).terms.items()}, xq)
            j += 1
        return out
    out = {(0, 0, 0, 0): 1}
    for k in range(1, tr[1] + 1):
        for (es, _, eq, ex), c in invert(den_series(k)).coeffs.items():
            out[(es, k, eq, ex)] = c
    return TruncatedSeries(out, tr)


# -- registry ---------------------------------------------------------------------

@dataclass(frozen=True)
class Formula:
    """A named theorem: how to build its series and which statistic it counts."""

    name: str
    stat: str
    params: str          # "m", "m,a" or "gamma"
    kind: str            # "hadamard" or "direct"
    any_s: bool          # False for forms that only hold at s = 0
    builder: Callable
    decreasing: bool = False

    def check_params(self, m: int | None, a: int | None):
        if self.params in ("m", "m,a") and (m is None or m < 2):
            raise ValueError(f"{self.name} needs m >= 2")
        if self.params == "m,a" and (a is None or m < 5 or not 2 <= a <= m - 2):
            raise ValueError(f"{self.name} needs m >= 5 and 2 <= a <= m-2")

    def pattern(self, m: int | None = None, a: int | None = None, gamma=None) -> PatternSet:
        from .cluster import monotone, transpositional
        if self.params == "gamma":
            return as_pattern_set(gamma)
        if self.params == "m,a":
            return PatternSet([transpositional(m, a)])
        return PatternSet([monotone(m, self.decreasing)])

    def series(self, N: int, s=0, m=None, a=None, gamma=None) -> TruncatedSeries:
        if s != 0 and not self.any_s:
            raise ValueError(f"{self.name} only holds at s = 0")
        if self.params != "gamma":
            self.check_params(m, a)
        tr = trunc_for(self.stat, N, s is None)
        args = {"m": (m,), "m,a": (m, a), "gamma": (gamma,)}[self.params]
        built = self.builder(tr, s, *args)
        return hadamard_sum(built, N) if self.kind == "hadamard" else built

    def run(self, N: int, s=0, m=None, a=None, gamma=None) -> list[Polynomial]:
        if self.stat == "perm":
            return self.builder(gamma, N, s)
        return extract(self.stat, self.series(N, s, m, a, gamma), N)


def _spec_builder(stat):
    def build(tr, s, gamma):
        wide = (tr[3], tr[1], tr[2], tr[3])
        raw = brute_cluster_gf(gamma, stat, wide)
        return specialize_rhs(stat, shift_s(raw, s, tr))
    return build


FORMULAS: dict[str, Formula] = {}


def _register(name, stat, params, kind, any_s, builder, decreasing=False):
    FORMULAS[name] = Formula(name, stat, params, kind, any_s, builder, decreasing)


for _stat in STATS:
    _register(f"spec-{_stat.replace('_', '-')}", _stat, "gamma", "hadamard", True, _spec_builder(_stat))
_register("mono-idesimaj-a", "ides_icomaj", "m", "hadamard", False, _mono_idesimaj_a)
_register("mono-idesimaj-b", "ides_icomaj", "m", "direct", False, _mono_idesimaj_b)
_register("mono-ides-a", "ides", "m", "hadamard", True, _mono_ides_a)
_register("mono-ides-b", "ides", "m", "hadamard", False, _mono_ides_b)
_register("mono-ides-c", "ides", "m", "direct", False, _mono_ides_c)
_register("mono-ipk-a", "ipk", "m", "hadamard", True, _mono_ipk_a)
_register("mono-ipk-b", "ipk", "m", "hadamard", False, _mono_ipk_b)
_register("mono-ipk-c", "ipk", "m", "direct", False, _mono_ipk_c)
_register("mono-ilpk-a", "ilpk", "m", "hadamard", True, _mono_ilpk_a)
_register("mono-ilpk-b", "ilpk", "m", "hadamard", False, _mono_ilpk_b)
_register("mono-ilpk-c", "ilpk", "m", "direct", False, _mono_ilpk_c)
_register("dec-ilpk-a", "ilpk", "m", "hadamard", True, _dec_ilpk_a, decreasing=True)
_register("dec-ilpk-b", "ilpk", "m", "hadamard", False, _dec_ilpk_b, decreasing=True)
_register("dec-ilpk-c", "ilpk", "m", "direct", False, _dec_ilpk_c, decreasing=True)
_register("trans-ides-a", "ides", "m,a", "hadamard", True, _trans_ides_a)
_register("trans-ides-b", "ides", "m,a", "hadamard", False, _trans_ides_b)
_register("trans-ipk-a", "ipk", "m,a", "hadamard", True, _trans_ipk_a)
_register("trans-ipk-b", "ipk", "m,a", "hadamard", False, _trans_ipk_b)
_register("trans-ilpk-a", "ilpk", "m,a", "hadamard", True, _trans_ilpk_a)
_register("trans-ilpk-b", "ilpk", "m,a", "hadamard", False, _trans_ilpk_b)


def run_formula(name: str, N: int, s=0, m=None, a=None, gamma=None) -> list[Polynomial]:
    key = name.lower()
    if key not in FORMULAS:
        raise ValueError(f"unknown formula {name!r}; known: {', '.join(sorted(FORMULAS))}")
    return FORMULAS[key].run(N, s, m, a, gamma)


def monotone_idesimaj(m: int, N: int, variant: str = "b") -> list[Polynomial]:
    """A^(ides,imaj)_{12...m,n}(t, q) for n <= N.

    The theorem computes the (ides, icomaj) polynomials; 12...m is fixed by
    reverse-complement, which carries one family onto the other.
    """
    if variant not in ("a", "b"):
        raise ValueError("variant must be 'a' or 'b'")
    return run_formula(f"mono-idesimaj-{variant}", N, 0, m=m)


# -- Goulden-Jackson recurrences ---------------------------------------------------

def _gj(gamma, N: int, s, q: bool) -> list[Polynomial]:
    gamma = as_pattern_set(gamma)
    tag = "inv" if q else "none"
    S = Polynomial.var("s")
    d: list[Polynomial] = [Polynomial.const(1), Polynomial.const(-1)]
    for k in range(2, N + 1):
        r = cluster_polynomial(gamma, k, tag)
        shifted = r.compose(s=S - 1) if s is None else r.evaluate(s=s - 1)
        d.append(-shifted)
    binom = (lambda n, k: q_binomial(n, k)) if q else (lambda n, k: Polynomial.const(comb(n, k)))
    F: list[Polynomial] = [Polynomial.const(1)]
    for n in range(1, N + 1):
        acc = Polynomial()
        for k in range(1, n + 1):
            if d[k]:
                acc = acc - binom(n, k) * d[k] * F[n - k]
        F.append(acc)
    return F


def gj_plain(gamma, N: int, s=None) -> list[Polynomial]:
    """``sum_{pi in S_n} s^occ`` for n <= N, from ``F = (1 - x - R(s-1, x))^{-1}``.

    Coefficients are kept as n! a_n, so the exponential normalization turns
    into binomial convolution.
    """
    return _gj(gamma, N, s, q=False)


def gj_q(gamma, N: int, s=None) -> list[Polynomial]:
    """``sum_{pi in S_n} s^occ q^inv``; the q-exponential version with q-binomials."""
    return _gj(gamma, N, s, q=True)


_register("gj-perm", "perm", "gamma", "direct", True, lambda gamma, N, s: gj_plain(gamma, N, s))
_register("gj-q", "perm", "gamma", "direct", True, lambda gamma, N, s: gj_q(gamma, N, s))


def closed_formula_for(gamma, family: str, s=0, variant: str | None = None):
    """``(name, m, a)`` of the theorem covering a single monotone or
    transpositional pattern, or None when no closed form applies."""
    from .cluster import monotone, transpositional

    stat = {v: k for k, v in FAMILY_OF.items()}.get(family)
    if stat is None or stat == "ides_icomaj":
        return None
    gamma = as_pattern_set(gamma)
    if len(gamma) != 1:
        return None
    p = tuple(gamma.patterns[0])
    m = len(p)
    variant = variant or ("b" if s == 0 else "a")
    if p == tuple(monotone(m)):
        name, a = f"mono-{stat}-{variant}", None
    elif p == tuple(monotone(m, decreasing=True)) and stat == "ilpk":
        name, a = f"dec-ilpk-{variant}", None
    else:
        hits = [a for a in range(2, m - 1) if m >= 5 and p == tuple(transpositional(m, a))]
        if not hits:
            return None
        name, a = f"trans-{stat}-{variant}", hits[0]
    if name not in FORMULAS or (s != 0 and not FORMULAS[name].any_s):
        return None
    return name, m, a
