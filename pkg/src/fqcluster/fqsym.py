"""Truncated Malvenuto-Reutenauer algebra (FQSym) in the G basis.

Elements are finite sums ``sum c_pi G_pi`` with coefficients that are integer
polynomials in s (dense lists, see :mod:`fqcluster.spoly`), cut off above a
degree cap N.  The product is shifted concatenation.  Maps out of FQSym:

* ``rho`` to QSym in the fundamental basis, ``G_pi -> F_Comp(pi^-1)``;
* five homomorphisms into truncated power series (``apply_hom``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial
from typing import Mapping, Sequence

from . import spoly
from .cluster import PatternSet, as_pattern_set, cluster_carriers, cluster_counts, occ_count
from .perm import (Composition, Permutation, descent_composition, descent_set,
                   format_perm, inv_count, inverse, iter_shifted_concats, shuffles, stats)
from .series import Polynomial, TruncatedSeries, hadamard_t, invert, mul, q_binomial, q_factorial

__all__ = [
    "FQSymElement", "QSymElement", "g_product", "f_bar", "r_bar",
    "verify_cluster_identity", "rho", "qsym_product", "ribbon",
    "apply_hom", "hom_image", "hom_is_multiplicative_check", "HOMS",
    "f_bar_from_clusters", "fqsym_distribution",
]

HOMS = ("Psi", "Psi_q", "Psi_ides_icomaj", "Psi_ipk", "Psi_ilpk")


def _clean(terms: Mapping, cap: int) -> dict:
    out = {}
    for k, c in terms.items():
        c = spoly.trim(list(c))
        if c and len(k) <= cap:
            out[k] = c
    return out


class FQSymElement:
    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Sequence[int], Sequence[int]], cap: int):
        self.cap = cap
        self.terms: dict[Permutation, list[int]] = {
            Permutation._trusted(k): c for k, c in _clean(terms, cap).items()}

    @classmethod
    def one(cls, cap: int) -> "FQSymElement":
        return cls({(): [1]}, cap)

    @classmethod
    def basis(cls, pi: Sequence[int], cap: int, coeff: Sequence[int] = (1,)) -> "FQSymElement":
        return cls({Permutation(pi): list(coeff)}, cap)

    def __add__(self, other: "FQSymElement") -> "FQSymElement":
        cap = min(self.cap, other.cap)
        out = {k: list(c) for k, c in self.terms.items()}
        for k, c in other.terms.items():
            spoly.add_into(out.setdefault(k, []), c)
        return FQSymElement(out, cap)

    def __neg__(self) -> "FQSymElement":
        return FQSymElement({k: [-a for a in c] for k, c in self.terms.items()}, self.cap)

    def __sub__(self, other: "FQSymElement") -> "FQSymElement":
        return self + (-other)

    def __mul__(self, other: "FQSymElement") -> "FQSymElement":
        return g_product(self, other)

    def __eq__(self, other):
        if not isinstance(other, FQSymElement):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def coeff(self, pi: Sequence[int]) -> list[int]:
        if len(pi) > self.cap:
            raise ValueError(f"degree {len(pi)} exceeds cap {self.cap}")
        return list(self.terms.get(tuple(pi), []))

    def homogeneous(self, n: int) -> "FQSymElement":
        return FQSymElement({k: c for k, c in self.terms.items() if len(k) == n}, self.cap)

    def dump(self) -> str:
        """One line per term: ``coeff * G[one-line]``, by degree then lex."""
        lines = []
        for k in sorted(self.terms, key=lambda p: (len(p), tuple(p))):
            lines.append(f"{spoly.to_text(self.terms[k])} * G[{format_perm(k) or 'e'}]")
        return "\n".join(lines)

    def __repr__(self):
        return f"FQSymElement(<{len(self.terms)} terms>, cap={self.cap})"


def g_product(f: FQSymElement, g: FQSymElement) -> FQSymElement:
    cap = min(f.cap, g.cap)
    out: dict = {}
    for a, ca in f.terms.items():
        room = cap - len(a)
        if room < 0:
            continue
        for b, cb in g.terms.items():
            if len(b) > room:
                continue
            c = spoly.mul(ca, cb)
            for tau in iter_shifted_concats(a, b):
                acc = out.get(tau)
                if acc is None:
                    out[tau] = list(c)
                else:
                    spoly.add_into(acc, c)
    return FQSymElement(out, cap)


def f_bar(gamma, cap: int) -> FQSymElement:
    """``sum_pi G_pi s^occ(pi)`` over all pi of length <= cap."""
    gamma = as_pattern_set(gamma)
    terms = {}
    for n in range(cap + 1):
        for pi in permutations(range(1, n + 1)):
            k = occ_count(pi, gamma)
            c = [0] * (k + 1)
            c[k] = 1
            terms[pi] = c
    return FQSymElement(terms, cap)


def r_bar(gamma, cap: int, shift: bool = False) -> FQSymElement:
    """``sum_pi G_pi sum_c s^mk(c)``; with ``shift`` every s becomes s - 1."""
    gamma = as_pattern_set(gamma)
    terms = {}
    for n in range(gamma.min_len, cap + 1):
        for pi in cluster_carriers(n, gamma):
            counts = cluster_counts(pi, gamma)
            terms[pi] = spoly.shift_minus_one(counts) if shift else counts
    return FQSymElement(terms, cap)


def verify_cluster_identity(gamma, cap: int = 7, report: list | None = None) -> bool:
    """Check ``(1 - G_1 - R(s-1)) * F(s) = 1`` on every basis element up to ``cap``.

    ``report`` (if given) receives ``(degree, basis elements checked, mismatches)``.
    """
    left = FQSymElement.one(cap) - FQSymElement.basis((1,), cap) - r_bar(gamma, cap, shift=True)
    prod = g_product(left, f_bar(gamma, cap))
    ok = True
    for n in range(cap + 1):
        bad = 0
        checked = 0
        for pi in permutations(range(1, n + 1)):
            checked += 1
            want = [1] if n == 0 else []
            if prod.terms.get(pi, []) != want:
                bad += 1
        if report is not None:
            report.append((n, checked, bad))
        ok = ok and bad == 0
    return ok



@lru_cache(maxsize=32)
def _f_bar_solved(gamma: PatternSet, cap: int) -> FQSymElement:
    step = FQSymElement.basis((1,), cap) + r_bar(gamma, cap, shift=True)
    acc = term = FQSymElement.one(cap)
    for _ in range(cap):
        term = g_product(step, term)
        acc = acc + term
    return acc


def f_bar_from_clusters(gamma, cap: int) -> FQSymElement:
    """``F(s)`` computed as ``sum_k (G_1 + R(s-1))^k``, never counting occurrences."""
    return _f_bar_solved(as_pattern_set(gamma), cap)


def fqsym_distribution(gamma, n: int, family: str, s: int | None = None) -> Polynomial:
    """A distribution polynomial read off the cluster-solved ``F(s)``."""
    from .distributions import family_monomial

    if n == 0:
        return Polynomial.const(1)
    F = f_bar_from_clusters(gamma, n)
    terms: dict = {}
    for pi, c in F.terms.items():
        if len(pi) != n:
            continue
        st = stats(pi)
        te, qe = family_monomial(family, n, st.ides, st.imaj, st.ipk, st.ilpk, st.inv)
        for k, ck in enumerate(c):
            if not ck:
                continue
            key, w = ((k, te, qe, 0), ck) if s is None else ((0, te, qe, 0), ck * s ** k)
            terms[key] = terms.get(key, 0) + w
    return Polynomial(terms)

# -- QSym -----------------------------------------------------------------------

class QSymElement:
    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[Sequence[int], Sequence[int]], cap: int):
        self.cap = cap
        self.terms: dict[Composition, list[int]] = {
            Composition(k): c for k, c in _clean(terms, 10 ** 9).items() if sum(k) <= cap}

    @classmethod
    def fundamental(cls, L: Sequence[int], cap: int) -> "QSymElement":
        return cls({tuple(L): [1]}, cap)

    def __eq__(self, other):
        if not isinstance(other, QSymElement):
            return NotImplemented
        return self.cap == other.cap and self.terms == other.terms

    def __add__(self, other: "QSymElement") -> "QSymElement":
        out = {k: list(c) for k, c in self.terms.items()}
        for k, c in other.terms.items():
            spoly.add_into(out.setdefault(k, []), c)
        return QSymElement(out, min(self.cap, other.cap))

    def __mul__(self, other: "QSymElement") -> "QSymElement":
        return qsym_product(self, other)

    def __repr__(self):
        body = " + ".join(f"({spoly.to_text(c)})*F{tuple(k)}" for k, c in sorted(
            self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(kv[0]))))
        return f"QSymElement({body or '0'})"


def rho(f: FQSymElement) -> QSymElement:
    out: dict = {}
    for pi, c in f.terms.items():
        spoly.add_into(out.setdefault(descent_composition(inverse(pi)), []), c)
    return QSymElement(out, f.cap)


def canonical_rep(L: Sequence[int], offset: int = 0) -> tuple[int, ...]:
    """A word on ``offset+1..offset+|L|`` with descent composition ``L``.

    Runs hold consecutive values, taken from the top down, so every run
    boundary is a descent.
    """
    out: list[int] = []
    top = sum(L)
    for part in L:
        out.extend(range(top - part + 1, top + 1))
        top -= part
    return tuple(v + offset for v in out)


def shuffle_compositions(p: Sequence[int], q: Sequence[int]) -> dict:
    """Multiset of descent compositions over all shuffles of disjoint words."""
    out: dict = {}
    for tau in shuffles(p, q):
        comp = Composition.from_descent_set(len(tau), descent_set(tau))
        out[comp] = out.get(comp, 0) + 1
    return out


def _fund_product(L: Composition, K: Composition) -> dict:
    return shuffle_compositions(canonical_rep(L), canonical_rep(K, sum(L)))


@lru_cache(maxsize=None)
def _fund_product_cached(L: Composition, K: Composition) -> tuple:
    return tuple(sorted(_fund_product(L, K).items()))


def qsym_product(f: QSymElement, g: QSymElement) -> QSymElement:
    cap = min(f.cap, g.cap)
    out: dict = {}
    for L, cl in f.terms.items():
        for K, ck in g.terms.items():
            if L.n + K.n > cap:
                continue
            c = spoly.mul(cl, ck)
            for comp, mult in _fund_product_cached(L, K):
                spoly.add_into(out.setdefault(comp, []), c, mult)
    return QSymElement(out, cap)


def ribbon(L: Sequence[int], cap: int | None = None) -> FQSymElement:
    """``r_L = sum of G_pi over pi with descent composition L``."""
    L = Composition(L)
    n = L.n
    terms = {pi: [1] for pi in permutations(range(1, n + 1))
             if descent_composition(pi) == L}
    return FQSymElement(terms, n if cap is None else cap)


# -- homomorphisms --------------------------------------------------------------

def _stat(pi: Sequence[int], hom: str):
    n = len(pi)
    if hom == "Psi":
        return 0
    if hom == "Psi_q":
        return inv_count(pi)
    q = inverse(pi)
    if hom == "Psi_ides_icomaj":
        d = descent_set(q)
        return (len(d), sum(n - i for i in d))
    # the peak statistics of the inverse
    pk = sum(1 for i in range(1, n - 1) if q[i - 1] < q[i] > q[i + 1])
    if hom == "Psi_ipk":
        return pk
    if hom == "Psi_ilpk":
        return pk + (1 if n >= 2 and q[0] > q[1] else 0)
    raise ValueError(f"unknown homomorphism {hom!r}; expected one of {HOMS}")


def _inv_one_minus_t_pow(e: int, T: int) -> list[int]:
    # coefficients of 1/(1-t)^e up to t^T
    return [comb(e - 1 + k, k) for k in range(T + 1)] if e > 0 else [1] + [0] * T


def _conv(a: Sequence[int], b: Sequence[int], T: int) -> list[int]:
    out = [0] * (T + 1)
    for i, x in enumerate(a):
        if x and i <= T:
            for j, y in enumerate(b):
                if i + j > T:
                    break
                out[i + j] += x * y
    return out


@lru_cache(maxsize=None)
def hom_image(hom: str, n: int, value, trunc: tuple) -> TruncatedSeries:
    """Image of any ``G_pi`` with ``|pi| = n`` and statistic ``value``."""
    Ts, Tt, Tq, Tx = trunc
    if n > Tx:
        return TruncatedSeries({}, trunc)
    if hom == "Psi":
        return TruncatedSeries({(0, 0, 0, n): Fraction(1, factorial(n))}, trunc)
    if hom == "Psi_q":
        qf = q_factorial(n).to_series((0, 0, Tq, 0))
        inv_qf = invert(qf)
        return TruncatedSeries({(0, 0, e[2] + value, n): c for e, c in inv_qf.coeffs.items()}, trunc)
    if hom == "Psi_ides_icomaj":
        if n == 0:
            return TruncatedSeries.geometric("t", trunc)
        d, cm = value
        out = {}
        for k in range(Tt - d):
            for e, c in q_binomial(n + k, k).terms.items():
                out[(0, k + d + 1, e[2] + cm, n)] = c
        return TruncatedSeries(out, trunc)
    if hom == "Psi_ipk":
        if n == 0:
            return TruncatedSeries.geometric("t", trunc)
        p = value
        num = [comb(n - 2 * p - 1, j) for j in range(n - 2 * p)]
        coeffs = _conv(num, _inv_one_minus_t_pow(n + 1, Tt), Tt)
        scale = 2 ** (2 * p + 1)
        return TruncatedSeries({(0, k + p + 1, 0, n): scale * c
                                for k, c in enumerate(coeffs)}, trunc)
    if hom == "Psi_ilpk":
        p = value
        num = [comb(n - 2 * p, j) for j in range(n - 2 * p + 1)]
        coeffs = _conv(num, _inv_one_minus_t_pow(n + 1, Tt), Tt)
        scale = 2 ** (2 * p)
        return TruncatedSeries({(0, k + p, 0, n): scale * c
                                for k, c in enumerate(coeffs)}, trunc)
    raise ValueError(f"unknown homomorphism {hom!r}; expected one of {HOMS}")


def default_trunc(hom: str, cap: int) -> tuple[int, int, int, int]:
    Tq = comb(cap, 2) if hom in ("Psi_q", "Psi_ides_icomaj") else 0
    Tt = cap + 2 if hom not in ("Psi", "Psi_q") else 0
    return (cap, Tt, Tq, cap)


def apply_hom(f: FQSymElement, hom: str, trunc=None) -> TruncatedSeries:
    if hom not in HOMS:
        raise ValueError(f"unknown homomorphism {hom!r}; expected one of {HOMS}")
    trunc = tuple(trunc) if trunc is not None else default_trunc(hom, f.cap)
    groups: dict = {}
    for pi, c in f.terms.items():
        key = (len(pi), _stat(pi, hom))
        spoly.add_into(groups.setdefault(key, []), c)
    out = TruncatedSeries({}, trunc)
    for (n, value), c in sorted(groups.items(), key=lambda kv: repr(kv[0])):
        img = hom_image(hom, n, value, trunc)
        for k, a in enumerate(c):
            if a and k <= trunc[0]:
                out = out + TruncatedSeries(
                    {(k, e[1], e[2], e[3]): a * v for e, v in img.coeffs.items()}, trunc)
    return out


def _hom_product(hom: str, f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    if hom in ("Psi", "Psi_q"):
        return mul(f, g)
    return hadamard_t(f, g)


def hom_is_multiplicative_check(hom: str, cap: int, report: list | None = None) -> bool:
    """Compare ``hom(G_pi G_sigma)`` with the product of images, all pairs up to ``cap``."""
    trunc = default_trunc(hom, cap)
    rhs_cache: dict = {}
    bad = checked = 0
    for m in range(cap + 1):
        for k in range(cap - m + 1):
            for a in permutations(range(1, m + 1)):
                va = _stat(a, hom)
                for b in permutations(range(1, k + 1)):
                    vb = _stat(b, hom)
                    counts: dict = {}
                    for tau in iter_shifted_concats(a, b):
                        v = _stat(tau, hom)
                        counts[v] = counts.get(v, 0) + 1
                    lhs = TruncatedSeries({}, trunc)
                    for v, c in counts.items():
                        lhs = lhs + hom_image(hom, m + k, v, trunc).scale(c)
                    key = (m, va, k, vb)
                    if key not in rhs_cache:
                        rhs_cache[key] = _hom_product(hom, hom_image(hom, m, va, trunc),
                                                      hom_image(hom, k, vb, trunc))
                    checked += 1
                    if lhs != rhs_cache[key]:
                        bad += 1
    if report is not None:
        report.append((hom, checked, bad))
    return bad == 0
