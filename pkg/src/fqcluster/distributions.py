"""Brute-force distribution polynomials over S_n, the ground truth for every
other route.

One DFS over S_n (or over the avoiders when s = 0) records the joint
distribution of ``(occ, ides, imaj, ipk, ilpk[, inv])``; each family is a
projection of that joint table.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .cluster import PatternSet, as_pattern_set, iter_with_occ
from .perm import inv_count
from .series import Polynomial

__all__ = ["FAMILIES", "DistributionPolynomial", "brute_distribution", "joint_table",
           "imaj_from_icomaj", "family_monomial", "BRUTE_CAP"]

FAMILIES = ("A_ides", "A_ides_imaj", "A_ides_icomaj", "P_ipk", "P_ilpk", "F_plain", "F_q")

BRUTE_CAP = 10


@dataclass(frozen=True)
class DistributionPolynomial:
    family: str
    n: int
    poly: Polynomial

    def total(self) -> int:
        """Value with every variable set to 1."""
        return sum(self.poly.terms.values())

    def __str__(self) -> str:
        return str(self.poly)


def _inverse_stats(p: tuple[int, ...]) -> tuple[int, int, int, int]:
    n = len(p)
    pos = [0] * (n + 2)
    for i, v in enumerate(p):
        pos[v] = i
    ides = imaj = ipk = 0
    for v in range(1, n):
        if pos[v] > pos[v + 1]:
            ides += 1
            imaj += v
    for v in range(2, n):
        if pos[v - 1] < pos[v] > pos[v + 1]:
            ipk += 1
    ilpk = ipk + (1 if n >= 2 and pos[1] > pos[2] else 0)
    return ides, imaj, ipk, ilpk


@lru_cache(maxsize=256)
def _joint(gamma: PatternSet | None, n: int, avoiders_only: bool, with_inv: bool) -> tuple:
    table: Counter = Counter()
    if gamma is None:
        source = ((p, 0) for p in permutations(range(1, n + 1)))
    else:
        source = iter_with_occ(n, gamma, max_occ=0 if avoiders_only else None)
    for p, occ in source:
        key = (occ, *_inverse_stats(p), inv_count(p) if with_inv else 0)
        table[key] += 1
    return tuple(sorted(table.items()))


def joint_table(gamma, n: int, avoiders_only: bool = False, with_inv: bool = False) -> dict:
    """``{(occ, ides, imaj, ipk, ilpk, inv): count}``; inv is 0 unless requested."""
    if n < 0:
        raise ValueError("n must be >= 0")
    gamma = as_pattern_set(gamma) if gamma else None
    return dict(_joint(gamma, n, avoiders_only, with_inv))


def family_monomial(family: str, n: int, ides: int, imaj: int, ipk: int, ilpk: int,
                    inv: int = 0) -> tuple[int, int]:
    """(t-exponent, q-exponent) of one permutation in a family."""
    if family == "A_ides":
        return ides + 1, 0
    if family == "A_ides_imaj":
        return ides + 1, imaj
    if family == "A_ides_icomaj":
        return ides + 1, n * ides - imaj
    if family == "P_ipk":
        return ipk + 1, 0
    if family == "P_ilpk":
        return ilpk, 0
    if family == "F_plain":
        return 0, 0
    if family == "F_q":
        return 0, inv
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


def brute_distribution(gamma, n: int, family: str, s: int | None = None,
                       cap: int | None = BRUTE_CAP) -> DistributionPolynomial:
    """Sum of s^occ times the family weight over S_n.

    ``s=None`` keeps s symbolic; an integer substitutes it (s = 0 walks only
    the avoiders).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if n < 0:
        raise ValueError("n must be >= 0")
    if cap is not None and n > cap:
        raise ValueError(f"brute force refuses n={n} > {cap} without an override")
    if n == 0:
        return DistributionPolynomial(family, 0, Polynomial.const(1))
    table = joint_table(gamma, n, avoiders_only=(s == 0), with_inv=(family == "F_q"))
    terms: dict = {}
    for (occ, ides, imaj, ipk, ilpk, inv), c in table.items():
        te, qe = family_monomial(family, n, ides, imaj, ipk, ilpk, inv)
        if s is None:
            key, w = (occ, te, qe, 0), c
        else:
            key, w = (0, te, qe, 0), c * s ** occ
        terms[key] = terms.get(key, 0) + w
    return DistributionPolynomial(family, n, Polynomial(terms))


def imaj_from_icomaj(poly: Polynomial, n: int) -> Polynomial:
    """Turn an (ides, icomaj) polynomial into the (ides, imaj) one.

    ``t^a q^b -> t^a q^(n(a-1) - b)``, using imaj = n*ides - icomaj with
    a = ides + 1.
    """
    def move(e):
        s, a, b, x = e
        if n == 0:
            return e
        qe = n * (a - 1) - b
        if qe < 0:
            raise ValueError(f"monomial t^{a} q^{b} is not an icomaj weight for n={n}")
        return (s, a, qe, x)
    return poly.map_monomials(move)
