"""Consecutive pattern avoidance with inverse statistics.

Distribution polynomials of ``ides``, ``(ides, imaj)``, ``ipk`` and ``ilpk``
over permutations with a prescribed number of consecutive occurrences, computed
by brute force, by the cluster method specialized through FQSym, and by
closed-form generating functions.
"""

from .cluster import PatternSet, as_pattern_set, clusters, occ_count
from .distributions import FAMILIES, brute_distribution
from .formulas import FORMULAS, closed_formula_for, run_formula
from .perm import Permutation, parse_perm, stats
from .series import Polynomial, TruncatedSeries

__version__ = "0.1.0"

__all__ = [
    "PatternSet", "as_pattern_set", "clusters", "occ_count", "FAMILIES", "brute_distribution",
    "FORMULAS", "closed_formula_for", "run_formula", "Permutation", "parse_perm", "stats",
    "Polynomial", "TruncatedSeries",
]
