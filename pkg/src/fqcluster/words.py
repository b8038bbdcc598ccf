"""Cluster method for words over a finite alphabet, checked in a truncated
noncommutative word algebra.

Words are plain strings.  The identity being checked is
``(1 - sum_a a - R_B(s-1)) F_B(s) = 1``, coefficient by coefficient on every
word up to a length cap.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable

from . import spoly
from .cluster import chain_counts, is_chain, iter_chains

__all__ = ["word_occurrences", "word_clusters", "is_word_cluster",
           "verify_word_cluster_method"]

MAX_WORD_LEN = 12


def _check_words(B: Iterable[str]) -> tuple[str, ...]:
    B = tuple(sorted(set(B), key=lambda w: (len(w), w)))
    for w in B:
        if len(w) < 2:
            raise ValueError(f"marked word {w!r} has length < 2")
    return B


def word_occurrences(w: str, B: Iterable[str]) -> list[tuple[int, str]]:
    """All ``(start, v)`` with ``v`` in B occurring at 1-based ``start``."""
    B = _check_words(B)
    out = [(i + 1, v) for v in B for i in range(len(w) - len(v) + 1)
           if w.startswith(v, i)]
    out.sort(key=lambda o: (o[0], len(o[1])))
    return out


def word_clusters(w: str, B: Iterable[str]) -> list[tuple[tuple[int, str], ...]]:
    occ = word_occurrences(w, B)
    return list(iter_chains(occ, len(w), key=lambda o: (o[0], o[0] + len(o[1]) - 1)))


def is_word_cluster(w: str, marks: Iterable[tuple[int, str]], B: Iterable[str] | None = None) -> bool:
    marks = list(marks)
    for start, v in marks:
        if not w.startswith(v, start - 1) or start < 1:
            return False
        if B is not None and v not in set(B):
            return False
    return is_chain([(a, a + len(v) - 1) for a, v in marks], len(w))


def verify_word_cluster_method(alphabet: Iterable[str], B: Iterable[str], maxlen: int,
                               report: list | None = None) -> bool:
    """Check ``(1 - sum a - R_B(s-1)) F_B(s) = 1`` on every word up to ``maxlen``."""
    if maxlen > MAX_WORD_LEN:
        raise ValueError(f"maxlen must be <= {MAX_WORD_LEN}")
    alphabet = tuple(sorted(set(alphabet)))
    B = _check_words(B)
    if any(ch not in alphabet for v in B for ch in v):
        raise ValueError("marked words use letters outside the alphabet")

    words_by_len = [["".join(t) for t in product(alphabet, repeat=k)] for k in range(maxlen + 1)]
    F: dict[str, list[int]] = {}
    left: dict[str, list[int]] = {"": [1]}
    for a in alphabet:
        left[a] = [-1]
    for k in range(maxlen + 1):
        for w in words_by_len[k]:
            occ = word_occurrences(w, B)
            p = [0] * (len(occ) + 1)
            p[len(occ)] = 1
            F[w] = p
            if k >= 2:
                counts = chain_counts([(a, a + len(v) - 1) for a, v in occ], k)
                if counts:
                    left[w] = [-c for c in spoly.shift_minus_one(counts)]
    ok = True
    for k in range(maxlen + 1):
        bad = 0
        for w in words_by_len[k]:
            acc: list[int] = []
            for cut in range(k + 1):
                u = w[:cut]
                if u in left:
                    spoly.add_into(acc, spoly.mul(left[u], F[w[cut:]]))
            spoly.trim(acc)
            if acc != ([1] if k == 0 else []):
                bad += 1
        if report is not None:
            report.append((k, len(words_by_len[k]), bad))
        ok = ok and bad == 0
    return ok
