"""Consecutive-pattern occurrences, avoidance and clusters on permutations.

A cluster is a permutation carrying a set of marked pattern occurrences whose
windows chain together: every gap between adjacent positions is straddled by
some marked window.  Sorting marks by ``(start, length)``, that is the same as
asking that the first mark starts at 1, that each later mark starts no later
than the furthest end seen so far, and that the furthest end is ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations as _permutations
from math import factorial
from typing import Callable, Iterable, Iterator, Sequence

from .perm import Permutation, parse_perm, standardize, stats
from .series import Polynomial

__all__ = [
    "PatternSet", "MarkedOccurrence", "Cluster", "as_pattern_set",
    "occurrences", "occ_count", "iter_avoiders", "count_avoiders",
    "iter_with_occ", "clusters", "cluster_counts", "cluster_polynomial",
    "cluster_carriers", "overlap_set", "chain_counts", "STAT_TAGS",
    "transpositional", "monotone",
]


def _order(p: Sequence[int]) -> tuple[int, ...]:
    # offsets sorted by the letter they hold: w matches p iff w is increasing
    # along this order
    return tuple(sorted(range(len(p)), key=lambda i: p[i]))


def _matches(w: Sequence[int], i: int, order: tuple[int, ...]) -> bool:
    prev = w[i + order[0]]
    for o in order[1:]:
        cur = w[i + o]
        if cur < prev:
            return False
        prev = cur
    return True


class PatternSet:
    """A nonempty set of patterns, each of length at least 2."""

    __slots__ = ("patterns", "_compiled", "max_len", "min_len")

    def __init__(self, patterns: Iterable[Sequence[int] | str]):
        pats = set()
        for p in patterns:
            p = parse_perm(p) if isinstance(p, str) else Permutation(p)
            if len(p) < 2:
                raise ValueError(f"pattern {p} has length < 2")
            pats.add(p)
        if not pats:
            raise ValueError("pattern set must be nonempty")
        self.patterns: tuple[Permutation, ...] = tuple(sorted(pats, key=lambda p: (len(p), p)))
        self._compiled = tuple((len(p), _order(p)) for p in self.patterns)
        self.max_len = max(len(p) for p in self.patterns)
        self.min_len = min(len(p) for p in self.patterns)

    @classmethod
    def parse(cls, spec: str) -> "PatternSet":
        return cls(tok.strip() for tok in spec.split(",") if tok.strip())

    def map(self, fn: Callable[[Permutation], Sequence[int]]) -> "PatternSet":
        return PatternSet(fn(p) for p in self.patterns)

    def __iter__(self):
        return iter(self.patterns)

    def __len__(self):
        return len(self.patterns)

    def __eq__(self, other):
        return isinstance(other, PatternSet) and self.patterns == other.patterns

    def __hash__(self):
        return hash(self.patterns)

    def __repr__(self):
        return f"PatternSet({self.spec()!r})"

    def spec(self) -> str:
        return ",".join("".join(map(str, p)) if len(p) <= 9 else ",".join(map(str, p))
                        for p in self.patterns)


def as_pattern_set(gamma) -> PatternSet:
    if isinstance(gamma, PatternSet):
        return gamma
    if isinstance(gamma, str):
        return PatternSet.parse(gamma)
    if isinstance(gamma, Permutation):
        return PatternSet([gamma])
    return PatternSet(gamma)


def monotone(m: int, decreasing: bool = False) -> Permutation:
    letters = range(m, 0, -1) if decreasing else range(1, m + 1)
    return Permutation(letters)


def transpositional(m: int, a: int) -> Permutation:
    """``12..(a-1)(a+1)a(a+2)..m``."""
    if not 1 <= a < m:
        raise ValueError(f"need 1 <= a < m, got m={m}, a={a}")
    letters = list(range(1, m + 1))
    letters[a - 1], letters[a] = letters[a], letters[a - 1]
    return Permutation(letters)


@dataclass(frozen=True, order=True)
class MarkedOccurrence:
    start: int
    pattern: Permutation

    @property
    def length(self) -> int:
        return len(self.pattern)

    @property
    def end(self) -> int:
        return self.start + len(self.pattern) - 1

    def sort_key(self):
        return (self.start, len(self.pattern), self.pattern)


@dataclass(frozen=True)
class Cluster:
    base: Permutation
    marks: tuple[MarkedOccurrence, ...]

    @property
    def mk(self) -> int:
        return len(self.marks)

    def is_valid(self) -> bool:
        n = len(self.base)
        for m in self.marks:
            if m.start < 1 or m.end > n:
                return False
            if standardize(self.base[m.start - 1:m.end]) != m.pattern:
                return False
        return is_chain([(m.start, m.end) for m in self.marks], n)


def is_chain(spans: Sequence[tuple[int, int]], n: int) -> bool:
    """Do the closed windows ``[start, end]`` straddle every gap of ``1..n``?"""
    if not spans or n < 1:
        return False
    spans = sorted(spans)
    if spans[0][0] != 1:
        return False
    reach = 0
    for a, b in spans:
        if reach and a > reach:
            return False
        reach = max(reach, b)
    return reach == n


def occurrences(pi: Sequence[int], gamma) -> list[MarkedOccurrence]:
    gamma = as_pattern_set(gamma)
    n = len(pi)
    out = []
    for p, (m, order) in zip(gamma.patterns, gamma._compiled):
        for i in range(n - m + 1):
            if _matches(pi, i, order):
                out.append(MarkedOccurrence(i + 1, p))
    out.sort(key=MarkedOccurrence.sort_key)
    return out


def occ_count(pi: Sequence[int], gamma) -> int:
    gamma = as_pattern_set(gamma)
    n = len(pi)
    return sum(1 for m, order in gamma._compiled
               for i in range(n - m + 1) if _matches(pi, i, order))


def iter_with_occ(n: int, gamma, max_occ: int | None = None) -> Iterator[tuple[tuple[int, ...], int]]:
    """Yield ``(pi, occ(pi))`` over S_n in lexicographic order.

    Occurrences are counted incrementally as letters are appended; with
    ``max_occ`` set, any prefix already exceeding it is pruned.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    compiled = as_pattern_set(gamma)._compiled
    if n == 0:
        yield (), 0
        return
    prefix = [0] * n
    used = [False] * (n + 1)

    def rec(j: int, occ: int):
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix[j] = v
            add = 0
            for m, order in compiled:
                i = j - m + 1
                if i >= 0 and _matches(prefix, i, order):
                    add += 1
            total = occ + add
            if max_occ is not None and total > max_occ:
                continue
            if j == n - 1:
                yield tuple(prefix), total
            else:
                used[v] = True
                yield from rec(j + 1, total)
                used[v] = False

    yield from rec(0, 0)


def iter_avoiders(n: int, gamma) -> Iterator[Permutation]:
    if n < 0:
        raise ValueError("n must be >= 0")
    if not gamma:
        yield from (Permutation._trusted(p) for p in _permutations(range(1, n + 1)))
        return
    for p, _ in iter_with_occ(n, gamma, max_occ=0):
        yield Permutation._trusted(p)


def count_avoiders(n: int, gamma) -> int:
    if n < 0:
        raise ValueError("n must be >= 0")
    if not gamma:
        return factorial(n)
    return sum(1 for _ in iter_with_occ(n, gamma, max_occ=0))


# -- clusters -----------------------------------------------------------------

def chain_counts(spans: Sequence[tuple[int, int]], n: int) -> list[int]:
    """Count covering chains among ``spans`` by number of marks.

    ``spans`` must be sorted by (start, end).  Entry ``k`` of the result is the
    number of subsets of size ``k`` that form a cluster on ``1..n``.
    """
    if n < 1 or not spans:
        return []
    memo: dict = {}
    total = len(spans)

    def go(k: int, reach: int) -> list[int]:
        key = (k, reach)
        if key in memo:
            return memo[key]
        if k == total or spans[k][0] > max(reach, 1):
            res = [1] if reach == n else []
        else:
            skip = go(k + 1, reach)
            take = go(k + 1, max(reach, spans[k][1]))
            size = max(len(skip), len(take) + 1)
            res = [0] * size
            for i, c in enumerate(skip):
                res[i] += c
            for i, c in enumerate(take):
                res[i + 1] += c
        memo[key] = res
        return res

    res = go(0, 0)
    while res and res[-1] == 0:
        res.pop()
    return res


def iter_chains(spans: Sequence, n: int, key=lambda sp: (sp[0], sp[1])) -> Iterator[tuple]:
    """Yield every covering chain (as a tuple of spans) by include/exclude."""
    spans = list(spans)
    if n < 1:
        return
    chosen: list = []

    def rec(k: int, reach: int):
        if k == len(spans) or key(spans[k])[0] > max(reach, 1):
            if reach == n:
                yield tuple(chosen)
            return
        yield from rec(k + 1, reach)
        a, b = key(spans[k])
        chosen.append(spans[k])
        yield from rec(k + 1, max(reach, b))
        chosen.pop()

    yield from rec(0, 0)


def clusters(pi: Sequence[int], gamma) -> list[Cluster]:
    base = Permutation(pi)
    occ = occurrences(base, gamma)
    return [Cluster(base, marks)
            for marks in iter_chains(occ, len(base), key=lambda m: (m.start, m.end))]


def cluster_counts(pi: Sequence[int], gamma) -> list[int]:
    """Coefficients of ``sum_c s^mk(c)`` over clusters on ``pi``."""
    occ = occurrences(pi, gamma)
    return chain_counts([(m.start, m.end) for m in occ], len(pi))


def cluster_carriers(n: int, gamma) -> Iterator[Permutation]:
    """Permutations of length n admitting at least one cluster.

    Prefixes are grown in standardized form (the new letter is inserted by
    rank), so each permutation is reached exactly once.  A prefix dies as
    soon as some gap can no longer be straddled by any window that is either
    a known occurrence or still compatible with a pattern prefix.
    """
    gamma = as_pattern_set(gamma)
    if n < gamma.min_len:
        return
    M = gamma.max_len
    # prefix orders: for each pattern length m and known length L, the order
    # of std(pattern[:L])
    pref = [(m, [None] + [_order(standardize(p[:L])) for L in range(1, m + 1)])
            for p, (m, _) in zip(gamma.patterns, gamma._compiled)]

    def gap_alive(w: list[int], j: int, p: int) -> bool:
        # gap p lies between positions p and p+1 (1-based); prefix length j
        for m, orders in pref:
            lo = max(1, p + 2 - m)
            for i in range(lo, p + 1):
                end = i + m - 1
                if end > n:
                    break
                L = min(end, j) - i + 1
                if _matches(w, i - 1, orders[L]):
                    return True
        return False

    def rec(w: list[int]):
        j = len(w)
        if j == n:
            yield Permutation._trusted(w)
            return
        for r in range(1, j + 2):
            nxt = [x + 1 if x >= r else x for x in w]
            nxt.append(r)
            k = j + 1
            if all(gap_alive(nxt, k, p) for p in range(max(1, k - M), k)):
                yield from rec(nxt)

    yield from rec([])


STAT_TAGS = ("none", "inv", "ides", "ides_icomaj", "ipk", "ilpk")


def stat_monomial(pi: Sequence[int], tag: str) -> tuple[int, int]:
    """(t-exponent, q-exponent) carried by ``pi`` under a statistic tag."""
    if tag == "none":
        return 0, 0
    st = stats(pi)
    if tag == "inv":
        return 0, st.inv
    if tag == "ides":
        return st.ides + 1, 0
    if tag == "ides_icomaj":
        return st.ides + 1, st.icomaj
    if tag == "ipk":
        return st.ipk + 1, 0
    if tag == "ilpk":
        return st.ilpk, 0
    raise ValueError(f"unknown statistic tag {tag!r}; expected one of {STAT_TAGS}")


def cluster_polynomial(gamma, n: int, tag: str = "none", method: str = "carriers") -> Polynomial:
    """Refined cluster polynomial: sum over clusters of s^mk times the tag weight.

    ``method="carriers"`` walks only permutations that admit a cluster;
    ``method="brute"`` scans all of S_n and is kept as the cross-check.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if tag not in STAT_TAGS:
        raise ValueError(f"unknown statistic tag {tag!r}; expected one of {STAT_TAGS}")
    gamma = as_pattern_set(gamma)
    if method == "carriers":
        source = cluster_carriers(n, gamma)
    elif method == "brute":
        source = (Permutation._trusted(p) for p in _permutations(range(1, n + 1)))
    else:
        raise ValueError(f"unknown method {method!r}")
    terms: dict = {}
    for pi in source:
        counts = cluster_counts(pi, gamma)
        if not counts:
            continue
        te, qe = stat_monomial(pi, tag)
        for k, c in enumerate(counts):
            if c:
                key = (k, te, qe, 0)
                terms[key] = terms.get(key, 0) + c
    return Polynomial(terms)


def overlap_set(sigma: Sequence[int]) -> set[int]:
    m = len(sigma)
    return {i for i in range(1, m)
            if standardize(sigma[i:]) == standardize(sigma[:m - i])}
