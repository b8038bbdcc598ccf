"""Permutations, standardization, descent/peak statistics and symmetries.

Permutations are stored 1-based in one-line notation, as in
``Permutation((7, 2, 1, 6, 3, 5, 8, 4))``.  The empty
permutation is a legitimate value.

Arbitrary words (repeated letters allowed) are plain tuples of ints; the only
way to turn one into a :class:`Permutation` is :func:`standardize`.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Permutation", "Composition", "StatRecord",
    "standardize", "parse_perm", "format_perm", "stats", "inverse",
    "symmetry", "descent_composition", "shuffles", "shifted_concats",
    "all_perms", "inv_count",
    "descent_set", "des", "maj", "comaj", "pk", "lpk",
]


class Permutation(tuple):
    """An immutable permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, letters: Iterable[int] = ()):
        letters = tuple(letters)
        if sorted(letters) != list(range(1, len(letters) + 1)):
            raise ValueError(f"not a permutation of 1..{len(letters)}: {letters}")
        return tuple.__new__(cls, letters)

    @classmethod
    def _trusted(cls, letters) -> "Permutation":
        # hot paths (enumeration, FQSym products) skip the bijection check
        return tuple.__new__(cls, letters)

    @property
    def n(self) -> int:
        return len(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    def __repr__(self) -> str:
        return f"Permutation({format_perm(self) or 'ε'})"

    def __str__(self) -> str:
        return format_perm(self)


class Composition(tuple):
    """An integer composition; ``Composition((1, 2, 3, 1, 1))``."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"composition parts must be positive: {parts}")
        return tuple.__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def descent_set(self) -> frozenset[int]:
        out, acc = [], 0
        for p in self[:-1]:
            acc += p
            out.append(acc)
        return frozenset(out)

    @classmethod
    def from_descent_set(cls, n: int, dset: Iterable[int]) -> "Composition":
        if n == 0:
            return cls()
        cuts = [0, *sorted(dset), n]
        return cls(b - a for a, b in zip(cuts, cuts[1:]))

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


@dataclass(frozen=True)
class StatRecord:
    n: int
    des_set: frozenset[int]
    des: int
    maj: int
    comaj: int
    pk: int
    lpk: int
    inv: int
    comp: Composition
    ides: int
    imaj: int
    icomaj: int
    ipk: int
    ilpk: int

    def as_dict(self) -> dict:
        return {
            "des_set": sorted(self.des_set), "des": self.des, "maj": self.maj,
            "comaj": self.comaj, "pk": self.pk, "lpk": self.lpk, "inv": self.inv,
            "comp": list(self.comp), "ides": self.ides, "imaj": self.imaj,
            "icomaj": self.icomaj, "ipk": self.ipk, "ilpk": self.ilpk,
        }


def standardize(word: Sequence[int]) -> Permutation:
    """Relabel letters by rank; equal letters count as increasing left to right."""
    order = sorted(range(len(word)), key=lambda i: (word[i], i))
    out = [0] * len(word)
    for rank, i in enumerate(order, 1):
        out[i] = rank
    return Permutation._trusted(out)


def parse_perm(text: str) -> Permutation:
    """Parse ``"72163584"`` or ``"10,2,3,1,..."``; ``""``/``"e"`` is empty."""
    text = text.strip()
    if text in ("", "e", "ε", "()"):
        return Permutation()
    if "," in text:
        letters = [int(tok) for tok in text.split(",") if tok.strip()]
    else:
        letters = [int(ch) for ch in text]
    return Permutation(letters)


def format_perm(p: Sequence[int]) -> str:
    if len(p) <= 9:
        return "".join(map(str, p))
    return ",".join(map(str, p))


def inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return Permutation._trusted(out)


# Statistics on plain sequences of distinct comparable letters.  These are the
# hot loop of every brute-force sweep, so they avoid building sets.

def descent_set(p: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(p)) if p[i - 1] > p[i])


def des(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p)) if p[i - 1] > p[i])


def maj(p: Sequence[int]) -> int:
    return sum(i for i in range(1, len(p)) if p[i - 1] > p[i])


def comaj(p: Sequence[int]) -> int:
    n = len(p)
    return sum(n - i for i in range(1, len(p)) if p[i - 1] > p[i])


def pk(p: Sequence[int]) -> int:
    return sum(1 for i in range(1, len(p) - 1) if p[i - 1] < p[i] > p[i + 1])


def lpk(p: Sequence[int]) -> int:
    # left peak: an interior peak, or position 1 when it is a descent
    n = len(p)
    count = 1 if n >= 2 and p[0] > p[1] else 0
    return count + pk(p)


def inv_count(p: Sequence[int]) -> int:
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def descent_composition(p: Sequence[int]) -> Composition:
    return Composition.from_descent_set(len(p), descent_set(p))


def stats(p: Sequence[int]) -> StatRecord:
    n = len(p)
    dset = descent_set(p)
    q = inverse(p)
    d, m = len(dset), sum(dset)
    qd, qm = des(q), maj(q)
    return StatRecord(
        n=n, des_set=dset, des=d, maj=m, comaj=n * d - m, pk=pk(p), lpk=lpk(p),
        inv=inv_count(p), comp=Composition.from_descent_set(n, dset),
        ides=qd, imaj=qm, icomaj=n * qd - qm, ipk=pk(q), ilpk=lpk(q),
    )


_SYMMETRIES = ("reverse", "complement", "reverse_complement")


def symmetry(p: Sequence[int], kind: str) -> Permutation:
    n = len(p)
    if kind == "reverse":
        return Permutation._trusted(p[::-1])
    if kind == "complement":
        return Permutation._trusted(n + 1 - v for v in p)
    if kind == "reverse_complement":
        return Permutation._trusted(n + 1 - v for v in reversed(p))
    raise ValueError(f"unknown symmetry {kind!r}; expected one of {_SYMMETRIES}")


def shuffles(u: Sequence[int], w: Sequence[int]) -> set[tuple[int, ...]]:
    """All interleavings of two words with disjoint letter sets."""
    if set(u) & set(w):
        raise ValueError(f"words are not disjoint: {tuple(u)}, {tuple(w)}")
    m, n = len(u), len(w)
    out = set()
    for slots in combinations(range(m + n), m):
        word = [0] * (m + n)
        chosen = set(slots)
        ui = iter(u)
        wi = iter(w)
        for k in range(m + n):
            word[k] = next(ui) if k in chosen else next(wi)
        out.add(tuple(word))
    return out


def iter_shifted_concats(p: Sequence[int], s: Sequence[int]) -> Iterator[Permutation]:
    """Yield each tau with std(first |p| letters) = p and std(rest) = s."""
    m, n = len(p), len(s)
    universe = range(1, m + n + 1)
    for left in combinations(universe, m):
        chosen = set(left)
        right = [v for v in universe if v not in chosen]
        yield Permutation._trusted(
            tuple(left[a - 1] for a in p) + tuple(right[b - 1] for b in s)
        )


def shifted_concats(p: Sequence[int], s: Sequence[int]) -> set[Permutation]:
    return set(iter_shifted_concats(p, s))


def all_perms(n: int) -> Iterator[Permutation]:
    from itertools import permutations

    for letters in permutations(range(1, n + 1)):
        yield Permutation._trusted(letters)
