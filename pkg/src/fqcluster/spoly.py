"""Dense integer polynomials in s, stored as coefficient lists (index = power).

FQSym coefficients and cluster counts only ever involve s, so the general
``Polynomial`` type would be needless overhead in the hot loops.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .series import Polynomial


def trim(p: list[int]) -> list[int]:
    while p and p[-1] == 0:
        p.pop()
    return p


def add_into(acc: list[int], p: Sequence[int], scale: int = 1) -> None:
    if len(acc) < len(p):
        acc.extend([0] * (len(p) - len(acc)))
    for i, c in enumerate(p):
        if c:
            acc[i] += scale * c


def mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def shift_minus_one(p: Sequence[int]) -> list[int]:
    """Coefficients of ``p(s - 1)``."""
    out = [0] * len(p)
    for k, c in enumerate(p):
        if c:
            for j in range(k + 1):
                out[j] += c * comb(k, j) * (-1) ** (k - j)
    return trim(out)


def evaluate(p: Sequence[int], s: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * s + c
    return acc


def to_polynomial(p: Sequence[int]) -> Polynomial:
    return Polynomial({(k, 0, 0, 0): c for k, c in enumerate(p)})


def to_text(p: Sequence[int]) -> str:
    return str(to_polynomial(p))
