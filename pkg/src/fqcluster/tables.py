"""Golden distribution tables (n = 0..9) and their reproduction by each method."""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .distributions import brute_distribution
from .formulas import FAMILY_OF, run_formula
from .series import Polynomial

__all__ = ["TableSpec", "TABLES", "golden", "errata", "compute_table", "diff_table", "METHODS"]

METHODS = ("brute", "closed", "spec", "fqsym")


@dataclass(frozen=True)
class TableSpec:
    id: int
    pattern: str
    family: str
    formula: str
    m: int
    a: int | None = None

    @property
    def stat(self) -> str:
        return {v: k for k, v in FAMILY_OF.items()}[self.family]

    @property
    def caption(self) -> str:
        return f"Distribution of {self.stat} over S_n({self.pattern})"


TABLES: dict[int, TableSpec] = {t.id: t for t in [
    TableSpec(1, "123", "A_ides", "mono-ides-b", 3),
    TableSpec(2, "1234", "A_ides", "mono-ides-b", 4),
    TableSpec(3, "123", "P_ipk", "mono-ipk-b", 3),
    TableSpec(4, "1234", "P_ipk", "mono-ipk-b", 4),
    TableSpec(5, "123", "P_ilpk", "mono-ilpk-b", 3),
    TableSpec(6, "1234", "P_ilpk", "mono-ilpk-b", 4),
    TableSpec(7, "321", "P_ilpk", "dec-ilpk-b", 3),
    TableSpec(8, "4321", "P_ilpk", "dec-ilpk-b", 4),
    TableSpec(9, "13245", "A_ides", "trans-ides-b", 5, 2),
    TableSpec(10, "13245", "P_ipk", "trans-ipk-b", 5, 2),
    TableSpec(11, "13245", "P_ilpk", "trans-ilpk-b", 5, 2),
]}


def _spec(tid: int) -> TableSpec:
    if tid not in TABLES:
        raise ValueError(f"unknown table {tid}; valid ids are {', '.join(map(str, sorted(TABLES)))}")
    return TABLES[tid]


@lru_cache(maxsize=1)
def _load() -> dict[int, list[Polynomial]]:
    text = resources.files("fqcluster").joinpath("data/tables.csv").read_text()
    out: dict[int, list] = {}
    for row in csv.DictReader(io.StringIO(text)):
        out.setdefault(int(row["table"]), []).append((int(row["n"]), Polynomial.parse(row["polynomial"])))
    return {k: [p for _, p in sorted(v, key=lambda r: r[0])] for k, v in out.items()}


def golden(tid: int, apply_errata: bool = False) -> list[Polynomial]:
    """Rows n = 0..9 exactly as printed, or with known misprints corrected."""
    _spec(tid)
    rows = list(_load()[tid])
    if apply_errata:
        for (t, n), (_, fixed, _) in errata().items():
            if t == tid:
                rows[n] = fixed
    return rows


@lru_cache(maxsize=1)
def errata() -> dict[tuple[int, int], tuple[Polynomial, Polynomial, str]]:
    """``{(table, n): (printed, corrected, reason)}`` for rows known to be misprinted."""
    text = resources.files("fqcluster").joinpath("data/errata.csv").read_text()
    return {(int(r["table"]), int(r["n"])):
            (Polynomial.parse(r["printed"]), Polynomial.parse(r["corrected"]), r["reason"])
            for r in csv.DictReader(io.StringIO(text))}


def compute_table(tid: int, method: str, N: int = 9) -> list[Polynomial]:
    spec = _spec(tid)
    if method == "brute":
        return [brute_distribution(spec.pattern, n, spec.family, s=0).poly for n in range(N + 1)]
    if method == "closed":
        return run_formula(spec.formula, N, 0, m=spec.m, a=spec.a)
    if method == "spec":
        return run_formula(f"spec-{spec.stat}", N, 0, gamma=spec.pattern)
    if method == "fqsym":
        from .fqsym import fqsym_distribution
        return [fqsym_distribution(spec.pattern, n, spec.family, s=0) for n in range(N + 1)]
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


def diff_table(tid: int, method: str, N: int = 9,
               apply_errata: bool = False) -> list[tuple[int, Polynomial, Polynomial]]:
    """Rows where the computed polynomial differs from the golden one."""
    want = golden(tid, apply_errata)[:N + 1]
    got = compute_table(tid, method, N)
    return [(n, w, g) for n, (w, g) in enumerate(zip(want, got)) if w != g]
