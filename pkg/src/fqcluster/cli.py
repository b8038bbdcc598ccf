"""Command-line interface: ``fqcluster {stats,poly,clusters,table,verify,series-dump}``.

Exit status is 0 when every requested check passes, 1 when a check or a
table diff fails, and 2 for bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import cache as cache_mod
from .cluster import as_pattern_set, clusters
from .distributions import BRUTE_CAP, FAMILIES, brute_distribution, imaj_from_icomaj
from .formulas import FAMILY_OF, FORMULAS, closed_formula_for, run_formula
from .perm import format_perm, parse_perm, stats
from .series import Polynomial, format_terms

FAMILY_ALIASES = {
    "ides": "A_ides", "imaj": "A_ides_imaj", "ides-imaj": "A_ides_imaj",
    "icomaj": "A_ides_icomaj", "ides-icomaj": "A_ides_icomaj",
    "ipk": "P_ipk", "ilpk": "P_ilpk", "plain": "F_plain", "occ": "F_plain", "q": "F_q", "inv": "F_q",
}
VERIFY_SUITES = ("word-cluster", "fqsym-identity", "hom-multiplicative", "three-way", "symmetry",
                 "carlitz", "claims", "prop-123", "log-concavity")
FQSYM_CAP = 8


class UsageError(Exception):
    pass


# -- parsing helpers -----------------------------------------------------------

def parse_family(text: str) -> str:
    if text in FAMILIES:
        return text
    key = text.lower()
    if key in FAMILY_ALIASES:
        return FAMILY_ALIASES[key]
    raise UsageError(f"unknown family {text!r}; use one of {', '.join(FAMILIES)} "
                     f"or {', '.join(sorted(FAMILY_ALIASES))}")


def parse_range(text: str) -> list[int]:
    """``"4"``, ``"0..9"`` or ``"3,5,7"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..")
            out = list(range(int(lo), int(hi) + 1))
        else:
            out = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"bad n-range {text!r}; expected N, A..B or a comma list") from None
    if not out or min(out) < 0:
        raise UsageError(f"bad n-range {text!r}")
    return sorted(set(out))


def parse_s(text: str):
    if text in ("symbolic", "s", "sym"):
        return None
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"bad --s value {text!r}; expected an integer or 'symbolic'") from None


def _pattern(text: str):
    try:
        return as_pattern_set(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- rendering -----------------------------------------------------------------

def poly_record(gamma, family: str, n: int, s, poly: Polynomial) -> dict:
    return {"pattern": [format_perm(p) for p in gamma.patterns], "family": family, "n": n,
            "s": "symbolic" if s is None else s, "coeffs": poly.to_json()}


def record_poly(rec: dict) -> Polynomial:
    return Polynomial.from_json(rec["coeffs"])


def render_polys(records: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(records)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["pattern", "family", "n", "s", "polynomial"])
        for r in records:
            w.writerow([",".join(r["pattern"]), r["family"], r["n"], r["s"], str(record_poly(r))])
        return buf.getvalue().rstrip("\n")
    width = max((len(str(r["n"])) for r in records), default=1)
    return "\n".join(f"{r['n']:>{width}}  {record_poly(r)}" for r in records)


# -- computation of one (pattern, family, n) cell --------------------------------

def compute_cell(spec, family: str, n: int, s, method: str, formula: str | None,
                 allow_large: bool) -> Polynomial:
    gamma = as_pattern_set(spec)
    if method == "brute":
        return brute_distribution(gamma, n, family, s, cap=None if allow_large else BRUTE_CAP).poly
    if method == "fqsym":
        if n > FQSYM_CAP and not allow_large:
            raise UsageError(f"fqsym route refuses n={n} > {FQSYM_CAP} without --allow-large")
        from .fqsym import fqsym_distribution
        return fqsym_distribution(gamma, n, family, s)
    return compute_range(spec, family, [n], s, method, formula)[0]


def compute_range(spec, family: str, ns: list[int], s, method: str,
                  formula: str | None) -> list[Polynomial]:
    """Series methods produce every n <= max(ns) at once."""
    gamma = as_pattern_set(spec)
    N = max(ns)
    if method == "spec":
        if family in ("F_plain", "F_q"):
            name = "gj-perm" if family == "F_plain" else "gj-q"
            polys = run_formula(name, N, s, gamma=gamma)
        elif family == "A_ides_imaj":
            polys = [imaj_from_icomaj(p, n) for n, p in
                     enumerate(run_formula("spec-ides-icomaj", N, s, gamma=gamma))]
        else:
            stat = {v: k for k, v in FAMILY_OF.items()}[family]
            polys = run_formula(f"spec-{stat.replace('_', '-')}", N, s, gamma=gamma)
    elif method == "closed":
        if formula:
            f = FORMULAS.get(formula.lower())
            if f is None:
                raise UsageError(f"unknown formula {formula!r}")
            if f.params == "gamma":
                polys = f.run(N, s, gamma=gamma)
            else:
                p = gamma.patterns[0]
                m = len(p)
                a = next((i + 1 for i in range(m - 1) if p[i] > p[i + 1]), None)
                polys = f.run(N, s, m=m, a=a)
        else:
            hit = closed_formula_for(gamma, family, s)
            if hit is None:
                raise UsageError(f"no closed-form theorem for pattern {gamma.spec()} and family "
                                 f"{family} at s={'symbolic' if s is None else s}; closed forms cover "
                                 "12...m, m...21 (ilpk) and transpositional patterns")
            name, m, a = hit
            polys = run_formula(name, N, s, m=m, a=a)
    else:
        raise UsageError(f"unknown method {method!r}")
    return [polys[n] for n in ns]


def _cell_job(args):
    return compute_cell(*args)


def cmd_poly(ns: argparse.Namespace) -> int:
    if ns.list_formulas:
        for name in sorted(FORMULAS):
            f = FORMULAS[name]
            print(f"{name:18} stat={f.stat:12} params={f.params:6} s={'any' if f.any_s else '0'}")
        return 0
    if not ns.pattern or not ns.family or ns.n is None:
        raise UsageError("poly needs --pattern, --family and --n")
    gamma = _pattern(ns.pattern)
    family = parse_family(ns.family)
    ns_list = parse_range(ns.n)
    s = parse_s(ns.s)
    if ns.method == "brute" and max(ns_list) > BRUTE_CAP and not ns.allow_large:
        raise UsageError(f"brute force refuses n > {BRUTE_CAP}; pass --allow-large to override")
    root = cache_mod.cache_dir(ns.cache_dir)
    tag = ns.method if not ns.formula else f"{ns.method}:{ns.formula.lower()}"
    results: dict[int, Polynomial] = {}
    todo = []
    for n in ns_list:
        hit = cache_mod.load(root, cache_mod.cell_key(gamma, n, family, s, tag))
        if hit is None:
            todo.append(n)
        else:
            results[n] = hit
    if todo:
        if ns.method in ("brute", "fqsym"):
            jobs = [(gamma, family, n, s, ns.method, ns.formula, ns.allow_large) for n in todo]
            if ns.jobs > 1 and len(jobs) > 1:
                with ProcessPoolExecutor(max_workers=ns.jobs) as pool:
                    computed = list(pool.map(_cell_job, jobs))
            else:
                computed = [_cell_job(j) for j in jobs]
        else:
            computed = compute_range(gamma, family, todo, s, ns.method, ns.formula)
        for n, poly in zip(todo, computed):
            results[n] = poly
            cache_mod.store(root, cache_mod.cell_key(gamma, n, family, s, tag), poly)
    records = [poly_record(gamma, family, n, s, results[n]) for n in ns_list]
    print(render_polys(records, ns.format))
    return 0


# -- stats / clusters ---------------------------------------------------------------

STAT_ORDER = ("des", "maj", "comaj", "pk", "lpk", "ides", "imaj", "icomaj", "ipk", "ilpk", "inv")


def cmd_stats(ns: argparse.Namespace) -> int:
    try:
        p = parse_perm(ns.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    d = stats(p).as_dict()
    if ns.format == "json":
        print(json.dumps({"perm": format_perm(p), **d}))
    elif ns.format == "csv":
        print(",".join(("perm",) + STAT_ORDER + ("comp",)))
        print(",".join([format_perm(p)] + [str(d[k]) for k in STAT_ORDER]
                       + ['"' + ",".join(map(str, d["comp"])) + '"']))
    else:
        comp = "(" + ",".join(map(str, d["comp"])) + ")"
        print(" ".join(f"{k}={d[k]}" for k in STAT_ORDER) + f" comp={comp}")
    return 0


def cmd_clusters(ns: argparse.Namespace) -> int:
    gamma = _pattern(ns.pattern)
    try:
        p = parse_perm(ns.perm)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cs = clusters(p, gamma)
    rows = [[[m.start, format_perm(m.pattern)] for m in c.marks] for c in cs]
    if ns.format == "json":
        print(json.dumps({"perm": format_perm(p), "pattern": [format_perm(q) for q in gamma.patterns],
                          "clusters": rows}))
    elif ns.format == "csv":
        print("cluster,marks")
        for i, r in enumerate(rows):
            print(f'{i},"' + " ".join(f"{a}:{q}" for a, q in r) + '"')
    else:
        print(f"{len(rows)} cluster(s) on {format_perm(p)}")
        for r in rows:
            print("  " + " ".join(f"({a},{q})" for a, q in r) + f"   mk={len(r)}")
    return 0


# -- table ------------------------------------------------------------------------------

def cmd_table(ns: argparse.Namespace) -> int:
    from .tables import METHODS, TABLES, compute_table, errata, golden
    if ns.id not in TABLES:
        raise UsageError(f"unknown table {ns.id}; valid ids are {', '.join(map(str, sorted(TABLES)))}")
    spec = TABLES[ns.id]
    methods = [m for m in METHODS if m != "fqsym"] if ns.method == "all" else [ns.method]
    want = golden(ns.id, ns.apply_errata)
    known = {n: v for (t, n), v in errata().items() if t == ns.id}
    N = min(9, ns.max_n)
    ok = True
    out = []
    for method in methods:
        got = compute_table(ns.id, method, N)
        for n in range(N + 1):
            match = got[n] == want[n]
            ok = ok and match
            note = ""
            if not match and n in known and got[n] == known[n][1]:
                note = f"  [known misprint: {known[n][2]}]"
            out.append({"method": method, "n": n, "expected": str(want[n]), "computed": str(got[n]),
                        "match": match, "note": note.strip(" []")})
    if ns.format == "json":
        print(json.dumps({"table": ns.id, "caption": spec.caption, "pass": ok, "rows": out}, indent=1))
    elif ns.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=list(out[0]), lineterminator="\n")
        w.writeheader()
        w.writerows(out)
        print(buf.getvalue().rstrip("\n"))
    else:
        print(f"Table {ns.id}: {spec.caption}")
        for r in out:
            flag = "ok  " if r["match"] else "DIFF"
            line = f"  {flag} {r['method']:6} n={r['n']}  {r['computed']}"
            if not r["match"]:
                line += f"   expected {r['expected']}"
                if r["note"]:
                    line += f"  [{r['note']}]"
            print(line)
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


# -- verify ------------------------------------------------------------------------------

def _report(name: str, ok: bool, rows: list, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps({"suite": name, "pass": ok, "rows": [list(map(str, r)) if isinstance(r, tuple)
                                                              else str(r) for r in rows]}, indent=1))
    else:
        for r in rows:
            print("  " + (" ".join(map(str, r)) if isinstance(r, tuple) else str(r)))
        print(f"{'PASS' if ok else 'FAIL'} {name}")
    return 0 if ok else 1


def cmd_verify(ns: argparse.Namespace) -> int:
    from . import checks
    suite = ns.suite
    rows: list = []
    if suite == "word-cluster":
        from .words import verify_word_cluster_method
        words = ns.words.split(",")
        ok = verify_word_cluster_method(ns.alphabet, words, ns.maxlen, rows)
        rows = [("len", "words", "mismatches")] + rows
    elif suite == "fqsym-identity":
        from .fqsym import verify_cluster_identity
        ok = verify_cluster_identity(_pattern(ns.pattern or "123"), ns.N or 7, rows)
        rows = [("degree", "basis elements", "mismatches")] + rows
    elif suite == "hom-multiplicative":
        from .fqsym import HOMS, hom_is_multiplicative_check
        homs = HOMS if ns.hom == "all" else [ns.hom]
        ok = True
        for h in homs:
            if h not in HOMS:
                raise UsageError(f"unknown hom {h!r}; expected one of {', '.join(HOMS)}")
            ok = hom_is_multiplicative_check(h, ns.cap, rows) and ok
        rows = [("hom", "pairs", "mismatches")] + rows
    elif suite == "three-way":
        pats = (ns.pattern or "123;321;1234;4321;13245;12435").split(";")
        fams = [parse_family(f) for f in (ns.family or "A_ides,P_ipk,P_ilpk").split(",")]
        ok = True
        for p in pats:
            for fam in fams:
                ok = checks.three_way_check(_pattern(p), fam, ns.N or 8, rows) and ok
        rows = [("pattern", "family", "s", "n", "routes", "agree")] + rows
    elif suite == "symmetry":
        ok = checks.inverse_stat_identities_check(ns.N or 7, rows)
        rows = [("n", "violations of (a)..(e)")] + rows
        for p in (ns.pattern or "123;321;132").split(";"):
            sub: list = []
            ok = checks.transport_identities_check(_pattern(p), ns.N or 7, sub) and ok
            rows += [(f"pattern {p}", "n", "(a)..(e)")] + [("", n, res) for n, res in sub]
    elif suite == "carlitz":
        ok = checks.carlitz_check(ns.n, ns.k, rows)
        rows = [("n", "holds")] + rows
    elif suite == "claims":
        ok = True
        if ns.which in ("ipk", "all"):
            ms = [ns.m] if ns.m else [3, 4, 5]
            for m in ms:
                sub: list = []
                ok = checks.claim_ipk_check(m, ns.N or 9, sub) and ok
                rows += [(f"ipk m={m}", "n", "count", f"f_n^({m - 1})")] + [("",) + r for r in sub]
        if ns.which in ("ilpk", "all"):
            sub = []
            ok = checks.claim_ilpk_check(ns.N or 9, sub) and ok
            rows += [("ilpk 321", "n", "count", "f_{n-1}f_n - floor((n+1)/2)", "double sum")]
            rows += [("",) + r for r in sub]
    elif suite == "prop-123":
        ok = checks.prop_123_ides_check(ns.N or 11, rows)
        rows = [(n, c, w, " ".join(format_perm(p) for p in wits)) for n, c, w, wits in rows]
        rows = [("n", "count", "expected", "witnesses (inverse has ides = 1)")] + rows
    elif suite == "log-concavity":
        from .tables import TABLES, compute_table
        ok = True
        ids = sorted(TABLES) if ns.table == "all" else [int(ns.table)]
        for tid in ids:
            polys = compute_table(tid, "closed", ns.N or 9)
            bad = [n for n, p in enumerate(polys) if not checks.log_concavity_check(p)]
            rows.append((f"table {tid}", "log-concave and unimodal" if not bad else f"fails at n={bad}"))
            ok = ok and not bad
    else:
        raise UsageError(f"unknown suite {suite!r}; expected one of {', '.join(VERIFY_SUITES)}")
    return _report(suite, ok, rows, ns.format)


# -- series-dump --------------------------------------------------------------------

def cmd_series_dump(ns: argparse.Namespace) -> int:
    if ns.list or not ns.formula:
        for name in sorted(FORMULAS):
            print(name)
        return 0
    f = FORMULAS.get(ns.formula.lower())
    if f is None:
        raise UsageError(f"unknown formula {ns.formula!r}; run 'series-dump --list'")
    if f.stat == "perm":
        raise UsageError("the GJ recurrences produce coefficient lists, not a series; use 'poly --method spec'")
    s = parse_s(ns.s)
    try:
        S = f.series(ns.N, s, m=ns.m, a=ns.a, gamma=_pattern(ns.pattern) if ns.pattern else None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if ns.format == "json":
        print(json.dumps({"formula": f.name, "trunc": dict(zip("stqx", S.trunc)),
                          "coeffs": [[list(e), str(c)] for e, c in sorted(S.coeffs.items())]}))
    else:
        for k in range(S.trunc[3] + 1):
            print(f"x^{k}: {format_terms(S.slice('x', k).coeffs)}")
    return 0


# -- parser -----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fqcluster",
                                 description="Consecutive patterns and inverse statistics, counted three ways.")
    sub = ap.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("stats", help="all statistics of one permutation")
    p.add_argument("perm")
    fmt(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("poly", help="distribution polynomials for a pattern set")
    p.add_argument("--pattern")
    p.add_argument("--family", help="ides, ipk, ilpk, imaj, icomaj, plain, q (or the full tag)")
    p.add_argument("--n", help="N, A..B or a comma list")
    p.add_argument("--method", choices=("brute", "spec", "closed", "fqsym"), default="brute")
    p.add_argument("--formula", help="registry name for --method closed (default: auto)")
    p.add_argument("--s", default="symbolic", help="integer value or 'symbolic'")
    p.add_argument("--allow-large", action="store_true", help=f"lift the brute-force cap n <= {BRUTE_CAP}")
    p.add_argument("--cache-dir", help=f"cache directory (default ${cache_mod.ENV_VAR})")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--list-formulas", action="store_true")
    fmt(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("clusters", help="list the clusters on a permutation")
    p.add_argument("perm")
    p.add_argument("--pattern", required=True)
    fmt(p)
    p.set_defaults(func=cmd_clusters)

    p = sub.add_parser("table", help="reproduce a golden table and diff it")
    p.add_argument("id", type=int)
    p.add_argument("--method", choices=("all", "brute", "closed", "spec", "fqsym"), default="all")
    p.add_argument("--apply-errata", action="store_true", help="compare against corrected rows")
    p.add_argument("--max-n", type=int, default=9)
    fmt(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=VERIFY_SUITES)
    p.add_argument("--pattern", help="pattern set; ';' separates several sets")
    p.add_argument("--family")
    p.add_argument("--N", type=int)
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--k", type=int, default=6)
    p.add_argument("--m", type=int)
    p.add_argument("--which", choices=("ipk", "ilpk", "all"), default="all")
    p.add_argument("--hom", default="all")
    p.add_argument("--cap", type=int, default=6)
    p.add_argument("--alphabet", default="abc")
    p.add_argument("--words", default="cab,bc")
    p.add_argument("--maxlen", type=int, default=8)
    p.add_argument("--table", default="all")
    fmt(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series-dump", help="print the summed series of a named theorem")
    p.add_argument("--formula")
    p.add_argument("--list", action="store_true")
    p.add_argument("--N", type=int, default=5)
    p.add_argument("--m", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--pattern")
    p.add_argument("--s", default="0")
    fmt(p)
    p.set_defaults(func=cmd_series_dump)
    return ap


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    t0 = time.perf_counter()
    try:
        code = ns.func(ns)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if getattr(ns, "verbose", False):
        print(f"[{time.perf_counter() - t0:.2f}s]", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
