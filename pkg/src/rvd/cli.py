"""Command-line interface: compute, verify, audit, sweep, extremal.

Data goes to stdout (JSONL for per-graph results, CSV for audits and
sweeps); human summaries and the run manifest go to stderr. Exit codes:
0 all good, 1 usage error, 2 data errors (unparseable records), 3 check
failures. Corpus commands honor the RVD_WORKERS environment variable.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import nullcontext
from dataclasses import dataclass, asdict
from datetime import datetime, timezone
from typing import Optional

from . import __version__
from .bounds import degree_sum_audit, improved_size_bound, ng_audit, size_band_lemma
from .characterizations import (
    build_extremal_n_minus_1,
    build_ng_extremal,
    check_rvd_is_1,
    check_rvd_is_2,
    check_rvd_is_n,
    check_rvd_is_n_minus_1,
    extremal_n_minus_1_size,
    tree_complement_extremal,
)
from .coloring import format_coloring, is_rvd_coloring, parse_coloring
from .connectivity import upper_connectivity
from .graphs import (
    Graph,
    Graph6Error,
    complement,
    encode_graph6,
    graph_stats,
    is_connected,
    is_tree,
    parse_graph6,
)
from .randomlab import (
    CRITERION_BOTH,
    CRITERION_RVD_N,
    SweepConfig,
    criterion_rvd_n,
    threshold_sweep,
)
from .solver import (
    DEFAULT_EXACT_CAP,
    injective_chromatic_number,
    rvd_exact,
    rvd_fast,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_FAIL = 3

AUDIT_COLUMNS = ["graph6", "n", "m", "k", "bound_name", "bound_value", "observed", "pass"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage errors exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


@dataclass
class RunManifest:
    command: str
    flags: dict
    input_digest: Optional[str]
    tool_version: str
    started_at: str
    finished_at: str
    seed: Optional[int] = None


def _now() -> str:
    return datetime.now(timezone.utc).isoformat()


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _emit_manifest(manifest: RunManifest, out_path: Optional[str]) -> None:
    payload = json.dumps(asdict(manifest), sort_keys=True)
    print(payload, file=sys.stderr)
    if out_path:
        with open(out_path + ".manifest.json", "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")


def _open_output(out_path: Optional[str]):
    if out_path:
        return open(out_path, "w", encoding="utf-8", newline="")
    return nullcontext(sys.stdout)


def _read_corpus(path: str) -> tuple[bytes, list[str]]:
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(path, "rb") as fh:
            data = fh.read()
    lines = data.decode("ascii", errors="replace").splitlines()
    return data, lines


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("RVD_WORKERS", "1")))
    except ValueError:
        return 1


def _pool_map(fn, items):
    workers = _workers()
    if workers == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=8))


# ---------------------------------------------------------------------------
# compute
# ---------------------------------------------------------------------------

def _compute_one(job: tuple[int, str, str, int]) -> dict:
    lineno, raw, mode, cap = job
    try:
        g = parse_graph6(raw)
    except Graph6Error as exc:
        return {"error": f"graph6 parse: {exc}", "line": lineno}
    try:
        if mode == "exact":
            report = rvd_exact(g, cap=cap)
        else:
            report = rvd_fast(g, cap=cap, want_certificates=False)
    except ValueError as exc:
        return {"error": str(exc), "line": lineno, "graph6": raw}
    coloring = (format_coloring(report.optimal_coloring)
                if report.optimal_coloring is not None else None)
    return {
        "graph6": raw,
        "n": g.n,
        "m": g.m,
        "rvd": report.rvd,
        "lower": report.lower_bound,
        "upper": report.upper_bound,
        "method": report.method,
        "coloring": coloring,
        "elapsed_ms": round(report.elapsed * 1000.0, 3),
    }


def cmd_compute(args) -> int:
    started = _now()
    data, lines = _read_corpus(args.infile)
    jobs = [(i, ln, args.mode, args.cap)
            for i, ln in enumerate(lines, start=1) if ln.strip()]
    results = _pool_map(_compute_one, jobs)
    errors = 0
    with _open_output(args.out) as out:
        for res in results:
            errors += "error" in res
            print(json.dumps(res), file=out)
    manifest = RunManifest("compute", {"in": args.infile, "mode": args.mode,
                                       "cap": args.cap, "out": args.out},
                           _digest(data), __version__, started, _now())
    _emit_manifest(manifest, args.out)
    print(f"compute: {len(results) - errors} ok, {errors} errors", file=sys.stderr)
    return EXIT_DATA if errors else EXIT_OK


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def cmd_verify(args) -> int:
    started = _now()
    try:
        g = parse_graph6(args.graph)
    except Graph6Error as exc:
        print(f"verify: bad graph6 record: {exc}", file=sys.stderr)
        return EXIT_DATA
    coloring = parse_coloring(args.coloring)
    if coloring.n != g.n:
        print(f"verify: coloring has {coloring.n} entries but the graph has "
              f"{g.n} vertices", file=sys.stderr)
        return EXIT_USAGE
    check = is_rvd_coloring(g, coloring)
    if check.valid:
        payload = {
            "valid": True,
            "certificates": [
                {"x": c.x, "y": c.y, "cut": list(c.cut), "side_witness": c.side_witness}
                for c in check.certificates.values()
            ],
        }
    else:
        payload = {"valid": False, "failing_pair": list(check.failing_pair)}
    print(json.dumps(payload))
    manifest = RunManifest("verify", {"graph": args.graph, "coloring": args.coloring},
                           _digest(args.graph.encode()), __version__, started, _now())
    _emit_manifest(manifest, None)
    print("verify: VALID" if check.valid else
          f"verify: INVALID on pair {check.failing_pair}", file=sys.stderr)
    return EXIT_OK if check.valid else EXIT_FAIL


# ---------------------------------------------------------------------------
# audit
# ---------------------------------------------------------------------------

def _audit_row(g6: str, g: Optional[Graph], name: str, bound, observed, passed) -> dict:
    return {
        "graph6": g6,
        "n": g.n if g else "",
        "m": g.m if g else "",
        "k": "",
        "bound_name": name,
        "bound_value": str(bound),
        "observed": str(observed),
        "pass": {True: "1", False: "0", None: ""}[passed],
    }


def _audit_one(job: tuple[int, str, str, int]) -> list[dict]:
    lineno, raw, checks, cap = job
    try:
        g = parse_graph6(raw)
    except Graph6Error as exc:
        return [_audit_row(raw, None, "ERROR", "", f"graph6 parse at line {lineno}: {exc}", None)]
    if not is_connected(g) or g.n < 2:
        return [_audit_row(raw, g, "SKIPPED", "", "disconnected or trivial", None)]
    if g.n > cap:
        report = rvd_fast(g, cap=cap, want_certificates=False)
        if report.rvd is None:
            return [_audit_row(raw, g, "SKIPPED", "",
                               f"order exceeds exact cap {cap}", None)]
        k = report.rvd
        coloring = report.optimal_coloring
    else:
        report = rvd_exact(g, cap=cap)
        k = report.rvd
        coloring = report.optimal_coloring

    rows: list[dict] = []

    def row(name, bound, observed, passed):
        r = _audit_row(raw, g, name, bound, observed, passed)
        r["k"] = k
        rows.append(r)

    if checks in ("all", "chain"):
        stats = graph_stats(g)
        kplus = upper_connectivity(g)
        chi = injective_chromatic_number(g)
        dmax = stats.max_degree
        row("chain:delta<=kappa+", kplus, stats.min_degree, stats.min_degree <= kplus)
        row("chain:kappa+<=rvd", k, kplus, kplus <= k)
        row("chain:rvd<=chi_i", chi, k, k <= chi)
        row("chain:chi_i<=Delta(Delta-1)+1", dmax * (dmax - 1) + 1, chi,
            chi <= dmax * (dmax - 1) + 1)
    if checks in ("all", "charact"):
        row("charact:rvd=1", k == 1, check_rvd_is_1(g), check_rvd_is_1(g) == (k == 1))
        row("charact:rvd=2", k == 2, check_rvd_is_2(g), check_rvd_is_2(g) == (k == 2))
        row("charact:rvd=n", k == g.n, check_rvd_is_n(g), check_rvd_is_n(g) == (k == g.n))
        nm1 = check_rvd_is_n_minus_1(g).holds
        row("charact:rvd=n-1", k == g.n - 1, nm1, nm1 == (k == g.n - 1))
    if checks in ("all", "sizes"):
        if k >= 4:
            _, upper = size_band_lemma(g.n, k)
            row("size:band-upper", upper, g.m, g.m <= upper)
        if 2 * k >= g.n:
            bound = improved_size_bound(g.n, k)
            row("size:improved-upper", bound, g.m, g.m <= bound)
        if coloring is not None:
            for chk in degree_sum_audit(g, coloring).checks:
                row(f"size:{chk.name}", chk.bound, chk.observed, chk.passed)
    if checks in ("all", "ng"):
        record = ng_audit(g, cap=cap)
        if record.skipped:
            rows.append(_audit_row(raw, g, "ng:SKIPPED", "", record.reason, None))
        else:
            for chk in record.checks:
                row(f"ng:{chk.name}", chk.bound, chk.observed, chk.passed)
            if record.conjecture_holds is not None:
                row("ng:conjecture-sum>=n[observation]", g.n, record.total, None)
    return rows


def cmd_audit(args) -> int:
    started = _now()
    data, lines = _read_corpus(args.infile)
    jobs = [(i, ln, args.checks, args.cap)
            for i, ln in enumerate(lines, start=1) if ln.strip()]
    row_blocks = _pool_map(_audit_one, jobs)
    failures = 0
    errors = 0
    total = 0
    with _open_output(args.out) as out:
        writer = csv.DictWriter(out, fieldnames=AUDIT_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for block in row_blocks:
            for r in block:
                total += 1
                failures += r["pass"] == "0"
                errors += r["bound_name"] == "ERROR"
                writer.writerow(r)
    manifest = RunManifest("audit", {"in": args.infile, "checks": args.checks,
                                     "cap": args.cap, "out": args.out},
                           _digest(data), __version__, started, _now())
    _emit_manifest(manifest, args.out)
    print(f"audit: {total} rows, {failures} failures, {errors} parse errors",
          file=sys.stderr)
    if failures:
        return EXIT_FAIL
    return EXIT_DATA if errors else EXIT_OK


# ---------------------------------------------------------------------------
# sweep
# ---------------------------------------------------------------------------

def cmd_sweep(args) -> int:
    started = _now()
    try:
        c_values = tuple(float(tok) for tok in args.c.split(","))
        config = SweepConfig(n=args.n, c_values=c_values, trials=args.trials,
                             seed=args.seed, criterion=args.criterion)
    except ValueError as exc:
        print(f"sweep: {exc}", file=sys.stderr)
        return EXIT_USAGE
    points = threshold_sweep(config)
    with _open_output(args.out) as out:
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "c", "p", "trials", "successes", "fraction", "seed"])
        for pt in points:
            writer.writerow([config.n, pt.c, repr(pt.p), pt.trials, pt.successes,
                             repr(pt.fraction), config.seed])
    manifest = RunManifest("sweep", {"n": args.n, "c": args.c, "trials": args.trials,
                                     "criterion": args.criterion, "out": args.out},
                           _digest(json.dumps(vars(args), sort_keys=True,
                                              default=str).encode()),
                           __version__, started, _now(), seed=args.seed)
    _emit_manifest(manifest, args.out)
    print("sweep: " + ", ".join(f"c={pt.c} -> {pt.fraction:.3f}" for pt in points),
          file=sys.stderr)
    return EXIT_OK


# ---------------------------------------------------------------------------
# extremal
# ---------------------------------------------------------------------------

def cmd_extremal(args) -> int:
    started = _now()
    n = args.n
    family = args.family
    try:
        if family == "n1max":
            g = build_extremal_n_minus_1(n)
        elif family == "ng":
            g = build_ng_extremal(n)
        else:
            g = tree_complement_extremal(n)
    except ValueError as exc:
        print(f"extremal: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if g.n > 62:
        print("extremal: construction exceeds graph6 short-form range (n > 62)",
              file=sys.stderr)
        return EXIT_USAGE
    g6 = encode_graph6(g)
    if family == "n1max":
        report = rvd_fast(g, cap=args.cap, want_certificates=False)
        block = {"family": family, "n": n, "m": g.m,
                 "expected_m": extremal_n_minus_1_size(n),
                 "rvd": report.rvd, "expected_rvd": n - 1, "method": report.method}
        ok = g.m == block["expected_m"] and report.rvd == n - 1
    elif family == "ng":
        crit_g = criterion_rvd_n(g)
        crit_c = criterion_rvd_n(complement(g))
        block = {"family": family, "n": n, "m": g.m,
                 "criterion_graph": crit_g, "criterion_complement": crit_c,
                 "criterion_both": crit_g and crit_c}
        ok = crit_g and crit_c
    else:
        comp_report = rvd_fast(complement(g), cap=args.cap, want_certificates=False)
        block = {"family": family, "n": n, "is_tree": is_tree(g),
                 "rvd_complement": comp_report.rvd, "expected": n - 1}
        ok = is_tree(g) and comp_report.rvd == n - 1
    print(g6)
    print(json.dumps(block))
    manifest = RunManifest("extremal", {"family": family, "n": n},
                           None, __version__, started, _now())
    _emit_manifest(manifest, None)
    print(f"extremal: {'ok' if ok else 'CHECK FAILED'}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rvd", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="rvd per graph6 record, JSONL out")
    p.add_argument("--in", dest="infile", required=True,
                   help="graph6 corpus file, or - for stdin")
    p.add_argument("--mode", choices=["fast", "exact"], default="fast")
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP,
                   help="exact-search order cap")
    p.add_argument("--out", default=None, help="write JSONL here instead of stdout")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a coloring, print certificates")
    p.add_argument("--graph", required=True, help="graph6 record")
    p.add_argument("--coloring", required=True, help="comma-separated color ids")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="bound/characterization audits, CSV out")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--checks", choices=["all", "chain", "charact", "sizes", "ng"],
                   default="all")
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("sweep", help="random-graph threshold sweep, CSV out")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", required=True, help="comma-separated multipliers")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--criterion", choices=[CRITERION_RVD_N, CRITERION_BOTH],
                   default=CRITERION_RVD_N)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("extremal", help="emit an extremal construction + verification")
    p.add_argument("--family", choices=["n1max", "ng", "tree-complement"],
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_EXACT_CAP)
    p.set_defaults(func=cmd_extremal)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"rvd: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
