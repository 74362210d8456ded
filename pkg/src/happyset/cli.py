"""Command-line front end.

Exit codes: 0 success, 1 input error or solver mismatch, 2 infeasible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import generators
from .cd import AUTO, solve_maxehs_cd
from .cw import solve_maxhs_cw
from .decomposition import (
    CwExpression,
    compute_twin_partition,
    minimum_cluster_deletion_set,
    modular_decompose,
    parse_tree_to_cw_expression,
)
from .figures import FIGURES
from .graph import MAXEHS, MAXHS, Graph, Infeasible, InputError, format_graph, read_graph
from .mw import solve_maxhs_mw
from .nd import solve_maxehs_nd
from .oracle import OracleCapExceeded, brute_maxehs, brute_maxhs

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE = 0, 1, 2

VALID_ALGOS = {MAXHS: ("mw", "cw", "brute"), MAXEHS: ("nd", "cd", "brute")}
BENCH_HEADER = ["instance", "algo", "param", "k", "n", "m", "objective", "time_ms", "work_units"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def run_solver(g: Graph, problem: str, algo: str, k: int, *, tree=None, expr=None, deletion_set=AUTO):
    if algo not in VALID_ALGOS.get(problem, ()):
        pairs = ", ".join(f"{p}:{a}" for p, algos in VALID_ALGOS.items() for a in algos)
        raise InputError(f"algorithm {algo!r} does not solve {problem!r}; valid pairs: {pairs}")
    if algo == "brute":
        return (brute_maxhs if problem == MAXHS else brute_maxehs)(g, k)
    if algo == "mw":
        return solve_maxhs_mw(g, k, tree=tree)
    if algo == "cw":
        if expr is None:
            expr = parse_tree_to_cw_expression(tree or modular_decompose(g))
        return solve_maxhs_cw(expr, k)
    if algo == "nd":
        return solve_maxehs_nd(g, k)
    return solve_maxehs_cd(g, k, deletion_set)


def format_report(fields: dict) -> str:
    return "".join(f"{key}={value}\n" for key, value in fields.items())


def parse_report(text: str) -> dict:
    out = {}
    for line in text.splitlines():
        if line and not line.startswith("#"):
            key, _, value = line.partition("=")
            out[key] = value
    return out


def _parse_ids(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise InputError(f"bad vertex list {text!r}") from None


def cmd_solve(args, out) -> int:
    g = read_graph(args.graph)
    expr = None
    if args.cw_expr:
        with open(args.cw_expr) as fh:
            expr = CwExpression.loads(fh.read())
        if expr.evaluate().to_graph() != g:
            raise InputError("clique-width expression does not build the given graph")
    deletion = AUTO if args.deletion_set in (None, AUTO) else _parse_ids(args.deletion_set)
    t0 = time.perf_counter()
    try:
        sol = run_solver(g, args.problem, args.algo, args.k, expr=expr, deletion_set=deletion)
    except Infeasible as exc:
        out.write(format_report({"problem": args.problem, "algorithm": args.algo, "k": args.k, "status": "infeasible"}))
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    elapsed = (time.perf_counter() - t0) * 1000.0
    sol.validate(g)
    fields = {
        "problem": sol.problem,
        "algorithm": args.algo,
        "n": g.n,
        "m": g.m,
        "k": sol.k,
        "objective": sol.objective,
        "certificate": ",".join(map(str, sorted(sol.chosen))),
    }
    for key in ("mw", "max_fanout", "cw", "nd", "cd"):
        if key in sol.stats:
            fields[f"param_{key}"] = sol.stats[key]
    if "deletion_set" in sol.stats:
        fields["deletion_set"] = ",".join(map(str, sol.stats["deletion_set"]))
    for key in ("work_units", "dp_cells", "entire_sets", "sprime_subsets", "subsets"):
        if key in sol.stats:
            fields[key] = sol.stats[key]
    fields["time_ms"] = f"{elapsed:.3f}"
    fields["status"] = "ok"
    out.write(format_report(fields))
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    g = read_graph(args.graph)
    if args.what == "modular":
        tree = modular_decompose(g)
        tree.validate(g)
        data = tree.to_json()
        data["max_fanout"] = tree.max_fanout
        out.write(json.dumps(data, indent=1) + "\n")
        print(f"width={tree.prime_width} max_fanout={tree.max_fanout}", file=sys.stderr)
    elif args.what == "twins":
        tp = compute_twin_partition(g)
        lines = [f"nd={tp.width}"]
        for i, (mod, kind) in enumerate(zip(tp.modules, tp.kinds)):
            lines.append(f"module {i} {kind} " + ",".join(map(str, mod)))
        lines.append("q=" + ",".join(map(str, tp.q)))
        lines.append("quotient_edges=" + " ".join(f"{a}-{b}" for a, b in tp.quotient.sorted_edges()))
        out.write("\n".join(lines) + "\n")
    elif args.what == "cluster":
        cds = minimum_cluster_deletion_set(g)
        fields = {
            "cd": cds.size,
            "deletion_set": ",".join(map(str, sorted(cds.x))),
            "clusters": " ".join(",".join(map(str, c)) for c in cds.clusters),
        }
        out.write(format_report(fields))
    else:
        tree = modular_decompose(g)
        expr = parse_tree_to_cw_expression(tree)
        out.write(f"# labels={expr.width} prime_width={tree.prime_width}\n")
        out.write(expr.dumps())
    return EXIT_OK


def cmd_gen(args, out) -> int:
    if args.family == "figure":
        if args.name not in FIGURES:
            raise InputError(f"unknown figure {args.name!r}; choose from {sorted(FIGURES)}")
        g = FIGURES[args.name]()
        comment = f"figure {args.name}"
    else:
        if args.seed is None:
            raise InputError("--seed is required for generated families")
        if args.family == "gnp":
            g = generators.gnp(args.n, args.p, args.seed)
            comment = f"gnp n={args.n} p={args.p} seed={args.seed}"
        elif args.family == "bounded-mw":
            g, _ = generators.bounded_mw(args.n, args.width, args.seed)
            comment = f"bounded-mw n={args.n} width={args.width} seed={args.seed}"
        else:
            sizes = generators.parse_clique_sizes(args.cliques)
            g = generators.cluster_apex(sizes, args.apex, args.seed)
            comment = f"cluster-apex cliques={args.cliques} apex={args.apex} seed={args.seed}"
    text = format_graph(g, comment)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _check_instance(job):
    """Compare every solver with the oracle on one graph, for every k."""
    ident, g = job
    mismatches, notices = [], []
    for k in range(1, g.n + 1):
        for problem, algos in VALID_ALGOS.items():
            values = {}
            for algo in algos:
                try:
                    values[algo] = run_solver(g, problem, algo, k).objective
                except OracleCapExceeded:
                    notices.append(f"instance {ident} k={k}: oracle skipped (cap)")
            if len(set(values.values())) > 1:
                mismatches.append((problem, k, values))
    return ident, mismatches, notices


def cmd_crosscheck(args, out) -> int:
    if args.instance:
        jobs = [(0, read_graph(args.instance))]
    else:
        jobs = []
        for i in range(args.count):
            rng = random.Random(args.seed * 1_000_003 + i)
            n = rng.randint(args.n_min, args.n_max)
            p = rng.uniform(args.p_min, args.p_max)
            jobs.append((i, generators.gnp(n, p, rng.randrange(1 << 30))))
    if args.workers > 1:
        with ProcessPoolExecutor(args.workers) as pool:
            results = list(pool.map(_check_instance, jobs))
    else:
        results = [_check_instance(job) for job in jobs]
    results.sort(key=lambda r: r[0])
    graphs = dict(jobs)
    failed = 0
    for ident, mismatches, notices in results:
        for note in notices:
            print(note, file=sys.stderr)
        if mismatches:
            failed += 1
            for problem, k, values in mismatches:
                out.write(f"MISMATCH instance={ident} problem={problem} k={k} {values}\n")
            out.write(format_graph(graphs[ident], f"instance {ident}"))
    out.write(f"instances={len(jobs)} failed={failed} status={'fail' if failed else 'pass'}\n")
    return EXIT_INPUT if failed else EXIT_OK


def bench_rows(sweep: str, values, n: int, k: int, width: int, seed: int, reps: int = 1, algo: str = "mw"):
    """Rows for the bench CSV; one per (swept value, repetition)."""
    rows = []
    for value in values:
        for rep in range(reps):
            inst_seed = seed + rep
            tree = None
            if sweep == "mw":
                g, tree = generators.bounded_mw(n, value, inst_seed)
                kk, run_algo, problem = k, "mw", MAXHS
            elif sweep == "cd":
                sizes = [max(1, (n - value) // 3)] * 3
                g = generators.cluster_apex(sizes, value, inst_seed)
                kk, run_algo, problem = k, "cd", MAXEHS
            elif sweep == "k":
                g, tree = generators.bounded_mw(n, width, inst_seed)
                kk, run_algo = value, algo
                problem = MAXHS if algo in VALID_ALGOS[MAXHS] else MAXEHS
            else:
                g, tree = generators.bounded_mw(value, width, inst_seed)
                kk, run_algo = k, algo
                problem = MAXHS if algo in VALID_ALGOS[MAXHS] else MAXEHS
            kk = min(kk, g.n)
            deletion = list(range(g.n - value, g.n)) if sweep == "cd" else AUTO
            sol = run_solver(g, problem, run_algo, kk, tree=tree, deletion_set=deletion)
            rows.append(
                {
                    "instance": f"{sweep}{value}-s{inst_seed}",
                    "algo": run_algo,
                    "param": value,
                    "k": kk,
                    "n": g.n,
                    "m": g.m,
                    "objective": sol.objective,
                    "time_ms": f"{sol.stats['time_ms']:.3f}",
                    "work_units": sol.stats["work_units"],
                }
            )
    return rows


def cmd_bench(args, out) -> int:
    values = [int(v) for v in args.values.split(",")]
    rows = bench_rows(args.sweep, values, args.n, args.k, args.width, args.seed, args.reps, args.algo)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=BENCH_HEADER, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    out.write(buf.getvalue())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="happyset", description="Exact Maximum (Edge) Happy Set solvers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve one instance")
    p.add_argument("graph")
    p.add_argument("--problem", required=True, choices=[MAXHS, MAXEHS])
    p.add_argument("--algo", required=True, choices=["mw", "cw", "nd", "cd", "brute"])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--cw-expr", help="clique-width expression file (cw only)")
    p.add_argument("--deletion-set", help="comma-separated cluster deletion set, or 'auto' (cd only)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("decompose", help="structural decompositions")
    p.add_argument("graph")
    p.add_argument("--what", required=True, choices=["modular", "twins", "cluster", "cwexpr"])
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("gen", help="generate an instance")
    p.add_argument("--family", required=True, choices=["gnp", "bounded-mw", "cluster-apex", "figure"])
    p.add_argument("--seed", type=int)
    p.add_argument("-n", type=int, default=10)
    p.add_argument("-p", type=float, default=0.5)
    p.add_argument("--width", type=int, default=4)
    p.add_argument("--cliques", default="3x4")
    p.add_argument("--apex", type=int, default=2)
    p.add_argument("--name", default="fig3")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("crosscheck", help="compare all solvers with the oracle")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--p-min", type=float, default=0.1)
    p.add_argument("--p-max", type=float, default=0.9)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instance", help="check a single graph file instead of a random corpus")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)

    p = sub.add_parser("bench", help="scaling sweep as CSV")
    p.add_argument("--sweep", required=True, choices=["mw", "cd", "k", "n"])
    p.add_argument("--values", required=True, help="comma-separated swept values")
    p.add_argument("-n", type=int, default=40)
    p.add_argument("-k", type=int, default=8)
    p.add_argument("--width", type=int, default=4)
    p.add_argument("--algo", default="mw", choices=["mw", "cw", "nd", "cd", "brute"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--reps", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
