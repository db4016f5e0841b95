"""Command-line front end.

    mixgraph census --min-n 3 --max-n 20 --verify
    mixgraph oracle --n 4
    mixgraph mc selfconverse --n 8 --trials 10000 --seed 7
    mixgraph spectrum --input graph.txt
    mixgraph check --input graph.txt
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from mixgraph import census, oracle, random_models
from mixgraph.graph import GraphError, converse, read_graphs, to_text
from mixgraph.iso import SizeLimitError, is_self_converse
from mixgraph.spectral import are_cospectral, char_poly, hermitian_adjacency


class CliError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _table(header: list[str], rows: list[list]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _cmd_census(args) -> int:
    if args.min_n < 1 or args.max_n < args.min_n:
        raise CliError("need 1 <= --min-n <= --max-n")
    if args.max_n > args.limit:
        raise CliError(f"--max-n {args.max_n} exceeds guarded limit {args.limit} (raise with --limit)")
    results = [census.selfconverse_fraction(n, max_n=args.limit) for n in range(args.min_n, args.max_n + 1)]
    checks = census.verify_table1(results) if args.verify else []
    if args.format == "csv":
        text = census.census_csv(results)
    elif args.format == "json":
        doc = json.loads(census.census_json(results))
        if args.verify:
            doc["verify"] = [{"n": n, "reference": ref, "computed": got, "match": ok} for n, ref, got, ok in checks]
        text = json.dumps(doc, indent=2) + "\n"
    else:
        header = ["n", "f(n)"]
        if args.exact:
            header += ["M(n)", "S(n)", "S/M"]
        if args.verify:
            header += ["table", "match"]
        ref = {n: (r, ok) for n, r, _, ok in checks}
        rows = []
        for r in results:
            row = [r.n, r.rendered]
            if args.exact:
                row += [r.mixed_count, r.selfconverse_count, r.as_row()["f_exact"]]
            if args.verify:
                row += list(ref.get(r.n, ("-", "-")))
            rows.append(row)
        text = _table(header, rows)
    _emit(text, args.output)
    if args.verify:
        bad = [n for n, _, _, ok in checks if not ok]
        if bad:
            print(f"verify: mismatch at n={bad}", file=sys.stderr)
            return 1
        print(f"verify: {len(checks)}/{len(checks)} values match the reference table", file=sys.stderr)
    return 0


def _cmd_oracle(args) -> int:
    c = oracle.brute_force_census(args.n, allow_n5=args.allow_n5, method=args.method)
    if args.format == "csv":
        text = oracle.oracle_csv([c])
    elif args.format == "json":
        text = oracle.oracle_json([c])
    else:
        row = oracle.census_row(c)
        text = _table(list(row), [list(row.values())])
    _emit(text, args.output)
    return 0


def _cmd_mc(args) -> int:
    p = random_models.DEFAULT_P[args.experiment] if args.p is None else args.p
    cfg = random_models.ExperimentConfig(n=args.n, p=p, trials=args.trials, seed=args.seed, epsilon=args.epsilon)
    if args.workers < 1:
        raise CliError("--workers must be at least 1")
    if args.experiment == "lemma1" and p != 0.25:
        raise CliError("lemma1 requires p = 0.25")
    report = random_models.RUNNERS[args.experiment](cfg, workers=args.workers)
    if args.format == "table":
        d = report.to_dict()
        rows = [[k, d["config"][k]] for k in ("n", "p", "trials", "seed", "epsilon")]
        rows += [[k, d[k]] for k in ("estimate", "successes", "stderr")]
        text = f"experiment: {report.experiment}\n" + _table(["field", "value"], rows)
    else:
        text = report.to_json()
    _emit(text, args.output)
    return 0


def _spectrum_record(x) -> dict:
    p = char_poly(hermitian_adjacency(x))
    pc = char_poly(hermitian_adjacency(converse(x)))
    return {
        "graph": to_text(x),
        "charpoly": list(p.coeffs),
        "converse_charpoly": list(pc.coeffs),
        "cospectral_with_converse": are_cospectral(x, converse(x)),
    }


def _cmd_spectrum(args) -> int:
    if args.random:
        if args.n is None:
            raise CliError("--random needs --n")
        if not 0.0 <= args.p <= 1.0:
            raise CliError("--p must lie in [0, 1]")
        graphs = [random_models.sample_mixed(args.n, args.p, random_models.trial_rng(args.seed, 0))]
    else:
        graphs = read_graphs(args.input)
    records = [_spectrum_record(x) for x in graphs]
    if args.format == "json":
        doc = {"schema": 1, "kind": "spectrum", "records": records}
        if args.random:
            doc["seed"] = args.seed
            doc["n"] = args.n
            doc["p"] = args.p
        text = json.dumps(doc, indent=2) + "\n"
    else:
        out = []
        if args.random:
            out.append(f"seed {args.seed} n {args.n} p {args.p}")
        for i, r in enumerate(records):
            if len(records) > 1:
                out.append(f"record {i}")
            out.append("charpoly: " + " ".join(map(str, r["charpoly"])))
            out.append("converse charpoly: " + " ".join(map(str, r["converse_charpoly"])))
            out.append("cospectral with converse: " + ("yes" if r["cospectral_with_converse"] else "no"))
        text = "\n".join(out) + "\n"
    _emit(text, args.output)
    return 0


def _cmd_check(args) -> int:
    graphs = read_graphs(args.input)
    witnesses = [is_self_converse(x) for x in graphs]
    if args.format == "json":
        records = [{"graph": to_text(x), "self_converse": w.found,
                    "witness": list(w.map.images) if w.found else None}
                   for x, w in zip(graphs, witnesses)]
        _emit(json.dumps({"schema": 1, "kind": "check", "records": records}, indent=2) + "\n", args.output)
        return 0
    out = []
    for i, w in enumerate(witnesses):
        verdict = f"self-converse: yes, witness {w.map.cycle_notation()}" if w.found else "self-converse: no"
        out.append(f"record {i}: {verdict}" if len(graphs) > 1 else verdict)
    _emit("\n".join(out) + "\n", args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mixgraph", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="table", formats=("table", "csv", "json")):
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("census", help="exact counts M(n), S(n) and the self-converse fraction")
    p.add_argument("--min-n", type=int, default=3)
    p.add_argument("--max-n", type=int, default=20)
    p.add_argument("--exact", action="store_true", help="show exact counts in the table")
    p.add_argument("--verify", action="store_true", help="compare with the reference table; exit 1 on mismatch")
    p.add_argument("--limit", type=int, default=census.DEFAULT_MAX_N, help="guarded upper bound on n")
    common(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("oracle", help="brute-force census over all labeled mixed graphs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--allow-n5", action="store_true")
    p.add_argument("--method", choices=("kernel", "reference"), default="kernel")
    common(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("mc", help="seeded Monte Carlo experiments")
    p.add_argument("experiment", choices=random_models.EXPERIMENTS)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--epsilon", type=float, default=random_models.DEFAULT_EPSILON)
    p.add_argument("--workers", type=int, default=1)
    common(p, "json")
    p.set_defaults(func=_cmd_mc)

    p = sub.add_parser("spectrum", help="characteristic polynomials and converse cospectrality")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input")
    src.add_argument("--random", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=0.5)
    common(p, formats=("table", "json"))
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("check", help="decide self-conversality of graphs in a file")
    p.add_argument("--input", required=True)
    common(p, formats=("table", "json"))
    p.set_defaults(func=_cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, GraphError, SizeLimitError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
