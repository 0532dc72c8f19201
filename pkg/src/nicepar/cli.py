"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 disagreement between routes,
3 the oracle could not find a generic element.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Any, Sequence

from .classify import count_even_orbits, genfun_coefficients, is_nice
from .jordan import dimension_route
from .oracle import DEFAULT_SEED, DEFAULT_TRIALS, IndeterminateError, MatrixModel, is_nice_oracle, iter_colorings
from .oracle.bridge import to_chevalley
from .oracle.matrix_model import matrix_power_ranks
from .oracle.niceness import centralizer_dim_oracle
from .oracle.roots import CLASSICAL, EXCEPTIONAL_RANKS, MIN_RANK, parse_type
from .parabolic import ParabolicSpec, SpecParseError, UnsupportedOperation, blocks_to_coloring, coloring_to_blocks, format_spec, parse_spec
from .richardson import NotNiceError, build_matrix

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_INDETERMINATE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class Report:
    spec: str
    blocks: str | None = None
    verdicts: dict[str, Any] = field(default_factory=dict)
    jordan: dict[str, Any] | None = None
    timings: dict[str, float] = field(default_factory=dict)
    disagreement: bool = False

    def agreed(self) -> bool:
        values = {v["nice"] for v in self.verdicts.values() if isinstance(v, dict) and "nice" in v}
        return len(values) <= 1


def _spec(text: str) -> ParabolicSpec:
    try:
        return parse_spec(text)
    except (SpecParseError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _oracle_entry(spec: ParabolicSpec, args: argparse.Namespace) -> dict[str, Any]:
    v = is_nice_oracle(spec, trials=args.trials, seed=args.seed)
    return {"nice": v.nice, "rule": v.reason, "trials_used": v.trials_used, "centralizer_dim": v.centralizer_dim}


def _emit(payload: Any, args: argparse.Namespace, text: str, table: list[dict[str, Any]] | None = None) -> None:
    fmt = "json" if args.json else args.format
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    elif fmt == "csv" and table is not None:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(table[0].keys()) if table else ["empty"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(table)
        print(buf.getvalue(), end="")
    else:
        print(text)


def cmd_classify(args: argparse.Namespace) -> int:
    spec = _spec(args.spec)
    report = Report(spec=str(spec), blocks=format_spec(spec, blocks=True) if spec.is_classical else None)
    t0 = time.perf_counter()
    verdict = is_nice(spec)
    report.verdicts["closed_form"] = {"nice": verdict.nice, "rule": verdict.rule}
    if spec.is_classical:
        route = dimension_route(coloring_to_blocks(spec))
        report.verdicts["dimension_route"] = {"nice": route.nice, "centralizer_dim": route.centralizer, "levi_dim": route.levi}
    report.timings["closed_form"] = time.perf_counter() - t0
    code = EXIT_OK
    if args.verify:
        t0 = time.perf_counter()
        try:
            report.verdicts["oracle"] = _oracle_entry(spec, args)
        except IndeterminateError as exc:
            report.verdicts["oracle"] = {"indeterminate": str(exc)}
            code = EXIT_INDETERMINATE
        report.timings["oracle"] = time.perf_counter() - t0
    report.disagreement = not report.agreed()
    if report.disagreement:
        code = EXIT_DISAGREE
    lines = [f"{report.spec}" + (f"  ({report.blocks})" if report.blocks else "")]
    lines.append(f"nice: {'yes' if verdict.nice else 'no'}  rule: {verdict.rule}")
    if "dimension_route" in report.verdicts:
        d = report.verdicts["dimension_route"]
        lines.append(f"dimension route: dim g^x = {d['centralizer_dim']}, dim m = {d['levi_dim']}")
    if "oracle" in report.verdicts:
        o = report.verdicts["oracle"]
        lines.append("oracle: " + (o["indeterminate"] if "indeterminate" in o else f"{'nice' if o['nice'] else 'not nice'} ({o['rule']})"))
    if report.disagreement:
        lines.append("DISAGREEMENT between routes")
    table = [{"spec": report.spec, "nice": verdict.nice, "rule": verdict.rule, "disagreement": report.disagreement}]
    _emit(asdict(report), args, "\n".join(lines), table)
    return code


def cmd_jordan(args: argparse.Namespace) -> int:
    spec = _spec(args.spec)
    if not spec.is_classical:
        raise UsageError(f"jordan: {spec.label} is exceptional; only classical types have a block description")
    blocks = coloring_to_blocks(spec)
    route = dimension_route(blocks)
    form = route.jordan
    data = {
        "spec": str(spec),
        "blocks": format_spec(spec, blocks=True),
        "ranks": list(form.ranks[1:]),
        "kernel_dims": list(form.kernel_dims),
        "partition": list(form.partition.parts),
        "dual_partition": list(form.partition.dual().parts),
        "centralizer_dim": route.centralizer,
        "levi_dim": route.levi,
        "nice": route.nice,
    }
    text = "\n".join(
        [
            f"{data['blocks']}",
            f"partition: {form.partition}  dual: {form.partition.dual()}",
            f"rank x^j: {data['ranks']}  dim ker x^j: {data['kernel_dims']}",
            f"dim g^x = {route.centralizer}  dim m = {route.levi}" + ("  (gl_N)" if spec.lie_type == "A" else ""),
            f"nice by dimension: {'yes' if route.nice else 'no'}",
        ]
    )
    _emit(data, args, text, [{k: (v if not isinstance(v, list) else " ".join(map(str, v))) for k, v in data.items()}])
    return EXIT_OK


def check_richardson(spec: ParabolicSpec) -> dict[str, Any]:
    """Exact checks on X_R: membership, support, centralizer and power ranks."""
    blocks = coloring_to_blocks(spec)
    matrix = build_matrix(blocks)
    x = matrix.to_exact()
    model = MatrixModel(blocks.lie_type, blocks.blocks)
    route = dimension_route(blocks)
    shift = 1 if blocks.lie_type == "A" else 0  # the model works in sl_N
    cdim = model.centralizer_dim(x) + shift
    root_cdim = centralizer_dim_oracle(to_chevalley(x, spec.lie_type, spec.rank), blocks_to_coloring(blocks)) + shift
    ranks = matrix_power_ranks(x)
    return {
        "in_algebra": matrix.is_in_algebra(),
        "degree_one": matrix.has_degree_one_support(),
        "centralizer_dim": cdim,
        "centralizer_dim_roots": root_cdim,
        "levi_dim": route.levi,
        "ranks": ranks,
        "closed_form_ranks": list(route.jordan.ranks[1:]),
        "ok": matrix.is_in_algebra()
        and matrix.has_degree_one_support()
        and cdim == route.levi == root_cdim
        and ranks == list(route.jordan.ranks[1:]),
    }


def cmd_richardson(args: argparse.Namespace) -> int:
    spec = _spec(args.spec)
    if not spec.is_classical:
        raise UsageError(f"richardson: no matrix recipe for {spec.label}")
    blocks = coloring_to_blocks(spec)
    try:
        matrix = build_matrix(blocks)
    except NotNiceError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    code = EXIT_OK
    check = None
    if args.check:
        check = check_richardson(spec)
        if not check["ok"]:
            code = EXIT_DISAGREE
    fmt = "json" if args.json else args.format
    if fmt == "json":
        payload = matrix.to_dict()
        payload["spec"] = str(spec)
        if check is not None:
            payload["check"] = check
        print(json.dumps(payload, indent=2))
    elif fmt == "csv":
        print(matrix.to_csv(), end="")
    else:
        print(f"X_R for {format_spec(spec, blocks=True)} ({spec})")
        print(matrix.to_text())
        print("roots: " + " ".join(matrix.root_labels()))
        if check is not None:
            print(
                f"check: in algebra {check['in_algebra']}, degree one {check['degree_one']}, "
                f"dim g^X = {check['centralizer_dim']} (roots {check['centralizer_dim_roots']}), dim m = {check['levi_dim']}, "
                f"ranks {check['ranks']}: {'ok' if check['ok'] else 'FAILED'}"
            )
    if args.plot_dir:
        from .plots import plot_richardson

        name = format_spec(spec, blocks=True).replace("#", "_").replace(",", "-")
        out = plot_richardson(matrix, Path(args.plot_dir) / f"richardson_{name}.png")
        print(f"wrote {out}", file=sys.stderr)
    return code


@dataclass
class SweepResult:
    lie_type: str
    rows: list[dict[str, Any]]
    truncated: bool
    indeterminate: int

    @property
    def disagreements(self) -> int:
        return sum(1 for r in self.rows if not r["agree"])

    @property
    def nice_count(self) -> int:
        return sum(1 for r in self.rows if r["closed_form"])


def run_sweep(
    lie_type: str,
    max_rank: int | None = None,
    *,
    min_rank: int | None = None,
    trials: int = DEFAULT_TRIALS,
    seed: int = DEFAULT_SEED,
    budget: float | None = None,
) -> SweepResult:
    """Compare closed form, dimension route and oracle on every coloring."""
    if lie_type in EXCEPTIONAL_RANKS:
        ranks = [EXCEPTIONAL_RANKS[lie_type]]
    else:
        if max_rank is None:
            raise ValueError("classical sweeps need a maximum rank")
        ranks = list(range(max(min_rank or 1, MIN_RANK[lie_type]), max_rank + 1))
    start = time.perf_counter()
    rows: list[dict[str, Any]] = []
    truncated = False
    indeterminate = 0
    for rank in ranks:
        for coloring in iter_colorings(rank):
            if budget is not None and time.perf_counter() - start > budget:
                truncated = True
                break
            spec = ParabolicSpec(lie_type, rank, coloring)
            closed = is_nice(spec)
            row: dict[str, Any] = {
                "spec": str(spec),
                "rank": rank,
                "blocks": format_spec(spec, blocks=True) if spec.is_classical else "",
                "closed_form": closed.nice,
                "rule": closed.rule,
                "dimension_route": "",
                "oracle": "",
            }
            values = [closed.nice]
            if spec.is_classical:
                route = dimension_route(coloring_to_blocks(spec))
                row["dimension_route"] = route.nice
                values.append(route.nice)
            try:
                verdict = is_nice_oracle(spec, trials=trials, seed=seed)
                row["oracle"] = verdict.nice
                row["oracle_reason"] = verdict.reason
                values.append(verdict.nice)
            except IndeterminateError as exc:
                indeterminate += 1
                row["oracle"] = "indeterminate"
                row["oracle_reason"] = str(exc)
            row["agree"] = len(set(values)) == 1
            rows.append(row)
        if truncated:
            break
    return SweepResult(lie_type, rows, truncated, indeterminate)


def cmd_sweep(args: argparse.Namespace) -> int:
    try:
        lie_type, fixed = parse_type(args.lie_type) if args.lie_type.upper() in EXCEPTIONAL_RANKS else (args.lie_type.upper(), None)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if lie_type not in CLASSICAL and lie_type not in EXCEPTIONAL_RANKS:
        raise UsageError(f"unknown type {args.lie_type!r}")
    max_rank = args.rank if args.rank is not None else args.max_rank
    if lie_type in CLASSICAL and max_rank is None:
        raise UsageError("sweep: give a maximum rank for classical types")
    result = run_sweep(lie_type, max_rank, trials=args.trials, seed=args.seed, budget=args.budget)
    summary = {
        "type": lie_type,
        "colorings": len(result.rows),
        "nice": result.nice_count,
        "disagreements": result.disagreements,
        "indeterminate": result.indeterminate,
        "truncated": result.truncated,
    }
    fmt = "json" if args.json else args.format
    if fmt == "json":
        print(json.dumps({"summary": summary, "rows": result.rows}, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        fields = ["spec", "rank", "blocks", "closed_form", "rule", "dimension_route", "oracle", "oracle_reason", "agree"]
        writer = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        writer.writeheader()
        writer.writerows(result.rows)
        print(buf.getvalue(), end="")
    else:
        for row in result.rows:
            if args.verbose or not row["agree"]:
                print(
                    f"{row['spec']:<24} {row['blocks']:<22} closed={row['closed_form']!s:<5} "
                    f"dim={row['dimension_route']!s:<5} oracle={row['oracle']!s:<5} {row['rule']}"
                    + ("" if row["agree"] else "  DISAGREE")
                )
        print(
            f"{lie_type}: {summary['colorings']} colorings, {summary['nice']} nice, "
            f"{summary['disagreements']} disagreements, {summary['indeterminate']} indeterminate"
            + ("  [TRUNCATED by budget]" if result.truncated else "")
        )
    if args.plot_dir:
        from .plots import plot_sweep

        out = plot_sweep(result.rows, Path(args.plot_dir) / f"sweep_{lie_type}.png", title=f"type {lie_type}")
        print(f"wrote {out}", file=sys.stderr)
    if result.disagreements:
        return EXIT_DISAGREE
    if result.indeterminate:
        return EXIT_INDETERMINATE
    return EXIT_OK


def cmd_even_orbits(args: argparse.Namespace) -> int:
    lie_type = args.lie_type.upper()
    if lie_type not in CLASSICAL:
        raise UsageError(f"even-orbits: {lie_type} is not a classical type")
    if args.rank < 1:
        raise UsageError("even-orbits: rank must be positive")
    orbits = count_even_orbits(lie_type, args.rank)
    comps = [list(c.parts) for c in orbits.compositions]
    payload = {"type": lie_type, "rank": args.rank, "family": orbits.family, "total": orbits.total, "count": orbits.count, "compositions": comps}
    text = f"{orbits.family}({orbits.total}): {orbits.count} even orbits\n" + "\n".join(
        "  (" + ",".join(map(str, c)) + ")" for c in comps
    )
    _emit(payload, args, text, [{"composition": " ".join(map(str, c))} for c in comps])
    return EXIT_OK


def cmd_genfun(args: argparse.Namespace) -> int:
    if args.max_degree < 1:
        raise UsageError("genfun: max degree must be >= 1")
    left, right = genfun_coefficients(args.max_degree)
    payload = {"max_degree": args.max_degree, "left": left, "right": right, "match": left == right}
    text = f"left:  {left}\nright: {right}\nmatch={'true' if left == right else 'false'}"
    table = [{"degree": d, "left": a, "right": b} for d, (a, b) in enumerate(zip(left, right), start=1)]
    _emit(payload, args, text, table)
    return EXIT_OK if left == right else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="shorthand for --format json")
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"oracle sampling seed (default {DEFAULT_SEED})")
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS, help="oracle attempts at a generic element")
    common.add_argument("--max-rank", type=int, default=None, help="largest rank for sweeps")

    parser = _Parser(prog="nicepar", description="Nice parabolic subalgebras and their Richardson elements.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("classify", parents=[common], help="decide niceness of one parabolic")
    p.add_argument("spec", help="e.g. A6:1,0,1,0,0,1 or C5#3,4,3")
    p.add_argument("--verify", action="store_true", help="also run the exact oracle")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("jordan", parents=[common], help="Jordan form of a generic element of g_1")
    p.add_argument("spec")
    p.set_defaults(func=cmd_jordan)

    p = sub.add_parser("richardson", parents=[common], help="print the Richardson matrix X_R")
    p.add_argument("spec")
    p.add_argument("--check", action="store_true", help="verify X_R exactly")
    p.add_argument("--plot-dir", default=None, help="write a PNG of the support here")
    p.set_defaults(func=cmd_richardson)

    p = sub.add_parser("sweep", parents=[common], help="three-way comparison over all colorings")
    p.add_argument("lie_type", help="A, B, C, D, G2, F4, E6, E7 or E8")
    p.add_argument("rank", type=int, nargs="?", default=None, help="maximum rank (classical types)")
    p.add_argument("--budget", type=float, default=None, help="stop after this many seconds")
    p.add_argument("--plot-dir", default=None, help="write a PNG summary here")
    p.add_argument("-v", "--verbose", action="store_true", help="print every coloring")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("even-orbits", parents=[common], help="even nilpotent orbits of a classical algebra")
    p.add_argument("lie_type")
    p.add_argument("rank", type=int)
    p.set_defaults(func=cmd_even_orbits)

    p = sub.add_parser("genfun", parents=[common], help="check the even-orbit generating function")
    p.add_argument("max_degree", type=int)
    p.set_defaults(func=cmd_genfun)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, UnsupportedOperation) as exc:
        print(f"nicepar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
