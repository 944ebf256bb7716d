"""Command-line front end.

Exit status: 0 success, 1 usage or parse error, 2 computation error or
timeout, 3 a result that contradicts what must hold (for example a
construction that contains the forbidden forest).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .conjecture import ConstructionNotFreeError, goldberg_counterexample
from .constructions import Construction, linear_extremal, order4_extremal, star_extremal
from .embedding import find_embedding
from .forest import ForestClass, ForestSpec, ForestSyntaxError, classify, order4_counts, parse_forest
from .formulas import ForestClassError, RegimeError, star_forest_number, order4_number, turan_formula
from .graph import Graph6Error, GraphCapacityError, read_graph_text
from .oracle import DEFAULT_TIMEOUT, exact_turan, verify_range

EXIT_OK, EXIT_USAGE, EXIT_COMPUTE, EXIT_MISMATCH = 0, 1, 2, 3
TIMEOUT_ENV = "TURANFOREST_TIMEOUT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    command: str
    spec: ForestSpec
    n: int | None = None
    n_range: tuple[int, int] | None = None
    fmt: str = "table"
    oracle_cap: int = 9
    timeout: float | None = DEFAULT_TIMEOUT
    workers: int = 1
    output: Path | None = None
    variant: str | None = None
    index: int | None = None
    all_extremal: bool = False
    n_max: int = 60
    graph_file: Path | None = None


def _parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo < 1 or hi < lo:
        raise UsageError(f"empty or invalid range {text!r}")
    return lo, hi


def _default_timeout() -> float:
    raw = os.environ.get(TIMEOUT_ENV)
    if raw is None:
        return DEFAULT_TIMEOUT
    try:
        return float(raw)
    except ValueError:
        raise UsageError(f"{TIMEOUT_ENV}={raw!r} is not a number") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="turanforest", description="Turán numbers of path and star forests")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    f = sub.add_parser("formula", help="evaluate the closed form")
    f.add_argument("spec")
    f.add_argument("--n", type=int, required=True)
    f.add_argument("--format", choices=["table", "json"], default="table")

    c = sub.add_parser("construct", help="build the extremal construction")
    c.add_argument("spec")
    c.add_argument("--n", type=int, required=True)
    grp = c.add_mutually_exclusive_group()
    grp.add_argument("--variant", choices=["g1", "g2", "G1", "G2"])
    grp.add_argument("--index", type=int)
    c.add_argument("--format", choices=["table", "json", "graph6", "dot"], default="table")
    c.add_argument("--output", type=Path)

    k = sub.add_parser("check", help="test a graph file for a copy of the forest")
    k.add_argument("graph_file", type=Path)
    k.add_argument("spec")
    k.add_argument("--format", choices=["table", "json"], default="table")

    o = sub.add_parser("oracle", help="exact ex(n, F) by exhaustive search")
    o.add_argument("spec")
    o.add_argument("--n", type=int, required=True)
    o.add_argument("--all-extremal", action="store_true")
    o.add_argument("--timeout", type=float)
    o.add_argument("--workers", type=int, default=1)
    o.add_argument("--format", choices=["json", "table"], default="json")
    o.add_argument("--output", type=Path)

    v = sub.add_parser("verify", help="compare formula, construction and oracle over a range of n")
    v.add_argument("spec")
    v.add_argument("--range", dest="n_range", required=True)
    v.add_argument("--oracle-cap", type=int, default=9)
    v.add_argument("--timeout", type=float)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--format", choices=["table", "json"], default="table")
    v.add_argument("--output", type=Path, help="also write the JSON report here")

    g = sub.add_parser("conjecture", help="search for a Goldberg–Magdon-Ismail counterexample")
    g.add_argument("spec")
    g.add_argument("--n-max", type=int, default=60)
    g.add_argument("--format", choices=["table", "json"], default="table")
    return p


def config_from_args(args: argparse.Namespace) -> RunConfig:
    try:
        spec = parse_forest(args.spec)
    except ForestSyntaxError as exc:
        raise UsageError(str(exc)) from None
    cfg = RunConfig(command=args.command, spec=spec, fmt=args.format)
    if getattr(args, "n", None) is not None:
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        cfg.n = args.n
    if args.command in ("oracle", "verify"):
        cfg.timeout = args.timeout if args.timeout is not None else _default_timeout()
        if cfg.timeout is not None and cfg.timeout <= 0:
            cfg.timeout = None
        if args.workers < 1:
            raise UsageError("--workers must be at least 1")
        cfg.workers = args.workers
        cfg.output = args.output
    if args.command == "oracle":
        cfg.all_extremal = args.all_extremal
    if args.command == "verify":
        cfg.n_range = _parse_range(args.n_range)
        cfg.oracle_cap = args.oracle_cap
    if args.command == "construct":
        cfg.variant = args.variant.upper() if args.variant else None
        cfg.index = args.index
        cfg.output = args.output
        cls = classify(spec)
        if cfg.variant and cls is not ForestClass.ORDER4_MIXED:
            raise UsageError("--variant applies only to a*P4+b*S3 forests")
        if cfg.index is not None and not spec.is_star_forest:
            raise UsageError("--index applies only to star forests")
    if args.command == "check":
        cfg.graph_file = args.graph_file
    if args.command == "conjecture":
        if args.n_max < 1:
            raise UsageError("--n-max must be at least 1")
        cfg.n_max = args.n_max
    return cfg


def _emit(text: str, output: Path | None = None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text, encoding="utf-8")


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def _cmd_formula(cfg: RunConfig) -> int:
    ev = turan_formula(cfg.spec, cfg.n)
    if cfg.fmt == "json":
        _emit(_dump({"spec": cfg.spec.render(), **ev.to_json_obj()}))
        return EXIT_OK
    lines = [
        f"forest   {cfg.spec.render()}  ({classify(cfg.spec).value})",
        f"theorem  {ev.theorem}",
        f"n        {ev.n}",
        f"value    {ev.value}",
    ]
    if ev.c is not None:
        lines.append(f"c        {ev.c}")
    if ev.argmax_i is not None:
        lines.append(f"argmax_i {ev.argmax_i}  (all maximisers: {', '.join(map(str, ev.maximizers))})")
        lines.append("f_i      " + ", ".join(f"{f}/2" if f % 2 else str(f // 2) for f in ev.f_doubled))
    if ev.attained_by:
        lines.append(f"attained {', '.join(ev.attained_by)}; large-n extremal: {', '.join(ev.claimed_extremal)}")
    lines.append("caveat   only claimed for n sufficiently large" if ev.asymptotic_caveat else "caveat   none")
    lines += [f"note     {note}" for note in ev.notes]
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def _pick_construction(cfg: RunConfig) -> Construction:
    spec, n = cfg.spec, cfg.n
    cls = classify(spec)
    if cls is ForestClass.LINEAR_GENERAL:
        return linear_extremal(spec, n)
    if cls in (ForestClass.ALL_P3, ForestClass.STAR_FOREST):
        i = cfg.index if cfg.index is not None else star_forest_number(spec, n).argmax_i
        return star_extremal(spec, n, i)
    if cls is ForestClass.ORDER4_MIXED:
        a, b = order4_counts(spec)
        variant = cfg.variant or order4_number(a, b, n).attained_by[0]
        return order4_extremal(a, b, n, variant)
    raise ForestClassError(f"no construction known for {spec}")


def _cmd_construct(cfg: RunConfig) -> int:
    c = _pick_construction(cfg)
    free = find_embedding(c.graph, cfg.spec) is None
    g = c.graph
    if cfg.fmt == "graph6":
        text = g.to_graph6() + "\n"
    elif cfg.fmt == "dot":
        text = g.to_dot()
    elif cfg.fmt == "json":
        text = _dump({
            "spec": cfg.spec.render(),
            "n": cfg.n,
            "descriptor": c.descriptor.to_json_obj(),
            "edges": g.edge_count,
            "f_free": free,
            "graph": g.to_json_obj(),
            "graph6": g.to_graph6(),
        })
    else:
        d = c.descriptor
        text = (
            f"family      {d.family}\n"
            f"params      {', '.join(f'{k}={v}' for k, v in d.params.items())}\n"
            f"universal   {d.universal_count}\n"
            f"remainder   {d.remainder_kind}\n"
            f"vertices    {g.n}\n"
            f"edges       {g.edge_count}\n"
            f"F-free      {'yes' if free else 'NO'}\n"
            f"graph6      {g.to_graph6()}\n"
        )
    _emit(text, cfg.output)
    if not free:
        print(f"error: construction contains {cfg.spec.render()}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _cmd_check(cfg: RunConfig) -> int:
    try:
        g = read_graph_text(cfg.graph_file.read_text(encoding="utf-8"))
    except OSError as exc:
        raise UsageError(f"cannot read {cfg.graph_file}: {exc}") from None
    except (Graph6Error, GraphCapacityError, ValueError) as exc:
        raise UsageError(f"cannot parse {cfg.graph_file}: {exc}") from None
    emb = find_embedding(g, cfg.spec)
    if cfg.fmt == "json":
        _emit(_dump({
            "spec": cfg.spec.render(),
            "n": g.n,
            "edges": g.edge_count,
            "contains": emb is not None,
            "witness": None if emb is None else [list(a) for a in emb.assignments],
        }))
    elif emb is None:
        _emit("F-free\n")
    else:
        _emit("contains\n" + "".join(f"  {line}\n" for line in emb.describe()))
    return EXIT_OK


def _cmd_oracle(cfg: RunConfig) -> int:
    res = exact_turan(cfg.spec, cfg.n, enumerate_all=cfg.all_extremal, timeout=cfg.timeout, workers=cfg.workers)
    if cfg.fmt == "json":
        text = _dump(res.to_json_obj())
    else:
        bound = "" if res.exact else " (lower bound only: timed out)"
        text = f"ex({cfg.n}, {cfg.spec.render()}) = {res.max_edges}{bound}\n"
        text += "".join(f"  {lab.decode('ascii')}\n" for lab in res.labels)
    _emit(text, cfg.output)
    if not res.exact:
        print("error: oracle timed out; result is a lower bound", file=sys.stderr)
        return EXIT_COMPUTE
    return EXIT_OK


def _cmd_verify(cfg: RunConfig) -> int:
    lo, hi = cfg.n_range
    report = verify_range(cfg.spec, lo, hi, cfg.oracle_cap, timeout=cfg.timeout, workers=cfg.workers)
    payload = _dump(report.to_json_obj())
    _emit(payload if cfg.fmt == "json" else report.to_table())
    if cfg.output is not None:
        cfg.output.write_text(payload, encoding="utf-8")
    if report.mismatches:
        print(f"error: {len(report.mismatches)} row(s) contradict the theory", file=sys.stderr)
        return EXIT_MISMATCH
    if any(r.oracle is not None and not r.oracle_exact for r in report.rows):
        print("warning: some oracle runs timed out (bound-only rows)", file=sys.stderr)
    return EXIT_OK


def _cmd_conjecture(cfg: RunConfig) -> int:
    rep = goldberg_counterexample(cfg.spec, cfg.n_max)
    if rep is None:
        msg = f"no counterexample found up to {cfg.n_max}"
        _emit(_dump({"spec": cfg.spec.render(), "counterexample": None, "n_max": cfg.n_max})
              if cfg.fmt == "json" else msg + "\n")
        return EXIT_OK
    if cfg.fmt == "json":
        _emit(_dump(rep.to_json_obj()))
    else:
        _emit(
            f"counterexample for {rep.spec.render()}: e(F)={rep.e_F}, k={rep.k}\n"
            f"  n          {rep.witness_n} (>= e(F)+k = {rep.e_F + rep.k})\n"
            f"  edges      {rep.edges}\n"
            f"  avg degree {rep.avg_degree.numerator}/{rep.avg_degree.denominator} > {rep.e_F - 1} = e(F)-1\n"
            f"  F-free     yes (certified)\n"
            f"  family     {rep.descriptor.family}\n"
            f"  graph6     {rep.witness.to_graph6()}\n"
        )
    return EXIT_OK


_COMMANDS = {
    "formula": _cmd_formula,
    "construct": _cmd_construct,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "conjecture": _cmd_conjecture,
}


def run(cfg: RunConfig) -> int:
    try:
        return _COMMANDS[cfg.command](cfg)
    except ConstructionNotFreeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (RegimeError, ForestClassError, GraphCapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
