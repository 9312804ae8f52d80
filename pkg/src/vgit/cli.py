"""Command-line front end: JSON in, text/JSON/DOT reports out.

Input documents describe either a one-parameter action by weight blocks,
``{"cstar": {"blocks": [{"d": 1, "dim": 2}, ...]}}``, or a torus action by
per-coordinate weight vectors, ``{"torus": {"rank": 2, "coordinates":
[[g, h], ...], "slope": ["p/q", ...]}}``, optionally with a top-level
``"support"`` list of 1-based indices (blocks for cstar, coordinates for
torus).

Exit codes are a stable contract: 0 success, 1 semantic error (input is
well-formed but describes something invalid), 2 parse/usage error, 3
property violation (a checked equivalence failed, which would mean an
implementation bug).  Rationals serialize as "p/q" in lowest terms with
positive denominator; all JSON goes through one canonical dumper so that
emitted output re-parses and re-renders byte-identically.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction
from typing import Any, Sequence, TextIO

from .bb import bb_data, flow_limits
from .cstar import (
    Chamber,
    EmptyComplement,
    OpenInterval,
    Wall,
    chamber_of,
    chambers,
    is_semistable,
    representative_slope,
    semistable_supports,
)
from .flips import flip_chain
from .quotients import (
    Empty,
    GeneralStratified,
    QuotientDescriptor,
    SingleFixed,
    TwoBlockProduct,
    quotient_descriptor,
)
from .torus import (
    CharacterSlope,
    TorusAction,
    chamber_scan,
    commuting_principle_check,
)
from .weights import Linearization, SupportPattern, WeightDecomposition, make_decomposition
from .worked_examples import notion_counts, two_block_report

EXIT_OK = 0
EXIT_SEMANTIC = 1
EXIT_PARSE = 2
EXIT_VIOLATION = 3

_RAT_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


class _UsageError(Exception):
    """Malformed input or command line; maps to exit code 2."""


def fmt_rat(x: Fraction | int) -> str:
    q = Fraction(x)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    if not isinstance(text, str) or not _RAT_RE.match(text.strip()):
        raise _UsageError(f"not a rational 'p/q' string: {text!r}")
    return Fraction(text.strip())


def dump_json(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def fmt_pattern(s: SupportPattern) -> str:
    return "{" + ",".join(str(i) for i in s.indices) + "}"


def _sorted_patterns(patterns) -> list[SupportPattern]:
    return sorted(patterns, key=lambda s: s.indices)


def _patterns_json(patterns) -> list[list[int]]:
    return [list(s.indices) for s in _sorted_patterns(patterns)]


# ---------------------------------------------------------------------------
# Input document handling


def _load_document(args: argparse.Namespace) -> Any:
    path = getattr(args, "input", "-") or "-"
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise _UsageError(f"cannot read input: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"malformed JSON: {exc}") from exc


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _UsageError(msg)


def _support_from(doc: Any) -> SupportPattern | None:
    if "support" not in doc:
        return None
    raw = doc["support"]
    _expect(
        isinstance(raw, list)
        and all(isinstance(i, int) and not isinstance(i, bool) for i in raw),
        '"support" must be a list of integers',
    )
    return SupportPattern(frozenset(raw))


def _cstar_input(args: argparse.Namespace) -> tuple[WeightDecomposition, SupportPattern | None]:
    doc = _load_document(args)
    _expect(isinstance(doc, dict), "input document must be a JSON object")
    _expect("cstar" in doc, 'this subcommand needs a {"cstar": ...} document')
    body = doc["cstar"]
    _expect(isinstance(body, dict) and "blocks" in body, '"cstar" must be an object with "blocks"')
    blocks = body["blocks"]
    _expect(isinstance(blocks, list), '"blocks" must be a list')
    raw = []
    for entry in blocks:
        _expect(
            isinstance(entry, dict)
            and set(entry) == {"d", "dim"}
            and all(isinstance(entry[k], int) and not isinstance(entry[k], bool) for k in ("d", "dim")),
            'each block must be {"d": int, "dim": int}',
        )
        raw.append((entry["d"], entry["dim"]))
    return make_decomposition(raw), _support_from(doc)


def _torus_input(
    args: argparse.Namespace,
) -> tuple[TorusAction, SupportPattern | None, CharacterSlope | None]:
    doc = _load_document(args)
    _expect(isinstance(doc, dict), "input document must be a JSON object")
    _expect("torus" in doc, 'this subcommand needs a {"torus": ...} document')
    body = doc["torus"]
    _expect(
        isinstance(body, dict) and {"rank", "coordinates"} <= set(body),
        '"torus" must be an object with "rank" and "coordinates"',
    )
    rank = body["rank"]
    _expect(isinstance(rank, int) and not isinstance(rank, bool), '"rank" must be an integer')
    coords = body["coordinates"]
    _expect(
        isinstance(coords, list)
        and all(
            isinstance(w, list)
            and all(isinstance(c, int) and not isinstance(c, bool) for c in w)
            for w in coords
        ),
        '"coordinates" must be a list of integer vectors',
    )
    slope = None
    if "slope" in body:
        raw = body["slope"]
        _expect(isinstance(raw, list), '"slope" must be a list of "p/q" strings')
        slope = CharacterSlope(tuple(parse_rat(s) for s in raw))
    action = TorusAction(rank, tuple(tuple(w) for w in coords))
    return action, _support_from(doc), slope


# ---------------------------------------------------------------------------
# Shared renderers


def _decomp_json(decomp: WeightDecomposition) -> dict[str, Any]:
    return {"blocks": [{"d": d, "dim": n} for d, n in decomp.blocks]}


def _decomp_text(decomp: WeightDecomposition) -> str:
    inner = ", ".join(f"(d={d}, dim={n})" for d, n in decomp.blocks)
    return f"decomposition: blocks {inner}"


def _chamber_json(chamber: Chamber) -> dict[str, Any]:
    if isinstance(chamber, Wall):
        return {"kind": "wall", "block": chamber.block, "weight": chamber.weight}
    if isinstance(chamber, OpenInterval):
        return {"kind": "open", "lo": chamber.lo, "hi": chamber.hi}
    assert isinstance(chamber, EmptyComplement)
    return {"kind": "outside"}


def _chamber_text(chamber: Chamber) -> str:
    if isinstance(chamber, Wall):
        return f"wall {{{chamber.weight}}}"
    if isinstance(chamber, OpenInterval):
        return f"open ({chamber.lo}, {chamber.hi})"
    return "outside"


def _quotient_json(desc: QuotientDescriptor) -> dict[str, Any]:
    kind = desc.kind
    if isinstance(kind, Empty):
        return {"kind": "empty"}
    if isinstance(kind, SingleFixed):
        return {"kind": "single_fixed", "block": kind.block}
    if isinstance(kind, TwoBlockProduct):
        return {"kind": "product", "bidegree": list(kind.bidegree)}
    assert isinstance(kind, GeneralStratified)
    return {"kind": "stratified", "strata": [list(p) for p in kind.strata]}


def _quotient_text(desc: QuotientDescriptor) -> str:
    kind = desc.kind
    if isinstance(kind, Empty):
        return "empty"
    if isinstance(kind, SingleFixed):
        return f"fixed space P(W{kind.block})"
    if isinstance(kind, TwoBlockProduct):
        a, b = kind.bidegree
        return f"product P(W1) x P(W2) with O({a}, {b})"
    assert isinstance(kind, GeneralStratified)
    inner = ", ".join(f"({i},{j})" for i, j in kind.strata)
    return f"stratified: {inner}"


def _pattern_set_text(patterns) -> str:
    ordered = _sorted_patterns(patterns)
    if not ordered:
        return "(none)"
    return " ".join(fmt_pattern(s) for s in ordered)


# ---------------------------------------------------------------------------
# Subcommands


def _cmd_chambers(args: argparse.Namespace, out: TextIO) -> int:
    decomp, support = _cstar_input(args)
    structure = chambers(decomp)
    if args.json:
        payload: dict[str, Any] = {
            "decomposition": _decomp_json(decomp),
            "chambers": [
                {
                    "index": i,
                    **_chamber_json(structure.at(i)),
                    "representative_slope": fmt_rat(representative_slope(decomp, i)),
                    "semistable_supports": _patterns_json(semistable_supports(decomp, i)),
                }
                for i in range(1, len(structure) + 1)
            ],
        }
        if support is not None:
            payload["support_verdicts"] = [
                {
                    "chamber": i,
                    "semistable": is_semistable(
                        decomp,
                        support,
                        Linearization.from_slope(representative_slope(decomp, i)),
                    ),
                }
                for i in range(1, len(structure) + 1)
            ]
        out.write(dump_json(payload))
        return EXIT_OK
    out.write(_decomp_text(decomp) + "\n")
    out.write(f"chambers: {len(structure)}\n")
    for i in range(1, len(structure) + 1):
        cham = structure.at(i)
        sets = _pattern_set_text(semistable_supports(decomp, i))
        out.write(f"  {i}. {_chamber_text(cham)}  semistable: {sets}\n")
    if support is not None:
        verdicts = []
        for i in range(1, len(structure) + 1):
            lin = Linearization.from_slope(representative_slope(decomp, i))
            verdicts.append("yes" if is_semistable(decomp, support, lin) else "no")
        out.write(f"support {fmt_pattern(support)} semistable per chamber: {' '.join(verdicts)}\n")
    return EXIT_OK


def _bb_dot(decomp: WeightDecomposition) -> str:
    data = bb_data(decomp)
    lines = ["digraph bb {", "  rankdir=LR;"]
    for f in data.fixed_components:
        lines.append(
            f'  F{f.block} [label="F{f.block}: weight {f.weight}, P^{f.projective_dim}"];'
        )
    for (i, j), cls in sorted(data.strata.items()):
        lines.append(f'  F{i} -> F{j} [label="C({i},{j}): {len(cls)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _cmd_bb(args: argparse.Namespace, out: TextIO) -> int:
    decomp, support = _cstar_input(args)
    data = bb_data(decomp)
    if args.dot:
        out.write(_bb_dot(decomp))
        return EXIT_OK
    if args.json:
        payload: dict[str, Any] = {
            "decomposition": _decomp_json(decomp),
            "fixed_components": [
                {"block": f.block, "weight": f.weight, "projective_dim": f.projective_dim}
                for f in data.fixed_components
            ],
            "strata": [
                {"from": i, "to": j, "supports": _patterns_json(cls)}
                for (i, j), cls in sorted(data.strata.items())
            ],
            "source": data.source,
            "sink": data.sink,
        }
        if support is not None:
            lo, hi = flow_limits(decomp, support)
            payload["flow_limits"] = {
                "support": list(support.indices),
                "at_zero": lo,
                "at_infinity": hi,
            }
        out.write(dump_json(payload))
        return EXIT_OK
    out.write(_decomp_text(decomp) + "\n")
    out.write("fixed components:\n")
    for f in data.fixed_components:
        out.write(f"  F{f.block}: weight {f.weight}, P^{f.projective_dim}\n")
    if data.strata:
        out.write("strata:\n")
        for (i, j), cls in sorted(data.strata.items()):
            out.write(f"  C({i},{j}): {_pattern_set_text(cls)}\n")
    else:
        out.write("strata: (none)\n")
    chain = " < ".join(f"F{i}" for i in data.order)
    out.write(f"order: {chain}; source F{data.source}, sink F{data.sink}\n")
    if support is not None:
        lo, hi = flow_limits(decomp, support)
        out.write(
            f"flow limits of {fmt_pattern(support)}: to F{lo} at 0, to F{hi} at infinity\n"
        )
    return EXIT_OK


def _cmd_flips(args: argparse.Namespace, out: TextIO) -> int:
    decomp, _ = _cstar_input(args)
    chain = flip_chain(decomp)
    if args.json:
        payload = {
            "decomposition": _decomp_json(decomp),
            "steps": [
                {
                    "index": step.index,
                    "chamber": _chamber_json(step.chamber),
                    "semistable_supports": _patterns_json(step.semistable),
                    "quotient": _quotient_json(step.quotient),
                }
                for step in chain.steps
            ],
            "crossings": [
                {
                    "block": c.block,
                    "weight": c.weight,
                    "entering": [list(p) for p in c.entering],
                    "leaving": [list(p) for p in c.leaving],
                }
                for c in chain.crossings
            ],
            "empty_chamber_index": chain.empty_chamber_index,
        }
        out.write(dump_json(payload))
        return EXIT_OK
    out.write(_decomp_text(decomp) + "\n")
    out.write("chain:\n")
    for step in chain.steps:
        out.write(
            f"  {step.index}. {_chamber_text(step.chamber)}  "
            f"semistable: {_pattern_set_text(step.semistable)}  "
            f"quotient: {_quotient_text(step.quotient)}\n"
        )
    out.write("crossings:\n")
    for c in chain.crossings:
        ent = ", ".join(f"({i},{j})" for i, j in c.entering) or "(none)"
        lea = ", ".join(f"({i},{j})" for i, j in c.leaving) or "(none)"
        out.write(f"  wall {{{c.weight}}}: entering {ent}; leaving {lea}\n")
    out.write(f"empty chamber: index {chain.empty_chamber_index}\n")
    return EXIT_OK


def _cmd_quotient(args: argparse.Namespace, out: TextIO) -> int:
    decomp, _ = _cstar_input(args)
    eta = parse_rat(args.slope)
    idx = chamber_of(decomp, eta)
    desc = quotient_descriptor(decomp, idx, slope=eta)
    if args.json:
        payload = {
            "decomposition": _decomp_json(decomp),
            "slope": fmt_rat(eta),
            "chamber_index": idx,
            "chamber": _chamber_json(desc.chamber),
            "quotient": _quotient_json(desc),
        }
        out.write(dump_json(payload))
        return EXIT_OK
    out.write(_decomp_text(decomp) + "\n")
    out.write(f"slope: {fmt_rat(eta)}\n")
    out.write(f"chamber: {idx} ({_chamber_text(desc.chamber)})\n")
    out.write(f"quotient: {_quotient_text(desc)}\n")
    return EXIT_OK


def _parse_grid(text: str | None) -> dict[str, int]:
    grid = {"dims": 4, "wmax": 2, "qmax": 2, "count": 200}
    if not text:
        return grid
    for part in text.split(","):
        if not part:
            continue
        if "=" not in part:
            raise _UsageError(f"grid entries look like key=value, got {part!r}")
        key, _, value = part.partition("=")
        if key not in grid:
            raise _UsageError(f"unknown grid key {key!r} (expected dims, wmax, qmax, count)")
        try:
            grid[key] = int(value)
        except ValueError as exc:
            raise _UsageError(f"grid value for {key!r} must be an integer") from exc
    for key, v in grid.items():
        if v < 1:
            raise _UsageError(f"grid value {key}={v} must be positive")
    return grid


def _check_one(
    action: TorusAction,
    support: SupportPattern,
    eta: Fraction,
    checks: dict[str, list[int]],
    failures: list[dict[str, Any]],
) -> None:
    ss = commuting_principle_check(action, support, eta)
    ps = commuting_principle_check(action, support, eta, polystable=True)
    scan_ok = chamber_scan(action, support).agree
    for name, ok in (
        ("semistable", ss.agree),
        ("polystable", ps.agree),
        ("chamber_scan", scan_ok),
    ):
        checks[name][0] += 1
        if ok:
            checks[name][1] += 1
        else:
            failures.append(
                {
                    "check": name,
                    "coordinates": [list(w) for w in action.coordinate_weights],
                    "support": list(support.indices),
                    "eta": fmt_rat(eta),
                }
            )


def _cmd_product_check(args: argparse.Namespace, out: TextIO) -> int:
    grid = _parse_grid(args.grid)
    seed_text = os.environ.get("VGIT_SEED", "0")
    try:
        seed = int(seed_text)
    except ValueError as exc:
        raise _UsageError(f"VGIT_SEED must be an integer, got {seed_text!r}") from exc
    rng = random.Random(seed)
    checks = {"semistable": [0, 0], "polystable": [0, 0], "chamber_scan": [0, 0]}
    failures: list[dict[str, Any]] = []
    instance_text = None
    if args.input is not None:
        action, support, slope = _torus_input(args)
        if slope is None:
            raise ValueError('product-check input needs a "slope" of the form ["0/1", "p/q"]')
        if action.rank != 2 or slope.eta[0] != 0:
            raise ValueError(
                "product-check expects a rank-2 action checked at slope (0, eta)"
            )
        if support is None:
            support = action.full_support()
        _check_one(action, support, slope.eta[1], checks, failures)
        instance_text = (
            f"instance: coords={[list(w) for w in action.coordinate_weights]} "
            f"support={list(support.indices)} eta={fmt_rat(slope.eta[1])}"
        )
    for _ in range(grid["count"]):
        dim = rng.randint(1, grid["dims"])
        coords = tuple(
            (rng.randint(-grid["wmax"], grid["wmax"]), rng.randint(-grid["wmax"], grid["wmax"]))
            for _ in range(dim)
        )
        action = TorusAction(2, coords)
        size = rng.randint(1, dim)
        support = SupportPattern(frozenset(rng.sample(range(1, dim + 1), size)))
        eta = Fraction(rng.randint(-8, 8), rng.randint(1, grid["qmax"]))
        _check_one(action, support, eta, checks, failures)
    total = sum(c[0] for c in checks.values())
    agreed = sum(c[1] for c in checks.values())
    if args.json:
        payload = {
            "grid": {**grid, "seed": seed},
            "checks": {
                name: {"checked": c[0], "agreed": c[1]} for name, c in checks.items()
            },
            "agree": [agreed, total],
            "failures": failures,
        }
        if instance_text is not None:
            payload["instance"] = instance_text
        out.write(dump_json(payload))
    else:
        out.write(
            f"grid: dims<={grid['dims']}, weights in [-{grid['wmax']},{grid['wmax']}]^2, "
            f"eta p/q with |p|<=8 q<={grid['qmax']}, count={grid['count']}, seed={seed}\n"
        )
        if instance_text is not None:
            out.write(instance_text + "\n")
        for name in ("semistable", "polystable", "chamber_scan"):
            c = checks[name]
            out.write(f"{name.replace('_', ' ')} agree: {c[1]}/{c[0]}\n")
        out.write(f"agree: {agreed}/{total}\n")
        for f in failures:
            out.write(
                f"DISAGREE [{f['check']}] coords={f['coordinates']} "
                f"support={f['support']} eta={f['eta']}\n"
            )
    return EXIT_OK if agreed == total else EXIT_VIOLATION


def _cmd_example(args: argparse.Namespace, out: TextIO) -> int:
    if args.name == "flipsex":
        on_q, on_pw = notion_counts(0, 1)
        if args.json:
            out.write(
                dump_json(
                    {"d1": 0, "d2": 1, "on_quotient": on_q, "on_ambient": on_pw}
                )
            )
        else:
            out.write("pair example at (d1, d2) = (0, 1)\n")
            out.write(f"notions: ({on_q}, {on_pw})\n")
        return EXIT_OK
    assert args.name == "two-block"
    report = two_block_report(0, 1)
    if args.json:
        payload = {
            "decomposition": _decomp_json(report.decomposition),
            "chambers": [
                {
                    "index": i + 1,
                    **_chamber_json(cham),
                    "representative_slope": fmt_rat(report.representative_slopes[i]),
                    "semistable_supports": _patterns_json(report.semistable_sets[i]),
                }
                for i, cham in enumerate(report.chamber_list)
            ],
            "open_bidegree": list(report.open_chamber_bidegree),
            "realizations": [
                {"target": list(target), "k": k, "d": d, "r": r}
                for target, (k, d, r) in report.realizations
            ],
        }
        out.write(dump_json(payload))
        return EXIT_OK
    out.write(_decomp_text(report.decomposition) + "\n")
    for i, cham in enumerate(report.chamber_list):
        out.write(
            f"  {i + 1}. {_chamber_text(cham)} at {fmt_rat(report.representative_slopes[i])}"
            f"  semistable: {_pattern_set_text(report.semistable_sets[i])}\n"
        )
    a, b = report.open_chamber_bidegree
    out.write(f"open chamber quotient: product with O({a}, {b})\n")
    for target, (k, d, r) in report.realizations:
        out.write(
            f"realize O{target}: k={k}, d={d}, r={r} (slope {fmt_rat(Fraction(d, k))})\n"
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Parser and entry point


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="vgit", description=__doc__, add_help=True)
    sub = parser.add_subparsers(dest="command")

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", default="-", help="JSON input file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("chambers", help="slope chambers and their semistable sets")
    common(p)
    p.set_defaults(func=_cmd_chambers)

    p = sub.add_parser("bb", help="fixed components, flow strata and limits")
    common(p)
    p.add_argument("--dot", action="store_true", help="emit the flow diagram as DOT")
    p.set_defaults(func=_cmd_bb)

    p = sub.add_parser("flips", help="quotient chain and wall-crossing deltas")
    common(p)
    p.set_defaults(func=_cmd_flips)

    p = sub.add_parser("quotient", help="quotient descriptor at a given slope")
    common(p)
    p.add_argument("--slope", required=True, help='linearization slope "p/q"')
    p.set_defaults(func=_cmd_quotient)

    p = sub.add_parser(
        "product-check",
        help="randomized check of the one-step vs two-step equivalences",
    )
    p.add_argument(
        "--input",
        default=None,
        help="optional torus JSON document checked alongside the grid",
    )
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument(
        "--grid",
        default=None,
        help="grid settings dims=D,wmax=W,qmax=Q[,count=N] (seed via VGIT_SEED)",
    )
    p.set_defaults(func=_cmd_product_check)

    p = sub.add_parser("example", help="replay a built-in worked example")
    p.add_argument("name", choices=["flipsex", "two-block"])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=_cmd_example)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if not hasattr(args, "func"):
            parser.print_usage(sys.stderr)
            return EXIT_PARSE
        return args.func(args, sys.stdout)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SEMANTIC
