import argparse
import logging
import re
import sys
from typing import List, Optional

import pandas as pd

from app.core.config import configure_logging, settings
from app.services import (
    apply_bijection,
    bfs_lengths,
    check,
    check_all,
    describe,
    encode,
    enumeration_table,
    family_gf,
    format_window,
    histogram,
    members,
    parse_bound,
    parse_window,
    sor_graph_trace,
)
from app.utils import (
    Bijection,
    CodeKind,
    GeneratingSet,
    GfFamily,
    OutputFormat,
    render_polynomial,
    render_record,
    render_table,
    to_json_text,
)

logger = logging.getLogger(__name__)

# A window whose first letter is negative, e.g. -3,2,4,-5,1
_SIGNED_WINDOW = re.compile(r"^-\d+(?:\^\d+)?(?:,\s*-?\d+(?:\^\d+)?)*$")


def _protect_windows(argv: List[str]) -> List[str]:
    """Keep argparse from reading '-3,2,1' as an option; parse_window ignores the leading space."""
    return [f" {arg}" if _SIGNED_WINDOW.match(arg) and "," in arg else arg for arg in argv]


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, default=1, help="number of colors")
    common.add_argument("--n", type=int, default=None, help="size of the alphabet")
    common.add_argument("--ferrers", default=None, help="Ferrers bound, e.g. 2,3,3,4")
    common.add_argument("--format", default=OutputFormat.Text.value, choices=[f.value for f in OutputFormat])
    common.add_argument("--cap", type=int, default=None, help="override ENUMERATION_CAP / BFS_CAP")
    common.add_argument("--jobs", type=int, default=None, help="worker processes for verify")
    common.add_argument("--log-level", default=None)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="python -m app", description=settings.APP_NAME)
    commands = parser.add_subparsers(dest="command", required=True)

    stat = commands.add_parser("stat", parents=[common], help="every statistic of one window")
    stat.add_argument("window")

    code = commands.add_parser("code", parents=[common], help="Lehmer, A-, B-, C- or D-code of a window")
    code.add_argument("window")
    code.add_argument("--kind", default=CodeKind.B.value, choices=[k.value for k in CodeKind])

    bijection = commands.add_parser("map", parents=[common], help="apply phi or psi")
    bijection.add_argument("window")
    bijection.add_argument("--bijection", default=Bijection.Phi.value, choices=[b.value for b in Bijection])

    enumerate_ = commands.add_parser("enumerate", parents=[common], help="one row per element of G(r,n,f) or D(n,f)")
    enumerate_.add_argument("--type-d", action="store_true")

    gf = commands.add_parser("gf", parents=[common], help="closed-form or enumerative generating function")
    gf.add_argument("family", choices=[f.value for f in GfFamily])
    gf.add_argument("--enumerative", default=None, choices=["sor", "length"])

    verify = commands.add_parser("verify", parents=[common], help="check a claim exhaustively")
    verify.add_argument("theorem", help="theorem id or 'all'")
    verify.add_argument("--all-ferrers", action="store_true")
    verify.add_argument("--timing", action="store_true")

    oracle = commands.add_parser("oracle", help="comb-graph trace or Cayley-graph BFS")
    oracles = oracle.add_subparsers(dest="kind", required=True)
    sor = oracles.add_parser("sor", parents=[common], help="comb-graph sorting trace of one window")
    sor.add_argument("window")
    bfs = oracles.add_parser("bfs", parents=[common], help="distance histogram over a generating set")
    bfs.add_argument("--genset", default=GeneratingSet.CoxeterG.value, choices=[g.value for g in GeneratingSet])
    return parser


def _require_n(args) -> int:
    if args.n is None:
        raise ValueError(f"--n is required for '{args.command}'")
    return args.n


def _bound(args):
    return parse_bound(args.ferrers) if args.ferrers else None


def cmd_stat(args) -> int:
    print(render_record(describe(parse_window(args.window, args.r)), args.format))
    return 0


def cmd_code(args) -> int:
    code = encode(parse_window(args.window, args.r), args.kind)
    if args.format == OutputFormat.Text.value:
        print(str(code))
    else:
        print(render_record({"code": str(code), **code.to_dict(args.kind)}, args.format))
    return 0


def cmd_map(args) -> int:
    image = apply_bijection(parse_window(args.window, args.r), args.bijection)
    if args.format == OutputFormat.Text.value:
        print(format_window(image))
    else:
        print(render_record({"bijection": args.bijection, "window": format_window(image)}, args.format))
    return 0


def cmd_enumerate(args) -> int:
    family = members(args.r, _require_n(args), _bound(args), args.type_d, args.cap)
    print(render_table(enumeration_table(family, args.type_d), args.format))
    return 0


def cmd_gf(args) -> int:
    polynomial = family_gf(args.family, args.r, _require_n(args), _bound(args), args.enumerative, args.cap)
    print(render_polynomial(polynomial, args.format))
    return 0


def _report_line(report) -> str:
    params = f"r={report.r} n={report.n}"
    if report.all_ferrers:
        params += " f=all"
    elif report.f is not None:
        params += f" f={report.f}"
    line = f"{report.theorem.value} {params}: {report.status} ({report.checked} checked)"
    if report.counterexample is not None:
        line += f" counterexample: {report.counterexample}"
    return line


def cmd_verify(args) -> int:
    n = _require_n(args)
    if args.theorem == "all":
        reports = check_all(args.r, n, _bound(args), args.all_ferrers, args.cap, args.jobs)
    else:
        reports = [check(args.theorem, args.r, n, _bound(args), args.all_ferrers, args.cap, args.jobs)]

    if args.format == OutputFormat.Json.value:
        data = [report.to_dict(args.timing) for report in reports]
        print(to_json_text(data[0] if len(data) == 1 else data))
    elif args.format == OutputFormat.Text.value:
        print("\n".join(_report_line(report) for report in reports))
    else:
        table = pd.DataFrame([
            {"theorem": report.theorem.value, "r": report.r, "n": report.n, "status": report.status,
             "checked": report.checked}
            for report in reports
        ])
        print(render_table(table, args.format))
    return 0 if all(report.passed for report in reports) else 1


def cmd_oracle(args) -> int:
    if args.kind == "sor":
        steps = sor_graph_trace(parse_window(args.window, args.r))
        if args.format == OutputFormat.Json.value:
            print(to_json_text({"steps": [s.to_dict() for s in steps], "total": sum(s.distance for s in steps)}))
        else:
            print(render_table(pd.DataFrame([s.to_dict() for s in steps]), args.format))
        return 0
    distances = bfs_lengths(GeneratingSet(args.genset), args.r, _require_n(args), args.cap)
    print(render_polynomial(histogram(distances.values()), args.format))
    return 0


COMMANDS = {
    "stat": cmd_stat,
    "code": cmd_code,
    "map": cmd_map,
    "enumerate": cmd_enumerate,
    "gf": cmd_gf,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command; exit codes are 0 on success, 1 on a failed verification, 2 on bad input."""
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_windows(list(sys.argv[1:] if argv is None else argv)))
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    configure_logging(args.log_level)

    try:
        return COMMANDS[args.command](args)
    except ValueError as e:
        print(f"ERROR: {str(e)}", file=sys.stderr)
        return 2
