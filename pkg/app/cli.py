"""
Command-line front end

Exit codes: 0 success, 1 domain error (error name on stderr), 2 usage
error. Every number printed is exact; rationals appear as "a/b".
"""

import argparse
import contextlib
import json
import logging
import sys
from typing import Dict, List, Optional, Sequence, TextIO

from pydantic import ValidationError

from app.core.config import get_settings
from app.core.exceptions import FrobstratError
from app.core.logging import configure_logging
from app.models.invariants import BundleInvariants
from app.models.polygon import HNPolygon
from app.models.poset import AdmissibilityConstraints
from app.models.rational import format_rational, parse_rational
from app.schemas.invariants import DeterminantResponse, InvariantsPayload, ProfileResponse
from app.schemas.polygon import DominanceResponse, PolygonPayload, SlopeStatsResponse
from app.services.arithmetic import (
    canonical_filtration_profile,
    make_context,
    pullback_invariants,
    pushforward_determinant,
    pushforward_invariants,
    pushforward_slope,
    total_invariants,
)
from app.services.enumeration import (
    admissible_constraints,
    build_poset,
    enumerate_polygons,
    enumerate_polygons_bruteforce,
)
from app.services.polygon import dominates, is_oper_shape, mu_extremes, oper_polygon, slope_gap
from app.services.rendering import (
    polygon_to_json,
    polygons_to_json,
    poset_to_dot,
    poset_to_json,
    report_to_json,
    report_to_text,
    reports_to_json,
)
from app.services.verification import CLAIMS, OPER_DOMINANCE, run_batch, run_claim, verify_oper_dominance
from app.utils.parsing import parse_divisor, parse_point_map

logger = logging.getLogger(__name__)


class UsageError(Exception):
    """Bad input detected after argparse accepted the flags"""


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def rational_arg(text: str):
    try:
        return parse_rational(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--node-cap", type=positive_int, default=None,
                        help="enumeration budget (overrides FROBSTRAT_NODE_CAP)")
    common.add_argument("--workers", type=positive_int, default=None,
                        help="threads for enumeration and batch runs")
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")

    parser = argparse.ArgumentParser(
        prog="frobstrat",
        description="Exact invariants of Frobenius pushforwards and HN polygon strata on curves",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def command(name: str, help_text: str, formats=("json", "text")) -> argparse.ArgumentParser:
        cmd = sub.add_parser(name, help=help_text, parents=[common])
        cmd.add_argument("--format", choices=formats, default=formats[0])
        return cmd

    for name, help_text in (
        ("push", "invariants and slope of the Frobenius pushforward"),
        ("pull", "invariants of the Frobenius pullback"),
        ("canfil", "graded pieces of the canonical filtration of F^*F_*(E)"),
    ):
        cmd = command(name, help_text)
        cmd.add_argument("--p", type=int, required=True, help="characteristic")
        cmd.add_argument("--g", type=int, required=name != "pull", default=0, help="genus")
        cmd.add_argument("--r", type=positive_int, required=True, help="rank")
        cmd.add_argument("--d", type=int, required=True, help="degree")

    cmd = command("oper", "oper polygon for (r, d) and genus g")
    cmd.add_argument("--r", type=positive_int, required=True)
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--g", type=int, required=True)

    cmd = command("dominates", "does polygon P1 lie on or above polygon P2")
    cmd.add_argument("--p1", required=True, help="polygon JSON file, '-' for stdin")
    cmd.add_argument("--p2", required=True, help="polygon JSON file, '-' for stdin")

    cmd = command("slopes", "mu_max, mu_min and oper shape of a polygon")
    cmd.add_argument("--p1", required=True, help="polygon JSON file, '-' for stdin")
    cmd.add_argument("--g", type=int, default=None, help="genus for the oper shape test")

    cmd = command("enumerate", "all admissible polygons to (r, d)")
    cmd.add_argument("--r", type=positive_int, required=True)
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--g", type=int, default=None, help="use the 2g-2 gap family")
    cmd.add_argument("--max-gap", type=rational_arg, default=None)
    cmd.add_argument("--window", type=rational_arg, nargs=2, metavar=("LOW", "HIGH"), default=None)
    cmd.add_argument("--max-vertices", type=positive_int, default=None)
    cmd.add_argument("--oracle", choices=("dfs", "bruteforce"), default="dfs")

    cmd = command("poset", "dominance poset of the admissible family", ("json", "dot", "text"))
    cmd.add_argument("--r", type=positive_int, required=True)
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--g", type=int, default=None)
    cmd.add_argument("--input", default=None, help="JSON array of polygons instead of enumerating")

    cmd = command("verify", "check one claim at the polygon level")
    cmd.add_argument("--claim", choices=sorted(CLAIMS), required=True)
    cmd.add_argument("--p", type=int, default=None, help="characteristic (default: first grid value)")
    cmd.add_argument("--g", type=int, required=True)
    cmd.add_argument("--r", type=positive_int, default=None)
    cmd.add_argument("--d", type=int, default=0)
    cmd.add_argument("--max-gap", type=rational_arg, default=None,
                     help="oper-dominance only: replace the 2g-2 gap cap")
    cmd.add_argument("--timing", action="store_true", help="report real elapsed_ms")

    cmd = command("batch", "check claims over a parameter grid")
    cmd.add_argument("--claims", nargs="+", choices=sorted(CLAIMS), default=sorted(CLAIMS))
    cmd.add_argument("--p", type=int, nargs="+", default=None)
    cmd.add_argument("--g", type=int, nargs="+", default=None)
    cmd.add_argument("--d-min", type=int, default=None)
    cmd.add_argument("--d-max", type=int, default=None)
    cmd.add_argument("--r-max", type=positive_int, default=None)
    cmd.add_argument("--timing", action="store_true")

    cmd = command("detpush", "symbolic determinant of a pushforward")
    cmd.add_argument("--rank", type=positive_int, required=True)
    cmd.add_argument("--divisor", default="", help='e.g. "2*P1-1*P2"')
    cmd.add_argument("--map", dest="point_map", default="", help='e.g. "P1:Q1,P2:Q2"')

    return parser


class PolygonReader:
    """Loads polygon files; '-' reads stdin once and reuses it"""

    def __init__(self, stdin: TextIO):
        self.stdin = stdin
        self._stdin_text: Optional[str] = None

    def read_text(self, path: str) -> str:
        if path == "-":
            if self._stdin_text is None:
                self._stdin_text = self.stdin.read()
            return self._stdin_text
        try:
            with open(path, "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {path}: {e}")

    def load_json(self, path: str):
        try:
            return json.loads(self.read_text(path))
        except json.JSONDecodeError as e:
            raise UsageError(f"{path} is not valid JSON: {e}")

    def polygon(self, path: str) -> HNPolygon:
        try:
            payload = PolygonPayload.model_validate(self.load_json(path))
        except ValidationError as e:
            raise UsageError(f"{path} is not a polygon object: {e.errors()[0]['msg']}")
        return payload.to_polygon()

    def polygons(self, path: str) -> List[HNPolygon]:
        data = self.load_json(path)
        if not isinstance(data, list):
            raise UsageError(f"{path} must hold a JSON array of polygons")
        try:
            return [PolygonPayload.model_validate(item).to_polygon() for item in data]
        except ValidationError as e:
            raise UsageError(f"{path} holds a malformed polygon: {e.errors()[0]['msg']}")


def _invariants_text(label: str, payload: InvariantsPayload) -> str:
    text = f"{label}: rank={payload.rank} degree={payload.degree}"
    return text + (f" slope={payload.slope}" if payload.slope else "")


def _constraints_from_args(args) -> AdmissibilityConstraints:
    if args.g is not None:
        if args.max_gap is not None or args.window is not None:
            raise UsageError("--g cannot be combined with --max-gap/--window")
        ctx = make_context(2, args.g)
        ctx.require_theorem_range()
        base = admissible_constraints(args.r, args.d, ctx)
        if args.max_vertices is not None:
            base = base.model_copy(update={"max_vertices": args.max_vertices})
        return base
    if args.max_gap is None or args.window is None:
        raise UsageError("give either --g or both --max-gap and --window")
    try:
        return AdmissibilityConstraints(
            max_gap=args.max_gap,
            slope_window=tuple(args.window),
            max_vertices=args.max_vertices,
        )
    except ValidationError as e:
        raise UsageError(e.errors()[0]["msg"])


def dispatch(args, settings, reader: PolygonReader, out: TextIO) -> None:
    node_cap = args.node_cap or settings.NODE_CAP
    workers = args.workers or settings.ENUMERATION_WORKERS
    command = args.subcommand

    if command in ("push", "pull", "canfil"):
        ctx = make_context(args.p, args.g)
        inv = BundleInvariants(rank=args.r, degree=args.d)
        if command == "push":
            pushed = pushforward_invariants(inv, ctx)
            payload = InvariantsPayload(
                rank=pushed.rank, degree=pushed.degree,
                slope=format_rational(pushforward_slope(inv, ctx)),
            )
            if ctx.g < 1:
                logger.warning("g=%d: F_* need not preserve semistability here", ctx.g)
        elif command == "pull":
            payload = InvariantsPayload.from_invariants(pullback_invariants(inv, ctx), with_slope=True)
        else:
            gradeds = canonical_filtration_profile(inv, ctx)
            response = ProfileResponse(
                gradeds=[InvariantsPayload.from_invariants(x, with_slope=True) for x in gradeds],
                total=InvariantsPayload.from_invariants(total_invariants(gradeds)),
            )
            if args.format == "text":
                lines = [_invariants_text(f"l={len(gradeds) - 1 - i}", x) for i, x in enumerate(response.gradeds)]
                lines.append(_invariants_text("total", response.total))
                print("\n".join(lines), file=out)
            else:
                print(response.model_dump_json(exclude_none=True), file=out)
            return
        if args.format == "text":
            print(_invariants_text(command, payload), file=out)
        else:
            print(payload.model_dump_json(exclude_none=True), file=out)

    elif command == "oper":
        polygon = oper_polygon(args.r, args.d, args.g)
        print(str(polygon) if args.format == "text" else polygon_to_json(polygon), file=out)

    elif command == "dominates":
        first, second = reader.polygon(args.p1), reader.polygon(args.p2)
        result = dominates(first, second)
        if args.format == "text":
            print("true" if result else "false", file=out)
        else:
            response = DominanceResponse(
                dominates=result,
                p1=PolygonPayload.from_polygon(first),
                p2=PolygonPayload.from_polygon(second),
            )
            print(response.model_dump_json(), file=out)

    elif command == "slopes":
        polygon = reader.polygon(args.p1)
        mu_max, mu_min = mu_extremes(polygon)
        stats = SlopeStatsResponse(
            mu_max=format_rational(mu_max),
            mu_min=format_rational(mu_min),
            gap=format_rational(slope_gap(polygon)),
        )
        data = stats.model_dump()
        if args.g is not None:
            data["oper_shape"] = is_oper_shape(polygon, args.g)
        if args.format == "text":
            print(" ".join(f"{k}={str(v).lower() if isinstance(v, bool) else v}" for k, v in data.items()), file=out)
        else:
            print(json.dumps(data, separators=(",", ":")), file=out)

    elif command == "enumerate":
        constraints = _constraints_from_args(args)
        if args.oracle == "bruteforce":
            polygons = enumerate_polygons_bruteforce(args.r, args.d, constraints, node_cap)
        else:
            polygons = enumerate_polygons(args.r, args.d, constraints, node_cap, workers)
        if args.format == "text":
            print("\n".join(str(p) for p in polygons), file=out)
        else:
            print(polygons_to_json(polygons), file=out)

    elif command == "poset":
        if args.input is not None:
            polygons = reader.polygons(args.input)
        else:
            if args.g is None:
                raise UsageError("poset needs --g or --input")
            args.max_gap = args.window = args.max_vertices = None
            constraints = _constraints_from_args(args)
            polygons = enumerate_polygons(args.r, args.d, constraints, node_cap, workers)
        poset = build_poset(polygons)
        if args.format == "dot":
            out.write(poset_to_dot(poset))
        elif args.format == "text":
            lines = [f"{i}: {p}" for i, p in enumerate(poset.elements)]
            lines += [f"{i} covers {j}" for i, j in poset.covers]
            print("\n".join(lines), file=out)
        else:
            print(poset_to_json(poset), file=out)

    elif command == "verify":
        p = args.p if args.p is not None else settings.GRID_P[0]
        ctx = make_context(p, args.g)
        r = args.r if args.r is not None else (p if args.claim != OPER_DOMINANCE else 2)
        if args.max_gap is not None:
            if args.claim != OPER_DOMINANCE:
                raise UsageError("--max-gap only applies to oper-dominance")
            ctx.require_theorem_range()
            base = admissible_constraints(r, args.d, ctx)
            spread = (r - 1) * args.max_gap
            mean = base.slope_window[0] + (base.slope_window[1] - base.slope_window[0]) / 2
            try:
                loosened = AdmissibilityConstraints(
                    max_gap=args.max_gap,
                    slope_window=(mean - spread, mean + spread),
                    max_vertices=r + 1,
                )
            except ValidationError as e:
                raise UsageError(e.errors()[0]["msg"])
            report = verify_oper_dominance(r, args.d, ctx, loosened, node_cap, workers)
        else:
            report = run_claim(args.claim, ctx, r, args.d, node_cap, workers)
        if args.format == "text":
            print(report_to_text(report), file=out)
        else:
            print(report_to_json(report, timing=args.timing), file=out)

    elif command == "batch":
        d_range = None
        if args.d_min is not None or args.d_max is not None:
            d_range = (
                args.d_min if args.d_min is not None else settings.GRID_D_MIN,
                args.d_max if args.d_max is not None else settings.GRID_D_MAX,
            )
        for p in args.p or []:
            make_context(p, 2)
        reports = run_batch(
            args.claims, args.p, args.g, d_range, args.r_max, node_cap, workers
        )
        if args.format == "text":
            print("\n".join(report_to_text(r) for r in reports), file=out)
        else:
            print(reports_to_json(reports, timing=args.timing), file=out)

    elif command == "detpush":
        try:
            divisor = parse_divisor(args.divisor)
            point_map: Dict[str, str] = parse_point_map(args.point_map)
        except ValueError as e:
            raise UsageError(str(e))
        expr = pushforward_determinant(args.rank, divisor, point_map)
        response = DeterminantResponse.from_expr(expr)
        if args.format == "text":
            print(response.expression, file=out)
        else:
            print(response.model_dump_json(), file=out)


def run(
    argv: Sequence[str],
    stdin: Optional[TextIO] = None,
    stdout: Optional[TextIO] = None,
    stderr: Optional[TextIO] = None,
) -> int:
    """Parse argv, execute one subcommand and return the exit code"""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()

    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(list(argv))
    except SystemExit as e:
        return int(e.code or 0)

    try:
        settings = get_settings()
    except ValidationError as e:
        print(f"configuration error: {e.errors()[0]['msg']}", file=stderr)
        return 2

    configure_logging("DEBUG" if args.verbose else settings.LOG_LEVEL, stderr)

    try:
        dispatch(args, settings, PolygonReader(stdin), stdout)
    except UsageError as e:
        print(f"{parser.prog} {args.subcommand}: error: {e}", file=stderr)
        return 2
    except FrobstratError as e:
        print(f"{e.name}: {e}", file=stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
