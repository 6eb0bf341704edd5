#!/usr/bin/env python
import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv
from rich.console import Console
from rich.logging import RichHandler

from tiltwall.domain.fano import bounds, chern, tilt
from tiltwall.domain.fano.exceptions import TiltwallError, UnboundedSearchError, UnsupportedDegreeError
from tiltwall.domain.fano.value_objects import ChernCharacter, FanoContext, Slope, TiltPoint
from tiltwall.domain.fano.walls import enumerate_axis_destabilizers, enumerate_walls_on_line
from tiltwall.infrastructure.config import load_cli_config, resolve_thread_count
from tiltwall.infrastructure.factory import create_verification_service
from tiltwall.utils.rational_text import RationalParseError, RationalText
from tiltwall.utils.report_formatters import ReportFormatter

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_INCOMPLETE = 4

BOOL_OPTIONS = {"delta", "slope", "hilbert", "assert_lattice", "timings", "verbose"}

logger = logging.getLogger("tiltwall")


class UsageError(ValueError):
    """A missing or malformed command-line option."""


def _require(args: argparse.Namespace, name: str) -> str:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name.replace('_', '-')} is required")
    return value


def _degree(args: argparse.Namespace) -> FanoContext:
    raw = _require(args, "d")
    try:
        degree = int(str(raw).strip())
    except ValueError:
        raise UsageError(f"--d must be an integer, got {raw!r}") from None
    return FanoContext(degree)


def _rational(args: argparse.Namespace, name: str):
    return RationalText.parse(str(_require(args, name)))


def _character(args: argparse.Namespace, name: str) -> ChernCharacter:
    return RationalText.parse_character(str(_require(args, name)))


def _slope_as_dict(slope: Slope) -> Dict[str, Any]:
    return {"value": RationalText.format(slope.value), "branch": slope.branch.value}


def _emit(payload: Dict[str, Any]) -> None:
    print(json.dumps({"schema": SCHEMA_VERSION, **payload}, indent=2))


def cmd_char(args: argparse.Namespace) -> int:
    """Print a character with its twist, discriminant, slopes and Hilbert polynomial as requested."""
    ctx = _degree(args)
    v = _character(args, "ch")
    if args.assert_lattice:
        v = chern.make_character(*v.components(), assert_lattice=True, ctx=ctx)

    payload: Dict[str, Any] = {
        "command": "char",
        "degree": ctx.degree,
        "character": RationalText.format_character(v),
        "lattice": chern.is_lattice(v, ctx),
    }
    if args.twist is not None:
        payload["twist"] = RationalText.format(_rational(args, "twist"))
        payload["twisted"] = RationalText.format_character(chern.twist(v, _rational(args, "twist"), ctx))
    if args.delta:
        payload["delta"] = RationalText.format(chern.discriminant(v, ctx))
        payload["bogomolov"] = bounds.bogomolov_check(v, ctx).status.value
    if args.slope:
        payload["slope"] = RationalText.format(chern.slope_mumford(v))
    if args.hilbert or args.hilbert_at is not None:
        poly = chern.hilbert_polynomial(v, ctx)
        payload["hilbert"] = RationalText.format_all(poly.coefficients)
        payload["hilbert_reduced"] = RationalText.format_all(poly.reduced)
        payload["hilbert_leading"] = RationalText.format(poly.leading)
        if args.hilbert_at is not None:
            m = _rational(args, "hilbert_at")
            payload["hilbert_at"] = {"m": RationalText.format(m), "value": RationalText.format(poly.evaluate(m))}
    if args.alpha_sq is not None or args.beta is not None:
        pt = TiltPoint(_rational(args, "alpha_sq"), _rational(args, "beta"))
        charge = tilt.central_charge(v, pt, ctx)
        payload["tilt"] = {
            "alpha_sq": RationalText.format(pt.alpha_sq),
            "beta": RationalText.format(pt.beta),
            "central_charge": {"re": RationalText.format(charge.re), "im": RationalText.format(charge.im)},
            "slope": _slope_as_dict(tilt.tilt_slope(v, pt, ctx)),
            "rotated_slope": _slope_as_dict(tilt.rotated_slope(v, pt, ctx)),
            "region_v": tilt.region_v_contains(pt),
        }
    _emit(payload)
    return EXIT_OK


def cmd_pair(args: argparse.Namespace) -> int:
    """Print the Euler pairing chi(left, right)."""
    ctx = _degree(args)
    left, right = _character(args, "left"), _character(args, "right")
    chi = chern.euler_pairing(left, right, ctx)
    _emit({"command": "pair", "degree": ctx.degree, "chi": RationalText.format(chi)})
    return EXIT_OK


def cmd_walls(args: argparse.Namespace) -> int:
    """Enumerate and classify numerical walls along a vertical line."""
    ctx = _degree(args)
    target = _character(args, "ch")
    beta = _rational(args, "beta")
    lo = RationalText.parse(str(args.alpha_sq_min)) if args.alpha_sq_min is not None else 0
    hi = _rational(args, "alpha_sq_max")
    rank_cap = None
    if args.rank_cap is not None:
        try:
            rank_cap = int(str(args.rank_cap).strip())
        except ValueError:
            raise UsageError(f"--rank-cap must be an integer, got {args.rank_cap!r}") from None

    enumeration = enumerate_walls_on_line(target, ctx, beta, (lo, hi), rank_cap=rank_cap)
    _emit(
        {
            "command": "walls",
            "degree": ctx.degree,
            "target": RationalText.format_character(target),
            "beta": RationalText.format(beta),
            **ReportFormatter.enumeration_as_dict(enumeration),
        }
    )
    Console(stderr=True).print(
        f"{len(enumeration.candidates)} candidates, {len(enumeration.survivors)} survivors "
        f"(rank bound {enumeration.certificate.rank_bound_used}, {enumeration.certificate.derivation.value})"
    )
    return EXIT_OK


def cmd_axis(args: argparse.Namespace) -> int:
    """List the real-axis destabilizer pairs of a character at a point."""
    ctx = _degree(args)
    target = _character(args, "ch")
    pt = TiltPoint(_rational(args, "alpha_sq"), _rational(args, "beta"))
    cases = enumerate_axis_destabilizers(target, pt, ctx)
    _emit(
        {
            "command": "axis",
            "degree": ctx.degree,
            "target": RationalText.format_character(target),
            "alpha_sq": RationalText.format(pt.alpha_sq),
            "beta": RationalText.format(pt.beta),
            "cases": [ReportFormatter.case_as_dict(case) for case in cases],
        }
    )
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    """Rerun the recorded scenarios; exit 0 iff every report matches."""
    threads = resolve_thread_count(args.threads)
    degree = _degree(args).degree if args.d is not None else None
    scenarios = [args.scenario] if args.scenario else None

    service = create_verification_service(threads=threads, fixture_path=args.fixtures)
    reports = service.verify_all(scenarios, degree)
    _emit(
        {
            "command": "verify",
            "all_match": all(report.matched for report in reports),
            "reports": [ReportFormatter.format_as_dict(report, timings=args.timings) for report in reports],
        }
    )
    for report in reports:
        if not report.matched:
            logger.warning(ReportFormatter.format_as_text(report))
    ReportFormatter.format_as_rich(reports, Console(stderr=True))
    return EXIT_OK if all(report.matched for report in reports) else EXIT_MISMATCH


def _apply_config(args: argparse.Namespace, config: Dict[str, str]) -> None:
    """Fill options left unset on the command line from the config file."""
    for key, value in config.items():
        if not hasattr(args, key):
            logger.warning("Ignoring unknown config key %r", key)
            continue
        current = getattr(args, key)
        if key in BOOL_OPTIONS:
            if not current:
                setattr(args, key, value.strip().lower() in ("1", "true", "yes", "on"))
        elif current is None:
            setattr(args, key, value)


def _attach_values(argv: List[str], parser: argparse.ArgumentParser) -> List[str]:
    """Rewrite "--opt VALUE" as "--opt=VALUE" so values such as -1/2 are not read as flags."""
    takes_value = {
        option
        for action in _all_actions(parser)
        if action.nargs is None and action.option_strings
        for option in action.option_strings
        if option.startswith("--")
    }
    joined: List[str] = []
    tokens = iter(argv)
    for token in tokens:
        if token in takes_value:
            value = next(tokens, None)
            joined.append(token if value is None else f"{token}={value}")
        else:
            joined.append(token)
    return joined


def _all_actions(parser: argparse.ArgumentParser) -> List[argparse.Action]:
    actions = list(parser._actions)
    for action in parser._actions:
        if isinstance(action, argparse._SubParsersAction):
            for subparser in action.choices.values():
                actions.extend(subparser._actions)
    return actions


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="key=value file with defaults for any long option")
    common.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging on stderr")
    common.add_argument("--d", help="Degree of the threefold (1-5)")

    parser = argparse.ArgumentParser(
        prog="tiltwall",
        description="Exact tilt-stability computations on index-two Fano threefolds. "
        "Characters are comma-separated (ch0, ch1, ch2[, ch3]) in the (1, H, L, P) basis.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    char = subparsers.add_parser("char", parents=[common], help="Character data, twist, discriminant and slopes")
    char.add_argument("--ch", help="Character, e.g. 2,0,-2,0")
    char.add_argument("--twist", help="Twist by exp(-beta H)")
    char.add_argument("--delta", action="store_true", help="Print the discriminant")
    char.add_argument("--slope", action="store_true", help="Print the Mumford slope")
    char.add_argument("--hilbert", action="store_true", help="Print the Hilbert polynomial (needs ch3)")
    char.add_argument("--hilbert-at", dest="hilbert_at", help="Also evaluate the Hilbert polynomial at m")
    char.add_argument("--alpha-sq", dest="alpha_sq", help="alpha² of a tilt point")
    char.add_argument("--beta", help="beta of a tilt point")
    char.add_argument("--assert-lattice", dest="assert_lattice", action="store_true", help="Fail off the lattice")
    char.set_defaults(handler=cmd_char)

    pair = subparsers.add_parser("pair", parents=[common], help="Euler pairing chi(left, right)")
    pair.add_argument("--left", help="Left character with ch3")
    pair.add_argument("--right", help="Right character with ch3")
    pair.set_defaults(handler=cmd_pair)

    walls = subparsers.add_parser("walls", parents=[common], help="Numerical walls along a vertical line")
    walls.add_argument("--ch", help="Target character")
    walls.add_argument("--beta", help="The vertical line beta = p/q")
    walls.add_argument("--alpha-sq-min", dest="alpha_sq_min", help="Open lower end of the alpha² range (default 0)")
    walls.add_argument("--alpha-sq-max", dest="alpha_sq_max", help="Closed upper end of the alpha² range")
    walls.add_argument("--rank-cap", dest="rank_cap", help="Cap |rank| of sub-characters")
    walls.set_defaults(handler=cmd_walls)

    axis = subparsers.add_parser("axis", parents=[common], help="Destabilizer pairs on the real axis")
    axis.add_argument("--ch", help="Target character")
    axis.add_argument("--alpha-sq", dest="alpha_sq", help="alpha² of the point")
    axis.add_argument("--beta", help="beta of the point")
    axis.set_defaults(handler=cmd_axis)

    verify = subparsers.add_parser("verify", parents=[common], help="Rerun the recorded scenarios")
    verify.add_argument("--scenario", help="Run only this scenario id")
    verify.add_argument("--threads", help="Worker threads (defaults to TILTWALL_THREADS)")
    verify.add_argument("--timings", action="store_true", help="Include durations in the report")
    verify.add_argument("--fixtures", help="Alternative expected-outcome file")
    verify.set_defaults(handler=cmd_verify)

    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_time=False, show_path=False)],
        force=True,
    )


def main(argv: Optional[List[str]] = None) -> int:
    """Command line interface for tilt-stability computations."""
    # Load environment variables
    load_dotenv()

    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_attach_values(argv, parser))
    console = Console(stderr=True)

    try:
        _apply_config(args, load_cli_config(args.config))
        _configure_logging(args.verbose)
        return args.handler(args)
    except UnboundedSearchError as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        return EXIT_INCOMPLETE
    except UnsupportedDegreeError as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        return EXIT_USAGE
    except TiltwallError as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        return EXIT_DOMAIN
    except (RationalParseError, UsageError, ValueError, KeyError, FileNotFoundError) as e:
        console.print(f"[bold red]Error:[/bold red] {e}")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
