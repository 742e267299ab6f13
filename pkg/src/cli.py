"""Command-line front end: diagrams, inequality checks, sweeps and maximizations.

Structured results go to standard output as one JSON object. Logs go to
standard error.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from . import data_loader, entropy, inequalities, probability, quantum, scan, utils
from .errors import SCHEMA, InvalidInputError
from .types import MeasurementSetup

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "1"
IO_ERROR = "IO_ERROR"
INVALID_INPUT = "INVALID_INPUT"


class CommandParser(argparse.ArgumentParser):
    """Argument parser that reports usage errors as invalid input instead of exiting."""

    def error(self, message: str):
        raise InvalidInputError(SCHEMA, message)


def create_parser() -> argparse.ArgumentParser:
    parser = CommandParser(prog="bell-entropy", description=__doc__.splitlines()[0])
    parser.add_argument(
        "--config_file",
        default=None,
        help="Config file yaml path. Defaults to configs/default.yaml",
        type=str,
    )
    parser.add_argument(
        "--log",
        help="Log level: [debug, info, warning, error, critical]",
        type=str,
        default="warning",
    )
    parser.add_argument("--log_file", help="Also write logs to this file", type=str, default=None)
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    diagram = subparsers.add_parser("diagram", help="Entropy Venn diagram of a distribution")
    diagram.add_argument("--dist", required=True, help="JSON distribution file (2 or 3 variables)")

    check = subparsers.add_parser("check", help="Evaluate every Bell inequality")
    check.add_argument("--dist", help="JSON distribution file over 3 variables")
    check.add_argument("--theta", type=float, help="Angle of the B axis")
    check.add_argument("--phi", type=float, help="Angle of the C axis")
    check.add_argument("--degrees", action="store_true", help="Angles are in degrees")

    sweep = subparsers.add_parser("sweep", help="Left-hand sides over phi at fixed theta (CSV)")
    sweep.add_argument("--theta", type=float, help="Angle of the B axis")
    sweep.add_argument("--phi-min", dest="phi_min", type=float, help="First phi")
    sweep.add_argument("--phi-max", dest="phi_max", type=float, help="Last phi")
    sweep.add_argument("--steps", type=int, help="Number of rows, endpoints included")
    sweep.add_argument("--out", required=True, help="CSV path, or - for standard output")
    sweep.add_argument("--degrees", action="store_true", help="Angles are in degrees")

    maximize = subparsers.add_parser("maximize", help="Angles of the largest violation")
    maximize.add_argument("--family", required=True, choices=scan.FAMILIES)
    maximize.add_argument(
        "--resolution",
        type=int,
        nargs=2,
        metavar=("N_THETA", "N_PHI"),
        help="Coarse grid size",
    )
    maximize.add_argument("--diagonal", action="store_true", help="Restrict to theta = phi")

    wigner = subparsers.add_parser("wigner", help="Counting inequality on a population")
    wigner.add_argument("--counts", required=True, help="JSON count table file")
    return parser


def run_diagram(args: argparse.Namespace, config: dict) -> dict:
    joint = data_loader.collections["distribution"](config["data"]).load(args.dist)
    output = {"distribution": joint.to_dict()}
    if joint.arity == 2:
        output["pair_diagram"] = entropy.pair_diagram(joint).to_dict()
        return output
    output["diagram"] = entropy.ternary_diagram(joint).to_dict()
    output["summary"] = entropy.pairwise_summary(joint).to_dict()
    return output


def run_check(args: argparse.Namespace, config: dict) -> dict:
    if args.dist is not None:
        if args.theta is not None or args.phi is not None:
            e = "Use either --dist or --theta/--phi, not both."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        joint = data_loader.collections["distribution"](config["data"]).load(args.dist)
        corr = probability.pair_correlations(joint)
        summary = entropy.pairwise_summary(joint)
        chsh = entropy.classical_chsh_entropies(summary)
        source = {"dist": args.dist}
    else:
        if args.theta is None or args.phi is None:
            e = "check needs --dist, or both --theta and --phi."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        theta = utils.to_radians(args.theta, args.degrees)
        phi = utils.to_radians(args.phi, args.degrees)
        setup = MeasurementSetup.from_angles(theta, phi)
        corr = quantum.bell_correlations(setup)
        summary = quantum.bell_entropy_summary(setup)
        chsh = quantum.chsh_mutual_entropies(setup)
        source = {"theta": setup.theta, "phi": setup.phi}

    reports = inequalities.evaluate_all(corr, summary, chsh)
    return {
        "source": source,
        "correlations": corr.to_dict(),
        "summary": summary.to_dict(),
        "reports": [r.to_dict() for r in reports],
        "negativity": inequalities.diagnose_negativity(summary).to_dict(),
    }


def run_sweep(args: argparse.Namespace, config: dict) -> Optional[dict]:
    sweep_config = config["sweep"]
    # Config values are radians, flags follow --degrees.
    theta, phi_min, phi_max = (
        sweep_config[key] if value is None else utils.to_radians(value, args.degrees)
        for key, value in (
            ("theta", args.theta),
            ("phi_min", args.phi_min),
            ("phi_max", args.phi_max),
        )
    )
    steps = sweep_config["steps"] if args.steps is None else args.steps

    rows = scan.sweep_phi(theta, phi_min, phi_max, steps)
    intervals = {c: scan.violation_intervals(rows, c) for c in ("LE1", "LE2", "LE3")}
    for column, runs in intervals.items():
        for start, end in runs:
            logger.info(f"{column} > 1 for phi in [{start}, {end}]")

    float_format = config["output"]["float_format"]
    if args.out == "-":
        scan.emit_rows(rows, sys.stdout, float_format)
        return None
    scan.emit_rows(rows, args.out, float_format)
    return {
        "out": args.out,
        "theta": theta,
        "rows": len(rows),
        "violation_intervals": {c: [list(run) for run in runs] for c, runs in intervals.items()},
    }


def run_maximize(args: argparse.Namespace, config: dict) -> dict:
    report = scan.maximize_violation(
        args.family,
        resolution=args.resolution,
        diagonal=args.diagonal,
        config=config["solver"],
    )
    return {"optimum": report.to_dict(), "diagonal": args.diagonal}


def run_wigner(args: argparse.Namespace, config: dict) -> dict:
    table = data_loader.collections["counts"](config["data"]).load(args.counts)
    return {"total": table.total, "report": probability.wigner_check(table).to_dict()}


COMMANDS = {
    "diagram": run_diagram,
    "check": run_check,
    "sweep": run_sweep,
    "maximize": run_maximize,
    "wigner": run_wigner,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Run one command.

    Returns:
        int: 0 on success, 1 on invalid input, 2 on I/O failure.
    """
    try:
        args = create_parser().parse_args(argv)
        utils.setup_logging(args.log, args.log_file)
        config = utils.load_config(args.config_file)
        logger.debug(f"Configuration: {config}")
        output = COMMANDS[args.subcommand](args, config)
    except OSError as err:
        print(f"error: {IO_ERROR}: {err}", file=sys.stderr)
        return 2
    except InvalidInputError as err:
        print(f"error: {err.code}: {err.message}", file=sys.stderr)
        return 1
    except ValueError as err:
        print(f"error: {INVALID_INPUT}: {err}", file=sys.stderr)
        return 1

    if output is not None:
        print(json.dumps({"schema_version": SCHEMA_VERSION, **output}, indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
