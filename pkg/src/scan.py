"""Angle sweeps and violation maximization over EPR Bell setups."""
import csv
import logging
import math
from typing import List, Optional, Sequence, TextIO, Tuple, Union

import numpy as np

from . import costs, solver
from .errors import BAD_RANGE, NO_ROWS, UNKNOWN_LABEL, InvalidInputError
from .inequalities import conventional_bell, entropic_bell, max_margin
from .quantum import bell_correlations, bell_entropy_summary
from .types import VIOLATION_TOLERANCE, MeasurementSetup, OptimumReport, SweepRow

logger = logging.getLogger(__name__)

CSV_HEADER = ("phi", "LE1", "LE2", "LE3", "LC1", "LC2", "LC3")
DEFAULT_FLOAT_FORMAT = ".9g"
FAMILIES = ("entropic", "conventional")

# Most violating angle of the entropic family.
ENTROPIC_THETA = math.pi / 3.958


def family_reports(family: str, setup: MeasurementSetup):
    """The three inequality reports of a family at one setup."""
    if family == "entropic":
        return entropic_bell(bell_entropy_summary(setup))
    if family == "conventional":
        return conventional_bell(bell_correlations(setup))
    e = f"Family should be one of {FAMILIES}. Got {family!r}."
    logger.error(e)
    raise InvalidInputError(UNKNOWN_LABEL, e)


def sweep_phi(theta: float, phi_min: float, phi_max: float, steps: int) -> List[SweepRow]:
    """Left-hand sides of both families at uniformly spaced phi, endpoints included.

    Args:
        theta (float): angle of the B axis, in radians.
        phi_min (float): first phi.
        phi_max (float): last phi.
        steps (int): number of rows, at least 2.

    Returns:
        List[SweepRow]: rows in ascending phi.
    """
    if steps < 2:
        e = f"Sweep needs at least 2 steps. Got {steps}."
        logger.error(e)
        raise InvalidInputError(BAD_RANGE, e)
    if not phi_min < phi_max:
        e = f"phi_min should be smaller than phi_max. Got {phi_min} and {phi_max}."
        logger.error(e)
        raise InvalidInputError(BAD_RANGE, e)

    rows = []
    for phi in np.linspace(phi_min, phi_max, steps):
        setup = MeasurementSetup.from_angles(theta, float(phi))
        entropic = [r.lhs for r in family_reports("entropic", setup)]
        conventional = [r.lhs for r in family_reports("conventional", setup)]
        rows.append(SweepRow(float(phi), *entropic, *conventional))
    logger.info(f"Swept {steps} phi values in [{phi_min}, {phi_max}] at theta={theta}")
    return rows


def violation_intervals(
    rows: Sequence[SweepRow], column: str, bound: float = 1.0
) -> List[Tuple[float, float]]:
    """Maximal runs of consecutive rows whose `column` exceeds `bound`.

    Returns:
        List of (first phi, last phi) of each run.
    """
    if column not in CSV_HEADER[1:]:
        e = f"Column should be one of {CSV_HEADER[1:]}. Got {column!r}."
        logger.error(e)
        raise InvalidInputError(UNKNOWN_LABEL, e)
    index = CSV_HEADER.index(column)

    intervals = []
    start: Optional[float] = None
    last = None
    for row in rows:
        values = row.values()
        if values[index] - bound > VIOLATION_TOLERANCE:
            if start is None:
                start = row.phi
            last = row.phi
        elif start is not None:
            intervals.append((start, last))
            start = None
    if start is not None:
        intervals.append((start, last))
    return intervals


def emit_rows(
    rows: Sequence[SweepRow],
    destination: Union[str, TextIO],
    float_format: str = DEFAULT_FLOAT_FORMAT,
) -> None:
    """Write sweep rows as CSV to a path or an open text stream.

    Raises:
        InvalidInputError: NO_ROWS when `rows` is empty. Nothing is written.
        OSError: when the destination cannot be written.
    """
    if len(rows) == 0:
        e = "No rows to write."
        logger.error(e)
        raise InvalidInputError(NO_ROWS, e)

    if isinstance(destination, str):
        with open(destination, "w", newline="") as f:
            _write_csv(rows, f, float_format)
        logger.info(f"Wrote {len(rows)} rows to {destination}")
    else:
        _write_csv(rows, destination, float_format)


def _write_csv(rows: Sequence[SweepRow], stream: TextIO, float_format: str) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow([format(v, float_format) for v in row.values()])


def maximize_violation(
    family: str,
    resolution: Optional[Sequence[int]] = None,
    diagonal: bool = False,
    config: Optional[dict] = None,
) -> OptimumReport:
    """Setup that violates the family the most.

    Args:
        family (str): 'entropic' or 'conventional'.
        resolution: coarse grid (n_theta, n_phi). Overrides the config.
        diagonal (bool): restrict the search to theta = phi.
        config (dict): solver section of the configuration.

    Returns:
        OptimumReport: lhs_star is re-evaluated by the scalar inequality checkers.
    """
    if family not in FAMILIES:
        e = f"Family should be one of {FAMILIES}. Got {family!r}."
        logger.error(e)
        raise InvalidInputError(UNKNOWN_LABEL, e)
    solver_config = dict(config or {})
    if resolution is not None:
        solver_config["resolution"] = list(resolution)
    method = solver_config.pop("method", "grid_golden")

    cost = costs.functions[family]()
    optimizer = solver.collections[method](cost, solver_config)
    result = optimizer.maximize(diagonal=diagonal)

    setup = MeasurementSetup.from_angles(result.theta, result.phi)
    reports = family_reports(family, setup)
    _, index = max_margin([r.lhs for r in reports], [r.rhs for r in reports])
    best = reports[int(index)]
    logger.info(f"{family}: {best.id} reaches {best.lhs} at ({setup.theta}, {setup.phi})")
    return OptimumReport(
        family=family,
        theta_star=setup.theta,
        phi_star=setup.phi,
        lhs_star=best.lhs,
        inequality_id=best.id,
    )
