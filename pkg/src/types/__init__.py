from typing import Union

import numpy as np

from .distribution import CountTable, JointDistribution, Outcome
from .entropy_diagram import EntropyDiagram, PairDiagram, PairwiseEntropySummary
from .measurement import CorrelationSet, MeasurementSetup
from .report import (
    VIOLATION_TOLERANCE,
    InequalityReport,
    NegativityDiagnosis,
    OptimumReport,
    SweepRow,
)

FLOAT_NUMPY = Union[float, np.ndarray]


def is_numpy(args) -> bool:
    return isinstance(args, np.ndarray)


def as_float(value: FLOAT_NUMPY) -> FLOAT_NUMPY:
    """Return a python float for 0-d input, the array otherwise."""
    if is_numpy(value) and value.ndim == 0:
        return float(value)
    return value
