import itertools
import logging
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Dict, Iterator, Optional, Sequence, Tuple

import numpy as np

from ..errors import (
    BAD_ARITY,
    NEGATIVE_PROBABILITY,
    NOT_NORMALIZED,
    OUT_OF_RANGE,
    SCHEMA,
    UNKNOWN_LABEL,
    InvalidInputError,
)

logger = logging.getLogger(__name__)

NORMALIZATION_TOLERANCE = 1e-9
MAX_VARIABLES = 3

# Property keys of the count table: lowercase means the property holds.
COUNT_KEYS = tuple("".join(k) for k in itertools.product("aA", "bB", "cC"))


class Outcome(IntEnum):
    """Dichotomic outcome. Table index 0 is +1, index 1 is -1."""

    PLUS = 1
    MINUS = -1

    @property
    def index(self) -> int:
        return 0 if self is Outcome.PLUS else 1

    @property
    def symbol(self) -> str:
        return "+" if self is Outcome.PLUS else "-"

    @classmethod
    def from_symbol(cls, symbol: str) -> "Outcome":
        if symbol == "+":
            return cls.PLUS
        if symbol == "-":
            return cls.MINUS
        e = f"Outcome symbol should be '+' or '-'. Got {symbol!r}."
        logger.error(e)
        raise InvalidInputError(SCHEMA, e)


def outcome_tuples(n: int) -> Iterator[Tuple[Outcome, ...]]:
    """All 2^n outcome tuples, lexicographic with +1 before -1."""
    return itertools.product((Outcome.PLUS, Outcome.MINUS), repeat=n)


def outcome_key(outcomes: Sequence[Outcome]) -> str:
    return "".join(o.symbol for o in outcomes)


@dataclass(frozen=True, eq=False)
class JointDistribution:
    """Explicit probability table over 1-3 dichotomic variables.

    `probabilities` has shape (2,) * n. Axis i belongs to `variables[i]`,
    index 0 on every axis is the +1 outcome, so the C-order flattening is the
    lexicographic order of outcome tuples.
    """

    variables: Tuple[str, ...]
    probabilities: np.ndarray = field(repr=False)

    def __post_init__(self):
        variables = tuple(self.variables)
        n = len(variables)
        if not 1 <= n <= MAX_VARIABLES:
            e = f"Distribution needs 1 to {MAX_VARIABLES} variables. Got {n}."
            logger.error(e)
            raise InvalidInputError(BAD_ARITY, e)
        if len(set(variables)) != n:
            e = f"Variable labels should be unique. Got {variables}."
            logger.error(e)
            raise InvalidInputError(BAD_ARITY, e)

        table = np.array(self.probabilities, dtype=np.float64)
        if table.size != 2**n:
            e = f"Table for {n} variables needs {2 ** n} entries. Got {table.size}."
            logger.error(e)
            raise InvalidInputError(BAD_ARITY, e)
        table = table.reshape((2,) * n)
        if not np.all(np.isfinite(table)):
            e = "Probabilities should be finite numbers."
            logger.error(e)
            raise InvalidInputError(NOT_NORMALIZED, e)
        if np.any(table < 0):
            e = f"Probabilities should be non-negative. Got min {table.min()}."
            logger.error(e)
            raise InvalidInputError(NEGATIVE_PROBABILITY, e)
        total = table.sum()
        if abs(total - 1.0) > NORMALIZATION_TOLERANCE:
            e = f"Probabilities should sum to 1 within {NORMALIZATION_TOLERANCE}. Got {total}."
            logger.error(e)
            raise InvalidInputError(NOT_NORMALIZED, e)

        table.setflags(write=False)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "probabilities", table)

    def __eq__(self, other) -> bool:
        if not isinstance(other, JointDistribution):
            return NotImplemented
        return self.variables == other.variables and np.array_equal(
            self.probabilities, other.probabilities
        )

    @property
    def arity(self) -> int:
        return len(self.variables)

    @property
    def flat(self) -> np.ndarray:
        """Probabilities in lexicographic outcome order."""
        return self.probabilities.reshape(-1)

    def axis(self, label: str) -> int:
        try:
            return self.variables.index(label)
        except ValueError:
            e = f"Unknown variable {label!r}. Available: {self.variables}."
            logger.error(e)
            raise InvalidInputError(UNKNOWN_LABEL, e)

    def probability(self, outcomes: Sequence[int]) -> float:
        index = tuple(Outcome(o).index for o in outcomes)
        return float(self.probabilities[index])

    def items(self) -> Iterator[Tuple[Tuple[Outcome, ...], float]]:
        for outcomes, p in zip(outcome_tuples(self.arity), self.flat):
            yield outcomes, float(p)

    def to_dict(self) -> dict:
        return {
            "variables": list(self.variables),
            "probabilities": {outcome_key(o): p for o, p in self.items()},
        }


@dataclass(frozen=True, eq=False)
class CountTable:
    """Population counts over the 8 property triples (a|not a, b|not b, c|not c).

    `counts` has shape (2, 2, 2); index 0 on an axis means the property holds.
    """

    counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        table = np.asarray(self.counts)
        if table.size != 8:
            e = f"Count table needs 8 cells. Got {table.size}."
            logger.error(e)
            raise InvalidInputError(BAD_ARITY, e)
        if not np.all(np.equal(np.mod(table, 1), 0)):
            e = "Counts should be integers."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        try:
            table = table.astype(np.int64).reshape(2, 2, 2)
        except OverflowError:
            e = "Counts should fit in a signed 64-bit integer."
            logger.error(e)
            raise InvalidInputError(OUT_OF_RANGE, e)
        if np.any(table < 0):
            e = f"Counts should be non-negative. Got min {table.min()}."
            logger.error(e)
            raise InvalidInputError(NEGATIVE_PROBABILITY, e)
        if table.sum() < 1:
            e = "Count table should hold at least one object."
            logger.error(e)
            raise InvalidInputError(NOT_NORMALIZED, e)
        table.setflags(write=False)
        object.__setattr__(self, "counts", table)

    @classmethod
    def from_mapping(cls, counts: Dict[str, int]) -> "CountTable":
        missing = set(COUNT_KEYS) - set(counts)
        extra = set(counts) - set(COUNT_KEYS)
        if missing or extra:
            e = (
                f"Count keys should be exactly {COUNT_KEYS}. "
                f"Missing {sorted(missing)}, extra {sorted(extra)}."
            )
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        return cls(np.array([counts[k] for k in COUNT_KEYS]))

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    def count(
        self, a: Optional[bool] = None, b: Optional[bool] = None, c: Optional[bool] = None
    ) -> int:
        """Marginal count. True means the property holds, None sums it out."""
        index = tuple(slice(None) if v is None else (0 if v else 1) for v in (a, b, c))
        return int(self.counts[index].sum())

    def to_dict(self) -> dict:
        return {"counts": {k: int(n) for k, n in zip(COUNT_KEYS, self.counts.reshape(-1))}}
