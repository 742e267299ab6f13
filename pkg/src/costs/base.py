import logging
from typing import Dict, List, Tuple

import numpy as np

from ..inequalities import max_margin
from ..types import FLOAT_NUMPY

logger = logging.getLogger(__name__)


class CostBase(object):
    """Base of the violation objectives over measurement angles.

    The objective at a point is the largest `lhs - rhs` over the family's
    three inequalities. Positive means violated.

    Args:
        direction (str) ... 'minimize' or 'maximize'.
            With 'minimize' the sign is flipped so minimizers find the largest violation.
    """

    name = "base"
    required_keys: List[str] = ["theta", "phi"]
    inequality_ids: Tuple[str, ...] = ()

    def __init__(self, direction="maximize", store_history: bool = False, *args, **kwargs):
        if direction not in ["minimize", "maximize"]:
            e = f"direction should be minimize or maximize. Got {direction}."
            logger.error(e)
            raise ValueError(e)
        self.direction = direction
        self.store_history = store_history
        self.clear_history()

    def catch_key_error(func):
        """Wrapper utility function to catch the key error."""

        def wrapper(self, arg: dict):
            try:
                return func(self, arg)  # type: ignore
            except KeyError as e:
                logger.error("Input for the cost needs keys of:")
                logger.error(self.required_keys)
                raise e

        return wrapper

    def register_history(func):
        """Register history of the objective."""

        def wrapper(self, arg: dict):
            loss = func(self, arg)  # type: ignore
            if self.store_history:
                self.history["loss"].append(self.get_item(loss))
            return loss

        return wrapper

    def get_item(self, loss: FLOAT_NUMPY) -> float:
        if isinstance(loss, np.ndarray):
            return float(np.max(loss)) if self.direction == "maximize" else float(np.min(loss))
        return loss

    def clear_history(self) -> None:
        self.history: Dict[str, list] = {"loss": []}

    def get_history(self) -> dict:
        return self.history.copy()

    # Every subclass needs to implement lhs_rhs()
    def lhs_rhs(
        self, theta: np.ndarray, phi: np.ndarray
    ) -> Tuple[Tuple[np.ndarray, ...], Tuple[FLOAT_NUMPY, ...]]:
        raise NotImplementedError

    def evaluate(self, theta: FLOAT_NUMPY, phi: FLOAT_NUMPY) -> Tuple[np.ndarray, np.ndarray]:
        """Largest excess and the index of the inequality attaining it."""
        theta = np.asarray(theta, dtype=np.float64)
        phi = np.asarray(phi, dtype=np.float64)
        lhs, rhs = self.lhs_rhs(theta, phi)
        return max_margin(lhs, rhs)

    @register_history  # type: ignore
    @catch_key_error  # type: ignore
    def calculate(self, arg: dict) -> FLOAT_NUMPY:
        """Objective at `arg["theta"]`, `arg["phi"]` (scalars or broadcastable arrays)."""
        excess, _ = self.evaluate(arg["theta"], arg["phi"])
        if excess.ndim == 0:
            excess = float(excess)
        if self.direction == "minimize":
            return -excess
        return excess

    catch_key_error = staticmethod(catch_key_error)  # type: ignore
    register_history = staticmethod(register_history)  # type: ignore
