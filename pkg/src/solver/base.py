import logging
from typing import NamedTuple

from .. import costs

logger = logging.getLogger(__name__)

DEFAULT_SOLVER_CONFIG = {
    "resolution": [720, 1440],
    "step_tolerance": 1e-6,
    "candidate_window": 1e-3,
    "tie_tolerance": 1e-7,
    "max_candidates": 32,
    "max_passes": 200,
    "n_workers": 4,
    "progress": False,
}


class SolverResult(NamedTuple):
    theta: float
    phi: float
    value: float  # largest lhs - rhs of the family
    index: int  # inequality attaining it


class SolverBase(object):
    """Base class for the violation maximizers.

    Params:
        cost (costs.CostBase) ... objective over (theta, phi)
        solver_config (dict) ... solver configuration, see `DEFAULT_SOLVER_CONFIG`
    """

    name = "base"

    def __init__(self, cost: costs.CostBase, solver_config: dict = {}):
        self.cost = cost
        self.slv_config = {**DEFAULT_SOLVER_CONFIG, **solver_config}
        self.check_config()
        logger.info(f"Configuration: \n    {self.slv_config}")

    def check_config(self) -> None:
        n_theta, n_phi = self.slv_config["resolution"]
        if n_theta < 3 or n_phi < 3:
            e = f"Resolution should be at least 3 in each direction. Got {(n_theta, n_phi)}."
            logger.error(e)
            raise ValueError(e)
        for key in ["step_tolerance", "tie_tolerance", "candidate_window"]:
            if not self.slv_config[key] > 0:
                e = f"{key} should be positive. Got {self.slv_config[key]}."
                logger.error(e)
                raise ValueError(e)

    def objective(self, theta: float, phi: float) -> float:
        return float(self.cost.calculate({"theta": theta, "phi": phi}))

    # Every subclass needs to implement maximize()
    def maximize(self, diagonal: bool = False) -> SolverResult:
        raise NotImplementedError
