import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np
from tqdm import tqdm

from ..types.measurement import wrap_angle
from ..utils import check_key_and_bool
from .base import SolverBase, SolverResult
from .golden_section import golden_section_max

logger = logging.getLogger(__name__)

# Refinement bracket, in grid steps on each side of the candidate.
BRACKET_STEPS = 2
THETA_MIN = np.nextafter(0.0, 1.0)
THETA_MAX = np.nextafter(math.pi, 0.0)


def theta_grid(n_theta: int) -> np.ndarray:
    """Midpoints of n_theta equal cells of (0, pi)."""
    return (np.arange(n_theta) + 0.5) * math.pi / n_theta


def phi_grid(n_phi: int) -> np.ndarray:
    """n_phi equally spaced angles in (-pi, pi], ending at pi."""
    return -math.pi + (np.arange(n_phi) + 1) * 2.0 * math.pi / n_phi


def local_maxima(values: np.ndarray, periodic_axis: int = -1) -> np.ndarray:
    """Mask of points no lower than any of their neighbours.

    2-D grids use the 8-neighbourhood, periodic along `periodic_axis`.
    The other axis is bounded.
    """
    padded_value = -np.inf
    mask = np.ones(values.shape, dtype=bool)
    if values.ndim == 1:
        padded = np.pad(values, 1, constant_values=padded_value)
        return (values >= padded[:-2]) & (values >= padded[2:])

    bounded_axis = 1 - (periodic_axis % 2)
    pad_width = [(0, 0), (0, 0)]
    pad_width[bounded_axis] = (1, 1)
    padded = np.pad(values, pad_width, constant_values=padded_value)
    for shift_bounded in (-1, 0, 1):
        start = 1 + shift_bounded
        stop = start + values.shape[bounded_axis]
        window = np.take(padded, range(start, stop), axis=bounded_axis)
        for shift_periodic in (-1, 0, 1):
            if shift_bounded == 0 and shift_periodic == 0:
                continue
            neighbour = np.roll(window, shift_periodic, axis=periodic_axis)
            mask &= values >= neighbour
    return mask


class GridGolden(SolverBase):
    """Coarse grid evaluation followed by golden-section coordinate refinement.

    The grid is evaluated vectorized, chunked over theta. Grid local maxima
    within `candidate_window` of the best become candidates. Each candidate
    is refined by alternating 1-D golden-section searches on theta and phi.
    Among refined candidates within `tie_tolerance` of the best, the
    reported one has minimal |phi|, then phi >= 0, then minimal theta.
    """

    name = "grid_golden"

    def __init__(self, cost, solver_config: dict = {}):
        super().__init__(cost, solver_config)
        self.n_theta, self.n_phi = (int(n) for n in self.slv_config["resolution"])
        self.theta_step = math.pi / self.n_theta
        self.phi_step = 2.0 * math.pi / self.n_phi

    # Grid stage
    def evaluate_grid(self, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
        """Objective on the theta x phi product grid. Row i belongs to theta[i]."""
        n_workers = max(1, int(self.slv_config["n_workers"]))
        chunks = np.array_split(theta, min(len(theta), 8 * n_workers))

        def evaluate_chunk(chunk: np.ndarray) -> np.ndarray:
            return self.cost.calculate({"theta": chunk[:, None], "phi": phi[None, :]})

        with ThreadPoolExecutor(max_workers=n_workers) as executor:
            rows = list(
                tqdm(
                    executor.map(evaluate_chunk, chunks),
                    total=len(chunks),
                    disable=not check_key_and_bool(self.slv_config, "progress"),
                    desc="grid",
                )
            )
        return np.concatenate(rows, axis=0)

    def select_candidates(self, values: np.ndarray) -> List[Tuple[int, ...]]:
        """Grid indices of local maxima near the best value, best first."""
        best = np.max(values)
        mask = local_maxima(values) & (values >= best - self.slv_config["candidate_window"])
        indices = np.argwhere(mask)
        # Stable sort keeps grid order among equal values.
        order = np.argsort(-values[mask], kind="stable")
        candidates = [tuple(int(i) for i in indices[k]) for k in order]
        logger.debug(f"{len(candidates)} candidates, best grid value {best}")
        return candidates[: int(self.slv_config["max_candidates"])]

    # Refinement stage
    def refine_theta(self, theta: float, phi: float, diagonal: bool) -> float:
        tol = self.slv_config["step_tolerance"] / 10.0
        lo = max(theta - BRACKET_STEPS * self.theta_step, THETA_MIN)
        hi = min(theta + BRACKET_STEPS * self.theta_step, THETA_MAX)
        if diagonal:
            return golden_section_max(lambda t: self.objective(t, t), lo, hi, tol)
        return golden_section_max(lambda t: self.objective(t, phi), lo, hi, tol)

    def refine_phi(self, theta: float, phi: float) -> float:
        tol = self.slv_config["step_tolerance"] / 10.0
        width = BRACKET_STEPS * self.phi_step
        return golden_section_max(lambda p: self.objective(theta, p), phi - width, phi + width, tol)

    def refine(self, theta: float, phi: float, diagonal: bool = False) -> Tuple[float, float]:
        """Alternating golden-section passes until a pass moves less than step_tolerance.

        On the diagonal the search is 1-D and one pass is enough.
        """
        if diagonal:
            theta = self.refine_theta(theta, theta, diagonal=True)
            return theta, theta
        for n_pass in range(int(self.slv_config["max_passes"])):
            new_theta = self.refine_theta(theta, phi, diagonal=False)
            new_phi = self.refine_phi(new_theta, phi)
            step = max(abs(new_theta - theta), abs(new_phi - phi))
            theta, phi = new_theta, new_phi
            if step < self.slv_config["step_tolerance"]:
                logger.debug(f"Converged after {n_pass + 1} passes at ({theta}, {phi})")
                break
        else:
            logger.warning(f"Refinement stopped after {self.slv_config['max_passes']} passes.")
        return theta, wrap_angle(phi)

    def canonical(self, refined: List[Tuple[float, float, float]]) -> Tuple[float, float, float]:
        """Representative of the best candidates, which are often symmetry copies."""
        best = max(v for v, _, _ in refined)
        ties = [r for r in refined if r[0] >= best - self.slv_config["tie_tolerance"]]
        return min(ties, key=lambda r: (round(abs(r[2]), 4), r[2] < 0, round(r[1], 4)))

    def maximize(self, diagonal: bool = False) -> SolverResult:
        """Largest violation over theta in (0, pi) and phi in (-pi, pi].

        Args:
            diagonal (bool): restrict the search to theta = phi.

        Returns:
            SolverResult: refined optimum. Deterministic for a given configuration.
        """
        theta = theta_grid(self.n_theta)
        if diagonal:
            values = np.asarray(self.cost.calculate({"theta": theta, "phi": theta}))
            starts = [(theta[i], theta[i]) for (i,) in self.select_candidates(values)]
        else:
            phi = phi_grid(self.n_phi)
            values = self.evaluate_grid(theta, phi)
            starts = [(theta[i], phi[j]) for i, j in self.select_candidates(values)]

        refined = []
        for theta0, phi0 in starts:
            theta_star, phi_star = self.refine(float(theta0), float(phi0), diagonal)
            refined.append((self.objective(theta_star, phi_star), theta_star, phi_star))
        value, theta_star, phi_star = self.canonical(refined)

        _, index = self.cost.evaluate(theta_star, phi_star)
        logger.info(f"Maximum {value} at theta={theta_star}, phi={phi_star}")
        return SolverResult(theta=theta_star, phi=phi_star, value=value, index=int(index))
