import math
from typing import Callable

INV_GOLDEN = (math.sqrt(5) - 1) / 2


def golden_section_max(
    f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-7
) -> float:
    """Argument of the maximum of a unimodal f on [lo, hi], to within tol / 2.

    The bracket shrinks by the inverse golden ratio per evaluation and the
    midpoint of the final bracket is returned. The bounds may be given in
    either order.
    """
    lo, hi = sorted((lo, hi))
    # Below a few ulps the bracket stops shrinking.
    tol = max(tol, 4.0 * math.ulp(max(abs(lo), abs(hi), 1.0)))
    left = hi - INV_GOLDEN * (hi - lo)
    right = lo + INV_GOLDEN * (hi - lo)
    f_left, f_right = f(left), f(right)
    while hi - lo > tol:
        # Ties keep the right part, so a flat f drifts towards hi.
        if f_left > f_right:
            hi, right, f_right = right, left, f_left
            left = hi - INV_GOLDEN * (hi - lo)
            f_left = f(left)
        else:
            lo, left, f_left = left, right, f_right
            right = lo + INV_GOLDEN * (hi - lo)
            f_right = f(right)
    return (lo + hi) / 2.0
