import math
import os

import pytest

from src.probability import make_joint

DATASET_DIR = os.path.join(os.path.dirname(os.path.dirname(__file__)), "datasets")

# Most violating angle of the entropic family, and its partner phi.
ENTROPIC_THETA = math.pi / 3.958
ENTROPIC_PHI = ENTROPIC_THETA / 2
# Largest EBELL3 left-hand side, 2 f(cos(theta / 2)) - f(cos theta) at its maximum.
ENTROPIC_LHS_STAR = 1.1342544


@pytest.fixture
def uniform_triple():
    return make_joint(["A", "B", "C"], [0.125] * 8)


@pytest.fixture
def xor_triple():
    # C = A * B with A, B fair and independent.
    return make_joint(["A", "B", "C"], [0.25, 0, 0, 0.25, 0, 0.25, 0.25, 0])


@pytest.fixture
def identical_triple():
    return make_joint(["A", "B", "C"], [0.5, 0, 0, 0, 0, 0, 0, 0.5])


@pytest.fixture
def independent_pair():
    return make_joint(["A", "B"], [0.25, 0.25, 0.25, 0.25])


@pytest.fixture
def dataset_dir():
    return DATASET_DIR


@pytest.fixture
def distribution_file(dataset_dir):
    def _path(name: str) -> str:
        return os.path.join(dataset_dir, "distributions", f"{name}.json")

    return _path
