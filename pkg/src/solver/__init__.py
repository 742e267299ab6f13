"""isort:skip_file
"""

from .base import SolverBase, SolverResult
from .golden_section import golden_section_max
from .grid_golden import GridGolden

# List of supported maximizers
collections = {
    "grid_golden": GridGolden,
}
