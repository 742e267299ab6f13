from typing import Optional

NEGATIVE_PROBABILITY = "NEGATIVE_PROBABILITY"
NOT_NORMALIZED = "NOT_NORMALIZED"
BAD_ARITY = "BAD_ARITY"
UNKNOWN_LABEL = "UNKNOWN_LABEL"
SAME_LABEL = "SAME_LABEL"
OVERLAP = "OVERLAP"
OUT_OF_RANGE = "OUT_OF_RANGE"
BAD_RANGE = "BAD_RANGE"
SCHEMA = "SCHEMA"
NO_ROWS = "NO_ROWS"


class InvalidInputError(ValueError):
    """Raised when an input violates a precondition or a type invariant.

    Args:
        code (str) ... One of the module-level codes, e.g. `NOT_NORMALIZED`.
        message (str) ... Human readable detail.
    """

    def __init__(self, code: str, message: Optional[str] = None):
        self.code = code
        self.message = message or code
        super().__init__(f"{code}: {self.message}")
