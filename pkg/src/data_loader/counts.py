import logging

from ..errors import SCHEMA, InvalidInputError
from ..types import CountTable
from .base import DataLoaderBase

logger = logging.getLogger(__name__)


class CountTableLoader(DataLoaderBase):
    """Population counts: {"counts": {"abc": 3, "abC": 0, ...}}.

    Lowercase means the property holds. All 8 keys are required.
    """

    NAME = "counts"

    def parse(self, data) -> CountTable:
        data = self.require_object(data, ["counts"])
        if not isinstance(data["counts"], dict):
            e = "counts should be an object keyed by property triples like 'aBc'."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        for key, value in data["counts"].items():
            if isinstance(value, bool) or not isinstance(value, int):
                e = f"Count of {key!r} should be an integer. Got {value!r}."
                logger.error(e)
                raise InvalidInputError(SCHEMA, e)
        return CountTable.from_mapping(data["counts"])
