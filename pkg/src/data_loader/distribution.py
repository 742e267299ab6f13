import logging
import numbers

from ..errors import SCHEMA, InvalidInputError
from ..probability import make_joint
from ..types import JointDistribution
from .base import DataLoaderBase

logger = logging.getLogger(__name__)


class DistributionLoader(DataLoaderBase):
    """Joint distribution file.

    {"variables": ["A", "B", "C"], "probabilities": {"+++": 0.125, "++-": 0.125, ...}}
    Key character i is the outcome of variable i. Every key is required.
    """

    NAME = "distribution"

    def parse(self, data) -> JointDistribution:
        data = self.require_object(data, ["variables", "probabilities"])
        variables = data["variables"]
        if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
            e = f"variables should be a list of strings. Got {variables!r}."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        probabilities = data["probabilities"]
        if not isinstance(probabilities, dict):
            e = "probabilities should be an object keyed by outcome strings like '+-+'."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        for key, value in probabilities.items():
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                e = f"Probability of {key!r} should be a number. Got {value!r}."
                logger.error(e)
                raise InvalidInputError(SCHEMA, e)
        return make_joint(variables, probabilities)
