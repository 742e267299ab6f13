import json
import logging
import os
from typing import Any

from ..errors import SCHEMA, InvalidInputError
from . import DATASET_ROOT_DIR

logger = logging.getLogger(__name__)


class DataLoaderBase(object):
    """Base of the JSON input loaders.
    Please make sure to implement
     - parse()
    in child class.
    """

    NAME = "example"

    def __init__(self, config: dict = {}):
        root_dir: str = config["root"] if config.get("root") else DATASET_ROOT_DIR
        self.root_dir: str = os.path.expanduser(root_dir)

    def resolve(self, path: str) -> str:
        """`path` as given if it exists, otherwise relative to the dataset directory."""
        path = os.path.expanduser(path)
        if os.path.exists(path) or os.path.isabs(path):
            return path
        candidate = os.path.join(self.root_dir, path)
        if os.path.exists(candidate):
            logger.debug(f"Found {path} in {self.root_dir}")
            return candidate
        return path

    def read_json(self, path: str) -> Any:
        path = self.resolve(path)
        logger.info(f"Loading {self.NAME} from {path}")
        with open(path, "r") as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as err:
                e = f"{path} is not valid JSON: {err}"
                logger.error(e)
                raise InvalidInputError(SCHEMA, e)

    def require_object(self, data: Any, keys) -> dict:
        if not isinstance(data, dict):
            e = f"{self.NAME} file should hold a JSON object. Got {type(data).__name__}."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        missing = [k for k in keys if k not in data]
        if missing:
            e = f"{self.NAME} file is missing keys {missing}."
            logger.error(e)
            raise InvalidInputError(SCHEMA, e)
        return data

    def load(self, path: str):
        """Read and validate one file.

        Raises:
            OSError: the file cannot be read.
            InvalidInputError: the content does not follow the format.
        """
        return self.parse(self.read_json(path))

    def parse(self, data: Any):
        raise NotImplementedError
