from .config_utils import (
    DEFAULT_CONFIG,
    DEFAULT_CONFIG_FILE,
    load_config,
    propagate_config,
    setup_logging,
)
from .misc import check_file_utils, check_key_and_bool, to_radians
