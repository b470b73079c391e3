"""This file contains functions for getting configuration parameters from
    a config file, or if not defined a default value"""

import os
import sys
from typing import Any, Optional

import yaml

from rlayouttools.exceptions import InvalidConfigException

CONFIG_FILE = "~/.rlayouttools.yml"


def get_lattice_cap() -> int:
    return _get_positive_int("lattice_cap", 100000)


def get_max_layouts() -> int:
    '''Zero means no limit.'''
    value = _get_int("max_layouts", 0)
    if value < 0:
        raise InvalidConfigException("max_layouts must not be negative")
    return value


def get_cell_size() -> int:
    return _get_positive_int("cell_size", 40)


def get_brute_force_limit() -> int:
    return _get_positive_int("brute_force_limit", 14)


def _get_positive_int(parameter: str, default_value: int) -> int:
    value = _get_int(parameter, default_value)
    if value <= 0:
        raise InvalidConfigException("{} must be positive, not {}".format(parameter, value))
    return value


def _get_int(parameter: str, default_value: int) -> int:
    value = _get_parameter_with_default(parameter, default_value)
    try:
        return int(value)
    except (TypeError, ValueError):
        raise InvalidConfigException("{} must be an integer, not {!r}".format(parameter, value))


def _get_parameter_with_default(parameter: str, default_value: Any) -> Any:
    config_value = _get_parameter_from_config(parameter)
    return config_value if config_value is not None else default_value


def _get_parameter_from_config(parameter: str) -> Optional[Any]:
    config_filename = os.path.expanduser(CONFIG_FILE)
    if not os.path.exists(config_filename):
        return None
    with open(config_filename, "r") as configfile:
        try:
            data = yaml.safe_load(configfile)
        except yaml.YAMLError as e:
            print("Error occurred when opening configuration file.", file=sys.stderr)
            print(e, file=sys.stderr)
            sys.exit(2)
    if data is None:
        return None
    if not isinstance(data, dict):
        raise InvalidConfigException("Configuration file {} does not hold a mapping".format(config_filename))
    return data.get(parameter, None)
