"""Benchmark configuration loader.

YAML values tagged ``!ENV`` are expanded from the environment: every
``${VAR_NAME}`` in the scalar is replaced by the variable's value.
"""

import os
import re
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError
from structlog import get_logger

from .exceptions import ConfigError
from .helpers.logging_helper import log_and_raise_error
from .models.config_model import ConfigModel

LOGGER = get_logger()

ENV_TAG = "!ENV"
ENV_PATTERN = re.compile(r"\$\{(\w+)\}")


def expand_env(value: str) -> str:
    """Replace every ``${VAR}`` in a scalar by its environment value.

    Raises:
        ConfigError: a referenced variable is not set.
    """

    def lookup(match: "re.Match[str]") -> str:
        name = match.group(1)
        if name not in os.environ:
            log_and_raise_error(f"Environment variable {name} is not set", ConfigError, variable=name)
        return os.environ[name]

    return ENV_PATTERN.sub(lookup, value)


class EnvLoader(yaml.SafeLoader):
    """SafeLoader that understands the ``!ENV`` tag."""


def _construct_env(loader: yaml.SafeLoader, node: yaml.ScalarNode) -> str:
    return expand_env(str(loader.construct_scalar(node)))


EnvLoader.add_constructor(ENV_TAG, _construct_env)


def parse_config(path: Optional[str] = None, data: Optional[str] = None) -> Dict[str, Any]:
    """Load YAML from a file or a string and resolve ``!ENV`` values.

    Args:
        path: the path to the yaml file.
        data: the yaml data itself.

    Returns:
        The configuration mapping; an empty document gives an empty mapping.

    Raises:
        ValueError: neither a path nor data was given.
        ConfigError: an environment variable is not set or the document is not a mapping.
        yaml.YAMLError: the text is not YAML.
    """
    if path:
        with open(path, encoding="utf-8") as config_data:
            loaded = yaml.load(config_data, Loader=EnvLoader)
    elif data:
        loaded = yaml.load(data, Loader=EnvLoader)
    else:
        raise ValueError("Either a path or data should be defined as input")
    if loaded is None:
        return {}
    if not isinstance(loaded, dict):
        log_and_raise_error(
            f"Configuration must be a mapping, found {type(loaded).__name__}", ConfigError, path=path
        )
    return loaded


def load_config(file_path: str) -> ConfigModel:
    """Load a config YAML file into a Pydantic config model.

    Args:
        file_path: Path to configuration file.

    Returns:
        A Pydantic validated ConfigModel instance.

    Raises:
        ValidationError: Pydantic validation error.
        ConfigError: the file cannot be resolved into a mapping.
    """
    LOGGER.info("Loading configuration file.", path=file_path)

    try:
        return ConfigModel(**parse_config(path=file_path))
    except ValidationError as e:
        LOGGER.warning("Unable to validate config file")
        raise e from e
