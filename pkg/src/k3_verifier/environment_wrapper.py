# Standard Library
import os
from collections.abc import Callable
from dataclasses import dataclass
from typing import Any


@dataclass
class EnvironmentVariable:
    key_name: str
    help_text: str
    default: str = ""
    required: bool = False
    cast: Callable[[str], Any] = str


def validate_environment(env_variables):
    missing = []
    values = {}
    for env_variable in env_variables:
        value = os.environ.get(env_variable.key_name, env_variable.default)
        if not value and env_variable.required:
            missing.append(f"{env_variable.key_name}: {env_variable.help_text}")
            continue
        try:
            values[env_variable.key_name] = env_variable.cast(value) if value else value
        except ValueError:
            missing.append(f"{env_variable.key_name}: {env_variable.help_text} (got {value!r})")

    if missing:
        raise OSError(f"The following env variables need to be set: {', '.join(missing)}")
    return values
