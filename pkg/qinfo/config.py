import json
import math

from collections import namedtuple

from qinfo.exceptions import ConsoleError
from qinfo.logging import log_debug

FORMATS = ["table", "json", "csv"]

Settings = namedtuple("Settings", [
    "validation_tolerance",
    "classify_tolerance",
    "parse_tolerance",
    "format",
    "seed",
    "sweep_spread",
])

DEFAULT_SETTINGS = Settings(
    validation_tolerance=1e-10,
    classify_tolerance=1e-9,
    parse_tolerance=1e-4,
    format="table",
    seed=0,
    sweep_spread=1.0,
)

# Expected type of each setting
SETTING_TYPES = {
    "validation_tolerance": float,
    "classify_tolerance": float,
    "parse_tolerance": float,
    "format": str,
    "seed": int,
    "sweep_spread": float,
}


def _coerce(key, value):
    expected = SETTING_TYPES[key]

    if isinstance(value, bool) or not isinstance(value, (int, float, str)):
        raise ConsoleError("Setting '{}' has invalid value {!r}".format(key, value))

    if expected is str:
        if value not in FORMATS:
            raise ConsoleError("Setting 'format' must be one of: {}".format(", ".join(FORMATS)))
        return value

    if expected is int and not isinstance(value, int):
        raise ConsoleError("Setting '{}' must be an integer".format(key))

    if isinstance(value, str):
        raise ConsoleError("Setting '{}' must be a number".format(key))

    if not math.isfinite(value):
        raise ConsoleError("Setting '{}' must be finite".format(key))

    return expected(value)


def make_settings(overrides):
    """Returns the default settings with `overrides` applied."""
    unknown = sorted(set(overrides) - set(Settings._fields))
    if unknown:
        raise ConsoleError("Unknown setting '{}'".format(unknown[0]))

    values = DEFAULT_SETTINGS._asdict()
    for key, value in overrides.items():
        values[key] = _coerce(key, value)

    return Settings(**values)


def load_settings(path=None):
    """
    Loads settings from a JSON file given by --config.

    No file is read unless a path is given, so that output depends on the
    command line alone.
    """
    if not path:
        return DEFAULT_SETTINGS

    try:
        with open(path, encoding="utf-8") as f:
            overrides = json.load(f)
    except OSError as ex:
        raise ConsoleError("Cannot read config file {}: {}".format(path, ex.strerror))
    except json.JSONDecodeError as ex:
        raise ConsoleError("Invalid config file {}: {}".format(path, ex))

    if not isinstance(overrides, dict):
        raise ConsoleError("Config file {} must contain a JSON object".format(path))

    log_debug("loaded settings from", path, overrides)
    return make_settings(overrides)
