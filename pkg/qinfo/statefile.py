"""
Reading and writing state specs.

A state spec is a small JSON document with a "kind" discriminator:

    {"kind": "pure", "amplitudes": [[0.7071, 0], [0.7071, 0]]}
    {"kind": "diag", "probs": [0.5, 0.5]}
    {"kind": "ensemble", "a1": 0.8944, "a2": 0.4472, "phases": [0.0, 3.1416]}
    {"kind": "matrix", "entries": [[[0.5, 0], [0.5, 0]], [[0.5, 0], [0.5, 0]]]}

Complex numbers are [re, im] pairs, plain reals are accepted as well. Values
within the parse tolerance of being normalized are renormalized exactly,
anything further off is rejected.
"""

import cmath
import json
import re

import numpy as np

from qinfo import EnsembleSpec
from qinfo.exceptions import (NegativeProbability, NotHermitian, NotNormalized, ParseError, TraceNotOne,
                              ValidationError)
from qinfo.logging import log_debug
from qinfo.matrix import DEFAULT_TOLERANCE, DensityMatrix, as_array, validate_density
from qinfo.states import PureState, ensemble_spec, pure_state

PARSE_TOLERANCE = 1e-4

KINDS = ["pure", "diag", "ensemble", "matrix"]


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _locate(text, key):
    """Line and column of a key in the document, or of its start."""
    match = re.search(r'"{}"\s*:'.format(re.escape(key)), text)
    return _position(text, match.start() if match else 0)


def _field(text, data, key, types):
    if key not in data:
        raise ParseError("Missing field '{}'".format(key), *_locate(text, "kind"))

    value = data[key]
    if not isinstance(value, types) or isinstance(value, bool):
        raise ParseError("Field '{}' has the wrong type".format(key), *_locate(text, key))

    return value


def _finite(value):
    # json accepts NaN and Infinity literals
    if not cmath.isfinite(value):
        raise ValidationError(abs(value), "finite entries")

    return value


def _complex(text, key, value):
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return _finite(complex(value))

    if (isinstance(value, list) and len(value) == 2
            and all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in value)):
        return _finite(complex(value[0], value[1]))

    raise ParseError("Expected a number or an [re, im] pair in '{}', got {!r}".format(key, value),
                     *_locate(text, key))


def _parse_pure(text, data, tolerance):
    amplitudes = _field(text, data, "amplitudes", list)
    a = np.array([_complex(text, "amplitudes", v) for v in amplitudes])

    norm_sq = float(np.sum(np.abs(a) ** 2))
    if abs(norm_sq - 1) > tolerance:
        raise NotNormalized(abs(norm_sq - 1))

    return pure_state(a / np.sqrt(norm_sq))


def _parse_diag(text, data, tolerance):
    probs = _field(text, data, "probs", list)
    p = np.array([_complex(text, "probs", v).real for v in probs])

    if len(p) == 0:
        raise ParseError("Field 'probs' is empty", *_locate(text, "probs"))

    if np.min(p) < 0:
        raise NegativeProbability(-np.min(p))

    if abs(np.sum(p) - 1) > tolerance:
        raise NotNormalized(abs(np.sum(p) - 1))

    return np.diag(p / np.sum(p))


def _parse_ensemble(text, data, tolerance):
    a1 = _field(text, data, "a1", (int, float))
    a2 = _field(text, data, "a2", (int, float))
    phases = _field(text, data, "phases", list)

    for phi in phases:
        if not isinstance(phi, (int, float)) or isinstance(phi, bool):
            raise ParseError("Phases must be numbers, got {!r}".format(phi), *_locate(text, "phases"))
        _finite(phi)

    _finite(a1)
    _finite(a2)

    norm = np.hypot(a1, a2)
    if abs(norm ** 2 - 1) > tolerance:
        raise NotNormalized(abs(norm ** 2 - 1))

    return ensemble_spec(a1 / norm, a2 / norm, phases)


def _parse_matrix(text, data, tolerance):
    rows = _field(text, data, "entries", list)
    if not rows or not all(isinstance(row, list) and len(row) == len(rows) for row in rows):
        raise ParseError("Field 'entries' must be a square list of rows", *_locate(text, "entries"))

    m = np.array([[_complex(text, "entries", v) for v in row] for row in rows])

    hermitian_error = np.max(np.abs(m - m.conj().T))
    if hermitian_error > tolerance:
        raise NotHermitian(hermitian_error)

    trace_error = abs(np.trace(m) - 1)
    if trace_error > tolerance:
        raise TraceNotOne(trace_error)

    m = (m + m.conj().T) / 2
    return m / np.trace(m).real


PARSERS = {
    "pure": _parse_pure,
    "diag": _parse_diag,
    "ensemble": _parse_ensemble,
    "matrix": _parse_matrix,
}


def parse_state_spec(text, tolerance=PARSE_TOLERANCE, validation_tolerance=DEFAULT_TOLERANCE):
    """
    Parses a state spec into a PureState, DensityMatrix or EnsembleSpec.

    `tolerance` bounds how far off normalization the document may be,
    renormalized matrices are then validated with `validation_tolerance`.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as ex:
        raise ParseError(ex.msg, ex.lineno, ex.colno)

    if not isinstance(data, dict):
        raise ParseError("Expected a JSON object")

    kind = data.get("kind")
    if kind not in PARSERS:
        raise ParseError("Unknown kind {!r}, expected one of: {}".format(kind, ", ".join(KINDS)),
                         *_locate(text, "kind"))

    value = PARSERS[kind](text, data, tolerance)
    if isinstance(value, np.ndarray):
        value = validate_density(value, validation_tolerance)

    log_debug("parsed state spec", kind, value)
    return value


def _pair(z):
    return [float(z.real), float(z.imag)]


def dump_state_spec(value):
    """The inverse of `parse_state_spec`. Diagonal density matrices are
    written as "diag", others as "matrix"."""
    if isinstance(value, PureState):
        data = {"kind": "pure", "amplitudes": [_pair(a) for a in value.amplitudes]}
    elif isinstance(value, EnsembleSpec):
        data = {"kind": "ensemble", "a1": value.a1, "a2": value.a2, "phases": list(value.phases)}
    elif isinstance(value, DensityMatrix):
        m = as_array(value)
        if np.all(m == np.diag(np.diag(m))):
            data = {"kind": "diag", "probs": [float(p) for p in np.diag(m).real]}
        else:
            data = {"kind": "matrix", "entries": [[_pair(z) for z in row] for row in m]}
    else:
        raise TypeError("Cannot dump {!r} as a state spec".format(value))

    return json.dumps(data)
