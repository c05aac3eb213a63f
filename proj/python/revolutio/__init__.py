"""Polynomial parametrizations of surfaces of revolution about the z-axis.

The heavy lifting happens in the compiled ``_core`` module; the helpers here
decode its JSON reports into plain dictionaries.
"""

import json

from . import _core
from ._core import (
    REPORT_SCHEMA,
    RevolutioError,
    classify_quadric,
    parse,
    real_root_count,
    sample_mesh,
    squarefree_decompose,
)

__all__ = [
    "REPORT_SCHEMA",
    "RevolutioError",
    "analyze",
    "analyze_p2",
    "classify_quadric",
    "parse",
    "quadric",
    "real_root_count",
    "sample_mesh",
    "squarefree_decompose",
    "verify_catalog",
]


def _decode(reply):
    text, exit_code = reply
    report = json.loads(text)
    report["exit_code"] = exit_code
    return report


def analyze(F, fiber=True):
    """Full pipeline on an implicit equation F(x, y, z) = 0."""
    return _decode(_core.analyze_implicit(F, fiber))


def analyze_p2(first, second, fiber=True):
    """Full pipeline from a polynomial parametrization [first(t), second(t)] of P^2."""
    return _decode(_core.analyze_p2(first, second, fiber))


def quadric(F):
    return _decode(_core.quadric(F))


def verify_catalog(fiber=True, parallel=False):
    return _decode(_core.verify_catalog(fiber, parallel))
