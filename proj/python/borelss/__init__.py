"""Python front end for the borelss spectral sequence engine."""

import json

from . import _core
from ._core import InvalidInput, Refusal, UnsupportedShape, WrongGroup

__all__ = [
    "classify",
    "classify_fiber",
    "table",
    "index",
    "oracle_check",
    "run_cli",
    "InvalidInput",
    "Refusal",
    "UnsupportedShape",
    "WrongGroup",
]


def _parity(value):
    if isinstance(value, str):
        if value not in ("even", "odd"):
            raise ValueError(f"expected an integer or 'even'/'odd', got {value!r}")
        return value
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"expected an integer or 'even'/'odd', got {value!r}")
    return "odd" if value % 2 else "even"


def classify(group, n, a, b, show_rejected=False):
    """Report document for a type-(a,b) fiber; a and b are integers or parities."""
    doc = json.loads(_core.classify_type(group, n, _parity(a), _parity(b), show_rejected))
    doc["inputs"]["a"], doc["inputs"]["b"] = a, b
    return doc


def classify_fiber(fiber, group, show_rejected=False):
    """Report document for a fiber ring given as a dict or JSON text."""
    text = fiber if isinstance(fiber, str) else json.dumps(fiber)
    return json.loads(_core.classify_fiber(text, group, show_rejected))


def table(n):
    return json.loads(_core.parity_table(n))


def index(n, a, b):
    return _core.index(n, _parity(a), _parity(b))


def oracle_check(group, n, a, b, cap=None):
    return _core.oracle_check(group, n, _parity(a), _parity(b), cap)


def run_cli(*args):
    return _core.run_cli([str(x) for x in args])
