"""Newline-delimited JSON records with a fixed key order."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any


def _default(obj: Any):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset)):
        return sorted(obj)
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(record: dict) -> str:
    """One JSON object per line; keys keep insertion order, so output is stable."""
    return json.dumps(record, default=_default, separators=(", ", ": "))
