"""Deterministic JSON/CSV emission for the CLI.

Floats are rendered in fixed 17-significant-digit scientific notation (exact
round-trip, byte-identical across platforms); infinities become the strings
"inf"/"-inf".  Dict key order is insertion order, which the callers fix.
"""
from __future__ import annotations

import json
import math

FLOAT_FMT = "{:.16e}"


def float_token(x: float) -> str:
    """JSON token for a float: a number literal or a quoted infinity."""
    if math.isinf(x):
        return '"inf"' if x > 0 else '"-inf"'
    if math.isnan(x):
        return '"nan"'
    return FLOAT_FMT.format(x)


def dumps(obj) -> str:
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return float_token(obj)
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if isinstance(obj, dict):
        items = (f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items())
        return "{" + ", ".join(items) + "}"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def csv_cell(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        return FLOAT_FMT.format(x)
    return str(x)


def csv_row(cells) -> str:
    return ",".join(csv_cell(c) for c in cells)
