"""Block-diagram ingestion: JSON trees of tf / series / parallel / feedback.

Schema (unknown keys rejected):

    {"kind": "tf", "expr": "<expression>"}
    {"kind": "series",   "blocks": [<node>, ...]}    # nonempty
    {"kind": "parallel", "blocks": [<node>, ...]}    # nonempty
    {"kind": "feedback", "forward": <node>}          # negative unity feedback

Errors carry the JSON path of the offending node (``$.blocks[1].forward``).
"""
from __future__ import annotations

from functools import reduce

from ltistab.errors import DiagramError, LtistabError
from ltistab.expressions import tf_from_text
from ltistab.rational import TransferFunction, feedback_unity, parallel, series

_SCHEMAS = {
    "tf": {"kind", "expr"},
    "series": {"kind", "blocks"},
    "parallel": {"kind", "blocks"},
    "feedback": {"kind", "forward"},
}


def elaborate_diagram(spec: dict) -> TransferFunction:
    """Validate and fold the diagram bottom-up into one transfer function."""
    return _elaborate(spec, "$")


def _elaborate(node, path: str) -> TransferFunction:
    if not isinstance(node, dict):
        raise DiagramError(path, "node must be a JSON object")
    kind = node.get("kind")
    if kind not in _SCHEMAS:
        raise DiagramError(path, f"unknown kind {kind!r}")
    expected = _SCHEMAS[kind]
    extra = sorted(set(node) - expected)
    if extra:
        raise DiagramError(path, f"unknown keys {extra}")
    missing = sorted(expected - set(node))
    if missing:
        raise DiagramError(path, f"missing keys {missing}")

    if kind == "tf":
        expr = node["expr"]
        if not isinstance(expr, str):
            raise DiagramError(path, "'expr' must be a string")
        try:
            return tf_from_text(expr)
        except LtistabError as exc:
            raise DiagramError(path, str(exc)) from exc

    if kind in ("series", "parallel"):
        blocks = node["blocks"]
        if not isinstance(blocks, list) or not blocks:
            raise DiagramError(path, "'blocks' must be a nonempty list")
        folded = [
            _elaborate(child, f"{path}.blocks[{i}]") for i, child in enumerate(blocks)
        ]
        op = series if kind == "series" else parallel
        try:
            return reduce(op, folded)
        except LtistabError as exc:
            raise DiagramError(path, str(exc)) from exc

    forward = _elaborate(node["forward"], f"{path}.forward")
    try:
        return feedback_unity(forward)
    except LtistabError as exc:
        raise DiagramError(path, str(exc)) from exc
