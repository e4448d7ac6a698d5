"""Structured-text emission with reproducible number formatting.

Machine outputs carry floats at 17 significant digits (lossless for IEEE
doubles, so parse(serialize(x)) round-trips bit-exactly); human-facing
tables use 4-6 digits and are produced elsewhere.
"""
from __future__ import annotations

import json
from typing import Any

FLOAT_FMT = ".17g"


def fmt_float(x: float) -> str:
    """Render a float at 17 significant digits (exact round trip)."""
    if x != x:  # NaN
        return "NaN"
    if x in (float("inf"), float("-inf")):
        return "Infinity" if x > 0 else "-Infinity"
    return format(float(x), FLOAT_FMT)


def dumps(obj: Any, indent: int = 2) -> str:
    """JSON text with deterministic key order and 17-digit floats.

    Dict insertion order is preserved; only dict/list/str/bool/int/float/None
    are accepted (sufficient for every sfmcal artifact).
    """
    return _emit(obj, indent, 0) + "\n"


def _emit(obj: Any, indent: int, level: int) -> str:
    pad = " " * (indent * level)
    inner = " " * (indent * (level + 1))
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = ",\n".join(
            f"{inner}{json.dumps(str(k))}: {_emit(v, indent, level + 1)}"
            for k, v in obj.items()
        )
        return "{\n" + items + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = ",\n".join(f"{inner}{_emit(v, indent, level + 1)}" for v in obj)
        return "[\n" + items + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def loads(text: str) -> Any:
    """Inverse of :func:`dumps` (plain JSON)."""
    return json.loads(text)
