"""Deterministic serialization for reports.

Reruns with identical configuration must produce byte-identical output, so
floats are rendered with 17 significant digits (enough to round-trip
binary64) and dict key order is the insertion order of the builder.
"""
import json
import math


def format_float(value: float) -> str:
    if math.isnan(value) or math.isinf(value):
        raise ValueError("reports must not contain NaN or infinite floats")
    return format(value, ".17g")


def canonical_json(obj) -> str:
    """Render nested dicts/lists/scalars with pinned float formatting."""
    pieces: list[str] = []
    _emit(obj, pieces)
    return "".join(pieces)


def _emit(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(format_float(obj))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, (key, value) in enumerate(obj.items()):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _emit(value, out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, value in enumerate(obj):
            if i:
                out.append(",")
            _emit(value, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def samples_csv(rows) -> str:
    """Distortion samples (dicts with r/rho_minus/rho_plus/pairs) as CSV."""
    lines = ["r,rho_minus,rho_plus,pairs"]
    for row in rows:
        r = str(row["r"]) if isinstance(row["r"], int) else format_float(row["r"])
        lines.append(
            f"{r},{format_float(row['rho_minus'])},{format_float(row['rho_plus'])},{row['pairs']}"
        )
    return "\n".join(lines) + "\n"
