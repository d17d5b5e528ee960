"""Deterministic structured output.

JSON documents are rendered by hand so that every float is printed with 17
significant digits and key order is exactly insertion order: identical
inputs produce byte-identical output.  NaN and infinities are rejected;
errors travel through status fields instead.  Complex scalars become
{"re": ..., "im": ...} objects.
"""

import math

from .errors import DomainError


def format_float(x):
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise DomainError(f"non-finite float {x} cannot be serialized")
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return f"{x:.17g}"


def _escape(s):
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ord(ch) < 0x20:
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return "".join(out)


def render_json(obj):
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return format_float(obj)
    if isinstance(obj, complex):
        return '{"re": ' + format_float(obj.real) + ', "im": ' + format_float(obj.imag) + "}"
    if isinstance(obj, str):
        return '"' + _escape(obj) + '"'
    if isinstance(obj, dict):
        parts = [f'"{_escape(str(k))}": {render_json(v)}' for k, v in obj.items()]
        return "{" + ", ".join(parts) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(render_json(v) for v in obj) + "]"
    raise DomainError(f"cannot serialize value of type {type(obj).__name__}")


def _csv_cell(value):
    if isinstance(value, float):
        text = format_float(value)
    elif isinstance(value, complex):
        text = f"{format_float(value.real)}+{format_float(value.imag)}j"
    elif isinstance(value, bool):
        text = "true" if value else "false"
    else:
        text = str(value)
    if any(ch in text for ch in ',"\n\r'):
        text = '"' + text.replace('"', '""') + '"'
    return text


def render_csv(header, rows):
    """RFC-4180-style CSV: header row then one line per record."""
    lines = [",".join(_csv_cell(h) for h in header)]
    for row in rows:
        lines.append(",".join(_csv_cell(c) for c in row))
    return "\r\n".join(lines) + "\r\n"


def flatten_for_csv(payload):
    """Turn a payload dict into (header, rows) for the CSV alternative.

    A dict whose values are scalars becomes a single row; a dict holding a
    list of dicts under 'records' becomes one row per record.
    """
    if "records" in payload and isinstance(payload["records"], list):
        records = payload["records"]
        if not records:
            return ["empty"], []
        header = list(records[0].keys())
        rows = [[_scalarize(rec[k]) for k in header] for rec in records]
        return header, rows
    header = list(payload.keys())
    return header, [[_scalarize(payload[k]) for k in header]]


def _scalarize(value):
    if isinstance(value, (list, tuple)):
        return ";".join(
            _csv_cell(v) if not isinstance(v, (list, tuple)) else str(v) for v in value
        )
    if isinstance(value, dict):
        return ";".join(f"{k}={_csv_cell(v)}" for k, v in value.items())
    return value
