"""Byte-stable JSON and CSV emission.

All floats are printed with 12 significant digits and dict keys keep their
insertion order, so identical inputs produce identical bytes.
"""

import json
import math


def fmt_float(x) -> str:
    x = float(x)
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if x == 0.0:
        return "0"  # normalize signed zero
    return format(x, ".12g")


def _emit(obj) -> str:
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
        return fmt_float(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_emit(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_emit(v) for v in obj) + "]"
    if hasattr(obj, "item"):  # numpy scalar
        return _emit(obj.item())
    raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps(obj) -> str:
    """Deterministic JSON text with a trailing newline."""
    return _emit(obj) + "\n"


def csv_lines(header, rows) -> str:
    """CSV text: '.' decimal separator, floats at 12 significant digits."""
    out = [",".join(header)]
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, bool):
                cells.append("1" if v else "0")
            elif isinstance(v, (int,)):
                cells.append(str(v))
            elif isinstance(v, str):
                cells.append(v)
            else:
                cells.append(fmt_float(v))
        out.append(",".join(cells))
    return "\n".join(out) + "\n"
