"""Canonical JSON encoding: sorted keys, 17-significant-digit floats.

All machine-readable outputs go through :func:`canon_dumps` so that fixed
inputs always produce byte-identical files.  The stdlib encoder is avoided
for floats because its shortest-repr formatting is not pinned by any schema.
"""

from __future__ import annotations

import json
import math
from pathlib import Path


def fmt_float(value: float) -> str:
    if not math.isfinite(value):
        raise ValueError(f"non-finite float {value!r} cannot be serialized")
    return format(value, ".17g")


def _encode(obj, out: list[str]) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(fmt_float(obj))
    elif isinstance(obj, dict):
        out.append("{")
        first = True
        for key in sorted(obj):
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be str, got {type(key).__name__}")
            if not first:
                out.append(",")
            first = False
            out.append(json.dumps(key, ensure_ascii=False))
            out.append(":")
            _encode(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for idx, item in enumerate(obj):
            if idx:
                out.append(",")
            _encode(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def canon_dumps(obj) -> str:
    out: list[str] = []
    _encode(obj, out)
    return "".join(out)


def write_json(path: str | Path, obj) -> None:
    Path(path).write_text(canon_dumps(obj) + "\n", encoding="utf-8", newline="\n")


def read_json(path: str | Path):
    return json.loads(Path(path).read_text(encoding="utf-8"))
