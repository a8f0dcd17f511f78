"""File formats: binary PGM rasters, CSV tables and stable JSON records."""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from pathlib import Path

import numpy as np


def write_pgm(path, bits: np.ndarray) -> None:
    """Binary PGM (P5), one byte per pixel, set pixels 255.

    Row 0 of ``bits`` is written first, so the image appears flipped
    vertically relative to the usual ``Im zeta`` upward orientation.
    """
    img = np.where(np.asarray(bits, dtype=bool), 255, 0).astype(np.uint8)
    if img.ndim != 2:
        raise ValueError("raster must be two-dimensional")
    h, w = img.shape
    with open(path, "wb") as fh:
        fh.write(f"P5\n{w} {h}\n255\n".encode("ascii"))
        fh.write(img.tobytes())


def read_pgm(path) -> np.ndarray:
    """Read a binary PGM written by :func:`write_pgm` back to a boolean array."""
    data = Path(path).read_bytes()
    fields, pos = [], 0
    while len(fields) < 4:
        while data[pos:pos + 1].isspace():
            pos += 1
        if data[pos:pos + 1] == b"#":
            pos = data.index(b"\n", pos) + 1
            continue
        end = pos
        while not data[end:end + 1].isspace():
            end += 1
        fields.append(data[pos:end].decode("ascii"))
        pos = end
    if fields[0] != "P5":
        raise ValueError("not a binary PGM")
    w, h, maxval = (int(f) for f in fields[1:])
    if maxval > 255:
        raise ValueError("only 8-bit PGM is supported")
    pixels = np.frombuffer(data, dtype=np.uint8, count=w * h, offset=pos + 1)
    return pixels.reshape(h, w) > 0


def raster_csv(bits: np.ndarray) -> str:
    """Row-major 0/1 table, CRLF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerows(np.asarray(bits, dtype=np.uint8).tolist())
    return buf.getvalue()


def records_csv(rows: list[dict]) -> str:
    """Flat records as CSV with a header; nested values are JSON-encoded."""
    if not rows:
        return ""
    keys = sorted({k for row in rows for k in row})
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=keys, lineterminator="\r\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _cell(row.get(k)) for k in keys})
    return buf.getvalue()


def _cell(value):
    if value is None:
        return ""
    if isinstance(value, (dict, list, tuple, complex)):
        return dumps(value, indent=None)
    return _plain(value)


def _plain(obj):
    if isinstance(obj, complex):
        return [_plain(obj.real), _plain(obj.imag)]
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return _plain(float(obj))
    if isinstance(obj, np.complexfloating):
        return [_plain(float(obj.real)), _plain(float(obj.imag))]
    if isinstance(obj, np.ndarray):
        return [_plain(v) for v in obj.tolist()]
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Path):
        return str(obj)
    if isinstance(obj, float):
        # non-finite values are not valid JSON; -0.0 prints as 0.0
        return repr(obj) if not math.isfinite(obj) else obj + 0.0
    return obj


def _encode(obj):
    plain = _plain(obj)
    if plain is obj:
        raise TypeError(f"cannot encode {type(obj).__name__} as JSON")
    return plain


def _normalize(obj):
    # complex values nested in lists are not routed through ``default``
    if isinstance(obj, dict):
        return {str(k): _normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_normalize(v) for v in obj]
    plain = _plain(obj)
    return _normalize(plain) if isinstance(plain, list) else plain


def dumps(obj, indent: int | None = 2) -> str:
    """JSON with sorted keys; complex numbers become ``[re, im]``."""
    return json.dumps(_normalize(obj), sort_keys=True, indent=indent, default=_encode, ensure_ascii=False)


def write_json(path, obj) -> None:
    Path(path).write_text(dumps(obj) + "\n", encoding="utf-8")


__all__ = ["dumps", "raster_csv", "read_pgm", "records_csv", "write_json", "write_pgm"]
