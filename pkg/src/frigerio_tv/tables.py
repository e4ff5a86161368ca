"""CSV schemas, number formatting, and the QV-table reader."""

from __future__ import annotations

import csv
import io
from collections import defaultdict

import mpmath

from .errors import ParseError

SWEEP_HEADER = ["g", "r", "s", "prec", "tv_re", "tv_im", "qv_re", "qv_im", "terms", "seconds"]
FIT_HEADER = ["g", "model", "a", "b", "c", "rss", "r2"]
VOLUME_HEADER = ["g", "vol_tet", "vol_manifold"]


def fmt(x, digits: int = 20) -> str:
    """Decimal rendering with ``digits`` significant digits.

    Floats use ``repr`` (shortest round-trip form) when ``digits >= 17``.
    """
    if x is None:
        return ""
    if isinstance(x, float):
        if digits >= 17:
            return repr(x)
        return f"{x:.{digits}g}"
    if isinstance(x, int):
        return str(x)
    if x == 0:
        return "0"
    # exponent notation outside roughly 1e-5 .. 1e(digits)
    return mpmath.nstr(x, digits, strip_zeros=False)


def write_csv(rows, header, stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(row)


def read_qv_csv(text: str) -> dict[int, list[tuple[int, float]]]:
    """Parse sweep CSV into ``{g: [(r, Re QV), ...]}`` sorted by r.

    Only the ``g``, ``r`` and ``qv_re`` columns are required, so both sweep
    output and hand-written ``g,r,qv_re`` files are accepted.  Blank lines
    and ``#`` comments are skipped.
    """
    body = _body(text)
    header_no, header_line = body[0]
    header = next(csv.reader([header_line]))
    header = [h.strip() for h in header]
    missing = [c for c in ("g", "r", "qv_re") if c not in header]
    if missing:
        raise ParseError(f"missing column(s) {', '.join(missing)} in header", header_no)
    idx = {name: header.index(name) for name in ("g", "r", "qv_re")}
    series: dict[int, list[tuple[int, float]]] = defaultdict(list)
    for lineno, line in body[1:]:
        fields = next(csv.reader(io.StringIO(line)))
        if len(fields) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(fields)}", lineno)
        try:
            g = int(fields[idx["g"]])
            r = int(fields[idx["r"]])
            value = float(fields[idx["qv_re"]])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        series[g].append((r, value))
    if not series:
        raise ParseError("no data rows")
    return {g: sorted(points) for g, points in sorted(series.items())}


def _body(text):
    body = [
        (n, line)
        for n, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not body:
        raise ParseError("empty input")
    return body


def read_gb_csv(text: str) -> list[tuple[int, float]]:
    """``(g, b)`` pairs from fit output (or any CSV with g and b columns)."""
    body = _body(text)
    header_no, header_line = body[0]
    header = [h.strip() for h in next(csv.reader([header_line]))]
    missing = [c for c in ("g", "b") if c not in header]
    if missing:
        raise ParseError(f"missing column(s) {', '.join(missing)} in header", header_no)
    ig, ib = header.index("g"), header.index("b")
    pairs = []
    for lineno, line in body[1:]:
        fields = next(csv.reader([line]))
        if len(fields) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(fields)}", lineno)
        try:
            pairs.append((int(fields[ig]), float(fields[ib])))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if not pairs:
        raise ParseError("no data rows")
    return pairs
