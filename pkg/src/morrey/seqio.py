"""Reading and writing sequence files.

Format, one support point per row:

    # comment lines start with '#', blank lines are ignored
    d 2
    0 0 1.5
    2 0 -1

The first non-comment line declares the dimension; every following row has
d integer coordinates and one nonzero real value.  Duplicate coordinates
and zero values are rejected so files are in one-to-one correspondence with
sparse sequences.
"""

from __future__ import annotations

import math
from pathlib import Path

from .errors import FormatError
from .lattice import INT64_MAX, INT64_MIN, SparseSequence


def parse_sequence(text: str) -> SparseSequence:
    """Parse the file format above; errors carry 1-based line numbers."""
    dim: int | None = None
    entries: dict[tuple[int, ...], float] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if dim is None:
            if len(tokens) != 2 or tokens[0] != "d":
                raise FormatError(f"line {lineno}: expected header 'd <dim>', got {line!r}")
            try:
                dim = int(tokens[1])
            except ValueError:
                raise FormatError(f"line {lineno}: dimension {tokens[1]!r} is not an integer") from None
            if dim < 1:
                raise FormatError(f"line {lineno}: dimension must be positive, got {dim}")
            continue
        if len(tokens) != dim + 1:
            raise FormatError(
                f"line {lineno}: expected {dim} coordinates and one value, got {len(tokens)} tokens"
            )
        coords = []
        for tok in tokens[:dim]:
            try:
                c = int(tok)
            except ValueError:
                raise FormatError(f"line {lineno}: coordinate {tok!r} is not an integer") from None
            if not INT64_MIN <= c <= INT64_MAX:
                raise FormatError(f"line {lineno}: coordinate {tok} outside the signed 64-bit range")
            coords.append(c)
        point = tuple(coords)
        try:
            value = float(tokens[dim])
        except ValueError:
            raise FormatError(f"line {lineno}: value {tokens[dim]!r} is not a number") from None
        if not math.isfinite(value):
            raise FormatError(f"line {lineno}: value must be finite, got {tokens[dim]!r}")
        if value == 0.0:
            raise FormatError(f"line {lineno}: zero values are not stored; omit the row")
        if point in entries:
            raise FormatError(f"line {lineno}: duplicate point {point}")
        entries[point] = value
    if dim is None:
        raise FormatError("missing header line 'd <dim>'")
    return SparseSequence(dim, entries)


def format_sequence(x: SparseSequence) -> str:
    """Serialize; rows are sorted by coordinates and values keep full precision,
    so parse(format(x)) == x exactly."""
    lines = [f"d {x.dim}"]
    for point in sorted(x.entries):
        coords = " ".join(str(c) for c in point)
        lines.append(f"{coords} {x.entries[point]!r}")
    return "\n".join(lines) + "\n"


def load_sequence(path: str | Path) -> SparseSequence:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc
    return parse_sequence(text)


def save_sequence(x: SparseSequence, path: str | Path) -> None:
    Path(path).write_text(format_sequence(x))
