"""Rendering helpers shared by the CLI subcommands.

Machine formats (json, csv) are deterministic for fixed inputs: floats are
printed with ``repr``, whose shortest round-trip form reparses to the exact
same double, and no wall-clock data is included.  Human tables may carry
timing.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .constants import PairNorms
from .lattice import SparseSequence
from .norms import SpaceParams


def fnum(value: float) -> str:
    """Full-precision text for a double; float(fnum(v)) == v."""
    return repr(float(value))


def render_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fnum(cell) if isinstance(cell, float) else cell for cell in row])
    return buf.getvalue()


def space_doc(sp: SpaceParams) -> dict:
    return {"p": sp.p, "q": sp.q, "d": sp.d}


def sequence_doc(x: SparseSequence) -> dict:
    return {
        "dim": x.dim,
        "entries": [[list(k), x.entries[k]] for k in sorted(x.entries)],
    }


def sequence_inline(x: SparseSequence) -> str:
    """One-line human rendering, e.g. ``(0):1.0 (4):-1.0``."""
    if x.is_zero:
        return "(zero sequence)"
    parts = []
    for k in sorted(x.entries):
        coords = ",".join(str(c) for c in k)
        parts.append(f"({coords}):{x.entries[k]!r}")
    return " ".join(parts)


def norms_doc(norms: PairNorms) -> dict:
    return {"x": norms.x, "y": norms.y, "plus": norms.plus, "minus": norms.minus}


def norms_inline(norms: PairNorms) -> str:
    return (
        f"||x||={fnum(norms.x)} ||y||={fnum(norms.y)} "
        f"||x+y||={fnum(norms.plus)} ||x-y||={fnum(norms.minus)}"
    )
