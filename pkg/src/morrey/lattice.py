"""Integer-lattice primitives: points, cube windows, finitely supported sequences.

Points are plain tuples of Python ints.  A window is the cube of lattice
points within Chebyshev distance N of a center, so it always spans an odd
number 2N+1 of sites per axis.  Sequences are stored sparsely as a map from
support points to nonzero values; entries that become exactly zero are
dropped, which keeps support-based bounds (radius enumeration in the norm
engines) tight.

Everything here is immutable after construction and safe to share between
threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping

from .errors import DomainError, SizeError

Point = tuple[int, ...]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def _check_point(k: Point, dim: int) -> None:
    if len(k) != dim:
        raise DomainError(f"point {k!r} has {len(k)} coordinates, expected {dim}")


def window_cardinality(radius: int, dim: int) -> int:
    """Number of lattice points in a cube of half-width ``radius``: (2N+1)^d.

    Computed exactly in integer arithmetic; raises SizeError if the count
    leaves the signed 64-bit range, the widest integer this package
    guarantees to handle exactly.
    """
    if radius < 0:
        raise DomainError(f"radius must be nonnegative, got {radius}")
    if dim < 1:
        raise DomainError(f"dimension must be positive, got {dim}")
    count = (2 * radius + 1) ** dim
    if count > INT64_MAX:
        raise SizeError(
            f"window cardinality (2*{radius}+1)^{dim} exceeds the signed 64-bit range"
        )
    return count


@dataclass(frozen=True)
class Window:
    """Cube of lattice points k with max_j |k_j - center_j| <= radius."""

    center: Point
    radius: int

    def __post_init__(self) -> None:
        if not isinstance(self.radius, int) or self.radius < 0:
            raise DomainError(f"window radius must be a nonnegative integer, got {self.radius!r}")
        if len(self.center) < 1:
            raise DomainError("window center must have at least one coordinate")
        object.__setattr__(self, "center", tuple(int(c) for c in self.center))

    @property
    def dim(self) -> int:
        return len(self.center)

    @property
    def cardinality(self) -> int:
        return window_cardinality(self.radius, self.dim)

    def contains(self, k: Point) -> bool:
        """True iff k lies in the cube (Chebyshev distance to center <= radius)."""
        _check_point(k, self.dim)
        return max(abs(a - b) for a, b in zip(k, self.center)) <= self.radius

    def points(self) -> Iterator[Point]:
        """Iterate the window's lattice points in lexicographic order."""
        axes = [range(c - self.radius, c + self.radius + 1) for c in self.center]
        return iter(itertools.product(*axes))


def window_contains(w: Window, k: Point) -> bool:
    return w.contains(k)


@dataclass(frozen=True)
class SparseSequence:
    """Finitely supported sequence Z^d -> R.

    Keys are d-tuples of ints, values are nonzero floats.  Exact zeros are
    elided on construction, so the empty map is the canonical zero sequence.
    """

    dim: int
    entries: Mapping[Point, float]

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.dim!r}")
        clean: dict[Point, float] = {}
        for k, v in self.entries.items():
            key = tuple(int(c) for c in k)
            _check_point(key, self.dim)
            val = float(v)
            if val != 0.0:
                clean[key] = val
        object.__setattr__(self, "entries", clean)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def __len__(self) -> int:
        return len(self.entries)

    def value_at(self, k: Point) -> float:
        _check_point(k, self.dim)
        return self.entries.get(tuple(k), 0.0)

    def scale(self, factor: float) -> "SparseSequence":
        return SparseSequence(self.dim, {k: factor * v for k, v in self.entries.items()})

    def shift(self, t: Point) -> "SparseSequence":
        """Translate the support by the lattice vector t."""
        _check_point(t, self.dim)
        return SparseSequence(
            self.dim,
            {tuple(c + d for c, d in zip(k, t)): v for k, v in self.entries.items()},
        )

    def __neg__(self) -> "SparseSequence":
        return self.scale(-1.0)


def combine(x: SparseSequence, y: SparseSequence, sign: int = 1) -> SparseSequence:
    """Pointwise x + sign*y with sign in {+1, -1}; exact-zero results are dropped."""
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    if x.dim != y.dim:
        raise DomainError(f"dimension mismatch: {x.dim} vs {y.dim}")
    out = dict(x.entries)
    for k, v in y.entries.items():
        out[k] = out.get(k, 0.0) + sign * v
    return SparseSequence(x.dim, out)


@dataclass(frozen=True)
class BoundingBox:
    """Componentwise hull of a nonempty support."""

    lo: Point
    hi: Point

    def __post_init__(self) -> None:
        if len(self.lo) != len(self.hi):
            raise DomainError("bounding box corners must have equal dimension")
        if any(a > b for a, b in zip(self.lo, self.hi)):
            raise DomainError(f"bounding box has lo {self.lo} above hi {self.hi}")

    @property
    def extents(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.lo, self.hi))

    @property
    def max_extent(self) -> int:
        return max(self.extents)


def support_box(x: SparseSequence) -> BoundingBox | None:
    """Componentwise min/max of the support, or None for the zero sequence."""
    if x.is_zero:
        return None
    keys = list(x.entries)
    lo = tuple(min(k[j] for k in keys) for j in range(x.dim))
    hi = tuple(max(k[j] for k in keys) for j in range(x.dim))
    return BoundingBox(lo, hi)
