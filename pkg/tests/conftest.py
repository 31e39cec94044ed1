"""Shared helpers: random instances and an independent brute-force norm oracle."""

from __future__ import annotations

import itertools
import math

import numpy as np

from morrey import SparseSequence, SpaceParams


def brute_norm(x: SparseSequence, sp: SpaceParams) -> float:
    """Direct enumeration of the norm definition, written independently of
    the engines: plain loops, fsum, and a radius sweep past the point where
    one window covers the whole support."""
    if x.is_zero:
        return 0.0
    keys = list(x.entries)
    lo = [min(k[j] for k in keys) for j in range(x.dim)]
    hi = [max(k[j] for k in keys) for j in range(x.dim)]
    extent = max(h - l for l, h in zip(lo, hi))
    best = 0.0
    for radius in range(extent + 2):
        weight = (2 * radius + 1) ** (sp.d * (1.0 / sp.q - 1.0 / sp.p))
        axes = [range(l - radius, h + radius + 1) for l, h in zip(lo, hi)]
        for center in itertools.product(*axes):
            psum = math.fsum(
                abs(v) ** sp.p
                for k, v in x.entries.items()
                if max(abs(a - b) for a, b in zip(k, center)) <= radius
            )
            if psum > 0.0:
                value = weight * psum ** (1.0 / sp.p)
                if value > best:
                    best = value
    return best


def random_sequence(
    rng: np.random.Generator,
    dim: int,
    max_points: int = 12,
    coord_range: int = 6,
    value_range: float = 5.0,
) -> SparseSequence:
    count = int(rng.integers(1, max_points + 1))
    entries = {}
    for _ in range(count):
        key = tuple(int(c) for c in rng.integers(-coord_range, coord_range + 1, size=dim))
        entries[key] = float(rng.uniform(-value_range, value_range))
    return SparseSequence(dim, entries)


def random_nonzero_sequence(rng: np.random.Generator, dim: int, **kwargs) -> SparseSequence:
    while True:
        x = random_sequence(rng, dim, **kwargs)
        if not x.is_zero:
            return x


def random_space(rng: np.random.Generator, dim: int, p_max: float = 8.0) -> SpaceParams:
    p = float(rng.uniform(1.0, p_max))
    q = float(rng.uniform(p, p_max))
    return SpaceParams(p, q, dim)
