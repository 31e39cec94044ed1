"""Derivative-free maximization of a constant quotient over pairs of sequences.

The suprema defining the constants range over an infinite-dimensional space,
so a search can only certify lower bounds: the returned certificate carries
a concrete pair whose quotient is the claimed value, and recomputing the
quotient from the stored pair reproduces it.  Results are phrased as
"constant >= value" everywhere.

The procedure is multi-start coordinate-wise hill climbing over the entries
of x and y, with support confined to the cube [-R, R]^d.  Absent entries
are zeros that a perturbation can populate, so every support inside the box
is reachable without explicit topology moves.  Known-good deterministic
starts (the extremal pair when it fits the box, and the classic one- and
two-site pairs) run before the random restarts.

Determinism: restart r draws from a stream seeded by (seed, r), sweeps
visit coordinates in a fixed order, and the cross-restart reduction prefers
higher value then lower restart index, so identical inputs give
bit-identical certificates regardless of thread count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constants import ConstantKind, PairNorms, quotient_from_norms
from .errors import DomainError, SizeError
from .lattice import Point, SparseSequence, combine
from .norms import SpaceParams, norm
from .witness import build_witness, minimal_even_n

MAX_DEGENERATE_REDRAWS = 100


@dataclass(frozen=True)
class SearchConfig:
    """Hill-climbing budget; defaults keep runs reproducible and quick."""

    radius: int
    restarts: int = 8
    max_iters: int = 60
    step_init: float = 0.5
    step_min: float = 1e-6
    seed: int = 0

    def __post_init__(self) -> None:
        if self.radius < 0:
            raise DomainError(f"radius must be nonnegative, got {self.radius}")
        if self.restarts < 1 or self.max_iters < 1:
            raise DomainError("restarts and max_iters must be positive")
        if not 0.0 < self.step_min < self.step_init:
            raise DomainError(
                f"need 0 < step_min < step_init, got {self.step_min} and {self.step_init}"
            )


@dataclass(frozen=True)
class LowerBoundCertificate:
    """A pair witnessing constant >= value; self-checking by recomputation."""

    kind: ConstantKind
    value: float
    x: SparseSequence
    y: SparseSequence
    norms: PairNorms
    restart: int
    evaluations: int


@dataclass(frozen=True)
class _Eval:
    value: float
    x: SparseSequence
    y: SparseSequence
    norms: PairNorms


def box_points(dim: int, radius: int) -> list[Point]:
    """Lattice points of [-R, R]^d in lexicographic order."""
    return list(itertools.product(range(-radius, radius + 1), repeat=dim))


def _to_sparse(dim: int, points: list[Point], values: np.ndarray) -> SparseSequence:
    entries = {points[i]: float(values[i]) for i in range(len(points)) if values[i] != 0.0}
    return SparseSequence(dim, entries)


def _evaluate(
    kind: ConstantKind,
    sp: SpaceParams,
    x: SparseSequence,
    y: SparseSequence,
) -> _Eval | None:
    """Quotient at (x, y), or None when the pair is degenerate.

    Unit-sphere kinds are evaluated with auto-normalization: the pair kept
    in the result is the rescaled one, so the certificate reproduces its
    value without further flags.
    """
    if x.is_zero or y.is_zero:
        return None
    nx = norm(x, sp).norm
    ny = norm(y, sp).norm
    if kind.unit_sphere_only:
        x = x.scale(1.0 / nx)
        y = y.scale(1.0 / ny)
        nx = norm(x, sp).norm
        ny = norm(y, sp).norm
    norms = PairNorms(
        x=nx,
        y=ny,
        plus=norm(combine(x, y, 1), sp).norm,
        minus=norm(combine(x, y, -1), sp).norm,
    )
    return _Eval(quotient_from_norms(kind, norms), x, y, norms)


def seeded_restarts(sp: SpaceParams, radius: int) -> list[tuple[SparseSequence, SparseSequence]]:
    """Deterministic starting pairs, tried before any random restart.

    Includes the extremal pair (translated so its support sits symmetrically
    inside the box; translation leaves the norm unchanged) whenever p < q
    and the pair fits, plus the classic single- and two-site pairs.
    """
    d = sp.d
    origin = (0,) * d
    e0 = SparseSequence(d, {origin: 1.0})
    pairs: list[tuple[SparseSequence, SparseSequence]] = []
    if sp.p < sp.q:
        try:
            n = minimal_even_n(sp)
        except SizeError:
            n = None
        if n is not None and n <= 2 * radius:
            pair = build_witness(sp, n)
            shift = (-n // 2,) + (0,) * (d - 1)
            pairs.append((pair.x.shift(shift), pair.y.shift(shift)))
    if radius >= 1:
        site1 = (1,) + (0,) * (d - 1)
        e1 = SparseSequence(d, {site1: 1.0})
        pairs.append((e0, e1))
        pairs.append(
            (
                SparseSequence(d, {origin: 1.0, site1: 1.0}),
                SparseSequence(d, {origin: 1.0, site1: -1.0}),
            )
        )
    else:
        pairs.append((e0, e0))
    return pairs


def _climb(
    kind: ConstantKind,
    sp: SpaceParams,
    points: list[Point],
    ax: np.ndarray,
    ay: np.ndarray,
    cfg: SearchConfig,
    history: list[float] | None = None,
) -> tuple[_Eval, int]:
    """Coordinate-wise hill climb from (ax, ay); returns (best, evaluations).

    One iteration is a full sweep over every entry of both sequences in both
    directions; the step halves after a sweep with no accepted move.  The
    best-so-far value is non-decreasing by construction.
    """
    dim = sp.d
    evaluations = 0

    def evaluate() -> _Eval | None:
        nonlocal evaluations
        evaluations += 1
        return _evaluate(kind, sp, _to_sparse(dim, points, ax), _to_sparse(dim, points, ay))

    best = evaluate()
    if best is None:
        raise DomainError("hill climb started from a degenerate pair")
    if history is not None:
        history.append(best.value)

    step = cfg.step_init
    sweeps = 0
    while sweeps < cfg.max_iters and step >= cfg.step_min:
        improved = False
        for arr in (ax, ay):
            for i in range(len(points)):
                for delta in (step, -step):
                    old = arr[i]
                    arr[i] = old + delta
                    cand = evaluate()
                    if cand is not None and cand.value > best.value:
                        best = cand
                        improved = True
                        if history is not None:
                            history.append(cand.value)
                        break
                    arr[i] = old
        sweeps += 1
        if not improved:
            step *= 0.5
    return best, evaluations


def _thread_cap(threads: int | None) -> int:
    if threads is not None:
        if threads < 1:
            raise DomainError(f"thread count must be positive, got {threads}")
        return threads
    env = os.environ.get("MORREY_THREADS")
    if env is not None:
        try:
            cap = int(env)
        except ValueError:
            cap = 0
        if cap < 1:
            raise DomainError(f"MORREY_THREADS must be a positive integer, got {env!r}")
        return cap
    return os.cpu_count() or 1


def maximize_quotient(
    kind: ConstantKind,
    sp: SpaceParams,
    cfg: SearchConfig,
    threads: int | None = None,
) -> LowerBoundCertificate:
    """Best lower bound for the kind's constant found across all restarts.

    Restart order: the seeded pairs first, then cfg.restarts random pairs
    with entries uniform in [-1, 1] on the box.  Restarts are independent
    and may run on a thread pool capped by ``threads`` (default: the
    MORREY_THREADS environment variable, else the machine's CPU count); the
    outcome does not depend on the cap.
    """
    points = box_points(sp.d, cfg.radius)
    seeds = seeded_restarts(sp, cfg.radius)
    total = len(seeds) + cfg.restarts

    def run(index: int) -> tuple[_Eval, int]:
        if index < len(seeds):
            sx, sy = seeds[index]
            ax = np.array([sx.value_at(pt) for pt in points], dtype=np.float64)
            ay = np.array([sy.value_at(pt) for pt in points], dtype=np.float64)
        else:
            rng = np.random.default_rng([cfg.seed, index])
            for _ in range(MAX_DEGENERATE_REDRAWS):
                ax = rng.uniform(-1.0, 1.0, size=len(points))
                ay = rng.uniform(-1.0, 1.0, size=len(points))
                if np.any(ax != 0.0) and np.any(ay != 0.0):
                    break
            else:
                raise RuntimeError("random initialization kept producing zero sequences")
        return _climb(kind, sp, points, ax, ay, cfg)

    workers = min(_thread_cap(threads), total)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(run, range(total)))
    else:
        outcomes = [run(i) for i in range(total)]

    best_index = 0
    for i in range(1, total):
        if outcomes[i][0].value > outcomes[best_index][0].value:
            best_index = i
    best = outcomes[best_index][0]
    evaluations = sum(n for _, n in outcomes)
    return LowerBoundCertificate(
        kind=kind,
        value=best.value,
        x=best.x,
        y=best.y,
        norms=best.norms,
        restart=best_index,
        evaluations=evaluations,
    )
