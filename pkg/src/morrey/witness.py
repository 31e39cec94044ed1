"""Extremal pair construction: two unit vectors with ||x+y|| = ||x-y|| = 2.

For 1 <= p < q and an even n with n > 2^{q/(d(q-p))} - 1, put value 1 at the
origin and at (n, 0, ..., 0) to get x, and values 1 and -1 at the same two
sites to get y.  The threshold on n is equivalent to

    (n+1)^{d(1/q - 1/p)} * 2^{1/p} < 1,

which makes the window covering both support sites (center (n/2, 0, ..., 0),
radius n/2) worth strictly less than the singleton windows, so
||x|| = ||y|| = 1.  Meanwhile x+y and x-y are single sites of value 2, hence
||x+y|| = ||x-y|| = 2.  Every quotient family then evaluates to 2 at the
pair, and since 2 is also the analytic upper bound, each constant equals 2
exactly: the spaces with p < q are not uniformly nonsquare.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .constants import (
    FAMILY_ORDER,
    PARAMETRIC,
    ConstantKind,
    PairNorms,
    quotient_from_norms,
)
from .errors import DomainError, SizeError, VerificationError
from .lattice import SparseSequence, combine
from .norms import SpaceParams, norm

# Even n makes the covering window center n/2 a lattice point; the margin
# floor rejects p, q so close together that the threshold test drowns in
# float rounding.
MARGIN_FLOOR = 1e-15


def witness_threshold(sp: SpaceParams) -> float:
    """The bound 2^{q/(d(q-p))} - 1 that n must strictly exceed."""
    sp.require_strict()
    exponent = sp.q / (sp.d * (sp.q - sp.p))
    try:
        return 2.0**exponent - 1.0
    except OverflowError:
        return math.inf


def threshold_margin(sp: SpaceParams, n: int) -> float:
    """Slack 1 - (n+1)^{d(1/q-1/p)} * 2^{1/p}; positive iff n passes."""
    return 1.0 - float(n + 1) ** sp.weight_exponent * 2.0 ** (1.0 / sp.p)


def _check_n(sp: SpaceParams, n: int) -> None:
    if not isinstance(n, int) or n <= 0 or n % 2 != 0:
        raise DomainError(f"witness offset n must be a positive even integer, got {n!r}")
    margin = threshold_margin(sp, n)
    if margin <= 0.0:
        raise DomainError(
            f"n={n} violates (n+1)^(d(1/q-1/p)) * 2^(1/p) < 1 "
            f"(left side is {1.0 - margin!r})"
        )
    if margin < MARGIN_FLOOR:
        raise DomainError(
            f"n={n} passes the threshold with margin {margin:.3e}, below the "
            f"{MARGIN_FLOOR:.0e} floor where double precision cannot certify it"
        )


@dataclass(frozen=True)
class WitnessParams:
    """Space and offset for one extremal pair."""

    sp: SpaceParams
    n: int

    def __post_init__(self) -> None:
        _check_n(self.sp, self.n)


@dataclass(frozen=True)
class WitnessPair:
    x: SparseSequence
    y: SparseSequence
    params: WitnessParams


def minimal_even_n(sp: SpaceParams) -> int:
    """Smallest even integer strictly above the threshold.

    Requires p < q; raises SizeError when the threshold is too large for an
    exact integer answer.
    """
    sp.require_strict()
    threshold = witness_threshold(sp)
    if not math.isfinite(threshold) or threshold > 2**62:
        raise SizeError(
            f"witness threshold 2^(q/(d(q-p))) - 1 = {threshold!r} exceeds the usable integer range"
        )
    n = 2 * (math.floor(threshold / 2.0) + 1)
    _check_n(sp, n)
    return n


def build_witness(sp: SpaceParams, n: int | None = None) -> WitnessPair:
    """Construct the pair; n defaults to minimal_even_n(sp)."""
    sp.require_strict()
    if n is None:
        n = minimal_even_n(sp)
    params = WitnessParams(sp, n)
    origin = (0,) * sp.d
    far = (n,) + (0,) * (sp.d - 1)
    x = SparseSequence(sp.d, {origin: 1.0, far: 1.0})
    y = SparseSequence(sp.d, {origin: 1.0, far: -1.0})
    return WitnessPair(x, y, params)


@dataclass(frozen=True)
class TheoremRow:
    kind: ConstantKind
    witness_quotient: float
    reported_value: float | None
    passed: bool


@dataclass(frozen=True)
class TheoremReport:
    pair: WitnessPair
    norms: PairNorms
    norms_ok: bool
    rows: tuple[TheoremRow, ...]
    tol: float

    @property
    def all_passed(self) -> bool:
        return self.norms_ok and all(r.passed for r in self.rows)


def theorem_kinds(s_list: Sequence[float]) -> list[ConstantKind]:
    """The eight families expanded over s_list where a family takes s."""
    kinds: list[ConstantKind] = []
    for family in FAMILY_ORDER:
        if family in PARAMETRIC:
            kinds.extend(ConstantKind(family, s) for s in s_list)
        else:
            kinds.append(ConstantKind(family))
    return kinds


def verify_theorem(
    sp: SpaceParams,
    s_list: Sequence[float],
    tol: float = 1e-9,
    n: int | None = None,
    raise_on_failure: bool = True,
) -> TheoremReport:
    """Check that every constant quotient at the witness pair equals 2.

    Verifies ||x|| = ||y|| = 1 and ||x+y|| = ||x-y|| = 2 within tol, then
    evaluates each family (expanding the parametric ones over s_list) and
    requires the quotient to reach 2 - tol.  A quotient that does, combined
    with the analytic ceiling of 2, certifies the constant's value as
    exactly 2, which is what ``reported_value`` carries.
    """
    if not s_list:
        raise DomainError("s_list must contain at least one exponent")
    for s in s_list:
        if not math.isfinite(float(s)) or float(s) < 1.0:
            raise DomainError(f"every s must satisfy 1 <= s < inf, got {s!r}")
    pair = build_witness(sp, n)
    norms = PairNorms(
        x=norm(pair.x, sp).norm,
        y=norm(pair.y, sp).norm,
        plus=norm(combine(pair.x, pair.y, 1), sp).norm,
        minus=norm(combine(pair.x, pair.y, -1), sp).norm,
    )
    norms_ok = (
        abs(norms.x - 1.0) <= tol
        and abs(norms.y - 1.0) <= tol
        and abs(norms.plus - 2.0) <= tol
        and abs(norms.minus - 2.0) <= tol
    )
    rows = []
    for kind in theorem_kinds(s_list):
        value = quotient_from_norms(kind, norms)
        passed = value >= 2.0 - tol
        rows.append(TheoremRow(kind, value, 2.0 if passed else None, passed))
    report = TheoremReport(pair, norms, norms_ok, tuple(rows), tol)
    if raise_on_failure and not report.all_passed:
        if not norms_ok:
            raise VerificationError(
                f"witness norms off target: ||x||={norms.x!r} ||y||={norms.y!r} "
                f"||x+y||={norms.plus!r} ||x-y||={norms.minus!r} (tol={tol})"
            )
        bad = next(r for r in rows if not r.passed)
        raise VerificationError(
            f"{bad.kind.label} quotient {bad.witness_quotient!r} fell below 2 - {tol}"
        )
    return report
