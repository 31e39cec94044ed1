"""Geometric constant quotients built from the norms of x, y, x+y and x-y.

Each constant of interest is the supremum of a quotient over pairs of
nonzero elements (for three of them, pairs on the unit sphere).  With
a = ||x+y||, b = ||x-y||, and u = ||x||, v = ||y||:

    nj-gen       (a^s + b^s) / (2^{s-1} (u^s + v^s))          s in [1, inf)
    nj-mod       (a^2 + b^2) / 4                              unit sphere
    nj-mod-gen   (a^s + b^s) / 2^s                            unit sphere
    ninf         min(a, b)^2 / (u^2 + v^2)
    ninf-gen     min(a, b)^s / (2^{s-2} (u^s + v^s))
    zbaganu      a b / (u^2 + v^2)
    zbaganu-gen  (a b)^{s/2} / (2^{s-2} (u^s + v^s))
    james        min(a, b)                                    unit sphere

``quotient`` evaluates one such quotient at a concrete pair, which is a
certified lower bound for the corresponding constant.  Every quotient value
is at most 2 in any normed space; tight lower bounds for the suprema come
from the witness and search modules.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DomainError
from .lattice import SparseSequence, combine
from .norms import SpaceParams, norm

UNIT_NORM_TOL = 1e-9


class Family(enum.Enum):
    """The eight quotient families, keyed by their CLI names."""

    NJ_GEN = "nj-gen"
    NJ_MOD = "nj-mod"
    NJ_MOD_GEN = "nj-mod-gen"
    NINF = "ninf"
    NINF_GEN = "ninf-gen"
    ZBAGANU = "zbaganu"
    ZBAGANU_GEN = "zbaganu-gen"
    JAMES = "james"


# Families whose quotient carries a free exponent s >= 1; the unparameterized
# ninf/zbaganu/nj-mod forms hard-code the s = 2 shape of their generalization.
PARAMETRIC = frozenset({Family.NJ_GEN, Family.NJ_MOD_GEN, Family.NINF_GEN, Family.ZBAGANU_GEN})

# Families defined only over pairs with ||x|| = ||y|| = 1.
UNIT_SPHERE = frozenset({Family.NJ_MOD, Family.NJ_MOD_GEN, Family.JAMES})

FAMILY_ORDER = (
    Family.NJ_GEN,
    Family.NJ_MOD,
    Family.NJ_MOD_GEN,
    Family.NINF,
    Family.NINF_GEN,
    Family.ZBAGANU,
    Family.ZBAGANU_GEN,
    Family.JAMES,
)


@dataclass(frozen=True)
class ConstantKind:
    """A quotient family plus its exponent s where the family takes one."""

    family: Family
    s: float | None = None

    def __post_init__(self) -> None:
        if self.family in PARAMETRIC:
            if self.s is None:
                raise DomainError(f"{self.family.value} requires an exponent s >= 1")
            s = float(self.s)
            if not math.isfinite(s) or s < 1.0:
                raise DomainError(f"need 1 <= s < inf, got s={self.s}")
            object.__setattr__(self, "s", s)
        elif self.s is not None:
            raise DomainError(f"{self.family.value} does not take an exponent s")

    @property
    def unit_sphere_only(self) -> bool:
        return self.family in UNIT_SPHERE

    @property
    def label(self) -> str:
        if self.s is None:
            return self.family.value
        return f"{self.family.value}(s={self.s:g})"


def kind_from_name(name: str, s: float | None = None) -> ConstantKind:
    """Build a ConstantKind from its CLI name, e.g. ('ninf-gen', 2.5)."""
    try:
        family = Family(name)
    except ValueError:
        valid = ", ".join(f.value for f in FAMILY_ORDER)
        raise DomainError(f"unknown constant {name!r}; expected one of: {valid}") from None
    return ConstantKind(family, s)


@dataclass(frozen=True)
class PairNorms:
    """The four norms a quotient is built from."""

    x: float
    y: float
    plus: float
    minus: float


@dataclass(frozen=True)
class QuotientReport:
    kind: ConstantKind
    value: float
    norms: PairNorms


def quotient_from_norms(kind: ConstantKind, norms: PairNorms) -> float:
    """Apply the kind's formula to four precomputed norms."""
    a, b = norms.plus, norms.minus
    u, v = norms.x, norms.y
    f, s = kind.family, kind.s
    if f is Family.NJ_GEN:
        return (a**s + b**s) / (2.0 ** (s - 1.0) * (u**s + v**s))
    if f is Family.NJ_MOD:
        return (a**2 + b**2) / 4.0
    if f is Family.NJ_MOD_GEN:
        return (a**s + b**s) / 2.0**s
    if f is Family.NINF:
        return min(a, b) ** 2 / (u**2 + v**2)
    if f is Family.NINF_GEN:
        return min(a, b) ** s / (2.0 ** (s - 2.0) * (u**s + v**s))
    if f is Family.ZBAGANU:
        return a * b / (u**2 + v**2)
    if f is Family.ZBAGANU_GEN:
        return a ** (s / 2.0) * b ** (s / 2.0) / (2.0 ** (s - 2.0) * (u**s + v**s))
    if f is Family.JAMES:
        return min(a, b)
    raise DomainError(f"unhandled family {f!r}")


def quotient(
    kind: ConstantKind,
    x: SparseSequence,
    y: SparseSequence,
    sp: SpaceParams,
    auto_normalize: bool = False,
) -> QuotientReport:
    """Evaluate the kind's quotient at the pair (x, y) with freshly computed norms.

    Unit-sphere kinds require ||x|| = ||y|| = 1 within 1e-9; pass
    ``auto_normalize=True`` to divide each element by its norm first.
    Rescaling is opt-in so that accidental non-unit inputs fail loudly.
    """
    if x.dim != y.dim:
        raise DomainError(f"dimension mismatch: {x.dim} vs {y.dim}")
    if x.is_zero or y.is_zero:
        raise DomainError("quotients are defined for nonzero x and y only")
    nx = norm(x, sp).norm
    ny = norm(y, sp).norm
    if kind.unit_sphere_only:
        if auto_normalize:
            x = x.scale(1.0 / nx)
            y = y.scale(1.0 / ny)
            nx = norm(x, sp).norm
            ny = norm(y, sp).norm
        if abs(nx - 1.0) > UNIT_NORM_TOL or abs(ny - 1.0) > UNIT_NORM_TOL:
            raise DomainError(
                f"{kind.label} needs unit vectors: got ||x||={nx!r}, ||y||={ny!r} "
                "(pass auto_normalize=True to rescale)"
            )
    nplus = norm(combine(x, y, 1), sp).norm
    nminus = norm(combine(x, y, -1), sp).norm
    norms = PairNorms(nx, ny, nplus, nminus)
    return QuotientReport(kind, quotient_from_norms(kind, norms), norms)


def analytic_bounds(kind: ConstantKind) -> tuple[float, float]:
    """Space-independent interval the supremum-level constant lies in.

    All eight are bounded above by 2.  Lower bounds: the nj and zbaganu
    forms never fall below 1 (take x = y on the unit sphere); the
    s-parameterized ninf and zbaganu forms are at least 2^{2-s} via the
    chain min(a,b)^s <= (ab)^{s/2} <= (a^s+b^s)/2; the james constant is at
    least sqrt(2) in any space of dimension two or more.
    """
    s = kind.s
    if kind.family in (Family.NINF_GEN, Family.ZBAGANU_GEN):
        return (2.0 ** (2.0 - s), 2.0)
    if kind.family is Family.JAMES:
        return (math.sqrt(2.0), 2.0)
    return (1.0, 2.0)


class Verdict(enum.Enum):
    UNIFORMLY_NONSQUARE = "uniformly-nonsquare"
    NOT_UNIFORMLY_NONSQUARE = "not-uniformly-nonsquare"
    INCONCLUSIVE = "inconclusive"


def nonsquareness_verdict(
    estimate: float,
    tol: float,
    source: str = "lower-bound",
) -> Verdict:
    """Classify a space from an estimate of one of these constants.

    A space is uniformly nonsquare exactly when the constants stay below 2.
    Since 2 is also the analytic ceiling, a certified lower bound >= 2 - tol
    pins the constant at 2 and rules uniform nonsquareness out.  A lower
    bound below that threshold decides nothing; only an exact or analytic
    value below 2 - tol certifies uniform nonsquareness, so ``source`` must
    say which kind of estimate is being supplied.
    """
    if source not in ("lower-bound", "exact"):
        raise DomainError(f"source must be 'lower-bound' or 'exact', got {source!r}")
    if estimate >= 2.0 - tol:
        return Verdict.NOT_UNIFORMLY_NONSQUARE
    if source == "exact":
        return Verdict.UNIFORMLY_NONSQUARE
    return Verdict.INCONCLUSIVE
