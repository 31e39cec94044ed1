"""Discrete Morrey norms on Z^d and the geometric constants they maximize."""

from .constants import (
    FAMILY_ORDER,
    PARAMETRIC,
    UNIT_SPHERE,
    ConstantKind,
    Family,
    PairNorms,
    QuotientReport,
    Verdict,
    analytic_bounds,
    kind_from_name,
    nonsquareness_verdict,
    quotient,
    quotient_from_norms,
)
from .errors import (
    DomainError,
    FormatError,
    MorreyError,
    ResourceError,
    SizeError,
    VerificationError,
)
from .lattice import (
    BoundingBox,
    Point,
    SparseSequence,
    Window,
    combine,
    support_box,
    window_cardinality,
    window_contains,
)
from .norms import (
    NormResult,
    SpaceParams,
    WindowValue,
    n_max,
    norm,
    norm_naive,
    norm_prefix,
    padded_cells,
    window_value,
)
from .search import (
    LowerBoundCertificate,
    SearchConfig,
    box_points,
    maximize_quotient,
    seeded_restarts,
)
from .seqio import format_sequence, load_sequence, parse_sequence, save_sequence
from .witness import (
    TheoremReport,
    TheoremRow,
    WitnessPair,
    WitnessParams,
    build_witness,
    minimal_even_n,
    theorem_kinds,
    threshold_margin,
    verify_theorem,
    witness_threshold,
)

__version__ = "0.1.0"
