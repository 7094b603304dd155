"""Non-overlapping sets of binary pictures: construction, verification, counting.

The package builds the picture families X, Y, Z and M from four frame word
languages, verifies non-overlapping, maximality and frame properties by
exhaustive scan or by a layered argument, and audits cardinality bounds with
exact arithmetic. Hot scans run on a compiled kernel when available; set
PICODES_KERNEL=py or =native to force a backend.
"""

from ._kernels import BACKEND
from .counting import (
    BoundAudit,
    CountReport,
    audit_bounds,
    closed_counts,
    lower_bound_formula,
    upper_bound,
)
from .errors import (
    DisjointnessViolated,
    Error,
    FrameIncompatible,
    MixedLengths,
    MixedSizes,
    NotInX,
    NotNonOverlapping,
    OutOfDomain,
    RepairFailed,
    SizeTooSmall,
    WitnessMismatch,
    WorkLimitExceeded,
    WrongAlphabet,
    WrongSize,
)
from .families import (
    FAMILIES,
    ConditionViolation,
    FamilySpec,
    check_cond1,
    check_cond1bis,
    check_cond2,
    check_cond2a,
    check_frame,
    count_family,
    enumerate_family,
    family_violations,
    gen_I,
    gen_L,
    in_M,
    in_X,
    in_Y,
    in_Z,
    m_violations,
    parse_family_spec,
    repair_to_Y,
    x_violation,
    y_violations,
    z_violations,
)
from .overlaps import (
    OverlapWitness,
    classify,
    find_overlaps,
    is_unbordered,
    properly_overlap,
)
from .pictures import (
    Picture,
    canonical_order,
    col_mirror,
    column_words,
    corner_prefix,
    corners_of,
    format_picture,
    format_picture_set,
    frame_of,
    from_board,
    parse_picture,
    parse_picture_set,
    picture,
    rotate90,
    row_mirror,
    row_words,
    sort_key,
    subpicture,
    to_board,
)
from .verify import (
    VerificationReport,
    check_corner_lemma,
    check_frame_necessity,
    verify_frame_complete,
    verify_membership,
    verify_neno_layered,
    verify_neno_naive,
    verify_non_overlapping,
    verify_unbordered,
)
from .words import (
    BINARY,
    Alphabet,
    OverlapIndex,
    SuffixMode,
    WordPairReport,
    border_lengths,
    format_word_set,
    gen_S1,
    gen_S2,
    gen_S3,
    gen_S4,
    has_suffix_in_110_plus,
    has_suffix_in_110_star,
    in_110_plus,
    in_110_star,
    is_bifix_free,
    is_cross_bifix_free,
    is_cross_non_overlapping,
    is_full_pair,
    overlap_lengths,
    parse_word_set,
)

__version__ = "0.1.0"
