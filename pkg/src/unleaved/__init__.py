"""Count and explore numerical semigroups of a target genus.

The oracle module is the slow, obviously-correct reference; encoding holds
the compact per-node state; walker runs the complete and trimmed tree walks;
schedule splits the trimmed walk into parallel work items.
"""

from .encoding import (
    NodeContext,
    NotARightGenerator,
    OutOfRange,
    PreconditionViolated,
    ShrinkEncoding,
    check_right_generator,
    check_strong_generator,
    encode_pseudo_ordinary,
    encode_quasi_ordinary,
    encoding_from_parent,
    encoding_from_predecessor_sibling,
    interval_conductor,
    interval_genus,
    member_window,
)
from .oracle import (
    CanonicalSemigroup,
    ClosureViolation,
    ResourceLimit,
    from_gaps,
    from_generators,
    minimal_generators,
    omega_and_shrink,
    oracle_children,
    oracle_count,
)
from .schedule import WorkItem, WorkKind, WorkerFailure, build_schedule, run_parallel
from .walker import (
    ExplorationStats,
    TrimVerdict,
    closed_form_high_multiplicity,
    closed_form_low_multiplicity,
    descend,
    descend_and_trim,
    explore_tree,
    explore_unleaved_tree,
    grandchildren_of_pseudo_ordinary,
    pseudo_descend,
    pseudo_descend_and_trim,
    trim_verdict,
)

__all__ = [
    "CanonicalSemigroup",
    "ClosureViolation",
    "ExplorationStats",
    "NodeContext",
    "NotARightGenerator",
    "OutOfRange",
    "PreconditionViolated",
    "ResourceLimit",
    "ShrinkEncoding",
    "TrimVerdict",
    "WorkItem",
    "WorkKind",
    "WorkerFailure",
    "build_schedule",
    "check_right_generator",
    "check_strong_generator",
    "closed_form_high_multiplicity",
    "closed_form_low_multiplicity",
    "descend",
    "descend_and_trim",
    "encode_pseudo_ordinary",
    "encode_quasi_ordinary",
    "encoding_from_parent",
    "encoding_from_predecessor_sibling",
    "explore_tree",
    "explore_unleaved_tree",
    "from_gaps",
    "from_generators",
    "grandchildren_of_pseudo_ordinary",
    "interval_conductor",
    "interval_genus",
    "member_window",
    "minimal_generators",
    "omega_and_shrink",
    "oracle_children",
    "oracle_count",
    "pseudo_descend",
    "pseudo_descend_and_trim",
    "run_parallel",
    "trim_verdict",
]

__version__ = "0.1.0"
