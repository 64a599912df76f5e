"""Duplication-with-transposition distances from q-ary strings to their roots.

A duplication copies a substring and inserts the copy some distance to the
right; the distance of a string is the least number of duplications needed to
build it from a string without repeated symbols.  The package computes exact
distances with replayable certificates, the per-length distance maxima, the
beta-approximate variants, and the classical bound formulas that sandwich
them.
"""

from .bounds import (
    BoundEntry,
    BoundReport,
    CodeSearchResult,
    approx_upper_bound_f,
    bound_report,
    counting_lower_bound_f,
    elias_bassalygo,
    entropy_q,
    exact_M,
    exact_upper_bound_f,
    path_description_count,
    plotkin_c,
    plotkin_limit,
    rate,
    trivial_lower_bound_f,
)
from .certificates import (
    PathCertificate,
    certificate_dumps,
    certificate_from_obj,
    certificate_loads,
    certificate_to_obj,
    check_certificate,
    decode_path,
    encode_path,
    format_quadruples,
    parse_quadruples,
    replay_certificate,
    verify_certificate,
)
from .codec import ApproxDupStep, ball_rank, ball_size, ball_unrank
from .debruijn import (
    SubstringCount,
    count_distinct_substrings,
    debruijn,
    debruijn_bound,
    linearize,
    substring_lower_bound,
    verify_debruijn,
)
from .engine import (
    DistanceTable,
    TableEntry,
    distance,
    distance_bounds,
    distance_map,
    max_distance_table,
)
from .errors import (
    CertificateError,
    DomainError,
    DupdistError,
    InvalidDecompositionError,
    ResourceBudgetError,
    StepBoundsError,
)
from .golden import BINARY_MAX_DISTANCE
from .repeats import (
    RepeatHit,
    find_approx_repeat,
    find_exact_repeat,
    greedy_dedup_path,
    longest_exact_repeat,
    repeat_guarantee_threshold,
)
from .words import (
    Decomposition,
    DupStep,
    QString,
    approx_parents,
    canonicalize,
    deduplicate,
    duplicate,
    format_beta,
    hamming,
    is_root,
    parents,
    parse_beta,
    period_exponent,
    read_strings,
    relabel,
    remove_right_block,
    root_of,
    write_strings,
)

__version__ = "0.1.0"

__all__ = [
    "ApproxDupStep",
    "BINARY_MAX_DISTANCE",
    "BoundEntry",
    "BoundReport",
    "CertificateError",
    "CodeSearchResult",
    "Decomposition",
    "DistanceTable",
    "DomainError",
    "DupStep",
    "DupdistError",
    "InvalidDecompositionError",
    "PathCertificate",
    "QString",
    "RepeatHit",
    "ResourceBudgetError",
    "StepBoundsError",
    "SubstringCount",
    "TableEntry",
    "approx_parents",
    "approx_upper_bound_f",
    "ball_rank",
    "ball_size",
    "ball_unrank",
    "bound_report",
    "canonicalize",
    "certificate_dumps",
    "certificate_from_obj",
    "certificate_loads",
    "certificate_to_obj",
    "check_certificate",
    "count_distinct_substrings",
    "counting_lower_bound_f",
    "debruijn",
    "debruijn_bound",
    "decode_path",
    "deduplicate",
    "distance",
    "distance_bounds",
    "distance_map",
    "duplicate",
    "elias_bassalygo",
    "encode_path",
    "entropy_q",
    "exact_M",
    "exact_upper_bound_f",
    "find_approx_repeat",
    "find_exact_repeat",
    "format_beta",
    "format_quadruples",
    "greedy_dedup_path",
    "hamming",
    "is_root",
    "linearize",
    "longest_exact_repeat",
    "max_distance_table",
    "parents",
    "parse_beta",
    "parse_quadruples",
    "path_description_count",
    "period_exponent",
    "plotkin_c",
    "plotkin_limit",
    "rate",
    "read_strings",
    "relabel",
    "remove_right_block",
    "repeat_guarantee_threshold",
    "replay_certificate",
    "root_of",
    "substring_lower_bound",
    "trivial_lower_bound_f",
    "verify_certificate",
    "verify_debruijn",
    "write_strings",
]
