"""Lyndon and non-overlapping LZ factorizations, with the full domain
machinery that relates their sizes and an empirical verifier for every
structural guarantee."""

from .bounds import (
    ExtdomPartition,
    FamilyCounts,
    SearchRecord,
    SearchSummary,
    TheoremReport,
    check_theorem,
    default_jobs,
    exhaustive_search,
    expected_counts,
    expected_lz_phrases,
    extdom_partition,
    generate_family,
    iter_search,
)
from .domains import (
    BoundaryBudget,
    CanonicalDecomposition,
    Cluster,
    Domain,
    LemmaCheck,
    LemmaReport,
    PGroup,
    TandemDomain,
    all_domains,
    boundary_budget,
    canonical_decomposition,
    compute_domain,
    extended_domain,
    find_p_groups,
    find_tandem_domains,
    verify_lemmas,
)
from .errors import IntegrityError
from .lyndon import LyndonFactorization, lyndon_factorize, oracle_lyndon_dp
from .lz import LZFactorization, contains_boundary, lz_factorize, oracle_lz_naive
from .text import EQUAL, GREATER, LESS, Span, is_lyndon, leftmost_occurrence, lex_compare

__version__ = "0.1.0"

__all__ = [
    "BoundaryBudget",
    "CanonicalDecomposition",
    "Cluster",
    "Domain",
    "EQUAL",
    "ExtdomPartition",
    "FamilyCounts",
    "GREATER",
    "IntegrityError",
    "LESS",
    "LemmaCheck",
    "LemmaReport",
    "LyndonFactorization",
    "LZFactorization",
    "PGroup",
    "SearchRecord",
    "SearchSummary",
    "Span",
    "TandemDomain",
    "TheoremReport",
    "all_domains",
    "boundary_budget",
    "canonical_decomposition",
    "check_theorem",
    "compute_domain",
    "contains_boundary",
    "default_jobs",
    "exhaustive_search",
    "expected_counts",
    "expected_lz_phrases",
    "extdom_partition",
    "extended_domain",
    "find_p_groups",
    "find_tandem_domains",
    "generate_family",
    "is_lyndon",
    "iter_search",
    "leftmost_occurrence",
    "lex_compare",
    "lyndon_factorize",
    "lz_factorize",
    "oracle_lyndon_dp",
    "oracle_lz_naive",
    "verify_lemmas",
]
