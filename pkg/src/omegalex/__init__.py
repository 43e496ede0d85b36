"""Intersection-weight functional over k-uniform set families.

Exact tooling for the weight omega(F) = sum |A ∩ B| over member pairs:
lexicographic segments and ranking, cascade decompositions of C(n,k) - m,
named extremal constructions with Bey's degree-square bound, and an
exhaustive oracle with exchange-move local search for desk-scale
verification of extremality claims.
"""
from .cascade import (
    CascadeForm,
    cascade_decompose,
    cascade_end,
    case1_reduction,
    case2_reduction,
    last_lex_set,
)
from .combinat import (
    Family,
    FamilyParseError,
    KSet,
    binomial,
    complement_family,
    complete_family,
    format_family,
    lex_rank,
    lex_segment,
    lex_unrank,
    load_family,
    parse_family,
    save_family,
)
from .constructions import (
    AkBest,
    BoundReport,
    ak_best,
    bey_bound,
    bey_equality_catalog,
    bound_report,
    full_star_family,
    quasi_complete,
    quasi_star,
)
from .corpus import DEFAULT_CORPUS_SEED, random_corpus, random_family
from .omega import (
    DegreeVector,
    complement_omega,
    cross_omega,
    degree_vector,
    disjoint_pairs,
    family_of,
    full_stars,
    is_cover,
    min_element_classes,
    minimum_cover,
    omega,
    omega_via_degrees,
)
from .verify import (
    BudgetExceededError,
    SearchTrace,
    SwapStep,
    VerifyRecord,
    brute_force_max,
    case1_check,
    case2_check,
    local_search,
    records_to_csv,
    swap_delta,
    verify_table,
)

__version__ = "0.1.0"

__all__ = [
    "AkBest",
    "BoundReport",
    "BudgetExceededError",
    "CascadeForm",
    "DEFAULT_CORPUS_SEED",
    "DegreeVector",
    "Family",
    "FamilyParseError",
    "KSet",
    "SearchTrace",
    "SwapStep",
    "VerifyRecord",
    "ak_best",
    "bey_bound",
    "bey_equality_catalog",
    "binomial",
    "bound_report",
    "brute_force_max",
    "cascade_decompose",
    "cascade_end",
    "case1_check",
    "case1_reduction",
    "case2_check",
    "case2_reduction",
    "complement_family",
    "complement_omega",
    "complete_family",
    "cross_omega",
    "degree_vector",
    "disjoint_pairs",
    "family_of",
    "format_family",
    "full_star_family",
    "full_stars",
    "is_cover",
    "last_lex_set",
    "lex_rank",
    "lex_segment",
    "lex_unrank",
    "load_family",
    "local_search",
    "min_element_classes",
    "minimum_cover",
    "omega",
    "omega_via_degrees",
    "parse_family",
    "quasi_complete",
    "quasi_star",
    "random_corpus",
    "random_family",
    "records_to_csv",
    "save_family",
    "swap_delta",
    "verify_table",
]
