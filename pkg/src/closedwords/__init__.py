"""Closed factors of finite words: closedness, CR-poor words, and maximal counts."""

from closedwords.words import (
    FactorSpan,
    WordError,
    border_table,
    conjugates,
    exponent,
    is_palindrome,
    longest_border,
    period,
    reversal,
    validate_word,
)
from closedwords.closed import (
    ClosednessWitness,
    closed_by_exponent,
    closed_extension_letter,
    closed_extension_preserves_period,
    is_closed,
    is_closed_via,
    is_complete_return,
    occurrences,
)
from closedwords.factors import (
    FactorKind,
    FactorSet,
    NewClosedSuffixRecord,
    closed_factors,
    closed_factors_naive,
    count_closed_factors,
    is_rich,
    new_closed_suffix,
    palindromic_factors,
)
from closedwords.classify import (
    AnalysisReport,
    analyze,
    check_unique_new_closed_suffix,
    cr_poor_violation,
    is_bitonic,
    is_cr_poor_by_count,
    is_cr_poor_by_pattern,
    sets_equal_closed_palindromic,
)
from closedwords.search import (
    MaxSearchRow,
    QuadraticWitness,
    enumerate_cr_poor,
    growth_profile,
    max_closed_table,
    quadratic_witness,
    verify_interior_factors_closed,
    verify_intersection_claim,
)

__version__ = "0.1.0"
