"""Palindromically rich words: analysis, rewriting, and search.

A word of length n is rich when it has n + 1 distinct palindromic factors,
the empty word included — the maximum possible. This package provides the
combinatorics behind that notion (palindrome indexing, standard extensions,
flexed palindromes), occurrence-reducing rewrites with full traces, an
elimination pipeline that shrinks a rich word while keeping chosen markers,
exact length bounds for common-superword construction, exhaustive
enumeration, and a budgeted search for a rich word containing two given
rich words.
"""

from .bounds import (
    DEFAULT_DIGIT_CAP,
    BoundReport,
    digit_count,
    ensure_printable,
    flex_count_bound,
    pal_complexity_bound,
    superword_length_bound,
)
from .eliminate import (
    EliminationStep,
    EliminationTrace,
    eliminate,
    maximal_reducible,
    reverse_unioccurrent,
    shortest_marked_factor,
)
from .errors import (
    AlphabetMismatch,
    DomainError,
    EmptyPattern,
    InternalInconsistency,
    LengthViolation,
    NotAFactor,
    NotAFlexedPalindrome,
    NotAPrefix,
    NotReducible,
    NotRich,
    PreconditionViolation,
    ResourceLimit,
)
from .extensions import is_std_ext, max_std_ext, rich_extensions, std_ext
from .palindromes import (
    PalIndex,
    complete_returns,
    is_rich,
    lpp,
    lppp,
    lpps,
    lps,
    pal_closure,
    pal_factors,
    pal_factors_avoiding,
    require_rich,
)
from .reduction import (
    FlexRecord,
    ParseTriple,
    ReduciblePair,
    ReductionCase,
    ReductionRejection,
    ReductionTrace,
    check_reducible,
    flexed_palindromes,
    parse,
    reduced_prefix,
    reduced_word,
    standard_replacement,
)
from .search import (
    EnumConfig,
    SearchBudget,
    SearchStatus,
    SearchVerdict,
    enumerate_rich,
    find_common_superword,
    pal_complexity_profile,
)
from .words import (
    Alphabet,
    Word,
    factors,
    infer_alphabet_size,
    is_factor,
    iter_factors,
    lcp,
    lcs,
    ltrim,
    occ,
    parse_word_file,
    format_word_file,
    reverse,
    rtrim,
    trim,
    word,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # words
    "Alphabet",
    "Word",
    "word",
    "infer_alphabet_size",
    "reverse",
    "trim",
    "ltrim",
    "rtrim",
    "lcp",
    "lcs",
    "occ",
    "iter_factors",
    "factors",
    "is_factor",
    "parse_word_file",
    "format_word_file",
    # palindromes
    "PalIndex",
    "lps",
    "lpp",
    "lpps",
    "lppp",
    "pal_factors",
    "pal_factors_avoiding",
    "is_rich",
    "require_rich",
    "pal_closure",
    "complete_returns",
    # extensions
    "std_ext",
    "is_std_ext",
    "max_std_ext",
    "rich_extensions",
    # reduction
    "FlexRecord",
    "ParseTriple",
    "ReduciblePair",
    "ReductionRejection",
    "ReductionCase",
    "ReductionTrace",
    "flexed_palindromes",
    "standard_replacement",
    "check_reducible",
    "parse",
    "reduced_prefix",
    "reduced_word",
    # elimination
    "EliminationStep",
    "EliminationTrace",
    "reverse_unioccurrent",
    "shortest_marked_factor",
    "maximal_reducible",
    "eliminate",
    # bounds
    "DEFAULT_DIGIT_CAP",
    "BoundReport",
    "pal_complexity_bound",
    "digit_count",
    "ensure_printable",
    "flex_count_bound",
    "superword_length_bound",
    # search
    "EnumConfig",
    "SearchBudget",
    "SearchStatus",
    "SearchVerdict",
    "enumerate_rich",
    "find_common_superword",
    "pal_complexity_profile",
    # errors
    "DomainError",
    "LengthViolation",
    "AlphabetMismatch",
    "EmptyPattern",
    "NotAFactor",
    "NotAPrefix",
    "NotRich",
    "NotAFlexedPalindrome",
    "NotReducible",
    "PreconditionViolation",
    "InternalInconsistency",
    "ResourceLimit",
]
