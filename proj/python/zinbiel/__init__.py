"""Normal forms, Groebner-Shirshov bases and Zinbiel embeddings.

Polynomials and relation files use the same s-expression syntax as the
``zinbiel`` command-line tool; algebras use its JSON format.
"""

from ._core import (
    BoundExceeded,
    ParseError,
    ZinbielError,
    complete,
    corollary_count,
    embed,
    irreducible_counts,
    irreducible_words,
    reduce,
    run_cli,
    star,
    verify_gsb,
    verify_thm1,
    verify_thm2,
    zinbiel_product,
)

__all__ = [
    "BoundExceeded",
    "ParseError",
    "ZinbielError",
    "complete",
    "corollary_count",
    "embed",
    "irreducible_counts",
    "irreducible_words",
    "reduce",
    "run_cli",
    "star",
    "verify_gsb",
    "verify_thm1",
    "verify_thm2",
    "zinbiel_product",
]
