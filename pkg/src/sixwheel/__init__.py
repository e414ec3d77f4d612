"""Dual classification of integers (types a-i, classes alpha-zeta), the
product algebra on both, and a 6k+-1 wheel prime engine with array views."""

from .arrays import ArrayKind, ArrayView, render
from .primes import (
    MAX_SIEVE_LIMIT,
    SEGMENT_FLAGS,
    AlphaBetaRow,
    BenchReport,
    Factorization,
    alpha_beta_table,
    bench,
    factorize,
    is_prime,
    naive_sieve,
    prime_location_check,
    sieve,
    wheel_candidates,
    wheel_flag_count,
)
from .products import (
    TYPE_PRODUCT_TABLE,
    ProductRule,
    class_product,
    product_rule,
    submatrix,
    type_product,
    verify_class_closure,
    verify_type_closure,
)
from .residues import (
    CLASS_TYPE_SETS,
    I64_MAX,
    I64_MIN,
    ClassifiedInteger,
    SixClass,
    TypeLetter,
    class_of,
    compose,
    decompose,
    digital_root,
    type_of,
)
from .verification import Counterexample, VerificationReport

__version__ = "0.1.0"

__all__ = [
    "ArrayKind",
    "ArrayView",
    "render",
    "MAX_SIEVE_LIMIT",
    "SEGMENT_FLAGS",
    "AlphaBetaRow",
    "BenchReport",
    "Factorization",
    "alpha_beta_table",
    "bench",
    "factorize",
    "is_prime",
    "naive_sieve",
    "prime_location_check",
    "sieve",
    "wheel_candidates",
    "wheel_flag_count",
    "TYPE_PRODUCT_TABLE",
    "ProductRule",
    "class_product",
    "product_rule",
    "submatrix",
    "type_product",
    "verify_class_closure",
    "verify_type_closure",
    "CLASS_TYPE_SETS",
    "I64_MAX",
    "I64_MIN",
    "ClassifiedInteger",
    "SixClass",
    "TypeLetter",
    "class_of",
    "compose",
    "decompose",
    "digital_root",
    "type_of",
    "Counterexample",
    "VerificationReport",
    "__version__",
]
