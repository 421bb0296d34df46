"""Exact symmetric-function arithmetic over Q(q).

Hall-Littlewood P and Q functions, the twisted big Schur basis, graded
Kostka multiplicities by two independent routes, and a brute-force graded
quotient oracle, all in exact rational arithmetic.
"""

from .gporacle import (
    GradedQuotient,
    OracleComparison,
    graded_character,
    graded_dimension,
    graded_quotient,
    oracle_report,
    oracle_vs_symbolic,
    tanisaki_generators,
)
from .hl import (
    KostkaTable,
    big_schur,
    char_gp,
    char_kostka,
    expand_in_big_schur,
    expand_in_hl_p,
    expand_in_hl_q,
    hl_p,
    hl_q,
    hl_to_native,
    kostka_orthogonality,
    kostka_triangular,
    pieri_e1,
    psi,
    psi_inverse,
    skew_q,
    to_hl_basis,
)
from .partition import Partition, dominance_leq, parse_partition, partitions
from .qcoeff import (
    PoleAtZeroError,
    QDivisionError,
    QPoly,
    QRat,
    bar,
    is_nonneg_poly,
    q_factorial,
    q_int,
    series_prefix,
)
from .sncharacter import (
    CharTable,
    ClassFunction,
    GradedCharacter,
    char_table,
    chi,
    decompose,
    frobenius0,
    induce_product,
    inner,
    irreducible,
    molien_mult,
    restrict_class_function,
    restrict_graded,
)
from .symfunc import (
    SymFunc,
    TensorSymFunc,
    antipode,
    convert,
    coproduct,
    hall_inner,
    inner_graded,
    plethysm_one_minus_q,
    product,
    tensor_product,
    to_p,
    unit,
)
from .verify import SUITE_NAMES, SuiteReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "Partition",
    "QPoly",
    "QRat",
    "SymFunc",
    "TensorSymFunc",
    "CharTable",
    "ClassFunction",
    "GradedCharacter",
    "GradedQuotient",
    "KostkaTable",
    "OracleComparison",
    "SuiteReport",
    "SUITE_NAMES",
    "PoleAtZeroError",
    "QDivisionError",
    "antipode",
    "bar",
    "big_schur",
    "char_gp",
    "char_kostka",
    "char_table",
    "chi",
    "convert",
    "coproduct",
    "decompose",
    "dominance_leq",
    "expand_in_big_schur",
    "expand_in_hl_p",
    "expand_in_hl_q",
    "frobenius0",
    "graded_character",
    "graded_dimension",
    "graded_quotient",
    "hall_inner",
    "hl_p",
    "hl_q",
    "hl_to_native",
    "induce_product",
    "inner",
    "inner_graded",
    "irreducible",
    "is_nonneg_poly",
    "kostka_orthogonality",
    "kostka_triangular",
    "molien_mult",
    "oracle_report",
    "oracle_vs_symbolic",
    "parse_partition",
    "partitions",
    "pieri_e1",
    "plethysm_one_minus_q",
    "product",
    "psi",
    "psi_inverse",
    "q_factorial",
    "q_int",
    "restrict_class_function",
    "restrict_graded",
    "run_all",
    "run_suite",
    "series_prefix",
    "skew_q",
    "tanisaki_generators",
    "tensor_product",
    "to_hl_basis",
    "to_p",
    "unit",
]
