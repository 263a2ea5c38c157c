"""solvkit: exact arithmetic for a family of two-generator soluble groups,
wreath products over the integer line, and the integer matrix machinery
(Smith normal form, minor gcds, banded relation matrices) they rest on,
plus a seeded self-verification harness."""

from .gcgroup import (
    GcElement,
    GcSignature,
    IntervalSubgroupReport,
    MembershipResult,
    PowerIndexResult,
    band_matrix,
    base_membership,
    companion_action,
    gc_abelianization,
    gc_eval,
    gc_identity,
    gc_inv,
    gc_is_identity,
    gc_is_proper,
    gc_mul,
    gc_pow,
    interval_subgroup,
    parse_signature,
    power_subgroup_index,
    relator_check,
)
from .linalg import (
    DimensionError,
    Matrix,
    SingularMatrixError,
    SNFResult,
    exact_scalar,
    mat_pow,
    matrix_from_json,
    matrix_to_json,
    minor_gcds,
    snf,
    solve_integer_system,
)
from .verify import LemmaReport, minkowski_bound, run_all
from .words import GeneratorWord, WordParseError, format_word, parse_word
from .wreath import (
    WreathElement,
    wr_base_relation,
    wr_eval,
    wr_inv,
    wr_is_identity,
    wr_mul,
    wr_pow,
)

__version__ = "0.1.0"
