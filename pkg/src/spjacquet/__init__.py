"""Exact Jacquet-module calculus for induced representations of symplectic groups.

Representations are formal: supercuspidals are labels, ``Z(D)`` products are
canonical multisets of segments and Jacquet modules are semisimplified
formal sums with nonnegative integer coefficients.
"""

from .analysis import (
    DistinctnessResult,
    MultiplicityReport,
    NotInMIrr,
    SweepResult,
    Violation,
    check_distinctness,
    check_lemma_heredity,
    check_theorem_main,
    enumerate_mirr,
    is_self_dual,
    multiplicity_reports,
    multiplicity_table,
)
from .core import (
    UNIT,
    CuspidalLabel,
    FormalSum,
    GLClass,
    Segment,
    SpClass,
    SpCuspidalLabel,
    add,
    canonicalize,
    dual_label,
    gl_label,
    gl_rank,
    sp_label,
    sp_rank,
)
from .hopf import (
    M_star,
    comult_gl,
    comult_segment,
    dual_tensor_comult,
    enumerate_cuts,
    graded_piece,
    jacquet_gl_direct,
    jacquet_sp,
    mu_star,
    mult_first_two,
    swap,
    tensor_multiply,
)
from .parsing import (
    DeclarationError,
    ParseError,
    SessionDeclarations,
    parse_declarations,
    parse_expression,
)
from .render import from_json, render, to_json
from .segments import (
    contains,
    dual_glclass,
    dual_segment,
    in_class_MIrr,
    is_irreducible_gl,
    is_linked,
    precedes,
    same_line,
)

__version__ = "0.1.0"
