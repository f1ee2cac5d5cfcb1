"""hooklab: exact verification of hook length formulas and their
excited-diagram, flagged-tableau and determinantal companions."""

from .algebra import EvalPoint, MPoly, det, x, y, z
from .errors import HooklabError
from .excitations import (
    enumerate_excitations,
    excitation_of_tableau,
    excitation_weight,
    excited_move,
    tableau_of_excitation,
)
from .hooks import (
    ZPoint,
    algebraic_hook,
    hlf_count,
    lhs_main,
    naruse_count,
    rhs_main,
    verify_main,
    z_T_value,
)
from .partitions import (
    SkewContext,
    add_cell,
    conjugate,
    contains,
    cover_extensions,
    delta_contains,
    er_set,
    hook_cells,
    hook_length,
    parse_partition,
    parse_shape,
    skew_cells,
    skew_context,
)
from .schur import (
    Flagging,
    h_poly,
    jt_general_det,
    jt_general_sum,
    konvalinka_check,
    s_poly_via_det,
    s_poly_via_excitations,
    s_poly_via_fssyt,
)
from .tableaux import Tableau, content_word, enumerate_fssyt, enumerate_ssyt, enumerate_syt

__version__ = "0.1.0"
