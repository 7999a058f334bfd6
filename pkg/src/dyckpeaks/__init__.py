"""Peak statistics, bijections and exhaustive censuses for lattice paths
from (0,0) to (n,n) classified by the number of up steps below the
diagonal."""

from .census import Census, build_census, census_for, enumerate_paths
from .formulas import (
    FormulaId,
    binomial,
    catalan,
    double_ascent_count,
    evaluate_formula,
    mixed_class_sum,
    narayana,
    peak_pair_sum,
    tau_count,
    uu_class_count,
)
from .maps import (
    BIJECTIONS,
    apply_cf_phi,
    apply_cf_phi_inverse,
    apply_f,
    apply_f_inverse,
    apply_g,
    apply_g_inverse,
    apply_tau,
    apply_tau_inverse,
    classify_f_case,
    classify_fprime_case,
    complement_phi,
    decompose_sdnuq,
    gamma,
    reverse_theta,
)
from .paths import (
    ShapeFlags,
    below_up_count,
    diagonal_crossings,
    diagonal_touches,
    parse_path,
    path_from_peaks,
    peak_coordinates,
    semilength,
    shape_flags,
    vertices,
)
from .stats import ClassFilter, StatRecord, matches, stat_record
from .verify import (
    BIJECTION_IDS,
    IdentityId,
    VerifyReport,
    verify_bijection,
    verify_identity,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
