from .context import (
    TauContext,
    generic_constant_matrix,
    shift_exp,
    shift_matrix,
    tau,
    tau_schur_expand,
)
from .linear import (
    check_initial_value_relation,
    check_linear_flow,
    check_wave_inverses,
    check_zakharov_shabat,
    flow_generators,
    full_wave_matrix,
    full_wave_inverse,
    hat_wave_matrix,
    hat_wave_inverse,
    lax_matrices,
    verify_linear_problem,
)
from .restrict import (
    power_sum_append_zeros_check,
    restrict_tau,
    restricted_context,
    schur_pair_sum,
)
from .waves import (
    SHIFT_KINDS,
    WAVE_KINDS,
    bilinear_check,
    h20_expected_coefficients,
    prop1_sides,
    shifted_tau,
    verify_prop1,
    wave_entry,
    wave_numerator,
)

__all__ = [
    "TauContext",
    "SHIFT_KINDS",
    "WAVE_KINDS",
    "bilinear_check",
    "check_initial_value_relation",
    "check_linear_flow",
    "check_wave_inverses",
    "check_zakharov_shabat",
    "flow_generators",
    "full_wave_matrix",
    "full_wave_inverse",
    "generic_constant_matrix",
    "h20_expected_coefficients",
    "hat_wave_matrix",
    "hat_wave_inverse",
    "lax_matrices",
    "power_sum_append_zeros_check",
    "prop1_sides",
    "restrict_tau",
    "restricted_context",
    "schur_pair_sum",
    "shift_exp",
    "shift_matrix",
    "shifted_tau",
    "tau",
    "tau_schur_expand",
    "verify_linear_problem",
    "verify_prop1",
    "wave_entry",
    "wave_numerator",
]
