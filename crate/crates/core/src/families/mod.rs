//! Parametrized families carrying a torsion point: the raw form of
//! `X_1(11)`, curves over `F_p(t)` with a point of order `p`, p-adic
//! realizations of the valuation cases, and number field fixtures.

mod ff;
mod krumm;
mod padic_cases;
mod raw11;
mod symbolic;

pub use ff::{
    build_ff_family, family_discriminant_formula, function_field, is_pminus1_power, is_pth_power,
    parameter_ring, parameter_t, power_conditions, random_parameter, FamilyCurve, FunctionField,
    PowerConditions, FAMILY_PRIMES,
};
pub use krumm::{krumm_fixture, FixtureCurve, NumberField, FIXTURE_LABELS};
pub use padic_cases::{
    realize_padic_case, working_precision, InfeasibilityCertificate, PadicPoint, Realization,
    ValuationCase,
};
pub use raw11::{
    build_e_rs, e_rs_model, e_rs_parameters, f11_eval, f_rs, f_rs_eval, search_raw11_points,
    tate_normal_form, RawForm11Point,
};
pub use symbolic::{
    check_delta_identity_11, check_rescaling, delta_rs_closed_form, DeltaIdentityReport, Fraction,
    LocalizedBivar, Rescaling, RescalingReport,
};
