//! The objects of the construction: Koszul factors `U^i`, the minimal
//! resolution of `k`, parameter functionals `ζ_i`, pushout modules `L_ζ`, the
//! truncated complexes `C^i`, the maps `ϑ_i`, `θ_i`, `θ`, and the end-to-end
//! verification pipeline.
//!
//! Generator and factor indices are 0-based; `U^i` in the API is `U^{i+1}` in
//! the usual 1-based notation.

mod koszul;
mod pipeline;
mod pushout;
mod resolution;
mod theta;
mod zeta;

pub use koszul::{koszul_complex, koszul_complex_free_form, subsets, u_factor, u_vartheta, FreeKoszul};
pub use pipeline::{
    verify, verify_with, Check, CheckLevel, CheckStatus, Checks, Construction, CounterexampleConfig, DegreeDim,
    PerDegree, Report, Totals, Verdict, VerifyOptions, REPORT_FORMAT,
};
pub use pushout::{
    build_Ci, build_L, quasi_iso_to_u, solve_quasi_iso, Factor, PushoutModule, QuasiIso, QuasiIsoCheck,
};
pub use resolution::{minimal_resolution, MinimalResolution};
pub use theta::{
    anticommutation_failures, build_theta, build_theta_i, build_thetas, homology_anticommutation_failures,
    homology_theta, kunneth_thetas, regular_rep_chain,
};
pub use zeta::{hsop_check, make_zeta, zeta_family, HsopStatus, ParameterFunctional, ZetaSpec};
