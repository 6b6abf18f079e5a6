//! Spectral-side scalar functions: the Harish-Chandra c-function and
//! Plancherel density, spherical functions and their analytic
//! continuation, the COSH weight and Hardy measure μ, the dual-transform
//! constants C₁/C₂ with the inversion multiplier g, and the spectral 𝒟
//! operator.
//!
//! Spectral parameters are real scalars ℓ in ρ-coordinates: λ = iℓρ.

mod cfun;
mod constants;
mod dop;
mod profile;
mod spherical;

pub use cfun::{harish_chandra_c, plancherel_density, plancherel_gamma_route};
pub use constants::{c1_coth_form, c1_constant, c2_constant, kappa_ratio, multiplier_g};
pub use dop::d_operator;
pub use profile::{SpectralParam, SpectralProfile};
pub use spherical::{
    cosh_weight, mu_weight, spherical_at_y_o, spherical_fn, spherical_fn_tol,
    spherical_k_integral_route,
};
