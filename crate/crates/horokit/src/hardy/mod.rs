//! The most-continuous Hardy space ℋ²(D) in its spectral model: the
//! spectral norm ∫|ĥ|²·COSH·|c|^{−2}, Gutzmer orbital integrals with a
//! direct G-quadrature oracle, the geometric norm through the spectral 𝒟
//! operator (a supremum over Weyl-orbit tube points), the K-invariant
//! reproducing kernel, and the Λ-isometry onto the strip Hardy space.
//!
//! The source states the geometric-norm theorem once for ‖f‖_H and once
//! for its square; both sides here are the *squared* norm.

mod kernel;
mod lambda;
mod norms;
mod orbital;

pub use kernel::{gram_matrix_eigenvalues, reproducing_kernel, reproducing_pairing};
pub use lambda::{
    lambda_diagram_paths, lambda_spectral, lambda_tau_covariance, lambda_tube_norm_sq,
    x_fourier_transform,
};
pub use norms::{hardy_norm_geometric, hardy_norm_spectral, l2x_norm_spectral, GeometricNorm};
pub use orbital::{orbital_integral_direct, orbital_integral_spectral};
