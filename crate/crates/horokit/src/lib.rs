//! Numerical harmonic analysis on rank-one non-compactly causal symmetric
//! spaces, realized concretely on the quadric models
//! X_ℂ = {z ∈ ℂ^{n+1} : z₀² − z₁² − … − z_n² = 1} for G = SO_e(1,n).
//!
//! The crate implements the holomorphic horospherical Radon transform, the
//! Cauchy transform on the imaginary hyperboloid Y, the Abel transform, the
//! dual (H-orbit) transform and the spectral inversion multiplier, together
//! with the Hardy-space machinery (spectral and geometric norms, Gutzmer
//! orbital integrals, reproducing kernels, the Λ-isometry onto a strip Hardy
//! space) and the strip-domain Hardy spaces over Weyl-orbit polytopes.
//!
//! Every closed-form identity carried by these transforms is wired to an
//! independent quadrature or Γ-function oracle in [`verify`], which the
//! `horokit` CLI drives as named suites.
//!
//! Conventions, fixed once and used everywhere:
//! * `a_z = exp(zZ)` with `α(Z) = 1`, `ρ(Z) = (n−1)/2`; spectral parameters
//!   are real `ℓ` with `λ = iℓρ` (so the n = 2 model has `ρ(Z) = 1/2`).
//! * Measures: `dn` = Lebesgue on ℝ^{n−1}, `da = ds` in the A-log
//!   coordinate, `dh = dτ` in the H-boost coordinate, `dℓ` = Lebesgue.
//! * Wave packets are spectral superpositions
//!   `f(z) = ½ ∫_ℝ ĥ(ℓ) φ_{iℓ}(z) |c(iℓ)|^{−2} dℓ`.
//!
//! Identities that hold only up to a measure normalization are verified as
//! ratio-constancy checks against the pinned constants in
//! [`verify::goldens`].

pub mod error;
pub mod geometry;
pub mod goldens;
pub mod hardy;
pub mod numerics;
pub mod spectra;
pub mod transforms;
pub mod tube;
pub mod verify;

pub use error::{Error, Result};

/// Complex scalar used throughout (the spec's `ComplexValue`).
pub type C64 = num_complex::Complex64;
