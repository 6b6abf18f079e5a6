//! Numerical workhorses: adaptive Gauss–Kronrod quadrature for
//! complex-valued integrands, the complex Γ/Beta functions (Lanczos plus
//! reflection) and the Gauss hypergeometric function ₂F₁.
//!
//! Everything here is pure and reentrant; quadrature parallelizes at the
//! caller's level (grid sweeps map over evaluation points).

mod gamma;
mod hyp2f1;
mod quad;

pub use gamma::{cbeta, cgamma};
pub use hyp2f1::gauss_2f1;
pub use quad::{fixed_panels, integrate, integrate2d, Domain, QuadResult, QuadratureSpec};
