//! Error types shared across the crate.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in the numerical layer and the model
/// geometry. Variants mirror the failure modes named by the operations
/// they originate from.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Adaptive quadrature exhausted its subdivision budget before the
    /// error estimate dropped below the requested tolerance.
    #[error("quadrature did not converge: estimate {estimate:.3e} after {subdivisions} subdivisions (target {target:.3e})")]
    NonConvergence {
        estimate: f64,
        target: f64,
        subdivisions: usize,
    },

    /// An integrand returned NaN or ±∞.
    #[error("integrand returned a non-finite value at {at}")]
    NonFinite { at: f64 },

    /// Γ evaluated at a nonpositive integer.
    #[error("gamma pole at nonpositive integer {0}")]
    PoleAtNonpositiveInteger(f64),

    /// ₂F₁ at x = 1 with Re(c−a−b) ≤ 0.
    #[error("2F1 divergent at x = 1: Re(c-a-b) = {0} <= 0")]
    DivergentAtOne(f64),

    /// ₂F₁ series (or its transformed variant) failed to converge, e.g. on
    /// the excluded parameter set c−a−b ∈ ℤ of the 1−x connection formula.
    #[error("2F1 series did not converge: {0}")]
    SeriesNonConvergence(String),

    /// Input tuple/matrix has the wrong dimensions.
    #[error("shape mismatch: expected {expected}, got {got}")]
    ShapeMismatch { expected: String, got: String },

    /// The rotation block passed to `k_R` is not in SO(n).
    #[error("matrix block is not special orthogonal (defect {0:.3e})")]
    NonOrthogonalBlock(f64),

    /// Iwasawa projection hit the branch cut z₀ − z_n ∈ (−∞, 0]
    /// (the complement of N_ℂ A_ℂ K_ℂ), or a spherical-function argument
    /// landed on the cut u ∈ (−∞, −1].
    #[error("branch cut hit: {0}")]
    BranchCutHit(String),

    /// Cauchy kernel denominator |1 − ξ·y| below the admissibility floor.
    #[error("near-singular Cauchy kernel: |1 - xi.y| = {0:.3e}")]
    NearSingularKernel(f64),

    /// Point not presented in the dense-set coordinates required by f_λ.
    #[error("point outside the dense coordinate set: {0}")]
    OutsideDenseSet(String),

    /// Suite/CLI configuration rejected.
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
}
