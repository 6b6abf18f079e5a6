//! Wave packets: the concrete Hardy-space test functions
//!
//!   f(z) = ½ ∫_ℝ ĥ(ℓ) φ_{iℓ}(z) |c(iℓ)|^{−2} dℓ
//!        = ∫₀^∞ ĥ(ℓ) φ_{iℓ}(z) |c(iℓ)|^{−2} dℓ,
//!
//! with ĥ an even gaussian×polynomial profile. Evaluation works on the
//! crown D and, through the analytic continuation of φ, on the boundary
//! real form Y.

use crate::error::Result;
use crate::geometry::{QuadricPoint, RankOneModel};
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::spectra::{plancherel_density, spherical_fn_tol, SpectralProfile};
use crate::C64;

/// Value, error estimate, and the computational route that produced it.
#[derive(Debug, Clone)]
pub struct TransformResult {
    pub value: C64,
    pub error_estimate: f64,
    pub route: &'static str,
}

/// A K-invariant Hardy-space test function given by its spectral profile.
#[derive(Debug, Clone)]
pub struct WavePacket {
    pub profile: SpectralProfile,
    pub model: RankOneModel,
    /// Tolerances/budget template for every quadrature this packet drives.
    pub quad: QuadratureSpec,
}

impl WavePacket {
    pub fn new(model: RankOneModel, profile: SpectralProfile) -> Self {
        let quad = QuadratureSpec::new(Domain::Finite { a: 0.0, b: 1.0 })
            .with_tols(1e-9, 1e-11)
            .with_budget(900);
        Self {
            profile,
            model,
            quad,
        }
    }

    pub fn with_quad_tols(mut self, rel: f64, abs: f64) -> Self {
        self.quad.rel_tol = rel;
        self.quad.abs_tol = abs;
        self
    }

    /// Spectral support radius at the packet's absolute tolerance.
    pub fn spectral_radius(&self) -> f64 {
        self.profile.support_radius(1e-16)
    }

    /// Relative tolerance passed to the spherical-function evaluator.
    pub fn phi_tol(&self) -> f64 {
        (self.quad.rel_tol * 1e-2).max(1e-13)
    }

    fn spec_on(&self, a: f64, b: f64) -> QuadratureSpec {
        QuadratureSpec {
            domain: Domain::Finite { a, b },
            ..self.quad
        }
    }

    /// ∫₀^∞ ĥ(ℓ) w(ℓ) dℓ for a caller-supplied spectral weight (the basic
    /// building block of all one-route spectral formulas).
    pub fn spectral_integral<W>(&self, weight: W) -> Result<(C64, f64)>
    where
        W: Fn(f64) -> C64,
    {
        let spec = self.spec_on(0.0, self.spectral_radius());
        let res = integrate(|l| weight(l) * self.profile.eval(l), &spec)?;
        Ok((res.value, res.error))
    }

    /// Same over the full line (for weights that are not even in ℓ).
    pub fn spectral_integral_full<W>(&self, weight: W) -> Result<(C64, f64)>
    where
        W: Fn(f64) -> C64,
    {
        let radius = self.spectral_radius();
        let spec = self.spec_on(-radius, radius);
        let res = integrate(|l| weight(l) * self.profile.eval(l), &spec)?;
        Ok((res.value, res.error))
    }

    /// Evaluate the packet at the K_ℂ-invariant u = z·x_o.
    pub fn eval_u(&self, u: C64) -> Result<TransformResult> {
        let phi_tol = self.phi_tol();
        let model = self.model;
        let (value, err) = self.spectral_integral(|l| {
            match spherical_fn_tol(&model, l, u, phi_tol) {
                Ok(phi) => phi * plancherel_density(l),
                Err(_) => C64::new(f64::NAN, 0.0),
            }
        })?;
        Ok(TransformResult {
            value,
            error_estimate: err,
            route: "spectral superposition",
        })
    }

    /// Truncation radius for N-quadratures against this packet: along a
    /// horosphere the packet decays like exp(−σ²(ln v²)²/8)/v, so the
    /// radius solves σ²(ln V)²/2 + ln V = ln(1/eps).
    pub fn n_tail_radius(&self, eps: f64) -> f64 {
        let s2 = (self.profile.sigma * self.profile.sigma / 2.0).max(1e-3);
        let target = (1.0 / eps).ln();
        let ln_v = ((1.0 + 4.0 * s2 * target).sqrt() - 1.0) / (2.0 * s2);
        ln_v.exp().max(30.0)
    }
}

/// Evaluate a packet at a quadric point (z ∈ D ∪ Y).
pub fn eval_packet(f: &WavePacket, z: &QuadricPoint) -> Result<TransformResult> {
    f.eval_u(z.invariant())
}
