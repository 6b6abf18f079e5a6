//! The holomorphic Abel transform of K-invariant packets,
//! 𝒜f(z) = z^{−ρ} ∫_N f(n·exp(zZ)·x_o) dn on T(Ω_H), its spectral form
//! 𝒜f(exp(zZ)) = π ∫_ℝ ĥ(ℓ) e^{iℓρ(Z)z} dℓ, and the Fourier–Abel link
//! ℱ_A(𝒜f)(iℓ) = κ_fourier_abel · ĥ(ℓ).

use super::packet::{TransformResult, WavePacket};
use crate::error::{Error, Result};
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::C64;
use std::f64::consts::PI;

/// Direct N-quadrature route.
pub fn abel_direct(f: &WavePacket, z_log: C64) -> Result<TransformResult> {
    let model = &f.model;
    if model.n() != 2 {
        return Err(Error::ConfigInvalid(
            "the Abel N-quadrature is implemented on the n = 2 model".into(),
        ));
    }
    if z_log.im.abs() >= model.omega_h_bound() {
        return Err(Error::ConfigInvalid(format!(
            "|Im z| = {} outside Omega_H",
            z_log.im.abs()
        )));
    }
    // exp(zZ)·x_o = (cosh z, 0, sinh z); u(n_v·that) = cosh z + (v²/2)e^{−z}
    let (ch, sh) = (z_log.cosh(), z_log.sinh());
    let em = ch - sh;
    let radius = f.n_tail_radius(f.quad.abs_tol * 1e-1);
    let spec = QuadratureSpec {
        domain: Domain::Finite {
            a: -radius,
            b: radius,
        },
        ..f.quad
    };
    let res = integrate(
        |v| {
            let u = ch + 0.5 * v * v * em;
            match f.eval_u(u) {
                Ok(r) => r.value,
                Err(_) => C64::new(f64::NAN, 0.0),
            }
        },
        &spec,
    )?;
    let weight = (-z_log * f.model.rho()).exp();
    Ok(TransformResult {
        value: weight * res.value,
        error_estimate: res.error,
        route: "N-quadrature",
    })
}

/// Spectral route π∫ĥ(ℓ)e^{iℓρz}dℓ = 2π∫₀^∞ ĥ(ℓ)cos(ℓρz)dℓ.
pub fn abel_spectral(f: &WavePacket, z_log: C64) -> Result<TransformResult> {
    let rho = f.model.rho();
    let (value, err) = f.spectral_integral(|l| 2.0 * (z_log * (l * rho)).cos())?;
    Ok(TransformResult {
        value: PI * value,
        error_estimate: PI * err,
        route: "spectral density",
    })
}

/// A-line Fourier coefficient of the Abel transform,
/// ℱ_A(𝒜f)(iℓ₀ρ) = ∫_ℝ 𝒜f(exp(sZ)) e^{−iℓ₀ρ s} ds, by quadrature of the
/// chosen Abel route. Recovers κ_fourier_abel·ĥ(ℓ₀).
pub fn fourier_abel<A>(f: &WavePacket, ell0: f64, abel_route: A) -> Result<TransformResult>
where
    A: Fn(&WavePacket, C64) -> Result<TransformResult>,
{
    let rho = f.model.rho();
    // 𝒜f decays like a gaussian of width ~ 2/(ρσ) in s
    let sig = f.profile.sigma.max(0.25);
    let s_max = (2.0 / (rho * sig)) * (1.0 / f.quad.abs_tol).ln().sqrt() + 10.0;
    let spec = QuadratureSpec {
        domain: Domain::Finite {
            a: -s_max,
            b: s_max,
        },
        ..f.quad
    };
    let res = integrate(
        |s| match abel_route(f, C64::new(s, 0.0)) {
            Ok(r) => r.value * (C64::new(0.0, -ell0 * rho * s)).exp(),
            Err(_) => C64::new(f64::NAN, 0.0),
        },
        &spec,
    )?;
    Ok(TransformResult {
        value: res.value,
        error_estimate: res.error,
        route: "A-line Fourier of Abel",
    })
}
