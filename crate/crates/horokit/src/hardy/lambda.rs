//! The Λ-map onto the strip Hardy space: Λ = D_A ∘ 𝒜 with D_A the
//! c-function multiplier, so spectrally
//!
//!   ℱ_A(Λf)(iℓρ) = ĥ_f-side / 𝐜(−iℓ) = κ_fourier_abel·ĥ(ℓ)/𝐜(−iℓ).
//!
//! Unitarity onto ℋ²(T(Ω_H))^{τ(𝒲)} is tested as constancy of the norm
//! ratio across packets (golden κ_lambda), the τ(𝒲)-covariance through
//! the multiplier m(s, λ) = 𝐜(−sλ)/𝐜(−λ), and the commutative diagram
//! ℱ_A∘Λ = D_𝔞∘ℱ_X by two independent quadrature paths.

use crate::error::Result;
use crate::goldens::KAPPA_FOURIER_ABEL;
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::spectra::{harish_chandra_c, plancherel_density, spherical_fn_tol};
use crate::transforms::{fourier_abel, WavePacket};
use crate::C64;
use std::f64::consts::PI;

/// The spectral side ℱ_A(Λf)(iℓρ) = κ_fourier_abel·ĥ(ℓ)/𝐜(−iℓ).
pub fn lambda_spectral(f: &WavePacket, ell: f64) -> Result<C64> {
    let c = harish_chandra_c(C64::new(0.0, -ell))?;
    Ok(KAPPA_FOURIER_ABEL * f.profile.eval(ell) / c)
}

/// ‖Λf‖² in the strip Hardy space: ∫ℝ |ℱ_A(Λf)|²·cosh(πℓρ)·dℓ/|𝒲| in the
/// tube-side Fourier normalization (V*-variable λ = ℓρ).
pub fn lambda_tube_norm_sq(f: &WavePacket) -> Result<f64> {
    let rho = f.model.rho();
    let radius = f.spectral_radius() + 8.0;
    let spec = QuadratureSpec {
        domain: Domain::Finite { a: 0.0, b: radius },
        ..f.quad
    };
    // |1/c(−iℓ)|² = |c(iℓ)|^{−2} = plancherel density
    let res = integrate(
        |l| {
            let h = f.profile.eval(l);
            C64::new(
                KAPPA_FOURIER_ABEL * KAPPA_FOURIER_ABEL
                    * h
                    * h
                    * plancherel_density(l)
                    * (PI * l * rho).cosh(),
                0.0,
            )
        },
        &spec,
    )?;
    Ok(res.value.re)
}

/// τ(𝒲)-covariance data: value of ℱ_A(Λf) at ±ℓ and the multiplier
/// m(ε, iℓ) = 𝐜(iℓ)/𝐜(−iℓ) linking them.
pub fn lambda_tau_covariance(f: &WavePacket, ell: f64) -> Result<(C64, C64, C64)> {
    let plus = lambda_spectral(f, ell)?;
    let minus = lambda_spectral(f, -ell)?;
    let m = harish_chandra_c(C64::new(0.0, ell))? / harish_chandra_c(C64::new(0.0, -ell))?;
    Ok((plus, minus, m))
}

/// ℱ_X f(iℓ) = ∫_X f φ_{iℓ} dx by geodesic-polar quadrature
/// (2π ∫₀^∞ f(a_r) φ_{iℓ}(cosh r) sinh r dr on the n = 2 model): the
/// independent Plancherel route of the diagram check.
pub fn x_fourier_transform(f: &WavePacket, ell: f64) -> Result<C64> {
    let model = f.model;
    let phi_tol = f.phi_tol();
    let r_max = 2.0 * f.n_tail_radius(f.quad.abs_tol * 0.1).ln() + 6.0;
    let spec = QuadratureSpec {
        domain: Domain::Finite { a: 0.0, b: r_max },
        ..f.quad
    };
    let res = integrate(
        |r| {
            let u = C64::new(r.cosh(), 0.0);
            let fv = match f.eval_u(u) {
                Ok(v) => v.value,
                Err(_) => return C64::new(f64::NAN, 0.0),
            };
            let phi = match spherical_fn_tol(&model, ell, u, phi_tol) {
                Ok(p) => p,
                Err(_) => return C64::new(f64::NAN, 0.0),
            };
            fv * phi * r.sinh()
        },
        &spec,
    )?;
    Ok(2.0 * PI * res.value)
}

/// The two paths of the commutative diagram at frequency ℓ:
/// path 1 = 𝐜(−iℓ)^{−1}·ℱ_A(𝒜f) with the A-line Fourier integral taken
/// by quadrature of the (two-route verified) spectral Abel transform;
/// path 2 = 𝐜(−iℓ)^{−1}·ℱ_X f with the X-side Plancherel quadrature.
pub fn lambda_diagram_paths(f: &WavePacket, ell: f64) -> Result<(C64, C64)> {
    let c_inv = C64::new(1.0, 0.0) / harish_chandra_c(C64::new(0.0, -ell))?;
    let fa = fourier_abel(f, ell, crate::transforms::abel_spectral)?;
    let fx = x_fourier_transform(f, ell)?;
    Ok((c_inv * fa.value, c_inv * fx))
}
