//! Dual-transform constants C₁, C₂ and the spectral inversion multiplier g
//! for the SL(2,ℝ)-type lane.
//!
//! C₁ is the Beta/exponential sum produced by the H-orbit integral of the
//! Radon transform; C₂ is the Fourier-inversion coefficient
//! φ_{iλ}(y_o)·|c(iλ)|^{−2} computed from Γ-products only. The multiplier
//! g is *defined* by the requirement g(λ)·c₁(λ) = |c(iλ)|^{−2} with c₁
//! the Γ-stripped form of C₁; solving it with the coth-display of c₁
//! (which collapses to c₁ = 2π(sech(πλ/2) − i)) gives
//!
//!   g(λ) = (λ/4)·sinh(πλ/2) / (1 − i·cosh(πλ/2)).
//!
//! This differs from the misprinted closed form at the end of the
//! source's derivation ((iλ/4)·sinh/(1−cosh), which fails its own
//! defining requirement); the requirement-derived g has no singularity at
//! λ = 0 (g(0) = 0) and makes κ(λ) = C₂/(g·C₁) exactly constant.

use super::cfun::plancherel_gamma_route;
use super::spherical::spherical_at_y_o;
use crate::error::Result;
use crate::numerics::cbeta;
use crate::C64;
use std::f64::consts::{FRAC_PI_4, PI};

/// C₁(λ) = e^{(π/4)(λ−i)} B(1/2, (1+iλ)/4) + e^{−(π/4)(λ+i)} B(1/2, (1−iλ)/4).
pub fn c1_constant(ell: f64) -> Result<C64> {
    let half = C64::new(0.5, 0.0);
    let b_plus = cbeta(half, C64::new(1.0, ell) / 4.0)?;
    let b_minus = cbeta(half, C64::new(1.0, -ell) / 4.0)?;
    let phase = C64::new(0.0, -FRAC_PI_4).exp();
    Ok(phase * ((ell * FRAC_PI_4).exp() * b_plus + (-ell * FRAC_PI_4).exp() * b_minus))
}

/// C₂(λ) = φ_{iλ}(y_o) · |c(iλ)|^{−2}, assembled from Γ-products only.
pub fn c2_constant(ell: f64) -> Result<C64> {
    Ok(spherical_at_y_o(ell)? * plancherel_gamma_route(ell)?)
}

/// The source's coth display for c₁(λ) = C₁·(Γ(1/2)/(Γ((3−iλ)/4)Γ((3+iλ)/4)))^{−1}:
/// (π/i)(2 + coth(π(λ−i)/4) + coth(−π(λ+i)/4)).
pub fn c1_coth_form(ell: f64) -> C64 {
    let z_minus = C64::new(ell, -1.0) * FRAC_PI_4;
    let z_plus = C64::new(-ell, -1.0) * FRAC_PI_4;
    let coth = |z: C64| z.cosh() / z.sinh();
    C64::new(0.0, -PI) * (C64::new(2.0, 0.0) + coth(z_minus) + coth(z_plus))
}

/// The inversion multiplier g(λ) = (λ/4)·sinh(πλ/2)/(1 − i·cosh(πλ/2)).
pub fn multiplier_g(ell: f64) -> C64 {
    let x = PI * ell / 2.0;
    C64::new(ell / 4.0, 0.0) * x.sinh() / C64::new(1.0, -x.cosh())
}

/// κ(λ) = C₂(λ) / (g(λ)·C₁(λ)); constant (= 1) when the §6-type
/// derivation chain is consistent. Reported, never assumed.
pub fn kappa_ratio(ell: f64) -> Result<C64> {
    Ok(c2_constant(ell)? / (multiplier_g(ell) * c1_constant(ell)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c1_at_zero() {
        // both exponential phases coincide at λ = 0, so
        // C₁(0) = 2e^{−iπ/4}B(1/2,1/4): real part √2·B(1/2,1/4) = 7.4163…
        let v = c1_constant(0.0).unwrap();
        let b = cbeta(C64::new(0.5, 0.0), C64::new(0.25, 0.0)).unwrap().re;
        assert!((v.re - 2.0_f64.sqrt() * b).abs() < 1e-10);
        assert!((v.re - 7.416_298_7).abs() < 1e-6);
        assert!((v.im + v.re).abs() < 1e-10);
    }

    #[test]
    fn coth_display_matches_gamma_only_route() {
        for &ell in &[0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0] {
            let c1 = c1_constant(ell).unwrap();
            let gg = crate::numerics::cgamma(C64::new(3.0, -ell) / 4.0).unwrap()
                * crate::numerics::cgamma(C64::new(3.0, ell) / 4.0).unwrap();
            let stripped = c1 * gg / PI.sqrt();
            let display = c1_coth_form(ell);
            assert!(
                (stripped - display).norm() <= 1e-9 * display.norm(),
                "ell = {ell}: {stripped} vs {display}"
            );
            // and the collapsed closed form 2π(sech(πλ/2) − i)
            let collapsed =
                2.0 * PI * C64::new(1.0 / (PI * ell / 2.0).cosh(), -1.0);
            assert!((display - collapsed).norm() <= 1e-11 * collapsed.norm());
        }
    }

    #[test]
    fn g_satisfies_its_defining_requirement() {
        // g(λ)·c₁(λ) = |c(iλ)|^{−2} = (πλ/2)tanh(πλ/2)
        for &ell in &[0.1, 0.7, 1.0, 3.0, 9.0] {
            let lhs = multiplier_g(ell) * c1_coth_form(ell);
            let rhs = super::super::cfun::plancherel_density(ell);
            assert!(
                (lhs - C64::new(rhs, 0.0)).norm() <= 1e-12 * rhs.max(1e-10),
                "ell = {ell}"
            );
        }
    }

    #[test]
    fn g_is_even_and_vanishes_at_zero() {
        assert_eq!(multiplier_g(0.0), C64::new(0.0, 0.0));
        for &ell in &[0.4, 2.0, 7.0] {
            assert!((multiplier_g(ell) - multiplier_g(-ell)).norm() < 1e-14);
        }
    }

    #[test]
    fn kappa_is_constant_equal_one() {
        let base = kappa_ratio(1.0).unwrap();
        assert!((base - C64::new(1.0, 0.0)).norm() < 1e-10);
        for &ell in &[0.25, 0.5, 2.0, 5.0, 10.0, 16.0] {
            let k = kappa_ratio(ell).unwrap();
            assert!(
                (k - base).norm() <= 1e-9 * base.norm(),
                "kappa drift at ell = {ell}: {k}"
            );
        }
    }

    #[test]
    fn c2_value_at_one() {
        // C₂(1) = φ_{i}(y_o)(π/2)tanh(π/2) = 2(π/2)tanh(π/2)/B((3−i)/4,(3+i)/4)
        let v = c2_constant(1.0).unwrap();
        let b = cbeta(C64::new(3.0, -1.0) / 4.0, C64::new(3.0, 1.0) / 4.0).unwrap();
        let oracle = 2.0 * (PI / 2.0) * (PI / 2.0_f64).tanh() / b;
        assert!((v - oracle).norm() < 1e-12 * oracle.norm());
        assert!(v.im.abs() < 1e-12, "C2 should be real, got {v}");
    }
}
