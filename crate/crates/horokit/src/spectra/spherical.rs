//! Spherical functions φ_λ on the quadric models and their analytic
//! continuation to the crown D and its Shilov boundary Y.
//!
//! In the K_ℂ-invariant u = z·x_o the rank-one spherical function is
//! hypergeometric,
//!
//!   φ_{iℓρ}(u) = ₂F₁(ρ̃(1+iℓ), ρ̃(1−iℓ); n/2; (1−u)/2),  ρ̃ = (n−1)/2,
//!
//! normalized to 1 at u = 1. For n = 2 this is the Legendre function
//! P_{−1/2+iℓ/2}(u); away from the series region it is evaluated through
//! the pair of Legendre Q integral representations, which stay smooth and
//! zero-free on all of ℂ ∖ (−∞, −1] — in particular on the imaginary axis
//! where the boundary values on Y live. The only branch cut is
//! u ∈ (−∞, −1]; the function is analytic across (−1, 1), so the
//! "approach from D" prescription needs no side flag here.

use super::cfun::plancherel_density;
use crate::error::{Error, Result};
use crate::geometry::RankOneModel;
use crate::numerics::{gauss_2f1, integrate, Domain, QuadratureSpec};
use crate::C64;
use std::f64::consts::PI;

/// COSH(λ) = Σ_{w∈𝒲/𝒲_H} z_H^{2w⁻¹λ} = 2 cosh(πℓρ(Z)) at λ = iℓρ.
pub fn cosh_weight(ell: f64, model: &RankOneModel) -> f64 {
    2.0 * (PI * ell * model.rho()).cosh()
}

/// Hardy measure density dμ/dℓ = |c(iℓ)|^{−2} / COSH(ℓ) (SL(2,ℝ)-type lane).
pub fn mu_weight(ell: f64, model: &RankOneModel) -> f64 {
    plancherel_density(ell) / cosh_weight(ell, model)
}

/// φ_{iλ}(y_o) in closed form: √π / (Γ((3−iλ)/4) Γ((3+iλ)/4)),
/// i.e. 2/B((3−iλ)/4, (3+iλ)/4). (Gauss's theorem applied to the
/// ₂F₁(1/4+iλ/4, 1/4−iλ/4; 1; 1) boundary value.)
pub fn spherical_at_y_o(ell: f64) -> Result<C64> {
    let p = crate::numerics::cgamma(C64::new(3.0, -ell) / 4.0)?;
    let q = crate::numerics::cgamma(C64::new(3.0, ell) / 4.0)?;
    Ok(PI.sqrt() / (p * q))
}

/// √(u²−1) on the branch that behaves like u at infinity, with the
/// (−1, 1) segment taken as its boundary value from the crown side
/// (+i√(1−u²)).
fn sqrt_usq_minus_one(u: C64) -> C64 {
    if u.im == 0.0 && u.re.abs() < 1.0 {
        return C64::new(0.0, (1.0 - u.re * u.re).sqrt());
    }
    if u.norm() < 1e-8 {
        let s = (C64::new(1.0, 0.0) - u * u).sqrt();
        return if u.im >= 0.0 {
            C64::new(0.0, 1.0) * s
        } else {
            C64::new(0.0, -1.0) * s
        };
    }
    u * (C64::new(1.0, 0.0) - 1.0 / (u * u)).sqrt()
}

/// Legendre P_ν(u), ν = −1/2 + iμ, through the combined Heine pair
///
///   P_ν(u) = tan(πν)/π · (Q_ν(u) − Q_{−ν−1}(u))
///          = (2/π) ∫₀^∞ b(t)^{−1/2} · coth(πμ)·sin(μ·ln b(t)) dt,
///
/// with b(t) = u + √(u²−1)·cosh t. Combining the two Q integrals at the
/// integrand level removes the μ → 0 cancellation (coth·sin has a finite
/// limit ln b / π) and halves the evaluation cost.
fn legendre_p_conical(mu: f64, u: C64, rel_tol: f64) -> Result<C64> {
    let w = sqrt_usq_minus_one(u);
    let coth = if mu.abs() >= 1e-8 {
        Some(1.0 / (PI * mu).tanh())
    } else {
        None
    };
    let f = |t: f64| {
        let base = u + w * t.cosh();
        let log_base = base.ln();
        let osc = match coth {
            Some(c) => (log_base * mu).sin() * c,
            None => log_base / PI,
        };
        base.powc(C64::new(-0.5, 0.0)) * osc
    };
    // fixed composite rule first (no allocation); panels sized for the
    // e^{-t/2} decay with the sin(mu ln b) oscillation rate
    if mu.abs() <= 8.0 {
        let panels = [
            0.0, 1.0, 2.2, 3.6, 5.2, 7.0, 9.2, 12.0, 16.0, 21.0, 28.0, 38.0, 52.0, 70.0,
        ];
        let (value, err) = crate::numerics::fixed_panels(&f, &panels)?;
        if err <= rel_tol * value.norm() + 1e-14 {
            return Ok(value * (2.0 / PI));
        }
    }
    let spec = QuadratureSpec::new(Domain::HalfLine { a: 0.0, decay: 0.5 })
        .with_tols(rel_tol, 1e-14)
        .with_budget(4000);
    Ok(integrate(f, &spec)?.value * (2.0 / PI))
}

/// The analytically continued spherical function φ_{iℓρ} at the
/// K_ℂ-invariant u = z·x_o. Errors with `BranchCutHit` on u ∈ (−∞, −1].
pub fn spherical_fn(model: &RankOneModel, ell: f64, u: C64) -> Result<C64> {
    spherical_fn_tol(model, ell, u, 1e-12)
}

/// Same as [`spherical_fn`] with a caller-chosen relative tolerance for
/// the integral representation (transform sweeps relax it).
pub fn spherical_fn_tol(model: &RankOneModel, ell: f64, u: C64, rel_tol: f64) -> Result<C64> {
    if (u - C64::new(1.0, 0.0)).norm() < 1e-14 {
        return Ok(C64::new(1.0, 0.0));
    }
    if u.im == 0.0 && u.re <= -1.0 {
        return Err(Error::BranchCutHit(format!(
            "spherical function argument u = {} on (-inf, -1]",
            u.re
        )));
    }
    let x = (C64::new(1.0, 0.0) - u) / 2.0;
    let rho = model.rho();
    if x.norm() <= 0.45 {
        let a = C64::new(rho, rho * ell);
        let b = C64::new(rho, -rho * ell);
        let c = C64::new(model.n() as f64 / 2.0, 0.0);
        return gauss_2f1(a, b, c, x);
    }
    if model.n() == 2 {
        return legendre_p_conical(ell / 2.0, u, rel_tol);
    }
    Err(Error::SeriesNonConvergence(format!(
        "spherical function for n = {} outside the series region",
        model.n()
    )))
}

/// The K-integral route φ_λ(exp(2z)·x_o) = ∫_K |a(k exp(zZ))^{ρ+λ}|² dk
/// (n = 2), the independent oracle for the ₂F₁/Legendre routes.
pub fn spherical_k_integral_route(model: &RankOneModel, ell: f64, z_log: C64) -> Result<C64> {
    assert_eq!(model.n(), 2, "K-integral oracle implemented on the n = 2 model");
    let a = crate::geometry::make_generator(model, crate::geometry::Generator::BoostA(z_log))?;
    let x = a.apply_point(&model.x_o());
    let spec = QuadratureSpec::new(Domain::Finite {
        a: 0.0,
        b: 2.0 * PI,
    })
    .with_tols(1e-12, 1e-14)
    .with_budget(2000);
    let (z0, z1, z2) = (x.0[0], x.0[1], x.0[2]);
    let res = integrate(
        |theta| {
            // k_θ rotates the spatial block; the Iwasawa readout of k_θ·x
            // is (k_θ x)₀ − (k_θ x)₂ = z0 − z1 sinθ − z2 cosθ
            let readout = z0 - z1 * theta.sin() - z2 * theta.cos();
            let w = -readout.ln();
            // |e^{(ρ+iℓρ)(Z) w}|² = e^{2ρ(Z)(Re w − ℓ Im w)}
            C64::new((2.0 * model.rho() * (w.re - ell * w.im)).exp(), 0.0)
        },
        &spec,
    )?;
    Ok(res.value / (2.0 * PI))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::cbeta;

    fn m() -> RankOneModel {
        RankOneModel::sl2r()
    }

    #[test]
    fn normalized_at_the_base_point() {
        for &ell in &[0.0, 0.7, 3.0, 12.0] {
            let v = spherical_fn(&m(), ell, C64::new(1.0, 0.0)).unwrap();
            assert_eq!(v, C64::new(1.0, 0.0));
        }
    }

    #[test]
    fn boundary_base_point_closed_form() {
        // φ_{iλ}(y_o) = √π/(Γ((3−iλ)/4)Γ((3+iλ)/4)); at λ = 0 this is
        // √π/Γ(3/4)² = 1.1803405990…, i.e. 4× the source's misprinted
        // 1/(2B) value. The continued function must agree.
        let v0 = spherical_at_y_o(0.0).unwrap();
        assert!((v0.re - 1.180_340_599_0).abs() < 1e-9);
        assert!(v0.im.abs() < 1e-13);
        for &ell in &[0.0, 1.0, 2.5, 6.0] {
            let closed = spherical_at_y_o(ell).unwrap();
            let continued = spherical_fn(&m(), ell, C64::new(0.0, 0.0)).unwrap();
            assert!(
                (closed - continued).norm() <= 1e-9 * closed.norm(),
                "ell = {ell}: {closed} vs {continued}"
            );
            // and against the Beta form 2/B((3−iλ)/4, (3+iλ)/4)
            let beta = cbeta(C64::new(3.0, -ell) / 4.0, C64::new(3.0, ell) / 4.0).unwrap();
            assert!((closed - 2.0 / beta).norm() < 1e-12 * closed.norm());
        }
    }

    #[test]
    fn series_and_conical_routes_agree() {
        // overlap annulus: both the 2F1 series and the Q-pair apply
        for &ell in &[0.0, 0.4, 1.3, 5.0] {
            for &u in &[
                C64::new(1.5, 0.0),
                C64::new(0.9, 0.3),
                C64::new(0.4, -0.5),
                C64::new(0.2, 0.1),
            ] {
                let series = {
                    let x = (C64::new(1.0, 0.0) - u) / 2.0;
                    let a = C64::new(0.5, 0.5 * ell);
                    let b = C64::new(0.5, -0.5 * ell);
                    gauss_2f1(a, b, C64::new(1.0, 0.0), x).unwrap()
                };
                let conical = legendre_p_conical(ell / 2.0, u, 1e-13).unwrap();
                assert!(
                    (series - conical).norm() <= 1e-10 * series.norm().max(1e-3),
                    "ell={ell} u={u}: {series} vs {conical}"
                );
            }
        }
    }

    #[test]
    fn ferrers_region_and_legendre_zero() {
        // P_{−1/2}(0) = √π/Γ(3/4)²; also even/odd structure on (−1,1)
        let p0 = spherical_fn(&m(), 0.0, C64::new(0.0, 0.0)).unwrap();
        assert!((p0.re - 1.180_340_599_0).abs() < 1e-7);
        // Ferrers values are real on (−1, 1)
        let p = spherical_fn(&m(), 2.0, C64::new(-0.6, 0.0)).unwrap();
        assert!(p.im.abs() < 1e-9, "im = {}", p.im);
    }

    #[test]
    fn branch_cut_reported() {
        assert!(matches!(
            spherical_fn(&m(), 1.0, C64::new(-1.2, 0.0)),
            Err(Error::BranchCutHit(_))
        ));
    }

    #[test]
    fn lambda_symmetry() {
        // φ_λ = φ_{−λ}: the ₂F₁ parameters are symmetric; assert the
        // evaluated function agrees at ±ℓ including through the Q-route
        for &(ell, u) in &[
            (0.8, C64::new(3.0, 0.4)),
            (2.2, C64::new(0.1, -2.0)),
            (5.5, C64::new(-0.3, 1.1)),
        ] {
            let a = spherical_fn(&m(), ell, u).unwrap();
            let b = spherical_fn(&m(), -ell, u).unwrap();
            assert!((a - b).norm() <= 1e-9 * a.norm().max(1e-6));
        }
    }

    #[test]
    fn k_integral_route_matches_hypergeometric_route() {
        // φ_λ(exp(2z)x_o) vs ∫_K|a(k exp(z))^{ρ+λ}|²dk at z = i·0.3
        let model = m();
        for &ell in &[1.0, 2.0] {
            let z = C64::new(0.0, 0.3);
            let k_route = spherical_k_integral_route(&model, ell, z).unwrap();
            let u = (2.0 * z).cosh();
            let direct = spherical_fn(&model, ell, u).unwrap();
            assert!(
                (k_route - direct).norm() <= 1e-6 * direct.norm(),
                "ell={ell}: {k_route} vs {direct}"
            );
        }
    }

    #[test]
    fn cosh_weight_values() {
        let model = m();
        assert!((cosh_weight(0.0, &model) - 2.0).abs() < 1e-15);
        // 2cosh(π/2) = 5.0183569573…
        assert!((cosh_weight(1.0, &model) - 5.018_356_957_3).abs() < 1e-9);
        assert_eq!(cosh_weight(1.3, &model), cosh_weight(-1.3, &model));
    }

    #[test]
    fn mu_weight_values() {
        let model = m();
        assert_eq!(mu_weight(0.0, &model), 0.0);
        // μ(2) = π tanh(π) / (2 cosh π) = 0.1350027…
        let oracle = PI * PI.tanh() / (2.0 * PI.cosh());
        assert!((mu_weight(2.0, &model) - oracle).abs() < 1e-14);
        assert!((oracle - 0.135_002_314_2).abs() < 1e-9);
        // positive and integrable against a gaussian
        let spec = QuadratureSpec::new(Domain::HalfLine { a: 0.0, decay: 1.0 })
            .with_tols(1e-10, 1e-12);
        let total = integrate(
            |l| C64::new(mu_weight(l, &model) * (-l * l).exp(), 0.0),
            &spec,
        )
        .unwrap();
        assert!(total.value.re.is_finite() && total.value.re > 0.0);
    }
}
