//! The dual transform: integration over the real form S_ℝ^H(y) of the
//! dual fiber,
//!
//!   φ^∨(y) = ∫_H φ(g·h_τ·z_H·ξ_o) dτ,   y = g·y_o,
//!
//! with h_τ the SO_e(1,1) boost in the (0,1) plane and dτ its Lebesgue
//! parameter. On the n = 2 model the orbit point has the closed pairing
//! ζ(h_τ z_H ξ_o)·x_o = i·cosh τ, which is the (cosh 2t)^{−1/2} weight of
//! the Beta-integral identities.

use super::packet::TransformResult;
use crate::error::{Error, Result};
use crate::geometry::{GroupElement, HoroParam, RankOneModel};
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::C64;
use std::f64::consts::FRAC_PI_2;

/// The H-orbit point g·h_τ·z_H·ξ_o as a boundary horosphere parameter.
pub fn h_orbit_point(model: &RankOneModel, g: &GroupElement, tau: f64) -> Result<HoroParam> {
    let mut h = nalgebra::DMatrix::identity(model.dim(), model.dim());
    h[(0, 0)] = C64::new(tau.cosh(), 0.0);
    h[(0, 1)] = C64::new(tau.sinh(), 0.0);
    h[(1, 0)] = C64::new(tau.sinh(), 0.0);
    h[(1, 1)] = C64::new(tau.cosh(), 0.0);
    let h = GroupElement::new(model, h)?;
    HoroParam::from_coset_boundary(model, g.compose(&h), FRAC_PI_2)
}

/// Dual transform of a CR-function given as a closure on boundary
/// horosphere parameters. The integrand must decay; a non-decaying φ
/// (e.g. a constant) is detected by tail probes and reported as
/// `NonConvergence`.
pub fn dual_transform<P>(
    phi: P,
    g: &GroupElement,
    model: &RankOneModel,
    spec_template: &QuadratureSpec,
) -> Result<TransformResult>
where
    P: Fn(&HoroParam) -> Result<C64>,
{
    if model.n() != 2 {
        return Err(Error::ConfigInvalid(
            "dual transform is implemented on the n = 2 model".into(),
        ));
    }
    let radius = ((10.0 / spec_template.abs_tol).ln() * 2.0 + 8.0).min(spec_template.tail_cutoff);
    // probe the tails before integrating: the H-orbit weight alone decays
    // like (cosh τ)^{−1/2}, which is not integrable without packet decay
    let mut scale = 0.0f64;
    for &tau in &[0.0, 1.0, -2.0] {
        scale = scale.max(phi(&h_orbit_point(model, g, tau)?)?.norm());
    }
    let mut tail = 0.0f64;
    for &tau in &[radius, -radius, 1.15 * radius, -1.3 * radius] {
        tail = tail.max(phi(&h_orbit_point(model, g, tau)?)?.norm());
    }
    if tail * radius > (spec_template.rel_tol * scale).max(spec_template.abs_tol) * 10.0 {
        return Err(Error::NonConvergence {
            estimate: tail * radius,
            target: spec_template.abs_tol,
            subdivisions: 0,
        });
    }
    let spec = QuadratureSpec {
        domain: Domain::Finite {
            a: -radius,
            b: radius,
        },
        ..*spec_template
    };
    let res = integrate(
        |tau| match h_orbit_point(model, g, tau).and_then(|xi| phi(&xi)) {
            Ok(v) => v,
            Err(_) => C64::new(f64::NAN, 0.0),
        },
        &spec,
    )?;
    Ok(TransformResult {
        value: res.value,
        error_estimate: res.error + tail * radius,
        route: "H-quadrature",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::minkowski_pair;
    use crate::numerics::cbeta;
    use std::f64::consts::FRAC_PI_4;

    fn model() -> RankOneModel {
        RankOneModel::sl2r()
    }

    fn spec() -> QuadratureSpec {
        QuadratureSpec::new(Domain::RealLine { decay: 0.5 }).with_tols(1e-10, 1e-12)
    }

    #[test]
    fn orbit_pairing_is_i_cosh_tau() {
        let m = model();
        let e = GroupElement::identity(&m);
        for &tau in &[0.0, 0.8, -1.7] {
            let xi = h_orbit_point(&m, &e, tau).unwrap();
            let p = minkowski_pair(&xi.zeta, &m.x_o().0).unwrap();
            assert!((p - C64::new(0.0, tau.cosh())).norm() < 1e-12);
        }
    }

    #[test]
    fn cosh_power_test_function_integrates_to_the_beta_value() {
        // φ(ξ) = (ζ·x_o/i)^{−(1+iλ)/2}·phase-free: ∫(cosh τ)^{−(1+iλ)/2}dτ
        // = B(1/2, (1+iλ)/4), so the full power of a(z_H⁻¹h)^{ρ(1+iλ)}
        // integrates to e^{(π/4)(λ−i)}·B(1/2,(1+iλ)/4)
        let m = model();
        let e = GroupElement::identity(&m);
        let lambda = 2.0;
        let power = C64::new(1.0, lambda) * 0.5;
        let phi = |xi: &HoroParam| -> crate::error::Result<C64> {
            let p = minkowski_pair(&xi.zeta, &m.x_o().0).unwrap();
            // (i cosh τ)^{−(1+iλ)/2} continued from the crown side
            Ok((-power * p.ln()).exp())
        };
        let got = dual_transform(phi, &e, &m, &spec()).unwrap();
        let beta = cbeta(C64::new(0.5, 0.0), C64::new(1.0, lambda) / 4.0).unwrap();
        let oracle = (C64::new(lambda, -1.0) * FRAC_PI_4).exp() * beta;
        assert!(
            (got.value - oracle).norm() <= 1e-6 * oracle.norm(),
            "{} vs {oracle}",
            got.value
        );
    }

    #[test]
    fn constant_phi_is_rejected_as_divergent() {
        let m = model();
        let e = GroupElement::identity(&m);
        let err = dual_transform(|_| Ok(C64::new(1.0, 0.0)), &e, &m, &spec());
        assert!(matches!(err, Err(Error::NonConvergence { .. })));
    }
}
