//! The Cauchy transform on the imaginary hyperboloid Y (n even),
//!
//!   𝒞f(ξ) = ∫_Y f(y) / (1 − ξ·y) dy,
//!
//! with the invariant measure normalized through the NAW coordinates:
//! ∫_Y f dy = Σ_{w∈𝒲} ∫_A ∫_N f(a_s n_v w·y_o) dv ds. With this — and the
//! same dn, da inside ℛ — the residue identity 𝒞f = (−1)^{k−1}·2π·ℛf
//! holds exactly on Ξ₊, with no free normalization.

use super::packet::{TransformResult, WavePacket};
use crate::error::{Error, Result};
use crate::geometry::{GroupElement, HoroParam, QuadricPoint};
use crate::numerics::{Domain, QuadratureSpec};
use crate::C64;
use nalgebra::DVector;

/// One Y point a_s·n_v·w·y_o of the n = 2 model in coordinates.
fn y_point(s: f64, v: f64, weyl: bool) -> DVector<C64> {
    let sign = if weyl { -1.0 } else { 1.0 };
    // n_v·(0,0,±i) = ±i·(−v²/2, −v, 1−v²/2), then boost by a_s
    let half_vv = 0.5 * v * v;
    let (c, sh) = (s.cosh(), s.sinh());
    let y0 = sign * (-half_vv * c + (1.0 - half_vv) * sh);
    let y1 = sign * (-v);
    let y2 = sign * (-half_vv * sh + (1.0 - half_vv) * c);
    DVector::from_vec(vec![
        C64::new(0.0, y0),
        C64::new(0.0, y1),
        C64::new(0.0, y2),
    ])
}

/// 𝒞 applied to an arbitrary boundary function `fy` (used for the
/// equivariance checks with translated packets).
pub fn cauchy_transform_with<F>(
    fy: F,
    xi: &HoroParam,
    f: &WavePacket,
) -> Result<TransformResult>
where
    F: Fn(&DVector<C64>) -> Result<C64> + Sync,
{
    let model = &f.model;
    if model.cauchy_k().is_none() || model.n() != 2 {
        return Err(Error::ConfigInvalid(
            "Cauchy transform quadrature is implemented for even n = 2".into(),
        ));
    }
    // separation floor: stay inside an admissible Ξ_c
    if let Some((_, t)) = &xi.coset {
        if t.abs() > model.omega_h_bound() - 1e-6 {
            return Err(Error::NearSingularKernel(model.omega_h_bound() - t.abs()));
        }
    }
    let zeta = &xi.zeta;
    let eps_tail = f.quad.abs_tol * 1e-1;
    let v_radius = f.n_tail_radius(eps_tail);
    let s_radius = {
        // in s the packet decays like exp(−σ²s²/2)·e^{−s/2}; solve the
        // gaussian part
        let s2 = (f.profile.sigma * f.profile.sigma / 2.0).max(1e-3);
        (((1.0 / eps_tail).ln() / s2).sqrt() + 4.0).min(60.0)
    };
    let outer = QuadratureSpec {
        domain: Domain::Finite {
            a: -s_radius,
            b: s_radius,
        },
        ..f.quad
    };
    let inner = QuadratureSpec {
        domain: Domain::Finite {
            a: -v_radius,
            b: v_radius,
        },
        ..f.quad
    };

    let mut value = C64::new(0.0, 0.0);
    let mut error = 0.0f64;
    for weyl in [false, true] {
        let integrand = |s: f64, v: f64| -> C64 {
            let y = y_point(s, v, weyl);
            // kernel 1/(1 − ξ·y)
            let pairing = zeta[0] * y[0] - zeta[1] * y[1] - zeta[2] * y[2];
            let denom = C64::new(1.0, 0.0) - pairing;
            if denom.norm() < 1e-8 {
                return C64::new(f64::NAN, 0.0);
            }
            match fy(&y) {
                Ok(fv) => fv / denom,
                Err(_) => C64::new(f64::NAN, 0.0),
            }
        };
        let res = crate::numerics::integrate2d(integrand, &outer, &inner)?;
        value += res.value;
        error += res.error;
    }
    Ok(TransformResult {
        value,
        error_estimate: error,
        route: "Y-quadrature",
    })
}

/// 𝒞f(ξ) for a wave packet (boundary values through the analytic
/// continuation of the spherical functions).
pub fn cauchy_transform(f: &WavePacket, xi: &HoroParam) -> Result<TransformResult> {
    cauchy_transform_with(|y| Ok(f.eval_u(y[0])?.value), xi, f)
}

/// Same, for the left-translate L_g f = f ∘ g⁻¹.
pub fn cauchy_transform_translated(
    f: &WavePacket,
    xi: &HoroParam,
    g: &GroupElement,
) -> Result<TransformResult> {
    let ginv = g.inverse();
    cauchy_transform_with(
        |y| {
            let moved = ginv.apply(y);
            Ok(f.eval_u(moved[0])?.value)
        },
        xi,
        f,
    )
}

/// Helper for tests/suites: y as a `QuadricPoint`.
pub fn y_sample_point(s: f64, v: f64, weyl: bool) -> QuadricPoint {
    QuadricPoint(y_point(s, v, weyl))
}
