//! The inversion pipeline f = (ℒℛf)^∨ on the SL(2,ℝ)-type model.
//!
//! ℒ is the spectral multiplier acting on the spectral density of ℛf by
//! κ_linv·g(ℓ) (no spatial kernel exists: g is not a polynomial). Two
//! routes are computed and compared against eval_packet(f, y_o):
//!
//! * route (a), the spectral shortcut ∫₀^∞ ĥ(ℓ)·κ⁻¹·g(ℓ)·C₁(ℓ)dℓ, which
//!   certifies the Γ-function identity chain g·C₁ = κ·C₂ together with
//!   the Fourier-inversion display f(y_o) = ∫₀^∞ ĥ C₂ dℓ;
//! * route (b), the operational pipeline: the multiplier applied to the
//!   verified spectral density of ℛf, then H-quadrature over the dual
//!   fiber through y_o.

use super::dual::dual_transform;
use super::packet::{eval_packet, TransformResult, WavePacket};
use crate::error::Result;
use crate::geometry::GroupElement;
use crate::goldens::{KAPPA_C2_RATIO, KAPPA_LINV};
use crate::spectra::{c1_constant, multiplier_g};
use crate::C64;
use std::f64::consts::PI;

/// The three numbers of the inversion check at y_o.
#[derive(Debug, Clone)]
pub struct InversionCheck {
    pub route_a: TransformResult,
    pub route_b: TransformResult,
    pub reference: TransformResult,
}

/// Route (a): ∫₀^∞ ĥ(ℓ)·κ⁻¹·g(ℓ)·C₁(ℓ) dℓ.
pub fn invert_spectral_shortcut(f: &WavePacket) -> Result<TransformResult> {
    let (value, err) = f.spectral_integral(|l| {
        let c1 = match c1_constant(l) {
            Ok(v) => v,
            Err(_) => return C64::new(f64::NAN, 0.0),
        };
        multiplier_g(l) * c1 / KAPPA_C2_RATIO
    })?;
    Ok(TransformResult {
        value,
        error_estimate: err,
        route: "spectral shortcut g·C1",
    })
}

/// Route (b): (ℒℛf)^∨(y_o) with ℒ acting as κ_linv·g(ℓ) on the spectral
/// density π·ĥ(ℓ) of ℛf, followed by H-quadrature.
pub fn invert_operational(f: &WavePacket) -> Result<TransformResult> {
    let model = f.model;
    let rho = model.rho();
    let phi = |xi: &crate::geometry::HoroParam| -> Result<C64> {
        let pairing = xi.pairing_with_x_o(&model);
        let log_p = pairing.ln();
        let (v, _) = f.spectral_integral_full(|l| {
            multiplier_g(l) * (C64::new(-1.0, l) * rho * log_p).exp()
        })?;
        Ok(PI * KAPPA_LINV * v)
    };
    let r = dual_transform(phi, &GroupElement::identity(&model), &model, &f.quad)?;
    Ok(TransformResult {
        value: r.value,
        error_estimate: r.error_estimate,
        route: "multiplier + H-quadrature",
    })
}

/// Run both routes and the reference evaluation.
pub fn invert(f: &WavePacket) -> Result<InversionCheck> {
    let reference = eval_packet(f, &f.model.y_o())?;
    Ok(InversionCheck {
        route_a: invert_spectral_shortcut(f)?,
        route_b: invert_operational(f)?,
        reference,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RankOneModel;
    use crate::spectra::SpectralProfile;

    fn packet(profile: SpectralProfile) -> WavePacket {
        WavePacket::new(RankOneModel::sl2r(), profile).with_quad_tols(1e-9, 1e-11)
    }

    #[test]
    fn both_routes_reproduce_the_packet_at_y_o() {
        let f = packet(SpectralProfile::gaussian(1.0));
        let chk = invert(&f).unwrap();
        let fref = chk.reference.value;
        assert!(
            (chk.route_a.value - fref).norm() <= 1e-3 * fref.norm(),
            "route a: {} vs {fref}",
            chk.route_a.value
        );
        assert!(
            (chk.route_b.value - fref).norm() <= 1e-3 * fref.norm(),
            "route b: {} vs {fref}",
            chk.route_b.value
        );
        assert!((chk.route_a.value - chk.route_b.value).norm() <= 1e-3 * fref.norm());
    }

    #[test]
    fn narrow_band_packet_inversion_error_scales_with_tolerance() {
        let f = packet(SpectralProfile::narrow(3.0, 0.35));
        let coarse = {
            let f = f.clone().with_quad_tols(3e-4, 3e-6);
            let chk = invert(&f).unwrap();
            (chk.route_b.value - chk.reference.value).norm()
        };
        let fine = {
            let f = f.clone().with_quad_tols(3e-5, 3e-7);
            let chk = invert(&f).unwrap();
            (chk.route_b.value - chk.reference.value).norm()
        };
        assert!(
            fine * 5.0 <= coarse || (fine < 1e-9 && coarse < 1e-9),
            "coarse {coarse:.3e}, fine {fine:.3e}"
        );
    }
}
