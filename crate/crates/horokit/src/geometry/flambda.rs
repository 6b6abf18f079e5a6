//! Pointwise evaluation of the H-spherical vector f_λ on the dense subset
//! Ξ₊′ = ⋃_w H w T(Ω_H)·ξ_o, where it is given by
//! f_λ(h w a·ξ_o) = (w⁻¹ z_H w)^{λ−ρ} · a^{λ−ρ}.
//!
//! Only the pointwise formula is implemented; the distributional
//! continuation is out of scope. Spectral parameters are passed in
//! ρ-coordinates: `lambda_rho = c` means λ = c·ρ (the unitary axis is
//! c = iℓ, ℓ real).

use super::model::RankOneModel;
use crate::error::{Error, Result};
use crate::C64;
use std::f64::consts::FRAC_PI_2;

/// The rank-one Weyl group {1, ε}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeylElement {
    Identity,
    Eps,
}

/// f_λ at the Ξ₊′ point with coordinates (h, w, a = exp(zZ)).
///
/// The H-part does not enter the value (f_λ is H-invariant); it is part of
/// the coordinate presentation. Points must come with |Im z| < π/2;
/// anything else is outside the dense set.
pub fn eval_f_lambda(
    model: &RankOneModel,
    w: WeylElement,
    a_log: C64,
    lambda_rho: C64,
) -> Result<C64> {
    if a_log.im.abs() >= model.omega_h_bound() {
        return Err(Error::OutsideDenseSet(format!(
            "|Im log a| = {} >= pi/2",
            a_log.im.abs()
        )));
    }
    // (λ − ρ)(Z) = (c − 1)·ρ(Z)
    let exponent = (lambda_rho - C64::new(1.0, 0.0)) * model.rho();
    let sign = match w {
        WeylElement::Identity => 1.0,
        WeylElement::Eps => -1.0,
    };
    // w⁻¹ z_H w = exp(±i(π/2)Z)
    let zh_part = (C64::new(0.0, sign * FRAC_PI_2) * exponent).exp();
    let a_part = (a_log * exponent).exp();
    Ok(zh_part * a_part)
}
