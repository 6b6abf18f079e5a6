//! Closed-form Iwasawa projection on the quadric: a point z ∈ N_ℂA_ℂ·x_o
//! decomposes as n_v a_w·x_o with e^{−w} = z₀ − z_n (principal logarithm)
//! and v = e^{w}(z₁, …, z_{n−1}).

use super::group::{make_generator, Generator};
use super::model::{QuadricPoint, RankOneModel};
use crate::error::{Error, Result};
use crate::C64;

/// The (v, w) factors of z = n_v a_w·x_o, w = log a by the principal branch.
#[derive(Debug, Clone, PartialEq)]
pub struct IwasawaFactors {
    pub v: Vec<C64>,
    pub w: C64,
}

/// Horospherical coordinates of a quadric point.
///
/// Fails with `BranchCutHit` when z₀ − z_n lies on (−∞, 0], i.e. z is in
/// the complement of N_ℂA_ℂ·x_o reachable by the principal branch. On the
/// crown domain the complex convexity theorem keeps |Im w| ≤ π/2, so the
/// cut is never hit there.
pub fn iwasawa_point(model: &RankOneModel, z: &QuadricPoint) -> Result<IwasawaFactors> {
    let n = model.n();
    let readout = z.0[0] - z.0[n];
    if readout.norm() == 0.0
        || (readout.im.abs() < 1e-14 * readout.norm().max(1.0) && readout.re <= 0.0)
    {
        return Err(Error::BranchCutHit(format!(
            "z0 - zn = {readout} on the nonpositive real axis"
        )));
    }
    let w = -readout.ln();
    let ew = w.exp();
    let v: Vec<C64> = (1..n).map(|j| ew * z.0[j]).collect();
    Ok(IwasawaFactors { v, w })
}

impl IwasawaFactors {
    /// Reconstruct n_v a_w·x_o (used by the round-trip tests).
    pub fn reconstruct(&self, model: &RankOneModel) -> Result<QuadricPoint> {
        let nv = make_generator(model, Generator::Unipotent(self.v.clone()))?;
        let aw = make_generator(model, Generator::BoostA(self.w))?;
        Ok(nv.compose(&aw).apply_point(&model.x_o()))
    }
}
