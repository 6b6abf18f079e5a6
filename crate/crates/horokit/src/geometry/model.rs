//! The rank-one quadric models and their distinguished points.

use crate::error::{Error, Result};
use crate::C64;
use nalgebra::DVector;
use std::f64::consts::FRAC_PI_2;

/// The hyperboloid model SO_e(1,n)/SO(n), n ≥ 2, with Lorentz signature
/// (1, n). The SL(2,ℝ)/SO(1,1) example of the inversion theory is the
/// n = 2 instance (ρ(Z) = 1/2, identical spherical harmonic analysis).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RankOneModel {
    n: usize,
}

impl RankOneModel {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::ConfigInvalid(format!(
                "rank-one model needs n >= 2, got {n}"
            )));
        }
        Ok(Self { n })
    }

    /// The SL(2,ℝ)-type model used by the inversion and Hardy suites.
    pub fn sl2r() -> Self {
        Self { n: 2 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Ambient dimension n + 1.
    pub fn dim(&self) -> usize {
        self.n + 1
    }

    /// ρ(Z) = (n − 1)/2 in the normalization α(Z) = 1.
    pub fn rho(&self) -> f64 {
        (self.n as f64 - 1.0) / 2.0
    }

    /// k = n/2 when n is even (the Cauchy-transform parity parameter).
    pub fn cauchy_k(&self) -> Option<usize> {
        (self.n % 2 == 0).then_some(self.n / 2)
    }

    /// Base point x_o = (1, 0, …, 0) of X.
    pub fn x_o(&self) -> QuadricPoint {
        let mut v = DVector::from_element(self.dim(), C64::new(0.0, 0.0));
        v[0] = C64::new(1.0, 0.0);
        QuadricPoint(v)
    }

    /// Base horosphere parameter ξ_o = (1, 0, …, 0, 1).
    pub fn xi_o_vec(&self) -> DVector<C64> {
        let mut v = DVector::from_element(self.dim(), C64::new(0.0, 0.0));
        v[0] = C64::new(1.0, 0.0);
        v[self.n] = C64::new(1.0, 0.0);
        v
    }

    /// y_o = z_H·x_o = (0, …, 0, i), the base point of the real form Y.
    pub fn y_o(&self) -> QuadricPoint {
        let mut v = DVector::from_element(self.dim(), C64::new(0.0, 0.0));
        v[self.n] = C64::new(0.0, 1.0);
        QuadricPoint(v)
    }

    /// Boundary of the Ω_H interval in the A-log coordinate: |Im z| < π/2.
    pub fn omega_h_bound(&self) -> f64 {
        FRAC_PI_2
    }

    /// □(z) = z₀² − z₁² − … − z_n².
    pub fn box_form(&self, z: &DVector<C64>) -> C64 {
        let mut q = z[0] * z[0];
        for j in 1..z.len() {
            q -= z[j] * z[j];
        }
        q
    }
}

/// A point of the complex quadric X_ℂ (□(z) = 1 up to 1e−12).
#[derive(Debug, Clone, PartialEq)]
pub struct QuadricPoint(pub DVector<C64>);

impl QuadricPoint {
    pub fn new(model: &RankOneModel, z: DVector<C64>) -> Result<Self> {
        if z.len() != model.dim() {
            return Err(Error::ShapeMismatch {
                expected: format!("{}-vector", model.dim()),
                got: format!("{}-vector", z.len()),
            });
        }
        let q = model.box_form(&z);
        if (q - C64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::ConfigInvalid(format!(
                "not on the quadric: box form = {q}"
            )));
        }
        Ok(Self(z))
    }

    /// The K_ℂ-invariant u = z·x_o = z₀ of the point.
    pub fn invariant(&self) -> C64 {
        self.0[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_points_satisfy_the_quadric_relations() {
        let m = RankOneModel::new(4).unwrap();
        assert_eq!(m.box_form(&m.x_o().0), C64::new(1.0, 0.0));
        assert_eq!(m.box_form(&m.xi_o_vec()), C64::new(0.0, 0.0));
        assert_eq!(m.box_form(&m.y_o().0), C64::new(1.0, 0.0));
        assert_eq!(m.rho(), 1.5);
    }

    #[test]
    fn n_below_two_rejected() {
        assert!(RankOneModel::new(1).is_err());
    }
}
