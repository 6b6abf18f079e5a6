//! Group elements of SO_e(1,n) and SO(1,n;ℂ) as explicit matrices, the
//! generator families a_z, n_v, k_R, and the invariant Minkowski pairing.

use super::model::{QuadricPoint, RankOneModel};
use crate::error::{Error, Result};
use crate::C64;
use nalgebra::{DMatrix, DVector};

/// An element of G_ℂ = SO(1,n;ℂ): preserves J = diag(1,−1,…,−1) and has
/// unit determinant. `real` marks elements of the real group G.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupElement {
    m: DMatrix<C64>,
    real: bool,
}

impl GroupElement {
    pub fn new(model: &RankOneModel, m: DMatrix<C64>) -> Result<Self> {
        let d = model.dim();
        if m.nrows() != d || m.ncols() != d {
            return Err(Error::ShapeMismatch {
                expected: format!("{d}x{d} matrix"),
                got: format!("{}x{} matrix", m.nrows(), m.ncols()),
            });
        }
        // m^T J m = J entrywise, to relative precision (large boosts
        // cancel catastrophically in absolute terms)
        let col_norm: Vec<f64> = (0..d)
            .map(|j| (0..d).map(|k| m[(k, j)].norm_sqr()).sum::<f64>().sqrt())
            .collect();
        let mut defect = 0.0f64;
        for i in 0..d {
            for j in 0..d {
                let mut s = C64::new(0.0, 0.0);
                for k in 0..d {
                    let jk = if k == 0 { 1.0 } else { -1.0 };
                    s += m[(k, i)] * jk * m[(k, j)];
                }
                let target = if i == j {
                    C64::new(if i == 0 { 1.0 } else { -1.0 }, 0.0)
                } else {
                    C64::new(0.0, 0.0)
                };
                let scale = (col_norm[i] * col_norm[j]).max(1.0);
                defect = defect.max((s - target).norm() / scale);
            }
        }
        if defect > 1e-12 {
            return Err(Error::ConfigInvalid(format!(
                "matrix does not preserve the Lorentz form (defect {defect:.3e})"
            )));
        }
        let det = m.clone().determinant();
        let det_scale = col_norm.iter().product::<f64>().max(1.0);
        if (det - C64::new(1.0, 0.0)).norm() > 1e-10 * det_scale {
            return Err(Error::ConfigInvalid(format!("determinant {det} != 1")));
        }
        let real = m.iter().all(|z| z.im.abs() < 1e-14);
        Ok(Self { m, real })
    }

    pub fn identity(model: &RankOneModel) -> Self {
        Self {
            m: DMatrix::identity(model.dim(), model.dim()),
            real: true,
        }
    }

    pub fn is_real(&self) -> bool {
        self.real
    }

    pub fn matrix(&self) -> &DMatrix<C64> {
        &self.m
    }

    pub fn apply(&self, v: &DVector<C64>) -> DVector<C64> {
        &self.m * v
    }

    pub fn apply_point(&self, p: &QuadricPoint) -> QuadricPoint {
        QuadricPoint(&self.m * &p.0)
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            m: &self.m * &other.m,
            real: self.real && other.real,
        }
    }

    pub fn inverse(&self) -> GroupElement {
        // J m^T J inverts a Lorentz matrix without an LU pass
        let d = self.m.nrows();
        let mut inv = self.m.transpose();
        for i in 0..d {
            for j in 0..d {
                let sign = if (i == 0) ^ (j == 0) { -1.0 } else { 1.0 };
                inv[(i, j)] *= sign;
            }
        }
        GroupElement {
            m: inv,
            real: self.real,
        }
    }

    /// The Weyl representative ε: flips the last two coordinates
    /// (acts as −1 on 𝔞, lies in K, fixes x_o).
    pub fn weyl_eps(model: &RankOneModel) -> Self {
        let d = model.dim();
        let mut m = DMatrix::identity(d, d);
        m[(d - 2, d - 2)] = C64::new(-1.0, 0.0);
        m[(d - 1, d - 1)] = C64::new(-1.0, 0.0);
        Self { m, real: true }
    }
}

/// Generator parameters for [`make_generator`].
#[derive(Debug, Clone)]
pub enum Generator {
    /// a_z = exp(zZ): hyperbolic boost in the (0, n) plane.
    BoostA(C64),
    /// n_v: unipotent element of N_ℂ, v ∈ ℂ^{n−1}.
    Unipotent(Vec<C64>),
    /// k_R = diag(1, R), R ∈ SO(n).
    Rotation(DMatrix<f64>),
}

/// Build one of the paper's explicit generator matrices.
pub fn make_generator(model: &RankOneModel, kind: Generator) -> Result<GroupElement> {
    let d = model.dim();
    let n = model.n();
    let m = match kind {
        Generator::BoostA(z) => {
            let mut m = DMatrix::identity(d, d);
            m[(0, 0)] = z.cosh();
            m[(0, n)] = z.sinh();
            m[(n, 0)] = z.sinh();
            m[(n, n)] = z.cosh();
            m
        }
        Generator::Unipotent(v) => {
            if v.len() != n - 1 {
                return Err(Error::ShapeMismatch {
                    expected: format!("{}-vector", n - 1),
                    got: format!("{}-vector", v.len()),
                });
            }
            let vv: C64 = v.iter().map(|z| z * z).sum();
            let mut m = DMatrix::identity(d, d);
            m[(0, 0)] = C64::new(1.0, 0.0) + 0.5 * vv;
            m[(0, n)] = -0.5 * vv;
            m[(n, 0)] = 0.5 * vv;
            m[(n, n)] = C64::new(1.0, 0.0) - 0.5 * vv;
            for j in 0..n - 1 {
                m[(0, 1 + j)] = v[j];
                m[(n, 1 + j)] = v[j];
                m[(1 + j, 0)] = v[j];
                m[(1 + j, n)] = -v[j];
            }
            m
        }
        Generator::Rotation(r) => {
            if r.nrows() != n || r.ncols() != n {
                return Err(Error::ShapeMismatch {
                    expected: format!("{n}x{n} block"),
                    got: format!("{}x{} block", r.nrows(), r.ncols()),
                });
            }
            let defect = ((r.transpose() * &r) - DMatrix::<f64>::identity(n, n)).abs().max();
            let det_defect = (r.determinant() - 1.0).abs();
            if defect > 1e-12 || det_defect > 1e-10 {
                return Err(Error::NonOrthogonalBlock(defect.max(det_defect)));
            }
            let mut m = DMatrix::from_element(d, d, C64::new(0.0, 0.0));
            m[(0, 0)] = C64::new(1.0, 0.0);
            for i in 0..n {
                for j in 0..n {
                    m[(1 + i, 1 + j)] = C64::new(r[(i, j)], 0.0);
                }
            }
            m
        }
    };
    GroupElement::new(model, m)
}

/// Planar SO(n) rotation by `angle` in the (axes.0, axes.1) plane of the
/// spatial block (0-indexed within the block).
pub fn rotation_block(n: usize, axes: (usize, usize), angle: f64) -> DMatrix<f64> {
    let mut r = DMatrix::identity(n, n);
    let (i, j) = axes;
    r[(i, i)] = angle.cos();
    r[(j, j)] = angle.cos();
    r[(i, j)] = -angle.sin();
    r[(j, i)] = angle.sin();
    r
}

/// The complex-bilinear Minkowski pairing z·w = z₀w₀ − Σ z_j w_j.
pub fn minkowski_pair(z: &DVector<C64>, w: &DVector<C64>) -> Result<C64> {
    if z.len() != w.len() {
        return Err(Error::ShapeMismatch {
            expected: format!("{}-vector", z.len()),
            got: format!("{}-vector", w.len()),
        });
    }
    let mut s = z[0] * w[0];
    for j in 1..z.len() {
        s -= z[j] * w[j];
    }
    Ok(s)
}
