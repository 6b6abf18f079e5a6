//! Spectral and geometric Hardy norms (squared).

use crate::error::Result;
use crate::spectra::{cosh_weight, plancherel_density};
use crate::transforms::WavePacket;
use crate::C64;

/// ‖f‖²_H = ∫₀^∞ |ĥ(ℓ)|² COSH(ℓ) |c(iℓ)|^{−2} dℓ.
pub fn hardy_norm_spectral(f: &WavePacket) -> Result<f64> {
    let model = f.model;
    // spectral_integral supplies one factor of ĥ; the weight carries the other
    let (v, _) = f.spectral_integral(|l| {
        C64::new(
            f.profile.eval(l) * cosh_weight(l, &model) * plancherel_density(l),
            0.0,
        )
    })?;
    Ok(v.re)
}

/// ‖f|_X‖²_{L²} in the same spectral normalization: ∫₀^∞|ĥ|²|c|^{−2}dℓ.
pub fn l2x_norm_spectral(f: &WavePacket) -> Result<f64> {
    let (v, _) =
        f.spectral_integral(|l| C64::new(f.profile.eval(l) * plancherel_density(l), 0.0))?;
    Ok(v.re)
}

/// The geometric-norm scan: values of 𝒟𝐎_{|f|²}(iX)/|𝒲_H| on the grid
/// X = (1−ε)·2Z_H, with the supremum over the grid.
#[derive(Debug, Clone)]
pub struct GeometricNorm {
    pub grid: Vec<(f64, f64)>,
    pub supremum: f64,
}

/// ‖f‖²_H as the supremum of 𝒟𝐎_{|f|²}(iX)/|𝒲_H| over the (1−ε)-scaled
/// extreme points; |𝒲_H| = 1 on the quadric models. Values are
/// guaranteed ≤ the spectral norm and increase monotonically as ε → 0.
pub fn hardy_norm_geometric(f: &WavePacket, epsilons: &[f64]) -> Result<GeometricNorm> {
    let model = f.model;
    let rho = model.rho();
    let mut grid = Vec::with_capacity(epsilons.len());
    let mut supremum = f64::NEG_INFINITY;
    for &eps in epsilons {
        // X = (1−ε)·2Z_H: Weyl sum 2cosh((1−ε)πℓρ(Z)) in the 𝒟-integrand
        let x = (1.0 - eps) * std::f64::consts::PI;
        let (v, _) = f.spectral_integral(|l| {
            let weyl_sum = 2.0 * ((x * l * rho).cosh());
            C64::new(f.profile.eval(l) * weyl_sum * plancherel_density(l), 0.0)
        })?;
        supremum = supremum.max(v.re);
        grid.push((eps, v.re));
    }
    Ok(GeometricNorm { grid, supremum })
}
