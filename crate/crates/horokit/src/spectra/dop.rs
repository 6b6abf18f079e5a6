//! The spectral pseudo-differential operator 𝒟: it replaces the spherical
//! function in a 𝒲-invariant spectral superposition by the bare Weyl sum
//! of exponentials,
//!
//!   (𝒟F)(Z) = ∫_{i𝔞₊*} h(λ) Σ_{w∈𝒲} e^{λ(wZ)} |c(λ)|^{−2} dλ,
//!
//! for tube points Z ∈ 𝔞 + i·2Ω_H. Only this spectral definition is
//! implemented; the differential form on complex groups is out of scope.

use super::cfun::plancherel_density;
use super::profile::SpectralProfile;
use crate::error::Result;
use crate::geometry::RankOneModel;
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::C64;

/// Apply 𝒟 to the superposition with spectral density `h` (a profile in
/// ℓ) at the tube point Z = z·Z_vec, z = s + ix with |x| < π.
///
/// At λ = iℓρ the Weyl sum is e^{iℓρ(Z)z} + e^{−iℓρ(Z)z}.
pub fn d_operator(
    h: &SpectralProfile,
    z_tube: C64,
    model: &RankOneModel,
    rel_tol: f64,
) -> Result<C64> {
    let rho = model.rho();
    // the Weyl exponentials grow like e^{ρ|Im z|ℓ}, which shifts a
    // gaussian profile's effective support outward by ρ|Im z|σ²
    let radius =
        h.support_radius(1e-16) + rho * z_tube.im.abs() * h.sigma * h.sigma + 2.0 * h.sigma;
    let spec = QuadratureSpec::new(Domain::Finite {
        a: 0.0,
        b: radius,
    })
    .with_tols(rel_tol, 1e-13)
    .with_budget(4000);
    let res = integrate(
        |ell| {
            let weyl_sum = (C64::new(0.0, ell * rho) * z_tube).exp()
                + (C64::new(0.0, -ell * rho) * z_tube).exp();
            weyl_sum * (h.eval(ell) * plancherel_density(ell))
        },
        &spec,
    )?;
    Ok(res.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn model() -> RankOneModel {
        RankOneModel::sl2r()
    }

    #[test]
    fn at_the_origin_the_exponentials_are_one() {
        let h = SpectralProfile::gaussian(1.0);
        let v = d_operator(&h, C64::new(0.0, 0.0), &model(), 1e-11).unwrap();
        let spec = QuadratureSpec::new(Domain::Finite { a: 0.0, b: 12.0 }).with_tols(1e-11, 1e-13);
        let oracle = integrate(
            |l| C64::new(2.0 * h.eval(l) * plancherel_density(l), 0.0),
            &spec,
        )
        .unwrap();
        assert!((v - oracle.value).norm() <= 1e-9 * oracle.value.norm());
    }

    #[test]
    fn monotone_approach_to_the_extreme_point() {
        // Z = i·(1−ε)·2Z_H: the Weyl sum 2cosh((1−ε)πℓρ(Z)) increases to
        // |𝒲_H|·COSH(ℓ) as ε → 0
        let h = SpectralProfile::gaussian(0.8);
        let m = model();
        let spec = QuadratureSpec::new(Domain::Finite { a: 0.0, b: 12.0 }).with_tols(1e-11, 1e-13);
        let limit = integrate(
            |l| {
                C64::new(
                    h.eval(l)
                        * super::super::spherical::cosh_weight(l, &m)
                        * plancherel_density(l),
                    0.0,
                )
            },
            &spec,
        )
        .unwrap()
        .value
        .re;
        let mut last = 0.0;
        for &eps in &[0.2, 0.1, 0.05] {
            let z = C64::new(0.0, (1.0 - eps) * std::f64::consts::PI);
            let v = d_operator(&h, z, &m, 1e-11).unwrap().re;
            assert!(v > last, "not monotone at eps = {eps}");
            assert!(v < limit * (1.0 + 1e-9), "exceeds the COSH limit");
            last = v;
        }
        assert!(last > 0.8 * limit);
    }

    #[test]
    fn linearity_in_the_profile() {
        let m = model();
        let h1 = SpectralProfile::gaussian_poly(1.0, vec![1.0]);
        let h2 = SpectralProfile::gaussian_poly(1.0, vec![0.0, 0.5]);
        let sum = SpectralProfile::gaussian_poly(1.0, vec![1.0, 0.5]);
        let z = C64::new(0.3, 1.1);
        let a = d_operator(&h1, z, &m, 1e-12).unwrap();
        let b = d_operator(&h2, z, &m, 1e-12).unwrap();
        let c = d_operator(&sum, z, &m, 1e-12).unwrap();
        assert!((a + b - c).norm() <= 1e-11 * c.norm());
    }
}
