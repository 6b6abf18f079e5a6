//! Gutzmer orbital integrals 𝐎_{|f|²} on the crown: the spectral route
//! ∫|ĥ|² φ_λ(exp Z) |c|^{−2} dℓ (primary) against the direct G-orbit
//! quadrature in K A⁺ K coordinates (the acceptance-test oracle).

use crate::error::{Error, Result};
use crate::numerics::{integrate2d, Domain, QuadratureSpec};
use crate::spectra::{plancherel_density, spherical_fn_tol};
use crate::transforms::WavePacket;
use crate::C64;

/// 𝐎_{|f|²}(Z) by the Gutzmer spectral formula, Z = z_tube·Z_vec in
/// 𝔞 + i·2Ω_H (|Im z| < π).
pub fn orbital_integral_spectral(f: &WavePacket, z_tube: C64) -> Result<f64> {
    if z_tube.im.abs() >= std::f64::consts::PI {
        return Err(Error::ConfigInvalid(format!(
            "|Im z| = {} outside 2*Omega_H",
            z_tube.im.abs()
        )));
    }
    let model = f.model;
    let u = z_tube.cosh(); // invariant of exp(zZ)·x_o
    let phi_tol = f.phi_tol();
    let (v, _) = f.spectral_integral(|l| {
        match spherical_fn_tol(&model, l, u, phi_tol) {
            Ok(phi) => phi * (f.profile.eval(l) * plancherel_density(l)),
            Err(_) => C64::new(f64::NAN, 0.0),
        }
    })?;
    Ok(v.re)
}

/// Direct route ∫_G |f(g·exp(i·x/2·Z)·x_o)|² dg in K A⁺ K coordinates
/// (n = 2): ∫₀^∞∫₀^{2π} |f(a_r k_θ a'·x_o)|² sinh r dθ dr. Carries the
/// Haar-normalization constant κ_gutzmer relative to the spectral route.
pub fn orbital_integral_direct(f: &WavePacket, x_imag: f64) -> Result<f64> {
    let model = &f.model;
    if model.n() != 2 {
        return Err(Error::ConfigInvalid(
            "direct orbital quadrature is implemented on the n = 2 model".into(),
        ));
    }
    if x_imag.abs() >= std::f64::consts::PI {
        return Err(Error::ConfigInvalid("x outside 2*Omega_H".into()));
    }
    // a' = exp(i(x/2)Z): a'·x_o = (cos(x/2), 0, i sin(x/2))
    let half = 0.5 * x_imag;
    let (c0, c2) = (C64::new(half.cos(), 0.0), C64::new(0.0, half.sin()));
    // r-decay: |f|² falls off superpolynomially in e^r; reuse the
    // horospherical tail radius in the variable e^{r} ~ v²
    let r_max = 2.0 * f.n_tail_radius(f.quad.abs_tol * 0.1).ln() + 6.0;
    let outer = QuadratureSpec {
        domain: Domain::Finite { a: 0.0, b: r_max },
        ..f.quad
    };
    let inner = QuadratureSpec {
        domain: Domain::Finite {
            a: 0.0,
            b: 2.0 * std::f64::consts::PI,
        },
        ..f.quad
    };
    let res = integrate2d(
        |r, theta| {
            // u = (a_r k_θ a'·x_o)·x_o = cos(x/2)·cosh r + i sin(x/2)·cosθ·sinh r
            let u = r.cosh() * c0 + (r.sinh() * theta.cos()) * c2;
            match f.eval_u(u) {
                Ok(v) => C64::new(v.value.norm_sqr() * r.sinh(), 0.0),
                Err(_) => C64::new(f64::NAN, 0.0),
            }
        },
        &outer,
        &inner,
    )?;
    Ok(res.value.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::RankOneModel;
    use crate::goldens::KAPPA_GUTZMER;
    use crate::hardy::l2x_norm_spectral;
    use crate::spectra::SpectralProfile;

    fn packet() -> WavePacket {
        WavePacket::new(RankOneModel::sl2r(), SpectralProfile::gaussian(0.7))
            .with_quad_tols(1e-5, 1e-7)
    }

    #[test]
    fn at_the_origin_the_orbital_integral_is_the_l2_mass() {
        let f = packet();
        let o = orbital_integral_spectral(&f, C64::new(0.0, 0.0)).unwrap();
        let l2 = l2x_norm_spectral(&f).unwrap();
        assert!((o - l2).abs() <= 1e-10 * l2);
    }

    #[test]
    fn monotone_along_the_imaginary_axis() {
        let f = packet();
        let mut last = 0.0;
        for &s in &[0.2, 0.5, 0.8] {
            let v = orbital_integral_spectral(&f, C64::new(0.0, s * std::f64::consts::PI))
                .unwrap();
            assert!(v > last);
            last = v;
        }
    }

    #[test]
    fn direct_and_spectral_routes_match_through_the_haar_constant() {
        let f = packet();
        // a' = exp(i·0.25π/2·...): x = 0.5·Z_H-scale interior point
        let x = 0.5 * std::f64::consts::FRAC_PI_2;
        let direct = orbital_integral_direct(&f, x).unwrap();
        let spectral = orbital_integral_spectral(&f, C64::new(0.0, x)).unwrap();
        let ratio = direct / spectral;
        assert!(
            (ratio - KAPPA_GUTZMER).abs() <= 1e-2 * KAPPA_GUTZMER,
            "ratio {ratio} vs {KAPPA_GUTZMER}"
        );
    }
}
