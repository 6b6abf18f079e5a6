//! The K-invariant reproducing kernel of ℋ²(D),
//!
//!   𝒦(z, w) = ∫₀^∞ φ_{iℓ}(z) φ_{iℓ}(w̄) dμ(ℓ),  dμ = |c|^{−2}/COSH dℓ,
//!
//! with the reproducing pairing ⟨f, K_w⟩ computed spectrally (the
//! theorem's own route; D carries no given volume form).

use crate::error::Result;
use crate::geometry::QuadricPoint;
use crate::numerics::{integrate, Domain, QuadratureSpec};
use crate::spectra::{mu_weight, spherical_fn_tol};
use crate::transforms::WavePacket;
use crate::C64;

/// 𝒦(z, w) for z, w ∈ D given by their invariants.
pub fn reproducing_kernel(
    f_template: &WavePacket,
    u_z: C64,
    u_w: C64,
) -> Result<C64> {
    let model = f_template.model;
    let phi_tol = f_template.phi_tol();
    // kernel spectral mass decays like e^{−πℓρ}·poly through 1/COSH even
    // without a packet profile; truncate accordingly
    let radius = (40.0 / model.rho()).max(20.0);
    let spec = QuadratureSpec {
        domain: Domain::Finite { a: 0.0, b: radius },
        ..f_template.quad
    };
    let res = integrate(
        |l| {
            let a = spherical_fn_tol(&model, l, u_z, phi_tol);
            let b = spherical_fn_tol(&model, l, u_w.conj(), phi_tol);
            match (a, b) {
                (Ok(pa), Ok(pb)) => pa * pb * mu_weight(l, &model),
                _ => C64::new(f64::NAN, 0.0),
            }
        },
        &spec,
    )?;
    Ok(res.value)
}

/// ⟨f, K_w⟩_H assembled spectrally: the K_w profile is
/// ĥ_{K_w}(ℓ) = φ_{iℓ}(w̄)/COSH(ℓ), so the Hardy pairing collapses to
/// ∫₀^∞ ĥ(ℓ)·φ_{iℓ}(w)·|c|^{−2} dℓ; evaluated literally (conjugations
/// kept explicit) so the identity ⟨f, K_w⟩ = f(w) is a real check.
pub fn reproducing_pairing(f: &WavePacket, u_w: C64) -> Result<C64> {
    let model = f.model;
    let phi_tol = f.phi_tol();
    let (v, _) = f.spectral_integral(|l| {
        match spherical_fn_tol(&model, l, u_w.conj(), phi_tol) {
            Ok(phi_wbar) => {
                // conj(ĥ_{K_w}·COSH) · |c|^{−2} with ĥ real
                phi_wbar.conj() * crate::spectra::plancherel_density(l)
            }
            Err(_) => C64::new(f64::NAN, 0.0),
        }
    })?;
    Ok(v)
}

/// Eigenvalues of the Hermitian Gram matrix [𝒦(z_i, z_j)] for a point
/// triple, through the real symmetric embedding.
pub fn gram_matrix_eigenvalues(
    f_template: &WavePacket,
    points: &[QuadricPoint],
) -> Result<Vec<f64>> {
    let n = points.len();
    let mut gram = nalgebra::DMatrix::<C64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] =
                reproducing_kernel(f_template, points[i].invariant(), points[j].invariant())?;
        }
    }
    // embed the Hermitian matrix H as the real symmetric [[Re H, −Im H],
    // [Im H, Re H]]; its spectrum is that of H, doubled
    let mut real = nalgebra::DMatrix::<f64>::zeros(2 * n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            real[(i, j)] = gram[(i, j)].re;
            real[(i, j + n)] = -gram[(i, j)].im;
            real[(i + n, j)] = gram[(i, j)].im;
            real[(i + n, j + n)] = gram[(i, j)].re;
        }
    }
    let sym = nalgebra::SymmetricEigen::new(real);
    let mut eigs: Vec<f64> = sym.eigenvalues.iter().copied().collect();
    eigs.sort_by(f64::total_cmp);
    Ok(eigs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{make_generator, Generator, RankOneModel};
    use crate::spectra::SpectralProfile;
    use crate::transforms::eval_packet;

    fn template() -> WavePacket {
        WavePacket::new(RankOneModel::sl2r(), SpectralProfile::gaussian(1.0))
            .with_quad_tols(1e-9, 1e-11)
    }

    fn crown_point(theta: f64) -> QuadricPoint {
        let m = RankOneModel::sl2r();
        make_generator(&m, Generator::BoostA(C64::new(0.0, theta)))
            .unwrap()
            .apply_point(&m.x_o())
    }

    #[test]
    fn kernel_at_the_base_point_is_the_mu_mass() {
        let f = template();
        let k = reproducing_kernel(&f, C64::new(1.0, 0.0), C64::new(1.0, 0.0)).unwrap();
        let spec = QuadratureSpec::new(Domain::Finite { a: 0.0, b: 60.0 }).with_tols(1e-11, 1e-13);
        let oracle = integrate(
            |l| C64::new(mu_weight(l, &f.model), 0.0),
            &spec,
        )
        .unwrap();
        assert!((k - oracle.value).norm() <= 1e-8 * oracle.value.norm());
    }

    #[test]
    fn hermitian_symmetry() {
        let f = template();
        let u1 = crown_point(0.3).invariant();
        let u2 = crown_point(0.6).invariant();
        let a = reproducing_kernel(&f, u1, u2).unwrap();
        let b = reproducing_kernel(&f, u2, u1).unwrap();
        assert!((a - b.conj()).norm() <= 1e-10 * a.norm());
    }

    #[test]
    fn reproducing_property_for_a_gaussian_packet() {
        let f = template();
        let w = crown_point(0.4);
        let direct = eval_packet(&f, &w).unwrap().value;
        let paired = reproducing_pairing(&f, w.invariant()).unwrap();
        assert!(
            (direct - paired).norm() <= 1e-4 * direct.norm(),
            "{direct} vs {paired}"
        );
    }

    #[test]
    fn gram_positivity_on_a_triple() {
        let f = template();
        let pts = vec![
            RankOneModel::sl2r().x_o(),
            crown_point(0.3),
            crown_point(0.6),
        ];
        let eigs = gram_matrix_eigenvalues(&f, &pts).unwrap();
        assert!(eigs.iter().all(|&e| e > 0.0), "{eigs:?}");
    }
}
