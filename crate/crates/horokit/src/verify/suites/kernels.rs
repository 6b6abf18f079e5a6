//! Kernel suite: the reproducing property and Gram positivity of the
//! K-invariant kernel of ℋ²(D), and the Λ-isometry onto the strip Hardy
//! space (norm-ratio constancy, τ(𝒲)-covariance, the commutative
//! diagram).

use crate::geometry::{make_generator, Generator, QuadricPoint};
use crate::goldens::KAPPA_LAMBDA;
use crate::hardy::{
    gram_matrix_eigenvalues, hardy_norm_spectral, lambda_diagram_paths, lambda_tau_covariance,
    lambda_tube_norm_sq, reproducing_kernel, reproducing_pairing,
};
use crate::transforms::eval_packet;
use crate::verify::report::{CheckRecord, SuiteConfig};
use crate::C64;
use std::time::Instant;

fn crown_point(cfg: &SuiteConfig, theta: f64) -> QuadricPoint {
    let model = cfg.model();
    make_generator(&model, Generator::BoostA(C64::new(0.0, theta)))
        .unwrap()
        .apply_point(&model.x_o())
}

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let model = cfg.model();
    let mut checks = Vec::new();
    if model.n() != 2 {
        checks.push(CheckRecord::condition(
            "kernels.model",
            "suite requires the n = 2 (SL(2,R)-type) model",
            false,
            model.n() as f64,
        ));
        return checks;
    }

    // --- reproducing property at three interior points (criterion 9) ---
    for &theta in &[0.3f64, 0.45, 0.6] {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], None);
        let w = crown_point(cfg, theta);
        match (reproducing_pairing(&f, w.invariant()), eval_packet(&f, &w)) {
            (Ok(paired), Ok(direct)) => checks.push(
                CheckRecord::compare(
                    &format!("kernel.reproducing.theta_{theta}"),
                    "<f, K_w>_H = f(w) assembled spectrally",
                    paired,
                    direct.value,
                    1e-4,
                )
                .timed(t0),
            ),
            (Err(e), _) | (_, Err(e)) => checks.push(CheckRecord::failed(
                &format!("kernel.reproducing.theta_{theta}"),
                "reproducing property",
                &e,
            )),
        }
    }

    // --- Hermitian symmetry and Gram positivity ---
    {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], None);
        let u1 = crown_point(cfg, 0.3).invariant();
        let u2 = crown_point(cfg, 0.6).invariant();
        let a = reproducing_kernel(&f, u1, u2).unwrap();
        let b = reproducing_kernel(&f, u2, u1).unwrap();
        checks.push(
            CheckRecord::compare(
                "kernel.hermitian",
                "K(z, w) = conj K(w, z)",
                a,
                b.conj(),
                1e-10,
            )
            .timed(t0),
        );

        let t0 = Instant::now();
        let pts = vec![model.x_o(), crown_point(cfg, 0.3), crown_point(cfg, 0.6)];
        let eigs = gram_matrix_eigenvalues(&f, &pts).unwrap();
        let min_eig = eigs.first().copied().unwrap_or(f64::NAN);
        checks.push(
            CheckRecord::condition(
                "kernel.gram_positive",
                "3x3 Gram matrix at {x_o, exp(0.3i)x_o, exp(0.6i)x_o} positive definite",
                min_eig > 0.0,
                min_eig,
            )
            .timed(t0),
        );
    }

    // --- Λ-map unitarity: norm ratio constant across packets
    //     (criterion 10) ---
    {
        let t0 = Instant::now();
        let mut ratios = Vec::new();
        for p in cfg.packets.iter().take(3) {
            let f = cfg.packet(p, None);
            let tube = lambda_tube_norm_sq(&f).unwrap();
            let hardy = hardy_norm_spectral(&f).unwrap();
            ratios.push(tube / hardy);
        }
        let drift = ratios
            .iter()
            .map(|r| (r - ratios[0]).abs() / ratios[0])
            .fold(0.0f64, f64::max);
        checks.push(
            CheckRecord::upper_bound(
                "lambda.norm_ratio_constancy",
                "||Lambda f||^2 / ||f||_H^2 constant across packets",
                drift,
                1e-3,
            )
            .timed(t0),
        );
        checks.push(CheckRecord::compare(
            "lambda.kappa_measured",
            "measured Lambda norm ratio against kappa_lambda = 8 pi^4",
            C64::new(ratios[0], 0.0),
            C64::new(KAPPA_LAMBDA, 0.0),
            1e-6,
        ));
    }

    // --- τ(𝒲)-covariance through the c-function multiplier ---
    {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], None);
        let mut worst: f64 = 0.0;
        for &ell in &[0.5, 1.0, 3.0] {
            let (plus, minus, m) = lambda_tau_covariance(&f, ell).unwrap();
            worst = worst.max((plus - m * minus).norm() / plus.norm());
        }
        checks.push(
            CheckRecord::upper_bound(
                "lambda.tau_covariance",
                "F(l) = m(eps, l)·F(-l) with m = c(il)/c(-il)",
                worst,
                1e-8,
            )
            .timed(t0),
        );
    }

    // --- the commutative diagram F_A∘Λ = D_a∘F_X (criterion 10) ---
    for &ell in &[0.8f64, 2.0] {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], None).with_quad_tols(1e-11, 1e-13);
        match lambda_diagram_paths(&f, ell) {
            Ok((p1, p2)) => checks.push(
                CheckRecord::compare(
                    &format!("lambda.diagram.l_{ell}"),
                    "F_A(Lambda f) vs D_a(F_X f): A-side vs X-side Plancherel quadratures",
                    p1,
                    p2,
                    1e-8,
                )
                .timed(t0),
            ),
            Err(e) => checks.push(CheckRecord::failed(
                &format!("lambda.diagram.l_{ell}"),
                "diagram",
                &e,
            )),
        }
    }

    checks
}
