//! Cauchy–Radon suite: the residue identity 𝒞f = (−1)^{k−1}·2π·ℛf on
//! Ξ₊ (n = 2, k = 1), the two-route Radon agreement with the measured
//! κ_radon, and the G-equivariance spot check.

use crate::geometry::{make_generator, Generator, GroupElement, HoroParam};
use crate::goldens::KAPPA_RADON;
use crate::transforms::{
    cauchy_transform, cauchy_transform_translated, radon_direct, radon_paper_display,
    radon_spectral,
};
use crate::verify::report::{CheckRecord, SuiteConfig};
use crate::C64;
use rayon::prelude::*;
use std::f64::consts::PI;
use std::time::Instant;

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let model = cfg.model();
    let mut checks = Vec::new();
    if model.n() != 2 {
        checks.push(CheckRecord::condition(
            "cauchy_radon.model",
            "suite requires the n = 2 (SL(2,R)-type) model",
            false,
            model.n() as f64,
        ));
        return checks;
    }

    // Ξ₊ sample: the base point plus interior and translated points
    let g_interior = make_generator(&model, Generator::Unipotent(vec![C64::new(0.4, 0.0)]))
        .unwrap()
        .compose(&make_generator(&model, Generator::BoostA(C64::new(0.3, 0.0))).unwrap());
    let xi_points: Vec<(String, HoroParam)> = vec![
        ("xi_o".into(), HoroParam::base(&model)),
        (
            "t_0.3".into(),
            HoroParam::from_coset(&model, GroupElement::identity(&model), 0.3).unwrap(),
        ),
        (
            "t_0.5".into(),
            HoroParam::from_coset(&model, GroupElement::identity(&model), 0.5).unwrap(),
        ),
        (
            "g_t_0.4".into(),
            HoroParam::from_coset(&model, g_interior.clone(), 0.4).unwrap(),
        ),
    ];

    // --- Radon two-route: N-quadrature vs spectral density, plus the
    //     measured ratio against the paper display (κ_radon) ---
    for (label, xi) in xi_points.iter().take(2) {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], Some(1e-7));
        match (radon_direct(&f, xi), radon_spectral(&f, xi)) {
            (Ok(a), Ok(b)) => {
                checks.push(
                    CheckRecord::compare(
                        &format!("radon.two_route.{label}"),
                        "N-quadrature vs pi*int h (zeta.x_o)^{(il-1)rho} dl",
                        a.value,
                        b.value,
                        1e-5,
                    )
                    .timed(t0),
                );
            }
            (Err(e), _) | (_, Err(e)) => {
                checks.push(CheckRecord::failed("radon.two_route", label, &e))
            }
        }
    }
    {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], Some(1e-7));
        let xi = &xi_points[0].1;
        let direct = radon_direct(&f, xi).unwrap();
        let display = radon_paper_display(&f, xi).unwrap();
        checks.push(
            CheckRecord::compare(
                "radon.kappa_measured",
                "measured N-quadrature / display ratio against kappa_radon = 2*pi",
                direct.value / display.value,
                C64::new(KAPPA_RADON, 0.0),
                1e-5,
            )
            .timed(t0),
        );
    }

    // --- Theorem: 𝒞f(ξ) = 2π·ℛf(ξ) on Ξ₊, all packets × all points ---
    let combos: Vec<(usize, usize)> = (0..cfg.packets.len().min(3))
        .flat_map(|p| (0..xi_points.len()).map(move |x| (p, x)))
        .collect();
    let theorem_checks: Vec<CheckRecord> = combos
        .par_iter()
        .map(|&(pi_idx, xi_idx)| {
            let t0 = Instant::now();
            let f = cfg.packet(&cfg.packets[pi_idx], Some(5e-4));
            let (label, xi) = &xi_points[xi_idx];
            let name = format!("cauchy_radon.theorem42.p{pi_idx}.{label}");
            match (cauchy_transform(&f, xi), radon_direct(&f, xi)) {
                (Ok(c), Ok(r)) => CheckRecord::compare(
                    &name,
                    "C(f)(xi) = (-1)^{k-1} 2 pi R(f)(xi), n = 2k = 2",
                    c.value,
                    2.0 * PI * r.value,
                    5e-3,
                )
                .timed(t0),
                (Err(e), _) | (_, Err(e)) => CheckRecord::failed(&name, "theorem 4.2", &e),
            }
        })
        .collect();
    checks.extend(theorem_checks);

    // --- equivariance spot check: 𝒞(L_g f)(g·ξ_o) = 𝒞f(ξ_o) ---
    {
        let t0 = Instant::now();
        let f = cfg.packet(&cfg.packets[0], Some(5e-4));
        let g = make_generator(&model, Generator::BoostA(C64::new(0.25, 0.0)))
            .unwrap()
            .compose(
                &make_generator(&model, Generator::Unipotent(vec![C64::new(-0.3, 0.0)])).unwrap(),
            );
        let xi = HoroParam::base(&model);
        match (
            cauchy_transform_translated(&f, &xi.translate(&g), &g),
            cauchy_transform(&f, &xi),
        ) {
            (Ok(a), Ok(b)) => checks.push(
                CheckRecord::compare(
                    "cauchy.g_equivariance",
                    "C(L_g f)(g xi_o) = C(f)(xi_o)",
                    a.value,
                    b.value,
                    1e-3,
                )
                .timed(t0),
            ),
            (Err(e), _) | (_, Err(e)) => {
                checks.push(CheckRecord::failed("cauchy.g_equivariance", "spot check", &e))
            }
        }
    }

    checks
}
