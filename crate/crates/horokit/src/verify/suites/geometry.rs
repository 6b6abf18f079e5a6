//! Geometry suite: Iwasawa round-trips, complex convexity, the
//! no-real-points separation of Ξ_c from Y, incidence symmetry, group
//! laws and the f_λ covariance.

use crate::geometry::{
    eval_f_lambda, horosphere_contains, iwasawa_point, make_generator, minkowski_pair, sample_xi,
    sample_y, Generator, GroupElement, SampleRanges, WeylElement,
};
use crate::verify::report::{CheckRecord, SuiteConfig};
use crate::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_2;
use std::time::Instant;

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut checks = Vec::new();
    let model = cfg.model();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    // --- Iwasawa round-trip on random strip points (criterion 12) ---
    {
        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        for _ in 0..cfg.grids.iwasawa_points {
            let v: Vec<C64> = (0..model.n() - 1)
                .map(|_| C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
                .collect();
            let w = C64::new(
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-1.4..1.4), // |Im w| < π/2
            );
            let nv = make_generator(&model, Generator::Unipotent(v)).unwrap();
            let aw = make_generator(&model, Generator::BoostA(w)).unwrap();
            let z = nv.compose(&aw).apply_point(&model.x_o());
            let f = iwasawa_point(&model, &z).unwrap();
            let back = f.reconstruct(&model).unwrap();
            worst = worst.max((back.0 - z.0).map(|c| c.norm()).max());
        }
        checks.push(
            CheckRecord::upper_bound(
                "iwasawa.round_trip",
                "n(z) a(z)·x_o reproduces z on random strip points",
                worst,
                1e-10,
            )
            .timed(t0),
        );
    }

    // --- complex convexity: Im log a(g exp(iZ)x_o) ∈ conv(W·Z) ---
    {
        let t0 = Instant::now();
        let mut worst_excess: f64 = 0.0;
        for _ in 0..cfg.grids.convexity_points {
            let g = {
                let v: Vec<C64> = (0..model.n() - 1)
                    .map(|_| C64::new(rng.gen_range(-2.0..2.0), 0.0))
                    .collect();
                let s = rng.gen_range(-2.0..2.0);
                let nv = make_generator(&model, Generator::Unipotent(v)).unwrap();
                let a = make_generator(&model, Generator::BoostA(C64::new(s, 0.0))).unwrap();
                nv.compose(&a)
            };
            let theta = rng.gen_range(1e-3..FRAC_PI_2 - 1e-3);
            let az = make_generator(&model, Generator::BoostA(C64::new(0.0, theta))).unwrap();
            let z = g.compose(&az).apply_point(&model.x_o());
            let f = iwasawa_point(&model, &z).unwrap();
            worst_excess = worst_excess.max(f.w.im.abs() - theta);
        }
        checks.push(
            CheckRecord::upper_bound(
                "convexity.containment",
                "Im log a(G exp(iZ)x_o) inside [-|Z|, |Z|]",
                worst_excess,
                1e-9,
            )
            .timed(t0),
        );
    }

    // --- separation of Ξ_c from Y (criterion 12) and nonreal pairing ---
    {
        let t0 = Instant::now();
        let n_xi = 100usize;
        let n_y = cfg.grids.separation_pairs / n_xi;
        let xis = sample_xi(
            &model,
            FRAC_PI_2 - 0.1,
            n_xi,
            cfg.seed,
            &SampleRanges::default(),
        )
        .unwrap();
        let ys = sample_y(&model, n_y, cfg.seed + 1, &SampleRanges::default()).unwrap();
        let mut min_sep = f64::INFINITY;
        let mut nonreal_ok = true;
        for xi in &xis {
            for y in &ys {
                let p = minkowski_pair(&xi.zeta, &y.0).unwrap();
                min_sep = min_sep.min((C64::new(1.0, 0.0) - p).norm());
                // ξ·y never lands in R∖{0}
                if p.im.abs() <= 1e-9 && p.norm() > 1e-9 {
                    nonreal_ok = false;
                }
            }
        }
        checks.push(
            CheckRecord::condition(
                "separation.lemma41",
                "min |1 - xi.y| > 0.05 over sampled Xi_c x Y at c = pi/2 - 0.1",
                min_sep > 0.05,
                min_sep,
            )
            .timed(t0),
        );
        checks.push(CheckRecord::condition(
            "separation.nonreal_pairing",
            "xi.y avoids R \\ {0} on all sampled pairs",
            nonreal_ok,
            if nonreal_ok { 1.0 } else { 0.0 },
        ));
    }

    // --- incidence: base relations and transposed-pairing symmetry ---
    {
        let t0 = Instant::now();
        let xi = crate::geometry::HoroParam::base(&model);
        let mut ok = horosphere_contains(&xi, &model.x_o());
        let nv = make_generator(
            &model,
            Generator::Unipotent(vec![C64::new(1.3, 0.0); model.n() - 1]),
        )
        .unwrap();
        ok &= horosphere_contains(&xi, &nv.apply_point(&model.x_o()));
        let at = make_generator(&model, Generator::BoostA(C64::new(0.8, 0.0))).unwrap();
        ok &= !horosphere_contains(&xi, &at.apply_point(&model.x_o()));
        // symmetric pairing on incident/non-incident random pairs
        for k in 0..100 {
            let s = rng.gen_range(-1.5..1.5);
            let g = make_generator(&model, Generator::BoostA(C64::new(s, 0.0)))
                .unwrap()
                .compose(&nv);
            let z = g.apply_point(&model.x_o());
            let xi_g = xi.translate(&g);
            let incident = horosphere_contains(&xi_g, &z);
            let forward = minkowski_pair(&xi_g.zeta, &z.0).unwrap();
            let transposed = minkowski_pair(&z.0, &xi_g.zeta).unwrap();
            ok &= forward == transposed;
            ok &= incident; // g·ξ_o always contains g·x_o
            let _ = k;
        }
        checks.push(
            CheckRecord::condition(
                "incidence.symmetry",
                "z in E(xi) iff xi in S(z): symmetric quadric pairing",
                ok,
                if ok { 1.0 } else { 0.0 },
            )
            .timed(t0),
        );
    }

    // --- group laws ---
    {
        let t0 = Instant::now();
        let z1 = C64::new(0.4, -0.2);
        let z2 = C64::new(-1.1, 0.7);
        let a = make_generator(&model, Generator::BoostA(z1)).unwrap();
        let b = make_generator(&model, Generator::BoostA(z2)).unwrap();
        let sum = make_generator(&model, Generator::BoostA(z1 + z2)).unwrap();
        let defect_a = (a.compose(&b).matrix() - sum.matrix())
            .map(|z| z.norm())
            .max();
        let v1: Vec<C64> = (0..model.n() - 1).map(|j| C64::new(0.3 + j as f64 * 0.2, 0.1)).collect();
        let v2: Vec<C64> = (0..model.n() - 1).map(|j| C64::new(-0.5, 0.25 - j as f64 * 0.1)).collect();
        let n1 = make_generator(&model, Generator::Unipotent(v1.clone())).unwrap();
        let n2 = make_generator(&model, Generator::Unipotent(v2.clone())).unwrap();
        let vs: Vec<C64> = v1.iter().zip(&v2).map(|(x, y)| x + y).collect();
        let n12 = make_generator(&model, Generator::Unipotent(vs)).unwrap();
        let defect_n = (n1.compose(&n2).matrix() - n12.matrix())
            .map(|z| z.norm())
            .max();
        checks.push(
            CheckRecord::upper_bound(
                "group.one_parameter_laws",
                "a_{z+z'} = a_z a_{z'} and n_{v+v'} = n_v n_{v'}",
                defect_a.max(defect_n),
                1e-12,
            )
            .timed(t0),
        );
    }

    // --- f_λ covariance on the dense set ---
    {
        let t0 = Instant::now();
        let lam = C64::new(0.0, 1.7);
        let s = 0.43;
        let base =
            eval_f_lambda(&model, WeylElement::Identity, C64::new(0.2, 0.3), lam).unwrap();
        let shifted =
            eval_f_lambda(&model, WeylElement::Identity, C64::new(0.2 + s, 0.3), lam).unwrap();
        let oracle = (C64::new(s, 0.0) * (lam - 1.0) * model.rho()).exp();
        checks.push(
            CheckRecord::compare(
                "f_lambda.right_a_covariance",
                "f_lambda(xi a_s)/f_lambda(xi) = e^{s(lambda-rho)(Z)}",
                shifted / base,
                oracle,
                1e-12,
            )
            .timed(t0),
        );
    }

    // --- Cauchy kernel invariance under G ---
    {
        let t0 = Instant::now();
        let g = make_generator(&model, Generator::BoostA(C64::new(-0.8, 0.0)))
            .unwrap()
            .compose(
                &make_generator(
                    &model,
                    Generator::Unipotent(vec![C64::new(0.45, 0.0); model.n() - 1]),
                )
                .unwrap(),
            );
        let xi = crate::geometry::HoroParam::base(&model);
        let lhs =
            crate::geometry::cauchy_kernel(&xi.translate(&g), &g.apply_point(&model.y_o()))
                .unwrap();
        let rhs = crate::geometry::cauchy_kernel(&xi, &model.y_o()).unwrap();
        checks.push(
            CheckRecord::compare(
                "kernel.g_invariance",
                "K(g xi, g y) = K(xi, y)",
                lhs,
                rhs,
                1e-12,
            )
            .timed(t0),
        );
        let _ = GroupElement::identity(&model);
    }

    checks
}
