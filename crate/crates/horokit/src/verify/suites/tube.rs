//! Strip-domain Hardy suite: the d = 1 Cauchy–Szegő kernel against its
//! cosh closed form, the spectral reproducing property, the COSH_y
//! convexity bound, multiplier cocycles and the τ(𝒲)-projection.

use crate::tube::{
    project_tau_invariant, tube_cosh, tube_hardy_norm, tube_kernel, tube_kernel_closed_form_d1,
    tube_norm_at_height, tube_reproducing_pairing, Multiplier, ReflectionModel, TubeFunction,
};
use crate::verify::report::{CheckRecord, SuiteConfig};
use crate::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use std::time::Instant;

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut checks = Vec::new();
    let model = ReflectionModel::line(1.0).unwrap();
    let trivial = Multiplier::trivial();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x7b5e);

    // --- kernel vs closed form at the origin and 25 random pairs
    //     (criterion 11) ---
    {
        let t0 = Instant::now();
        let k0 = tube_kernel(
            &model,
            &trivial,
            &[C64::new(0.0, 0.0)],
            &[C64::new(0.0, 0.0)],
        )
        .unwrap();
        checks.push(
            CheckRecord::compare(
                "tube.kernel_origin",
                "K(0,0) = (2pi)^{-1/2} integral sech(2xi) dxi = sqrt(pi/2)/2",
                k0,
                C64::new((PI / 2.0).sqrt() / 2.0, 0.0),
                1e-9,
            )
            .timed(t0),
        );

        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        for _ in 0..25 {
            let z = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.7..0.7));
            let w = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-0.7..0.7));
            let quad = tube_kernel(&model, &trivial, &[z], &[w]).unwrap();
            let closed = tube_kernel_closed_form_d1(z, w);
            worst = worst.max((quad - closed).norm() / closed.norm());
        }
        checks.push(
            CheckRecord::upper_bound(
                "tube.kernel_closed_form",
                "quadrature kernel vs sqrt(pi/2) cosh(pi z/4)cosh(pi wbar/4)/(cosh(pi z/2)+cosh(pi wbar/2)) at 25 points",
                worst,
                1e-8,
            )
            .timed(t0),
        );
    }

    // --- reproducing property of a τ(𝒲)-invariant gaussian ---
    {
        let t0 = Instant::now();
        let f = TubeFunction::new(model.clone(), 1.0, |l| {
            C64::new((-l[0] * l[0] / 2.0).exp(), 0.0)
        });
        let w = [C64::new(0.0, 0.4)];
        let paired = tube_reproducing_pairing(&f, &trivial, &w).unwrap();
        let direct = f.eval(&w).unwrap();
        checks.push(
            CheckRecord::compare(
                "tube.reproducing",
                "<F, K_w> = F(w) at w = 0.4i",
                paired,
                direct,
                1e-6,
            )
            .timed(t0),
        );
    }

    // --- COSH_y ≤ COSH convexity on grids (criterion 11) ---
    {
        let t0 = Instant::now();
        let mut worst_excess: f64 = 0.0;
        for k in 0..19 {
            let y = -0.9 + 0.1 * k as f64;
            for j in 0..25 {
                let l = -3.0 + 0.25 * j as f64;
                worst_excess = worst_excess
                    .max(tube_cosh(&model, &[y], &[l]) - tube_cosh(&model, &[1.0], &[l]));
            }
        }
        checks.push(
            CheckRecord::upper_bound(
                "tube.cosh_convexity",
                "COSH_y(l) <= COSH(l) for y in Omega",
                worst_excess,
                1e-13,
            )
            .timed(t0),
        );
        checks.push(CheckRecord::compare(
            "tube.cosh_closed_form",
            "d = 1 COSH(l) = cosh(2l)",
            C64::new(tube_cosh(&model, &[1.0], &[0.8]), 0.0),
            C64::new((1.6f64).cosh(), 0.0),
            1e-13,
        ));
    }

    // --- norm routes: gaussian moment oracle and sup-attainment ---
    {
        let t0 = Instant::now();
        let f = TubeFunction::new(model.clone(), 1.0 / 2.0f64.sqrt(), |l| {
            C64::new((-l[0] * l[0] / 2.0).exp(), 0.0)
        });
        let n = tube_hardy_norm(&f).unwrap();
        let oracle = PI.sqrt() * 1.0f64.exp() / (2.0 * PI).sqrt();
        checks.push(
            CheckRecord::compare(
                "tube.norm_gaussian_oracle",
                "integral e^{-l^2} cosh(2l) dl_w = sqrt(pi) e / sqrt(2 pi)",
                C64::new(n, 0.0),
                C64::new(oracle, 0.0),
                1e-8,
            )
            .timed(t0),
        );

        let t0 = Instant::now();
        let mut monotone = true;
        let mut last = 0.0;
        for &eps in &[0.3, 0.15, 0.05] {
            let v = tube_norm_at_height(&f, &[1.0 - eps]).unwrap();
            monotone &= v > last && v <= n * (1.0 + 1e-12);
            last = v;
        }
        checks.push(
            CheckRecord::condition(
                "tube.sup_route_monotone",
                "height route increases toward the COSH route as y -> extreme points",
                monotone,
                last / n,
            )
            .timed(t0),
        );
    }

    // --- multiplier cocycle law on the group table ---
    {
        let t0 = Instant::now();
        let sign_char = Multiplier::new(|s, _| C64::new(if s == 0 { 1.0 } else { -1.0 }, 0.0));
        let ok = sign_char
            .verify(&model, &[vec![0.4], vec![-1.7], vec![2.3]])
            .is_ok();
        checks.push(
            CheckRecord::condition(
                "tube.multiplier_cocycle",
                "m(sw,l) = m(s,wl) m(w,l) and |m| = 1 on the group table",
                ok,
                if ok { 1.0 } else { 0.0 },
            )
            .timed(t0),
        );
    }

    // --- τ(𝒲)-projection: idempotent, norm non-increasing ---
    {
        let t0 = Instant::now();
        let mut ok = true;
        let mut max_growth: f64 = 0.0;
        for k in 0..5 {
            let a = 0.3 + 0.2 * k as f64;
            let f = TubeFunction::new(model.clone(), 1.0, move |l| {
                C64::new(0.0, a * l[0]).exp() * (-l[0] * l[0] / 2.0).exp()
            });
            let p = project_tau_invariant(&f, &trivial);
            let pp = project_tau_invariant(&p, &trivial);
            for &l in &[0.0, 0.6, 1.4] {
                ok &= (pp.profile(&[l]) - p.profile(&[l])).norm() < 1e-12;
            }
            let np = tube_hardy_norm(&p).unwrap();
            let nf = tube_hardy_norm(&f).unwrap();
            max_growth = max_growth.max(np / nf);
            ok &= np <= nf * (1.0 + 1e-10);
        }
        checks.push(
            CheckRecord::condition(
                "tube.projection",
                "tau(W)-projection idempotent and norm non-increasing on 5 profiles",
                ok,
                max_growth,
            )
            .timed(t0),
        );
    }

    // --- experimental d = 2 sign-flip model: convexity only ---
    {
        let t0 = Instant::now();
        let m2 = ReflectionModel::sign_flips_2d([1.0, 0.5]).unwrap();
        let mut worst: f64 = 0.0;
        for _ in 0..50 {
            let y = [rng.gen_range(-0.99..0.99), rng.gen_range(-0.49..0.49)];
            let l = [rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)];
            worst = worst.max(tube_cosh(&m2, &y, &l) - tube_cosh(&m2, &m2.y_o.clone(), &l));
        }
        checks.push(
            CheckRecord::upper_bound(
                "tube.experimental_2d_convexity",
                "sign-flip d = 2 model (experimental, excluded from acceptance): COSH_y <= COSH",
                worst,
                1e-12,
            )
            .timed(t0),
        );
    }

    checks
}
