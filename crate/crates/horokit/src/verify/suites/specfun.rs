//! Special-function suite: Γ recurrence/reflection, the Plancherel
//! two-route identity, the Beta-integral lemma, the spherical boundary
//! value, the C₁ derivation chain and the κ-constancy of the inversion
//! multiplier.

use crate::numerics::{cbeta, cgamma, gauss_2f1, integrate, Domain, QuadratureSpec};
use crate::spectra::{
    c1_constant, c1_coth_form, c2_constant, cosh_weight, kappa_ratio, multiplier_g,
    plancherel_density, plancherel_gamma_route, spherical_at_y_o, spherical_fn,
    spherical_k_integral_route,
};
use crate::verify::report::{CheckRecord, SuiteConfig};
use crate::C64;
use std::f64::consts::PI;
use std::time::Instant;

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let mut checks = Vec::new();
    let model = cfg.model();

    // --- Γ: recurrence and reflection (criterion 1) ---
    {
        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        for &re in &[-3.3, -0.7, 0.3, 1.5, 7.0, 24.5, 48.0] {
            for &im in &[-45.0, -8.0, -0.5, 0.4, 0.9, 12.0, 49.0] {
                let z = C64::new(re, im);
                let lhs = cgamma(z + 1.0).unwrap();
                let rhs = z * cgamma(z).unwrap();
                worst = worst.max((lhs - rhs).norm() / rhs.norm());
            }
        }
        checks.push(
            CheckRecord::upper_bound("gamma.recurrence", "Gamma(z+1) = z Gamma(z)", worst, 1e-11)
                .timed(t0),
        );

        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        for &re in &[-6.4, -2.2, 0.3, 0.49] {
            for &im in &[-20.0, -1.0, 0.4, 15.0] {
                let z = C64::new(re, im);
                let lhs = cgamma(z).unwrap() * cgamma(C64::new(1.0, 0.0) - z).unwrap();
                let rhs = PI / (PI * z).sin();
                worst = worst.max((lhs - rhs).norm() / rhs.norm());
            }
        }
        checks.push(
            CheckRecord::upper_bound(
                "gamma.reflection",
                "Gamma(z)Gamma(1-z) = pi/sin(pi z)",
                worst,
                1e-11,
            )
            .timed(t0),
        );
    }

    // --- Plancherel density: Γ route vs closed form on (0, 30] ---
    {
        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        let mut ell = 0.25;
        while ell <= 30.0 {
            let a = plancherel_density(ell);
            let b = plancherel_gamma_route(ell).unwrap();
            worst = worst.max((a - b).abs() / a);
            ell += 0.25;
        }
        checks.push(
            CheckRecord::upper_bound(
                "plancherel.two_route",
                "|c(il)|^-2 = (pi l/2) tanh(pi l/2) via Gamma quotients",
                worst,
                1e-10,
            )
            .timed(t0),
        );
    }

    // --- basic quadrature oracles ---
    {
        let t0 = Instant::now();
        let s = QuadratureSpec::new(Domain::HalfLine { a: 0.0, decay: 1.0 }).with_tols(1e-12, 1e-13);
        let v = integrate(|x| C64::new((-x).exp(), 0.0), &s).unwrap();
        checks.push(
            CheckRecord::compare(
                "quad.exponential",
                "integral of e^-x over [0,inf) = 1",
                v.value,
                C64::new(1.0, 0.0),
                1e-10,
            )
            .timed(t0),
        );

        let t0 = Instant::now();
        let s = QuadratureSpec::new(Domain::RealLine { decay: 2.0 }).with_tols(1e-12, 1e-13);
        let v = integrate(|x| C64::new(1.0 / (2.0 * x).cosh(), 0.0), &s).unwrap();
        checks.push(
            CheckRecord::compare(
                "quad.sech",
                "integral of sech(2x) over R = pi/2 (arctan oracle)",
                v.value,
                C64::new(PI / 2.0, 0.0),
                1e-10,
            )
            .timed(t0),
        );
    }

    // --- Beta-integral lemma at λ ∈ {0,1,2,5,10} (criterion 2) ---
    for &lambda in &[0.0f64, 1.0, 2.0, 5.0, 10.0] {
        let t0 = Instant::now();
        let spec = QuadratureSpec::new(Domain::RealLine { decay: 1.0 })
            .with_tols(1e-11, 1e-13)
            .with_budget(3000);
        let power = C64::new(1.0, lambda) / 2.0;
        let quad = integrate(|t| (-power * (2.0 * t).cosh().ln()).exp(), &spec).unwrap();
        let beta = cbeta(C64::new(0.5, 0.0), C64::new(1.0, lambda) / 4.0).unwrap() / 2.0;
        checks.push(
            CheckRecord::compare(
                &format!("beta_lemma.lambda_{lambda}"),
                "integral of (cosh 2t)^{-(1+i*lambda)/2} dt = B(1/2,(1+i*lambda)/4)/2",
                quad.value,
                beta,
                1e-8,
            )
            .timed(t0),
        );
    }

    // --- spherical boundary value: Beta form vs Gauss 2F1 at x = 1
    //     (criterion 3, first half) ---
    for &ell in &[0.0f64, 1.0, 2.0, 4.5] {
        let t0 = Instant::now();
        let beta_form = spherical_at_y_o(ell).unwrap();
        let gauss = gauss_2f1(
            C64::new(1.0, ell) / 4.0,
            C64::new(1.0, -ell) / 4.0,
            C64::new(1.0, 0.0),
            C64::new(1.0, 0.0),
        )
        .unwrap();
        checks.push(
            CheckRecord::compare(
                &format!("spherical.y_o_closed_form.l_{ell}"),
                "phi_{il}(y_o): sqrt(pi)/Gamma-pair vs 2F1 at 1 (Gauss)",
                beta_form,
                gauss,
                1e-8,
            )
            .timed(t0),
        );
    }

    // --- interior spherical two-route vs the K-integral (criterion 3) ---
    if model.n() == 2 {
        for &(ell, theta) in &[(1.0, 0.3), (2.0, 0.45)] {
            let t0 = Instant::now();
            let k_route = spherical_k_integral_route(&model, ell, C64::new(0.0, theta)).unwrap();
            let u = (C64::new(0.0, 2.0 * theta)).cosh();
            let direct = spherical_fn(&model, ell, u).unwrap();
            checks.push(
                CheckRecord::compare(
                    &format!("spherical.k_integral.l_{ell}"),
                    "phi_lambda(a^2) = int_K |a(ka)^{rho+lambda}|^2 dk",
                    k_route,
                    direct,
                    1e-6,
                )
                .timed(t0),
            );
        }
    }

    // --- COSH symmetry and value ---
    {
        let t0 = Instant::now();
        let sym = (0..8)
            .map(|k| {
                let l = 0.5 + k as f64;
                (cosh_weight(l, &model) - cosh_weight(-l, &model)).abs()
            })
            .fold(0.0f64, f64::max);
        checks.push(
            CheckRecord::upper_bound("cosh.symmetry", "COSH(l) = COSH(-l)", sym, 1e-14).timed(t0),
        );
        checks.push(CheckRecord::compare(
            "cosh.at_zero",
            "COSH(0) = |W/W_H| = 2",
            C64::new(cosh_weight(0.0, &model), 0.0),
            C64::new(2.0, 0.0),
            1e-14,
        ));
    }

    // --- C₁ chain: coth display vs Γ-only route (criterion 4) ---
    {
        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        let mut ell = 0.25;
        while ell <= 16.0 {
            let c1 = c1_constant(ell).unwrap();
            let gg = cgamma(C64::new(3.0, -ell) / 4.0).unwrap()
                * cgamma(C64::new(3.0, ell) / 4.0).unwrap();
            let stripped = c1 * gg / PI.sqrt();
            let display = c1_coth_form(ell);
            worst = worst.max((stripped - display).norm() / display.norm());
            ell += 0.25;
        }
        checks.push(
            CheckRecord::upper_bound(
                "c1.coth_display",
                "C1 stripped by Gamma(1/2)/(Gamma((3-il)/4)Gamma((3+il)/4)) equals the coth form",
                worst,
                1e-9,
            )
            .timed(t0),
        );
    }

    // --- κ(ℓ) = C₂/(g·C₁) constancy; κ reported (criterion 4) ---
    {
        let t0 = Instant::now();
        let base = kappa_ratio(1.0).unwrap();
        let mut worst: f64 = 0.0;
        let mut ell = 0.25;
        while ell <= 16.0 {
            let k = kappa_ratio(ell).unwrap();
            worst = worst.max((k - base).norm() / base.norm());
            ell += 0.25;
        }
        checks.push(
            CheckRecord::upper_bound(
                "kappa.constancy",
                "kappa(l) = C2/(g*C1) constant over [0.25, 16]",
                worst,
                1e-9,
            )
            .timed(t0),
        );
        checks.push(CheckRecord::compare(
            "kappa.reported_value",
            "measured kappa against the pinned golden",
            base,
            C64::new(crate::goldens::KAPPA_C2_RATIO, 0.0),
            1e-9,
        ));
    }

    // --- the multiplier's defining requirement g·c₁ = |c|⁻² ---
    {
        let t0 = Instant::now();
        let mut worst: f64 = 0.0;
        for &ell in &[0.1, 0.5, 1.0, 2.0, 5.0, 9.0, 14.0] {
            let lhs = multiplier_g(ell) * c1_coth_form(ell);
            let rhs = plancherel_density(ell);
            worst = worst.max((lhs - C64::new(rhs, 0.0)).norm() / rhs);
        }
        checks.push(
            CheckRecord::upper_bound(
                "multiplier.defining_requirement",
                "g(l)*c1(l) = |c(il)|^-2",
                worst,
                1e-11,
            )
            .timed(t0),
        );
    }

    // --- C₂ against the Fourier-inversion coefficient ---
    {
        let t0 = Instant::now();
        let c2 = c2_constant(2.0).unwrap();
        let oracle = spherical_at_y_o(2.0).unwrap() * plancherel_density(2.0);
        checks.push(
            CheckRecord::compare(
                "c2.fourier_coefficient",
                "C2(l) = phi_{il}(y_o)·|c(il)|^-2 from Gamma products",
                c2,
                oracle,
                1e-11,
            )
            .timed(t0),
        );
    }

    checks
}
