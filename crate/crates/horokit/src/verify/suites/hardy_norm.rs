//! Hardy-norm suite: the Gutzmer two-route orbital integral (ratio
//! constant in the base point), the geometric norm of the 𝒟-operator
//! supremum against the spectral norm, and the norm sandwich.

use crate::goldens::KAPPA_GUTZMER;
use crate::hardy::{
    hardy_norm_geometric, hardy_norm_spectral, l2x_norm_spectral, orbital_integral_direct,
    orbital_integral_spectral,
};
use crate::spectra::SpectralProfile;
use crate::verify::report::{CheckRecord, SuiteConfig};
use crate::C64;
use rayon::prelude::*;
use std::time::Instant;

pub fn run(cfg: &SuiteConfig) -> Vec<CheckRecord> {
    let model = cfg.model();
    let mut checks = Vec::new();
    if model.n() != 2 {
        checks.push(CheckRecord::condition(
            "hardy.model",
            "suite requires the n = 2 (SL(2,R)-type) model",
            false,
            model.n() as f64,
        ));
        return checks;
    }

    // --- Gutzmer: direct-G route / spectral route constant in a
    //     (criterion 7) ---
    {
        let t0 = Instant::now();
        let f = cfg.packet(&SpectralProfile::gaussian(0.7), Some(1e-6));
        let xs = [0.2, 0.5, 0.9].map(|c| c * std::f64::consts::FRAC_PI_2);
        let ratios: Vec<crate::Result<f64>> = xs
            .par_iter()
            .map(|&x| {
                let direct = orbital_integral_direct(&f, x)?;
                let spectral = orbital_integral_spectral(&f, C64::new(0.0, x))?;
                Ok(direct / spectral)
            })
            .collect();
        let mut vals = Vec::new();
        for (i, r) in ratios.into_iter().enumerate() {
            match r {
                Ok(v) => vals.push(v),
                Err(e) => checks.push(CheckRecord::failed(
                    &format!("gutzmer.ratio.{i}"),
                    "two-route orbital integral",
                    &e,
                )),
            }
        }
        if vals.len() == 3 {
            let drift = vals
                .iter()
                .map(|v| (v - vals[0]).abs() / vals[0])
                .fold(0.0f64, f64::max);
            checks.push(
                CheckRecord::upper_bound(
                    "gutzmer.ratio_constancy",
                    "direct-G / spectral orbital ratio constant over a in exp(i{0.2,0.5,0.9}Z_H)",
                    drift,
                    1e-3,
                )
                .timed(t0),
            );
            checks.push(CheckRecord::compare(
                "gutzmer.kappa_measured",
                "measured Haar constant against kappa_gutzmer = 4 pi^2",
                C64::new(vals[0], 0.0),
                C64::new(KAPPA_GUTZMER, 0.0),
                1e-3,
            ));
        }
    }

    // --- orbital integral monotonicity along i·s·2Z_H ---
    {
        let t0 = Instant::now();
        let f = cfg.packet(&SpectralProfile::gaussian(0.7), None);
        let mut last = 0.0;
        let mut monotone = true;
        for &s in &[0.2, 0.4, 0.6, 0.8] {
            let v =
                orbital_integral_spectral(&f, C64::new(0.0, s * std::f64::consts::PI)).unwrap();
            monotone &= v > last;
            last = v;
        }
        checks.push(
            CheckRecord::condition(
                "orbital.monotone",
                "O_{|f|^2}(i s 2Z_H) increasing in s",
                monotone,
                last,
            )
            .timed(t0),
        );
    }

    // --- geometric norm vs spectral norm (criterion 8) ---
    {
        let t0 = Instant::now();
        let f = cfg.packet(&SpectralProfile::gaussian(0.3), None);
        let spectral = hardy_norm_spectral(&f).unwrap();
        let geo = hardy_norm_geometric(&f, &cfg.grids.geometric_norm_epsilons).unwrap();
        let mut monotone = true;
        let mut bounded = true;
        let mut last = 0.0;
        for &(_, v) in &geo.grid {
            monotone &= v > last;
            bounded &= v <= spectral * (1.0 + 1e-12);
            last = v;
        }
        checks.push(
            CheckRecord::condition(
                "geometric_norm.monotone_in_eps",
                "D O_{|f|^2}(i(1-eps)2Z_H) increases as eps decreases",
                monotone,
                last,
            )
            .timed(t0),
        );
        checks.push(CheckRecord::condition(
            "geometric_norm.bounded_by_spectral",
            "every grid value <= the spectral norm",
            bounded,
            last / spectral,
        ));
        checks.push(CheckRecord::compare(
            "geometric_norm.sup_within_2pct",
            "sup over the eps-grid within 2% of the spectral norm at eps = 0.05",
            C64::new(geo.supremum, 0.0),
            C64::new(spectral, 0.0),
            0.02,
        ));
    }

    // --- norm sandwich and narrow-band COSH limit ---
    {
        let t0 = Instant::now();
        let mut sandwich = true;
        for p in &cfg.packets {
            let f = cfg.packet(p, None);
            sandwich &= hardy_norm_spectral(&f).unwrap() >= l2x_norm_spectral(&f).unwrap();
        }
        checks.push(
            CheckRecord::condition(
                "norm.sandwich",
                "||f||_H^2 >= ||f|_X||_L2^2 for every packet",
                sandwich,
                if sandwich { 1.0 } else { 0.0 },
            )
            .timed(t0),
        );

        let t0 = Instant::now();
        let f = cfg.packet(&SpectralProfile::narrow(2.0, 0.08), None);
        let ratio = hardy_norm_spectral(&f).unwrap() / l2x_norm_spectral(&f).unwrap();
        let target = crate::spectra::cosh_weight(2.0, &model);
        checks.push(
            CheckRecord::compare(
                "norm.narrow_band_cosh",
                "narrow packet at l0 = 2: Hardy/L2 ratio approaches COSH(2)",
                C64::new(ratio, 0.0),
                C64::new(target, 0.0),
                0.02,
            )
            .timed(t0),
        );
    }

    checks
}
