//! The verification harness: named suites of oracle checks, each
//! producing order-normalized [`CheckRecord`]s inside a [`Report`].
//!
//! Suites: `specfun`, `geometry`, `cauchy-radon`, `inversion`,
//! `hardy-norm`, `kernels`, `tube`, and `all`.

pub mod report;
mod suites;

pub use report::{CheckRecord, GridSpec, ModelSpec, QuadPolicy, Report, SuiteConfig};

use crate::error::{Error, Result};

pub const SUITE_NAMES: [&str; 8] = [
    "specfun",
    "geometry",
    "cauchy-radon",
    "inversion",
    "hardy-norm",
    "kernels",
    "tube",
    "all",
];

/// Run one named suite. Deterministic given (config, seed); internal
/// errors surface as failed checks, never silently.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<Report> {
    cfg.validate()?;
    let checks = match name {
        "specfun" => suites::specfun::run(cfg),
        "geometry" => suites::geometry::run(cfg),
        "cauchy-radon" => suites::cauchy_radon::run(cfg),
        "inversion" => suites::inversion::run(cfg),
        "hardy-norm" => suites::hardy_norm::run(cfg),
        "kernels" => suites::kernels::run(cfg),
        "tube" => suites::tube::run(cfg),
        "all" => {
            let mut all = Vec::new();
            all.extend(suites::specfun::run(cfg));
            all.extend(suites::geometry::run(cfg));
            all.extend(suites::cauchy_radon::run(cfg));
            all.extend(suites::inversion::run(cfg));
            all.extend(suites::hardy_norm::run(cfg));
            all.extend(suites::kernels::run(cfg));
            all.extend(suites::tube::run(cfg));
            all
        }
        other => {
            return Err(Error::ConfigInvalid(format!(
                "unknown suite {other:?}; valid: {SUITE_NAMES:?}"
            )))
        }
    };
    Ok(Report::new(name, cfg, checks))
}
