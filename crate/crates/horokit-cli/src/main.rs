//! `horokit` — batch verification harness for the horospherical
//! transform library.
//!
//! ```text
//! horokit verify <suite> [--config cfg.json] [--out report.json] [--csv dir]
//! horokit eval <transform> [--config cfg.json]
//! ```
//!
//! Exit codes: 0 all checks pass, 1 any check fails, 2 configuration
//! error.

use clap::{Parser, Subcommand};
use horokit::geometry::{GroupElement, HoroParam};
use horokit::transforms::{
    abel_direct, cauchy_transform, eval_packet, invert, radon_direct, radon_spectral,
};
use horokit::verify::{run_suite, SuiteConfig};
use horokit::C64;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "horokit",
    about = "verification harness for horospherical Radon / Cauchy / Abel / dual transforms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite and write machine-readable reports.
    Verify {
        /// One of: specfun, geometry, cauchy-radon, inversion,
        /// hardy-norm, kernels, tube, all
        suite: String,
        /// JSON configuration (defaults when omitted)
        #[arg(long)]
        config: Option<PathBuf>,
        /// JSON report output path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for the per-suite CSV table
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Suppress the per-check table on stdout
        #[arg(long, default_value_t = false)]
        quiet: bool,
    },
    /// Evaluate a single transform at its canonical test point.
    Eval {
        /// One of: packet, radon, radon-spectral, radon-holomorphic,
        /// abel, cauchy, invert
        transform: String,
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

fn load_config(path: &Option<PathBuf>) -> Result<SuiteConfig, String> {
    let cfg = match path {
        None => SuiteConfig::default(),
        Some(p) => {
            let raw = std::fs::read_to_string(p)
                .map_err(|e| format!("cannot read config {}: {e}", p.display()))?;
            serde_json::from_str(&raw).map_err(|e| format!("invalid config JSON: {e}"))?
        }
    };
    cfg.validate().map_err(|e| e.to_string())?;
    Ok(cfg)
}

fn cmd_verify(
    suite: &str,
    config: &Option<PathBuf>,
    out: &Option<PathBuf>,
    csv: &Option<PathBuf>,
    quiet: bool,
) -> ExitCode {
    let cfg = match load_config(config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match run_suite(suite, &cfg) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    if !quiet {
        println!(
            "suite {} | seed {} | config {}",
            report.suite, report.seed, report.config_hash
        );
        for c in &report.checks {
            println!(
                "  [{}] {:<44} rel_diff {:.3e}  tol {:.1e}  ({:.0} ms)",
                if c.pass { "PASS" } else { "FAIL" },
                c.name,
                c.rel_diff,
                c.tol,
                c.wall_ms
            );
        }
        println!("{} passed, {} failed", report.passed, report.failed);
    }
    if let Some(path) = out {
        match serde_json::to_string_pretty(&report) {
            Ok(json) => {
                if let Err(e) = std::fs::write(path, json) {
                    eprintln!("cannot write report: {e}");
                    return ExitCode::from(2);
                }
            }
            Err(e) => {
                eprintln!("cannot serialize report: {e}");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(dir) = csv {
        if let Err(e) = std::fs::create_dir_all(dir) {
            eprintln!("cannot create csv dir: {e}");
            return ExitCode::from(2);
        }
        let path = dir.join(format!("{}.csv", report.suite));
        if let Err(e) = std::fs::write(&path, report.to_csv()) {
            eprintln!("cannot write csv: {e}");
            return ExitCode::from(2);
        }
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_eval(transform: &str, config: &Option<PathBuf>) -> ExitCode {
    let cfg = match load_config(config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("config error: {e}");
            return ExitCode::from(2);
        }
    };
    let model = cfg.model();
    let f = cfg.packet(&cfg.packets[0], None);
    let result = match transform {
        "packet" => eval_packet(&f, &model.y_o()).map(|r| (r.value, r.error_estimate, r.route)),
        "radon" => radon_direct(&f, &HoroParam::base(&model))
            .map(|r| (r.value, r.error_estimate, r.route)),
        "radon-spectral" => radon_spectral(&f, &HoroParam::base(&model))
            .map(|r| (r.value, r.error_estimate, r.route)),
        "radon-holomorphic" => HoroParam::from_coset(&model, GroupElement::identity(&model), 0.4)
            .and_then(|xi| radon_direct(&f, &xi))
            .map(|r| (r.value, r.error_estimate, r.route)),
        "abel" => abel_direct(&f, C64::new(0.3, 0.0)).map(|r| (r.value, r.error_estimate, r.route)),
        "cauchy" => cauchy_transform(&f, &HoroParam::base(&model))
            .map(|r| (r.value, r.error_estimate, r.route)),
        "invert" => match invert(&f) {
            Ok(chk) => {
                println!(
                    "{}",
                    serde_json::json!({
                        "transform": "invert",
                        "route_a": [chk.route_a.value.re, chk.route_a.value.im],
                        "route_b": [chk.route_b.value.re, chk.route_b.value.im],
                        "reference": [chk.reference.value.re, chk.reference.value.im],
                    })
                );
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
        other => {
            eprintln!("unknown transform {other:?}");
            return ExitCode::from(2);
        }
    };
    match result {
        Ok((v, err, route)) => {
            println!(
                "{}",
                serde_json::json!({
                    "transform": transform,
                    "value": [v.re, v.im],
                    "error_estimate": err,
                    "route": route,
                })
            );
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("evaluation failed: {e}");
            ExitCode::from(1)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match &cli.command {
        Command::Verify {
            suite,
            config,
            out,
            csv,
            quiet,
        } => cmd_verify(suite, config, out, csv, *quiet),
        Command::Eval { transform, config } => cmd_eval(transform, config),
    }
}
