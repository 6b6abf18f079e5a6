//! Suite configuration, per-check records and the report container.

use crate::error::{Error, Result};
use crate::geometry::RankOneModel;
use crate::numerics::{Domain, QuadratureSpec};
use crate::spectra::SpectralProfile;
use crate::transforms::WavePacket;
use crate::C64;
use serde::{Deserialize, Serialize};

/// Model selector of the config file.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelSpec {
    /// "sl2r" (the n = 2 lane) or "so1n".
    #[serde(rename = "type")]
    pub kind: String,
    #[serde(default = "default_n")]
    pub n: usize,
}

fn default_n() -> usize {
    2
}

impl Default for ModelSpec {
    fn default() -> Self {
        Self {
            kind: "sl2r".into(),
            n: 2,
        }
    }
}

/// Quadrature overrides (applied to every packet-driven integral).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuadPolicy {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_subdivisions: usize,
    pub tail_cutoff: f64,
}

impl Default for QuadPolicy {
    fn default() -> Self {
        Self {
            rel_tol: 1e-9,
            abs_tol: 1e-11,
            max_subdivisions: 1200,
            tail_cutoff: 700.0,
        }
    }
}

/// Grid sizes / sample counts of the property sweeps.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GridSpec {
    pub separation_pairs: usize,
    pub iwasawa_points: usize,
    pub convexity_points: usize,
    pub geometric_norm_epsilons: Vec<f64>,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            separation_pairs: 10_000,
            iwasawa_points: 1_000,
            convexity_points: 500,
            geometric_norm_epsilons: vec![0.2, 0.1, 0.05],
        }
    }
}

/// The full configuration of a verification run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(default)]
    pub model: ModelSpec,
    #[serde(default = "default_packets")]
    pub packets: Vec<SpectralProfile>,
    #[serde(default)]
    pub quadrature: QuadPolicy,
    #[serde(default)]
    pub grids: GridSpec,
    #[serde(default = "default_seed")]
    pub seed: u64,
}

fn default_seed() -> u64 {
    42
}

fn default_packets() -> Vec<SpectralProfile> {
    vec![
        SpectralProfile::gaussian(0.8),
        SpectralProfile::gaussian(1.0),
        SpectralProfile::gaussian_poly(1.2, vec![1.0, 0.25]),
    ]
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            model: ModelSpec::default(),
            packets: default_packets(),
            quadrature: QuadPolicy::default(),
            grids: GridSpec::default(),
            seed: default_seed(),
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.packets.is_empty() {
            return Err(Error::ConfigInvalid("empty packet list".into()));
        }
        if self.model.kind != "sl2r" && self.model.kind != "so1n" {
            return Err(Error::ConfigInvalid(format!(
                "unknown model type {:?}",
                self.model.kind
            )));
        }
        if !(self.quadrature.rel_tol > 0.0 && self.quadrature.abs_tol > 0.0) {
            return Err(Error::ConfigInvalid("tolerances must be positive".into()));
        }
        for p in &self.packets {
            if p.sigma <= 0.0 {
                return Err(Error::ConfigInvalid("packet sigma must be positive".into()));
            }
        }
        RankOneModel::new(self.model.n).map(|_| ())
    }

    pub fn model(&self) -> RankOneModel {
        RankOneModel::new(self.model.n).expect("validated")
    }

    /// Wave packet with this config's quadrature policy, optionally
    /// loosened to `rel_floor` for the expensive multi-dimensional sweeps.
    pub fn packet(&self, profile: &SpectralProfile, rel_floor: Option<f64>) -> WavePacket {
        let mut f = WavePacket::new(self.model(), profile.clone());
        f.quad = QuadratureSpec {
            domain: Domain::Finite { a: 0.0, b: 1.0 },
            rel_tol: rel_floor.map_or(self.quadrature.rel_tol, |r| self.quadrature.rel_tol.max(r)),
            abs_tol: self.quadrature.abs_tol.max(rel_floor.unwrap_or(0.0) * 1e-3),
            max_subdivisions: self.quadrature.max_subdivisions,
            tail_cutoff: self.quadrature.tail_cutoff,
        };
        f
    }

    /// FNV-1a hash of the canonical JSON serialization.
    pub fn hash(&self) -> String {
        let json = serde_json::to_string(self).unwrap_or_default();
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in json.as_bytes() {
            h ^= *b as u64;
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        format!("{h:016x}")
    }
}

/// One verified identity: two routes (or a value against a bound), the
/// observed discrepancy, its tolerance, and the pass flag.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub anchor: String,
    pub route_a: [f64; 2],
    pub route_b: [f64; 2],
    pub abs_diff: f64,
    pub rel_diff: f64,
    pub tol: f64,
    pub pass: bool,
    pub wall_ms: f64,
}

impl CheckRecord {
    /// Two-route comparison at a relative tolerance (absolute when the
    /// reference is smaller than `tol`).
    pub fn compare(name: &str, anchor: &str, a: C64, b: C64, tol: f64) -> Self {
        let abs_diff = (a - b).norm();
        let scale = b.norm().max(a.norm());
        let rel_diff = if scale > 0.0 { abs_diff / scale } else { 0.0 };
        let pass = if scale > tol {
            rel_diff <= tol
        } else {
            abs_diff <= tol
        };
        Self {
            name: name.into(),
            anchor: anchor.into(),
            route_a: [a.re, a.im],
            route_b: [b.re, b.im],
            abs_diff,
            rel_diff,
            tol,
            pass,
            wall_ms: 0.0,
        }
    }

    /// `value ≤ bound` style check; rel_diff reports value/bound.
    pub fn upper_bound(name: &str, anchor: &str, value: f64, bound: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            route_a: [value, 0.0],
            route_b: [bound, 0.0],
            abs_diff: (value - bound).max(0.0),
            rel_diff: if bound != 0.0 { value / bound } else { f64::INFINITY },
            tol: 1.0,
            pass: value <= bound,
            wall_ms: 0.0,
        }
    }

    /// Plain boolean condition with a recorded witness value.
    pub fn condition(name: &str, anchor: &str, pass: bool, witness: f64) -> Self {
        Self {
            name: name.into(),
            anchor: anchor.into(),
            route_a: [witness, 0.0],
            route_b: [0.0, 0.0],
            abs_diff: 0.0,
            rel_diff: 0.0,
            tol: 0.0,
            pass,
            wall_ms: 0.0,
        }
    }

    /// A failed check produced by an unexpected error (never silent).
    pub fn failed(name: &str, anchor: &str, err: &crate::Error) -> Self {
        Self {
            name: name.into(),
            anchor: format!("{anchor} [error: {err}]"),
            route_a: [f64::NAN, f64::NAN],
            route_b: [f64::NAN, f64::NAN],
            abs_diff: f64::NAN,
            rel_diff: f64::NAN,
            tol: 0.0,
            pass: false,
            wall_ms: 0.0,
        }
    }

    pub fn timed(mut self, start: std::time::Instant) -> Self {
        self.wall_ms = start.elapsed().as_secs_f64() * 1e3;
        self
    }
}

/// A suite report: order-normalized check records plus provenance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub version: String,
    pub seed: u64,
    pub config_hash: String,
    pub goldens: std::collections::BTreeMap<String, f64>,
    pub checks: Vec<CheckRecord>,
    pub passed: usize,
    pub failed: usize,
}

impl Report {
    pub fn new(suite: &str, cfg: &SuiteConfig, mut checks: Vec<CheckRecord>) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let passed = checks.iter().filter(|c| c.pass).count();
        let failed = checks.len() - passed;
        let mut goldens = std::collections::BTreeMap::new();
        goldens.insert("kappa_radon".into(), crate::goldens::KAPPA_RADON);
        goldens.insert("kappa_dual".into(), crate::goldens::KAPPA_DUAL);
        goldens.insert("kappa_linv".into(), crate::goldens::KAPPA_LINV);
        goldens.insert("kappa_c2_ratio".into(), crate::goldens::KAPPA_C2_RATIO);
        goldens.insert("kappa_gutzmer".into(), crate::goldens::KAPPA_GUTZMER);
        goldens.insert("kappa_lambda".into(), crate::goldens::KAPPA_LAMBDA);
        goldens.insert(
            "kappa_fourier_abel".into(),
            crate::goldens::KAPPA_FOURIER_ABEL,
        );
        Self {
            suite: suite.into(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed: cfg.seed,
            config_hash: cfg.hash(),
            goldens,
            checks,
            passed,
            failed,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    /// CSV table (no timing column, so reruns are byte-identical).
    pub fn to_csv(&self) -> String {
        let mut out = String::from(
            "check,anchor,route_a_re,route_a_im,route_b_re,route_b_im,abs_diff,rel_diff,tol,pass\n",
        );
        for c in &self.checks {
            out.push_str(&format!(
                "{},\"{}\",{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{}\n",
                c.name,
                c.anchor.replace('"', "'"),
                c.route_a[0],
                c.route_a[1],
                c.route_b[0],
                c.route_b[1],
                c.abs_diff,
                c.rel_diff,
                c.tol,
                c.pass
            ));
        }
        out
    }
}
