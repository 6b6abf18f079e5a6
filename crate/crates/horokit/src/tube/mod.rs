//! Hardy spaces on tube domains T(Ω) = V + iΩ over Weyl-orbit polytopes
//! Ω = int conv(𝒲·y_o), with the COSH_y weights, multiplier-twisted
//! τ(𝒲)-invariants, and Cauchy–Szegő reproducing kernels.
//!
//! Fourier normalization: every V- and V*-integral carries the weight
//! (2π)^{−d/2} against Lebesgue measure, i.e.
//! ℱf(λ) = (2π)^{−d/2}∫ f(x) e^{−i⟨λ,x⟩} dx and the evaluator is
//! f(z) = (2π)^{−d/2}∫ F(λ) e^{−i⟨z,λ⟩} dλ (the convention under which
//! the d = 1 kernel has the closed cosh form).
//!
//! Shipped models: d = 1 with 𝒲 = {±1} (the acceptance lane), and d = 2
//! with the sign-flip group — the latter is *experimental*: the Appendix
//! theory assumes 𝒲 irreducible on V, which sign flips violate, so it is
//! never used in acceptance runs.

use crate::error::{Error, Result};
use crate::numerics::{integrate, integrate2d, Domain, QuadratureSpec};
use crate::C64;
use std::f64::consts::PI;

/// A finite reflection model: the group 𝒲 as signed diagonal matrices
/// (sufficient for the shipped models), the base vertex y_o, and the
/// polytope Ω = int conv(𝒲·y_o).
#[derive(Debug, Clone)]
pub struct ReflectionModel {
    /// Group elements as sign vectors acting coordinate-wise.
    group: Vec<Vec<f64>>,
    pub y_o: Vec<f64>,
    pub experimental: bool,
}

impl ReflectionModel {
    /// d = 1, 𝒲 = {±1}, Ω = (−|y_o|, |y_o|).
    pub fn line(y_o: f64) -> Result<Self> {
        if y_o == 0.0 {
            return Err(Error::ConfigInvalid("y_o must be nonzero".into()));
        }
        let m = Self {
            group: vec![vec![1.0], vec![-1.0]],
            y_o: vec![y_o],
            experimental: false,
        };
        m.verify_group_table()?;
        Ok(m)
    }

    /// d = 2 sign flips (reducible; experimental, excluded from acceptance).
    pub fn sign_flips_2d(y_o: [f64; 2]) -> Result<Self> {
        if y_o[0] == 0.0 || y_o[1] == 0.0 {
            return Err(Error::ConfigInvalid("y_o components must be nonzero".into()));
        }
        let m = Self {
            group: vec![
                vec![1.0, 1.0],
                vec![-1.0, 1.0],
                vec![1.0, -1.0],
                vec![-1.0, -1.0],
            ],
            y_o: y_o.to_vec(),
            experimental: true,
        };
        m.verify_group_table()?;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.y_o.len()
    }

    pub fn order(&self) -> usize {
        self.group.len()
    }

    pub fn elements(&self) -> &[Vec<f64>] {
        &self.group
    }

    pub fn apply(&self, s: usize, x: &[f64]) -> Vec<f64> {
        self.group[s].iter().zip(x).map(|(a, b)| a * b).collect()
    }

    /// index of the product s·w in the group table
    pub fn compose(&self, s: usize, w: usize) -> usize {
        let prod: Vec<f64> = self.group[s]
            .iter()
            .zip(&self.group[w])
            .map(|(a, b)| a * b)
            .collect();
        self.group
            .iter()
            .position(|g| g == &prod)
            .expect("group closed under products")
    }

    fn verify_group_table(&self) -> Result<()> {
        for s in 0..self.order() {
            for w in 0..self.order() {
                let _ = self.compose(s, w);
            }
            // inverses: sign vectors are involutions
            let sq = self.compose(s, s);
            if self.group[sq].iter().any(|&c| c != 1.0) {
                return Err(Error::ConfigInvalid("group not closed under inverse".into()));
            }
        }
        Ok(())
    }

    /// Membership test for Ω (open): |x_j| < |y_o,j| componentwise for
    /// the sign-flip polytopes.
    pub fn in_omega(&self, x: &[f64]) -> bool {
        x.iter()
            .zip(&self.y_o)
            .all(|(xi, yi)| xi.abs() < yi.abs())
    }
}

/// A unimodular multiplier m(s, λ) with the cocycle law
/// m(sw, λ) = m(s, wλ)·m(w, λ).
#[derive(Clone)]
pub struct Multiplier {
    eval: std::sync::Arc<dyn Fn(usize, &[f64]) -> C64 + Send + Sync>,
}

impl Multiplier {
    pub fn trivial() -> Self {
        Self {
            eval: std::sync::Arc::new(|_, _| C64::new(1.0, 0.0)),
        }
    }

    pub fn new<F>(f: F) -> Self
    where
        F: Fn(usize, &[f64]) -> C64 + Send + Sync + 'static,
    {
        Self {
            eval: std::sync::Arc::new(f),
        }
    }

    pub fn eval(&self, s: usize, lam: &[f64]) -> C64 {
        (self.eval)(s, lam)
    }

    /// Verify |m| = 1 and the cocycle law on the whole group table at the
    /// sampled spectral points.
    pub fn verify(&self, model: &ReflectionModel, samples: &[Vec<f64>]) -> Result<()> {
        for lam in samples {
            for s in 0..model.order() {
                let v = self.eval(s, lam);
                if (v.norm() - 1.0).abs() > 1e-12 {
                    return Err(Error::ConfigInvalid(format!(
                        "multiplier not unimodular: |m| = {}",
                        v.norm()
                    )));
                }
                for w in 0..model.order() {
                    let sw = model.compose(s, w);
                    let lhs = self.eval(sw, lam);
                    let rhs = self.eval(s, &model.apply(w, lam)) * self.eval(w, lam);
                    if (lhs - rhs).norm() > 1e-12 {
                        return Err(Error::ConfigInvalid("cocycle law violated".into()));
                    }
                }
            }
        }
        Ok(())
    }
}

/// COSH_y(λ) = (1/|𝒲|) Σ_s e^{−2⟨y, sλ⟩}; COSH = COSH_{y_o}.
pub fn tube_cosh(model: &ReflectionModel, y: &[f64], lam: &[f64]) -> f64 {
    let mut sum = 0.0;
    for s in 0..model.order() {
        let slam = model.apply(s, lam);
        let dot: f64 = y.iter().zip(&slam).map(|(a, b)| a * b).sum();
        sum += (-2.0 * dot).exp();
    }
    sum / model.order() as f64
}

/// A tube-Hardy function given by its spectral profile F on V*
/// (d ≤ 2; gaussian-type decay declared through `decay_sigma`).
#[derive(Clone)]
pub struct TubeFunction {
    pub model: ReflectionModel,
    profile: std::sync::Arc<dyn Fn(&[f64]) -> C64 + Send + Sync>,
    pub decay_sigma: f64,
}

impl TubeFunction {
    pub fn new<F>(model: ReflectionModel, decay_sigma: f64, profile: F) -> Self
    where
        F: Fn(&[f64]) -> C64 + Send + Sync + 'static,
    {
        Self {
            model,
            profile: std::sync::Arc::new(profile),
            decay_sigma,
        }
    }

    pub fn profile(&self, lam: &[f64]) -> C64 {
        (self.profile)(lam)
    }

    fn radius(&self, eps: f64) -> f64 {
        // COSH grows like e^{2|y_o||λ|}; widen the gaussian support window
        let y_max: f64 = self.y_o_norm();
        self.decay_sigma * (2.0 * (1.0 / eps).ln()).sqrt()
            + 2.0 * y_max * self.decay_sigma * self.decay_sigma
            + 4.0
    }

    fn y_o_norm(&self) -> f64 {
        self.model.y_o.iter().map(|v| v.abs()).fold(0.0, f64::max)
    }

    /// Evaluator f(z) = (2π)^{−d/2}∫ F(λ) e^{−i⟨z,λ⟩} dλ.
    pub fn eval(&self, z: &[C64]) -> Result<C64> {
        match self.model.dim() {
            1 => {
                let r = self.radius(1e-15);
                let spec = QuadratureSpec::new(Domain::Finite { a: -r, b: r })
                    .with_tols(1e-11, 1e-13)
                    .with_budget(2000);
                let v = integrate(
                    |l| self.profile(&[l]) * (C64::new(0.0, -1.0) * z[0] * l).exp(),
                    &spec,
                )?;
                Ok(v.value / (2.0 * PI).sqrt())
            }
            2 => {
                let r = self.radius(1e-13);
                let spec = QuadratureSpec::new(Domain::Finite { a: -r, b: r })
                    .with_tols(1e-9, 1e-11)
                    .with_budget(2000);
                let v = integrate2d(
                    |l0, l1| {
                        self.profile(&[l0, l1])
                            * (C64::new(0.0, -1.0) * (z[0] * l0 + z[1] * l1)).exp()
                    },
                    &spec,
                    &spec,
                )?;
                Ok(v.value / (2.0 * PI))
            }
            d => Err(Error::ConfigInvalid(format!("unsupported dimension {d}"))),
        }
    }
}

/// ‖F‖²_ℋ = ∫ |F(λ)|² COSH(λ) dλ_w (the eq-A3 route; COSH = COSH_{y_o}).
pub fn tube_hardy_norm(f: &TubeFunction) -> Result<f64> {
    weighted_norm(f, &f.model.y_o.clone())
}

/// The sup-route integrand at a fixed height y ∈ Ω: ∫|F|²·COSH_y dλ_w
/// (for τ(𝒲)-invariant profiles this is the eq-A1 value at y).
pub fn tube_norm_at_height(f: &TubeFunction, y: &[f64]) -> Result<f64> {
    weighted_norm(f, y)
}

fn weighted_norm(f: &TubeFunction, y: &[f64]) -> Result<f64> {
    let model = f.model.clone();
    let weight = move |lam: &[f64]| tube_cosh(&model, y, lam);
    let d = f.model.dim();
    let r = f.radius(1e-15);
    let spec = QuadratureSpec::new(Domain::Finite { a: -r, b: r })
        .with_tols(1e-11, 1e-13)
        .with_budget(3000);
    let value = match d {
        1 => {
            integrate(
                |l| {
                    let p = f.profile(&[l]);
                    C64::new(p.norm_sqr() * weight(&[l]), 0.0)
                },
                &spec,
            )?
            .value
            .re / (2.0 * PI).sqrt()
        }
        2 => {
            integrate2d(
                |a, b| {
                    let p = f.profile(&[a, b]);
                    C64::new(p.norm_sqr() * weight(&[a, b]), 0.0)
                },
                &spec,
                &spec,
            )?
            .value
            .re / (2.0 * PI)
        }
        d => return Err(Error::ConfigInvalid(format!("unsupported dimension {d}"))),
    };
    Ok(value)
}

/// COS^m_w(λ) = (1/|𝒲|) Σ_s m(s,λ)^{−1} e^{i⟨w,sλ⟩}.
pub fn cos_m(model: &ReflectionModel, m: &Multiplier, w: &[C64], lam: &[f64]) -> C64 {
    let mut sum = C64::new(0.0, 0.0);
    for s in 0..model.order() {
        let slam = model.apply(s, lam);
        let dot: C64 = w
            .iter()
            .zip(&slam)
            .map(|(wi, li)| wi * *li)
            .sum();
        sum += (C64::new(0.0, 1.0) * dot).exp() / m.eval(s, lam);
    }
    sum / model.order() as f64
}

/// The Cauchy–Szegő kernel K(z, w) = ∫ COS^m_z(λ)·COS^m_{−w̄}(λ)/COSH(λ) dλ_w.
pub fn tube_kernel(
    model: &ReflectionModel,
    m: &Multiplier,
    z: &[C64],
    w: &[C64],
) -> Result<C64> {
    if model.dim() != 1 {
        return Err(Error::ConfigInvalid(
            "kernel quadrature implemented for d = 1".into(),
        ));
    }
    let y = model.y_o[0].abs();
    let strip = z[0].im.abs().max(w[0].im.abs());
    if strip >= y {
        return Err(Error::ConfigInvalid("points outside the tube".into()));
    }
    // integrand decays like e^{−2(y−strip)|λ|}
    let decay = 2.0 * (y - strip);
    let spec = QuadratureSpec::new(Domain::RealLine {
        decay: decay.max(0.05),
    })
    .with_tols(1e-11, 1e-13)
    .with_budget(4000);
    let minus_wbar = [-w[0].conj()];
    let res = integrate(
        |l| {
            let a = cos_m(model, m, z, &[l]);
            let b = cos_m(model, m, &minus_wbar, &[l]);
            a * b / tube_cosh(model, &model.y_o, &[l])
        },
        &spec,
    )?;
    Ok(res.value / (2.0 * PI).sqrt())
}

/// The closed form of the d = 1, trivial-multiplier kernel:
/// √(π/2)·cosh(πz/4)cosh(πw̄/4)/(cosh(πz/2) + cosh(πw̄/2)) for y_o = 1.
pub fn tube_kernel_closed_form_d1(z: C64, w: C64) -> C64 {
    let wb = w.conj();
    (PI / 2.0).sqrt() * (PI * z / 4.0).cosh() * (PI * wb / 4.0).cosh()
        / ((PI * z / 2.0).cosh() + (PI * wb / 2.0).cosh())
}

/// Spectral reproducing pairing ⟨F, K_w⟩ = ∫ F(λ)·conj(ℱ(K_w|_V)(λ))·COSH dλ_w
/// with ℱ(K_w|_V) = COS^m_w/COSH (d = 1).
pub fn tube_reproducing_pairing(
    f: &TubeFunction,
    m: &Multiplier,
    w: &[C64],
) -> Result<C64> {
    if f.model.dim() != 1 {
        return Err(Error::ConfigInvalid(
            "reproducing pairing implemented for d = 1".into(),
        ));
    }
    let model = f.model.clone();
    let r = f.radius(1e-15);
    let spec = QuadratureSpec::new(Domain::Finite { a: -r, b: r })
        .with_tols(1e-11, 1e-13)
        .with_budget(3000);
    let wbar: Vec<C64> = w.iter().map(|c| c.conj()).collect();
    let res = integrate(
        |l| {
            // ℱ(K_w|_V) = COS^m_{w̄}/COSH, antiholomorphic in w
            let kw = cos_m(&model, m, &wbar, &[l]) / tube_cosh(&model, &model.y_o, &[l]);
            f.profile(&[l]) * kw.conj() * tube_cosh(&model, &model.y_o, &[l])
        },
        &spec,
    )?;
    Ok(res.value / (2.0 * PI).sqrt())
}

/// The projection onto τ(𝒲)-invariants,
/// (P F)(λ) = (1/|𝒲|) Σ_s m(s⁻¹, λ) F(s⁻¹λ).
pub fn project_tau_invariant(f: &TubeFunction, m: &Multiplier) -> TubeFunction {
    let model = f.model.clone();
    let inner = f.clone();
    let mult = m.clone();
    TubeFunction::new(f.model.clone(), f.decay_sigma, move |lam| {
        let mut sum = C64::new(0.0, 0.0);
        for s in 0..model.order() {
            // sign groups are involutive: s⁻¹ = s
            let slam = model.apply(s, lam);
            sum += mult.eval(s, lam) * inner.profile(&slam);
        }
        sum / model.order() as f64
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line() -> ReflectionModel {
        ReflectionModel::line(1.0).unwrap()
    }

    #[test]
    fn cosh_weights() {
        let m = line();
        // y = 0 → 1; at y_o: COSH(λ) = cosh(2λ)
        assert_eq!(tube_cosh(&m, &[0.0], &[0.7]), 1.0);
        assert!((tube_cosh(&m, &[1.0], &[0.7]) - (2.0 * 0.7f64).cosh()).abs() < 1e-14);
        // convexity bound COSH_y ≤ COSH on a grid
        for &y in &[-0.9, -0.4, 0.0, 0.3, 0.8] {
            for &l in &[0.1, 0.5, 1.5, 3.0] {
                assert!(tube_cosh(&m, &[y], &[l]) <= tube_cosh(&m, &[1.0], &[l]) + 1e-14);
            }
        }
    }

    #[test]
    fn gaussian_norm_matches_the_moment_oracle() {
        // |F|² = e^{−λ²}: ∫e^{−λ²}cosh(2λ)dλ = √π·e: closed gaussian moment
        let f = TubeFunction::new(line(), 1.0 / 2.0f64.sqrt(), |l| {
            C64::new((-l[0] * l[0] / 2.0).exp(), 0.0)
        });
        let n = tube_hardy_norm(&f).unwrap();
        let oracle = PI.sqrt() * 1.0f64.exp() / (2.0 * PI).sqrt();
        assert!((n - oracle).abs() < 1e-8 * oracle, "{n} vs {oracle}");
    }

    #[test]
    fn zero_function_has_zero_norm() {
        let f = TubeFunction::new(line(), 1.0, |_| C64::new(0.0, 0.0));
        assert_eq!(tube_hardy_norm(&f).unwrap(), 0.0);
    }

    #[test]
    fn height_route_increases_to_the_cosh_route() {
        let f = TubeFunction::new(line(), 1.0, |l| C64::new((-l[0] * l[0] / 2.0).exp(), 0.0));
        let top = tube_hardy_norm(&f).unwrap();
        let mut last = 0.0;
        for &eps in &[0.3, 0.15, 0.05] {
            let v = tube_norm_at_height(&f, &[1.0 - eps]).unwrap();
            assert!(v > last && v <= top * (1.0 + 1e-12), "eps {eps}");
            last = v;
        }
        assert!(last > 0.85 * top);
    }

    #[test]
    fn kernel_value_at_the_origin() {
        // K(0,0) = (2π)^{−1/2}∫dλ/cosh 2λ = √(π/2)/2 = 0.6266570687
        let m = line();
        let k = tube_kernel(&m, &Multiplier::trivial(), &[C64::new(0.0, 0.0)], &[C64::new(0.0, 0.0)])
            .unwrap();
        assert!((k.re - 0.626_657_068_7).abs() < 1e-9, "{k}");
        assert!(k.im.abs() < 1e-12);
        let closed = tube_kernel_closed_form_d1(C64::new(0.0, 0.0), C64::new(0.0, 0.0));
        assert!((k - closed).norm() < 1e-9);
    }

    #[test]
    fn kernel_matches_the_closed_form_off_the_diagonal() {
        let m = line();
        let z = C64::new(0.3, 0.2);
        let w = C64::new(-0.1, 0.5);
        let k = tube_kernel(&m, &Multiplier::trivial(), &[z], &[w]).unwrap();
        let closed = tube_kernel_closed_form_d1(z, w);
        assert!((k - closed).norm() <= 1e-8 * closed.norm(), "{k} vs {closed}");
    }

    #[test]
    fn kernel_hermitian_symmetry() {
        let m = line();
        let z = C64::new(0.25, -0.3);
        let w = C64::new(-0.4, 0.1);
        let a = tube_kernel(&m, &Multiplier::trivial(), &[z], &[w]).unwrap();
        let b = tube_kernel(&m, &Multiplier::trivial(), &[w], &[z]).unwrap();
        assert!((a - b.conj()).norm() <= 1e-10 * a.norm());
    }

    #[test]
    fn reproducing_property_for_an_invariant_gaussian() {
        let f = TubeFunction::new(line(), 1.0, |l| C64::new((-l[0] * l[0] / 2.0).exp(), 0.0));
        let m = Multiplier::trivial();
        let w = [C64::new(0.0, 0.4)];
        let paired = tube_reproducing_pairing(&f, &m, &w).unwrap();
        let direct = f.eval(&w).unwrap();
        assert!(
            (paired - direct).norm() <= 1e-6 * direct.norm(),
            "{paired} vs {direct}"
        );
        // a fully complex point pins the antiholomorphic convention
        let w2 = [C64::new(0.3, 0.2)];
        let paired2 = tube_reproducing_pairing(&f, &m, &w2).unwrap();
        let direct2 = f.eval(&w2).unwrap();
        assert!(
            (paired2 - direct2).norm() <= 1e-6 * direct2.norm(),
            "{paired2} vs {direct2}"
        );
    }

    #[test]
    fn projection_is_idempotent_and_contracts() {
        let m = Multiplier::trivial();
        // e^{iλ}-type profile with gaussian envelope projects onto cos
        let f = TubeFunction::new(line(), 1.0, |l| {
            C64::new(0.0, l[0]).exp() * (-l[0] * l[0] / 2.0).exp()
        });
        let p = project_tau_invariant(&f, &m);
        for &l in &[0.3f64, 1.1] {
            let expect = C64::new(l.cos() * (-l * l / 2.0).exp(), 0.0);
            assert!((p.profile(&[l]) - expect).norm() < 1e-14);
        }
        let pp = project_tau_invariant(&p, &m);
        for &l in &[0.0, 0.7, 2.0] {
            assert!((pp.profile(&[l]) - p.profile(&[l])).norm() < 1e-12);
        }
        assert!(tube_hardy_norm(&p).unwrap() <= tube_hardy_norm(&f).unwrap() + 1e-12);
    }

    #[test]
    fn multiplier_cocycle_verification() {
        let model = line();
        // sign character: m(s, λ) = sign(s) — a valid unimodular cocycle
        let m = Multiplier::new(|s, _| C64::new(if s == 0 { 1.0 } else { -1.0 }, 0.0));
        m.verify(&model, &[vec![0.4], vec![-1.7]]).unwrap();
        // an even phase on the reflection breaks the cocycle law
        // (m(e) = 1 but m(eps,-l)m(eps,l) = e^{2il^2} != 1)
        let bad = Multiplier::new(|s, l| {
            C64::new(0.0, if s == 1 { l[0] * l[0] } else { 0.0 }).exp()
        });
        assert!(bad.verify(&model, &[vec![0.5]]).is_err());
    }

    #[test]
    fn experimental_2d_model_builds_and_bounds() {
        let m = ReflectionModel::sign_flips_2d([1.0, 0.5]).unwrap();
        assert!(m.experimental);
        assert!(m.in_omega(&[0.5, -0.2]));
        assert!(!m.in_omega(&[1.1, 0.0]));
        for &(y, l) in &[([0.3, 0.1], [1.0, -2.0]), ([-0.7, 0.4], [0.2, 0.8])] {
            assert!(tube_cosh(&m, &y, &l) <= tube_cosh(&m, &m.y_o.clone(), &l) + 1e-13);
        }
    }
}
