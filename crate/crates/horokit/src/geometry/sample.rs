//! Seeded random samplers for Y and Ξ_c through explicit NAW / KAT
//! coordinates. Deterministic given the seed, so parallel verification
//! sweeps are reproducible.

use super::group::{make_generator, rotation_block, Generator, GroupElement};
use super::horo::HoroParam;
use super::model::{QuadricPoint, RankOneModel};
use crate::error::Result;
use crate::C64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameter ranges for the coordinate samplers.
#[derive(Debug, Clone, Copy)]
pub struct SampleRanges {
    /// |s| bound for the A-coordinate.
    pub a_range: f64,
    /// |v_j| bound for the N-coordinates.
    pub n_range: f64,
    /// Whether to mix in the Weyl reflection.
    pub weyl: bool,
}

impl Default for SampleRanges {
    fn default() -> Self {
        Self {
            a_range: 2.5,
            n_range: 2.5,
            weyl: true,
        }
    }
}

impl SampleRanges {
    pub fn trivial() -> Self {
        Self {
            a_range: 0.0,
            n_range: 0.0,
            weyl: false,
        }
    }
}

fn random_group_element(
    model: &RankOneModel,
    rng: &mut ChaCha8Rng,
    ranges: &SampleRanges,
) -> Result<GroupElement> {
    let n = model.n();
    let s = if ranges.a_range > 0.0 {
        rng.gen_range(-ranges.a_range..ranges.a_range)
    } else {
        0.0
    };
    let v: Vec<C64> = (0..n - 1)
        .map(|_| {
            let x = if ranges.n_range > 0.0 {
                rng.gen_range(-ranges.n_range..ranges.n_range)
            } else {
                0.0
            };
            C64::new(x, 0.0)
        })
        .collect();
    let mut g = make_generator(model, Generator::Unipotent(v))?
        .compose(&make_generator(model, Generator::BoostA(C64::new(s, 0.0)))?);
    // a generic K-part: product of planar rotations
    for i in 0..n - 1 {
        let angle = rng.gen_range(-std::f64::consts::PI..std::f64::consts::PI);
        g = g.compose(&make_generator(
            model,
            Generator::Rotation(rotation_block(n, (i, i + 1), angle)),
        )?);
    }
    Ok(g)
}

/// Sample points of Y = G·y_o as a_s n_v w·y_o over the declared ranges.
pub fn sample_y(
    model: &RankOneModel,
    count: usize,
    seed: u64,
    ranges: &SampleRanges,
) -> Result<Vec<QuadricPoint>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weyl = GroupElement::weyl_eps(model);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let s = if ranges.a_range > 0.0 {
            rng.gen_range(-ranges.a_range..ranges.a_range)
        } else {
            0.0
        };
        let v: Vec<C64> = (0..model.n() - 1)
            .map(|_| {
                let x = if ranges.n_range > 0.0 {
                    rng.gen_range(-ranges.n_range..ranges.n_range)
                } else {
                    0.0
                };
                C64::new(x, 0.0)
            })
            .collect();
        let a = make_generator(model, Generator::BoostA(C64::new(s, 0.0)))?;
        let nv = make_generator(model, Generator::Unipotent(v))?;
        let mut g = a.compose(&nv);
        if ranges.weyl && rng.gen_bool(0.5) {
            g = g.compose(&weyl);
        }
        out.push(g.apply_point(&model.y_o()));
    }
    Ok(out)
}

/// Sample horosphere parameters ξ = g·exp(itZ)·ξ_o ∈ Ξ_c, |t| ≤ c.
pub fn sample_xi(
    model: &RankOneModel,
    c: f64,
    count: usize,
    seed: u64,
    ranges: &SampleRanges,
) -> Result<Vec<HoroParam>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let g = random_group_element(model, &mut rng, ranges)?;
        let t = rng.gen_range(-c..=c);
        out.push(HoroParam::from_coset(model, g, t)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::minkowski_pair;

    #[test]
    fn trivial_ranges_return_the_base_point() {
        let m = RankOneModel::new(2).unwrap();
        let ys = sample_y(&m, 1, 7, &SampleRanges::trivial()).unwrap();
        assert!((ys[0].0.clone() - m.y_o().0).map(|z| z.norm()).max() < 1e-14);
    }

    #[test]
    fn y_samples_are_purely_imaginary_with_unit_lorentz_norm() {
        // Y = {iy : □(y) = −1}: components purely imaginary, so the box
        // form of the imaginary part is −1 (and of the point itself +1)
        let m = RankOneModel::new(3).unwrap();
        for y in sample_y(&m, 64, 11, &SampleRanges::default()).unwrap() {
            assert!(y.0.iter().all(|z| z.re.abs() < 1e-10));
            let im_part = y.0.map(|z| C64::new(z.im, 0.0));
            assert!((m.box_form(&im_part) - C64::new(-1.0, 0.0)).norm() < 1e-10);
            assert!((m.box_form(&y.0) - C64::new(1.0, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn samplers_are_deterministic_in_the_seed() {
        let m = RankOneModel::new(2).unwrap();
        let a = sample_xi(&m, 1.0, 16, 42, &SampleRanges::default()).unwrap();
        let b = sample_xi(&m, 1.0, 16, 42, &SampleRanges::default()).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.zeta, y.zeta);
        }
    }

    #[test]
    fn xi_samples_separate_from_y_samples() {
        // Lemma-type separation at c = π/2 − 0.1: |1 − ξ·y| stays > 0.05
        let m = RankOneModel::new(2).unwrap();
        let xis = sample_xi(&m, std::f64::consts::FRAC_PI_2 - 0.1, 24, 3, &SampleRanges::default())
            .unwrap();
        let ys = sample_y(&m, 100, 4, &SampleRanges::default()).unwrap();
        for xi in &xis {
            for y in &ys {
                let p = minkowski_pair(&xi.zeta, &y.0).unwrap();
                assert!((C64::new(1.0, 0.0) - p).norm() > 0.05);
            }
        }
    }
}
