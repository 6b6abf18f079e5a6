//! Rank-one model geometry: the Lorentz group SO_e(1,n) acting on the
//! complex quadric X_ℂ = {□(z) = 1}, horosphere parameters on the null
//! quadric Ξ = {□(ζ) = 0, ζ ≠ 0}, the closed-form Iwasawa projection, the
//! Minkowski pairing ξ·y and the Cauchy kernel 1/(1 − ξ·y).
//!
//! Base points: x_o = (1,0,…,0), ξ_o = (1,0,…,0,1), y_o = z_H·x_o =
//! (0,…,0,i) with z_H = exp(i(π/2)Z) and Z the boost generator normalized
//! by α(Z) = 1.

mod flambda;
mod group;
mod horo;
mod iwasawa;
mod model;
mod sample;

pub use flambda::{eval_f_lambda, WeylElement};
pub use group::{make_generator, minkowski_pair, rotation_block, Generator, GroupElement};
pub use horo::{cauchy_kernel, horosphere_contains, HoroParam};
pub use iwasawa::{iwasawa_point, IwasawaFactors};
pub use model::{QuadricPoint, RankOneModel};
pub use sample::{sample_xi, sample_y, SampleRanges};
