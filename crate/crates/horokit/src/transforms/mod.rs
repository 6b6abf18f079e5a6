//! The transforms: Hardy-function evaluation (interior and boundary),
//! real and holomorphic horospherical Radon, Abel, Cauchy, the dual
//! transform, and the inversion pipeline f = (ℒℛf)^∨.

mod abel;
mod cauchy;
mod dual;
mod invert;
mod packet;
pub mod radon;

pub use abel::{abel_direct, abel_spectral, fourier_abel};
pub use cauchy::{
    cauchy_transform, cauchy_transform_translated, cauchy_transform_with, y_sample_point,
};
pub use dual::{dual_transform, h_orbit_point};
pub use invert::{invert, invert_operational, invert_spectral_shortcut, InversionCheck};
pub use packet::{eval_packet, TransformResult, WavePacket};
pub use radon::{
    radon_direct, radon_direct_translated, radon_paper_display, radon_spectral,
    radon_spectral_from_pairing,
};
