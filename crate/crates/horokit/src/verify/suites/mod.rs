pub mod cauchy_radon;
pub mod geometry;
pub mod hardy_norm;
pub mod inversion;
pub mod kernels;
pub mod specfun;
pub mod tube;
