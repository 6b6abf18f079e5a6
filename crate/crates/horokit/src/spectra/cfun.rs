//! Harish-Chandra c-function and Plancherel density in ρ-coordinates
//! (the SL(2,ℝ)-type lane, i.e. the n = 2 quadric):
//!
//!   c(λ) = π^{−1/2} Γ(λ/2) / Γ((λ+1)/2),
//!   |c(iℓ)|^{−2} = (πℓ/2) tanh(πℓ/2).

use crate::error::Result;
use crate::numerics::cgamma;
use crate::C64;
use std::f64::consts::PI;

/// c(λ) for complex λ in ρ-coordinates.
pub fn harish_chandra_c(lambda: C64) -> Result<C64> {
    Ok(cgamma(lambda / 2.0)? / cgamma((lambda + 1.0) / 2.0)? / PI.sqrt())
}

/// Plancherel density (πℓ/2)·tanh(πℓ/2); the removable zero at ℓ = 0 is
/// returned as 0.
pub fn plancherel_density(ell: f64) -> f64 {
    if ell == 0.0 {
        return 0.0;
    }
    (PI * ell / 2.0) * (PI * ell / 2.0).tanh()
}

/// The same density computed from the Γ-quotient: 1/(c(iℓ)·c(−iℓ)).
pub fn plancherel_gamma_route(ell: f64) -> Result<f64> {
    let c_plus = harish_chandra_c(C64::new(0.0, ell))?;
    let c_minus = harish_chandra_c(C64::new(0.0, -ell))?;
    Ok((C64::new(1.0, 0.0) / (c_plus * c_minus)).re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert_eq!(plancherel_density(0.0), 0.0);
        // ℓ = 2: π tanh π = 3.1298810956...
        assert!((plancherel_density(2.0) - PI * PI.tanh()).abs() < 1e-15);
        assert!((plancherel_density(2.0) - 3.129_881_035_6).abs() < 1e-9);
    }

    #[test]
    fn gamma_route_matches_closed_form() {
        for &ell in &[0.25, 0.5, 1.0, 2.0, 5.0, 11.0, 24.0, 30.0] {
            let a = plancherel_density(ell);
            let b = plancherel_gamma_route(ell).unwrap();
            assert!(
                (a - b).abs() <= 1e-10 * a.abs(),
                "ell = {ell}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn c_function_normalization() {
        // c(1) = π^{-1/2}Γ(1/2)/Γ(1) = 1
        let c = harish_chandra_c(C64::new(1.0, 0.0)).unwrap();
        assert!((c - C64::new(1.0, 0.0)).norm() < 1e-13);
        // c(2) = π^{-1/2}Γ(1)/Γ(3/2) = 2/π
        let c2 = harish_chandra_c(C64::new(2.0, 0.0)).unwrap();
        assert!((c2.re - 2.0 / PI).abs() < 1e-13);
    }
}
