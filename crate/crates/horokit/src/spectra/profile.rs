//! Spectral profiles ĥ(ℓ): even, rapidly decaying densities of the wave
//! packets. The concrete family is gaussian × even polynomial, which
//! satisfies the Schwartz-type decay the Hardy-space test functions need.

use serde::{Deserialize, Serialize};

/// Real spectral parameter in ρ-coordinates (λ = iℓρ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectralParam {
    pub ell: f64,
}

/// ĥ(ℓ) = poly(ℓ²)·exp(−(ℓ−μ)²/(2σ²)) symmetrized in ℓ (the center μ is
/// mirrored so the profile is even; μ = 0 gives a plain even gaussian).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralProfile {
    pub sigma: f64,
    /// Coefficients of the even polynomial in ℓ²: c₀ + c₁ℓ² + c₂ℓ⁴ + …
    pub even_coeffs: Vec<f64>,
    /// Mirrored gaussian center (0 for the broadband packets).
    #[serde(default)]
    pub center: f64,
}

impl SpectralProfile {
    pub fn gaussian(sigma: f64) -> Self {
        Self {
            sigma,
            even_coeffs: vec![1.0],
            center: 0.0,
        }
    }

    pub fn gaussian_poly(sigma: f64, even_coeffs: Vec<f64>) -> Self {
        Self {
            sigma,
            even_coeffs,
            center: 0.0,
        }
    }

    /// Narrow window centered (symmetrically) at ±μ.
    pub fn narrow(center: f64, width: f64) -> Self {
        Self {
            sigma: width,
            even_coeffs: vec![1.0],
            center,
        }
    }

    pub fn eval(&self, ell: f64) -> f64 {
        let poly: f64 = self
            .even_coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * ell * ell + c);
        let g = |mu: f64| (-((ell - mu) * (ell - mu)) / (2.0 * self.sigma * self.sigma)).exp();
        let bump = if self.center == 0.0 {
            g(0.0)
        } else {
            g(self.center) + g(-self.center)
        };
        poly * bump
    }

    /// Radius L with |ĥ| ≤ eps · max|ĥ| outside [−L, L]; the declared
    /// decay data every tail-truncation leans on.
    pub fn support_radius(&self, eps: f64) -> f64 {
        let spread = (2.0 * (1.0 / eps).ln()).sqrt() * self.sigma;
        let degree = 2.0 * (self.even_coeffs.len() as f64 - 1.0);
        // polynomial growth widens the window by a few sigmas
        self.center.abs() + spread + degree.sqrt() * self.sigma + 2.0 * self.sigma
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profile_is_even() {
        let p = SpectralProfile::gaussian_poly(0.8, vec![1.0, 0.25]);
        for &l in &[0.3, 1.0, 2.7] {
            assert_eq!(p.eval(l), p.eval(-l));
        }
        let n = SpectralProfile::narrow(3.0, 0.35);
        assert!((n.eval(2.0) - n.eval(-2.0)).abs() < 1e-16);
    }

    #[test]
    fn decay_bound_on_a_grid() {
        let p = SpectralProfile::gaussian_poly(1.0, vec![1.0, 0.1]);
        let l = p.support_radius(1e-12);
        for k in 0..20 {
            let x = l + k as f64 * 0.5;
            assert!(p.eval(x).abs() < 1e-10);
        }
    }
}
