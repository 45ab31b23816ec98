//! Log-gamma and unit-sphere surface areas, accurate far into the
//! high-dimension range used by the large-d sweeps.

use std::f64::consts::PI;

/// ln Γ(x) for x > 0.
///
/// Stirling's series with the first Bernoulli corrections, pushed into its
/// accurate range by upward recurrence. Relative accuracy is a few ulps for
/// the arguments this crate uses (x up to a few thousand).
pub fn ln_gamma(x: f64) -> f64 {
    assert!(x > 0.0 && x.is_finite(), "ln_gamma needs x > 0, got {x}");
    // Γ(x) = Γ(x+n) / (x (x+1) ... (x+n-1)); shift until the series is safe.
    let mut shift = 0.0_f64;
    let mut z = x;
    while z < 12.0 {
        shift += z.ln();
        z += 1.0;
    }
    // Stirling: ln Γ(z) ≈ (z-1/2) ln z - z + ln(2π)/2 + Σ B_{2k}/(2k(2k-1) z^{2k-1})
    const C: [f64; 7] = [
        1.0 / 12.0,
        -1.0 / 360.0,
        1.0 / 1260.0,
        -1.0 / 1680.0,
        1.0 / 1188.0,
        -691.0 / 360_360.0,
        1.0 / 156.0,
    ];
    let zi = 1.0 / z;
    let zi2 = zi * zi;
    let mut series = 0.0;
    let mut p = zi;
    for c in C {
        series += c * p;
        p *= zi2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + series - shift
}

/// Surface area |S^d| of the unit d-sphere in R^{d+1}.
///
/// |S^d| = 2 π^{(d+1)/2} / Γ((d+1)/2), evaluated in log space.
pub fn sphere_area(d: usize) -> f64 {
    ln_sphere_area(d).exp()
}

/// ln |S^d|; safe for d in the hundreds where |S^d| underflows.
pub fn ln_sphere_area(d: usize) -> f64 {
    let h = (d as f64 + 1.0) / 2.0;
    (2.0_f64).ln() + h * PI.ln() - ln_gamma(h)
}

/// Volume |B^d| of the unit ball in R^d (|S^{d-1}|/d).
pub fn ball_volume(d: usize) -> f64 {
    assert!(d >= 1);
    sphere_area(d - 1) / d as f64
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn ln_gamma_matches_factorials() {
        // Γ(n) = (n-1)!
        let mut fact = 1.0_f64;
        for n in 2..=20 {
            fact *= (n - 1) as f64;
            assert_relative_eq!(ln_gamma(n as f64), fact.ln(), max_relative = 1e-13);
        }
    }

    #[test]
    fn ln_gamma_half_integers() {
        // Γ(1/2) = √π, Γ(3/2) = √π/2, Γ(5/2) = 3√π/4
        assert_relative_eq!(ln_gamma(0.5), PI.sqrt().ln(), max_relative = 1e-14);
        assert_relative_eq!(ln_gamma(1.5), (PI.sqrt() / 2.0).ln(), max_relative = 1e-13);
        assert_relative_eq!(
            ln_gamma(2.5),
            (3.0 * PI.sqrt() / 4.0).ln(),
            max_relative = 1e-13
        );
    }

    #[test]
    fn ln_gamma_duplication_formula_large_argument() {
        // Γ(2z) = Γ(z) Γ(z+1/2) 2^{2z-1} / √π, exercised at large z.
        for &z in &[50.0, 123.5, 400.0, 1000.0] {
            let lhs = ln_gamma(2.0 * z);
            let rhs = ln_gamma(z) + ln_gamma(z + 0.5) + (2.0 * z - 1.0) * (2.0_f64).ln()
                - 0.5 * PI.ln();
            assert_relative_eq!(lhs, rhs, max_relative = 1e-13);
        }
    }

    #[test]
    fn sphere_areas_low_dimensions() {
        // |S^1| = 2π, |S^2| = 4π, |S^3| = 2π², |S^4| = 8π²/3
        assert_relative_eq!(sphere_area(1), 2.0 * PI, max_relative = 1e-14);
        assert_relative_eq!(sphere_area(2), 4.0 * PI, max_relative = 1e-14);
        assert_relative_eq!(sphere_area(3), 2.0 * PI * PI, max_relative = 1e-14);
        assert_relative_eq!(sphere_area(4), 8.0 * PI * PI / 3.0, max_relative = 1e-13);
    }

    #[test]
    fn ball_volume_low_dimensions() {
        assert_relative_eq!(ball_volume(2), PI, max_relative = 1e-14);
        assert_relative_eq!(ball_volume(3), 4.0 * PI / 3.0, max_relative = 1e-14);
    }
}
