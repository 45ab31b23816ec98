//! Gauss quadrature rules built from the symmetric Jacobi recurrence:
//! nodes by Sturm-count bisection on the Jacobi matrix, weights by the
//! Christoffel-function formula. No initial-guess tuning, fully deterministic.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, Mutex, OnceLock};

/// A one-dimensional quadrature rule: Σ wᵢ h(xᵢ) ≈ ∫ h dμ.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

struct Recurrence {
    /// μ₀ = ∫ dμ.
    mu0: f64,
    /// Off-diagonal coefficients b_1..b_{n-1} of the Jacobi matrix
    /// (diagonal is zero: both weights used here are even).
    offdiag: Vec<f64>,
}

fn legendre_recurrence(n: usize) -> Recurrence {
    let offdiag = (1..n)
        .map(|k| {
            let k = k as f64;
            k / (4.0 * k * k - 1.0).sqrt()
        })
        .collect();
    Recurrence { mu0: 2.0, offdiag }
}

fn hermite_recurrence(n: usize) -> Recurrence {
    // Weight e^{-x²} on the line.
    let offdiag = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    Recurrence {
        mu0: PI.sqrt(),
        offdiag,
    }
}

/// Number of eigenvalues of the Jacobi matrix strictly below `x`
/// (Sturm count via the LDLᵀ pivots).
fn sturm_count(rec: &Recurrence, n: usize, x: f64) -> usize {
    // Zero pivots (including -0.0 from x = 0) are nudged negative so exact
    // hits on an eigenvalue count as "below".
    let mut count = 0;
    let mut d = -x;
    if d == 0.0 {
        d = -f64::MIN_POSITIVE;
    }
    if d < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let b = rec.offdiag[i - 1];
        let mut dd = -x - b * b / d;
        if dd == 0.0 {
            dd = -f64::MIN_POSITIVE;
        }
        if dd < 0.0 {
            count += 1;
        }
        d = dd;
    }
    count
}

/// All orthonormal polynomial values p₀(x)..p_{n-1}(x).
fn orthonormal_values(rec: &Recurrence, n: usize, x: f64) -> Vec<f64> {
    let mut p = Vec::with_capacity(n);
    p.push(1.0 / rec.mu0.sqrt());
    if n > 1 {
        p.push(x * p[0] / rec.offdiag[0]);
    }
    for k in 2..n {
        let val = (x * p[k - 1] - rec.offdiag[k - 2] * p[k - 2]) / rec.offdiag[k - 1];
        p.push(val);
    }
    p
}

fn build_rule(rec: &Recurrence, n: usize) -> GaussRule {
    assert!(n >= 1);
    // Gershgorin bound on the spectrum.
    let mut radius = 0.0_f64;
    for i in 0..n {
        let left = if i >= 1 { rec.offdiag[i - 1].abs() } else { 0.0 };
        let right = if i + 1 < n { rec.offdiag[i].abs() } else { 0.0 };
        radius = radius.max(left + right);
    }
    radius += 1.0;

    let mut nodes = Vec::with_capacity(n);
    for k in 0..n {
        // Bisect for the (k+1)-th smallest eigenvalue.
        let (mut lo, mut hi) = (-radius, radius);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if sturm_count(rec, n, mid) <= k {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= f64::EPSILON * radius {
                break;
            }
        }
        nodes.push(0.5 * (lo + hi));
    }

    let weights = nodes
        .iter()
        .map(|&x| {
            let p = orthonormal_values(rec, n, x);
            1.0 / p.iter().map(|v| v * v).sum::<f64>()
        })
        .collect();

    GaussRule { nodes, weights }
}

type RuleCache = Mutex<HashMap<usize, Arc<GaussRule>>>;

fn cache() -> &'static (RuleCache, RuleCache) {
    static CACHE: OnceLock<(RuleCache, RuleCache)> = OnceLock::new();
    CACHE.get_or_init(|| (Mutex::new(HashMap::new()), Mutex::new(HashMap::new())))
}

/// n-point Gauss–Legendre rule on [-1, 1] (weight 1).
pub fn gauss_legendre(n: usize) -> Arc<GaussRule> {
    let mut map = cache().0.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| Arc::new(build_rule(&legendre_recurrence(n), n)))
        .clone()
}

/// n-point Gauss–Hermite rule on the line (weight e^{-x²}).
pub fn gauss_hermite(n: usize) -> Arc<GaussRule> {
    let mut map = cache().1.lock().unwrap();
    map.entry(n)
        .or_insert_with(|| Arc::new(build_rule(&hermite_recurrence(n), n)))
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn legendre_exact_for_high_degree_polynomials() {
        // An n-point rule integrates degree 2n-1 exactly.
        let rule = gauss_legendre(16);
        for deg in [0usize, 7, 18, 30] {
            let num: f64 = rule
                .nodes
                .iter()
                .zip(&rule.weights)
                .map(|(&x, &w)| w * x.powi(deg as i32))
                .sum();
            let exact = if deg % 2 == 0 {
                2.0 / (deg as f64 + 1.0)
            } else {
                0.0
            };
            assert_relative_eq!(num, exact, epsilon = 1e-14, max_relative = 1e-13);
        }
    }

    #[test]
    fn legendre_weights_sum_to_measure() {
        for n in [4usize, 64, 512] {
            let rule = gauss_legendre(n);
            let total: f64 = rule.weights.iter().sum();
            assert_relative_eq!(total, 2.0, max_relative = 1e-13);
        }
    }

    #[test]
    fn hermite_moments() {
        let rule = gauss_hermite(32);
        let total: f64 = rule.weights.iter().sum();
        assert_relative_eq!(total, PI.sqrt(), max_relative = 1e-13);
        // ∫ x² e^{-x²} = √π/2, ∫ x⁴ e^{-x²} = 3√π/4
        let m2: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| w * x * x)
            .sum();
        assert_relative_eq!(m2, PI.sqrt() / 2.0, max_relative = 1e-13);
        let m4: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| w * x.powi(4))
            .sum();
        assert_relative_eq!(m4, 0.75 * PI.sqrt(), max_relative = 1e-13);
    }

    #[test]
    fn hermite_entire_integrand() {
        // ∫ e^{cx} e^{-x²} dx = √π e^{c²/4}
        let rule = gauss_hermite(64);
        let c = 1.7;
        let num: f64 = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &w)| w * (c * x).exp())
            .sum();
        assert_relative_eq!(
            num,
            PI.sqrt() * (c * c / 4.0).exp(),
            max_relative = 1e-12
        );
    }

    #[test]
    fn nodes_are_sorted_and_symmetric() {
        let rule = gauss_legendre(33);
        for i in 1..rule.nodes.len() {
            assert!(rule.nodes[i] > rule.nodes[i - 1]);
        }
        for i in 0..rule.nodes.len() {
            let j = rule.nodes.len() - 1 - i;
            assert_relative_eq!(rule.nodes[i], -rule.nodes[j], epsilon = 1e-13);
            assert_relative_eq!(rule.weights[i], rule.weights[j], max_relative = 1e-11);
        }
    }
}
