//! Tensor-product quadrature for the Gaussian probability measure
//! dγ(x) = e^{-π|x|²} dx on R^N.
//!
//! Substituting x = y/√π turns ∫ u dγ into a product of standard
//! Gauss–Hermite integrals; weights are renormalised so ∫ 1 dγ = 1 exactly.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quad::rules::gauss_hermite;

#[derive(Debug)]
pub struct GaussGrid {
    pub n_dim: usize,
    /// per-axis nodes (shared across axes)
    pub nodes: Vec<f64>,
    /// per-axis probability weights, Σ = 1
    pub weights: Vec<f64>,
}

impl GaussGrid {
    pub fn new(n_dim: usize, points_per_axis: usize) -> Result<Arc<Self>> {
        if n_dim < 1 {
            return Err(Error::OutOfRange("Gaussian dimension must be >= 1".into()));
        }
        if points_per_axis < 4 {
            return Err(Error::invalid("need at least 4 Gauss points per axis"));
        }
        let rule = gauss_hermite(points_per_axis);
        let sqrt_pi = PI.sqrt();
        let nodes: Vec<f64> = rule.nodes.iter().map(|&y| y / sqrt_pi).collect();
        let mut weights: Vec<f64> = rule.weights.clone();
        let total: f64 = weights.iter().sum();
        for w in &mut weights {
            *w /= total;
        }
        Ok(Arc::new(GaussGrid {
            n_dim,
            nodes,
            weights,
        }))
    }

    /// Default resolution, scaled down in higher dimension to keep the
    /// tensor product tractable.
    pub fn default_for(n_dim: usize) -> Result<Arc<Self>> {
        let pts = match n_dim {
            1 => 64,
            2 => 48,
            _ => 32,
        };
        GaussGrid::new(n_dim, pts)
    }

    pub fn points_per_axis(&self) -> usize {
        self.nodes.len()
    }

    pub fn total_points(&self) -> usize {
        self.points_per_axis().pow(self.n_dim as u32)
    }

    /// Visit every tensor node: callback gets (flat index, coordinates, weight).
    pub fn for_each_node(&self, mut f: impl FnMut(usize, &[f64], f64)) {
        let m = self.points_per_axis();
        let n = self.n_dim;
        let total = self.total_points();
        let mut coords = vec![0.0_f64; n];
        let mut idx = vec![0usize; n];
        for flat in 0..total {
            let mut rem = flat;
            let mut w = 1.0;
            for a in 0..n {
                let k = rem % m;
                rem /= m;
                idx[a] = k;
                coords[a] = self.nodes[k];
                w *= self.weights[k];
            }
            f(flat, &coords, w);
        }
    }

    /// ∫ u dγ for a closure.
    pub fn integrate(&self, u: impl Fn(&[f64]) -> f64) -> f64 {
        let mut acc = 0.0;
        self.for_each_node(|_, x, w| acc += w * u(x));
        acc
    }

    /// ∫ u(x) e^{-π|x-b|²} dx = ∫ u(y + b) dγ(y): the same rule against a
    /// shifted Gaussian kernel.
    pub fn integrate_shifted(&self, b: &[f64], u: impl Fn(&[f64]) -> f64) -> Result<f64> {
        if b.len() != self.n_dim {
            return Err(Error::invalid(format!(
                "shift has dimension {}, grid has {}",
                b.len(),
                self.n_dim
            )));
        }
        let mut acc = 0.0;
        let mut shifted = vec![0.0_f64; self.n_dim];
        self.for_each_node(|_, x, w| {
            for (i, xi) in x.iter().enumerate() {
                shifted[i] = xi + b[i];
            }
            acc += w * u(&shifted);
        });
        Ok(acc)
    }

    /// ∫ u dγ from flat node values (ordering of [`Self::for_each_node`]).
    pub fn integrate_values(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.total_points());
        let mut acc = 0.0;
        self.for_each_node(|flat, _, w| acc += w * values[flat]);
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn normalised_to_probability() {
        for n in 1..=3 {
            let g = GaussGrid::new(n, 24).unwrap();
            assert!((g.integrate(|_| 1.0) - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn second_moment_is_one_over_two_pi() {
        let g = GaussGrid::new(1, 32).unwrap();
        assert_relative_eq!(
            g.integrate(|x| x[0] * x[0]),
            1.0 / (2.0 * PI),
            max_relative = 1e-12
        );
    }

    #[test]
    fn exponential_tilt_closed_form() {
        // ∫ e^{2πb·x} dγ = e^{π|b|²}
        let g = GaussGrid::new(1, 64).unwrap();
        let b = 1.0;
        assert_relative_eq!(
            g.integrate(|x| (2.0 * PI * b * x[0]).exp()),
            (PI * b * b).exp(),
            max_relative = 1e-11
        );
        let g2 = GaussGrid::new(2, 40).unwrap();
        let bb = [0.6, -0.3];
        assert_relative_eq!(
            g2.integrate(|x| (2.0 * PI * (bb[0] * x[0] + bb[1] * x[1])).exp()),
            (PI * (bb[0] * bb[0] + bb[1] * bb[1])).exp(),
            max_relative = 1e-11
        );
    }

    #[test]
    fn shifted_kernel_matches_translation() {
        let g = GaussGrid::new(1, 48).unwrap();
        let b = [0.8];
        // ∫ x e^{-π|x-b|²} dx = b
        let got = g.integrate_shifted(&b, |x| x[0]).unwrap();
        assert_relative_eq!(got, 0.8, max_relative = 1e-12);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let g = GaussGrid::new(2, 16).unwrap();
        assert!(g.integrate_shifted(&[1.0], |_| 1.0).is_err());
    }
}
