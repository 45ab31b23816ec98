//! Zonal functions on the unit d-sphere: values depend on the latitude only.
//!
//! The grid is Gauss–Legendre in x = cos θ with the sin^{d-1} θ weight folded
//! into the quadrature weights, normalised so the rule integrates the
//! constant 1 to exactly 1 against the uniform probability measure.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quad::rules::gauss_legendre;

#[derive(Debug)]
pub struct ZonalGrid {
    pub d: usize,
    /// x = cos θ nodes, ascending in (-1, 1).
    pub x: Vec<f64>,
    /// probability weights, Σ w = 1 exactly.
    pub w: Vec<f64>,
}

impl ZonalGrid {
    pub fn new(d: usize, n: usize) -> Result<Arc<Self>> {
        if d < 2 {
            return Err(Error::OutOfRange(format!("sphere dimension {d} < 2")));
        }
        if n < 8 {
            return Err(Error::invalid("zonal grid needs at least 8 latitudes"));
        }
        let rule = gauss_legendre(n);
        let half = (d as f64 - 2.0) / 2.0;
        let mut w: Vec<f64> = rule
            .nodes
            .iter()
            .zip(&rule.weights)
            .map(|(&x, &gw)| gw * (1.0 - x * x).powf(half))
            .collect();
        let total: f64 = w.iter().sum();
        for wi in &mut w {
            *wi /= total;
        }
        Ok(Arc::new(ZonalGrid {
            d,
            x: rule.nodes.clone(),
            w,
        }))
    }

    /// Default laboratory resolution.
    pub fn default_for(d: usize) -> Result<Arc<Self>> {
        ZonalGrid::new(d, 512)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }

    /// ∫ h dμ against the uniform probability measure.
    pub fn integrate(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.len());
        self.w.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    /// d/dx of node values by 3-point non-uniform differences.
    pub fn derivative(&self, values: &[f64]) -> Vec<f64> {
        let n = self.len();
        let mut out = vec![0.0; n];
        for i in 0..n {
            if i == 0 {
                let (h1, h2) = (self.x[1] - self.x[0], self.x[2] - self.x[0]);
                out[i] = (values[1] * h2 * h2 - values[2] * h1 * h1
                    - values[0] * (h2 * h2 - h1 * h1))
                    / (h1 * h2 * (h2 - h1));
            } else if i == n - 1 {
                let (h1, h2) = (self.x[n - 1] - self.x[n - 2], self.x[n - 1] - self.x[n - 3]);
                out[i] = (values[n - 2] * h2 * h2 - values[n - 3] * h1 * h1
                    - values[n - 1] * (h2 * h2 - h1 * h1))
                    / (h1 * h2 * (h1 - h2));
            } else {
                let hl = self.x[i] - self.x[i - 1];
                let hr = self.x[i + 1] - self.x[i];
                out[i] = (hr * hr * (values[i] - values[i - 1])
                    + hl * hl * (values[i + 1] - values[i]))
                    / (hl * hr * (hl + hr));
            }
        }
        out
    }
}

/// A discretised zonal function on S^d.
#[derive(Debug, Clone)]
pub struct ZonalFunction {
    pub grid: Arc<ZonalGrid>,
    pub values: Vec<f64>,
    pub signed: bool,
}

impl ZonalFunction {
    pub fn new(grid: Arc<ZonalGrid>, values: Vec<f64>, signed: bool) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::invalid(format!(
                "value count {} does not match latitude count {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("zonal function values"));
        }
        if !signed && values.iter().any(|v| *v < 0.0) {
            return Err(Error::invalid(
                "negative value in a function flagged nonnegative",
            ));
        }
        Ok(ZonalFunction {
            grid,
            values,
            signed,
        })
    }

    /// Build from a function of x = cos θ.
    pub fn from_fn(grid: Arc<ZonalGrid>, f: impl Fn(f64) -> f64, signed: bool) -> Result<Self> {
        let values = grid.x.iter().map(|&x| f(x)).collect();
        ZonalFunction::new(grid, values, signed)
    }

    pub fn d(&self) -> usize {
        self.grid.d
    }

    /// ∫ F dμ.
    pub fn mean(&self) -> f64 {
        self.grid.integrate(&self.values)
    }

    /// ∫ |F|^p dμ.
    pub fn integrate_pow(&self, p: f64) -> Result<f64> {
        if p < 1.0 {
            return Err(Error::OutOfRange(format!("integrand power {p} < 1")));
        }
        let vals: Vec<f64> = self.values.iter().map(|v| v.abs().powf(p)).collect();
        Ok(self.grid.integrate(&vals))
    }

    /// L^p(μ) norm against the probability measure.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        Ok(self.integrate_pow(p)?.powf(1.0 / p))
    }

    /// ∫ |∇F|² dμ where for zonal F, |∇F|² = (1 - x²) F'(x)².
    pub fn dirichlet_energy(&self) -> f64 {
        let deriv = self.grid.derivative(&self.values);
        let vals: Vec<f64> = deriv
            .iter()
            .zip(&self.grid.x)
            .map(|(g, &x)| (1.0 - x * x) * g * g)
            .collect();
        self.grid.integrate(&vals).max(0.0)
    }

    /// ∫ (|∇F|² + a F²) dμ.
    pub fn h1_energy(&self, a: f64) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|v| v * v).collect();
        self.dirichlet_energy() + a * self.grid.integrate(&sq)
    }

    /// ∫ F G dμ for same-grid functions.
    pub fn inner(&self, other: &ZonalFunction) -> f64 {
        debug_assert_eq!(self.grid.len(), other.grid.len());
        let vals: Vec<f64> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        self.grid.integrate(&vals)
    }
}
