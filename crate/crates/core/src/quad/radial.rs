//! Radial functions on R^d: compactified grids, quadrature, gradients.
//!
//! The default grid maps ρ = tan(πσ/2) with uniform σ-nodes on [0, 1), so the
//! polynomially decaying far field of the extremal functions is resolved.
//! Integrals are computed in the σ variable (composite Simpson plus an
//! extrapolated final panel covering [σ_max, 1)); derivatives use 4th-order
//! differences in σ. Grids with explicit, non-uniform nodes fall back to
//! trapezoid weights and 3-point differences.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::special::sphere_area;

/// Discretisation of [0, ∞) for radial functions in dimension d.
#[derive(Debug)]
pub struct RadialGrid {
    pub d: usize,
    /// Radii, strictly increasing, r[0] = 0.
    pub r: Vec<f64>,
    /// Weights for ∫₀^∞ h(r) dr ≈ Σ wᵢ h(rᵢ).
    w: Vec<f64>,
    /// dρ/dσ at the nodes when the grid is tan-mapped.
    jac: Option<Vec<f64>>,
    /// σ spacing for tan-mapped grids.
    dsigma: f64,
    /// |S^{d-1}|, cached.
    area: f64,
}

/// Composite Simpson weights for `n` uniformly spaced nodes (spacing 1).
/// Handles an odd interval count with a trailing 3/8 block.
pub(crate) fn simpson_unit_weights(n: usize) -> Vec<f64> {
    assert!(n >= 4, "need at least 4 nodes");
    let mut w = vec![0.0_f64; n];
    let intervals = n - 1;
    let simpson_end = if intervals % 2 == 0 { n - 1 } else { n - 4 };
    // Simpson pairs on [0, simpson_end]
    let mut i = 0;
    while i + 2 <= simpson_end {
        w[i] += 1.0 / 3.0;
        w[i + 1] += 4.0 / 3.0;
        w[i + 2] += 1.0 / 3.0;
        i += 2;
    }
    if intervals % 2 == 1 {
        // 3/8 rule on the last three intervals
        let b = n - 4;
        w[b] += 3.0 / 8.0;
        w[b + 1] += 9.0 / 8.0;
        w[b + 2] += 9.0 / 8.0;
        w[b + 3] += 3.0 / 8.0;
    }
    w
}

impl RadialGrid {
    /// Tan-compactified grid with `n` nodes: σᵢ = i/n, ρᵢ = tan(πσᵢ/2).
    pub fn tan_map(d: usize, n: usize) -> Result<Arc<Self>> {
        if d < 3 {
            return Err(Error::OutOfRange(format!("radial dimension {d} < 3")));
        }
        if n < 8 {
            return Err(Error::invalid("radial grid needs at least 8 nodes"));
        }
        let dsigma = 1.0 / n as f64;
        let mut r = Vec::with_capacity(n);
        let mut jac = Vec::with_capacity(n);
        for i in 0..n {
            let sigma = i as f64 * dsigma;
            let rho = (PI * sigma / 2.0).tan();
            r.push(rho);
            jac.push(PI / 2.0 * (1.0 + rho * rho));
        }
        // Simpson in σ over [0, σ_{n-1}], then the tail panel [σ_{n-1}, 1):
        // ∫ tail ≈ Δσ (1.5 G_{n-1} - 0.5 G_{n-2}) using linear extrapolation of
        // the mapped integrand to σ = 1.
        let mut w = simpson_unit_weights(n);
        for wi in &mut w {
            *wi *= dsigma;
        }
        w[n - 1] += 1.5 * dsigma;
        w[n - 2] -= 0.5 * dsigma;
        for i in 0..n {
            w[i] *= jac[i];
        }
        Ok(Arc::new(RadialGrid {
            d,
            r,
            w,
            jac: Some(jac),
            dsigma,
            area: sphere_area(d - 1),
        }))
    }

    /// Grid with explicit nodes (r[0] must be 0, strictly increasing).
    pub fn from_nodes(d: usize, nodes: Vec<f64>) -> Result<Arc<Self>> {
        if d < 3 {
            return Err(Error::OutOfRange(format!("radial dimension {d} < 3")));
        }
        if nodes.len() < 4 {
            return Err(Error::invalid("radial grid needs at least 4 nodes"));
        }
        if nodes[0] != 0.0 {
            return Err(Error::invalid("radial nodes must start at r = 0"));
        }
        for i in 1..nodes.len() {
            if !(nodes[i] > nodes[i - 1]) || !nodes[i].is_finite() {
                return Err(Error::invalid(format!(
                    "radial nodes must be strictly increasing and finite (index {i})"
                )));
            }
        }
        let n = nodes.len();
        let mut w = vec![0.0_f64; n];
        for i in 0..n - 1 {
            let h = nodes[i + 1] - nodes[i];
            w[i] += 0.5 * h;
            w[i + 1] += 0.5 * h;
        }
        Ok(Arc::new(RadialGrid {
            d,
            r: nodes,
            w,
            jac: None,
            dsigma: 0.0,
            area: sphere_area(d - 1),
        }))
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn surface_area(&self) -> f64 {
        self.area
    }

    /// ∫_{R^d} h(|x|) dx from node values of h.
    pub fn integrate_values(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.len());
        let mut acc = 0.0;
        for i in 0..self.len() {
            let rd = self.r[i].powi(self.d as i32 - 1);
            acc += self.w[i] * rd * values[i];
        }
        self.area * acc
    }

    /// ∫₀^∞ h(r) dr (no surface weight) from node values.
    pub fn integrate_line(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.len());
        self.w.iter().zip(values).map(|(w, v)| w * v).sum()
    }

    /// d/dr of a node-value profile.
    pub fn derivative(&self, values: &[f64]) -> Vec<f64> {
        debug_assert_eq!(values.len(), self.len());
        let n = self.len();
        let mut out = vec![0.0; n];
        match &self.jac {
            Some(jac) => {
                // 4th order in the uniform σ variable.
                let h = self.dsigma;
                let c = 1.0 / (12.0 * h);
                for i in 0..n {
                    let dsig = if i >= 2 && i + 2 < n {
                        (values[i - 2] - 8.0 * values[i - 1] + 8.0 * values[i + 1]
                            - values[i + 2])
                            * c
                    } else if i == 0 {
                        (-25.0 * values[0] + 48.0 * values[1] - 36.0 * values[2]
                            + 16.0 * values[3]
                            - 3.0 * values[4])
                            * c
                    } else if i == 1 {
                        (-3.0 * values[0] - 10.0 * values[1] + 18.0 * values[2]
                            - 6.0 * values[3]
                            + values[4])
                            * c
                    } else if i == n - 2 {
                        -(-3.0 * values[n - 1] - 10.0 * values[n - 2] + 18.0 * values[n - 3]
                            - 6.0 * values[n - 4]
                            + values[n - 5])
                            * c
                    } else {
                        -(-25.0 * values[n - 1] + 48.0 * values[n - 2] - 36.0 * values[n - 3]
                            + 16.0 * values[n - 4]
                            - 3.0 * values[n - 5])
                            * c
                    };
                    out[i] = dsig / jac[i];
                }
            }
            None => {
                // 3-point non-uniform differences.
                for i in 0..n {
                    if i == 0 {
                        let h = self.r[1] - self.r[0];
                        out[i] = (values[1] - values[0]) / h;
                    } else if i == n - 1 {
                        let h = self.r[n - 1] - self.r[n - 2];
                        out[i] = (values[n - 1] - values[n - 2]) / h;
                    } else {
                        let hl = self.r[i] - self.r[i - 1];
                        let hr = self.r[i + 1] - self.r[i];
                        out[i] = (hr * hr * (values[i] - values[i - 1])
                            + hl * hl * (values[i + 1] - values[i]))
                            / (hl * hr * (hl + hr));
                    }
                }
            }
        }
        out
    }

    /// Cell masses |{r in cell i}| in R^d, exact per cell; used by the
    /// rearrangement bookkeeping. Cell edges are midpoints between nodes.
    pub fn cell_masses(&self) -> Vec<f64> {
        let n = self.len();
        let d = self.d as f64;
        let mut out = Vec::with_capacity(n);
        let mut lower = 0.0_f64;
        for i in 0..n {
            let upper = if i + 1 < n {
                0.5 * (self.r[i] + self.r[i + 1])
            } else {
                // last cell extends to the grid edge
                self.r[n - 1]
            };
            out.push(self.area * (upper.powf(d) - lower.powf(d)) / d);
            lower = upper;
        }
        out
    }
}

/// A discretised radial function.
#[derive(Debug, Clone)]
pub struct RadialFunction {
    pub grid: Arc<RadialGrid>,
    pub values: Vec<f64>,
    /// true when sign changes are allowed.
    pub signed: bool,
}

impl RadialFunction {
    pub fn new(grid: Arc<RadialGrid>, values: Vec<f64>, signed: bool) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::invalid(format!(
                "value count {} does not match node count {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("radial function values"));
        }
        if !signed {
            if let Some(v) = values.iter().find(|v| **v < 0.0) {
                return Err(Error::invalid(format!(
                    "negative value {v} in a function flagged nonnegative"
                )));
            }
        }
        Ok(RadialFunction {
            grid,
            values,
            signed,
        })
    }

    pub fn from_fn(grid: Arc<RadialGrid>, f: impl Fn(f64) -> f64, signed: bool) -> Result<Self> {
        let values = grid.r.iter().map(|&r| f(r)).collect();
        RadialFunction::new(grid, values, signed)
    }

    pub fn d(&self) -> usize {
        self.grid.d
    }

    /// ∫_{R^d} |f|^p dx.
    pub fn integrate_pow(&self, p: f64) -> Result<f64> {
        if p < 1.0 {
            return Err(Error::OutOfRange(format!("integrand power {p} < 1")));
        }
        let vals: Vec<f64> = self.values.iter().map(|v| v.abs().powf(p)).collect();
        Ok(self.grid.integrate_values(&vals).max(0.0))
    }

    /// L^p norm against Lebesgue measure on R^d.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        Ok(self.integrate_pow(p)?.powf(1.0 / p))
    }

    /// ∫ |∇f|² dx via the grid's finite differences.
    pub fn dirichlet_energy(&self) -> f64 {
        let grad = self.grid.derivative(&self.values);
        let sq: Vec<f64> = grad.iter().map(|g| g * g).collect();
        self.grid.integrate_values(&sq).max(0.0)
    }

    /// Value at radius `r` by cubic interpolation (0 beyond the last node).
    pub fn eval(&self, r: f64) -> f64 {
        let r = r.abs();
        let grid = &self.grid;
        let n = grid.len();
        if r >= grid.r[n - 1] {
            return 0.0;
        }
        if grid.jac.is_some() {
            // interpolate in σ where the nodes are uniform
            let sigma = (2.0 / PI) * r.atan();
            let t = sigma / grid.dsigma;
            catmull_rom_uniform(&self.values, t)
        } else {
            let k = match grid.r.binary_search_by(|x| x.total_cmp(&r)) {
                Ok(k) => k,
                Err(k) => k.saturating_sub(1),
            };
            // local linear fallback for irregular nodes
            let k = k.min(n - 2);
            let t = (r - grid.r[k]) / (grid.r[k + 1] - grid.r[k]);
            self.values[k] * (1.0 - t) + self.values[k + 1] * t
        }
    }

    /// L^2-type inner product ∫ f g dx for same-grid functions.
    pub fn inner(&self, other: &RadialFunction) -> f64 {
        debug_assert_eq!(self.grid.len(), other.grid.len());
        let vals: Vec<f64> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a * b)
            .collect();
        self.grid.integrate_values(&vals)
    }
}

/// Catmull–Rom interpolation on uniformly spaced samples; `t` in node units.
pub(crate) fn catmull_rom_uniform(values: &[f64], t: f64) -> f64 {
    let n = values.len();
    if t <= 0.0 {
        return values[0];
    }
    if t >= (n - 1) as f64 {
        return values[n - 1];
    }
    let k = (t.floor() as usize).min(n - 2);
    let u = t - k as f64;
    let vm1 = values[k.saturating_sub(1).max(0)];
    let v0 = values[k];
    let v1 = values[k + 1];
    let v2 = values[(k + 2).min(n - 1)];
    let a = -0.5 * vm1 + 1.5 * v0 - 1.5 * v1 + 0.5 * v2;
    let b = vm1 - 2.5 * v0 + 2.0 * v1 - 0.5 * v2;
    let c = -0.5 * vm1 + 0.5 * v1;
    ((a * u + b) * u + c) * u + v0
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn zero_function_integrates_to_zero() {
        let grid = RadialGrid::tan_map(3, 64).unwrap();
        let f = RadialFunction::new(grid, vec![0.0; 64], false).unwrap();
        assert_eq!(f.integrate_pow(2.0).unwrap(), 0.0);
    }

    #[test]
    fn gaussian_mass_matches_closed_form() {
        // ∫_{R^3} e^{-2 |x|²} dx = (π/2)^{3/2}
        let grid = RadialGrid::tan_map(3, 512).unwrap();
        let f = RadialFunction::from_fn(grid, |r| (-r * r).exp(), false).unwrap();
        let got = f.integrate_pow(2.0).unwrap();
        assert_relative_eq!(got, (PI / 2.0).powf(1.5), max_relative = 1e-10);
    }

    #[test]
    fn mass_converges_under_refinement() {
        // Richardson-style check: a compact hat of unit mass stays within
        // 1e-6 of its fine-grid value as the grid is refined.
        let hat = |r: f64| (1.0 - r).max(0.0);
        let d = 3;
        let exact = {
            // exact: |S²| ∫₀¹ (1-r) r² dr = 4π (1/3 - 1/4)
            sphere_area(2) * (1.0 / 3.0 - 1.0 / 4.0)
        };
        let mut prev_err = f64::INFINITY;
        for n in [256usize, 512, 1024, 2048] {
            let grid = RadialGrid::tan_map(d, n).unwrap();
            let f = RadialFunction::from_fn(grid, hat, false).unwrap();
            let got = f.integrate_pow(1.0).unwrap();
            let err = (got - exact).abs() / exact;
            assert!(err < prev_err * 1.05, "no convergence at n={n}");
            prev_err = err;
        }
        assert!(prev_err < 1e-6, "hat mass error {prev_err}");
    }

    #[test]
    fn derivative_fourth_order_on_smooth_profile() {
        let grid = RadialGrid::tan_map(3, 1024).unwrap();
        let f = RadialFunction::from_fn(grid.clone(), |r| (-(r * r)).exp(), false).unwrap();
        let grad = grid.derivative(&f.values);
        for (i, &r) in grid.r.iter().enumerate().step_by(97) {
            let exact = -2.0 * r * (-(r * r)).exp();
            assert!(
                (grad[i] - exact).abs() < 1e-8 + 1e-8 * exact.abs(),
                "at r={r}: got {} want {exact}",
                grad[i]
            );
        }
    }

    #[test]
    fn dirichlet_energy_of_constant_is_zero() {
        let grid = RadialGrid::tan_map(4, 128).unwrap();
        // constant functions are not integrable far afield, but the gradient
        // path must still return exactly zero energy
        let f = RadialFunction::new(grid, vec![2.5; 128], false).unwrap();
        assert_eq!(f.dirichlet_energy(), 0.0);
    }

    #[test]
    fn cell_masses_sum_to_ball_volume() {
        let grid = RadialGrid::tan_map(3, 256).unwrap();
        let cells = grid.cell_masses();
        let total: f64 = cells.iter().sum();
        let rmax = grid.r[grid.len() - 1];
        let exact = sphere_area(2) * rmax.powi(3) / 3.0;
        assert_relative_eq!(total, exact, max_relative = 1e-12);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(RadialGrid::from_nodes(3, vec![0.0, 1.0, 0.5, 2.0]).is_err());
        assert!(RadialGrid::from_nodes(3, vec![0.5, 1.0, 1.5, 2.0]).is_err());
        assert!(RadialGrid::tan_map(2, 64).is_err());
        let grid = RadialGrid::tan_map(3, 64).unwrap();
        assert!(RadialFunction::new(grid.clone(), vec![0.0; 63], false).is_err());
        assert!(RadialFunction::new(grid, vec![-1.0; 64], false).is_err());
    }

    #[test]
    fn eval_interpolates_smoothly() {
        let grid = RadialGrid::tan_map(3, 512).unwrap();
        let f = RadialFunction::from_fn(grid, |r| 1.0 / (1.0 + r * r), false).unwrap();
        for &r in &[0.05, 0.37, 1.9, 7.3] {
            assert_relative_eq!(f.eval(r), 1.0 / (1.0 + r * r), max_relative = 1e-8);
        }
        assert_eq!(f.eval(1.0e9), 0.0);
    }
}
