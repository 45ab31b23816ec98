//! Cylindrically symmetric functions f(x) = F(|x'|, x_d) on R^d, discretised
//! on a uniform (s, t) rectangle with measure |S^{d-2}| s^{d-2} ds dt.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quad::radial::simpson_unit_weights;
use crate::special::sphere_area;

#[derive(Debug)]
pub struct CylGrid {
    pub d: usize,
    /// transverse radius nodes, s[0] = 0, uniform
    pub s: Vec<f64>,
    /// axial nodes, symmetric about 0, uniform
    pub t: Vec<f64>,
    pub ds: f64,
    pub dt: f64,
    ws: Vec<f64>,
    wt: Vec<f64>,
    /// |S^{d-2}|
    ring: f64,
}

impl CylGrid {
    pub fn new(d: usize, ns: usize, nt: usize, s_max: f64, t_max: f64) -> Result<Arc<Self>> {
        if d < 3 {
            return Err(Error::OutOfRange(format!("cylindrical dimension {d} < 3")));
        }
        if ns < 8 || nt < 8 {
            return Err(Error::invalid("cylindrical grid needs at least 8x8 nodes"));
        }
        if !(s_max > 0.0 && t_max > 0.0) {
            return Err(Error::invalid("cylindrical extents must be positive"));
        }
        let ds = s_max / (ns - 1) as f64;
        let dt = 2.0 * t_max / (nt - 1) as f64;
        let s = (0..ns).map(|i| i as f64 * ds).collect();
        let t = (0..nt).map(|j| -t_max + j as f64 * dt).collect();
        let ws = simpson_unit_weights(ns).into_iter().map(|w| w * ds).collect();
        let wt = simpson_unit_weights(nt).into_iter().map(|w| w * dt).collect();
        Ok(Arc::new(CylGrid {
            d,
            s,
            t,
            ds,
            dt,
            ws,
            wt,
            ring: sphere_area(d - 2),
        }))
    }

    /// Default laboratory grid for dimension d.
    pub fn default_for(d: usize) -> Result<Arc<Self>> {
        CylGrid::new(d, 256, 512, 12.0, 12.0)
    }

    pub fn ns(&self) -> usize {
        self.s.len()
    }

    pub fn nt(&self) -> usize {
        self.t.len()
    }

    pub fn len(&self) -> usize {
        self.ns() * self.nt()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.nt() + j
    }

    /// Quadrature weight (full d-dimensional measure) of node (i, j).
    #[inline]
    pub fn node_weight(&self, i: usize, j: usize) -> f64 {
        self.ring * self.s[i].powi(self.d as i32 - 2) * self.ws[i] * self.wt[j]
    }

    /// ∫_{R^d} h dx from node values.
    pub fn integrate_values(&self, values: &[f64]) -> f64 {
        debug_assert_eq!(values.len(), self.len());
        let mut acc = 0.0;
        for i in 0..self.ns() {
            let si = self.ring * self.s[i].powi(self.d as i32 - 2) * self.ws[i];
            let row = &values[self.idx(i, 0)..self.idx(i, 0) + self.nt()];
            let mut racc = 0.0;
            for (j, v) in row.iter().enumerate() {
                racc += self.wt[j] * v;
            }
            acc += si * racc;
        }
        acc
    }

    /// Exact cell masses (midpoint cells) for rearrangement bookkeeping.
    pub fn cell_masses(&self) -> Vec<f64> {
        let dm1 = (self.d - 1) as f64;
        let ns = self.ns();
        let nt = self.nt();
        let mut out = vec![0.0; self.len()];
        let mut s_lo = 0.0_f64;
        for i in 0..ns {
            let s_hi = if i + 1 < ns {
                0.5 * (self.s[i] + self.s[i + 1])
            } else {
                self.s[ns - 1]
            };
            let shell = self.ring * (s_hi.powf(dm1) - s_lo.powf(dm1)) / dm1;
            for j in 0..nt {
                let t_lo = if j == 0 {
                    self.t[0]
                } else {
                    0.5 * (self.t[j - 1] + self.t[j])
                };
                let t_hi = if j + 1 < nt {
                    0.5 * (self.t[j] + self.t[j + 1])
                } else {
                    self.t[nt - 1]
                };
                out[self.idx(i, j)] = shell * (t_hi - t_lo);
            }
            s_lo = s_hi;
        }
        out
    }
}

/// 4th-order derivative of uniformly spaced samples, one-sided at both ends.
pub(crate) fn derivative4_line(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    debug_assert!(n >= 5);
    let c = 1.0 / (12.0 * h);
    let mut out = vec![0.0; n];
    out[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) * c;
    out[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) * c;
    for i in 2..n - 2 {
        out[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) * c;
    }
    out[n - 2] = -(-3.0 * v[n - 1] - 10.0 * v[n - 2] + 18.0 * v[n - 3] - 6.0 * v[n - 4]
        + v[n - 5])
        * c;
    out[n - 1] = -(-25.0 * v[n - 1] + 48.0 * v[n - 2] - 36.0 * v[n - 3] + 16.0 * v[n - 4]
        - 3.0 * v[n - 5])
        * c;
    out
}

/// Like [`derivative4_line`] but the samples continue evenly across index 0
/// (v[-k] = v[k]); the derivative at 0 is exactly zero.
pub(crate) fn derivative4_line_even_start(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    debug_assert!(n >= 5);
    let c = 1.0 / (12.0 * h);
    let mut out = derivative4_line(v, h);
    out[0] = 0.0;
    out[1] = (v[1] - 8.0 * v[0] + 8.0 * v[2] - v[3]) * c;
    out
}

/// A discretised cylindrically symmetric function.
#[derive(Debug, Clone)]
pub struct CylFunction {
    pub grid: Arc<CylGrid>,
    /// Row-major: values[i * nt + j] = F(s_i, t_j).
    pub values: Vec<f64>,
    pub signed: bool,
}

impl CylFunction {
    pub fn new(grid: Arc<CylGrid>, values: Vec<f64>, signed: bool) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(Error::invalid(format!(
                "value count {} does not match grid size {}",
                values.len(),
                grid.len()
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite("cylindrical function values"));
        }
        if !signed && values.iter().any(|v| *v < 0.0) {
            return Err(Error::invalid(
                "negative value in a function flagged nonnegative",
            ));
        }
        Ok(CylFunction {
            grid,
            values,
            signed,
        })
    }

    pub fn from_fn(
        grid: Arc<CylGrid>,
        f: impl Fn(f64, f64) -> f64,
        signed: bool,
    ) -> Result<Self> {
        let mut values = Vec::with_capacity(grid.len());
        for i in 0..grid.ns() {
            for j in 0..grid.nt() {
                values.push(f(grid.s[i], grid.t[j]));
            }
        }
        CylFunction::new(grid, values, signed)
    }

    pub fn d(&self) -> usize {
        self.grid.d
    }

    pub fn integrate_pow(&self, p: f64) -> Result<f64> {
        if p < 1.0 {
            return Err(Error::OutOfRange(format!("integrand power {p} < 1")));
        }
        let vals: Vec<f64> = self.values.iter().map(|v| v.abs().powf(p)).collect();
        Ok(self.grid.integrate_values(&vals).max(0.0))
    }

    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        Ok(self.integrate_pow(p)?.powf(1.0 / p))
    }

    /// Gradient components (∂F/∂s, ∂F/∂t) by 4th-order differences on the
    /// uniform grid. The axis s = 0 uses the even reflection of a
    /// cylindrical profile (derivative 0 there).
    pub fn gradient(&self) -> (Vec<f64>, Vec<f64>) {
        let g = &self.grid;
        let (ns, nt) = (g.ns(), g.nt());
        let mut fs = vec![0.0; self.values.len()];
        let mut ft = vec![0.0; self.values.len()];
        let mut line = Vec::new();
        // ∂/∂t along rows
        for i in 0..ns {
            let row = &self.values[g.idx(i, 0)..g.idx(i, 0) + nt];
            let d = derivative4_line(row, g.dt);
            ft[g.idx(i, 0)..g.idx(i, 0) + nt].copy_from_slice(&d);
        }
        // ∂/∂s along columns, with even reflection at s = 0
        for j in 0..nt {
            line.clear();
            line.extend((0..ns).map(|i| self.values[g.idx(i, j)]));
            let d = derivative4_line_even_start(&line, g.ds);
            for i in 0..ns {
                fs[g.idx(i, j)] = d[i];
            }
        }
        (fs, ft)
    }

    /// ∫ |∇f|² dx.
    pub fn dirichlet_energy(&self) -> f64 {
        let (fs, ft) = self.gradient();
        let sq: Vec<f64> = fs
            .iter()
            .zip(&ft)
            .map(|(a, b)| a * a + b * b)
            .collect();
        self.grid.integrate_values(&sq).max(0.0)
    }

    /// Bicubic (Catmull–Rom) interpolation; even in s, zero outside the grid.
    pub fn eval(&self, s: f64, t: f64) -> f64 {
        let g = &self.grid;
        let s = s.abs();
        if s > g.s[g.ns() - 1] || t < g.t[0] || t > g.t[g.nt() - 1] {
            return 0.0;
        }
        let x = s / g.ds;
        let y = (t - g.t[0]) / g.dt;
        let i0 = (x.floor() as isize).clamp(0, g.ns() as isize - 2);
        let u = x - i0 as f64;
        // four rows in s, reflected at the axis
        let mut rowvals = [0.0_f64; 4];
        for (m, rv) in rowvals.iter_mut().enumerate() {
            let ii = i0 + m as isize - 1;
            let ii = if ii < 0 { -ii } else { ii } as usize;
            let ii = ii.min(g.ns() - 1);
            let row = &self.values[g.idx(ii, 0)..g.idx(ii, 0) + g.nt()];
            *rv = super::radial::catmull_rom_uniform(row, y);
        }
        let (vm1, v0, v1, v2) = (rowvals[0], rowvals[1], rowvals[2], rowvals[3]);
        let a = -0.5 * vm1 + 1.5 * v0 - 1.5 * v1 + 0.5 * v2;
        let b = vm1 - 2.5 * v0 + 2.0 * v1 - 0.5 * v2;
        let c = -0.5 * vm1 + 0.5 * v1;
        ((a * u + b) * u + c) * u + v0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use std::f64::consts::PI;

    #[test]
    fn gaussian_mass_cyl_matches_radial_value() {
        // ∫_{R^3} e^{-2|x|²} dx = (π/2)^{3/2}
        let grid = CylGrid::new(3, 256, 512, 6.0, 6.0).unwrap();
        let f =
            CylFunction::from_fn(grid, |s, t| (-(s * s + t * t)).exp(), false).unwrap();
        assert_relative_eq!(
            f.integrate_pow(2.0).unwrap(),
            (PI / 2.0).powf(1.5),
            max_relative = 1e-7
        );
    }

    #[test]
    fn dirichlet_energy_gaussian() {
        // f = e^{-|x|²/2} in R^3: ∫|∇f|² = ∫ |x|² e^{-|x|²} dx = (3/2) π^{3/2}
        let grid = CylGrid::new(3, 256, 512, 8.0, 8.0).unwrap();
        let f = CylFunction::from_fn(
            grid,
            |s, t| (-(s * s + t * t) / 2.0).exp(),
            false,
        )
        .unwrap();
        let exact = 1.5 * PI.powf(1.5);
        assert_relative_eq!(f.dirichlet_energy(), exact, max_relative = 1e-6);
    }

    #[test]
    fn cell_masses_sum_to_cylinder_volume() {
        let grid = CylGrid::new(3, 64, 64, 2.0, 1.0).unwrap();
        let total: f64 = grid.cell_masses().iter().sum();
        // volume of {|x'| <= 2, |x_d| <= 1} in R^3 = π·4·2
        assert_relative_eq!(total, 8.0 * PI, max_relative = 1e-12);
    }

    #[test]
    fn eval_reflects_across_axis() {
        let grid = CylGrid::new(3, 64, 64, 4.0, 4.0).unwrap();
        let f = CylFunction::from_fn(grid, |s, t| (1.0 + s * s + t).cos().abs(), true).unwrap();
        assert_relative_eq!(f.eval(-0.7, 0.3), f.eval(0.7, 0.3), epsilon = 1e-13);
    }

    #[test]
    fn equimeasurable_permutation_has_equal_norms() {
        // permuting values within a fixed row of constant weight leaves
        // every p-norm unchanged only when weights match; here we swap two
        // whole columns at equal |t|, which is an exact symmetry.
        let grid = CylGrid::new(3, 32, 33, 4.0, 4.0).unwrap();
        let f = CylFunction::from_fn(grid.clone(), |s, t| (-(s + t * t)).exp(), false).unwrap();
        let mut swapped = f.values.clone();
        let nt = grid.nt();
        for i in 0..grid.ns() {
            swapped.swap(i * nt, i * nt + nt - 1); // t -> -t mirror columns
        }
        let g = CylFunction::new(grid, swapped, false).unwrap();
        for p in [1.0, 2.0, 3.0] {
            assert_relative_eq!(
                f.lp_norm(p).unwrap(),
                g.lp_norm(p).unwrap(),
                max_relative = 1e-13
            );
        }
    }
}
