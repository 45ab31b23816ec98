//! Named analytic test functions used throughout the laboratory and
//! reachable from the CLI.

use std::sync::Arc;

use crate::error::Result;
use crate::quad::cyl::{CylFunction, CylGrid};
use crate::quad::radial::{RadialFunction, RadialGrid};
use crate::special::sphere_area;

/// Profile of the standard extremal: ḡ(x) = (2/(1+|x|²))^{(d-2)/2}.
pub fn extremal_profile(d: usize, r: f64) -> f64 {
    (2.0 / (1.0 + r * r)).powf((d as f64 - 2.0) / 2.0)
}

/// Normalisation making ‖g₊‖_{2d/(d-2)} = 1: the prefactor |S^d|^{-(d-2)/(2d)}.
pub fn unit_norm_prefactor(d: usize) -> f64 {
    sphere_area(d).powf(-(d as f64 - 2.0) / (2.0 * d as f64))
}

/// The critical-norm-one extremal g₊(x) = |S^d|^{-(d-2)/(2d)} ḡ(x).
pub fn gstar(grid: Arc<RadialGrid>) -> Result<RadialFunction> {
    let d = grid.d;
    let c = unit_norm_prefactor(d);
    RadialFunction::from_fn(grid, move |r| c * extremal_profile(d, r), false)
}

/// Centred extremal with scale `a` and amplitude `c`: c ḡ(x/a).
pub fn extremal_radial(grid: Arc<RadialGrid>, a: f64, c: f64) -> Result<RadialFunction> {
    let d = grid.d;
    RadialFunction::from_fn(grid, move |r| c * extremal_profile(d, r / a), c < 0.0)
}

/// Extremal with scale `a`, centre `b` on the symmetry axis, amplitude `c`.
pub fn extremal_cyl(grid: Arc<CylGrid>, a: f64, b_axis: f64, c: f64) -> Result<CylFunction> {
    let d = grid.d;
    CylFunction::from_fn(
        grid,
        move |s, t| {
            let rr = (s * s + (t - b_axis) * (t - b_axis)).sqrt() / a;
            c * extremal_profile(d, rr)
        },
        c < 0.0,
    )
}

/// Unnormalised degree-2 zonal direction in latitude: (d+1) x² - 1, which
/// has zero mean on S^d and no degree-1 component.
pub fn degree_two_direction(d: usize, x: f64) -> f64 {
    (d as f64 + 1.0) * x * x - 1.0
}

/// ḡ plus ε times the degree-2 direction pulled down from the sphere:
/// f(x) = ḡ(x) (1 + ε ((d+1) ω² - 1)) with ω = (1-|x|²)/(1+|x|²).
///
/// Nonnegative for |ε| ≤ 1/d.
pub fn perturbed_extremal(grid: Arc<RadialGrid>, eps: f64) -> Result<RadialFunction> {
    let d = grid.d;
    RadialFunction::from_fn(
        grid,
        move |r| {
            let omega = (1.0 - r * r) / (1.0 + r * r);
            extremal_profile(d, r) * (1.0 + eps * degree_two_direction(d, omega))
        },
        eps.abs() > 1.0 / d as f64,
    )
}

/// Two Gaussian bumps on the symmetry axis at ±sep/2.
pub fn two_bumps(
    grid: Arc<CylGrid>,
    sep: f64,
    width: f64,
    second_amplitude: f64,
) -> Result<CylFunction> {
    CylFunction::from_fn(
        grid,
        move |s, t| {
            let d1 = s * s + (t - 0.5 * sep) * (t - 0.5 * sep);
            let d2 = s * s + (t + 0.5 * sep) * (t + 0.5 * sep);
            let w2 = width * width;
            (-d1 / w2).exp() + second_amplitude * (-d2 / w2).exp()
        },
        second_amplitude < 0.0,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gstar_has_unit_critical_norm() {
        for d in [3usize, 4, 6] {
            let grid = RadialGrid::tan_map(d, 2048).unwrap();
            let g = gstar(grid).unwrap();
            let q = 2.0 * d as f64 / (d as f64 - 2.0);
            assert_relative_eq!(g.lp_norm(q).unwrap(), 1.0, max_relative = 1e-8);
        }
    }

    #[test]
    fn extremal_critical_mass_matches_sphere_area() {
        // ∫ ḡ^{2d/(d-2)} dx = ∫ (2/(1+r²))^d dx = |S^d|
        for d in [3usize, 5] {
            let grid = RadialGrid::tan_map(d, 2048).unwrap();
            let g = extremal_radial(grid, 1.0, 1.0).unwrap();
            let q = 2.0 * d as f64 / (d as f64 - 2.0);
            assert_relative_eq!(
                g.integrate_pow(q).unwrap(),
                sphere_area(d),
                max_relative = 1e-8
            );
        }
    }

    #[test]
    fn extremal_eval_scaling_identity() {
        // c ḡ(x/a) sampled two ways
        let d = 4;
        let (a, c) = (1.7, 0.6);
        for r in [0.0, 0.9, 4.2] {
            let direct = c * extremal_profile(d, r / a);
            assert_relative_eq!(
                direct,
                c * (2.0 / (1.0 + (r / a).powi(2))).powf(1.0),
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn degree_two_direction_has_zero_mean() {
        use crate::quad::zonal::{ZonalFunction, ZonalGrid};
        for d in [3usize, 6] {
            let grid = ZonalGrid::new(d, 128).unwrap();
            let y2 = ZonalFunction::from_fn(grid, |x| degree_two_direction(d, x), true).unwrap();
            assert!(y2.mean().abs() < 1e-13);
        }
    }

    #[test]
    fn perturbed_extremal_nonnegative_for_small_eps() {
        let grid = RadialGrid::tan_map(3, 256).unwrap();
        let f = perturbed_extremal(grid, 0.2).unwrap();
        assert!(f.values.iter().all(|&v| v >= 0.0));
    }
}
