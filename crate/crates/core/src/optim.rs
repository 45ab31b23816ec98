//! Derivative-free minimisation: a compact Nelder–Mead simplex with
//! deterministic multi-start, and golden-section search for 1D problems.

use crate::error::{Error, Result};

/// Outcome of a multi-start search.
#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Best point found.
    pub x: Vec<f64>,
    /// Objective value at `x`.
    pub value: f64,
    /// How many starts agreed with the best value within `1e-6` relative.
    pub consensus: usize,
    /// Number of starts run.
    pub starts: usize,
}

/// Nelder–Mead on `f`, starting from `x0` with initial step `step`.
///
/// Runs until the simplex collapses below `tol` in both coordinates and
/// values, or `max_iter` iterations.
pub fn nelder_mead<F>(f: &mut F, x0: &[f64], step: f64, tol: f64, max_iter: usize) -> (Vec<f64>, f64)
where
    F: FnMut(&[f64]) -> f64,
{
    let n = x0.len();
    let (alpha, gamma, rho, sigma) = (1.0, 2.0, 0.5, 0.5);

    let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    simplex.push(x0.to_vec());
    for i in 0..n {
        let mut p = x0.to_vec();
        p[i] += if p[i].abs() > 1e-8 { p[i].abs() * step } else { step };
        simplex.push(p);
    }
    let mut values: Vec<f64> = simplex.iter().map(|p| f(p)).collect();

    for _ in 0..max_iter {
        let mut order: Vec<usize> = (0..=n).collect();
        order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
        let (best, second_worst, worst) = (order[0], order[n - 1], order[n]);

        let spread = values[worst] - values[best];
        let mut size = 0.0_f64;
        for i in 0..n {
            size = size.max((simplex[worst][i] - simplex[best][i]).abs());
        }
        if spread.abs() <= tol * (1.0 + values[best].abs()) && size <= tol {
            break;
        }

        let mut centroid = vec![0.0; n];
        for &idx in order.iter().take(n) {
            for i in 0..n {
                centroid[i] += simplex[idx][i] / n as f64;
            }
        }

        let reflected: Vec<f64> = (0..n)
            .map(|i| centroid[i] + alpha * (centroid[i] - simplex[worst][i]))
            .collect();
        let fr = f(&reflected);

        if fr < values[best] {
            let expanded: Vec<f64> = (0..n)
                .map(|i| centroid[i] + gamma * (reflected[i] - centroid[i]))
                .collect();
            let fe = f(&expanded);
            if fe < fr {
                simplex[worst] = expanded;
                values[worst] = fe;
            } else {
                simplex[worst] = reflected;
                values[worst] = fr;
            }
        } else if fr < values[second_worst] {
            simplex[worst] = reflected;
            values[worst] = fr;
        } else {
            let contracted: Vec<f64> = (0..n)
                .map(|i| centroid[i] + rho * (simplex[worst][i] - centroid[i]))
                .collect();
            let fc = f(&contracted);
            if fc < values[worst] {
                simplex[worst] = contracted;
                values[worst] = fc;
            } else {
                let best_point = simplex[best].clone();
                for idx in 0..=n {
                    if idx == best {
                        continue;
                    }
                    for i in 0..n {
                        simplex[idx][i] = best_point[i] + sigma * (simplex[idx][i] - best_point[i]);
                    }
                    values[idx] = f(&simplex[idx]);
                }
            }
        }
    }

    let mut best = 0;
    for i in 1..=n {
        if values[i] < values[best] {
            best = i;
        }
    }
    (simplex[best].clone(), values[best])
}

/// Multi-start Nelder–Mead minimisation over the given start points.
///
/// Deterministic: the start list fixes the whole computation. Errors only if
/// no start produced a finite value.
pub fn multi_start<F>(
    mut f: F,
    starts: &[Vec<f64>],
    step: f64,
    tol: f64,
    max_iter: usize,
) -> Result<SearchOutcome>
where
    F: FnMut(&[f64]) -> f64,
{
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut finals: Vec<f64> = Vec::with_capacity(starts.len());
    for s in starts {
        let (x, v) = nelder_mead(&mut f, s, step, tol, max_iter);
        if v.is_finite() {
            finals.push(v);
            if best.as_ref().map_or(true, |(_, bv)| v < *bv) {
                best = Some((x, v));
            }
        }
    }
    let (x, value) = best.ok_or(Error::OptimizerFailed {
        restarts: starts.len(),
        best: f64::NAN,
    })?;
    let consensus = finals
        .iter()
        .filter(|&&v| (v - value).abs() <= 1e-6 * (1.0 + value.abs()))
        .count();
    Ok(SearchOutcome {
        x,
        value,
        consensus,
        starts: starts.len(),
    })
}

/// Golden-section minimisation of `f` on `[a, b]` to x-tolerance `tol`.
pub fn golden_section<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64)
where
    F: FnMut(f64) -> f64,
{
    let inv_phi = 0.618_033_988_749_894_9_f64;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    while (b - a).abs() > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Bisection for a root of `f` on `[a, b]`; requires a sign change.
pub fn bisect<F>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::Numerical(format!(
            "bisection bracket has no sign change on [{a}, {b}]"
        )));
    }
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}
