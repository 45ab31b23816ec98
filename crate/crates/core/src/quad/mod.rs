//! Discretisation grids and quadrature: radial and cylindrically symmetric
//! functions on R^d, zonal functions on S^d, and the Gaussian measure on R^N,
//! together with norms and finite-difference gradients.

pub mod cyl;
pub mod gauss;
pub mod input;
pub mod presets;
pub mod radial;
pub mod rules;
pub mod zonal;

pub use cyl::{CylFunction, CylGrid};
pub use gauss::GaussGrid;
pub use input::{build_preset, FunctionSpec, PresetParams};
pub use radial::{RadialFunction, RadialGrid};
pub use zonal::{ZonalFunction, ZonalGrid};

use crate::error::Result;

/// Any of the grid-function representations on R^d / S^d.
#[derive(Debug, Clone)]
pub enum AnyFunction {
    Radial(RadialFunction),
    Cyl(CylFunction),
    Zonal(ZonalFunction),
}

impl AnyFunction {
    pub fn d(&self) -> usize {
        match self {
            AnyFunction::Radial(f) => f.d(),
            AnyFunction::Cyl(f) => f.d(),
            AnyFunction::Zonal(f) => f.d(),
        }
    }

    /// L^p norm against the representation's own measure.
    pub fn lp_norm(&self, p: f64) -> Result<f64> {
        match self {
            AnyFunction::Radial(f) => f.lp_norm(p),
            AnyFunction::Cyl(f) => f.lp_norm(p),
            AnyFunction::Zonal(f) => f.lp_norm(p),
        }
    }

    /// Dirichlet energy against the representation's own measure
    /// (for zonal functions this is ∫ |∇F|² dμ).
    pub fn dirichlet_energy(&self) -> f64 {
        match self {
            AnyFunction::Radial(f) => f.dirichlet_energy(),
            AnyFunction::Cyl(f) => f.dirichlet_energy(),
            AnyFunction::Zonal(f) => f.dirichlet_energy(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            AnyFunction::Radial(_) => "radial",
            AnyFunction::Cyl(_) => "cyl",
            AnyFunction::Zonal(_) => "zonal",
        }
    }
}
