//! JSON ingestion of function specifications.
//!
//! Schema: `{"kind": "radial"|"cyl"|"zonal"|"preset", ...}` with explicit
//! grids and values, or a named analytic preset.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::quad::cyl::{CylFunction, CylGrid};
use crate::quad::presets;
use crate::quad::radial::{RadialFunction, RadialGrid};
use crate::quad::zonal::{ZonalFunction, ZonalGrid};
use crate::quad::AnyFunction;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum RadialGridSpec {
    Uniform { n: usize },
    Explicit { nodes: Vec<f64> },
}

#[derive(Debug, Clone, Deserialize)]
pub struct CylGridSpec {
    pub ns: usize,
    pub nt: usize,
    pub s_max: f64,
    pub t_max: f64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct ZonalGridSpec {
    pub n: usize,
}

fn default_true() -> bool {
    true
}

/// Parameters accepted by the named presets; unused fields are ignored by
/// presets that do not need them.
#[derive(Debug, Clone, Deserialize)]
pub struct PresetParams {
    #[serde(default = "one")]
    pub a: f64,
    #[serde(default)]
    pub b: f64,
    #[serde(default = "one")]
    pub c: f64,
    #[serde(default = "default_eps")]
    pub eps: f64,
    #[serde(default = "default_sep")]
    pub sep: f64,
    #[serde(default = "one")]
    pub width: f64,
    #[serde(default = "one")]
    pub ratio: f64,
    #[serde(default)]
    pub n: Option<usize>,
}

fn one() -> f64 {
    1.0
}
fn default_eps() -> f64 {
    0.05
}
fn default_sep() -> f64 {
    4.0
}

impl Default for PresetParams {
    fn default() -> Self {
        serde_json::from_str("{}").expect("defaults")
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FunctionSpec {
    Radial {
        d: usize,
        grid: RadialGridSpec,
        values: Vec<f64>,
        #[serde(default = "default_true")]
        signed: bool,
    },
    Cyl {
        d: usize,
        grid: CylGridSpec,
        values: Vec<f64>,
        #[serde(default = "default_true")]
        signed: bool,
    },
    Zonal {
        d: usize,
        grid: ZonalGridSpec,
        values: Vec<f64>,
        #[serde(default = "default_true")]
        signed: bool,
    },
    Preset {
        name: String,
        d: usize,
        #[serde(default)]
        params: Option<PresetParams>,
    },
}

impl FunctionSpec {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::invalid(format!("function spec: {e}")))
    }

    /// Materialise the described function.
    pub fn build(&self) -> Result<AnyFunction> {
        match self {
            FunctionSpec::Radial {
                d,
                grid,
                values,
                signed,
            } => {
                let grid = match grid {
                    RadialGridSpec::Uniform { n } => RadialGrid::tan_map(*d, *n)?,
                    RadialGridSpec::Explicit { nodes } => {
                        RadialGrid::from_nodes(*d, nodes.clone())?
                    }
                };
                Ok(AnyFunction::Radial(RadialFunction::new(
                    grid,
                    values.clone(),
                    *signed,
                )?))
            }
            FunctionSpec::Cyl {
                d,
                grid,
                values,
                signed,
            } => {
                let grid = CylGrid::new(*d, grid.ns, grid.nt, grid.s_max, grid.t_max)?;
                Ok(AnyFunction::Cyl(CylFunction::new(
                    grid,
                    values.clone(),
                    *signed,
                )?))
            }
            FunctionSpec::Zonal {
                d,
                grid,
                values,
                signed,
            } => {
                let grid = ZonalGrid::new(*d, grid.n)?;
                Ok(AnyFunction::Zonal(ZonalFunction::new(
                    grid,
                    values.clone(),
                    *signed,
                )?))
            }
            FunctionSpec::Preset { name, d, params } => {
                let p = params.clone().unwrap_or_default();
                build_preset(name, *d, &p)
            }
        }
    }
}

/// Materialise a named preset at the default (or requested) resolution.
pub fn build_preset(name: &str, d: usize, p: &PresetParams) -> Result<AnyFunction> {
    match name {
        "gstar" => {
            let grid = RadialGrid::tan_map(d, p.n.unwrap_or(2048))?;
            Ok(AnyFunction::Radial(presets::gstar(grid)?))
        }
        "aubin_talenti" => {
            if p.a <= 0.0 {
                return Err(Error::OutOfRange(format!("scale a = {} must be > 0", p.a)));
            }
            if p.b == 0.0 {
                let grid = RadialGrid::tan_map(d, p.n.unwrap_or(2048))?;
                Ok(AnyFunction::Radial(presets::extremal_radial(
                    grid, p.a, p.c,
                )?))
            } else {
                let grid = CylGrid::default_for(d)?;
                Ok(AnyFunction::Cyl(presets::extremal_cyl(grid, p.a, p.b, p.c)?))
            }
        }
        "perturbed_optimizer" => {
            let grid = RadialGrid::tan_map(d, p.n.unwrap_or(2048))?;
            Ok(AnyFunction::Radial(presets::perturbed_extremal(
                grid, p.eps,
            )?))
        }
        "two_bumps" => {
            let grid = CylGrid::default_for(d)?;
            Ok(AnyFunction::Cyl(presets::two_bumps(
                grid, p.sep, p.width, p.ratio,
            )?))
        }
        other => Err(Error::invalid(format!(
            "unknown preset '{other}' (expected gstar, aubin_talenti, perturbed_optimizer, two_bumps)"
        ))),
    }
}
