//! Numerical laboratory for quantitative stability of the Sobolev inequality
//! and its Gaussian log-Sobolev limit.
//!
//! The crate is organised around the objects it measures:
//!
//! * [`quad`] — discretisation grids (radial, cylindrical, zonal, Gaussian)
//!   with quadrature, norms and finite-difference gradients;
//! * [`manifold`] — the extremal-function manifold: sharp constants, deficit,
//!   distance to the manifold, stereographic lift and the conformal rotation;
//! * [`spectral`] — zonal spherical-harmonic analysis on the sphere:
//!   eigenvalues, projections, the spectral-gap inequality;
//! * [`cutting`] — pointwise range-cutting estimates, the three-term
//!   decomposition of the local deficit and the local stability check;
//! * [`ledger`] — the explicit-constant ledger derived from a single
//!   parameter, including numeric suprema for the under-specified constants;
//! * [`rearrange`] — symmetric decreasing rearrangement, Steiner
//!   symmetrisation and the exact interval-sliding continuous flow;
//! * [`flows`] — the competing-symmetries iteration and end-to-end stability
//!   certification;
//! * [`logsob`] — Gaussian and Euclidean log-Sobolev deficits and the
//!   large-dimension bridge from the Sobolev side.
//!
//! See the book under `book/` for a guided tour; every snippet there runs as
//! a doctest of this crate.

pub mod cutting;
pub mod error;
pub mod flows;
pub mod ledger;
pub mod logsob;
pub mod manifold;
pub mod optim;
pub mod quad;
pub mod rearrange;
pub mod special;
pub mod spectral;
pub mod trace;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    //! The book chapters double as doctests so the guide can never drift
    //! from the API.
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/grids.md")]
    mod grids {}
    #[doc = include_str!("../../../book/src/manifold.md")]
    mod manifold {}
    #[doc = include_str!("../../../book/src/sphere.md")]
    mod sphere {}
    #[doc = include_str!("../../../book/src/local.md")]
    mod local {}
    #[doc = include_str!("../../../book/src/rearrangement.md")]
    mod rearrangement {}
    #[doc = include_str!("../../../book/src/certification.md")]
    mod certification {}
    #[doc = include_str!("../../../book/src/logsob.md")]
    mod logsob {}
}
