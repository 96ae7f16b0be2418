//! Bound states of a particle in a square potential well, computed with the
//! fourth-order flexural-shear beam wave equation and with the classical
//! second-order Schrödinger equation, plus the per-level energy excess of
//! the former over the latter.
//!
//! All quantities are dimensionless: the well strength `bL = (L/ħ)√(2mV)`,
//! eigenvalues `z = kL = (L/ħ)√(2mE)`, and positions in units of the
//! half-width `L`.
//!
//! ```
//! use flexwell::{flexural, Strength};
//!
//! let levels = flexural::finite_well_spectrum(Strength::new(10.0)?)?;
//! assert_eq!(levels.len(), 7);
//! assert!((levels[0].z - 1.974707).abs() < 1e-6);
//! # Ok::<(), flexwell::Error>(())
//! ```

pub mod classical;
pub mod cli;
pub mod eigenfunction;
pub mod error;
pub mod export;
pub mod flexural;
pub mod linalg;
pub mod plot;
pub mod quadrature;
pub mod report;
pub mod rootkit;
pub mod welldomain;

pub use error::{Error, Result};
pub use welldomain::{EigenResult, ModelKind, Parity, Strength, WellSpec};

// The guide's code blocks run as doc-tests alongside the API docs.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/well-model.md")]
    mod well_model {}
    #[doc = include_str!("../../../book/src/continuity-system.md")]
    mod continuity_system {}
    #[doc = include_str!("../../../book/src/eigenfunctions.md")]
    mod eigenfunctions {}
    #[doc = include_str!("../../../book/src/infinite-well.md")]
    mod infinite_well {}
    #[doc = include_str!("../../../book/src/classical.md")]
    mod classical {}
    #[doc = include_str!("../../../book/src/energy-excess.md")]
    mod energy_excess {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
