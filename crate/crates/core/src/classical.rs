//! Bound states of the second-order Schrödinger equation in the same wells.
//!
//! The even and odd conditions `tan z = √(bL²/z² − 1)` and
//! `cot z = −√(bL²/z² − 1)` are multiplied through by `z·cos z` and
//! `z·sin z` respectively, giving pole-free functions with the same zeros on
//! `(0, bL)`.

use std::f64::consts::FRAC_PI_2;

use crate::error::{Error, Result};
use crate::flexural::SEARCH_EPSILON;
use crate::rootkit::{self, DEFAULT_STEP, DEFAULT_TOL};
use crate::welldomain::{merge_spectrum, ranked, EigenResult, ModelKind, Parity, Strength};

/// `z·sin z − √(bL² − z²)·cos z` (even) or `z·cos z + √(bL² − z²)·sin z`
/// (odd).
pub fn matching_function(strength: Strength, z: f64, parity: Parity) -> f64 {
    let bl = strength.get();
    let kappa = (bl * bl - z * z).max(0.0).sqrt();
    match parity {
        Parity::Even => z * z.sin() - kappa * z.cos(),
        Parity::Odd => z * z.cos() + kappa * z.sin(),
    }
}

pub fn classical_finite_eigenvalues(
    strength: Strength,
    parity: Parity,
) -> Result<Vec<EigenResult>> {
    let (lo, hi) = (SEARCH_EPSILON, strength.get() - SEARCH_EPSILON);
    if lo >= hi {
        return Ok(Vec::new());
    }
    let roots = rootkit::find_roots(
        |z| matching_function(strength, z, parity),
        lo,
        hi,
        DEFAULT_STEP,
        DEFAULT_TOL,
    )?;
    Ok(ranked(ModelKind::Schrodinger2nd, parity, &roots))
}

pub fn classical_finite_spectrum(strength: Strength) -> Result<Vec<EigenResult>> {
    let even = classical_finite_eigenvalues(strength, Parity::Even)?;
    let odd = classical_finite_eigenvalues(strength, Parity::Odd)?;
    merge_spectrum(&even, &odd)
}

/// `z_n = nπ/2` for `n = 1..=count`.
pub fn classical_infinite_eigenvalues(count: usize) -> Result<Vec<EigenResult>> {
    if count == 0 {
        return Err(Error::InvalidCount);
    }
    Ok((1..=count)
        .map(|n| {
            EigenResult::new(
                ModelKind::Schrodinger2nd,
                Parity::of_level(n),
                n,
                n as f64 * FRAC_PI_2,
            )
        })
        .collect())
}
