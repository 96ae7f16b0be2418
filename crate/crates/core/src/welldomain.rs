//! Dimensionless problem description and the result types shared by the
//! solvers.
//!
//! Everything is expressed through two numbers: the well strength
//! `bL = (L/ħ)√(2mV)` and the eigenvalue `z = kL = (L/ħ)√(2mE)`. Positions
//! are measured in units of the half-width `L`, so the walls sit at `x = ±1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Well strength `bL`, guaranteed positive and finite.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Strength(f64);

impl Strength {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Strength(value))
        } else {
            Err(Error::InvalidStrength(value))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Strength {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Strength::new(value)
    }
}

impl From<Strength> for f64 {
    fn from(s: Strength) -> f64 {
        s.0
    }
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// The physical problem: a finite well of given strength, or the `V → ∞`
/// limit.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum WellSpec {
    Finite(Strength),
    Infinite,
}

impl WellSpec {
    /// Finite well of strength `bL`. Rejects non-positive, NaN and infinite
    /// values.
    pub fn finite(strength: f64) -> Result<Self> {
        Strength::new(strength).map(WellSpec::Finite)
    }

    pub fn strength(&self) -> Option<Strength> {
        match *self {
            WellSpec::Finite(s) => Some(s),
            WellSpec::Infinite => None,
        }
    }
}

impl fmt::Display for WellSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WellSpec::Finite(s) => write!(f, "bL = {s}"),
            WellSpec::Infinite => f.write_str("bL = ∞"),
        }
    }
}

/// Which wave equation governs the particle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModelKind {
    /// Fourth-order, real-valued flexural-shear beam equation.
    FlexuralShear4th,
    /// Classical second-order Schrödinger equation.
    Schrodinger2nd,
}

impl ModelKind {
    /// Short name used by the CLI and the CSV export.
    pub fn short_name(self) -> &'static str {
        match self {
            ModelKind::FlexuralShear4th => "flex4",
            ModelKind::Schrodinger2nd => "schro2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    /// `+1` for even, `-1` for odd: `ψ(-x) = sign · ψ(x)`.
    pub fn sign(self) -> f64 {
        match self {
            Parity::Even => 1.0,
            Parity::Odd => -1.0,
        }
    }

    /// Parity of the `n`-th level (1-based) of a symmetric well, whose
    /// spectrum alternates starting with an even ground state.
    pub fn of_level(n: usize) -> Parity {
        if n % 2 == 1 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// One bound state.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenResult {
    pub model: ModelKind,
    pub parity: Parity,
    /// 1-based rank in the ascending list this result belongs to.
    pub index: usize,
    pub z: f64,
    /// Normalized energy `z²`.
    pub z_squared: f64,
}

impl EigenResult {
    pub fn new(model: ModelKind, parity: Parity, index: usize, z: f64) -> Self {
        EigenResult {
            model,
            parity,
            index,
            z,
            z_squared: z * z,
        }
    }
}

/// Builds an ascending, 1-indexed list from raw roots of one model.
pub(crate) fn ranked(model: ModelKind, parity: Parity, roots: &[f64]) -> Vec<EigenResult> {
    roots
        .iter()
        .enumerate()
        .map(|(i, &z)| EigenResult::new(model, parity, i + 1, z))
        .collect()
}

/// Merges the even and odd levels of one model into a single ascending
/// spectrum and renumbers it from 1. Coincident eigenvalues are reported as
/// an error rather than silently ordered.
pub fn merge_spectrum(even: &[EigenResult], odd: &[EigenResult]) -> Result<Vec<EigenResult>> {
    let mut all: Vec<EigenResult> = even.iter().chain(odd).copied().collect();
    all.sort_by(|a, b| a.z.total_cmp(&b.z));
    for pair in all.windows(2) {
        if pair[1].z <= pair[0].z {
            return Err(Error::TiedEigenvalues(pair[0].z, pair[1].z));
        }
    }
    for (i, r) in all.iter_mut().enumerate() {
        r.index = i + 1;
    }
    Ok(all)
}
