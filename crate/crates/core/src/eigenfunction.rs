//! Closed-form eigenfunctions of the flexural-shear finite well.
//!
//! Inside the well a mode is `c_trig·cos(zx) + c_hyp·cosh(zx)` (even) or
//! `c_trig·sin(zx) + c_hyp·sinh(zx)` (odd). For `x ≥ 1` it is
//! `a_fast·e^{-β₁x} + a_slow·e^{-β₃x}` with `β₁ = √(bL²+z²)` and
//! `β₃ = √(bL²−z²)`, and the left tail follows by reflection. Positions are
//! in units of the half-width `L`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::flexural::{self, DecayRates, EIGEN_RESIDUAL_THRESHOLD};
use crate::linalg;
use crate::quadrature::simpson;
use crate::welldomain::{Parity, Strength};

/// Abscissae used for the interior part of the normalization integral.
pub const NORMALIZATION_POINTS: usize = 4097;

// a 3×3 minor whose scaled determinant is below this is treated as singular
const SINGULAR_MINOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InteriorCoefficients {
    /// `C₂` (even) or `C₁` (odd).
    pub trig: f64,
    /// `C₄` (even) or `C₃` (odd).
    pub hyp: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExteriorCoefficients {
    /// `A₂`, multiplying `e^{-β₁x}`.
    pub fast: f64,
    /// `A₄`, multiplying `e^{-β₃x}`.
    pub slow: f64,
}

/// A flexural-shear bound state as piecewise closed-form pieces.
///
/// The coefficients are the raw null-space solution; `norm_factor` scales
/// every evaluation and is `1.0` until [`EigenFunction::normalize`] is called.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EigenFunction {
    pub parity: Parity,
    pub z: f64,
    pub strength: Strength,
    pub interior: InteriorCoefficients,
    pub exterior: ExteriorCoefficients,
    pub norm_factor: f64,
}

/// Solves the continuity system at an eigenvalue `z` for the mode
/// coefficients.
///
/// The first unknown is fixed to 1 and the remaining three follow from the
/// best-conditioned 3×3 subsystem. If that is singular, each other unknown
/// is tried in turn before the eigenvalue is declared degenerate.
pub fn eigenfunction_coefficients(
    strength: Strength,
    z: f64,
    parity: Parity,
) -> Result<EigenFunction> {
    let m = flexural::system_matrix(strength, z, parity)?;
    let residual = linalg::determinant(m).abs() / linalg::row_norm_product(&m);
    if !(residual <= EIGEN_RESIDUAL_THRESHOLD) {
        return Err(Error::NotAnEigenvalue {
            z,
            residual,
            threshold: EIGEN_RESIDUAL_THRESHOLD,
        });
    }

    let v = (0..4)
        .find_map(|fixed| null_vector_fixing(&m, fixed))
        .ok_or(Error::DegenerateEigenvalue(z))?;

    let rates = flexural::exterior_decay_rates(strength, z)?;
    Ok(EigenFunction {
        parity,
        z,
        strength,
        interior: InteriorCoefficients {
            trig: v[0],
            hyp: v[1],
        },
        // undo the column conditioning: A = a·e^{β}
        exterior: ExteriorCoefficients {
            fast: v[2] * rates.fast.exp(),
            slow: v[3] * rates.slow.exp(),
        },
        norm_factor: 1.0,
    })
}

fn null_vector_fixing(m: &linalg::Matrix<4>, fixed: usize) -> Option<[f64; 4]> {
    let free: Vec<usize> = (0..4).filter(|&c| c != fixed).collect();
    let subsystem = |dropped: usize| {
        let rows: Vec<usize> = (0..4).filter(|&r| r != dropped).collect();
        let mut a = [[0.0; 3]; 3];
        let mut rhs = [0.0; 3];
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in free.iter().enumerate() {
                a[i][j] = m[r][c];
            }
            rhs[i] = -m[r][fixed];
        }
        (a, rhs)
    };
    let conditioning = |a: &linalg::Matrix<3>| {
        let scale = linalg::row_norm_product(a);
        if scale > 0.0 {
            linalg::determinant(*a).abs() / scale
        } else {
            0.0
        }
    };

    let (a, rhs) = (0..4)
        .map(subsystem)
        .max_by(|x, y| conditioning(&x.0).total_cmp(&conditioning(&y.0)))?;
    if conditioning(&a) <= SINGULAR_MINOR {
        return None;
    }
    let x = linalg::solve(a, rhs, 0.0)?;
    let mut v = [0.0; 4];
    v[fixed] = 1.0;
    for (j, &c) in free.iter().enumerate() {
        v[c] = x[j];
    }
    Some(v)
}

// k-th derivatives of cos and sin in terms of (cos, sin) of the same argument
fn trig_derivative(parity: Parity, k: u32, c: f64, s: f64) -> f64 {
    match (parity, k % 4) {
        (Parity::Even, 0) => c,
        (Parity::Even, 1) => -s,
        (Parity::Even, 2) => -c,
        (Parity::Even, _) => s,
        (Parity::Odd, 0) => s,
        (Parity::Odd, 1) => c,
        (Parity::Odd, 2) => -s,
        (Parity::Odd, _) => -c,
    }
}

fn hyp_derivative(parity: Parity, k: u32, ch: f64, sh: f64) -> f64 {
    match (parity, k % 2) {
        (Parity::Even, 0) | (Parity::Odd, 1) => ch,
        _ => sh,
    }
}

impl EigenFunction {
    pub fn decay_rates(&self) -> DecayRates {
        // z < bL was checked when the coefficients were built
        flexural::exterior_decay_rates(self.strength, self.z)
            .expect("eigenfunction built from a bound eigenvalue")
    }

    /// The two terms of the `k`-th derivative of the interior formula, raw
    /// coefficients.
    pub fn interior_terms(&self, x: f64, k: u32) -> [f64; 2] {
        let zx = self.z * x;
        let zk = self.z.powi(k as i32);
        [
            self.interior.trig * zk * trig_derivative(self.parity, k, zx.cos(), zx.sin()),
            self.interior.hyp * zk * hyp_derivative(self.parity, k, zx.cosh(), zx.sinh()),
        ]
    }

    /// The two terms of the `k`-th derivative of the exterior formula, raw
    /// coefficients. For `x < 0` the left tail `ψ(x) = ±ψ(−x)` is used.
    pub fn exterior_terms(&self, x: f64, k: u32) -> [f64; 2] {
        let DecayRates { fast, slow } = self.decay_rates();
        let right = |x: f64| {
            [
                self.exterior.fast * (-fast).powi(k as i32) * (-fast * x).exp(),
                self.exterior.slow * (-slow).powi(k as i32) * (-slow * x).exp(),
            ]
        };
        if x >= 0.0 {
            right(x)
        } else {
            // d^k/dx^k [s·ψ_R(−x)] = s·(−1)^k·ψ_R^(k)(−x)
            let sign = self.parity.sign() * if k % 2 == 0 { 1.0 } else { -1.0 };
            right(-x).map(|t| sign * t)
        }
    }

    /// `k`-th derivative of the (scaled) eigenfunction anywhere on the line.
    pub fn derivative(&self, x: f64, k: u32) -> f64 {
        let [a, b] = if x.abs() < 1.0 {
            self.interior_terms(x, k)
        } else {
            self.exterior_terms(x, k)
        };
        self.norm_factor * (a + b)
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.derivative(x, 0)
    }

    /// Relative mismatch of value and first three derivatives across both
    /// walls: entries 0–3 at `x = −1`, 4–7 at `x = +1`. Each is
    /// `|interior − exterior|` divided by the largest individual term.
    pub fn continuity_residuals(&self) -> [f64; 8] {
        let mut out = [0.0; 8];
        for (w, x) in [-1.0, 1.0].into_iter().enumerate() {
            for k in 0..4 {
                let inner = self.interior_terms(x, k);
                let outer = self.exterior_terms(x, k);
                let scale = inner
                    .iter()
                    .chain(&outer)
                    .fold(0.0f64, |acc, t| acc.max(t.abs()));
                let diff = (inner[0] + inner[1]) - (outer[0] + outer[1]);
                out[4 * w + k as usize] = if scale > 0.0 { diff.abs() / scale } else { 0.0 };
            }
        }
        out
    }

    /// `∫ψ²` over `|x| ≤ 1` with the raw coefficients.
    fn raw_interior_mass(&self) -> f64 {
        simpson(
            |x| {
                let [a, b] = self.interior_terms(x, 0);
                (a + b) * (a + b)
            },
            -1.0,
            1.0,
            NORMALIZATION_POINTS,
        )
    }

    /// `∫ψ²` over `x ≥ 1` with the raw coefficients, in closed form.
    fn raw_tail_mass(&self) -> f64 {
        let DecayRates { fast, slow } = self.decay_rates();
        let [a, b] = self.exterior_terms(1.0, 0);
        a * a / (2.0 * fast) + 2.0 * a * b / (fast + slow) + b * b / (2.0 * slow)
    }

    /// Returns a copy scaled so that `∫ψ² dx = 1` over the whole line.
    pub fn normalize(&self) -> Result<EigenFunction> {
        let total = self.raw_interior_mass() + 2.0 * self.raw_tail_mass();
        if !(total > 0.0) || !total.is_finite() {
            return Err(Error::ZeroNorm);
        }
        Ok(EigenFunction {
            norm_factor: total.sqrt().recip(),
            ..*self
        })
    }

    /// Fraction of the probability mass inside the well.
    pub fn interior_probability(&self) -> f64 {
        let inner = self.raw_interior_mass();
        inner / (inner + 2.0 * self.raw_tail_mass())
    }
}

/// Normalized eigenfunctions of the first `count` levels (or all of them,
/// if fewer exist), in ascending order of `z`.
pub fn normalized_modes(strength: Strength, count: usize) -> Result<Vec<EigenFunction>> {
    flexural::finite_well_spectrum(strength)?
        .iter()
        .take(count)
        .map(|level| eigenfunction_coefficients(strength, level.z, level.parity)?.normalize())
        .collect()
}
