//! Bound states of the fourth-order flexural-shear beam equation.
//!
//! Inside the well (`|x| < 1` in units of `L`) the equation reduces to
//! `ψ'''' = z⁴ψ`, with the trig/hyperbolic basis `cos, cosh` (even) or
//! `sin, sinh` (odd). Outside, the bound solution is a sum of two decaying
//! exponentials with dimensionless rates `√(bL² + z²)` and `√(bL² − z²)`.
//! Matching value and first three derivatives at `x = 1` gives a 4×4
//! homogeneous system per parity whose determinant vanishes at the
//! eigenvalues.
//!
//! The exterior columns carry factors `e^{-√(bL² ± z²)}` that underflow for
//! deep wells. The matrices here are returned with those columns divided
//! out ("conditioned"); this rescales the determinant by a positive factor
//! and leaves its zero set untouched.

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::rootkit::{self, DEFAULT_STEP, DEFAULT_TOL};
use crate::welldomain::{merge_spectrum, ranked, EigenResult, ModelKind, Parity, Strength};

/// Distance kept from `z = 0` and `z = bL` when searching for eigenvalues.
/// At `z = bL` the slow decay rate vanishes and the fourth column
/// degenerates, so that endpoint is never reported as a bound state.
pub const SEARCH_EPSILON: f64 = 1e-6;

/// Threshold on `|det| / ∏‖row‖∞` below which `z` is accepted as an
/// eigenvalue by [`eigenfunction_coefficients`](crate::eigenfunction::eigenfunction_coefficients).
pub const EIGEN_RESIDUAL_THRESHOLD: f64 = 1e-6;

/// Exterior decay rates in units of `1/L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecayRates {
    /// `√(bL² + z²)`
    pub fast: f64,
    /// `√(bL² − z²)`
    pub slow: f64,
}

pub fn exterior_decay_rates(strength: Strength, z: f64) -> Result<DecayRates> {
    check_bound(strength, z)?;
    Ok(decay_rates_unchecked(strength.get(), z))
}

pub(crate) fn check_bound(strength: Strength, z: f64) -> Result<()> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::NonPositiveZ(z));
    }
    if z >= strength.get() {
        return Err(Error::Unbound {
            z,
            strength: strength.get(),
        });
    }
    Ok(())
}

#[inline]
fn decay_rates_unchecked(bl: f64, z: f64) -> DecayRates {
    let (b2, z2) = (bl * bl, z * z);
    DecayRates {
        fast: (b2 + z2).sqrt(),
        slow: (b2 - z2).sqrt(),
    }
}

fn conditioned_matrix_unchecked(bl: f64, z: f64, parity: Parity) -> Matrix<4> {
    let DecayRates { fast: b1, slow: b3 } = decay_rates_unchecked(bl, z);
    let (s, c, sh, ch) = (z.sin(), z.cos(), z.sinh(), z.cosh());
    let (z2, z3) = (z * z, z * z * z);
    let exterior = [
        [-1.0, -1.0],
        [b1, b3],
        [-b1 * b1, -b3 * b3],
        [b1 * b1 * b1, b3 * b3 * b3],
    ];
    let interior = match parity {
        Parity::Even => [
            [c, ch],
            [-z * s, z * sh],
            [-z2 * c, z2 * ch],
            [z3 * s, z3 * sh],
        ],
        Parity::Odd => [
            [s, sh],
            [z * c, z * ch],
            [-z2 * s, z2 * sh],
            [-z3 * c, z3 * ch],
        ],
    };
    let mut m = [[0.0; 4]; 4];
    for row in 0..4 {
        m[row] = [
            interior[row][0],
            interior[row][1],
            exterior[row][0],
            exterior[row][1],
        ];
    }
    m
}

/// Continuity system for even modes, unknowns `(C₂, C₄, A₂, A₄)`. Rows are
/// value, slope, second and third derivative at `x = 1`; columns 3 and 4
/// are divided by `e^{-√(bL²+z²)}` and `e^{-√(bL²−z²)}`.
pub fn even_system_matrix(strength: Strength, z: f64) -> Result<Matrix<4>> {
    system_matrix(strength, z, Parity::Even)
}

/// Continuity system for odd modes, unknowns `(C₁, C₃, A₂, A₄)`, conditioned
/// the same way as [`even_system_matrix`].
pub fn odd_system_matrix(strength: Strength, z: f64) -> Result<Matrix<4>> {
    system_matrix(strength, z, Parity::Odd)
}

pub fn system_matrix(strength: Strength, z: f64, parity: Parity) -> Result<Matrix<4>> {
    check_bound(strength, z)?;
    Ok(conditioned_matrix_unchecked(strength.get(), z, parity))
}

/// The continuity system with the exponential factors left in place. Only
/// representable for moderate `bL`; used to cross-check the conditioned form.
pub fn unconditioned_system_matrix(
    strength: Strength,
    z: f64,
    parity: Parity,
) -> Result<Matrix<4>> {
    let mut m = system_matrix(strength, z, parity)?;
    let [f3, f4] = column_factors(strength, z)?;
    for row in m.iter_mut() {
        row[2] *= f3;
        row[3] *= f4;
    }
    Ok(m)
}

/// `[e^{-√(bL²+z²)}, e^{-√(bL²−z²)}]`, the factors removed from the exterior
/// columns.
pub fn column_factors(strength: Strength, z: f64) -> Result<[f64; 2]> {
    let rates = exterior_decay_rates(strength, z)?;
    Ok([(-rates.fast).exp(), (-rates.slow).exp()])
}

/// Determinant of the conditioned continuity matrix, by pivoted elimination.
pub fn parity_determinant(strength: Strength, z: f64, parity: Parity) -> Result<f64> {
    system_matrix(strength, z, parity).map(linalg::determinant)
}

fn roots_of_parity(strength: Strength, parity: Parity) -> Result<Vec<f64>> {
    let bl = strength.get();
    let (lo, hi) = (SEARCH_EPSILON, bl - SEARCH_EPSILON);
    if lo >= hi {
        return Ok(Vec::new());
    }
    let det = |z: f64| linalg::determinant(conditioned_matrix_unchecked(bl, z, parity));
    rootkit::find_roots(det, lo, hi, DEFAULT_STEP, DEFAULT_TOL)
}

/// All eigenvalues of one parity in `(ε, bL − ε)`, ascending and numbered
/// from 1 within the parity.
pub fn finite_well_eigenvalues(strength: Strength, parity: Parity) -> Result<Vec<EigenResult>> {
    let roots = roots_of_parity(strength, parity)?;
    Ok(ranked(ModelKind::FlexuralShear4th, parity, &roots))
}

/// Even and odd levels merged into one ascending spectrum.
pub fn finite_well_spectrum(strength: Strength) -> Result<Vec<EigenResult>> {
    let even = finite_well_eigenvalues(strength, Parity::Even)?;
    let odd = finite_well_eigenvalues(strength, Parity::Odd)?;
    merge_spectrum(&even, &odd)
}

/// Residual of the clamped-wall characteristic equation
/// `cos(2z)·cosh(2z) = 1`, rewritten as `cos(2z) − 1/cosh(2z)` so it stays
/// finite for large `z`.
pub fn clamped_characteristic(z: f64) -> f64 {
    (2.0 * z).cos() - 1.0 / (2.0 * z).cosh()
}

/// First `count` levels of the infinitely deep well, where the walls clamp
/// both value and slope to zero.
///
/// The `n`-th root of `cos(x)·cosh(x) = 1` (with `x = 2z`) lies near
/// `(n + ½)π`, strictly inside `(nπ, (n + 1)π)`, where the residual changes
/// sign exactly once.
pub fn infinite_well_eigenvalues(count: usize) -> Result<Vec<EigenResult>> {
    if count == 0 {
        return Err(Error::InvalidCount);
    }
    let half_pi = std::f64::consts::FRAC_PI_2;
    (1..=count)
        .map(|n| {
            let bracket = (n as f64 * half_pi, (n + 1) as f64 * half_pi);
            let z = rootkit::refine_root(clamped_characteristic, bracket, DEFAULT_TOL)?;
            Ok(EigenResult::new(
                ModelKind::FlexuralShear4th,
                Parity::of_level(n),
                n,
                z,
            ))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bl(x: f64) -> Strength {
        Strength::new(x).unwrap()
    }

    #[test]
    fn decay_rates_at_zero_energy_limit() {
        let r = exterior_decay_rates(bl(10.0), 1e-9).unwrap();
        assert!((r.fast - 10.0).abs() < 1e-12);
        assert!((r.slow - 10.0).abs() < 1e-12);
    }

    #[test]
    fn decay_rates_exact_case() {
        let r = exterior_decay_rates(bl(10.0), 6.0).unwrap();
        assert!((r.fast - 136f64.sqrt()).abs() < 1e-14);
        assert!((r.fast - 11.6619038).abs() < 1e-7);
        assert_eq!(r.slow, 8.0);
    }

    #[test]
    fn decay_rates_ground_state() {
        // √(100 ± 1.974707²) evaluated with mpmath at 50 digits
        let r = exterior_decay_rates(bl(10.0), 1.974707).unwrap();
        assert!((r.fast - 10.193108836).abs() < 1e-8);
        assert!((r.slow - 9.803087894).abs() < 1e-8);
    }

    #[test]
    fn decay_rates_domain_errors() {
        assert!(matches!(
            exterior_decay_rates(bl(10.0), 10.0),
            Err(Error::Unbound { .. })
        ));
        assert!(matches!(
            exterior_decay_rates(bl(10.0), 12.0),
            Err(Error::Unbound { .. })
        ));
        assert!(matches!(
            exterior_decay_rates(bl(10.0), 0.0),
            Err(Error::NonPositiveZ(_))
        ));
        assert!(matches!(
            exterior_decay_rates(bl(10.0), -1.0),
            Err(Error::NonPositiveZ(_))
        ));
    }

    #[test]
    fn decay_rate_ordering() {
        for z in [0.1, 1.0, 5.0, 9.9] {
            let r = exterior_decay_rates(bl(10.0), z).unwrap();
            assert!(r.fast > 10.0 && 10.0 > r.slow && r.slow >= 0.0);
            assert!((r.fast * r.fast - r.slow * r.slow - 2.0 * z * z).abs() < 1e-10);
        }
    }

    #[test]
    fn even_matrix_entries() {
        let m = even_system_matrix(bl(10.0), 1.0).unwrap();
        assert!((m[0][0] - 0.5403023).abs() < 1e-7);
        assert_eq!(m[0][2], -1.0);
        let m = even_system_matrix(bl(10.0), 2.0).unwrap();
        // 8·sinh 2 = 29.01488326... (mpmath)
        assert!((m[3][1] - 8.0 * 2f64.sinh()).abs() < 1e-12);
        assert!((m[3][1] - 29.014883263).abs() < 1e-8);
    }

    #[test]
    fn odd_matrix_entries() {
        let m = odd_system_matrix(bl(10.0), 1.0).unwrap();
        assert!((m[0][0] - 0.8414710).abs() < 1e-7);
        assert!((m[1][0] - 0.5403023).abs() < 1e-7);
        let m = odd_system_matrix(bl(10.0), 3.0).unwrap();
        assert!((m[2][1] - 9.0 * 3f64.sinh()).abs() < 1e-12);
        assert!((m[2][1] - 90.160874347).abs() < 1e-8);
    }

    #[test]
    fn unconditioned_first_row_matches_literal_form() {
        let m = unconditioned_system_matrix(bl(10.0), 1.0, Parity::Even).unwrap();
        assert!((m[0][2] + (-(101f64).sqrt()).exp()).abs() < 1e-20);
        assert!((m[0][3] + (-(99f64).sqrt()).exp()).abs() < 1e-20);
    }

    #[test]
    fn determinant_sign_changes_bracket_known_levels() {
        let even = [(1.97, 1.98), (4.62, 4.63), (7.29, 7.30), (9.79, 9.80)];
        let odd = [(3.28, 3.29), (5.95, 5.96), (8.59, 8.60)];
        for (parity, windows) in [(Parity::Even, &even[..]), (Parity::Odd, &odd[..])] {
            for &(a, b) in windows {
                let brackets = rootkit::scan_brackets(
                    |z| parity_determinant(bl(10.0), z, parity).unwrap(),
                    a,
                    b,
                    1e-4,
                )
                .unwrap();
                assert_eq!(brackets.len(), 1, "{parity:?} on ({a}, {b})");
            }
        }
    }

    #[test]
    fn bl10_levels() {
        let even: Vec<f64> = finite_well_eigenvalues(bl(10.0), Parity::Even)
            .unwrap()
            .iter()
            .map(|r| r.z)
            .collect();
        let odd: Vec<f64> = finite_well_eigenvalues(bl(10.0), Parity::Odd)
            .unwrap()
            .iter()
            .map(|r| r.z)
            .collect();
        let want_even = [1.974707, 4.620365, 7.290139, 9.799891];
        let want_odd = [3.288725, 5.957359, 8.597635];
        assert_eq!(even.len(), 4);
        assert_eq!(odd.len(), 3);
        for (g, w) in even.iter().zip(want_even).chain(odd.iter().zip(want_odd)) {
            assert!((g - w).abs() < 1e-6, "{g} vs {w}");
        }
    }

    #[test]
    fn bl30_has_nineteen_states() {
        assert_eq!(finite_well_spectrum(bl(30.0)).unwrap().len(), 19);
    }

    #[test]
    fn tiny_well_may_be_empty() {
        let levels = finite_well_spectrum(bl(1e-6)).unwrap();
        assert!(levels.is_empty());
    }

    #[test]
    fn infinite_levels() {
        let levels = infinite_well_eigenvalues(9).unwrap();
        assert!((levels[0].z - 2.365020).abs() < 1e-6);
        assert!((levels[3].z - 7.068583).abs() < 1e-6);
        assert!((levels[8].z - 14.922565).abs() < 1e-6);
        for r in &levels {
            let x = 2.0 * r.z;
            assert!((x.cos() * x.cosh() - 1.0).abs() < 1e-10 * x.cosh());
        }
        assert!(matches!(
            infinite_well_eigenvalues(0),
            Err(Error::InvalidCount)
        ));
    }
}
