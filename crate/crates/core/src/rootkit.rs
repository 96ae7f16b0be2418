//! Bracketed scalar root finding: a uniform sign-change scan followed by
//! safeguarded secant/bisection refinement.

use crate::error::{Error, Result};

/// Grid spacing used by the eigenvalue scans.
pub const DEFAULT_STEP: f64 = 1e-3;
/// Absolute tolerance on refined roots.
pub const DEFAULT_TOL: f64 = 1e-12;

const MAX_ITERATIONS: usize = 200;

/// Returns every grid interval `[a, a + step]` (clipped to `hi`) on which `f`
/// changes sign, in ascending order. A grid point where `f` is exactly zero
/// is reported as the degenerate interval `(a, a)`.
pub fn scan_brackets<F>(mut f: F, lo: f64, hi: f64, step: f64) -> Result<Vec<(f64, f64)>>
where
    F: FnMut(f64) -> f64,
{
    if !(lo < hi && step > 0.0 && lo.is_finite() && hi.is_finite() && step.is_finite()) {
        return Err(Error::InvalidInterval { lo, hi, step });
    }
    let intervals = ((hi - lo) / step).ceil() as usize;
    let mut eval = |x: f64| {
        let value = f(x);
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::NonFiniteEvaluation { x, value })
        }
    };

    let mut brackets = Vec::new();
    let mut a = lo;
    let mut fa = eval(a)?;
    for i in 1..=intervals {
        let b = if i == intervals {
            hi
        } else {
            lo + i as f64 * step
        };
        let fb = eval(b)?;
        if fa == 0.0 {
            brackets.push((a, a));
        } else if fb != 0.0 && fa.signum() != fb.signum() {
            brackets.push((a, b));
        }
        a = b;
        fa = fb;
    }
    if fa == 0.0 {
        brackets.push((a, a));
    }
    Ok(brackets)
}

/// Refines a root inside `bracket` to within `tol`.
///
/// Each iteration tries a secant step (kept only if it lands strictly inside
/// the current bracket) and then bisects, so the bracket at least halves every
/// round. The result always lies inside the input bracket.
pub fn refine_root<F>(mut f: F, bracket: (f64, f64), tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> f64,
{
    let (mut a, mut b) = if bracket.0 <= bracket.1 {
        bracket
    } else {
        (bracket.1, bracket.0)
    };
    if a == b {
        return Ok(a);
    }
    let mut fa = f(a);
    let mut fb = f(b);
    if !fa.is_finite() {
        return Err(Error::NonFiniteEvaluation { x: a, value: fa });
    }
    if !fb.is_finite() {
        return Err(Error::NonFiniteEvaluation { x: b, value: fb });
    }
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() {
        return Err(Error::InvalidBracket { a, b, fa, fb });
    }

    for _ in 0..MAX_ITERATIONS {
        if b - a <= 2.0 * tol {
            break;
        }
        // secant
        let s = b - fb * (b - a) / (fb - fa);
        if s > a && s < b {
            let fs = f(s);
            if fs == 0.0 {
                return Ok(s);
            }
            if !fs.is_finite() {
                return Err(Error::NonFiniteEvaluation { x: s, value: fs });
            }
            if fs.signum() == fa.signum() {
                a = s;
                fa = fs;
            } else {
                b = s;
                fb = fs;
            }
            if b - a <= 2.0 * tol {
                break;
            }
        }
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return Ok(m);
        }
        if !fm.is_finite() {
            return Err(Error::NonFiniteEvaluation { x: m, value: fm });
        }
        if fm.signum() == fa.signum() {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    Ok(0.5 * (a + b))
}

/// Scan followed by refinement of every bracket.
///
/// Only sign changes are reported: an exact grid zero is kept when `f` has
/// opposite signs half a step to either side of it inside `[lo, hi]`, and
/// dropped otherwise (touching zeros, or cancellation to exactly `0.0` at
/// an endpoint).
pub fn find_roots<F>(mut f: F, lo: f64, hi: f64, step: f64, tol: f64) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> f64,
{
    let brackets = scan_brackets(&mut f, lo, hi, step)?;
    let mut roots = Vec::with_capacity(brackets.len());
    for (a, b) in brackets {
        if a == b {
            let (left, right) = (a - 0.5 * step, a + 0.5 * step);
            if left < lo || right > hi || f(left) * f(right) >= 0.0 {
                continue;
            }
        }
        roots.push(refine_root(&mut f, (a, b), tol)?);
    }
    Ok(roots)
}
