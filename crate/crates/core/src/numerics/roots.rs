use super::Real;
use crate::error::{Error, Result};

const MAX_BISECTIONS: usize = 4096;

/// Bisection root finder on a sign-changing bracket.
///
/// Returns the midpoint of the final bracket once its width is at most
/// `tol` (or once the bracket can no longer be split in floating point).
/// An endpoint where `f` is exactly zero is returned immediately.
pub fn find_zero<T, F>(f: F, bracket_lo: T, bracket_hi: T, tol: T) -> Result<T>
where
    T: Real,
    F: Fn(T) -> T,
{
    if !(tol > T::zero()) {
        return Err(Error::Input(format!("tolerance must be positive, got {tol}")));
    }
    if !bracket_lo.is_finite() || !bracket_hi.is_finite() {
        return Err(Error::Domain("bracket endpoints must be finite".into()));
    }
    let (mut lo, mut hi) = if bracket_lo <= bracket_hi {
        (bracket_lo, bracket_hi)
    } else {
        (bracket_hi, bracket_lo)
    };
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == T::zero() {
        return Ok(lo);
    }
    if f_hi == T::zero() {
        return Ok(hi);
    }
    if f_lo.is_nan() || f_hi.is_nan() || f_lo.is_sign_negative() == f_hi.is_sign_negative() {
        return Err(Error::Bracket {
            lo: lo.to_f64_lossy(),
            hi: hi.to_f64_lossy(),
            f_lo: f_lo.to_f64_lossy(),
            f_hi: f_hi.to_f64_lossy(),
        });
    }
    let half = T::lit(0.5);
    for _ in 0..MAX_BISECTIONS {
        let mid = lo + (hi - lo) * half;
        if hi - lo <= tol || mid <= lo || mid >= hi {
            return Ok(mid);
        }
        let f_mid = f(mid);
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if f_mid.is_sign_negative() == f_lo.is_sign_negative() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo + (hi - lo) * half)
}
