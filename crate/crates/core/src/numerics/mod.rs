//! Special functions, the disk-transform quadrature oracle and bracketing
//! root finding.

mod bessel;
mod hyp;
mod quadrature;
mod roots;
mod scalar;

pub use bessel::{bessel_j1, jinc};
pub use hyp::{hyp0f1_reg2, hyp0f1_reg2_series};
pub use quadrature::{disk_ft_oracle, GaussLegendre};
pub use roots::find_zero;
pub use scalar::Real;

use crate::error::{ensure_finite, Result};

/// Complex value used for scattering amplitudes.
pub type Complexv<T> = num_complex::Complex<T>;

/// Interval width used by every internal root search.
pub const ROOT_TOL: f64 = 1e-12;

/// `sin(x)/x` with `sinc(0) = 1`.
pub fn sinc<T: Real>(x: T) -> Result<T> {
    ensure_finite("x", x)?;
    Ok(sinc_unchecked(x))
}

#[inline]
pub(crate) fn sinc_unchecked<T: Real>(x: T) -> T {
    if x == T::zero() {
        T::one()
    } else {
        x.sin() / x
    }
}

/// The `n`-th positive zero `j₁,ₙ` of `J₁` (`n ≥ 1`).
///
/// McMahon's expansion seeds a bracket that is then bisected on `J₁`.
pub fn j1_zero<T: Real>(n: usize) -> Result<T> {
    if n == 0 {
        return Err(crate::Error::Input("zero index starts at 1".into()));
    }
    let beta = (n as f64 + 0.25) * std::f64::consts::PI;
    let guess = beta - 3.0 / (8.0 * beta);
    find_zero(bessel_j1, T::lit(guess - 0.4), T::lit(guess + 0.4), T::lit(ROOT_TOL))
}
