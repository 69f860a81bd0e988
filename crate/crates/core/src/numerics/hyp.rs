use super::scalar::CompensatedSum;
use super::{bessel::jinc, Real};
use crate::error::{ensure_finite, Result};

const SERIES_MAX_TERMS: usize = 10_000;

/// Regularized confluent hypergeometric limit function `₀F̃₁(; 2; z)`.
///
/// Since `Γ(2) = 1` this equals the plain `₀F₁(; 2; z) = Σ zᵏ / (k! (k+1)!)`.
/// For `z < 0` it is evaluated through the identity
/// `₀F₁(; 2; -x²/4) = 2 J₁(x) / x`, which stays accurate for arguments
/// far beyond the point where the alternating series cancels
/// catastrophically. For `z ≥ 0` all series terms are positive and the
/// series is summed directly.
pub fn hyp0f1_reg2<T: Real>(z: T) -> Result<T> {
    ensure_finite("z", z)?;
    if z < T::zero() {
        let x = T::lit(2.0) * (-z).sqrt();
        Ok(jinc(x))
    } else {
        hyp0f1_reg2_series(z)
    }
}

/// Direct power series for `₀F₁(; 2; z)` with compensated summation.
///
/// Terminates once `|term| < 1e-17 · |partial sum|`. Reliable for
/// `|z| ≤ 100` when `z` is negative; kept as the cross-check path for the
/// Bessel route in [`hyp0f1_reg2`].
pub fn hyp0f1_reg2_series<T: Real>(z: T) -> Result<T> {
    ensure_finite("z", z)?;
    let stop = T::lit(1e-17);
    let mut acc = CompensatedSum::new();
    let mut term = T::one();
    acc.add(term);
    for k in 1..SERIES_MAX_TERMS {
        // t_k = t_{k-1} * z / (k (k+1))
        let kf = T::from_usize_lossy(k);
        term = term * z / (kf * (kf + T::one()));
        acc.add(term);
        if term.abs() < stop * acc.value().abs() || term == T::zero() {
            break;
        }
    }
    ensure_finite("0F1(;2;z)", acc.value())
}
