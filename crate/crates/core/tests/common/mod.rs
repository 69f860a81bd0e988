//! Independent reference values shared by the integration tests.
//!
//! `J₁` comes from the integral representation
//! `J₁(x) = (1/2π) ∫₀^{2π} cos(τ - x sin τ) dτ`, summed with the periodic
//! trapezoid rule, which converges geometrically once the node count
//! exceeds `x` by a margin. Nothing here calls into the library's own
//! special-function code.

#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

/// Wavelength (nm) and wire diameter (µm) of the reference figures.
pub const WAVELENGTH_NM: f64 = 633.0;
pub const DIAMETER_UM: f64 = 17.0;

/// `pR = 2π R / λ` for the reference figures.
pub fn reference_p_r() -> f64 {
    TAU * (DIAMETER_UM * 0.5e-6) / (WAVELENGTH_NM * 1e-9)
}

pub fn oracle_j1(x: f64) -> f64 {
    let n = (x.abs().ceil() as usize) + 96;
    let h = TAU / n as f64;
    let sum: f64 = (0..n)
        .map(|k| {
            let tau = k as f64 * h;
            (tau - x * tau.sin()).cos()
        })
        .sum();
    sum / n as f64
}

/// `2 J₁(x) / x`, equal to 1 at the origin.
pub fn oracle_jinc(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        2.0 * oracle_j1(x) / x
    }
}

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut f_lo = f(lo);
    assert!(f_lo * f(hi) < 0.0, "oracle bracket has no sign change");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 || hi - lo < 1e-15 {
            return mid;
        }
        if (fm < 0.0) == (f_lo < 0.0) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `n`-th positive zero of `J₁` (1-based), located by a coarse scan of the
/// oracle followed by bisection.
pub fn oracle_j1_zero(n: usize) -> f64 {
    let mut found = 0;
    let step = 0.05;
    let mut x = 1.0;
    loop {
        if oracle_j1(x) * oracle_j1(x + step) < 0.0 {
            found += 1;
            if found == n {
                return bisect(oracle_j1, x, x + step);
            }
        }
        x += step;
    }
}

/// First positive zero of `sin x / x` scaled: root of `sin(pR sin θ)`.
pub fn oracle_classical_zero(p_r: f64, k: usize) -> f64 {
    (k as f64 * PI / p_r).asin()
}

pub fn oracle_quantum_zero(p_r: f64, k: usize) -> f64 {
    2.0 * (oracle_j1_zero(k) / (2.0 * p_r)).asin()
}

