//! Dark-fringe locations, the classical radius-overestimation factor and
//! curve comparison.

use serde::{Deserialize, Serialize};

use crate::classical::{ArgumentForm, ClassicalConfig};
use crate::electron::{check_p_r, low_e_amplitude};
use crate::error::{Error, Result};
use crate::numerics::{find_zero, Real, ROOT_TOL};
use crate::pattern::{trapezoid, Normalization, Pattern};

/// Sign-change scan steps per expected fringe spacing `π / pR`.
const STEPS_PER_FRINGE: f64 = 8.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ZeroMethod {
    /// Zeros of the low-energy form factor, `2pR sin(θ/2) = j₁,ₖ`.
    QuantumLowE,
    /// Zeros of the slit amplitude, `pR sin θ = kπ`.
    Classical,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroReport<T> {
    pub method: ZeroMethod,
    /// First `n` dark points with `θ > 0`, increasing.
    pub zeros: Vec<T>,
    pub n: usize,
}

/// First `n` dark points of the quantum or classical single-beam pattern.
///
/// Sign changes of the amplitude are bracketed by a uniform scan and then
/// bisected to 1e-12 rad. Quantum zeros are searched on `(0, π)`, classical
/// ones on `(0, π/2]` where `sin θ` is monotone.
pub fn first_dark_points<T: Real>(p_r: T, method: ZeroMethod, n: usize) -> Result<ZeroReport<T>> {
    check_p_r(p_r)?;
    if n == 0 {
        return Err(Error::Input("requested zero count must be positive".into()));
    }
    let (upper, amplitude): (T, Box<dyn Fn(T) -> T>) = match method {
        ZeroMethod::QuantumLowE => (
            T::PI(),
            Box::new(move |t: T| low_e_amplitude(p_r, t).unwrap_or_else(|_| T::nan())),
        ),
        ZeroMethod::Classical => {
            let cfg = ClassicalConfig::new(p_r)?;
            (T::FRAC_PI_2(), Box::new(move |t: T| cfg.amplitude(ArgumentForm::SinTheta, t)))
        }
    };
    let step = (T::PI() / (p_r * T::lit(STEPS_PER_FRINGE))).min(upper / T::lit(64.0));
    let tol = T::lit(ROOT_TOL);
    let mut zeros = Vec::with_capacity(n);
    let mut lo = T::zero();
    let mut f_lo = amplitude(lo);
    while zeros.len() < n && lo < upper {
        let hi = (lo + step).min(upper);
        let f_hi = amplitude(hi);
        if f_hi == T::zero() {
            zeros.push(hi);
        } else if f_lo != T::zero() && f_lo.is_sign_negative() != f_hi.is_sign_negative() {
            zeros.push(find_zero(&amplitude, lo, hi, tol)?);
        }
        lo = hi;
        f_lo = f_hi;
    }
    if zeros.len() < n {
        return Err(Error::Range(format!(
            "only {} of {n} dark points exist below {} rad for pR = {p_r}",
            zeros.len(),
            upper
        )));
    }
    Ok(ZeroReport { method, zeros, n })
}

/// Ratio of the quantum to the classical first dark angle.
///
/// Tends to `j₁,₁/π ≈ 1.2197` as `pR → ∞`.
pub fn overestimation_factor<T: Real>(p_r: T) -> Result<T> {
    let quantum = first_dark_points(p_r, ZeroMethod::QuantumLowE, 1)?.zeros[0];
    let classical = first_dark_points(p_r, ZeroMethod::Classical, 1)?.zeros[0];
    Ok(quantum / classical)
}

/// Rescales `target` so its trapezoid area equals that of `reference`.
pub fn match_areas<T: Real>(reference: &Pattern<T>, target: &Pattern<T>) -> Result<Pattern<T>> {
    if !reference.same_grid(target) {
        return Err(Error::Input("patterns must share the same theta grid".into()));
    }
    let target_area = target.area();
    if !(target_area > T::zero()) {
        return Err(Error::Degenerate(format!("target area is {target_area}")));
    }
    let scale = reference.area() / target_area;
    target.scaled(scale, Normalization::AreaMatched)
}

/// Pointwise and integrated differences between two sampled curves.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveComparison<T> {
    pub max_abs_diff: T,
    /// `sqrt(∫ (a - b)² dθ)` by the trapezoid rule.
    pub l2_diff: T,
    /// First dark point (θ > 0) of each curve, if the grid resolves one.
    pub first_zero_a_rad: Option<T>,
    pub first_zero_b_rad: Option<T>,
    /// `first_zero_a - first_zero_b`.
    pub first_zero_offset_rad: Option<T>,
}

/// Compares two patterns sampled on the same grid.
pub fn compare_curves<T: Real>(a: &Pattern<T>, b: &Pattern<T>) -> Result<CurveComparison<T>> {
    if !a.same_grid(b) {
        return Err(Error::Input("patterns must share the same theta grid".into()));
    }
    let diffs: Vec<T> = a.density().iter().zip(b.density()).map(|(&x, &y)| x - y).collect();
    let max_abs_diff = diffs.iter().fold(T::zero(), |m, d| m.max(d.abs()));
    let squared: Vec<T> = diffs.iter().map(|&d| d * d).collect();
    let l2_diff = trapezoid(a.thetas(), &squared).sqrt();
    let first_zero_a_rad = first_grid_minimum(a);
    let first_zero_b_rad = first_grid_minimum(b);
    let first_zero_offset_rad = match (first_zero_a_rad, first_zero_b_rad) {
        (Some(za), Some(zb)) => Some(za - zb),
        _ => None,
    };
    Ok(CurveComparison { max_abs_diff, l2_diff, first_zero_a_rad, first_zero_b_rad, first_zero_offset_rad })
}

/// First interior local minimum at θ > 0, refined by the vertex of the
/// parabola through it and its two neighbours. Near a dark point the
/// density is quadratic in θ, so the vertex lands on the zero.
fn first_grid_minimum<T: Real>(p: &Pattern<T>) -> Option<T> {
    let t = p.thetas();
    let d = p.density();
    (1..t.len().saturating_sub(1))
        .filter(|&i| t[i] > T::zero())
        .find(|&i| d[i] <= d[i - 1] && d[i] < d[i + 1])
        .map(|i| parabola_vertex((t[i - 1], d[i - 1]), (t[i], d[i]), (t[i + 1], d[i + 1])))
}

fn parabola_vertex<T: Real>((x0, y0): (T, T), (x1, y1): (T, T), (x2, y2): (T, T)) -> T {
    let a = (x1 - x0) * (y1 - y2);
    let b = (x1 - x2) * (y1 - y0);
    let denom = a - b;
    if denom == T::zero() {
        return x1;
    }
    let num = (x1 - x0) * a - (x1 - x2) * b;
    x1 - T::lit(0.5) * num / denom
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::j1_zero;
    use crate::pattern::AngularGrid;
    use std::f64::consts::PI;

    const PR: f64 = 84.371_366_684_086_07;

    #[test]
    fn reference_first_zeros() {
        let q = first_dark_points(PR, ZeroMethod::QuantumLowE, 1).unwrap();
        let c = first_dark_points(PR, ZeroMethod::Classical, 1).unwrap();
        assert!((q.zeros[0] - 0.045_420).abs() < 1e-5);
        assert!((c.zeros[0] - 0.037_247).abs() < 1e-5);
    }

    #[test]
    fn zeros_satisfy_defining_equations() {
        let q = first_dark_points(PR, ZeroMethod::QuantumLowE, 3).unwrap();
        let c = first_dark_points(PR, ZeroMethod::Classical, 3).unwrap();
        for k in 0..3 {
            let j: f64 = j1_zero(k + 1).unwrap();
            assert!((2.0 * PR * (q.zeros[k] / 2.0).sin() - j).abs() < 1e-10);
            assert!((PR * c.zeros[k].sin() - (k + 1) as f64 * PI).abs() < 1e-10);
        }
        assert!(q.zeros.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn too_few_zeros_is_range_error() {
        // 2 pR sin(θ/2) < 2 pR < j11 for pR = 1.5
        assert!(matches!(
            first_dark_points(1.5, ZeroMethod::QuantumLowE, 1),
            Err(Error::Range(_))
        ));
        assert!(matches!(
            first_dark_points(PR, ZeroMethod::Classical, 100),
            Err(Error::Range(_))
        ));
        assert!(first_dark_points(PR, ZeroMethod::Classical, 0).is_err());
    }

    #[test]
    fn classical_asymptote() {
        let c = first_dark_points(1e5, ZeroMethod::Classical, 1).unwrap();
        assert!((c.zeros[0] * 1e5 - PI).abs() < 1e-6);
    }

    #[test]
    fn factor_at_reference_parameters() {
        let f = overestimation_factor(PR).unwrap();
        assert!((f - 1.219_492_757).abs() < 1e-8);
    }

    #[test]
    fn match_areas_basics() {
        let g = AngularGrid::uniform(-1.0, 1.0, 11).unwrap().into_inner();
        let d: Vec<f64> = g.iter().map(|x| 1.0 + x * x).collect();
        let r = Pattern::new(g.clone(), d.clone(), Normalization::Raw).unwrap();
        let same = match_areas(&r, &r).unwrap();
        assert_eq!(same.density(), r.density());
        let doubled = Pattern::new(g.clone(), d.iter().map(|x| 2.0 * x).collect(), Normalization::Raw)
            .unwrap();
        let halved = match_areas(&r, &doubled).unwrap();
        for (a, b) in halved.density().iter().zip(r.density()) {
            assert!((a - b).abs() < 1e-15);
        }
        assert_eq!(halved.normalization(), Normalization::AreaMatched);
        let zero = Pattern::new(g.clone(), vec![0.0; 11], Normalization::Raw).unwrap();
        assert!(matches!(match_areas(&r, &zero), Err(Error::Degenerate(_))));
        let other = Pattern::new(vec![0.0, 1.0], vec![1.0, 1.0], Normalization::Raw).unwrap();
        assert!(matches!(match_areas(&r, &other), Err(Error::Input(_))));
    }

    #[test]
    fn compare_identical_curves() {
        let g = AngularGrid::uniform(-0.1, 0.1, 201).unwrap();
        let cfg = ClassicalConfig::new(PR).unwrap();
        let p = crate::classical::pattern_classical(&cfg, &g, Normalization::PeakOne).unwrap();
        let cmp = compare_curves(&p, &p).unwrap();
        assert_eq!(cmp.max_abs_diff, 0.0);
        assert_eq!(cmp.l2_diff, 0.0);
        assert_eq!(cmp.first_zero_offset_rad, Some(0.0));
    }

    #[test]
    fn parabola_vertex_exact_for_quadratic() {
        let f = |x: f64| 3.0 * (x - 0.123).powi(2);
        let v = parabola_vertex((0.1, f(0.1)), (0.12, f(0.12)), (0.14, f(0.14)));
        assert!((v - 0.123).abs() < 1e-14);
    }
}
