//! Angular grids and sampled angular distributions.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::Real;

/// Default angular window in radians.
pub const DEFAULT_THETA_MAX: f64 = 0.15;
/// Default number of grid points.
pub const DEFAULT_THETA_POINTS: usize = 2001;

/// Strictly increasing set of scattering angles in radians.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AngularGrid<T> {
    thetas: Vec<T>,
}

impl<T: Real> AngularGrid<T> {
    pub fn new(thetas: Vec<T>) -> Result<Self> {
        validate_axis("theta", &thetas)?;
        Ok(Self { thetas })
    }

    /// `points` evenly spaced angles from `min` to `max` inclusive.
    ///
    /// A grid symmetric about zero is exactly antisymmetric
    /// (`θ_i = -θ_{n-1-i}`) and hits `θ = 0` exactly for odd `points`.
    pub fn uniform(min: T, max: T, points: usize) -> Result<Self> {
        Self::new(linspace(min, max, points)?)
    }

    pub fn thetas(&self) -> &[T] {
        &self.thetas
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn into_inner(self) -> Vec<T> {
        self.thetas
    }
}

impl<T: Real> Default for AngularGrid<T> {
    /// Uniform θ ∈ [-0.15, 0.15] with 2001 points.
    fn default() -> Self {
        Self::uniform(
            -T::lit(DEFAULT_THETA_MAX),
            T::lit(DEFAULT_THETA_MAX),
            DEFAULT_THETA_POINTS,
        )
        .expect("default grid is valid")
    }
}

pub(crate) fn linspace<T: Real>(min: T, max: T, points: usize) -> Result<Vec<T>> {
    if points < 2 {
        return Err(Error::Input(format!("need at least 2 grid points, got {points}")));
    }
    if !(min.is_finite() && max.is_finite()) || !(min < max) {
        return Err(Error::Input(format!("grid bounds must satisfy min < max, got [{min}, {max}]")));
    }
    let last = points - 1;
    let span = T::from_usize_lossy(last);
    Ok((0..points)
        .map(|i| {
            let lo = T::from_usize_lossy(last - i);
            let hi = T::from_usize_lossy(i);
            (min * lo + max * hi) / span
        })
        .collect())
}

pub(crate) fn validate_axis<T: Real>(name: &str, values: &[T]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Input(format!("{name} grid is empty")));
    }
    if let Some(bad) = values.iter().find(|v| !v.is_finite()) {
        return Err(Error::Input(format!("{name} grid contains non-finite value {bad}")));
    }
    if let Some(i) = values.windows(2).position(|w| !(w[0] < w[1])) {
        return Err(Error::Input(format!(
            "{name} grid must be strictly increasing (index {} -> {})",
            i,
            i + 1
        )));
    }
    Ok(())
}

/// Composite trapezoid rule over `(xs, ys)`.
pub fn trapezoid<T: Real>(xs: &[T], ys: &[T]) -> T {
    xs.windows(2)
        .zip(ys.windows(2))
        .map(|(x, y)| (x[1] - x[0]) * (y[0] + y[1]) * T::lit(0.5))
        .sum()
}

/// How a [`Pattern`]'s density has been scaled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    /// Overall constant fixed to one.
    Raw,
    /// Largest sample equals one.
    PeakOne,
    /// Trapezoid integral over the grid equals one.
    UnitArea,
    /// Rescaled to the area of a reference pattern.
    AreaMatched,
}

/// Sampled angular probability density `dσ/dθ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pattern<T> {
    thetas: Vec<T>,
    density: Vec<T>,
    normalization: Normalization,
    /// Free-form provenance (beam, wire, configuration).
    pub metadata: BTreeMap<String, String>,
}

impl<T: Real> Pattern<T> {
    pub fn new(thetas: Vec<T>, density: Vec<T>, normalization: Normalization) -> Result<Self> {
        validate_axis("theta", &thetas)?;
        if thetas.len() != density.len() {
            return Err(Error::Input(format!(
                "{} angles but {} density samples",
                thetas.len(),
                density.len()
            )));
        }
        if let Some(d) = density.iter().find(|d| !(**d >= T::zero()) || !d.is_finite()) {
            return Err(Error::Input(format!("density must be finite and non-negative, got {d}")));
        }
        Ok(Self { thetas, density, normalization, metadata: BTreeMap::new() })
    }

    /// Raw pattern with the requested normalization applied.
    pub(crate) fn build(
        thetas: Vec<T>,
        density: Vec<T>,
        normalization: Normalization,
    ) -> Result<Self> {
        Self::new(thetas, density, Normalization::Raw)?.normalized(normalization)
    }

    pub fn thetas(&self) -> &[T] {
        &self.thetas
    }

    pub fn density(&self) -> &[T] {
        &self.density
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn len(&self) -> usize {
        self.thetas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.thetas.is_empty()
    }

    pub fn with_metadata(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.metadata.insert(key.into(), value.to_string());
        self
    }

    /// Trapezoid integral of the density over the grid.
    pub fn area(&self) -> T {
        trapezoid(&self.thetas, &self.density)
    }

    pub fn peak(&self) -> T {
        self.density.iter().copied().fold(T::zero(), T::max)
    }

    /// Density multiplied by a non-negative factor, tagged with `normalization`.
    pub fn scaled(&self, factor: T, normalization: Normalization) -> Result<Self> {
        if !(factor >= T::zero()) || !factor.is_finite() {
            return Err(Error::Degenerate(format!("invalid scale factor {factor}")));
        }
        Ok(Self {
            thetas: self.thetas.clone(),
            density: self.density.iter().map(|&d| d * factor).collect(),
            normalization,
            metadata: self.metadata.clone(),
        })
    }

    /// Re-normalizes the density. `AreaMatched` needs a reference pattern
    /// and is produced by `analysis::match_areas` instead.
    pub fn normalized(&self, normalization: Normalization) -> Result<Self> {
        match normalization {
            Normalization::Raw => Ok(Self { normalization, ..self.clone() }),
            Normalization::PeakOne => {
                let peak = self.peak();
                if !(peak > T::zero()) {
                    return Err(Error::Degenerate("pattern peak is zero".into()));
                }
                self.scaled(peak.recip(), normalization)
            }
            Normalization::UnitArea => {
                let area = self.area();
                if !(area > T::zero()) {
                    return Err(Error::Degenerate("pattern area is zero".into()));
                }
                self.scaled(area.recip(), normalization)
            }
            Normalization::AreaMatched => Err(Error::Input(
                "area matching needs a reference pattern; use analysis::match_areas".into(),
            )),
        }
    }

    pub(crate) fn same_grid(&self, other: &Self) -> bool {
        self.thetas == other.thetas
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_shape() {
        let g = AngularGrid::<f64>::default();
        assert_eq!(g.len(), 2001);
        let t = g.thetas();
        assert_eq!(t[0], -0.15);
        assert_eq!(t[2000], 0.15);
        assert_eq!(t[1000], 0.0);
        for i in 0..2001 {
            assert_eq!(t[i], -t[2000 - i]);
        }
    }

    #[test]
    fn grid_validation() {
        assert!(AngularGrid::<f64>::new(vec![]).is_err());
        assert!(AngularGrid::new(vec![0.0, 0.0]).is_err());
        assert!(AngularGrid::new(vec![0.1, 0.0]).is_err());
        assert!(AngularGrid::new(vec![0.0, f64::NAN]).is_err());
        assert!(AngularGrid::<f64>::uniform(0.0, 1.0, 1).is_err());
        assert!(AngularGrid::<f64>::uniform(1.0, 0.0, 5).is_err());
        assert!(AngularGrid::new(vec![0.5]).is_ok());
    }

    #[test]
    fn pattern_validation() {
        assert!(Pattern::new(vec![0.0, 1.0], vec![1.0], Normalization::Raw).is_err());
        assert!(Pattern::new(vec![0.0, 1.0], vec![1.0, -1.0], Normalization::Raw).is_err());
        assert!(Pattern::new(vec![0.0, 1.0], vec![1.0, f64::NAN], Normalization::Raw).is_err());
    }

    #[test]
    fn unit_area_normalization() {
        let g = AngularGrid::<f64>::uniform(-1.0, 1.0, 101).unwrap().into_inner();
        let d: Vec<f64> = g.iter().map(|x| 3.0 * (-x * x).exp()).collect();
        let p = Pattern::build(g, d, Normalization::UnitArea).unwrap();
        assert!((p.area() - 1.0).abs() < 1e-12);
        let q = p.normalized(Normalization::PeakOne).unwrap();
        assert_eq!(q.peak(), 1.0);
    }

    #[test]
    fn zero_pattern_cannot_be_normalized() {
        let p = Pattern::new(vec![0.0, 1.0], vec![0.0, 0.0], Normalization::Raw).unwrap();
        assert!(matches!(p.normalized(Normalization::PeakOne), Err(Error::Degenerate(_))));
        assert!(matches!(p.normalized(Normalization::UnitArea), Err(Error::Degenerate(_))));
        assert!(matches!(p.normalized(Normalization::AreaMatched), Err(Error::Input(_))));
    }

    #[test]
    fn trapezoid_linear_exact() {
        let x = [0.0_f64, 0.5, 2.0];
        let y = [1.0, 2.0, 5.0];
        assert!((trapezoid(&x, &y) - 6.0).abs() < 1e-15);
    }
}
