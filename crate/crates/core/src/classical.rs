//! Fraunhofer comparator distributions.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::numerics::{sinc_unchecked, Real};
use crate::pattern::{AngularGrid, Normalization, Pattern};

/// Argument used inside the slit `sinc`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArgumentForm {
    /// `pR sin θ`, the textbook slit argument.
    SinTheta,
    /// `qR = 2pR sin(θ/2)`, equal to the above up to `O(θ³)`.
    MomentumTransfer,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassicalConfig<T> {
    p_r: T,
    radius_scale: T,
}

impl<T: Real> ClassicalConfig<T> {
    pub fn new(p_r: T) -> Result<Self> {
        Self::with_radius_scale(p_r, T::one())
    }

    /// `radius_scale` multiplies the wire radius seen by the classical model.
    pub fn with_radius_scale(p_r: T, radius_scale: T) -> Result<Self> {
        ensure_finite("pR", p_r)?;
        ensure_finite("radius_scale", radius_scale)?;
        if p_r <= T::zero() {
            return Err(Error::Input(format!("pR must be positive, got {p_r}")));
        }
        if radius_scale <= T::zero() {
            return Err(Error::Input(format!("radius scale must be positive, got {radius_scale}")));
        }
        Ok(Self { p_r, radius_scale })
    }

    pub fn p_r(&self) -> T {
        self.p_r
    }

    pub fn radius_scale(&self) -> T {
        self.radius_scale
    }

    /// `pR` after applying the radius scale.
    pub fn effective_p_r(&self) -> T {
        self.p_r * self.radius_scale
    }

    fn argument(&self, form: ArgumentForm, theta: T) -> T {
        match form {
            ArgumentForm::SinTheta => self.effective_p_r() * theta.sin(),
            ArgumentForm::MomentumTransfer => {
                T::lit(2.0) * self.effective_p_r() * (theta * T::lit(0.5)).sin()
            }
        }
    }

    /// Slit amplitude `sinc(·)`; changes sign at every dark point.
    pub fn amplitude(&self, form: ArgumentForm, theta: T) -> T {
        sinc_unchecked(self.argument(form, theta))
    }
}

/// `sinc²(radius_scale · pR · sin θ)`.
pub fn fraunhofer_single<T: Real>(cfg: &ClassicalConfig<T>, theta: T) -> Result<T> {
    fraunhofer_single_with(cfg, ArgumentForm::SinTheta, theta)
}

pub fn fraunhofer_single_with<T: Real>(
    cfg: &ClassicalConfig<T>,
    form: ArgumentForm,
    theta: T,
) -> Result<T> {
    ensure_finite("theta", theta)?;
    let a = cfg.amplitude(form, theta);
    Ok(a * a)
}

/// Two intersecting beams on the slit, `|A₋ + e^{iφ} A₊|²`, with each
/// single-beam amplitude evaluated at the beam's own scattering angle
/// `θ ∓ α/2` (in the momentum-transfer form, `θ/2 → θ/2 ∓ α/4`).
pub fn fraunhofer_two_beam<T: Real>(cfg: &ClassicalConfig<T>, alpha: T, phi: T, theta: T) -> Result<T> {
    fraunhofer_two_beam_with(cfg, ArgumentForm::MomentumTransfer, alpha, phi, theta)
}

pub fn fraunhofer_two_beam_with<T: Real>(
    cfg: &ClassicalConfig<T>,
    form: ArgumentForm,
    alpha: T,
    phi: T,
    theta: T,
) -> Result<T> {
    ensure_finite("alpha", alpha)?;
    ensure_finite("phi", phi)?;
    ensure_finite("theta", theta)?;
    if alpha < T::zero() {
        return Err(Error::Input(format!("alpha must be non-negative, got {alpha}")));
    }
    let half_alpha = alpha * T::lit(0.5);
    let a_minus = cfg.amplitude(form, theta - half_alpha);
    let a_plus = cfg.amplitude(form, theta + half_alpha);
    Ok(a_minus * a_minus + T::lit(2.0) * a_minus * a_plus * phi.cos() + a_plus * a_plus)
}

/// Samples [`fraunhofer_single`] over `grid`.
pub fn pattern_classical<T: Real>(
    cfg: &ClassicalConfig<T>,
    grid: &AngularGrid<T>,
    normalization: Normalization,
) -> Result<Pattern<T>> {
    let density = grid
        .thetas()
        .iter()
        .map(|&t| fraunhofer_single(cfg, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Pattern::build(grid.thetas().to_vec(), density, normalization)?
        .with_metadata("model", "classical_single")
        .with_metadata("p_r", cfg.p_r())
        .with_metadata("radius_scale", cfg.radius_scale()))
}

/// Samples [`fraunhofer_two_beam`] over `grid`.
pub fn pattern_classical_two_beam<T: Real>(
    cfg: &ClassicalConfig<T>,
    alpha: T,
    phi: T,
    grid: &AngularGrid<T>,
    normalization: Normalization,
) -> Result<Pattern<T>> {
    let density = grid
        .thetas()
        .iter()
        .map(|&t| fraunhofer_two_beam(cfg, alpha, phi, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Pattern::build(grid.thetas().to_vec(), density, normalization)?
        .with_metadata("model", "classical_two_beam")
        .with_metadata("p_r", cfg.p_r())
        .with_metadata("radius_scale", cfg.radius_scale())
        .with_metadata("alpha", alpha)
        .with_metadata("phi", phi))
}
