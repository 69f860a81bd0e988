//! Two intersecting coherent beams diffracting from the wire.
//!
//! Beam `±` arrives at `∓α/2` from the `z` axis, so a particle detected at
//! angle `θ` has been scattered through `θ ± α/2` relative to beam `±` and
//! the momentum transfers are `q± = 2p|sin(θ/2 ± α/4)|`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::electron::{check_p_r, spinor_element, SpinChannel};
use crate::error::{ensure_finite, Error, Result};
use crate::numerics::{Complexv, Real};
use crate::pattern::{linspace, trapezoid, validate_axis, AngularGrid, Normalization, Pattern};
use crate::potential::{form_factor, form_factor_qr, BeamParams, WirePotential};

/// Beam intersection angle `α` and relative phase `Φ`, both in radians.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoBeamConfig<T> {
    pub alpha: T,
    pub phi: T,
}

impl<T: Real> TwoBeamConfig<T> {
    pub fn new(alpha: T, phi: T) -> Result<Self> {
        ensure_finite("alpha", alpha)?;
        ensure_finite("phi", phi)?;
        if alpha < T::zero() {
            return Err(Error::Input(format!("alpha must be non-negative, got {alpha}")));
        }
        Ok(Self { alpha, phi })
    }

    fn validate(&self) -> Result<()> {
        Self::new(self.alpha, self.phi).map(|_| ())
    }
}

/// Sign of the relative phase factor `e^{±iΦ}` applied to the `+` beam.
///
/// The electron density uses `e^{+iΦ}`, the photon superposition
/// `e^{-iΦ}`. For real amplitudes the two give the same density.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PhaseSign {
    Plus,
    Minus,
}

/// `(q₋, q₊) = (2p|sin(θ/2 - α/4)|, 2p|sin(θ/2 + α/4)|)`.
pub fn momentum_transfer_pair<T: Real>(p: T, theta: T, alpha: T) -> Result<(T, T)> {
    ensure_finite("p", p)?;
    ensure_finite("theta", theta)?;
    ensure_finite("alpha", alpha)?;
    if p <= T::zero() {
        return Err(Error::Input(format!("momentum must be positive, got {p}")));
    }
    let two = T::lit(2.0);
    let half = theta * T::lit(0.5);
    let quarter_alpha = alpha * T::lit(0.25);
    Ok((
        two * p * (half - quarter_alpha).sin().abs(),
        two * p * (half + quarter_alpha).sin().abs(),
    ))
}

/// `(F₋, F₊)` at the two momentum transfers, in the dimensionless form.
fn form_factor_pair<T: Real>(p_r: T, alpha: T, theta: T) -> Result<(T, T)> {
    let (q_minus, q_plus) = momentum_transfer_pair(p_r, theta, alpha)?;
    Ok((form_factor_qr(q_minus)?, form_factor_qr(q_plus)?))
}

/// `F₋² + 2F₋F₊ cos Φ + F₊²` with unit constant.
pub fn dsigma_dtheta_twobeam_low_e<T: Real>(p_r: T, cfg: &TwoBeamConfig<T>, theta: T) -> Result<T> {
    check_p_r(p_r)?;
    cfg.validate()?;
    let (f_minus, f_plus) = form_factor_pair(p_r, cfg.alpha, theta)?;
    Ok(interference(f_minus, f_plus, cfg.phi))
}

/// `a₋² + 2a₋a₊ cos Φ + a₊²` for real amplitudes, regrouped into a sum of
/// non-negative terms so rounding can never push it below zero.
#[inline]
fn interference<T: Real>(a_minus: T, a_plus: T, phi: T) -> T {
    let two = T::lit(2.0);
    let product = a_minus * a_plus;
    let c = phi.cos();
    if product >= T::zero() {
        let d = a_minus - a_plus;
        d * d + two * product * (T::one() + c)
    } else {
        let s = a_minus + a_plus;
        s * s - two * product * (T::one() - c)
    }
}

/// `|S₋F₋ + e^{iΦ} S₊F₊|²` with the spinor elements `S±` evaluated at each
/// beam's own scattering angle `θ ± α/2`. Both beams share `channel`.
pub fn dsigma_dtheta_twobeam_full<T: Real>(
    beam: &BeamParams<T>,
    wire: &WirePotential<T>,
    cfg: &TwoBeamConfig<T>,
    theta: T,
    channel: SpinChannel,
) -> Result<T> {
    cfg.validate()?;
    let (q_minus, q_plus) = momentum_transfer_pair(beam.momentum(), theta, cfg.alpha)?;
    let half_alpha = cfg.alpha * T::lit(0.5);
    let a_minus = spinor_element(beam, theta - half_alpha, channel) * form_factor(wire, q_minus)?;
    let a_plus = spinor_element(beam, theta + half_alpha, channel) * form_factor(wire, q_plus)?;
    Ok(interference(a_minus, a_plus, cfg.phi))
}

/// `|a₋ + a₊ e^{-iφ}|²`.
pub fn superpose_amplitudes<T: Real>(a_minus: Complexv<T>, a_plus: Complexv<T>, phi: T) -> T {
    superpose_amplitudes_with(a_minus, a_plus, phi, PhaseSign::Minus)
}

/// `|a₋ + a₊ e^{±iφ}|²` with an explicit sign convention.
pub fn superpose_amplitudes_with<T: Real>(
    a_minus: Complexv<T>,
    a_plus: Complexv<T>,
    phi: T,
    sign: PhaseSign,
) -> T {
    let angle = match sign {
        PhaseSign::Plus => phi,
        PhaseSign::Minus => -phi,
    };
    (a_minus + a_plus * Complex::from_polar(T::one(), angle)).norm_sqr()
}

/// Samples [`dsigma_dtheta_twobeam_low_e`] over `grid`.
pub fn pattern_two_beam<T: Real>(
    p_r: T,
    cfg: &TwoBeamConfig<T>,
    grid: &AngularGrid<T>,
    normalization: Normalization,
) -> Result<Pattern<T>> {
    let density = grid
        .thetas()
        .iter()
        .map(|&t| dsigma_dtheta_twobeam_low_e(p_r, cfg, t))
        .collect::<Result<Vec<_>>>()?;
    Ok(Pattern::build(grid.thetas().to_vec(), density, normalization)?
        .with_metadata("model", "quantum_two_beam")
        .with_metadata("mode", "low_energy")
        .with_metadata("p_r", p_r)
        .with_metadata("alpha", cfg.alpha)
        .with_metadata("phi", cfg.phi))
}

/// Samples [`dsigma_dtheta_twobeam_full`] over `grid`.
pub fn pattern_two_beam_full<T: Real>(
    beam: &BeamParams<T>,
    wire: &WirePotential<T>,
    cfg: &TwoBeamConfig<T>,
    grid: &AngularGrid<T>,
    channel: SpinChannel,
    normalization: Normalization,
) -> Result<Pattern<T>> {
    let density = grid
        .thetas()
        .iter()
        .map(|&t| dsigma_dtheta_twobeam_full(beam, wire, cfg, t, channel))
        .collect::<Result<Vec<_>>>()?;
    Ok(Pattern::build(grid.thetas().to_vec(), density, normalization)?
        .with_metadata("model", "quantum_two_beam")
        .with_metadata("mode", if channel.is_flip() { "full_flip" } else { "full_no_flip" })
        .with_metadata("p_r", beam.p_r(wire))
        .with_metadata("alpha", cfg.alpha)
        .with_metadata("phi", cfg.phi))
}

/// Low-energy two-beam density over a `(Φ, θ)` grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanResult<T> {
    pub phis: Vec<T>,
    pub thetas: Vec<T>,
    /// `density[i][j]` at `(phis[i], thetas[j])`.
    pub density: Vec<Vec<T>>,
}

impl<T: Real> ScanResult<T> {
    /// Trapezoid integral over θ of the row at `phis[i]`.
    pub fn row_mass(&self, i: usize) -> T {
        trapezoid(&self.thetas, &self.density[i])
    }

    pub fn row_masses(&self) -> Vec<T> {
        (0..self.phis.len()).map(|i| self.row_mass(i)).collect()
    }
}

/// Evenly spaced phase grid from `min` to `max` inclusive.
pub fn phi_grid<T: Real>(min: T, max: T, points: usize) -> Result<Vec<T>> {
    linspace(min, max, points)
}

/// Evaluates the two-beam density for every `(Φ, θ)` pair.
pub fn phi_theta_scan<T: Real>(
    p_r: T,
    alpha: T,
    phis: &[T],
    thetas: &AngularGrid<T>,
) -> Result<ScanResult<T>> {
    check_p_r(p_r)?;
    validate_axis("phi", phis)?;
    TwoBeamConfig::new(alpha, T::zero())?;
    // The form factors do not depend on Φ; evaluate them once per θ.
    let pairs = thetas
        .thetas()
        .iter()
        .map(|&t| form_factor_pair(p_r, alpha, t))
        .collect::<Result<Vec<_>>>()?;
    let density = phis
        .iter()
        .map(|&phi| pairs.iter().map(|&(fm, fp)| interference(fm, fp, phi)).collect())
        .collect();
    Ok(ScanResult { phis: phis.to_vec(), thetas: thetas.thetas().to_vec(), density })
}
