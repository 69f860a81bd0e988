//! Lowest-order electron scattering from the wire potential.
//!
//! The amplitude factorizes into the spinor element `ū γ⁰ u` and the disk
//! form factor of the barrier. Energy conservation and the conserved
//! momentum component along the wire are built into the kinematics: the
//! scattered momentum has the incident magnitude and lies in the plane
//! perpendicular to the wire, so everything depends on θ through
//! `q = 2p|sin(θ/2)|` and the spinor element alone.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::numerics::Real;
use crate::pattern::{AngularGrid, Normalization, Pattern};
use crate::potential::{form_factor, form_factor_qr, momentum_transfer_single, BeamParams, WirePotential};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Spin {
    Up,
    Down,
}

/// Initial and final spin projections of the electron.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpinChannel {
    pub initial: Spin,
    pub final_: Spin,
}

impl SpinChannel {
    /// Spin-up in, spin-up out.
    pub const NO_FLIP: Self = Self { initial: Spin::Up, final_: Spin::Up };
    /// Spin-up in, spin-down out.
    pub const FLIP: Self = Self { initial: Spin::Up, final_: Spin::Down };

    pub fn new(initial: Spin, final_: Spin) -> Self {
        Self { initial, final_ }
    }

    pub fn is_flip(&self) -> bool {
        self.initial != self.final_
    }
}

/// Which distribution to sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScatterMode {
    /// Exact spinor element for a single spin channel.
    Full(SpinChannel),
    /// Exact spinor elements, summed over final spins for a spin-up beam.
    FullSummed,
    /// `pc ≪ mc²` limit: spin preserved, spinor element constant.
    LowEnergy,
}

/// Spinor matrix element `ū γ⁰ u` in eV.
///
/// Spin flip: `(pc)² sin θ / (E + mc²)`.
/// No flip: `((E + mc²)² + (pc)² cos θ) / (E + mc²)`.
///
/// Both channels are used exactly in this form, including the `sin θ`
/// of the flip element (textbook flip amplitudes go as `sin(θ/2)`). The
/// flip element is taken to be the same for either initial spin.
pub fn spinor_element<T: Real>(beam: &BeamParams<T>, theta: T, channel: SpinChannel) -> T {
    let pc = beam.pc_ev();
    let e_plus_m = beam.energy_ev() + beam.mass_ev();
    if channel.is_flip() {
        pc * pc * theta.sin() / e_plus_m
    } else {
        (e_plus_m * e_plus_m + pc * pc * theta.cos()) / e_plus_m
    }
}

/// `|ū γ⁰ u|² · F(q)²` with the overall constant set to one.
pub fn dsigma_dtheta_full<T: Real>(
    beam: &BeamParams<T>,
    wire: &WirePotential<T>,
    theta: T,
    channel: SpinChannel,
) -> Result<T> {
    ensure_finite("theta", theta)?;
    let q = momentum_transfer_single(beam.momentum(), theta)?;
    let f = form_factor(wire, q)?;
    let s = spinor_element(beam, theta, channel);
    Ok(s * s * f * f)
}

/// Full-energy density for a spin-up beam summed over both final spins.
pub fn dsigma_dtheta_summed<T: Real>(
    beam: &BeamParams<T>,
    wire: &WirePotential<T>,
    theta: T,
) -> Result<T> {
    Ok(dsigma_dtheta_full(beam, wire, theta, SpinChannel::NO_FLIP)?
        + dsigma_dtheta_full(beam, wire, theta, SpinChannel::FLIP)?)
}

/// Low-energy density `₀F₁[2, -(pR)² sin²(θ/2)]²` with unit constant.
pub fn dsigma_dtheta_low_e<T: Real>(p_r: T, theta: T) -> Result<T> {
    let f = low_e_amplitude(p_r, theta)?;
    Ok(f * f)
}

/// Form factor `F(θ)` whose square is [`dsigma_dtheta_low_e`]; changes
/// sign at every dark point.
pub fn low_e_amplitude<T: Real>(p_r: T, theta: T) -> Result<T> {
    check_p_r(p_r)?;
    ensure_finite("theta", theta)?;
    form_factor_qr(T::lit(2.0) * p_r * (theta * T::lit(0.5)).sin())
}

pub(crate) fn check_p_r<T: Real>(p_r: T) -> Result<T> {
    ensure_finite("pR", p_r)?;
    if p_r <= T::zero() {
        return Err(Error::Input(format!("pR must be positive, got {p_r}")));
    }
    Ok(p_r)
}

/// Samples a single-beam distribution over `grid`.
pub fn pattern_single<T: Real>(
    beam: &BeamParams<T>,
    wire: &WirePotential<T>,
    grid: &AngularGrid<T>,
    mode: ScatterMode,
    normalization: Normalization,
) -> Result<Pattern<T>> {
    let p_r = beam.p_r(wire);
    let density = grid
        .thetas()
        .iter()
        .map(|&theta| match mode {
            ScatterMode::Full(channel) => dsigma_dtheta_full(beam, wire, theta, channel),
            ScatterMode::FullSummed => dsigma_dtheta_summed(beam, wire, theta),
            ScatterMode::LowEnergy => dsigma_dtheta_low_e(p_r, theta),
        })
        .collect::<Result<Vec<_>>>()?;
    let mode_label = match mode {
        ScatterMode::Full(c) if c.is_flip() => "full_flip",
        ScatterMode::Full(_) => "full_no_flip",
        ScatterMode::FullSummed => "full_summed",
        ScatterMode::LowEnergy => "low_energy",
    };
    Ok(Pattern::build(grid.thetas().to_vec(), density, normalization)?
        .with_metadata("model", "quantum_single")
        .with_metadata("mode", mode_label)
        .with_metadata("wavelength_nm", beam.wavelength_nm())
        .with_metadata("radius_m", wire.radius_m())
        .with_metadata("p_r", p_r))
}
