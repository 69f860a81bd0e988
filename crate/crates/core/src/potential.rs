//! Cylindrical-barrier wire model and incident-beam kinematics.
//!
//! Internally momenta are wavenumbers in inverse meters (`ħ = c = 1`), so a
//! momentum times a radius is the dimensionless `pR` every distribution
//! depends on. Energies are carried in eV; `ħc` converts wavenumber to `pc`.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_finite, Error, Result};
use crate::numerics::{hyp0f1_reg2, Real};

/// `ħc` in eV·m (CODATA 2018, exact to the quoted digits).
pub const HBAR_C_EV_M: f64 = 1.973_269_804e-7;
/// Electron rest energy in eV (CODATA 2018).
pub const ELECTRON_MASS_EV: f64 = 510_998.95;

/// Barrier of height `H` for `0 ≤ s ≤ R` around the wire axis, zero outside.
///
/// `H` only sets the overall scale of the amplitude; no normalized output
/// depends on it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WirePotential<T> {
    radius_m: T,
    height_ev: T,
}

impl<T: Real> WirePotential<T> {
    pub fn new(radius_m: T, height_ev: T) -> Result<Self> {
        ensure_finite("radius", radius_m)?;
        ensure_finite("height", height_ev)?;
        if radius_m <= T::zero() {
            return Err(Error::Input(format!("wire radius must be positive, got {radius_m} m")));
        }
        Ok(Self { radius_m, height_ev })
    }

    /// Wire of the given diameter in micrometers with unit barrier height.
    pub fn from_diameter_um(diameter_um: T) -> Result<Self> {
        Self::new(diameter_um * T::lit(0.5e-6), T::one())
    }

    pub fn radius_m(&self) -> T {
        self.radius_m
    }

    pub fn diameter_um(&self) -> T {
        self.radius_m * T::lit(2e6)
    }

    pub fn height_ev(&self) -> T {
        self.height_ev
    }

    /// Value of the potential at distance `s` from the axis.
    pub fn value_at(&self, s: T) -> T {
        if s >= T::zero() && s <= self.radius_m {
            self.height_ev
        } else {
            T::zero()
        }
    }
}

/// Incident particle kinematics.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BeamParams<T> {
    /// Wavenumber `p = 2π/λ` in 1/m.
    momentum: T,
    mass_ev: T,
}

impl<T: Real> BeamParams<T> {
    pub fn from_momentum(momentum_per_m: T, mass_ev: T) -> Result<Self> {
        ensure_finite("momentum", momentum_per_m)?;
        ensure_finite("mass", mass_ev)?;
        if momentum_per_m <= T::zero() {
            return Err(Error::Input(format!("momentum must be positive, got {momentum_per_m}")));
        }
        if mass_ev < T::zero() {
            return Err(Error::Input(format!("mass must be non-negative, got {mass_ev} eV")));
        }
        Ok(Self { momentum: momentum_per_m, mass_ev })
    }

    pub fn from_wavelength_m(wavelength_m: T, mass_ev: T) -> Result<Self> {
        ensure_finite("wavelength", wavelength_m)?;
        if wavelength_m <= T::zero() {
            return Err(Error::Input(format!("wavelength must be positive, got {wavelength_m} m")));
        }
        Self::from_momentum(T::TAU() / wavelength_m, mass_ev)
    }

    pub fn from_wavelength_nm(wavelength_nm: T, mass_ev: T) -> Result<Self> {
        Self::from_wavelength_m(wavelength_nm * T::lit(1e-9), mass_ev)
    }

    /// Electron of the given de Broglie wavelength in nanometers.
    pub fn electron_nm(wavelength_nm: T) -> Result<Self> {
        Self::from_wavelength_nm(wavelength_nm, T::lit(ELECTRON_MASS_EV))
    }

    /// Wavenumber in 1/m.
    pub fn momentum(&self) -> T {
        self.momentum
    }

    pub fn wavelength_m(&self) -> T {
        T::TAU() / self.momentum
    }

    pub fn wavelength_nm(&self) -> T {
        self.wavelength_m() * T::lit(1e9)
    }

    /// Rest energy `mc²` in eV.
    pub fn mass_ev(&self) -> T {
        self.mass_ev
    }

    /// `pc` in eV.
    pub fn pc_ev(&self) -> T {
        self.momentum * T::lit(HBAR_C_EV_M)
    }

    /// Total energy `E = √((pc)² + (mc²)²)` in eV.
    pub fn energy_ev(&self) -> T {
        self.pc_ev().hypot(self.mass_ev)
    }

    /// Dimensionless `pc / mc²`; infinite for a massless particle.
    pub fn relativity_ratio(&self) -> T {
        self.pc_ev() / self.mass_ev
    }

    /// Dimensionless product `p·R` for the given wire.
    pub fn p_r(&self, wire: &WirePotential<T>) -> T {
        self.momentum * wire.radius_m()
    }
}

/// Elastic momentum transfer `q = 2p|sin(θ/2)|`.
pub fn momentum_transfer_single<T: Real>(p: T, theta: T) -> Result<T> {
    ensure_finite("p", p)?;
    ensure_finite("theta", theta)?;
    if p <= T::zero() {
        return Err(Error::Input(format!("momentum must be positive, got {p}")));
    }
    Ok(T::lit(2.0) * p * (theta * T::lit(0.5)).sin().abs())
}

/// Normalized disk transform `₀F₁[2, -¼(qR)²] = 2J₁(qR)/(qR)` of the barrier.
pub fn form_factor<T: Real>(wire: &WirePotential<T>, q: T) -> Result<T> {
    ensure_finite("q", q)?;
    if q < T::zero() {
        return Err(Error::Input(format!("momentum transfer must be non-negative, got {q}")));
    }
    form_factor_qr(q * wire.radius_m())
}

/// Form factor as a function of the dimensionless `qR`. Even in `qR`.
pub fn form_factor_qr<T: Real>(qr: T) -> Result<T> {
    hyp0f1_reg2(-(qr * qr) * T::lit(0.25))
}
