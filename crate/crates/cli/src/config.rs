use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use wirediff_core::electron::{ScatterMode, SpinChannel};
use wirediff_core::potential::ELECTRON_MASS_EV;
use wirediff_core::{Normalization, REFERENCE_ALPHA, REFERENCE_DIAMETER_UM, REFERENCE_WAVELENGTH_NM};

/// Quantum and classical wire-diffraction distributions.
#[derive(Debug, Parser)]
#[command(name = "wirediff", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Single-beam angular distribution.
    Single {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        physics: PhysicsArgs,
    },
    /// Two crossing beams diffracting from the wire.
    TwoBeam {
        #[command(flatten)]
        common: CommonArgs,
        #[command(flatten)]
        physics: PhysicsArgs,
        #[command(flatten)]
        beams: BeamPairArgs,
    },
    /// Two-beam density over a (phi, theta) grid.
    Scan {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long, default_value_t = REFERENCE_ALPHA)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        phi_min: f64,
        #[arg(long, default_value_t = std::f64::consts::TAU)]
        phi_max: f64,
        #[arg(long, default_value_t = 81)]
        phi_points: usize,
    },
    /// Quantum versus classical curve comparison.
    Compare {
        #[command(flatten)]
        common: CommonArgs,
        /// Multiplier on the wire radius seen by the classical curve.
        #[arg(long, default_value_t = 1.0)]
        radius_scale: f64,
        /// Compare the two-beam curves instead of the single-beam ones.
        #[arg(long)]
        two_beam: bool,
        #[command(flatten)]
        beams: BeamPairArgs,
    },
    /// Dark-fringe angles and the radius overestimation factor.
    Zeros {
        #[command(flatten)]
        common: CommonArgs,
        /// Number of dark points to report.
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, default_value_t = REFERENCE_WAVELENGTH_NM)]
    pub wavelength_nm: f64,
    #[arg(long, default_value_t = REFERENCE_DIAMETER_UM)]
    pub diameter_um: f64,
    /// Particle rest energy in eV.
    #[arg(long, default_value_t = ELECTRON_MASS_EV)]
    pub particle_mass_ev: f64,
    #[arg(long, default_value_t = -0.15, allow_hyphen_values = true)]
    pub theta_min: f64,
    #[arg(long, default_value_t = 0.15, allow_hyphen_values = true)]
    pub theta_max: f64,
    #[arg(long, default_value_t = 2001)]
    pub theta_points: usize,
    /// Defaults to peak-one for distributions, area-matched for compare.
    #[arg(long, value_enum)]
    pub normalization: Option<NormArg>,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Defaults to csv for distributions, json for compare and zeros.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Record the wall-clock time in the JSON metadata.
    #[arg(long)]
    pub timestamp: bool,
}

#[derive(Debug, Clone, Args)]
pub struct PhysicsArgs {
    #[arg(long, value_enum, default_value_t = ModeArg::LowE)]
    pub mode: ModeArg,
    /// Spin channel for the full-energy mode.
    #[arg(long, value_enum, default_value_t = SpinArg::NoFlip)]
    pub spin: SpinArg,
}

#[derive(Debug, Clone, Args)]
pub struct BeamPairArgs {
    #[arg(long, default_value_t = REFERENCE_ALPHA)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub phi: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NormArg {
    Raw,
    PeakOne,
    UnitArea,
    AreaMatched,
}

impl From<NormArg> for Normalization {
    fn from(n: NormArg) -> Self {
        match n {
            NormArg::Raw => Normalization::Raw,
            NormArg::PeakOne => Normalization::PeakOne,
            NormArg::UnitArea => Normalization::UnitArea,
            NormArg::AreaMatched => Normalization::AreaMatched,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeArg {
    LowE,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpinArg {
    NoFlip,
    Flip,
    /// Sum over final spins (single beam only).
    Summed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CommandKind {
    Single,
    TwoBeam,
    Scan,
    Compare,
    Zeros,
}

/// Fully resolved configuration, echoed into every output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub command: CommandKind,
    pub wavelength_nm: f64,
    pub diameter_um: f64,
    pub particle_mass_ev: f64,
    pub theta_min: f64,
    pub theta_max: f64,
    pub theta_points: usize,
    pub normalization: NormArg,
    pub format: Format,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_path: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mode: Option<ModeArg>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spin: Option<SpinArg>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_max: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phi_points: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius_scale: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_beam: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip)]
    pub timestamp: bool,
}

/// Invalid configuration; maps to exit status 2.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

impl RunConfig {
    fn base(command: CommandKind, common: &CommonArgs, norm: NormArg, format: Format) -> Self {
        Self {
            command,
            wavelength_nm: common.wavelength_nm,
            diameter_um: common.diameter_um,
            particle_mass_ev: common.particle_mass_ev,
            theta_min: common.theta_min,
            theta_max: common.theta_max,
            theta_points: common.theta_points,
            normalization: common.normalization.unwrap_or(norm),
            format: common.format.unwrap_or(format),
            output_path: common.output.as_ref().map(|p| p.display().to_string()),
            mode: None,
            spin: None,
            alpha: None,
            phi: None,
            phi_min: None,
            phi_max: None,
            phi_points: None,
            radius_scale: None,
            two_beam: None,
            n: None,
            timestamp: common.timestamp,
        }
    }

    pub fn from_command(cmd: &Command) -> Result<Self, ConfigError> {
        let cfg = match cmd {
            Command::Single { common, physics } => Self {
                mode: Some(physics.mode),
                spin: Some(physics.spin),
                ..Self::base(CommandKind::Single, common, NormArg::PeakOne, Format::Csv)
            },
            Command::TwoBeam { common, physics, beams } => Self {
                mode: Some(physics.mode),
                spin: Some(physics.spin),
                alpha: Some(beams.alpha),
                phi: Some(beams.phi),
                ..Self::base(CommandKind::TwoBeam, common, NormArg::PeakOne, Format::Csv)
            },
            Command::Scan { common, alpha, phi_min, phi_max, phi_points } => Self {
                alpha: Some(*alpha),
                phi_min: Some(*phi_min),
                phi_max: Some(*phi_max),
                phi_points: Some(*phi_points),
                ..Self::base(CommandKind::Scan, common, NormArg::Raw, Format::Csv)
            },
            Command::Compare { common, radius_scale, two_beam, beams } => Self {
                radius_scale: Some(*radius_scale),
                two_beam: Some(*two_beam),
                alpha: two_beam.then_some(beams.alpha),
                phi: two_beam.then_some(beams.phi),
                ..Self::base(CommandKind::Compare, common, NormArg::AreaMatched, Format::Json)
            },
            Command::Zeros { common, n } => Self {
                n: Some(*n),
                ..Self::base(CommandKind::Zeros, common, NormArg::Raw, Format::Json)
            },
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), ConfigError> {
        let positive = |name: &str, v: f64| {
            if v.is_finite() && v > 0.0 {
                Ok(())
            } else {
                Err(ConfigError(format!("--{name} must be a positive number, got {v}")))
            }
        };
        let finite = |name: &str, v: f64| {
            if v.is_finite() {
                Ok(())
            } else {
                Err(ConfigError(format!("--{name} must be finite, got {v}")))
            }
        };
        positive("wavelength-nm", self.wavelength_nm)?;
        positive("diameter-um", self.diameter_um)?;
        positive("particle-mass-ev", self.particle_mass_ev)?;
        finite("theta-min", self.theta_min)?;
        finite("theta-max", self.theta_max)?;
        if self.theta_min >= self.theta_max {
            return Err(ConfigError(format!(
                "--theta-min ({}) must be below --theta-max ({})",
                self.theta_min, self.theta_max
            )));
        }
        if self.theta_points < 2 {
            return Err(ConfigError(format!(
                "--theta-points must be at least 2, got {}",
                self.theta_points
            )));
        }
        if let Some(alpha) = self.alpha {
            if !(alpha.is_finite() && alpha >= 0.0) {
                return Err(ConfigError(format!("--alpha must be non-negative, got {alpha}")));
            }
        }
        if let Some(phi) = self.phi {
            finite("phi", phi)?;
        }
        if let (Some(lo), Some(hi)) = (self.phi_min, self.phi_max) {
            finite("phi-min", lo)?;
            finite("phi-max", hi)?;
            if lo >= hi {
                return Err(ConfigError(format!("--phi-min ({lo}) must be below --phi-max ({hi})")));
            }
        }
        if let Some(points) = self.phi_points {
            if points < 2 {
                return Err(ConfigError(format!("--phi-points must be at least 2, got {points}")));
            }
        }
        if let Some(scale) = self.radius_scale {
            positive("radius-scale", scale)?;
        }
        if self.n == Some(0) {
            return Err(ConfigError("--n must be at least 1".into()));
        }
        if self.command == CommandKind::TwoBeam && self.spin == Some(SpinArg::Summed) {
            return Err(ConfigError("--spin summed is only available for `single`".into()));
        }
        if self.command == CommandKind::Scan
            && !matches!(self.normalization, NormArg::Raw | NormArg::PeakOne)
        {
            return Err(ConfigError("scan supports raw or peak-one normalization".into()));
        }
        if self.command == CommandKind::Zeros && self.normalization != NormArg::Raw {
            return Err(ConfigError("zeros takes no --normalization".into()));
        }
        Ok(())
    }

    pub fn scatter_mode(&self) -> ScatterMode {
        match (self.mode, self.spin) {
            (Some(ModeArg::Full), Some(SpinArg::Summed)) => ScatterMode::FullSummed,
            (Some(ModeArg::Full), Some(SpinArg::Flip)) => ScatterMode::Full(SpinChannel::FLIP),
            (Some(ModeArg::Full), _) => ScatterMode::Full(SpinChannel::NO_FLIP),
            _ => ScatterMode::LowEnergy,
        }
    }

    pub fn spin_channel(&self) -> SpinChannel {
        match self.spin {
            Some(SpinArg::Flip) => SpinChannel::FLIP,
            _ => SpinChannel::NO_FLIP,
        }
    }
}
