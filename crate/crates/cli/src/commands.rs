use std::collections::BTreeMap;

use anyhow::Result;
use serde_json::{json, Value};
use wirediff_core::analysis::{compare_curves, first_dark_points, match_areas, overestimation_factor, ZeroMethod};
use wirediff_core::classical::{pattern_classical, pattern_classical_two_beam};
use wirediff_core::electron::pattern_single;
use wirediff_core::numerics::j1_zero;
use wirediff_core::twobeam::{pattern_two_beam, pattern_two_beam_full, phi_grid, phi_theta_scan};
use wirediff_core::{
    AngularGrid64, BeamParams64, ClassicalConfig64, Normalization, Pattern64, TwoBeamConfig64,
    WirePotential64,
};

use crate::config::{CommandKind, ModeArg, RunConfig};
use crate::output::Column;

/// Result of one command, ready to be rendered as CSV or JSON.
pub struct Artifact {
    pub columns: Vec<Column>,
    pub data: Value,
    pub provenance: BTreeMap<String, String>,
}

struct Setup {
    beam: BeamParams64,
    wire: WirePotential64,
    grid: AngularGrid64,
}

impl Setup {
    fn new(cfg: &RunConfig) -> Result<Self> {
        Ok(Self {
            beam: BeamParams64::from_wavelength_nm(cfg.wavelength_nm, cfg.particle_mass_ev)?,
            wire: WirePotential64::from_diameter_um(cfg.diameter_um)?,
            grid: AngularGrid64::uniform(cfg.theta_min, cfg.theta_max, cfg.theta_points)?,
        })
    }

    fn p_r(&self) -> f64 {
        self.beam.p_r(&self.wire)
    }
}

pub fn run(cfg: &RunConfig) -> Result<Artifact> {
    let setup = Setup::new(cfg)?;
    match cfg.command {
        CommandKind::Single => single(cfg, &setup),
        CommandKind::TwoBeam => two_beam(cfg, &setup),
        CommandKind::Scan => scan(cfg, &setup),
        CommandKind::Compare => compare(cfg, &setup),
        CommandKind::Zeros => zeros(cfg, &setup),
    }
}

/// Applies the configured normalization; `area-matched` matches the
/// quantum curve to the area of the peak-normalized classical comparator.
fn normalize(quantum_raw: Pattern64, classical_raw: impl FnOnce() -> Result<Pattern64>, norm: Normalization) -> Result<Pattern64> {
    Ok(match norm {
        Normalization::AreaMatched => {
            let reference = classical_raw()?.normalized(Normalization::PeakOne)?;
            match_areas(&reference, &quantum_raw)?
        }
        other => quantum_raw.normalized(other)?,
    })
}

fn pattern_artifact(p: Pattern64) -> Artifact {
    let data = json!({
        "normalization": p.normalization(),
        "theta_rad": p.thetas(),
        "density": p.density(),
    });
    Artifact {
        columns: vec![
            Column::float("theta_rad", p.thetas().to_vec()),
            Column::float("density", p.density().to_vec()),
        ],
        data,
        provenance: p.metadata.clone(),
    }
}

fn single(cfg: &RunConfig, s: &Setup) -> Result<Artifact> {
    let raw = pattern_single(&s.beam, &s.wire, &s.grid, cfg.scatter_mode(), Normalization::Raw)?;
    let classical = || Ok(pattern_classical(&ClassicalConfig64::new(s.p_r())?, &s.grid, Normalization::Raw)?);
    Ok(pattern_artifact(normalize(raw, classical, cfg.normalization.into())?))
}

fn two_beam(cfg: &RunConfig, s: &Setup) -> Result<Artifact> {
    let beams = TwoBeamConfig64::new(cfg.alpha.unwrap_or_default(), cfg.phi.unwrap_or_default())?;
    let raw = match cfg.mode {
        Some(ModeArg::Full) => pattern_two_beam_full(
            &s.beam,
            &s.wire,
            &beams,
            &s.grid,
            cfg.spin_channel(),
            Normalization::Raw,
        )?,
        _ => pattern_two_beam(s.p_r(), &beams, &s.grid, Normalization::Raw)?,
    };
    let classical = || {
        Ok(pattern_classical_two_beam(
            &ClassicalConfig64::new(s.p_r())?,
            beams.alpha,
            beams.phi,
            &s.grid,
            Normalization::Raw,
        )?)
    };
    Ok(pattern_artifact(normalize(raw, classical, cfg.normalization.into())?))
}

fn scan(cfg: &RunConfig, s: &Setup) -> Result<Artifact> {
    let phis = phi_grid(
        cfg.phi_min.unwrap_or(0.0),
        cfg.phi_max.unwrap_or(std::f64::consts::TAU),
        cfg.phi_points.unwrap_or(81),
    )?;
    let alpha = cfg.alpha.unwrap_or_default();
    let mut result = phi_theta_scan(s.p_r(), alpha, &phis, &s.grid)?;
    if Normalization::from(cfg.normalization) == Normalization::PeakOne {
        let peak = result.density.iter().flatten().copied().fold(0.0, f64::max);
        if peak > 0.0 {
            for row in &mut result.density {
                row.iter_mut().for_each(|d| *d /= peak);
            }
        }
    }
    let n_theta = result.thetas.len();
    let mut phi_col = Vec::with_capacity(phis.len() * n_theta);
    let mut theta_col = Vec::with_capacity(phis.len() * n_theta);
    let mut density_col = Vec::with_capacity(phis.len() * n_theta);
    for (phi, row) in result.phis.iter().zip(&result.density) {
        for (theta, d) in result.thetas.iter().zip(row) {
            phi_col.push(*phi);
            theta_col.push(*theta);
            density_col.push(*d);
        }
    }
    let data = json!({
        "phi_rad": result.phis,
        "theta_rad": result.thetas,
        "density": result.density,
        "row_mass": result.row_masses(),
    });
    let mut provenance = BTreeMap::new();
    provenance.insert("model".into(), "quantum_two_beam_scan".into());
    provenance.insert("p_r".into(), s.p_r().to_string());
    Ok(Artifact {
        columns: vec![
            Column::float("phi_rad", phi_col),
            Column::float("theta_rad", theta_col),
            Column::float("density", density_col),
        ],
        data,
        provenance,
    })
}

fn compare(cfg: &RunConfig, s: &Setup) -> Result<Artifact> {
    let p_r = s.p_r();
    let scale = cfg.radius_scale.unwrap_or(1.0);
    let classical_cfg = ClassicalConfig64::with_radius_scale(p_r, scale)?;
    let (quantum, classical) = if cfg.two_beam == Some(true) {
        let beams = TwoBeamConfig64::new(cfg.alpha.unwrap_or_default(), cfg.phi.unwrap_or_default())?;
        (
            pattern_two_beam(p_r, &beams, &s.grid, Normalization::Raw)?,
            pattern_classical_two_beam(&classical_cfg, beams.alpha, beams.phi, &s.grid, Normalization::Raw)?,
        )
    } else {
        (
            pattern_single(&s.beam, &s.wire, &s.grid, wirediff_core::electron::ScatterMode::LowEnergy, Normalization::Raw)?,
            pattern_classical(&classical_cfg, &s.grid, Normalization::Raw)?,
        )
    };
    let (quantum, classical) = match Normalization::from(cfg.normalization) {
        Normalization::AreaMatched => {
            let q = quantum.normalized(Normalization::PeakOne)?;
            let c = match_areas(&q, &classical)?;
            (q, c)
        }
        other => (quantum.normalized(other)?, classical.normalized(other)?),
    };
    let cmp = compare_curves(&quantum, &classical)?;
    let mut data = json!({
        "max_abs_diff": cmp.max_abs_diff,
        "l2_diff": cmp.l2_diff,
        "first_zero_offset_rad": cmp.first_zero_offset_rad,
        "first_zero_quantum_rad": cmp.first_zero_a_rad,
        "first_zero_classical_rad": cmp.first_zero_b_rad,
        "area_quantum": quantum.area(),
        "area_classical": classical.area(),
    });
    if cfg.two_beam != Some(true) {
        let q = first_dark_points(p_r, ZeroMethod::QuantumLowE, 1)?.zeros[0];
        let c = first_dark_points(p_r * scale, ZeroMethod::Classical, 1)?.zeros[0];
        data["analytic_first_zero_quantum_rad"] = json!(q);
        data["analytic_first_zero_classical_rad"] = json!(c);
        data["analytic_first_zero_offset_rad"] = json!(q - c);
    }
    let mut provenance = BTreeMap::new();
    provenance.insert("p_r".into(), p_r.to_string());
    Ok(Artifact {
        columns: vec![
            Column::float("theta_rad", quantum.thetas().to_vec()),
            Column::float("quantum", quantum.density().to_vec()),
            Column::float("classical", classical.density().to_vec()),
        ],
        data,
        provenance,
    })
}

fn zeros(cfg: &RunConfig, s: &Setup) -> Result<Artifact> {
    let p_r = s.p_r();
    let n = cfg.n.unwrap_or(1);
    let quantum = first_dark_points(p_r, ZeroMethod::QuantumLowE, n)?;
    let classical = first_dark_points(p_r, ZeroMethod::Classical, n)?;
    let factor = overestimation_factor(p_r)?;
    let asymptotic = j1_zero::<f64>(1)? / std::f64::consts::PI;
    let data = json!({
        "p_r": p_r,
        "quantum_zeros_rad": quantum.zeros,
        "classical_zeros_rad": classical.zeros,
        "overestimation_factor": factor,
        "asymptotic_factor": asymptotic,
    });
    let mut provenance = BTreeMap::new();
    provenance.insert("p_r".into(), p_r.to_string());
    Ok(Artifact {
        columns: vec![
            Column::index("k", (1..=n).collect()),
            Column::float("quantum_rad", quantum.zeros),
            Column::float("classical_rad", classical.zeros),
        ],
        data,
        provenance,
    })
}
