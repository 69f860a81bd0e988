mod common;

use common::*;
use proptest::prelude::*;
use wirediff_core::analysis::{compare_curves, first_dark_points, match_areas, overestimation_factor, ZeroMethod};
use wirediff_core::classical::{pattern_classical, ClassicalConfig};
use wirediff_core::electron::{
    dsigma_dtheta_full, dsigma_dtheta_low_e, pattern_single, ScatterMode, SpinChannel,
};
use wirediff_core::potential::form_factor_qr;
use wirediff_core::twobeam::{
    dsigma_dtheta_twobeam_full, dsigma_dtheta_twobeam_low_e, momentum_transfer_pair, phi_grid,
    phi_theta_scan, superpose_amplitudes, TwoBeamConfig,
};
use wirediff_core::{AngularGrid, BeamParams, Complexv, Normalization, WirePotential};

fn setup() -> (BeamParams<f64>, WirePotential<f64>) {
    (
        BeamParams::electron_nm(WAVELENGTH_NM).unwrap(),
        WirePotential::from_diameter_um(DIAMETER_UM).unwrap(),
    )
}

#[test]
fn low_e_first_zero_matches_oracle() {
    let p_r = reference_p_r();
    let theta = oracle_quantum_zero(p_r, 1);
    assert!((theta - 0.045_420).abs() < 1e-5);
    assert!(dsigma_dtheta_low_e(p_r, theta).unwrap() < 1e-28);
}

#[test]
fn nth_dark_points_follow_bessel_zeros() {
    let p_r = reference_p_r();
    let report = first_dark_points(p_r, ZeroMethod::QuantumLowE, 3).unwrap();
    for (k, &theta) in report.zeros.iter().enumerate() {
        let j = oracle_j1_zero(k + 1);
        assert!((2.0 * p_r * (theta / 2.0).sin() - j).abs() < 1e-10);
        assert!((theta - oracle_quantum_zero(p_r, k + 1)).abs() < 1e-11);
    }
    let classical = first_dark_points(p_r, ZeroMethod::Classical, 3).unwrap();
    for (k, &theta) in classical.zeros.iter().enumerate() {
        assert!((theta - oracle_classical_zero(p_r, k + 1)).abs() < 1e-11);
    }
}

#[test]
fn full_no_flip_reduces_to_low_energy() {
    let (beam, wire) = setup();
    let grid = AngularGrid::default();
    let full = pattern_single(&beam, &wire, &grid, ScatterMode::Full(SpinChannel::NO_FLIP), Normalization::PeakOne)
        .unwrap();
    let low = pattern_single(&beam, &wire, &grid, ScatterMode::LowEnergy, Normalization::PeakOne).unwrap();
    let max_abs = full
        .density()
        .iter()
        .zip(low.density())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    assert!(max_abs <= 1e-8, "{max_abs}");
}

#[test]
fn flip_channel_weight_is_negligible() {
    let (beam, wire) = setup();
    let grid = AngularGrid::default();
    let flip = pattern_single(&beam, &wire, &grid, ScatterMode::Full(SpinChannel::FLIP), Normalization::Raw).unwrap();
    let keep = pattern_single(&beam, &wire, &grid, ScatterMode::Full(SpinChannel::NO_FLIP), Normalization::Raw).unwrap();
    let ratio = flip.area() / keep.area();
    assert!(ratio < 1e-20, "{ratio}");
    let r = beam.relativity_ratio();
    assert!(ratio < r.powi(4));
}

#[test]
fn single_beam_patterns_are_even() {
    let (beam, wire) = setup();
    let grid = AngularGrid::default();
    for mode in [
        ScatterMode::LowEnergy,
        ScatterMode::Full(SpinChannel::NO_FLIP),
        ScatterMode::Full(SpinChannel::FLIP),
        ScatterMode::FullSummed,
    ] {
        let p = pattern_single(&beam, &wire, &grid, mode, Normalization::Raw).unwrap();
        let d = p.density();
        let n = d.len();
        for i in 0..n / 2 {
            assert!((d[i] - d[n - 1 - i]).abs() <= 1e-12 * d[i].abs().max(d[n - 1 - i].abs()).max(f64::MIN_POSITIVE), "{mode:?} at {i}");
        }
    }
}

#[test]
fn twobeam_forward_value_at_figure_parameters() {
    let p_r = reference_p_r();
    let cfg = TwoBeamConfig::new(0.1, 0.0).unwrap();
    let x = 2.0 * p_r * 0.025_f64.sin();
    assert!((x - 4.2181).abs() < 1e-3);
    let want = 4.0 * oracle_jinc(x).powi(2);
    let got = dsigma_dtheta_twobeam_low_e(p_r, &cfg, 0.0).unwrap();
    assert!((got - want).abs() <= 1e-12 * want, "{got} vs {want}");
}

#[test]
fn twobeam_full_matches_low_energy_shape() {
    let (beam, wire) = setup();
    let p_r = beam.p_r(&wire);
    let grid = AngularGrid::<f64>::uniform(-0.15, 0.15, 601).unwrap();
    for phi in [0.0, 1.3, std::f64::consts::PI] {
        let cfg = TwoBeamConfig::new(0.1, phi).unwrap();
        let full: Vec<f64> = grid.thetas().iter()
            .map(|&t| dsigma_dtheta_twobeam_full(&beam, &wire, &cfg, t, SpinChannel::NO_FLIP).unwrap())
            .collect();
        let low: Vec<f64> = grid.thetas().iter()
            .map(|&t| dsigma_dtheta_twobeam_low_e(p_r, &cfg, t).unwrap())
            .collect();
        let pf = full.iter().copied().fold(0.0, f64::max);
        let pl = low.iter().copied().fold(0.0, f64::max);
        for (a, b) in full.iter().zip(&low) {
            assert!((a / pf - b / pl).abs() <= 1e-8);
        }
    }
}

#[test]
fn scan_mass_extremes() {
    let p_r = reference_p_r();
    let grid = AngularGrid::default();
    let phis = phi_grid(0.0, std::f64::consts::TAU, 81).unwrap();
    let scan = phi_theta_scan(p_r, 0.1, &phis, &grid).unwrap();
    let masses = scan.row_masses();
    let argmax = (0..masses.len()).max_by(|&a, &b| masses[a].total_cmp(&masses[b])).unwrap();
    let argmin = (0..masses.len()).min_by(|&a, &b| masses[a].total_cmp(&masses[b])).unwrap();
    assert!(argmax == 0 || argmax == 80);
    assert_eq!(argmin, 40);
    assert_eq!(scan.density[0], scan.density[80]);
    assert_eq!(scan.density[40][1000], 0.0);
}

#[test]
fn match_areas_at_figure_parameters() {
    let p_r = reference_p_r();
    let (beam, wire) = setup();
    let grid = AngularGrid::default();
    let quantum = pattern_single(&beam, &wire, &grid, ScatterMode::LowEnergy, Normalization::PeakOne).unwrap();
    let classical = pattern_classical(&ClassicalConfig::new(p_r).unwrap(), &grid, Normalization::PeakOne).unwrap();
    let matched = match_areas(&quantum, &classical).unwrap();
    assert!(((matched.area() - quantum.area()) / quantum.area()).abs() < 1e-9);
    let twice = match_areas(&quantum, &matched).unwrap();
    for (a, b) in twice.density().iter().zip(matched.density()) {
        assert!((a - b).abs() <= 1e-14 * b.abs());
    }
    let cmp = compare_curves(&quantum, &matched).unwrap();
    let offset = cmp.first_zero_offset_rad.unwrap();
    let want = oracle_quantum_zero(p_r, 1) - oracle_classical_zero(p_r, 1);
    assert!((want - 0.008_173).abs() < 1e-5);
    assert!((offset - want).abs() < 1e-5, "{offset} vs {want}");
}

#[test]
fn factor_converges_to_bessel_ratio() {
    let limit = oracle_j1_zero(1) / std::f64::consts::PI;
    let mut prev = 0.0;
    for p_r in [50.0, 80.0, 120.0, 500.0, 2000.0, 1e4] {
        let f = overestimation_factor(p_r).unwrap();
        assert!((f - limit).abs() < 1e-3, "pR={p_r}: {f}");
        assert!(f > prev);
        prev = f;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn twobeam_density_properties(
        p_r in 1.0_f64..300.0,
        alpha in 0.0_f64..0.5,
        phi in -10.0_f64..10.0,
        theta in -0.5_f64..0.5,
    ) {
        let cfg = TwoBeamConfig::new(alpha, phi).unwrap();
        let d = dsigma_dtheta_twobeam_low_e(p_r, &cfg, theta).unwrap();
        prop_assert!(d >= 0.0);
        let mirrored = dsigma_dtheta_twobeam_low_e(p_r, &cfg, -theta).unwrap();
        prop_assert!((d - mirrored).abs() <= 1e-12 * d.max(1e-300));
        let shifted = TwoBeamConfig::new(alpha, phi + std::f64::consts::TAU).unwrap();
        let d2 = dsigma_dtheta_twobeam_low_e(p_r, &shifted, theta).unwrap();
        prop_assert!((d - d2).abs() <= 1e-12 * d.max(1.0));

        let (qm, qp) = momentum_transfer_pair(p_r, theta, alpha).unwrap();
        let (fm, fp) = (form_factor_qr(qm).unwrap(), form_factor_qr(qp).unwrap());
        prop_assert!((d - (fm * fm + fp * fp)).abs() <= 2.0 * (fm * fp).abs() + 1e-15);
        let sup = superpose_amplitudes(Complexv::new(fm, 0.0), Complexv::new(fp, 0.0), phi);
        prop_assert!((sup - d).abs() <= 1e-12);
    }

    #[test]
    fn equal_transfer_gives_equal_density(p_r in 1.0_f64..300.0, theta in 0.0_f64..3.0) {
        // θ and 2π - θ share q = 2p|sin(θ/2)|
        let a = dsigma_dtheta_low_e(p_r, theta).unwrap();
        let b = dsigma_dtheta_low_e(p_r, std::f64::consts::TAU - theta).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.max(1e-12));
    }

    #[test]
    fn height_never_enters(theta in -0.2_f64..0.2, h in 1e-6_f64..1e6) {
        let beam = BeamParams::electron_nm(633.0).unwrap();
        let a = WirePotential::new(8.5e-6, 1.0).unwrap();
        let b = WirePotential::new(8.5e-6, h).unwrap();
        let da = dsigma_dtheta_full(&beam, &a, theta, SpinChannel::NO_FLIP).unwrap();
        let db = dsigma_dtheta_full(&beam, &b, theta, SpinChannel::NO_FLIP).unwrap();
        prop_assert_eq!(da.to_bits(), db.to_bits());
    }
}
