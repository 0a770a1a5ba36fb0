use relspin::bell::{tsirelson_bound, MeasurementQuadruple};
use relspin::scan::{AxisRange, EnergyAxis, FamilyChoice, OutputFormat, Scenario};
use relspin::{
    bell_state, boost_pair, chsh_oracle, closed_form_bc_phi, consistency_report, run_scan,
    wigner_angle, BellStateKind, BoostF32, BoostF64, FamilyF64, OperatorFamily, PairStateF32,
    ParticleF32, ParticleF64, QuadrupleF64, ScanConfig,
};

#[test]
fn f32_and_f64_agree_on_boosted_phi() {
    let v64 = {
        let (b, p) = (
            BoostF64::from_speed(0.6).unwrap(),
            ParticleF64::from_gamma(2.0).unwrap(),
        );
        let state = boost_pair(&bell_state(BellStateKind::PhiPlus), &b, &p);
        chsh_oracle(&state, &QuadrupleF64::standard_phi(), &FamilyF64::Pauli)
            .unwrap()
            .value
    };
    let v32 = {
        let (b, p) = (
            BoostF32::from_speed(0.6).unwrap(),
            ParticleF32::from_gamma(2.0).unwrap(),
        );
        let state: PairStateF32 = boost_pair(&bell_state(BellStateKind::PhiPlus), &b, &p);
        chsh_oracle(
            &state,
            &MeasurementQuadruple::standard_phi(),
            &OperatorFamily::Pauli,
        )
        .unwrap()
        .value
    };
    assert!((v64 - 2.438_796_86).abs() < 1e-8);
    assert!((f64::from(v32) - v64).abs() < 1e-5);
}

#[test]
fn result_carries_frame() {
    let (b, p) = (
        BoostF64::from_speed(0.6).unwrap(),
        ParticleF64::from_gamma(2.0).unwrap(),
    );
    let state = boost_pair(&bell_state(BellStateKind::PhiPlus), &b, &p);
    let r = chsh_oracle(
        &state,
        &QuadrupleF64::standard_phi(),
        &FamilyF64::czachor_x(b),
    )
    .unwrap();
    assert_eq!(r.beta(), 0.6);
    assert_eq!(r.gamma(), Some(2.0));
    assert_eq!(r.omega(), wigner_angle(&b, &p).radians());
    assert!((r.value - 2.380_853_06).abs() < 1e-8);
    // The printed single-angle form gives a different number here.
    assert!((closed_form_bc_phi(&b, wigner_angle(&b, &p)) - r.value).abs() > 1e-3);
}

#[test]
fn scan_is_beta_major_and_bounded() {
    let cfg = ScanConfig {
        beta: AxisRange::new(0.0, 0.9, 3),
        energy: EnergyAxis::Gamma(AxisRange::new(1.0, 4.0, 4)),
        scenario: Scenario::BellPsi,
        family: FamilyChoice::Czachor,
        format: OutputFormat::Csv,
        ..ScanConfig::default()
    };
    let rows = run_scan(&cfg).unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows[..4].iter().all(|r| r.beta == 0.0));
    assert!(rows
        .iter()
        .all(|r| r.value_oracle <= tsirelson_bound::<f64>()));
}

#[test]
fn report_passes_on_small_grid() {
    let cfg = ScanConfig {
        beta: AxisRange::new(0.0, 0.99, 6),
        energy: EnergyAxis::Beta1(AxisRange::new(0.0, 0.99, 6)),
        ..ScanConfig::default()
    };
    let report = consistency_report(&cfg).unwrap();
    assert!(report.passed(), "{}", report.to_text());
    assert_eq!(report.beta_points * report.energy_points, 36);
}
