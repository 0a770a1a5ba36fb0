//! Audit of printed closed forms against dense evaluation over a grid.

use std::fmt::Write as _;

use serde::Serialize;

use crate::bell::{
    chsh_oracle, closed_form_bc_phi, closed_form_bc_psi, closed_form_bl_phi,
    single_particle_oracle, single_particle_report, tsirelson_bound, MeasurementQuadruple,
};
use crate::error::Result;
use crate::kinematics::{wigner_angle, wigner_angle_oracle, BoostParameters};
use crate::scalar::Real;
use crate::scan::ScanConfig;
use crate::spin::OperatorFamily;
use crate::states::{bell_state, boost_pair, BellStateKind, PairState};

/// Tolerance for the Wigner-angle comparison, which goes through a 4×4
/// Lorentz product and loses a few digits to cancellation.
pub const ANGLE_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Closed form equals the dense value at every cell.
    Agrees,
    /// Closed form departs from the dense value somewhere on the grid.
    Discrepancy,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaCheck {
    pub id: &'static str,
    pub closed_form: &'static str,
    pub compared_with: &'static str,
    pub tolerance: f64,
    pub cells: usize,
    pub max_abs_deviation: f64,
    pub mean_abs_deviation: f64,
    /// Cells where the deviation is within tolerance.
    pub agreeing_cells: usize,
    /// Agreeing cells with a non-zero Wigner angle.
    pub agreeing_cells_with_rotation: usize,
    pub expected: Verdict,
    pub observed: Verdict,
}

impl FormulaCheck {
    pub fn as_expected(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub beta_points: usize,
    pub energy_points: usize,
    pub checks: Vec<FormulaCheck>,
    /// Largest |⟨B⟩| over every dense CHSH evaluation in the report.
    pub max_abs_chsh: f64,
    pub tsirelson_respected: bool,
}

impl ConsistencyReport {
    pub fn check(&self, id: &str) -> Option<&FormulaCheck> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Every check came out as expected and the Tsirelson bound held.
    pub fn passed(&self) -> bool {
        self.tsirelson_respected && self.checks.iter().all(FormulaCheck::as_expected)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "grid: {} beta x {} energy points",
            self.beta_points, self.energy_points
        );
        let _ = writeln!(
            s,
            "{:<34} {:>10} {:>12} {:>12} {:>9} {:>12}  status",
            "check", "tolerance", "max_dev", "mean_dev", "agree", "agree(Ω≠0)"
        );
        for c in &self.checks {
            let status = match (c.observed, c.as_expected()) {
                (Verdict::Agrees, true) => "confirmed",
                (Verdict::Discrepancy, true) => "discrepancy (known)",
                (Verdict::Agrees, false) => "UNEXPECTED agreement",
                (Verdict::Discrepancy, false) => "FAILED",
            };
            let _ = writeln!(
                s,
                "{:<34} {:>10.1e} {:>12.3e} {:>12.3e} {:>4}/{:<4} {:>12}  {}",
                c.id,
                c.tolerance,
                c.max_abs_deviation,
                c.mean_abs_deviation,
                c.agreeing_cells,
                c.cells,
                c.agreeing_cells_with_rotation,
                status
            );
            let _ = writeln!(s, "    {}  vs  {}", c.closed_form, c.compared_with);
        }
        let _ = writeln!(
            s,
            "max |<B>| = {:.17e} (bound 2√2: {})",
            self.max_abs_chsh,
            if self.tsirelson_respected {
                "respected"
            } else {
                "VIOLATED"
            }
        );
        s
    }
}

struct Accumulator {
    id: &'static str,
    closed_form: &'static str,
    compared_with: &'static str,
    tolerance: f64,
    expected: Verdict,
    deviations: Vec<(f64, f64)>,
}

impl Accumulator {
    fn new(
        id: &'static str,
        closed_form: &'static str,
        compared_with: &'static str,
        expected: Verdict,
    ) -> Self {
        Self {
            id,
            closed_form,
            compared_with,
            tolerance: <f64 as Real>::tolerance(),
            expected,
            deviations: Vec::new(),
        }
    }

    fn with_tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    fn push(&mut self, closed: f64, dense: f64, omega: f64) {
        self.deviations.push(((closed - dense).abs(), omega));
    }

    fn finish(self) -> FormulaCheck {
        let cells = self.deviations.len();
        let max = self.deviations.iter().map(|d| d.0).fold(0.0, f64::max);
        let mean = if cells == 0 {
            0.0
        } else {
            self.deviations.iter().map(|d| d.0).sum::<f64>() / cells as f64
        };
        let agreeing: Vec<_> = self
            .deviations
            .iter()
            .filter(|d| d.0 <= self.tolerance)
            .collect();
        FormulaCheck {
            id: self.id,
            closed_form: self.closed_form,
            compared_with: self.compared_with,
            tolerance: self.tolerance,
            cells,
            max_abs_deviation: max,
            mean_abs_deviation: mean,
            agreeing_cells: agreeing.len(),
            agreeing_cells_with_rotation: agreeing.iter().filter(|d| d.1 != 0.0).count(),
            expected: self.expected,
            observed: if agreeing.len() == cells {
                Verdict::Agrees
            } else {
                Verdict::Discrepancy
            },
        }
    }
}

/// Compare every closed form against its dense counterpart over the grid
/// of `config` (its scenario, family, and quadruple are not used).
pub fn consistency_report(config: &ScanConfig) -> Result<ConsistencyReport> {
    use Verdict::{Agrees, Discrepancy};
    let tol = <f64 as Real>::tolerance();
    let cells = config.cells()?;

    let mut angle = Accumulator::new(
        "wigner-angle",
        "atan(sinh α sinh δ / (cosh α + cosh δ))",
        "Lorentz-matrix decomposition",
        Agrees,
    )
    .with_tolerance(ANGLE_TOLERANCE);
    let mut lab_pauli = Accumulator::new("spin.lab.pauli", "1/(2√2)", "<+|S|+>", Agrees);
    let mut moving_pauli = Accumulator::new(
        "spin.moving.pauli",
        "(cos Ω + sin Ω)/(2√2)",
        "<+'|S|+'>",
        Agrees,
    );
    let mut lab_czachor = Accumulator::new("spin.lab.czachor", "1/(2√2)", "<+|C(β=0)|+>", Agrees);
    let mut moving_czachor = Accumulator::new(
        "spin.moving.czachor",
        "(√(1−β²) cos Ω + sin Ω)/(2√(2−β²))",
        "<+'|C(β)|+'>",
        Agrees,
    );
    let mut bl_phi = Accumulator::new("chsh.phi.pauli", "2√2 cos²Ω", "<Φ+'|B_pauli|Φ+'>", Agrees);
    let mut bc_phi = Accumulator::new(
        "chsh.phi.czachor.printed",
        "2(√(1−β²) + cos Ω)/√(2−β²)",
        "<Φ+'|B_czachor|Φ+'>",
        Discrepancy,
    );
    let mut bc_phi_double = Accumulator::new(
        "chsh.phi.czachor.double-angle",
        "2(√(1−β²) + cos 2Ω)/√(2−β²)",
        "<Φ+'|B_czachor|Φ+'>",
        Agrees,
    );
    let mut bl_psi = Accumulator::new(
        "chsh.psi.pauli",
        "2√2 (invariant state)",
        "<Ψ+'|B_pauli|Ψ+'>",
        Agrees,
    );
    let mut bc_psi = Accumulator::new(
        "chsh.psi.czachor",
        "2(1 + √(1−β²))/√(2−β²)",
        "<Ψ+'|B_czachor|Ψ+'>",
        Agrees,
    );
    let mut printed_psi = Accumulator::new(
        "chsh.psi.pauli.as-printed-directions",
        "2√2 (claimed maximum)",
        "<Ψ+'|B_pauli|Ψ+'> with a' = -a",
        Discrepancy,
    );

    let phi_quad = MeasurementQuadruple::standard_phi();
    let psi_quad = MeasurementQuadruple::standard_psi();
    let printed_quad = MeasurementQuadruple::psi_as_printed();
    let phi = bell_state(BellStateKind::PhiPlus);
    let psi = bell_state(BellStateKind::PsiPlus);
    let bound = tsirelson_bound::<f64>();
    let mut max_abs_chsh: f64 = 0.0;

    for (boost, particle) in &cells {
        let omega = wigner_angle(boost, particle);
        let w = omega.radians();
        angle.push(w, wigner_angle_oracle(boost, particle)?.radians(), w);

        let closed = single_particle_report(boost, particle);
        let dense = single_particle_oracle(boost, particle)?;
        lab_pauli.push(closed.lab_pauli, dense.lab_pauli, w);
        moving_pauli.push(closed.moving_pauli, dense.moving_pauli, w);
        lab_czachor.push(closed.lab_czachor, dense.lab_czachor, w);
        moving_czachor.push(closed.moving_czachor, dense.moving_czachor, w);

        let pauli = OperatorFamily::Pauli;
        let czachor = OperatorFamily::czachor_x(*boost);
        let phi_b = boost_pair(&phi, boost, particle);
        let psi_b = boost_pair(&psi, boost, particle);
        let mut dense_chsh = |state: &PairState<f64>,
                              quad: &MeasurementQuadruple<f64>,
                              fam: &OperatorFamily<f64>|
         -> Result<f64> {
            let v = chsh_oracle(state, quad, fam)?.value;
            max_abs_chsh = max_abs_chsh.max(v.abs());
            Ok(v)
        };
        let d = dense_chsh(&phi_b, &phi_quad, &pauli)?;
        bl_phi.push(closed_form_bl_phi(omega), d, w);
        let d = dense_chsh(&phi_b, &phi_quad, &czachor)?;
        bc_phi.push(closed_form_bc_phi(boost, omega), d, w);
        bc_phi_double.push(double_angle_bc_phi(boost, w), d, w);
        let d = dense_chsh(&psi_b, &psi_quad, &pauli)?;
        bl_psi.push(bound, d, w);
        let d = dense_chsh(&psi_b, &psi_quad, &czachor)?;
        bc_psi.push(closed_form_bc_psi(boost), d, w);
        let d = dense_chsh(&psi_b, &printed_quad, &pauli)?;
        printed_psi.push(bound, d, w);
    }

    let checks = [
        angle,
        lab_pauli,
        moving_pauli,
        lab_czachor,
        moving_czachor,
        bl_phi,
        bc_phi,
        bc_phi_double,
        bl_psi,
        bc_psi,
        printed_psi,
    ]
    .into_iter()
    .map(Accumulator::finish)
    .collect();

    let energy_points = match &config.energy {
        crate::scan::EnergyAxis::Gamma(r) | crate::scan::EnergyAxis::Beta1(r) => r.values().len(),
    };
    Ok(ConsistencyReport {
        beta_points: config.betas().len(),
        energy_points,
        checks,
        max_abs_chsh,
        tsirelson_respected: max_abs_chsh <= bound + tol,
    })
}

fn double_angle_bc_phi(boost: &BoostParameters<f64>, omega: f64) -> f64 {
    let k = boost.contraction();
    2.0 * (k + (2.0 * omega).cos()) / (1.0 + k * k).sqrt()
}
