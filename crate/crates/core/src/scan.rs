//! Parameter sweeps over boost speed and particle energy.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bell::{
    chsh_oracle, closed_form_bc_phi, closed_form_bc_psi, closed_form_bl_phi,
    single_particle_oracle, single_particle_report, tsirelson_bound, MeasurementQuadruple,
};
use crate::error::{Error, Result};
use crate::kinematics::{wigner_angle, BoostParameters, ParticleKinematics, LIMIT_BETA};
use crate::spin::OperatorFamily;
use crate::states::{bell_state, boost_pair, BellStateKind};

/// Inclusive, evenly spaced axis `lo:hi:steps`. One step yields `lo` only.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxisRange {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl AxisRange {
    pub fn new(lo: f64, hi: f64, steps: usize) -> Self {
        Self { lo, hi, steps }
    }

    pub fn single(value: f64) -> Self {
        Self {
            lo: value,
            hi: value,
            steps: 1,
        }
    }

    pub fn values(&self) -> Vec<f64> {
        if self.steps <= 1 {
            return vec![self.lo];
        }
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|i| {
                if i + 1 == self.steps {
                    self.hi
                } else {
                    self.lo + (self.hi - self.lo) * i as f64 / last
                }
            })
            .collect()
    }

    fn validate(&self, name: &str) -> Result<()> {
        if self.steps == 0 {
            return Err(Error::Config(format!("{name}: steps must be at least 1")));
        }
        if !(self.lo.is_finite() && self.hi.is_finite()) {
            return Err(Error::Config(format!("{name}: bounds must be finite")));
        }
        if self.lo > self.hi {
            return Err(Error::Config(format!(
                "{name}: lower bound {} exceeds upper bound {}",
                self.lo, self.hi
            )));
        }
        Ok(())
    }
}

impl FromStr for AxisRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Config(format!("expected lo:hi:n, got {s:?}"));
        match parts.as_slice() {
            [lo, hi, n] => Ok(Self {
                lo: lo.trim().parse().map_err(|_| bad())?,
                hi: hi.trim().parse().map_err(|_| bad())?,
                steps: n.trim().parse().map_err(|_| bad())?,
            }),
            [v] => Ok(Self::single(v.trim().parse().map_err(|_| bad())?)),
            _ => Err(bad()),
        }
    }
}

/// Particle-energy axis, given either as Γ or as lab speed β₁.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnergyAxis {
    Gamma(AxisRange),
    Beta1(AxisRange),
}

impl EnergyAxis {
    fn particles(&self) -> Result<Vec<ParticleKinematics<f64>>> {
        match self {
            Self::Gamma(r) => r
                .values()
                .into_iter()
                .map(ParticleKinematics::from_gamma)
                .collect(),
            Self::Beta1(r) => r
                .values()
                .into_iter()
                .map(ParticleKinematics::from_speed)
                .collect(),
        }
    }

    fn validate(&self) -> Result<()> {
        match self {
            Self::Gamma(r) => {
                r.validate("gamma range")?;
                if r.lo < 1.0 {
                    return Err(Error::Config(format!(
                        "gamma range: lower bound {} is below 1",
                        r.lo
                    )));
                }
            }
            Self::Beta1(r) => {
                r.validate("beta1 range")?;
                if r.lo < 0.0 || r.hi >= 1.0 {
                    return Err(Error::Config("beta1 range must lie in [0, 1)".into()));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyChoice {
    Pauli,
    Czachor,
}

impl FamilyChoice {
    /// Czachor operators always use the boost axis x̂.
    pub fn at(&self, boost: &BoostParameters<f64>) -> OperatorFamily<f64> {
        match self {
            Self::Pauli => OperatorFamily::Pauli,
            Self::Czachor => OperatorFamily::czachor_x(*boost),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Scenario {
    /// Spin of one particle prepared in |+⟩, measured along (1,0,1)/√2.
    SingleParticle,
    /// CHSH on the boosted Φ+.
    BellPhi,
    /// CHSH on the boosted Ψ+.
    BellPsi,
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::SingleParticle => "single",
            Self::BellPhi => "bell-phi",
            Self::BellPsi => "bell-psi",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadrupleChoice {
    Standard,
    /// The Ψ+ directions as printed (`a′ = −a`). Identical to `Standard`
    /// for the Φ+ scenario, whose printed directions are consistent.
    AsPrinted,
    Custom([f64; 12]),
}

impl QuadrupleChoice {
    pub fn resolve(&self, scenario: Scenario) -> Result<MeasurementQuadruple<f64>> {
        Ok(match (self, scenario) {
            (Self::Custom(c), _) => MeasurementQuadruple::from_components(*c)?,
            (Self::AsPrinted, Scenario::BellPsi) => MeasurementQuadruple::psi_as_printed(),
            (_, Scenario::BellPsi) => MeasurementQuadruple::standard_psi(),
            (_, _) => MeasurementQuadruple::standard_phi(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    pub beta: AxisRange,
    pub energy: EnergyAxis,
    pub family: FamilyChoice,
    pub scenario: Scenario,
    pub quadruple: QuadrupleChoice,
    /// Replace the β axis by the single probe `β = 1 − 1e−9`.
    pub limit: bool,
    pub format: OutputFormat,
    pub output: Option<PathBuf>,
}

impl Default for ScanConfig {
    /// 50×50 grid over β ∈ [0, 0.999], Γ ∈ [1, 20]; Φ+ with Pauli operators.
    fn default() -> Self {
        Self {
            beta: AxisRange::new(0.0, 0.999, 50),
            energy: EnergyAxis::Gamma(AxisRange::new(1.0, 20.0, 50)),
            family: FamilyChoice::Pauli,
            scenario: Scenario::BellPhi,
            quadruple: QuadrupleChoice::Standard,
            limit: false,
            format: OutputFormat::Csv,
            output: None,
        }
    }
}

impl ScanConfig {
    pub fn validate(&self) -> Result<()> {
        self.beta.validate("beta range")?;
        if self.beta.lo < 0.0 || self.beta.hi >= 1.0 {
            return Err(Error::Config(format!(
                "beta range must satisfy 0 <= lo <= hi < 1, got {}:{}",
                self.beta.lo, self.beta.hi
            )));
        }
        self.energy.validate()?;
        if self.scenario == Scenario::SingleParticle && self.quadruple != QuadrupleChoice::Standard
        {
            return Err(Error::Config(
                "measurement quadruples apply only to bell scenarios".into(),
            ));
        }
        if self.scenario != Scenario::SingleParticle {
            self.quadruple.resolve(self.scenario)?;
        }
        Ok(())
    }

    pub fn betas(&self) -> Vec<f64> {
        if self.limit {
            vec![LIMIT_BETA]
        } else {
            self.beta.values()
        }
    }

    /// All grid cells, β-major.
    pub fn cells(&self) -> Result<Vec<(BoostParameters<f64>, ParticleKinematics<f64>)>> {
        self.validate()?;
        let particles = self.energy.particles()?;
        let mut out = Vec::with_capacity(self.betas().len() * particles.len());
        for beta in self.betas() {
            let boost = BoostParameters::from_speed(beta)?;
            out.extend(particles.iter().map(|p| (boost, *p)));
        }
        Ok(out)
    }
}

/// One grid cell of a scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub beta: f64,
    pub beta1: f64,
    pub gamma: f64,
    pub omega_rad: f64,
    pub value_closed_form: f64,
    pub value_oracle: f64,
    pub abs_deviation: f64,
}

/// Closed form and dense value of the configured observable at one cell.
pub fn evaluate_cell(
    config: &ScanConfig,
    quad: Option<&MeasurementQuadruple<f64>>,
    boost: &BoostParameters<f64>,
    particle: &ParticleKinematics<f64>,
) -> Result<ScanRow> {
    let omega = wigner_angle(boost, particle);
    let (closed, oracle) = match config.scenario {
        Scenario::SingleParticle => {
            let closed = single_particle_report(boost, particle);
            let dense = single_particle_oracle(boost, particle)?;
            match config.family {
                FamilyChoice::Pauli => (closed.moving_pauli, dense.moving_pauli),
                FamilyChoice::Czachor => (closed.moving_czachor, dense.moving_czachor),
            }
        }
        Scenario::BellPhi | Scenario::BellPsi => {
            let (kind, closed) = match (config.scenario, config.family) {
                (Scenario::BellPhi, FamilyChoice::Pauli) => {
                    (BellStateKind::PhiPlus, closed_form_bl_phi(omega))
                }
                (Scenario::BellPhi, FamilyChoice::Czachor) => {
                    (BellStateKind::PhiPlus, closed_form_bc_phi(boost, omega))
                }
                (_, FamilyChoice::Pauli) => (BellStateKind::PsiPlus, tsirelson_bound()),
                (_, FamilyChoice::Czachor) => (BellStateKind::PsiPlus, closed_form_bc_psi(boost)),
            };
            let quad =
                quad.ok_or_else(|| Error::Config("bell scenario needs a quadruple".into()))?;
            let state = boost_pair(&bell_state(kind), boost, particle);
            let dense = chsh_oracle(&state, quad, &config.family.at(boost))?;
            (closed, dense.value)
        }
    };
    Ok(ScanRow {
        beta: boost.beta(),
        beta1: particle.beta1(),
        gamma: particle.gamma(),
        omega_rad: omega.radians(),
        value_closed_form: closed,
        value_oracle: oracle,
        abs_deviation: (closed - oracle).abs(),
    })
}

/// Evaluate every grid cell. Rows come back β-major, then by energy.
pub fn run_scan(config: &ScanConfig) -> Result<Vec<ScanRow>> {
    let cells = config.cells()?;
    let quad = match config.scenario {
        Scenario::SingleParticle => None,
        s => Some(config.quadruple.resolve(s)?),
    };
    cells
        .iter()
        .map(|(b, p)| evaluate_cell(config, quad.as_ref(), b, p))
        .collect()
}
