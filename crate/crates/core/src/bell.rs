//! CHSH operator assembly, dense expectation values, and the closed-form
//! curves they are audited against.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{wigner_angle, BoostParameters, ParticleKinematics, WignerAngle};
use crate::linalg::{expectation, kron, Matrix4};
use crate::scalar::Real;
use crate::spin::{Direction, OperatorFamily};
use crate::states::{boost_single, Frame, PairState, SpinState};

/// Measurement directions `(a, a′)` for the first particle and `(b, b′)` for
/// the second.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeasurementQuadruple<T> {
    pub a: Direction<T>,
    pub a_prime: Direction<T>,
    pub b: Direction<T>,
    pub b_prime: Direction<T>,
}

fn dir<T: Real>(x: f64, y: f64, z: f64) -> Direction<T> {
    Direction::new(T::lit(x), T::lit(y), T::lit(z)).expect("nonzero literal direction")
}

impl<T: Real> MeasurementQuadruple<T> {
    pub fn new(
        a: Direction<T>,
        a_prime: Direction<T>,
        b: Direction<T>,
        b_prime: Direction<T>,
    ) -> Self {
        Self {
            a,
            a_prime,
            b,
            b_prime,
        }
    }

    /// Twelve components in the order `a, a′, b, b′`; each triple is
    /// normalized.
    pub fn from_components(c: [T; 12]) -> Result<Self> {
        let d = |i: usize| Direction::new(c[i], c[i + 1], c[i + 2]);
        Ok(Self::new(d(0)?, d(3)?, d(6)?, d(9)?))
    }

    /// Directions that give the maximal lab-frame violation on Φ+:
    /// `a = (1,−1,0)/√2`, `a′ = (−1,−1,0)/√2`, `b = ŷ`, `b′ = x̂`.
    pub fn standard_phi() -> Self {
        Self::new(
            dir(1.0, -1.0, 0.0),
            dir(-1.0, -1.0, 0.0),
            dir(0.0, 1.0, 0.0),
            dir(1.0, 0.0, 0.0),
        )
    }

    /// Directions that give the maximal lab-frame violation on Ψ+:
    /// `a = (1,1,0)/√2`, `a′ = (1,−1,0)/√2`, `b = x̂`, `b′ = ŷ`.
    pub fn standard_psi() -> Self {
        Self::new(
            dir(1.0, 1.0, 0.0),
            dir(1.0, -1.0, 0.0),
            dir(1.0, 0.0, 0.0),
            dir(0.0, 1.0, 0.0),
        )
    }

    /// The Ψ+ directions as they are commonly printed: `a′ = −a`, with the
    /// two second-particle vectors read in order as `b = x̂`, `b′ = ŷ`.
    /// With `a′ = −a` the operator collapses to `2 a ⊗ b′`, so this set
    /// cannot exceed √2 on Ψ+.
    pub fn psi_as_printed() -> Self {
        Self::new(
            dir(1.0, 1.0, 0.0),
            dir(-1.0, -1.0, 0.0),
            dir(1.0, 0.0, 0.0),
            dir(0.0, 1.0, 0.0),
        )
    }

    pub fn components(&self) -> [T; 12] {
        let mut out = [T::zero(); 12];
        for (k, d) in [self.a, self.a_prime, self.b, self.b_prime]
            .iter()
            .enumerate()
        {
            out[3 * k..3 * k + 3].copy_from_slice(&d.components());
        }
        out
    }
}

/// `B = O(a) ⊗ (O(b) + O(b′)) + O(a′) ⊗ (O(b) − O(b′))` with `O` supplied
/// by the operator family.
pub fn bell_operator<T: Real>(
    quad: &MeasurementQuadruple<T>,
    family: &OperatorFamily<T>,
) -> Result<Matrix4<T>> {
    let a = family.observable(&quad.a)?;
    let a_prime = family.observable(&quad.a_prime)?;
    let b = family.observable(&quad.b)?;
    let b_prime = family.observable(&quad.b_prime)?;
    Ok(kron(&a, &(b + b_prime)) + kron(&a_prime, &(b - b_prime)))
}

/// One dense CHSH evaluation with its provenance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChshResult<T> {
    pub value: T,
    pub family: OperatorFamily<T>,
    pub quadruple: MeasurementQuadruple<T>,
    pub frame: Frame<T>,
}

impl<T: Real> ChshResult<T> {
    pub fn beta(&self) -> T {
        self.frame.beta()
    }

    pub fn gamma(&self) -> Option<T> {
        self.frame.gamma()
    }

    pub fn omega(&self) -> T {
        self.frame.omega()
    }
}

/// `2√2`, the largest CHSH value any operator built here can reach.
pub fn tsirelson_bound<T: Real>() -> T {
    T::lit(2.0) * T::SQRT_2()
}

/// `⟨ψ|B|ψ⟩` by explicit matrix algebra.
pub fn chsh_oracle<T: Real>(
    state: &PairState<T>,
    quad: &MeasurementQuadruple<T>,
    family: &OperatorFamily<T>,
) -> Result<ChshResult<T>> {
    let op = bell_operator(quad, family)?;
    let value = expectation(state.amplitudes(), &op)?;
    if !(value.abs() <= tsirelson_bound::<T>() + T::tolerance()) {
        return Err(Error::BoundViolation {
            value: value.to_f64_lossy(),
        });
    }
    Ok(ChshResult {
        value,
        family: *family,
        quadruple: *quad,
        frame: *state.frame(),
    })
}

/// Pauli-family CHSH value on the boosted Φ+ with the standard Φ+
/// directions: `2√2 cos²Ω`.
pub fn closed_form_bl_phi<T: Real>(omega: WignerAngle<T>) -> T {
    tsirelson_bound::<T>() * omega.radians().cos().powi(2)
}

/// Czachor-family CHSH value on the boosted Φ+ exactly as it is usually
/// printed, `2(√(1−β²) + cos Ω)/√(2−β²)`.
///
/// The dense evaluation on the boosted state gives `cos 2Ω` in place of
/// `cos Ω`; the two agree only at Ω = 0. This function keeps the printed
/// form so the gap can be measured.
pub fn closed_form_bc_phi<T: Real>(boost: &BoostParameters<T>, omega: WignerAngle<T>) -> T {
    let k = boost.contraction();
    T::lit(2.0) * (k + omega.radians().cos()) / (T::one() + k * k).sqrt()
}

/// Czachor-family CHSH value on Ψ+ with the standard Ψ+ directions:
/// `2(1 + √(1−β²))/√(2−β²)`.
pub fn closed_form_bc_psi<T: Real>(boost: &BoostParameters<T>) -> T {
    let k = boost.contraction();
    T::lit(2.0) * (T::one() + k) / (T::one() + k * k).sqrt()
}

/// Measurement direction of the single-particle comparison, `(1, 0, 1)/√2`.
pub fn stern_gerlach_direction<T: Real>() -> Direction<T> {
    dir(1.0, 0.0, 1.0)
}

/// Spin expectations (units of ħ) for a particle prepared in |+⟩ and
/// measured along [`stern_gerlach_direction`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpinExpectations<T> {
    pub lab_pauli: T,
    pub moving_pauli: T,
    pub lab_czachor: T,
    pub moving_czachor: T,
}

impl<T: Real> SpinExpectations<T> {
    pub fn max_abs_diff(&self, other: &Self) -> T {
        [
            self.lab_pauli - other.lab_pauli,
            self.moving_pauli - other.moving_pauli,
            self.lab_czachor - other.lab_czachor,
            self.moving_czachor - other.moving_czachor,
        ]
        .into_iter()
        .map(T::abs)
        .fold(T::zero(), T::max)
    }
}

/// Closed forms: lab values `1/(2√2)` for both families, moving Pauli
/// `(cos Ω + sin Ω)/(2√2)`, moving Czachor
/// `(√(1−β²) cos Ω + sin Ω)/(2√(2−β²))`.
pub fn single_particle_report<T: Real>(
    boost: &BoostParameters<T>,
    particle: &ParticleKinematics<T>,
) -> SpinExpectations<T> {
    let (s, c) = wigner_angle(boost, particle).radians().sin_cos();
    let two = T::lit(2.0);
    let lab = (two * T::SQRT_2()).recip();
    let k = boost.contraction();
    SpinExpectations {
        lab_pauli: lab,
        moving_pauli: (c + s) * lab,
        lab_czachor: lab,
        moving_czachor: (k * c + s) / (two * (T::one() + k * k).sqrt()),
    }
}

/// The same four numbers from `⟨ψ|S|ψ⟩` on |+⟩ and its boosted image.
pub fn single_particle_oracle<T: Real>(
    boost: &BoostParameters<T>,
    particle: &ParticleKinematics<T>,
) -> Result<SpinExpectations<T>> {
    let a = stern_gerlach_direction();
    let half = T::lit(0.5);
    let lab_state = SpinState::up();
    let moving_state = boost_single(&lab_state, boost, particle);
    let spin = |family: OperatorFamily<T>, state: &SpinState<T>| -> Result<T> {
        expectation(state.amplitudes(), &family.observable(&a)?.scale(half))
    };
    Ok(SpinExpectations {
        lab_pauli: spin(OperatorFamily::Pauli, &lab_state)?,
        moving_pauli: spin(OperatorFamily::Pauli, &moving_state)?,
        lab_czachor: spin(
            OperatorFamily::czachor_x(BoostParameters::rest()),
            &lab_state,
        )?,
        moving_czachor: spin(OperatorFamily::czachor_x(*boost), &moving_state)?,
    })
}
