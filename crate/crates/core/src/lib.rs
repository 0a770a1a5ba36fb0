//! Relativistic spin-1/2 toolkit: Wigner rotations of one- and two-particle
//! spin states under a boost perpendicular to the particle momenta, spin and
//! CHSH expectation values under the Pauli and Czachor operator families,
//! and an audit of the closed-form results against dense matrix algebra.
//!
//! Everything numeric is generic over [`Real`] (`f32` or `f64`); the
//! `*F64` aliases below name the double-precision instantiations used by the
//! scan and report machinery. Units: `c = ħ = 1`.

// `!(x <= tol)` is used throughout so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod bell;
pub mod emit;
pub mod error;
pub mod kinematics;
pub mod linalg;
pub mod report;
pub mod scalar;
pub mod scan;
pub mod spin;
pub mod states;

pub use bell::{
    bell_operator, chsh_oracle, closed_form_bc_phi, closed_form_bc_psi, closed_form_bl_phi,
    single_particle_oracle, single_particle_report, ChshResult, MeasurementQuadruple,
    SpinExpectations,
};
pub use error::{Error, Result};
pub use kinematics::{
    asymptotic_half_angle, wigner_angle, wigner_angle_oracle, BoostParameters, ParticleKinematics,
    WignerAngle, LIMIT_BETA,
};
pub use linalg::{eigenvalues2, expectation, kron, Matrix2, Matrix4, Vector2, Vector4};
pub use report::{consistency_report, ConsistencyReport};
pub use scalar::Real;
pub use scan::{run_scan, ScanConfig, ScanRow};
pub use spin::{
    czachor_along, czachor_eigenvalues, pauli_along, spin_along, Direction, OperatorFamily,
};
pub use states::{
    bell_state, boost_pair, boost_single, fidelity, rotate_pair, wigner_rotation, BellStateKind,
    PairState, SpinState,
};

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Matrix2F64 = Matrix2<f64>;
pub type Matrix4F64 = Matrix4<f64>;
pub type Vector2F64 = Vector2<f64>;
pub type Vector4F64 = Vector4<f64>;
pub type BoostF64 = BoostParameters<f64>;
pub type ParticleF64 = ParticleKinematics<f64>;
pub type WignerAngleF64 = WignerAngle<f64>;
pub type DirectionF64 = Direction<f64>;
pub type FamilyF64 = OperatorFamily<f64>;
pub type QuadrupleF64 = MeasurementQuadruple<f64>;
pub type SpinStateF64 = SpinState<f64>;
pub type PairStateF64 = PairState<f64>;

pub type BoostF32 = BoostParameters<f32>;
pub type ParticleF32 = ParticleKinematics<f32>;
pub type DirectionF32 = Direction<f32>;
pub type PairStateF32 = PairState<f32>;
