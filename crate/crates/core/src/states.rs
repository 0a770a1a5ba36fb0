//! Spin states and how they transform under the observer boost.
//!
//! Momenta are sharp and carried as metadata only: one particle moves along
//! +z, and in pair states the second moves along −z with the same |p|.
//! The observer boost is along x̂.

use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kinematics::{wigner_angle, BoostParameters, ParticleKinematics, WignerAngle};
use crate::linalg::{kron, Matrix2, Vector2, Vector4};
use crate::scalar::Real;

fn check_norm<T: Real, const N: usize>(v: &crate::linalg::Vector<T, N>) -> Result<()> {
    let n = v.norm_sqr();
    if (n - T::one()).abs() <= T::tolerance() {
        Ok(())
    } else {
        Err(Error::NotNormalized {
            norm_sq: n.to_f64_lossy(),
        })
    }
}

/// Normalized single-particle spin state in the z basis `(+, −)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinState<T>(Vector2<T>);

impl<T: Real> SpinState<T> {
    pub fn new(amplitudes: Vector2<T>) -> Result<Self> {
        check_norm(&amplitudes)?;
        Ok(Self(amplitudes))
    }

    pub fn up() -> Self {
        Self(Vector2::from_real([T::one(), T::zero()]).expect("finite"))
    }

    pub fn down() -> Self {
        Self(Vector2::from_real([T::zero(), T::one()]).expect("finite"))
    }

    pub fn amplitudes(&self) -> &Vector2<T> {
        &self.0
    }

    pub fn fidelity(&self, other: &Self) -> T {
        self.0.inner(&other.0).norm_sqr()
    }
}

/// Frame a pair state is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "frame", rename_all = "kebab-case")]
pub enum Frame<T> {
    Lab,
    /// Seen by an observer boosted along x̂ at speed `beta`; particles carry
    /// energy factor `gamma`; `omega` is the resulting Wigner angle.
    Boosted {
        beta: T,
        gamma: T,
        omega: T,
    },
    /// Rotated by an explicit Wigner angle without named kinematics.
    Rotated {
        omega: T,
    },
}

impl<T: Real> Frame<T> {
    pub fn beta(&self) -> T {
        match self {
            Self::Boosted { beta, .. } => *beta,
            _ => T::zero(),
        }
    }

    pub fn gamma(&self) -> Option<T> {
        match self {
            Self::Boosted { gamma, .. } => Some(*gamma),
            _ => None,
        }
    }

    pub fn omega(&self) -> T {
        match self {
            Self::Lab => T::zero(),
            Self::Boosted { omega, .. } | Self::Rotated { omega } => *omega,
        }
    }
}

/// Normalized two-particle spin state in the basis `(++, +−, −+, −−)`,
/// first particle moving along +z and the second along −z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairState<T> {
    amplitudes: Vector4<T>,
    frame: Frame<T>,
}

impl<T: Real> PairState<T> {
    pub fn new(amplitudes: Vector4<T>) -> Result<Self> {
        check_norm(&amplitudes)?;
        Ok(Self {
            amplitudes,
            frame: Frame::Lab,
        })
    }

    pub fn amplitudes(&self) -> &Vector4<T> {
        &self.amplitudes
    }

    pub fn frame(&self) -> &Frame<T> {
        &self.frame
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum BellStateKind {
    /// `(|++⟩ + |−−⟩)/√2`
    PhiPlus,
    /// `(|++⟩ − |−−⟩)/√2`
    PhiMinus,
    /// `(|+−⟩ + |−+⟩)/√2`
    PsiPlus,
    /// `(|+−⟩ − |−+⟩)/√2`
    PsiMinus,
}

impl BellStateKind {
    pub const ALL: [Self; 4] = [Self::PhiPlus, Self::PhiMinus, Self::PsiPlus, Self::PsiMinus];
}

pub fn bell_state<T: Real>(kind: BellStateKind) -> PairState<T> {
    let h = T::FRAC_1_SQRT_2();
    let o = T::zero();
    let amps = match kind {
        BellStateKind::PhiPlus => [h, o, o, h],
        BellStateKind::PhiMinus => [h, o, o, -h],
        BellStateKind::PsiPlus => [o, h, h, o],
        BellStateKind::PsiMinus => [o, h, -h, o],
    };
    PairState {
        amplitudes: Vector4::from_real(amps).expect("finite"),
        frame: Frame::Lab,
    }
}

/// Spin-1/2 Wigner rotation `cos(Ω/2) I − i sin(Ω/2) σ_y`, a real rotation
/// `[[cos, −sin], [sin, cos]]` of half the angle.
pub fn wigner_rotation<T: Real>(omega: T) -> Matrix2<T> {
    let half = omega / T::lit(2.0);
    let (s, c) = half.sin_cos();
    let z = T::zero();
    Matrix2::new([
        [Complex::new(c, z), Complex::new(-s, z)],
        [Complex::new(s, z), Complex::new(c, z)],
    ])
    .expect("finite angle")
}

/// Two-particle transform `D(+Ω) ⊗ D(−Ω)`: the particle moving along −z
/// picks up the opposite Wigner angle.
pub fn pair_rotation<T: Real>(omega: T) -> crate::linalg::Matrix4<T> {
    kron(&wigner_rotation(omega), &wigner_rotation(-omega))
}

/// Spin state seen by the boosted observer for a particle moving along +z.
pub fn boost_single<T: Real>(
    state: &SpinState<T>,
    boost: &BoostParameters<T>,
    particle: &ParticleKinematics<T>,
) -> SpinState<T> {
    rotate_single(state, wigner_angle(boost, particle))
}

pub fn rotate_single<T: Real>(state: &SpinState<T>, omega: WignerAngle<T>) -> SpinState<T> {
    SpinState(wigner_rotation(omega.radians()).apply(&state.0))
}

/// Pair state seen by the boosted observer.
pub fn boost_pair<T: Real>(
    state: &PairState<T>,
    boost: &BoostParameters<T>,
    particle: &ParticleKinematics<T>,
) -> PairState<T> {
    let omega = wigner_angle(boost, particle).radians();
    PairState {
        amplitudes: pair_rotation(omega).apply(&state.amplitudes),
        frame: Frame::Boosted {
            beta: boost.beta(),
            gamma: particle.gamma(),
            omega,
        },
    }
}

/// [`boost_pair`] driven directly by a Wigner angle, for probing limits
/// such as `Ω → π/2`.
pub fn rotate_pair<T: Real>(state: &PairState<T>, omega: WignerAngle<T>) -> PairState<T> {
    let omega = omega.radians();
    PairState {
        amplitudes: pair_rotation(omega).apply(&state.amplitudes),
        frame: Frame::Rotated { omega },
    }
}

/// `|⟨s1|s2⟩|²`.
pub fn fidelity<T: Real>(s1: &PairState<T>, s2: &PairState<T>) -> T {
    s1.amplitudes.inner(&s2.amplitudes).norm_sqr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix2;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2 as H, FRAC_PI_2, PI};

    fn boost(beta: f64) -> BoostParameters<f64> {
        BoostParameters::from_speed(beta).unwrap()
    }

    fn particle(gamma: f64) -> ParticleKinematics<f64> {
        ParticleKinematics::from_gamma(gamma).unwrap()
    }

    fn real4(v: [f64; 4]) -> Vector4<f64> {
        Vector4::from_real(v).unwrap()
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(wigner_rotation(0.0), Matrix2::identity());
        let half_turn = wigner_rotation(PI);
        let minus_i_sigma_y = Matrix2::sigma_y().scale_complex(Complex::new(0.0, -1.0));
        assert!(half_turn.max_abs_diff(&minus_i_sigma_y) < 1e-15);
        let up = SpinState::up();
        let flipped = rotate_single(&up, WignerAngle::from_radians(PI));
        assert!((flipped.fidelity(&SpinState::down()) - 1.0).abs() < 1e-15);
        let quarter = rotate_single(&up, WignerAngle::from_radians(FRAC_PI_2));
        let want = Vector2::from_real([H, H]).unwrap();
        assert!(quarter.amplitudes().max_abs_diff(&want) < 1e-15);
    }

    #[test]
    fn single_basis_transforms_with_fixed_phases() {
        let (b, p) = (boost(0.7), particle(4.0));
        let omega = wigner_angle(&b, &p).radians();
        let (s, c) = (omega / 2.0).sin_cos();
        let plus = boost_single(&SpinState::up(), &b, &p);
        let minus = boost_single(&SpinState::down(), &b, &p);
        assert!(
            plus.amplitudes()
                .max_abs_diff(&Vector2::from_real([c, s]).unwrap())
                < 1e-15
        );
        assert!(
            minus
                .amplitudes()
                .max_abs_diff(&Vector2::from_real([-s, c]).unwrap())
                < 1e-15
        );
    }

    #[test]
    fn single_limits() {
        let up = SpinState::up();
        assert_eq!(boost_single(&up, &boost(0.0), &particle(7.0)), up);
        let low = boost_single(&up, &BoostParameters::limit(), &particle(1.0));
        assert!((low.fidelity(&up) - 1.0).abs() < 1e-15);
        let high = boost_single(&up, &BoostParameters::limit(), &particle(1e12));
        let diag = SpinState::new(Vector2::from_real([H, H]).unwrap()).unwrap();
        assert!((high.fidelity(&diag) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn bell_state_examples() {
        assert_eq!(
            *bell_state::<f64>(BellStateKind::PhiPlus).amplitudes(),
            real4([H, 0.0, 0.0, H])
        );
        assert_eq!(
            *bell_state::<f64>(BellStateKind::PsiPlus).amplitudes(),
            real4([0.0, H, H, 0.0])
        );
        assert_eq!(
            *bell_state::<f64>(BellStateKind::PsiMinus).amplitudes(),
            real4([0.0, H, -H, 0.0])
        );
        for a in BellStateKind::ALL {
            for b in BellStateKind::ALL {
                let f = fidelity(&bell_state::<f64>(a), &bell_state(b));
                let want = if a == b { 1.0 } else { 0.0 };
                assert!((f - want).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn boosted_phi_plus_mixes_into_singlet() {
        let phi = bell_state::<f64>(BellStateKind::PhiPlus);
        assert_eq!(
            boost_pair(&phi, &boost(0.0), &particle(3.0)).amplitudes(),
            phi.amplitudes()
        );

        let (b, p) = (boost(0.8), particle(3.0));
        let omega = wigner_angle(&b, &p).radians();
        let out = boost_pair(&phi, &b, &p);
        let (s, c) = omega.sin_cos();
        let want = real4([c * H, -s * H, s * H, c * H]);
        assert!(out.amplitudes().max_abs_diff(&want) < 1e-15);
        assert_eq!(out.frame().gamma(), Some(3.0));

        let high = rotate_pair(&phi, WignerAngle::from_radians(FRAC_PI_2));
        assert!(high.amplitudes().max_abs_diff(&real4([0.0, -H, H, 0.0])) < 1e-15);

        let psi_minus = bell_state(BellStateKind::PsiMinus);
        assert!((fidelity(&out, &phi) - omega.cos().powi(2)).abs() < 1e-15);
        assert!((fidelity(&out, &psi_minus) - omega.sin().powi(2)).abs() < 1e-15);
    }

    #[test]
    fn same_sign_angles_do_not_reproduce_the_pair_law() {
        // D(+Ω) ⊗ D(+Ω) is the wrong assignment for counter-propagating
        // particles; it must not give cos Ω Φ+ − sin Ω Ψ−.
        let phi = bell_state::<f64>(BellStateKind::PhiPlus);
        for omega in [0.1, 0.5, 1.2] {
            let wrong =
                kron(&wigner_rotation(omega), &wigner_rotation(omega)).apply(phi.amplitudes());
            let right = pair_rotation(omega).apply(phi.amplitudes());
            let (s, c) = f64::sin_cos(omega);
            let law = real4([c * H, -s * H, s * H, c * H]);
            assert!(right.max_abs_diff(&law) < 1e-15);
            assert!(wrong.max_abs_diff(&law) > 1e-3);
        }
    }

    #[test]
    fn psi_plus_is_invariant() {
        let psi = bell_state::<f64>(BellStateKind::PsiPlus);
        for beta in [0.0, 0.3, 0.9, 0.999] {
            for gamma in [1.0, 2.0, 20.0] {
                let out = boost_pair(&psi, &boost(beta), &particle(gamma));
                assert!((fidelity(&out, &psi) - 1.0).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn constructors_check_normalization() {
        assert!(SpinState::new(Vector2::from_real([1.0, 1.0]).unwrap()).is_err());
        assert!(PairState::new(real4([1.0, 0.0, 0.0, 1.0])).is_err());
        assert!(PairState::new(real4([0.6, 0.0, 0.0, 0.8])).is_ok());
    }

    proptest! {
        #[test]
        fn rotations_compose(a in -10.0..10.0f64, b in -10.0..10.0f64) {
            let lhs = wigner_rotation(a) * wigner_rotation(b);
            prop_assert!(lhs.max_abs_diff(&wigner_rotation(a + b)) < 1e-12);
            prop_assert!(wigner_rotation(a).is_unitary(1e-12));
        }

        #[test]
        fn boosts_preserve_norm(beta in 0.0..0.999_999f64, gamma in 1.0..1e6f64, re in -1.0..1.0f64, im in -1.0..1.0f64) {
            let (b, p) = (boost(beta), particle(gamma));
            let n = (1.0 + re * re + im * im).sqrt();
            let amps = Vector2::new([Complex::new(1.0 / n, 0.0), Complex::new(re / n, im / n)]).unwrap();
            let single = boost_single(&SpinState::new(amps).unwrap(), &b, &p);
            prop_assert!((single.amplitudes().norm_sqr() - 1.0).abs() < 1e-12);
            for kind in BellStateKind::ALL {
                let pair = boost_pair(&bell_state(kind), &b, &p);
                prop_assert!((pair.amplitudes().norm_sqr() - 1.0).abs() < 1e-12);
            }
        }
    }
}
