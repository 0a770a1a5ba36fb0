//! Boost and particle rapidities and the Wigner angle for a boost along x
//! acting on a particle moving along z.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Speed used to probe `β → 1` limits.
pub const LIMIT_BETA: f64 = 1.0 - 1e-9;

/// Observer boost along x̂: speed `beta` (units of c) and rapidity `alpha`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoostParameters<T> {
    beta: T,
    alpha: T,
}

impl<T: Real> BoostParameters<T> {
    pub fn from_speed(beta: T) -> Result<Self> {
        if !(beta >= T::zero() && beta < T::one()) {
            return Err(Error::SpeedOutOfRange {
                beta: beta.to_f64_lossy(),
            });
        }
        Ok(Self {
            beta,
            alpha: beta.atanh(),
        })
    }

    pub fn from_rapidity(alpha: T) -> Result<Self> {
        if !(alpha >= T::zero() && alpha.is_finite()) {
            return Err(Error::RapidityOutOfRange {
                rapidity: alpha.to_f64_lossy(),
            });
        }
        let beta = alpha.tanh();
        if beta >= T::one() {
            return Err(Error::SpeedOutOfRange {
                beta: beta.to_f64_lossy(),
            });
        }
        Ok(Self { beta, alpha })
    }

    /// The lab frame itself.
    pub fn rest() -> Self {
        Self {
            beta: T::zero(),
            alpha: T::zero(),
        }
    }

    /// Boost at [`LIMIT_BETA`].
    pub fn limit() -> Self {
        Self::from_speed(T::lit(LIMIT_BETA)).expect("limit speed is below 1")
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }

    /// `√(1−β²)`, evaluated as `√((1−β)(1+β))` to keep precision near β = 1.
    pub fn contraction(&self) -> T {
        ((T::one() - self.beta) * (T::one() + self.beta)).sqrt()
    }

    /// Lorentz factor, `cosh α`.
    pub fn gamma(&self) -> T {
        self.contraction().recip()
    }
}

/// Particle energy in the lab frame. `gamma = p₀/m = cosh δ`, lab speed
/// `beta1 = tanh δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParticleKinematics<T> {
    gamma: T,
    beta1: T,
    delta: T,
}

impl<T: Real> ParticleKinematics<T> {
    pub fn from_gamma(gamma: T) -> Result<Self> {
        if !(gamma >= T::one() && gamma.is_finite()) {
            return Err(Error::EnergyOutOfRange {
                gamma: gamma.to_f64_lossy(),
            });
        }
        let beta1 = ((gamma - T::one()) * (gamma + T::one())).sqrt() / gamma;
        Ok(Self {
            gamma,
            beta1,
            delta: gamma.acosh(),
        })
    }

    pub fn from_speed(beta1: T) -> Result<Self> {
        if !(beta1 >= T::zero() && beta1 < T::one()) {
            return Err(Error::SpeedOutOfRange {
                beta: beta1.to_f64_lossy(),
            });
        }
        let gamma = ((T::one() - beta1) * (T::one() + beta1)).sqrt().recip();
        Ok(Self {
            gamma,
            beta1,
            delta: beta1.atanh(),
        })
    }

    pub fn from_rapidity(delta: T) -> Result<Self> {
        if !(delta >= T::zero() && delta.is_finite()) {
            return Err(Error::RapidityOutOfRange {
                rapidity: delta.to_f64_lossy(),
            });
        }
        let gamma = delta.cosh();
        if !gamma.is_finite() {
            return Err(Error::EnergyOutOfRange {
                gamma: gamma.to_f64_lossy(),
            });
        }
        Ok(Self {
            gamma,
            beta1: delta.tanh(),
            delta,
        })
    }

    pub fn at_rest() -> Self {
        Self {
            gamma: T::one(),
            beta1: T::zero(),
            delta: T::zero(),
        }
    }

    pub fn gamma(&self) -> T {
        self.gamma
    }

    pub fn beta1(&self) -> T {
        self.beta1
    }

    pub fn delta(&self) -> T {
        self.delta
    }
}

/// Wigner rotation angle in radians.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct WignerAngle<T>(T);

impl<T: Real> WignerAngle<T> {
    /// Wrap an arbitrary angle. Angles produced by [`wigner_angle`] lie in
    /// `[0, π/2)`; this constructor does not enforce that.
    pub fn from_radians(omega: T) -> Self {
        Self(omega)
    }

    pub fn radians(&self) -> T {
        self.0
    }
}

/// `tan Ω = sinh α sinh δ / (cosh α + cosh δ)`.
///
/// Evaluated as `β β₁ / (1/γ + 1/Γ)` (numerator and denominator divided by
/// `cosh α cosh δ`), which never overflows.
pub fn wigner_angle<T: Real>(
    boost: &BoostParameters<T>,
    particle: &ParticleKinematics<T>,
) -> WignerAngle<T> {
    let num = boost.beta() * particle.beta1();
    let den = boost.contraction() + particle.gamma().recip();
    WignerAngle(num.atan2(den))
}

/// Large-boost limit of `sin(Ω/2)`: `√((Γ−1)/(2Γ))`.
pub fn asymptotic_half_angle<T: Real>(particle: &ParticleKinematics<T>) -> T {
    let g = particle.gamma();
    ((g - T::one()) / (T::lit(2.0) * g)).sqrt()
}

type Lorentz<T> = [[T; 4]; 4];

fn lorentz_mul<T: Real>(a: &Lorentz<T>, b: &Lorentz<T>) -> Lorentz<T> {
    std::array::from_fn(|i| std::array::from_fn(|j| (0..4).map(|k| a[i][k] * b[k][j]).sum()))
}

/// Pure boost along a spatial axis (1 = x, 3 = z) with Lorentz factor
/// `gamma` and `βγ = gamma_beta`.
fn axis_boost<T: Real>(axis: usize, gamma: T, gamma_beta: T) -> Lorentz<T> {
    let mut m: Lorentz<T> =
        std::array::from_fn(|i| std::array::from_fn(|j| if i == j { T::one() } else { T::zero() }));
    m[0][0] = gamma;
    m[axis][axis] = gamma;
    m[0][axis] = gamma_beta;
    m[axis][0] = gamma_beta;
    m
}

/// Symmetric boost taking the rest four-velocity to `u` (and its inverse).
fn pure_boost_to<T: Real>(u: [T; 4], inverse: bool) -> Lorentz<T> {
    let g = u[0];
    let sign = if inverse { -T::one() } else { T::one() };
    std::array::from_fn(|i| {
        std::array::from_fn(|j| match (i, j) {
            (0, 0) => g,
            (0, k) | (k, 0) => sign * u[k],
            (a, b) => {
                let delta = if a == b { T::one() } else { T::zero() };
                delta + u[a] * u[b] / (T::one() + g)
            }
        })
    })
}

/// Independent route to the Wigner angle: compose the 4×4 Lorentz matrices
/// `Λ_x(α) · L_z(δ)`, split off the pure boost that carries the rest frame to
/// the same four-velocity, and read the angle of the remaining rotation
/// about y.
pub fn wigner_angle_oracle<T: Real>(
    boost: &BoostParameters<T>,
    particle: &ParticleKinematics<T>,
) -> Result<WignerAngle<T>> {
    let gb = boost.gamma();
    let lambda = axis_boost(1, gb, boost.beta() * gb);
    let g = particle.gamma();
    let lift = axis_boost(3, g, particle.beta1() * g);
    let composed = lorentz_mul(&lambda, &lift);

    let u = [
        composed[0][0],
        composed[1][0],
        composed[2][0],
        composed[3][0],
    ];
    let rotation = lorentz_mul(&pure_boost_to(u, true), &composed);

    // Everything except the x–z block must be the identity.
    let off_block = [
        (rotation[0][0] - T::one()).abs(),
        (rotation[2][2] - T::one()).abs(),
        rotation[0][1].abs(),
        rotation[0][2].abs(),
        rotation[0][3].abs(),
        rotation[1][0].abs(),
        rotation[2][0].abs(),
        rotation[3][0].abs(),
        rotation[1][2].abs(),
        rotation[2][1].abs(),
        rotation[2][3].abs(),
        rotation[3][2].abs(),
        (rotation[1][1] - rotation[3][3]).abs(),
        (rotation[1][3] + rotation[3][1]).abs(),
    ];
    let residual = off_block.into_iter().fold(T::zero(), T::max);
    let scale = T::one().max(gb * g * gb * g);
    if !(residual <= T::epsilon().sqrt() * scale) {
        return Err(Error::DecompositionFailure {
            residual: residual.to_f64_lossy(),
        });
    }
    // R_y(Ω) has R[x][z] = sin Ω, R[x][x] = cos Ω.
    Ok(WignerAngle(rotation[1][3].atan2(rotation[1][1])))
}
