//! Direction-dependent spin observables: the Pauli family `n̂·σ` and the
//! boost-dependent Czachor family.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kinematics::BoostParameters;
use crate::linalg::{eigenvalues2, Matrix2};
use crate::scalar::Real;

/// Unit 3-vector. Inputs are normalized on construction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Direction<T> {
    x: T,
    y: T,
    z: T,
}

impl<T: Real> Direction<T> {
    pub fn new(x: T, y: T, z: T) -> Result<Self> {
        if !(x.is_finite() && y.is_finite() && z.is_finite()) {
            return Err(Error::NonFinite {
                context: "direction components",
            });
        }
        let norm = (x * x + y * y + z * z).sqrt();
        if norm == T::zero() {
            return Err(Error::ZeroDirection);
        }
        Ok(Self {
            x: x / norm,
            y: y / norm,
            z: z / norm,
        })
    }

    pub fn x_hat() -> Self {
        Self {
            x: T::one(),
            y: T::zero(),
            z: T::zero(),
        }
    }

    pub fn y_hat() -> Self {
        Self {
            x: T::zero(),
            y: T::one(),
            z: T::zero(),
        }
    }

    pub fn z_hat() -> Self {
        Self {
            x: T::zero(),
            y: T::zero(),
            z: T::one(),
        }
    }

    pub fn components(&self) -> [T; 3] {
        [self.x, self.y, self.z]
    }

    pub fn dot(&self, other: &Self) -> T {
        self.x * other.x + self.y * other.y + self.z * other.z
    }
}

/// Which spin-operator construction an observer uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum OperatorFamily<T> {
    Pauli,
    /// Czachor operator for an observer boosted by `boost` along `axis`.
    Czachor {
        boost: BoostParameters<T>,
        axis: Direction<T>,
    },
}

impl<T: Real> OperatorFamily<T> {
    /// Czachor family for a boost along x̂.
    pub fn czachor_x(boost: BoostParameters<T>) -> Self {
        Self::Czachor {
            boost,
            axis: Direction::x_hat(),
        }
    }

    /// The observable this family assigns to a measurement along `dir`.
    pub fn observable(&self, dir: &Direction<T>) -> Result<Matrix2<T>> {
        match self {
            Self::Pauli => Ok(pauli_along(dir)),
            Self::Czachor { boost, axis } => czachor_along(dir, boost, axis),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Pauli => "pauli",
            Self::Czachor { .. } => "czachor",
        }
    }
}

/// `A·σ`.
pub fn pauli_along<T: Real>(dir: &Direction<T>) -> Matrix2<T> {
    Matrix2::pauli_combination(dir.x, dir.y, dir.z)
}

/// Spin `S = (1/2) A·σ` in units of ħ.
pub fn spin_along<T: Real>(dir: &Direction<T>) -> Matrix2<T> {
    pauli_along(dir).scale(T::lit(0.5))
}

/// Numerator vector `√(1−β²) A_⊥ + A_∥` and normalization
/// `√(1 + β²[(ê·A)² − 1])` of the Czachor operator.
fn czachor_parts<T: Real>(
    dir: &Direction<T>,
    boost: &BoostParameters<T>,
    axis: &Direction<T>,
) -> Result<([T; 3], T)> {
    let along = axis.dot(dir);
    let a = dir.components();
    let e = axis.components();
    let parallel: [T; 3] = std::array::from_fn(|i| along * e[i]);
    let contraction = boost.contraction();
    let numerator: [T; 3] =
        std::array::from_fn(|i| contraction * (a[i] - parallel[i]) + parallel[i]);
    let beta = boost.beta();
    // 1 + β²[(ê·A)² − 1] rewritten as (1−β²) + β²(ê·A)² so that 1−β² is
    // never formed by cancellation.
    let norm = (contraction * contraction + beta * beta * along * along).sqrt();
    if !(norm.is_finite() && norm > T::zero() && numerator.iter().all(|v| v.is_finite())) {
        return Err(Error::NonFinite {
            context: "Czachor operator",
        });
    }
    Ok((numerator, norm))
}

/// Czachor spin operator along `dir` for an observer boosted along `axis`:
///
/// ```text
/// Â = (√(1−β²) A_⊥ + A_∥)·σ / √(1 + β²[(ê·A)² − 1])
/// ```
///
/// Equals `pauli_along(dir)` when β = 0 or when `dir` is parallel or
/// perpendicular to the boost axis.
pub fn czachor_along<T: Real>(
    dir: &Direction<T>,
    boost: &BoostParameters<T>,
    axis: &Direction<T>,
) -> Result<Matrix2<T>> {
    let (v, norm) = czachor_parts(dir, boost, axis)?;
    Ok(Matrix2::pauli_combination(
        v[0] / norm,
        v[1] / norm,
        v[2] / norm,
    ))
}

/// Spectrum of the Czachor operator, computed numerically, next to the
/// analytic ratio `|numerator| / normalization`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CzachorSpectrum<T> {
    pub eigenvalues: (T, T),
    pub analytic_ratio: T,
}

/// For sharp momentum and unit `A`, `|√(1−β²)A_⊥ + A_∥|² = 1 + β²[(ê·A)²−1]`
/// holds identically, so the eigenvalues come out as exactly ±1 (±ħ/2 for
/// the spin). Both numbers are reported so the claim can be audited.
pub fn czachor_eigenvalues<T: Real>(
    dir: &Direction<T>,
    boost: &BoostParameters<T>,
    axis: &Direction<T>,
) -> Result<CzachorSpectrum<T>> {
    let (v, norm) = czachor_parts(dir, boost, axis)?;
    let magnitude = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    let eigenvalues = eigenvalues2(&czachor_along(dir, boost, axis)?)?;
    Ok(CzachorSpectrum {
        eigenvalues,
        analytic_ratio: magnitude / norm,
    })
}
