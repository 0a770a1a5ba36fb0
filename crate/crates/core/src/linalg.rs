//! Fixed-size complex kernel for two- and four-level systems.
//!
//! Only sizes 2 and 4 are ever used. Four-level objects live in the
//! product basis `(++, +−, −+, −−)`: the first particle is the slow index.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Complex column vector of fixed length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector<T, const N: usize>(pub(crate) [Complex<T>; N]);

/// Complex square matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix<T, const N: usize>(pub(crate) [[Complex<T>; N]; N]);

pub type Vector2<T> = Vector<T, 2>;
pub type Vector4<T> = Vector<T, 4>;
pub type Matrix2<T> = Matrix<T, 2>;
pub type Matrix4<T> = Matrix<T, 4>;

#[inline]
fn c<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

fn finite<T: Real>(z: &Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

impl<T: Real, const N: usize> Vector<T, N> {
    pub fn new(amplitudes: [Complex<T>; N]) -> Result<Self> {
        if amplitudes.iter().all(finite) {
            Ok(Self(amplitudes))
        } else {
            Err(Error::NonFinite {
                context: "vector amplitudes",
            })
        }
    }

    /// Build from real amplitudes.
    pub fn from_real(amplitudes: [T; N]) -> Result<Self> {
        Self::new(amplitudes.map(|x| c(x, T::zero())))
    }

    pub fn amplitudes(&self) -> &[Complex<T>; N] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Complex<T> {
        self.0[i]
    }

    /// Hermitian inner product `⟨self|other⟩` (conjugate-linear in `self`).
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.0
            .iter()
            .zip(other.0.iter())
            .fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| {
                acc + a.conj() * b
            })
    }

    pub fn norm_sqr(&self) -> T {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn scale(&self, k: Complex<T>) -> Self {
        Self(self.0.map(|z| z * k))
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }
}

impl<T: Real, const N: usize> Add for Vector<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] + rhs.0[i]))
    }
}

impl<T: Real, const N: usize> Sub for Vector<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] - rhs.0[i]))
    }
}

impl<T: Real, const N: usize> Matrix<T, N> {
    pub fn new(rows: [[Complex<T>; N]; N]) -> Result<Self> {
        if rows.iter().flatten().all(finite) {
            Ok(Self(rows))
        } else {
            Err(Error::NonFinite {
                context: "matrix entries",
            })
        }
    }

    pub(crate) fn from_fn(mut f: impl FnMut(usize, usize) -> Complex<T>) -> Self {
        Self(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn zero() -> Self {
        Self::from_fn(|_, _| Complex::new(T::zero(), T::zero()))
    }

    pub fn identity() -> Self {
        Self::from_fn(|i, j| {
            if i == j {
                c(T::one(), T::zero())
            } else {
                c(T::zero(), T::zero())
            }
        })
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex<T> {
        self.0[row][col]
    }

    pub fn rows(&self) -> &[[Complex<T>; N]; N] {
        &self.0
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn trace(&self) -> Complex<T> {
        (0..N).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self.0[i][i]
        })
    }

    pub fn scale(&self, k: T) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * k)
    }

    pub fn scale_complex(&self, k: Complex<T>) -> Self {
        Self::from_fn(|i, j| self.0[i][j] * k)
    }

    pub fn apply(&self, v: &Vector<T, N>) -> Vector<T, N> {
        Vector(std::array::from_fn(|i| {
            (0..N).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.0[i][k] * v.0[k]
            })
        }))
    }

    /// Largest entrywise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .map(|(a, b)| (a - b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn hermiticity_defect(&self) -> T {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: T) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `max |M†M − I|`.
    pub fn unitarity_defect(&self) -> T {
        (self.adjoint() * *self).max_abs_diff(&Self::identity())
    }

    pub fn is_unitary(&self, tol: T) -> bool {
        self.unitarity_defect() <= tol
    }

    /// Unitary conjugation `U M U†`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        *u * *self * u.adjoint()
    }
}

impl<T: Real, const N: usize> Add for Matrix<T, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] + rhs.0[i][j])
    }
}

impl<T: Real, const N: usize> Sub for Matrix<T, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| self.0[i][j] - rhs.0[i][j])
    }
}

impl<T: Real, const N: usize> Neg for Matrix<T, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|i, j| -self.0[i][j])
    }
}

impl<T: Real, const N: usize> Mul for Matrix<T, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|i, j| {
            (0..N).fold(Complex::new(T::zero(), T::zero()), |acc, k| {
                acc + self.0[i][k] * rhs.0[k][j]
            })
        })
    }
}

impl<T: Real> Matrix2<T> {
    pub fn sigma_x() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self([[c(o, o), c(l, o)], [c(l, o), c(o, o)]])
    }

    pub fn sigma_y() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self([[c(o, o), c(o, -l)], [c(o, l), c(o, o)]])
    }

    pub fn sigma_z() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self([[c(l, o), c(o, o)], [c(o, o), c(-l, o)]])
    }

    /// `x σ_x + y σ_y + z σ_z` for arbitrary real components.
    pub fn pauli_combination(x: T, y: T, z: T) -> Self {
        Self([[c(z, T::zero()), c(x, -y)], [c(x, y), c(-z, T::zero())]])
    }
}

/// Tensor product `a ⊗ b`; `a` acts on the first (slow) index.
pub fn kron<T: Real>(a: &Matrix2<T>, b: &Matrix2<T>) -> Matrix4<T> {
    Matrix::from_fn(|i, j| a.0[i / 2][j / 2] * b.0[i % 2][j % 2])
}

pub fn kron_vec<T: Real>(a: &Vector2<T>, b: &Vector2<T>) -> Vector4<T> {
    Vector(std::array::from_fn(|i| a.0[i / 2] * b.0[i % 2]))
}

/// `⟨ψ|M|ψ⟩` for a normalized `ψ` and Hermitian `M`.
///
/// The imaginary part is checked against the tolerance and then dropped.
pub fn expectation<T: Real, const N: usize>(state: &Vector<T, N>, obs: &Matrix<T, N>) -> Result<T> {
    let tol = T::tolerance();
    let defect = obs.hermiticity_defect();
    if !(defect <= tol) {
        return Err(Error::NonHermitianObservable {
            deviation: defect.to_f64_lossy(),
        });
    }
    let norm_sq = state.norm_sqr();
    if !((norm_sq - T::one()).abs() <= tol) {
        return Err(Error::NotNormalized {
            norm_sq: norm_sq.to_f64_lossy(),
        });
    }
    let value = state.inner(&obs.apply(state));
    if !(value.im.abs() < tol) {
        return Err(Error::ImaginaryResidue {
            residue: value.im.to_f64_lossy(),
        });
    }
    Ok(value.re)
}

/// Closed-form eigenvalues of a 2×2 Hermitian matrix, largest first.
pub fn eigenvalues2<T: Real>(obs: &Matrix2<T>) -> Result<(T, T)> {
    let defect = obs.hermiticity_defect();
    if !(defect <= T::tolerance()) {
        return Err(Error::NonHermitianObservable {
            deviation: defect.to_f64_lossy(),
        });
    }
    let two = T::lit(2.0);
    let a = obs.0[0][0].re;
    let d = obs.0[1][1].re;
    let mean = (a + d) / two;
    let radius = ((a - d) / two).hypot(obs.0[0][1].norm());
    Ok((mean + radius, mean - radius))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type M2 = Matrix2<f64>;

    fn cx(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn up() -> Vector2<f64> {
        Vector::from_real([1.0, 0.0]).unwrap()
    }

    #[test]
    fn kron_identity_and_zz() {
        assert_eq!(kron(&M2::identity(), &M2::identity()), Matrix4::identity());
        let zz = kron(&M2::sigma_z(), &M2::sigma_z());
        let expected = [1.0, -1.0, -1.0, 1.0];
        for (i, e) in expected.iter().enumerate() {
            for j in 0..4 {
                let want = if i == j { *e } else { 0.0 };
                assert_eq!(zz.entry(i, j), cx(want, 0.0));
            }
        }
    }

    #[test]
    fn kron_xy_is_anti_diagonal() {
        // σ_x ⊗ σ_y = [[0, σ_y], [σ_y, 0]]; expanding the blocks gives the
        // anti-diagonal (row 0..3) = (−i, i, −i, i).
        let xy = kron(&M2::sigma_x(), &M2::sigma_y());
        let anti = [cx(0.0, -1.0), cx(0.0, 1.0), cx(0.0, -1.0), cx(0.0, 1.0)];
        for (i, a) in anti.iter().enumerate() {
            for j in 0..4 {
                let want = if i + j == 3 { *a } else { cx(0.0, 0.0) };
                assert_eq!(xy.entry(i, j), want, "entry ({i},{j})");
            }
        }
    }

    #[test]
    fn expectation_examples() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        assert!((expectation(&up(), &M2::sigma_z()).unwrap() - 1.0).abs() < 1e-15);
        assert!(expectation(&up(), &M2::sigma_x()).unwrap().abs() < 1e-15);
        let plus_x = Vector::from_real([h, h]).unwrap();
        assert!((expectation(&plus_x, &M2::sigma_x()).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn expectation_rejects_non_hermitian() {
        let m = M2::new([[cx(1.0, 0.0), cx(1.0, 0.0)], [cx(0.0, 0.0), cx(1.0, 0.0)]]).unwrap();
        assert!(matches!(
            expectation(&up(), &m),
            Err(Error::NonHermitianObservable { .. })
        ));
        assert!(matches!(
            eigenvalues2(&m),
            Err(Error::NonHermitianObservable { .. })
        ));
    }

    #[test]
    fn expectation_rejects_unnormalized() {
        let v = Vector::from_real([1.0, 1.0]).unwrap();
        assert!(matches!(
            expectation(&v, &M2::sigma_z()),
            Err(Error::NotNormalized { .. })
        ));
    }

    #[test]
    fn constructors_reject_non_finite() {
        assert!(Vector::<f64, 2>::from_real([f64::NAN, 0.0]).is_err());
        assert!(M2::new([
            [cx(f64::INFINITY, 0.0), cx(0.0, 0.0)],
            [cx(0.0, 0.0), cx(0.0, 0.0)]
        ])
        .is_err());
    }

    #[test]
    fn eigenvalue_examples() {
        let (hi, lo) = eigenvalues2(&M2::sigma_z()).unwrap();
        assert_eq!((hi, lo), (1.0, -1.0));
        assert_eq!(eigenvalues2(&M2::identity()).unwrap(), (1.0, 1.0));
        // (σ_x + σ_z)/√2: λ² − 1 = 0.
        let m = (M2::sigma_x() + M2::sigma_z()).scale(std::f64::consts::FRAC_1_SQRT_2);
        let (hi, lo) = eigenvalues2(&m).unwrap();
        assert!((hi - 1.0).abs() < 1e-12 && (lo + 1.0).abs() < 1e-12);
    }

    #[test]
    fn works_in_single_precision() {
        let m = kron(&Matrix2::<f32>::sigma_x(), &Matrix2::<f32>::sigma_x());
        let phi = Vector::<f32, 4>::from_real([0.5f32.sqrt(), 0.0, 0.0, 0.5f32.sqrt()]).unwrap();
        assert!((expectation(&phi, &m).unwrap() - 1.0).abs() < 1e-6);
    }

    fn hermitian2() -> impl Strategy<Value = M2> {
        (-2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, d, re, im)| {
            M2::new([[cx(a, 0.0), cx(re, im)], [cx(re, -im), cx(d, 0.0)]]).unwrap()
        })
    }

    fn su2() -> impl Strategy<Value = M2> {
        (
            0.0..std::f64::consts::TAU,
            0.0..std::f64::consts::TAU,
            0.0..std::f64::consts::TAU,
        )
            .prop_map(|(a, b, t)| {
                let (ea, eb) = (Complex::from_polar(1.0, a), Complex::from_polar(1.0, b));
                let (ct, st) = ((t / 2.0).cos(), (t / 2.0).sin());
                M2::new([[ea * ct, -eb.conj() * st], [eb * st, ea.conj() * ct]]).unwrap()
            })
    }

    fn operand() -> impl Strategy<Value = M2> {
        prop_oneof![hermitian2(), su2()]
    }

    fn unit_state4() -> impl Strategy<Value = Vector4<f64>> {
        proptest::array::uniform8(-1.0..1.0f64)
            .prop_filter("nonzero", |a| a.iter().map(|x| x * x).sum::<f64>() > 1e-3)
            .prop_map(|a| {
                let n = a.iter().map(|x| x * x).sum::<f64>().sqrt();
                Vector::new(std::array::from_fn(|i| cx(a[2 * i] / n, a[2 * i + 1] / n))).unwrap()
            })
    }

    proptest! {
        #[test]
        fn kron_mixed_product(a in operand(), b in operand(), cm in operand(), d in operand()) {
            let lhs = kron(&a, &b) * kron(&cm, &d);
            let rhs = kron(&(a * cm), &(b * d));
            prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
        }

        #[test]
        fn kron_is_bilinear(a in hermitian2(), b in hermitian2(), cm in hermitian2(), k in -3.0..3.0f64) {
            let left = kron(&(a + cm.scale(k)), &b);
            let split = kron(&a, &b) + kron(&cm, &b).scale(k);
            prop_assert!(left.max_abs_diff(&split) < 1e-12);
            let right = kron(&b, &(a + cm.scale(k)));
            let split = kron(&b, &a) + kron(&b, &cm).scale(k);
            prop_assert!(right.max_abs_diff(&split) < 1e-12);
        }

        #[test]
        fn identity_expectation_is_one(psi in unit_state4()) {
            prop_assert!((expectation(&psi, &Matrix4::identity()).unwrap() - 1.0).abs() < 1e-12);
        }

        #[test]
        fn unit_pauli_combination_has_unit_spectrum(theta in 0.0..std::f64::consts::PI, phi in 0.0..std::f64::consts::TAU) {
            let m = M2::pauli_combination(theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos());
            let (hi, lo) = eigenvalues2(&m).unwrap();
            prop_assert!((hi - 1.0).abs() < 1e-12);
            prop_assert!((lo + 1.0).abs() < 1e-12);
        }
    }
}
