//! `2x2` complex matrices, the Pauli basis and the SU(2) -> SO(3) covering map.
//!
//! Generators follow the physics convention `J_i = σ_i / 2` (Hermitian), so
//! `[J_i, J_j] = i ε_ijk J_k`.

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::vec3::{self, CVec3, Vec3};
use crate::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// A complex `2x2` matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "wire::MatrixJson", into = "wire::MatrixJson")]
pub struct ComplexMatrix2 {
    pub entries: [[Complex64; 2]; 2],
}

impl ComplexMatrix2 {
    pub const fn new(entries: [[Complex64; 2]; 2]) -> Self {
        Self { entries }
    }

    /// Builds a matrix, rejecting NaN or infinite entries.
    pub fn try_new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let m = Self { entries };
        m.ensure_finite()?;
        Ok(m)
    }

    pub fn from_real(re: [[f64; 2]; 2]) -> Self {
        Self::from_parts(re, [[0.0; 2]; 2])
    }

    pub fn from_parts(re: [[f64; 2]; 2], im: [[f64; 2]; 2]) -> Self {
        let e = |r: usize, c: usize| Complex64::new(re[r][c], im[r][c]);
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }

    pub const fn zero() -> Self {
        Self::new([[ZERO, ZERO], [ZERO, ZERO]])
    }

    pub const fn identity() -> Self {
        Self::new([[ONE, ZERO], [ZERO, ONE]])
    }

    pub const fn sigma_x() -> Self {
        Self::new([[ZERO, ONE], [ONE, ZERO]])
    }

    pub const fn sigma_y() -> Self {
        Self::new([[ZERO, Complex64::new(0.0, -1.0)], [I, ZERO]])
    }

    pub const fn sigma_z() -> Self {
        Self::new([[ONE, ZERO], [ZERO, Complex64::new(-1.0, 0.0)]])
    }

    /// Pauli matrix `σ_{i+1}` for `i` in `0..3`.
    pub fn pauli(i: usize) -> Self {
        match i {
            0 => Self::sigma_x(),
            1 => Self::sigma_y(),
            2 => Self::sigma_z(),
            _ => panic!("Pauli index {i} out of range"),
        }
    }

    /// Spin-1/2 generator `J_{i+1} = σ_{i+1} / 2`.
    pub fn generator(i: usize) -> Self {
        Self::pauli(i).scale(0.5.into())
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.entries[r][c]
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.map(|z| s * z)
    }

    fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let e = &self.entries;
        Self::new([[f(e[0][0]), f(e[0][1])], [f(e[1][0]), f(e[1][1])]])
    }

    fn zip(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        Self::new([
            [f(a[0][0], b[0][0]), f(a[0][1], b[0][1])],
            [f(a[1][0], b[1][0]), f(a[1][1], b[1][1])],
        ])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let e = &self.entries;
        Self::new([
            [e[0][0].conj(), e[1][0].conj()],
            [e[0][1].conj(), e[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> Complex64 {
        self.entries[0][0] + self.entries[1][1]
    }

    pub fn det(&self) -> Complex64 {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }

    /// Inverse via the adjugate; `None` when the determinant vanishes.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm() == 0.0 || !d.is_finite() {
            return None;
        }
        let e = &self.entries;
        let inv_d = d.inv();
        Some(Self::new([
            [e[1][1] * inv_d, -e[0][1] * inv_d],
            [-e[1][0] * inv_d, e[0][0] * inv_d],
        ]))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    /// Max-norm over entries, `max |m_rc|`.
    pub fn max_norm(&self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .map(|z| z.norm())
            .fold(0.0, f64::max)
    }

    /// Max-norm distance to `other`.
    pub fn distance(&self, other: &Self) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.distance(other) <= tol
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().flatten().all(|z| z.is_finite())
    }

    pub(crate) fn ensure_finite(&self) -> Result<()> {
        if self.is_finite() {
            Ok(())
        } else {
            Err(Error::NonFinite("matrix entries"))
        }
    }

    pub fn hermiticity_deviation(&self) -> f64 {
        self.distance(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_deviation() <= tol
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (*self * self.adjoint()).approx_eq(&Self::identity(), tol)
    }

    pub fn is_traceless(&self, tol: f64) -> bool {
        self.trace().norm() <= tol
    }

    pub fn is_su2_element(&self, tol: f64) -> bool {
        self.is_unitary(tol) && (self.det() - ONE).norm() <= tol
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Complex64; 2]) -> [Complex64; 2] {
        let e = &self.entries;
        [
            e[0][0] * v[0] + e[0][1] * v[1],
            e[1][0] * v[0] + e[1][1] * v[1],
        ]
    }

    /// Outer product `|a⟩⟨b|`.
    pub fn outer(a: &[Complex64; 2], b: &[Complex64; 2]) -> Self {
        Self::new([
            [a[0] * b[0].conj(), a[0] * b[1].conj()],
            [a[1] * b[0].conj(), a[1] * b[1].conj()],
        ])
    }

    /// Returns an error when the matrix is not Hermitian within a tolerance
    /// relative to its size.
    pub(crate) fn ensure_hermitian(&self) -> Result<()> {
        self.ensure_finite()?;
        let deviation = self.hermiticity_deviation();
        if deviation <= crate::DEFAULT_TOL * self.max_norm().max(1.0) {
            Ok(())
        } else {
            Err(Error::NotHermitian { deviation })
        }
    }

    pub(crate) fn ensure_su2(&self) -> Result<()> {
        self.ensure_finite()?;
        let unitarity = (*self * self.adjoint()).distance(&Self::identity());
        let deviation = unitarity.max((self.det() - ONE).norm());
        if deviation <= 1e-10 {
            Ok(())
        } else {
            Err(Error::NotSu2 { deviation })
        }
    }
}

impl Add for ComplexMatrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a + b)
    }
}

impl Sub for ComplexMatrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.zip(&rhs, |a, b| a - b)
    }
}

impl Neg for ComplexMatrix2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl Mul for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b) = (&self.entries, &rhs.entries);
        let e = |r: usize, c: usize| a[r][0] * b[0][c] + a[r][1] * b[1][c];
        Self::new([[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]])
    }
}

impl Mul<ComplexMatrix2> for Complex64 {
    type Output = ComplexMatrix2;
    fn mul(self, rhs: ComplexMatrix2) -> ComplexMatrix2 {
        rhs.scale(self)
    }
}

/// Coefficients of `a0·1 + a·σ`. Also read as the complexified quaternion
/// `a0 + i a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "wire::CoefficientsJson", into = "wire::CoefficientsJson")]
pub struct PauliCoefficients {
    pub a0: Complex64,
    pub a: CVec3,
}

impl PauliCoefficients {
    pub const fn new(a0: Complex64, a: CVec3) -> Self {
        Self { a0, a }
    }

    pub fn real(a0: f64, a: Vec3) -> Self {
        Self::new(a0.into(), vec3::complexify(&a))
    }

    /// True when every coefficient has zero imaginary part within `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.a0.im.abs() <= tol && self.a.iter().all(|z| z.im.abs() <= tol)
    }

    pub fn max_norm(&self) -> f64 {
        self.a
            .iter()
            .map(|z| z.norm())
            .fold(self.a0.norm(), f64::max)
    }
}

pub fn pauli_decompose(m: &ComplexMatrix2) -> Result<PauliCoefficients> {
    m.ensure_finite()?;
    Ok(decompose_unchecked(m))
}

pub(crate) fn decompose_unchecked(m: &ComplexMatrix2) -> PauliCoefficients {
    let e = &m.entries;
    let half = 0.5;
    PauliCoefficients::new(
        (e[0][0] + e[1][1]) * half,
        [
            (e[0][1] + e[1][0]) * half,
            I * (e[0][1] - e[1][0]) * half,
            (e[0][0] - e[1][1]) * half,
        ],
    )
}

pub fn pauli_compose(c: &PauliCoefficients) -> ComplexMatrix2 {
    let [a1, a2, a3] = c.a;
    ComplexMatrix2::new([[c.a0 + a3, a1 - I * a2], [a1 + I * a2, c.a0 - a3]])
}

/// `κ(X, Y) = -2 tr(XY)`, evaluated literally.
///
/// With Hermitian generators this gives `κ(J_i, J_i) = -1`; see
/// [`su2_coordinates`] for the positive Euclidean norm used on orbits.
pub fn killing_form(x: &ComplexMatrix2, y: &ComplexMatrix2) -> Complex64 {
    -2.0 * (*x * *y).trace()
}

/// Real coordinates `x_i` of `X = x_i J_i` (traceless Hermitian part).
pub fn su2_coordinates(x: &ComplexMatrix2) -> Vec3 {
    let c = decompose_unchecked(x);
    [2.0 * c.a[0].re, 2.0 * c.a[1].re, 2.0 * c.a[2].re]
}

/// Euclidean length of the su(2) coordinate vector of `X`.
pub fn euclidean_norm(x: &ComplexMatrix2) -> f64 {
    vec3::norm(&su2_coordinates(x))
}

/// `Ad_g(X) = g X g⁻¹`.
pub fn adjoint_action(g: &ComplexMatrix2, x: &ComplexMatrix2) -> Result<ComplexMatrix2> {
    g.ensure_su2()?;
    x.ensure_finite()?;
    Ok(*g * *x * g.adjoint())
}

/// SO(3) image of `g`, defined by `Ad_g(J_j) = Σ_i R_ij J_i`.
pub fn rotation_of(g: &ComplexMatrix2) -> Result<RotationMatrix3> {
    g.ensure_su2()?;
    let gd = g.adjoint();
    let mut m = [[0.0; 3]; 3];
    for j in 0..3 {
        let image = *g * ComplexMatrix2::pauli(j) * gd;
        let c = decompose_unchecked(&image);
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = c.a[i].re;
        }
    }
    Ok(RotationMatrix3 { entries: m })
}

/// `exp(-i H t / ħ)` in closed form for Hermitian `H = h0 + h·σ`.
pub fn exp_su2(h: &ComplexMatrix2, t: f64, hbar: f64) -> Result<ComplexMatrix2> {
    h.ensure_hermitian()?;
    if !(t.is_finite() && hbar.is_finite()) || hbar == 0.0 {
        return Err(Error::InvalidArgument(format!(
            "time {t} and hbar {hbar} must be finite with hbar != 0"
        )));
    }
    let c = decompose_unchecked(h);
    let s = t / hbar;
    let h0 = c.a0.re;
    let hv = [c.a[0].re, c.a[1].re, c.a[2].re];
    let (cos, sin_over_norm) = rodrigues_terms(vec3::norm(&hv), s);
    let phase = Complex64::from_polar(1.0, -h0 * s);
    let vector = vec3::complexify(&vec3::scale(-sin_over_norm, &hv)).map(|z| I * z);
    Ok(pauli_compose(&PauliCoefficients::new(cos.into(), vector)).scale(phase))
}

/// Returns `(cos(|h| s), sin(|h| s)/|h|)`, using the analytic limit `s` for the
/// second term when `|h| s` is below `1e-12`.
pub(crate) fn rodrigues_terms(norm: f64, s: f64) -> (f64, f64) {
    let angle = norm * s;
    if angle.abs() < 1e-12 {
        (angle.cos(), s)
    } else {
        (angle.cos(), angle.sin() / norm)
    }
}

/// `exp(-iσ_z φ/2) exp(-iσ_y θ/2) exp(-iσ_z Φ/2)`, the ZYZ rotation taking the
/// north pole to the point with polar angle `θ` and azimuth `φ`.
///
/// Angles are used as given; the result is periodic with period `4π` in `φ`
/// and `Φ`.
pub fn euler_rotation(phi: f64, theta: f64, psi: f64) -> ComplexMatrix2 {
    z_rotation(phi) * y_rotation(theta) * z_rotation(psi)
}

fn z_rotation(angle: f64) -> ComplexMatrix2 {
    ComplexMatrix2::new([
        [Complex64::from_polar(1.0, -angle / 2.0), ZERO],
        [ZERO, Complex64::from_polar(1.0, angle / 2.0)],
    ])
}

fn y_rotation(angle: f64) -> ComplexMatrix2 {
    let (s, c) = (angle / 2.0).sin_cos();
    ComplexMatrix2::from_real([[c, -s], [s, c]])
}

/// A real `3x3` matrix, intended to be a proper rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationMatrix3 {
    pub entries: [[f64; 3]; 3],
}

impl RotationMatrix3 {
    pub fn identity() -> Self {
        let mut entries = [[0.0; 3]; 3];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = 1.0;
        }
        Self { entries }
    }

    pub fn apply(&self, v: &Vec3) -> Vec3 {
        let m = &self.entries;
        [
            vec3::dot(&m[0], v),
            vec3::dot(&m[1], v),
            vec3::dot(&m[2], v),
        ]
    }

    pub fn transpose(&self) -> Self {
        let m = &self.entries;
        let mut t = [[0.0; 3]; 3];
        for (i, row) in t.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = m[j][i];
            }
        }
        Self { entries: t }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let (a, b) = (&self.entries, &other.entries);
        let mut c = [[0.0; 3]; 3];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = (0..3).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        Self { entries: c }
    }

    pub fn det(&self) -> f64 {
        let m = &self.entries;
        vec3::dot(&m[0], &vec3::cross(&m[1], &m[2]))
    }

    pub fn distance(&self, other: &Self) -> f64 {
        self.entries
            .iter()
            .flatten()
            .zip(other.entries.iter().flatten())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Max-norm of `RᵀR - 1`.
    pub fn orthogonality_deviation(&self) -> f64 {
        self.transpose().compose(self).distance(&Self::identity())
    }

    pub fn is_rotation(&self, tol: f64) -> bool {
        self.orthogonality_deviation() <= tol && (self.det() - 1.0).abs() <= tol
    }
}

pub(crate) mod wire {
    use num_complex::Complex64;
    use serde::{Deserialize, Serialize};

    use super::{ComplexMatrix2, PauliCoefficients};
    use crate::Error;

    #[derive(Debug, Clone, Copy, Serialize, Deserialize)]
    pub struct ComplexJson {
        pub re: f64,
        pub im: f64,
    }

    impl From<Complex64> for ComplexJson {
        fn from(z: Complex64) -> Self {
            Self { re: z.re, im: z.im }
        }
    }

    impl From<ComplexJson> for Complex64 {
        fn from(z: ComplexJson) -> Self {
            Complex64::new(z.re, z.im)
        }
    }

    #[derive(Debug, Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct MatrixJson {
        pub re: [[f64; 2]; 2],
        pub im: [[f64; 2]; 2],
    }

    impl TryFrom<MatrixJson> for ComplexMatrix2 {
        type Error = Error;
        fn try_from(m: MatrixJson) -> Result<Self, Error> {
            let out = ComplexMatrix2::from_parts(m.re, m.im);
            out.ensure_finite()?;
            Ok(out)
        }
    }

    impl From<ComplexMatrix2> for MatrixJson {
        fn from(m: ComplexMatrix2) -> Self {
            let e = &m.entries;
            Self {
                re: [[e[0][0].re, e[0][1].re], [e[1][0].re, e[1][1].re]],
                im: [[e[0][0].im, e[0][1].im], [e[1][0].im, e[1][1].im]],
            }
        }
    }

    #[derive(Debug, Clone, Serialize, Deserialize)]
    #[serde(deny_unknown_fields)]
    pub struct CoefficientsJson {
        pub a0: ComplexJson,
        pub a: [ComplexJson; 3],
    }

    impl From<CoefficientsJson> for PauliCoefficients {
        fn from(c: CoefficientsJson) -> Self {
            PauliCoefficients::new(c.a0.into(), c.a.map(Into::into))
        }
    }

    impl From<PauliCoefficients> for CoefficientsJson {
        fn from(c: PauliCoefficients) -> Self {
            Self {
                a0: c.a0.into(),
                a: c.a.map(Into::into),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn decompose_basis_elements() {
        let z = pauli_decompose(&ComplexMatrix2::sigma_z()).unwrap();
        assert_eq!(z, PauliCoefficients::real(0.0, [0.0, 0.0, 1.0]));
        let one = pauli_decompose(&ComplexMatrix2::identity()).unwrap();
        assert_eq!(one, PauliCoefficients::real(1.0, [0.0; 3]));
    }

    #[test]
    fn decompose_hadamard_like() {
        // tr(M σ_i)/2 by hand: (0, (1, 0, 1)).
        let m = ComplexMatrix2::from_real([[1.0, 1.0], [1.0, -1.0]]);
        let d = pauli_decompose(&m).unwrap();
        assert_eq!(d, PauliCoefficients::real(0.0, [1.0, 0.0, 1.0]));
    }

    #[test]
    fn decompose_rejects_nan() {
        let m = ComplexMatrix2::from_real([[f64::NAN, 0.0], [0.0, 1.0]]);
        assert_eq!(pauli_decompose(&m), Err(Error::NonFinite("matrix entries")));
    }

    #[test]
    fn compose_complex_vector() {
        // σ_x + i σ_y = [[0, 2], [0, 0]]
        let m = pauli_compose(&PauliCoefficients::new(
            c(0.0, 0.0),
            [c(1.0, 0.0), c(0.0, 1.0), c(0.0, 0.0)],
        ));
        assert_eq!(m, ComplexMatrix2::from_real([[0.0, 2.0], [0.0, 0.0]]));
        assert_eq!(
            pauli_compose(&PauliCoefficients::real(1.0, [0.0; 3])),
            ComplexMatrix2::identity()
        );
    }

    #[test]
    fn killing_form_values() {
        let j1 = ComplexMatrix2::generator(0);
        let j2 = ComplexMatrix2::generator(1);
        assert!((killing_form(&j1, &j1) - c(-1.0, 0.0)).norm() < 1e-15);
        assert_eq!(killing_form(&j1, &j2), c(0.0, 0.0));
        assert_eq!(killing_form(&ComplexMatrix2::zero(), &j2), c(0.0, 0.0));
        assert!((euclidean_norm(&j1) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn generator_commutators() {
        for i in 0..3 {
            for j in 0..3 {
                let lhs = ComplexMatrix2::generator(i).commutator(&ComplexMatrix2::generator(j));
                let mut rhs = ComplexMatrix2::zero();
                for k in 0..3 {
                    rhs = rhs + ComplexMatrix2::generator(k).scale(I * vec3::levi_civita(i, j, k));
                }
                assert_eq!(lhs, rhs, "[J{i}, J{j}]");
            }
        }
    }

    #[test]
    fn quarter_turn_about_z_maps_j1_to_j2() {
        let g = euler_rotation(PI / 2.0, 0.0, 0.0);
        let image = adjoint_action(&g, &ComplexMatrix2::generator(0)).unwrap();
        assert!(image.approx_eq(&ComplexMatrix2::generator(1), 1e-15));
        assert_eq!(
            adjoint_action(&ComplexMatrix2::identity(), &ComplexMatrix2::sigma_y()).unwrap(),
            ComplexMatrix2::sigma_y()
        );
    }

    #[test]
    fn adjoint_action_rejects_non_unitary() {
        let g = ComplexMatrix2::from_real([[2.0, 0.0], [0.0, 0.5]]);
        assert!(matches!(
            adjoint_action(&g, &ComplexMatrix2::sigma_x()),
            Err(Error::NotSu2 { .. })
        ));
    }

    #[test]
    fn double_cover_kernel() {
        assert_eq!(
            rotation_of(&ComplexMatrix2::identity()).unwrap(),
            RotationMatrix3::identity()
        );
        let minus = -ComplexMatrix2::identity();
        assert_eq!(rotation_of(&minus).unwrap(), RotationMatrix3::identity());
    }

    #[test]
    fn exp_at_zero_time_is_identity() {
        let h = ComplexMatrix2::from_real([[0.3, 1.2], [1.2, -0.7]]);
        assert_eq!(exp_su2(&h, 0.0, 1.0).unwrap(), ComplexMatrix2::identity());
    }

    #[test]
    fn exp_of_pi_sigma_x_is_minus_identity() {
        // eigenvalues ±1 of σ_x, so exp(-iπσ_x) = e^{∓iπ} on both eigenvectors = -1.
        let u = exp_su2(&ComplexMatrix2::sigma_x(), PI, 1.0).unwrap();
        assert!(u.approx_eq(&-ComplexMatrix2::identity(), 1e-15));
    }

    #[test]
    fn exp_small_field_limit() {
        let h = ComplexMatrix2::from_real([[2.0, 1e-20], [1e-20, 2.0]]);
        let u = exp_su2(&h, 1.0, 1.0).unwrap();
        let phase = Complex64::from_polar(1.0, -2.0);
        assert!(u.approx_eq(&ComplexMatrix2::identity().scale(phase), 1e-15));
        // linear term survives below the switching threshold
        let h = ComplexMatrix2::sigma_z().scale(1e-14.into());
        let u = exp_su2(&h, 1.0, 1.0).unwrap();
        assert!((u.get(0, 0) - c(1.0, -1e-14)).norm() < 1e-28);
    }

    #[test]
    fn exp_rejects_non_hermitian() {
        let h = ComplexMatrix2::from_real([[0.0, 1.0], [0.0, 0.0]]);
        assert!(matches!(
            exp_su2(&h, 1.0, 1.0),
            Err(Error::NotHermitian { .. })
        ));
    }

    #[test]
    fn euler_rotation_values() {
        assert!(euler_rotation(0.0, 0.0, 0.0).approx_eq(&ComplexMatrix2::identity(), 0.0));
        let u = euler_rotation(0.0, PI, 0.0);
        assert!(u.approx_eq(&ComplexMatrix2::from_real([[0.0, -1.0], [1.0, 0.0]]), 1e-16));
    }

    #[test]
    fn predicates() {
        assert!(ComplexMatrix2::sigma_y().is_hermitian(0.0));
        assert!(ComplexMatrix2::sigma_y().is_traceless(0.0));
        assert!(!ComplexMatrix2::sigma_y().is_su2_element(1e-12));
        assert!(euler_rotation(0.3, 1.1, 2.0).is_su2_element(1e-14));
    }

    #[test]
    fn json_shapes() {
        let m = ComplexMatrix2::sigma_y();
        let js = serde_json::to_value(m).unwrap();
        assert_eq!(
            js,
            serde_json::json!({"re": [[0.0, 0.0], [0.0, 0.0]], "im": [[0.0, -1.0], [1.0, 0.0]]})
        );
        let back: ComplexMatrix2 = serde_json::from_value(js).unwrap();
        assert_eq!(back, m);

        let p = PauliCoefficients::new(c(1.0, 2.0), [c(0.0, 1.0), c(3.0, 0.0), c(0.0, 0.0)]);
        let js = serde_json::to_value(p).unwrap();
        assert_eq!(js["a0"], serde_json::json!({"re": 1.0, "im": 2.0}));
        assert_eq!(js["a"][1], serde_json::json!({"re": 3.0, "im": 0.0}));
        assert_eq!(serde_json::from_value::<PauliCoefficients>(js).unwrap(), p);
    }
}
