//! Stratonovich-Weyl correspondence for a qubit.
//!
//! The kernel `Δ(n) = (1 + √3 n·σ)/2` sends an operator `A = a0 + a·σ` to the
//! affine function `W_A(n) = tr(A Δ(n)) = a0 + √3 a·n`. The inverse is
//! `A = ∫ W_A Δ dΩ`.

use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::orbit::PhasePoint;
use crate::quadrature::{integrate, QuadratureRule};
use crate::sampling;
use crate::su2::{
    self, euler_rotation, pauli_compose, rotation_of, ComplexMatrix2, PauliCoefficients,
};
use crate::vec3::{self, CVec3, Vec3};
use crate::{Error, Result};

pub(crate) const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Phase-space function `W(n) = c0 + √3 c·n`, stored by its coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "PauliCoefficients", into = "PauliCoefficients")]
pub struct Symbol {
    pub c0: Complex64,
    pub c: CVec3,
}

impl Symbol {
    pub const fn new(c0: Complex64, c: CVec3) -> Self {
        Self { c0, c }
    }

    pub fn real(c0: f64, c: Vec3) -> Self {
        Self::new(c0.into(), vec3::complexify(&c))
    }

    pub fn zero() -> Self {
        Self::real(0.0, [0.0; 3])
    }

    /// The constant function 1, identity of the star product.
    pub fn one() -> Self {
        Self::real(1.0, [0.0; 3])
    }

    pub fn constant(c0: Complex64) -> Self {
        Self::new(c0, vec3::CZERO)
    }

    pub fn coefficients(&self) -> PauliCoefficients {
        PauliCoefficients::new(self.c0, self.c)
    }

    /// The operator this symbol represents.
    pub fn operator(&self) -> ComplexMatrix2 {
        pauli_compose(&self.coefficients())
    }

    pub fn eval(&self, p: &PhasePoint) -> Complex64 {
        symbol_eval(self, p)
    }

    pub fn is_real(&self, tol: f64) -> bool {
        self.coefficients().is_real(tol)
    }

    /// Largest coefficient modulus.
    pub fn max_norm(&self) -> f64 {
        self.coefficients().max_norm()
    }

    pub fn distance(&self, other: &Symbol) -> f64 {
        (*self - *other).max_norm()
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(s * self.c0, vec3::cscale(s, &self.c))
    }
}

impl From<PauliCoefficients> for Symbol {
    fn from(p: PauliCoefficients) -> Self {
        Symbol::new(p.a0, p.a)
    }
}

impl From<Symbol> for PauliCoefficients {
    fn from(s: Symbol) -> Self {
        s.coefficients()
    }
}

impl Add for Symbol {
    type Output = Symbol;
    fn add(self, rhs: Symbol) -> Symbol {
        Symbol::new(self.c0 + rhs.c0, vec3::cadd(&self.c, &rhs.c))
    }
}

impl Sub for Symbol {
    type Output = Symbol;
    fn sub(self, rhs: Symbol) -> Symbol {
        Symbol::new(self.c0 - rhs.c0, vec3::csub(&self.c, &rhs.c))
    }
}

impl Mul<Symbol> for Complex64 {
    type Output = Symbol;
    fn mul(self, rhs: Symbol) -> Symbol {
        rhs.scale(self)
    }
}

/// `Δ(n) = (1 + √3 n·σ)/2`.
pub fn sw_kernel(p: &PhasePoint) -> ComplexMatrix2 {
    let n = p.n();
    pauli_compose(&PauliCoefficients::real(0.5, vec3::scale(0.5 * SQRT3, &n)))
}

/// `Π = 1 + √3 σ_z`.
pub fn parity_operator() -> ComplexMatrix2 {
    ComplexMatrix2::identity() + ComplexMatrix2::sigma_z().scale(SQRT3.into())
}

/// `Δ = U Π U† / 2` with `U = euler_rotation(φ, θ, Φ)`; independent of `Φ`.
pub fn kernel_from_rotation(phi: f64, theta: f64, psi: f64) -> ComplexMatrix2 {
    let u = euler_rotation(phi, theta, psi);
    (u * parity_operator() * u.adjoint()).scale(0.5.into())
}

/// `W_A(n) = tr(A Δ(n))`, stored as `(a0, a)` from the Pauli decomposition.
pub fn symbol_of(a: &ComplexMatrix2) -> Result<Symbol> {
    Ok(su2::pauli_decompose(a)?.into())
}

/// `c0 + √3 c·n(p)`.
pub fn symbol_eval(w: &Symbol, p: &PhasePoint) -> Complex64 {
    w.c0 + vec3::cdot_real(&w.c, &p.n()) * SQRT3
}

/// `∫ W(p) Δ(p) dΩ` by quadrature. Exact whenever the rule integrates
/// quadratics in `n` exactly; coarser rules lose accuracy silently.
pub fn reconstruct(w: &Symbol, rule: &QuadratureRule) -> ComplexMatrix2 {
    rule.iter()
        .fold(ComplexMatrix2::zero(), |acc, (p, weight)| {
            acc + sw_kernel(p).scale(symbol_eval(w, p) * weight)
        })
}

/// Maximum deviations observed for each Stratonovich-Weyl postulate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    /// `‖reconstruct(symbol_of(A)) − A‖`.
    pub bijection: f64,
    /// `‖Δ − Δ†‖` and `|Im W_A|` for Hermitian `A`.
    pub hermiticity: f64,
    /// `‖∫Δ dΩ − 1‖` and `|∫W_A dΩ − tr A|`.
    pub standardization: f64,
    /// `|∫W_A W_B dΩ − tr(AB)|`.
    pub traciality: f64,
    /// `‖Δ(R(g)n) − g Δ(n) g†‖`.
    pub covariance: f64,
}

/// One line of an [`AxiomReport`] judged against a tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub max_dev: f64,
    pub tol: f64,
    pub pass: bool,
}

impl AxiomReport {
    pub fn entries(&self) -> [(&'static str, f64); 5] {
        [
            ("bijection", self.bijection),
            ("hermiticity", self.hermiticity),
            ("standardization", self.standardization),
            ("traciality", self.traciality),
            ("covariance", self.covariance),
        ]
    }

    pub fn worst(&self) -> f64 {
        self.entries().iter().map(|e| e.1).fold(0.0, f64::max)
    }

    pub fn verdicts(&self, tol: f64) -> Vec<(&'static str, AxiomVerdict)> {
        self.entries()
            .into_iter()
            .map(|(name, max_dev)| {
                (
                    name,
                    AxiomVerdict {
                        max_dev,
                        tol,
                        pass: max_dev <= tol,
                    },
                )
            })
            .collect()
    }

    /// Names of axioms whose deviation exceeds `tol`.
    pub fn failures(&self, tol: f64) -> Vec<&'static str> {
        self.verdicts(tol)
            .into_iter()
            .filter(|(_, v)| !v.pass)
            .map(|(name, _)| name)
            .collect()
    }
}

/// Checks the five postulates on `samples` seeded random draws of operators,
/// phase points and Haar-random group elements.
pub fn check_axioms(samples: usize, rule: &QuadratureRule, seed: u64) -> Result<AxiomReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument(
            "check_axioms needs at least one sample".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let identity = ComplexMatrix2::identity();
    let mut report = AxiomReport {
        bijection: 0.0,
        hermiticity: 0.0,
        standardization: reconstruct(&Symbol::one(), rule).distance(&identity),
        traciality: 0.0,
        covariance: 0.0,
    };
    let kernel_mass = rule.iter().fold(ComplexMatrix2::zero(), |acc, (p, w)| {
        acc + sw_kernel(p).scale(w.into())
    });
    report.standardization = report.standardization.max(kernel_mass.distance(&identity));

    for _ in 0..samples {
        let a = sampling::random_operator(&mut rng);
        let b = sampling::random_operator(&mut rng);
        let h = sampling::random_hermitian(&mut rng);
        let p = sampling::random_point(&mut rng);
        let g = sampling::random_su2(&mut rng);

        let wa = symbol_of(&a)?;
        let wb = symbol_of(&b)?;
        let wh = symbol_of(&h)?;

        report.bijection = report.bijection.max(reconstruct(&wa, rule).distance(&a));

        let kernel = sw_kernel(&p);
        let herm = kernel
            .hermiticity_deviation()
            .max(symbol_eval(&wh, &p).im.abs());
        report.hermiticity = report.hermiticity.max(herm);

        let mass = integrate(|q| symbol_eval(&wa, q), rule);
        report.standardization = report.standardization.max((mass - a.trace()).norm());

        let pairing = integrate(|q| symbol_eval(&wa, q) * symbol_eval(&wb, q), rule);
        report.traciality = report.traciality.max((pairing - (a * b).trace()).norm());

        let rotated = PhasePoint::from_vector(&rotation_of(&g)?.apply(&p.n()))?;
        let moved = g * kernel * g.adjoint();
        report.covariance = report.covariance.max(sw_kernel(&rotated).distance(&moved));
    }
    Ok(report)
}
