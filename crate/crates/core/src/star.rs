//! The exact star product on affine symbols and its exponentials.
//!
//! For `W_A = a0 + √3 a·n` and `W_B = b0 + √3 b·n`,
//!
//! ```text
//! W_A ⋆ W_B = (a0 b0 + a·b) + √3 (a0 b + b0 a + i a×b)·n = W_{AB}
//! ```
//!
//! which is the product of complexified quaternions `q_A = a0 + i a`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::su2::rodrigues_terms;
use crate::vec3::{self, CVec3};
use crate::weyl::Symbol;
use crate::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Default truncation tolerance for [`star_exponential_series`].
pub const DEFAULT_SERIES_TOL: f64 = 1e-12;
/// Default term cap for [`star_exponential_series`].
pub const DEFAULT_MAX_TERMS: usize = 200;

pub fn star(wa: &Symbol, wb: &Symbol) -> Symbol {
    let c0 = wa.c0 * wb.c0 + vec3::cdot(&wa.c, &wb.c);
    let cross = vec3::ccross(&wa.c, &wb.c);
    let c = [
        wa.c0 * wb.c[0] + wb.c0 * wa.c[0] + I * cross[0],
        wa.c0 * wb.c[1] + wb.c0 * wa.c[1] + I * cross[1],
        wa.c0 * wb.c[2] + wb.c0 * wa.c[2] + I * cross[2],
    ];
    Symbol::new(c0, c)
}

/// `{W_A, W_B}_M = W_A ⋆ W_B − W_B ⋆ W_A`, whose only non-zero part is the
/// vector coefficient `2i a×b`.
pub fn moyal_bracket(wa: &Symbol, wb: &Symbol) -> Symbol {
    let cross = vec3::ccross(&wa.c, &wb.c);
    Symbol::new(Complex64::new(0.0, 0.0), vec3::cscale(2.0 * I, &cross))
}

/// Quaternion `w + x i + y j + z k` with complex components.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexQuaternion {
    pub scalar: Complex64,
    pub vector: CVec3,
}

impl ComplexQuaternion {
    pub const fn new(scalar: Complex64, vector: CVec3) -> Self {
        Self { scalar, vector }
    }

    pub fn one() -> Self {
        Self::new(1.0.into(), vec3::CZERO)
    }

    /// Basis quaternion `i`, `j` or `k` for index 0, 1, 2.
    pub fn basis(index: usize) -> Self {
        let mut v = vec3::CZERO;
        v[index] = 1.0.into();
        Self::new(Complex64::new(0.0, 0.0), v)
    }

    /// `q = c0 + i c`, with `i` the complex unit.
    pub fn from_symbol(w: &Symbol) -> Self {
        Self::new(w.c0, w.c.map(|z| I * z))
    }

    pub fn to_symbol(&self) -> Symbol {
        Symbol::new(self.scalar, self.vector.map(|z| -I * z))
    }
}

/// Hamilton product `(w1 w2 − v1·v2, w1 v2 + w2 v1 + v1×v2)`.
pub fn quaternion_product(qa: &ComplexQuaternion, qb: &ComplexQuaternion) -> ComplexQuaternion {
    let scalar = qa.scalar * qb.scalar - vec3::cdot(&qa.vector, &qb.vector);
    let cross = vec3::ccross(&qa.vector, &qb.vector);
    let vector = [
        qa.scalar * qb.vector[0] + qb.scalar * qa.vector[0] + cross[0],
        qa.scalar * qb.vector[1] + qb.scalar * qa.vector[1] + cross[1],
        qa.scalar * qb.vector[2] + qb.scalar * qa.vector[2] + cross[2],
    ];
    ComplexQuaternion::new(scalar, vector)
}

impl std::ops::Mul for ComplexQuaternion {
    type Output = ComplexQuaternion;
    fn mul(self, rhs: Self) -> Self {
        quaternion_product(&self, &rhs)
    }
}

/// Partial sum of the star exponential series.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StarSeriesResult {
    pub value: Symbol,
    pub terms_used: usize,
    /// Max coefficient modulus of the first omitted term.
    pub truncation_estimate: f64,
}

/// `Exp_⋆(−iτ W_H/ħ) = Σ_k (−iτ/ħ)^k/k! W_H^{⋆k}` summed term by term.
///
/// Summation stops once the next term has all coefficients below `tol`.
/// Works for complex generators as well.
pub fn star_exponential_series(
    wh: &Symbol,
    tau: f64,
    hbar: f64,
    tol: f64,
    max_terms: usize,
) -> Result<StarSeriesResult> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "series tolerance must be positive, got {tol}"
        )));
    }
    check_time(tau, hbar)?;
    let step = Complex64::new(0.0, -tau / hbar);
    let mut term = Symbol::one();
    let mut sum = Symbol::zero();
    for k in 0..max_terms {
        let size = term.max_norm();
        if !size.is_finite() {
            return Err(Error::NonFinite("star exponential term"));
        }
        if size < tol {
            return Ok(StarSeriesResult {
                value: sum,
                terms_used: k,
                truncation_estimate: size,
            });
        }
        sum = sum + term;
        term = star(&term, wh).scale(step / (k as f64 + 1.0));
    }
    Err(Error::Truncation {
        terms: max_terms,
        estimate: term.max_norm(),
    })
}

/// Closed form `e^{−ih0τ/ħ} (cos(|h|τ/ħ), −i sin(|h|τ/ħ) ĥ)` for a real
/// generator `(h0, h)`.
pub fn star_exponential_closed(wh: &Symbol, tau: f64, hbar: f64) -> Result<Symbol> {
    check_time(tau, hbar)?;
    let scale = wh.max_norm().max(1.0);
    if !wh.is_real(1e-12 * scale) {
        return Err(Error::ComplexGenerator);
    }
    if !wh.max_norm().is_finite() {
        return Err(Error::NonFinite("generator coefficients"));
    }
    let s = tau / hbar;
    let h = wh.c.map(|z| z.re);
    let (cos, sin_over_norm) = rodrigues_terms(vec3::norm(&h), s);
    let phase = Complex64::from_polar(1.0, -wh.c0.re * s);
    let vector = h.map(|x| -I * sin_over_norm * x);
    Ok(Symbol::new(cos.into(), vector).scale(phase))
}

fn check_time(tau: f64, hbar: f64) -> Result<()> {
    if !(tau.is_finite() && hbar.is_finite()) || hbar == 0.0 {
        return Err(Error::InvalidArgument(format!(
            "time {tau} and hbar {hbar} must be finite with hbar != 0"
        )));
    }
    Ok(())
}
