//! Seeded random draws used by the axiom checker and by tests.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::Rng;

use crate::orbit::PhasePoint;
use crate::su2::ComplexMatrix2;

fn uniform<R: Rng + ?Sized>(rng: &mut R, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo..hi)
}

fn complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0))
}

/// Matrix with entries uniform in the unit square of the complex plane.
pub fn random_operator<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix2 {
    ComplexMatrix2::new([[complex(rng), complex(rng)], [complex(rng), complex(rng)]])
}

/// `h0 + h·σ` with all four real coefficients uniform in `[-1, 1]`.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix2 {
    let a = random_operator(rng);
    (a + a.adjoint()).scale(0.5.into())
}

/// Point uniform with respect to the area measure.
pub fn random_point<R: Rng + ?Sized>(rng: &mut R) -> PhasePoint {
    let cos_theta = uniform(rng, -1.0, 1.0);
    let phi = uniform(rng, 0.0, 2.0 * PI);
    PhasePoint::new(cos_theta.acos(), phi)
}

/// Point with `sinθ ≥ margin`.
pub fn random_regular_point<R: Rng + ?Sized>(rng: &mut R, margin: f64) -> PhasePoint {
    loop {
        let p = random_point(rng);
        if p.theta().sin() >= margin {
            return p;
        }
    }
}

/// Haar-distributed SU(2) element `[[u, -v*], [v, u*]]` with `|u|²` uniform in
/// `[0, 1]` and independent uniform phases on `u` and `v`.
pub fn random_su2<R: Rng + ?Sized>(rng: &mut R) -> ComplexMatrix2 {
    let s: f64 = uniform(rng, 0.0, 1.0);
    let alpha = uniform(rng, 0.0, 2.0 * PI);
    let beta = uniform(rng, 0.0, 2.0 * PI);
    let u = Complex64::from_polar(s.sqrt(), alpha);
    let v = Complex64::from_polar((1.0 - s).sqrt(), beta);
    ComplexMatrix2::new([[u, -v.conj()], [v, u.conj()]])
}

/// Normalized random state vector.
pub fn random_amplitudes<R: Rng + ?Sized>(rng: &mut R) -> [Complex64; 2] {
    loop {
        let v = [complex(rng), complex(rng)];
        let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
        if n > 1e-3 {
            return [v[0] / n, v[1] / n];
        }
    }
}
