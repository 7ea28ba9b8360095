//! The unit sphere as the coadjoint orbit of SU(2): phase points, the KKS
//! symplectic form and the Poisson bracket it induces.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::vec3::{self, Vec3};
use crate::weyl::Symbol;
use crate::{Error, Result};

/// Default finite-difference step for numeric brackets.
pub const DEFAULT_FD_STEP: f64 = 1e-5;

/// Below this `sinθ` the spherical-coordinate bracket is replaced by the
/// chart-free form.
pub const POLE_THRESHOLD: f64 = 1e-8;

const TANGENCY_TOL: f64 = 1e-12;

/// A point on the unit sphere, `θ ∈ [0, π]`, `φ ∈ [0, 2π)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "AnglesJson", into = "AnglesJson")]
pub struct PhasePoint {
    theta: f64,
    phi: f64,
    n: Vec3,
}

#[derive(Serialize, Deserialize)]
struct AnglesJson {
    theta: f64,
    phi: f64,
}

impl From<AnglesJson> for PhasePoint {
    fn from(a: AnglesJson) -> Self {
        PhasePoint::new(a.theta, a.phi)
    }
}

impl From<PhasePoint> for AnglesJson {
    fn from(p: PhasePoint) -> Self {
        AnglesJson {
            theta: p.theta,
            phi: p.phi,
        }
    }
}

impl PhasePoint {
    /// Creates a point from arbitrary real angles, reducing them to the
    /// canonical ranges. A polar angle outside `[0, π]` is reflected through
    /// the pole with the azimuth shifted by `π`.
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(2.0 * PI);
        let mut phi = phi;
        if theta > PI {
            theta = 2.0 * PI - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(2.0 * PI);
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        let (st, ct) = theta.sin_cos();
        let (sp, cp) = phi.sin_cos();
        Self {
            theta,
            phi,
            n: [st * cp, st * sp, ct],
        }
    }

    /// Radial projection of a non-zero vector onto the sphere.
    pub fn from_vector(v: &Vec3) -> Result<Self> {
        let r = vec3::norm(v);
        if !(r.is_finite() && r > 0.0) {
            return Err(Error::SingularPoint(
                "cannot project the zero vector onto the sphere",
            ));
        }
        let theta = (v[2] / r).clamp(-1.0, 1.0).acos();
        let phi = v[1].atan2(v[0]);
        let mut p = Self::new(theta, phi);
        p.n = vec3::scale(1.0 / r, v);
        Ok(p)
    }

    pub fn north() -> Self {
        Self::new(0.0, 0.0)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    /// Unit vector `(sinθ cosφ, sinθ sinφ, cosθ)`.
    pub fn n(&self) -> Vec3 {
        self.n
    }

    pub fn antipode(&self) -> Self {
        Self::new(PI - self.theta, self.phi + PI)
    }

    /// Coordinate tangent vectors `(∂_θ, ∂_φ)` in ambient coordinates.
    pub fn coordinate_frame(&self) -> (TangentVector, TangentVector) {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        (
            TangentVector {
                base: *self,
                v: [ct * cp, ct * sp, -st],
            },
            TangentVector {
                base: *self,
                v: [-st * sp, st * cp, 0.0],
            },
        )
    }
}

/// A tangent vector at a phase point, stored in ambient coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TangentVector {
    base: PhasePoint,
    v: Vec3,
}

impl TangentVector {
    pub fn new(base: PhasePoint, v: Vec3) -> Result<Self> {
        let deviation = vec3::dot(&v, &base.n).abs();
        if deviation > TANGENCY_TOL * vec3::norm(&v).max(1.0) {
            return Err(Error::NotTangent { deviation });
        }
        Ok(Self { base, v })
    }

    /// Projects an arbitrary ambient vector onto the tangent plane at `base`.
    pub fn project(base: PhasePoint, v: &Vec3) -> Self {
        let n = base.n;
        Self {
            base,
            v: vec3::sub(v, &vec3::scale(vec3::dot(v, &n), &n)),
        }
    }

    pub fn base(&self) -> &PhasePoint {
        &self.base
    }

    pub fn vector(&self) -> Vec3 {
        self.v
    }
}

/// KKS form `ω = (1/2|x|²) ε_ijk x_i dx_j ∧ dx_k` evaluated on tangent
/// vectors `u`, `v` at the orbit point `x`, i.e. `x·(u×v)/|x|²`.
pub fn kks_form(x: &Vec3, u: &Vec3, v: &Vec3) -> Result<f64> {
    if [x, u, v].iter().any(|w| w.iter().any(|c| !c.is_finite())) {
        return Err(Error::NonFinite("KKS arguments"));
    }
    let r2 = vec3::dot(x, x);
    if r2 == 0.0 {
        return Err(Error::SingularPoint("KKS form is undefined at the origin"));
    }
    let r = r2.sqrt();
    for w in [u, v] {
        let deviation = vec3::dot(w, x).abs() / r;
        if deviation > TANGENCY_TOL * vec3::norm(w).max(1.0) {
            return Err(Error::NotTangent { deviation });
        }
    }
    Ok(vec3::dot(x, &vec3::cross(u, v)) / r2)
}

/// [`kks_form`] on the unit sphere for tangent vectors sharing a base point.
pub fn kks_form_at(u: &TangentVector, v: &TangentVector) -> Result<f64> {
    if u.base.n != v.base.n {
        return Err(Error::InvalidArgument(
            "tangent vectors have different base points".into(),
        ));
    }
    kks_form(&u.base.n, &u.v, &v.v)
}

/// Poisson bracket of affine symbols,
/// `{f, g}(n) = (2/√3) n·(∇f × ∇g) = 2√3 (f⃗ × g⃗)·n`.
///
/// Equals `moyal_bracket(f, g) / i` coefficient by coefficient.
pub fn poisson_bracket_affine(f: &Symbol, g: &Symbol) -> Symbol {
    let c = vec3::ccross(&f.c, &g.c);
    Symbol::new(Complex64::new(0.0, 0.0), vec3::cscale(2.0.into(), &c))
}

/// Poisson bracket of scalar fields in spherical coordinates,
/// `(2/√3)(1/sinθ)(∂_θf ∂_φg − ∂_θg ∂_φf)`, by central differences.
///
/// Within [`POLE_THRESHOLD`] of a pole the chart-free form
/// [`poisson_bracket_ambient`] is used instead.
pub fn poisson_bracket_numeric<F, G>(f: F, g: G, p: &PhasePoint, step: f64) -> f64
where
    F: Fn(&PhasePoint) -> f64,
    G: Fn(&PhasePoint) -> f64,
{
    let st = p.theta.sin();
    if st < POLE_THRESHOLD {
        return poisson_bracket_ambient(f, g, p, step);
    }
    let (t, ph) = (p.theta, p.phi);
    let d_theta = |h: &dyn Fn(&PhasePoint) -> f64| {
        (h(&PhasePoint::new(t + step, ph)) - h(&PhasePoint::new(t - step, ph))) / (2.0 * step)
    };
    let d_phi = |h: &dyn Fn(&PhasePoint) -> f64| {
        (h(&PhasePoint::new(t, ph + step)) - h(&PhasePoint::new(t, ph - step))) / (2.0 * step)
    };
    let (ft, fp) = (d_theta(&f), d_phi(&f));
    let (gt, gp) = (d_theta(&g), d_phi(&g));
    2.0 / 3f64.sqrt() / st * (ft * gp - gt * fp)
}

/// Chart-free bracket `(2/√3) n·(∇f × ∇g)` with gradients of the radial
/// extension `f(x/|x|)` taken by central differences and projected onto the
/// tangent plane.
pub fn poisson_bracket_ambient<F, G>(f: F, g: G, p: &PhasePoint, step: f64) -> f64
where
    F: Fn(&PhasePoint) -> f64,
    G: Fn(&PhasePoint) -> f64,
{
    let n = p.n;
    let gradient = |h: &dyn Fn(&PhasePoint) -> f64| {
        let mut grad = [0.0; 3];
        for (i, gi) in grad.iter_mut().enumerate() {
            let e = vec3::scale(step, &vec3::unit(i));
            let plus = PhasePoint::from_vector(&vec3::add(&n, &e)).expect("step is small");
            let minus = PhasePoint::from_vector(&vec3::sub(&n, &e)).expect("step is small");
            *gi = (h(&plus) - h(&minus)) / (2.0 * step);
        }
        TangentVector::project(*p, &grad).v
    };
    let (gf, gg) = (gradient(&f), gradient(&g));
    2.0 / 3f64.sqrt() * vec3::dot(&n, &vec3::cross(&gf, &gg))
}
