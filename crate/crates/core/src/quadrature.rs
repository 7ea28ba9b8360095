//! Tensor-product quadrature on the sphere for `dΩ = (1/2π) sinθ dθ dφ`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::orbit::PhasePoint;
use crate::{Error, Result};

/// Default number of Gauss-Legendre nodes in `cosθ`.
pub const DEFAULT_N_THETA: usize = 8;
/// Default number of uniform azimuthal nodes.
pub const DEFAULT_N_PHI: usize = 16;

/// Nodes and positive weights on the sphere. Weights sum to 2.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RuleJson", into = "RuleJson")]
pub struct QuadratureRule {
    nodes: Vec<PhasePoint>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    /// Builds a rule from explicit nodes and weights.
    pub fn new(nodes: Vec<PhasePoint>, weights: Vec<f64>) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != weights.len() {
            return Err(Error::InvalidArgument(format!(
                "quadrature needs matching non-empty nodes and weights ({} vs {})",
                nodes.len(),
                weights.len()
            )));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::InvalidArgument(
                "quadrature weights must be positive".into(),
            ));
        }
        Ok(Self { nodes, weights })
    }

    pub fn nodes(&self) -> &[PhasePoint] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PhasePoint, f64)> {
        self.nodes.iter().zip(self.weights.iter().copied())
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        gauss_legendre_sphere(DEFAULT_N_THETA, DEFAULT_N_PHI).expect("default counts are positive")
    }
}

#[derive(Serialize, Deserialize)]
struct RuleJson {
    nodes: Vec<PhasePoint>,
    weights: Vec<f64>,
}

impl TryFrom<RuleJson> for QuadratureRule {
    type Error = Error;
    fn try_from(r: RuleJson) -> Result<Self> {
        QuadratureRule::new(r.nodes, r.weights)
    }
}

impl From<QuadratureRule> for RuleJson {
    fn from(r: QuadratureRule) -> Self {
        RuleJson {
            nodes: r.nodes,
            weights: r.weights,
        }
    }
}

/// Gauss-Legendre nodes in `cosθ` times a uniform `φ` grid.
///
/// Exact for polynomials of degree `≤ 2 n_theta - 1` in `cosθ` times
/// trigonometric polynomials of degree `< n_phi` in `φ`.
pub fn gauss_legendre_sphere(n_theta: usize, n_phi: usize) -> Result<QuadratureRule> {
    if n_theta == 0 || n_phi == 0 {
        return Err(Error::InvalidArgument(format!(
            "quadrature counts must be positive (n_theta = {n_theta}, n_phi = {n_phi})"
        )));
    }
    let (xs, ws) = gauss_legendre(n_theta);
    let mut nodes = Vec::with_capacity(n_theta * n_phi);
    let mut weights = Vec::with_capacity(n_theta * n_phi);
    // (1/2π) dx dφ with Δφ = 2π/n_phi
    let scale = 1.0 / n_phi as f64;
    for (x, w) in xs.iter().zip(&ws) {
        let theta = x.clamp(-1.0, 1.0).acos();
        for j in 0..n_phi {
            let phi = 2.0 * PI * j as f64 / n_phi as f64;
            nodes.push(PhasePoint::new(theta, phi));
            weights.push(w * scale);
        }
    }
    QuadratureRule::new(nodes, weights)
}

/// `Σ_i w_i f(p_i)`.
pub fn integrate<F>(f: F, rule: &QuadratureRule) -> Complex64
where
    F: Fn(&PhasePoint) -> Complex64,
{
    rule.iter().map(|(p, w)| f(p) * w).sum()
}

/// Legendre nodes and weights on `[-1, 1]` by Newton iteration on `P_n`.
pub(crate) fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut xs = vec![0.0; n];
    let mut ws = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d.is_finite() { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        xs[i] = -x;
        xs[n - 1 - i] = x;
        ws[i] = w;
        ws[n - 1 - i] = w;
    }
    (xs, ws)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(f: impl Fn(&PhasePoint) -> f64) -> impl Fn(&PhasePoint) -> Complex64 {
        move |p| f(p).into()
    }

    #[test]
    fn legendre_small_cases() {
        let (x, w) = gauss_legendre(1);
        assert_eq!(x, vec![0.0]);
        assert!((w[0] - 2.0).abs() < 1e-15);
        let (x, w) = gauss_legendre(2);
        assert!((x[1] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((w[0] - 1.0).abs() < 1e-15);
        let (x, w) = gauss_legendre(3);
        assert!((x[2] - 0.6f64.sqrt()).abs() < 1e-15);
        assert!((w[1] - 8.0 / 9.0).abs() < 1e-15);
    }

    #[test]
    fn legendre_polynomial_exactness() {
        // ∫ x^k dx over [-1, 1] is 2/(k+1) for even k.
        for n in 1..=12 {
            let (xs, ws) = gauss_legendre(n);
            for k in (0..2 * n).step_by(2) {
                let q: f64 = xs.iter().zip(&ws).map(|(x, w)| w * x.powi(k as i32)).sum();
                assert!((q - 2.0 / (k as f64 + 1.0)).abs() < 1e-13, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn total_measure_is_two() {
        for (nt, np) in [(1, 1), (2, 3), (8, 16), (13, 7)] {
            let rule = gauss_legendre_sphere(nt, np).unwrap();
            assert!((rule.total_weight() - 2.0).abs() < 1e-12);
            assert!((integrate(|_| 1.0.into(), &rule) - 2.0).norm() < 1e-12);
        }
    }

    #[test]
    fn first_and_second_moments() {
        let rule = gauss_legendre_sphere(2, 3).unwrap();
        for i in 0..3 {
            let m1 = integrate(real(|p| p.n()[i]), &rule);
            assert!(m1.norm() < 1e-12, "∫n_{i} = {m1}");
            for j in 0..3 {
                let m2 = integrate(real(|p| p.n()[i] * p.n()[j]), &rule);
                let expect = if i == j { 2.0 / 3.0 } else { 0.0 };
                assert!((m2 - expect).norm() < 1e-12, "∫n_{i}n_{j} = {m2}");
            }
        }
        let odd = gauss_legendre_sphere(1, 2).unwrap();
        for i in 0..3 {
            assert!(integrate(real(|p| p.n()[i]), &odd).norm() < 1e-12);
        }
    }

    #[test]
    fn zero_counts_rejected() {
        assert!(gauss_legendre_sphere(0, 4).is_err());
        assert!(gauss_legendre_sphere(4, 0).is_err());
    }

    #[test]
    fn rule_json_shape() {
        let rule = gauss_legendre_sphere(1, 1).unwrap();
        let js = serde_json::to_value(&rule).unwrap();
        assert_eq!(
            js["nodes"][0],
            serde_json::json!({"theta": std::f64::consts::FRAC_PI_2, "phi": 0.0})
        );
        assert_eq!(js["weights"], serde_json::json!([2.0]));
        let back: QuadratureRule = serde_json::from_value(js).unwrap();
        assert_eq!(back, rule);
    }
}
