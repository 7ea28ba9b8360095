//! SU(2) coherent states and the time-sliced coherent-state path integral.
//!
//! The transition amplitude is approximated by inserting `N − 1` resolutions
//! of the identity `∫ |ζ⟩⟨ζ| dΩ = 1` between `N` short-time factors
//! `⟨ζ_{k+1}|ζ_k⟩ e^{−iεS/ħ}`, `ε = t/N`, with every resolution realized on a
//! fixed quadrature grid. The grid sum is a matrix product, so the whole
//! sliced amplitude is a transfer-matrix power.
//!
//! The c-number `S` attached to each slice can be the Berezin symbol
//! `⟨ζ|H|ζ⟩ = h0 + h·n` or the upper symbol `h0 + 3h·n`. Only the upper symbol
//! satisfies `∫ S(ζ) |ζ⟩⟨ζ| dΩ = H`, so only it converges to the exact
//! propagator as `N → ∞`. With the Berezin symbol the limit is the evolution
//! under `h0 + h·σ/3`.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dynamics::{inner, QubitState, TransitionPair};
use crate::orbit::PhasePoint;
use crate::quadrature::QuadratureRule;
use crate::su2::{decompose_unchecked, ComplexMatrix2};
use crate::vec3::{self, Vec3};
use crate::{Error, Result};

/// Overlaps smaller than this make a discrete path singular.
pub const MIN_PATH_OVERLAP: f64 = 1e-6;

/// Resolution-of-identity deviation above which a sliced result carries a
/// warning.
pub const RESOLUTION_WARNING: f64 = 1e-10;

/// `|ζ⟩ = cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherentState {
    point: PhasePoint,
    amplitudes: [Complex64; 2],
}

impl CoherentState {
    pub fn new(point: PhasePoint) -> Self {
        let (s, c) = (point.theta() / 2.0).sin_cos();
        Self {
            point,
            amplitudes: [c.into(), Complex64::from_polar(s, point.phi())],
        }
    }

    /// Writes `ψ = e^{iχ} |ζ⟩` and returns `(ζ, χ)`.
    pub fn from_state(state: &QubitState) -> (Self, f64) {
        let point =
            PhasePoint::from_vector(&state.bloch_vector()).unwrap_or_else(|_| PhasePoint::north());
        let zeta = Self::new(point);
        let chi = inner(&zeta.amplitudes, &state.amplitudes()).arg();
        (zeta, chi)
    }

    pub fn point(&self) -> &PhasePoint {
        &self.point
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        self.amplitudes
    }

    pub fn to_state(&self) -> QubitState {
        QubitState::new(self.amplitudes).expect("coherent states are normalized")
    }
}

pub fn coherent_state(theta: f64, phi: f64) -> CoherentState {
    CoherentState::new(PhasePoint::new(theta, phi))
}

/// `⟨ζ_f|ζ_i⟩ = cos(θ_f/2)cos(θ_i/2) + e^{i(φ_i−φ_f)} sin(θ_f/2)sin(θ_i/2)`.
pub fn overlap(zf: &CoherentState, zi: &CoherentState) -> Complex64 {
    let (sf, cf) = (zf.point.theta() / 2.0).sin_cos();
    let (si, ci) = (zi.point.theta() / 2.0).sin_cos();
    Complex64::from_polar(sf * si, zi.point.phi() - zf.point.phi()) + cf * ci
}

/// Max-norm of `∫ |ζ⟩⟨ζ| dΩ − 1` on the given rule.
pub fn resolution_check(rule: &QuadratureRule) -> f64 {
    rule.iter()
        .fold(ComplexMatrix2::zero(), |acc, (p, w)| {
            let a = CoherentState::new(*p).amplitudes;
            acc + ComplexMatrix2::outer(&a, &a).scale(w.into())
        })
        .distance(&ComplexMatrix2::identity())
}

/// `H_B(ζ) = ⟨ζ|H|ζ⟩ = h0 + h·n`.
pub fn berezin_symbol(h: &ComplexMatrix2, z: &CoherentState) -> Result<f64> {
    h.ensure_hermitian()?;
    let a = z.amplitudes;
    Ok(inner(&a, &h.apply(&a)).re)
}

/// Where the short-time phase of each slice is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ordering {
    /// On the later point `ζ_{k+1}` of each slice.
    Left,
    /// On the earlier point `ζ_k`.
    Right,
    /// Half on each end.
    #[default]
    Symmetric,
}

/// The phase-space function used in the short-time exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SliceSymbol {
    /// `h0 + 3 h·n`, whose coherent-state quantization is `H`.
    #[default]
    Upper,
    /// `h0 + h·n = ⟨ζ|H|ζ⟩`.
    Berezin,
}

impl SliceSymbol {
    fn coefficients(self, h: &ComplexMatrix2) -> (f64, Vec3) {
        let c = decompose_unchecked(h);
        let v = [c.a[0].re, c.a[1].re, c.a[2].re];
        let factor = match self {
            SliceSymbol::Upper => 3.0,
            SliceSymbol::Berezin => 1.0,
        };
        (c.a0.re, vec3::scale(factor, &v))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlicingConfig {
    pub n_slices: usize,
    pub rule: QuadratureRule,
    pub ordering: Ordering,
    pub symbol: SliceSymbol,
}

impl SlicingConfig {
    pub fn new(n_slices: usize, rule: QuadratureRule, ordering: Ordering) -> Self {
        Self {
            n_slices,
            rule,
            ordering,
            symbol: SliceSymbol::default(),
        }
    }

    pub fn with_symbol(mut self, symbol: SliceSymbol) -> Self {
        self.symbol = symbol;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlicedResult {
    /// Approximation of `⟨ψ_f| e^{−iHt/ħ} |ψ_0⟩`.
    pub amplitude: Complex64,
    pub n_slices: usize,
    /// Resolution-of-identity deviation of the spatial rule.
    pub resolution_deviation: f64,
    /// Set when the rule does not resolve the identity to [`RESOLUTION_WARNING`].
    pub warning: Option<String>,
    /// Phases `χ` in `ψ = e^{iχ}|ζ⟩` for the initial and final states; the
    /// amplitude already includes them.
    pub initial_phase: f64,
    pub final_phase: f64,
}

/// Time-sliced coherent-state propagator.
pub fn sliced_propagator(
    pair: &TransitionPair,
    h: &ComplexMatrix2,
    t: f64,
    hbar: f64,
    cfg: &SlicingConfig,
) -> Result<SlicedResult> {
    let grid: Vec<[Complex64; 2]> = cfg
        .rule
        .nodes()
        .iter()
        .map(|p| CoherentState::new(*p).amplitudes)
        .collect();
    sliced_on_grid(pair, h, t, hbar, cfg, &grid)
}

fn sliced_on_grid(
    pair: &TransitionPair,
    h: &ComplexMatrix2,
    t: f64,
    hbar: f64,
    cfg: &SlicingConfig,
    grid: &[[Complex64; 2]],
) -> Result<SlicedResult> {
    h.ensure_hermitian()?;
    if cfg.n_slices == 0 {
        return Err(Error::InvalidArgument(
            "number of slices must be at least 1".into(),
        ));
    }
    if !(t.is_finite() && hbar.is_finite()) || hbar == 0.0 {
        return Err(Error::InvalidArgument(format!(
            "time {t} and hbar {hbar} must be finite with hbar != 0"
        )));
    }
    let eps = t / cfg.n_slices as f64;
    let (s0, sv) = cfg.symbol.coefficients(h);
    let action = |n: &Vec3| s0 + vec3::dot(&sv, n);

    let psi0 = pair.initial.amplitudes();
    let psif = pair.final_state.amplitudes();
    let start = action(&pair.initial.bloch_vector());
    let end = action(&pair.final_state.bloch_vector());
    let nodes = cfg.rule.nodes();
    let weights = cfg.rule.weights();
    let site: Vec<f64> = nodes.iter().map(|p| action(&p.n())).collect();

    // link phase between a later value `a` and an earlier value `b`
    let link = |a: f64, b: f64| {
        let s = match cfg.ordering {
            Ordering::Left => a,
            Ordering::Right => b,
            Ordering::Symmetric => 0.5 * (a + b),
        };
        Complex64::from_polar(1.0, -eps * s / hbar)
    };

    let amplitude = if cfg.n_slices == 1 {
        inner(&psif, &psi0) * link(end, start)
    } else {
        let m = grid.len();
        let mut v: Vec<Complex64> = (0..m)
            .map(|q| inner(&grid[q], &psi0) * link(site[q], start) * weights[q])
            .collect();
        if cfg.n_slices > 2 {
            let transfer: Vec<Vec<Complex64>> = (0..m)
                .into_par_iter()
                .map(|p| {
                    (0..m)
                        .map(|q| inner(&grid[p], &grid[q]) * link(site[p], site[q]) * weights[p])
                        .collect()
                })
                .collect();
            for _ in 2..cfg.n_slices {
                v = transfer
                    .iter()
                    .map(|row| row.iter().zip(&v).map(|(a, b)| a * b).sum())
                    .collect();
            }
        }
        (0..m)
            .map(|q| inner(&psif, &grid[q]) * link(end, site[q]) * v[q])
            .sum()
    };

    let resolution_deviation = resolution_check(&cfg.rule);
    let warning = (resolution_deviation > RESOLUTION_WARNING).then(|| {
        format!(
            "quadrature rule does not resolve the identity (deviation {resolution_deviation:.3e})"
        )
    });
    Ok(SlicedResult {
        amplitude,
        n_slices: cfg.n_slices,
        resolution_deviation,
        warning,
        initial_phase: CoherentState::from_state(&pair.initial).1,
        final_phase: CoherentState::from_state(&pair.final_state).1,
    })
}

/// Runs [`sliced_propagator`] for each slice count, in parallel.
pub fn slice_sweep(
    pair: &TransitionPair,
    h: &ComplexMatrix2,
    t: f64,
    hbar: f64,
    base: &SlicingConfig,
    slices: &[usize],
) -> Result<Vec<SlicedResult>> {
    slices
        .par_iter()
        .map(|&n| {
            let cfg = SlicingConfig {
                n_slices: n,
                ..base.clone()
            };
            sliced_propagator(pair, h, t, hbar, &cfg)
        })
        .collect()
}

/// An ordered sequence of phase points with strictly increasing times.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscretePath {
    points: Vec<PhasePoint>,
    times: Vec<f64>,
}

impl DiscretePath {
    pub fn new(points: Vec<PhasePoint>, times: Vec<f64>) -> Result<Self> {
        if points.len() < 2 || points.len() != times.len() {
            return Err(Error::InvalidArgument(format!(
                "a path needs at least two points with matching times ({} points, {} times)",
                points.len(),
                times.len()
            )));
        }
        if times.iter().any(|t| !t.is_finite()) || times.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::InvalidArgument(
                "path times must be strictly increasing".into(),
            ));
        }
        Ok(Self { points, times })
    }

    /// Closed loop at fixed polar angle, `segments` steps over `duration`.
    pub fn latitude_loop(theta: f64, segments: usize, duration: f64) -> Result<Self> {
        if segments == 0 || duration.is_nan() || duration <= 0.0 {
            return Err(Error::InvalidArgument(
                "loop needs segments > 0 and duration > 0".into(),
            ));
        }
        let points = (0..=segments)
            .map(|k| PhasePoint::new(theta, 2.0 * PI * k as f64 / segments as f64))
            .collect();
        let times = (0..=segments)
            .map(|k| duration * k as f64 / segments as f64)
            .collect();
        Self::new(points, times)
    }

    pub fn points(&self) -> &[PhasePoint] {
        &self.points
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    fn overlaps(&self) -> Result<Vec<Complex64>> {
        let states: Vec<CoherentState> =
            self.points.iter().map(|p| CoherentState::new(*p)).collect();
        states
            .windows(2)
            .enumerate()
            .map(|(k, w)| {
                let o = overlap(&w[1], &w[0]);
                if o.norm() <= MIN_PATH_OVERLAP {
                    Err(Error::SingularPath {
                        index: k,
                        next: k + 1,
                        overlap: o.norm(),
                    })
                } else {
                    Ok(o)
                }
            })
            .collect()
    }
}

/// `Σ_k [ −iħ ln⟨ζ_{k+1}|ζ_k⟩ − H_B(ζ_k) Δt_k ]`.
///
/// The real part of the geometric term is `ħ Σ arg⟨ζ_{k+1}|ζ_k⟩`; the
/// imaginary part `−ħ Σ ln|⟨ζ_{k+1}|ζ_k⟩| ≥ 0` vanishes in the continuum limit.
pub fn discrete_action(path: &DiscretePath, h: &ComplexMatrix2, hbar: f64) -> Result<Complex64> {
    h.ensure_hermitian()?;
    let overlaps = path.overlaps()?;
    let mut total = Complex64::new(0.0, 0.0);
    for (k, o) in overlaps.iter().enumerate() {
        let dt = path.times[k + 1] - path.times[k];
        let hb = berezin_symbol(h, &CoherentState::new(path.points[k]))?;
        total += Complex64::new(0.0, -hbar) * o.ln() - hb * dt;
    }
    Ok(total)
}

/// Geometric phase `Σ_k arg⟨ζ_{k+1}|ζ_k⟩` of a closed loop; tends to
/// `−(enclosed solid angle)/2`.
pub fn berry_phase(path: &DiscretePath) -> Result<f64> {
    let first = path.points[0].n();
    let last = path.points[path.points.len() - 1].n();
    let distance = vec3::norm(&vec3::sub(&first, &last));
    if distance > 1e-9 {
        return Err(Error::OpenPath { distance });
    }
    Ok(path.overlaps()?.iter().map(|o| o.arg()).sum())
}
