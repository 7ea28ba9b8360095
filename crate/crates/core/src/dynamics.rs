//! Propagators `K(ψ_f, t; ψ_0, 0) = ⟨ψ_f| e^{−iHt/ħ} |ψ_0⟩` computed from
//! phase-space data, plus the Rabi benchmark.
//!
//! Three routes are provided: the traciality pairing of symbol coefficients
//! ([`propagator_exact`]), quadrature of the phase-space integral
//! ([`propagator_quadrature`]) and the plain matrix element
//! ([`propagator_oracle`]).

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::quadrature::{integrate, QuadratureRule};
use crate::star::star_exponential_closed;
use crate::su2::{exp_su2, ComplexMatrix2};
use crate::vec3::{self, Vec3};
use crate::weyl::{symbol_eval, symbol_of, Symbol};
use crate::{Error, Result};

/// Normalized qubit state `c↑|0⟩ + c↓|1⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "StateJson", into = "StateJson")]
pub struct QubitState {
    amplitudes: [Complex64; 2],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateJson {
    amplitudes: [crate::su2::wire::ComplexJson; 2],
}

impl TryFrom<StateJson> for QubitState {
    type Error = Error;
    fn try_from(s: StateJson) -> Result<Self> {
        QubitState::new(s.amplitudes.map(Into::into))
    }
}

impl From<QubitState> for StateJson {
    fn from(s: QubitState) -> Self {
        StateJson {
            amplitudes: s.amplitudes.map(Into::into),
        }
    }
}

impl QubitState {
    /// Normalizes the given amplitudes.
    pub fn new(amplitudes: [Complex64; 2]) -> Result<Self> {
        if amplitudes.iter().any(|z| !z.is_finite()) {
            return Err(Error::NonFinite("state amplitudes"));
        }
        let norm = (amplitudes[0].norm_sqr() + amplitudes[1].norm_sqr()).sqrt();
        if norm == 0.0 {
            return Err(Error::ZeroNorm);
        }
        Ok(Self {
            amplitudes: amplitudes.map(|z| z / norm),
        })
    }

    pub fn up() -> Self {
        Self {
            amplitudes: [1.0.into(), 0.0.into()],
        }
    }

    pub fn down() -> Self {
        Self {
            amplitudes: [0.0.into(), 1.0.into()],
        }
    }

    /// `+1` eigenstate of `σ_axis` for axis 0, 1, 2; `-1` eigenstate when
    /// `positive` is false.
    pub fn eigenstate(axis: usize, positive: bool) -> Self {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let sign = if positive { 1.0 } else { -1.0 };
        let amplitudes = match axis {
            0 => [s.into(), (sign * s).into()],
            1 => [s.into(), Complex64::new(0.0, sign * s)],
            2 if positive => return Self::up(),
            2 => return Self::down(),
            _ => panic!("axis {axis} out of range"),
        };
        Self { amplitudes }
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        self.amplitudes
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &QubitState) -> Complex64 {
        inner(&self.amplitudes, &other.amplitudes)
    }

    /// `⟨self|M|other⟩`.
    pub fn matrix_element(&self, m: &ComplexMatrix2, other: &QubitState) -> Complex64 {
        inner(&self.amplitudes, &m.apply(&other.amplitudes))
    }

    /// Bloch vector `⟨σ⟩`.
    pub fn bloch_vector(&self) -> Vec3 {
        let [a, b] = self.amplitudes;
        let off = a.conj() * b;
        [2.0 * off.re, 2.0 * off.im, a.norm_sqr() - b.norm_sqr()]
    }
}

pub(crate) fn inner(bra: &[Complex64; 2], ket: &[Complex64; 2]) -> Complex64 {
    bra[0].conj() * ket[0] + bra[1].conj() * ket[1]
}

/// Initial and final states of a transition amplitude.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransitionPair {
    pub initial: QubitState,
    #[serde(rename = "final")]
    pub final_state: QubitState,
}

impl TransitionPair {
    pub fn new(initial: QubitState, final_state: QubitState) -> Self {
        Self {
            initial,
            final_state,
        }
    }

    /// `|ψ_0⟩⟨ψ_f|`, the operator whose symbol pairs with `W_U` to give `K`.
    pub fn transition_operator(&self) -> ComplexMatrix2 {
        ComplexMatrix2::outer(&self.initial.amplitudes, &self.final_state.amplitudes)
    }
}

/// Spin in a static field, `H = −(γ/2) B axis·σ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RabiConfig {
    pub gamma: f64,
    pub field: f64,
    pub axis: Vec3,
    pub hbar: f64,
}

impl RabiConfig {
    pub fn new(gamma: f64, field: f64, axis: Vec3, hbar: f64) -> Result<Self> {
        let norm = vec3::norm(&axis);
        if (norm - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "field axis must be a unit vector, |axis| = {norm}"
            )));
        }
        if ![gamma, field, hbar].iter().all(|x| x.is_finite()) || hbar == 0.0 {
            return Err(Error::InvalidArgument(
                "gamma, B and hbar must be finite, hbar != 0".into(),
            ));
        }
        Ok(Self {
            gamma,
            field,
            axis,
            hbar,
        })
    }

    pub fn hamiltonian(&self) -> ComplexMatrix2 {
        let s = -0.5 * self.gamma * self.field;
        let c = crate::su2::PauliCoefficients::real(0.0, vec3::scale(s, &self.axis));
        crate::su2::pauli_compose(&c)
    }

    /// `γB/ħ`, the population oscillation frequency.
    pub fn rabi_frequency(&self) -> f64 {
        self.gamma * self.field / self.hbar
    }
}

/// Symbol `½⟨ψ_f|ψ_0⟩ + (√3/2)⟨ψ_f|σ|ψ_0⟩·n`, i.e. the symbol of `|ψ_0⟩⟨ψ_f|`.
pub fn transition_symbol(pair: &TransitionPair) -> Symbol {
    let (f, i) = (&pair.final_state, &pair.initial);
    let half = 0.5;
    let c = [0, 1, 2].map(|k| f.matrix_element(&ComplexMatrix2::pauli(k), i) * half);
    Symbol::new(f.inner(i) * half, c)
}

/// `2 (r0 u0 + r·u)` with `r` the transition symbol and `u` the closed-form
/// star exponential of `W_H`.
pub fn propagator_exact(
    pair: &TransitionPair,
    h: &ComplexMatrix2,
    t: f64,
    hbar: f64,
) -> Result<Complex64> {
    h.ensure_hermitian()?;
    let r = transition_symbol(pair);
    let u = star_exponential_closed(&symbol_of(h)?, t, hbar)?;
    Ok(2.0 * (r.c0 * u.c0 + vec3::cdot(&r.c, &u.c)))
}

/// `∫ W_ρ(n) Exp_⋆(−itW_H/ħ)(n) dΩ` by quadrature.
pub fn propagator_quadrature(
    pair: &TransitionPair,
    h: &ComplexMatrix2,
    t: f64,
    hbar: f64,
    rule: &QuadratureRule,
) -> Result<Complex64> {
    h.ensure_hermitian()?;
    let r = transition_symbol(pair);
    let u = star_exponential_closed(&symbol_of(h)?, t, hbar)?;
    Ok(integrate(|p| symbol_eval(&r, p) * symbol_eval(&u, p), rule))
}

/// `⟨ψ_f| exp(−iHt/ħ) |ψ_0⟩`.
pub fn propagator_oracle(
    pair: &TransitionPair,
    h: &ComplexMatrix2,
    t: f64,
    hbar: f64,
) -> Result<Complex64> {
    let u = exp_su2(h, t, hbar)?;
    Ok(pair.final_state.matrix_element(&u, &pair.initial))
}

/// One row of a Rabi scan.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RabiRow {
    pub t: f64,
    pub amplitude: Complex64,
    pub probability: f64,
}

/// Propagator and transition probability at each time for the field
/// Hamiltonian of `cfg`.
pub fn rabi_scan(cfg: &RabiConfig, pair: &TransitionPair, times: &[f64]) -> Result<Vec<RabiRow>> {
    if times.is_empty() {
        return Err(Error::InvalidArgument(
            "rabi scan needs at least one time".into(),
        ));
    }
    let h = cfg.hamiltonian();
    times
        .par_iter()
        .map(|&t| {
            let amplitude = propagator_exact(pair, &h, t, cfg.hbar)?;
            Ok(RabiRow {
                t,
                amplitude,
                probability: amplitude.norm_sqr(),
            })
        })
        .collect()
}
