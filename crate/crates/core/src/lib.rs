//! Phase-space quantum mechanics for a single qubit.
//!
//! Operators on `C^2` are mapped to affine functions on the unit sphere via the
//! Stratonovich-Weyl kernel `Δ(n) = (1 + √3 n·σ)/2`. The induced star product is
//! exact on that class of functions, so every symbol is stored by its four
//! complex coefficients. On top of the algebra sit star exponentials, three
//! independent propagator routes and a time-sliced coherent-state path
//! integral, all checked against the closed-form `2x2` matrix exponential.
//!
//! Integrals over the sphere use the measure `dΩ = (1/2π) sinθ dθ dφ`, whose
//! total mass is 2.

pub mod dynamics;
mod error;
pub mod orbit;
pub mod path;
pub mod quadrature;
pub mod sampling;
pub mod star;
pub mod su2;
pub mod vec3;
pub mod weyl;

pub use error::{Error, Result};
pub use num_complex::Complex64;

pub use dynamics::{
    propagator_exact, propagator_oracle, propagator_quadrature, rabi_scan, transition_symbol,
    QubitState, RabiConfig, RabiRow, TransitionPair,
};
pub use orbit::{
    kks_form, poisson_bracket_affine, poisson_bracket_ambient, poisson_bracket_numeric, PhasePoint,
    TangentVector,
};
pub use path::{
    berezin_symbol, berry_phase, coherent_state, discrete_action, overlap, resolution_check,
    sliced_propagator, CoherentState, DiscretePath, Ordering, SliceSymbol, SlicedResult,
    SlicingConfig,
};
pub use quadrature::{gauss_legendre_sphere, integrate, QuadratureRule};
pub use star::{
    moyal_bracket, quaternion_product, star, star_exponential_closed, star_exponential_series,
    ComplexQuaternion, StarSeriesResult,
};
pub use su2::{
    adjoint_action, euler_rotation, exp_su2, killing_form, pauli_compose, pauli_decompose,
    rotation_of, ComplexMatrix2, PauliCoefficients, RotationMatrix3,
};
pub use weyl::{
    check_axioms, kernel_from_rotation, parity_operator, reconstruct, sw_kernel, symbol_eval,
    symbol_of, AxiomReport, Symbol,
};

/// Default absolute tolerance for matrix and coefficient comparisons.
pub const DEFAULT_TOL: f64 = 1e-12;
