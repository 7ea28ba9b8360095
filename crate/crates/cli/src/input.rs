//! Operator and state arguments: a built-in name or a JSON file.

use std::fs;
use std::path::Path;

use qstar::{pauli_compose, Complex64, ComplexMatrix2, PauliCoefficients, QubitState};
use serde::de::DeserializeOwned;
use serde_json::Value;

use crate::CliError;

pub const OPERATOR_NAMES: [&str; 4] = ["sigma_x", "sigma_y", "sigma_z", "identity"];
pub const STATE_NAMES: [&str; 6] = ["up", "down", "plus", "minus", "plus_i", "minus_i"];

fn named_operator(name: &str) -> Option<ComplexMatrix2> {
    Some(match name {
        "sigma_x" => ComplexMatrix2::sigma_x(),
        "sigma_y" => ComplexMatrix2::sigma_y(),
        "sigma_z" => ComplexMatrix2::sigma_z(),
        "identity" => ComplexMatrix2::identity(),
        _ => return None,
    })
}

fn named_state(name: &str) -> Option<QubitState> {
    Some(match name {
        "up" => QubitState::up(),
        "down" => QubitState::down(),
        "plus" => QubitState::eigenstate(0, true),
        "minus" => QubitState::eigenstate(0, false),
        "plus_i" => QubitState::eigenstate(1, true),
        "minus_i" => QubitState::eigenstate(1, false),
        _ => return None,
    })
}

fn read_json(path: &str) -> std::result::Result<Value, CliError> {
    let text = fs::read_to_string(Path::new(path))
        .map_err(|e| CliError::Input(format!("{path}: cannot read file: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{path}: invalid JSON: {e}")))
}

fn decode<T: DeserializeOwned>(path: &str, value: Value) -> std::result::Result<T, CliError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let field = e.path().to_string();
        let field = if field == "." {
            "<root>".to_string()
        } else {
            field
        };
        CliError::Input(format!("{path}: field `{field}`: {}", e.inner()))
    })
}

/// Built-in operator name, matrix JSON `{"re","im"}` or coefficient JSON `{"a0","a"}`.
pub fn operator(arg: &str) -> std::result::Result<ComplexMatrix2, CliError> {
    if let Some(m) = named_operator(arg) {
        return Ok(m);
    }
    if !Path::new(arg).exists() {
        return Err(CliError::Input(format!(
            "{arg}: no such file and not a built-in operator ({})",
            OPERATOR_NAMES.join(", ")
        )));
    }
    let value = read_json(arg)?;
    let is_coefficients = value.get("a0").is_some() || value.get("a").is_some();
    if is_coefficients {
        let c: PauliCoefficients = decode(arg, value)?;
        Ok(pauli_compose(&c))
    } else {
        decode(arg, value)
    }
}

/// Built-in state name or `{"amplitudes": [{"re","im"}, {"re","im"}]}`.
pub fn state(arg: &str) -> std::result::Result<QubitState, CliError> {
    if let Some(s) = named_state(arg) {
        return Ok(s);
    }
    if !Path::new(arg).exists() {
        return Err(CliError::Input(format!(
            "{arg}: no such file and not a built-in state ({})",
            STATE_NAMES.join(", ")
        )));
    }
    decode(arg, read_json(arg)?)
}

/// Hermitian operator; the error names where it came from.
pub fn hamiltonian(arg: &str) -> std::result::Result<ComplexMatrix2, CliError> {
    let h = operator(arg)?;
    let deviation = h.hermiticity_deviation();
    if !h.is_hermitian(1e-12 * h.max_norm().max(1.0)) {
        return Err(CliError::Input(format!(
            "{arg}: operator is not Hermitian (deviation {deviation:.3e})"
        )));
    }
    Ok(h)
}

pub fn complex_json(z: Complex64) -> Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}
