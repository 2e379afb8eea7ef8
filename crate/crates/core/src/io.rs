//! JSON state and superposition files. Complex numbers are `[re, im]` pairs
//! and amplitudes follow the `i * dim_b + j` layout.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::bounds::Superposition;
use crate::error::Result;
use crate::state::PureState;

/// Normalization deviations above this produce a warning on load.
pub const RENORMALIZATION_WARNING: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dim_a: usize,
    pub dim_b: usize,
    pub amplitudes: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuperpositionFile {
    pub coefficients: Vec<[f64; 2]>,
    pub states: Vec<StateFile>,
}

fn to_complex(v: &[[f64; 2]]) -> Vec<Complex64> {
    v.iter().map(|&[re, im]| Complex64::new(re, im)).collect()
}

fn to_pairs(v: &[Complex64]) -> Vec<[f64; 2]> {
    v.iter().map(|z| [z.re, z.im]).collect()
}

impl StateFile {
    pub fn from_state(s: &PureState) -> Self {
        Self {
            dim_a: s.dim_a(),
            dim_b: s.dim_b(),
            amplitudes: to_pairs(s.amplitudes()),
        }
    }

    /// The validated state and any renormalization warning.
    pub fn to_state(&self) -> Result<(PureState, Option<String>)> {
        let (s, dev) = PureState::with_deviation(self.dim_a, self.dim_b, to_complex(&self.amplitudes))?;
        let warning = (dev > RENORMALIZATION_WARNING)
            .then(|| format!("state renormalized (|norm^2 - 1| = {dev:.3e})"));
        Ok((s, warning))
    }
}

impl SuperpositionFile {
    pub fn from_superposition(s: &Superposition) -> Self {
        Self {
            coefficients: to_pairs(s.coefficients()),
            states: s.states().iter().map(StateFile::from_state).collect(),
        }
    }

    pub fn to_superposition(&self) -> Result<(Superposition, Vec<String>)> {
        let mut warnings = Vec::new();
        let mut states = Vec::with_capacity(self.states.len());
        for (k, f) in self.states.iter().enumerate() {
            let (s, w) = f.to_state()?;
            warnings.extend(w.map(|w| format!("state {k}: {w}")));
            states.push(s);
        }
        let (s, dev) = Superposition::with_deviation(to_complex(&self.coefficients), states)?;
        if dev > RENORMALIZATION_WARNING {
            warnings.push(format!("coefficients renormalized (|sum |g|^2 - 1| = {dev:.3e})"));
        }
        Ok((s, warnings))
    }
}

pub fn load_state(path: impl AsRef<Path>) -> Result<(PureState, Option<String>)> {
    let f: StateFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    f.to_state()
}

pub fn save_state(path: impl AsRef<Path>, s: &PureState) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(&StateFile::from_state(s))?)?;
    Ok(())
}

pub fn load_superposition(path: impl AsRef<Path>) -> Result<(Superposition, Vec<String>)> {
    let f: SuperpositionFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    f.to_superposition()
}

pub fn save_superposition(path: impl AsRef<Path>, s: &Superposition) -> Result<()> {
    fs::write(
        path,
        serde_json::to_string_pretty(&SuperpositionFile::from_superposition(s))?,
    )?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parse_and_renormalize() {
        let f: StateFile = serde_json::from_str(r#"{"dim_a":2,"dim_b":2,"amplitudes":[[1,0],[0,0],[0,0],[1,0]]}"#).unwrap();
        let (s, w) = f.to_state().unwrap();
        assert!(w.is_some());
        assert!((s.amp(1, 1).re - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);

        let f: StateFile = serde_json::from_str(r#"{"dim_a":2,"dim_b":2,"amplitudes":[[1,0],[0,0],[0,0]]}"#).unwrap();
        assert!(matches!(f.to_state(), Err(Error::AmplitudeLength { expected: 4, got: 3 })));
    }

    #[test]
    fn superposition_warnings() {
        let state = StateFile {
            dim_a: 2,
            dim_b: 2,
            amplitudes: vec![[1.0, 0.0], [0.0, 0.0], [0.0, 0.0], [0.0, 0.0]],
        };
        let f = SuperpositionFile {
            coefficients: vec![[1.0, 0.0], [1.0, 0.0]],
            states: vec![state.clone(), state],
        };
        let (s, w) = f.to_superposition().unwrap();
        assert_eq!(s.m(), 2);
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn state_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.json");
        let s = PureState::new(
            2,
            3,
            (0..6).map(|k| Complex64::new(0.1 * k as f64 + 0.013, -0.07 * k as f64)).collect(),
        )
        .unwrap();
        save_state(&path, &s).unwrap();
        let (back, w) = load_state(&path).unwrap();
        assert!(w.is_none());
        assert_eq!(back, s);
    }
}
