//! Orthogonality classes of pairs and sets of states.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::concurrence::marginal_overlaps;
use crate::error::{Error, Result};
use crate::state::{inner_product, PureState};

pub const CLASSIFY_TOLERANCE: f64 = 1e-9;

/// Orthogonality relation between states, strongest first.
///
/// `OneSidedA` means the reduced states on A have orthogonal supports
/// (`Tr[ρ_A^x ρ_A^y] = 0`) while those on B need not; `OneSidedB` is the
/// mirror image.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrthoClass {
    Biorthogonal,
    OneSidedA,
    OneSidedB,
    Orthogonal,
    Arbitrary,
}

impl OrthoClass {
    /// 0 for biorthogonal up to 3 for arbitrary; both one-sided variants share 1.
    pub fn strength_rank(self) -> u8 {
        match self {
            OrthoClass::Biorthogonal => 0,
            OrthoClass::OneSidedA | OrthoClass::OneSidedB => 1,
            OrthoClass::Orthogonal => 2,
            OrthoClass::Arbitrary => 3,
        }
    }

    /// Whether every pair in this class also satisfies the conditions of `weaker`.
    pub fn implies(self, weaker: OrthoClass) -> bool {
        match (self, weaker) {
            (_, OrthoClass::Arbitrary) => true,
            (OrthoClass::Arbitrary, _) => false,
            (_, OrthoClass::Orthogonal) => true,
            (OrthoClass::Orthogonal, _) => false,
            (OrthoClass::Biorthogonal, _) => true,
            (a, b) => a == b,
        }
    }

    pub fn is_one_sided_or_stronger(self) -> bool {
        self.strength_rank() <= 1
    }

    /// Swaps the A and B labels.
    pub fn mirrored(self) -> Self {
        match self {
            OrthoClass::OneSidedA => OrthoClass::OneSidedB,
            OrthoClass::OneSidedB => OrthoClass::OneSidedA,
            c => c,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            OrthoClass::Biorthogonal => "biorthogonal",
            OrthoClass::OneSidedA => "one-sided-a",
            OrthoClass::OneSidedB => "one-sided-b",
            OrthoClass::Orthogonal => "orthogonal",
            OrthoClass::Arbitrary => "arbitrary",
        }
    }
}

impl fmt::Display for OrthoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OrthoClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "biorthogonal" => Ok(OrthoClass::Biorthogonal),
            "one-sided" | "one-sided-a" | "onesided" => Ok(OrthoClass::OneSidedA),
            "one-sided-b" => Ok(OrthoClass::OneSidedB),
            "orthogonal" => Ok(OrthoClass::Orthogonal),
            "arbitrary" => Ok(OrthoClass::Arbitrary),
            other => Err(Error::InvalidArgument(format!("unknown class '{other}'"))),
        }
    }
}

/// The raw quantities the classification thresholds.
#[derive(Clone, Copy, Debug)]
pub struct PairConditions {
    pub overlap: f64,
    pub trace_a: f64,
    pub trace_b: f64,
}

impl PairConditions {
    pub fn of(x: &PureState, y: &PureState) -> Result<Self> {
        let overlap = inner_product(x, y)?.norm();
        let (trace_a, trace_b) = marginal_overlaps(x, y)?;
        Ok(Self {
            overlap,
            trace_a,
            trace_b,
        })
    }

    pub fn class(&self, tol: f64) -> OrthoClass {
        match (self.trace_a < tol, self.trace_b < tol) {
            (true, true) => OrthoClass::Biorthogonal,
            (true, false) => OrthoClass::OneSidedA,
            (false, true) => OrthoClass::OneSidedB,
            (false, false) if self.overlap < tol => OrthoClass::Orthogonal,
            _ => OrthoClass::Arbitrary,
        }
    }
}

pub fn classify_pair(x: &PureState, y: &PureState, tol: f64) -> Result<OrthoClass> {
    Ok(PairConditions::of(x, y)?.class(tol))
}

/// Strongest class that holds for every pair of the set.
pub fn classify_set(states: &[PureState], tol: f64) -> Result<OrthoClass> {
    if states.len() < 2 {
        return Err(Error::TooFewStates {
            required: 2,
            got: states.len(),
        });
    }
    let (mut all_a, mut all_b, mut all_orth) = (true, true, true);
    for (i, x) in states.iter().enumerate() {
        for y in &states[i + 1..] {
            let p = PairConditions::of(x, y)?;
            all_a &= p.trace_a < tol;
            all_b &= p.trace_b < tol;
            // A vanishing marginal overlap forces ⟨x|y⟩ = 0.
            all_orth &= p.overlap < tol || p.trace_a < tol || p.trace_b < tol;
        }
    }
    Ok(match (all_a, all_b) {
        (true, true) => OrthoClass::Biorthogonal,
        (true, false) => OrthoClass::OneSidedA,
        (false, true) => OrthoClass::OneSidedB,
        _ if all_orth => OrthoClass::Orthogonal,
        _ => OrthoClass::Arbitrary,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn bell(sign: f64) -> PureState {
        PureState::from_real(2, 2, &[FRAC_1_SQRT_2, 0.0, 0.0, sign * FRAC_1_SQRT_2]).unwrap()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn pair_examples() {
        let z00 = PureState::basis(2, 2, 0, 0).unwrap();
        let z11 = PureState::basis(2, 2, 1, 1).unwrap();
        let z10 = PureState::basis(2, 2, 1, 0).unwrap();
        assert_eq!(classify_pair(&z00, &z11, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::Biorthogonal);
        assert_eq!(classify_pair(&z00, &z10, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::OneSidedA);
        assert_eq!(classify_pair(&z10, &z00, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::OneSidedA);
        let z01 = PureState::basis(2, 2, 0, 1).unwrap();
        assert_eq!(classify_pair(&z00, &z01, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::OneSidedB);
        assert_eq!(
            classify_pair(&bell(1.0), &bell(-1.0), CLASSIFY_TOLERANCE).unwrap(),
            OrthoClass::Orthogonal
        );
        let psi = PureState::from_terms(3, 3, &[(0, 0, c(FRAC_1_SQRT_2)), (1, 1, c(0.5)), (2, 2, c(0.5))])
            .unwrap();
        let phi = PureState::from_terms(3, 3, &[(0, 0, c(FRAC_1_SQRT_2)), (1, 1, c(-0.5)), (2, 2, c(0.5))])
            .unwrap();
        assert_eq!(classify_pair(&psi, &phi, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::Arbitrary);
        let p = PairConditions::of(&bell(1.0), &bell(-1.0)).unwrap();
        assert!((p.trace_a - 0.5).abs() < 1e-15 && (p.trace_b - 0.5).abs() < 1e-15);
    }

    #[test]
    fn set_examples() {
        let diag: Vec<_> = (0..3).map(|k| PureState::basis(3, 3, k, k).unwrap()).collect();
        assert_eq!(classify_set(&diag, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::Biorthogonal);
        let one_sided = [PureState::basis(2, 2, 0, 0).unwrap(), PureState::basis(2, 2, 1, 0).unwrap()];
        assert_eq!(classify_set(&one_sided, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::OneSidedA);
        assert_eq!(
            classify_set(&[bell(1.0), bell(-1.0)], CLASSIFY_TOLERANCE).unwrap(),
            OrthoClass::Orthogonal
        );
        assert!(matches!(
            classify_set(&diag[..1], CLASSIFY_TOLERANCE),
            Err(Error::TooFewStates { required: 2, got: 1 })
        ));
    }

    #[test]
    fn mixed_sides_fall_back_to_orthogonal() {
        // (00, 10) is A-orthogonal, (00, 01) is B-orthogonal, (10, 01) is biorthogonal.
        let set = [
            PureState::basis(2, 2, 0, 0).unwrap(),
            PureState::basis(2, 2, 1, 0).unwrap(),
            PureState::basis(2, 2, 0, 1).unwrap(),
        ];
        assert_eq!(classify_set(&set, CLASSIFY_TOLERANCE).unwrap(), OrthoClass::Orthogonal);
    }

    #[test]
    fn lattice() {
        use OrthoClass::*;
        assert!(Biorthogonal.implies(OneSidedA) && Biorthogonal.implies(OneSidedB));
        assert!(OneSidedA.implies(Orthogonal) && !OneSidedA.implies(OneSidedB));
        assert!(!Orthogonal.implies(OneSidedA) && Orthogonal.implies(Arbitrary));
        assert!(!Arbitrary.implies(Orthogonal));
        assert_eq!("one-sided".parse::<OrthoClass>().unwrap(), OneSidedA);
        assert!("nope".parse::<OrthoClass>().is_err());
    }
}
