//! Concurrence of superpositions: the exact value and the bounds that depend
//! only on the single-state concurrences, the coefficients and the overlaps.
//!
//! Every bound family has its own entry point with a class precondition;
//! [`evaluate`] classifies the set and picks the strongest applicable one.

mod arbitrary;
mod orthogonal;
mod reference;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::Serialize;

use crate::classify::{classify_set, OrthoClass, CLASSIFY_TOLERANCE};
use crate::concurrence::{concurrence, concurrence_vector, ConcurrenceVector};
use crate::error::{Error, Result};
use crate::state::{inner_product, PureState, NORM_TOLERANCE};

pub use arbitrary::{bounds_arbitrary_multi, bounds_arbitrary_pair, partition_count};
pub use orthogonal::{bounds_one_sided, bounds_orthogonal, exact_biorthogonal};
pub use reference::{reference_bounds, ReferenceBounds};

/// Below this the superposition is treated as cancelled.
pub const VANISHING_NORM: f64 = 1e-12;

/// Default limit on the number of states for the exhaustive partition search.
pub const DEFAULT_PARTITION_CAP: usize = 6;

/// `Γ = Σ γ_i |ψ_i⟩` with `Σ |γ_i|² = 1`.
#[derive(Clone, Debug)]
pub struct Superposition {
    coefficients: Vec<Complex64>,
    states: Vec<PureState>,
}

impl Superposition {
    /// Rescales the coefficients when `Σ |γ_i|²` is off by more than the
    /// state normalization tolerance.
    pub fn new(coefficients: Vec<Complex64>, states: Vec<PureState>) -> Result<Self> {
        Self::with_deviation(coefficients, states).map(|(s, _)| s)
    }

    /// Like [`Superposition::new`], also returning `|Σ |γ_i|² − 1|` before rescaling.
    pub fn with_deviation(
        mut coefficients: Vec<Complex64>,
        states: Vec<PureState>,
    ) -> Result<(Self, f64)> {
        if states.is_empty() {
            return Err(Error::TooFewStates {
                required: 1,
                got: 0,
            });
        }
        if coefficients.len() != states.len() {
            return Err(Error::CoefficientCount {
                coefficients: coefficients.len(),
                states: states.len(),
            });
        }
        for s in &states[1..] {
            states[0].check_dims(s)?;
        }
        let total: f64 = coefficients.iter().map(|g| g.norm_sqr()).sum();
        if total == 0.0 || !total.is_finite() {
            return Err(Error::CoefficientNorm(total));
        }
        let deviation = (total - 1.0).abs();
        if deviation > NORM_TOLERANCE {
            let scale = total.sqrt().recip();
            coefficients.iter_mut().for_each(|g| *g *= scale);
        }
        Ok((
            Self {
                coefficients,
                states,
            },
            deviation,
        ))
    }

    /// `α|ψ⟩ + β|φ⟩`.
    pub fn pair(alpha: Complex64, psi: PureState, beta: Complex64, phi: PureState) -> Result<Self> {
        Self::new(vec![alpha, beta], vec![psi, phi])
    }

    pub fn m(&self) -> usize {
        self.states.len()
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn states(&self) -> &[PureState] {
        &self.states
    }

    pub fn dims(&self) -> (usize, usize) {
        self.states[0].dims()
    }

    /// Amplitudes of the unnormalized `Γ`.
    pub fn combined_amplitudes(&self) -> Vec<Complex64> {
        let n = self.states[0].amplitudes().len();
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (g, s) in self.coefficients.iter().zip(&self.states) {
            for (o, a) in out.iter_mut().zip(s.amplitudes()) {
                *o += g * a;
            }
        }
        out
    }

    /// Orthogonality class of the component states. A single state counts
    /// as biorthogonal since every pairwise condition holds vacuously.
    pub fn ortho_class(&self, tol: f64) -> Result<OrthoClass> {
        if self.m() == 1 {
            return Ok(OrthoClass::Biorthogonal);
        }
        classify_set(&self.states, tol)
    }
}

/// The norm of `Γ` and the concurrence of `Γ/‖Γ‖`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ExactValue {
    pub norm: f64,
    /// Concurrence of the normalized superposition, computed directly.
    pub exact: f64,
    /// Same quantity from the expansion in single-state and pair
    /// concurrence vectors.
    pub expansion: f64,
}

/// Concurrence of the normalized superposition, by two routes.
pub fn superpose_exact(s: &Superposition) -> Result<ExactValue> {
    let (na, nb) = s.dims();
    let gamma = s.combined_amplitudes();
    let norm = gamma.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    if norm <= VANISHING_NORM {
        return Err(Error::VanishingNorm(norm));
    }
    let normalized = PureState::new(na, nb, gamma.iter().map(|z| z / norm).collect())?;
    let exact = concurrence(&normalized);

    // ‖Γ‖² C(Γ') = ‖Σ_i γ_i*² C(ψ_i) + 2 Σ_{i<j} γ_i* γ_j* C(ψ_i, ψ_j)‖
    let g = s.coefficients();
    let states = s.states();
    let mut vectors: Vec<ConcurrenceVector> = Vec::new();
    let mut weights: Vec<Complex64> = Vec::new();
    for i in 0..s.m() {
        for j in i..s.m() {
            let w = if i == j {
                g[i].conj() * g[i].conj()
            } else {
                g[i].conj() * g[j].conj() * 2.0
            };
            vectors.push(concurrence_vector(&states[i], &states[j])?);
            weights.push(w);
        }
    }
    let terms: Vec<_> = weights.iter().copied().zip(vectors.iter()).collect();
    let expansion = ConcurrenceVector::linear_combination(&terms)?.norm() / (norm * norm);
    Ok(ExactValue {
        norm,
        exact,
        expansion,
    })
}

/// Which family of bounds produced a report.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundFamily {
    BiorthogonalExact,
    OneSided,
    Orthogonal,
    ArbitraryPair,
    ArbitraryMulti,
}

#[derive(Clone, Copy, Debug)]
pub struct BoundsOptions {
    pub tol: f64,
    /// Use the sharper pair-concurrence caps available for two qubits.
    pub two_qubit_refine: bool,
    /// Attach the reference bounds (pairs only).
    pub reference: bool,
    pub partition_cap: usize,
}

impl Default for BoundsOptions {
    fn default() -> Self {
        Self {
            tol: CLASSIFY_TOLERANCE,
            two_qubit_refine: false,
            reference: false,
            partition_cap: DEFAULT_PARTITION_CAP,
        }
    }
}

/// Exact value and bounds for the concurrence of `Γ/‖Γ‖`.
#[derive(Clone, Debug, Serialize)]
pub struct BoundsReport {
    pub ortho_class: OrthoClass,
    pub family: BoundFamily,
    pub exact: f64,
    pub lower: f64,
    pub upper: f64,
    /// Lower bound before clamping at zero.
    pub lower_unclamped: f64,
    pub norm_gamma: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_lower: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reference_upper: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition_count: Option<u64>,
    /// Set when `m` exceeded the partition cap and only the first-line
    /// bounds were evaluated.
    pub partition_fallback: bool,
    pub two_qubit_refined: bool,
}

impl BoundsReport {
    /// `min(exact − lower, upper − exact)`; negative means a violated bracket.
    pub fn bracket_slack(&self) -> f64 {
        (self.exact - self.lower).min(self.upper - self.exact)
    }

    pub fn brackets(&self, tol: f64) -> bool {
        self.bracket_slack() >= -tol
    }
}

/// Per-superposition quantities every bound formula is built from.
pub(crate) struct Ingredients {
    pub gamma: Vec<Complex64>,
    /// `C(ψ_i)`.
    pub conc: Vec<f64>,
    /// `⟨ψ_i|ψ_j⟩`.
    pub overlap: DMatrix<Complex64>,
    pub exact: ExactValue,
    pub class: OrthoClass,
    pub dims: (usize, usize),
}

impl Ingredients {
    pub fn new(s: &Superposition, tol: f64) -> Result<Self> {
        let m = s.m();
        let states = s.states();
        let mut overlap = DMatrix::from_element(m, m, Complex64::new(1.0, 0.0));
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    overlap[(i, j)] = inner_product(&states[i], &states[j])?;
                }
            }
        }
        Ok(Self {
            gamma: s.coefficients().to_vec(),
            conc: states.iter().map(concurrence).collect(),
            overlap,
            exact: superpose_exact(s)?,
            class: s.ortho_class(tol)?,
            dims: s.dims(),
        })
    }

    pub fn m(&self) -> usize {
        self.gamma.len()
    }

    /// `|γ_i|² C(ψ_i)`.
    pub fn weighted(&self, i: usize) -> f64 {
        self.gamma[i].norm_sqr() * self.conc[i]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let m = self.m();
        (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
    }

    pub fn is_two_qubit_pair(&self) -> bool {
        self.m() == 2 && self.dims == (2, 2)
    }

    pub fn report(&self, family: BoundFamily, lower: f64, upper: f64) -> BoundsReport {
        BoundsReport {
            ortho_class: self.class,
            family,
            exact: self.exact.exact,
            lower: lower.max(0.0),
            upper,
            lower_unclamped: lower,
            norm_gamma: self.exact.norm,
            reference_lower: None,
            reference_upper: None,
            partition_count: None,
            partition_fallback: false,
            two_qubit_refined: false,
        }
    }
}

fn require(ing: &Ingredients, needed: OrthoClass) -> Result<()> {
    let ok = match needed {
        OrthoClass::OneSidedA | OrthoClass::OneSidedB => ing.class.is_one_sided_or_stronger(),
        other => ing.class.implies(other),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::ClassPrecondition {
            required: needed,
            found: ing.class,
        })
    }
}

/// Classifies the component states and evaluates the strongest applicable
/// bounds, or those of `force` when given (it must be implied by the
/// actual class).
pub fn evaluate(
    s: &Superposition,
    opts: &BoundsOptions,
    force: Option<OrthoClass>,
) -> Result<BoundsReport> {
    let class = s.ortho_class(opts.tol)?;
    let target = force.unwrap_or(class);
    let mut report = match target {
        OrthoClass::Biorthogonal => {
            let ing = Ingredients::new(s, opts.tol)?;
            require(&ing, OrthoClass::Biorthogonal)?;
            let value = orthogonal::biorthogonal_closed_form(&ing);
            ing.report(BoundFamily::BiorthogonalExact, value, value)
        }
        OrthoClass::OneSidedA | OrthoClass::OneSidedB => bounds_one_sided(s, opts)?,
        OrthoClass::Orthogonal => bounds_orthogonal(s, opts)?,
        OrthoClass::Arbitrary if s.m() == 2 => bounds_arbitrary_pair(s, opts)?,
        OrthoClass::Arbitrary => bounds_arbitrary_multi(s, opts)?,
    };
    if opts.reference && s.m() == 2 {
        let r = reference_bounds(s, opts.tol)?;
        report.reference_lower = Some(r.lower);
        report.reference_upper = Some(r.upper);
    }
    Ok(report)
}
