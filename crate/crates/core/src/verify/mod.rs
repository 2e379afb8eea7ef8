//! Monte Carlo certification of the superposition bounds and the
//! concurrence-vector identities they rest on.
//!
//! Every check produces a slack value: `rhs − lhs` for inequalities and
//! `−|difference|` for identities. A check fails when its slack drops below
//! `−tolerance`.

pub mod sampling;

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    bounds_arbitrary_multi, bounds_arbitrary_pair, bounds_one_sided, bounds_orthogonal, evaluate,
    exact_biorthogonal, superpose_exact, BoundsOptions, Superposition, DEFAULT_PARTITION_CAP,
};
use crate::classify::OrthoClass;
use crate::concurrence::{
    concurrence_vector, concurrence_vector_dot, pair_concurrence, pair_concurrence_closed_form,
};
use crate::error::{Error, Result};
use crate::state::{inner_product, PureState};

pub use sampling::{random_class_set, random_pure_state, random_unit_vector, seed_stream};

/// Largest local dimension accepted by the verifier.
pub const MAX_DIM: usize = 64;

const MAX_COEFFICIENT_REDRAWS: usize = 100;

#[derive(Clone, Debug, Serialize)]
pub struct EnsembleSpec {
    pub dim_a: usize,
    pub dim_b: usize,
    pub m: usize,
    #[serde(rename = "class")]
    pub class: OrthoClass,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
    pub partition_cap: usize,
}

impl Default for EnsembleSpec {
    fn default() -> Self {
        Self {
            dim_a: 3,
            dim_b: 3,
            m: 2,
            class: OrthoClass::Arbitrary,
            trials: 100,
            seed: 0,
            tolerance: 1e-9,
            partition_cap: DEFAULT_PARTITION_CAP,
        }
    }
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InfeasibleEnsemble(msg));
        let (na, nb, m) = (self.dim_a, self.dim_b, self.m);
        if na < 2 || nb < 2 || na > MAX_DIM || nb > MAX_DIM {
            return bad(format!("dims {na}x{nb} outside 2..={MAX_DIM}"));
        }
        if m < 2 {
            return bad(format!("need at least 2 states, got {m}"));
        }
        if m > self.partition_cap {
            return bad(format!("m = {m} exceeds the partition cap {}", self.partition_cap));
        }
        if self.tolerance.is_nan() || self.tolerance < 0.0 {
            return bad(format!("tolerance {} is not a nonnegative number", self.tolerance));
        }
        let capacity = match self.class {
            OrthoClass::Biorthogonal => na.min(nb),
            OrthoClass::OneSidedA => na,
            OrthoClass::OneSidedB => nb,
            OrthoClass::Orthogonal => na * nb,
            OrthoClass::Arbitrary => usize::MAX,
        };
        if m > capacity {
            return bad(format!("{m} {} states do not fit in {na}x{nb}", self.class));
        }
        Ok(())
    }
}

/// Aggregate of one named check across all trials.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct CheckStats {
    pub evaluations: u64,
    pub violations: u64,
    pub worst_slack: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub spec: EnsembleSpecEcho,
    pub sampling: &'static str,
    pub trials_run: usize,
    pub violations: u64,
    /// Smallest slack seen over every check and trial.
    pub worst_margin: f64,
    pub per_check: BTreeMap<String, CheckStats>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// The spec as echoed in reports.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EnsembleSpecEcho {
    pub dim_a: usize,
    pub dim_b: usize,
    pub m: usize,
    pub class: OrthoClass,
    pub trials: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl From<&EnsembleSpec> for EnsembleSpecEcho {
    fn from(s: &EnsembleSpec) -> Self {
        Self {
            dim_a: s.dim_a,
            dim_b: s.dim_b,
            m: s.m,
            class: s.class,
            trials: s.trials,
            seed: s.seed,
            tolerance: s.tolerance,
        }
    }
}

type Slacks = Vec<(&'static str, f64)>;

/// Concurrence vectors `C(ψ_i, ψ_j)`, `i ≤ j`, should be mutually orthogonal
/// for biorthogonal and one-sided sets. Returns the largest |dot|.
pub fn max_cross_dot(states: &[PureState]) -> Result<f64> {
    let mut vectors = Vec::new();
    for i in 0..states.len() {
        for j in i..states.len() {
            vectors.push(concurrence_vector(&states[i], &states[j])?);
        }
    }
    let mut worst = 0.0f64;
    for a in 0..vectors.len() {
        for b in a + 1..vectors.len() {
            worst = worst.max(concurrence_vector_dot(&vectors[a], &vectors[b])?.norm());
        }
    }
    Ok(worst)
}

/// Slack of the class-dependent cap on `C(ψ_i, ψ_j)`, minimized over pairs.
/// Biorthogonal pairs must sit at exactly 1.
pub fn pair_cap_slack(states: &[PureState], class: OrthoClass) -> Result<f64> {
    let mut worst = f64::INFINITY;
    for i in 0..states.len() {
        for j in i + 1..states.len() {
            let c = pair_concurrence(&states[i], &states[j])?;
            let slack = match class {
                OrthoClass::Biorthogonal => -(c - 1.0).abs(),
                OrthoClass::Arbitrary => {
                    let o = inner_product(&states[i], &states[j])?.norm();
                    (1.0 + o * o).sqrt() - c
                }
                _ => 1.0 - c,
            };
            worst = worst.min(slack);
        }
    }
    Ok(worst)
}

fn draw_superposition<R: rand::Rng + ?Sized>(
    states: Vec<PureState>,
    rng: &mut R,
) -> Result<Superposition> {
    let m = states.len();
    for _ in 0..MAX_COEFFICIENT_REDRAWS {
        let gamma: Vec<Complex64> = random_unit_vector(m, rng);
        let s = Superposition::new(gamma, states.clone())?;
        match superpose_exact(&s) {
            Ok(_) => return Ok(s),
            Err(Error::VanishingNorm(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InfeasibleEnsemble("superposition keeps cancelling".into()))
}

fn run_trial(spec: &EnsembleSpec, trial: usize) -> Result<Slacks> {
    let mut rng = seed_stream(spec.seed, trial as u64);
    let states = random_class_set(spec, &mut rng)?;
    let s = draw_superposition(states, &mut rng)?;
    let class = spec.class;
    let opts = BoundsOptions {
        partition_cap: spec.partition_cap,
        ..BoundsOptions::default()
    };
    let two_qubit_pair = s.m() == 2 && s.dims() == (2, 2);
    let mut out: Slacks = Vec::new();

    let exact = superpose_exact(&s)?;
    out.push(("expansion_consistency", -(exact.exact - exact.expansion).abs()));

    if class == OrthoClass::Biorthogonal {
        out.push(("biorthogonal_exact", -(exact_biorthogonal(&s)? - exact.exact).abs()));
    }
    if class.is_one_sided_or_stronger() {
        out.push(("one_sided_bracket", bounds_one_sided(&s, &opts)?.bracket_slack()));
        out.push(("vector_orthogonality", -max_cross_dot(s.states())?));
    }
    if class.implies(OrthoClass::Orthogonal) {
        out.push(("orthogonal_bracket", bounds_orthogonal(&s, &opts)?.bracket_slack()));
        if two_qubit_pair {
            let refined = BoundsOptions { two_qubit_refine: true, ..opts };
            out.push(("orthogonal_refined_bracket", bounds_orthogonal(&s, &refined)?.bracket_slack()));
        }
    }
    if s.m() == 2 {
        out.push(("arbitrary_pair_bracket", bounds_arbitrary_pair(&s, &opts)?.bracket_slack()));
        if two_qubit_pair {
            let refined = BoundsOptions { two_qubit_refine: true, ..opts };
            out.push(("arbitrary_refined_bracket", bounds_arbitrary_pair(&s, &refined)?.bracket_slack()));
        }
        let with_ref = evaluate(&s, &BoundsOptions { reference: true, ..opts }, None)?;
        if let (Some(rl), Some(ru)) = (with_ref.reference_lower, with_ref.reference_upper) {
            out.push(("reference_dominance", (ru - with_ref.upper).min(with_ref.lower - rl)));
        }
    }
    out.push(("partition_bracket", bounds_arbitrary_multi(&s, &opts)?.bracket_slack()));

    out.push(("pair_concurrence_cap", pair_cap_slack(s.states(), class)?));
    let mut routes = 0.0f64;
    for (i, x) in s.states().iter().enumerate() {
        for y in &s.states()[i + 1..] {
            routes = routes.max((pair_concurrence(x, y)? - pair_concurrence_closed_form(x, y)?).abs());
        }
    }
    out.push(("pair_concurrence_routes", -routes));
    Ok(out)
}

/// Runs `spec.trials` independent trials. Trials may execute in parallel;
/// the report is folded in trial order and is identical for identical specs.
pub fn verify(spec: &EnsembleSpec) -> Result<VerificationReport> {
    spec.validate()?;
    let per_trial: Vec<Slacks> = (0..spec.trials)
        .into_par_iter()
        .map(|t| run_trial(spec, t))
        .collect::<Result<_>>()?;

    let mut per_check: BTreeMap<String, CheckStats> = BTreeMap::new();
    let mut violations = 0;
    let mut worst_margin = f64::INFINITY;
    for slacks in &per_trial {
        for &(name, slack) in slacks {
            let entry = per_check.entry(name.to_string()).or_insert(CheckStats {
                evaluations: 0,
                violations: 0,
                worst_slack: f64::INFINITY,
            });
            entry.evaluations += 1;
            entry.worst_slack = entry.worst_slack.min(slack);
            if slack < -spec.tolerance {
                entry.violations += 1;
                violations += 1;
            }
            worst_margin = worst_margin.min(slack);
        }
    }
    Ok(VerificationReport {
        spec: spec.into(),
        sampling: "haar: normalized complex Gaussian draws, ChaCha8 stream per trial",
        trials_run: per_trial.len(),
        violations,
        worst_margin,
        per_check,
    })
}
