//! Families that assume pairwise orthogonal component states, where the
//! superposition is already normalized.

use super::{require, BoundFamily, BoundsOptions, BoundsReport, Ingredients, Superposition};
use crate::classify::OrthoClass;
use crate::error::{Error, Result};

/// `Σ |γ_i|⁴ C²(ψ_i)`.
fn diagonal_sum(ing: &Ingredients) -> f64 {
    (0..ing.m()).map(|i| ing.weighted(i).powi(2)).sum()
}

/// `4 Σ_{i<j} |γ_i γ_j|²`.
fn cross_sum(ing: &Ingredients) -> f64 {
    ing.pairs()
        .map(|(i, j)| 4.0 * (ing.gamma[i] * ing.gamma[j]).norm_sqr())
        .sum()
}

pub(super) fn biorthogonal_closed_form(ing: &Ingredients) -> f64 {
    (diagonal_sum(ing) + cross_sum(ing)).sqrt()
}

/// Closed-form concurrence of a superposition of biorthogonal states,
/// `sqrt(Σ |γ_i|⁴ C²(ψ_i) + 4 Σ_{i<j} |γ_i γ_j|²)`.
pub fn exact_biorthogonal(s: &Superposition) -> Result<f64> {
    let ing = Ingredients::new(s, super::CLASSIFY_TOLERANCE)?;
    require(&ing, OrthoClass::Biorthogonal)?;
    Ok(biorthogonal_closed_form(&ing))
}

/// Bounds for one-sided orthogonal states (either side); the pair
/// concurrences are only known to lie in `[0, 1]`.
pub fn bounds_one_sided(s: &Superposition, opts: &BoundsOptions) -> Result<BoundsReport> {
    let ing = Ingredients::new(s, opts.tol)?;
    require(&ing, OrthoClass::OneSidedA)?;
    let diag = diagonal_sum(&ing);
    let upper = (diag + cross_sum(&ing)).sqrt();
    Ok(ing.report(BoundFamily::OneSided, diag.sqrt(), upper))
}

/// Bounds for pairwise orthogonal states.
///
/// Upper `Σ |γ_i|² C(ψ_i) + 2 Σ_{i<j} |γ_i γ_j| κ`, lower
/// `2Δ − Σ |γ_i|² C(ψ_i) − 2 Σ_{i<j} |γ_i γ_j| κ` with `Δ = max |γ_i|² C(ψ_i)`.
/// `κ = 1`, or `sqrt(1 − max(C(ψ), C(φ))²)` for a refined two-qubit pair.
pub fn bounds_orthogonal(s: &Superposition, opts: &BoundsOptions) -> Result<BoundsReport> {
    let ing = Ingredients::new(s, opts.tol)?;
    require(&ing, OrthoClass::Orthogonal)?;
    let cap = if opts.two_qubit_refine {
        if !ing.is_two_qubit_pair() {
            return Err(Error::RefinementUnavailable);
        }
        let delta = ing.conc[0].max(ing.conc[1]);
        (1.0 - delta * delta).max(0.0).sqrt()
    } else {
        1.0
    };
    let cross: f64 = ing
        .pairs()
        .map(|(i, j)| 2.0 * (ing.gamma[i] * ing.gamma[j]).norm() * cap)
        .sum();
    let weights: Vec<f64> = (0..ing.m()).map(|i| ing.weighted(i)).collect();
    let total: f64 = weights.iter().sum();
    let lower = if ing.m() == 2 {
        (weights[0] - weights[1]).abs() - cross
    } else {
        let delta = weights.iter().copied().fold(0.0, f64::max);
        2.0 * delta - total - cross
    };
    let mut report = ing.report(BoundFamily::Orthogonal, lower, total + cross);
    report.two_qubit_refined = opts.two_qubit_refine;
    Ok(report)
}
