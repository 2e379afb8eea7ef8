//! Earlier pair bounds from the I-concurrence literature,
//! kept for comparison plots.

use serde::Serialize;

use super::{Ingredients, Superposition};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ReferenceBounds {
    pub lower: f64,
    pub upper: f64,
    pub lower_unclamped: f64,
}

/// `min(|α/β| C(ψ), |β/α| C(φ))` over the terms with a nonzero
/// denominator; zero when neither is defined.
fn correction(alpha: f64, beta: f64, ca: f64, cb: f64) -> f64 {
    let mut terms = Vec::with_capacity(2);
    if beta > 0.0 {
        terms.push(alpha / beta * ca);
    }
    if alpha > 0.0 {
        terms.push(beta / alpha * cb);
    }
    terms.into_iter().fold(None, |acc: Option<f64>, t| Some(acc.map_or(t, |a| a.min(t))))
        .unwrap_or(0.0)
}

/// Reference bounds for a two-state superposition, normalized like ours.
///
/// Orthogonal pairs: upper `|α|²C(ψ) + |β|²C(φ) + 2|αβ|`, lower
/// `||α|²C(ψ) − |β|²C(φ)| − 2|αβ|(1 + δ)`. Otherwise the upper bound uses
/// `sqrt(1 + |⟨ψ|φ⟩|²)` in place of 1 and the lower one
/// `2|αβ| sqrt(1 + |⟨ψ|φ⟩|² + δ)`; both are then divided by `‖Γ‖²`.
pub fn reference_bounds(s: &Superposition, tol: f64) -> Result<ReferenceBounds> {
    if s.m() != 2 {
        return Err(Error::NotAPair(s.m()));
    }
    let ing = Ingredients::new(s, tol)?;
    let (a, b) = (ing.gamma[0].norm(), ing.gamma[1].norm());
    let (ca, cb) = (ing.conc[0], ing.conc[1]);
    let delta = correction(a, b, ca, cb);
    let spread = (a * a * ca - b * b * cb).abs();
    let o = ing.overlap[(0, 1)].norm();
    let (lower, upper) = if o < tol {
        (
            spread - 2.0 * a * b * (1.0 + delta),
            a * a * ca + b * b * cb + 2.0 * a * b,
        )
    } else {
        let n2 = ing.exact.norm * ing.exact.norm;
        (
            (spread - 2.0 * a * b * (1.0 + o * o + delta).sqrt()) / n2,
            (a * a * ca + b * b * cb + 2.0 * a * b * (1.0 + o * o).sqrt()) / n2,
        )
    };
    Ok(ReferenceBounds {
        lower: lower.max(0.0),
        upper,
        lower_unclamped: lower,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::{phi_3x3, psi_3x3};
    use super::super::{bounds_arbitrary_pair, bounds_orthogonal, BoundsOptions};
    use super::*;
    use crate::state::PureState;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn correction_limits() {
        assert_eq!(correction(1.0, 0.0, 0.7, 0.4), 0.0);
        assert_eq!(correction(0.0, 1.0, 0.7, 0.4), 0.0);
        assert_abs_diff_eq!(correction(0.6, 0.8, 1.0, 1.0), 0.75);
    }

    #[test]
    fn orthogonal_bell_pair_is_looser() {
        let bell = |s: f64| PureState::from_real(2, 2, &[FRAC_1_SQRT_2, 0.0, 0.0, s * FRAC_1_SQRT_2]).unwrap();
        let s = Superposition::pair(c(FRAC_1_SQRT_2), bell(1.0), c(FRAC_1_SQRT_2), bell(-1.0)).unwrap();
        let r = reference_bounds(&s, 1e-9).unwrap();
        let ours = bounds_orthogonal(&s, &BoundsOptions::default()).unwrap();
        assert!(r.lower_unclamped <= ours.lower_unclamped);
        assert_abs_diff_eq!(r.lower_unclamped, -2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.upper, ours.upper, epsilon = 1e-15);
    }

    #[test]
    fn single_term_limit() {
        let s = Superposition::pair(c(1.0), psi_3x3(), c(0.0), phi_3x3()).unwrap();
        let r = reference_bounds(&s, 1e-9).unwrap();
        let ours = bounds_arbitrary_pair(&s, &BoundsOptions::default()).unwrap();
        let root5_2 = 5f64.sqrt() / 2.0;
        for v in [r.lower, r.upper, ours.lower, ours.upper] {
            assert_abs_diff_eq!(v, root5_2, epsilon = 1e-14);
        }
    }

    #[test]
    fn sweep_dominance() {
        let opts = BoundsOptions::default();
        for k in 0..=200 {
            let x = k as f64 / 200.0;
            let s = Superposition::pair(c(x), psi_3x3(), c(-(1.0 - x * x).sqrt()), phi_3x3()).unwrap();
            let r = reference_bounds(&s, 1e-9).unwrap();
            let ours = bounds_arbitrary_pair(&s, &opts).unwrap();
            assert!(ours.upper <= r.upper + 1e-9, "x = {x}");
            assert!(ours.lower >= r.lower - 1e-9, "x = {x}");
        }
    }
}
