//! Bounds for superpositions of non-orthogonal states. Everything here
//! bounds `‖Γ‖² C(Γ/‖Γ‖)` and is divided by `‖Γ‖²` before reporting.

use num_complex::Complex64;

use super::{BoundFamily, BoundsOptions, BoundsReport, Ingredients, Superposition};
use crate::error::{Error, Result};

/// Number of ways to split the `m(m−1)/2` index pairs into two sets.
pub fn partition_count(m: usize) -> u64 {
    1u64 << (m * m.saturating_sub(1) / 2)
}

/// Cap on `C(ψ_i, ψ_j)` used in the first-line bounds: `sqrt(1 + |⟨ψ_i|ψ_j⟩|²)`,
/// or the two-qubit value `sqrt(1 − δ²)` with
/// `δ = max(|C(ψ) − |⟨ψ|φ⟩||, |C(φ) − |⟨ψ|φ⟩||)`.
fn pair_cap(ing: &Ingredients, i: usize, j: usize, refine: bool) -> f64 {
    let o = ing.overlap[(i, j)].norm();
    if refine {
        let delta = (ing.conc[i] - o).abs().max((ing.conc[j] - o).abs());
        (1.0 - delta * delta).max(0.0).sqrt()
    } else {
        (1.0 + o * o).sqrt()
    }
}

/// `(upper, lower)` of the expressions that only use the pair-concurrence cap.
fn first_line(ing: &Ingredients, refine: bool) -> (f64, f64) {
    let weights: Vec<f64> = (0..ing.m()).map(|i| ing.weighted(i)).collect();
    let total: f64 = weights.iter().sum();
    let cross: f64 = ing
        .pairs()
        .map(|(i, j)| 2.0 * (ing.gamma[i] * ing.gamma[j]).norm() * pair_cap(ing, i, j, refine))
        .sum();
    let lower = if ing.m() == 2 {
        (weights[0] - weights[1]).abs() - cross
    } else {
        2.0 * weights.iter().copied().fold(0.0, f64::max) - total - cross
    };
    (total + cross, lower)
}

/// `2 Σ_{i<j} |γ_i γ_j| sqrt(1 − |⟨ψ_i|ψ_j⟩|²)`.
fn orthogonal_remainder(ing: &Ingredients) -> f64 {
    ing.pairs()
        .map(|(i, j)| {
            let o = ing.overlap[(i, j)].norm();
            2.0 * (ing.gamma[i] * ing.gamma[j]).norm() * (1.0 - o * o).max(0.0).sqrt()
        })
        .sum()
}

fn check_refine(ing: &Ingredients, opts: &BoundsOptions) -> Result<bool> {
    if opts.two_qubit_refine && !ing.is_two_qubit_pair() {
        return Err(Error::RefinementUnavailable);
    }
    Ok(opts.two_qubit_refine)
}

fn normalized_report(
    ing: &Ingredients,
    family: BoundFamily,
    lower: f64,
    upper: f64,
    refined: bool,
) -> BoundsReport {
    let n2 = ing.exact.norm * ing.exact.norm;
    let mut r = ing.report(family, lower / n2, upper / n2);
    r.two_qubit_refined = refined;
    r
}

/// Bounds for `α|ψ⟩ + β|φ⟩` with arbitrary overlap.
///
/// The upper bound is the smallest of
/// `|α|²C(ψ) + |β|²C(φ) + 2|αβ| sqrt(1 + |⟨ψ|φ⟩|²)`,
/// `|α|²C(ψ) + |β² + 2αβ⟨φ|ψ⟩| C(φ) + 2|αβ| sqrt(1 − |⟨ψ|φ⟩|²)` and
/// `|α² + 2αβ⟨ψ|φ⟩| C(ψ) + |β|²C(φ) + 2|αβ| sqrt(1 − |⟨ψ|φ⟩|²)`;
/// the lower bound is the largest of the matching differences.
pub fn bounds_arbitrary_pair(s: &Superposition, opts: &BoundsOptions) -> Result<BoundsReport> {
    if s.m() != 2 {
        return Err(Error::NotAPair(s.m()));
    }
    let ing = Ingredients::new(s, opts.tol)?;
    let refine = check_refine(&ing, opts)?;
    let (a, b) = (ing.gamma[0], ing.gamma[1]);
    let (ca, cb) = (ing.conc[0], ing.conc[1]);
    let o = ing.overlap[(0, 1)];
    let rem = orthogonal_remainder(&ing);

    let (u1, l1) = first_line(&ing, refine);
    // φ expanded along ψ and its complement, then ψ along φ.
    let wa = a.norm_sqr() * ca;
    let wb = b.norm_sqr() * cb;
    let wb_mixed = (b * b + a * b * o.conj() * 2.0).norm() * cb;
    let wa_mixed = (a * a + a * b * o * 2.0).norm() * ca;
    let upper = u1.min(wa + wb_mixed + rem).min(wa_mixed + wb + rem);
    let lower = l1
        .max((wa - wb_mixed).abs() - rem)
        .max((wa_mixed - wb).abs() - rem);
    Ok(normalized_report(&ing, BoundFamily::ArbitraryPair, lower, upper, refine))
}

/// Bounds for `m` arbitrary states.
///
/// Besides the first-line expressions, every split of the index pairs into
/// a minus set (where `ψ_l` is expanded along `ψ_k`, `k < l`) and a plus set
/// (where `ψ_r` is expanded along `ψ_s`, `r < s`) gives a candidate. In a
/// given split each state `ψ_i` collects the coefficient
///
/// `c_i = γ_i² + 2 Σ_{(i,l) ∈ minus} γ_i γ_l ⟨ψ_i|ψ_l⟩ + 2 Σ_{(r,i) ∈ plus} γ_r γ_i ⟨ψ_i|ψ_r⟩`
///
/// and the candidates are `Σ |c_i| C(ψ_i) + R` (upper) and
/// `2 max |c_i| C(ψ_i) − Σ |c_i| C(ψ_i) − R` (lower), with `R` the
/// orthogonal remainder `2 Σ |γ_i γ_j| sqrt(1 − |⟨ψ_i|ψ_j⟩|²)`. States that
/// anchor no pair keep `|c_i| = |γ_i|²`.
///
/// Above `opts.partition_cap` states only the first-line bounds are used and
/// the report is flagged.
pub fn bounds_arbitrary_multi(s: &Superposition, opts: &BoundsOptions) -> Result<BoundsReport> {
    if s.m() < 2 {
        return Err(Error::TooFewStates {
            required: 2,
            got: s.m(),
        });
    }
    let ing = Ingredients::new(s, opts.tol)?;
    let refine = check_refine(&ing, opts)?;
    let (mut upper, mut lower) = first_line(&ing, refine);

    let m = ing.m();
    if m > opts.partition_cap {
        let mut r = normalized_report(&ing, BoundFamily::ArbitraryMulti, lower, upper, refine);
        r.partition_fallback = true;
        return Ok(r);
    }

    let pairs: Vec<(usize, usize)> = ing.pairs().collect();
    let rem = orthogonal_remainder(&ing);
    let squares: Vec<Complex64> = ing.gamma.iter().map(|g| g * g).collect();
    // Contribution of pair t to its anchor's coefficient, for either choice.
    let minus_term: Vec<Complex64> = pairs
        .iter()
        .map(|&(k, l)| ing.gamma[k] * ing.gamma[l] * ing.overlap[(k, l)] * 2.0)
        .collect();
    let plus_term: Vec<Complex64> = pairs
        .iter()
        .map(|&(r, s)| ing.gamma[r] * ing.gamma[s] * ing.overlap[(s, r)] * 2.0)
        .collect();

    let count = partition_count(m);
    let mut coef = vec![Complex64::new(0.0, 0.0); m];
    for mask in 0..count {
        coef.copy_from_slice(&squares);
        for (t, &(i, j)) in pairs.iter().enumerate() {
            if mask >> t & 1 == 1 {
                coef[i] += minus_term[t];
            } else {
                coef[j] += plus_term[t];
            }
        }
        let mut sum = 0.0;
        let mut max = 0.0f64;
        for (c, conc) in coef.iter().zip(&ing.conc) {
            let w = c.norm() * conc;
            sum += w;
            max = max.max(w);
        }
        upper = upper.min(sum + rem);
        lower = lower.max(2.0 * max - sum - rem);
    }
    let mut r = normalized_report(&ing, BoundFamily::ArbitraryMulti, lower, upper, refine);
    r.partition_count = Some(count);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{phi_3x3, psi_3x3};
    use super::super::{bounds_orthogonal, exact_biorthogonal};
    use super::*;
    use crate::state::PureState;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn sweep_pair(x: f64) -> Superposition {
        Superposition::pair(c(x), psi_3x3(), c(-(1.0 - x * x).sqrt()), phi_3x3()).unwrap()
    }

    #[test]
    fn counts() {
        assert_eq!(partition_count(2), 2);
        assert_eq!(partition_count(3), 8);
        assert_eq!(partition_count(6), 32768);
    }

    #[test]
    fn pair_examples() {
        let opts = BoundsOptions::default();
        let r = bounds_arbitrary_pair(&sweep_pair(0.0), &opts).unwrap();
        let root5_2 = 5f64.sqrt() / 2.0;
        assert_abs_diff_eq!(r.exact, root5_2, epsilon = 1e-14);
        assert!(r.lower <= root5_2 + 1e-12 && root5_2 <= r.upper + 1e-12);

        let r = bounds_arbitrary_pair(&sweep_pair(FRAC_1_SQRT_2), &opts).unwrap();
        assert!(r.exact < 1e-12);
        assert_abs_diff_eq!(r.lower, 0.0);

        let three = Superposition::new(
            vec![c(0.6), c(0.0), c(0.8)],
            (0..3).map(|k| PureState::basis(3, 3, k, k).unwrap()).collect(),
        )
        .unwrap();
        assert!(matches!(bounds_arbitrary_pair(&three, &opts), Err(Error::NotAPair(3))));
        assert!(matches!(
            bounds_arbitrary_pair(&sweep_pair(0.3), &BoundsOptions { two_qubit_refine: true, ..opts }),
            Err(Error::RefinementUnavailable)
        ));
    }

    #[test]
    fn orthogonal_input_reduces() {
        let h = c(FRAC_1_SQRT_2);
        let bell = |s: f64| PureState::from_real(2, 2, &[FRAC_1_SQRT_2, 0.0, 0.0, s * FRAC_1_SQRT_2]).unwrap();
        for (a, b) in [(h, h), (c(0.6), c(0.8)), (c(0.8), Complex64::new(0.0, 0.6))] {
            let s = Superposition::pair(a, bell(1.0), b, bell(-1.0)).unwrap();
            for refine in [false, true] {
                let opts = BoundsOptions { two_qubit_refine: refine, ..Default::default() };
                let p = bounds_arbitrary_pair(&s, &opts).unwrap();
                let o = bounds_orthogonal(&s, &opts).unwrap();
                assert_abs_diff_eq!(p.upper, o.upper, epsilon = 1e-12);
                assert_abs_diff_eq!(p.lower_unclamped, o.lower_unclamped, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn multi_with_two_states_matches_pair() {
        let opts = BoundsOptions::default();
        for x in [0.0, 0.2, 0.5, 0.9, 1.0] {
            let s = sweep_pair(x);
            let p = bounds_arbitrary_pair(&s, &opts).unwrap();
            let m = bounds_arbitrary_multi(&s, &opts).unwrap();
            assert_eq!(m.partition_count, Some(2));
            assert_abs_diff_eq!(p.upper, m.upper, epsilon = 1e-12);
            assert_abs_diff_eq!(p.lower_unclamped, m.lower_unclamped, epsilon = 1e-12);
        }
    }

    #[test]
    fn multi_on_biorthogonal_set_covers_closed_form() {
        let s = Superposition::new(
            vec![c(0.5), Complex64::new(0.0, 0.5), c(FRAC_1_SQRT_2)],
            vec![
                PureState::from_real(4, 4, &{
                    let mut v = [0.0; 16];
                    v[0] = 0.8;
                    v[5] = 0.6;
                    v
                })
                .unwrap(),
                PureState::basis(4, 4, 2, 2).unwrap(),
                PureState::basis(4, 4, 3, 3).unwrap(),
            ],
        )
        .unwrap();
        let r = bounds_arbitrary_multi(&s, &BoundsOptions::default()).unwrap();
        let exact = exact_biorthogonal(&s).unwrap();
        assert!(r.upper >= exact - 1e-12);
        assert!(r.brackets(1e-12));
    }

    #[test]
    fn multi_falls_back_above_cap() {
        let s = Superposition::new(
            vec![c(0.5); 4],
            (0..4).map(|k| PureState::basis(4, 4, k, (k + 1) % 4).unwrap()).collect(),
        )
        .unwrap();
        let opts = BoundsOptions { partition_cap: 3, ..Default::default() };
        let r = bounds_arbitrary_multi(&s, &opts).unwrap();
        assert!(r.partition_fallback);
        assert_eq!(r.partition_count, None);
        assert!(r.brackets(1e-12));
    }
}
