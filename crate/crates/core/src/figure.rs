//! The two-state 3x3 sweep `x|ψ⟩ − sqrt(1 − x²)|φ⟩` for `x ∈ [0, 1]`, with
//! exact concurrence, our pair bounds and the reference bounds.

use std::f64::consts::FRAC_1_SQRT_2;
use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;

use crate::bounds::{bounds_arbitrary_pair, reference_bounds, BoundsOptions, Superposition};
use crate::error::{Error, Result};
use crate::state::PureState;

pub const CSV_HEADER: &str = "x,exact,lower,upper,ref_lower,ref_upper";

pub const DEFAULT_SAMPLES: usize = 201;

/// `(|00⟩ + (|11⟩ + |22⟩)/√2)/√2`.
pub fn sweep_psi() -> PureState {
    let c = |v: f64| Complex64::new(v, 0.0);
    PureState::from_terms(3, 3, &[(0, 0, c(FRAC_1_SQRT_2)), (1, 1, c(0.5)), (2, 2, c(0.5))])
        .expect("valid built-in state")
}

/// `(|00⟩ + (−|11⟩ + |22⟩)/√2)/√2`.
pub fn sweep_phi() -> PureState {
    let c = |v: f64| Complex64::new(v, 0.0);
    PureState::from_terms(3, 3, &[(0, 0, c(FRAC_1_SQRT_2)), (1, 1, c(-0.5)), (2, 2, c(0.5))])
        .expect("valid built-in state")
}

pub fn sweep_superposition(x: f64) -> Result<Superposition> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::InvalidArgument(format!("x = {x} outside [0, 1]")));
    }
    Superposition::pair(
        Complex64::new(x, 0.0),
        sweep_psi(),
        Complex64::new(-(1.0 - x * x).sqrt(), 0.0),
        sweep_phi(),
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FigureRow {
    pub x: f64,
    pub exact: f64,
    pub lower: f64,
    pub upper: f64,
    pub ref_lower: f64,
    pub ref_upper: f64,
}

impl FigureRow {
    pub fn at(x: f64) -> Result<Self> {
        let s = sweep_superposition(x)?;
        let opts = BoundsOptions::default();
        let ours = bounds_arbitrary_pair(&s, &opts)?;
        let r = reference_bounds(&s, opts.tol)?;
        Ok(Self {
            x,
            exact: ours.exact,
            lower: ours.lower,
            upper: ours.upper,
            ref_lower: r.lower,
            ref_upper: r.upper,
        })
    }
}

/// `samples` uniform points `k/(samples−1)`; with `anchor`, the cancellation
/// point `1/√2` is inserted in order as an extra row.
pub fn grid(samples: usize, anchor: bool) -> Result<Vec<f64>> {
    if samples < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 samples, got {samples}")));
    }
    let mut xs: Vec<f64> = (0..samples).map(|k| k as f64 / (samples - 1) as f64).collect();
    if anchor && !xs.contains(&FRAC_1_SQRT_2) {
        let at = xs.partition_point(|&x| x < FRAC_1_SQRT_2);
        xs.insert(at, FRAC_1_SQRT_2);
    }
    Ok(xs)
}

pub fn figure1(samples: usize, anchor: bool) -> Result<Vec<FigureRow>> {
    grid(samples, anchor)?.into_iter().map(FigureRow::at).collect()
}

/// Formats with 10 significant digits: fixed notation for moderate
/// magnitudes, scientific otherwise.
pub fn sig10(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{v:.9e}");
    let exp: i32 = sci[sci.find('e').unwrap() + 1..].parse().unwrap();
    if (-5..10).contains(&exp) {
        format!("{:.*}", (9 - exp) as usize, v)
    } else {
        sci
    }
}

pub fn write_csv<W: Write>(mut out: W, rows: &[FigureRow]) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let cells = [r.x, r.exact, r.lower, r.upper, r.ref_lower, r.ref_upper].map(sig10);
        writeln!(out, "{}", cells.join(","))?;
    }
    Ok(())
}
