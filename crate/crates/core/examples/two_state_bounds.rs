//! Exact concurrence of `αψ + βφ` and the bounds of each family that applies.
//!
//! cargo run --example two_state_bounds

use concurrence_bounds::bounds::reference_bounds;
use concurrence_bounds::figure::{sweep_phi, sweep_psi};
use concurrence_bounds::{evaluate, BoundsOptions, OrthoClass, PureState, Superposition};
use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn main() -> concurrence_bounds::Result<()> {
    let h = FRAC_1_SQRT_2;
    let bell_p = PureState::from_real(2, 2, &[h, 0.0, 0.0, h])?;
    let bell_m = PureState::from_real(2, 2, &[h, 0.0, 0.0, -h])?;
    let opts = BoundsOptions::default();

    let s = Superposition::pair(c(0.6), bell_p, c(0.8), bell_m)?;
    for force in [None, Some(OrthoClass::Arbitrary)] {
        let r = evaluate(&s, &opts, force)?;
        println!("bell pair {:?}: {:.6} <= {:.6} <= {:.6}", r.family, r.lower, r.exact, r.upper);
    }
    let refined = evaluate(&s, &BoundsOptions { two_qubit_refine: true, ..opts }, None)?;
    println!("two-qubit refined upper {:.6}", refined.upper);

    let s = Superposition::pair(c(0.3), sweep_psi(), c(-(1.0f64 - 0.09).sqrt()), sweep_phi())?;
    let r = evaluate(&s, &opts, None)?;
    let reference = reference_bounds(&s, opts.tol)?;
    println!(
        "3x3 pair x=0.3 ({}): ours [{:.6}, {:.6}], reference [{:.6}, {:.6}], exact {:.6}",
        r.ortho_class, r.lower, r.upper, reference.lower, reference.upper, r.exact
    );
    Ok(())
}
