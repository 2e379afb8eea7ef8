//! Orthogonality classes of pairs and sets.
//!
//! cargo run --example classify

use concurrence_bounds::classify::{PairConditions, CLASSIFY_TOLERANCE};
use concurrence_bounds::figure::{sweep_phi, sweep_psi};
use concurrence_bounds::{classify_set, PureState};
use std::f64::consts::FRAC_1_SQRT_2;

fn main() -> concurrence_bounds::Result<()> {
    let h = FRAC_1_SQRT_2;
    let b = |i, j| PureState::basis(2, 2, i, j);
    let sets = [
        ("|00>, |11>", vec![b(0, 0)?, b(1, 1)?]),
        ("|00>, |10>", vec![b(0, 0)?, b(1, 0)?]),
        ("|00>, |01>", vec![b(0, 0)?, b(0, 1)?]),
        (
            "bell +/-",
            vec![
                PureState::from_real(2, 2, &[h, 0.0, 0.0, h])?,
                PureState::from_real(2, 2, &[h, 0.0, 0.0, -h])?,
            ],
        ),
        ("3x3 pair", vec![sweep_psi(), sweep_phi()]),
        ("|00>, |11>, |10>", vec![b(0, 0)?, b(1, 1)?, b(1, 0)?]),
    ];
    for (name, set) in &sets {
        let p = PairConditions::of(&set[0], &set[1])?;
        println!(
            "{name:18} {:13} |<x|y>| = {:.3}  Tr[rA rA'] = {:.3}  Tr[rB rB'] = {:.3}",
            classify_set(set, CLASSIFY_TOLERANCE)?.to_string(),
            p.overlap,
            p.trace_a,
            p.trace_b
        );
    }
    Ok(())
}
