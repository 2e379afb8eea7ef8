//! Concurrence of a few states by the generator-based vector and by purity.
//!
//! cargo run --example concurrence_vector

use concurrence_bounds::concurrence::{concurrence_from_purity, concurrence_vector};
use concurrence_bounds::verify::{random_pure_state, seed_stream};
use concurrence_bounds::PureState;
use std::f64::consts::FRAC_1_SQRT_2;

fn main() -> concurrence_bounds::Result<()> {
    let h = FRAC_1_SQRT_2;
    let states = [
        ("bell", PureState::from_real(2, 2, &[h, 0.0, 0.0, h])?),
        ("product", PureState::basis(3, 2, 1, 0)?),
        ("3x3 example", concurrence_bounds::figure::sweep_psi()),
        ("haar 4x5", random_pure_state((4, 5), &mut seed_stream(1, 0))?),
    ];
    for (name, s) in &states {
        let v = concurrence_vector(s, s)?;
        let (rows, cols) = v.shape();
        println!(
            "{name:12} {}x{}  {rows}x{cols} components  C = {:.10}  purity route = {:.10}",
            s.dim_a(),
            s.dim_b(),
            v.norm(),
            concurrence_from_purity(s)
        );
    }
    Ok(())
}
