//! Schmidt decomposition, reduced states and local-unitary invariance.
//!
//! cargo run --example schmidt

use concurrence_bounds::concurrence::concurrence;
use concurrence_bounds::state::{partial_trace_a, SCHMIDT_THRESHOLD};
use concurrence_bounds::verify::sampling::haar_unitary;
use concurrence_bounds::verify::{random_pure_state, seed_stream};
use concurrence_bounds::schmidt_decompose;

fn main() -> concurrence_bounds::Result<()> {
    let mut rng = seed_stream(3, 0);
    let s = random_pure_state((3, 4), &mut rng)?;
    let form = schmidt_decompose(&s, SCHMIDT_THRESHOLD);
    println!("rank {} coefficients {:?}", form.rank, form.coefficients);

    let back = form.reassemble()?;
    let err: f64 = s
        .amplitudes()
        .iter()
        .zip(back.amplitudes())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("reassembly error {err:.2e}");

    let rho_a = partial_trace_a(&s, &s)?;
    println!("Tr rho_A = {:.12}, purity = {:.12}", rho_a.trace().re, s.purity());
    let sum_l4: f64 = form.coefficients.iter().map(|l| l.powi(4)).sum();
    println!("sum of lambda^4 = {sum_l4:.12}");

    let moved = s.apply_local(&haar_unitary(3, &mut rng), &haar_unitary(4, &mut rng))?;
    println!("C before {:.12}, after local unitaries {:.12}", concurrence(&s), concurrence(&moved));
    Ok(())
}
