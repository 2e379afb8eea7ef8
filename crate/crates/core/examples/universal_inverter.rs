//! The universal inverter in closed form and as a generator sum, and the
//! I-concurrence `sqrt(⟨ψ|S(ψ)|ψ⟩)`.
//!
//! cargo run --example universal_inverter

use concurrence_bounds::concurrence::{concurrence, universal_inverter, universal_inverter_by_generators};
use concurrence_bounds::verify::{random_pure_state, seed_stream};
use concurrence_bounds::DensityOperator;
use nalgebra::DMatrix;

fn main() -> concurrence_bounds::Result<()> {
    let dims = (2, 3);
    let s = random_pure_state(dims, &mut seed_stream(5, 0))?;
    let rho = DensityOperator::projector(&s);
    let closed = universal_inverter(&rho, dims)?;
    let gens = universal_inverter_by_generators(&rho, dims)?;
    let diff = (&closed.entries - &gens.entries).map(|z| z.norm()).max();
    println!("max entrywise difference {diff:.2e}");

    let v = DMatrix::from_column_slice(6, 1, s.amplitudes());
    let expectation = (v.adjoint() * &closed.entries * &v)[(0, 0)].re;
    println!("sqrt(<psi|S(psi)|psi>) = {:.12}", expectation.sqrt());
    println!("C(psi)                 = {:.12}", concurrence(&s));
    Ok(())
}
