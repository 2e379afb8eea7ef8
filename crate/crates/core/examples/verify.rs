//! Seeded Monte Carlo certification of every bound family.
//!
//! cargo run --release --example verify

use concurrence_bounds::{verify, EnsembleSpec, OrthoClass};

fn main() -> concurrence_bounds::Result<()> {
    for (class, dims, m) in [
        (OrthoClass::Biorthogonal, (4, 4), 3),
        (OrthoClass::OneSidedB, (2, 4), 2),
        (OrthoClass::Orthogonal, (2, 2), 2),
        (OrthoClass::Arbitrary, (3, 3), 4),
    ] {
        let spec = EnsembleSpec {
            dim_a: dims.0,
            dim_b: dims.1,
            m,
            class,
            trials: 200,
            seed: 7,
            ..EnsembleSpec::default()
        };
        let r = verify(&spec)?;
        println!("{class} {dims:?} m={m}: {} violations, worst margin {:.3e}", r.violations, r.worst_margin);
        for (name, stats) in &r.per_check {
            println!("  {name:28} {:4} checks  worst slack {:+.3e}", stats.evaluations, stats.worst_slack);
        }
    }
    Ok(())
}
