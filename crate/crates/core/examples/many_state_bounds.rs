//! Bounds for superpositions of three and four states, including the
//! exhaustive partition search for non-orthogonal sets.
//!
//! cargo run --example many_state_bounds

use concurrence_bounds::bounds::{bounds_arbitrary_multi, exact_biorthogonal, partition_count};
use concurrence_bounds::verify::{random_class_set, random_unit_vector, seed_stream};
use concurrence_bounds::{evaluate, BoundsOptions, EnsembleSpec, OrthoClass, Superposition};

fn main() -> concurrence_bounds::Result<()> {
    let opts = BoundsOptions::default();
    let mut rng = seed_stream(42, 0);
    for (class, m) in [
        (OrthoClass::Biorthogonal, 3),
        (OrthoClass::OneSidedA, 3),
        (OrthoClass::Orthogonal, 4),
        (OrthoClass::Arbitrary, 3),
        (OrthoClass::Arbitrary, 4),
    ] {
        let spec = EnsembleSpec { dim_a: 4, dim_b: 4, m, class, ..EnsembleSpec::default() };
        let states = random_class_set(&spec, &mut rng)?;
        let s = Superposition::new(random_unit_vector(m, &mut rng), states)?;
        let r = evaluate(&s, &opts, None)?;
        println!(
            "{class:13} m={m} {:?}: {:.6} <= {:.6} <= {:.6}",
            r.family, r.lower, r.exact, r.upper
        );
        if class == OrthoClass::Biorthogonal {
            println!("  closed form {:.12}", exact_biorthogonal(&s)?);
        }
        let multi = bounds_arbitrary_multi(&s, &opts)?;
        println!(
            "  partition search over {} splits: [{:.6}, {:.6}]",
            partition_count(m),
            multi.lower,
            multi.upper
        );
    }
    Ok(())
}
