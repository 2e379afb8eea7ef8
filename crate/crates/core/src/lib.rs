//! Concurrence of bipartite pure states and bounds on the concurrence of
//! their superpositions.
//!
//! - [`state`]: dense pure states, Schmidt decomposition, partial traces.
//! - [`concurrence`]: the concurrence vector built from real antisymmetric
//!   generators, pair concurrences and the universal inverter.
//! - [`classify`]: biorthogonal / one-sided / orthogonal / arbitrary sets.
//! - [`bounds`]: exact superposition concurrence and every bound family.
//! - [`verify`]: seeded Monte Carlo certification of the bounds.
//! - [`figure`], [`io`], [`cli`]: plot data, JSON files and the command line.

pub mod bounds;
pub mod classify;
pub mod cli;
pub mod concurrence;
pub mod error;
pub mod figure;
pub mod io;
pub mod state;
pub mod verify;

pub use bounds::{evaluate, superpose_exact, BoundFamily, BoundsOptions, BoundsReport, Superposition};
pub use classify::{classify_pair, classify_set, OrthoClass};
pub use concurrence::{concurrence, concurrence_vector, pair_concurrence, ConcurrenceVector};
pub use error::{Error, Result};
pub use state::{inner_product, schmidt_decompose, DensityOperator, PureState, SchmidtForm};
pub use verify::{verify, EnsembleSpec, VerificationReport};
