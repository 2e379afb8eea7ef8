//! Seeded random states and state sets with a prescribed orthogonality class.
//!
//! The generator is ChaCha8 seeded from a 64-bit seed; each trial uses its
//! own ChaCha stream so draws do not depend on scheduling order.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::EnsembleSpec;
use crate::classify::{classify_set, OrthoClass, CLASSIFY_TOLERANCE};
use crate::error::{Error, Result};
use crate::state::PureState;

const MAX_REDRAWS: usize = 100;

/// ChaCha8 generator for `(seed, stream)`.
pub fn seed_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// Uniform point on the unit sphere of `C^n`.
pub fn random_unit_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    loop {
        let v: Vec<Complex64> = (0..n).map(|_| gaussian(rng)).collect();
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-300 {
            return v.into_iter().map(|z| z / norm).collect();
        }
    }
}

/// Haar-random pure state of `C^dim_a ⊗ C^dim_b`.
pub fn random_pure_state<R: Rng + ?Sized>(dims: (usize, usize), rng: &mut R) -> Result<PureState> {
    let (na, nb) = dims;
    if na < 2 || nb < 2 {
        return Err(Error::InvalidDimension(na, nb));
    }
    PureState::new(na, nb, random_unit_vector(na * nb, rng))
}

/// Modified Gram–Schmidt; `None` if the inputs are numerically dependent.
pub fn gram_schmidt(mut vectors: Vec<Vec<Complex64>>) -> Option<Vec<Vec<Complex64>>> {
    for k in 0..vectors.len() {
        let (done, rest) = vectors.split_at_mut(k);
        let v = &mut rest[0];
        for q in done.iter() {
            let proj: Complex64 = q.iter().zip(v.iter()).map(|(a, b)| a.conj() * b).sum();
            v.iter_mut().zip(q).for_each(|(x, y)| *x -= proj * y);
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm < 1e-10 {
            return None;
        }
        v.iter_mut().for_each(|z| *z /= norm);
    }
    Some(vectors)
}

/// Haar-random unitary; columns are an orthonormal basis of `C^n`.
pub fn haar_unitary<R: Rng + ?Sized>(n: usize, rng: &mut R) -> DMatrix<Complex64> {
    loop {
        let cols = (0..n).map(|_| (0..n).map(|_| gaussian(rng)).collect()).collect();
        if let Some(q) = gram_schmidt(cols) {
            return DMatrix::from_fn(n, n, |r, c| q[c][r]);
        }
    }
}

/// Schmidt-rank budget for `m` disjoint blocks in a space of size `capacity`:
/// each rank is 1 or 2, drawn uniformly while the remaining states still fit.
fn block_ranks<R: Rng + ?Sized>(m: usize, capacity: usize, rng: &mut R) -> Vec<usize> {
    let mut used = 0;
    (0..m)
        .map(|i| {
            let free = capacity - used - (m - i - 1);
            let rank = if free >= 2 { rng.random_range(1..=2) } else { 1 };
            used += rank;
            rank
        })
        .collect()
}

fn matrix_state(psi: &DMatrix<Complex64>) -> Result<PureState> {
    let (na, nb) = psi.shape();
    let amps = (0..na)
        .flat_map(|i| (0..nb).map(move |j| (i, j)))
        .map(|(i, j)| psi[(i, j)])
        .collect();
    PureState::new(na, nb, amps)
}

fn gaussian_matrix<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> DMatrix<Complex64> {
    DMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// States on disjoint local blocks: on both sides when `both`, otherwise on A only.
fn block_states<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    both: bool,
    rng: &mut R,
) -> Result<Vec<PureState>> {
    let (na, nb) = (spec.dim_a, spec.dim_b);
    let capacity = if both { na.min(nb) } else { na };
    let ua = haar_unitary(na, rng);
    let ub = haar_unitary(nb, rng);
    let ranks = block_ranks(spec.m, capacity, rng);
    let mut offset = 0;
    ranks
        .into_iter()
        .map(|rank| {
            let ea = ua.columns(offset, rank);
            let psi = if both {
                let fb = ub.columns(offset, rank);
                ea * gaussian_matrix(rank, rank, rng) * fb.transpose()
            } else {
                ea * gaussian_matrix(rank, nb, rng)
            };
            offset += rank;
            matrix_state(&psi)
        })
        .collect()
}

fn transpose_state(s: &PureState) -> Result<PureState> {
    matrix_state(&s.coefficient_matrix().transpose())
}

/// A set of `spec.m` states whose [`classify_set`] class is exactly `spec.class`.
///
/// Biorthogonal sets live on disjoint Schmidt blocks on both sides, one-sided
/// sets on disjoint blocks of one side with a shared support on the other,
/// orthogonal sets are Gram–Schmidt orthonormalized Haar draws and arbitrary
/// sets are independent Haar draws. Accidental stronger classes are redrawn.
pub fn random_class_set<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<Vec<PureState>> {
    spec.validate()?;
    let dims = (spec.dim_a, spec.dim_b);
    for _ in 0..MAX_REDRAWS {
        let states = match spec.class {
            OrthoClass::Biorthogonal => block_states(spec, true, rng)?,
            OrthoClass::OneSidedA => block_states(spec, false, rng)?,
            OrthoClass::OneSidedB => {
                let mirrored = EnsembleSpec {
                    dim_a: spec.dim_b,
                    dim_b: spec.dim_a,
                    class: OrthoClass::OneSidedA,
                    ..spec.clone()
                };
                block_states(&mirrored, false, rng)?
                    .iter()
                    .map(transpose_state)
                    .collect::<Result<_>>()?
            }
            OrthoClass::Orthogonal => {
                let draws = (0..spec.m)
                    .map(|_| random_unit_vector(dims.0 * dims.1, rng))
                    .collect();
                match gram_schmidt(draws) {
                    Some(vs) => vs
                        .into_iter()
                        .map(|v| PureState::new(dims.0, dims.1, v))
                        .collect::<Result<_>>()?,
                    None => continue,
                }
            }
            OrthoClass::Arbitrary => (0..spec.m)
                .map(|_| random_pure_state(dims, rng))
                .collect::<Result<_>>()?,
        };
        if classify_set(&states, CLASSIFY_TOLERANCE)? == spec.class {
            return Ok(states);
        }
    }
    Err(Error::InfeasibleEnsemble(format!(
        "no {} set found after {MAX_REDRAWS} draws",
        spec.class
    )))
}
