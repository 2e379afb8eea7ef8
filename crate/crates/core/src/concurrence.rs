//! Concurrence vectors and the scalar concurrences derived from them.
//!
//! Components are `C_ab(x, y) = ⟨x| L_a ⊗ L_b |y*⟩` with `L` the real
//! antisymmetric generators `|i⟩⟨j| − |j⟩⟨i|`, `i < j`, in lexicographic
//! order, and `|y*⟩` the entrywise conjugate in the computational basis.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::{
    inner_product, partial_trace_a, partial_trace_b, trace_product, DensityOperator, PureState,
};

/// Generators `L^(ij) = |i⟩⟨j| − |j⟩⟨i|` of SO(n).
#[derive(Clone, Debug)]
pub struct GeneratorSet {
    dim: usize,
    pairs: Vec<(usize, usize)>,
}

impl GeneratorSet {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::GeneratorDimension(n));
        }
        let pairs = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        Ok(Self { dim: n, pairs })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Index pairs `(i, j)`, `i < j`, in generator order.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Dense matrix of generator `k`.
    pub fn matrix(&self, k: usize) -> DMatrix<f64> {
        let (i, j) = self.pairs[k];
        let mut m = DMatrix::zeros(self.dim, self.dim);
        m[(i, j)] = 1.0;
        m[(j, i)] = -1.0;
        m
    }

    pub fn matrices(&self) -> impl Iterator<Item = DMatrix<f64>> + '_ {
        (0..self.len()).map(|k| self.matrix(k))
    }
}

/// Components `C_ab` laid out as a `rows × cols` matrix, rows indexing the
/// SO(dim_a) generators and columns the SO(dim_b) generators.
#[derive(Clone, Debug, PartialEq)]
pub struct ConcurrenceVector {
    pub components: DMatrix<Complex64>,
    pub dims: (usize, usize),
}

impl ConcurrenceVector {
    pub fn shape(&self) -> (usize, usize) {
        self.components.shape()
    }

    /// Euclidean norm `sqrt(Σ |C_ab|²)`.
    pub fn norm(&self) -> f64 {
        self.components.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// `Σ_k w_k v_k` over vectors of a common shape.
    pub fn linear_combination(terms: &[(Complex64, &ConcurrenceVector)]) -> Result<Self> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty linear combination".into()))?;
        let mut acc = DMatrix::zeros(first.components.nrows(), first.components.ncols());
        for (w, v) in terms {
            if v.shape() != first.shape() {
                return Err(Error::ShapeMismatch(first.shape(), v.shape()));
            }
            acc += &v.components * *w;
        }
        Ok(Self {
            components: acc,
            dims: first.dims,
        })
    }
}

/// `C(x, y)`; with `x = y` this is the concurrence vector of a single state.
pub fn concurrence_vector(x: &PureState, y: &PureState) -> Result<ConcurrenceVector> {
    x.check_dims(y)?;
    let (na, nb) = x.dims();
    let ga = GeneratorSet::new(na)?;
    let gb = GeneratorSet::new(nb)?;
    let mut components = DMatrix::zeros(ga.len(), gb.len());
    for (r, &(i, j)) in ga.pairs().iter().enumerate() {
        for (c, &(k, l)) in gb.pairs().iter().enumerate() {
            // Four nonzero entries of L_a ⊗ L_b, contracted with conj(x) and conj(y).
            let z = x.amp(i, k) * y.amp(j, l) - x.amp(i, l) * y.amp(j, k) - x.amp(j, k) * y.amp(i, l)
                + x.amp(j, l) * y.amp(i, k);
            components[(r, c)] = z.conj();
        }
    }
    Ok(ConcurrenceVector {
        components,
        dims: (na, nb),
    })
}

/// Concurrence as the norm of the concurrence vector.
pub fn concurrence(x: &PureState) -> f64 {
    concurrence_vector(x, x).expect("same dims").norm()
}

/// Concurrence through the reduced purity, `sqrt(2 (1 − Tr ρ_A²))`.
pub fn concurrence_from_purity(x: &PureState) -> f64 {
    (2.0 * (1.0 - x.purity())).max(0.0).sqrt()
}

/// `C(x, y)` as the norm of the pair concurrence vector.
pub fn pair_concurrence(x: &PureState, y: &PureState) -> Result<f64> {
    Ok(concurrence_vector(x, y)?.norm())
}

/// `C(x, y)² = 1 + |⟨x|y⟩|² − Tr[ρ_A^x ρ_A^y] − Tr[ρ_B^x ρ_B^y]`.
pub fn pair_concurrence_closed_form(x: &PureState, y: &PureState) -> Result<f64> {
    let overlap = inner_product(x, y)?;
    let (ta, tb) = marginal_overlaps(x, y)?;
    Ok((1.0 + overlap.norm_sqr() - ta - tb).max(0.0).sqrt())
}

/// `(Tr[ρ_A^x ρ_A^y], Tr[ρ_B^x ρ_B^y])`, both real and nonnegative.
pub fn marginal_overlaps(x: &PureState, y: &PureState) -> Result<(f64, f64)> {
    let ax = partial_trace_a(x, x)?;
    let ay = partial_trace_a(y, y)?;
    let bx = partial_trace_b(x, x)?;
    let by = partial_trace_b(y, y)?;
    Ok((trace_product(&ax, &ay).re, trace_product(&bx, &by).re))
}

/// `u · v = Σ u_ab conj(v_ab)`.
///
/// The second argument is conjugated; with this form the cross terms in the
/// squared norm of a superposition's concurrence vector are exactly these
/// dots, and they vanish for biorthogonal and one-sided orthogonal states.
pub fn concurrence_vector_dot(u: &ConcurrenceVector, v: &ConcurrenceVector) -> Result<Complex64> {
    if u.shape() != v.shape() {
        return Err(Error::ShapeMismatch(u.shape(), v.shape()));
    }
    Ok(u.components
        .iter()
        .zip(v.components.iter())
        .map(|(a, b)| a * b.conj())
        .sum())
}

/// Universal inverter in closed form,
/// `S(σ) = Tr(σ) I⊗I − σ_A⊗I − I⊗σ_B + σ`.
pub fn universal_inverter(sigma: &DensityOperator, dims: (usize, usize)) -> Result<DensityOperator> {
    let (na, nb) = dims;
    let sa = sigma.reduce_to_a(dims)?.entries;
    let sb = sigma.reduce_to_b(dims)?.entries;
    let tr = sigma.trace();
    let n = na * nb;
    let entries = DMatrix::from_fn(n, n, |r, c| {
        let (i, j) = (r / nb, r % nb);
        let (k, l) = (c / nb, c % nb);
        let mut z = sigma.entries[(r, c)];
        if r == c {
            z += tr;
        }
        if j == l {
            z -= sa[(i, k)];
        }
        if i == k {
            z -= sb[(j, l)];
        }
        z
    });
    DensityOperator::new(entries)
}

/// Universal inverter as the generator sum `Σ_ab S_ab σᵀ S_ab`,
/// `S_ab = L_a ⊗ L_b`.
pub fn universal_inverter_by_generators(
    sigma: &DensityOperator,
    dims: (usize, usize),
) -> Result<DensityOperator> {
    let (na, nb) = dims;
    if sigma.dim() != na * nb {
        return Err(Error::OperatorSize {
            size: sigma.dim(),
            dims,
        });
    }
    let ga = GeneratorSet::new(na)?;
    let gb = GeneratorSet::new(nb)?;
    let st = sigma.entries.transpose();
    let mut acc = DMatrix::<Complex64>::zeros(na * nb, na * nb);
    let la: Vec<_> = ga.matrices().collect();
    let lb: Vec<_> = gb.matrices().collect();
    for a in &la {
        for b in &lb {
            let s = a.kronecker(b).map(|v| Complex64::new(v, 0.0));
            acc += &s * &st * &s;
        }
    }
    DensityOperator::new(acc)
}
