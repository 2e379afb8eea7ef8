//! Dense bipartite pure states and the linear algebra around them.
//!
//! Amplitudes are stored flat with `idx(i, j) = i * dim_b + j` for the basis
//! vector `|i⟩_A ⊗ |j⟩_B`. Every other module relies on this layout.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Normalization slack accepted without rescaling.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Default cut-off for counting nonzero Schmidt coefficients.
pub const SCHMIDT_THRESHOLD: f64 = 1e-12;

/// A normalized pure state of `C^dim_a ⊗ C^dim_b`.
#[derive(Clone, Debug, PartialEq)]
pub struct PureState {
    dim_a: usize,
    dim_b: usize,
    amplitudes: Vec<Complex64>,
}

impl PureState {
    /// Builds a state, rescaling the amplitudes if their squared norm is
    /// further than [`NORM_TOLERANCE`] from one.
    pub fn new(dim_a: usize, dim_b: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        Self::with_deviation(dim_a, dim_b, amplitudes).map(|(s, _)| s)
    }

    /// Like [`PureState::new`] but also returns `|Σ|a|² − 1|` before rescaling.
    pub fn with_deviation(
        dim_a: usize,
        dim_b: usize,
        mut amplitudes: Vec<Complex64>,
    ) -> Result<(Self, f64)> {
        if dim_a < 2 || dim_b < 2 {
            return Err(Error::InvalidDimension(dim_a, dim_b));
        }
        if amplitudes.len() != dim_a * dim_b {
            return Err(Error::AmplitudeLength {
                expected: dim_a * dim_b,
                got: amplitudes.len(),
            });
        }
        if amplitudes.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite);
        }
        let norm_sqr: f64 = amplitudes.iter().map(|z| z.norm_sqr()).sum();
        if norm_sqr == 0.0 {
            return Err(Error::ZeroNorm);
        }
        let deviation = (norm_sqr - 1.0).abs();
        if deviation > NORM_TOLERANCE {
            let scale = norm_sqr.sqrt().recip();
            amplitudes.iter_mut().for_each(|z| *z *= scale);
        }
        Ok((
            Self {
                dim_a,
                dim_b,
                amplitudes,
            },
            deviation,
        ))
    }

    /// Builds a state from real amplitudes.
    pub fn from_real(dim_a: usize, dim_b: usize, amplitudes: &[f64]) -> Result<Self> {
        Self::new(
            dim_a,
            dim_b,
            amplitudes.iter().map(|&r| Complex64::new(r, 0.0)).collect(),
        )
    }

    /// Builds a state from a sparse list of `(i, j, amplitude)` terms.
    pub fn from_terms(dim_a: usize, dim_b: usize, terms: &[(usize, usize, Complex64)]) -> Result<Self> {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim_a * dim_b];
        for &(i, j, amp) in terms {
            if i >= dim_a || j >= dim_b {
                return Err(Error::InvalidArgument(format!(
                    "basis index ({i}, {j}) outside {dim_a}x{dim_b}"
                )));
            }
            amplitudes[i * dim_b + j] += amp;
        }
        Self::new(dim_a, dim_b, amplitudes)
    }

    /// The product basis state `|i⟩|j⟩`.
    pub fn basis(dim_a: usize, dim_b: usize, i: usize, j: usize) -> Result<Self> {
        Self::from_terms(dim_a, dim_b, &[(i, j, Complex64::new(1.0, 0.0))])
    }

    /// Builds `|a⟩ ⊗ |b⟩` from local vectors.
    pub fn product(a: &[Complex64], b: &[Complex64]) -> Result<Self> {
        let amplitudes = a
            .iter()
            .flat_map(|&x| b.iter().map(move |&y| x * y))
            .collect();
        Self::new(a.len(), b.len(), amplitudes)
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.dim_a, self.dim_b)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    #[inline]
    pub fn idx(&self, i: usize, j: usize) -> usize {
        i * self.dim_b + j
    }

    #[inline]
    pub fn amp(&self, i: usize, j: usize) -> Complex64 {
        self.amplitudes[i * self.dim_b + j]
    }

    /// The `dim_a × dim_b` coefficient matrix `Ψ_ij`.
    pub fn coefficient_matrix(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim_a, self.dim_b, |i, j| self.amp(i, j))
    }

    /// Multiplies every amplitude by `phase` (expected to be unimodular).
    pub fn with_phase(&self, phase: Complex64) -> Self {
        Self {
            dim_a: self.dim_a,
            dim_b: self.dim_b,
            amplitudes: self.amplitudes.iter().map(|&z| z * phase).collect(),
        }
    }

    /// Applies `u_a ⊗ u_b` to the state.
    pub fn apply_local(&self, u_a: &DMatrix<Complex64>, u_b: &DMatrix<Complex64>) -> Result<Self> {
        if u_a.shape() != (self.dim_a, self.dim_a) || u_b.shape() != (self.dim_b, self.dim_b) {
            return Err(Error::ShapeMismatch(u_a.shape(), u_b.shape()));
        }
        let psi = u_a * self.coefficient_matrix() * u_b.transpose();
        let amplitudes = (0..self.dim_a)
            .flat_map(|i| (0..self.dim_b).map(move |j| (i, j)))
            .map(|(i, j)| psi[(i, j)])
            .collect();
        Self::new(self.dim_a, self.dim_b, amplitudes)
    }

    /// Purity of the reduced state, `Tr[ρ_A²]`.
    pub fn purity(&self) -> f64 {
        let rho = partial_trace_a(self, self).expect("same dims");
        rho.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub(crate) fn check_dims(&self, other: &PureState) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch(self.dims(), other.dims()));
        }
        Ok(())
    }
}

/// A square complex operator on one subsystem or on the joint space.
///
/// Not necessarily Hermitian or unit-trace: cross terms such as
/// `Tr_B |y⟩⟨x|` live here as well.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityOperator {
    pub entries: DMatrix<Complex64>,
}

impl DensityOperator {
    pub fn new(entries: DMatrix<Complex64>) -> Result<Self> {
        if !entries.is_square() {
            return Err(Error::ShapeMismatch(entries.shape(), entries.shape()));
        }
        Ok(Self { entries })
    }

    /// `|x⟩⟨y|` on the joint space.
    pub fn outer(x: &PureState, y: &PureState) -> Result<Self> {
        x.check_dims(y)?;
        let n = x.amplitudes.len();
        Ok(Self {
            entries: DMatrix::from_fn(n, n, |r, c| x.amplitudes[r] * y.amplitudes[c].conj()),
        })
    }

    pub fn projector(x: &PureState) -> Self {
        Self::outer(x, x).expect("same dims")
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.trace()
    }

    /// Largest entrywise deviation from Hermiticity.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for r in 0..n {
            for c in 0..n {
                worst = worst.max((self.entries[(r, c)] - self.entries[(c, r)].conj()).norm());
            }
        }
        worst
    }

    /// Traces out subsystem B of a joint operator with local dims `dims`.
    pub fn reduce_to_a(&self, dims: (usize, usize)) -> Result<Self> {
        let (na, nb) = self.check_joint(dims)?;
        let m = &self.entries;
        Ok(Self {
            entries: DMatrix::from_fn(na, na, |i, k| {
                (0..nb).map(|j| m[(i * nb + j, k * nb + j)]).sum()
            }),
        })
    }

    /// Traces out subsystem A of a joint operator with local dims `dims`.
    pub fn reduce_to_b(&self, dims: (usize, usize)) -> Result<Self> {
        let (na, nb) = self.check_joint(dims)?;
        let m = &self.entries;
        Ok(Self {
            entries: DMatrix::from_fn(nb, nb, |j, l| {
                (0..na).map(|i| m[(i * nb + j, i * nb + l)]).sum()
            }),
        })
    }

    fn check_joint(&self, dims: (usize, usize)) -> Result<(usize, usize)> {
        if self.dim() != dims.0 * dims.1 {
            return Err(Error::OperatorSize {
                size: self.dim(),
                dims,
            });
        }
        Ok(dims)
    }
}

/// Schmidt coefficients (descending) with their local orthonormal bases.
#[derive(Clone, Debug)]
pub struct SchmidtForm {
    pub coefficients: Vec<f64>,
    /// `e_k` in `C^dim_a`, one per coefficient.
    pub basis_a: Vec<Vec<Complex64>>,
    /// `f_k` in `C^dim_b`, one per coefficient.
    pub basis_b: Vec<Vec<Complex64>>,
    pub rank: usize,
}

impl SchmidtForm {
    /// Rebuilds `Σ_k λ_k |e_k⟩ ⊗ |f_k⟩`.
    pub fn reassemble(&self) -> Result<PureState> {
        let na = self.basis_a.first().map_or(0, Vec::len);
        let nb = self.basis_b.first().map_or(0, Vec::len);
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); na * nb];
        for ((lam, e), f) in self.coefficients.iter().zip(&self.basis_a).zip(&self.basis_b) {
            for i in 0..na {
                for j in 0..nb {
                    amplitudes[i * nb + j] += e[i] * f[j] * *lam;
                }
            }
        }
        PureState::new(na, nb, amplitudes)
    }
}

/// `⟨x|y⟩ = Σ_k conj(x_k) y_k`.
pub fn inner_product(x: &PureState, y: &PureState) -> Result<Complex64> {
    x.check_dims(y)?;
    Ok(x
        .amplitudes
        .iter()
        .zip(&y.amplitudes)
        .map(|(a, b)| a.conj() * b)
        .sum())
}

/// Schmidt decomposition through the SVD of the coefficient matrix.
///
/// Each `e_k` is rotated so its largest-magnitude entry is real and
/// positive; `f_k` carries the compensating phase.
pub fn schmidt_decompose(s: &PureState, threshold: f64) -> SchmidtForm {
    let svd = s.coefficient_matrix().svd(true, true);
    let u = svd.u.expect("requested U");
    let v_t = svd.v_t.expect("requested V^H");
    let sv = svd.singular_values;

    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&a, &b| sv[b].total_cmp(&sv[a]));

    let mut coefficients = Vec::with_capacity(order.len());
    let mut basis_a = Vec::with_capacity(order.len());
    let mut basis_b = Vec::with_capacity(order.len());
    for k in order {
        let mut e: Vec<Complex64> = u.column(k).iter().copied().collect();
        // Ψ = U Σ V^H, so the B-side partner of column k of U is row k of V^H.
        let mut f: Vec<Complex64> = v_t.row(k).iter().copied().collect();
        let pivot = e
            .iter()
            .copied()
            .max_by(|a, b| a.norm().total_cmp(&b.norm()))
            .unwrap_or(Complex64::new(1.0, 0.0));
        if pivot.norm() > 0.0 {
            let phase = pivot / pivot.norm();
            e.iter_mut().for_each(|z| *z *= phase.conj());
            f.iter_mut().for_each(|z| *z *= phase);
        }
        coefficients.push(sv[k]);
        basis_a.push(e);
        basis_b.push(f);
    }
    let rank = coefficients.iter().filter(|&&l| l > threshold).count();
    SchmidtForm {
        coefficients,
        basis_a,
        basis_b,
        rank,
    }
}

/// `Tr_B |y⟩⟨x|`, an operator on A. With `x = y` this is `ρ_A`.
pub fn partial_trace_a(x: &PureState, y: &PureState) -> Result<DensityOperator> {
    x.check_dims(y)?;
    let (na, nb) = x.dims();
    Ok(DensityOperator {
        entries: DMatrix::from_fn(na, na, |i, k| {
            (0..nb).map(|j| y.amp(i, j) * x.amp(k, j).conj()).sum()
        }),
    })
}

/// `Tr_A |y⟩⟨x|`, an operator on B. With `x = y` this is `ρ_B`.
pub fn partial_trace_b(x: &PureState, y: &PureState) -> Result<DensityOperator> {
    x.check_dims(y)?;
    let (na, nb) = x.dims();
    Ok(DensityOperator {
        entries: DMatrix::from_fn(nb, nb, |j, l| {
            (0..na).map(|i| y.amp(i, j) * x.amp(i, l).conj()).sum()
        }),
    })
}

/// `Tr[a b]` for two square operators of equal size.
pub fn trace_product(a: &DensityOperator, b: &DensityOperator) -> Complex64 {
    let n = a.dim();
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 0..n {
        for c in 0..n {
            acc += a.entries[(r, c)] * b.entries[(c, r)];
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::FRAC_1_SQRT_2;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn bell() -> PureState {
        PureState::from_real(2, 2, &[FRAC_1_SQRT_2, 0.0, 0.0, FRAC_1_SQRT_2]).unwrap()
    }

    fn psi_3x3() -> PureState {
        PureState::from_terms(3, 3, &[(0, 0, c(FRAC_1_SQRT_2)), (1, 1, c(0.5)), (2, 2, c(0.5))])
            .unwrap()
    }

    fn phi_3x3() -> PureState {
        PureState::from_terms(3, 3, &[(0, 0, c(FRAC_1_SQRT_2)), (1, 1, c(-0.5)), (2, 2, c(0.5))])
            .unwrap()
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            PureState::from_real(1, 2, &[1.0, 0.0]),
            Err(Error::InvalidDimension(1, 2))
        ));
        assert!(matches!(
            PureState::from_real(2, 2, &[1.0, 0.0, 0.0]),
            Err(Error::AmplitudeLength { expected: 4, got: 3 })
        ));
        assert!(matches!(PureState::from_real(2, 2, &[0.0; 4]), Err(Error::ZeroNorm)));
        assert!(matches!(
            PureState::from_real(2, 2, &[f64::NAN, 0.0, 0.0, 0.0]),
            Err(Error::NonFinite)
        ));
    }

    #[test]
    fn construction_normalizes() {
        let (s, dev) = PureState::with_deviation(2, 2, vec![c(3.0), c(0.0), c(0.0), c(4.0)]).unwrap();
        assert_abs_diff_eq!(dev, 24.0, epsilon = 1e-12);
        assert_abs_diff_eq!(s.amp(0, 0).re, 0.6, epsilon = 1e-15);
        assert_abs_diff_eq!(s.amp(1, 1).re, 0.8, epsilon = 1e-15);
    }

    #[test]
    fn inner_products() {
        let b = bell();
        assert_abs_diff_eq!(inner_product(&b, &b).unwrap().re, 1.0, epsilon = 1e-15);
        let z00 = PureState::basis(2, 2, 0, 0).unwrap();
        let z11 = PureState::basis(2, 2, 1, 1).unwrap();
        assert_eq!(inner_product(&z00, &z11).unwrap(), c(0.0));
        let o = inner_product(&psi_3x3(), &phi_3x3()).unwrap();
        assert_abs_diff_eq!(o.re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(o.im, 0.0);
        assert!(matches!(
            inner_product(&z00, &psi_3x3()),
            Err(Error::DimensionMismatch(_, _))
        ));
    }

    #[test]
    fn schmidt_examples() {
        let s = schmidt_decompose(&bell(), SCHMIDT_THRESHOLD);
        assert_abs_diff_eq!(s.coefficients[0], FRAC_1_SQRT_2, epsilon = 1e-14);
        assert_abs_diff_eq!(s.coefficients[1], FRAC_1_SQRT_2, epsilon = 1e-14);
        assert_eq!(s.rank, 2);

        let s = schmidt_decompose(&PureState::basis(2, 2, 0, 0).unwrap(), SCHMIDT_THRESHOLD);
        assert_abs_diff_eq!(s.coefficients[0], 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(s.coefficients[1], 0.0, epsilon = 1e-14);
        assert_eq!(s.rank, 1);

        let s = schmidt_decompose(&psi_3x3(), SCHMIDT_THRESHOLD);
        for (got, want) in s.coefficients.iter().zip([FRAC_1_SQRT_2, 0.5, 0.5]) {
            assert_abs_diff_eq!(*got, want, epsilon = 1e-14);
        }
        assert_eq!(s.rank, 3);
    }

    #[test]
    fn schmidt_phase_convention_and_reassembly() {
        let s = PureState::new(
            2,
            3,
            vec![
                Complex64::new(0.1, 0.3),
                Complex64::new(-0.2, 0.1),
                Complex64::new(0.0, -0.5),
                Complex64::new(0.4, 0.0),
                Complex64::new(0.2, 0.2),
                Complex64::new(-0.3, 0.1),
            ],
        )
        .unwrap();
        let form = schmidt_decompose(&s, SCHMIDT_THRESHOLD);
        for e in &form.basis_a {
            let pivot = e.iter().max_by(|a, b| a.norm().total_cmp(&b.norm())).unwrap();
            assert!(pivot.im.abs() < 1e-14 && pivot.re > 0.0);
        }
        let back = form.reassemble().unwrap();
        for (a, b) in back.amplitudes().iter().zip(s.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn reduced_operators() {
        let b = bell();
        let rho = partial_trace_a(&b, &b).unwrap();
        assert_abs_diff_eq!(rho.entries[(0, 0)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entries[(1, 1)].re, 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(rho.entries[(0, 1)].norm(), 0.0);

        // Schmidt form is diagonal in the computational basis, so ρ_A = diag(λ²).
        let p = psi_3x3();
        let rho = partial_trace_a(&p, &p).unwrap();
        let want = DMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(0.5), c(0.25), c(0.25)]));
        assert!((rho.entries - want).norm() < 1e-15);

        let z00 = PureState::basis(2, 2, 0, 0).unwrap();
        let z11 = PureState::basis(2, 2, 1, 1).unwrap();
        assert_eq!(partial_trace_a(&z00, &z11).unwrap().entries.norm(), 0.0);
        assert_eq!(partial_trace_b(&z00, &z11).unwrap().entries.norm(), 0.0);
    }

    #[test]
    fn joint_operator_reductions_match_state_reductions() {
        let x = PureState::new(
            2,
            3,
            (0..6).map(|k| Complex64::new(k as f64 * 0.1 + 0.05, 0.3 - k as f64 * 0.07)).collect(),
        )
        .unwrap();
        let y = PureState::basis(2, 3, 1, 2).unwrap();
        let joint = DensityOperator::outer(&y, &x).unwrap();
        let a = joint.reduce_to_a((2, 3)).unwrap();
        let b = joint.reduce_to_b((2, 3)).unwrap();
        assert!((a.entries - partial_trace_a(&x, &y).unwrap().entries).norm() < 1e-15);
        assert!((b.entries - partial_trace_b(&x, &y).unwrap().entries).norm() < 1e-15);
        assert!(matches!(
            joint.reduce_to_a((3, 3)),
            Err(Error::OperatorSize { size: 6, dims: (3, 3) })
        ));
    }
}
