//! Small dense matrices over either scalar backend.
//!
//! Everything downstream works on 2×2 … 9×9 matrices, so this is a plain
//! row-major store with Gaussian elimination. The [`Scalar`] trait lets the
//! covariance solvers run unchanged over exact cyclotomic entries or over
//! `Complex64`; the [`GroupMatrix`] wrapper carries the backend tag at
//! runtime and rejects mixed-backend arithmetic.

use std::fmt;

use num_complex::Complex64;
use thiserror::Error;

use crate::scalar::CycloScalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix dimensions do not match: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("operands live on different backends")]
    BackendMismatch,
}

/// Field operations shared by the exact and floating backends.
pub trait Scalar: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, MatrixError>;
    fn conj(&self) -> Self;
    /// Embed an exact constant (phases j, j², i, rationals…).
    fn from_cyclo(c: &CycloScalar) -> Self;
    /// |·| as a double; exact zero must map to exactly 0.0.
    fn magnitude(&self) -> f64;
    fn is_zero(&self) -> bool;
    /// True for the exact backend, where checks demand literal equality.
    const EXACT: bool;
}

impl Scalar for CycloScalar {
    fn zero() -> Self {
        CycloScalar::zero()
    }
    fn one() -> Self {
        CycloScalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, MatrixError> {
        self.inverse().map_err(|_| MatrixError::Singular)
    }
    fn conj(&self) -> Self {
        CycloScalar::conj(self)
    }
    fn from_cyclo(c: &CycloScalar) -> Self {
        c.clone()
    }
    fn magnitude(&self) -> f64 {
        CycloScalar::magnitude(self)
    }
    fn is_zero(&self) -> bool {
        CycloScalar::is_zero(self)
    }
    const EXACT: bool = true;
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, MatrixError> {
        if self.norm() == 0.0 {
            return Err(MatrixError::Singular);
        }
        Ok(self.finv())
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn from_cyclo(c: &CycloScalar) -> Self {
        c.to_float()
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    const EXACT: bool = false;
}

/// A square matrix in row-major order.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<S: Scalar> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        DenseMatrix {
            dim,
            entries: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.set(k, k, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        DenseMatrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from a function of (row, col).
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                entries.push(f(r, c));
            }
        }
        DenseMatrix { dim, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &S {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: S) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn map(&self, f: impl Fn(&S) -> S) -> Self {
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |r, c| self.get(c, r).clone())
    }

    pub fn conj(&self) -> Self {
        self.map(|e| e.conj())
    }

    pub fn conj_transpose(&self) -> Self {
        self.transpose().conj()
    }

    pub fn scale(&self, factor: &S) -> Self {
        self.map(|e| e.mul(factor))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        DenseMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        DenseMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        Self::from_fn(self.dim, |r, c| {
            let mut acc = S::zero();
            for k in 0..self.dim {
                acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
            }
            acc
        })
    }

    pub fn trace(&self) -> S {
        let mut acc = S::zero();
        for k in 0..self.dim {
            acc = acc.add(self.get(k, k));
        }
        acc
    }

    /// Largest entry magnitude; 0.0 for the zero matrix.
    pub fn max_abs(&self) -> f64 {
        self.entries
            .iter()
            .map(Scalar::magnitude)
            .fold(0.0, f64::max)
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Determinant by Gaussian elimination. Pivots are chosen exactly on
    /// the exact backend and by largest magnitude on the float backend.
    pub fn det(&self) -> S {
        let mut work = self.clone();
        let n = self.dim;
        let mut det = S::one();
        for col in 0..n {
            let pivot_row = match Self::pick_pivot(&work, col) {
                Some(r) => r,
                None => return S::zero(),
            };
            if pivot_row != col {
                for k in 0..n {
                    let a = work.get(col, k).clone();
                    let b = work.get(pivot_row, k).clone();
                    work.set(col, k, b);
                    work.set(pivot_row, k, a);
                }
                det = det.neg();
            }
            let pivot = work.get(col, col).clone();
            det = det.mul(&pivot);
            let pinv = pivot.inv().expect("pivot is nonzero");
            for row in (col + 1)..n {
                let factor = work.get(row, col).mul(&pinv);
                if factor.is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = work.get(row, k).sub(&factor.mul(work.get(col, k)));
                    work.set(row, k, v);
                }
            }
        }
        det
    }

    fn pick_pivot(work: &Self, col: usize) -> Option<usize> {
        if S::EXACT {
            (col..work.dim).find(|&r| !work.get(r, col).is_zero())
        } else {
            let (best, mag) = (col..work.dim)
                .map(|r| (r, work.get(r, col).magnitude()))
                .fold((col, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if mag > 0.0 {
                Some(best)
            } else {
                None
            }
        }
    }

    /// Solve A·x = b for several right-hand sides (columns of `rhs`, given
    /// as plain vectors).
    pub fn solve(&self, rhs: &[Vec<S>]) -> Result<Vec<Vec<S>>, MatrixError> {
        let n = self.dim;
        let mut work = self.clone();
        let mut aug: Vec<Vec<S>> = rhs.to_vec();
        for b in &aug {
            if b.len() != n {
                return Err(MatrixError::DimensionMismatch(n, b.len()));
            }
        }
        for col in 0..n {
            let pivot_row = Self::pick_pivot(&work, col).ok_or(MatrixError::Singular)?;
            if pivot_row != col {
                for k in 0..n {
                    let a = work.get(col, k).clone();
                    let b = work.get(pivot_row, k).clone();
                    work.set(col, k, b);
                    work.set(pivot_row, k, a);
                }
                for b in aug.iter_mut() {
                    b.swap(col, pivot_row);
                }
            }
            let pinv = work
                .get(col, col)
                .inv()
                .map_err(|_| MatrixError::Singular)?;
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = work.get(row, col).mul(&pinv);
                if factor.is_zero() {
                    continue;
                }
                for k in col..n {
                    let v = work.get(row, k).sub(&factor.mul(work.get(col, k)));
                    work.set(row, k, v);
                }
                for b in aug.iter_mut() {
                    let v = b[row].sub(&factor.mul(&b[col]));
                    b[row] = v;
                }
            }
        }
        // Divide by the diagonal.
        for col in 0..n {
            let pinv = work
                .get(col, col)
                .inv()
                .map_err(|_| MatrixError::Singular)?;
            for b in aug.iter_mut() {
                b[col] = b[col].mul(&pinv);
            }
        }
        Ok(aug)
    }

    pub fn inverse(&self) -> Result<Self, MatrixError> {
        let n = self.dim;
        let basis: Vec<Vec<S>> = (0..n)
            .map(|k| {
                (0..n)
                    .map(|r| if r == k { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
        let cols = self.solve(&basis)?;
        Ok(Self::from_fn(n, |r, c| cols[c][r].clone()))
    }

    /// Kronecker product (row-major convention: (A ⊗ B) acts on row-major
    /// vectorized matrices as X ↦ A X Bᵀ).
    pub fn kron(&self, other: &Self) -> Self {
        let n = self.dim * other.dim;
        DenseMatrix::from_fn(n, |r, c| {
            let (ra, rb) = (r / other.dim, r % other.dim);
            let (ca, cb) = (c / other.dim, c % other.dim);
            self.get(ra, ca).mul(other.get(rb, cb))
        })
    }

    /// Map every entry into another backend.
    pub fn cast<T: Scalar>(&self, f: impl Fn(&S) -> T) -> DenseMatrix<T> {
        DenseMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }
}

impl DenseMatrix<CycloScalar> {
    pub fn to_float(&self) -> DenseMatrix<Complex64> {
        self.cast(CycloScalar::to_float)
    }
}

impl DenseMatrix<Complex64> {
    /// Matrix exponential by truncated Taylor series with scaling and
    /// squaring; series terms are added until they drop below 1e-20, well
    /// under the 1e-14 accuracy target for the small matrices used here.
    pub fn expm(&self) -> Self {
        let n = self.dim;
        let norm = self.max_abs() * n as f64;
        let squarings = if norm > 0.5 {
            (norm / 0.5).log2().ceil() as u32
        } else {
            0
        };
        let scaled = self.scale(&Complex64::new(2f64.powi(-(squarings as i32)), 0.0));
        let mut sum = Self::identity(n);
        let mut term = Self::identity(n);
        let mut k = 1u32;
        loop {
            term = term
                .mul(&scaled)
                .scale(&Complex64::new(1.0 / k as f64, 0.0));
            sum = sum.add(&term);
            if term.max_abs() < 1e-20 || k > 200 {
                break;
            }
            k += 1;
        }
        for _ in 0..squarings {
            sum = sum.mul(&sum);
        }
        sum
    }
}

/// Size of a collection of should-be-zero scalars: the largest floating
/// magnitude plus the exact verdict (all entries literally zero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Defect {
    pub residual: f64,
    pub exactly_zero: bool,
}

impl Defect {
    pub fn none() -> Self {
        Defect {
            residual: 0.0,
            exactly_zero: true,
        }
    }

    pub fn from_scalars<'a, S: Scalar + 'a>(diffs: impl IntoIterator<Item = &'a S>) -> Self {
        let mut residual = 0.0f64;
        let mut exactly_zero = true;
        for d in diffs {
            residual = residual.max(d.magnitude());
            exactly_zero &= d.is_zero();
        }
        Defect {
            residual,
            exactly_zero,
        }
    }

    pub fn join(self, other: Defect) -> Defect {
        Defect {
            residual: self.residual.max(other.residual),
            exactly_zero: self.exactly_zero && other.exactly_zero,
        }
    }

    /// Pass rule shared by every check: exact backends must be literally
    /// zero, floating backends must land within the tolerance.
    pub fn passes(&self, exact_backend: bool, tol: f64) -> bool {
        if exact_backend {
            self.exactly_zero
        } else {
            self.residual <= tol
        }
    }
}

/// A matrix with a runtime backend tag. Operations on mixed backends are
/// rejected rather than coerced.
#[derive(Debug, Clone, PartialEq)]
pub enum GroupMatrix {
    Exact(DenseMatrix<CycloScalar>),
    Float(DenseMatrix<Complex64>),
}

impl GroupMatrix {
    pub fn dim(&self) -> usize {
        match self {
            GroupMatrix::Exact(m) => m.dim(),
            GroupMatrix::Float(m) => m.dim(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, GroupMatrix::Exact(_))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MatrixError> {
        match (self, other) {
            (GroupMatrix::Exact(a), GroupMatrix::Exact(b)) => Ok(GroupMatrix::Exact(a.mul(b))),
            (GroupMatrix::Float(a), GroupMatrix::Float(b)) => Ok(GroupMatrix::Float(a.mul(b))),
            _ => Err(MatrixError::BackendMismatch),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MatrixError> {
        match (self, other) {
            (GroupMatrix::Exact(a), GroupMatrix::Exact(b)) => Ok(GroupMatrix::Exact(a.sub(b))),
            (GroupMatrix::Float(a), GroupMatrix::Float(b)) => Ok(GroupMatrix::Float(a.sub(b))),
            _ => Err(MatrixError::BackendMismatch),
        }
    }

    pub fn det_magnitude(&self) -> f64 {
        match self {
            GroupMatrix::Exact(m) => m.det().magnitude(),
            GroupMatrix::Float(m) => m.det().magnitude(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        match self {
            GroupMatrix::Exact(m) => m.max_abs(),
            GroupMatrix::Float(m) => m.max_abs(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cy(n: i64) -> CycloScalar {
        CycloScalar::from_int(n)
    }

    #[test]
    fn exact_determinant_and_inverse() {
        let m = DenseMatrix::from_rows(vec![
            vec![cy(2), CycloScalar::j()],
            vec![CycloScalar::i(), cy(1)],
        ]);
        let det = m.det();
        assert_eq!(det, cy(2) - CycloScalar::j() * CycloScalar::i());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), DenseMatrix::identity(2));
        assert_eq!(inv.mul(&m), DenseMatrix::identity(2));
    }

    #[test]
    fn singular_matrices_are_detected() {
        let m = DenseMatrix::from_rows(vec![vec![cy(1), cy(2)], vec![cy(2), cy(4)]]);
        assert!(m.det().is_zero());
        assert_eq!(m.inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn solve_reproduces_columns() {
        let m = DenseMatrix::from_rows(vec![
            vec![cy(1), cy(1), cy(0)],
            vec![cy(0), cy(1), cy(1)],
            vec![cy(1), cy(0), cy(1)],
        ]);
        let rhs = vec![vec![cy(3), cy(5), cy(4)]];
        let sol = m.solve(&rhs).unwrap();
        // Verify by substitution.
        for r in 0..3 {
            let mut acc = CycloScalar::zero();
            for c in 0..3 {
                acc = acc + m.get(r, c) * &sol[0][c];
            }
            assert_eq!(acc, rhs[0][r]);
        }
    }

    #[test]
    fn kron_matches_row_major_vectorization() {
        // (A ⊗ B)·vec_r(X) = vec_r(A X Bᵀ) for row-major vec.
        let a = DenseMatrix::from_rows(vec![vec![cy(1), cy(2)], vec![cy(3), cy(4)]]);
        let b = DenseMatrix::from_rows(vec![vec![cy(0), cy(1)], vec![cy(1), cy(1)]]);
        let x = DenseMatrix::from_rows(vec![vec![cy(5), cy(-1)], vec![cy(2), cy(7)]]);
        let lhs_mat = a.mul(&x).mul(&b.transpose());
        let k = a.kron(&b);
        let vec_x: Vec<CycloScalar> = (0..2)
            .flat_map(|r| (0..2).map(move |c| (r, c)))
            .map(|(r, c)| x.get(r, c).clone())
            .collect();
        for slot in 0..4 {
            let mut acc = CycloScalar::zero();
            for kcol in 0..4 {
                acc = acc + k.get(slot, kcol) * &vec_x[kcol];
            }
            assert_eq!(acc, *lhs_mat.get(slot / 2, slot % 2));
        }
    }

    #[test]
    fn expm_matches_scalar_exponentials() {
        // Diagonal case: entries exponentiate independently.
        let m = DenseMatrix::from_rows(vec![
            vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(-2.0, 0.5)],
        ]);
        let e = m.expm();
        assert!((e.get(0, 0) - Complex64::new(1.0f64.exp(), 0.0)).norm() < 1e-14);
        let expect = Complex64::new(-2.0, 0.5).exp();
        assert!((e.get(1, 1) - expect).norm() < 1e-14);
        assert!(e.get(0, 1).norm() < 1e-16);
        // Nilpotent case: exp([[0,t],[0,0]]) = [[1,t],[0,1]].
        let nil = DenseMatrix::from_rows(vec![
            vec![Complex64::new(0.0, 0.0), Complex64::new(3.5, -1.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)],
        ]);
        let en = nil.expm();
        assert!((en.get(0, 1) - Complex64::new(3.5, -1.0)).norm() < 1e-14);
        assert!((en.get(0, 0) - Complex64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn mixed_backends_are_rejected() {
        let e = GroupMatrix::Exact(DenseMatrix::identity(2));
        let f = GroupMatrix::Float(DenseMatrix::identity(2));
        assert_eq!(e.mul(&f), Err(MatrixError::BackendMismatch));
        assert_eq!(f.sub(&e), Err(MatrixError::BackendMismatch));
        assert!(e.mul(&e).is_ok() && f.mul(&f).is_ok());
    }
}
