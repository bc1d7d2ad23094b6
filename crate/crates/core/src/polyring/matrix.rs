use std::collections::HashMap;

use super::{MultiPoly, PolyError};
use crate::exactnum::Cyclotomic;
use crate::ring::Ring;

/// Cofactor expansion limit.
pub const MAX_DET_DIM: usize = 8;

/// Square matrix over any [`Ring`], row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    dim: usize,
    entries: Vec<R>,
}

/// Square matrix of polynomials.
pub type PolyMatrix = Matrix<MultiPoly>;

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self, PolyError> {
        let dim = rows.len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(PolyError::NotSquare);
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        assert!(dim > 0, "empty matrix");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for k in 0..dim {
                entries.push(f(i, k));
            }
        }
        Matrix { dim, entries }
    }

    pub fn identity(dim: usize, template: &R) -> Self {
        let (z, o) = (template.zero_like(), template.one_like());
        Self::from_fn(dim, |i, k| if i == k { o.clone() } else { z.clone() })
    }

    /// c·I.
    pub fn scalar(dim: usize, c: &R) -> Self {
        let z = c.zero_like();
        Self::from_fn(dim, |i, k| if i == k { c.clone() } else { z.clone() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, k: usize) -> &R {
        &self.entries[i * self.dim + k]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.entries.chunks(self.dim).map(|c| c.to_vec()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, k| self.get(k, i).clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, k| self.get(i, k).plus(rhs.get(i, k)))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, k| self.get(i, k).minus(rhs.get(i, k)))
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let n = self.dim;
        Self::from_fn(n, |i, k| {
            let mut acc = self.get(0, 0).zero_like();
            for m in 0..n {
                let a = self.get(i, m);
                if a.is_zero() {
                    continue;
                }
                let b = rhs.get(m, k);
                if !b.is_zero() {
                    acc = acc.plus(&a.times(b));
                }
            }
            acc
        })
    }

    /// Exact k-th power, k ≥ 1.
    pub fn pow(&self, k: u32) -> Self {
        assert!(k >= 1, "matrix_power needs k >= 1");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn apply(&self, v: &[R]) -> Vec<R> {
        assert_eq!(v.len(), self.dim, "dimension mismatch");
        (0..self.dim)
            .map(|i| {
                v.iter()
                    .enumerate()
                    .fold(v[0].zero_like(), |acc, (k, x)| acc.plus(&self.get(i, k).times(x)))
            })
            .collect()
    }

    /// Kronecker product, (A⊗B)[(i,k),(j,l)] = A[i][j]·B[k][l].
    pub fn kron(&self, rhs: &Self) -> Self {
        let m = rhs.dim;
        Self::from_fn(self.dim * m, |r, c| {
            self.get(r / m, c / m).times(rhs.get(r % m, c % m))
        })
    }

    pub fn trace(&self) -> R {
        (0..self.dim).fold(self.get(0, 0).zero_like(), |a, i| a.plus(self.get(i, i)))
    }

    /// Some(c) when the matrix equals c·I.
    pub fn as_scalar(&self) -> Option<R> {
        let c = self.get(0, 0).clone();
        (*self == Self::scalar(self.dim, &c)).then_some(c)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Ring::is_zero)
    }

    /// Determinant by cofactor expansion along rows, memoized on column subsets.
    pub fn det(&self) -> Result<R, PolyError> {
        if self.dim > MAX_DET_DIM {
            return Err(PolyError::DimTooLarge(self.dim));
        }
        let mut memo: HashMap<u32, R> = HashMap::new();
        let full = (1u32 << self.dim) - 1;
        Ok(self.minor(0, full, &mut memo))
    }

    fn minor(&self, row: usize, cols: u32, memo: &mut HashMap<u32, R>) -> R {
        if row == self.dim {
            return self.get(0, 0).one_like();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut acc = self.get(0, 0).zero_like();
        let mut pos = 0;
        for c in 0..self.dim {
            if cols & (1 << c) == 0 {
                continue;
            }
            let a = self.get(row, c);
            if !a.is_zero() {
                let sub = self.minor(row + 1, cols & !(1 << c), memo);
                let t = a.times(&sub);
                acc = if pos % 2 == 0 { acc.plus(&t) } else { acc.minus(&t) };
            }
            pos += 1;
        }
        memo.insert(cols, acc.clone());
        acc
    }
}

impl Matrix<Cyclotomic> {
    /// Constant polynomial matrix in `nvars` variables.
    pub fn to_poly(&self, nvars: usize) -> PolyMatrix {
        self.map(|c| MultiPoly::constant(nvars, c.clone()))
    }

    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, k| self.get(k, i).conj())
    }

    /// Exactly one nonzero entry per row and column, each a root of unity.
    pub fn is_generalized_permutation(&self) -> bool {
        let n = self.dim;
        let unit = |c: &Cyclotomic| {
            let ord = c.order().max(1) as u32;
            !c.is_zero() && c.pow(ord * 2).is_one()
        };
        let rows_ok = (0..n).all(|i| {
            let nz: Vec<_> = (0..n).filter(|&k| !self.get(i, k).is_zero()).collect();
            nz.len() == 1 && unit(self.get(i, nz[0]))
        });
        let cols_ok = (0..n).all(|k| (0..n).filter(|&i| !self.get(i, k).is_zero()).count() == 1);
        rows_ok && cols_ok
    }
}

impl PolyMatrix {
    /// Σ_k t_k·M_k for constant matrices M_k and symbols t_k.
    pub fn contract(mats: &[Matrix<Cyclotomic>]) -> PolyMatrix {
        let n = mats.len();
        let dim = mats[0].dim();
        let mut acc = PolyMatrix::scalar(dim, &MultiPoly::zero(n));
        for (k, m) in mats.iter().enumerate() {
            acc = acc.add(&m.to_poly(n).scale(&MultiPoly::var(n, k)));
        }
        acc
    }
}
