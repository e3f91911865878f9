//! Exact linear algebra over a [`Field`].
//!
//! The public surface works with dense [`Matrix`] values; the heavy lifting
//! is done on sparse columns with an incremental echelon form.

mod echelon;
mod sparse;

pub use echelon::{Echelon, Inserted};
pub use sparse::{SparseMatrix, SparseVec};

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn zero<F: Field<Elem = E>>(f: &F, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![f.zero(); rows * cols] }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        let mut m = Self::zero(f, n, n);
        for i in 0..n {
            m.set(i, i, f.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64<F: Field<Elem = E>>(f: &F, rows: &[&[i64]]) -> Self {
        let owned = rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect();
        Self::from_rows(owned).expect("rectangular literal")
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let mut out = Self::zero(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if f.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    f.mul_add_assign(&mut out.data[idx], a, other.get(k, j));
                }
            }
        }
        out
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &[E]) -> Vec<E> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = f.zero();
                for (k, x) in v.iter().enumerate() {
                    f.mul_add_assign(&mut acc, self.get(i, k), x);
                }
                acc
            })
            .collect()
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, f: &F) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    pub fn columns_sparse<F: Field<Elem = E>>(&self, f: &F) -> Vec<SparseVec<E>> {
        SparseMatrix::from_dense(f, self).cols
    }

    pub fn from_columns<F: Field<Elem = E>>(f: &F, rows: usize, cols: &[SparseVec<E>]) -> Self {
        SparseMatrix::from_columns(rows, cols.to_vec()).to_dense(f)
    }
}

/// A subspace of k^ambient_dim given by linearly independent basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace<E> {
    pub ambient_dim: usize,
    pub basis: Vec<SparseVec<E>>,
}

impl<E: Clone> Subspace<E> {
    pub fn full<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        Subspace { ambient_dim: n, basis: (0..n).map(|i| SparseVec::unit(f, i)).collect() }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { ambient_dim: n, basis: Vec::new() }
    }

    /// Spanned subspace; dependent generators are dropped, keeping the
    /// first independent ones in order.
    pub fn spanned_by<F: Field<Elem = E>>(f: &F, n: usize, gens: Vec<SparseVec<E>>) -> Self {
        let mut ech = Echelon::new(f, n);
        let basis = gens.into_iter().filter(|g| ech.add(g.clone())).collect();
        Subspace { ambient_dim: n, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis_matrix<F: Field<Elem = E>>(&self, f: &F) -> Matrix<E> {
        Matrix::from_columns(f, self.ambient_dim, &self.basis)
    }

    pub fn echelon<F: Field<Elem = E>>(&self, f: &F) -> Echelon<F> {
        let mut e = Echelon::with_history(f, self.ambient_dim);
        for b in &self.basis {
            e.insert(b.clone());
        }
        e
    }

    pub fn contains<F: Field<Elem = E>>(&self, f: &F, v: &SparseVec<E>) -> bool {
        let mut e = Echelon::new(f, self.ambient_dim);
        for b in &self.basis {
            e.insert(b.clone());
        }
        e.contains(v)
    }

    /// Whether every basis vector of `other` lies in `self`.
    pub fn contains_subspace<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> bool {
        let mut e = Echelon::new(f, self.ambient_dim);
        for b in &self.basis {
            e.insert(b.clone());
        }
        other.basis.iter().all(|v| e.contains(v))
    }

    /// Basis vectors `B c` for coefficient vectors `c`.
    pub fn combine<F: Field<Elem = E>>(&self, f: &F, c: &SparseVec<E>) -> SparseVec<E> {
        let m = SparseMatrix::from_columns(self.ambient_dim, self.basis.clone());
        m.apply(f, c)
    }
}

pub fn rank_of_vectors<F: Field>(f: &F, dim: usize, vs: impl IntoIterator<Item = SparseVec<F::Elem>>) -> usize {
    let mut e = Echelon::new(f, dim);
    for v in vs {
        e.add(v);
    }
    e.rank()
}

/// Kernel of the linear map whose matrix has the given rows (each a sparse
/// vector over `ncols` coordinates). RREF-derived, hence canonical.
pub fn kernel_from_rows<F: Field>(
    f: &F,
    ncols: usize,
    rows: impl IntoIterator<Item = SparseVec<F::Elem>>,
) -> Vec<SparseVec<F::Elem>> {
    let mut e = Echelon::new(f, ncols);
    for r in rows {
        if e.rank() == ncols {
            break;
        }
        e.add(r);
    }
    e.null_space()
}

pub fn sparse_kernel<F: Field>(f: &F, m: &SparseMatrix<F::Elem>) -> Vec<SparseVec<F::Elem>> {
    kernel_from_rows(f, m.ncols(), m.transpose().cols)
}

pub fn rank<F: Field>(f: &F, m: &Matrix<F::Elem>) -> usize {
    rank_of_vectors(f, m.rows, m.columns_sparse(f))
}

pub fn kernel_basis<F: Field>(f: &F, m: &Matrix<F::Elem>) -> Subspace<F::Elem> {
    let rows = SparseMatrix::from_dense(f, &m.transpose()).cols;
    Subspace { ambient_dim: m.cols, basis: kernel_from_rows(f, m.cols, rows) }
}

pub fn solve_membership<F: Field>(f: &F, s: &Subspace<F::Elem>, v: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(v.len(), s.ambient_dim, "vector length must match the ambient dimension");
    s.echelon(f)
        .coordinates(&SparseVec::from_dense(f, v))
        .map(|c| c.to_dense(f, s.dim()))
}

/// `U ∩ W` via the kernel of `[U | −W]`.
pub fn intersection<F: Field>(f: &F, u: &Subspace<F::Elem>, w: &Subspace<F::Elem>) -> Subspace<F::Elem> {
    assert_eq!(u.ambient_dim, w.ambient_dim);
    let mut cols = u.basis.clone();
    cols.extend(w.basis.iter().map(|b| b.neg(f)));
    let m = SparseMatrix::from_columns(u.ambient_dim, cols);
    let ker = sparse_kernel(f, &m);
    let ud = u.dim();
    let umat = SparseMatrix::from_columns(u.ambient_dim, u.basis.clone());
    let gens = ker
        .iter()
        .map(|k| {
            let head = SparseVec { entries: k.entries.iter().filter(|e| e.0 < ud).cloned().collect() };
            umat.apply(f, &head)
        })
        .collect();
    Subspace::spanned_by(f, u.ambient_dim, gens)
}

/// Linear quotient k^n / span(relations), with a coordinate projection and a
/// section by unit vectors on the non-pivot coordinates.
#[derive(Clone, Debug)]
pub struct Quotient<F: Field> {
    ech: Echelon<F>,
    complement: Vec<usize>,
    position: Vec<Option<usize>>,
}

impl<F: Field> Quotient<F> {
    pub fn new(f: &F, n: usize, relations: impl IntoIterator<Item = SparseVec<F::Elem>>) -> Self {
        let mut ech = Echelon::new(f, n);
        for r in relations {
            ech.add(r);
        }
        ech.make_reduced();
        let complement: Vec<usize> = (0..n).filter(|&i| !ech.is_pivot(i)).collect();
        let mut position = vec![None; n];
        for (k, &i) in complement.iter().enumerate() {
            position[i] = Some(k);
        }
        Quotient { ech, complement, position }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ech.dim()
    }

    pub fn dim(&self) -> usize {
        self.complement.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.ech.rank()
    }

    pub fn project(&self, f: &F, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let r = self.ech.reduce(v);
        SparseVec {
            entries: r
                .entries
                .into_iter()
                .map(|(i, x)| (self.position[i].expect("reduced vector lives on the complement"), x))
                .collect(),
        }
        .reindex(f, Some)
    }

    pub fn lift(&self, f: &F, q: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        q.reindex(f, |k| Some(self.complement[k]))
    }

    pub fn in_relations(&self, v: &SparseVec<F::Elem>) -> bool {
        self.ech.contains(v)
    }

    pub fn projection_matrix(&self, f: &F) -> SparseMatrix<F::Elem> {
        let n = self.ambient_dim();
        SparseMatrix::from_columns(self.dim(), (0..n).map(|i| self.project(f, &SparseVec::unit(f, i))).collect())
    }

    pub fn section_matrix(&self, f: &F) -> SparseMatrix<F::Elem> {
        SparseMatrix::from_columns(
            self.ambient_dim(),
            self.complement.iter().map(|&i| SparseVec::unit(f, i)).collect(),
        )
    }
}

/// Dense wrapper returning `(projection, section)`.
pub fn quotient<F: Field>(f: &F, ambient_dim: usize, relations: &Matrix<F::Elem>) -> (Matrix<F::Elem>, Matrix<F::Elem>) {
    assert_eq!(relations.rows, ambient_dim, "relations must live in the ambient space");
    let q = Quotient::new(f, ambient_dim, relations.columns_sparse(f));
    (q.projection_matrix(f).to_dense(f), q.section_matrix(f).to_dense(f))
}
