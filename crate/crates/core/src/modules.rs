//! Left modules and bimodules over a Hopf algebra, given by action matrices.
//!
//! Matrices act on column vectors. For a right action, `right[i]` is the
//! matrix of v ↦ v·b_i, so `right(b_i b_j) = right[j]·right[i]`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{kernel_from_rows, Matrix, SparseMatrix, SparseVec, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeftModule<E> {
    pub dim: usize,
    pub action: Vec<SparseMatrix<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule<E> {
    pub dim: usize,
    pub left: Vec<SparseMatrix<E>>,
    pub right: Vec<SparseMatrix<E>>,
}

/// Linear combination Σ c_k mats[k] for a vector c in A-coordinates.
fn combine<F: Field>(f: &F, mats: &[SparseMatrix<F::Elem>], dim: usize, c: &SparseVec<F::Elem>) -> SparseMatrix<F::Elem> {
    let mut out = SparseMatrix::zero(dim, dim);
    for (k, x) in &c.entries {
        for (col, v) in out.cols.iter_mut().zip(&mats[*k].cols) {
            *col = col.axpy(f, x, v);
        }
    }
    out
}

fn check_shapes<E: Clone>(mats: &[SparseMatrix<E>], d: usize, m: usize, what: &str) -> Result<()> {
    if mats.len() != d {
        return Err(Error::DimensionMismatch(format!("{what}: expected {d} action matrices, got {}", mats.len())));
    }
    if mats.iter().any(|a| a.rows != m || a.ncols() != m) {
        return Err(Error::DimensionMismatch(format!("{what}: action matrices must be {m}x{m}")));
    }
    Ok(())
}

fn check_representation<F: Field>(
    h: &HopfAlgebra<F>,
    mats: &[SparseMatrix<F::Elem>],
    m: usize,
    right: bool,
) -> std::result::Result<(), String> {
    let f = h.field();
    let d = h.dim();
    if combine(f, mats, m, h.unit()) != SparseMatrix::identity(f, m) {
        return Err("unit does not act as the identity".into());
    }
    for i in 0..d {
        for j in 0..d {
            let lhs = if right { mats[j].compose(f, &mats[i]) } else { mats[i].compose(f, &mats[j]) };
            if lhs != combine(f, mats, m, h.mul_basis(i, j)) {
                return Err(format!("action of {}·{} is not the product of actions", h.labels()[i], h.labels()[j]));
            }
        }
    }
    Ok(())
}

impl<E: Clone + PartialEq> LeftModule<E> {
    pub fn new<F: Field<Elem = E>>(h: &HopfAlgebra<F>, dim: usize, action: Vec<SparseMatrix<E>>) -> Result<Self> {
        check_shapes(&action, h.dim(), dim, "left module")?;
        Ok(LeftModule { dim, action })
    }

    pub fn from_dense<F: Field<Elem = E>>(h: &HopfAlgebra<F>, dim: usize, action: &[Matrix<E>]) -> Result<Self> {
        let f = h.field();
        Self::new(h, dim, action.iter().map(|a| SparseMatrix::from_dense(f, a)).collect())
    }

    pub fn validate<F: Field<Elem = E>>(&self, h: &HopfAlgebra<F>) -> Result<()> {
        check_shapes(&self.action, h.dim(), self.dim, "left module")?;
        check_representation(h, &self.action, self.dim, false).map_err(Error::InvalidModule)
    }

    /// Action of an arbitrary algebra element.
    pub fn act<F: Field<Elem = E>>(&self, f: &F, a: &SparseVec<E>) -> SparseMatrix<E> {
        combine(f, &self.action, self.dim, a)
    }
}

impl<E: Clone + PartialEq> Bimodule<E> {
    pub fn new<F: Field<Elem = E>>(
        h: &HopfAlgebra<F>,
        dim: usize,
        left: Vec<SparseMatrix<E>>,
        right: Vec<SparseMatrix<E>>,
    ) -> Result<Self> {
        check_shapes(&left, h.dim(), dim, "bimodule left")?;
        check_shapes(&right, h.dim(), dim, "bimodule right")?;
        Ok(Bimodule { dim, left, right })
    }

    pub fn validate<F: Field<Elem = E>>(&self, h: &HopfAlgebra<F>) -> Result<()> {
        let f = h.field();
        check_shapes(&self.left, h.dim(), self.dim, "bimodule left")?;
        check_shapes(&self.right, h.dim(), self.dim, "bimodule right")?;
        check_representation(h, &self.left, self.dim, false).map_err(|e| Error::InvalidBimodule(format!("left: {e}")))?;
        check_representation(h, &self.right, self.dim, true).map_err(|e| Error::InvalidBimodule(format!("right: {e}")))?;
        for (i, l) in self.left.iter().enumerate() {
            for (j, r) in self.right.iter().enumerate() {
                if l.compose(f, r) != r.compose(f, l) {
                    return Err(Error::InvalidBimodule(format!(
                        "left action of {} does not commute with right action of {}",
                        h.labels()[i],
                        h.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn act_left<F: Field<Elem = E>>(&self, f: &F, a: &SparseVec<E>) -> SparseMatrix<E> {
        combine(f, &self.left, self.dim, a)
    }

    pub fn act_right<F: Field<Elem = E>>(&self, f: &F, a: &SparseVec<E>) -> SparseMatrix<E> {
        combine(f, &self.right, self.dim, a)
    }
}

pub fn trivial_module<F: Field>(h: &HopfAlgebra<F>) -> LeftModule<F::Elem> {
    let f = h.field();
    let action = (0..h.dim())
        .map(|i| SparseMatrix::from_columns(1, vec![SparseVec::from_dense(f, &[h.counit(i).clone()])]))
        .collect();
    LeftModule { dim: 1, action }
}

/// Direct sum of `copies` trivial modules.
pub fn trivial_module_of_dim<F: Field>(h: &HopfAlgebra<F>, copies: usize) -> LeftModule<F::Elem> {
    let f = h.field();
    let action = (0..h.dim()).map(|i| SparseMatrix::identity(f, copies).scale(f, h.counit(i))).collect();
    LeftModule { dim: copies, action }
}

fn left_mult<F: Field>(h: &HopfAlgebra<F>) -> Vec<SparseMatrix<F::Elem>> {
    let d = h.dim();
    (0..d)
        .map(|i| SparseMatrix::from_columns(d, (0..d).map(|j| h.mul_basis(i, j).clone()).collect()))
        .collect()
}

fn right_mult<F: Field>(h: &HopfAlgebra<F>) -> Vec<SparseMatrix<F::Elem>> {
    let d = h.dim();
    (0..d)
        .map(|i| SparseMatrix::from_columns(d, (0..d).map(|j| h.mul_basis(j, i).clone()).collect()))
        .collect()
}

pub fn regular_module<F: Field>(h: &HopfAlgebra<F>) -> LeftModule<F::Elem> {
    LeftModule { dim: h.dim(), action: left_mult(h) }
}

pub fn regular_bimodule<F: Field>(h: &HopfAlgebra<F>) -> Bimodule<F::Elem> {
    Bimodule { dim: h.dim(), left: left_mult(h), right: right_mult(h) }
}

/// The field k with both actions through ε.
pub fn trivial_bimodule<F: Field>(h: &HopfAlgebra<F>) -> Bimodule<F::Elem> {
    let t = trivial_module(h);
    Bimodule { dim: 1, left: t.action.clone(), right: t.action }
}

/// a·m = a^{(1)} m S(a^{(2)})
pub fn adjoint_module<F: Field>(h: &HopfAlgebra<F>, b: &Bimodule<F::Elem>) -> Result<LeftModule<F::Elem>> {
    b.validate(h)?;
    let f = h.field();
    let d = h.dim();
    let action = (0..d)
        .map(|i| {
            let mut acc = SparseMatrix::zero(b.dim, b.dim);
            for (idx, c) in &h.comult_basis(i).entries {
                let (j, k) = (idx / d, idx % d);
                let term = b.left[j].compose(f, &b.act_right(f, h.antipode_basis(k))).scale(f, c);
                acc = SparseMatrix {
                    rows: acc.rows,
                    cols: acc.cols.iter().zip(&term.cols).map(|(x, y)| x.add(f, y)).collect(),
                };
            }
            acc
        })
        .collect();
    Ok(LeftModule { dim: b.dim, action })
}

/// {v : b_i·v = ε(b_i) v for all i}
pub fn invariants<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>) -> Subspace<F::Elem> {
    let f = h.field();
    let rows = (0..h.dim()).flat_map(|i| {
        let shifted = m.action[i].sub(f, &SparseMatrix::identity(f, m.dim).scale(f, h.counit(i)));
        shifted.transpose().cols
    });
    Subspace { ambient_dim: m.dim, basis: kernel_from_rows(f, m.dim, rows.collect::<Vec<_>>()) }
}

/// Rows of the linear conditions F·X(b) = M(b)·F on F ∈ Hom_k(X, M),
/// flattened as `col·m + row`. `x_column(g, c)` is column c of the matrix
/// of generator g on X, and `m_rows[g]` is the transpose of the matrix of g
/// on M.
pub fn equivariance_rows<F: Field>(
    f: &F,
    x_dim: usize,
    m_dim: usize,
    generators: usize,
    x_column: impl Fn(usize, usize) -> SparseVec<F::Elem>,
    m_rows: &[SparseMatrix<F::Elem>],
) -> Vec<SparseVec<F::Elem>> {
    let mut out = Vec::with_capacity(generators * x_dim * m_dim);
    for g in 0..generators {
        for c in 0..x_dim {
            let xc = x_column(g, c);
            for r in 0..m_dim {
                let mut pairs: Vec<(usize, F::Elem)> = xc.entries.iter().map(|(s, v)| (s * m_dim + r, v.clone())).collect();
                for (t, v) in &m_rows[g].cols[r].entries {
                    pairs.push((c * m_dim + t, f.neg(v)));
                }
                let row = SparseVec::from_pairs(f, pairs);
                if !row.is_empty() {
                    out.push(row);
                }
            }
        }
    }
    out
}

/// Hom_A(X, M) inside Hom_k(X, M), flattened `col·m + row`.
pub fn hom_equivariant<F: Field>(
    h: &HopfAlgebra<F>,
    x: &LeftModule<F::Elem>,
    m: &LeftModule<F::Elem>,
) -> Subspace<F::Elem> {
    let f = h.field();
    let m_rows: Vec<_> = m.action.iter().map(|a| a.transpose()).collect();
    let rows = equivariance_rows(f, x.dim, m.dim, h.dim(), |g, c| x.action[g].cols[c].clone(), &m_rows);
    let n = x.dim * m.dim;
    Subspace { ambient_dim: n, basis: kernel_from_rows(f, n, rows) }
}

/// L⊗M with the diagonal action a·(l⊗m) = a^{(1)}l ⊗ a^{(2)}m.
pub fn tensor_module<F: Field>(h: &HopfAlgebra<F>, l: &LeftModule<F::Elem>, m: &LeftModule<F::Elem>) -> LeftModule<F::Elem> {
    let f = h.field();
    let d = h.dim();
    let n = l.dim * m.dim;
    let action = (0..d)
        .map(|i| {
            let cols = (0..n)
                .map(|c| {
                    let (cl, cm) = (c / m.dim, c % m.dim);
                    let mut pairs = Vec::new();
                    for (idx, coef) in &h.comult_basis(i).entries {
                        let (j, k) = (idx / d, idx % d);
                        for (rl, a) in &l.action[j].cols[cl].entries {
                            for (rm, b) in &m.action[k].cols[cm].entries {
                                pairs.push((rl * m.dim + rm, f.mul(coef, &f.mul(a, b))));
                            }
                        }
                    }
                    SparseVec::from_pairs(f, pairs)
                })
                .collect();
            SparseMatrix::from_columns(n, cols)
        })
        .collect();
    LeftModule { dim: n, action }
}

/// Hom_k(X, M) with (a·F)(x) = a^{(1)} F(S(a^{(2)}) x), flattened `col·m + row`.
pub fn hom_module<F: Field>(h: &HopfAlgebra<F>, x: &LeftModule<F::Elem>, m: &LeftModule<F::Elem>) -> LeftModule<F::Elem> {
    let f = h.field();
    let d = h.dim();
    let n = x.dim * m.dim;
    let action = (0..d)
        .map(|i| {
            let mut terms: Vec<(SparseMatrix<F::Elem>, SparseMatrix<F::Elem>, F::Elem)> = Vec::new();
            for (idx, coef) in &h.comult_basis(i).entries {
                let (j, k) = (idx / d, idx % d);
                terms.push((m.action[j].clone(), x.act(f, h.antipode_basis(k)).transpose(), coef.clone()));
            }
            // A·E_{rc}·B has entry (r', c') = A[r'][r]·B[c][c']
            let cols = (0..n)
                .map(|e| {
                    let (c, r) = (e / m.dim, e % m.dim);
                    let mut pairs = Vec::new();
                    for (a, bt, coef) in &terms {
                        for (r2, av) in &a.cols[r].entries {
                            for (c2, bv) in &bt.cols[c].entries {
                                pairs.push((c2 * m.dim + r2, f.mul(coef, &f.mul(av, bv))));
                            }
                        }
                    }
                    SparseVec::from_pairs(f, pairs)
                })
                .collect();
            SparseMatrix::from_columns(n, cols)
        })
        .collect();
    LeftModule { dim: n, action }
}
