//! Assembly of linear operators on cochain spaces Hom_k(A^⊗n, M).
//!
//! An operator T: Hom_k(A^⊗p, M) → Hom_k(A^⊗q, M) is described by its
//! pullback: for each target tuple u, (Tf)(u) = Σ c · L·f(t)·R over terms
//! (c, t, L, R), where L and R are optional basis-element actions on M.

use rayon::prelude::*;

use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{SparseMatrix, SparseVec};
use crate::modules::{Bimodule, LeftModule};
use crate::tensor;

/// Coefficient module: a left module, or a bimodule when `right` is present.
#[derive(Clone, Debug)]
pub struct Coefficients<E> {
    pub dim: usize,
    pub left: Vec<SparseMatrix<E>>,
    pub right: Option<Vec<SparseMatrix<E>>>,
}

impl<E: Clone> Coefficients<E> {
    pub fn from_left(m: &LeftModule<E>) -> Self {
        Coefficients { dim: m.dim, left: m.action.clone(), right: None }
    }

    pub fn from_bimodule(m: &Bimodule<E>) -> Self {
        Coefficients { dim: m.dim, left: m.left.clone(), right: Some(m.right.clone()) }
    }
}

#[derive(Clone, Debug)]
pub struct Term<E> {
    pub coef: E,
    pub src: usize,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

/// Pushes one term per basis tuple in the expansion of the tensor
/// `slots[0] ⊗ slots[1] ⊗ …`, each scaled by `coef`.
pub fn push_expanded<F: Field>(
    f: &F,
    d: usize,
    slots: &[&SparseVec<F::Elem>],
    coef: &F::Elem,
    left: Option<usize>,
    right: Option<usize>,
    out: &mut Vec<Term<F::Elem>>,
) {
    if slots.iter().all(|s| s.nnz() == 1) {
        let mut c = coef.clone();
        let mut idx = 0;
        for s in slots {
            let (k, v) = &s.entries[0];
            c = f.mul(&c, v);
            idx = idx * d + k;
        }
        if !f.is_zero(&c) {
            out.push(Term { coef: c, src: idx, left, right });
        }
        return;
    }
    let mut acc: Vec<(usize, F::Elem)> = vec![(0, coef.clone())];
    for s in slots {
        let mut next = Vec::with_capacity(acc.len() * s.nnz());
        for (base, c) in &acc {
            for (k, v) in &s.entries {
                next.push((base * d + k, f.mul(c, v)));
            }
        }
        acc = next;
    }
    for (src, c) in acc {
        if !f.is_zero(&c) {
            out.push(Term { coef: c, src, left, right });
        }
    }
}

/// Builds the operator from `src_tuples·m` to `dst_tuples·m` coordinates,
/// where the pullback of target tuple `u` (of length `dst_len`) is produced
/// by `terms`.
pub fn pullback_operator<F: Field>(
    f: &F,
    coeffs: &Coefficients<F::Elem>,
    d: usize,
    src_len: usize,
    dst_len: usize,
    terms: impl Fn(&[usize], &mut Vec<Term<F::Elem>>) + Sync,
) -> SparseMatrix<F::Elem> {
    let m = coeffs.dim;
    let src_tuples = tensor::pow(d, src_len);
    let dst_tuples = tensor::pow(d, dst_len);
    let chunk = 512usize;
    let mut triplets: Vec<(usize, usize, F::Elem)> = (0..dst_tuples.div_ceil(chunk))
        .into_par_iter()
        .flat_map_iter(|block| {
            let mut local = Vec::new();
            let mut buf = Vec::new();
            let mut u = vec![0; dst_len];
            for ui in block * chunk..((block + 1) * chunk).min(dst_tuples) {
                tensor::decode_into(d, ui, &mut u);
                buf.clear();
                terms(&u, &mut buf);
                for t in &buf {
                    emit(f, coeffs, t, ui, &mut local);
                }
            }
            local
        })
        .collect();
    triplets.par_sort_unstable_by_key(|t| (t.0, t.1));
    let mut cols: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); src_tuples * m];
    for (c, r, v) in triplets {
        let col = &mut cols[c];
        match col.last_mut() {
            Some(last) if last.0 == r => last.1 = f.add(&last.1, &v),
            _ => col.push((r, v)),
        }
    }
    let cols = cols
        .into_par_iter()
        .map(|mut e| {
            e.retain(|x| !f.is_zero(&x.1));
            SparseVec { entries: e }
        })
        .collect();
    SparseMatrix::from_columns(dst_tuples * m, cols)
}

fn emit<F: Field>(
    f: &F,
    coeffs: &Coefficients<F::Elem>,
    t: &Term<F::Elem>,
    ui: usize,
    out: &mut Vec<(usize, usize, F::Elem)>,
) {
    let m = coeffs.dim;
    for s in 0..m {
        let col = t.src * m + s;
        match (t.left, t.right) {
            (None, None) => out.push((col, ui * m + s, t.coef.clone())),
            (Some(l), None) => {
                for (r, v) in &coeffs.left[l].cols[s].entries {
                    out.push((col, ui * m + r, f.mul(&t.coef, v)));
                }
            }
            (None, Some(rt)) => {
                let right = coeffs.right.as_ref().expect("right action requires a bimodule");
                for (r, v) in &right[rt].cols[s].entries {
                    out.push((col, ui * m + r, f.mul(&t.coef, v)));
                }
            }
            (Some(l), Some(rt)) => {
                let right = coeffs.right.as_ref().expect("right action requires a bimodule");
                let w = coeffs.left[l].apply(f, &right[rt].cols[s]);
                for (r, v) in &w.entries {
                    out.push((col, ui * m + r, f.mul(&t.coef, v)));
                }
            }
        }
    }
}

/// Δ^{(t)} of every basis element, cached as (tuple, coefficient) lists.
pub struct SweedlerTable<E> {
    pub by_arity: Vec<Vec<Vec<(Vec<usize>, E)>>>,
}

impl<E: Clone> SweedlerTable<E> {
    pub fn new<F: Field<Elem = E>>(h: &HopfAlgebra<F>, max_t: usize) -> Self {
        let by_arity = (0..=max_t).map(|t| (0..h.dim()).map(|i| h.sweedler(i, t)).collect()).collect();
        SweedlerTable { by_arity }
    }

    /// Terms of Δ^{(t)}(b_i).
    pub fn get(&self, i: usize, t: usize) -> &[(Vec<usize>, E)] {
        &self.by_arity[t][i]
    }
}

/// Rows of the conditions f(b·x) = b·f(x) (and f(x·c) = f(x)·c for
/// bimodules) on Hom_k(A^⊗len, M). `left_action(g, x)` is b_g·e_x as a
/// vector of A^⊗len; `right_action(g, x)`, when given, is e_x·b_g.
pub fn equivariance_kernel<F: Field>(
    h: &HopfAlgebra<F>,
    coeffs: &Coefficients<F::Elem>,
    len: usize,
    left_action: impl Fn(usize, usize) -> SparseVec<F::Elem> + Sync,
    right_action: Option<&(dyn Fn(usize, usize) -> SparseVec<F::Elem> + Sync)>,
) -> Vec<SparseVec<F::Elem>> {
    let f = h.field();
    let d = h.dim();
    let x_dim = tensor::pow(d, len);
    let m = coeffs.dim;
    let left_rows: Vec<SparseMatrix<F::Elem>> = coeffs.left.iter().map(|a| a.transpose()).collect();
    let mut rows = crate::modules::equivariance_rows(f, x_dim, m, d, &left_action, &left_rows);
    if let (Some(ra), Some(right)) = (right_action, coeffs.right.as_ref()) {
        let right_rows: Vec<SparseMatrix<F::Elem>> = right.iter().map(|a| a.transpose()).collect();
        rows.extend(crate::modules::equivariance_rows(f, x_dim, m, d, ra, &right_rows));
    }
    crate::linalg::kernel_from_rows(f, x_dim * m, rows)
}

/// b·(a_0⊗…⊗a_{k−1}) = b^{(1)}a_0 ⊗ … ⊗ b^{(k)}a_{k−1} on the first k of
/// `len` slots; slots past k are untouched.
pub fn diagonal_left_action<F: Field>(
    h: &HopfAlgebra<F>,
    sweedler: &SweedlerTable<F::Elem>,
    len: usize,
    k: usize,
    g: usize,
    x: usize,
) -> SparseVec<F::Elem> {
    let f = h.field();
    let d = h.dim();
    let tuple = tensor::decode(d, len, x);
    let mut pairs = Vec::new();
    let mut buf = Vec::new();
    for (legs, c) in sweedler.get(g, k - 1) {
        let prods: Vec<&SparseVec<F::Elem>> = (0..k).map(|s| h.mul_basis(legs[s], tuple[s])).collect();
        let rest: Vec<SparseVec<F::Elem>> = tuple[k..].iter().map(|&a| SparseVec::unit(f, a)).collect();
        let mut slots = prods;
        slots.extend(rest.iter());
        buf.clear();
        push_expanded(f, d, &slots, c, None, None, &mut buf);
        pairs.extend(buf.iter().map(|t| (t.src, t.coef.clone())));
    }
    SparseVec::from_pairs(f, pairs)
}

/// x·c on the last slot of a tensor with flat index `x`.
pub fn last_slot_right_action<F: Field>(h: &HopfAlgebra<F>, g: usize, x: usize) -> SparseVec<F::Elem> {
    let d = h.dim();
    let (hi, last) = (x / d, x % d);
    SparseVec { entries: h.mul_basis(last, g).entries.iter().map(|(k, v)| (hi * d + k, v.clone())).collect() }
}
