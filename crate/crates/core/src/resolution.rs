//! The coinvariant resolutions S̃•(A) of k and S̃ᵉ•(A) of A, their
//! cohomology routes, splitting maps and the kC_p rank table.
//!
//! S̃_n is A^⊗(n+1) modulo v·σ_i − v, where v·σ_i is minus the swap of
//! slots i−1 and i; S̃ᵉ_n carries one extra, never permuted, last slot.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bar::{CohomologyReport, Route};
use crate::cochain::CochainComplex;
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::groups;
use crate::hopf::{group_algebra, HopfAlgebra};
use crate::linalg::{kernel_from_rows, Echelon, Quotient, SparseMatrix, SparseVec, Subspace};
use crate::modules::{equivariance_rows, hom_equivariant, regular_module, tensor_module, Bimodule, LeftModule};
use crate::ops::{self, SweedlerTable};
use crate::tensor;

#[derive(Clone, Debug)]
enum Basis<F: Field> {
    Sorted(HashMap<Vec<usize>, usize>),
    Generic(Quotient<F>),
}

/// One coinvariant space. Degree −1 is the augmentation target (k, or A in
/// the bimodule case).
#[derive(Clone, Debug)]
pub struct CoinvariantSpace<F: Field> {
    pub degree: isize,
    pub slots: usize,
    pub labels: Vec<Vec<usize>>,
    pub fast_path: bool,
    pub warning: Option<String>,
    field: F,
    d: usize,
    basis: Basis<F>,
}

impl<F: Field> CoinvariantSpace<F> {
    /// Coinvariants of A^⊗(degree+1) (plus a free last slot when
    /// `free_last`). `force_generic` skips the sorted-tuple basis.
    pub fn new(h: &HopfAlgebra<F>, degree: isize, free_last: bool, force_generic: bool) -> Self {
        let f = h.field().clone();
        let d = h.dim();
        let permuted = (degree + 1) as usize;
        let slots = permuted + free_last as usize;
        let char2 = f.characteristic() == 2;
        let fast = !force_generic && !char2;
        let warning = (char2 && permuted > 1)
            .then(|| "characteristic 2: sorted-tuple basis disabled, generic quotient used".to_string());
        if fast {
            let mut labels = Vec::new();
            for t in tensor::increasing_tuples(d, permuted) {
                if free_last {
                    for a in 0..d {
                        let mut l = t.clone();
                        l.push(a);
                        labels.push(l);
                    }
                } else {
                    labels.push(t);
                }
            }
            let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
            return CoinvariantSpace { degree, slots, labels, fast_path: true, warning, field: f, d, basis: Basis::Sorted(index) };
        }
        let amb = tensor::pow(d, slots);
        let relations = (0..amb).flat_map(|x| {
            let u = tensor::decode(d, slots, x);
            let f = &f;
            (1..permuted).filter_map(move |i| {
                let mut s = u.clone();
                s.swap(i - 1, i);
                let y = tensor::encode(d, &s);
                (y != x || f.characteristic() != 2)
                    .then(|| SparseVec::from_pairs(f, vec![(x, f.one()), (y, f.one())]))
            })
        });
        let q = Quotient::new(&f, amb, relations.collect::<Vec<_>>());
        let labels = (0..q.dim())
            .map(|k| {
                let idx = q.lift(&f, &SparseVec::unit(&f, k)).entries[0].0;
                tensor::decode(d, slots, idx)
            })
            .collect();
        CoinvariantSpace { degree, slots, labels, fast_path: false, warning, field: f, d, basis: Basis::Generic(q) }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn ambient_dim(&self) -> usize {
        tensor::pow(self.d, self.slots)
    }

    fn permuted(&self) -> usize {
        (self.degree + 1) as usize
    }

    /// Image of an ambient vector in coinvariant coordinates.
    pub fn project(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        match &self.basis {
            Basis::Generic(q) => q.project(f, v),
            Basis::Sorted(index) => {
                let k = self.permuted();
                let mut pairs = Vec::new();
                let mut u = vec![0; self.slots];
                for (x, c) in &v.entries {
                    tensor::decode_into(self.d, *x, &mut u);
                    if let Some(odd) = sort_with_parity(&mut u[..k]) {
                        pairs.push((index[&u], if odd { f.neg(c) } else { c.clone() }));
                    }
                }
                SparseVec::from_pairs(f, pairs)
            }
        }
    }

    /// The ambient representative of basis vector `j`.
    pub fn section(&self, j: usize) -> SparseVec<F::Elem> {
        match &self.basis {
            Basis::Generic(q) => q.lift(&self.field, &SparseVec::unit(&self.field, j)),
            Basis::Sorted(_) => SparseVec::unit(&self.field, tensor::encode(self.d, &self.labels[j])),
        }
    }

    /// proj_target ∘ op ∘ section, with `op` given on ambient basis vectors.
    pub fn induce(
        &self,
        target: &CoinvariantSpace<F>,
        op: impl Fn(usize) -> SparseVec<F::Elem> + Sync,
    ) -> SparseMatrix<F::Elem> {
        let f = &self.field;
        let cols = (0..self.dim())
            .into_par_iter()
            .map(|j| {
                let mut acc = SparseVec::new();
                for (x, c) in &self.section(j).entries {
                    acc = acc.axpy(f, c, &op(*x));
                }
                target.project(&acc)
            })
            .collect();
        SparseMatrix::from_columns(target.dim(), cols)
    }

    /// The A-action induced from the diagonal action on the ambient tensor.
    pub fn left_module(&self, h: &HopfAlgebra<F>) -> LeftModule<F::Elem> {
        let amb = Ambient::new(h, self.slots);
        let action = (0..h.dim()).map(|g| self.induce(self, |x| amb.left(self.slots, g, x))).collect();
        LeftModule { dim: self.dim(), action }
    }

    /// Whether `op` carries every relation v·σ_i − v into the relations of
    /// `target`.
    pub fn respects_relations(
        &self,
        target: &CoinvariantSpace<F>,
        op: impl Fn(usize) -> SparseVec<F::Elem> + Sync,
    ) -> bool {
        let f = &self.field;
        let (d, slots, k) = (self.d, self.slots, self.permuted());
        (0..self.ambient_dim()).into_par_iter().all(|x| {
            let u = tensor::decode(d, slots, x);
            (1..k).all(|i| {
                let mut s = u.clone();
                s.swap(i - 1, i);
                let r = op(x).add(f, &op(tensor::encode(d, &s)));
                target.project(&r).is_empty()
            })
        })
    }
}

/// Sorts in place; `None` on a repeated entry, otherwise the parity.
fn sort_with_parity(u: &mut [usize]) -> Option<bool> {
    let mut odd = false;
    for i in 1..u.len() {
        let mut j = i;
        while j > 0 && u[j - 1] > u[j] {
            u.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
        if j > 0 && u[j - 1] == u[j] {
            return None;
        }
    }
    Some(odd)
}

/// S̃_n with its induced A-action (see [`CoinvariantSpace::new`]).
pub fn coinvariant_space<F: Field>(h: &HopfAlgebra<F>, n: usize) -> CoinvariantSpace<F> {
    CoinvariantSpace::new(h, n as isize, false, false)
}

struct Ambient<'a, F: Field> {
    h: &'a HopfAlgebra<F>,
    sw: SweedlerTable<F::Elem>,
}

impl<'a, F: Field> Ambient<'a, F> {
    fn new(h: &'a HopfAlgebra<F>, max_slots: usize) -> Self {
        Ambient { h, sw: SweedlerTable::new(h, max_slots.saturating_sub(1)) }
    }

    fn left(&self, slots: usize, g: usize, x: usize) -> SparseVec<F::Elem> {
        let f = self.h.field();
        if slots == 0 {
            return SparseVec::from_pairs(f, vec![(0, self.h.counit(g).clone())]);
        }
        ops::diagonal_left_action(self.h, &self.sw, slots, slots, g, x)
    }

    fn right(&self, g: usize, x: usize) -> SparseVec<F::Elem> {
        ops::last_slot_right_action(self.h, g, x)
    }

    /// Σ_{i < deletable} (−1)^i ε(a_i) (a_0 ⊗ … â_i … ⊗ a_{slots−1}).
    fn face(&self, slots: usize, deletable: usize, x: usize) -> SparseVec<F::Elem> {
        let f = self.h.field();
        let d = self.h.dim();
        let u = tensor::decode(d, slots, x);
        let mut pairs = Vec::new();
        for i in 0..deletable {
            let e = self.h.counit(u[i]);
            if f.is_zero(e) {
                continue;
            }
            let mut rest = u.clone();
            rest.remove(i);
            pairs.push((tensor::encode(d, &rest), if i % 2 == 0 { e.clone() } else { f.neg(e) }));
        }
        SparseVec::from_pairs(f, pairs)
    }

    /// 1 ⊗ e_x.
    fn prepend_unit(&self, slots: usize, x: usize) -> SparseVec<F::Elem> {
        let shift = tensor::pow(self.h.dim(), slots);
        SparseVec { entries: self.h.unit().entries.iter().map(|(k, c)| (k * shift + x, c.clone())).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCheck {
    pub degree: isize,
    pub pass: bool,
}

/// Augmented complex S̃_N → … → S̃_0 → k (or S̃ᵉ_• → A).
/// `spaces[k]` has degree k − 1; `diffs[k]` maps `spaces[k+1]` to `spaces[k]`,
/// so `diffs[0]` is the augmentation.
#[derive(Clone, Debug)]
pub struct ResolutionComplex<F: Field> {
    pub field: F,
    pub bimodule: bool,
    pub spaces: Vec<CoinvariantSpace<F>>,
    pub diffs: Vec<SparseMatrix<F::Elem>>,
    pub left: Vec<Vec<SparseMatrix<F::Elem>>>,
    pub right: Option<Vec<Vec<SparseMatrix<F::Elem>>>>,
}

impl<F: Field> ResolutionComplex<F> {
    pub fn build(h: &HopfAlgebra<F>, n_max: usize, bimodule: bool, force_generic: bool) -> Self {
        let e = bimodule as usize;
        let amb = Ambient::new(h, n_max + 1 + e);
        let spaces: Vec<CoinvariantSpace<F>> = (-1..=n_max as isize)
            .into_par_iter()
            .map(|deg| CoinvariantSpace::new(h, deg, bimodule, force_generic))
            .collect();
        let diffs = (0..=n_max)
            .into_par_iter()
            .map(|k| {
                let src = &spaces[k + 1];
                src.induce(&spaces[k], |x| amb.face(src.slots, k + 1, x))
            })
            .collect();
        let left = spaces.par_iter().map(|s| s.left_module(h).action).collect();
        let right = bimodule.then(|| {
            spaces.par_iter().map(|s| (0..h.dim()).map(|g| s.induce(s, |x| amb.right(g, x))).collect()).collect()
        });
        ResolutionComplex { field: h.field().clone(), bimodule, spaces, diffs, left, right }
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 2
    }

    /// dim S̃_n for n = 0..=N.
    pub fn dims(&self) -> Vec<usize> {
        self.spaces[1..].iter().map(|s| s.dim()).collect()
    }

    pub fn space(&self, n: usize) -> &CoinvariantSpace<F> {
        &self.spaces[n + 1]
    }

    pub fn warnings(&self) -> Vec<String> {
        let mut w: Vec<String> = self.spaces.iter().filter_map(|s| s.warning.clone()).collect();
        w.dedup();
        w
    }

    pub fn module(&self, n: usize) -> LeftModule<F::Elem> {
        LeftModule { dim: self.space(n).dim(), action: self.left[n + 1].clone() }
    }

    pub fn bimodule_at(&self, n: usize) -> Option<Bimodule<F::Elem>> {
        let right = self.right.as_ref()?;
        Some(Bimodule { dim: self.space(n).dim(), left: self.left[n + 1].clone(), right: right[n + 1].clone() })
    }

    /// d∘d = 0 through the augmentation.
    pub fn is_complex(&self) -> bool {
        let f = &self.field;
        self.diffs.windows(2).all(|w| w[0].compose(f, &w[1]).is_zero())
    }

    /// Exactness at every space whose incoming map is built.
    pub fn exactness(&self) -> Vec<DegreeCheck> {
        let f = &self.field;
        let ranks: Vec<usize> = self
            .diffs
            .par_iter()
            .map(|m| crate::linalg::rank_of_vectors(f, m.rows, m.cols.iter().cloned()))
            .collect();
        (0..self.diffs.len())
            .map(|k| {
                let out = if k == 0 { 0 } else { ranks[k - 1] };
                DegreeCheck { degree: k as isize - 1, pass: self.spaces[k].dim() == out + ranks[k] }
            })
            .collect()
    }

    /// Differentials and actions respect the relations, on degrees whose
    /// ambient dimension is at most `max_ambient`.
    pub fn well_defined(&self, h: &HopfAlgebra<F>, max_ambient: usize) -> bool {
        let amb = Ambient::new(h, self.spaces.last().map_or(1, |s| s.slots));
        (1..self.spaces.len()).filter(|&k| self.spaces[k].ambient_dim() <= max_ambient).all(|k| {
            let s = &self.spaces[k];
            s.respects_relations(&self.spaces[k - 1], |x| amb.face(s.slots, k, x))
                && (0..h.dim()).all(|g| s.respects_relations(s, |x| amb.left(s.slots, g, x)))
                && (!self.bimodule || (0..h.dim()).all(|g| s.respects_relations(s, |x| amb.right(g, x))))
        })
    }

    /// Induced h_n from 1 ⊗ −, checked against d h + h d = id in every degree
    /// from the augmentation target up to N − 1.
    pub fn contracting_homotopy_check(&self, h: &HopfAlgebra<F>) -> Vec<DegreeCheck> {
        let f = &self.field;
        let amb = Ambient::new(h, 1);
        let homotopy: Vec<SparseMatrix<F::Elem>> = (0..self.spaces.len() - 1)
            .into_par_iter()
            .map(|k| {
                let s = &self.spaces[k];
                s.induce(&self.spaces[k + 1], |x| amb.prepend_unit(s.slots, x))
            })
            .collect();
        (0..self.spaces.len() - 1)
            .into_par_iter()
            .map(|k| {
                let dim = self.spaces[k].dim();
                let mut sum = self.diffs[k].compose(f, &homotopy[k]);
                if k > 0 {
                    let back = homotopy[k - 1].compose(f, &self.diffs[k - 1]);
                    sum = sum.sub(f, &back.scale(f, &f.neg(&f.one())));
                }
                DegreeCheck { degree: k as isize - 1, pass: sum == SparseMatrix::identity(f, dim) }
            })
            .collect()
    }

    /// Bimodule isomorphism S̃_n ⊗ A → S̃ᵉ_n, [x] ⊗ a ↦ [x ⊗ a], checked for
    /// bijectivity and compatibility with both actions. Needs `plain`, the
    /// one-sided complex of the same length.
    pub fn tensor_factorization(&self, h: &HopfAlgebra<F>, plain: &ResolutionComplex<F>) -> Vec<DegreeCheck> {
        let f = &self.field;
        let d = h.dim();
        let reg = regular_module(h);
        (0..=self.max_degree().min(plain.max_degree()))
            .into_par_iter()
            .map(|n| {
                let (s, se) = (plain.space(n), self.space(n));
                let cols: Vec<SparseVec<F::Elem>> = (0..s.dim() * d)
                    .map(|c| {
                        let (j, a) = (c / d, c % d);
                        let lifted = SparseVec {
                            entries: s.section(j).entries.into_iter().map(|(x, v)| (x * d + a, v)).collect(),
                        };
                        se.project(&lifted)
                    })
                    .collect();
                let iso = SparseMatrix::from_columns(se.dim(), cols);
                let bijective = se.dim() == s.dim() * d
                    && crate::linalg::rank_of_vectors(f, se.dim(), iso.cols.iter().cloned()) == se.dim();
                let src = tensor_module(h, &plain.module(n), &reg);
                let right = self.right.as_ref().expect("bimodule complex");
                let compatible = (0..d).all(|g| {
                    let src_right = right_on_last_factor(h, s.dim(), g);
                    iso.compose(f, &src.action[g]) == self.left[n + 1][g].compose(f, &iso)
                        && iso.compose(f, &src_right) == right[n + 1][g].compose(f, &iso)
                });
                DegreeCheck { degree: n as isize, pass: bijective && compatible }
            })
            .collect()
    }
}

/// Right multiplication by b_g on the A factor of X ⊗ A.
fn right_on_last_factor<F: Field>(h: &HopfAlgebra<F>, x_dim: usize, g: usize) -> SparseMatrix<F::Elem> {
    let d = h.dim();
    let cols = (0..x_dim * d)
        .map(|c| {
            let (j, a) = (c / d, c % d);
            SparseVec { entries: h.mul_basis(a, g).entries.iter().map(|(k, v)| (j * d + k, v.clone())).collect() }
        })
        .collect();
    SparseMatrix::from_columns(x_dim * d, cols)
}

/// Precomposition with `d: X → Y` on Hom_k(Y, M) → Hom_k(X, M), flattened
/// `col·m + row`.
fn precompose<F: Field>(f: &F, d: &SparseMatrix<F::Elem>, m: usize) -> SparseMatrix<F::Elem> {
    let (y, x) = (d.rows, d.ncols());
    let mut cols: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); y * m];
    for (c2, col) in d.cols.iter().enumerate() {
        for (c, v) in &col.entries {
            for r in 0..m {
                cols[c * m + r].push((c2 * m + r, v.clone()));
            }
        }
    }
    let cols = cols.into_iter().map(|e| SparseVec::from_pairs(f, e)).collect();
    SparseMatrix::from_columns(x * m, cols)
}

/// The complex Hom_A(S̃_•, M), degrees 0..=N.
pub fn hom_complex<F: Field>(
    h: &HopfAlgebra<F>,
    res: &ResolutionComplex<F>,
    m: &LeftModule<F::Elem>,
) -> Result<CochainComplex<F>> {
    m.validate(h)?;
    let n_max = res.max_degree();
    let spaces = (0..=n_max).into_par_iter().map(|n| hom_equivariant(h, &res.module(n), m)).collect();
    let diffs = (0..n_max).map(|n| precompose(h.field(), &res.diffs[n + 1], m.dim)).collect();
    CochainComplex::new(h.field(), spaces, diffs)
}

/// The complex Hom_{A^e}(S̃ᵉ_•, M), degrees 0..=N.
pub fn hom_complex_bimodule<F: Field>(
    h: &HopfAlgebra<F>,
    res: &ResolutionComplex<F>,
    m: &Bimodule<F::Elem>,
) -> Result<CochainComplex<F>> {
    m.validate(h)?;
    let f = h.field();
    let n_max = res.max_degree();
    let ml: Vec<_> = m.left.iter().map(|a| a.transpose()).collect();
    let mr: Vec<_> = m.right.iter().map(|a| a.transpose()).collect();
    let spaces = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let x = res.bimodule_at(n).expect("bimodule complex");
            let mut rows = equivariance_rows(f, x.dim, m.dim, h.dim(), |g, c| x.left[g].cols[c].clone(), &ml);
            rows.extend(equivariance_rows(f, x.dim, m.dim, h.dim(), |g, c| x.right[g].cols[c].clone(), &mr));
            let dim = x.dim * m.dim;
            Subspace { ambient_dim: dim, basis: kernel_from_rows(f, dim, rows) }
        })
        .collect();
    let diffs = (0..n_max).map(|n| precompose(f, &res.diffs[n + 1], m.dim)).collect();
    CochainComplex::new(f, spaces, diffs)
}

/// SH^n for n < n_max from Hom_A(S̃_•, M).
pub fn sh_via_resolution<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n_max: usize) -> Result<CohomologyReport> {
    h.require_cocommutative()?;
    let res = ResolutionComplex::build(h, n_max, false, false);
    let c = hom_complex(h, &res, m)?;
    Ok(CohomologyReport { route: Route::Resolution, dims: c.cohomology_dims(n_max - 1)?, cochain_dims: c.space_dims()[..n_max].to_vec() })
}

/// SHH^n for n < n_max from Hom_{A^e}(S̃ᵉ_•, M).
pub fn shh_via_resolution<F: Field>(h: &HopfAlgebra<F>, m: &Bimodule<F::Elem>, n_max: usize) -> Result<CohomologyReport> {
    h.require_cocommutative()?;
    let res = ResolutionComplex::build(h, n_max, true, false);
    let c = hom_complex_bimodule(h, &res, m)?;
    Ok(CohomologyReport { route: Route::Resolution, dims: c.cohomology_dims(n_max - 1)?, cochain_dims: c.space_dims()[..n_max].to_vec() })
}

#[derive(Clone, Debug)]
pub struct Splitting<E> {
    pub degree: usize,
    /// S̃_n → A ⊗ S̃_{n−1}
    pub phi: SparseMatrix<E>,
    /// A ⊗ S̃_{n−1} → S̃_n
    pub psi: SparseMatrix<E>,
    pub retract_ok: bool,
    pub equivariant_ok: bool,
}

/// S̃_n as a direct summand of A ⊗ S̃_{n−1} (n ≥ 1, char ∤ n+1).
pub fn splitting_maps<F: Field>(h: &HopfAlgebra<F>, n: usize) -> Result<Splitting<F::Elem>> {
    let f = h.field();
    let p = f.characteristic();
    if n == 0 {
        return Err(Error::DegreeOutOfRange { degree: 0, max: 0 });
    }
    if p != 0 && (n as u64 + 1) % p == 0 {
        return Err(Error::CharacteristicDivides { p, n: n as u64 + 1 });
    }
    let res = ResolutionComplex::build(h, n, false, false);
    let (sn, sm) = (res.space(n), res.space(n - 1));
    let d = h.dim();
    let inv = f.inv(&f.from_i64(n as i64 + 1)).expect("n+1 is invertible");
    let phi_cols = (0..sn.dim())
        .into_par_iter()
        .map(|j| {
            let mut acc = SparseVec::new();
            for (x, c) in &sn.section(j).entries {
                let u = tensor::decode(d, n + 1, *x);
                for i in 0..=n {
                    let mut rest = u.clone();
                    let a = rest.remove(i);
                    let proj = sm.project(&SparseVec::unit(f, tensor::encode(d, &rest)));
                    let coef = f.mul(&inv, c);
                    let coef = if i % 2 == 0 { coef } else { f.neg(&coef) };
                    let shifted = SparseVec { entries: proj.entries.into_iter().map(|(k, v)| (a * sm.dim() + k, v)).collect() };
                    acc = acc.axpy(f, &coef, &shifted);
                }
            }
            acc
        })
        .collect();
    let phi = SparseMatrix::from_columns(d * sm.dim(), phi_cols);
    let shift = tensor::pow(d, n);
    let psi_cols = (0..d * sm.dim())
        .into_par_iter()
        .map(|c| {
            let (a, j) = (c / sm.dim(), c % sm.dim());
            let lifted = SparseVec { entries: sm.section(j).entries.into_iter().map(|(x, v)| (a * shift + x, v)).collect() };
            sn.project(&lifted)
        })
        .collect();
    let psi = SparseMatrix::from_columns(sn.dim(), psi_cols);
    let retract_ok = psi.compose(f, &phi) == SparseMatrix::identity(f, sn.dim());
    let target = tensor_module(h, &regular_module(h), &res.module(n - 1));
    let src = res.module(n);
    let equivariant_ok = (0..d).all(|g| {
        phi.compose(f, &src.action[g]) == target.action[g].compose(f, &phi)
            && psi.compose(f, &target.action[g]) == src.action[g].compose(f, &psi)
    });
    Ok(Splitting { degree: n, phi, psi, retract_ok, equivariant_ok })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CpRankRow {
    pub n: usize,
    pub dim: usize,
    /// C(p, n+1)/p
    pub rank: usize,
    /// Labels of the chosen free generators.
    pub generators: Vec<Vec<usize>>,
    pub is_free: bool,
}

/// For A = kC_p over GF(p): dim S̃_n, its expected rank and a greedy
/// orbit basis certifying freeness, for 1 ≤ n ≤ min(n_max, p−2).
pub fn cp_rank_table(p: u64, n_max: usize) -> Result<Vec<CpRankRow>> {
    if p == 2 {
        return Err(Error::InvalidPrime(p));
    }
    let f = PrimeField::new(p)?;
    let pu = p as usize;
    let h = group_algebra(&f, &groups::cyclic(pu), None)?;
    let top = n_max.min(pu.saturating_sub(2));
    if top == 0 {
        return Ok(Vec::new());
    }
    let res = ResolutionComplex::build(&h, top, false, false);
    Ok((1..=top)
        .map(|n| {
            let s = res.space(n);
            let m = res.module(n);
            let mut ech = Echelon::new(&f, s.dim());
            let mut generators = Vec::new();
            for j in 0..s.dim() {
                let mut trial = ech.clone();
                let before = trial.rank();
                for g in 0..pu {
                    trial.add(m.action[g].cols[j].clone());
                }
                if trial.rank() == before + pu {
                    ech = trial;
                    generators.push(s.labels[j].clone());
                }
            }
            let dim = s.dim();
            let is_free = generators.len() * pu == dim && ech.rank() == dim;
            CpRankRow { n, dim, rank: tensor::binomial(p, n as u64 + 1) as usize / pu, generators, is_free }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::RationalField;
    use crate::modules::trivial_module;

    fn kcp(p: usize) -> HopfAlgebra<PrimeField> {
        group_algebra(&PrimeField::new(p as u64).unwrap(), &groups::cyclic(p), None).unwrap()
    }

    #[test]
    fn sorting_parity() {
        let mut u = vec![2, 0, 1];
        assert_eq!(sort_with_parity(&mut u), Some(false));
        assert_eq!(u, vec![0, 1, 2]);
        let mut u = vec![1, 0];
        assert_eq!(sort_with_parity(&mut u), Some(true));
        assert_eq!(sort_with_parity(&mut [1, 0, 1]), None);
    }

    #[test]
    fn coinvariant_dims_fast_and_generic() {
        let h = kcp(3);
        for n in 0..4 {
            let a = CoinvariantSpace::new(&h, n, false, false);
            let b = CoinvariantSpace::new(&h, n, false, true);
            assert_eq!(a.dim(), b.dim());
            assert_eq!(a.dim() as u64, tensor::binomial(3, n as u64 + 1));
        }
    }

    #[test]
    fn resolution_kc3() {
        let h = kcp(3);
        let r = ResolutionComplex::build(&h, 3, false, false);
        assert_eq!(r.dims(), vec![3, 3, 1, 0]);
        assert!(r.is_complex());
        assert!(r.exactness().iter().all(|c| c.pass));
        assert!(r.contracting_homotopy_check(&h).iter().all(|c| c.pass));
        assert!(r.well_defined(&h, usize::MAX));
        let k = trivial_module(&h);
        assert_eq!(sh_via_resolution(&h, &k, 4).unwrap().dims, vec![1, 1, 1, 0]);
    }

    #[test]
    fn bimodule_resolution_kc3() {
        let h = kcp(3);
        let r = ResolutionComplex::build(&h, 2, true, false);
        assert_eq!(r.dims(), vec![9, 9, 3]);
        assert!(r.is_complex());
        assert!(r.exactness().iter().all(|c| c.pass));
        let plain = ResolutionComplex::build(&h, 2, false, false);
        assert!(r.tensor_factorization(&h, &plain).iter().all(|c| c.pass));
        let a = crate::modules::regular_bimodule(&h);
        assert_eq!(shh_via_resolution(&h, &a, 4).unwrap().dims, vec![3, 3, 3, 0]);
    }

    #[test]
    fn splitting() {
        let h = kcp(5);
        for n in 1..=3 {
            let s = splitting_maps(&h, n).unwrap();
            assert!(s.retract_ok && s.equivariant_ok);
        }
        assert_eq!(splitting_maps(&h, 4).unwrap_err(), Error::CharacteristicDivides { p: 5, n: 5 });
        let q = group_algebra(&RationalField, &groups::symmetric(3), None).unwrap();
        for n in 1..=2 {
            assert!(splitting_maps(&q, n).unwrap().retract_ok);
        }
    }

    #[test]
    fn rank_table() {
        let t = cp_rank_table(5, 10).unwrap();
        assert_eq!(t.iter().map(|r| r.rank).collect::<Vec<_>>(), vec![2, 2, 1]);
        assert!(t.iter().all(|r| r.is_free && r.generators.len() == r.rank));
        assert!(matches!(cp_rank_table(4, 2), Err(Error::InvalidPrime(4))));
        assert!(matches!(cp_rank_table(2, 2), Err(Error::InvalidPrime(2))));
    }
}
