//! Bounded cochain complexes presented as subspaces of coordinate spaces.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{sparse_kernel, Echelon, Inserted, Matrix, SparseMatrix, SparseVec, Subspace};

/// Degrees `0..=N`; `diffs[n]` maps ambient(n) to ambient(n+1) for n < N.
#[derive(Clone, Debug)]
pub struct CochainComplex<F: Field> {
    pub field: F,
    pub spaces: Vec<Subspace<F::Elem>>,
    pub diffs: Vec<SparseMatrix<F::Elem>>,
}

/// Generators σ_1..σ_n acting on the ambient space of degree n.
#[derive(Clone, Debug)]
pub struct ActionOperator<E> {
    pub degree: usize,
    pub generators: Vec<SparseMatrix<E>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexFailure {
    pub degree: usize,
    /// `"image"` (differential leaves the next space) or `"square"` (d∘d ≠ 0).
    pub kind: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComplexReport {
    pub pass: bool,
    pub failure: Option<ComplexFailure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxeterReport {
    pub degree: usize,
    pub involution: bool,
    pub braid: bool,
    pub far_commute: bool,
    pub preserves_space: bool,
}

impl CoxeterReport {
    pub fn pass(&self) -> bool {
        self.involution && self.braid && self.far_commute && self.preserves_space
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedMap<E> {
    pub degree: usize,
    /// dim H^n(full) × dim H^n(sub)
    pub matrix: Matrix<E>,
    pub injective: bool,
    pub surjective: bool,
}

impl<E: Clone> InducedMap<E> {
    pub fn is_isomorphism(&self) -> bool {
        self.injective && self.surjective
    }
}

impl<E: Clone + PartialEq + Send + Sync> ActionOperator<E> {
    pub fn identity<F: Field<Elem = E>>(f: &F, degree: usize, ambient: usize) -> Self {
        ActionOperator { degree, generators: vec![SparseMatrix::identity(f, ambient); degree] }
    }

    /// Checks the Coxeter relations of S_{n+1} on the vectors of `space`.
    pub fn check_coxeter<F: Field<Elem = E>>(&self, f: &F, space: &Subspace<E>) -> CoxeterReport {
        let g = &self.generators;
        let k = g.len();
        let mut ech = Echelon::new(f, space.ambient_dim);
        for b in &space.basis {
            ech.insert(b.clone());
        }
        let per_vector = |v: &SparseVec<E>| -> [bool; 4] {
            let imgs: Vec<SparseVec<E>> = g.iter().map(|s| s.apply(f, v)).collect();
            let preserves = space.is_full() || imgs.iter().all(|w| ech.contains(w));
            let involution = (0..k).all(|i| g[i].apply(f, &imgs[i]) == *v);
            let braid = (0..k.saturating_sub(1)).all(|i| {
                let a = g[i].apply(f, &g[i + 1].apply(f, &imgs[i]));
                let b = g[i + 1].apply(f, &g[i].apply(f, &imgs[i + 1]));
                a == b
            });
            let far = (0..k).all(|i| (i + 2..k).all(|j| g[i].apply(f, &imgs[j]) == g[j].apply(f, &imgs[i])));
            [involution, braid, far, preserves]
        };
        let all = space
            .basis
            .par_iter()
            .map(per_vector)
            .reduce(|| [true; 4], |a, b| [a[0] && b[0], a[1] && b[1], a[2] && b[2], a[3] && b[3]]);
        CoxeterReport {
            degree: self.degree,
            involution: all[0],
            braid: all[1],
            far_commute: all[2],
            preserves_space: all[3],
        }
    }
}

impl<F: Field> CochainComplex<F> {
    pub fn new(field: &F, spaces: Vec<Subspace<F::Elem>>, diffs: Vec<SparseMatrix<F::Elem>>) -> Result<Self> {
        if spaces.is_empty() || diffs.len() + 1 != spaces.len() {
            return Err(Error::DimensionMismatch("a complex needs N+1 spaces and N differentials".into()));
        }
        for (n, d) in diffs.iter().enumerate() {
            if d.ncols() != spaces[n].ambient_dim || d.rows != spaces[n + 1].ambient_dim {
                return Err(Error::DimensionMismatch(format!("differential {n} has the wrong shape")));
            }
        }
        Ok(CochainComplex { field: field.clone(), spaces, diffs })
    }

    /// The zero complex on the given ambient dimensions.
    pub fn zero(field: &F, ambient: &[usize]) -> Self {
        let spaces = ambient.iter().map(|&a| Subspace::zero(a)).collect();
        let diffs = ambient.windows(2).map(|w| SparseMatrix::zero(w[1], w[0])).collect();
        CochainComplex { field: field.clone(), spaces, diffs }
    }

    pub fn max_degree(&self) -> usize {
        self.diffs.len()
    }

    pub fn ambient_dim(&self, n: usize) -> usize {
        self.spaces[n].ambient_dim
    }

    pub fn space_dims(&self) -> Vec<usize> {
        self.spaces.iter().map(|s| s.dim()).collect()
    }

    /// d^n applied to the basis of space(n).
    pub fn image_vectors(&self, n: usize) -> Vec<SparseVec<F::Elem>> {
        let f = &self.field;
        self.spaces[n].basis.par_iter().map(|b| self.diffs[n].apply(f, b)).collect()
    }

    pub fn check(&self) -> ComplexReport {
        let f = &self.field;
        let n_max = self.max_degree();
        let results: Vec<Option<ComplexFailure>> = (0..n_max)
            .into_par_iter()
            .map(|n| {
                let imgs = self.image_vectors(n);
                let next = &self.spaces[n + 1];
                if !next.is_full() {
                    let mut ech = Echelon::new(f, next.ambient_dim);
                    for b in &next.basis {
                        ech.insert(b.clone());
                    }
                    if !imgs.iter().all(|v| ech.contains(v)) {
                        return Some(ComplexFailure { degree: n, kind: "image" });
                    }
                }
                if n + 1 < n_max && !imgs.iter().all(|v| self.diffs[n + 1].apply(f, v).is_empty()) {
                    return Some(ComplexFailure { degree: n, kind: "square" });
                }
                None
            })
            .collect();
        let failure = results.into_iter().flatten().min_by_key(|fl| fl.degree);
        ComplexReport { pass: failure.is_none(), failure }
    }

    /// rank of d^n restricted to space(n), for n < N.
    pub fn restricted_rank(&self, n: usize) -> usize {
        let mut imgs = self.image_vectors(n);
        // Sparsest first keeps fill-in down.
        imgs.sort_by_key(|v| (v.nnz(), v.lead()));
        let mut ech = Echelon::new(&self.field, self.ambient_dim(n + 1));
        for v in imgs {
            ech.add(v);
        }
        ech.rank()
    }

    pub fn cohomology_dims(&self, up_to: usize) -> Result<Vec<usize>> {
        let n_max = self.max_degree();
        if up_to >= n_max {
            return Err(Error::DegreeOutOfRange { degree: up_to, max: n_max.saturating_sub(1) });
        }
        let ranks: Vec<usize> = (0..=up_to).into_par_iter().map(|n| self.restricted_rank(n)).collect();
        Ok((0..=up_to)
            .map(|n| self.spaces[n].dim() - ranks[n] - if n > 0 { ranks[n - 1] } else { 0 })
            .collect())
    }

    /// Intersects each space with the common fixed points of its operators.
    pub fn fixed_subcomplex(&self, ops: &[ActionOperator<F::Elem>]) -> Result<Self> {
        let f = &self.field;
        if ops.len() != self.spaces.len() {
            return Err(Error::DimensionMismatch("one action operator per degree is required".into()));
        }
        let spaces: Vec<Subspace<F::Elem>> = self
            .spaces
            .par_iter()
            .zip(ops.par_iter())
            .map(|(space, op)| fixed_space(f, space, op))
            .collect();
        let out = CochainComplex { field: f.clone(), spaces, diffs: self.diffs.clone() };
        for n in 0..self.max_degree() {
            let next = &ops[n + 1];
            let ok = out.image_vectors(n).par_iter().all(|v| next.generators.iter().all(|g| g.apply(f, v) == *v));
            if !ok {
                return Err(Error::ActionNotCompatible(n));
            }
        }
        Ok(out)
    }

    /// Cocycle basis of degree n (n < N) in ambient coordinates.
    pub fn cocycles(&self, n: usize) -> Vec<SparseVec<F::Elem>> {
        let f = &self.field;
        let imgs = SparseMatrix::from_columns(self.ambient_dim(n + 1), self.image_vectors(n));
        let coeffs = sparse_kernel(f, &imgs);
        let basis = SparseMatrix::from_columns(self.ambient_dim(n), self.spaces[n].basis.clone());
        coeffs.iter().map(|c| basis.apply(f, c)).collect()
    }

    pub fn coboundaries(&self, n: usize) -> Vec<SparseVec<F::Elem>> {
        if n == 0 {
            return Vec::new();
        }
        let mut ech = Echelon::new(&self.field, self.ambient_dim(n));
        self.image_vectors(n - 1).into_iter().filter(|v| ech.add(v.clone())).collect()
    }

    /// Cocycles representing a basis of H^n, in a deterministic order,
    /// together with the echelon used to reduce modulo coboundaries.
    fn cohomology_basis(&self, n: usize) -> (Vec<SparseVec<F::Elem>>, Echelon<F>, Vec<usize>) {
        let f = &self.field;
        let bounds = self.coboundaries(n);
        let mut id = bounds.len();
        let mut ech = Echelon::with_history(f, self.ambient_dim(n));
        for b in bounds {
            ech.insert(b);
        }
        let mut reps = Vec::new();
        let mut ids = Vec::new();
        for z in self.cocycles(n) {
            if let Inserted::Pivot(_) = ech.insert(z.clone()) {
                reps.push(z);
                ids.push(id);
            }
            id += 1;
        }
        (reps, ech, ids)
    }
}

fn fixed_space<F: Field>(f: &F, space: &Subspace<F::Elem>, op: &ActionOperator<F::Elem>) -> Subspace<F::Elem> {
    if op.generators.is_empty() {
        return space.clone();
    }
    let amb = space.ambient_dim;
    let k = op.generators.len();
    // Columns (σ_i − 1)b_j stacked over i.
    let cols: Vec<SparseVec<F::Elem>> = space
        .basis
        .par_iter()
        .map(|b| {
            let mut entries = Vec::new();
            for (i, g) in op.generators.iter().enumerate() {
                let diff = g.apply(f, b).sub(f, b);
                entries.extend(diff.entries.into_iter().map(|(r, v)| (i * amb + r, v)));
            }
            SparseVec { entries }
        })
        .collect();
    let m = SparseMatrix::from_columns(k * amb, cols);
    let coeffs = sparse_kernel(f, &m);
    if space.is_full() {
        return Subspace { ambient_dim: amb, basis: coeffs };
    }
    let basis = SparseMatrix::from_columns(amb, space.basis.clone());
    Subspace { ambient_dim: amb, basis: coeffs.iter().map(|c| basis.apply(f, c)).collect() }
}

/// Matrices of H^n(sub) → H^n(full) induced by the inclusion, n ≤ up_to.
pub fn induced_map_on_cohomology<F: Field>(
    sub: &CochainComplex<F>,
    full: &CochainComplex<F>,
    up_to: usize,
) -> Result<Vec<InducedMap<F::Elem>>> {
    let f = &full.field;
    let n_max = full.max_degree().min(sub.max_degree());
    if up_to >= n_max {
        return Err(Error::DegreeOutOfRange { degree: up_to, max: n_max.saturating_sub(1) });
    }
    for n in 0..=up_to + 1 {
        if sub.ambient_dim(n) != full.ambient_dim(n) || !full.spaces[n].contains_subspace(f, &sub.spaces[n]) {
            return Err(Error::NotASubcomplex(n));
        }
        if n <= up_to && sub.diffs[n] != full.diffs[n] {
            let agree = sub.spaces[n]
                .basis
                .iter()
                .all(|b| sub.diffs[n].apply(f, b) == full.diffs[n].apply(f, b));
            if !agree {
                return Err(Error::NotASubcomplex(n));
            }
        }
    }
    (0..=up_to)
        .into_par_iter()
        .map(|n| {
            let (sub_reps, _, _) = sub.cohomology_basis(n);
            let (full_reps, ech, rep_ids) = full.cohomology_basis(n);
            let mut matrix = Matrix::zero(f, full_reps.len(), sub_reps.len());
            for (c, z) in sub_reps.iter().enumerate() {
                let coords = ech
                    .coordinates(z)
                    .ok_or_else(|| Error::CheckFailed(format!("sub cocycle is not a full cocycle in degree {n}")))?;
                for (id, v) in coords.entries {
                    if let Ok(pos) = rep_ids.binary_search(&id) {
                        matrix.set(pos, c, v);
                    }
                }
            }
            let r = crate::linalg::rank(f, &matrix);
            Ok(InducedMap { degree: n, injective: r == sub_reps.len(), surjective: r == full_reps.len(), matrix })
        })
        .collect()
}
