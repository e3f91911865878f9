//! Finite-dimensional Hopf algebras given by structure constants.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{Matrix, SparseVec};
use crate::tensor::{self, Tuples};

/// Group data recovered from a Hopf algebra whose basis is a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    pub table: Vec<usize>,
    pub inverse: Vec<usize>,
    pub identity: usize,
}

impl GroupData {
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.inverse.len() + b]
    }
}

#[derive(Clone, Debug)]
pub struct HopfAlgebra<F: Field> {
    field: F,
    dim: usize,
    labels: Vec<String>,
    /// `mult[i*d + j] = b_i b_j`
    mult: Vec<SparseVec<F::Elem>>,
    unit: SparseVec<F::Elem>,
    /// `comult[i] = Δ(b_i)` in A⊗A coordinates
    comult: Vec<SparseVec<F::Elem>>,
    counit: Vec<F::Elem>,
    /// `antipode[c] = S(b_c)`
    antipode: Vec<SparseVec<F::Elem>>,
    group_like: Vec<bool>,
    group: Option<Arc<GroupData>>,
    commutative: bool,
    cocommutative: bool,
}

/// One structure constant `(i, j, k, coefficient)`.
pub type Triple<E> = (usize, usize, usize, E);

impl<F: Field> HopfAlgebra<F> {
    /// Assembles a Hopf algebra from structure constants. Only shapes are
    /// checked here; use [`HopfAlgebra::validate`] for the axioms.
    pub fn from_structure(
        field: &F,
        labels: Vec<String>,
        mult: Vec<Triple<F::Elem>>,
        unit: Vec<F::Elem>,
        comult: Vec<Triple<F::Elem>>,
        counit: Vec<F::Elem>,
        antipode: Matrix<F::Elem>,
    ) -> Result<Self> {
        let f = field;
        let d = labels.len();
        let mismatch = |what: &str| Err(Error::DimensionMismatch(what.to_string()));
        if d == 0 {
            return mismatch("algebra dimension must be positive");
        }
        if unit.len() != d {
            return mismatch("unit length differs from dim");
        }
        if counit.len() != d {
            return mismatch("counit length differs from dim");
        }
        if antipode.rows != d || antipode.cols != d {
            return mismatch("antipode must be dim x dim");
        }
        let mut mpairs: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); d * d];
        for (i, j, k, c) in mult {
            if i >= d || j >= d || k >= d {
                return mismatch("mult index out of range");
            }
            mpairs[i * d + j].push((k, c));
        }
        let mut cpairs: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); d];
        for (i, j, k, c) in comult {
            if i >= d || j >= d || k >= d {
                return mismatch("comult index out of range");
            }
            cpairs[i].push((j * d + k, c));
        }
        let mult = mpairs.into_iter().map(|p| SparseVec::from_pairs(f, p)).collect();
        let comult = cpairs.into_iter().map(|p| SparseVec::from_pairs(f, p)).collect();
        let antipode = antipode.columns_sparse(f);
        let mut h = HopfAlgebra {
            field: f.clone(),
            dim: d,
            labels,
            mult,
            unit: SparseVec::from_dense(f, &unit),
            comult,
            counit,
            antipode,
            group_like: Vec::new(),
            group: None,
            commutative: false,
            cocommutative: false,
        };
        h.refresh_derived();
        Ok(h)
    }

    fn refresh_derived(&mut self) {
        let f = &self.field;
        let d = self.dim;
        self.group_like = (0..d)
            .map(|i| {
                self.comult[i].entries == vec![(i * d + i, f.one())] && f.is_one(&self.counit[i])
            })
            .collect();
        self.commutative = (0..d).all(|i| (0..d).all(|j| self.mult[i * d + j] == self.mult[j * d + i]));
        self.cocommutative = (0..d).all(|i| self.comult[i] == self.twist(&self.comult[i]));
        self.group = self.detect_group().map(Arc::new);
    }

    fn detect_group(&self) -> Option<GroupData> {
        let f = &self.field;
        let d = self.dim;
        if !self.group_like.iter().all(|&g| g) {
            return None;
        }
        let single = |v: &SparseVec<F::Elem>| -> Option<usize> {
            match v.entries.as_slice() {
                [(k, c)] if f.is_one(c) => Some(*k),
                _ => None,
            }
        };
        let identity = single(&self.unit)?;
        let table: Option<Vec<usize>> = self.mult.iter().map(single).collect();
        let inverse: Option<Vec<usize>> = self.antipode.iter().map(single).collect();
        let (table, inverse) = (table?, inverse?);
        for a in 0..d {
            if table[a * d + inverse[a]] != identity {
                return None;
            }
        }
        Some(GroupData { table, inverse, identity })
    }

    fn twist(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let d = self.dim;
        v.reindex(&self.field, |idx| Some((idx % d) * d + idx / d))
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn group(&self) -> Option<&GroupData> {
        self.group.as_deref()
    }

    pub fn is_group_like(&self, i: usize) -> bool {
        self.group_like[i]
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }

    pub fn require_cocommutative(&self) -> Result<()> {
        if self.cocommutative {
            return Ok(());
        }
        let d = self.dim;
        let i = (0..d).find(|&i| self.comult[i] != self.twist(&self.comult[i])).unwrap();
        Err(Error::NotCocommutative(format!("tw∘Δ ≠ Δ on basis element {}", self.labels[i])))
    }

    pub fn require_commutative(&self) -> Result<()> {
        if self.commutative {
            return Ok(());
        }
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                if self.mult[i * d + j] != self.mult[j * d + i] {
                    return Err(Error::NotCommutative(format!(
                        "{}·{} ≠ {}·{}",
                        self.labels[i], self.labels[j], self.labels[j], self.labels[i]
                    )));
                }
            }
        }
        unreachable!()
    }

    pub fn unit(&self) -> &SparseVec<F::Elem> {
        &self.unit
    }

    pub fn counit(&self, i: usize) -> &F::Elem {
        &self.counit[i]
    }

    pub fn counit_vec(&self) -> &[F::Elem] {
        &self.counit
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec<F::Elem> {
        &self.mult[i * self.dim + j]
    }

    pub fn comult_basis(&self, i: usize) -> &SparseVec<F::Elem> {
        &self.comult[i]
    }

    pub fn antipode_basis(&self, i: usize) -> &SparseVec<F::Elem> {
        &self.antipode[i]
    }

    pub fn antipode_matrix(&self) -> Matrix<F::Elem> {
        Matrix::from_columns(&self.field, self.dim, &self.antipode)
    }

    pub fn mul(&self, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut pairs = Vec::new();
        for (i, a) in &x.entries {
            for (j, b) in &y.entries {
                let ab = f.mul(a, b);
                for (k, c) in &self.mult[i * self.dim + j].entries {
                    pairs.push((*k, f.mul(&ab, c)));
                }
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    pub fn counit_of(&self, x: &SparseVec<F::Elem>) -> F::Elem {
        let f = &self.field;
        let mut acc = f.zero();
        for (i, a) in &x.entries {
            f.mul_add_assign(&mut acc, a, &self.counit[i.to_owned()]);
        }
        acc
    }

    pub fn antipode_of(&self, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.linear(x, |i| self.antipode[i].clone())
    }

    pub fn comult_of(&self, x: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.linear(x, |i| self.comult[i].clone())
    }

    fn linear(&self, x: &SparseVec<F::Elem>, image: impl Fn(usize) -> SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let mut pairs = Vec::new();
        for (i, a) in &x.entries {
            for (k, c) in image(*i).entries {
                pairs.push((k, f.mul(a, &c)));
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    /// Applies a map A → A^⊗q to slot `slot` of a vector in A^⊗n.
    pub fn apply_on_slot(
        &self,
        v: &SparseVec<F::Elem>,
        n: usize,
        slot: usize,
        q: usize,
        map: impl Fn(usize) -> SparseVec<F::Elem>,
    ) -> SparseVec<F::Elem> {
        let f = &self.field;
        let d = self.dim;
        let right = tensor::pow(d, n - slot - 1);
        let rq = tensor::pow(d, q);
        let mut pairs = Vec::new();
        for (idx, a) in &v.entries {
            let hi = idx / (right * d);
            let mid = (idx / right) % d;
            let lo = idx % right;
            for (k, c) in map(mid).entries {
                pairs.push(((hi * rq + k) * right + lo, f.mul(a, &c)));
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    /// Δ^{(t)}(b_i) ∈ A^⊗(t+1), built as (Δ⊗id^{⊗t−1})∘Δ^{(t−1)}.
    pub fn iterated_comult(&self, i: usize, t: usize) -> SparseVec<F::Elem> {
        let f = &self.field;
        if self.group_like[i] {
            let tuple = vec![i; t + 1];
            return SparseVec { entries: vec![(tensor::encode(self.dim, &tuple), f.one())] };
        }
        let mut v = SparseVec::unit(f, i);
        for s in 0..t {
            v = self.apply_on_slot(&v, s + 1, 0, 2, |j| self.comult[j].clone());
        }
        v
    }

    /// Same tensor as [`iterated_comult`](Self::iterated_comult), bracketing
    /// on the last slot instead: (id^{⊗t−1}⊗Δ)∘Δ^{(t−1)}.
    pub fn iterated_comult_right(&self, i: usize, t: usize) -> SparseVec<F::Elem> {
        let mut v = SparseVec::unit(&self.field, i);
        for s in 0..t {
            v = self.apply_on_slot(&v, s + 1, s, 2, |j| self.comult[j].clone());
        }
        v
    }

    /// Sweedler terms of Δ^{(t)}(b_i) as (tuple, coefficient).
    pub fn sweedler(&self, i: usize, t: usize) -> Vec<(Vec<usize>, F::Elem)> {
        self.iterated_comult(i, t)
            .entries
            .into_iter()
            .map(|(idx, c)| (tensor::decode(self.dim, t + 1, idx), c))
            .collect()
    }

    /// Multiplication in A^⊗n, factorwise.
    pub fn tensor_mul(&self, n: usize, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        let f = &self.field;
        let d = self.dim;
        let mut pairs = Vec::new();
        for (ix, a) in &x.entries {
            let tx = tensor::decode(d, n, *ix);
            for (iy, b) in &y.entries {
                let ty = tensor::decode(d, n, *iy);
                let mut acc: Vec<(usize, F::Elem)> = vec![(0, f.mul(a, b))];
                for s in 0..n {
                    let prod = &self.mult[tx[s] * d + ty[s]];
                    let mut next = Vec::with_capacity(acc.len() * prod.nnz());
                    for (base, c) in &acc {
                        for (k, e) in &prod.entries {
                            next.push((base * d + k, f.mul(c, e)));
                        }
                    }
                    acc = next;
                }
                pairs.extend(acc);
            }
        }
        SparseVec::from_pairs(f, pairs)
    }

    pub fn validate(&self, require_cocommutative: bool) -> ValidationReport {
        validate(self, require_cocommutative)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub pass: bool,
    /// Basis labels of a failing instance.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<AxiomCheck>,
    pub commutative: bool,
    pub cocommutative: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn check(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn validate<F: Field>(h: &HopfAlgebra<F>, require_cocommutative: bool) -> ValidationReport {
    let f = &h.field;
    let d = h.dim;
    let e = |i: usize| SparseVec::unit(f, i);
    let mut checks = Vec::new();
    let mut record = |name: &str, witness: Option<Vec<usize>>| {
        checks.push(AxiomCheck {
            name: name.to_string(),
            pass: witness.is_none(),
            witness: witness.map(|w| w.iter().map(|&i| h.labels[i].clone()).collect()),
        });
    };
    let first = |mut it: Box<dyn Iterator<Item = Vec<usize>> + '_>, bad: &dyn Fn(&[usize]) -> bool| it.find(|t| bad(t));
    let all = |n: usize| -> Box<dyn Iterator<Item = Vec<usize>>> { Box::new(Tuples::new(d, n)) };

    record(
        "associativity",
        first(all(3), &|t| h.mul(&h.mul(&e(t[0]), &e(t[1])), &e(t[2])) != h.mul(&e(t[0]), &h.mul(&e(t[1]), &e(t[2])))),
    );
    record(
        "unit",
        first(all(1), &|t| h.mul(&h.unit, &e(t[0])) != e(t[0]) || h.mul(&e(t[0]), &h.unit) != e(t[0])),
    );
    record(
        "coassociativity",
        first(all(1), &|t| h.iterated_comult_right(t[0], 2) != {
            let v = SparseVec::unit(f, t[0]);
            let v = h.apply_on_slot(&v, 1, 0, 2, |j| h.comult[j].clone());
            h.apply_on_slot(&v, 2, 0, 2, |j| h.comult[j].clone())
        }),
    );
    let counit_slot = |v: &SparseVec<F::Elem>, slot: usize| {
        h.apply_on_slot(v, 2, slot, 0, |j| SparseVec::from_dense(f, &[h.counit[j].clone()]))
    };
    record(
        "counit",
        first(all(1), &|t| counit_slot(&h.comult[t[0]], 0) != e(t[0]) || counit_slot(&h.comult[t[0]], 1) != e(t[0])),
    );
    let unit2 = h.tensor_mul(2, &tensor_of(h, &h.unit, &h.unit), &tensor_of(h, &h.unit, &h.unit));
    let delta_unit_ok = h.comult_of(&h.unit) == tensor_of(h, &h.unit, &h.unit) && !unit2.is_empty();
    record(
        "comultiplication_is_algebra_map",
        if !delta_unit_ok {
            Some(vec![])
        } else {
            first(all(2), &|t| {
                h.comult_of(&h.mul(&e(t[0]), &e(t[1]))) != h.tensor_mul(2, &h.comult[t[0]], &h.comult[t[1]])
            })
        },
    );
    record(
        "counit_is_algebra_map",
        if !f.is_one(&h.counit_of(&h.unit)) {
            Some(vec![])
        } else {
            first(all(2), &|t| h.counit_of(&h.mul(&e(t[0]), &e(t[1]))) != f.mul(&h.counit[t[0]], &h.counit[t[1]]))
        },
    );
    let convolve = |i: usize, left: bool| -> SparseVec<F::Elem> {
        let mut pairs = Vec::new();
        for (idx, c) in &h.comult[i].entries {
            let (a, b) = (idx / d, idx % d);
            let prod = if left {
                h.mul(&h.antipode[a], &e(b))
            } else {
                h.mul(&e(a), &h.antipode[b])
            };
            pairs.extend(prod.scale(f, c).entries);
        }
        SparseVec::from_pairs(f, pairs)
    };
    record(
        "antipode",
        first(all(1), &|t| {
            let target = h.unit.scale(f, &h.counit[t[0]]);
            convolve(t[0], true) != target || convolve(t[0], false) != target
        }),
    );
    record(
        "antipode_antimultiplicative",
        first(all(2), &|t| {
            h.antipode_of(&h.mul(&e(t[0]), &e(t[1]))) != h.mul(&h.antipode[t[1]], &h.antipode[t[0]])
        }),
    );
    record("antipode_unital", (h.antipode_of(&h.unit) != h.unit).then(Vec::new));
    record(
        "counit_antipode",
        first(all(1), &|t| h.counit_of(&h.antipode[t[0]]) != h.counit[t[0]]),
    );
    record(
        "antipode_anticomultiplicative",
        first(all(1), &|t| {
            let lhs = h.twist(&h.comult[t[0]]);
            let lhs = h.apply_on_slot(&lhs, 2, 0, 1, |j| h.antipode[j].clone());
            let lhs = h.apply_on_slot(&lhs, 2, 1, 1, |j| h.antipode[j].clone());
            lhs != h.comult_of(&h.antipode[t[0]])
        }),
    );
    if h.commutative || h.cocommutative {
        record(
            "antipode_involutive",
            first(all(1), &|t| h.antipode_of(&h.antipode[t[0]]) != e(t[0])),
        );
    }
    if require_cocommutative {
        record("cocommutative", first(all(1), &|t| h.twist(&h.comult[t[0]]) != h.comult[t[0]]));
    }
    ValidationReport { checks, commutative: h.commutative, cocommutative: h.cocommutative }
}

fn tensor_of<F: Field>(h: &HopfAlgebra<F>, x: &SparseVec<F::Elem>, y: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
    let f = &h.field;
    let mut pairs = Vec::new();
    for (i, a) in &x.entries {
        for (j, b) in &y.entries {
            pairs.push((i * h.dim + j, f.mul(a, b)));
        }
    }
    SparseVec::from_pairs(f, pairs)
}

/// Group algebra kG of a group given by its Cayley table (identity at 0).
pub fn group_algebra<F: Field>(field: &F, table: &[Vec<usize>], labels: Option<Vec<String>>) -> Result<HopfAlgebra<F>> {
    let n = table.len();
    let inverse = crate::groups::check_group(table)?;
    let f = field;
    let labels = labels.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
    if labels.len() != n {
        return Err(Error::DimensionMismatch("label count differs from group order".into()));
    }
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mult.push((i, j, table[i][j], f.one()));
        }
    }
    let comult = (0..n).map(|i| (i, i, i, f.one())).collect();
    let mut unit = vec![f.zero(); n];
    unit[0] = f.one();
    let mut antipode = Matrix::zero(f, n, n);
    for (c, &inv) in inverse.iter().enumerate() {
        antipode.set(inv, c, f.one());
    }
    HopfAlgebra::from_structure(f, labels, mult, unit, comult, vec![f.one(); n], antipode)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, RationalField};
    use crate::groups;

    fn gf(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn cyclic_group_algebra_is_valid() {
        let h = group_algebra(&gf(3), &groups::cyclic(3), None).unwrap();
        let r = h.validate(true);
        assert!(r.passed(), "{:?}", r);
        assert!(r.cocommutative && r.commutative);
        assert_eq!(h.antipode_basis(1).entries, vec![(2, 1)]);
        assert!(h.group().is_some());
    }

    #[test]
    fn identity_antipode_fails_with_witness() {
        let f = gf(3);
        let h = group_algebra(&f, &groups::cyclic(3), None).unwrap();
        let broken = HopfAlgebra::from_structure(
            &f,
            h.labels().to_vec(),
            groups::cyclic(3)
                .iter()
                .enumerate()
                .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &k)| (i, j, k, 1)))
                .collect(),
            vec![1, 0, 0],
            (0..3).map(|i| (i, i, i, 1)).collect(),
            vec![1, 1, 1],
            Matrix::identity(&f, 3),
        )
        .unwrap();
        let r = broken.validate(true);
        let c = r.check("antipode").unwrap();
        assert!(!c.pass);
        assert_eq!(c.witness.as_deref(), Some(&["g1".to_string()][..]));
    }

    #[test]
    fn trivial_group_is_the_base_field() {
        let h = group_algebra(&RationalField, &groups::cyclic(1), None).unwrap();
        assert_eq!(h.dim(), 1);
        assert!(h.validate(true).passed());
    }

    #[test]
    fn s3_is_cocommutative_not_commutative() {
        let h = group_algebra(&gf(5), &groups::symmetric(3), None).unwrap();
        assert_eq!(h.dim(), 6);
        let r = h.validate(true);
        assert!(r.passed());
        assert!(!r.commutative);
        assert!(matches!(h.require_commutative(), Err(Error::NotCommutative(_))));
    }

    #[test]
    fn iterated_comult_group_like_and_bracketing() {
        let h = group_algebra(&gf(5), &groups::symmetric(3), None).unwrap();
        for i in 0..6 {
            assert_eq!(h.iterated_comult(i, 0), SparseVec::unit(h.field(), i));
            assert_eq!(h.sweedler(i, 2), vec![(vec![i, i, i], 1)]);
            for t in 0..=3 {
                assert_eq!(h.iterated_comult(i, t), h.iterated_comult_right(i, t));
            }
        }
    }
}
