use crate::field::Field;

use super::sparse::SparseVec;

const NONE: u32 = u32::MAX;

/// Incremental row-echelon basis of a growing set of vectors.
///
/// Each stored row has its leading entry normalized to one and a distinct
/// leading index. With history enabled every row also records its expression
/// in terms of the inserted vectors (numbered by insertion order).
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    field: F,
    dim: usize,
    rows: Vec<SparseVec<F::Elem>>,
    lead: Vec<u32>,
    history: Option<Vec<SparseVec<F::Elem>>>,
    inserted: usize,
}

pub enum Inserted<E> {
    Pivot(usize),
    /// Dependent vector; with history, the relation Σ c_k v_k = 0 it produced.
    Dependent(Option<SparseVec<E>>),
}

impl<F: Field> Echelon<F> {
    pub fn new(field: &F, dim: usize) -> Self {
        Echelon {
            field: field.clone(),
            dim,
            rows: Vec::new(),
            lead: vec![NONE; dim],
            history: None,
            inserted: 0,
        }
    }

    pub fn with_history(field: &F, dim: usize) -> Self {
        let mut e = Self::new(field, dim);
        e.history = Some(Vec::new());
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec<F::Elem>] {
        &self.rows
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.lead[i] != NONE
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.lead().unwrap()).collect()
    }

    fn pivot_row(&self, i: usize) -> Option<usize> {
        let r = self.lead[i];
        (r != NONE).then_some(r as usize)
    }

    pub fn insert(&mut self, v: SparseVec<F::Elem>) -> Inserted<F::Elem> {
        let f = self.field.clone();
        let id = self.inserted;
        self.inserted += 1;
        let mut hist = self.history.as_ref().map(|_| SparseVec::unit(&f, id));
        let mut v = v;
        while let Some(l) = v.lead() {
            let Some(r) = self.pivot_row(l) else { break };
            let c = f.neg(&v.entries[0].1);
            v = v.axpy(&f, &c, &self.rows[r]);
            if let (Some(h), Some(hs)) = (hist.as_mut(), self.history.as_ref()) {
                *h = h.axpy(&f, &c, &hs[r]);
            }
        }
        match v.lead() {
            None => Inserted::Dependent(hist),
            Some(l) => {
                let inv = f.inv(&v.entries[0].1).expect("nonzero lead");
                let v = v.scale(&f, &inv);
                let r = self.rows.len();
                self.lead[l] = r as u32;
                self.rows.push(v);
                if let (Some(h), Some(hs)) = (hist, self.history.as_mut()) {
                    hs.push(h.scale(&f, &inv));
                }
                Inserted::Pivot(r)
            }
        }
    }

    /// Inserts and reports whether the rank grew.
    pub fn add(&mut self, v: SparseVec<F::Elem>) -> bool {
        matches!(self.insert(v), Inserted::Pivot(_))
    }

    /// Eliminates every entry sitting in a pivot column. The result is zero
    /// iff `v` lies in the span.
    pub fn reduce(&self, v: &SparseVec<F::Elem>) -> SparseVec<F::Elem> {
        self.reduce_tracking(v, false).0
    }

    fn reduce_tracking(
        &self,
        v: &SparseVec<F::Elem>,
        track: bool,
    ) -> (SparseVec<F::Elem>, Option<SparseVec<F::Elem>>) {
        let f = &self.field;
        let mut v = v.clone();
        let mut coords = track.then(SparseVec::new);
        let mut k = 0;
        while k < v.entries.len() {
            let (c, val) = &v.entries[k];
            match self.pivot_row(*c) {
                Some(r) => {
                    let neg = f.neg(val);
                    if let (Some(co), Some(hs)) = (coords.as_mut(), self.history.as_ref()) {
                        *co = co.axpy(f, val, &hs[r]);
                    }
                    v = v.axpy(f, &neg, &self.rows[r]);
                }
                None => k += 1,
            }
        }
        (v, coords)
    }

    pub fn contains(&self, v: &SparseVec<F::Elem>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates of `v` with respect to the inserted vectors, if `v` is in
    /// their span. Requires history.
    pub fn coordinates(&self, v: &SparseVec<F::Elem>) -> Option<SparseVec<F::Elem>> {
        assert!(self.history.is_some(), "coordinates need an echelon with history");
        let (res, coords) = self.reduce_tracking(v, true);
        res.is_empty().then(|| coords.unwrap())
    }

    /// Back-substitutes so that every pivot column is zero outside its own row.
    pub fn make_reduced(&mut self) {
        let f = self.field.clone();
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&r| std::cmp::Reverse(self.rows[r].lead().unwrap()));
        for r in order {
            let mut v = std::mem::take(&mut self.rows[r]);
            let mut h = self.history.as_mut().map(|hs| std::mem::take(&mut hs[r]));
            let mut k = 1;
            while k < v.entries.len() {
                let (c, val) = &v.entries[k];
                match self.pivot_row(*c) {
                    Some(q) => {
                        let neg = f.neg(val);
                        if let (Some(h), Some(hs)) = (h.as_mut(), self.history.as_ref()) {
                            *h = h.axpy(&f, &neg, &hs[q]);
                        }
                        v = v.axpy(&f, &neg, &self.rows[q]);
                    }
                    None => k += 1,
                }
            }
            self.rows[r] = v;
            if let (Some(h), Some(hs)) = (h, self.history.as_mut()) {
                hs[r] = h;
            }
        }
    }

    /// Kernel basis of the matrix whose rows were inserted: one vector per
    /// non-pivot column j, equal to e_j minus the RREF column j placed on the
    /// pivot coordinates.
    pub fn null_space(mut self) -> Vec<SparseVec<F::Elem>> {
        self.make_reduced();
        let f = &self.field;
        let mut by_col: Vec<Vec<(usize, F::Elem)>> = vec![Vec::new(); self.dim];
        for row in &self.rows {
            let l = row.lead().unwrap();
            for (c, val) in &row.entries[1..] {
                by_col[*c].push((l, f.neg(val)));
            }
        }
        (0..self.dim)
            .filter(|&j| !self.is_pivot(j))
            .map(|j| {
                let mut pairs = std::mem::take(&mut by_col[j]);
                pairs.push((j, f.one()));
                pairs.sort_unstable_by_key(|e| e.0);
                SparseVec { entries: pairs }
            })
            .collect()
    }
}
