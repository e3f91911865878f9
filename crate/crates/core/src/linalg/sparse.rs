use crate::field::Field;

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseVec<E> {
    pub entries: Vec<(usize, E)>,
}

impl<E> Default for SparseVec<E> {
    fn default() -> Self {
        SparseVec { entries: Vec::new() }
    }
}

impl<E: Clone> SparseVec<E> {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    pub fn unit<F: Field<Elem = E>>(f: &F, i: usize) -> Self {
        SparseVec { entries: vec![(i, f.one())] }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn lead(&self) -> Option<usize> {
        self.entries.first().map(|e| e.0)
    }

    pub fn get(&self, i: usize) -> Option<&E> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// Builds from unsorted (index, value) pairs, summing duplicates.
    pub fn from_pairs<F: Field<Elem = E>>(f: &F, mut pairs: Vec<(usize, E)>) -> Self {
        pairs.sort_unstable_by_key(|e| e.0);
        let mut out: Vec<(usize, E)> = Vec::with_capacity(pairs.len());
        for (i, v) in pairs {
            match out.last_mut() {
                Some(last) if last.0 == i => last.1 = f.add(&last.1, &v),
                _ => out.push((i, v)),
            }
        }
        out.retain(|e| !f.is_zero(&e.1));
        SparseVec { entries: out }
    }

    pub fn from_dense<F: Field<Elem = E>>(f: &F, v: &[E]) -> Self {
        SparseVec {
            entries: v
                .iter()
                .enumerate()
                .filter(|(_, x)| !f.is_zero(x))
                .map(|(i, x)| (i, x.clone()))
                .collect(),
        }
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, f: &F, dim: usize) -> Vec<E> {
        let mut out = vec![f.zero(); dim];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        if f.is_zero(c) {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, f.mul(c, v))).collect(),
        }
    }

    pub fn neg<F: Field<Elem = E>>(&self, f: &F) -> Self {
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, f.neg(v))).collect(),
        }
    }

    /// `self + c * other`
    pub fn axpy<F: Field<Elem = E>>(&self, f: &F, c: &E, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, f.mul(c, &b[j].1)));
                j += 1;
            } else {
                let mut s = a[i].1.clone();
                f.mul_add_assign(&mut s, c, &b[j].1);
                if !f.is_zero(&s) {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        SparseVec { entries: out }
    }

    pub fn add<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.axpy(f, &f.one(), other)
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        self.axpy(f, &f.neg(&f.one()), other)
    }

    pub fn dot<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> E {
        let mut acc = f.zero();
        let (a, b) = (&self.entries, &other.entries);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    f.mul_add_assign(&mut acc, &a[i].1, &b[j].1);
                    i += 1;
                    j += 1;
                }
            }
        }
        acc
    }

    /// Relabels indices through `map`; entries mapped to `None` are dropped.
    pub fn reindex<F: Field<Elem = E>>(&self, f: &F, map: impl Fn(usize) -> Option<usize>) -> Self {
        let pairs = self
            .entries
            .iter()
            .filter_map(|(i, v)| map(*i).map(|j| (j, v.clone())))
            .collect();
        SparseVec::from_pairs(f, pairs)
    }
}

/// Column-compressed sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<E> {
    pub rows: usize,
    pub cols: Vec<SparseVec<E>>,
}

impl<E: Clone> SparseMatrix<E> {
    pub fn zero(rows: usize, ncols: usize) -> Self {
        SparseMatrix { rows, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn from_columns(rows: usize, cols: Vec<SparseVec<E>>) -> Self {
        debug_assert!(cols.iter().all(|c| c.entries.last().map_or(true, |e| e.0 < rows)));
        SparseMatrix { rows, cols }
    }

    pub fn identity<F: Field<Elem = E>>(f: &F, n: usize) -> Self {
        SparseMatrix { rows: n, cols: (0..n).map(|i| SparseVec::unit(f, i)).collect() }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(|c| c.nnz()).sum()
    }

    pub fn get<F: Field<Elem = E>>(&self, f: &F, r: usize, c: usize) -> E {
        self.cols[c].get(r).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn apply<F: Field<Elem = E>>(&self, f: &F, v: &SparseVec<E>) -> SparseVec<E> {
        match v.entries.len() {
            0 => SparseVec::new(),
            1 => {
                let (j, c) = &v.entries[0];
                self.cols[*j].scale(f, c)
            }
            _ => {
                let mut pairs = Vec::new();
                for (j, c) in &v.entries {
                    for (i, x) in &self.cols[*j].entries {
                        pairs.push((*i, f.mul(c, x)));
                    }
                }
                SparseVec::from_pairs(f, pairs)
            }
        }
    }

    /// `self ∘ other`
    pub fn compose<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!(self.ncols(), other.rows, "compose: inner dimension mismatch");
        SparseMatrix {
            rows: self.rows,
            cols: other.cols.iter().map(|c| self.apply(f, c)).collect(),
        }
    }

    pub fn sub<F: Field<Elem = E>>(&self, f: &F, other: &Self) -> Self {
        assert_eq!((self.rows, self.ncols()), (other.rows, other.ncols()));
        SparseMatrix {
            rows: self.rows,
            cols: self.cols.iter().zip(&other.cols).map(|(a, b)| a.sub(f, b)).collect(),
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, f: &F, c: &E) -> Self {
        SparseMatrix { rows: self.rows, cols: self.cols.iter().map(|v| v.scale(f, c)).collect() }
    }

    pub fn transpose(&self) -> Self {
        let mut out: Vec<Vec<(usize, E)>> = vec![Vec::new(); self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for (i, v) in &col.entries {
                out[*i].push((j, v.clone()));
            }
        }
        SparseMatrix {
            rows: self.ncols(),
            cols: out.into_iter().map(|entries| SparseVec { entries }).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    pub fn from_dense<F: Field<Elem = E>>(f: &F, m: &super::Matrix<E>) -> Self {
        let cols = (0..m.cols)
            .map(|c| {
                let pairs = (0..m.rows)
                    .filter(|&r| !f.is_zero(m.get(r, c)))
                    .map(|r| (r, m.get(r, c).clone()))
                    .collect();
                SparseVec { entries: pairs }
            })
            .collect();
        SparseMatrix { rows: m.rows, cols }
    }

    pub fn to_dense<F: Field<Elem = E>>(&self, f: &F) -> super::Matrix<E> {
        let mut m = super::Matrix::zero(f, self.rows, self.ncols());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in &col.entries {
                m.set(*r, c, v.clone());
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn axpy_cancels() {
        let f = PrimeField::new(5).unwrap();
        let a = SparseVec::from_dense(&f, &[1, 2, 0, 3]);
        let b = SparseVec::from_dense(&f, &[4, 0, 1, 2]);
        let s = a.axpy(&f, &1, &b);
        assert_eq!(s.entries, vec![(1, 2), (2, 1)]);
    }

    #[test]
    fn transpose_twice_is_identity() {
        let f = PrimeField::new(7).unwrap();
        let m = SparseMatrix::from_columns(
            3,
            vec![SparseVec::from_dense(&f, &[1, 0, 2]), SparseVec::from_dense(&f, &[0, 5, 0])],
        );
        assert_eq!(m.transpose().transpose(), m);
        assert_eq!(m.transpose().rows, 2);
    }
}
