//! JSON input formats for algebras, groups and modules.
//!
//! Coefficients are decimal strings (`"2/3"` is allowed over the rationals);
//! plain JSON integers are accepted too.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldSpec};
use crate::hopf::{group_algebra, HopfAlgebra};
use crate::linalg::{Matrix, SparseMatrix};
use crate::modules::{Bimodule, LeftModule};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coef {
    Int(i64),
    Text(String),
}

impl Coef {
    pub fn parse<F: Field>(&self, f: &F) -> Result<F::Elem> {
        match self {
            Coef::Int(n) => Ok(f.from_i64(*n)),
            Coef::Text(s) => f.parse(s),
        }
    }
}

/// `mult` entry `[i, j, k, c]`: b_i·b_j has coefficient c on b_k.
/// `comult` entry `[i, j, k, c]`: Δ(b_i) has coefficient c on b_j ⊗ b_k.
/// `antipode[r][c]` is the coefficient of b_r in S(b_c).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub mult: Vec<(usize, usize, usize, Coef)>,
    pub unit: Vec<Coef>,
    pub comult: Vec<(usize, usize, usize, Coef)>,
    pub counit: Vec<Coef>,
    pub antipode: Vec<Vec<Coef>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldSpec>,
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// Either document shape, told apart by the `table` key.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Group(GroupJson),
    Structure(AlgebraJson),
}

impl AlgebraSource {
    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if value.get("table").is_some() {
            serde_json::from_value(value).map(AlgebraSource::Group)
        } else {
            serde_json::from_value(value).map(AlgebraSource::Structure)
        }
        .map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn field(&self) -> Option<FieldSpec> {
        match self {
            AlgebraSource::Group(g) => g.field,
            AlgebraSource::Structure(a) => a.field,
        }
    }

    pub fn build<F: Field>(&self, f: &F) -> Result<HopfAlgebra<F>> {
        match self {
            AlgebraSource::Group(g) => {
                if g.table.len() != g.order {
                    return Err(Error::Schema(format!("table has {} rows, order is {}", g.table.len(), g.order)));
                }
                group_algebra(f, &g.table, g.labels.clone())
            }
            AlgebraSource::Structure(a) => a.build(f),
        }
    }
}

fn coef_vec<F: Field>(f: &F, v: &[Coef]) -> Result<Vec<F::Elem>> {
    v.iter().map(|c| c.parse(f)).collect()
}

fn coef_matrix<F: Field>(f: &F, rows: &[Vec<Coef>]) -> Result<Matrix<F::Elem>> {
    Matrix::from_rows(rows.iter().map(|r| coef_vec(f, r)).collect::<Result<Vec<_>>>()?)
}

fn triples<F: Field>(f: &F, d: usize, t: &[(usize, usize, usize, Coef)], what: &str) -> Result<Vec<(usize, usize, usize, F::Elem)>> {
    t.iter()
        .map(|(i, j, k, c)| {
            if *i >= d || *j >= d || *k >= d {
                return Err(Error::Schema(format!("{what} index out of range in [{i}, {j}, {k}]")));
            }
            Ok((*i, *j, *k, c.parse(f)?))
        })
        .collect()
}

impl AlgebraJson {
    pub fn build<F: Field>(&self, f: &F) -> Result<HopfAlgebra<F>> {
        let d = self.dim;
        let labels = self.labels.clone().unwrap_or_else(|| (0..d).map(|i| format!("b{i}")).collect());
        if labels.len() != d {
            return Err(Error::Schema("label count differs from dim".into()));
        }
        let antipode = coef_matrix(f, &self.antipode)?;
        if antipode.rows != d || antipode.cols != d {
            return Err(Error::Schema("antipode must be dim × dim".into()));
        }
        HopfAlgebra::from_structure(
            f,
            labels,
            triples(f, d, &self.mult, "mult")?,
            coef_vec(f, &self.unit)?,
            triples(f, d, &self.comult, "comult")?,
            coef_vec(f, &self.counit)?,
            antipode,
        )
    }

    /// The structure constants of `h` in this format.
    pub fn from_algebra<F: Field>(h: &HopfAlgebra<F>) -> Self {
        let f = h.field();
        let d = h.dim();
        let text = |e: &F::Elem| Coef::Text(f.format(e));
        let mut mult = Vec::new();
        let mut comult = Vec::new();
        for i in 0..d {
            for j in 0..d {
                for (k, c) in &h.mul_basis(i, j).entries {
                    mult.push((i, j, *k, text(c)));
                }
            }
            for (idx, c) in &h.comult_basis(i).entries {
                comult.push((i, idx / d, idx % d, text(c)));
            }
        }
        let unit_dense = h.unit().to_dense(f, d);
        let s = h.antipode_matrix();
        AlgebraJson {
            field: Some(f.spec()),
            dim: d,
            labels: Some(h.labels().to_vec()),
            mult,
            unit: unit_dense.iter().map(text).collect(),
            comult,
            counit: h.counit_vec().iter().map(text).collect(),
            antipode: (0..d).map(|r| (0..d).map(|c| text(s.get(r, c))).collect()).collect(),
        }
    }
}

/// `left_action[i]` (and `right_action[i]`) is the matrix of b_i, acting on
/// column vectors.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub dim: usize,
    pub left_action: Vec<Vec<Vec<Coef>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Vec<Vec<Coef>>>>,
}

impl ModuleJson {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    fn matrices<F: Field>(&self, f: &F, mats: &[Vec<Vec<Coef>>]) -> Result<Vec<SparseMatrix<F::Elem>>> {
        mats.iter()
            .map(|m| {
                let m = coef_matrix(f, m)?;
                if m.rows != self.dim || m.cols != self.dim {
                    return Err(Error::Schema(format!("action matrices must be {0} × {0}", self.dim)));
                }
                Ok(SparseMatrix::from_dense(f, &m))
            })
            .collect()
    }

    pub fn left_module<F: Field>(&self, h: &HopfAlgebra<F>) -> Result<LeftModule<F::Elem>> {
        let m = LeftModule::new(h, self.dim, self.matrices(h.field(), &self.left_action)?)?;
        m.validate(h)?;
        Ok(m)
    }

    pub fn bimodule<F: Field>(&self, h: &HopfAlgebra<F>) -> Result<Bimodule<F::Elem>> {
        let right = self
            .right_action
            .as_ref()
            .ok_or_else(|| Error::Schema("a bimodule needs right_action".into()))?;
        let f = h.field();
        let b = Bimodule::new(h, self.dim, self.matrices(f, &self.left_action)?, self.matrices(f, right)?)?;
        b.validate(h)?;
        Ok(b)
    }
}
