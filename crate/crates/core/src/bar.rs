//! Bar complexes C•(A,M) (reduced, non-homogeneous) and K•(A,M)
//! (homogeneous), the signed symmetric-group actions on both, and the
//! comparison maps between them.
//!
//! A cochain on A^⊗n is stored at `flat(tuple)·m + r`.

use rayon::prelude::*;
use serde::Serialize;

use crate::cochain::{ActionOperator, CochainComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{Echelon, SparseMatrix, SparseVec, Subspace};
use crate::modules::LeftModule;
use crate::ops::{self, push_expanded, Coefficients, SweedlerTable, Term};
use crate::tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Nonhomogeneous,
    Homogeneous,
    Resolution,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Route::Nonhomogeneous => "nonhomogeneous",
            Route::Homogeneous => "homogeneous",
            Route::Resolution => "resolution",
        })
    }
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonhomogeneous" | "non-homogeneous" => Ok(Route::Nonhomogeneous),
            "homogeneous" => Ok(Route::Homogeneous),
            "resolution" => Ok(Route::Resolution),
            _ => Err(Error::Schema(format!("unknown route '{s}'"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyReport {
    pub route: Route,
    pub dims: Vec<usize>,
    /// Dimensions of the cochain spaces actually used, degree by degree.
    pub cochain_dims: Vec<usize>,
}

/// Precomputed data shared by the operator builders.
pub(crate) struct Ctx<'a, F: Field> {
    pub h: &'a HopfAlgebra<F>,
    pub units: Vec<SparseVec<F::Elem>>,
    pub sw: SweedlerTable<F::Elem>,
}

impl<'a, F: Field> Ctx<'a, F> {
    pub fn new(h: &'a HopfAlgebra<F>, max_t: usize) -> Self {
        let f = h.field();
        Ctx { h, units: (0..h.dim()).map(|i| SparseVec::unit(f, i)).collect(), sw: SweedlerTable::new(h, max_t) }
    }

    pub fn f(&self) -> &F {
        self.h.field()
    }

    pub fn d(&self) -> usize {
        self.h.dim()
    }

    /// Slot vectors for the basis tuple `u`.
    pub fn unit_slots(&self, u: &[usize]) -> Vec<&SparseVec<F::Elem>> {
        u.iter().map(|&a| &self.units[a]).collect()
    }

    /// Pullback of the bar coboundary on reduced cochains, target tuple
    /// `u = (a_1, …, a_{n+1})`. With `bimodule`, the last face uses the
    /// right action instead of ε.
    pub fn reduced_coboundary_terms(&self, u: &[usize], bimodule: bool, out: &mut Vec<Term<F::Elem>>) {
        let f = self.f();
        let d = self.d();
        let n = u.len() - 1;
        let one = f.one();
        out.push(Term { coef: one.clone(), src: tensor::encode(d, &u[1..]), left: Some(u[0]), right: None });
        for i in 1..=n {
            let sign = if i % 2 == 0 { one.clone() } else { f.neg(&one) };
            let prod = self.h.mul_basis(u[i - 1], u[i]);
            let mut slots = self.unit_slots(&u[..i - 1]);
            slots.push(prod);
            slots.extend(self.unit_slots(&u[i + 1..]));
            push_expanded(f, d, &slots, &sign, None, None, out);
        }
        let sign = if (n + 1) % 2 == 0 { one } else { f.neg(&one) };
        let src = tensor::encode(d, &u[..n]);
        if bimodule {
            out.push(Term { coef: sign, src, left: None, right: Some(u[n]) });
        } else {
            let c = f.mul(&sign, self.h.counit(u[n]));
            if !f.is_zero(&c) {
                out.push(Term { coef: c, src, left: None, right: None });
            }
        }
    }

    /// Pullback of precomposition with the homogeneous boundary, deleting
    /// slots `0..deletable` of the target tuple with ε and alternating sign.
    pub fn face_terms(&self, u: &[usize], deletable: usize, out: &mut Vec<Term<F::Elem>>) {
        let f = self.f();
        let d = self.d();
        let mut rest = Vec::with_capacity(u.len() - 1);
        for i in 0..deletable {
            let e = self.h.counit(u[i]);
            if f.is_zero(e) {
                continue;
            }
            let c = if i % 2 == 0 { e.clone() } else { f.neg(e) };
            rest.clear();
            rest.extend_from_slice(&u[..i]);
            rest.extend_from_slice(&u[i + 1..]);
            out.push(Term { coef: c, src: tensor::encode(d, &rest), left: None, right: None });
        }
    }

    /// Pullback of the (sa1)/(sa3) generator acting at position `pos` of a
    /// cochain tuple. A missing left neighbour turns a^{(1)} into a left
    /// action; a missing right neighbour either drops the third leg or, with
    /// `right_action`, turns it into a right action.
    pub fn sigma_terms(&self, u: &[usize], pos: usize, right_action: bool, out: &mut Vec<Term<F::Elem>>) {
        let f = self.f();
        let d = self.d();
        let h = self.h;
        let has_left = pos > 0;
        let has_right = pos + 1 < u.len();
        let three = has_right || right_action;
        let legs = self.sw.get(u[pos], if three { 2 } else { 1 });
        for (leg, c) in legs {
            let coef = f.neg(c);
            let mut slots: Vec<&SparseVec<F::Elem>> = Vec::with_capacity(u.len());
            let mut left = None;
            let mut right = None;
            if has_left {
                slots.extend(self.unit_slots(&u[..pos - 1]));
                slots.push(h.mul_basis(u[pos - 1], leg[0]));
            } else {
                left = Some(leg[0]);
            }
            slots.push(h.antipode_basis(leg[1]));
            if has_right {
                slots.push(h.mul_basis(leg[2], u[pos + 1]));
                slots.extend(self.unit_slots(&u[pos + 2..]));
            } else if right_action {
                right = Some(leg[2]);
            }
            push_expanded(f, d, &slots, &coef, left, right, out);
        }
    }

    /// Pullback of the signed swap of slots `pos − 1` and `pos`.
    pub fn swap_terms(&self, u: &[usize], pos: usize, out: &mut Vec<Term<F::Elem>>) {
        let mut t = u.to_vec();
        t.swap(pos - 1, pos);
        out.push(Term { coef: self.f().neg(&self.f().one()), src: tensor::encode(self.d(), &t), left: None, right: None });
    }

    /// Slots of Φ(1 ⊗ a_1 ⊗ … ⊗ a_n) after the leading unit: slot j is
    /// a_1^{(j)} a_2^{(j−1)} ⋯ a_j^{(1)}; with `extra`, one more slot
    /// collects the remaining legs. Returns (coefficient, slot vectors).
    pub fn phi_slots(&self, u: &[usize], extra: usize) -> Vec<(F::Elem, Vec<SparseVec<F::Elem>>)> {
        let f = self.f();
        let h = self.h;
        let n = u.len();
        let nslots = n + extra;
        let mut acc: Vec<(F::Elem, Vec<SparseVec<F::Elem>>)> = vec![(f.one(), vec![h.unit().clone(); nslots])];
        for (k, &a) in u.iter().enumerate() {
            // a_{k+1} contributes legs to slots k..nslots
            let t = nslots - k - 1;
            let mut next = Vec::new();
            for (coef, slots) in &acc {
                for (leg, c) in self.sw.get(a, t) {
                    let mut s = slots.clone();
                    for (l, &b) in leg.iter().enumerate() {
                        s[k + l] = h.mul(&s[k + l], &self.units[b]);
                    }
                    next.push((f.mul(coef, c), s));
                }
            }
            acc = next;
        }
        acc
    }
}

fn coeffs_of<E: Clone>(m: &LeftModule<E>) -> Coefficients<E> {
    Coefficients::from_left(m)
}

/// Sweedler arity needed for degree n builders.
fn max_arity(n: usize) -> usize {
    n.max(2) + 1
}

pub fn nonhomogeneous_differential<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let ctx = Ctx::new(h, 2);
    ops::pullback_operator(h.field(), &coeffs_of(m), h.dim(), n, n + 1, |u, out| {
        ctx.reduced_coboundary_terms(u, false, out)
    })
}

/// C•(A,M) on Hom_k(A^⊗n, M), degrees 0..=n_max.
pub fn nonhomogeneous_complex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n_max: usize,
) -> Result<CochainComplex<F>> {
    m.validate(h)?;
    let f = h.field();
    let d = h.dim();
    let spaces = (0..=n_max).map(|n| Subspace::full(f, m.dim * tensor::pow(d, n))).collect();
    let diffs = (0..n_max).into_par_iter().map(|n| nonhomogeneous_differential(h, m, n)).collect();
    CochainComplex::new(f, spaces, diffs)
}

/// Normalized cochains: the subcomplex of C• vanishing whenever some
/// argument is the unit. Needs the unit to be a basis vector.
pub fn normalized_complex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n_max: usize,
) -> Result<CochainComplex<F>> {
    let f = h.field();
    let d = h.dim();
    let unit = match h.unit().entries.as_slice() {
        [(i, c)] if f.is_one(c) => *i,
        _ => return Err(Error::Schema("the unit is not a basis vector".into())),
    };
    let c = nonhomogeneous_complex(h, m, n_max)?;
    let spaces = (0..=n_max)
        .map(|n| {
            let basis = (0..tensor::pow(d, n))
                .filter(|&i| !tensor::decode(d, n, i).contains(&unit))
                .flat_map(|i| (0..m.dim).map(move |r| i * m.dim + r))
                .map(|j| SparseVec::unit(f, j))
                .collect();
            Subspace { ambient_dim: m.dim * tensor::pow(d, n), basis }
        })
        .collect();
    CochainComplex::new(f, spaces, c.diffs)
}

/// H^n for 0 ≤ n < n_max from normalized cochains.
pub fn normalized_cohomology<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n_max: usize) -> Result<CohomologyReport> {
    let c = normalized_complex(h, m, n_max)?;
    let dims = c.cohomology_dims(n_max - 1)?;
    Ok(CohomologyReport { route: Route::Nonhomogeneous, dims, cochain_dims: c.space_dims()[..n_max].to_vec() })
}

/// K^n: maps A^⊗(n+1) → M equivariant for the diagonal action.
pub fn homogeneous_space<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n: usize) -> Subspace<F::Elem> {
    let ctx = Ctx::new(h, n);
    let len = n + 1;
    let basis = ops::equivariance_kernel(
        h,
        &coeffs_of(m),
        len,
        |g, x| ops::diagonal_left_action(h, &ctx.sw, len, len, g, x),
        None,
    );
    Subspace { ambient_dim: m.dim * tensor::pow(h.dim(), len), basis }
}

pub fn homogeneous_differential<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let ctx = Ctx::new(h, 0);
    ops::pullback_operator(h.field(), &coeffs_of(m), h.dim(), n + 1, n + 2, |u, out| ctx.face_terms(u, n + 2, out))
}

/// K•(A,M) inside Hom_k(A^⊗(n+1), M), degrees 0..=n_max.
pub fn homogeneous_complex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n_max: usize,
) -> Result<CochainComplex<F>> {
    m.validate(h)?;
    let spaces = (0..=n_max).into_par_iter().map(|n| homogeneous_space(h, m, n)).collect();
    let diffs = (0..n_max).into_par_iter().map(|n| homogeneous_differential(h, m, n)).collect();
    CochainComplex::new(h.field(), spaces, diffs)
}

/// (sa1) on reduced coordinates of C^n.
pub fn sigma_nonhomogeneous<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n: usize,
) -> Result<ActionOperator<F::Elem>> {
    h.require_cocommutative()?;
    let ctx = Ctx::new(h, 2);
    let coeffs = coeffs_of(m);
    let generators = (1..=n)
        .into_par_iter()
        .map(|i| ops::pullback_operator(h.field(), &coeffs, h.dim(), n, n, |u, out| ctx.sigma_terms(u, i - 1, false, out)))
        .collect();
    Ok(ActionOperator { degree: n, generators })
}

/// (sa1) exactly as stated on Hom_k(A^⊗(n+1), M), where C^n is the subspace
/// equivariant for the action on the first slot.
pub fn sigma_nonhomogeneous_ambient<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n: usize,
) -> Result<ActionOperator<F::Elem>> {
    h.require_cocommutative()?;
    let ctx = Ctx::new(h, 2);
    let coeffs = coeffs_of(m);
    let generators = (1..=n)
        .into_par_iter()
        .map(|i| ops::pullback_operator(h.field(), &coeffs, h.dim(), n + 1, n + 1, |u, out| ctx.sigma_terms(u, i, false, out)))
        .collect();
    Ok(ActionOperator { degree: n, generators })
}

/// Lift J: f ↦ (a_0 ⊗ x ↦ a_0·f(x)) from reduced C^n into Hom_k(A^⊗(n+1), M).
pub fn free_lift<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let d = h.dim();
    ops::pullback_operator(h.field(), &coeffs_of(m), d, n, n + 1, |u, out| {
        out.push(Term { coef: h.field().one(), src: tensor::encode(d, &u[1..]), left: Some(u[0]), right: None })
    })
}

/// Restriction R: f ↦ (x ↦ f(1 ⊗ x)).
pub fn free_restrict<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let ctx = Ctx::new(h, 0);
    let f = h.field();
    ops::pullback_operator(f, &coeffs_of(m), h.dim(), n + 1, n, |u, out| {
        let mut slots = vec![h.unit()];
        slots.extend(ctx.unit_slots(u));
        push_expanded(f, h.dim(), &slots, &f.one(), None, None, out);
    })
}

/// The free-first-slot realization of C^n inside Hom_k(A^⊗(n+1), M).
pub fn free_space<F: Field>(h: &HopfAlgebra<F>, m: &LeftModule<F::Elem>, n: usize) -> Subspace<F::Elem> {
    let ctx = Ctx::new(h, 0);
    let len = n + 1;
    let basis = ops::equivariance_kernel(h, &coeffs_of(m), len, |g, x| ops::diagonal_left_action(h, &ctx.sw, len, 1, g, x), None);
    Subspace { ambient_dim: m.dim * tensor::pow(h.dim(), len), basis }
}

/// (sa2) on K^n: σ_i = −(swap of slots i−1, i). With `space`, each
/// generator must preserve it.
pub fn sigma_homogeneous<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n: usize,
    space: Option<&Subspace<F::Elem>>,
) -> Result<ActionOperator<F::Elem>> {
    h.require_cocommutative()?;
    let ctx = Ctx::new(h, 0);
    let coeffs = coeffs_of(m);
    let generators: Vec<SparseMatrix<F::Elem>> = (1..=n)
        .map(|i| ops::pullback_operator(h.field(), &coeffs, h.dim(), n + 1, n + 1, |u, out| ctx.swap_terms(u, i, out)))
        .collect();
    if let Some(s) = space {
        check_preserves(h.field(), s, &generators, n)?;
    }
    Ok(ActionOperator { degree: n, generators })
}

pub(crate) fn check_preserves<F: Field>(
    f: &F,
    space: &Subspace<F::Elem>,
    generators: &[SparseMatrix<F::Elem>],
    n: usize,
) -> Result<()> {
    if space.is_full() {
        return Ok(());
    }
    let mut ech = Echelon::new(f, space.ambient_dim);
    for b in &space.basis {
        ech.insert(b.clone());
    }
    let ok = generators.iter().all(|g| space.basis.par_iter().all(|b| ech.contains(&g.apply(f, b))));
    if ok {
        Ok(())
    } else {
        Err(Error::ActionLeavesSubspace(n))
    }
}

/// φ^n: K^n → C^n and ψ^n: C^n → K^n, on ambient coordinates.
pub fn phi_psi<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n: usize,
) -> (SparseMatrix<F::Elem>, SparseMatrix<F::Elem>) {
    let f = h.field();
    let d = h.dim();
    let ctx = Ctx::new(h, max_arity(n));
    let coeffs = coeffs_of(m);
    let phi = ops::pullback_operator(f, &coeffs, d, n + 1, n, |u, out| {
        for (c, slots) in ctx.phi_slots(u, 0) {
            let mut all = vec![h.unit()];
            all.extend(slots.iter());
            push_expanded(f, d, &all, &c, None, None, out);
        }
    });
    let psi = ops::pullback_operator(f, &coeffs, d, n, n + 1, |u, out| psi_terms(&ctx, u, false, out));
    (phi, psi)
}

/// Pullback of ψ: target tuple (a_0, …, a_n[, a_{n+1}]). Every a_j except
/// the last is split in two; a_j^{(1)} joins slot j (or acts on the left
/// for j = 0) and S(a_j^{(2)}) multiplies the next one. In the Hochschild
/// case the final product acts on the right.
pub(crate) fn psi_terms<F: Field>(ctx: &Ctx<'_, F>, u: &[usize], bimodule: bool, out: &mut Vec<Term<F::Elem>>) {
    let f = ctx.f();
    let h = ctx.h;
    let d = ctx.d();
    let k = u.len();
    // running list of (coef, left index, slots built so far, pending S(leg2))
    let mut acc: Vec<(F::Elem, usize, Vec<SparseVec<F::Elem>>, SparseVec<F::Elem>)> = Vec::new();
    if k == 1 {
        out.push(Term { coef: f.one(), src: 0, left: Some(u[0]), right: None });
        return;
    }
    for (leg, c) in ctx.sw.get(u[0], 1) {
        acc.push((c.clone(), leg[0], Vec::new(), h.antipode_basis(leg[1]).clone()));
    }
    for &a in &u[1..k - 1] {
        let mut next = Vec::new();
        for (coef, left, slots, pending) in &acc {
            for (leg, c) in ctx.sw.get(a, 1) {
                let mut s = slots.clone();
                s.push(h.mul(pending, &ctx.units[leg[0]]));
                next.push((f.mul(coef, c), *left, s, h.antipode_basis(leg[1]).clone()));
            }
        }
        acc = next;
    }
    let last = &ctx.units[u[k - 1]];
    for (coef, left, mut slots, pending) in acc {
        let tail = h.mul(&pending, last);
        if bimodule {
            let refs: Vec<&SparseVec<F::Elem>> = slots.iter().collect();
            for (r, v) in &tail.entries {
                push_expanded(f, d, &refs, &f.mul(&coef, v), Some(left), Some(*r), out);
            }
        } else {
            slots.push(tail);
            let refs: Vec<&SparseVec<F::Elem>> = slots.iter().collect();
            push_expanded(f, d, &refs, &coef, Some(left), None, out);
        }
    }
}

/// H^n for 0 ≤ n < n_max.
pub fn cohomology<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<CohomologyReport> {
    let c = match route {
        Route::Nonhomogeneous => nonhomogeneous_complex(h, m, n_max)?,
        Route::Homogeneous => homogeneous_complex(h, m, n_max)?,
        Route::Resolution => return Err(Error::Schema("classical cohomology has no resolution route".into())),
    };
    let dims = c.cohomology_dims(n_max - 1)?;
    Ok(CohomologyReport { route, dims, cochain_dims: c.space_dims()[..n_max].to_vec() })
}

/// The fixed subcomplex CS• or KS• together with its parent complex.
pub fn symmetric_subcomplex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<(CochainComplex<F>, CochainComplex<F>)> {
    h.require_cocommutative()?;
    let (c, ops) = match route {
        Route::Nonhomogeneous => {
            let c = nonhomogeneous_complex(h, m, n_max)?;
            let ops = (0..=n_max).map(|n| sigma_nonhomogeneous(h, m, n)).collect::<Result<Vec<_>>>()?;
            (c, ops)
        }
        Route::Homogeneous => {
            let c = homogeneous_complex(h, m, n_max)?;
            let ops = (0..=n_max)
                .map(|n| sigma_homogeneous(h, m, n, Some(&c.spaces[n])))
                .collect::<Result<Vec<_>>>()?;
            (c, ops)
        }
        Route::Resolution => return Err(Error::Schema("use the resolution module for this route".into())),
    };
    let fixed = c.fixed_subcomplex(&ops)?;
    Ok((fixed, c))
}

/// SH^n for 0 ≤ n < n_max on the fixed subcomplex of the chosen realization.
pub fn symmetric_cohomology<F: Field>(
    h: &HopfAlgebra<F>,
    m: &LeftModule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<CohomologyReport> {
    if route == Route::Resolution {
        return crate::resolution::sh_via_resolution(h, m, n_max);
    }
    let (fixed, _) = symmetric_subcomplex(h, m, n_max, route)?;
    let dims = fixed.cohomology_dims(n_max - 1)?;
    Ok(CohomologyReport { route, dims, cochain_dims: fixed.space_dims()[..n_max].to_vec() })
}
