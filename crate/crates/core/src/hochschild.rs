//! Hochschild complexes C_e•(A,M) and K_e•(A,M) for a bimodule M, the
//! actions (sa3)/(sa4), and the comparisons with symmetric cohomology.

use rayon::prelude::*;
use serde::Serialize;

use crate::bar::{self, check_preserves, psi_terms, CohomologyReport, Ctx, Route};
use crate::cochain::{ActionOperator, CochainComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::{SparseMatrix, Subspace};
use crate::modules::{adjoint_module, regular_bimodule, trivial_module, Bimodule};
use crate::ops::{self, push_expanded, Coefficients, Term};
use crate::tensor;

fn coeffs_of<E: Clone>(m: &Bimodule<E>) -> Coefficients<E> {
    Coefficients::from_bimodule(m)
}

pub fn nonhomogeneous_differential<F: Field>(h: &HopfAlgebra<F>, m: &Bimodule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let ctx = Ctx::new(h, 2);
    ops::pullback_operator(h.field(), &coeffs_of(m), h.dim(), n, n + 1, |u, out| {
        ctx.reduced_coboundary_terms(u, true, out)
    })
}

/// C_e• on reduced coordinates Hom_k(A^⊗n, M), degrees 0..=n_max.
pub fn hochschild_nonhomogeneous_complex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n_max: usize,
) -> Result<CochainComplex<F>> {
    m.validate(h)?;
    let f = h.field();
    let spaces = (0..=n_max).map(|n| Subspace::full(f, m.dim * tensor::pow(h.dim(), n))).collect();
    let diffs = (0..n_max).into_par_iter().map(|n| nonhomogeneous_differential(h, m, n)).collect();
    CochainComplex::new(f, spaces, diffs)
}

/// K_e^n: maps A^⊗(n+2) → M commuting with b^{(1)}a_0 ⊗ … ⊗ b^{(n+2)}a_{n+1}
/// on the left and with right multiplication of the last slot.
pub fn hochschild_homogeneous_space<F: Field>(h: &HopfAlgebra<F>, m: &Bimodule<F::Elem>, n: usize) -> Subspace<F::Elem> {
    let len = n + 2;
    let ctx = Ctx::new(h, len - 1);
    let right = |g: usize, x: usize| ops::last_slot_right_action(h, g, x);
    let basis = ops::equivariance_kernel(
        h,
        &coeffs_of(m),
        len,
        |g, x| ops::diagonal_left_action(h, &ctx.sw, len, len, g, x),
        Some(&right),
    );
    Subspace { ambient_dim: m.dim * tensor::pow(h.dim(), len), basis }
}

pub fn homogeneous_differential<F: Field>(h: &HopfAlgebra<F>, m: &Bimodule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let ctx = Ctx::new(h, 0);
    ops::pullback_operator(h.field(), &coeffs_of(m), h.dim(), n + 2, n + 3, |u, out| ctx.face_terms(u, n + 2, out))
}

pub fn hochschild_homogeneous_complex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n_max: usize,
) -> Result<CochainComplex<F>> {
    m.validate(h)?;
    let spaces = (0..=n_max).into_par_iter().map(|n| hochschild_homogeneous_space(h, m, n)).collect();
    let diffs = (0..n_max).into_par_iter().map(|n| homogeneous_differential(h, m, n)).collect();
    CochainComplex::new(h.field(), spaces, diffs)
}

/// (sa3) on reduced coordinates (nonhomogeneous) or (sa4) on A^⊗(n+2)
/// (homogeneous, optionally checked against `space`).
pub fn sigma_hochschild<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n: usize,
    route: Route,
    space: Option<&Subspace<F::Elem>>,
) -> Result<ActionOperator<F::Elem>> {
    h.require_cocommutative()?;
    let ctx = Ctx::new(h, 2);
    let coeffs = coeffs_of(m);
    let f = h.field();
    let d = h.dim();
    let generators: Vec<SparseMatrix<F::Elem>> = match route {
        Route::Nonhomogeneous => (1..=n)
            .into_par_iter()
            .map(|i| ops::pullback_operator(f, &coeffs, d, n, n, |u, out| ctx.sigma_terms(u, i - 1, true, out)))
            .collect(),
        Route::Homogeneous => (1..=n)
            .map(|i| ops::pullback_operator(f, &coeffs, d, n + 2, n + 2, |u, out| ctx.swap_terms(u, i, out)))
            .collect(),
        Route::Resolution => return Err(Error::Schema("no resolution route for cochain actions".into())),
    };
    if let Some(s) = space {
        check_preserves(f, s, &generators, n)?;
    }
    Ok(ActionOperator { degree: n, generators })
}

/// (sa3) as stated on Hom_k(A^⊗(n+2), M).
pub fn sigma_hochschild_ambient<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n: usize,
) -> Result<ActionOperator<F::Elem>> {
    h.require_cocommutative()?;
    let ctx = Ctx::new(h, 2);
    let coeffs = coeffs_of(m);
    let generators = (1..=n)
        .into_par_iter()
        .map(|i| ops::pullback_operator(h.field(), &coeffs, h.dim(), n + 2, n + 2, |u, out| ctx.sigma_terms(u, i, false, out)))
        .collect();
    Ok(ActionOperator { degree: n, generators })
}

/// J: f ↦ (a_0 ⊗ x ⊗ a_{n+1} ↦ a_0·f(x)·a_{n+1}).
pub fn free_lift<F: Field>(h: &HopfAlgebra<F>, m: &Bimodule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let d = h.dim();
    ops::pullback_operator(h.field(), &coeffs_of(m), d, n, n + 2, |u, out| {
        out.push(Term { coef: h.field().one(), src: tensor::encode(d, &u[1..=n]), left: Some(u[0]), right: Some(u[n + 1]) })
    })
}

/// R: f ↦ (x ↦ f(1 ⊗ x ⊗ 1)).
pub fn free_restrict<F: Field>(h: &HopfAlgebra<F>, m: &Bimodule<F::Elem>, n: usize) -> SparseMatrix<F::Elem> {
    let ctx = Ctx::new(h, 0);
    let f = h.field();
    ops::pullback_operator(f, &coeffs_of(m), h.dim(), n + 2, n, |u, out| {
        let mut slots = vec![h.unit()];
        slots.extend(ctx.unit_slots(u));
        slots.push(h.unit());
        push_expanded(f, h.dim(), &slots, &f.one(), None, None, out);
    })
}

/// φ_e^n: K_e^n → C_e^n and ψ_e^n: C_e^n → K_e^n.
pub fn phi_psi_hochschild<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n: usize,
) -> (SparseMatrix<F::Elem>, SparseMatrix<F::Elem>) {
    let f = h.field();
    let d = h.dim();
    let ctx = Ctx::new(h, n.max(2) + 1);
    let coeffs = coeffs_of(m);
    let phi = ops::pullback_operator(f, &coeffs, d, n + 2, n, |u, out| {
        for (c, slots) in ctx.phi_slots(u, 1) {
            let mut all = vec![h.unit()];
            all.extend(slots.iter());
            push_expanded(f, d, &all, &c, None, None, out);
        }
    });
    let psi = ops::pullback_operator(f, &coeffs, d, n, n + 2, |u, out| psi_terms(&ctx, u, true, out));
    (phi, psi)
}

pub fn symmetric_hochschild_subcomplex<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<(CochainComplex<F>, CochainComplex<F>)> {
    h.require_cocommutative()?;
    let c = match route {
        Route::Nonhomogeneous => hochschild_nonhomogeneous_complex(h, m, n_max)?,
        Route::Homogeneous => hochschild_homogeneous_complex(h, m, n_max)?,
        Route::Resolution => return Err(Error::Schema("use the resolution module for this route".into())),
    };
    let ops = (0..=n_max)
        .map(|n| sigma_hochschild(h, m, n, route, (route == Route::Homogeneous).then(|| &c.spaces[n])))
        .collect::<Result<Vec<_>>>()?;
    Ok((c.fixed_subcomplex(&ops)?, c))
}

/// HH^n for 0 ≤ n < n_max.
pub fn hochschild_cohomology<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<CohomologyReport> {
    let c = match route {
        Route::Nonhomogeneous => hochschild_nonhomogeneous_complex(h, m, n_max)?,
        Route::Homogeneous => hochschild_homogeneous_complex(h, m, n_max)?,
        Route::Resolution => return Err(Error::Schema("Hochschild cohomology has no resolution route".into())),
    };
    let dims = c.cohomology_dims(n_max - 1)?;
    Ok(CohomologyReport { route, dims, cochain_dims: c.space_dims()[..n_max].to_vec() })
}

/// SHH^n for 0 ≤ n < n_max.
pub fn symmetric_hochschild_cohomology<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<CohomologyReport> {
    if route == Route::Resolution {
        return crate::resolution::shh_via_resolution(h, m, n_max);
    }
    let (fixed, _) = symmetric_hochschild_subcomplex(h, m, n_max, route)?;
    let dims = fixed.cohomology_dims(n_max - 1)?;
    Ok(CohomologyReport { route, dims, cochain_dims: fixed.space_dims()[..n_max].to_vec() })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionComparison {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
    pub pass: bool,
}

impl DimensionComparison {
    fn new(left: Vec<usize>, right: Vec<usize>) -> Self {
        let pass = left == right;
        DimensionComparison { left, right, pass }
    }
}

/// dim SHH^n(A,M) against dim SH^n(A, ᵃᵈM) for n < n_max.
pub fn compare_adjoint<F: Field>(
    h: &HopfAlgebra<F>,
    m: &Bimodule<F::Elem>,
    n_max: usize,
    route: Route,
) -> Result<DimensionComparison> {
    h.require_cocommutative()?;
    let shh = symmetric_hochschild_cohomology(h, m, n_max, route)?.dims;
    let ad = adjoint_module(h, m)?;
    let sh = bar::symmetric_cohomology(h, &ad, n_max, route)?.dims;
    Ok(DimensionComparison::new(shh, sh))
}

/// dim SHH^n(A,A) against dim A · dim SH^n(A,k) for commutative and
/// cocommutative A.
pub fn commutative_factorization_check<F: Field>(
    h: &HopfAlgebra<F>,
    n_max: usize,
    route: Route,
) -> Result<DimensionComparison> {
    h.require_commutative()?;
    h.require_cocommutative()?;
    let shh = symmetric_hochschild_cohomology(h, &regular_bimodule(h), n_max, route)?.dims;
    let sh = bar::symmetric_cohomology(h, &trivial_module(h), n_max, route)?.dims;
    Ok(DimensionComparison::new(shh, sh.iter().map(|x| x * h.dim()).collect()))
}
