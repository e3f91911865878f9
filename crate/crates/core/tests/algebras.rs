//! Algebras that are not group algebras: k[x]/(x^p) and k^{C_n}.

mod fixtures;

use fixtures::*;
use symcoh::bar::{self, Route};
use symcoh::cochain::CochainComplex;
use symcoh::hochschild;
use symcoh::linalg::{SparseMatrix, SparseVec};
use symcoh::modules::{regular_bimodule, regular_module, trivial_bimodule, trivial_module};
use symcoh::{resolution, HopfAlgebra, PrimeField};

const ROUTES: [Route; 2] = [Route::Nonhomogeneous, Route::Homogeneous];

fn samples() -> Vec<(&'static str, HopfAlgebra<PrimeField>)> {
    vec![
        ("k[x]/(x^3)", truncated_polynomial(3)),
        ("k[x]/(x^5)", truncated_polynomial(5)),
        ("k^C3 over GF(3)", dual_cyclic(3, 3)),
        ("k^C4 over GF(5)", dual_cyclic(5, 4)),
    ]
}

#[test]
fn structures_satisfy_the_axioms() {
    for (name, h) in samples() {
        let v = h.validate(true);
        assert!(v.passed(), "{name}: {:?}", v.failures().collect::<Vec<_>>());
        assert!(v.commutative && v.cocommutative, "{name}");
        assert!(h.group().is_none(), "{name}");
    }
}

#[test]
fn truncated_polynomial_matches_periodic_oracle() {
    for p in [3, 5] {
        let h = truncated_polynomial(p);
        for regular in [false, true] {
            let m = if regular { regular_module(&h) } else { trivial_module(&h) };
            let (u, v) = truncated_periodic_data(p, regular);
            let expected = periodic_oracle(p, &u, &v, 4);
            for route in ROUTES {
                assert_eq!(bar::cohomology(&h, &m, 4, route).unwrap().dims, expected, "p={p} regular={regular} {route}");
            }
        }
    }
}

#[test]
fn dual_group_algebra_is_semisimple() {
    for (p, n) in [(3, 3), (5, 4)] {
        let h = dual_cyclic(p, n);
        for route in ROUTES {
            assert_eq!(bar::cohomology(&h, &trivial_module(&h), 4, route).unwrap().dims, maschke_oracle(4));
            let hh = hochschild::hochschild_cohomology(&h, &regular_bimodule(&h), 3, route).unwrap().dims;
            assert_eq!(hh, vec![n, 0, 0]);
        }
    }
}

#[test]
fn truncated_polynomial_hochschild() {
    // Over GF(p) both maps of the periodic bimodule resolution vanish on A.
    let h = truncated_polynomial(3);
    for route in ROUTES {
        let hh = hochschild::hochschild_cohomology(&h, &regular_bimodule(&h), 4, route).unwrap().dims;
        assert_eq!(hh, vec![3, 3, 3, 3]);
    }
}

#[test]
fn all_four_complexes_square_to_zero() {
    for (name, h) in samples() {
        let n = if h.dim() > 3 { 3 } else { 4 };
        let m = regular_module(&h);
        let b = regular_bimodule(&h);
        assert!(bar::nonhomogeneous_complex(&h, &m, n).unwrap().check().pass, "{name} C");
        assert!(bar::homogeneous_complex(&h, &m, n).unwrap().check().pass, "{name} K");
        assert!(hochschild::hochschild_nonhomogeneous_complex(&h, &b, n).unwrap().check().pass, "{name} Ce");
        assert!(hochschild::hochschild_homogeneous_complex(&h, &b, n - 1).unwrap().check().pass, "{name} Ke");
    }
}

#[test]
fn symmetric_actions_are_coxeter() {
    for (name, h) in samples().into_iter().filter(|(_, h)| h.dim() <= 4) {
        let f = h.field().clone();
        let m = regular_module(&h);
        let b = regular_bimodule(&h);
        for n in 0..=3 {
            let k = bar::homogeneous_space(&h, &m, n);
            let ke = hochschild::hochschild_homogeneous_space(&h, &b, n);
            let c_full = symcoh::Subspace::full(&f, m.dim * symcoh::tensor::pow(h.dim(), n));
            let ce_full = symcoh::Subspace::full(&f, b.dim * symcoh::tensor::pow(h.dim(), n));
            let sa1 = bar::sigma_nonhomogeneous(&h, &m, n).unwrap();
            let sa2 = bar::sigma_homogeneous(&h, &m, n, Some(&k)).unwrap();
            let sa3 = hochschild::sigma_hochschild(&h, &b, n, Route::Nonhomogeneous, None).unwrap();
            let sa4 = hochschild::sigma_hochschild(&h, &b, n, Route::Homogeneous, Some(&ke)).unwrap();
            assert!(sa1.check_coxeter(&f, &c_full).pass(), "{name} sa1 n={n}");
            assert!(sa2.check_coxeter(&f, &k).pass(), "{name} sa2 n={n}");
            assert!(sa3.check_coxeter(&f, &ce_full).pass(), "{name} sa3 n={n}");
            assert!(sa4.check_coxeter(&f, &ke).pass(), "{name} sa4 n={n}");
        }
    }
}

fn inverse_pair(f: &PrimeField, c: &CochainComplex<PrimeField>, k: &CochainComplex<PrimeField>, phi: &SparseMatrix<u64>, psi: &SparseMatrix<u64>, n: usize) {
    assert_eq!(phi.compose(f, psi), SparseMatrix::identity(f, c.ambient_dim(n)));
    for v in &k.spaces[n].basis {
        assert_eq!(psi.apply(f, &phi.apply(f, v)), *v);
    }
    for i in 0..c.ambient_dim(n) {
        assert!(k.spaces[n].contains(f, &psi.apply(f, &SparseVec::unit(f, i))));
    }
}

#[test]
fn comparison_maps_beyond_group_algebras() {
    let h = truncated_polynomial(3);
    let f = h.field().clone();
    let m = regular_module(&h);
    let c = bar::nonhomogeneous_complex(&h, &m, 3).unwrap();
    let k = bar::homogeneous_complex(&h, &m, 3).unwrap();
    for n in 0..=3 {
        let (phi, psi) = bar::phi_psi(&h, &m, n);
        inverse_pair(&f, &c, &k, &phi, &psi, n);
        if n < 3 {
            let (phi1, _) = bar::phi_psi(&h, &m, n + 1);
            for v in &k.spaces[n].basis {
                assert_eq!(phi1.apply(&f, &k.diffs[n].apply(&f, v)), c.diffs[n].apply(&f, &phi.apply(&f, v)));
            }
        }
    }
    let b = regular_bimodule(&h);
    let ce = hochschild::hochschild_nonhomogeneous_complex(&h, &b, 2).unwrap();
    let ke = hochschild::hochschild_homogeneous_complex(&h, &b, 2).unwrap();
    for n in 0..=2 {
        let (phi, psi) = hochschild::phi_psi_hochschild(&h, &b, n);
        inverse_pair(&f, &ce, &ke, &phi, &psi, n);
    }
}

#[test]
fn symmetric_routes_agree() {
    for (name, h) in samples().into_iter().filter(|(_, h)| h.dim() <= 4) {
        let n = 4;
        let m = trivial_module(&h);
        let b = regular_bimodule(&h);
        let sh: Vec<_> = [Route::Nonhomogeneous, Route::Homogeneous, Route::Resolution]
            .into_iter()
            .map(|r| bar::symmetric_cohomology(&h, &m, n, r).unwrap().dims)
            .collect();
        assert!(sh.windows(2).all(|w| w[0] == w[1]), "{name} SH {sh:?}");
        let h_dims = bar::cohomology(&h, &m, n, Route::Homogeneous).unwrap().dims;
        assert_eq!(sh[0][..2], h_dims[..2], "{name}");
        let shh: Vec<_> = [Route::Nonhomogeneous, Route::Resolution]
            .into_iter()
            .map(|r| hochschild::symmetric_hochschild_cohomology(&h, &b, 3, r).unwrap().dims)
            .collect();
        assert_eq!(shh[0], shh[1], "{name} SHH");
        let c = hochschild::commutative_factorization_check(&h, 3, Route::Nonhomogeneous).unwrap();
        assert!(c.pass, "{name} {c:?}");
        let a = hochschild::compare_adjoint(&h, &trivial_bimodule(&h), 3, Route::Nonhomogeneous).unwrap();
        assert!(a.pass, "{name} {a:?}");
    }
}

#[test]
fn resolution_exact_beyond_group_algebras() {
    for (name, h) in samples().into_iter().filter(|(_, h)| h.dim() <= 4) {
        let s = resolution::ResolutionComplex::build(&h, 4, false, false);
        assert!(s.is_complex(), "{name}");
        assert!(s.exactness().iter().all(|c| c.pass), "{name}");
        assert!(s.contracting_homotopy_check(&h).iter().all(|c| c.pass), "{name}");
        let g = resolution::ResolutionComplex::build(&h, 4, false, true);
        assert_eq!(g.dims(), s.dims(), "{name}");
    }
}
