use symcoh::bar::{self, Route};
use symcoh::cochain::CochainComplex;
use symcoh::hochschild;
use symcoh::linalg::{SparseMatrix, SparseVec, Subspace};
use symcoh::modules::{regular_bimodule, regular_module, trivial_module};
use symcoh::{group_algebra, groups, HopfAlgebra, PrimeField};

fn kc3() -> HopfAlgebra<PrimeField> {
    group_algebra(&PrimeField::new(3).unwrap(), &groups::cyclic(3), None).unwrap()
}

fn fixes_all(f: &PrimeField, ops: &[SparseMatrix<u64>], v: &SparseVec<u64>) -> bool {
    ops.iter().all(|g| g.apply(f, v) == *v)
}

/// phi ∘ psi = id on C^n, psi ∘ phi = id on K^n, and phi intertwines.
fn check_iso(
    f: &PrimeField,
    c: &CochainComplex<PrimeField>,
    k: &CochainComplex<PrimeField>,
    maps: &[(SparseMatrix<u64>, SparseMatrix<u64>)],
) {
    for (n, (phi, psi)) in maps.iter().enumerate() {
        let cn = c.ambient_dim(n);
        assert_eq!(phi.compose(f, psi), SparseMatrix::identity(f, cn), "phi psi, degree {n}");
        for b in &k.spaces[n].basis {
            assert_eq!(psi.apply(f, &phi.apply(f, b)), *b, "psi phi, degree {n}");
        }
        let in_k = Subspace::spanned_by(f, k.ambient_dim(n), (0..cn).map(|i| psi.apply(f, &SparseVec::unit(f, i))).collect());
        assert!(k.spaces[n].contains_subspace(f, &in_k), "psi lands in K, degree {n}");
        if n + 1 < maps.len() {
            let phi_next = &maps[n + 1].0;
            for b in &k.spaces[n].basis {
                let lhs = phi_next.apply(f, &k.diffs[n].apply(f, b));
                let rhs = c.diffs[n].apply(f, &phi.apply(f, b));
                assert_eq!(lhs, rhs, "intertwining, degree {n}");
            }
        }
    }
}

#[test]
fn bar_phi_psi_are_inverse_chain_maps() {
    let h = kc3();
    let f = h.field().clone();
    for m in [trivial_module(&h), regular_module(&h)] {
        let c = bar::nonhomogeneous_complex(&h, &m, 4).unwrap();
        let k = bar::homogeneous_complex(&h, &m, 4).unwrap();
        let maps: Vec<_> = (0..=4).map(|n| bar::phi_psi(&h, &m, n)).collect();
        check_iso(&f, &c, &k, &maps);
    }
}

#[test]
fn bar_phi_psi_on_nonabelian_group() {
    let f = PrimeField::new(5).unwrap();
    let h = group_algebra(&f, &groups::symmetric(3), None).unwrap();
    let m = regular_module(&h);
    let c = bar::nonhomogeneous_complex(&h, &m, 2).unwrap();
    let k = bar::homogeneous_complex(&h, &m, 2).unwrap();
    let maps: Vec<_> = (0..=2).map(|n| bar::phi_psi(&h, &m, n)).collect();
    check_iso(&f, &c, &k, &maps);
}

#[test]
fn hochschild_phi_psi_are_inverse_chain_maps() {
    let h = kc3();
    let f = h.field().clone();
    let m = regular_bimodule(&h);
    let c = hochschild::hochschild_nonhomogeneous_complex(&h, &m, 3).unwrap();
    let k = hochschild::hochschild_homogeneous_complex(&h, &m, 3).unwrap();
    let maps: Vec<_> = (0..=3).map(|n| hochschild::phi_psi_hochschild(&h, &m, n)).collect();
    check_iso(&f, &c, &k, &maps);
}

#[test]
fn phi_psi_carry_fixed_cochains() {
    let h = kc3();
    let f = h.field().clone();
    let m = trivial_module(&h);
    for n in 0..=4 {
        let (phi, psi) = bar::phi_psi(&h, &m, n);
        let k_space = bar::homogeneous_space(&h, &m, n);
        let sc = bar::sigma_nonhomogeneous(&h, &m, n).unwrap().generators;
        let sk = bar::sigma_homogeneous(&h, &m, n, Some(&k_space)).unwrap().generators;
        let cs = bar::symmetric_subcomplex(&h, &m, n, Route::Nonhomogeneous).unwrap().0.spaces[n].clone();
        let ks = bar::symmetric_subcomplex(&h, &m, n, Route::Homogeneous).unwrap().0.spaces[n].clone();
        assert_eq!(cs.dim(), ks.dim());
        for v in &ks.basis {
            assert!(fixes_all(&f, &sc, &phi.apply(&f, v)));
        }
        for v in &cs.basis {
            assert!(fixes_all(&f, &sk, &psi.apply(&f, v)));
        }
    }
}
