//! Extra test algebras and independent cohomology oracles.
#![allow(dead_code)]

use symcoh::{group_algebra, groups, HopfAlgebra, Matrix, PrimeField, RationalField};

pub fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn cyclic(p: u64, n: usize) -> HopfAlgebra<PrimeField> {
    group_algebra(&gf(p), &groups::cyclic(n), None).unwrap()
}

pub fn s3(p: u64) -> HopfAlgebra<PrimeField> {
    group_algebra(&gf(p), &groups::symmetric(3), None).unwrap()
}

pub fn s3_q() -> HopfAlgebra<RationalField> {
    group_algebra(&RationalField, &groups::symmetric(3), None).unwrap()
}

pub fn cyclic_q(n: usize) -> HopfAlgebra<RationalField> {
    group_algebra(&RationalField, &groups::cyclic(n), None).unwrap()
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// k[x]/(x^p) over GF(p) with x primitive: Δx = x⊗1 + 1⊗x, S(x) = −x.
pub fn truncated_polynomial(p: u64) -> HopfAlgebra<PrimeField> {
    let f = gf(p);
    let d = p as usize;
    let mut mult = Vec::new();
    let mut comult = Vec::new();
    for i in 0..d {
        for j in 0..d {
            if i + j < d {
                mult.push((i, j, i + j, 1u64));
            }
        }
        for j in 0..=i {
            let c = binom(i as u64, j as u64) % p;
            if c != 0 {
                comult.push((i, j, i - j, c));
            }
        }
    }
    let mut unit = vec![0; d];
    unit[0] = 1;
    let counit = unit.clone();
    let mut antipode = vec![vec![0; d]; d];
    for (i, row) in antipode.iter_mut().enumerate() {
        row[i] = if i % 2 == 0 { 1 } else { p - 1 };
    }
    let labels = (0..d).map(|i| format!("x^{i}")).collect();
    HopfAlgebra::from_structure(&f, labels, mult, unit, comult, counit, Matrix::from_rows(antipode).unwrap()).unwrap()
}

/// The dual k^{C_n} of the cyclic group algebra: δ_a δ_b = [a=b] δ_a,
/// Δ(δ_g) = Σ δ_a ⊗ δ_{g−a}.
pub fn dual_cyclic(p: u64, n: usize) -> HopfAlgebra<PrimeField> {
    let f = gf(p);
    let mult = (0..n).map(|a| (a, a, a, 1u64)).collect();
    let comult = (0..n).flat_map(|g| (0..n).map(move |a| (g, a, (g + n - a) % n, 1u64))).collect();
    let unit = vec![1; n];
    let mut counit = vec![0; n];
    counit[0] = 1;
    let mut antipode = vec![vec![0u64; n]; n];
    for g in 0..n {
        antipode[(n - g) % n][g] = 1;
    }
    let labels = (0..n).map(|g| format!("d{g}")).collect();
    HopfAlgebra::from_structure(&f, labels, mult, unit, comult, counit, Matrix::from_rows(antipode).unwrap()).unwrap()
}

/// Rank of a dense matrix mod p by plain row reduction.
pub fn rank_mod(p: u64, rows: &[Vec<u64>]) -> usize {
    let mut m: Vec<Vec<u64>> = rows.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let cols = m.first().map_or(0, |r| r.len());
    let inv = |a: u64| {
        let (mut r, mut e, mut b) = (1u64, p - 2, a);
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let s = inv(m[rank][c]);
        for x in m[rank].iter_mut() {
            *x = *x * s % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let t = m[r][c];
                for k in 0..cols {
                    m[r][k] = (m[r][k] + p * p - t * m[rank][k] % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Cohomology of a 2-periodic resolution ⋯ → A --v--> A --u--> A → k with
/// coefficients M, where `u` and `v` are the matrices of u and v on M:
/// the cochains are M in every degree with differentials u, v, u, ….
pub fn periodic_oracle(p: u64, u: &[Vec<u64>], v: &[Vec<u64>], n_max: usize) -> Vec<usize> {
    let m = u.len();
    let r = |n: usize| rank_mod(p, if n % 2 == 0 { u } else { v });
    (0..n_max).map(|n| m - r(n) - if n > 0 { r(n - 1) } else { 0 }).collect()
}

/// Matrices of g − 1 and of the norm element on M for the cyclic group C_n,
/// M trivial or regular.
pub fn cyclic_periodic_data(p: u64, n: usize, regular: bool) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    if !regular {
        return (vec![vec![0]], vec![vec![n as u64 % p]]);
    }
    let mut u = vec![vec![0u64; n]; n];
    for j in 0..n {
        u[(j + 1) % n][j] = 1;
        u[j][j] = (u[j][j] + p - 1) % p;
    }
    (u, vec![vec![1; n]; n])
}

/// Matrices of x and x^{p−1} for k[x]/(x^p), M trivial or regular.
pub fn truncated_periodic_data(p: u64, regular: bool) -> (Vec<Vec<u64>>, Vec<Vec<u64>>) {
    if !regular {
        return (vec![vec![0]], vec![vec![0]]);
    }
    let d = p as usize;
    let mut u = vec![vec![0u64; d]; d];
    let mut v = vec![vec![0u64; d]; d];
    for j in 0..d {
        if j + 1 < d {
            u[j + 1][j] = 1;
        }
        if j == 0 {
            v[d - 1][0] = 1;
        }
    }
    (u, v)
}

/// H^n(G, k) when |G| is invertible in k: k in degree 0 and nothing above.
pub fn maschke_oracle(n_max: usize) -> Vec<usize> {
    (0..n_max).map(|n| usize::from(n == 0)).collect()
}
