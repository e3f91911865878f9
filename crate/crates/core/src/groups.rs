//! Cayley tables for small groups. Element 0 is always the identity.

use crate::error::{Error, Result};

pub fn cyclic(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(rest: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in 0..rest.len() {
            let x = rest.remove(k);
            cur.push(x);
            rec(rest, cur, out);
            cur.pop();
            rest.insert(k, x);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// S_n on permutations in lexicographic order (identity first), with
/// (στ)(x) = σ(τ(x)).
pub fn symmetric(n: usize) -> Vec<Vec<usize>> {
    symmetric_with_labels(n).0
}

pub fn symmetric_with_labels(n: usize) -> (Vec<Vec<usize>>, Vec<String>) {
    let perms = permutations(n);
    let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&t.iter().map(|&x| s[x]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let labels = perms
        .iter()
        .map(|p| format!("[{}]", p.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join("")))
        .collect();
    (table, labels)
}

/// G × H with (g, h) at index g·|H| + h.
pub fn direct_product(g: &[Vec<usize>], h: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let (m, n) = (g.len(), h.len());
    (0..m * n)
        .map(|a| (0..m * n).map(|b| g[a / n][b / n] * n + h[a % n][b % n]).collect())
        .collect()
}

/// Checks the group axioms and returns the inverse of each element.
pub fn check_group(table: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table.iter().any(|r| r.len() != n) {
        return Err(Error::DimensionMismatch("Cayley table must be square".into()));
    }
    if table.iter().flatten().any(|&x| x >= n) {
        return Err(Error::NotAGroup("entry out of range".into()));
    }
    if (0..n).any(|i| table[0][i] != i || table[i][0] != i) {
        return Err(Error::NotAGroup("element 0 is not an identity".into()));
    }
    let mut inverse = vec![0; n];
    for a in 0..n {
        match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
            Some(b) => inverse[a] = b,
            None => return Err(Error::NotAGroup(format!("element {a} has no inverse"))),
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
    }
    Ok(inverse)
}

/// Named builtin groups: `Cp:<n>`, `Cn:<n>`, `C<n>`, `S3`, `Sn:<n>`, `V4`,
/// and products joined by `x`, e.g. `C2xC3`.
pub fn builtin(name: &str) -> Result<(Vec<Vec<usize>>, Vec<String>)> {
    let parts: Vec<&str> = name.split('x').map(str::trim).collect();
    if parts.len() > 1 {
        let mut table = vec![vec![0]];
        let mut labels = vec![String::new()];
        for p in parts {
            let (t, l) = builtin(p)?;
            let joined = labels
                .iter()
                .flat_map(|a| l.iter().map(move |b| if a.is_empty() { b.clone() } else { format!("{a}*{b}") }))
                .collect();
            table = direct_product(&table, &t);
            labels = joined;
        }
        return Ok((table, labels));
    }
    let bad = || Error::Schema(format!("unknown builtin algebra '{name}'"));
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    let lower = name.to_ascii_lowercase();
    let cyc = |n: usize| {
        if n == 0 {
            return Err(bad());
        }
        let labels = (0..n).map(|i| if i == 0 { "e".to_string() } else { format!("g^{i}") }).collect();
        Ok((cyclic(n), labels))
    };
    if let Some(r) = lower.strip_prefix("cp:").or_else(|| lower.strip_prefix("cn:")) {
        return cyc(num(r)?);
    }
    if let Some(r) = lower.strip_prefix("sn:") {
        let n = num(r)?;
        if n == 0 || n > 5 {
            return Err(bad());
        }
        return Ok(symmetric_with_labels(n));
    }
    if lower == "v4" {
        let t = direct_product(&cyclic(2), &cyclic(2));
        return Ok((t, vec!["e".into(), "b".into(), "a".into(), "ab".into()]));
    }
    if let Some(r) = lower.strip_prefix('s') {
        let n = num(r)?;
        if n == 0 || n > 5 {
            return Err(bad());
        }
        return Ok(symmetric_with_labels(n));
    }
    if let Some(r) = lower.strip_prefix('c') {
        return cyc(num(r)?);
    }
    Err(bad())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_are_groups() {
        for name in ["Cp:3", "C5", "S3", "Sn:4", "V4", "C2xC3", "Cn:1"] {
            let (t, l) = builtin(name).unwrap();
            assert_eq!(t.len(), l.len());
            check_group(&t).unwrap();
        }
        assert!(builtin("Q8").is_err());
    }

    #[test]
    fn s3_is_non_abelian_with_identity_first() {
        let (t, l) = symmetric_with_labels(3);
        assert_eq!(l[0], "[123]");
        let inv = check_group(&t).unwrap();
        assert_eq!(inv.iter().filter(|&&x| x != 0).count(), 5);
        assert!((0..6).any(|a| (0..6).any(|b| t[a][b] != t[b][a])));
    }

    #[test]
    fn broken_tables_are_rejected() {
        assert!(matches!(check_group(&[vec![0, 1], vec![1, 1]]), Err(Error::NotAGroup(_))));
        assert!(matches!(check_group(&[vec![1, 0], vec![0, 1]]), Err(Error::NotAGroup(_))));
        let nonassoc = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(check_group(&nonassoc).is_err());
    }
}
