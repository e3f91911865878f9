//! Tuple indexing for tensor powers A^⊗n with a fixed basis of size d.
//!
//! Tuples flatten lexicographically, leftmost factor most significant.

pub fn pow(d: usize, n: usize) -> usize {
    d.checked_pow(n as u32).expect("tensor power overflows usize")
}

pub fn encode(d: usize, tuple: &[usize]) -> usize {
    tuple.iter().fold(0, |acc, &t| acc * d + t)
}

pub fn decode(d: usize, n: usize, mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for slot in (0..n).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
    out
}

pub fn decode_into(d: usize, mut idx: usize, out: &mut [usize]) {
    for slot in (0..out.len()).rev() {
        out[slot] = idx % d;
        idx /= d;
    }
}

/// Iterator over all tuples of length `n` with entries below `d`, in flat order.
pub struct Tuples {
    d: usize,
    cur: Vec<usize>,
    done: bool,
}

impl Tuples {
    pub fn new(d: usize, n: usize) -> Self {
        Tuples { d, cur: vec![0; n], done: d == 0 && n > 0 }
    }
}

impl Iterator for Tuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let mut slot = self.cur.len();
        loop {
            if slot == 0 {
                self.done = true;
                break;
            }
            slot -= 1;
            self.cur[slot] += 1;
            if self.cur[slot] < self.d {
                break;
            }
            self.cur[slot] = 0;
        }
        Some(out)
    }
}

/// Strictly increasing tuples of length `n` from `0..d`, lexicographic.
pub fn increasing_tuples(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in start..d {
            if d - x < n - cur.len() {
                break;
            }
            cur.push(x);
            rec(d, n, x + 1, cur, out);
            cur.pop();
        }
    }
    rec(d, n, 0, &mut cur, &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}
