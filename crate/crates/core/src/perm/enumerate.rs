use serde::{Deserialize, Serialize};

use super::{PartialPerm, Permutation};
use crate::error::{Error, Result};

/// Caps on the degrees that may be enumerated exhaustively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationLimits {
    pub max_symmetric: usize,
    pub max_rook: usize,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        EnumerationLimits {
            max_symmetric: 8,
            max_rook: 6,
        }
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn symmetric_group(n: usize, limits: &EnumerationLimits) -> Result<Vec<Permutation>> {
    if n == 0 || n > limits.max_symmetric {
        return Err(Error::EnumerationLimit {
            what: "symmetric group",
            n,
            max: limits.max_symmetric,
        });
    }
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    let mut out = Vec::new();
    loop {
        out.push(Permutation {
            images: cur.clone(),
        });
        if !next_permutation(&mut cur) {
            break;
        }
    }
    Ok(out)
}

/// All of `R_n`, ordered by rank and then lexicographically.
pub fn rook_monoid(n: usize, limits: &EnumerationLimits) -> Result<Vec<PartialPerm>> {
    if n == 0 || n > limits.max_rook {
        return Err(Error::EnumerationLimit {
            what: "rook monoid",
            n,
            max: limits.max_rook,
        });
    }
    let mut out = Vec::with_capacity(rook_monoid_size(n) as usize);
    let mut cur = vec![0u8; n];
    let mut used = vec![false; n + 1];
    fill(0, &mut cur, &mut used, &mut out);
    out.sort_by(|a, b| {
        a.rank()
            .cmp(&b.rank())
            .then_with(|| a.images.cmp(&b.images))
    });
    Ok(out)
}

/// `|R_n| = Σ_k C(n,k)² k!`.
pub fn rook_monoid_size(n: usize) -> u64 {
    let mut total = 0u64;
    for k in 0..=n as u64 {
        let c = binomial(n as u64, k);
        total += c * c * (1..=k).product::<u64>();
    }
    total
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn fill(pos: usize, cur: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<PartialPerm>) {
    let n = cur.len();
    if pos == n {
        out.push(PartialPerm {
            images: cur.clone(),
        });
        return;
    }
    cur[pos] = 0;
    fill(pos + 1, cur, used, out);
    for v in 1..=n {
        if !used[v] {
            used[v] = true;
            cur[pos] = v as u8;
            fill(pos + 1, cur, used, out);
            used[v] = false;
        }
    }
    cur[pos] = 0;
}

fn next_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn sizes() {
        let lim = EnumerationLimits::default();
        assert_eq!(symmetric_group(4, &lim).unwrap().len(), 24);
        assert_eq!(rook_monoid(2, &lim).unwrap().len(), 7);
        assert_eq!(rook_monoid(3, &lim).unwrap().len(), 34);
        assert_eq!(rook_monoid(4, &lim).unwrap().len(), 209);
        assert_eq!(rook_monoid_size(3), 34);
        assert_eq!(rook_monoid_size(6), 13327);
    }

    #[test]
    fn elements_distinct_and_sorted() {
        let lim = EnumerationLimits::default();
        let w = symmetric_group(5, &lim).unwrap();
        assert!(w.windows(2).all(|p| p[0] < p[1]));
        let r = rook_monoid(4, &lim).unwrap();
        let set: HashSet<_> = r.iter().collect();
        assert_eq!(set.len(), r.len());
        assert!(r[0].is_zero());
    }

    #[test]
    fn limit_exceeded() {
        let lim = EnumerationLimits {
            max_symmetric: 4,
            max_rook: 3,
        };
        let err = symmetric_group(5, &lim).unwrap_err();
        assert!(err.to_string().contains("enumeration limit"));
        assert!(rook_monoid(4, &lim).is_err());
    }
}
