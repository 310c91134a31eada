use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of the simple reflections `S = {s_1, …, s_{n-1}}` of `S_n`.
///
/// Used for parabolic subgroups `W_I`, for type-map values and for supports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleSubset {
    n: u8,
    bits: u64,
}

impl SimpleSubset {
    pub fn empty(n: usize) -> Self {
        assert!((1..=64).contains(&n), "degree {n} unsupported");
        SimpleSubset {
            n: n as u8,
            bits: 0,
        }
    }

    /// All of `S`.
    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for i in 1..n {
            s.bits |= 1 << i;
        }
        s
    }

    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(n);
        for i in indices {
            s.insert(i)?;
        }
        Ok(s)
    }

    /// Parses `"1,2"` (meaning `{s_1, s_2}`), `"none"` or `""` for the empty set.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let t = text.trim();
        let t = t.trim_start_matches('{').trim_end_matches('}');
        if t.is_empty() || t.eq_ignore_ascii_case("none") {
            return Ok(Self::empty(n));
        }
        let indices = t
            .split(',')
            .map(|tok| {
                tok.trim()
                    .trim_start_matches('s')
                    .parse::<usize>()
                    .map_err(|_| Error::Parse {
                        input: text.to_string(),
                        reason: "expected comma-separated generator indices".into(),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(n, indices)
    }

    /// Every subset of `S`, ordered by bitmask.
    pub fn all(n: usize) -> Vec<Self> {
        let r = n - 1;
        (0u64..(1 << r))
            .map(|m| SimpleSubset {
                n: n as u8,
                bits: m << 1,
            })
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    pub fn insert(&mut self, i: usize) -> Result<()> {
        if i == 0 || i >= self.degree() {
            return Err(Error::InvalidGenerator {
                index: i,
                n: self.degree(),
            });
        }
        self.bits |= 1 << i;
        Ok(())
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.bits & (1 << i) != 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        *self == Self::full(self.degree())
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.degree()).filter(move |&i| self.contains(i))
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check(other);
        SimpleSubset {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.check(other);
        SimpleSubset {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check(other);
        SimpleSubset {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    /// `S ∖ self`.
    pub fn complement(&self) -> Self {
        Self::full(self.degree()).difference(self)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.bits & !other.bits == 0
    }

    /// Whether all generators in the set commute pairwise, i.e. no two are adjacent.
    pub fn pairwise_commuting(&self) -> bool {
        self.bits & (self.bits >> 1) == 0
    }

    /// Comma-separated indices, `"none"` for ∅.
    pub fn to_arg(&self) -> String {
        if self.is_empty() {
            "none".to_string()
        } else {
            self.iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "subsets of different ambient degree");
    }
}

impl fmt::Display for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for SimpleSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a = SimpleSubset::parse(5, "1,2").unwrap();
        let b = SimpleSubset::parse(5, "2,4").unwrap();
        assert_eq!(a.union(&b).to_arg(), "1,2,4");
        assert_eq!(a.intersection(&b).to_arg(), "2");
        assert_eq!(a.complement().to_arg(), "3,4");
        assert_eq!(a.complement().complement(), a);
        assert_eq!(
            SimpleSubset::parse(5, "none").unwrap(),
            SimpleSubset::empty(5)
        );
        assert_eq!(SimpleSubset::all(4).len(), 8);
        assert_eq!(format!("{a}"), "{1,2}");
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(SimpleSubset::parse(4, "4").is_err());
        assert!(SimpleSubset::parse(4, "0").is_err());
        assert!(SimpleSubset::parse(4, "x").is_err());
    }

    #[test]
    fn commuting_generators() {
        assert!(SimpleSubset::parse(4, "1,3").unwrap().pairwise_commuting());
        assert!(!SimpleSubset::parse(4, "1,2").unwrap().pairwise_commuting());
        assert!(SimpleSubset::empty(4).pairwise_commuting());
    }
}
