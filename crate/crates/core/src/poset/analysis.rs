use serde::Serialize;

use super::FinitePoset;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Longest-chain ranks and whether they form a grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    /// Length of the longest chain from a minimal element.
    pub ranks: Vec<usize>,
    pub graded: bool,
    /// Why the poset is not graded, if it is not.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EulerianReport {
    pub eulerian: bool,
    /// A smallest unbalanced interval `[x, y]`, `x < y`, as its element labels.
    pub witness: Option<Vec<String>>,
    pub even: usize,
    pub odd: usize,
}

impl FinitePoset {
    /// Graded means: every cover raises the longest-chain rank by one and all
    /// maximal elements share a rank, so every maximal chain in every interval
    /// has the same length.
    pub fn grading(&self) -> Grading {
        let n = self.len();
        let mut ranks = vec![0usize; n];
        for y in 0..n {
            ranks[y] = self.lower[y]
                .iter()
                .map(|&x| ranks[x] + 1)
                .max()
                .unwrap_or(0);
        }
        let mut witness = None;
        if let Some(&(x, y)) = self.covers.iter().find(|&&(x, y)| ranks[y] != ranks[x] + 1) {
            witness = Some(format!(
                "cover ({}, {}) jumps from rank {} to {}",
                self.labels[x], self.labels[y], ranks[x], ranks[y]
            ));
        } else {
            let maxes = self.maximal_elements();
            if let Some(&m) = maxes.iter().find(|&&m| ranks[m] != ranks[maxes[0]]) {
                witness = Some(format!(
                    "maximal elements {} and {} have ranks {} and {}",
                    self.labels[maxes[0]], self.labels[m], ranks[maxes[0]], ranks[m]
                ));
            }
        }
        Grading {
            ranks,
            graded: witness.is_none(),
            witness,
        }
    }

    pub fn is_graded(&self) -> bool {
        self.grading().graded
    }

    /// Ranks of a graded poset, or a `NotGraded` error.
    pub fn ranks(&self) -> Result<Vec<usize>> {
        let g = self.grading();
        match g.witness {
            None => Ok(g.ranks),
            Some(w) => Err(Error::NotGraded(w)),
        }
    }

    /// Length of the longest chain.
    pub fn height(&self) -> usize {
        self.grading().ranks.into_iter().max().unwrap_or(0)
    }

    pub fn join(&self, x: usize, y: usize) -> Result<usize> {
        let (ux, uy) = (&self.up[x], &self.up[y]);
        match ux.first_common_from(uy, x.max(y)) {
            Some(c) if self.up[c].contains_intersection_from(ux, uy, c) => Ok(c),
            _ => Err(Error::NoJoin(
                self.minimal_of_intersection(&self.up[x], &self.up[y]),
            )),
        }
    }

    pub fn meet(&self, x: usize, y: usize) -> Result<usize> {
        let candidate = self.down[x].last_common(&self.down[y]);
        match candidate {
            Some(c) if self.down[c].contains_intersection(&self.down[x], &self.down[y]) => Ok(c),
            _ => Err(Error::NoMeet(
                self.maximal_of_intersection(&self.down[x], &self.down[y]),
            )),
        }
    }

    fn minimal_of_intersection(&self, a: &BitSet, b: &BitSet) -> Vec<usize> {
        let mut common = a.clone();
        common.intersect_with(b);
        common
            .iter()
            .filter(|&u| self.down[u].intersection_count(&common) == 1)
            .collect()
    }

    fn maximal_of_intersection(&self, a: &BitSet, b: &BitSet) -> Vec<usize> {
        let mut common = a.clone();
        common.intersect_with(b);
        common
            .iter()
            .filter(|&u| self.up[u].intersection_count(&common) == 1)
            .collect()
    }

    /// A finite poset with a minimum in which every pair has a join is a lattice.
    pub fn is_lattice(&self) -> bool {
        self.lattice_witness().is_none()
    }

    /// An incomparable pair without a join, or `None` for a lattice. The empty
    /// poset is not a lattice; a poset without a minimum reports its first two
    /// minimal elements.
    pub fn lattice_witness(&self) -> Option<(usize, usize)> {
        let n = self.len();
        if n == 0 {
            return Some((0, 0));
        }
        let mins = self.minimal_elements();
        if mins.len() > 1 {
            return Some((mins[0], mins[1]));
        }
        for x in 0..n {
            for y in x + 1..n {
                if self.up[x].contains(y) {
                    continue;
                }
                let (ux, uy) = (&self.up[x], &self.up[y]);
                let ok = match ux.first_common_from(uy, y) {
                    Some(c) => self.up[c].contains_intersection_from(ux, uy, c),
                    None => false,
                };
                if !ok {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// Every join-irreducible `j` is join-prime: `{x : j ≰ x}` has a maximum.
    pub fn is_distributive(&self) -> Result<bool> {
        if !self.is_lattice() {
            return Err(Error::NotALattice);
        }
        Ok(self.join_irreducibles_are_prime())
    }

    /// The join-prime test alone, for posets already known to be lattices.
    pub(crate) fn join_irreducibles_are_prime(&self) -> bool {
        let n = self.len();
        let full = BitSet::full(n);
        for j in 0..n {
            if self.lower[j].len() != 1 {
                continue;
            }
            let mut rest = full.clone();
            rest.difference_with(&self.up[j]);
            let m = rest
                .last_common(&full)
                .expect("the minimum lies outside up(j)");
            if !rest.is_subset(&self.down[m]) {
                return false;
            }
        }
        true
    }

    /// Direct check of `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over all triples.
    pub fn is_distributive_by_triples(&self) -> Result<bool> {
        if !self.is_lattice() {
            return Err(Error::NotALattice);
        }
        let n = self.len();
        let mut joins = vec![0usize; n * n];
        let mut meets = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                joins[x * n + y] = self.join(x, y)?;
                meets[x * n + y] = self.meet(x, y)?;
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = meets[x * n + joins[y * n + z]];
                    let rhs = joins[meets[x * n + y] * n + meets[x * n + z]];
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Every interval `[x, y]` with `x < y` has as many elements of even rank
    /// as of odd rank.
    pub fn eulerian(&self) -> Result<EulerianReport> {
        let ranks = self.ranks()?;
        let n = self.len();
        let mut even = BitSet::new(n);
        for (x, &r) in ranks.iter().enumerate() {
            if r % 2 == 0 {
                even.insert(x);
            }
        }
        let mut best: Option<(usize, usize, usize, usize)> = None;
        for x in 0..n {
            let mut evens_above = self.up[x].clone();
            evens_above.intersect_with(&even);
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let size = self.up[x].intersection_count(&self.down[y]);
                let e = evens_above.intersection_count(&self.down[y]);
                if 2 * e != size && best.is_none_or(|(bs, ..)| size < bs) {
                    best = Some((size, x, y, e));
                }
            }
        }
        Ok(match best {
            None => EulerianReport {
                eulerian: true,
                witness: None,
                even: 0,
                odd: 0,
            },
            Some((size, x, y, e)) => EulerianReport {
                eulerian: false,
                witness: Some(
                    self.interval(x, y)
                        .into_iter()
                        .map(|z| self.labels[z].clone())
                        .collect(),
                ),
                even: e,
                odd: size - e,
            },
        })
    }

    pub fn is_eulerian(&self) -> Result<bool> {
        Ok(self.eulerian()?.eulerian)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset(n: usize, edges: &[(usize, usize)]) -> FinitePoset {
        FinitePoset::from_covers((0..n).map(|i| i.to_string()).collect(), edges).unwrap()
    }

    fn diamond_m3() -> FinitePoset {
        poset(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    }

    fn bowtie() -> FinitePoset {
        poset(4, &[(0, 2), (0, 3), (1, 2), (1, 3)])
    }

    #[test]
    fn boolean_lattice_graded() {
        let g = FinitePoset::boolean_lattice(3).grading();
        assert!(g.graded);
        assert_eq!(*g.ranks.iter().max().unwrap(), 3);
    }

    #[test]
    fn glued_chain_not_graded() {
        let p = poset(4, &[(0, 1), (0, 2), (2, 3)]);
        let g = p.grading();
        assert!(!g.graded);
        assert!(g.witness.unwrap().contains("maximal elements"));
        let q = poset(4, &[(0, 1), (1, 2), (0, 3), (3, 2), (0, 2)]);
        assert!(q.is_graded());
        let r = poset(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)]);
        assert!(r.grading().witness.unwrap().contains("jumps"));
    }

    #[test]
    fn lattice_checks() {
        assert!(FinitePoset::boolean_lattice(3).is_lattice());
        assert!(!bowtie().is_lattice());
        assert!(diamond_m3().is_lattice());
        let b = bowtie();
        assert_eq!(b.join(0, 1), Err(Error::NoJoin(vec![2, 3])));
        assert_eq!(b.meet(2, 3), Err(Error::NoMeet(vec![0, 1])));
        let b3 = FinitePoset::boolean_lattice(3);
        assert_eq!(b3.join(1, 2).unwrap(), 3);
        assert_eq!(b3.meet(3, 6).unwrap(), 2);
    }

    #[test]
    fn distributivity() {
        assert!(FinitePoset::boolean_lattice(3).is_distributive().unwrap());
        assert!(!diamond_m3().is_distributive().unwrap());
        let n5 = poset(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]);
        assert!(!n5.is_distributive().unwrap());
        let grid = FinitePoset::chain(3).product(&FinitePoset::chain(4));
        assert!(grid.is_distributive().unwrap());
        assert_eq!(bowtie().is_distributive(), Err(Error::NotALattice));
        for p in [diamond_m3(), n5, grid] {
            assert_eq!(p.is_distributive(), p.is_distributive_by_triples());
        }
    }

    #[test]
    fn eulerian_checks() {
        assert!(FinitePoset::boolean_lattice(2).is_eulerian().unwrap());
        let rep = FinitePoset::chain(3).eulerian().unwrap();
        assert!(!rep.eulerian);
        assert_eq!(rep.witness.unwrap().len(), 3);
        assert_eq!((rep.even, rep.odd), (2, 1));
        let ng = poset(4, &[(0, 1), (0, 2), (2, 3)]);
        assert!(matches!(ng.is_eulerian(), Err(Error::NotGraded(_))));
    }
}
