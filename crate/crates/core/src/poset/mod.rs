//! Finite posets stored as up/down reachability bit sets plus Hasse covers.
//!
//! Element indices always form a linear extension (`x < y` implies index
//! `x < y`). Constructors keep the caller's order when it already is one and
//! otherwise apply a stable topological sort.

mod analysis;
mod el;
mod iso;
mod serial;

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use analysis::{EulerianReport, Grading};
pub use el::{ElFailure, ElSearchOutcome, DEFAULT_EL_BUDGET};
pub use iso::Isomorphism;
pub use serial::{AnnotatedCover, ElementRecord, Format, PosetDocument, Properties};

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
}

impl PartialEq for FinitePoset {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.up == other.up
    }
}

impl Eq for FinitePoset {}

impl FinitePoset {
    /// Builds a poset from an order oracle on `0..labels.len()`, checking the
    /// partial-order axioms. A violation names a witnessing triple.
    pub fn from_leq(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![BitSet::new(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.insert(y);
                }
            }
        }
        for x in 0..n {
            if !up[x].contains(x) {
                return Err(Error::NotPartialOrder(format!(
                    "not reflexive at {}",
                    labels[x]
                )));
            }
            for y in up[x].iter() {
                if y != x && up[y].contains(x) {
                    return Err(Error::NotPartialOrder(format!(
                        "antisymmetry fails for ({}, {})",
                        labels[x], labels[y]
                    )));
                }
                if !up[y].is_subset(&up[x]) {
                    let mut extra = up[y].clone();
                    extra.difference_with(&up[x]);
                    let z = extra.iter().next().expect("nonempty difference");
                    return Err(Error::NotPartialOrder(format!(
                        "transitivity fails for ({}, {}, {})",
                        labels[x], labels[y], labels[z]
                    )));
                }
            }
        }
        let order = topological_order(n, |x| up[x].iter().filter(move |&y| y != x))?;
        Ok(Self::from_up_sets(labels, up, &order))
    }

    /// Builds the poset generated by `edges` (each `(x, y)` meaning `x < y`),
    /// i.e. their reflexive-transitive closure. Edges need not be covers.
    pub fn from_covers(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        for &(x, y) in edges {
            if x >= n || y >= n {
                return Err(Error::IndexOutOfRange { index: x.max(y), n });
            }
            if x == y {
                return Err(Error::NotPartialOrder(format!("loop at {}", labels[x])));
            }
            succ[x].push(y);
        }
        let order = topological_order(n, |x| succ[x].iter().copied())?;
        let mut up = vec![BitSet::new(n); n];
        for &x in order.iter().rev() {
            let mut row = BitSet::new(n);
            row.insert(x);
            for &y in &succ[x] {
                row.union_with(&up[y]);
            }
            up[x] = row;
        }
        Ok(Self::from_up_sets(labels, up, &order))
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<BitSet>, order: &[usize]) -> Self {
        let n = labels.len();
        let identity = order.iter().enumerate().all(|(k, &x)| k == x);
        let (labels, up) = if identity {
            (labels, up)
        } else {
            let mut pos = vec![0; n];
            for (k, &x) in order.iter().enumerate() {
                pos[x] = k;
            }
            let new_labels = order.iter().map(|&x| labels[x].clone()).collect();
            let new_up = order
                .iter()
                .map(|&x| {
                    let mut row = BitSet::new(n);
                    for y in up[x].iter() {
                        row.insert(pos[y]);
                    }
                    row
                })
                .collect();
            (new_labels, new_up)
        };
        Self::assemble(labels, up)
    }

    /// `up` must be a reflexive, transitive, antisymmetric relation whose
    /// index order is a linear extension.
    fn assemble(labels: Vec<String>, up: Vec<BitSet>) -> Self {
        let n = labels.len();
        let mut down = vec![BitSet::new(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        let mut covers = Vec::new();
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for x in 0..n {
            let mut reached = BitSet::new(n);
            for y in up[x].iter() {
                if y != x && !reached.contains(y) {
                    reached.union_with(&up[y]);
                    covers.push((x, y));
                    upper[x].push(y);
                    lower[y].push(x);
                }
            }
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            index.entry(l.clone()).or_insert(i);
        }
        FinitePoset {
            labels,
            index,
            up,
            down,
            covers,
            upper,
            lower,
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.up[x].contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{y : x ≤ y}`.
    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    /// `{y : y ≤ x}`.
    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    /// Cover pairs `(x, y)` with `y` covering `x`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.upper[x].binary_search(&y).is_ok()
    }

    /// Position of the cover `(x, y)` in [`covers`](Self::covers).
    pub fn cover_index(&self, x: usize, y: usize) -> Option<usize> {
        self.covers.binary_search(&(x, y)).ok()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.lower[x].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| self.upper[x].is_empty())
            .collect()
    }

    /// The unique minimum, if any.
    pub fn bottom(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    /// The unique maximum, if any.
    pub fn top(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    /// Elements of the closed interval `[x, y]`, increasing.
    pub fn interval(&self, x: usize, y: usize) -> Vec<usize> {
        let mut s = self.up[x].clone();
        s.intersect_with(&self.down[y]);
        s.iter().collect()
    }

    /// The induced subposet on `keep` (given in increasing order).
    pub fn restrict(&self, keep: &[usize]) -> FinitePoset {
        let m = keep.len();
        let labels = keep.iter().map(|&x| self.labels[x].clone()).collect();
        let up = keep
            .iter()
            .map(|&x| {
                let mut row = BitSet::new(m);
                for (j, &y) in keep.iter().enumerate() {
                    if self.up[x].contains(y) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let order: Vec<usize> = if keep.windows(2).all(|w| w[0] < w[1]) {
            (0..m).collect()
        } else {
            let mut idx: Vec<usize> = (0..m).collect();
            idx.sort_by_key(|&j| keep[j]);
            idx
        };
        Self::from_up_sets(labels, up, &order)
    }

    /// Same elements (by index) and same order relation.
    pub fn same_relation(&self, other: &FinitePoset) -> bool {
        self.len() == other.len() && self.up == other.up
    }

    /// Order reversal. Index `i` becomes `n - 1 - i` so the index order stays a
    /// linear extension.
    pub fn opposite(&self) -> FinitePoset {
        let n = self.len();
        let labels = self.labels.iter().rev().cloned().collect();
        let up = (0..n)
            .map(|i| {
                let x = n - 1 - i;
                let mut row = BitSet::new(n);
                for y in self.down[x].iter() {
                    row.insert(n - 1 - y);
                }
                row
            })
            .collect();
        Self::assemble(labels, up)
    }

    /// Componentwise order on `P × Q`; `(a, b)` has index `a·|Q| + b` and
    /// label `"(a,b)"`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let (p, q) = (self.len(), other.len());
        let mut labels = Vec::with_capacity(p * q);
        for a in 0..p {
            for b in 0..q {
                labels.push(format!("({},{})", self.labels[a], other.labels[b]));
            }
        }
        let up = (0..p * q)
            .map(|i| {
                let (a, b) = (i / q, i % q);
                let mut row = BitSet::new(p * q);
                for a2 in self.up[a].iter() {
                    for b2 in other.up[b].iter() {
                        row.insert(a2 * q + b2);
                    }
                }
                row
            })
            .collect();
        Self::assemble(labels, up)
    }

    /// A chain `0 < 1 < … < k-1`.
    pub fn chain(k: usize) -> FinitePoset {
        let labels = (0..k).map(|i| i.to_string()).collect();
        let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
        Self::from_covers(labels, &edges).expect("a chain is acyclic")
    }

    pub fn antichain(k: usize) -> FinitePoset {
        Self::from_covers((0..k).map(|i| i.to_string()).collect(), &[]).expect("no edges")
    }

    /// Subsets of `{0..k-1}` under inclusion, indexed by bitmask.
    pub fn boolean_lattice(k: usize) -> FinitePoset {
        let n = 1usize << k;
        let labels = (0..n).map(|m| format!("{m:0k$b}")).collect();
        let mut edges = Vec::new();
        for m in 0..n {
            for b in 0..k {
                if m & (1 << b) == 0 {
                    edges.push((m, m | (1 << b)));
                }
            }
        }
        Self::from_covers(labels, &edges).expect("acyclic")
    }
}

/// Stable Kahn sort: among available elements, the smallest index goes first.
fn topological_order<I>(n: usize, succ: impl Fn(usize) -> I) -> Result<Vec<usize>>
where
    I: Iterator<Item = usize>,
{
    let mut indeg = vec![0usize; n];
    for x in 0..n {
        for y in succ(x) {
            indeg[y] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = heap.pop() {
        order.push(x);
        for y in succ(x) {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                heap.push(Reverse(y));
            }
        }
    }
    if order.len() != n {
        let stuck = (0..n)
            .find(|&x| indeg[x] > 0)
            .expect("some element on a cycle");
        return Err(Error::NotPartialOrder(format!(
            "cycle through element {stuck}"
        )));
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn chain_and_antichain_covers() {
        assert_eq!(FinitePoset::chain(3).covers(), &[(0, 1), (1, 2)]);
        assert!(FinitePoset::antichain(3).covers().is_empty());
    }

    #[test]
    fn from_leq_divisibility() {
        let vals = [1usize, 2, 3, 4, 6, 12];
        let p = FinitePoset::from_leq(labels(6), |x, y| vals[y] % vals[x] == 0).unwrap();
        assert_eq!(p.covers().len(), 7);
        assert_eq!(p.bottom(), Some(0));
        assert_eq!(p.top(), Some(5));
    }

    #[test]
    fn from_leq_rejects_non_orders() {
        let err = FinitePoset::from_leq(labels(3), |x, y| {
            x == y || (x, y) == (0, 1) || (x, y) == (1, 2)
        })
        .unwrap_err();
        assert!(
            err.to_string().contains("transitivity fails for (0, 1, 2)"),
            "{err}"
        );
        let err = FinitePoset::from_leq(labels(2), |_, _| true).unwrap_err();
        assert!(err.to_string().contains("antisymmetry"));
        let err = FinitePoset::from_covers(labels(2), &[(0, 1), (1, 0)]).unwrap_err();
        assert!(err.to_string().contains("cycle"));
    }

    #[test]
    fn reorders_to_linear_extension() {
        let p = FinitePoset::from_covers(labels(3), &[(2, 0), (0, 1)]).unwrap();
        assert_eq!(p.labels(), &["2", "0", "1"]);
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn non_cover_edges_are_reduced() {
        let p = FinitePoset::from_covers(labels(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
    }

    #[test]
    fn opposite_and_product() {
        let b2 = FinitePoset::boolean_lattice(2);
        assert_eq!(b2.opposite().opposite(), b2);
        let sq = FinitePoset::chain(2).product(&FinitePoset::chain(2));
        assert!(sq.same_relation(&b2) || sq.covers().len() == 4);
        let pt = FinitePoset::chain(1);
        assert!(b2.product(&pt).same_relation(&b2));
    }

    #[test]
    fn restriction_and_interval() {
        let b3 = FinitePoset::boolean_lattice(3);
        assert_eq!(b3.interval(0, 3), vec![0, 1, 2, 3]);
        let r = b3.restrict(&[0, 3, 7]);
        assert_eq!(r.covers(), &[(0, 1), (1, 2)]);
    }
}
