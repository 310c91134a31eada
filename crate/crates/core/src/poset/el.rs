//! EL-labelings: verification and bounded backtracking search.
//!
//! A labeling assigns a label in `1..=k` to every cover (indexed like
//! [`FinitePoset::covers`]). It is an EL-labeling when every interval `[x, y]`
//! with `x < y` has exactly one maximal chain with weakly increasing labels
//! and that chain's label sequence is lexicographically first.

use serde::Serialize;

use super::FinitePoset;
use crate::error::{Error, Result};

pub const DEFAULT_EL_BUDGET: u64 = 1_000_000;

/// The first interval violating the EL conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElFailure {
    pub bottom: String,
    pub top: String,
    /// Number of weakly increasing maximal chains, saturated at 2.
    pub increasing_chains: usize,
    /// Lexicographically first label sequence of the interval.
    pub lex_first: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElSearchOutcome {
    Found(Vec<u32>),
    /// The search space for labels in `1..=bound` was exhausted. `interval`
    /// names an interval that alone admits no labeling, when one was isolated.
    NoneForLabels {
        bound: u32,
        interval: Option<(String, String)>,
    },
    BudgetExceeded {
        nodes: u64,
    },
}

impl FinitePoset {
    fn check_labels_len(&self, labels: &[u32]) -> Result<()> {
        if self.bottom().is_none() || self.top().is_none() {
            return Err(Error::Unbounded);
        }
        if labels.len() != self.covers.len() {
            return Err(Error::InvalidParameters(format!(
                "{} labels for {} covers",
                labels.len(),
                self.covers.len()
            )));
        }
        Ok(())
    }

    /// `None` when `labels` is an EL-labeling, otherwise the first failing interval.
    pub fn el_check(&self, labels: &[u32]) -> Result<Option<ElFailure>> {
        self.check_labels_len(labels)?;
        let n = self.len();
        for x in 0..n {
            let counts = self.increasing_chain_counts(x, labels);
            for y in self.up[x].iter() {
                if y == x {
                    continue;
                }
                let k = counts[y].iter().map(|&(_, c)| c).sum::<usize>().min(2);
                let lex = self.lex_first(x, y, labels);
                if k != 1 || !is_weakly_increasing(&lex) {
                    return Ok(Some(ElFailure {
                        bottom: self.labels[x].clone(),
                        top: self.labels[y].clone(),
                        increasing_chains: k,
                        lex_first: lex,
                    }));
                }
            }
        }
        Ok(None)
    }

    pub fn is_el_labeling(&self, labels: &[u32]) -> Result<bool> {
        Ok(self.el_check(labels)?.is_none())
    }

    /// For each `z ≥ x`, the weakly increasing saturated chains from `x` to
    /// `z` grouped by last label, with counts saturated at 2.
    fn increasing_chain_counts(&self, x: usize, labels: &[u32]) -> Vec<Vec<(u32, usize)>> {
        let mut counts: Vec<Vec<(u32, usize)>> = vec![Vec::new(); self.len()];
        for z in self.up[x].iter() {
            if z == x {
                continue;
            }
            let mut acc: Vec<(u32, usize)> = Vec::new();
            for &c in &self.lower[z] {
                if !self.up[x].contains(c) {
                    continue;
                }
                let l = labels[self.cover_index(c, z).expect("cover")];
                let through = if c == x {
                    1
                } else {
                    counts[c]
                        .iter()
                        .filter(|&&(l2, _)| l2 <= l)
                        .map(|&(_, k)| k)
                        .sum::<usize>()
                        .min(2)
                };
                if through == 0 {
                    continue;
                }
                match acc.iter_mut().find(|(l2, _)| *l2 == l) {
                    Some(entry) => entry.1 = (entry.1 + through).min(2),
                    None => acc.push((l, through)),
                }
            }
            counts[z] = acc;
        }
        counts
    }

    /// Lexicographically first label sequence among maximal chains of `[x, y]`,
    /// a proper prefix counting as smaller.
    fn lex_first(&self, x: usize, y: usize, labels: &[u32]) -> Vec<u32> {
        let mut frontier = vec![x];
        let mut seq = Vec::new();
        while !frontier.contains(&y) {
            let mut best = u32::MAX;
            let mut next = Vec::new();
            for &f in &frontier {
                for &g in &self.upper[f] {
                    if !self.down[y].contains(g) {
                        continue;
                    }
                    let l = labels[self.cover_index(f, g).expect("cover")];
                    if l < best {
                        best = l;
                        next.clear();
                    }
                    if l == best && !next.contains(&g) {
                        next.push(g);
                    }
                }
            }
            seq.push(best);
            frontier = next;
        }
        seq
    }

    fn interval_ok(&self, x: usize, y: usize, labels: &[u32]) -> bool {
        let mut counts: Vec<(usize, Vec<(u32, usize)>)> = Vec::new();
        let elems = self.interval(x, y);
        let slot = |counts: &Vec<(usize, Vec<(u32, usize)>)>, z: usize| {
            counts.iter().position(|(w, _)| *w == z)
        };
        for &z in &elems[1..] {
            let mut acc: Vec<(u32, usize)> = Vec::new();
            for &c in &self.lower[z] {
                if !self.up[x].contains(c) {
                    continue;
                }
                let l = labels[self.cover_index(c, z).expect("cover")];
                let through = if c == x {
                    1
                } else {
                    let i = slot(&counts, c).expect("processed earlier");
                    counts[i]
                        .1
                        .iter()
                        .filter(|&&(l2, _)| l2 <= l)
                        .map(|&(_, k)| k)
                        .sum::<usize>()
                        .min(2)
                };
                if through == 0 {
                    continue;
                }
                match acc.iter_mut().find(|(l2, _)| *l2 == l) {
                    Some(entry) => entry.1 = (entry.1 + through).min(2),
                    None => acc.push((l, through)),
                }
            }
            counts.push((z, acc));
        }
        let total: usize = counts
            .last()
            .map(|(_, v)| v.iter().map(|&(_, k)| k).sum())
            .unwrap_or(0);
        total == 1 && is_weakly_increasing(&self.lex_first(x, y, labels))
    }

    /// For a lattice: label `(x, y)` by the least index of a join-irreducible
    /// `j` with `j ≤ y` and `j ≰ x`.
    pub fn join_irreducible_labeling(&self) -> Option<Vec<u32>> {
        if !self.is_lattice() {
            return None;
        }
        let irreducible: Vec<usize> = (0..self.len())
            .filter(|&j| self.lower[j].len() == 1)
            .collect();
        self.covers
            .iter()
            .map(|&(x, y)| {
                irreducible
                    .iter()
                    .position(|&j| self.leq(j, y) && !self.leq(j, x))
                    .map(|p| p as u32 + 1)
            })
            .collect()
    }

    /// Searches for an EL-labeling with labels in `1..=bound`, visiting at
    /// most `budget` nodes in total.
    pub fn el_search(&self, bound: u32, budget: u64) -> Result<ElSearchOutcome> {
        if self.bottom().is_none() || self.top().is_none() {
            return Err(Error::Unbounded);
        }
        let mut spent = 0u64;
        if let Some(out) = self.small_interval_obstruction(bound, budget, &mut spent) {
            return Ok(out);
        }
        if let Some(seed) = self.join_irreducible_labeling() {
            if seed.iter().all(|&l| l <= bound) && self.is_el_labeling(&seed)? {
                return Ok(ElSearchOutcome::Found(seed));
            }
        }
        Ok(match backtrack(self, bound, budget.saturating_sub(spent)) {
            Backtrack::Found(l) => ElSearchOutcome::Found(l),
            Backtrack::Exhausted(_) => ElSearchOutcome::NoneForLabels {
                bound,
                interval: None,
            },
            Backtrack::Budget(nodes) => ElSearchOutcome::BudgetExceeded {
                nodes: nodes + spent,
            },
        })
    }

    /// Runs the exhaustive search on each small non-chain interval in
    /// isolation; one without a labeling rules out the whole poset.
    fn small_interval_obstruction(
        &self,
        bound: u32,
        budget: u64,
        spent: &mut u64,
    ) -> Option<ElSearchOutcome> {
        const MAX_SIZE: usize = 8;
        let mut seen: Vec<FinitePoset> = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                let size = self.up[x].intersection_count(&self.down[y]);
                if y == x || size > MAX_SIZE || size == self.len() {
                    continue;
                }
                let sub = self.restrict(&self.interval(x, y));
                if sub.covers.len() + 1 == sub.len() {
                    continue;
                }
                if seen.iter().any(|q| sub.are_isomorphic(q).is_some()) {
                    continue;
                }
                let remaining = budget.saturating_sub(*spent);
                match backtrack(&sub, bound, remaining) {
                    Backtrack::Found(_) => {}
                    Backtrack::Exhausted(nodes) => {
                        *spent += nodes;
                        return Some(ElSearchOutcome::NoneForLabels {
                            bound,
                            interval: Some((self.labels[x].clone(), self.labels[y].clone())),
                        });
                    }
                    Backtrack::Budget(_) => return None,
                }
                seen.push(sub);
            }
        }
        None
    }
}

enum Backtrack {
    Found(Vec<u32>),
    Exhausted(u64),
    Budget(u64),
}

/// Assigns labels cover by cover, grouped by upper element in index order.
/// After each assignment, checks every interval `[x, y]` whose covers are
/// now all labeled.
fn backtrack(p: &FinitePoset, bound: u32, budget: u64) -> Backtrack {
    let mut order: Vec<usize> = Vec::with_capacity(p.covers.len());
    let mut checks: Vec<Vec<(usize, usize)>> = Vec::with_capacity(p.covers.len());
    for y in 0..p.len() {
        let lowers = &p.lower[y];
        let start = order.len();
        for &c in lowers {
            order.push(p.cover_index(c, y).expect("cover"));
            checks.push(Vec::new());
        }
        for x in p.down[y].iter() {
            if x == y {
                continue;
            }
            let last = lowers
                .iter()
                .rposition(|&c| p.up[x].contains(c))
                .expect("some lower cover of y lies above x");
            checks[start + last].push((x, y));
        }
    }
    let m = order.len();
    if m == 0 {
        return Backtrack::Found(Vec::new());
    }
    let mut labels = vec![0u32; m];
    let mut nodes = 0u64;
    let mut pos = 0usize;
    loop {
        let c = order[pos];
        labels[c] += 1;
        if labels[c] > bound {
            labels[c] = 0;
            if pos == 0 {
                return Backtrack::Exhausted(nodes);
            }
            pos -= 1;
            continue;
        }
        nodes += 1;
        if nodes > budget {
            return Backtrack::Budget(nodes);
        }
        if checks[pos]
            .iter()
            .all(|&(x, y)| p.interval_ok(x, y, &labels))
        {
            pos += 1;
            if pos == m {
                return Backtrack::Found(labels);
            }
        }
    }
}

fn is_weakly_increasing(seq: &[u32]) -> bool {
    seq.windows(2).all(|w| w[0] <= w[1])
}
