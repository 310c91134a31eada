//! Two-sided weak orders from the doubled Richardson–Springer action.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::bruhat::{renner_poset, type_map, IdempotentE, RennerPoset};
use crate::cosets::min_reps;
use crate::error::{Error, Result};
use crate::perm::{symmetric_group, EnumerationLimits, PartialPerm, Permutation, SimpleSubset};
use crate::poset::{AnnotatedCover, FinitePoset, PosetDocument};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    L,
    R,
}

/// Multiplication by `s_index` on one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Move {
    pub side: Side,
    pub s: usize,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.side, self.s)
    }
}

/// A weak-order cover with its generating moves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub lower: usize,
    pub upper: usize,
    /// Left moves first, then right, generators increasing.
    pub moves: Vec<Move>,
    /// 2 when both a left and a right move produce the cover, else 1.
    pub degree: usize,
}

impl CoverEdge {
    fn new(lower: usize, upper: usize, mut moves: Vec<Move>) -> Self {
        moves.sort();
        moves.dedup();
        let left = moves.iter().any(|m| m.side == Side::L);
        let right = moves.iter().any(|m| m.side == Side::R);
        CoverEdge {
            lower,
            upper,
            degree: if left && right { 2 } else { 1 },
            moves,
        }
    }

    /// More than one move on the same side.
    pub fn has_same_side_multiplicity(&self) -> bool {
        let left = self.moves.iter().filter(|m| m.side == Side::L).count();
        left > 1 || self.moves.len() - left > 1
    }
}

/// A weak-order poset with one [`CoverEdge`] per cover, in cover order.
#[derive(Clone, Debug)]
pub struct WeakPoset {
    pub poset: FinitePoset,
    pub edges: Vec<CoverEdge>,
    /// Moves that strictly raise length but do not give a cover.
    pub non_cover_moves: Vec<(usize, usize, Move)>,
}

impl WeakPoset {
    /// `raw` lists `(lower, upper, move)` over element indices that already
    /// form a linear extension.
    fn build(labels: Vec<String>, raw: Vec<(usize, usize, Move)>) -> Result<Self> {
        let mut grouped: BTreeMap<(usize, usize), Vec<Move>> = BTreeMap::new();
        for (x, y, m) in raw {
            grouped.entry((x, y)).or_default().push(m);
        }
        let edges: Vec<(usize, usize)> = grouped.keys().copied().collect();
        let poset = FinitePoset::from_covers(labels, &edges)?;
        if edges.iter().any(|&(x, y)| x > y) {
            return Err(Error::InvalidParameters(
                "weak-order elements are not listed in a linear extension".into(),
            ));
        }
        let mut cover_edges = Vec::with_capacity(poset.covers().len());
        let mut non_cover_moves = Vec::new();
        for (&(x, y), moves) in &grouped {
            if poset.is_cover(x, y) {
                cover_edges.push(CoverEdge::new(x, y, moves.clone()));
            } else {
                non_cover_moves.extend(moves.iter().map(|&m| (x, y, m)));
            }
        }
        cover_edges.sort_by_key(|e| (e.lower, e.upper));
        Ok(WeakPoset {
            poset,
            edges: cover_edges,
            non_cover_moves,
        })
    }

    pub fn edge(&self, x: usize, y: usize) -> Option<&CoverEdge> {
        self.poset.cover_index(x, y).map(|k| &self.edges[k])
    }

    pub fn degree_two_count(&self) -> usize {
        self.edges.iter().filter(|e| e.degree == 2).count()
    }

    pub fn annotations(&self) -> Vec<AnnotatedCover> {
        self.edges
            .iter()
            .map(|e| AnnotatedCover {
                lower: e.lower,
                upper: e.upper,
                degree: e.degree,
                moves: e.moves.iter().map(Move::to_string).collect(),
            })
            .collect()
    }

    /// Serializable document carrying the move annotations.
    pub fn document(&self) -> PosetDocument {
        let mut doc = self.poset.to_document();
        doc.covers_annotated = Some(self.annotations());
        doc
    }
}

/// `(s,1) * x`: `s x` if that is longer, else `x`.
pub fn rs_left(s: usize, x: &Permutation) -> Result<Permutation> {
    let y = x.left_simple(s)?;
    Ok(if y.length() > x.length() {
        y
    } else {
        x.clone()
    })
}

/// `(1,s) * x`: `x s` if that is longer, else `x`.
pub fn rs_right(s: usize, x: &Permutation) -> Result<Permutation> {
    let y = x.right_simple(s)?;
    Ok(if y.length() > x.length() {
        y
    } else {
        x.clone()
    })
}

/// `(s,1) * σ` on the rook monoid, with Renner length.
pub fn rs_left_rook(s: usize, x: &PartialPerm, renner: &RennerPoset) -> Result<PartialPerm> {
    let y = x.left_simple(s)?;
    Ok(if renner.length(&y) > renner.length(x) {
        y
    } else {
        x.clone()
    })
}

/// `(1,s) * σ` on the rook monoid, with Renner length.
pub fn rs_right_rook(s: usize, x: &PartialPerm, renner: &RennerPoset) -> Result<PartialPerm> {
    let y = x.right_simple(s)?;
    Ok(if renner.length(&y) > renner.length(x) {
        y
    } else {
        x.clone()
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeakKind {
    Left,
    Right,
    TwoSided,
}

impl std::str::FromStr for WeakKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" | "l" => Ok(WeakKind::Left),
            "right" | "r" => Ok(WeakKind::Right),
            "lr" | "two-sided" => Ok(WeakKind::TwoSided),
            other => Err(Error::InvalidParameters(format!("unknown side {other:?}"))),
        }
    }
}

fn sides(kind: WeakKind) -> &'static [Side] {
    match kind {
        WeakKind::Left => &[Side::L],
        WeakKind::Right => &[Side::R],
        WeakKind::TwoSided => &[Side::L, Side::R],
    }
}

/// `(S_n, ≤_L)`, `(S_n, ≤_R)` or `(S_n, ≤_LR)`; elements by length, then
/// lexicographically.
pub fn weak_poset_w(n: usize, kind: WeakKind, limits: &EnumerationLimits) -> Result<WeakPoset> {
    let mut elems = symmetric_group(n, limits)?;
    elems.sort_by_key(|w| (w.length(), w.clone()));
    let index: HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut raw = Vec::new();
    for (k, x) in elems.iter().enumerate() {
        for &side in sides(kind) {
            for s in 1..n {
                let y = match side {
                    Side::L => rs_left(s, x)?,
                    Side::R => rs_right(s, x)?,
                };
                if &y != x {
                    raw.push((k, index[&y], Move { side, s }));
                }
            }
        }
    }
    let labels = elems.iter().map(|w| w.to_string()).collect();
    WeakPoset::build(labels, raw)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCounts {
    pub total: usize,
    pub degree_two: usize,
    /// Pairs `(x, i)` with `x_{i+1} = x_i + 1`, counted directly.
    pub small_ascents: usize,
}

/// Cover counts of `(S_n, ≤_LR)`.
pub fn count_covers(n: usize, limits: &EnumerationLimits) -> Result<CoverCounts> {
    let w = weak_poset_w(n, WeakKind::TwoSided, limits)?;
    let small_ascents = symmetric_group(n, limits)?
        .iter()
        .map(|x| x.images().windows(2).filter(|p| p[1] == p[0] + 1).count())
        .sum();
    Ok(CoverCounts {
        total: w.edges.len(),
        degree_two: w.degree_two_count(),
        small_ascents,
    })
}

/// Degree of the cover `(x, y)` in `ambient`.
pub fn cover_degree(ambient: &WeakPoset, x: &str, y: &str) -> Result<usize> {
    let not_cover = || Error::NotACover {
        lower: x.to_string(),
        upper: y.to_string(),
    };
    let xi = ambient.poset.index_of(x).ok_or_else(not_cover)?;
    let yi = ambient.poset.index_of(y).ok_or_else(not_cover)?;
    ambient.edge(xi, yi).map(|e| e.degree).ok_or_else(not_cover)
}

/// `(D_I, ≤_L)`: left moves that stay inside `D_I`. Elements by length.
pub fn left_weak_quotient(i: &SimpleSubset) -> Result<FinitePoset> {
    let d = sorted_min_reps(i)?;
    let index: HashMap<&Permutation, usize> = d.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut edges = Vec::new();
    for (k, a) in d.iter().enumerate() {
        for s in 1..i.degree() {
            let b = a.left_simple(s)?;
            if b.length() > a.length() {
                if let Some(&kb) = index.get(&b) {
                    edges.push((k, kb));
                }
            }
        }
    }
    FinitePoset::from_covers(d.iter().map(|w| w.to_string()).collect(), &edges)
}

/// `(D_I, ≤)`: Bruhat order restricted to `D_I`. Elements by length.
pub fn bruhat_quotient(i: &SimpleSubset) -> Result<FinitePoset> {
    let d = sorted_min_reps(i)?;
    FinitePoset::from_leq(d.iter().map(|w| w.to_string()).collect(), |a, b| {
        d[a].bruhat_leq(&d[b])
    })
}

fn sorted_min_reps(i: &SimpleSubset) -> Result<Vec<Permutation>> {
    let mut d = min_reps(i)?;
    d.sort_by_key(|w| (w.length(), w.clone()));
    Ok(d)
}

/// `(W e_I W, ≤_LR)` for the dual canonical monoid, as pairs `(a, b)` in
/// `D_I × D_I` standing for `a e_I b⁻¹`.
#[derive(Clone, Debug)]
pub struct DcmWeakOrder {
    pub i: SimpleSubset,
    pub pairs: Vec<(Permutation, Permutation)>,
    pub ranks: Vec<usize>,
    pub weak: WeakPoset,
    lattice: std::cell::OnceCell<bool>,
}

impl DcmWeakOrder {
    /// Lattice check on the pair model, computed once.
    pub fn is_lattice(&self) -> bool {
        *self.lattice.get_or_init(|| self.weak.poset.is_lattice())
    }

    /// `(D_I, ≤_L) × (D_I, ≤_L)^op` with matching labels.
    pub fn product_model(&self) -> Result<FinitePoset> {
        let q = left_weak_quotient(&self.i)?;
        Ok(q.product(&q.opposite()))
    }

    /// Whether the pair model has exactly the covers of the product model.
    pub fn matches_product_model(&self) -> Result<bool> {
        let prod = self.product_model()?;
        same_labeled_covers(&self.weak.poset, &prod)
    }
}

/// Covers agree under the label correspondence.
pub fn same_labeled_covers(p: &FinitePoset, q: &FinitePoset) -> Result<bool> {
    if p.len() != q.len() || p.covers().len() != q.covers().len() {
        return Ok(false);
    }
    let mut map = Vec::with_capacity(p.len());
    for l in p.labels() {
        match q.index_of(l) {
            Some(k) => map.push(k),
            None => return Ok(false),
        }
    }
    Ok(p.covers().iter().all(|&(x, y)| q.is_cover(map[x], map[y])))
}

pub fn wew_weak_dcm(i: &SimpleSubset) -> Result<DcmWeakOrder> {
    let n = i.degree();
    let d = sorted_min_reps(i)?;
    let max_len = d.iter().map(Permutation::length).max().unwrap_or(0);
    let mut pairs: Vec<(Permutation, Permutation)> = d
        .iter()
        .flat_map(|a| d.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let rank = |(a, b): &(Permutation, Permutation)| a.length() + max_len - b.length();
    pairs.sort_by(|p, q| {
        rank(p)
            .cmp(&rank(q))
            .then_with(|| p.0.cmp(&q.0))
            .then_with(|| p.1.cmp(&q.1))
    });
    let index: HashMap<&(Permutation, Permutation), usize> =
        pairs.iter().enumerate().map(|(k, p)| (p, k)).collect();
    let in_d: std::collections::HashSet<&Permutation> = d.iter().collect();
    let mut raw = Vec::new();
    for (k, (a, b)) in pairs.iter().enumerate() {
        for s in 1..n {
            let sa = a.left_simple(s)?;
            if sa.length() > a.length() && in_d.contains(&sa) {
                raw.push((k, index[&(sa, b.clone())], Move { side: Side::L, s }));
            }
            let sb = b.left_simple(s)?;
            if sb.length() < b.length() && in_d.contains(&sb) {
                raw.push((k, index[&(a.clone(), sb)], Move { side: Side::R, s }));
            }
        }
    }
    let labels = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    let ranks = pairs.iter().map(rank).collect();
    let weak = WeakPoset::build(labels, raw)?;
    Ok(DcmWeakOrder {
        i: *i,
        pairs,
        ranks,
        weak,
        lattice: std::cell::OnceCell::new(),
    })
}

/// `(W e_i W, ≤_LR)` inside `R_n`, with the BCR order on the same elements.
#[derive(Clone, Debug)]
pub struct MnWeakOrder {
    pub n: usize,
    pub i: usize,
    pub elements: Vec<PartialPerm>,
    pub weak: WeakPoset,
    /// BCR order restricted to the same elements, same indices.
    pub bcr: FinitePoset,
    /// `λ^*(e_i) ≠ ∅`.
    pub lambda_upper_nonempty: bool,
}

impl MnWeakOrder {
    pub fn has_degree_two(&self) -> bool {
        self.weak.degree_two_count() > 0
    }

    /// A degree-2 cover `(x, y)` as labels.
    pub fn degree_two_witness(&self) -> Option<(String, String)> {
        self.weak.edges.iter().find(|e| e.degree == 2).map(|e| {
            (
                self.weak.poset.label(e.lower).to_string(),
                self.weak.poset.label(e.upper).to_string(),
            )
        })
    }
}

pub fn wew_weak_mn(n: usize, i: usize, limits: &EnumerationLimits) -> Result<MnWeakOrder> {
    let renner = renner_poset(n, limits)?;
    wew_weak_mn_with(&renner, i)
}

pub fn wew_weak_mn_with(renner: &RennerPoset, i: usize) -> Result<MnWeakOrder> {
    let n = renner.n;
    let e = IdempotentE::new(n, i)?;
    let mut elements: Vec<PartialPerm> = renner
        .elements
        .iter()
        .filter(|x| x.rank() == i)
        .cloned()
        .collect();
    elements.sort_by_key(|x| (renner.length(x), x.clone()));
    let index: HashMap<&PartialPerm, usize> =
        elements.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut raw = Vec::new();
    for (k, x) in elements.iter().enumerate() {
        for s in 1..n {
            let l = rs_left_rook(s, x, renner)?;
            if &l != x {
                raw.push((k, index[&l], Move { side: Side::L, s }));
            }
            let r = rs_right_rook(s, x, renner)?;
            if &r != x {
                raw.push((k, index[&r], Move { side: Side::R, s }));
            }
        }
    }
    let labels: Vec<String> = elements.iter().map(|x| x.to_string()).collect();
    let weak = WeakPoset::build(labels.clone(), raw)?;
    let bcr = FinitePoset::from_leq(labels, |a, b| {
        crate::bruhat::prefix_dominated(elements[a].images(), elements[b].images())
    })?;
    Ok(MnWeakOrder {
        n,
        i,
        elements,
        weak,
        bcr,
        lambda_upper_nonempty: !type_map(&e).lambda_upper.is_empty(),
    })
}

/// The five conditions of the distributivity corollary for `e_I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DistributivityConditions {
    /// `(WeW, ≤) ≅ (D_I, ≤) × (D_I, ≤)^op` is a lattice.
    pub bruhat_lattice: bool,
    /// … and distributive.
    pub bruhat_distributive: bool,
    /// `(WeW, ≤_LR)` is a distributive lattice.
    pub weak_distributive: bool,
    /// `≤_LR` and `≤` coincide on `WeW`, i.e. `≤_L` and Bruhat agree on `D_I`.
    pub orders_equal: bool,
    /// `D_I` is minuscule: `S∖I` is a single generator.
    pub minuscule: bool,
}

impl DistributivityConditions {
    pub fn all_equivalent(&self) -> bool {
        let v = [
            self.bruhat_lattice,
            self.bruhat_distributive,
            self.weak_distributive,
            self.orders_equal,
            self.minuscule,
        ];
        v.iter().all(|&b| b == v[0])
    }
}

pub fn distributivity_conditions(
    i: &SimpleSubset,
    wew: &DcmWeakOrder,
) -> Result<DistributivityConditions> {
    let bruhat = bruhat_quotient(i)?;
    let bruhat_wew = bruhat.product(&bruhat.opposite());
    let bruhat_lattice = bruhat_wew.is_lattice();
    let bruhat_distributive = bruhat_lattice && bruhat_wew.join_irreducibles_are_prime();
    let weak_distributive = wew.is_lattice() && wew.weak.poset.join_irreducibles_are_prime();
    let left = left_weak_quotient(i)?;
    Ok(DistributivityConditions {
        bruhat_lattice,
        bruhat_distributive,
        weak_distributive,
        orders_equal: left.same_relation(&bruhat),
        minuscule: i.complement().len() == 1,
    })
}
