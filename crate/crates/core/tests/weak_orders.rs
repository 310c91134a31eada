use std::collections::{BTreeSet, HashSet};

use renner_core::bruhat::renner_poset;
use renner_core::perm::symmetric_group;
use renner_core::weak::{
    bruhat_quotient, count_covers, cover_degree, distributivity_conditions, left_weak_quotient,
    rs_left, rs_right, weak_poset_w, wew_weak_dcm, wew_weak_mn_with, Side, WeakKind,
};
use renner_core::{EnumerationLimits, Error, FinitePoset, Permutation, SimpleSubset};

fn lim() -> EnumerationLimits {
    EnumerationLimits::default()
}

/// Pairs of positions `i < j` with `w_i > w_j`.
fn position_inversions(w: &Permutation) -> HashSet<(usize, usize)> {
    let v = w.images();
    let mut out = HashSet::new();
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                out.insert((i, j));
            }
        }
    }
    out
}

fn value_inversions(w: &Permutation) -> HashSet<(usize, usize)> {
    position_inversions(&w.inverse())
}

fn relation(p: &FinitePoset) -> HashSet<(String, String)> {
    let mut out = HashSet::new();
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(x, y) {
                out.insert((p.label(x).to_string(), p.label(y).to_string()));
            }
        }
    }
    out
}

#[test]
fn one_sided_orders_match_inversion_sets() {
    let group = symmetric_group(4, &lim()).unwrap();
    let left = weak_poset_w(4, WeakKind::Left, &lim()).unwrap().poset;
    let right = weak_poset_w(4, WeakKind::Right, &lim()).unwrap().poset;
    for u in &group {
        for v in &group {
            let (lu, lv) = (u.to_string(), v.to_string());
            let l = left.leq(left.index_of(&lu).unwrap(), left.index_of(&lv).unwrap());
            let r = right.leq(right.index_of(&lu).unwrap(), right.index_of(&lv).unwrap());
            assert_eq!(
                l,
                position_inversions(u).is_subset(&position_inversions(v)),
                "{u} <=_L {v}"
            );
            assert_eq!(
                r,
                value_inversions(u).is_subset(&value_inversions(v)),
                "{u} <=_R {v}"
            );
        }
    }
}

#[test]
fn two_sided_contains_both_sides() {
    let lr = relation(&weak_poset_w(4, WeakKind::TwoSided, &lim()).unwrap().poset);
    let l = relation(&weak_poset_w(4, WeakKind::Left, &lim()).unwrap().poset);
    let r = relation(&weak_poset_w(4, WeakKind::Right, &lim()).unwrap().poset);
    assert!(l.is_subset(&lr) && r.is_subset(&lr));
    assert!(lr.len() > l.union(&r).count());
}

#[test]
fn richardson_springer_action() {
    for w in symmetric_group(4, &lim()).unwrap() {
        for s in 1..4 {
            let l = rs_left(s, &w).unwrap();
            let r = rs_right(s, &w).unwrap();
            assert!(l.length() >= w.length() && l.length() <= w.length() + 1);
            assert_eq!(rs_left(s, &l).unwrap(), l);
            assert_eq!(rs_right(s, &r).unwrap(), r);
        }
    }
}

#[test]
fn cover_counts_follow_the_formula() {
    for d in 2..=6usize {
        let n = d - 1;
        let fact: usize = (1..=n).product();
        let c = count_covers(d, &lim()).unwrap();
        assert_eq!((c.total, c.degree_two), (n * n * fact, n * fact), "S_{d}");
        assert_eq!(c.small_ascents, c.degree_two);
    }
}

#[test]
fn doubled_covers_are_small_ascents_in_s5() {
    let w = weak_poset_w(5, WeakKind::TwoSided, &lim()).unwrap();
    let doubled: BTreeSet<(String, String)> = w
        .edges
        .iter()
        .filter(|e| e.degree == 2)
        .map(|e| (w.poset.label(e.lower).into(), w.poset.label(e.upper).into()))
        .collect();
    let mut ascents = BTreeSet::new();
    for x in symmetric_group(5, &lim()).unwrap() {
        let v = x.images();
        for i in 0..4 {
            if v[i + 1] == v[i] + 1 {
                let mut y = v.to_vec();
                y.swap(i, i + 1);
                ascents.insert((
                    x.to_string(),
                    Permutation::from_images(y).unwrap().to_string(),
                ));
            }
        }
    }
    assert_eq!(doubled, ascents);
    for e in &w.edges {
        assert!(!e.has_same_side_multiplicity());
        let sides: HashSet<Side> = e.moves.iter().map(|m| m.side).collect();
        assert_eq!(e.degree, sides.len());
    }
}

#[test]
fn figure_two_degrees() {
    let w = weak_poset_w(4, WeakKind::TwoSided, &lim()).unwrap();
    assert_eq!(w.degree_two_count(), 18);
    let (lo, hi) = (
        w.poset.index_of("1234").unwrap(),
        w.poset.index_of("2134").unwrap(),
    );
    let k = w.poset.cover_index(lo, hi);
    let moves: Vec<String> = w.edges[k.unwrap()]
        .moves
        .iter()
        .map(|m| m.to_string())
        .collect();
    assert_eq!(moves, ["L1", "R1"]);
    assert_eq!(cover_degree(&w, "1243", "1342").unwrap(), 1);
    assert!(matches!(
        cover_degree(&w, "1234", "1234"),
        Err(Error::NotACover { .. })
    ));
    let doc = w.document();
    assert_eq!(doc.covers_annotated.as_ref().unwrap().len(), 54);
    assert!(doc
        .to_json()
        .contains(&format!(r#"[{lo},{hi},2,"L1","R1"]"#)));
    assert_eq!(doc.to_dot().matches("penwidth=2").count(), 18);
}

#[test]
fn dual_canonical_pair_model() {
    for n in 2..=4 {
        for i in SimpleSubset::all(n) {
            let wew = wew_weak_dcm(&i).unwrap();
            let d = left_weak_quotient(&i).unwrap();
            assert_eq!(wew.weak.poset.len(), d.len() * d.len());
            assert!(wew.matches_product_model().unwrap());
            assert!(wew.is_lattice());
            assert!(wew.weak.edges.iter().all(|e| e.degree == 1));
            let g = wew.weak.poset.grading();
            assert!(g.graded);
            assert_eq!(g.ranks, wew.ranks);
        }
    }
}

#[test]
fn distributivity_corollary_in_s4() {
    for i in SimpleSubset::all(4).into_iter().filter(|i| !i.is_full()) {
        let wew = wew_weak_dcm(&i).unwrap();
        let c = distributivity_conditions(&i, &wew).unwrap();
        assert!(c.all_equivalent(), "I={i}: {c:?}");
        assert_eq!(c.bruhat_lattice, i.complement().len() == 1, "I={i}");
        let prod = left_weak_quotient(&i).unwrap();
        let prod = prod.product(&prod.opposite());
        if c.weak_distributive {
            assert!(prod.is_distributive_by_triples().unwrap());
        }
        assert_eq!(
            c.orders_equal,
            left_weak_quotient(&i)
                .unwrap()
                .same_relation(&bruhat_quotient(&i).unwrap())
        );
    }
}

#[test]
fn matrix_monoid_dichotomy() {
    for n in 1..=4 {
        let r = renner_poset(n, &lim()).unwrap();
        for i in 0..=n {
            let m = wew_weak_mn_with(&r, i).unwrap();
            assert_eq!(m.has_degree_two(), i >= 2, "n={n} i={i}");
            assert_eq!(m.lambda_upper_nonempty, i >= 2);
            assert!(m.weak.non_cover_moves.is_empty());
            if i == 1 {
                assert!(m.weak.poset.are_isomorphic(&m.bcr).is_some());
            }
            let e = renner_core::PartialPerm::idempotent(n, i).unwrap();
            assert!(m.elements.iter().all(|x| x.rank() == i));
            assert!(m.elements.contains(&e));
        }
    }
}
