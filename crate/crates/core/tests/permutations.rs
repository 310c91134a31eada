use std::collections::HashSet;

use proptest::prelude::*;
use renner_core::perm::{rook_monoid, rook_monoid_size, symmetric_group, ElementClass};
use renner_core::{EnumerationLimits, Error, PartialPerm, Permutation, SimpleSubset};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n as u8).collect::<Vec<u8>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn perm_pair() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..=7).prop_flat_map(|n| (perm(n), perm(n)))
}

fn partial(n: usize) -> impl Strategy<Value = PartialPerm> {
    (perm(n), proptest::collection::vec(any::<bool>(), n)).prop_map(|(w, keep)| {
        let images = w
            .images()
            .iter()
            .zip(keep)
            .map(|(&v, k)| if k { v } else { 0 })
            .collect();
        PartialPerm::from_images(images).unwrap()
    })
}

fn inversions(w: &Permutation) -> usize {
    let v = w.images();
    (0..v.len())
        .flat_map(|i| (i + 1..v.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| v[i] > v[j])
        .count()
}

/// Composition of maps, written out directly.
fn compose(u: &[u8], v: &[u8]) -> Vec<u8> {
    v.iter()
        .map(|&x| if x == 0 { 0 } else { u[x as usize - 1] })
        .collect()
}

/// `u ≤ v` in Bruhat order by the subword criterion on a reduced word of `v`.
fn subword_leq(u: &Permutation, v: &Permutation) -> bool {
    let n = u.degree();
    let word = v.reduced_word();
    let mut reachable: HashSet<Permutation> = HashSet::from([Permutation::identity(n)]);
    for &s in &word {
        let next: Vec<Permutation> = reachable
            .iter()
            .map(|w| w.right_simple(s).unwrap())
            .collect();
        reachable.extend(next);
    }
    reachable.contains(u)
}

/// 0-Hecke product of words by reducing `s s = s` and length-increase.
fn hecke_word(n: usize, word: &[usize]) -> Permutation {
    let mut w = Permutation::identity(n);
    for &s in word {
        let t = w.right_simple(s).unwrap();
        if t.length() > w.length() {
            w = t;
        }
    }
    w
}

proptest! {
    #[test]
    fn group_axioms((u, v) in perm_pair()) {
        let n = u.degree();
        let id = Permutation::identity(n);
        prop_assert_eq!(u.multiply(&id).unwrap(), u.clone());
        prop_assert_eq!(u.multiply(&u.inverse()).unwrap(), id.clone());
        prop_assert_eq!(u.inverse().inverse(), u.clone());
        let uv = u.multiply(&v).unwrap();
        let direct = compose(u.images(), v.images());
        prop_assert_eq!(uv.images(), &direct[..]);
        prop_assert_eq!(uv.inverse(), v.inverse().multiply(&u.inverse()).unwrap());
    }

    #[test]
    fn length_is_inversion_count(w in (1usize..=8).prop_flat_map(perm)) {
        prop_assert_eq!(w.length(), inversions(&w));
        prop_assert_eq!(w.length(), w.inverse().length());
        let word = w.reduced_word();
        prop_assert_eq!(word.len(), w.length());
        prop_assert_eq!(Permutation::from_word(w.degree(), &word).unwrap(), w.clone());
        prop_assert!(w.length() <= Permutation::longest(w.degree()).length());
    }

    #[test]
    fn simple_multiplication_sides(w in (2usize..=7).prop_flat_map(perm), i in 1usize..7) {
        let n = w.degree();
        prop_assume!(i < n);
        let s = Permutation::simple(n, i).unwrap();
        prop_assert_eq!(w.left_simple(i).unwrap(), s.multiply(&w).unwrap());
        prop_assert_eq!(w.right_simple(i).unwrap(), w.multiply(&s).unwrap());
        let right = w.images()[i - 1] > w.images()[i];
        prop_assert_eq!(w.has_right_descent(i), right);
        prop_assert_eq!(w.right_simple(i).unwrap().length() < w.length(), right);
        prop_assert_eq!(w.left_simple(i).unwrap().length() < w.length(), w.has_left_descent(i));
        let ad = w.ascent_descent_sets();
        prop_assert_eq!(ad.des_r.contains(i), right);
        prop_assert_eq!(ad.asc_l.contains(i), !w.has_left_descent(i));
    }

    #[test]
    fn demazure_matches_word_reduction((u, v) in perm_pair()) {
        let n = u.degree();
        let mut word = u.reduced_word();
        word.extend(v.reduced_word());
        prop_assert_eq!(u.demazure_product(&v).unwrap(), hecke_word(n, &word));
    }

    #[test]
    fn bruhat_matches_subword((u, v) in (1usize..=5).prop_flat_map(|n| (perm(n), perm(n)))) {
        prop_assert_eq!(u.bruhat_leq(&v), subword_leq(&u, &v));
    }

    #[test]
    fn support_and_classification(w in (1usize..=7).prop_flat_map(perm)) {
        let letters: HashSet<usize> = w.reduced_word().into_iter().collect();
        let supp: HashSet<usize> = w.support().iter().collect();
        prop_assert_eq!(&supp, &letters);
        let linear = w.length() == letters.len();
        let expected = match (linear, letters.len() + 1 == w.degree()) {
            (false, _) => ElementClass::NotLinear,
            (true, true) => ElementClass::Coxeter,
            (true, false) => ElementClass::Linear,
        };
        prop_assert_eq!(w.classify(), expected);
    }

    #[test]
    fn partial_products_associate(
        (a, b, c) in (1usize..=6).prop_flat_map(|n| (partial(n), partial(n), partial(n)))
    ) {
        let ab_c = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let a_bc = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(&ab_c, &a_bc);
        let ab = a.multiply(&b).unwrap();
        prop_assert_eq!(ab.images(), &compose(a.images(), b.images())[..]);
        prop_assert!(ab.rank() <= a.rank().min(b.rank()));
    }

    #[test]
    fn conjugation_preserves_nilpotency(x in (1usize..=6).prop_flat_map(partial), seed in any::<u64>()) {
        let n = x.degree();
        let group = symmetric_group(n, &EnumerationLimits::default()).unwrap();
        let w = &group[(seed % group.len() as u64) as usize];
        let y = x.conjugate(w).unwrap();
        prop_assert_eq!(y.rank(), x.rank());
        prop_assert_eq!(y.is_nilpotent(), x.is_nilpotent());
        let mut p = x.clone();
        for _ in 0..n {
            p = p.multiply(&x).unwrap();
        }
        prop_assert_eq!(x.is_nilpotent(), p.is_zero());
    }

    #[test]
    fn text_roundtrip(x in (1usize..=12).prop_flat_map(partial)) {
        let text = x.to_string();
        prop_assert_eq!(text.parse::<PartialPerm>().unwrap(), x.clone());
        let json = serde_json::to_string(&x).unwrap();
        prop_assert_eq!(serde_json::from_str::<PartialPerm>(&json).unwrap(), x);
    }

    #[test]
    fn subset_roundtrip(n in 1usize..=9, bits in any::<u64>()) {
        let s = SimpleSubset::from_indices(n, (1..n).filter(|i| bits >> i & 1 == 1)).unwrap();
        prop_assert_eq!(SimpleSubset::parse(n, &s.to_arg()).unwrap(), s);
        prop_assert_eq!(s.complement().complement(), s);
        prop_assert_eq!(s.union(&s.complement()), SimpleSubset::full(n));
        prop_assert!(s.intersection(&s.complement()).is_empty());
    }
}

#[test]
fn group_and_monoid_sizes() {
    let lim = EnumerationLimits::default();
    let sizes = [1usize, 2, 6, 24, 120, 720];
    for (k, &size) in sizes.iter().enumerate() {
        let g = symmetric_group(k + 1, &lim).unwrap();
        assert_eq!(g.len(), size);
        assert!(g.windows(2).all(|p| p[0] < p[1]));
    }
    let rook = [2u64, 7, 34, 209, 1546];
    for (k, &size) in rook.iter().enumerate() {
        assert_eq!(rook_monoid_size(k + 1), size);
        let r = rook_monoid(k + 1, &lim).unwrap();
        assert_eq!(r.len() as u64, size);
        assert_eq!(r.iter().collect::<HashSet<_>>().len(), r.len());
    }
}

#[test]
fn limits_and_degree_errors() {
    let lim = EnumerationLimits::default();
    assert!(matches!(
        symmetric_group(lim.max_symmetric + 1, &lim),
        Err(Error::EnumerationLimit { .. })
    ));
    assert!(matches!(
        rook_monoid(lim.max_rook + 1, &lim),
        Err(Error::EnumerationLimit { .. })
    ));
    let a = Permutation::identity(3);
    let b = Permutation::identity(4);
    let err = a.multiply(&b).unwrap_err();
    assert!(err.to_string().contains("degree mismatch"));
    assert!(Permutation::simple(3, 3).is_err());
    assert!(Permutation::from_images(vec![1, 1, 2]).is_err());
    assert!(PartialPerm::from_images(vec![0, 2, 2]).is_err());
    assert!("1,2,x".parse::<Permutation>().is_err());
}

#[test]
fn documented_examples() {
    let w: Permutation = "2134".parse().unwrap();
    assert_eq!(Permutation::identity(4).left_simple(1).unwrap(), w);
    assert_eq!(Permutation::longest(4).length(), 6);
    let big = Permutation::identity(10);
    assert_eq!(big.to_string(), "1,2,3,4,5,6,7,8,9,10");
    assert_eq!(big.to_string().parse::<Permutation>().unwrap(), big);
    let cox = Permutation::from_word(4, &[1, 2, 3]).unwrap();
    assert_eq!(cox.classify(), ElementClass::Coxeter);
    assert_eq!(
        Permutation::from_word(4, &[1, 3]).unwrap().classify(),
        ElementClass::Linear
    );
    assert_eq!(Permutation::longest(3).classify(), ElementClass::NotLinear);
    assert!(PartialPerm::zero(3).is_nilpotent());
    assert!(!PartialPerm::identity(3).is_nilpotent());
}
