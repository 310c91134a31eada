use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;
use renner_core::bruhat::{
    bcr_leq, bcr_leq_sf, bruhat_order, gauss_jordan, gj_leq, renner_poset, standard_form,
    tilde_prefix, type_map,
};
use renner_core::cosets::{
    d_star, double_coset_poset, double_cosets, min_double_coset_rep, min_reps, parabolic_subgroup,
    uwv_decompose, x_minus,
};
use renner_core::perm::{rook_monoid, symmetric_group};
use renner_core::putcha::{
    csl_dcm, is_nilpotent_class_dcm, nil_maximal_dcm, nil_subposet_maxima_dcm, putcha_poset_dcm,
    putcha_poset_mn, rook_interval_map, Parity,
};
use renner_core::{EnumerationLimits, IdempotentE, PartialPerm, Permutation, SimpleSubset};

fn lim() -> EnumerationLimits {
    EnumerationLimits::default()
}

fn sub(n: usize, s: &str) -> SimpleSubset {
    SimpleSubset::parse(n, s).unwrap()
}

/// Entrywise comparison of the sorted (non-increasing) prefixes.
fn sorted_prefix_leq(a: &PartialPerm, b: &PartialPerm) -> bool {
    (1..=a.degree()).all(|i| {
        let mut x = a.images()[..i].to_vec();
        let mut y = b.images()[..i].to_vec();
        x.sort_unstable_by(|p, q| q.cmp(p));
        y.sort_unstable_by(|p, q| q.cmp(p));
        x.iter().zip(&y).all(|(p, q)| p <= q)
    })
}

/// Image `{1..r}` with values increasing left to right.
fn is_gauss_jordan(x: &PartialPerm) -> bool {
    let vals: Vec<u8> = x.images().iter().copied().filter(|&v| v != 0).collect();
    vals.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
}

fn rook(n: usize) -> impl Strategy<Value = PartialPerm> {
    let all = rook_monoid(n, &lim()).unwrap();
    proptest::sample::select(all)
}

proptest! {
    #[test]
    fn bcr_matches_sorted_prefixes((a, b) in (1usize..=5).prop_flat_map(|n| (rook(n), rook(n)))) {
        prop_assert_eq!(bcr_leq(&a, &b).unwrap(), sorted_prefix_leq(&a, &b));
    }

    #[test]
    fn standard_form_reconstructs(x in (1usize..=6).prop_flat_map(rook)) {
        let sf = standard_form(&x);
        prop_assert_eq!(sf.reconstruct(), x.clone());
        prop_assert_eq!(sf.e.i, x.rank());
        let lam = type_map(&sf.e).lambda;
        prop_assert!(sf.b.ascent_descent_sets().des_r.intersection(&lam).is_empty());
    }
}

#[test]
fn bcr_example_and_prefix() {
    let a: PartialPerm = "02501".parse().unwrap();
    assert_eq!(tilde_prefix(&a, 3).unwrap(), vec![5, 2, 0]);
    assert!(bcr_leq(&"00000".parse().unwrap(), &a).unwrap());
    assert!(!bcr_leq(&a, &"00000".parse().unwrap()).unwrap());
    assert!(bcr_leq(&a, &a).unwrap());
}

#[test]
fn comparators_agree_on_r3() {
    let r = rook_monoid(3, &lim()).unwrap();
    for x in &r {
        for y in &r {
            let sf = bcr_leq_sf(&standard_form(x), &standard_form(y)).unwrap();
            assert_eq!(bcr_leq(x, y).unwrap(), sf, "{x} {y}");
        }
    }
}

#[test]
fn renner_poset_shape() {
    for n in 1..=4 {
        let r = renner_poset(n, &lim()).unwrap();
        assert!(r.poset.is_graded());
        assert_eq!(r.height(), n * n);
        assert_eq!(r.poset.label(r.poset.bottom().unwrap()), "0".repeat(n));
        assert_eq!(
            r.poset.label(r.poset.top().unwrap()),
            Permutation::longest(n).to_string()
        );
    }
    let r2 = renner_poset(2, &lim()).unwrap();
    assert_eq!(r2.poset.len(), 7);
    let mut shape = vec![0; 5];
    for &k in &r2.ranks {
        shape[k] += 1;
    }
    assert_eq!(shape, vec![1, 1, 2, 2, 1]);
}

#[test]
fn units_carry_bruhat_order() {
    for n in 1..=4 {
        let r = renner_poset(n, &lim()).unwrap();
        let units: Vec<usize> = (0..r.elements.len())
            .filter(|&k| r.elements[k].rank() == n)
            .collect();
        let sub = r.poset.restrict(&units);
        let b = bruhat_order(n, &lim()).unwrap();
        assert!(sub.are_isomorphic(&b).is_some());
        for x in 0..sub.len() {
            for y in 0..sub.len() {
                let u: Permutation = sub.label(x).parse().unwrap();
                let v: Permutation = sub.label(y).parse().unwrap();
                let bx = b.index_of(sub.label(x)).unwrap();
                let by = b.index_of(sub.label(y)).unwrap();
                assert_eq!(sub.leq(x, y), b.leq(bx, by));
                assert_eq!(sub.leq(x, y), u.bruhat_leq(&v));
            }
        }
    }
}

#[test]
fn gauss_jordan_monoid() {
    for n in 1..=5 {
        let gj = gauss_jordan(n, &lim()).unwrap();
        assert_eq!(gj.len(), 1 << n);
        let direct: BTreeSet<PartialPerm> = rook_monoid(n, &lim())
            .unwrap()
            .into_iter()
            .filter(is_gauss_jordan)
            .collect();
        let built: BTreeSet<PartialPerm> = gj.iter().map(|g| g.element.clone()).collect();
        assert_eq!(built, direct);
    }
    let gj = gauss_jordan(3, &lim()).unwrap();
    for g in &gj {
        for h in &gj {
            assert_eq!(
                gj_leq(&g.e, &g.x, &h.e, &h.x).unwrap(),
                bcr_leq(&g.element, &h.element).unwrap()
            );
        }
    }
}

#[test]
fn idempotents_and_type_map() {
    let e = IdempotentE::new(4, 2).unwrap();
    let t = type_map(&e);
    assert_eq!(t.lambda, sub(4, "1,3"));
    assert_eq!(t.lambda_lower, sub(4, "3"));
    assert_eq!(t.lambda_upper, sub(4, "1"));
    let zero = IdempotentE::new(4, 0).unwrap();
    assert_eq!(type_map(&zero).lambda, SimpleSubset::full(4));
    assert!(type_map(&zero).lambda_upper.is_empty());
    assert!(IdempotentE::new(4, 5).is_err());
    for f in IdempotentE::all(4) {
        let centralizer: HashSet<Permutation> = f.centralizer().into_iter().collect();
        let expected: HashSet<Permutation> = parabolic_subgroup(&type_map(&f).lambda)
            .into_iter()
            .collect();
        assert_eq!(centralizer, expected);
        assert_eq!(f.product(&e).i, f.i.min(e.i));
    }
}

/// Double cosets as orbits of `(u, v) · w = u w v⁻¹`, found by search.
fn orbit_count(i: &SimpleSubset, j: &SimpleSubset) -> usize {
    let n = i.degree();
    let mut seen = HashSet::new();
    let mut count = 0;
    for w in symmetric_group(n, &lim()).unwrap() {
        if seen.contains(&w) {
            continue;
        }
        count += 1;
        let mut stack = vec![w];
        while let Some(x) = stack.pop() {
            if !seen.insert(x.clone()) {
                continue;
            }
            stack.extend(i.iter().map(|s| x.left_simple(s).unwrap()));
            stack.extend(j.iter().map(|s| x.right_simple(s).unwrap()));
        }
    }
    count
}

#[test]
fn double_cosets_partition_the_group() {
    for n in 2..=5 {
        for i in SimpleSubset::all(n) {
            for j in SimpleSubset::all(n) {
                let cosets = double_cosets(&i, &j).unwrap();
                assert_eq!(cosets.len(), orbit_count(&i, &j));
                let total: usize = cosets.iter().map(|c| c.members.len()).sum();
                assert_eq!(total, (1..=n).product::<usize>());
                let mins: HashSet<Permutation> = x_minus(&i, &j).unwrap().into_iter().collect();
                for c in &cosets {
                    assert!(mins.contains(&c.min_rep));
                    assert_eq!(min_double_coset_rep(&i, &j, &c.max_rep), c.min_rep);
                }
                assert_eq!(mins.len(), cosets.len());
            }
        }
    }
}

#[test]
fn uwv_factorizations() {
    for (a, b) in [("1", "2"), ("1,2", "2,3"), ("1,3", "2"), ("none", "1,2,3")] {
        let (i, j) = (sub(4, a), sub(4, b));
        for x in symmetric_group(4, &lim()).unwrap() {
            let (u, w, v) = uwv_decompose(&i, &j, &x).unwrap();
            assert_eq!(&(&u * &w) * &v, x);
            assert_eq!(u.length() + w.length() + v.length(), x.length());
            assert!(u.support().is_subset(&i) && v.support().is_subset(&j));
        }
    }
}

#[test]
fn quotients() {
    for n in 2..=5 {
        for i in SimpleSubset::all(n) {
            let d = min_reps(&i).unwrap();
            let w_i = parabolic_subgroup(&i).len();
            assert_eq!(d.len() * w_i, (1..=n).product::<usize>());
            let star = d_star(&i).unwrap();
            assert!(star
                .iter()
                .all(|w| d.contains(w) && d.contains(&w.inverse())));
        }
    }
}

#[test]
fn double_coset_poset_reverses_putcha_poset() {
    let i = sub(5, "1,2");
    let dc = double_coset_poset(&i, &i).unwrap();
    let c = putcha_poset_dcm(&i).unwrap();
    assert!(dc.opposite().are_isomorphic(&c).is_some());
}

#[test]
fn cross_section_lattice_is_boolean() {
    for n in 1..=5 {
        let p = csl_dcm(n);
        assert!(p
            .are_isomorphic(&renner_core::FinitePoset::boolean_lattice(n - 1))
            .is_some());
    }
}

#[test]
fn rook_interval_isomorphisms() {
    for (m, parity, size) in [
        (1, Parity::Even, 2),
        (1, Parity::Odd, 2),
        (2, Parity::Even, 7),
        (2, Parity::Odd, 7),
        (3, Parity::Even, 34),
    ] {
        let map = rook_interval_map(m, parity).unwrap();
        let c = putcha_poset_dcm(&map.i).unwrap();
        let r = renner_poset(m, &lim()).unwrap();
        assert_eq!(c.len(), size);
        assert!(c.are_isomorphic(&r.poset).is_some(), "m={m} {parity:?}");
        let zero = PartialPerm::zero(m);
        let bottom = c
            .label(c.bottom().unwrap())
            .rsplit(':')
            .next()
            .unwrap()
            .to_string();
        assert_eq!(map.image(&zero).unwrap().to_string(), bottom);
    }
}

#[test]
fn dual_canonical_nilpotency_and_maxima() {
    for n in 2..=5 {
        for k in SimpleSubset::all(n) {
            for y in d_star(&k).unwrap() {
                let letters: HashSet<usize> = y.reduced_word().into_iter().collect();
                let expected = k.complement().iter().all(|s| letters.contains(&s));
                assert_eq!(is_nilpotent_class_dcm(&k, &y).unwrap(), expected);
            }
            let claimed = nil_maximal_dcm(&k, &lim()).unwrap();
            assert_eq!(nil_subposet_maxima_dcm(&k).unwrap(), claimed.maxima);
            assert_eq!(claimed.maxima.len() == 1, claimed.unique);
        }
    }
}

/// Nilpotency of a 0/1 matrix by repeated boolean squaring.
fn matrix_nilpotent(x: &PartialPerm) -> bool {
    let n = x.degree();
    let mut m = vec![vec![false; n]; n];
    for (col, &row) in x.images().iter().enumerate() {
        if row != 0 {
            m[row as usize - 1][col] = true;
        }
    }
    let mut p = m.clone();
    for _ in 1..n {
        let mut q = vec![vec![false; n]; n];
        for a in 0..n {
            for b in 0..n {
                q[a][b] = (0..n).any(|c| p[a][c] && m[c][b]);
            }
        }
        p = q;
    }
    p.iter().all(|row| row.iter().all(|&v| !v))
}

#[test]
fn putcha_poset_for_matrices() {
    for n in 1..=4 {
        let mn = putcha_poset_mn(n, &lim()).unwrap();
        let members: usize = mn.classes.iter().map(|c| c.members.len()).sum();
        assert_eq!(members, 1 << n);
        assert_eq!(
            mn.poset.label(mn.poset.bottom().unwrap()),
            format!("e_0:{}", Permutation::identity(n))
        );
        for c in &mn.classes {
            assert_eq!(c.nilpotent, matrix_nilpotent(&c.rep.element));
            assert!(c.members.iter().all(|g| g.e == c.e));
        }
        let top = mn.poset.top().unwrap();
        assert_eq!(mn.classes[top].e.i, n);
    }
}
