//! Parabolic subgroups, minimal coset representatives and double cosets
//! `W_I \ W / W_J`.

use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{symmetric_group, EnumerationLimits, Permutation, SimpleSubset};
use crate::poset::FinitePoset;

/// `W_I`, generated by `I`, sorted by length and then lexicographically.
pub fn parabolic_subgroup(i: &SimpleSubset) -> Vec<Permutation> {
    let n = i.degree();
    let mut seen = std::collections::HashSet::new();
    let id = Permutation::identity(n);
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for j in i.iter() {
            let v = w.right_simple(j).expect("generator in range");
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort_by_key(|w| (w.length(), w.clone()));
    out
}

fn group(n: usize) -> Result<Vec<Permutation>> {
    symmetric_group(n, &EnumerationLimits::default())
}

/// `D_I`: permutations with no right descent in `I`.
pub fn min_reps(i: &SimpleSubset) -> Result<Vec<Permutation>> {
    Ok(group(i.degree())?
        .into_iter()
        .filter(|x| x.ascent_descent_sets().des_r.intersection(i).is_empty())
        .collect())
}

/// `X⁻_{I,J} = {w : I ⊆ Asc_L(w), J ⊆ Asc_R(w)}`.
pub fn x_minus(i: &SimpleSubset, j: &SimpleSubset) -> Result<Vec<Permutation>> {
    check_same_degree(i, j)?;
    Ok(group(i.degree())?
        .into_iter()
        .filter(|w| {
            let ad = w.ascent_descent_sets();
            i.is_subset(&ad.asc_l) && j.is_subset(&ad.asc_r)
        })
        .collect())
}

/// `D^*(e_I) = D_I ∩ D_I⁻¹`.
pub fn d_star(i: &SimpleSubset) -> Result<Vec<Permutation>> {
    x_minus(i, i)
}

fn check_same_degree(i: &SimpleSubset, j: &SimpleSubset) -> Result<()> {
    if i.degree() != j.degree() {
        return Err(Error::DegreeMismatch {
            left: i.degree(),
            right: j.degree(),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleCoset {
    pub i: SimpleSubset,
    pub j: SimpleSubset,
    /// Members sorted by length, then lexicographically.
    pub members: Vec<Permutation>,
    pub min_rep: Permutation,
    pub max_rep: Permutation,
}

/// The partition of `W` into `W_I w W_J`, ordered by minimal representative
/// (length first).
pub fn double_cosets(i: &SimpleSubset, j: &SimpleSubset) -> Result<Vec<DoubleCoset>> {
    check_same_degree(i, j)?;
    let elems = group(i.degree())?;
    let index: HashMap<&Permutation, usize> =
        elems.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut parent: Vec<usize> = (0..elems.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (k, w) in elems.iter().enumerate() {
        let left = i.iter().map(|s| w.left_simple(s).expect("in range"));
        let right = j.iter().map(|s| w.right_simple(s).expect("in range"));
        for v in left.chain(right).collect::<Vec<_>>() {
            let (a, b) = (find(&mut parent, k), find(&mut parent, index[&v]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut classes: HashMap<usize, Vec<Permutation>> = HashMap::new();
    for (k, w) in elems.iter().enumerate() {
        let root = find(&mut parent, k);
        classes.entry(root).or_default().push(w.clone());
    }
    let mut out: Vec<DoubleCoset> = classes
        .into_values()
        .map(|mut members| {
            members.sort_by_key(|w| (w.length(), w.clone()));
            DoubleCoset {
                i: *i,
                j: *j,
                min_rep: members[0].clone(),
                max_rep: members[members.len() - 1].clone(),
                members,
            }
        })
        .collect();
    out.sort_by_key(|c| (c.min_rep.length(), c.min_rep.clone()));
    Ok(out)
}

/// The minimal element of `W_I x W_J`, by stripping descents in `I` on the
/// left and in `J` on the right.
pub fn min_double_coset_rep(i: &SimpleSubset, j: &SimpleSubset, x: &Permutation) -> Permutation {
    let mut w = x.clone();
    'outer: loop {
        for s in i.iter() {
            if w.has_left_descent(s) {
                w = w.left_simple(s).expect("in range");
                continue 'outer;
            }
        }
        for s in j.iter() {
            if w.has_right_descent(s) {
                w = w.right_simple(s).expect("in range");
                continue 'outer;
            }
        }
        return w;
    }
}

/// `x = u w v` with `w` the minimal representative, `u ∈ W_I` minimal in its
/// coset `u W_H` for `H = I ∩ wJw⁻¹`, `v ∈ W_J`, and lengths adding up.
pub fn uwv_decompose(
    i: &SimpleSubset,
    j: &SimpleSubset,
    x: &Permutation,
) -> Result<(Permutation, Permutation, Permutation)> {
    check_same_degree(i, j)?;
    if x.degree() != i.degree() {
        return Err(Error::DegreeMismatch {
            left: x.degree(),
            right: i.degree(),
        });
    }
    let w = min_double_coset_rep(i, j, x);
    let h = conjugated_intersection(i, j, &w);
    let w_inv = w.inverse();
    for u in parabolic_subgroup(i) {
        if !u.ascent_descent_sets().des_r.intersection(&h).is_empty() {
            continue;
        }
        let v = &(&w_inv * &u.inverse()) * x;
        if v.support().is_subset(j) && u.length() + w.length() + v.length() == x.length() {
            return Ok((u, w, v));
        }
    }
    Err(Error::InvalidParameters(format!(
        "no uwv factorization of {x}"
    )))
}

/// `H = I ∩ wJw⁻¹`: generators `s_j ∈ J` whose conjugate `w s_j w⁻¹` is a
/// simple reflection in `I`.
pub fn conjugated_intersection(
    i: &SimpleSubset,
    j: &SimpleSubset,
    w: &Permutation,
) -> SimpleSubset {
    let n = i.degree();
    let w_inv = w.inverse();
    let mut h = SimpleSubset::empty(n);
    for s in j.iter() {
        let sj = Permutation::simple(n, s).expect("in range");
        let c = &(w * &sj) * &w_inv;
        for t in i.iter() {
            if c == Permutation::simple(n, t).expect("in range") {
                h.insert(t).expect("in range");
            }
        }
    }
    h
}

/// Which representative the double-coset order compares.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepChoice {
    Min,
    Max,
}

/// Double cosets under Bruhat order of their maximal representatives,
/// labeled by minimal representatives.
pub fn double_coset_poset(i: &SimpleSubset, j: &SimpleSubset) -> Result<FinitePoset> {
    double_coset_poset_by(i, j, RepChoice::Max)
}

pub fn double_coset_poset_by(
    i: &SimpleSubset,
    j: &SimpleSubset,
    by: RepChoice,
) -> Result<FinitePoset> {
    let mut cosets = double_cosets(i, j)?;
    cosets.sort_by_key(|c| (c.max_rep.length(), c.min_rep.length(), c.min_rep.clone()));
    let reps: Vec<&Permutation> = cosets
        .iter()
        .map(|c| match by {
            RepChoice::Min => &c.min_rep,
            RepChoice::Max => &c.max_rep,
        })
        .collect();
    let labels = cosets.iter().map(|c| c.min_rep.to_string()).collect();
    FinitePoset::from_leq(labels, |a, b| reps[a].bruhat_leq(reps[b]))
}
