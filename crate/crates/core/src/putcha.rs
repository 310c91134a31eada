//! Putcha posets: dual canonical monoids via double cosets, and `M_n` via
//! conjugation classes of the Gauss–Jordan monoid.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::bruhat::{gauss_jordan, renner_poset, type_map, GjElement, IdempotentE, TypeMap};
use crate::cosets::d_star;
use crate::error::{Error, Result};
use crate::perm::{
    symmetric_group, ElementClass, EnumerationLimits, PartialPerm, Permutation, SimpleSubset,
};
use crate::poset::FinitePoset;

/// Label of the dual canonical idempotent `e_I`, e.g. `e_{1,2}`.
pub fn dcm_label(i: &SimpleSubset) -> String {
    format!("e_{i}")
}

/// `Λ∖{1}` of the dual canonical monoid of `S_n`: subsets of `S` with
/// `e_I ≤ e_J ⟺ I ⊇ J`. Elements are listed by decreasing size, so the
/// minimum `e_S = 0` comes first.
pub fn csl_dcm(n: usize) -> FinitePoset {
    let mut subsets = SimpleSubset::all(n);
    subsets.sort_by_key(|s| (std::cmp::Reverse(s.len()), *s));
    let labels = subsets.iter().map(dcm_label).collect();
    FinitePoset::from_leq(labels, |a, b| subsets[b].is_subset(&subsets[a]))
        .expect("reverse inclusion is a partial order")
}

/// In a dual canonical monoid `λ(e_I) = λ_*(e_I) = I` and `λ^*(e_I) = ∅`.
pub fn dcm_type_map(i: &SimpleSubset) -> TypeMap {
    TypeMap {
        lambda: *i,
        lambda_lower: *i,
        lambda_upper: SimpleSubset::empty(i.degree()),
    }
}

/// `𝒞(e_I)` on `D^*(e_I)` with `[e y] ≤ [e x] ⟺ x ≤ y` in Bruhat order.
/// Elements are listed by decreasing length; labels are `e_I:y`.
pub fn putcha_poset_dcm(i: &SimpleSubset) -> Result<FinitePoset> {
    let mut reps = d_star(i)?;
    reps.sort_by_key(|w| (std::cmp::Reverse(w.length()), w.clone()));
    let prefix = dcm_label(i);
    let labels = reps.iter().map(|w| format!("{prefix}:{w}")).collect();
    FinitePoset::from_leq(labels, |a, b| reps[b].bruhat_leq(&reps[a]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl std::str::FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Parity::Even),
            "odd" => Ok(Parity::Odd),
            other => Err(Error::InvalidParameters(format!(
                "unknown parity {other:?}"
            ))),
        }
    }
}

/// The bijection `R_m → D^*(e_I)` for `W = S_{2m}`, `I = {s_1..s_{m-1}}`
/// (even) or `W = S_{2m+1}`, `I = {s_1..s_m}` (odd).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RookIntervalMap {
    pub m: usize,
    pub parity: Parity,
    pub n: usize,
    pub i: SimpleSubset,
    /// Size of the leading block, `m` (even) or `m + 1` (odd).
    pub block: usize,
    /// `(σ, w(σ))` for every `σ ∈ R_m`, in rook-monoid order.
    pub pairs: Vec<(PartialPerm, Permutation)>,
}

impl RookIntervalMap {
    pub fn new(m: usize, parity: Parity, limits: &EnumerationLimits) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameters("m must be positive".into()));
        }
        let block = match parity {
            Parity::Even => m,
            Parity::Odd => m + 1,
        };
        let n = block + m;
        if n > limits.max_symmetric {
            return Err(Error::EnumerationLimit {
                what: "symmetric group",
                n,
                max: limits.max_symmetric,
            });
        }
        let i = SimpleSubset::from_indices(n, 1..block)?;
        let pairs = crate::perm::rook_monoid(m, limits)?
            .into_iter()
            .map(|s| {
                let w = rook_to_perm(&s, block)?;
                Ok((s, w))
            })
            .collect::<Result<_>>()?;
        Ok(RookIntervalMap {
            m,
            parity,
            n,
            i,
            block,
            pairs,
        })
    }

    pub fn image(&self, sigma: &PartialPerm) -> Option<&Permutation> {
        self.pairs.iter().find(|(s, _)| s == sigma).map(|(_, w)| w)
    }
}

/// Places `b + τ_i` at position `b + i` where `τ_i = σ_{m+1-i}` is defined,
/// fills positions `1..=b` increasingly with the small values `1..=c` and the
/// unused large values, and the remaining positions with `c+1..=b`, where
/// `c = b - (m - rank σ)`.
pub fn rook_to_perm(sigma: &PartialPerm, block: usize) -> Result<Permutation> {
    let m = sigma.degree();
    if block < m {
        return Err(Error::InvalidParameters(format!(
            "block {block} smaller than m = {m}"
        )));
    }
    let n = block + m;
    let tau: Vec<usize> = (0..m).map(|i| sigma.images()[m - 1 - i] as usize).collect();
    let rank = sigma.rank();
    let c = block - (m - rank);
    let mut w = vec![0u8; n];
    let mut used_large = vec![false; m + 1];
    for (i, &t) in tau.iter().enumerate() {
        if t != 0 {
            w[block + i] = (block + t) as u8;
            used_large[t] = true;
        }
    }
    let mut first: Vec<u8> = (1..=c as u8).collect();
    first.extend(
        (1..=m)
            .filter(|&t| !used_large[t])
            .map(|t| (block + t) as u8),
    );
    w[..block].copy_from_slice(&first);
    let mut rest = (c + 1..=block).map(|v| v as u8);
    for (i, &t) in tau.iter().enumerate() {
        if t == 0 {
            w[block + i] = rest.next().expect("enough small values");
        }
    }
    Permutation::from_images(w)
}

/// `σ_i = w_{n+1-i} - b` when that entry exceeds `b`, else undefined.
pub fn perm_to_rook(w: &Permutation, block: usize, m: usize) -> Result<PartialPerm> {
    if w.degree() != block + m {
        return Err(Error::InvalidParameters(format!(
            "{w} is not in S_{}",
            block + m
        )));
    }
    let i = SimpleSubset::from_indices(w.degree(), 1..block)?;
    let ad = w.ascent_descent_sets();
    if !(i.is_subset(&ad.asc_l) && i.is_subset(&ad.asc_r)) {
        return Err(Error::InvalidRepresentative(format!(
            "{w} is not in D*(e_{i})"
        )));
    }
    let n = w.degree();
    let images = (1..=m)
        .map(|k| {
            let v = w.image(n + 1 - k);
            if v > block {
                (v - block) as u8
            } else {
                0
            }
        })
        .collect();
    PartialPerm::from_images(images)
}

pub fn rook_interval_map(m: usize, parity: Parity) -> Result<RookIntervalMap> {
    RookIntervalMap::new(m, parity, &EnumerationLimits::default())
}

/// `[e_I y]` is nilpotent iff `supp(y) ⊇ S∖I`. Requires `y ∈ D(e_I)⁻¹`,
/// i.e. no left descent in `I`.
pub fn is_nilpotent_class_dcm(i: &SimpleSubset, y: &Permutation) -> Result<bool> {
    if y.degree() != i.degree() {
        return Err(Error::DegreeMismatch {
            left: y.degree(),
            right: i.degree(),
        });
    }
    if !y.ascent_descent_sets().des_l.intersection(i).is_empty() {
        return Err(Error::InvalidRepresentative(format!(
            "{y} is not in D(e_{i})^-1"
        )));
    }
    Ok(i.complement().is_subset(&y.support()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NilMaximal {
    pub k: SimpleSubset,
    /// Linear elements with support exactly `S∖K`, lexicographic.
    pub maxima: Vec<Permutation>,
    /// Whether the generators of `S∖K` commute pairwise.
    pub unique: bool,
}

/// Maximal elements of `𝒞_nil(e_K)`: the linear elements with support `S∖K`.
pub fn nil_maximal_dcm(k: &SimpleSubset, limits: &EnumerationLimits) -> Result<NilMaximal> {
    let t = k.complement();
    let maxima = symmetric_group(k.degree(), limits)?
        .into_iter()
        .filter(|w| w.classify() != ElementClass::NotLinear && w.support() == t)
        .collect();
    Ok(NilMaximal {
        k: *k,
        maxima,
        unique: t.pairwise_commuting(),
    })
}

/// Maximal elements of the nilpotent subposet of `𝒞(e_K)`, read off the poset.
pub fn nil_subposet_maxima_dcm(k: &SimpleSubset) -> Result<Vec<Permutation>> {
    let poset = putcha_poset_dcm(k)?;
    let reps: Vec<Permutation> = poset
        .labels()
        .iter()
        .map(|l| l.rsplit(':').next().expect("label has a rep").parse())
        .collect::<Result<_>>()?;
    let nil: Vec<usize> = (0..reps.len())
        .filter(|&a| is_nilpotent_class_dcm(k, &reps[a]).unwrap_or(false))
        .collect();
    let sub = poset.restrict(&nil);
    let mut maxima: Vec<Permutation> = sub
        .maximal_elements()
        .into_iter()
        .map(|a| sub.label(a).rsplit(':').next().expect("rep").parse())
        .collect::<Result<_>>()?;
    maxima.sort();
    Ok(maxima)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentData {
    pub n: usize,
    pub dim_g0: usize,
    /// One component per Coxeter element `v`, with `dim X(e_∅ v)`.
    pub components: Vec<(Permutation, usize)>,
    /// `dim G₀ - |S|`.
    pub expected_dimension: usize,
    /// `dim X(e_∅ w_0) = dim G₀ - n(n-1)/2`.
    pub longest_element_dimension: usize,
}

/// `dim X(e_∅ y) = dim G₀ - ℓ(y)`.
pub fn stratum_dimension(dim_g0: usize, y: &Permutation) -> usize {
    dim_g0 - y.length()
}

/// Irreducible components of the nilpotent variety of the dual canonical
/// monoid over `S_n`, with `dim G₀` given (`n² - 1` for `SL_n`).
pub fn components_and_dims(
    n: usize,
    dim_g0: usize,
    limits: &EnumerationLimits,
) -> Result<ComponentData> {
    let maxima = nil_maximal_dcm(&SimpleSubset::empty(n), limits)?;
    let components = maxima
        .maxima
        .into_iter()
        .map(|v| {
            let d = stratum_dimension(dim_g0, &v);
            (v, d)
        })
        .collect();
    Ok(ComponentData {
        n,
        dim_g0,
        components,
        expected_dimension: dim_g0 - (n - 1),
        longest_element_dimension: stratum_dimension(dim_g0, &Permutation::longest(n)),
    })
}

/// A `W`-conjugation class of `GJ(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PutchaClass {
    pub e: IdempotentE,
    /// The representative of least Renner length, ties broken lexicographically.
    pub rep: GjElement,
    /// Members of the class inside `GJ`.
    pub members: Vec<GjElement>,
    /// The full conjugation orbit `{w x w⁻¹}` in `R_n`, sorted.
    pub orbit: Vec<PartialPerm>,
    /// `rep^n = 0`, by direct iteration.
    pub nilpotent: bool,
}

impl PutchaClass {
    pub fn label(&self) -> String {
        format!("{}:{}", self.e, self.rep.x)
    }
}

#[derive(Clone, Debug)]
pub struct PutchaMn {
    pub n: usize,
    /// Classes in poset index order.
    pub classes: Vec<PutchaClass>,
    pub poset: FinitePoset,
}

/// The support criterion for `M_n`: `[e y]` is nilpotent iff
/// `supp(y) ⊄ λ(f)` for every minimal nonzero `f ≤ e`. The only such `f` is
/// `e_1`, so `e_0` qualifies vacuously.
pub fn nilpotent_by_support_mn(e: &IdempotentE, y: &Permutation) -> bool {
    let minimal_nonzero = [IdempotentE { n: e.n, i: 1 }];
    minimal_nonzero
        .iter()
        .filter(|f| f.leq(e) && e.i > 0)
        .all(|f| !y.support().is_subset(&type_map(f).lambda))
}

/// `𝒞` for `M_n`: conjugation classes of `GJ(n)` with `[x] ≤ [y]` iff
/// `w x w⁻¹ ≤ y` for some `w ∈ W`.
pub fn putcha_poset_mn(n: usize, limits: &EnumerationLimits) -> Result<PutchaMn> {
    let renner = renner_poset(n, limits)?;
    let group = symmetric_group(n, limits)?;
    let gj = gauss_jordan(n, limits)?;
    let mut assigned = vec![false; gj.len()];
    let mut classes = Vec::new();
    for start in 0..gj.len() {
        if assigned[start] {
            continue;
        }
        let x = &gj[start].element;
        let orbit: BTreeSet<PartialPerm> = group
            .iter()
            .map(|w| x.conjugate(w))
            .collect::<Result<_>>()?;
        let mut members = Vec::new();
        for (k, g) in gj.iter().enumerate() {
            if orbit.contains(&g.element) {
                assigned[k] = true;
                members.push(g.clone());
            }
        }
        let rep = members
            .iter()
            .min_by_key(|g| (renner.length(&g.element), g.element.clone()))
            .expect("class contains its seed")
            .clone();
        classes.push(PutchaClass {
            e: rep.e,
            nilpotent: rep.element.is_nilpotent(),
            rep,
            members,
            orbit: orbit.into_iter().collect(),
        });
    }
    classes.sort_by_key(|c| (renner.length(&c.rep.element), c.rep.element.clone()));
    let labels = classes.iter().map(PutchaClass::label).collect();
    let poset = FinitePoset::from_leq(labels, |a, b| {
        let y = &classes[b].rep.element;
        classes[a]
            .orbit
            .iter()
            .any(|z| crate::bruhat::prefix_dominated(z.images(), y.images()))
    })?;
    let classes = poset
        .labels()
        .iter()
        .map(|l| {
            classes
                .iter()
                .find(|c| &c.label() == l)
                .expect("label from a class")
                .clone()
        })
        .collect();
    Ok(PutchaMn { n, classes, poset })
}
