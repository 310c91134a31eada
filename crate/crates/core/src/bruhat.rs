//! Bruhat–Chevalley–Renner order on the rook monoid, idempotents `e_i`,
//! type maps, standard forms and the Gauss–Jordan transversal.

use std::collections::HashMap;

use serde::Serialize;

use crate::cosets::parabolic_subgroup;
use crate::error::{Error, Result};
use crate::perm::{rook_monoid, EnumerationLimits, PartialPerm, Permutation, SimpleSubset};
use crate::poset::FinitePoset;

/// Whether the non-increasing rearrangement of every prefix of `a` is
/// entrywise at most that of `b`. Equivalent to: for all `i` and all `k ≥ 1`,
/// `#{j ≤ i : a_j ≥ k} ≤ #{j ≤ i : b_j ≥ k}`.
pub(crate) fn prefix_dominated(a: &[u8], b: &[u8]) -> bool {
    debug_assert_eq!(a.len(), b.len());
    let n = a.len();
    let mut excess = [0i32; 256];
    for i in 0..n {
        for slot in excess.iter_mut().take(a[i] as usize + 1).skip(1) {
            *slot += 1;
        }
        for slot in excess.iter_mut().take(b[i] as usize + 1).skip(1) {
            *slot -= 1;
        }
        if excess[1..=n].iter().any(|&d| d > 0) {
            return false;
        }
    }
    true
}

/// `σ_1 … σ_i` sorted non-increasingly.
pub fn tilde_prefix(sigma: &PartialPerm, i: usize) -> Result<Vec<u8>> {
    let n = sigma.degree();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut v = sigma.images()[..i].to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Ok(v)
}

/// `τ ≤ σ` in the Bruhat–Chevalley–Renner order.
pub fn bcr_leq(tau: &PartialPerm, sigma: &PartialPerm) -> Result<bool> {
    if tau.degree() != sigma.degree() {
        return Err(Error::DegreeMismatch {
            left: tau.degree(),
            right: sigma.degree(),
        });
    }
    Ok(prefix_dominated(tau.images(), sigma.images()))
}

/// Bruhat order on `S_n`.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    bcr_leq(&u.to_partial(), &v.to_partial())
}

/// The idempotent `e_i = diag(1,…,1,0,…,0)` of rank `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IdempotentE {
    pub n: usize,
    pub i: usize,
}

impl IdempotentE {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(IdempotentE { n, i })
    }

    /// The cross-section lattice `{e_0, …, e_n}`.
    pub fn all(n: usize) -> Vec<IdempotentE> {
        (0..=n).map(|i| IdempotentE { n, i }).collect()
    }

    pub fn to_partial(&self) -> PartialPerm {
        PartialPerm::idempotent(self.n, self.i).expect("i ≤ n")
    }

    /// `e_i e_j = e_{min(i,j)}`.
    pub fn product(&self, other: &Self) -> Self {
        IdempotentE {
            n: self.n,
            i: self.i.min(other.i),
        }
    }

    pub fn leq(&self, other: &Self) -> bool {
        self.i <= other.i
    }

    /// `λ(e)`, computed as the centralizing simple reflections.
    pub fn lambda(&self) -> SimpleSubset {
        let e = self.to_partial();
        let mut out = SimpleSubset::empty(self.n);
        for j in 1..self.n {
            if e.left_simple(j).expect("in range") == e.right_simple(j).expect("in range") {
                out.insert(j).expect("in range");
            }
        }
        out
    }

    /// `W(e) = W_{λ(e)}`.
    pub fn centralizer(&self) -> Vec<Permutation> {
        parabolic_subgroup(&self.lambda())
    }
}

impl std::fmt::Display for IdempotentE {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "e_{}", self.i)
    }
}

/// `(λ(e), λ_*(e), λ^*(e))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeMap {
    pub lambda: SimpleSubset,
    pub lambda_lower: SimpleSubset,
    pub lambda_upper: SimpleSubset,
}

pub fn type_map(e: &IdempotentE) -> TypeMap {
    let n = e.n;
    let ep = e.to_partial();
    let mut lambda_lower = SimpleSubset::empty(n);
    for j in 1..n {
        let l = ep.left_simple(j).expect("in range");
        let r = ep.right_simple(j).expect("in range");
        if l == ep && r == ep {
            lambda_lower.insert(j).expect("in range");
        }
    }
    let lambda_upper = IdempotentE::all(n)
        .iter()
        .filter(|f| e.leq(f))
        .fold(SimpleSubset::full(n), |acc, f| {
            acc.intersection(&f.lambda())
        });
    TypeMap {
        lambda: e.lambda(),
        lambda_lower,
        lambda_upper,
    }
}

/// `x = a e b⁻¹` with `a ∈ D_*(e)` and `b ∈ D(e)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StandardForm {
    pub a: Permutation,
    pub e: IdempotentE,
    pub b: Permutation,
}

impl StandardForm {
    pub fn reconstruct(&self) -> PartialPerm {
        let ae = self.e.to_partial().left_mul(&self.a).expect("same degree");
        ae.right_mul(&self.b.inverse()).expect("same degree")
    }
}

/// `b` lists the domain of `σ` and then its complement, each increasingly;
/// `a` sends `j ≤ r` to `σ(b(j))` and lists the unused values increasingly.
pub fn standard_form(sigma: &PartialPerm) -> StandardForm {
    let n = sigma.degree();
    let r = sigma.rank();
    let dom = sigma.domain();
    let mut b_images: Vec<u8> = dom.iter().map(|&k| k as u8).collect();
    b_images.extend((1..=n).filter(|k| !dom.contains(k)).map(|k| k as u8));
    let image = sigma.image_set();
    let mut a_images: Vec<u8> = dom.iter().map(|&k| sigma.images()[k - 1]).collect();
    a_images.extend((1..=n).filter(|v| !image.contains(v)).map(|v| v as u8));
    StandardForm {
        a: Permutation::from_images(a_images).expect("bijection"),
        e: IdempotentE { n, i: r },
        b: Permutation::from_images(b_images).expect("bijection"),
    }
}

/// Comparison of standard forms: `e ≤ f` and some `w ∈ W(f)W(e)` has
/// `a ≤ cw` and `w⁻¹d⁻¹ ≤ b⁻¹`. Products `W(f)W(e)` are memoized.
#[derive(Debug, Default)]
pub struct StandardFormOrder {
    products: HashMap<(usize, usize, usize), Vec<Permutation>>,
}

impl StandardFormOrder {
    pub fn new() -> Self {
        Self::default()
    }

    fn product_set(&mut self, f: &IdempotentE, e: &IdempotentE) -> &[Permutation] {
        self.products.entry((f.n, f.i, e.i)).or_insert_with(|| {
            let wf = f.centralizer();
            let we = e.centralizer();
            let mut set: Vec<Permutation> = wf
                .iter()
                .flat_map(|p| we.iter().map(move |q| p * q))
                .collect();
            set.sort();
            set.dedup();
            set
        })
    }

    pub fn leq(&mut self, x: &StandardForm, y: &StandardForm) -> Result<bool> {
        if x.e.n != y.e.n {
            return Err(Error::DegreeMismatch {
                left: x.e.n,
                right: y.e.n,
            });
        }
        if !x.e.leq(&y.e) {
            return Ok(false);
        }
        let b_inv = x.b.inverse();
        let d_inv = y.b.inverse();
        let (a, c) = (&x.a, &y.a);
        let ws = self.product_set(&y.e, &x.e).to_vec();
        Ok(ws
            .iter()
            .any(|w| a.bruhat_leq(&(c * w)) && (&w.inverse() * &d_inv).bruhat_leq(&b_inv)))
    }
}

pub fn bcr_leq_sf(x: &StandardForm, y: &StandardForm) -> Result<bool> {
    StandardFormOrder::new().leq(x, y)
}

/// `R_n` under the Bruhat–Chevalley–Renner order, with its grading.
#[derive(Clone, Debug)]
pub struct RennerPoset {
    pub n: usize,
    pub elements: Vec<PartialPerm>,
    pub poset: FinitePoset,
    pub ranks: Vec<usize>,
    index: HashMap<PartialPerm, usize>,
}

impl RennerPoset {
    /// Fails with `NotGraded` if the order is not graded, since lengths are
    /// defined as graded ranks.
    pub fn new(n: usize, limits: &EnumerationLimits) -> Result<Self> {
        let mut elements = rook_monoid(n, limits)?;
        elements.sort_by_key(|x| (weighted_key(x), x.clone()));
        let labels = elements.iter().map(|x| x.to_string()).collect();
        let poset = FinitePoset::from_leq(labels, |i, j| {
            prefix_dominated(elements[i].images(), elements[j].images())
        })?;
        let ranks = poset.ranks()?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(k, x)| (x.clone(), k))
            .collect();
        Ok(RennerPoset {
            n,
            elements,
            poset,
            ranks,
            index,
        })
    }

    pub fn index_of(&self, x: &PartialPerm) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Graded rank of `x`.
    pub fn length(&self, x: &PartialPerm) -> Option<usize> {
        self.index_of(x).map(|k| self.ranks[k])
    }

    pub fn height(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }
}

/// Strictly increasing along the order: `Σ_j (n - j + 1) σ_j`.
fn weighted_key(x: &PartialPerm) -> usize {
    let n = x.degree();
    x.images()
        .iter()
        .enumerate()
        .map(|(j, &v)| (n - j) * v as usize)
        .sum()
}

pub fn renner_poset(n: usize, limits: &EnumerationLimits) -> Result<RennerPoset> {
    RennerPoset::new(n, limits)
}

/// Bruhat order on `S_n`; elements by length, then lexicographically.
pub fn bruhat_order(n: usize, limits: &EnumerationLimits) -> Result<FinitePoset> {
    let mut w = crate::perm::symmetric_group(n, limits)?;
    w.sort_by_key(|x| (x.length(), x.clone()));
    FinitePoset::from_leq(w.iter().map(|x| x.to_string()).collect(), |a, b| {
        prefix_dominated(w[a].images(), w[b].images())
    })
}

/// An element `e·x` of the Gauss–Jordan monoid with `x ∈ D(e)⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GjElement {
    pub e: IdempotentE,
    pub x: Permutation,
    pub element: PartialPerm,
}

/// `x⁻¹ ∈ D(e)`: `x⁻¹` increasing on `1..=r` and on `r+1..=n`.
fn is_gj_representative(e: &IdempotentE, x: &Permutation) -> bool {
    let b = x.inverse();
    let im = b.images();
    (1..e.n).filter(|&j| j != e.i).all(|j| im[j - 1] < im[j])
}

/// `GJ = ⊔_e e·D(e)⁻¹`, ordered by rank and then representative.
pub fn gauss_jordan(n: usize, limits: &EnumerationLimits) -> Result<Vec<GjElement>> {
    let group = crate::perm::symmetric_group(n, limits)?;
    let mut out = Vec::new();
    for e in IdempotentE::all(n) {
        let ep = e.to_partial();
        for x in group.iter().filter(|x| is_gj_representative(&e, x)) {
            out.push(GjElement {
                e,
                x: x.clone(),
                element: ep.multiply(&x.to_partial())?,
            });
        }
    }
    Ok(out)
}

/// `ex ≤ fy` iff `e ≤ f` and `y ≤ wx` for some `w ∈ W(e)`.
pub fn gj_leq(e: &IdempotentE, x: &Permutation, f: &IdempotentE, y: &Permutation) -> Result<bool> {
    for (id, rep) in [(e, x), (f, y)] {
        if rep.degree() != id.n {
            return Err(Error::DegreeMismatch {
                left: rep.degree(),
                right: id.n,
            });
        }
        if !is_gj_representative(id, rep) {
            return Err(Error::NotGjRepresentative(format!("{rep} for {id}")));
        }
    }
    if e.n != f.n {
        return Err(Error::DegreeMismatch {
            left: e.n,
            right: f.n,
        });
    }
    if !e.leq(f) {
        return Ok(false);
    }
    Ok(e.centralizer().iter().any(|w| y.bruhat_leq(&(w * x))))
}
