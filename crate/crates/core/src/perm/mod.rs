//! Permutations, partial permutations and simple-reflection combinatorics.
//!
//! Products are composition of maps: `(u·v)(k) = u(v(k))`. Multiplying `x` on the
//! left by `s_i` exchanges the values `i, i+1`; on the right it exchanges the
//! entries at positions `i, i+1`.

mod codec;
mod enumerate;
mod subset;

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use enumerate::{rook_monoid, rook_monoid_size, symmetric_group, EnumerationLimits};
pub use subset::SimpleSubset;

/// An element of `S_n` in one-line notation `w_1 … w_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

/// Linear-element classification of a permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ElementClass {
    NotLinear,
    Linear,
    Coxeter,
}

/// Left/right ascent and descent sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AscentDescent {
    pub asc_l: SimpleSubset,
    pub asc_r: SimpleSubset,
    pub des_l: SimpleSubset,
    pub des_r: SimpleSubset,
}

fn check_degree(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DegreeMismatch { left, right });
    }
    Ok(())
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!((1..=u8::MAX as usize).contains(&n));
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// The longest element `w_0 = n(n-1)…1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).rev().collect(),
        }
    }

    /// The simple transposition `s_i`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::InvalidGenerator { index: i, n });
        }
        let mut w = Self::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse {
                    input: codec::format_one_line(&images),
                    reason: "not a permutation".into(),
                });
            }
            seen[v] = true;
        }
        if n == 0 {
            return Err(Error::Parse {
                input: String::new(),
                reason: "empty permutation".into(),
            });
        }
        Ok(Permutation { images })
    }

    /// Product of simple reflections `s_{a_1} s_{a_2} …`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(n);
        for &i in word.iter().rev() {
            w = w.left_simple(i)?;
        }
        Ok(w)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(i)` for `1 ≤ i ≤ n`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(k, &v)| v as usize == k + 1)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        Ok(Permutation {
            images: other
                .images
                .iter()
                .map(|&v| self.images[v as usize - 1])
                .collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            inv[v as usize - 1] = (k + 1) as u8;
        }
        Permutation { images: inv }
    }

    /// `s_i · w`: exchanges the values `i` and `i+1`.
    pub fn left_simple(&self, i: usize) -> Result<Self> {
        let n = self.degree();
        if i == 0 || i >= n {
            return Err(Error::InvalidGenerator { index: i, n });
        }
        let mut w = self.clone();
        for v in w.images.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        Ok(w)
    }

    /// `w · s_i`: exchanges the entries at positions `i` and `i+1`.
    pub fn right_simple(&self, i: usize) -> Result<Self> {
        let n = self.degree();
        if i == 0 || i >= n {
            return Err(Error::InvalidGenerator { index: i, n });
        }
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`: the value `i+1` appears before `i`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let mut pos_i = 0;
        let mut pos_next = 0;
        for (k, &v) in self.images.iter().enumerate() {
            if v as usize == i {
                pos_i = k;
            } else if v as usize == i + 1 {
                pos_next = k;
            }
        }
        pos_next < pos_i
    }

    pub fn ascent_descent_sets(&self) -> AscentDescent {
        let n = self.degree();
        let mut des_l = SimpleSubset::empty(n);
        let mut des_r = SimpleSubset::empty(n);
        let inv = self.inverse();
        for i in 1..n {
            if self.has_right_descent(i) {
                des_r.insert(i).expect("generator in range");
            }
            if inv.has_right_descent(i) {
                des_l.insert(i).expect("generator in range");
            }
        }
        AscentDescent {
            asc_l: des_l.complement(),
            asc_r: des_r.complement(),
            des_l,
            des_r,
        }
    }

    /// Simple reflections occurring in a reduced word: `s_i` such that `w`
    /// does not stabilize `{1..i}`.
    pub fn support(&self) -> SimpleSubset {
        let n = self.degree();
        let mut s = SimpleSubset::empty(n);
        let mut max = 0usize;
        for i in 1..n {
            max = max.max(self.images[i - 1] as usize);
            if max > i {
                s.insert(i).expect("generator in range");
            }
        }
        s
    }

    pub fn classify(&self) -> ElementClass {
        let supp = self.support();
        if self.length() != supp.len() {
            ElementClass::NotLinear
        } else if supp.is_full() {
            ElementClass::Coxeter
        } else {
            ElementClass::Linear
        }
    }

    /// The lexicographically least reduced word `[a_1, …, a_k]` with
    /// `w = s_{a_1} ⋯ s_{a_k}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        'outer: loop {
            for i in 1..self.degree() {
                if w.has_left_descent(i) {
                    word.push(i);
                    w = w.left_simple(i).expect("generator in range");
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// 0-Hecke product `m(self)·m(other)`, folding the reduced word of `self`
    /// onto `other` from the right.
    pub fn demazure_product(&self, other: &Self) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        let mut w = other.clone();
        for &i in self.reduced_word().iter().rev() {
            if !w.has_left_descent(i) {
                w = w.left_simple(i)?;
            }
        }
        Ok(w)
    }

    /// Bruhat order, via the full-rank embedding into the rook monoid.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        crate::bruhat::prefix_dominated(&self.images, &other.images)
    }

    pub fn to_partial(&self) -> PartialPerm {
        PartialPerm {
            images: self.images.clone(),
        }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::multiply`] to handle it.
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.multiply(rhs).expect("degree mismatch")
    }
}

/// An injective partial map of `{1..n}`; `0` marks an undefined point.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialPerm {
    images: Vec<u8>,
}

impl PartialPerm {
    pub fn zero(n: usize) -> Self {
        PartialPerm { images: vec![0; n] }
    }

    pub fn identity(n: usize) -> Self {
        Permutation::identity(n).to_partial()
    }

    /// The idempotent `e_i`: identity on `{1..i}`, undefined elsewhere.
    pub fn idempotent(n: usize, i: usize) -> Result<Self> {
        if i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        let mut images = vec![0u8; n];
        for (k, v) in images.iter_mut().enumerate().take(i) {
            *v = (k + 1) as u8;
        }
        Ok(PartialPerm { images })
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Parse {
                input: String::new(),
                reason: "empty partial permutation".into(),
            });
        }
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v > n || (v != 0 && seen[v]) {
                return Err(Error::Parse {
                    input: codec::format_one_line(&images),
                    reason: "not an injective partial map".into(),
                });
            }
            seen[v] = true;
        }
        Ok(PartialPerm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&v| v != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|&v| v == 0)
    }

    pub fn as_permutation(&self) -> Option<Permutation> {
        (self.rank() == self.degree()).then(|| Permutation {
            images: self.images.clone(),
        })
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        check_degree(self.degree(), other.degree())?;
        Ok(PartialPerm {
            images: other
                .images
                .iter()
                .map(|&v| {
                    if v == 0 {
                        0
                    } else {
                        self.images[v as usize - 1]
                    }
                })
                .collect(),
        })
    }

    /// `w · self` for a unit `w`: relabels values.
    pub fn left_mul(&self, w: &Permutation) -> Result<Self> {
        w.to_partial().multiply(self)
    }

    /// `self · w` for a unit `w`: permutes positions.
    pub fn right_mul(&self, w: &Permutation) -> Result<Self> {
        self.multiply(&w.to_partial())
    }

    /// `s_i · self`: exchanges the values `i, i+1`.
    pub fn left_simple(&self, i: usize) -> Result<Self> {
        let n = self.degree();
        if i == 0 || i >= n {
            return Err(Error::InvalidGenerator { index: i, n });
        }
        let mut x = self.clone();
        for v in x.images.iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        Ok(x)
    }

    /// `self · s_i`: exchanges the entries at positions `i, i+1`.
    pub fn right_simple(&self, i: usize) -> Result<Self> {
        let n = self.degree();
        if i == 0 || i >= n {
            return Err(Error::InvalidGenerator { index: i, n });
        }
        let mut x = self.clone();
        x.images.swap(i - 1, i);
        Ok(x)
    }

    /// `w · self · w⁻¹`.
    pub fn conjugate(&self, w: &Permutation) -> Result<Self> {
        self.left_mul(w)?.right_mul(&w.inverse())
    }

    /// Whether `self^n` is the zero map.
    pub fn is_nilpotent(&self) -> bool {
        let mut p = self.clone();
        for _ in 1..self.degree() {
            p = p.multiply(self).expect("same degree");
        }
        p.is_zero()
    }

    /// Positions where the map is defined.
    pub fn domain(&self) -> Vec<usize> {
        (1..=self.degree())
            .filter(|&k| self.images[k - 1] != 0)
            .collect()
    }

    /// Values attained, increasing.
    pub fn image_set(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .images
            .iter()
            .filter(|&&v| v != 0)
            .map(|&v| v as usize)
            .collect();
        v.sort_unstable();
        v
    }
}

impl Mul for &PartialPerm {
    type Output = PartialPerm;

    /// Panics on a degree mismatch; use [`PartialPerm::multiply`] to handle it.
    fn mul(self, rhs: &PartialPerm) -> PartialPerm {
        self.multiply(rhs).expect("degree mismatch")
    }
}

impl From<&Permutation> for PartialPerm {
    fn from(w: &Permutation) -> Self {
        w.to_partial()
    }
}

macro_rules! text_codec {
    ($ty:ty) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&codec::format_one_line(&self.images))
            }
        }

        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($ty), self)
            }
        }

        impl FromStr for $ty {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                <$ty>::from_images(codec::parse_one_line(s)?)
            }
        }

        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                s.serialize_str(&self.to_string())
            }
        }

        impl<'de> Deserialize<'de> for $ty {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let s = String::deserialize(d)?;
                s.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

text_codec!(Permutation);
text_codec!(PartialPerm);
