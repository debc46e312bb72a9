//! Schur expansions of skew Schur functions.
//!
//! Two independent routes are provided: [`lr_expand`] counts
//! Littlewood–Richardson fillings of an arbitrary skew shape, and
//! [`ribbon_expand`] counts standard tableaux by descent set, which only
//! applies to ribbons. Tests hold them against each other.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{enumerate, Composition, Partition, SkewShape};
use crate::tableaux;

/// A nonnegative integer combination of Schur functions of one degree.
///
/// Zero coefficients are never stored, so the key set is the support. Keys
/// iterate in reverse-lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// `s_∅ = 1`.
    pub fn one() -> Self {
        SchurExpansion::schur(Partition::empty())
    }

    /// The single Schur function `s_λ`.
    pub fn schur(shape: Partition) -> Self {
        let degree = shape.size();
        SchurExpansion {
            degree,
            terms: BTreeMap::from([(shape, 1)]),
        }
    }

    /// Builds an expansion from `(λ, coefficient)` pairs, merging repeats and
    /// dropping zeros. Every `λ` must have size `degree`.
    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (Partition, u64)>) -> Result<Self> {
        let mut out = SchurExpansion::zero(degree);
        for (shape, coeff) in terms {
            out.add_term(shape, coeff)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, shape: Partition, coeff: u64) -> Result<()> {
        if shape.size() != self.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: shape.size(),
            });
        }
        if coeff == 0 {
            return Ok(());
        }
        let slot = self.terms.entry(shape).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or(Error::Overflow)?;
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coefficient(&self, shape: &Partition) -> u64 {
        self.terms.get(shape).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn support(&self) -> BTreeSet<Partition> {
        self.terms.keys().cloned().collect()
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Result<u64> {
        self.terms
            .values()
            .try_fold(0u64, |acc, &c| acc.checked_add(c).ok_or(Error::Overflow))
    }

    pub fn checked_add(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        let mut out = self.clone();
        for (shape, coeff) in other.terms() {
            out.add_term(shape.clone(), coeff)?;
        }
        Ok(out)
    }

    /// `other - self` is Schur-positive: every coefficient here is at most the
    /// matching one in `other`. Differing degrees compare as `false` unless
    /// `self` is zero.
    pub fn is_dominated_by(&self, other: &SchurExpansion) -> bool {
        if self.is_zero() {
            return true;
        }
        self.degree == other.degree && self.terms().all(|(shape, c)| c <= other.coefficient(shape))
    }

    /// Product, extended bilinearly from `s_λ s_μ = Σ c^ν_{λμ} s_ν`.
    pub fn multiply(&self, other: &SchurExpansion) -> Result<SchurExpansion> {
        let mut out = SchurExpansion::zero(self.degree + other.degree);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let weight = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                for (nu, c) in product_of_schurs(a, b).terms() {
                    out.add_term(nu.clone(), c.checked_mul(weight).ok_or(Error::Overflow)?)?;
                }
            }
        }
        Ok(out)
    }

    /// `ω`, sending `s_λ` to `s_{λ^t}`.
    pub fn omega(&self) -> SchurExpansion {
        SchurExpansion {
            degree: self.degree,
            terms: self.terms.iter().map(|(k, &v)| (k.transpose(), v)).collect(),
        }
    }
}

impl Serialize for SchurExpansion {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Term<'a>(&'a Partition, u64);
        impl Serialize for Term<'_> {
            fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("partition", self.0)?;
                m.serialize_entry("coeff", &self.1)?;
                m.end()
            }
        }
        let terms: Vec<Term> = self.terms().map(|(k, v)| Term(k, v)).collect();
        let mut st = serializer.serialize_struct("SchurExpansion", 2)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for SchurExpansion {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Term {
            partition: Partition,
            coeff: u64,
        }
        #[derive(Deserialize)]
        struct Raw {
            degree: usize,
            terms: Vec<Term>,
        }
        let raw = Raw::deserialize(deserializer)?;
        SchurExpansion::from_terms(raw.degree, raw.terms.into_iter().map(|t| (t.partition, t.coeff)))
            .map_err(serde::de::Error::custom)
    }
}

/// Schur expansion of `s_{λ/μ}` by the Littlewood–Richardson rule.
pub fn lr_expand(shape: &SkewShape) -> SchurExpansion {
    let mut out = SchurExpansion::zero(shape.size());
    for (content, count) in tableaux::lr_counts(shape) {
        out.add_term(Partition::from_parts_unchecked(content), count)
            .expect("LR content has the shape's size and counts fit in u64");
    }
    out
}

/// Schur expansion of the ribbon with rows `alpha`, where the coefficient of
/// `s_λ` counts standard tableaux of shape `λ` with descent set `S(α)`.
pub fn ribbon_expand(alpha: &Composition) -> SchurExpansion {
    let n = alpha.size();
    let descents = alpha.descent_set();
    let mut out = SchurExpansion::zero(n);
    for shape in enumerate::partitions(n) {
        let count = tableaux::count_syt_with_descents(&shape, &descents).expect("S(α) lies inside 1..n");
        out.add_term(shape, count).expect("partition has size n");
    }
    out
}

pub fn support_of(shape: &SkewShape) -> BTreeSet<Partition> {
    lr_expand(shape).support()
}

/// `c^ν_{μλ}`: the number of LR fillings of `ν/μ` with content `λ`. Returns 0
/// when `μ ⊄ ν` or the sizes do not add up.
pub fn lr_coefficient(nu: &Partition, lambda: &Partition, mu: &Partition) -> u64 {
    if !nu.contains(mu) || lambda.size() + mu.size() != nu.size() {
        return 0;
    }
    if lambda.is_empty() {
        return 1;
    }
    let shape = SkewShape::new(nu.clone(), mu.clone()).expect("nonempty skew shape");
    tableaux::lr_count_with_content(&shape, lambda)
}

/// The disconnected skew shape whose skew Schur function is `s_a s_b`: `a`
/// sits above and to the right of `b`.
pub fn product_shape(a: &Partition, b: &Partition) -> Option<SkewShape> {
    if a.is_empty() && b.is_empty() {
        return None;
    }
    let shift = b.width();
    let mut outer: Vec<usize> = a.parts().iter().map(|&p| p + shift).collect();
    outer.extend_from_slice(b.parts());
    let inner = vec![shift; a.len()];
    Some(
        SkewShape::new(
            Partition::new(outer).expect("stacked rows decrease"),
            Partition::new(inner).unwrap(),
        )
        .expect("product shape is a valid skew shape"),
    )
}

fn product_of_schurs(a: &Partition, b: &Partition) -> SchurExpansion {
    if a.is_empty() {
        return SchurExpansion::schur(b.clone());
    }
    if b.is_empty() {
        return SchurExpansion::schur(a.clone());
    }
    lr_expand(&product_shape(a, b).unwrap())
}

pub fn multiply(f: &SchurExpansion, g: &SchurExpansion) -> Result<SchurExpansion> {
    f.multiply(g)
}

pub fn omega(f: &SchurExpansion) -> SchurExpansion {
    f.omega()
}

/// `s_a - s_b` is Schur-positive. Shapes of different sizes never compare.
pub fn diff_schur_positive(a: &SkewShape, b: &SkewShape) -> bool {
    a.size() == b.size() && lr_expand(b).is_dominated_by(&lr_expand(a))
}

/// `supp(b) ⊆ supp(a)`. Shapes of different sizes never compare.
pub fn support_contained(b: &SkewShape, a: &SkewShape) -> bool {
    b.size() == a.size() && support_of(b).is_subset(&support_of(a))
}

/// Thread-safe cache of [`lr_expand`] keyed by canonical shape. Concurrent
/// misses on the same key may both compute; the results are identical.
#[derive(Default)]
pub struct ExpansionMemo {
    map: RwLock<HashMap<SkewShape, Arc<SchurExpansion>>>,
}

impl ExpansionMemo {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn expand(&self, shape: &SkewShape) -> Arc<SchurExpansion> {
        if let Some(hit) = self.map.read().unwrap().get(shape) {
            return Arc::clone(hit);
        }
        let value = Arc::new(lr_expand(shape));
        self.map.write().unwrap().entry(shape.clone()).or_insert(value).clone()
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
