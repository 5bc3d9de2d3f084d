//! Hamming and m-spotty weights, α-vectors and weight-distribution tables.
//!
//! The m-spotty weight of a word counts t/b-errors: each byte contributes
//! `ceil(w_H(byte) / t)`. Because that only depends on the byte's Hamming
//! weight, a codeword is summarized by its α-vector `(α_0, ..., α_b)`, where
//! `α_j` is the number of bytes of Hamming weight `j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use crate::code::{ByteLayout, LinearCode, Word};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::RingElement;

/// Number of nonzero coordinates.
pub fn hamming_weight(v: &[RingElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

/// Indices of the nonzero coordinates (0-based).
pub fn support(v: &[RingElement]) -> Vec<usize> {
    (0..v.len()).filter(|&i| !v[i].is_zero()).collect()
}

/// Indices of the zero coordinates.
pub fn complement_support(v: &[RingElement]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i].is_zero()).collect()
}

/// `w_M(w) = sum over bytes of ceil(w_H(byte) / t)`.
pub fn m_spotty_weight(w: &Word) -> usize {
    let layout = w.layout();
    w.bytes()
        .map(|byte| layout.byte_cost(hamming_weight(byte)))
        .sum()
}

/// `d_M(x, y) = sum over bytes of ceil(d_H(x_i, y_i) / t)`.
pub fn m_spotty_distance(x: &Word, y: &Word) -> Result<usize> {
    if x.layout() != y.layout() {
        return Err(Error::layout(format!(
            "distance between words with layouts {} and {}",
            x.layout(),
            y.layout()
        )));
    }
    if x.params() != y.params() {
        return Err(Error::param("distance between words over different rings"));
    }
    let layout = x.layout();
    Ok(x.bytes()
        .zip(y.bytes())
        .map(|(a, b)| {
            let d = a.iter().zip(b).filter(|(p, q)| p != q).count();
            layout.byte_cost(d)
        })
        .sum())
}

/// Histogram of byte Hamming weights, `α_j` at index `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlphaVector(Vec<u32>);

impl AlphaVector {
    /// Checks `α` has `b + 1` entries summing to `n`.
    pub fn new(layout: ByteLayout, counts: Vec<u32>) -> Result<Self> {
        if counts.len() != layout.b() + 1 {
            return Err(Error::layout(format!(
                "α-vector needs b+1 = {} entries, got {}",
                layout.b() + 1,
                counts.len()
            )));
        }
        let total: u64 = counts.iter().map(|&c| c as u64).sum();
        if total != layout.n() as u64 {
            return Err(Error::layout(format!(
                "α-vector entries sum to {total}, expected n = {}",
                layout.n()
            )));
        }
        Ok(AlphaVector(counts))
    }

    /// `(n, 0, ..., 0)`, the α-vector of the zero word.
    pub fn zero_word(layout: ByteLayout) -> Self {
        let mut v = vec![0; layout.b() + 1];
        v[0] = layout.n() as u32;
        AlphaVector(v)
    }

    pub fn counts(&self) -> &[u32] {
        &self.0
    }

    /// `sum_j ceil(j/t) α_j`, the m-spotty weight of any word with this α-vector.
    pub fn m_spotty_weight(&self, layout: ByteLayout) -> usize {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &a)| layout.byte_cost(j) * a as usize)
            .sum()
    }
}

impl fmt::Display for AlphaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for AlphaVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

pub fn alpha_vector(w: &Word) -> AlphaVector {
    let mut counts = vec![0u32; w.layout().b() + 1];
    for byte in w.bytes() {
        counts[hamming_weight(byte)] += 1;
    }
    AlphaVector(counts)
}

/// Codeword counts `A_α` keyed by α-vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistributionTable {
    layout: ByteLayout,
    entries: BTreeMap<AlphaVector, u64>,
}

impl DistributionTable {
    /// Builds a table from `(α, A_α)` pairs; repeated α-vectors accumulate and
    /// zero counts are dropped.
    pub fn from_entries(
        layout: ByteLayout,
        entries: impl IntoIterator<Item = (Vec<u32>, u64)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (alpha, count) in entries {
            let alpha = AlphaVector::new(layout, alpha)?;
            if count > 0 {
                *map.entry(alpha).or_insert(0) += count;
            }
        }
        Ok(DistributionTable {
            layout,
            entries: map,
        })
    }

    pub fn layout(&self) -> ByteLayout {
        self.layout
    }

    /// Entries in ascending α-vector order.
    pub fn entries(&self) -> impl Iterator<Item = (&AlphaVector, u64)> {
        self.entries.iter().map(|(a, &c)| (a, c))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, alpha: &[u32]) -> u64 {
        self.entries
            .get(&AlphaVector(alpha.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    /// `sum_α A_α`, the number of words tallied.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// The same counts read with a different spotty parameter; α-vectors do
    /// not depend on `t`.
    pub fn with_t(&self, t: usize) -> Result<Self> {
        Ok(DistributionTable {
            layout: self.layout.with_t(t)?,
            entries: self.entries.clone(),
        })
    }
}

pub fn distribution(code: &LinearCode) -> DistributionTable {
    let mut entries = BTreeMap::new();
    for w in code.iter() {
        *entries.entry(alpha_vector(w)).or_insert(0u64) += 1;
    }
    DistributionTable {
        layout: code.layout(),
        entries,
    }
}

/// `W(z) = sum_{c in C} z^{w_M(c)}`, one codeword at a time.
pub fn enumerator(code: &LinearCode) -> Polynomial {
    let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
    for w in code.iter() {
        *counts.entry(m_spotty_weight(w) as u32).or_insert(0) += 1;
    }
    Polynomial::from_terms(counts.into_iter().map(|(e, c)| (e, BigInt::from(c))))
}
