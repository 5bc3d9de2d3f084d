//! Words, byte layouts, generator matrices and explicitly enumerated codes.
//!
//! A word of length `N = n * b` is split into `n` bytes of `b` consecutive
//! coordinates. Indices are 0-based throughout: byte `i` covers coordinates
//! `i*b .. (i+1)*b`.
//!
//! Codes are always materialized. [`span`] builds a code from generator rows
//! (duplicates and dependent rows are fine), and [`dual`] finds the dual by
//! scanning all of `R^N`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{check_budget, Error, Result};
use crate::ring::{mul_bits, RingElement, RingParams};

/// Default limit on coefficient tuples enumerated by [`span`].
pub const DEFAULT_SPAN_BUDGET: u64 = 1 << 24;
/// Default limit on ambient vectors scanned by [`dual`].
pub const DEFAULT_DUAL_BUDGET: u64 = 1 << 28;

/// Byte length `b`, spotty parameter `t` and byte count `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ByteLayout {
    b: usize,
    t: usize,
    n: usize,
}

impl ByteLayout {
    pub fn new(b: usize, t: usize, n: usize) -> Result<Self> {
        if b == 0 {
            return Err(Error::layout("byte length b must be at least 1"));
        }
        if t == 0 || t > b {
            return Err(Error::layout(format!(
                "spotty parameter t={t} must satisfy 1 <= t <= b={b}"
            )));
        }
        if n == 0 {
            return Err(Error::layout("a word needs at least one byte"));
        }
        Ok(ByteLayout { b, t, n })
    }

    /// Bits per byte.
    pub fn b(&self) -> usize {
        self.b
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Number of bytes.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Total length `N = n * b`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.n * self.b
    }

    /// `ceil(h / t)`: how many t/b-errors a byte of Hamming weight `h` counts as.
    #[inline]
    pub fn byte_cost(&self, h: usize) -> usize {
        h.div_ceil(self.t)
    }

    /// Upper bound `n * ceil(b/t)` on the m-spotty weight of any word.
    pub fn max_weight(&self) -> usize {
        self.n * self.byte_cost(self.b)
    }

    pub fn with_t(&self, t: usize) -> Result<Self> {
        ByteLayout::new(self.b, t, self.n)
    }
}

impl fmt::Display for ByteLayout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} b={} t={}", self.n, self.b, self.t)
    }
}

/// A vector in `R^N` tied to a byte layout.
///
/// Words order lexicographically by their coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    coords: Vec<RingElement>,
    params: RingParams,
    layout: ByteLayout,
}

impl Word {
    pub fn new(params: RingParams, layout: ByteLayout, coords: Vec<RingElement>) -> Result<Self> {
        if coords.len() != layout.len() {
            return Err(Error::layout(format!(
                "word has {} coordinates, layout {layout} needs {}",
                coords.len(),
                layout.len()
            )));
        }
        if let Some(bad) = coords.iter().find(|x| x.params() != params) {
            return Err(Error::param(format!(
                "coordinate {bad} belongs to m={}, expected m={}",
                bad.params().m(),
                params.m()
            )));
        }
        Ok(Word {
            coords,
            params,
            layout,
        })
    }

    pub fn zero(params: RingParams, layout: ByteLayout) -> Self {
        Word {
            coords: vec![params.zero(); layout.len()],
            params,
            layout,
        }
    }

    pub(crate) fn from_bits(params: RingParams, layout: ByteLayout, bits: &[u32]) -> Self {
        Word {
            coords: bits.iter().map(|&x| params.element_unchecked(x)).collect(),
            params,
            layout,
        }
    }

    pub fn parse(params: RingParams, layout: ByteLayout, text: &str) -> Result<Self> {
        let coords = text
            .split_whitespace()
            .map(|tok| params.parse_element(tok))
            .collect::<Result<Vec<_>>>()?;
        Word::new(params, layout, coords)
    }

    pub fn coords(&self) -> &[RingElement] {
        &self.coords
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn layout(&self) -> ByteLayout {
        self.layout
    }

    /// Byte `i` (0-based).
    pub fn byte(&self, i: usize) -> &[RingElement] {
        let b = self.layout.b;
        &self.coords[i * b..(i + 1) * b]
    }

    pub fn bytes(&self) -> std::slice::ChunksExact<'_, RingElement> {
        self.coords.chunks_exact(self.layout.b)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|x| x.is_zero())
    }

    fn check_compatible(&self, other: &Word) -> Result<()> {
        if self.params != other.params {
            return Err(Error::param("words live over different rings"));
        }
        if self.layout != other.layout {
            return Err(Error::layout(format!(
                "layouts differ: {} vs {}",
                self.layout, other.layout
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Word) -> Result<Word> {
        self.check_compatible(other)?;
        Ok(Word {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(&x, &y)| x + y)
                .collect(),
            params: self.params,
            layout: self.layout,
        })
    }

    pub fn scale(&self, r: RingElement) -> Result<Word> {
        if r.params() != self.params {
            return Err(Error::param("scalar belongs to a different ring"));
        }
        Ok(Word {
            coords: self.coords.iter().map(|&x| r * x).collect(),
            params: self.params,
            layout: self.layout,
        })
    }

    fn bits(&self) -> Vec<u32> {
        self.coords.iter().map(|x| x.bits()).collect()
    }
}

/// Bytes separated by `|`, coordinates by spaces.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, byte) in self.bytes().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (j, x) in byte.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// `<c, v> = sum_i c_i v_i` over all `N` coordinates.
pub fn inner_product(c: &Word, v: &Word) -> Result<RingElement> {
    if c.coords.len() != v.coords.len() {
        return Err(Error::param(format!(
            "inner product of words of lengths {} and {}",
            c.coords.len(),
            v.coords.len()
        )));
    }
    if c.params != v.params {
        return Err(Error::param("inner product of words over different rings"));
    }
    Ok(c.coords
        .iter()
        .zip(&v.coords)
        .fold(c.params.zero(), |acc, (&x, &y)| acc + x * y))
}

/// `k` rows of length `N`; the rows need not be independent or in standard form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorMatrix {
    params: RingParams,
    layout: ByteLayout,
    rows: Vec<Vec<RingElement>>,
}

impl GeneratorMatrix {
    pub fn new(
        params: RingParams,
        layout: ByteLayout,
        rows: Vec<Vec<RingElement>>,
    ) -> Result<Self> {
        for (i, row) in rows.iter().enumerate() {
            if row.len() != layout.len() {
                return Err(Error::layout(format!(
                    "row {i} has length {}, expected N={}",
                    row.len(),
                    layout.len()
                )));
            }
            if row.iter().any(|x| x.params() != params) {
                return Err(Error::param(format!("row {i} mixes rings")));
            }
        }
        Ok(GeneratorMatrix {
            params,
            layout,
            rows,
        })
    }

    pub fn from_words(params: RingParams, layout: ByteLayout, words: &[Word]) -> Result<Self> {
        GeneratorMatrix::new(
            params,
            layout,
            words.iter().map(|w| w.coords.clone()).collect(),
        )
    }

    /// The `n`-by-`n` identity, whose span is the whole space.
    pub fn identity(params: RingParams, layout: ByteLayout) -> Self {
        let len = layout.len();
        let rows = (0..len)
            .map(|i| {
                (0..len)
                    .map(|j| if i == j { params.one() } else { params.zero() })
                    .collect()
            })
            .collect();
        GeneratorMatrix {
            params,
            layout,
            rows,
        }
    }

    /// `k` rows with uniformly random entries.
    pub fn random<G: rand::Rng + ?Sized>(
        params: RingParams,
        layout: ByteLayout,
        k: usize,
        rng: &mut G,
    ) -> Self {
        let rows = (0..k)
            .map(|_| {
                (0..layout.len())
                    .map(|_| params.element_unchecked(rng.gen_range(0..params.order())))
                    .collect()
            })
            .collect();
        GeneratorMatrix {
            params,
            layout,
            rows,
        }
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn layout(&self) -> ByteLayout {
        self.layout
    }

    pub fn rows(&self) -> &[Vec<RingElement>] {
        &self.rows
    }

    /// Number of rows `k`.
    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Same matrix viewed with another spotty parameter.
    pub fn with_t(&self, t: usize) -> Result<Self> {
        Ok(GeneratorMatrix {
            layout: self.layout.with_t(t)?,
            ..self.clone()
        })
    }

    /// `|R|^N`, the size of the space [`dual`] scans.
    pub fn ambient_size(&self) -> BigUint {
        BigUint::from(2u32).pow(self.params.m() * self.layout.len() as u32)
    }
}

/// A linear code stored as its sorted, duplicate-free list of codewords.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    params: RingParams,
    layout: ByteLayout,
    words: Vec<Word>,
}

impl LinearCode {
    /// Wraps a list of words, sorting and deduplicating it.
    ///
    /// Only membership of the zero word is checked here; use
    /// [`LinearCode::check_closure`] for full linearity.
    pub fn from_words(
        params: RingParams,
        layout: ByteLayout,
        mut words: Vec<Word>,
    ) -> Result<Self> {
        for w in &words {
            if w.params != params || w.layout != layout {
                return Err(Error::layout(
                    "codeword does not match the code's ring or layout",
                ));
            }
        }
        words.sort();
        words.dedup();
        let code = LinearCode {
            params,
            layout,
            words,
        };
        if !code.contains(&Word::zero(params, layout)) {
            return Err(Error::param("a linear code must contain the zero word"));
        }
        Ok(code)
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn layout(&self) -> ByteLayout {
        self.layout
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    /// Always false: a code contains at least the zero word.
    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.words.iter()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.binary_search(w).is_ok()
    }

    /// Checks closure under addition and under multiplication by every ring
    /// element. Exhaustive over pairs when `|C| <= exhaustive_limit`,
    /// otherwise each codeword is paired with a fixed stride of partners.
    pub fn check_closure(&self, exhaustive_limit: usize) -> Result<()> {
        for w in &self.words {
            for r in self.params.elements() {
                let s = w.scale(r)?;
                if !self.contains(&s) {
                    return Err(Error::integrity(format!("{r} * ({w}) is not a codeword")));
                }
            }
        }
        let partners: Vec<&Word> = if self.words.len() <= exhaustive_limit {
            self.words.iter().collect()
        } else {
            let stride = self.words.len() / 64 + 1;
            self.words.iter().step_by(stride).collect()
        };
        for a in &self.words {
            for b in &partners {
                if !self.contains(&a.try_add(b)?) {
                    return Err(Error::integrity(format!("({a}) + ({b}) is not a codeword")));
                }
            }
        }
        Ok(())
    }

    /// A small generating set, picked greedily in codeword order.
    pub fn generator_matrix(&self) -> GeneratorMatrix {
        let m = self.params.m();
        let mut span: HashSet<Vec<u32>> = HashSet::from([vec![0; self.layout.len()]]);
        let mut rows = Vec::new();
        for w in &self.words {
            if span.len() == self.words.len() {
                break;
            }
            let bits = w.bits();
            if span.contains(&bits) {
                continue;
            }
            span = extend_span(&span, &bits, m);
            rows.push(w.coords.clone());
        }
        GeneratorMatrix {
            params: self.params,
            layout: self.layout,
            rows,
        }
    }
}

/// `{ s + r * row : s in span, r in R }`.
fn extend_span(span: &HashSet<Vec<u32>>, row: &[u32], m: u32) -> HashSet<Vec<u32>> {
    let mut multiples: Vec<Vec<u32>> = (0..1u32 << m)
        .map(|r| row.iter().map(|&x| mul_bits(r, x, m)).collect())
        .collect();
    multiples.sort();
    multiples.dedup();
    let mut next = HashSet::with_capacity(span.len() * multiples.len());
    for s in span {
        for mult in &multiples {
            next.insert(s.iter().zip(mult).map(|(a, b)| a ^ b).collect::<Vec<_>>());
        }
    }
    next
}

/// All `R`-linear combinations of the rows of `g`.
///
/// Refuses to start unless `|R|^k <= budget`. The result is sorted
/// lexicographically.
pub fn span(g: &GeneratorMatrix, budget: u64) -> Result<LinearCode> {
    let required = BigUint::from(g.params.order()).pow(g.k() as u32);
    check_budget("span enumeration", &required, budget)?;
    let m = g.params.m();
    let mut set: HashSet<Vec<u32>> = HashSet::from([vec![0; g.layout.len()]]);
    for row in &g.rows {
        let bits: Vec<u32> = row.iter().map(|x| x.bits()).collect();
        set = extend_span(&set, &bits, m);
    }
    let mut words: Vec<Vec<u32>> = set.into_iter().collect();
    words.sort_unstable();
    Ok(LinearCode {
        params: g.params,
        layout: g.layout,
        words: words
            .iter()
            .map(|bits| Word::from_bits(g.params, g.layout, bits))
            .collect(),
    })
}

/// Indices of ambient vectors scanned per parallel work item.
const SCAN_CHUNK: u64 = 1 << 16;

/// Exhaustive search of `R^N` for the words orthogonal to every row of `g`.
///
/// A vector is identified with the integer whose base-`2^m` digits are its
/// coordinates, coordinate 0 most significant, so scanning indices in order
/// yields the dual already sorted. The range is cut into fixed chunks and
/// scanned on a pool of `workers` threads; chunk results are concatenated in
/// index order, so the output does not depend on `workers`.
pub fn dual(g: &GeneratorMatrix, budget: u64, workers: usize) -> Result<LinearCode> {
    let params = g.params;
    let layout = g.layout;
    let indices = dual_indices(g, budget, workers)?;
    let len = layout.len();
    let m = params.m();
    let mask = params.mask() as u64;
    let words = indices
        .iter()
        .map(|&idx| {
            let bits: Vec<u32> = (0..len)
                .map(|j| ((idx >> (m as usize * (len - 1 - j))) & mask) as u32)
                .collect();
            Word::from_bits(params, layout, &bits)
        })
        .collect();
    Ok(LinearCode {
        params,
        layout,
        words,
    })
}

fn dual_indices(g: &GeneratorMatrix, budget: u64, workers: usize) -> Result<Vec<u64>> {
    let m = g.params.m();
    let len = g.layout.len();
    let required = g.ambient_size();
    check_budget("dual scan", &required, budget)?;
    if m as usize * len > 63 {
        return Err(Error::Budget {
            what: "dual scan",
            required,
            budget,
        });
    }
    let total = 1u64 << (m as usize * len);

    // Per row, the nonzero coordinates with their multiplication tables.
    let order = g.params.order();
    let rows: Vec<Vec<(u32, Vec<u32>)>> = g
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(j, x)| {
                    let shift = m * (len - 1 - j) as u32;
                    let table = (0..order).map(|y| mul_bits(x.bits(), y, m)).collect();
                    (shift, table)
                })
                .collect()
        })
        .filter(|terms: &Vec<_>| !terms.is_empty())
        .collect();
    let mask = g.params.mask() as u64;
    let orthogonal = |idx: u64| {
        rows.iter().all(|terms| {
            terms.iter().fold(0u32, |acc, (shift, table)| {
                acc ^ table[((idx >> shift) & mask) as usize]
            }) == 0
        })
    };

    let chunks = total.div_ceil(SCAN_CHUNK);
    let scan = || -> Vec<u64> {
        (0..chunks)
            .into_par_iter()
            .flat_map_iter(|c| {
                let lo = c * SCAN_CHUNK;
                let hi = (lo + SCAN_CHUNK).min(total);
                (lo..hi).filter(|&i| orthogonal(i)).collect::<Vec<_>>()
            })
            .collect()
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::param(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(scan))
}

/// `2^s` with `s = sum_i (m - i + 1) k_i` for a standard-form row profile
/// `(k_1, ..., k_m)`: a block of `k_i` rows led by `u^{i-1}` contributes
/// coefficients from a ring of size `2^{m-i+1}`.
pub fn code_size_from_profile(params: RingParams, profile: &[u32]) -> Result<BigUint> {
    let m = params.m();
    if profile.len() > m as usize {
        return Err(Error::param(format!(
            "profile has {} blocks, ring has m={m}",
            profile.len()
        )));
    }
    let s: u64 = profile
        .iter()
        .enumerate()
        .map(|(i, &k)| (m as u64 - i as u64) * k as u64)
        .sum();
    Ok(BigUint::from(2u32).pow(s as u32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(m: u32) -> RingParams {
        RingParams::new(m).unwrap()
    }

    fn word(p: RingParams, layout: ByteLayout, s: &str) -> Word {
        Word::parse(p, layout, s).unwrap()
    }

    fn matrix(p: RingParams, layout: ByteLayout, rows: &[&str]) -> GeneratorMatrix {
        GeneratorMatrix::from_words(
            p,
            layout,
            &rows.iter().map(|s| word(p, layout, s)).collect::<Vec<_>>(),
        )
        .unwrap()
    }

    pub(crate) fn example_matrix() -> GeneratorMatrix {
        let p = r(4);
        let layout = ByteLayout::new(3, 2, 2).unwrap();
        matrix(
            p,
            layout,
            &["1 0 0 u+u2 0 0", "0 u 0 u2 0 u3", "0 0 u2 0 u3 0"],
        )
    }

    #[test]
    fn layout_bounds() {
        assert!(ByteLayout::new(3, 0, 1).is_err());
        assert!(ByteLayout::new(3, 4, 1).is_err());
        assert!(ByteLayout::new(3, 3, 0).is_err());
        assert!(ByteLayout::new(0, 0, 1).is_err());
        let l = ByteLayout::new(3, 2, 2).unwrap();
        assert_eq!(l.len(), 6);
        assert_eq!(l.max_weight(), 4);
        assert_eq!(
            (0..=3).map(|h| l.byte_cost(h)).collect::<Vec<_>>(),
            [0, 1, 1, 2]
        );
    }

    #[test]
    fn word_validation() {
        let l = ByteLayout::new(2, 1, 1).unwrap();
        assert!(Word::parse(r(2), l, "1").is_err());
        assert!(Word::new(r(2), l, vec![r(2).one(), r(3).one()]).is_err());
        let w = word(r(2), ByteLayout::new(1, 1, 2).unwrap(), "u 1+u");
        assert_eq!(w.to_string(), "u | 1+u");
    }

    #[test]
    fn inner_product_examples() {
        let p = r(4);
        let l = ByteLayout::new(2, 1, 1).unwrap();
        let x = word(p, l, "1+u u3");
        assert!(inner_product(&x, &Word::zero(p, l)).unwrap().is_zero());
        assert!(inner_product(&word(p, l, "1 u"), &word(p, l, "u 1"))
            .unwrap()
            .is_zero());
        assert_eq!(
            inner_product(&word(p, l, "u u2"), &word(p, l, "u2 1")).unwrap(),
            p.parse_element("u2+u3").unwrap()
        );
        let short = word(p, ByteLayout::new(1, 1, 1).unwrap(), "1");
        assert!(inner_product(&x, &short).is_err());
    }

    #[test]
    fn span_of_example_matrix() {
        let c = span(&example_matrix(), DEFAULT_SPAN_BUDGET).unwrap();
        assert_eq!(c.len(), 512);
        assert!(c.words().windows(2).all(|w| w[0] < w[1]));
        c.check_closure(512).unwrap();
    }

    #[test]
    fn span_small_cases() {
        let p = r(2);
        let l = ByteLayout::new(1, 1, 1).unwrap();
        let zero = span(&matrix(p, l, &["0"]), DEFAULT_SPAN_BUDGET).unwrap();
        assert_eq!(zero.len(), 1);
        let c = span(&matrix(p, l, &["u"]), DEFAULT_SPAN_BUDGET).unwrap();
        assert_eq!(c.words(), [word(p, l, "0"), word(p, l, "u")]);
    }

    #[test]
    fn span_budget_is_enforced() {
        let err = span(&example_matrix(), 4095).unwrap_err();
        match err {
            Error::Budget { required, .. } => assert_eq!(required, BigUint::from(4096u32)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn dual_of_example_matrix() {
        let g = example_matrix();
        let d = dual(&g, DEFAULT_DUAL_BUDGET, 4).unwrap();
        assert_eq!(d.len(), 32768);
        let c = span(&g, DEFAULT_SPAN_BUDGET).unwrap();
        for v in d.iter().step_by(97) {
            for w in c.iter().step_by(13) {
                assert!(inner_product(w, v).unwrap().is_zero());
            }
        }
        assert_eq!(
            BigUint::from(c.len()) * BigUint::from(d.len()),
            BigUint::from(16u32).pow(6)
        );
    }

    #[test]
    fn dual_edge_cases() {
        let p = r(2);
        let l = ByteLayout::new(2, 1, 1).unwrap();
        let full = GeneratorMatrix::identity(p, l);
        assert_eq!(dual(&full, 1 << 10, 1).unwrap().len(), 1);
        let empty = GeneratorMatrix::new(p, l, vec![]).unwrap();
        assert_eq!(dual(&empty, 1 << 10, 1).unwrap().len(), 16);
        assert!(matches!(dual(&full, 15, 1), Err(Error::Budget { .. })));
    }

    #[test]
    fn dual_is_independent_of_worker_count() {
        let g = example_matrix();
        let one = dual(&g, DEFAULT_DUAL_BUDGET, 1).unwrap();
        let many = dual(&g, DEFAULT_DUAL_BUDGET, 3).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn profile_sizes() {
        let s = |m, prof: &[u32]| code_size_from_profile(r(m), prof).unwrap();
        assert_eq!(s(4, &[1, 1, 1, 0]), BigUint::from(512u32));
        assert_eq!(s(4, &[0, 0, 0, 0]), BigUint::from(1u32));
        assert_eq!(s(2, &[2, 1]), BigUint::from(32u32));
        assert!(code_size_from_profile(r(2), &[1, 1, 1]).is_err());

        // standard form with profile (2, 1) over m=2:
        // rows [I_2 | A], [0 0 u | u...]
        let p = r(2);
        let l = ByteLayout::new(4, 1, 1).unwrap();
        let g = matrix(p, l, &["1 0 0 1+u", "0 1 u 1", "0 0 u u"]);
        assert_eq!(span(&g, DEFAULT_SPAN_BUDGET).unwrap().len(), 32);
    }

    #[test]
    fn generator_matrix_recovers_code() {
        let c = span(&example_matrix(), DEFAULT_SPAN_BUDGET).unwrap();
        let g = c.generator_matrix();
        assert!(g.k() <= 3);
        assert_eq!(span(&g, DEFAULT_SPAN_BUDGET).unwrap(), c);
    }

    #[test]
    fn from_words_requires_zero() {
        let p = r(2);
        let l = ByteLayout::new(1, 1, 1).unwrap();
        assert!(LinearCode::from_words(p, l, vec![word(p, l, "u")]).is_err());
        let c = LinearCode::from_words(
            p,
            l,
            vec![word(p, l, "u"), word(p, l, "0"), word(p, l, "u")],
        )
        .unwrap();
        assert_eq!(c.len(), 2);
        let not_linear =
            LinearCode::from_words(p, l, vec![word(p, l, "0"), word(p, l, "1")]).unwrap();
        assert!(not_linear.check_closure(16).is_err());
    }
}
