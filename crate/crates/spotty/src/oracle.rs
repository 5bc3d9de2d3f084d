//! Brute-force ground truth for the character sums behind the transform.
//!
//! Every function here enumerates the relevant set element by element and
//! sums the character directly. None of them call into [`crate::macwilliams`];
//! the closed forms they are compared against are written out separately in
//! this module. [`run_campaign`] sweeps a parameter grid and produces one
//! [`LemmaReport`] per check, which is what `spotty verify` prints.
//!
//! The lemma ids in the reports name the identities as follows:
//!
//! | id                     | identity |
//! |------------------------|----------|
//! | `ideal-sum`            | `sum_{a in <u^k>} chi(a) = 0` for `k < m` |
//! | `multiple-sum`         | `sum_{r in R} chi(a r) = 2^m [a = 0]` |
//! | `subset-support-sum`   | `sum_{supp(v) ⊆ I} chi(<c,v>) = 0` for nonempty `I ⊆ supp(c)` |
//! | `partial-weight-sum`   | `sum_{w(v) <= k, supp(v) ⊆ supp(c)} chi(<c,v>) = (-1)^k C(j-1,k)` |
//! | `exact-support-sum`    | `sum_{supp(v) = I} chi(<c,v>) = (-1)^{abs(I)}` |
//! | `in-support-sum`       | `sum_{v in S_k(c)} chi(<c,v>) = (-1)^k C(j,k)` |
//! | `off-support-sum`      | `sum_{v in S̄_k(c)} chi(<c,v>) = (2^m-1)^k C(b-j,k)` |
//! | `split-support-sum`    | the two-sided count `S_{j1,j2}(c)` |
//! | `byte-kernel`          | the byte transform equals `F_j(z)` |
//! | `poisson`              | Poisson summation: dual enumerator from the code's transforms |
//! | `chi-hom`              | `chi(a + b) = chi(a) chi(b)` for all pairs |
//! | `partition-axioms`     | the kernel of `chi` satisfies the A/B partition axioms |
//! | `partition-m4`         | for `m = 4`, `A` is the listed eight-element set |
//! | `partition-uniqueness` | number of partitions satisfying the axioms (opt-in) |
//!
//! `subset-support-sum` lets `v` range over every vector supported inside a
//! fixed subset `I` of `supp(c)`; the sum then factors into per coordinate
//! sums that vanish. As a partial sum over `w(v) <= k` the same expression
//! only vanishes for `k = j`; `partial-weight-sum` records the value it
//! actually takes.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::code::{dual, ByteLayout, GeneratorMatrix, LinearCode};
use crate::error::{check_budget, Error, Result};
use crate::macwilliams::f_poly;
use crate::poly::Polynomial;
use crate::ring::{RingElement, RingParams};
use crate::weight::{enumerator, hamming_weight, support};

/// Default bound on `m * b` for byte-level brute force (`2^24` vectors).
pub const DEFAULT_BYTE_BITS: u32 = 24;

/// The character `chi(x) = (-1)^{r_{m-1}(x)}`, optionally with one value
/// flipped so verification runs can prove they detect a broken character.
#[derive(Clone, Copy, Debug)]
pub struct Character {
    params: RingParams,
    fault: Option<RingElement>,
}

impl Character {
    pub fn new(params: RingParams) -> Self {
        Character {
            params,
            fault: None,
        }
    }

    /// Same character, except that the sign at `x` is flipped.
    pub fn with_fault(params: RingParams, x: RingElement) -> Self {
        Character {
            params,
            fault: Some(x),
        }
    }

    pub fn eval(&self, x: RingElement) -> i64 {
        let top = x.coeff(self.params.m() - 1);
        let v = if top { -1 } else { 1 };
        if self.fault == Some(x) {
            -v
        } else {
            v
        }
    }
}

/// Outcome of one brute-force check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaReport {
    pub lemma: String,
    pub params: Value,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl LemmaReport {
    pub fn new(lemma: &str, params: Value, expected: impl ToString, actual: impl ToString) -> Self {
        let expected = expected.to_string();
        let actual = actual.to_string();
        LemmaReport {
            lemma: lemma.to_string(),
            params,
            pass: expected == actual,
            expected,
            actual,
        }
    }
}

/// Brute-force evaluator over one ring.
#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    params: RingParams,
    chi: Character,
    byte_bits: u32,
}

impl Oracle {
    pub fn new(params: RingParams) -> Self {
        Oracle {
            params,
            chi: Character::new(params),
            byte_bits: DEFAULT_BYTE_BITS,
        }
    }

    pub fn with_character(params: RingParams, chi: Character) -> Self {
        Oracle {
            params,
            chi,
            byte_bits: DEFAULT_BYTE_BITS,
        }
    }

    /// Raises or lowers the `m * b` limit for byte enumeration.
    pub fn with_byte_bits(mut self, bits: u32) -> Self {
        self.byte_bits = bits;
        self
    }

    pub fn params(&self) -> RingParams {
        self.params
    }

    pub fn chi(&self, x: RingElement) -> i64 {
        self.chi.eval(x)
    }

    /// `chi(<c, v>)`.
    fn chi_inner(&self, c: &[RingElement], v: &[RingElement]) -> i64 {
        let dot = c
            .iter()
            .zip(v)
            .fold(self.params.zero(), |acc, (&x, &y)| acc + x * y);
        self.chi.eval(dot)
    }

    /// Every `v in R^b`, in no particular order.
    fn byte_vectors(&self, b: usize) -> Result<impl Iterator<Item = Vec<RingElement>>> {
        let bits = self.params.m() as usize * b;
        let required = BigUint::from(2u32).pow(bits as u32);
        check_budget(
            "byte enumeration",
            &required,
            1u64 << self.byte_bits.min(63),
        )?;
        let params = self.params;
        let m = params.m();
        Ok((0u64..1 << bits).map(move |idx| {
            (0..b)
                .map(|i| {
                    params.element_unchecked(((idx >> (m as usize * i)) as u32) & ((1 << m) - 1))
                })
                .collect()
        }))
    }

    fn check_byte(&self, c: &[RingElement]) -> Result<()> {
        if c.iter().any(|x| x.params() != self.params) {
            return Err(Error::param("byte belongs to a different ring"));
        }
        if c.is_empty() {
            return Err(Error::param("empty byte"));
        }
        Ok(())
    }

    /// `sum_{a in <u^k>} chi(a)` for a nonzero ideal (`k < m`).
    pub fn sum_chi_over_ideal(&self, k: u32) -> Result<i64> {
        if k >= self.params.m() {
            return Err(Error::param(format!(
                "<u^{k}> is the zero ideal when m = {}",
                self.params.m()
            )));
        }
        let uk = self.params.u_pow(k);
        let mut members: Vec<RingElement> = self.params.elements().map(|r| uk * r).collect();
        members.sort();
        members.dedup();
        Ok(members.into_iter().map(|a| self.chi(a)).sum())
    }

    /// `sum_{r in R} chi(a r)`.
    pub fn sum_chi_multiples(&self, a: RingElement) -> i64 {
        self.params.elements().map(|r| self.chi(a * r)).sum()
    }

    fn check_subset(&self, c: &[RingElement], set: &[usize]) -> Result<()> {
        self.check_byte(c)?;
        let supp = support(c);
        if let Some(i) = set.iter().find(|i| !supp.contains(i)) {
            return Err(Error::param(format!(
                "index {i} is not in the support {supp:?} of c"
            )));
        }
        Ok(())
    }

    /// `sum chi(<c, v>)` over every `v` with `supp(v) ⊆ set`, coordinates in
    /// `set` ranging over all of `R`.
    pub fn sum_chi_subspace(&self, c: &[RingElement], set: &[usize]) -> Result<i64> {
        self.check_subset(c, set)?;
        if set.is_empty() {
            return Err(Error::param("the index set must be nonempty"));
        }
        Ok(self
            .byte_vectors(c.len())?
            .filter(|v| (0..v.len()).all(|i| v[i].is_zero() || set.contains(&i)))
            .map(|v| self.chi_inner(c, &v))
            .sum())
    }

    /// `sum chi(<c, v>)` over `v` with `w(v) <= k` and `supp(v) ⊆ supp(c)`.
    pub fn sum_chi_weight_at_most(&self, c: &[RingElement], k: usize) -> Result<i64> {
        self.check_byte(c)?;
        let supp = support(c);
        Ok(self
            .byte_vectors(c.len())?
            .filter(|v| hamming_weight(v) <= k && support(v).iter().all(|i| supp.contains(i)))
            .map(|v| self.chi_inner(c, &v))
            .sum())
    }

    /// `sum chi(<c, v>)` over `v` with `supp(v) = set` exactly.
    pub fn sum_chi_fixed_support(&self, c: &[RingElement], set: &[usize]) -> Result<i64> {
        self.check_subset(c, set)?;
        let mut set = set.to_vec();
        set.sort_unstable();
        set.dedup();
        Ok(self
            .byte_vectors(c.len())?
            .filter(|v| support(v) == set)
            .map(|v| self.chi_inner(c, &v))
            .sum())
    }

    /// Sum over `S_k(c)`: `supp(v) ⊆ supp(c)`, `|supp(v)| = k`.
    pub fn sum_chi_sk(&self, c: &[RingElement], k: usize) -> Result<i64> {
        self.check_byte(c)?;
        let j = hamming_weight(c);
        if k > j {
            return Err(Error::param(format!("k={k} exceeds w(c)={j}")));
        }
        self.sum_chi_sj1j2(c, k, 0)
    }

    /// Sum over `S̄_k(c)`: `supp(v)` inside the zero set of `c`, `|supp(v)| = k`.
    pub fn sum_chi_sbar(&self, c: &[RingElement], k: usize) -> Result<i64> {
        self.check_byte(c)?;
        let free = c.len() - hamming_weight(c);
        if k > free {
            return Err(Error::param(format!("k={k} exceeds b - w(c) = {free}")));
        }
        self.sum_chi_sj1j2(c, 0, k)
    }

    /// Sum over `v` meeting `supp(c)` in `j1` places and its complement in `j2`.
    pub fn sum_chi_sj1j2(&self, c: &[RingElement], j1: usize, j2: usize) -> Result<i64> {
        self.check_byte(c)?;
        let j = hamming_weight(c);
        if j1 > j || j2 > c.len() - j {
            return Err(Error::param(format!(
                "(j1, j2) = ({j1}, {j2}) out of range for w(c)={j}, b={}",
                c.len()
            )));
        }
        Ok(self
            .byte_vectors(c.len())?
            .filter(|v| {
                let inside = (0..v.len())
                    .filter(|&i| !v[i].is_zero() && !c[i].is_zero())
                    .count();
                let outside = (0..v.len())
                    .filter(|&i| !v[i].is_zero() && c[i].is_zero())
                    .count();
                inside == j1 && outside == j2
            })
            .map(|v| self.chi_inner(c, &v))
            .sum())
    }

    /// `sum_{v in R^b} chi(<c, v>) z^{ceil(w_H(v)/t)}`, all `2^{mb}` terms.
    pub fn byte_transform_bruteforce(&self, c: &[RingElement], t: usize) -> Result<Polynomial> {
        self.check_byte(c)?;
        if t == 0 || t > c.len() {
            return Err(Error::param(format!("t={t} outside 1..=b={}", c.len())));
        }
        let mut by_exp = vec![0i64; c.len().div_ceil(t) + 1];
        for v in self.byte_vectors(c.len())? {
            by_exp[hamming_weight(&v).div_ceil(t)] += self.chi_inner(c, &v);
        }
        Ok(Polynomial::from_coeffs(&by_exp))
    }

    /// Both sides of the Poisson summation formula for `code`:
    /// `sum_{v in C_dual} z^{w_M(v)}` against `(1/|C|) sum_{c in C} f^(c)`,
    /// where `f^(c)` is the product of the brute-force byte transforms of
    /// `c`'s bytes.
    pub fn poisson_check(
        &self,
        code: &LinearCode,
        budget: u64,
        workers: usize,
    ) -> Result<LemmaReport> {
        let layout = code.layout();
        let lhs = dual_enumerator_bruteforce(&code.generator_matrix(), budget, workers)?;

        let mut cache: HashMap<Vec<RingElement>, Polynomial> = HashMap::new();
        let mut sum = Polynomial::zero();
        for w in code.iter() {
            let mut fhat = Polynomial::one();
            for byte in w.bytes() {
                if !cache.contains_key(byte) {
                    let p = self.byte_transform_bruteforce(byte, layout.t())?;
                    cache.insert(byte.to_vec(), p);
                }
                fhat = &fhat * &cache[byte];
            }
            sum = &sum + &fhat;
        }
        let rhs = match sum.exact_div_scalar(&BigInt::from(code.len())) {
            Ok(p) => p.to_string(),
            Err(_) => format!("({sum}) / {}", code.len()),
        };
        Ok(LemmaReport::new(
            "poisson",
            json!({
                "m": self.params.m(),
                "n": layout.n(),
                "b": layout.b(),
                "t": layout.t(),
                "code_size": code.len(),
            }),
            lhs,
            rhs,
        ))
    }

    /// Number of pairs `(a, b)` with `chi(a + b) != chi(a) chi(b)`.
    pub fn homomorphism_violations(&self) -> usize {
        let elems: Vec<_> = self.params.elements().collect();
        elems
            .iter()
            .map(|&a| {
                elems
                    .iter()
                    .filter(|&&b| self.chi(a + b) != self.chi(a) * self.chi(b))
                    .count()
            })
            .sum()
    }
}

/// The m-spotty enumerator of the dual of `g`'s span, found by exhaustive
/// search; no use of the transform.
pub fn dual_enumerator_bruteforce(
    g: &GeneratorMatrix,
    budget: u64,
    workers: usize,
) -> Result<Polynomial> {
    Ok(enumerator(&dual(g, budget, workers)?))
}

/// Checks a candidate `A` against the partition axioms:
/// (i) `0, 1 in A`; `A` is half of `R`;
/// (ii) `A` takes exactly half of the zero divisors (0 included), of every
/// nonzero ideal and of the units;
/// (iii) `A + A ⊆ A`; (iv) `B + B ⊆ A`; (v) `A + B ⊆ B`.
///
/// Returns the first violated axiom.
pub fn check_partition_axioms(params: RingParams, a: &[RingElement]) -> Result<(), String> {
    let order = params.order() as usize;
    let mut in_a = vec![false; order];
    for x in a {
        in_a[x.bits() as usize] = true;
    }
    let count_in_a = in_a.iter().filter(|&&f| f).count();
    if count_in_a * 2 != order {
        return Err(format!("|A| = {count_in_a}, expected {}", order / 2));
    }
    if !in_a[0] || !in_a[1] {
        return Err("(i) 0 and 1 must belong to A".into());
    }
    let elems: Vec<RingElement> = params.elements().collect();
    let halves = |set: &[RingElement]| {
        2 * set.iter().filter(|x| in_a[x.bits() as usize]).count() == set.len()
    };
    let zero_divisors: Vec<_> = elems.iter().copied().filter(|x| !x.is_unit()).collect();
    if !halves(&zero_divisors) {
        return Err("(ii) zero divisors are not split evenly".into());
    }
    for k in 0..params.m() {
        let ideal: Vec<_> = elems
            .iter()
            .copied()
            .filter(|x| x.valuation() >= k)
            .collect();
        if !halves(&ideal) {
            return Err(format!("(ii) the ideal <u^{k}> is not split evenly"));
        }
    }
    let units: Vec<_> = elems.iter().copied().filter(|x| x.is_unit()).collect();
    if !halves(&units) {
        return Err("(ii) units are not split evenly".into());
    }
    for &x in &elems {
        for &y in &elems {
            let sum_in_a = in_a[(x + y).bits() as usize];
            let (xa, ya) = (in_a[x.bits() as usize], in_a[y.bits() as usize]);
            match (xa, ya) {
                (true, true) if !sum_in_a => return Err(format!("(iii) {x} + {y} leaves A")),
                (false, false) if !sum_in_a => return Err(format!("(iv) {x} + {y} lands in B")),
                (true, false) | (false, true) if sum_in_a => {
                    return Err(format!("(v) {x} + {y} lands in A"))
                }
                _ => {}
            }
        }
    }
    Ok(())
}

/// Every subset `A` of `R` satisfying [`check_partition_axioms`], found by
/// trying all half-size subsets containing 0 and 1. Limited to `m <= 4`.
pub fn partition_uniqueness_search(params: RingParams) -> Result<Vec<Vec<RingElement>>> {
    let m = params.m();
    if m > 4 {
        return Err(Error::Budget {
            what: "partition search",
            required: BigUint::from(2u32).pow(1 << m),
            budget: 1 << 16,
        });
    }
    let order = params.order();
    let half = order / 2;
    let mut found = Vec::new();
    for mask in 0u32..(1u32 << order) {
        if mask & 0b11 != 0b11 || mask.count_ones() != half {
            continue;
        }
        let a: Vec<RingElement> = params
            .elements()
            .filter(|x| mask >> x.bits() & 1 == 1)
            .collect();
        if check_partition_axioms(params, &a).is_ok() {
            found.push(a);
        }
    }
    Ok(found)
}

/// `C(n, k)` for the small arguments used by the closed forms.
fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All subsets of `items`, in binary-counter order.
fn subsets(items: &[usize]) -> Vec<Vec<usize>> {
    (0u32..1 << items.len())
        .map(|mask| {
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

fn show_byte(c: &[RingElement]) -> String {
    c.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parameters of a verification sweep.
#[derive(Clone, Debug)]
pub struct Grid {
    pub ms: Vec<u32>,
    pub bs: Vec<usize>,
    /// Bytes sampled per `(m, b)` cell when `m * b` exceeds `exhaustive_bits`.
    pub samples: usize,
    pub exhaustive_bits: u32,
    /// Random codes per ring for the Poisson summation check.
    pub codes_per_ring: usize,
    pub seed: u64,
    /// Flip the character at `u^{m-1}` in every oracle.
    pub inject_fault: bool,
    /// Also count all partitions satisfying the A/B axioms (`m <= 4`).
    pub uniqueness: bool,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            ms: vec![1, 2, 3, 4],
            bs: vec![1, 2, 3],
            samples: 100,
            exhaustive_bits: 8,
            codes_per_ring: 2,
            seed: 0,
            inject_fault: false,
            uniqueness: false,
        }
    }
}

impl Grid {
    fn oracle(&self, params: RingParams) -> Oracle {
        if self.inject_fault {
            let x = params.u_pow(params.m() - 1);
            Oracle::with_character(params, Character::with_fault(params, x))
        } else {
            Oracle::new(params)
        }
    }
}

/// Runs every check over the grid. The reports come back in a fixed order
/// that depends only on the grid, never on `workers`.
pub fn run_campaign(grid: &Grid, workers: usize) -> Result<Vec<LemmaReport>> {
    let ms: Vec<RingParams> = grid
        .ms
        .iter()
        .map(|&m| RingParams::new(m))
        .collect::<Result<_>>()?;
    for &b in &grid.bs {
        if b == 0 {
            return Err(Error::param("byte length 0 in grid"));
        }
    }
    let mut tasks: Vec<Task> = Vec::new();
    for &p in &ms {
        tasks.push(Task::Ring(p));
        for &b in &grid.bs {
            tasks.push(Task::Cell(p, b));
        }
        tasks.push(Task::Codes(p));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::param(format!("cannot start {workers} workers: {e}")))?;
    let chunks: Vec<Vec<LemmaReport>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|task| task.run(grid))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(chunks.into_iter().flatten().collect())
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Ring(RingParams),
    Cell(RingParams, usize),
    Codes(RingParams),
}

impl Task {
    fn run(&self, grid: &Grid) -> Result<Vec<LemmaReport>> {
        match *self {
            Task::Ring(p) => ring_checks(grid, p),
            Task::Cell(p, b) => cell_checks(grid, p, b),
            Task::Codes(p) => code_checks(grid, p),
        }
    }
}

fn ring_checks(grid: &Grid, p: RingParams) -> Result<Vec<LemmaReport>> {
    let oracle = grid.oracle(p);
    let m = p.m();
    let mut out = Vec::new();
    for k in 0..m {
        out.push(LemmaReport::new(
            "ideal-sum",
            json!({ "m": m, "k": k }),
            0,
            oracle.sum_chi_over_ideal(k)?,
        ));
    }
    for a in p.elements() {
        let expected = if a.is_zero() { 1i64 << m } else { 0 };
        out.push(LemmaReport::new(
            "multiple-sum",
            json!({ "m": m, "a": a.to_string() }),
            expected,
            oracle.sum_chi_multiples(a),
        ));
    }
    out.push(LemmaReport::new(
        "chi-hom",
        json!({ "m": m }),
        "0 violations",
        format!("{} violations", oracle.homomorphism_violations()),
    ));
    if m >= 2 {
        // the kernel of the oracle's character, which is what the lemmas use
        let a: Vec<_> = p.elements().filter(|&x| oracle.chi(x) == 1).collect();
        let verdict = match check_partition_axioms(p, &a) {
            Ok(()) => "satisfied".to_string(),
            Err(e) => e,
        };
        out.push(LemmaReport::new(
            "partition-axioms",
            json!({ "m": m }),
            "satisfied",
            verdict,
        ));
        if m == 4 {
            let mut listed = ["0", "1", "u", "1+u", "u2", "u+u2", "1+u2", "1+u+u2"]
                .map(|s| p.parse_element(s))
                .into_iter()
                .collect::<Result<Vec<_>>>()?;
            listed.sort();
            let show = |set: &[RingElement]| {
                set.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            out.push(LemmaReport::new(
                "partition-m4",
                json!({ "m": 4 }),
                show(&listed),
                show(&a),
            ));
        }
    }
    if grid.uniqueness && m <= 4 {
        out.push(LemmaReport::new(
            "partition-uniqueness",
            json!({ "m": m }),
            1,
            partition_uniqueness_search(p)?.len(),
        ));
    }
    Ok(out)
}

fn cell_checks(grid: &Grid, p: RingParams, b: usize) -> Result<Vec<LemmaReport>> {
    let oracle = grid.oracle(p);
    let m = p.m();
    let bits = m as usize * b;
    let bytes: Vec<Vec<RingElement>> = if bits as u32 <= grid.exhaustive_bits {
        oracle.byte_vectors(b)?.collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(grid.seed ^ ((m as u64) << 32) ^ b as u64);
        (0..grid.samples)
            .map(|_| {
                (0..b)
                    .map(|_| p.element_unchecked(rng.gen_range(0..p.order())))
                    .collect()
            })
            .collect()
    };
    let mut out = Vec::new();
    for c in &bytes {
        byte_checks(&oracle, c, &mut out)?;
    }
    Ok(out)
}

fn byte_checks(oracle: &Oracle, c: &[RingElement], out: &mut Vec<LemmaReport>) -> Result<()> {
    let m = oracle.params().m();
    let b = c.len();
    let j = hamming_weight(c);
    let cs = show_byte(c);
    let supp = support(c);
    let q = (1i64 << m) - 1;

    for set in subsets(&supp) {
        if !set.is_empty() {
            out.push(LemmaReport::new(
                "subset-support-sum",
                json!({ "m": m, "c": cs, "I": set }),
                0,
                oracle.sum_chi_subspace(c, &set)?,
            ));
        }
        out.push(LemmaReport::new(
            "exact-support-sum",
            json!({ "m": m, "c": cs, "I": set }),
            sign(set.len()),
            oracle.sum_chi_fixed_support(c, &set)?,
        ));
    }
    for k in 1..=j {
        out.push(LemmaReport::new(
            "partial-weight-sum",
            json!({ "m": m, "c": cs, "k": k }),
            sign(k) * binom(j - 1, k),
            oracle.sum_chi_weight_at_most(c, k)?,
        ));
    }
    for k in 0..=j {
        out.push(LemmaReport::new(
            "in-support-sum",
            json!({ "m": m, "c": cs, "k": k }),
            sign(k) * binom(j, k),
            oracle.sum_chi_sk(c, k)?,
        ));
    }
    for k in 0..=(b - j) {
        out.push(LemmaReport::new(
            "off-support-sum",
            json!({ "m": m, "c": cs, "k": k }),
            q.pow(k as u32) * binom(b - j, k),
            oracle.sum_chi_sbar(c, k)?,
        ));
    }
    for j1 in 0..=j {
        for j2 in 0..=(b - j) {
            out.push(LemmaReport::new(
                "split-support-sum",
                json!({ "m": m, "c": cs, "j1": j1, "j2": j2 }),
                sign(j1) * q.pow(j2 as u32) * binom(j, j1) * binom(b - j, j2),
                oracle.sum_chi_sj1j2(c, j1, j2)?,
            ));
        }
    }
    for t in 1..=b {
        out.push(LemmaReport::new(
            "byte-kernel",
            json!({ "m": m, "c": cs, "t": t }),
            f_poly(j, b, m, t)?,
            oracle.byte_transform_bruteforce(c, t)?,
        ));
    }
    Ok(())
}

fn code_checks(grid: &Grid, p: RingParams) -> Result<Vec<LemmaReport>> {
    let oracle = grid.oracle(p);
    let mut rng = ChaCha8Rng::seed_from_u64(grid.seed.wrapping_add(0x5eed) ^ p.m() as u64);
    let len = (12 / p.m() as usize).clamp(1, 4);
    let mut out = Vec::new();
    for _ in 0..grid.codes_per_ring {
        let divisors: Vec<usize> = (1..=len).filter(|d| len % d == 0).collect();
        let b = divisors[rng.gen_range(0..divisors.len())];
        let t = rng.gen_range(1..=b);
        let layout = ByteLayout::new(b, t, len / b)?;
        let k = rng.gen_range(1..=2);
        let g = GeneratorMatrix::random(p, layout, k, &mut rng);
        let code = crate::code::span(&g, crate::code::DEFAULT_SPAN_BUDGET)?;
        out.push(oracle.poisson_check(&code, 1 << 12, 1)?);
    }
    Ok(out)
}
