//! Arithmetic in the chain ring `R = F2[u]/<u^m>`.
//!
//! An element `x = r_0 + r_1 u + ... + r_{m-1} u^{m-1}` is stored as the
//! m-bit integer whose bit `i` is `r_i`. Addition is XOR, multiplication is a
//! carry-less product truncated at degree `m`.
//!
//! The ideals of `R` form the chain `<1> ⊃ <u> ⊃ ... ⊃ <u^{m-1}> ⊃ {0}`, and
//! the additive character used by the MacWilliams transform is
//! `chi(x) = (-1)^{r_{m-1}(x)}`: its kernel `A` (the elements with no
//! `u^{m-1}` term) is an index-2 subgroup that halves every nonzero ideal and
//! the unit group.
//!
//! ```
//! use spotty::ring::RingParams;
//!
//! let r = RingParams::new(4)?;
//! let x = r.parse_element("u+u2")?;
//! assert_eq!((x * x).to_string(), "u2");
//! assert_eq!(r.parse_element("u3")?.chi(), -1);
//! assert!(r.parse_element("1+u3")?.is_unit());
//! # Ok::<(), spotty::Error>(())
//! ```

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported nilpotency index; keeps `|R| <= 65536`.
pub const MAX_M: u32 = 16;

/// The nilpotency index `m` of `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct RingParams {
    m: u8,
}

impl TryFrom<u32> for RingParams {
    type Error = Error;

    fn try_from(m: u32) -> Result<Self> {
        RingParams::new(m)
    }
}

impl From<RingParams> for u32 {
    fn from(p: RingParams) -> u32 {
        p.m()
    }
}

impl RingParams {
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_M).contains(&m) {
            return Err(Error::param(format!("m must lie in 1..={MAX_M}, got {m}")));
        }
        Ok(RingParams { m: m as u8 })
    }

    #[inline]
    pub fn m(self) -> u32 {
        self.m as u32
    }

    /// `|R| = 2^m`.
    #[inline]
    pub fn order(self) -> u32 {
        1 << self.m
    }

    #[inline]
    pub(crate) fn mask(self) -> u32 {
        self.order() - 1
    }

    /// Wraps a raw coefficient vector, rejecting bits at positions `>= m`.
    pub fn element(self, bits: u32) -> Result<RingElement> {
        if bits & !self.mask() != 0 {
            return Err(Error::param(format!(
                "coefficient vector {bits:#b} has bits beyond u^{}",
                self.m() - 1
            )));
        }
        Ok(RingElement {
            bits: bits as u16,
            m: self.m,
        })
    }

    #[inline]
    pub(crate) fn element_unchecked(self, bits: u32) -> RingElement {
        debug_assert_eq!(bits & !self.mask(), 0);
        RingElement {
            bits: bits as u16,
            m: self.m,
        }
    }

    pub fn zero(self) -> RingElement {
        self.element_unchecked(0)
    }

    pub fn one(self) -> RingElement {
        self.element_unchecked(1)
    }

    /// `u^k`, which is zero for `k >= m`.
    pub fn u_pow(self, k: u32) -> RingElement {
        if k >= self.m() {
            self.zero()
        } else {
            self.element_unchecked(1 << k)
        }
    }

    /// Every element of `R` in increasing coefficient-vector order.
    pub fn elements(self) -> impl Iterator<Item = RingElement> + Clone {
        (0..self.order()).map(move |bits| self.element_unchecked(bits))
    }

    pub fn units(self) -> impl Iterator<Item = RingElement> + Clone {
        self.elements().filter(|x| x.is_unit())
    }

    /// The ideal `<u^k> = { u^k r : r in R }`, which has `2^{m-k}` elements.
    pub fn ideal_elements(self, k: u32) -> Result<Vec<RingElement>> {
        if k > self.m() {
            return Err(Error::param(format!(
                "ideal index k={k} outside 0..={}",
                self.m()
            )));
        }
        // <u^k> is exactly the set of elements whose low k coefficients vanish.
        Ok((0..(1u32 << (self.m() - k)))
            .map(|hi| self.element_unchecked(hi << k))
            .collect())
    }

    /// The kernel `A` and the non-kernel `B` of `chi`, each of size `2^{m-1}`.
    ///
    /// Only defined for `m >= 2`: for `m = 1` the character is still
    /// `(-1)^x`, but `1` lands in `B`, so no set containing both `0` and `1`
    /// can be the kernel.
    pub fn partition(self) -> Result<(Vec<RingElement>, Vec<RingElement>)> {
        if self.m() < 2 {
            return Err(Error::param(
                "the A/B partition needs m >= 2: over F2 the element 1 cannot share a part with 0",
            ));
        }
        Ok(self.elements().partition(|x| x.chi() == 1))
    }

    /// Counts of units and of nonzero zero divisors, obtained by classifying
    /// every element.
    pub fn census(self) -> Census {
        let units = self.units().count() as u64;
        Census {
            units,
            zero_divisors: self.order() as u64 - units - 1,
        }
    }

    /// Parses `0`, or `+`-separated monomials from `1`, `u`, `u2`, `u^2`, ...
    pub fn parse_element(self, s: &str) -> Result<RingElement> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Syntax("empty ring element".into()));
        }
        if s == "0" {
            return Ok(self.zero());
        }
        let mut bits = 0u32;
        for mono in s.split('+') {
            let mono = mono.trim();
            let power = parse_monomial(mono)?;
            if power >= self.m() {
                return Err(Error::Syntax(format!(
                    "monomial `{mono}` has degree {power}, but u^{} = 0 when m = {}",
                    self.m(),
                    self.m()
                )));
            }
            if bits & (1 << power) != 0 {
                return Err(Error::Syntax(format!(
                    "duplicate monomial `{mono}` in `{s}`"
                )));
            }
            bits |= 1 << power;
        }
        Ok(self.element_unchecked(bits))
    }
}

fn parse_monomial(mono: &str) -> Result<u32> {
    match mono {
        "1" => return Ok(0),
        "u" => return Ok(1),
        _ => {}
    }
    let exp = mono
        .strip_prefix('u')
        .map(|rest| rest.strip_prefix('^').unwrap_or(rest))
        .filter(|rest| !rest.is_empty() && rest.bytes().all(|c| c.is_ascii_digit()))
        .ok_or_else(|| {
            Error::Syntax(format!(
                "`{mono}` is not a monomial (expected 1, u, u2, u^2, ...)"
            ))
        })?;
    exp.parse::<u32>()
        .ok()
        .filter(|&k| k >= 1)
        .ok_or_else(|| Error::Syntax(format!("bad exponent in monomial `{mono}`")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub units: u64,
    /// Nonzero zero divisors; `0` itself is not counted.
    pub zero_divisors: u64,
}

/// An element of `F2[u]/<u^m>`.
///
/// Ordering is by coefficient vector, read as an integer (bit `i` is the
/// coefficient of `u^i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    bits: u16,
    m: u8,
}

impl RingElement {
    #[inline]
    pub fn bits(self) -> u32 {
        self.bits as u32
    }

    #[inline]
    pub fn params(self) -> RingParams {
        RingParams { m: self.m }
    }

    /// The coefficient `r_i(x)`.
    #[inline]
    pub fn coeff(self, i: u32) -> bool {
        i < self.m as u32 && (self.bits >> i) & 1 == 1
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    /// `x` is a unit iff `r_0(x) = 1`.
    #[inline]
    pub fn is_unit(self) -> bool {
        self.bits & 1 == 1
    }

    /// Largest `k` with `x in <u^k>`; `m` for zero.
    pub fn valuation(self) -> u32 {
        if self.bits == 0 {
            self.m as u32
        } else {
            self.bits.trailing_zeros()
        }
    }

    /// `(-1)^{r_{m-1}(x)}`.
    #[inline]
    pub fn chi(self) -> i32 {
        if (self.bits >> (self.m - 1)) & 1 == 0 {
            1
        } else {
            -1
        }
    }

    fn check_same(self, other: Self) -> Result<()> {
        if self.m != other.m {
            return Err(Error::param(format!(
                "ring mismatch: m={} vs m={}",
                self.m, other.m
            )));
        }
        Ok(())
    }

    pub fn try_add(self, other: Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(RingElement {
            bits: self.bits ^ other.bits,
            m: self.m,
        })
    }

    pub fn try_mul(self, other: Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(RingElement {
            bits: mul_bits(self.bits as u32, other.bits as u32, self.m as u32) as u16,
            m: self.m,
        })
    }

    pub fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = self.params().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

/// Carry-less product of two coefficient vectors, truncated below `u^m`.
#[inline]
pub(crate) fn mul_bits(a: u32, b: u32, m: u32) -> u32 {
    let mask = (1u32 << m) - 1;
    let mut acc = 0u32;
    let mut b = b;
    let mut shifted = a;
    while b != 0 && shifted & mask != 0 {
        if b & 1 == 1 {
            acc ^= shifted;
        }
        shifted <<= 1;
        b >>= 1;
    }
    acc & mask
}

/// Panics when the operands live in different rings; use
/// [`RingElement::try_add`] to get an error instead.
impl Add for RingElement {
    type Output = RingElement;

    fn add(self, rhs: Self) -> Self {
        self.try_add(rhs)
            .expect("adding elements of different rings")
    }
}

/// Panics when the operands live in different rings; use
/// [`RingElement::try_mul`] to get an error instead.
impl Mul for RingElement {
    type Output = RingElement;

    fn mul(self, rhs: Self) -> Self {
        self.try_mul(rhs)
            .expect("multiplying elements of different rings")
    }
}

/// Canonical form: ascending powers joined by `+`, e.g. `1+u+u3`.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return f.write_str("0");
        }
        let mut first = true;
        for i in 0..self.m as u32 {
            if !self.coeff(i) {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match i {
                0 => f.write_str("1")?,
                1 => f.write_str("u")?,
                _ => write!(f, "u{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for RingParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let m = s
            .trim()
            .parse::<u32>()
            .map_err(|_| Error::Syntax(format!("`{s}` is not a valid m")))?;
        RingParams::new(m)
    }
}
