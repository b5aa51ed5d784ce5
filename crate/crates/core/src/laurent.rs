//! Binary Laurent polynomials in the delay operator `D`.
//!
//! A [`LaurentPoly`] is a finitely supported sum `Σ c_i D^i` with `c_i ∈ Z2`
//! and `i` ranging over all integers. Coefficients are stored densely as a
//! packed bit string starting at the smallest exponent, which keeps the short
//! polynomials that appear in convolutional stabilizers cheap to convolve.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::str::FromStr;

use crate::error::{Error, Result};

const WORD: usize = 64;

/// A binary Laurent polynomial with finite support.
///
/// Representation is canonical: a nonzero value has its lowest and highest
/// stored bits set, and zero is `min_exp = 0` with no bits, so structural
/// equality coincides with polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    min_exp: i64,
    len: usize,
    words: Vec<u64>,
}

/// Greatest common divisor split into a power of `D` and a polynomial part
/// with nonzero constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentGcd {
    pub shift: i64,
    pub poly: LaurentPoly,
}

impl LaurentGcd {
    /// `D^shift · poly` as a single polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        self.poly.shift(self.shift)
    }

    /// True when the polynomial part is 1, i.e. the gcd is a bare power of `D`.
    pub fn is_monomial(&self) -> bool {
        self.poly.is_one()
    }
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// XOR `src` (a packed bit string) into `dst` starting at bit `offset`.
fn xor_shifted(dst: &mut [u64], src: &[u64], offset: usize) {
    let word_off = offset / WORD;
    let bit_off = offset % WORD;
    for (i, &w) in src.iter().enumerate() {
        if w == 0 {
            continue;
        }
        dst[word_off + i] ^= w << bit_off;
        if bit_off != 0 {
            let carry = w >> (WORD - bit_off);
            if carry != 0 {
                dst[word_off + i + 1] ^= carry;
            }
        }
    }
}

fn set_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(wi * WORD + b)
        })
    })
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `D^exp`.
    pub fn monomial(exp: i64) -> Self {
        LaurentPoly {
            min_exp: exp,
            len: 1,
            words: vec![1],
        }
    }

    /// Sum of `D^e` over the given exponents. Repeated exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let exps: Vec<i64> = exps.into_iter().collect();
        let (Some(&lo), Some(&hi)) = (exps.iter().min(), exps.iter().max()) else {
            return Self::zero();
        };
        let len = (hi - lo) as usize + 1;
        let mut words = vec![0u64; words_for(len)];
        for e in exps {
            let i = (e - lo) as usize;
            words[i / WORD] ^= 1 << (i % WORD);
        }
        Self::from_raw(lo, words, len)
    }

    /// Normalizes a raw bit buffer whose bit `i` is the coefficient of `D^(min_exp + i)`.
    fn from_raw(min_exp: i64, words: Vec<u64>, len: usize) -> Self {
        let mut lo = None;
        let mut hi = None;
        for (wi, &w) in words.iter().enumerate() {
            if w != 0 {
                if lo.is_none() {
                    lo = Some(wi * WORD + w.trailing_zeros() as usize);
                }
                hi = Some(wi * WORD + (WORD - 1 - w.leading_zeros() as usize));
            }
        }
        let (Some(lo), Some(hi)) = (lo, hi) else {
            return Self::zero();
        };
        debug_assert!(hi < len.max(1) + WORD);
        let new_len = hi - lo + 1;
        let mut out = vec![0u64; words_for(new_len)];
        if lo == 0 {
            let n = out.len();
            out.copy_from_slice(&words[..n]);
        } else {
            let word_off = lo / WORD;
            let bit_off = lo % WORD;
            for (k, slot) in out.iter_mut().enumerate() {
                let a = words.get(word_off + k).copied().unwrap_or(0);
                let b = words.get(word_off + k + 1).copied().unwrap_or(0);
                *slot = if bit_off == 0 {
                    a
                } else {
                    (a >> bit_off) | (b << (WORD - bit_off))
                };
            }
        }
        let tail = new_len % WORD;
        if tail != 0 {
            *out.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        LaurentPoly {
            min_exp: min_exp + lo as i64,
            len: new_len,
            words: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.len == 0
    }

    pub fn is_one(&self) -> bool {
        self.len == 1 && self.min_exp == 0
    }

    /// Smallest exponent with a nonzero coefficient.
    pub fn delay(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min_exp)
    }

    /// Largest exponent with a nonzero coefficient.
    pub fn degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min_exp + self.len as i64 - 1)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn coeff(&self, exp: i64) -> bool {
        if self.is_zero() || exp < self.min_exp {
            return false;
        }
        let i = (exp - self.min_exp) as usize;
        i < self.len && (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        set_bits(&self.words).map(move |i| self.min_exp + i as i64)
    }

    /// Multiplication by `D^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            min_exp: self.min_exp + k,
            ..self.clone()
        }
    }

    /// The substitution `D → D^-1`.
    pub fn time_reverse(&self) -> Self {
        let Some(deg) = self.degree() else {
            return Self::zero();
        };
        let mut words = vec![0u64; self.words.len()];
        for i in set_bits(&self.words) {
            let j = self.len - 1 - i;
            words[j / WORD] |= 1 << (j % WORD);
        }
        LaurentPoly {
            min_exp: -deg,
            len: self.len,
            words,
        }
    }

    /// Terms with strictly positive exponent.
    pub fn positive_part(&self) -> Self {
        Self::from_exponents(self.exponents().filter(|&e| e > 0))
    }

    /// Terms with strictly negative exponent.
    pub fn negative_part(&self) -> Self {
        Self::from_exponents(self.exponents().filter(|&e| e < 0))
    }

    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Polynomial with its delay removed, so the constant term is 1.
    fn strip_delay(&self) -> Self {
        self.shift(-self.min_exp)
    }

    /// Division with remainder of ordinary polynomials (both with delay ≥ 0).
    fn divrem_ordinary(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("nonzero divisor");
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let k = rd - dd;
            quot.push(k);
            rem += &divisor.shift(k);
        }
        (Self::from_exponents(quot), rem)
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if it exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (q, r) = self.strip_delay().divrem_ordinary(&divisor.strip_delay());
        r.is_zero().then(|| q.shift(self.min_exp - divisor.min_exp))
    }

    /// Gcd of two polynomials, reported as a power of `D` times a polynomial
    /// with nonzero constant term. The power is the smaller of the two delays.
    pub fn gcd(a: &Self, b: &Self) -> Result<LaurentGcd> {
        Self::gcd_all([a, b])
    }

    /// Gcd of every nonzero polynomial in `polys`.
    pub fn gcd_all<'a, I>(polys: I) -> Result<LaurentGcd>
    where
        I: IntoIterator<Item = &'a LaurentPoly>,
    {
        let mut shift: Option<i64> = None;
        let mut acc = Self::zero();
        for p in polys.into_iter().filter(|p| !p.is_zero()) {
            shift = Some(shift.map_or(p.min_exp, |s| s.min(p.min_exp)));
            let mut a = acc;
            let mut b = p.strip_delay();
            while !b.is_zero() {
                let (_, r) = a.divrem_ordinary(&b);
                a = b;
                b = r;
            }
            acc = a;
        }
        match shift {
            Some(shift) => Ok(LaurentGcd { shift, poly: acc }),
            None => Err(Error::ZeroGcd),
        }
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.min_exp.min(rhs.min_exp);
        let hi = self.degree().unwrap().max(rhs.degree().unwrap());
        let len = (hi - lo) as usize + 1;
        let mut words = vec![0u64; words_for(len) + 1];
        xor_shifted(&mut words, &self.words, (self.min_exp - lo) as usize);
        xor_shifted(&mut words, &rhs.words, (rhs.min_exp - lo) as usize);
        LaurentPoly::from_raw(lo, words, len)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self + rhs;
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let len = self.len + rhs.len - 1;
        let mut words = vec![0u64; words_for(len) + 1];
        for i in set_bits(&self.words) {
            xor_shifted(&mut words, &rhs.words, i);
        }
        LaurentPoly::from_raw(self.min_exp + rhs.min_exp, words, len)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, e) in self.exponents().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            match e {
                0 => f.write_str("1")?,
                1 => f.write_str("D")?,
                _ => write!(f, "D^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly {
    /// Parses the `1+D^3`, `D^-1+D` term syntax. Whitespace is ignored, terms
    /// may come in any order, and a repeated exponent is rejected. `column` is
    /// the 1-based column of `s` within its source line, used in errors.
    pub fn parse_at(s: &str, line: usize, column: usize) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::parse(line, column, "empty polynomial"));
        }
        if compact == "0" {
            return Ok(Self::zero());
        }
        let mut exps = Vec::new();
        for term in compact.split('+') {
            let exp = parse_term(term)
                .ok_or_else(|| Error::parse(line, column, format!("bad term `{term}` in `{s}`")))?;
            if exps.contains(&exp) {
                return Err(Error::parse(
                    line,
                    column,
                    format!("duplicate exponent {exp} in `{s}`"),
                ));
            }
            exps.push(exp);
        }
        Ok(Self::from_exponents(exps))
    }
}

fn parse_term(term: &str) -> Option<i64> {
    match term {
        "1" => Some(0),
        "D" => Some(1),
        _ => {
            let rest = term.strip_prefix("D^")?;
            let rest = rest
                .strip_prefix('{')
                .and_then(|r| r.strip_suffix('}'))
                .unwrap_or(rest);
            rest.parse().ok()
        }
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_at(s, 1, 1)
    }
}
