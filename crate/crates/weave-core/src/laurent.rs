//! Sparse Laurent polynomials in one variable with half-integer exponents.
//!
//! Exponents are stored in units of `s = t^{1/2}`: the map key `k`
//! represents `s^k = t^{k/2}`. Knots produce integer powers of `t` (even
//! keys), two-component links half-odd powers (odd keys); both live in this
//! one type. Coefficients are arbitrary-precision integers, so every value
//! in this crate is exact.
//!
//! The canonical form stores no zero coefficients; equality is equality of
//! term maps.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `Σ c_k · t^{k/2}` with `c_k ∈ Z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    /// half-exponent → nonzero coefficient
    terms: BTreeMap<i64, BigInt>,
}

/// Error from the textual polynomial parser, with a byte position into the
/// input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    /// The variable `t` itself (half-exponent 2).
    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 2)
    }

    /// `c · s^{half_exponent}`; a zero coefficient yields the zero polynomial.
    pub fn monomial(coeff: impl Into<BigInt>, half_exponent: i64) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(half_exponent, coeff);
        }
        Self { terms }
    }

    /// `t^k` as a convenience for whole powers.
    pub fn t_pow(k: i64) -> Self {
        Self::monomial(BigInt::one(), 2 * k)
    }

    /// Builds a polynomial from `(half_exponent, coefficient)` pairs,
    /// summing duplicates and dropping zeros.
    pub fn from_terms<C: Into<BigInt>>(pairs: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (exp, coeff) in pairs {
            let entry = terms.entry(exp).or_insert_with(BigInt::zero);
            *entry += coeff.into();
            if entry.is_zero() {
                terms.remove(&exp);
            }
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `s^{half_exponent}` (zero if absent).
    pub fn coeff(&self, half_exponent: i64) -> BigInt {
        self.terms.get(&half_exponent).cloned().unwrap_or_default()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_half_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_half_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when every exponent is a whole power of `t`.
    pub fn has_integer_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    /// True when every exponent is a half-odd power of `t`.
    pub fn has_half_odd_exponents(&self) -> bool {
        self.terms.keys().all(|e| e % 2 != 0)
    }

    /// Multiplies by `s^{half_delta}` (shifts every exponent).
    pub fn shifted(&self, half_delta: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + half_delta, c.clone()))
                .collect(),
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scaled(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&e, k)| (e, k * c)).collect(),
        }
    }

    /// Substitution `t ↦ t^{−1}`: the Jones polynomial of the mirror image.
    pub fn mirror(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Value at `t = 1` (branch `s = 1`): the sum of all coefficients.
    pub fn value_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Terms as `(half_exponent, decimal coefficient)` pairs sorted by
    /// exponent — the JSON wire form.
    pub fn json_terms(&self) -> Vec<(i64, String)> {
        self.terms
            .iter()
            .map(|(&e, c)| (e, c.to_string()))
            .collect()
    }

    /// Rebuilds a polynomial from the JSON wire form. The error position is
    /// the index of the offending pair.
    pub fn from_json_terms(pairs: &[(i64, String)]) -> Result<Self, ParseError> {
        let mut terms = BTreeMap::new();
        for (idx, (exp, coeff)) in pairs.iter().enumerate() {
            let c = BigInt::from_str(coeff).map_err(|_| ParseError {
                position: idx,
                message: format!("pair {idx}: invalid integer coefficient {coeff:?}"),
            })?;
            if c.is_zero() {
                continue;
            }
            if terms.insert(*exp, c).is_some() {
                return Err(ParseError {
                    position: idx,
                    message: format!("pair {idx}: duplicate exponent {exp}"),
                });
            }
        }
        Ok(Self { terms })
    }

    /// Parses the textual grammar produced by `Display`: terms joined by
    /// `+`/`-`, each term one of `c`, `t`, `t^k`, `t^(k/2)` with an optional
    /// `c*` or juxtaposed `c` coefficient. Whitespace is insignificant.
    pub fn parse(input: &str) -> Result<Self, ParseError> {
        Parser::new(input).parse()
    }

    /// Renders with whole-unit exponents in the named variable; used for
    /// Kauffman bracket output, where exponents count powers of `A` rather
    /// than halves of `t`.
    pub fn format_whole(&self, var: &str) -> String {
        self.render(|exp| match exp {
            1 => var.to_string(),
            e => format!("{var}^{e}"),
        })
    }

    fn render(&self, power: impl Fn(i64) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (exp, coeff)) in self.terms.iter().enumerate() {
            let negative = coeff.is_negative();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = coeff.abs();
            if *exp == 0 {
                out.push_str(&mag.to_string());
            } else {
                if !mag.is_one() {
                    out.push_str(&mag.to_string());
                }
                out.push_str(&power(*exp));
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.render(|half| {
            if half % 2 == 0 {
                match half / 2 {
                    1 => "t".to_string(),
                    k => format!("t^{k}"),
                }
            } else {
                format!("t^({half}/2)")
            }
        });
        f.write_str(&text)
    }
}

// Arithmetic on references; owned impls forward.

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let entry = terms.entry(e).or_insert_with(BigInt::zero);
            *entry -= c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                let entry = terms.entry(e1 + e2).or_insert_with(BigInt::zero);
                *entry += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str) -> Self {
        Self {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn parse(mut self) -> Result<LaurentPoly, ParseError> {
        let mut acc = LaurentPoly::zero();
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            self.skip_ws();
            let term = self.term(sign)?;
            acc = &acc + &term;
            self.skip_ws();
            match self.peek() {
                None => return Ok(acc),
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                Some(c) => {
                    return Err(self.error(format!("expected '+' or '-', found {:?}", c as char)))
                }
            }
        }
    }

    fn term(&mut self, sign: i32) -> Result<LaurentPoly, ParseError> {
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let digits = self.digits()?;
                self.skip_ws();
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                    self.skip_ws();
                }
                Some(digits)
            }
            _ => None,
        };
        let half = if self.peek() == Some(b't') {
            self.pos += 1;
            Some(self.exponent()?)
        } else {
            None
        };
        let coeff = match (coeff, half) {
            (Some(c), _) => c,
            (None, Some(_)) => BigInt::one(),
            (None, None) => return Err(self.error("expected a term".to_string())),
        };
        Ok(LaurentPoly::monomial(coeff * sign, half.unwrap_or(0)))
    }

    /// Exponent suffix after `t`: nothing (t¹), `^k`, `^-k`, or `^(k/2)`.
    fn exponent(&mut self) -> Result<i64, ParseError> {
        if self.peek() != Some(b'^') {
            return Ok(2);
        }
        self.pos += 1;
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let num = self.signed_int()?;
                self.skip_ws();
                self.expect(b'/')?;
                self.skip_ws();
                let start = self.pos;
                let den = self.signed_int()?;
                if den != 2 {
                    self.pos = start;
                    return Err(self.error("only denominator 2 is allowed".to_string()));
                }
                self.skip_ws();
                self.expect(b')')?;
                Ok(num)
            }
            _ => {
                let k = self.signed_int()?;
                k.checked_mul(2)
                    .ok_or_else(|| self.error("exponent too large".to_string()))
            }
        }
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        let digits = self.digits()?;
        let value: i64 = digits.to_string().parse().map_err(|_| ParseError {
            position: start,
            message: "exponent out of range".to_string(),
        })?;
        Ok(if negative { -value } else { value })
    }

    fn digits(&mut self) -> Result<BigInt, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits".to_string()));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(BigInt::from_str(text).unwrap())
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected {:?}", c as char)))
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, message: String) -> ParseError {
        ParseError {
            position: self.pos,
            message,
        }
    }
}
