//! Exact arithmetic in the cyclotomic ring `Z[ζ]`, `ζ = e^{iπ/6}`.
//!
//! `ζ` is a primitive 12th root of unity with minimal polynomial
//! `ζ⁴ = ζ² − 1`, so every element is written on the integer basis
//! `(1, ζ, ζ², ζ³)`. The ring contains every value this crate needs to
//! evaluate Jones polynomials at roots of unity:
//!
//! * `i = ζ³` and `ω = e^{iπ/3} = ζ²`,
//! * `√3 = ζ + ζ^{−1} = 2ζ − ζ³`,
//! * half powers of `t`: substituting `s = t^{1/2} ↦ ζ^h` lands every
//!   Laurent polynomial in the ring, with `h = 1` giving `t = ω` and
//!   `h = 3` giving `t = −1`.
//!
//! Evaluations at `ω` of Jones polynomials are always of the shape
//! `± i^{μ−1} (i√3)^{n}`; [`CycloInt::lm_decompose`] recovers `(±, n)`
//! exactly, and [`CycloInt::abs_if_real_integerlike`] recovers `|V(−1)|`,
//! the determinant.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;

/// An element `c₀ + c₁ζ + c₂ζ² + c₃ζ³` of `Z[ζ]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CycloInt {
    coeffs: [BigInt; 4],
}

/// Result of writing a value as `sign · i^{μ−1} · (i√3)^{n_l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LmDecomposition {
    /// `+1` or `−1`.
    pub sign: i8,
    /// The exponent of `i√3`; for a knot this is the invariant `n_L`.
    pub n_l: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycloError {
    /// The value is not `± i^{μ−1} (i√3)^n` for any `n ≥ 0`.
    #[error("{value} is not of the form ± i^(μ-1) · (i√3)^n")]
    NotLMForm { value: String },
    /// The value is not a complex unit times a rational integer, so it has
    /// no meaningful integer absolute value.
    #[error("{value} is not a unit times a rational integer")]
    NotUnitTimesInteger { value: String },
}

/// `ζ^k` for `k = 0..12` on the basis `(1, ζ, ζ², ζ³)`.
const ZETA_POWERS: [[i64; 4]; 12] = [
    [1, 0, 0, 0],
    [0, 1, 0, 0],
    [0, 0, 1, 0],
    [0, 0, 0, 1],
    [-1, 0, 1, 0],
    [0, -1, 0, 1],
    [-1, 0, 0, 0],
    [0, -1, 0, 0],
    [0, 0, -1, 0],
    [0, 0, 0, -1],
    [1, 0, -1, 0],
    [0, 1, 0, -1],
];

impl CycloInt {
    pub fn new(coeffs: [impl Into<BigInt>; 4]) -> Self {
        let [c0, c1, c2, c3] = coeffs;
        Self {
            coeffs: [c0.into(), c1.into(), c2.into(), c3.into()],
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::new([n.into(), BigInt::zero(), BigInt::zero(), BigInt::zero()])
    }

    /// `i = ζ³`.
    pub fn i() -> Self {
        Self::zeta_pow(3)
    }

    /// `ω = e^{iπ/3} = ζ²`, the sixth root of unity where Jones
    /// polynomials collapse to `± i^{μ−1} (i√3)^{n}`.
    pub fn omega() -> Self {
        Self::zeta_pow(2)
    }

    /// `√3 = 2ζ − ζ³`.
    pub fn sqrt3() -> Self {
        Self::new([0, 2, 0, -1])
    }

    /// `i√3 = 2ζ² − 1`.
    pub fn i_sqrt3() -> Self {
        Self::new([-1, 0, 2, 0])
    }

    /// `ζ^k` for any integer `k` (period 12).
    pub fn zeta_pow(k: i64) -> Self {
        let idx = k.rem_euclid(12) as usize;
        let c = ZETA_POWERS[idx];
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigInt::is_zero)
    }

    /// The basis coefficient of `ζ^k`, `k ∈ {0,1,2,3}`.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    /// True when the value lies in `Z` (no `ζ`, `ζ²`, `ζ³` component).
    pub fn is_rational(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero() && self.coeffs[3].is_zero()
    }

    /// Complex conjugation, `ζ ↦ ζ^{−1}`.
    pub fn conj(&self) -> Self {
        let [c0, c1, c2, c3] = &self.coeffs;
        Self {
            coeffs: [c0 + c2, c1.clone(), -c2, -(c1 + c3)],
        }
    }

    /// `v · conj(v) = |v|²`, a nonnegative real element of the ring.
    pub fn norm(&self) -> Self {
        self * &self.conj()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates a Laurent polynomial at `s = ζ^h`, where the polynomial's
    /// half-exponent `k` means `s^k`. `h = 1` evaluates at `t = ω`,
    /// `h = 3` at `t = −1`.
    pub fn eval_at(poly: &LaurentPoly, h: i64) -> Self {
        let mut acc = Self::zero();
        for (k, c) in poly.terms() {
            let term = Self::zeta_pow(k * h).scaled(c);
            acc = &acc + &term;
        }
        acc
    }

    /// Evaluation at `t = ω = e^{iπ/3}` (branch `t^{1/2} = e^{iπ/6}`).
    pub fn eval_at_omega(poly: &LaurentPoly) -> Self {
        Self::eval_at(poly, 1)
    }

    /// Evaluation at `t = −1` (branch `t^{1/2} = i`).
    pub fn eval_at_minus_one(poly: &LaurentPoly) -> Self {
        Self::eval_at(poly, 3)
    }

    fn scaled(&self, c: &BigInt) -> Self {
        Self {
            coeffs: [
                &self.coeffs[0] * c,
                &self.coeffs[1] * c,
                &self.coeffs[2] * c,
                &self.coeffs[3] * c,
            ],
        }
    }

    /// Writes the value as `sign · i^{μ−1} · (i√3)^{n}`, the shape every
    /// Jones evaluation at `ω` takes for a link with `μ` components.
    pub fn lm_decompose(&self, mu: u32) -> Result<LmDecomposition, CycloError> {
        let not_lm = || CycloError::NotLMForm {
            value: self.to_string(),
        };
        let norm = self.norm();
        if !norm.is_rational() {
            return Err(not_lm());
        }
        // |i^{μ−1}(i√3)^n|² = 3^n: read n off the norm.
        let mut n = norm.coeffs[0].clone();
        let three = BigInt::from(3);
        let mut n_l = 0u32;
        while n > BigInt::one() {
            let (q, r) = n.div_rem(&three);
            if !r.is_zero() {
                return Err(not_lm());
            }
            n = q;
            n_l += 1;
        }
        if !n.is_one() {
            return Err(not_lm());
        }
        let candidate = &Self::i().pow((mu + 3) % 4) * &Self::i_sqrt3().pow(n_l);
        if *self == candidate {
            Ok(LmDecomposition { sign: 1, n_l })
        } else if *self == -&candidate {
            Ok(LmDecomposition { sign: -1, n_l })
        } else {
            Err(not_lm())
        }
    }

    /// `|v|` as a natural number, defined when `v` is a complex unit times
    /// a rational integer — the case for `V(−1)`, whose absolute value is
    /// the determinant.
    pub fn abs_if_real_integerlike(&self) -> Result<BigUint, CycloError> {
        let err = || CycloError::NotUnitTimesInteger {
            value: self.to_string(),
        };
        let norm = self.norm();
        if !norm.is_rational() {
            return Err(err());
        }
        let n = norm.coeffs[0].to_biguint().expect("norm is nonnegative");
        let root = n.sqrt();
        if &root * &root != n {
            return Err(err());
        }
        Ok(root)
    }
}

impl Add for &CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: &CycloInt) -> CycloInt {
        CycloInt {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] + &rhs.coeffs[k]),
        }
    }
}

impl Sub for &CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: &CycloInt) -> CycloInt {
        CycloInt {
            coeffs: std::array::from_fn(|k| &self.coeffs[k] - &rhs.coeffs[k]),
        }
    }
}

impl Neg for &CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        CycloInt {
            coeffs: std::array::from_fn(|k| -&self.coeffs[k]),
        }
    }
}

impl Mul for &CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: &CycloInt) -> CycloInt {
        // Convolve to raw degree 6, then fold with ζ⁴ = ζ² − 1, ζ⁵ = ζ³ − ζ,
        // ζ⁶ = −1.
        let mut raw: [BigInt; 7] = Default::default();
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                raw[i + j] += a * b;
            }
        }
        let [r0, r1, r2, r3, r4, r5, r6] = raw;
        CycloInt {
            coeffs: [r0 - &r4 - r6, r1 - &r5, r2 + r4, r3 + r5],
        }
    }
}

macro_rules! forward_owned {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: CycloInt) -> CycloInt {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&CycloInt> for CycloInt {
            type Output = CycloInt;
            fn $method(self, rhs: &CycloInt) -> CycloInt {
                $trait::$method(&self, rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        -&self
    }
}

impl From<i64> for CycloInt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for CycloInt {
    /// Prefers the compact alphabet `n`, `n·i`, `n·√3`, `n·i√3`; falls back
    /// to the `ζ`-basis expansion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [c0, c1, c2, c3] = &self.coeffs;
        if self.is_rational() {
            return write!(f, "{c0}");
        }
        // a·i = (0,0,0,a)
        if c0.is_zero() && c1.is_zero() && c2.is_zero() {
            return write!(f, "{}i", signed_unit_prefix(c3));
        }
        // a·√3 = (0,2a,0,−a)
        if c0.is_zero() && c2.is_zero() && *c1 == -(c3 + c3) {
            return write!(f, "{}√3", signed_unit_prefix(&-c3));
        }
        // a·i√3 = (−a,0,2a,0)
        if c1.is_zero() && c3.is_zero() && *c2 == -(c0 + c0) {
            return write!(f, "{}i√3", signed_unit_prefix(&-c0));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match k {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "ζ")?,
                1 => write!(f, "{mag}ζ")?,
                _ if mag.is_one() => write!(f, "ζ^{k}")?,
                _ => write!(f, "{mag}ζ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `""`, `"-"`, or `"{n}"` so that `{prefix}i` reads `i`, `-i`, `2i`, …
fn signed_unit_prefix(n: &BigInt) -> String {
    if n.is_one() {
        String::new()
    } else if (-n).is_one() {
        "-".to_string()
    } else {
        n.to_string()
    }
}

/// Numeric shadow of the ring for sanity tests and nothing else.
#[cfg(test)]
fn to_complex(v: &CycloInt) -> (f64, f64) {
    use num_traits::ToPrimitive;
    let mut re = 0.0;
    let mut im = 0.0;
    for (k, c) in v.coeffs.iter().enumerate() {
        let c = c.to_f64().expect("test coefficients fit in f64");
        let angle = std::f64::consts::PI * (k as f64) / 6.0;
        re += c * angle.cos();
        im += c * angle.sin();
    }
    (re, im)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn power_table_is_consistent() {
        for k in 0..12i64 {
            let prod = &CycloInt::zeta_pow(k) * &CycloInt::zeta_pow(12 - k);
            assert_eq!(prod, CycloInt::one(), "ζ^{k} · ζ^{}", 12 - k);
            assert_eq!(CycloInt::zeta_pow(k + 12), CycloInt::zeta_pow(k));
            assert_eq!(CycloInt::zeta_pow(k - 12), CycloInt::zeta_pow(k));
        }
    }

    #[test]
    fn named_constants_satisfy_their_identities() {
        let i = CycloInt::i();
        let w = CycloInt::omega();
        let r3 = CycloInt::sqrt3();
        assert_eq!(&i * &i, CycloInt::from_int(-1));
        assert_eq!(w.pow(3), CycloInt::from_int(-1));
        assert_eq!(w.pow(6), CycloInt::one());
        assert_eq!(&r3 * &r3, CycloInt::from_int(3));
        assert_eq!(&i * &r3, CycloInt::i_sqrt3());
        assert_eq!(CycloInt::i_sqrt3().pow(2), CycloInt::from_int(-3));
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(CycloInt::i().conj(), -CycloInt::i());
        assert_eq!(CycloInt::sqrt3().conj(), CycloInt::sqrt3());
        assert_eq!(CycloInt::omega().conj(), CycloInt::zeta_pow(-2));
    }

    #[test]
    fn eval_figure_eight() {
        let f = LaurentPoly::parse("t^-2 - t^-1 + 1 - t + t^2").unwrap();
        // ω is a root of t² − t + 1, so the polynomial collapses to
        // ω^{−2} − ω^{−1} = −1 there.
        assert_eq!(CycloInt::eval_at_omega(&f), CycloInt::from_int(-1));
        assert_eq!(CycloInt::eval_at_minus_one(&f), CycloInt::from_int(5));
    }

    #[test]
    fn eval_hopf_link() {
        let v = LaurentPoly::parse("-t^(1/2) - t^(5/2)").unwrap();
        assert_eq!(
            CycloInt::eval_at_minus_one(&v),
            CycloInt::i().scaled(&BigInt::from(-2))
        );
        // −ζ − ζ⁵ = −(ζ + ζ³ − ζ) = −i
        assert_eq!(CycloInt::eval_at_omega(&v), -CycloInt::i());
    }

    #[test]
    fn lm_decompose_small_alphabet() {
        let dec = |v: &CycloInt, mu| v.lm_decompose(mu).unwrap();
        assert_eq!(
            dec(&CycloInt::one(), 1),
            LmDecomposition { sign: 1, n_l: 0 }
        );
        assert_eq!(
            dec(&CycloInt::from_int(-1), 1),
            LmDecomposition { sign: -1, n_l: 0 }
        );
        // 3 = −(i√3)²
        assert_eq!(
            dec(&CycloInt::from_int(3), 1),
            LmDecomposition { sign: -1, n_l: 2 }
        );
        assert_eq!(dec(&CycloInt::i(), 2), LmDecomposition { sign: 1, n_l: 0 });
        // √3 = −i·(i√3)
        assert_eq!(
            dec(&CycloInt::sqrt3(), 2),
            LmDecomposition { sign: -1, n_l: 1 }
        );
        assert_eq!(
            dec(&-CycloInt::sqrt3(), 2),
            LmDecomposition { sign: 1, n_l: 1 }
        );
    }

    #[test]
    fn lm_decompose_rejects_other_values() {
        assert!(matches!(
            CycloInt::from_int(2).lm_decompose(1),
            Err(CycloError::NotLMForm { .. })
        ));
        let v = &CycloInt::one() + &CycloInt::zeta_pow(1);
        assert!(v.lm_decompose(1).is_err());
        // Right norm, wrong unit for the component count.
        assert!(CycloInt::sqrt3().lm_decompose(1).is_err());
    }

    #[test]
    fn abs_of_unit_multiples() {
        let five = CycloInt::from_int(-5);
        assert_eq!(five.abs_if_real_integerlike().unwrap(), BigUint::from(5u32));
        let two_i = CycloInt::i().scaled(&BigInt::from(-2));
        assert_eq!(
            two_i.abs_if_real_integerlike().unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            CycloInt::zero().abs_if_real_integerlike().unwrap(),
            BigUint::zero()
        );
    }

    #[test]
    fn abs_rejects_non_integer_magnitudes() {
        let v = &CycloInt::one() + &CycloInt::i().scaled(&BigInt::from(2));
        assert!(matches!(
            v.abs_if_real_integerlike(),
            Err(CycloError::NotUnitTimesInteger { .. })
        ));
        let w = &CycloInt::one() + &CycloInt::zeta_pow(1);
        assert!(w.abs_if_real_integerlike().is_err());
    }

    #[test]
    fn display_alphabet() {
        assert_eq!(CycloInt::from_int(3).to_string(), "3");
        assert_eq!(CycloInt::from_int(-1).to_string(), "-1");
        assert_eq!(CycloInt::i().to_string(), "i");
        assert_eq!((-CycloInt::i()).to_string(), "-i");
        assert_eq!(CycloInt::sqrt3().to_string(), "√3");
        assert_eq!((-CycloInt::sqrt3()).to_string(), "-√3");
        assert_eq!(CycloInt::i_sqrt3().to_string(), "i√3");
        assert_eq!(CycloInt::zeta_pow(1).to_string(), "ζ");
        assert_eq!(
            (&CycloInt::one() - &CycloInt::zeta_pow(3)).to_string(),
            "1 - ζ^3"
        );
    }

    fn arb_cyclo() -> impl Strategy<Value = CycloInt> {
        proptest::array::uniform4(-50i64..=50).prop_map(CycloInt::new)
    }

    fn close(a: (f64, f64), b: (f64, f64)) -> bool {
        (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyclo(), b in arb_cyclo(), c in arb_cyclo()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn conjugation_is_an_involutive_homomorphism(a in arb_cyclo(), b in arb_cyclo()) {
            prop_assert_eq!(a.conj().conj(), a.clone());
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!((&a + &b).conj(), &a.conj() + &b.conj());
        }

        #[test]
        fn norm_is_multiplicative_and_real(a in arb_cyclo(), b in arb_cyclo()) {
            prop_assert_eq!((&a * &b).norm(), &a.norm() * &b.norm());
            let (_, im) = to_complex(&a.norm());
            prop_assert!(im.abs() < 1e-6);
        }

        #[test]
        fn multiplication_matches_complex_floats(a in arb_cyclo(), b in arb_cyclo()) {
            let (ar, ai) = to_complex(&a);
            let (br, bi) = to_complex(&b);
            let expected = (ar * br - ai * bi, ar * bi + ai * br);
            prop_assert!(close(to_complex(&(&a * &b)), expected));
        }
    }
}
