//! Closed computations for the two weaving families: the 5×5 matrix
//! recurrence for `V_{W(3,n)}`, the interleaved skein recursion for
//! `V_{W(p,2)}`, closed-form evaluations at `t = e^{iπ/3}`, determinant
//! recurrences, and the assembled invariant report (determinant, `n_L`,
//! unknotting bounds).
//!
//! Everything here is exact integer/polynomial arithmetic; the bracket
//! oracle in [`crate::bracket`] provides the independent cross-check.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use crate::bracket::{jones_via_bracket, BracketError, BracketOptions};
use crate::braid::{weaving_word, BraidError, BraidWord};
use crate::cyclo::{CycloError, CycloInt};
use crate::laurent::LaurentPoly;

/// Dense matrix over Laurent polynomials. Rectangular: the recurrence uses
/// a 5×5 core together with a 5×1 state column and a 1×5 assembly row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            !rows.is_empty() && cols > 0 && rows.iter().all(|r| r.len() == cols),
            "matrix rows must be nonempty and of equal length"
        );
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, row: usize, col: usize) -> &LaurentPoly {
        assert!(row < self.rows && col < self.cols);
        &self.data[row * self.cols + col]
    }

    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions must match");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = LaurentPoly::zero();
                for k in 0..self.cols {
                    acc = &acc + &(self.at(i, k) * rhs.at(k, j));
                }
                data.push(acc);
            }
        }
        PolyMatrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }
}

/// The 5×5 recurrence core `M(t)`: the state
/// `[C_{n,0}, C_{n,1}, C_{n,2}, C_{n,12}, C_{n,21}]` of one braid period is
/// `M(t)` times the previous state.
pub fn matrix_m() -> PolyMatrix {
    let t = LaurentPoly::t();
    let zero = LaurentPoly::zero();
    let one = LaurentPoly::one();
    let tm1 = &t - &one; // t − 1
    let t2 = &t * &t;
    PolyMatrix::from_rows(vec![
        vec![
            zero.clone(),
            -&(&t * &tm1),
            zero.clone(),
            zero.clone(),
            t2.clone(),
        ],
        vec![
            -&tm1,
            -&(&tm1 * &tm1),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            zero.clone(),
            t.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![
            one.clone(),
            tm1.clone(),
            zero.clone(),
            zero.clone(),
            zero.clone(),
        ],
        vec![zero.clone(), zero.clone(), zero.clone(), t, zero],
    ])
}

/// The seed column `C₁(t) = [0, −(t−1), 0, 1, 0]ᵀ`.
pub fn c1_vector() -> PolyMatrix {
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    PolyMatrix::from_rows(vec![
        vec![LaurentPoly::zero()],
        vec![-&(&t - &one)],
        vec![LaurentPoly::zero()],
        vec![one],
        vec![LaurentPoly::zero()],
    ])
}

/// The assembly row `Z(t) = [(1+t)², (1+t)t², (1+t)t², t⁴, t⁴]`.
pub fn z_row() -> PolyMatrix {
    let t = LaurentPoly::t();
    let one_plus_t = &LaurentPoly::one() + &t;
    let t2 = LaurentPoly::t_pow(2);
    let t4 = LaurentPoly::t_pow(4);
    PolyMatrix::from_rows(vec![vec![
        &one_plus_t * &one_plus_t,
        &one_plus_t * &t2,
        &one_plus_t * &t2,
        t4.clone(),
        t4,
    ]])
}

/// Out-of-range family parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum DomainError {
    #[error("the W(3,n) family needs n ≥ 1, got n = {0}")]
    NTooSmall(u32),
    #[error("the W(p,2) family needs p ≥ 2, got p = {0}")]
    PTooSmall(u32),
}

/// `V_{W(3,n)}(t) = t^{−n−1} · Z(t) · M(t)^{n−1} · C₁(t)`, the matrix power
/// taken by iterated application of `M` to the state column.
pub fn jones_w3n(n: u32) -> Result<LaurentPoly, DomainError> {
    if n < 1 {
        return Err(DomainError::NTooSmall(n));
    }
    let m = matrix_m();
    let mut state = c1_vector();
    for _ in 1..n {
        state = m.mul(&state);
    }
    let v = z_row().mul(&state);
    Ok(v.at(0, 0).shifted(-2 * (n as i64 + 1)))
}

/// Same value as [`jones_w3n`], computed through the five scalar
/// recurrences instead of the matrix form.
pub fn jones_w3n_scalar_recursion(n: u32) -> Result<LaurentPoly, DomainError> {
    if n < 1 {
        return Err(DomainError::NTooSmall(n));
    }
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let tm1 = &t - &one;
    let t2 = &t * &t;
    let t4 = &t2 * &t2;
    let one_plus_t = &one + &t;

    // State for n = 1.
    let mut c0 = LaurentPoly::zero();
    let mut c1 = -&tm1;
    let mut c2 = LaurentPoly::zero();
    let mut c12 = one.clone();
    let mut c21 = LaurentPoly::zero();
    for _ in 1..n {
        let next_c0 = &-&(&(&t * &tm1) * &c1) + &(&t2 * &c21);
        let next_c1 = &-&(&tm1 * &c0) - &(&(&tm1 * &tm1) * &c1);
        let next_c2 = &t * &c1;
        let next_c12 = &c0 + &(&tm1 * &c1);
        let next_c21 = &t * &c12;
        (c0, c1, c2, c12, c21) = (next_c0, next_c1, next_c2, next_c12, next_c21);
    }
    let assembled = &(&(&one_plus_t * &one_plus_t) * &c0)
        + &(&(&(&one_plus_t * &(&c1 + &c2)) * &t2) + &(&(&c12 + &c21) * &t4));
    Ok(assembled.shifted(-2 * (n as i64 + 1)))
}

/// `V_{W(p,2)}(t)` by the interleaved even/odd skein recursion
/// (`z = t^{1/2} − t^{−1/2}`):
///
/// ```text
/// V_{W(2,2)}   = −(t^{5/2} + t^{1/2})
/// V_{W(3,2)}   = t^{−2} − t^{−1} z V_{W(2,2)}
/// V_{W(2n,2)}  = t² V_{W(2n−2,2)} + t z V_{W(2n−1,2)}
/// V_{W(2n+1,2)} = t^{−2} V_{W(2n−1,2)} − t^{−1} z V_{W(2n,2)}
/// ```
pub fn jones_wp2(p: u32) -> Result<LaurentPoly, DomainError> {
    if p < 2 {
        return Err(DomainError::PTooSmall(p));
    }
    let z = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let t2 = LaurentPoly::t_pow(2);
    let tm2 = LaurentPoly::t_pow(-2);
    let tz = &LaurentPoly::t() * &z;
    let tm1z = &LaurentPoly::t_pow(-1) * &z;

    let mut even = LaurentPoly::from_terms([(1, -1), (5, -1)]);
    if p == 2 {
        return Ok(even);
    }
    let mut odd = &tm2 - &(&tm1z * &even);
    for current in 4..=p {
        if current.is_even() {
            even = &(&t2 * &even) + &(&tz * &odd);
        } else {
            odd = &(&tm2 * &odd) - &(&tm1z * &even);
        }
    }
    Ok(if p.is_even() { even } else { odd })
}

/// Closed form for `V_{W(3,n)}(e^{iπ/3})`: 3 when `4 | n`, −1 when
/// `n ≡ 2 (mod 4)`, 1 when `n` is odd.
pub fn eval_w3n_at_w(n: u32) -> Result<CycloInt, DomainError> {
    if n < 1 {
        return Err(DomainError::NTooSmall(n));
    }
    Ok(match n % 4 {
        0 => CycloInt::from_int(3),
        2 => CycloInt::from_int(-1),
        _ => CycloInt::one(),
    })
}

/// Closed form for `V_{W(p,2)}(e^{iπ/3})`: for `p = 2m` the value cycles
/// through `±i` and `±√3` with `m`, for `p = 2m + 1` it is `−1` when
/// `m ≡ 1, 2 (mod 4)` and `1` otherwise.
pub fn eval_wp2_at_w(p: u32) -> Result<CycloInt, DomainError> {
    if p < 2 {
        return Err(DomainError::PTooSmall(p));
    }
    if p.is_even() {
        let m = p / 2;
        if m.is_odd() {
            // m = 2k − 1 ↦ (−1)^k i
            let k = m.div_ceil(2);
            Ok(if k.is_odd() {
                -CycloInt::i()
            } else {
                CycloInt::i()
            })
        } else {
            // m = 2k ↦ (−1)^{k+1} √3
            let k = m / 2;
            Ok(if k.is_odd() {
                CycloInt::sqrt3()
            } else {
                -CycloInt::sqrt3()
            })
        }
    } else {
        let m = (p - 1) / 2;
        Ok(match m % 4 {
            1 | 2 => CycloInt::from_int(-1),
            _ => CycloInt::one(),
        })
    }
}

/// `det W(3,n)` by the integer recurrence `d_n = 3d_{n−1} − d_{n−2} + 2`
/// with `d₁ = 1`, `d₂ = 5`.
pub fn det_w3n(n: u32) -> Result<BigUint, DomainError> {
    if n < 1 {
        return Err(DomainError::NTooSmall(n));
    }
    let mut prev = BigInt::one();
    let mut curr = BigInt::from(5);
    if n == 1 {
        return Ok(BigUint::one());
    }
    for _ in 2..n {
        let next = BigInt::from(3) * &curr - &prev + 2;
        prev = curr;
        curr = next;
    }
    Ok(curr.to_biguint().expect("determinants are positive"))
}

/// `det W(p,2)` by the integer recurrence `x_{k+1} = 6x_k − x_{k−1}`:
/// even `p = 2k` from seeds 2, 12; odd `p = 2k + 1` from seeds 5, 29.
pub fn det_wp2(p: u32) -> Result<BigUint, DomainError> {
    if p < 2 {
        return Err(DomainError::PTooSmall(p));
    }
    let (mut prev, mut curr, index) = if p.is_even() {
        (BigInt::from(2), BigInt::from(12), p / 2)
    } else {
        (BigInt::from(5), BigInt::from(29), (p - 1) / 2)
    };
    if index == 1 {
        return Ok(prev.to_biguint().expect("determinants are positive"));
    }
    for _ in 2..index {
        let next = BigInt::from(6) * &curr - &prev;
        prev = curr;
        curr = next;
    }
    Ok(curr.to_biguint().expect("determinants are positive"))
}

// ---------------------------------------------------------------------------
// The matrix recurrence evaluated at t = ω, for the algebraic identities
// behind the closed forms.
// ---------------------------------------------------------------------------

/// Square matrix over the cyclotomic ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycloMatrix {
    size: usize,
    data: Vec<CycloInt>,
}

impl CycloMatrix {
    pub fn identity(size: usize) -> Self {
        let mut data = vec![CycloInt::zero(); size * size];
        for i in 0..size {
            data[i * size + i] = CycloInt::one();
        }
        Self { size, data }
    }

    pub fn at(&self, row: usize, col: usize) -> &CycloInt {
        &self.data[row * self.size + col]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut data = vec![CycloInt::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    data[i * n + j] = &data[i * n + j] + &(a * rhs.at(k, j));
                }
            }
        }
        Self { size: n, data }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size);
        Self {
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scaled(&self, by: &CycloInt) -> Self {
        Self {
            size: self.size,
            data: self.data.iter().map(|a| a * by).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycloInt::is_zero)
    }
}

/// `M(ω)`: the recurrence core with every entry evaluated at `t = ω`.
pub fn matrix_m_at_omega() -> CycloMatrix {
    let m = matrix_m();
    let mut data = Vec::with_capacity(25);
    for i in 0..5 {
        for j in 0..5 {
            data.push(CycloInt::eval_at(m.at(i, j), 1));
        }
    }
    CycloMatrix { size: 5, data }
}

/// The annihilating identity behind the period-4 value pattern:
/// `M(ω)⁶ + ω·M(ω)² = 0`.
pub fn omega_matrix_identity_holds() -> bool {
    let m = matrix_m_at_omega();
    let m2 = m.mul(&m);
    let m6 = m2.mul(&m2).mul(&m2);
    m6.add(&m2.scaled(&CycloInt::omega())).is_zero()
}

/// Periodicity of `A_i := ω^{−i−1} M(ω)^{i−1}`: checks `A_{i+4} = A_i`
/// entrywise for every `i` in `first..=last`.
pub fn omega_power_period_holds(first: u32, last: u32) -> bool {
    assert!(first >= 1 && first <= last);
    let m = matrix_m_at_omega();
    let mut power = CycloMatrix::identity(5);
    let mut a = Vec::with_capacity((last + 4) as usize);
    for i in 1..=last + 4 {
        a.push(power.scaled(&CycloInt::zeta_pow(-2 * (i as i64 + 1))));
        power = power.mul(&m);
    }
    (first..=last).all(|i| a[(i - 1) as usize] == a[(i + 3) as usize])
}

// ---------------------------------------------------------------------------
// Invariant report
// ---------------------------------------------------------------------------

/// What to compute invariants for: a weaving family member or a raw braid
/// closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KnotInput {
    Weaving { p: u32, n: u32 },
    Braid(BraidWord),
}

impl fmt::Display for KnotInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotInput::Weaving { p, n } => write!(f, "W({p},{n})"),
            KnotInput::Braid(b) => write!(f, "closure of {b}"),
        }
    }
}

/// Bundled invariants of one knot or link.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub label: String,
    /// Number of link components.
    pub mu: u32,
    pub jones: Option<LaurentPoly>,
    /// `|V(−1)|`.
    pub determinant: BigUint,
    /// `V(e^{iπ/3})`, always of the form `±i^{μ−1}(i√3)^{n_L}`.
    pub v_at_w: CycloInt,
    /// The mod-3 homology dimension of the branched double cover.
    pub n_l: u32,
    /// The sign in the `±i^{μ−1}(i√3)^{n_L}` decomposition.
    pub sign_at_w: i8,
    /// Lower bound on the unknotting number (knots only): `u ≥ n_L`.
    pub unknotting_lower: Option<u32>,
    /// Upper bound on the unknotting number, where a crossing-change
    /// sequence is known.
    pub unknotting_upper: Option<u32>,
}

impl InvariantReport {
    /// The report for the mirror image: `t ↦ t^{−1}` on the polynomial,
    /// complex conjugation at `ω`. Determinant, `μ`, `n_L`, and both
    /// unknotting bounds are mirror-invariant.
    pub fn mirrored(&self) -> Result<InvariantReport, ReportError> {
        let v_at_w = self.v_at_w.conj();
        let lm = v_at_w.lm_decompose(self.mu)?;
        Ok(InvariantReport {
            label: self.label.clone(),
            mu: self.mu,
            jones: self.jones.as_ref().map(LaurentPoly::mirror),
            determinant: self.determinant.clone(),
            v_at_w,
            n_l: lm.n_l,
            sign_at_w: lm.sign,
            unknotting_lower: self.unknotting_lower,
            unknotting_upper: self.unknotting_upper,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReportError {
    #[error(transparent)]
    Domain(#[from] DomainError),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Bracket(#[from] BracketError),
    #[error(transparent)]
    Cyclo(#[from] CycloError),
}

/// Computes the full invariant bundle. Family members `W(3,n)` and
/// `W(p,2)` use the exact recurrences; everything else goes through the
/// bracket oracle and is subject to its state budget.
pub fn invariant_report(
    input: &KnotInput,
    options: &BracketOptions,
) -> Result<InvariantReport, ReportError> {
    let label = input.to_string();
    let (mu, jones, determinant, v_at_w) = match input {
        KnotInput::Weaving { p, n } => {
            if *p < 2 {
                return Err(DomainError::PTooSmall(*p).into());
            }
            if *n < 1 {
                return Err(DomainError::NTooSmall(*n).into());
            }
            let mu = p.gcd(n);
            if *p == 3 {
                (mu, jones_w3n(*n)?, det_w3n(*n)?, eval_w3n_at_w(*n)?)
            } else if *n == 2 {
                (mu, jones_wp2(*p)?, det_wp2(*p)?, eval_wp2_at_w(*p)?)
            } else {
                let word = weaving_word(*p, *n)?;
                let jones = jones_via_bracket(&word, options)?;
                let determinant = CycloInt::eval_at(&jones, 3).abs_if_real_integerlike()?;
                let v_at_w = CycloInt::eval_at(&jones, 1);
                (mu, jones, determinant, v_at_w)
            }
        }
        KnotInput::Braid(b) => {
            let jones = jones_via_bracket(b, options)?;
            let determinant = CycloInt::eval_at(&jones, 3).abs_if_real_integerlike()?;
            let v_at_w = CycloInt::eval_at(&jones, 1);
            (b.component_count() as u32, jones, determinant, v_at_w)
        }
    };
    let lm = v_at_w.lm_decompose(mu)?;
    let unknotting_lower = (mu == 1).then_some(lm.n_l);
    let unknotting_upper = match input {
        // An explicit two-crossing-change unknotting sequence is known.
        KnotInput::Weaving { p: 3, n: 4 } => Some(2),
        // W(2m+1, 2) unknots by changing one crossing per skein step.
        KnotInput::Weaving { p, n: 2 } if p.is_odd() => Some((p - 1) / 2),
        _ => None,
    };
    Ok(InvariantReport {
        label,
        mu,
        jones: Some(jones),
        determinant,
        v_at_w,
        n_l: lm.n_l,
        sign_at_w: lm.sign,
        unknotting_lower,
        unknotting_upper,
    })
}
