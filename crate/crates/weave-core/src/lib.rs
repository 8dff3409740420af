//! Exact invariants of weaving knots and links.
//!
//! Weaving knots `W(p,n)` are the closures of the alternating braid words
//! `(σ₁ σ₂⁻¹ σ₃ ⋯ σ_{p−1}^{(−1)^p})^n` on `p` strands. This crate computes
//! their Jones polynomials, determinants, the `Z₃`-homology dimension of the
//! branched double cover, and unknotting-number bounds, all in exact
//! arithmetic:
//!
//! - [`laurent`]: sparse Laurent polynomials in `t` with half-integer
//!   exponents and big-integer coefficients, the ring every Jones polynomial
//!   lives in;
//! - [`cyclo`]: the ring `Z[ζ]`, `ζ = e^{iπ/6}`, used to evaluate Jones
//!   polynomials at `t = e^{iπ/3}` and `t = −1` without floating point;
//! - [`braid`]: braid words, the weaving family generator, and the
//!   combinatorics of braid closures (writhe, components, Markov moves);
//! - [`bracket`]: a brute-force Kauffman bracket state sum over braid
//!   closures, the independent oracle every recurrence is checked against;
//! - [`weaving`]: the family-specific machinery — the `W(3,n)` matrix
//!   recurrence, the `W(p,2)` skein recursion, closed-form evaluations,
//!   determinant recurrences, and the bundled invariant report;
//! - [`checks`]: the cross-validation harness behind `weave verify`.

pub mod bracket;
pub mod braid;
pub mod checks;
pub mod cyclo;
pub mod laurent;
pub mod weaving;

pub use bracket::{BracketOptions, StateSumResult};
pub use braid::BraidWord;
pub use checks::{CheckResult, VerifyConfig};
pub use cyclo::{CycloInt, LmDecomposition};
pub use laurent::LaurentPoly;
pub use weaving::{InvariantReport, KnotInput, PolyMatrix};
