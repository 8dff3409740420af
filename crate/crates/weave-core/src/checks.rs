//! The self-verification harness: every family recurrence and closed form
//! is replayed against the brute-force bracket oracle and against the
//! general laws a Jones polynomial must obey, over configurable ranges.
//!
//! Each check returns a named pass/fail result with a human-readable
//! detail line; on failure the detail carries the first counterexample
//! (inputs and both values). Checks that drive the oracle past its state
//! budget abort with [`VerifyError::Budget`] instead of failing, since an
//! undersized budget says nothing about correctness.

use num_bigint::BigInt;
use num_integer::Integer;
use rand::{rngs::StdRng, Rng, SeedableRng};

use crate::bracket::{jones_via_bracket, BracketError, BracketOptions};
use crate::braid::{weaving_word, BraidWord};
use crate::cyclo::CycloInt;
use crate::laurent::LaurentPoly;
use crate::weaving::{
    det_w3n, det_wp2, eval_w3n_at_w, eval_wp2_at_w, jones_w3n, jones_w3n_scalar_recursion,
    jones_wp2, omega_matrix_identity_holds, omega_power_period_holds,
};

/// Ranges and resources for one verification run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Largest `n` exercised for the `W(3,n)` column.
    pub max_n: u32,
    /// Largest `p` exercised for the `W(p,2)` row.
    pub max_p: u32,
    /// Oracle state budget; randomized trials size themselves to fit it.
    pub state_budget: u64,
    /// Number of randomized Markov-move trials.
    pub markov_trials: u32,
    /// Seed for the randomized trials, so runs are reproducible.
    pub seed: u64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            max_n: 8,
            max_p: 10,
            state_budget: BracketOptions::default().state_budget,
            markov_trials: 50,
            seed: 0x5eed_cafe,
        }
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    /// A check needed more oracle states than the budget allows.
    #[error("{check}: {source}")]
    Budget {
        check: &'static str,
        source: BracketError,
    },
}

/// Runs every check. The result vector always has the same length and
/// order; inspect `passed` per entry.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckResult>, VerifyError> {
    let options = BracketOptions {
        state_budget: config.state_budget,
    };
    Ok(vec![
        matrix_identity_check(),
        power_period_check(),
        w3n_cross_check(config, &options)?,
        wp2_cross_check(config, &options)?,
        omega_closed_form_check(config),
        determinant_check(config),
        nl_pattern_check(config),
        component_count_check(config),
        markov_check(config, &options)?,
        jones_laws_check(config, &options)?,
        determinism_check(&options)?,
    ])
}

fn pass(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: true,
        detail,
    }
}

fn fail(name: &'static str, detail: String) -> CheckResult {
    CheckResult {
        name,
        passed: false,
        detail,
    }
}

fn matrix_identity_check() -> CheckResult {
    let name = "recurrence core at ω satisfies M⁶ + ω·M² = 0";
    if omega_matrix_identity_holds() {
        pass(name, "all 25 entries vanish".to_string())
    } else {
        fail(name, "a nonzero entry survives".to_string())
    }
}

fn power_period_check() -> CheckResult {
    let name = "scaled powers ω^(−i−1)·M(ω)^(i−1) have period 4";
    if omega_power_period_holds(3, 16) {
        pass(name, "checked i = 3..=16".to_string())
    } else {
        fail(name, "periodicity breaks for some i in 3..=16".to_string())
    }
}

fn w3n_cross_check(
    config: &VerifyConfig,
    options: &BracketOptions,
) -> Result<CheckResult, VerifyError> {
    let name = "W(3,n): matrix, scalar, and state-sum implementations agree";
    for n in 1..=config.max_n {
        let matrix = jones_w3n(n).expect("n ≥ 1");
        let scalar = jones_w3n_scalar_recursion(n).expect("n ≥ 1");
        if matrix != scalar {
            return Ok(fail(
                name,
                format!("W(3,{n}): matrix gives {matrix}, scalar recursion gives {scalar}"),
            ));
        }
        let word = weaving_word(3, n).expect("valid family parameters");
        let oracle = jones_via_bracket(&word, options).map_err(|source| VerifyError::Budget {
            check: name,
            source,
        })?;
        if matrix != oracle {
            return Ok(fail(
                name,
                format!("W(3,{n}): recurrence gives {matrix}, state sum gives {oracle}"),
            ));
        }
    }
    Ok(pass(name, format!("n = 1..={}", config.max_n)))
}

fn wp2_cross_check(
    config: &VerifyConfig,
    options: &BracketOptions,
) -> Result<CheckResult, VerifyError> {
    let name = "W(p,2): skein recursion agrees with the state sum";
    for p in 2..=config.max_p {
        let skein = jones_wp2(p).expect("p ≥ 2");
        let word = weaving_word(p, 2).expect("valid family parameters");
        let oracle = jones_via_bracket(&word, options).map_err(|source| VerifyError::Budget {
            check: name,
            source,
        })?;
        if skein != oracle {
            return Ok(fail(
                name,
                format!("W({p},2): recursion gives {skein}, state sum gives {oracle}"),
            ));
        }
    }
    Ok(pass(name, format!("p = 2..={}", config.max_p)))
}

fn omega_closed_form_check(config: &VerifyConfig) -> CheckResult {
    let name = "closed-form values at ω match polynomial evaluation";
    for n in 1..=config.max_n {
        let direct = CycloInt::eval_at(&jones_w3n(n).expect("n ≥ 1"), 1);
        let closed = eval_w3n_at_w(n).expect("n ≥ 1");
        if direct != closed {
            return fail(
                name,
                format!("W(3,{n}): polynomial evaluates to {direct}, closed form says {closed}"),
            );
        }
    }
    for p in 2..=config.max_p {
        let direct = CycloInt::eval_at(&jones_wp2(p).expect("p ≥ 2"), 1);
        let closed = eval_wp2_at_w(p).expect("p ≥ 2");
        if direct != closed {
            return fail(
                name,
                format!("W({p},2): polynomial evaluates to {direct}, closed form says {closed}"),
            );
        }
    }
    pass(
        name,
        format!("n = 1..={}, p = 2..={}", config.max_n, config.max_p),
    )
}

fn determinant_check(config: &VerifyConfig) -> CheckResult {
    let name = "determinant recurrences equal |V(−1)|";
    for n in 1..=config.max_n {
        let v = CycloInt::eval_at(&jones_w3n(n).expect("n ≥ 1"), 3);
        let from_poly = match v.abs_if_real_integerlike() {
            Ok(d) => d,
            Err(e) => return fail(name, format!("W(3,{n}): {e}")),
        };
        let recurrence = det_w3n(n).expect("n ≥ 1");
        if from_poly != recurrence {
            return fail(
                name,
                format!("W(3,{n}): |V(−1)| = {from_poly}, recurrence gives {recurrence}"),
            );
        }
    }
    for p in 2..=config.max_p {
        let v = CycloInt::eval_at(&jones_wp2(p).expect("p ≥ 2"), 3);
        let from_poly = match v.abs_if_real_integerlike() {
            Ok(d) => d,
            Err(e) => return fail(name, format!("W({p},2): {e}")),
        };
        let recurrence = det_wp2(p).expect("p ≥ 2");
        if from_poly != recurrence {
            return fail(
                name,
                format!("W({p},2): |V(−1)| = {from_poly}, recurrence gives {recurrence}"),
            );
        }
    }
    pass(
        name,
        format!("n = 1..={}, p = 2..={}", config.max_n, config.max_p),
    )
}

fn nl_pattern_check(config: &VerifyConfig) -> CheckResult {
    let name = "n_L follows the mod-4 family patterns";
    for n in 1..=config.max_n {
        let v = CycloInt::eval_at(&jones_w3n(n).expect("n ≥ 1"), 1);
        let mu = 3u32.gcd(&n);
        let lm = match v.lm_decompose(mu) {
            Ok(lm) => lm,
            Err(e) => return fail(name, format!("W(3,{n}): {e}")),
        };
        let expected = if n % 4 == 0 { 2 } else { 0 };
        if lm.n_l != expected {
            return fail(
                name,
                format!("W(3,{n}): n_L = {}, expected {expected}", lm.n_l),
            );
        }
    }
    for p in 2..=config.max_p {
        let v = CycloInt::eval_at(&jones_wp2(p).expect("p ≥ 2"), 1);
        let mu = p.gcd(&2);
        let lm = match v.lm_decompose(mu) {
            Ok(lm) => lm,
            Err(e) => return fail(name, format!("W({p},2): {e}")),
        };
        let expected = if p % 4 == 0 { 1 } else { 0 };
        if lm.n_l != expected {
            return fail(
                name,
                format!("W({p},2): n_L = {}, expected {expected}", lm.n_l),
            );
        }
    }
    pass(
        name,
        format!("n = 1..={}, p = 2..={}", config.max_n, config.max_p),
    )
}

fn component_count_check(config: &VerifyConfig) -> CheckResult {
    let name = "weaving closures have gcd(p,n) components";
    for p in 2..=config.max_p.max(2) {
        for n in 1..=config.max_n.max(1) {
            let counted = weaving_word(p, n)
                .expect("valid family parameters")
                .component_count() as u32;
            if counted != p.gcd(&n) {
                return fail(
                    name,
                    format!("W({p},{n}): counted {counted}, gcd is {}", p.gcd(&n)),
                );
            }
        }
    }
    pass(
        name,
        format!("grid p = 2..={}, n = 1..={}", config.max_p, config.max_n),
    )
}

/// Longest random word that still fits the budget after a conjugation
/// (+2 crossings) and a stabilization (+1).
fn trial_word_length(budget: u64) -> usize {
    budget.max(1).ilog2().saturating_sub(3).min(12) as usize
}

fn random_word(rng: &mut StdRng, max_len: usize) -> BraidWord {
    let strands = rng.gen_range(2usize..=5);
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let idx = rng.gen_range(1..=(strands as i32 - 1));
            if rng.gen::<bool>() {
                idx
            } else {
                -idx
            }
        })
        .collect();
    BraidWord::new(strands, letters).expect("letters generated in range")
}

fn markov_check(
    config: &VerifyConfig,
    options: &BracketOptions,
) -> Result<CheckResult, VerifyError> {
    let name = "Jones polynomial is unchanged by Markov moves";
    let budget_err = |source| VerifyError::Budget {
        check: name,
        source,
    };
    let mut rng = StdRng::seed_from_u64(config.seed);
    let max_len = trial_word_length(config.state_budget);
    for trial in 0..config.markov_trials {
        let b = random_word(&mut rng, max_len);
        let base = jones_via_bracket(&b, options).map_err(budget_err)?;
        let idx = rng.gen_range(1..=(b.strands() as i32 - 1));
        let g = if rng.gen::<bool>() { idx } else { -idx };
        let conjugated = b.conjugate(g).expect("letter in range");
        let v = jones_via_bracket(&conjugated, options).map_err(budget_err)?;
        if v != base {
            return Ok(fail(
                name,
                format!("trial {trial}: [{b}] gives {base}, conjugated [{conjugated}] gives {v}"),
            ));
        }
        let stabilized = b.stabilize(rng.gen::<bool>());
        let v = jones_via_bracket(&stabilized, options).map_err(budget_err)?;
        if v != base {
            return Ok(fail(
                name,
                format!("trial {trial}: [{b}] gives {base}, stabilized [{stabilized}] gives {v}"),
            ));
        }
    }
    Ok(pass(
        name,
        format!(
            "{} randomized trials, words up to {max_len} letters",
            config.markov_trials
        ),
    ))
}

/// `V(1) = (−2)^{μ−1}` and the exponent-parity law, on the family
/// polynomials and on random braid closures.
fn jones_laws_check(
    config: &VerifyConfig,
    options: &BracketOptions,
) -> Result<CheckResult, VerifyError> {
    let name = "V(1) = (−2)^(μ−1) and exponent parity match the component count";
    let mut examined = 0u32;
    let mut verify = |label: &str, v: &LaurentPoly, mu: u32| -> Option<CheckResult> {
        examined += 1;
        let expected = BigInt::from(-2).pow(mu - 1);
        if v.value_at_one() != expected {
            return Some(fail(
                name,
                format!("{label}: V(1) = {}, expected {expected}", v.value_at_one()),
            ));
        }
        let integer_exponents = v.has_integer_exponents();
        if integer_exponents != mu.is_odd() || (!integer_exponents && !v.has_half_odd_exponents()) {
            return Some(fail(
                name,
                format!("{label}: exponent parity of {v} contradicts μ = {mu}"),
            ));
        }
        None
    };
    for n in 1..=config.max_n {
        let v = jones_w3n(n).expect("n ≥ 1");
        if let Some(result) = verify(&format!("W(3,{n})"), &v, 3u32.gcd(&n)) {
            return Ok(result);
        }
    }
    for p in 2..=config.max_p {
        let v = jones_wp2(p).expect("p ≥ 2");
        if let Some(result) = verify(&format!("W({p},2)"), &v, p.gcd(&2)) {
            return Ok(result);
        }
    }
    let mut rng = StdRng::seed_from_u64(config.seed.wrapping_add(1));
    let max_len = trial_word_length(config.state_budget);
    for _ in 0..config.markov_trials {
        let b = random_word(&mut rng, max_len);
        let v = jones_via_bracket(&b, options).map_err(|source| VerifyError::Budget {
            check: name,
            source,
        })?;
        if let Some(result) = verify(&format!("[{b}]"), &v, b.component_count() as u32) {
            return Ok(result);
        }
    }
    Ok(pass(name, format!("{examined} polynomials examined")))
}

fn determinism_check(options: &BracketOptions) -> Result<CheckResult, VerifyError> {
    let name = "state sum is independent of the thread schedule";
    // The largest standard word that fits the budget.
    let word = [(4u32, 3u32), (3, 2), (2, 2), (2, 1)]
        .iter()
        .map(|&(p, n)| weaving_word(p, n).expect("valid family parameters"))
        .find(|w| (1u128 << w.crossings()) <= options.state_budget as u128)
        .unwrap_or_else(|| weaving_word(2, 1).expect("valid family parameters"));
    let budget_err = |source| VerifyError::Budget {
        check: name,
        source,
    };
    let ambient = jones_via_bracket(&word, options).map_err(budget_err)?;
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("single-thread pool")
        .install(|| jones_via_bracket(&word, options))
        .map_err(budget_err)?;
    if ambient == single {
        Ok(pass(
            name,
            format!("closure of [{word}] tallied twice identically"),
        ))
    } else {
        Ok(fail(
            name,
            format!("[{word}]: ambient pool gives {ambient}, single thread gives {single}"),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_run_passes_every_check() {
        let config = VerifyConfig {
            max_n: 5,
            max_p: 6,
            markov_trials: 12,
            ..VerifyConfig::default()
        };
        let results = run_all(&config).unwrap();
        assert_eq!(results.len(), 11);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn tiny_budget_still_passes_small_ranges() {
        let config = VerifyConfig {
            max_n: 4,
            max_p: 4,
            state_budget: 1024,
            markov_trials: 8,
            seed: 11,
        };
        let results = run_all(&config).unwrap();
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn oversized_range_reports_a_budget_error() {
        let config = VerifyConfig {
            max_n: 9,
            max_p: 4,
            state_budget: 1024,
            markov_trials: 4,
            seed: 11,
        };
        assert!(matches!(run_all(&config), Err(VerifyError::Budget { .. })));
    }

    #[test]
    fn identical_configs_give_identical_details() {
        let config = VerifyConfig {
            max_n: 3,
            max_p: 4,
            markov_trials: 6,
            ..VerifyConfig::default()
        };
        let a = run_all(&config).unwrap();
        let b = run_all(&config).unwrap();
        assert_eq!(a, b);
    }
}
