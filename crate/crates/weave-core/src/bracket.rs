//! Brute-force Kauffman bracket over all `2^c` smoothings of a braid
//! closure — the ground-truth oracle the family recurrences are checked
//! against.
//!
//! Every crossing is resolved two ways; a state contributes
//! `A^{#A − #B} · δ^{loops − 1}` with `δ = −A² − A^{−2}`, and the Jones
//! polynomial is `(−A³)^{−writhe} ⟨D⟩` under `A = t^{−1/4}`. Loops are
//! counted with a union-find over crossing ports. Which resolution of a
//! positive generator counts as the A-smoothing is calibrated once so that
//! the closure of `σ₁²` (the Hopf link `W(2,2)`) yields
//! `−t^{1/2} − t^{5/2}`: for a positive letter the A-smoothing is the one
//! that reconnects the two strands vertically (identity tangle).
//!
//! The sum over states is embarrassingly parallel; disjoint ranges of the
//! state bitmask are tallied into integer histograms and added, so the
//! result is identical for any worker count.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::laurent::LaurentPoly;

/// Resource limits for the state sum.
#[derive(Clone, Copy, Debug)]
pub struct BracketOptions {
    /// Maximum number of smoothing states (`2^crossings`) to enumerate.
    pub state_budget: u64,
}

impl Default for BracketOptions {
    fn default() -> Self {
        // 2^26 states: weaving words up to 26 crossings in seconds.
        Self {
            state_budget: 1 << 26,
        }
    }
}

/// Bracket polynomial and its normalization for one braid closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSumResult {
    /// `⟨D⟩` with exponents in whole units of `A`.
    pub bracket: LaurentPoly,
    /// Writhe of the closed diagram.
    pub writhe: i64,
    /// `(−A³)^{−writhe} ⟨D⟩` under `A = t^{−1/4}`, exponents in units of
    /// `t^{1/2}`.
    pub jones: LaurentPoly,
    /// Number of smoothing states enumerated.
    pub states: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BracketError {
    #[error(
        "state sum over {crossings} crossings needs 2^{crossings} = {states} states, \
         which exceeds the budget of {budget}"
    )]
    TooLarge {
        crossings: usize,
        states: u128,
        budget: u64,
    },
    /// The normalized bracket had an odd power of `A`, which no braid
    /// closure can produce; reaching this means a smoothing-convention bug.
    #[error("normalized bracket has an odd A-exponent {exponent}")]
    OddExponent { exponent: i64 },
}

/// `⟨D⟩` of the closure of `b`, exponents in whole units of `A`.
pub fn kauffman_bracket(
    b: &BraidWord,
    options: &BracketOptions,
) -> Result<LaurentPoly, BracketError> {
    state_sum(b, options).map(|r| r.bracket)
}

/// The Jones polynomial of the closure of `b`, exponents in units of
/// `t^{1/2}`.
pub fn jones_via_bracket(
    b: &BraidWord,
    options: &BracketOptions,
) -> Result<LaurentPoly, BracketError> {
    state_sum(b, options).map(|r| r.jones)
}

/// Full state-sum output: bracket, writhe, and normalized Jones polynomial.
pub fn state_sum(b: &BraidWord, options: &BracketOptions) -> Result<StateSumResult, BracketError> {
    let c = b.crossings();
    if c >= 64 || (1u128 << c) > options.state_budget as u128 {
        return Err(BracketError::TooLarge {
            crossings: c,
            states: 1u128 << c.min(127),
            budget: options.state_budget,
        });
    }
    let writhe = b.writhe();
    if c == 0 {
        // Closure of the empty word: `strands` disjoint circles.
        let bracket = delta_power(b.strands() - 1);
        let jones = normalize(&bracket, writhe)?;
        return Ok(StateSumResult {
            bracket,
            writhe,
            jones,
            states: 1,
        });
    }

    let diagram = Diagram::build(b);
    let histogram = diagram.tally_all_states();

    // ⟨D⟩ = Σ_{a, r} count[a][r] · A^{2a − c} · δ^{r + free − 1}
    let delta = delta_power(1);
    let max_loops = 2 * c + diagram.free_loops;
    let mut delta_pows = Vec::with_capacity(max_loops);
    delta_pows.push(LaurentPoly::one());
    for _ in 1..max_loops {
        delta_pows.push(delta_pows.last().unwrap() * &delta);
    }
    let mut bracket = LaurentPoly::zero();
    for a in 0..=c {
        for r in 1..=2 * c {
            let count = histogram[a * (2 * c + 1) + r];
            if count == 0 {
                continue;
            }
            let term = LaurentPoly::monomial(BigInt::from(count), 2 * a as i64 - c as i64);
            bracket = &bracket + &(&term * &delta_pows[r + diagram.free_loops - 1]);
        }
    }
    let jones = normalize(&bracket, writhe)?;
    Ok(StateSumResult {
        bracket,
        writhe,
        jones,
        states: 1 << c,
    })
}

/// `δ^k` with `δ = −A² − A^{−2}`.
fn delta_power(k: usize) -> LaurentPoly {
    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut acc = LaurentPoly::one();
    for _ in 0..k {
        acc = &acc * &delta;
    }
    acc
}

/// `(−A³)^{−writhe} ⟨D⟩` with `A = t^{−1/4}`: scale by `(−1)^w`, shift the
/// A-exponent by `−3w`, then send `A^e ↦ s^{−e/2}`.
fn normalize(bracket: &LaurentPoly, writhe: i64) -> Result<LaurentPoly, BracketError> {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let mut terms = Vec::new();
    for (e, coeff) in bracket.terms() {
        let shifted = e - 3 * writhe;
        if shifted % 2 != 0 {
            return Err(BracketError::OddExponent { exponent: shifted });
        }
        terms.push((-shifted / 2, coeff * sign));
    }
    Ok(LaurentPoly::from_terms(terms))
}

/// The closed diagram reduced to per-crossing merge instructions.
///
/// Each crossing has four ports (NW, NE, SW, SE). The fixed wiring between
/// crossings (and around the closure) is a perfect matching on ports, so
/// contracting it leaves exactly `2c` arc classes; a smoothing then merges
/// two pairs of classes per crossing, and the loop count of the state is
/// the number of classes left.
struct Diagram {
    crossings: usize,
    /// Strands never entered by a crossing close into circles present in
    /// every state.
    free_loops: usize,
    /// `merges[x][choice]` for crossing `x`: the two class pairs to merge,
    /// `choice` 0 = B-smoothing, 1 = A-smoothing.
    merges: Vec<[[(u32, u32); 2]; 2]>,
}

impl Diagram {
    fn build(b: &BraidWord) -> Self {
        let c = b.crossings();
        let strands = b.strands();
        // Ports of crossing x: NW = 4x, NE = 4x+1, SW = 4x+2, SE = 4x+3.
        let mut first_top: Vec<Option<u32>> = vec![None; strands];
        let mut last_bottom: Vec<Option<u32>> = vec![None; strands];
        let mut wires: Vec<(u32, u32)> = Vec::with_capacity(2 * c);
        for (x, &j) in b.letters().iter().enumerate() {
            let col = j.unsigned_abs() as usize - 1;
            let base = 4 * x as u32;
            for (column, top, bottom) in [(col, base, base + 2), (col + 1, base + 1, base + 3)] {
                match last_bottom[column] {
                    Some(q) => wires.push((q, top)),
                    None => first_top[column] = Some(top),
                }
                last_bottom[column] = Some(bottom);
            }
        }
        let mut free_loops = 0;
        for column in 0..strands {
            match (last_bottom[column], first_top[column]) {
                (Some(q), Some(top)) => wires.push((q, top)),
                (None, None) => free_loops += 1,
                _ => unreachable!("a column is entered iff it is exited"),
            }
        }
        debug_assert_eq!(wires.len(), 2 * c);

        // Contract the fixed wiring and relabel the 2c classes compactly.
        let mut ports = UnionFind::new(4 * c);
        for &(u, v) in &wires {
            ports.union(u, v);
        }
        let mut class_of = vec![u32::MAX; 4 * c];
        let mut next = 0u32;
        let mut class = |ports: &mut UnionFind, port: u32| {
            let root = ports.find(port) as usize;
            if class_of[root] == u32::MAX {
                class_of[root] = next;
                next += 1;
            }
            class_of[root]
        };
        let merges = b
            .letters()
            .iter()
            .enumerate()
            .map(|(x, &j)| {
                let base = 4 * x as u32;
                let [nw, ne, sw, se] = [0, 1, 2, 3].map(|k| class(&mut ports, base + k));
                let vertical = [(nw, sw), (ne, se)];
                let horizontal = [(nw, ne), (sw, se)];
                // Calibration: for σ_i the A-smoothing is vertical.
                if j > 0 {
                    [horizontal, vertical]
                } else {
                    [vertical, horizontal]
                }
            })
            .collect();
        debug_assert_eq!(next as usize, 2 * c);
        Self {
            crossings: c,
            free_loops,
            merges,
        }
    }

    /// Counts states by `(number of A-smoothings, loop classes)`; returns a
    /// flat histogram indexed `a * (2c + 1) + classes`.
    fn tally_all_states(&self) -> Vec<u64> {
        let c = self.crossings;
        let total: u64 = 1 << c;
        let hist_len = (c + 1) * (2 * c + 1);
        const CHUNK: u64 = 1 << 14;
        let chunks = total.div_ceil(CHUNK);
        (0..chunks)
            .into_par_iter()
            .map(|chunk| {
                let mut local = vec![0u64; hist_len];
                let mut uf = UnionFind::new(2 * c);
                for state in chunk * CHUNK..total.min((chunk + 1) * CHUNK) {
                    uf.reset();
                    let mut classes = 2 * c;
                    for (x, merge) in self.merges.iter().enumerate() {
                        for &(u, v) in &merge[(state >> x & 1) as usize] {
                            if uf.union(u, v) {
                                classes -= 1;
                            }
                        }
                    }
                    let a = state.count_ones() as usize;
                    local[a * (2 * c + 1) + classes] += 1;
                }
                local
            })
            .reduce(
                || vec![0u64; hist_len],
                |mut acc, local| {
                    for (a, b) in acc.iter_mut().zip(local) {
                        *a += b;
                    }
                    acc
                },
            )
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
        }
    }

    fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        loop {
            let p = self.parent[x as usize];
            if p == x {
                return x;
            }
            let gp = self.parent[p as usize];
            self.parent[x as usize] = gp;
            x = gp;
        }
    }

    fn union(&mut self, a: u32, b: u32) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            false
        } else {
            self.parent[ra.max(rb) as usize] = ra.min(rb);
            true
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::weaving_word;
    use num_integer::Integer;
    use proptest::prelude::*;

    fn jones(b: &BraidWord) -> LaurentPoly {
        jones_via_bracket(b, &BracketOptions::default()).unwrap()
    }

    fn braid(text: &str) -> BraidWord {
        BraidWord::parse(text).unwrap()
    }

    #[test]
    fn bracket_of_unknot_diagrams() {
        let opt = BracketOptions::default();
        let empty = braid("1;");
        assert!(kauffman_bracket(&empty, &opt).unwrap().is_one());
        assert_eq!(jones(&empty), LaurentPoly::one());
        // One kink: ⟨σ₁ closure⟩ = −A³.
        let kink = braid("2; 1");
        assert_eq!(
            kauffman_bracket(&kink, &opt).unwrap(),
            LaurentPoly::monomial(-1, 3)
        );
        assert_eq!(jones(&kink), LaurentPoly::one());
        assert_eq!(
            kauffman_bracket(&braid("2; -1"), &opt).unwrap(),
            LaurentPoly::monomial(-1, -3)
        );
    }

    #[test]
    fn bracket_of_hopf_link_word() {
        let b = weaving_word(2, 2).unwrap();
        let r = state_sum(&b, &BracketOptions::default()).unwrap();
        // Four states by hand: AA and BB give two loops, AB and BA one.
        assert_eq!(r.bracket, LaurentPoly::from_terms([(4, -1), (-4, -1)]));
        assert_eq!(r.writhe, 2);
        assert_eq!(r.states, 4);
        assert_eq!(r.jones, LaurentPoly::parse("-t^(1/2) - t^(5/2)").unwrap());
    }

    #[test]
    fn jones_of_small_standards() {
        // Right trefoil.
        assert_eq!(
            jones(&braid("2; 1 1 1")),
            LaurentPoly::parse("-t^4 + t^3 + t").unwrap()
        );
        // Left trefoil is its mirror.
        assert_eq!(
            jones(&braid("2; -1 -1 -1")),
            LaurentPoly::parse("-t^-4 + t^-3 + t^-1").unwrap()
        );
        // Figure-eight, self-mirror.
        assert_eq!(
            jones(&weaving_word(3, 2).unwrap()),
            LaurentPoly::parse("t^-2 - t^-1 + 1 - t + t^2").unwrap()
        );
        // Two- and three-component unlinks.
        let delta_t = LaurentPoly::from_terms([(1, -1), (-1, -1)]);
        assert_eq!(jones(&braid("2;")), delta_t);
        assert_eq!(jones(&braid("3;")), &delta_t * &delta_t);
        // An unused top strand adds an unlinked circle.
        assert_eq!(
            jones(&braid("3; 1 1 1")),
            &jones(&braid("2; 1 1 1")) * &delta_t
        );
    }

    #[test]
    fn budget_is_enforced() {
        let b = braid("2; 1 1 1");
        let tiny = BracketOptions { state_budget: 4 };
        assert!(matches!(
            state_sum(&b, &tiny),
            Err(BracketError::TooLarge {
                crossings: 3,
                states: 8,
                ..
            })
        ));
        let exact = BracketOptions { state_budget: 8 };
        assert!(state_sum(&b, &exact).is_ok());
    }

    #[test]
    fn parallel_and_sequential_tallies_agree() {
        let b = weaving_word(4, 3).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| state_sum(&b, &BracketOptions::default()).unwrap())
        };
        let single = run(1);
        assert_eq!(single, run(4));
        assert_eq!(single, state_sum(&b, &BracketOptions::default()).unwrap());
    }

    fn arb_braid() -> impl Strategy<Value = BraidWord> {
        (2usize..=5).prop_flat_map(|strands| {
            let letter = (1..=(strands as i32 - 1), proptest::bool::ANY).prop_map(|(idx, neg)| {
                if neg {
                    -idx
                } else {
                    idx
                }
            });
            proptest::collection::vec(letter, 0..=12)
                .prop_map(move |letters| BraidWord::new(strands, letters).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(50))]

        #[test]
        fn jones_is_invariant_under_markov_moves(
            b in arb_braid(),
            g in 1i32..=4,
            g_neg in proptest::bool::ANY,
            stab_pos in proptest::bool::ANY,
        ) {
            let v = jones(&b);
            let g = (g % (b.strands() as i32 - 1)).abs().max(1);
            let g = if g_neg { -g } else { g };
            prop_assert_eq!(jones(&b.conjugate(g).unwrap()), v.clone());
            prop_assert_eq!(jones(&b.stabilize(stab_pos)), v.clone());
            prop_assert_eq!(jones(&b.conjugate(g).unwrap().stabilize(stab_pos)), v);
        }

        #[test]
        fn value_at_one_counts_components(b in arb_braid()) {
            let mu = b.component_count();
            let expected = BigInt::from(-2).pow(mu as u32 - 1);
            prop_assert_eq!(jones(&b).value_at_one(), expected);
        }

        #[test]
        fn exponent_parity_follows_component_count(b in arb_braid()) {
            let v = jones(&b);
            if b.component_count().is_odd() {
                prop_assert!(v.has_integer_exponents());
            } else {
                prop_assert!(v.has_half_odd_exponents());
            }
        }
    }

    #[test]
    fn weaving_grid_value_at_one_and_parity() {
        for p in 2..=6u32 {
            for n in 1..=4u32 {
                let b = weaving_word(p, n).unwrap();
                let v = jones(&b);
                let mu = p.gcd(&n);
                assert_eq!(
                    v.value_at_one(),
                    BigInt::from(-2).pow(mu - 1),
                    "V(1) for W({p},{n})"
                );
                assert_eq!(
                    v.has_integer_exponents(),
                    mu.is_odd(),
                    "parity for W({p},{n})"
                );
            }
        }
    }
}
