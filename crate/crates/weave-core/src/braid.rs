//! Braid words, the weaving-family word generator, and the combinatorial
//! data of braid closures: writhe, strand permutation, component count.
//!
//! A word on `k` strands is a sequence of nonzero letters `j` with
//! `|j| ≤ k − 1`; `j > 0` encodes the generator `σ_j` (strand `j` crosses
//! over strand `j+1`), `j < 0` its inverse. Closing a braid joins each top
//! endpoint to the bottom endpoint in the same position, producing a knot
//! or link.

use std::fmt;

use num_integer::Integer;

/// A word in the braid group on `strands` strands.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("braid needs at least one strand")]
    NoStrands,
    #[error("letter {letter} at position {position} is out of range for {strands} strands")]
    LetterOutOfRange {
        letter: i64,
        position: usize,
        strands: usize,
    },
    #[error("weaving family needs p ≥ 2 and n ≥ 1, got p = {p}, n = {n}")]
    BadWeavingParameters { p: u32, n: u32 },
    #[error("braid parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

impl BraidWord {
    /// Validates that every letter indexes a generator of `B_strands`.
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for (position, &j) in letters.iter().enumerate() {
            let idx = j.unsigned_abs() as usize;
            if j == 0 || idx > strands - 1 {
                return Err(BraidError::LetterOutOfRange {
                    letter: j as i64,
                    position,
                    strands,
                });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn crossings(&self) -> usize {
        self.letters.len()
    }

    /// Sum of letter signs; with all strands coherently oriented this is
    /// the writhe of the closed-braid diagram.
    pub fn writhe(&self) -> i64 {
        self.letters.iter().map(|&j| j.signum() as i64).sum()
    }

    /// Number of components of the closure: cycles of the permutation of
    /// strand positions induced by the word.
    pub fn component_count(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &j in &self.letters {
            let a = j.unsigned_abs() as usize - 1;
            perm.swap(a, a + 1);
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for start in 0..self.strands {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = perm[x];
            }
        }
        cycles
    }

    /// The Markov conjugation move: `β ↦ γβγ^{−1}` with `γ` the single
    /// letter `g`. The word is not simplified.
    pub fn conjugate(&self, g: i32) -> Result<Self, BraidError> {
        let mut letters = Vec::with_capacity(self.letters.len() + 2);
        letters.push(g);
        letters.extend_from_slice(&self.letters);
        letters.push(-g);
        Self::new(self.strands, letters)
    }

    /// The Markov stabilization move: `β ↦ βσ_k^{±1}` on `k + 1` strands,
    /// where `k` is the current strand count.
    pub fn stabilize(&self, positive: bool) -> Self {
        let mut letters = self.letters.clone();
        let k = self.strands as i32;
        letters.push(if positive { k } else { -k });
        Self {
            strands: self.strands + 1,
            letters,
        }
    }

    /// Mirror image of the closure: every crossing reversed.
    pub fn mirror(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().map(|&j| -j).collect(),
        }
    }

    /// Parses `"k; j1 j2 ... jm"` — strand count, semicolon,
    /// whitespace-separated signed letters.
    pub fn parse(text: &str) -> Result<Self, BraidError> {
        let semi = text.find(';').ok_or_else(|| BraidError::Parse {
            position: text.len(),
            message: "expected ';' after the strand count".to_string(),
        })?;
        let head = &text[..semi];
        let strands: usize = head.trim().parse().map_err(|_| BraidError::Parse {
            position: 0,
            message: format!("invalid strand count {:?}", head.trim()),
        })?;
        let mut letters = Vec::new();
        let tail = &text[semi + 1..];
        let bytes = tail.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            while i < bytes.len() && bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            if i == bytes.len() {
                break;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let chunk = &tail[start..i];
            let j: i32 = chunk.parse().map_err(|_| BraidError::Parse {
                position: semi + 1 + start,
                message: format!("invalid letter {chunk:?}"),
            })?;
            letters.push(j);
        }
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};", self.strands)?;
        for j in &self.letters {
            write!(f, " {j}")?;
        }
        Ok(())
    }
}

/// The weaving braid on `p` strands repeated `n` times:
/// `(σ₁ σ₂^{−1} σ₃ ⋯ σ_{p−1}^{±1})^n`, generators alternating in sign
/// starting positive. Its closure is the weaving knot or link `W(p,n)`.
pub fn weaving_word(p: u32, n: u32) -> Result<BraidWord, BraidError> {
    if p < 2 || n < 1 {
        return Err(BraidError::BadWeavingParameters { p, n });
    }
    let mut letters = Vec::with_capacity(((p - 1) * n) as usize);
    for _ in 0..n {
        for i in 1..p {
            let sign = if i % 2 == 1 { 1 } else { -1 };
            letters.push(sign * i as i32);
        }
    }
    Ok(BraidWord {
        strands: p as usize,
        letters,
    })
}

/// `gcd(p, n)` — the component count of the weaving closure `W(p,n)`.
pub fn weaving_components(p: u32, n: u32) -> u32 {
    p.gcd(&n)
}
