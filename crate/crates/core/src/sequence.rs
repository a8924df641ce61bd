//! (c,k)-nacci terms and the greedy decomposition that every game ends in.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::GameState;
use crate::scalar::Term;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("invalid parameters c={c}, k={k}: both must be at least 1")]
    InvalidParams { c: u32, k: u32 },
    #[error("term S_{index} overflows the term type")]
    Overflow { index: usize },
    #[error("value must be at least 1")]
    ZeroValue,
}

/// The pair `(c, k)`: recurrence constant and depth. The recurrence sums the
/// previous `k + 1` terms, each scaled by `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GameParams {
    pub c: u32,
    pub k: u32,
}

impl GameParams {
    pub fn new(c: u32, k: u32) -> Result<Self, SequenceError> {
        if c == 0 || k == 0 {
            return Err(SequenceError::InvalidParams { c, k });
        }
        Ok(GameParams { c, k })
    }

    /// Plain Zeckendorf game: Fibonacci numbers 1, 2, 3, 5, ...
    pub const FIBONACCI: GameParams = GameParams { c: 1, k: 1 };
    /// Tribonacci numbers 1, 2, 4, 7, ...
    pub const TRIBONACCI: GameParams = GameParams { c: 1, k: 2 };
}

impl fmt::Display for GameParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.c, self.k)
    }
}

/// Ascending prefix `S_1, S_2, ...` of the (c,k)-nacci sequence.
///
/// Indices are 1-based everywhere in the public API: `term(1) == 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sequence<T> {
    params: GameParams,
    terms: Vec<T>,
}

impl<T: Term> Sequence<T> {
    /// All terms `<= bound` plus the first term above it.
    pub fn generate(params: GameParams, bound: T) -> Result<Self, SequenceError> {
        if bound.is_zero() {
            return Err(SequenceError::ZeroValue);
        }
        let mut seq = Sequence {
            params,
            terms: vec![T::one()],
        };
        while *seq.terms.last().unwrap() <= bound {
            seq.push_next()?;
        }
        Ok(seq)
    }

    /// The first `len` terms (at least one).
    pub fn with_len(params: GameParams, len: usize) -> Result<Self, SequenceError> {
        let mut seq = Sequence {
            params,
            terms: vec![T::one()],
        };
        while seq.terms.len() < len {
            seq.push_next()?;
        }
        Ok(seq)
    }

    fn push_next(&mut self) -> Result<(), SequenceError> {
        let i = self.terms.len(); // computing S_{i+1}
        let overflow = SequenceError::Overflow { index: i + 1 };
        let c = T::from_u32(self.params.c).ok_or(overflow.clone())?;
        let k = self.params.k as usize;
        // Below k+1 the sum runs over the whole prefix and gains a trailing +1.
        let (window, extra) = if i < k + 1 {
            (&self.terms[..], T::one())
        } else {
            (&self.terms[i - k - 1..], T::zero())
        };
        let mut sum = T::zero();
        for &t in window {
            sum = sum.checked_add(&t).ok_or(overflow.clone())?;
        }
        let next = c
            .checked_mul(&sum)
            .and_then(|v| v.checked_add(&extra))
            .ok_or(overflow)?;
        self.terms.push(next);
        Ok(())
    }

    pub fn params(&self) -> GameParams {
        self.params
    }

    pub fn terms(&self) -> &[T] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `S_index`, 1-based.
    pub fn term(&self, index: usize) -> Option<T> {
        index.checked_sub(1).and_then(|i| self.terms.get(i).copied())
    }

    /// Extend in place until `S_index` is available.
    pub fn ensure_len(&mut self, len: usize) -> Result<(), SequenceError> {
        while self.terms.len() < len {
            self.push_next()?;
        }
        Ok(())
    }

    /// Greedy decomposition: repeatedly take the largest term that fits.
    pub fn decompose(&self, n: T) -> Result<GameState, SequenceError> {
        if n.is_zero() {
            return Err(SequenceError::ZeroValue);
        }
        let mut counts = vec![0u32; self.terms.len()];
        let mut rest = n;
        for (idx, &t) in self.terms.iter().enumerate().rev() {
            while t <= rest {
                rest = rest - t;
                counts[idx] += 1;
            }
        }
        debug_assert!(rest.is_zero());
        Ok(GameState::from_dense(counts))
    }
}

/// Terms up to `bound` for the given parameters.
pub fn generate_terms<T: Term>(params: GameParams, bound: T) -> Result<Sequence<T>, SequenceError> {
    Sequence::generate(params, bound)
}

/// The generalized Zeckendorf decomposition of `n`, i.e. the unique terminal
/// state of every game of value `n`.
pub fn decompose_greedy<T: Term>(params: GameParams, n: T) -> Result<GameState, SequenceError> {
    Sequence::generate(params, n)?.decompose(n)
}
