use std::fmt::{self, Write as _};
use std::str::FromStr;

use thiserror::Error;

use crate::scalar::Term;
use crate::sequence::{GameParams, Sequence, SequenceError};

/// Multiset of term indices.
///
/// Stored densely: slot `i - 1` holds the multiplicity of `S_i`, and trailing
/// zero slots are always trimmed, so structural equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GameState {
    counts: Vec<u32>,
}

/// Lexicographically ordered progress measure; strictly drops on every move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonovariantRank {
    pub token_count: u64,
    pub index_sum: u64,
    pub s2_count: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed state at byte {position}: {message}")]
pub struct ParseStateError {
    pub position: usize,
    pub message: String,
}

/// Starting position: `n` copies of `S_1`.
pub fn initial_state(n: u32) -> GameState {
    GameState::from_dense(vec![n])
}

impl GameState {
    pub fn from_dense(mut counts: Vec<u32>) -> Self {
        while counts.last() == Some(&0) {
            counts.pop();
        }
        GameState { counts }
    }

    /// Build from `(index, multiplicity)` pairs; repeated indices accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (usize, u32)>>(pairs: I) -> Self {
        let mut counts = Vec::new();
        for (i, m) in pairs {
            assert!(i >= 1, "term indices are 1-based");
            if counts.len() < i {
                counts.resize(i, 0);
            }
            counts[i - 1] += m;
        }
        GameState::from_dense(counts)
    }

    /// Multiplicity of `S_index` (0 when absent).
    pub fn count(&self, index: usize) -> u32 {
        index
            .checked_sub(1)
            .and_then(|i| self.counts.get(i).copied())
            .unwrap_or(0)
    }

    /// Largest index present, 0 for the empty multiset.
    pub fn max_index(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    /// Non-zero `(index, multiplicity)` pairs by ascending index.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| (i + 1, m))
    }

    pub(crate) fn dense(&self) -> &[u32] {
        &self.counts
    }

    pub fn token_count(&self) -> u64 {
        self.counts.iter().map(|&m| m as u64).sum()
    }

    pub fn rank(&self) -> MonovariantRank {
        MonovariantRank {
            token_count: self.token_count(),
            index_sum: self.iter().map(|(i, m)| i as u64 * m as u64).sum(),
            s2_count: self.count(2),
        }
    }

    /// `Σ m_i · S_i`, or `None` if `seq` is too short or the sum overflows.
    pub fn value<T: Term>(&self, seq: &Sequence<T>) -> Option<T> {
        let mut total = T::zero();
        for (i, m) in self.iter() {
            let term = seq.term(i)?;
            let part = term.checked_mul(&T::from_u32(m)?)?;
            total = total.checked_add(&part)?;
        }
        Some(total)
    }

    /// Value under `params`, generating as many terms as needed.
    pub fn value_for<T: Term>(&self, params: GameParams) -> Result<T, SequenceError> {
        let seq = Sequence::<T>::with_len(params, self.max_index().max(1))?;
        self.value(&seq).ok_or(SequenceError::Overflow {
            index: self.max_index(),
        })
    }

    pub fn encode(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.iter() {
            if !out.is_empty() {
                out.push(',');
            }
            write!(out, "{i}^{m}").unwrap();
        }
        out
    }

    /// Wedge rendering with term values, e.g. `1^7 ∧ 3^4 ∧ 5^2`.
    pub fn wedge<T: Term>(&self, seq: &Sequence<T>, style: Wedge) -> String {
        let parts: Vec<String> = self
            .iter()
            .map(|(i, m)| {
                let v = seq
                    .term(i)
                    .map(|t| t.to_string())
                    .unwrap_or_else(|| format!("S{i}"));
                if m == 1 {
                    v
                } else {
                    format!("{v}^{m}")
                }
            })
            .collect();
        parts.join(style.separator())
    }
}

/// Glyph used for the wedge in rendered states and moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Wedge {
    #[default]
    Ascii,
    Unicode,
}

impl Wedge {
    pub fn separator(self) -> &'static str {
        match self {
            Wedge::Ascii => " ^ ",
            Wedge::Unicode => " ∧ ",
        }
    }

    pub fn compact(self) -> &'static str {
        match self {
            Wedge::Ascii => " ^ ",
            Wedge::Unicode => "∧",
        }
    }

    pub fn arrow(self) -> &'static str {
        match self {
            Wedge::Ascii => " -> ",
            Wedge::Unicode => "→",
        }
    }
}

impl fmt::Display for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl FromStr for GameState {
    type Err = ParseStateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |position: usize, message: &str| ParseStateError {
            position,
            message: message.to_string(),
        };
        if s.is_empty() {
            return Err(err(0, "empty state"));
        }
        let mut counts: Vec<u32> = Vec::new();
        let mut last_index = 0usize;
        let mut pos = 0usize;
        for item in s.split(',') {
            let caret = item
                .find('^')
                .ok_or_else(|| err(pos, "expected `index^multiplicity`"))?;
            let (idx_txt, mult_txt) = (&item[..caret], &item[caret + 1..]);
            let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
            if !digits(idx_txt) {
                return Err(err(pos, "index must be a decimal integer"));
            }
            if !digits(mult_txt) {
                return Err(err(pos + caret + 1, "multiplicity must be a decimal integer"));
            }
            let index: usize = idx_txt.parse().map_err(|_| err(pos, "index out of range"))?;
            let mult: u32 = mult_txt
                .parse()
                .map_err(|_| err(pos + caret + 1, "multiplicity out of range"))?;
            if index == 0 {
                return Err(err(pos, "indices are 1-based"));
            }
            if index <= last_index {
                return Err(err(pos, "indices must be strictly ascending"));
            }
            if mult == 0 {
                return Err(err(pos + caret + 1, "zero multiplicity is not canonical"));
            }
            if index > 4096 {
                return Err(err(pos, "index out of range"));
            }
            counts.resize(index, 0);
            counts[index - 1] = mult;
            last_index = index;
            pos += item.len() + 1;
        }
        Ok(GameState { counts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn initial_state_basics() {
        assert_eq!(initial_state(5).encode(), "1^5");
        assert_eq!(initial_state(1).encode(), "1^1");
        let seq = Sequence::<u64>::with_len(GameParams::FIBONACCI, 1).unwrap();
        for n in 1..=100 {
            assert_eq!(initial_state(n).value(&seq), Some(n as u64));
        }
    }

    #[test]
    fn encode_examples() {
        let s = GameState::from_pairs([(1, 7), (3, 4), (4, 2)]);
        assert_eq!(s.encode(), "1^7,3^4,4^2");
        assert_eq!(initial_state(3).encode(), "1^3");
    }

    #[test]
    fn rank_examples() {
        let r = |pairs: &[(usize, u32)]| GameState::from_pairs(pairs.iter().copied()).rank();
        let t = |a, b, c| MonovariantRank {
            token_count: a,
            index_sum: b,
            s2_count: c,
        };
        assert_eq!(r(&[(2, 2)]), t(2, 4, 2));
        assert_eq!(r(&[(1, 1), (3, 1)]), t(2, 4, 0));
        assert_eq!(r(&[(4, 2)]), t(2, 8, 0));
        assert_eq!(r(&[(2, 1), (5, 1)]), t(2, 7, 1));
    }

    #[test]
    fn wedge_rendering() {
        let seq = Sequence::<u64>::with_len(GameParams::FIBONACCI, 5).unwrap();
        let s = GameState::from_pairs([(1, 7), (3, 4), (4, 2)]);
        assert_eq!(s.wedge(&seq, Wedge::Unicode), "1^7 ∧ 3^4 ∧ 5^2");
        assert_eq!(s.wedge(&seq, Wedge::Ascii), "1^7 ^ 3^4 ^ 5^2");
        let s = GameState::from_pairs([(1, 1), (2, 1)]);
        assert_eq!(s.wedge(&seq, Wedge::Ascii), "1 ^ 2");
    }

    #[test]
    fn parse_errors_carry_position() {
        let e = "1^2,x^3".parse::<GameState>().unwrap_err();
        assert_eq!(e.position, 4);
        let e = "1^2,3^".parse::<GameState>().unwrap_err();
        assert_eq!(e.position, 6);
        let e = "2^1,1^1".parse::<GameState>().unwrap_err();
        assert_eq!(e.position, 4);
        assert!("".parse::<GameState>().is_err());
        assert!("1^0".parse::<GameState>().is_err());
        assert!("0^1".parse::<GameState>().is_err());
        assert!("1^1,,2^1".parse::<GameState>().is_err());
        assert!("12".parse::<GameState>().is_err());
    }

    proptest! {
        #[test]
        fn encode_round_trips(pairs in proptest::collection::btree_map(1usize..40, 1u32..1000, 1..12)) {
            let s = GameState::from_pairs(pairs.clone());
            let text = s.encode();
            let back: GameState = text.parse().unwrap();
            prop_assert_eq!(&back, &s);
            prop_assert_eq!(back.iter().collect::<Vec<_>>(), pairs.into_iter().collect::<Vec<_>>());
        }
    }
}
