use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::state::{GameState, Wedge};
use crate::scalar::Term;
use crate::sequence::{GameParams, Sequence};

/// Rewrite rule families. The declaration order is the emission order of
/// [`legal_moves`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MoveKind {
    /// `(c+1) S_i` rewritten upward (with a remainder once `i >= k+1`).
    Carry,
    /// `(c+1) S_1 ∧ c S_2 ∧ … ∧ c S_i → S_{i+1}` for `2 <= i <= k`.
    LowCombine,
    /// `c S_{i-k} ∧ … ∧ c S_i → S_{i+1}` for `i >= k+1`.
    Combine,
}

/// A move anchored at term index `index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("illegal move {mv}: {reason}")]
    IllegalMove { mv: Move, reason: String },
}

impl Move {
    pub fn carry(index: usize) -> Self {
        Move {
            kind: MoveKind::Carry,
            index,
        }
    }

    pub fn low_combine(index: usize) -> Self {
        Move {
            kind: MoveKind::LowCombine,
            index,
        }
    }

    pub fn combine(index: usize) -> Self {
        Move {
            kind: MoveKind::Combine,
            index,
        }
    }

    /// Tokens consumed as `(index, multiplicity)`, or why the anchor is
    /// out of range for this kind.
    fn consumes(&self, params: GameParams) -> Result<Vec<(usize, u32)>, String> {
        let (c, k, i) = (params.c, params.k as usize, self.index);
        match self.kind {
            MoveKind::Carry => {
                if i == 0 {
                    return Err("indices are 1-based".into());
                }
                Ok(vec![(i, c + 1)])
            }
            MoveKind::LowCombine => {
                if i < 2 || i > k {
                    return Err(format!("lowcombine requires 2 <= i <= k = {k}"));
                }
                let mut v = vec![(1, c + 1)];
                v.extend((2..=i).map(|j| (j, c)));
                Ok(v)
            }
            MoveKind::Combine => {
                if i < k + 1 {
                    return Err(format!("combine requires i >= k+1 = {}", k + 1));
                }
                Ok((i - k..=i).map(|j| (j, c)).collect())
            }
        }
    }

    fn produces(&self, params: GameParams) -> Vec<(usize, u32)> {
        let (c, k, i) = (params.c, params.k as usize, self.index);
        match self.kind {
            MoveKind::Carry if i < k + 1 => vec![(i + 1, 1)],
            MoveKind::Carry if i == k + 1 => vec![(1, 1), (i + 1, 1)],
            MoveKind::Carry => vec![(i - k - 1, c), (i + 1, 1)],
            MoveKind::LowCombine | MoveKind::Combine => vec![(i + 1, 1)],
        }
    }

    /// Lowercase descriptor used in DOT edge labels, e.g. `carry(2)`.
    pub fn descriptor(&self) -> String {
        self.to_string()
    }

    /// Wedge rendering with term values, e.g. `1∧1∧2→4`.
    pub fn describe<T: Term>(&self, params: GameParams, seq: &Sequence<T>, style: Wedge) -> String {
        let render = |list: Vec<(usize, u32)>| -> String {
            let mut parts = Vec::new();
            for (j, m) in list {
                let v = seq
                    .term(j)
                    .map(|t| t.to_string())
                    .unwrap_or_else(|| format!("S{j}"));
                parts.extend(std::iter::repeat_n(v, m as usize));
            }
            parts.join(style.compact())
        };
        match self.consumes(params) {
            Ok(input) => format!(
                "{}{}{}",
                render(input),
                style.arrow(),
                render(self.produces(params))
            ),
            Err(_) => self.descriptor(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            MoveKind::Carry => "carry",
            MoveKind::LowCombine => "lowcombine",
            MoveKind::Combine => "combine",
        };
        write!(f, "{name}({})", self.index)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse move {0:?}; expected carry(i), lowcombine(i) or combine(i)")]
pub struct ParseMoveError(pub String);

impl std::str::FromStr for Move {
    type Err = ParseMoveError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || ParseMoveError(s.to_string());
        let (name, rest) = s.trim().split_once('(').ok_or_else(bad)?;
        let index: usize = rest.strip_suffix(')').ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let kind = match name {
            "carry" => MoveKind::Carry,
            "lowcombine" => MoveKind::LowCombine,
            "combine" => MoveKind::Combine,
            _ => return Err(bad()),
        };
        Ok(Move { kind, index })
    }
}

/// Every legal move, ordered by kind then ascending anchor index.
pub fn legal_moves(params: GameParams, state: &GameState) -> Vec<Move> {
    let c = params.c;
    let k = params.k as usize;
    let counts = state.dense();
    let len = counts.len();
    let at = |i: usize| counts.get(i - 1).copied().unwrap_or(0);
    let mut out = Vec::new();

    for i in 1..=len {
        if at(i) > c {
            out.push(Move::carry(i));
        }
    }
    if at(1) > c {
        // The prefix S_2..S_i must all carry at least c copies; stop at the first gap.
        for i in 2..=k.min(len) {
            if at(i) < c {
                break;
            }
            out.push(Move::low_combine(i));
        }
    }
    // Sliding window of k+1 consecutive indices each holding >= c copies.
    let mut run = 0usize;
    for i in 1..=len {
        if at(i) >= c {
            run += 1;
        } else {
            run = 0;
        }
        if i > k && run > k {
            out.push(Move::combine(i));
        }
    }
    out
}

/// True iff no move is available.
pub fn is_terminal(params: GameParams, state: &GameState) -> bool {
    let c = params.c;
    let k = params.k as usize;
    let counts = state.dense();
    if counts.iter().any(|&m| m > c) {
        return false;
    }
    // Multiplicities are all <= c now, so only Combine can still apply.
    let mut run = 0usize;
    for &m in counts {
        run = if m >= c { run + 1 } else { 0 };
        if run > k {
            return false;
        }
    }
    true
}

/// Successor of `state` under `mv`.
pub fn apply_move(params: GameParams, state: &GameState, mv: Move) -> Result<GameState, EngineError> {
    let illegal = |reason: String| EngineError::IllegalMove { mv, reason };
    let consumed = mv.consumes(params).map_err(illegal)?;
    let produced = mv.produces(params);
    let mut counts = state.dense().to_vec();
    for &(j, m) in &consumed {
        let have = counts.get(j - 1).copied().unwrap_or(0);
        if have < m {
            return Err(illegal(format!("needs {m} x S_{j}, state has {have}")));
        }
        counts[j - 1] -= m;
    }
    let top = produced.iter().map(|&(j, _)| j).max().unwrap_or(0);
    if counts.len() < top {
        counts.resize(top, 0);
    }
    for (j, m) in produced {
        counts[j - 1] += m;
    }
    Ok(GameState::from_dense(counts))
}
