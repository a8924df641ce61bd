//! Game states, the move system, and the acyclicity certificate.
//!
//! States are multisets of sequence indices. Moves depend only on the
//! multiplicities and on `(c, k)`, so nothing in here needs the actual term
//! values; those only show up when a state is rendered or valued.

mod moves;
mod state;

pub use moves::{apply_move, is_terminal, legal_moves, EngineError, Move, MoveKind, ParseMoveError};
pub use state::{initial_state, GameState, MonovariantRank, ParseStateError, Wedge};

/// Monovariant triple `(token_count, index_sum, s2_count)` of a state.
pub fn monovariant_rank(state: &GameState) -> MonovariantRank {
    state.rank()
}

/// Canonical text key, e.g. `1^7,3^4,4^2`.
pub fn canonical_encode(state: &GameState) -> String {
    state.encode()
}

/// Inverse of [`canonical_encode`].
pub fn canonical_decode(text: &str) -> Result<GameState, ParseStateError> {
    text.parse()
}
