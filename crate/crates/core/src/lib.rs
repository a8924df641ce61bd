//! The generalized (c,k)-nacci Zeckendorf game.
//!
//! Players start from `n` copies of `S_1` and take turns applying rewrite
//! moves that preserve the total value; every play ends in the same
//! decomposition, and the player who makes the final move wins. This crate
//! generates the sequences, implements the move system, and solves two-player,
//! multiplayer, and team versions of the game exhaustively.
//!
//! Term arithmetic is generic over unsigned integer types via [`Term`]; the
//! aliases below fix the common widths.

pub mod engine;
pub mod harness;
pub mod scalar;
pub mod sequence;
pub mod solver;

pub use engine::{
    apply_move, canonical_decode, canonical_encode, initial_state, is_terminal, legal_moves,
    monovariant_rank, EngineError, GameState, MonovariantRank, Move, MoveKind, ParseMoveError, Wedge,
};
pub use scalar::Term;
pub use sequence::{decompose_greedy, generate_terms, GameParams, Sequence, SequenceError};
pub use solver::{
    mistake_depth, optimal_line, solve_focal, solve_naive_oracle, solve_two_player, winners_all,
    MistakeReport, Player, SolveError, SolveReport, Solver, TurnModel,
};

/// Sequence with 64-bit terms; the default width for desk-scale games.
pub type Sequence64 = Sequence<u64>;
/// Sequence with 128-bit terms.
pub type Sequence128 = Sequence<u128>;
/// Sequence with 32-bit terms.
pub type Sequence32 = Sequence<u32>;
