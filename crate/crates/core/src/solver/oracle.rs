//! Unmemoized reference solver. Deliberately shares nothing with the
//! search driver beyond the move generator.

use crate::engine::{apply_move, initial_state, legal_moves, GameState};
use crate::sequence::GameParams;

use super::model::TurnModel;
use super::report::SolveReport;
use super::SolveError;

/// Largest `n` the oracle accepts for the given `c`.
pub fn oracle_limit(params: GameParams) -> u32 {
    if params.c == 1 {
        18
    } else {
        3 * params.c * params.c + 9
    }
}

/// Whether `focal` forces the last move from `state` with `seat` (0-based) to move.
fn forces(params: GameParams, model: &TurnModel, focal: usize, state: &GameState, seat: usize, last: Option<usize>) -> bool {
    let moves = legal_moves(params, state);
    if moves.is_empty() {
        return last.map(|s| model.team_of()[s] == focal).unwrap_or(false);
    }
    let next = (seat + 1) % model.players();
    let mut outcomes = moves.into_iter().map(|mv| {
        let child = apply_move(params, state, mv).unwrap();
        forces(params, model, focal, &child, next, Some(seat))
    });
    if model.team_of()[seat] == focal {
        outcomes.any(|v| v)
    } else {
        outcomes.all(|v| v)
    }
}

/// Full tree walk for every team (or only the focal team, when set).
pub fn solve_naive_oracle(params: GameParams, n: u32, model: &TurnModel) -> Result<SolveReport, SolveError> {
    let limit = oracle_limit(params);
    if n > limit {
        return Err(SolveError::OracleScale { n, limit });
    }
    if n == 0 {
        return Err(SolveError::Sequence(crate::sequence::SequenceError::ZeroValue));
    }
    let root = initial_state(n);
    let teams: Vec<usize> = match model.focal() {
        Some(f) => vec![f],
        None => (0..model.team_count()).collect(),
    };
    let winners = teams
        .into_iter()
        .filter(|&t| forces(params, model, t, &root, 0, None))
        .collect();
    Ok(SolveReport {
        params,
        n,
        turn_model: model.clone(),
        winners,
        states_visited: 0,
        policy: None,
    })
}
