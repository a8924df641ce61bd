//! Exhaustive winning-strategy solvers.
//!
//! All solvers treat the game as last-move-wins over the acyclic position
//! graph. Multiplayer and team questions use maximin semantics: the focal
//! side wins only if it can force the final move against a coalition of
//! every other seat.

mod model;
mod oracle;
mod report;
mod search;

use std::collections::BTreeSet;

use thiserror::Error;

pub use model::{ConfigError, Mode, TurnModel};
pub use oracle::{oracle_limit, solve_naive_oracle};
pub use report::{Keying, MistakeReport, Player, Policy, ReportRecord, SolveReport, SCHEMA_VERSION};

use crate::engine::{apply_move, initial_state, is_terminal, legal_moves, GameState, Move};
use crate::sequence::{GameParams, SequenceError};
use search::{evaluate_parallel, Maximin, Memo, MoverWins};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("game has no winner")]
    NoWinner,
    #[error("oracle scale exceeded: n = {n} > {limit}")]
    OracleScale { n: u32, limit: u32 },
}

/// Solver configuration. `workers == 1` is the reference single-threaded
/// mode; larger values split the search over a thread pool and produce
/// identical reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Solver {
    pub workers: usize,
    /// Attach the extracted policy to reports.
    pub with_policy: bool,
}

impl Default for Solver {
    fn default() -> Self {
        Solver {
            workers: 1,
            with_policy: true,
        }
    }
}

/// Solved two-player table: "mover wins" for every reachable state.
pub struct TwoPlayerTable {
    params: GameParams,
    root: GameState,
    memo: Memo<GameState>,
}

impl TwoPlayerTable {
    /// Whether the player to move at `state` can force the last move.
    /// `None` for states outside the solved graph.
    pub fn mover_wins(&self, state: &GameState) -> Option<bool> {
        self.memo.get(state).map(|v| *v)
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn root(&self) -> &GameState {
        &self.root
    }

    pub fn params(&self) -> GameParams {
        self.params
    }

    /// Winner if it is `P1`'s turn at the root; `None` if the root is terminal.
    pub fn winner(&self) -> Option<Player> {
        if is_terminal(self.params, &self.root) {
            return None;
        }
        Some(if self.mover_wins(&self.root).unwrap() {
            Player::P1
        } else {
            Player::P2
        })
    }

    /// Policy move at a solved state: the first winning move if there is
    /// one, otherwise the first listed move.
    pub fn best_move(&self, state: &GameState) -> Option<Move> {
        let moves = legal_moves(self.params, state);
        let winning = moves.iter().copied().find(|&mv| {
            let child = apply_move(self.params, state, mv).unwrap();
            self.mover_wins(&child) == Some(false)
        });
        winning.or_else(|| moves.first().copied())
    }

    pub fn policy(&self) -> Policy {
        let mut policy = Policy::new(Keying::Mover);
        for entry in self.memo.iter() {
            if let Some(mv) = self.best_move(entry.key()) {
                policy.insert(entry.key().encode(), 0, mv);
            }
        }
        policy
    }
}

/// Solved maximin table for one focal side.
pub struct FocalTable {
    params: GameParams,
    model: TurnModel,
    rotational: bool,
    memo: Memo<(GameState, u16)>,
}

impl FocalTable {
    fn rules(&self, focal: usize) -> Maximin<'_> {
        Maximin {
            params: self.params,
            team_of: self.model.team_of(),
            focal,
            rotational: self.rotational,
        }
    }

    fn key(&self, state: &GameState, mover_seat: usize, focal: usize) -> (GameState, u16) {
        let p = self.model.players();
        let seat = if self.rotational {
            (focal + p - mover_seat) % p
        } else {
            mover_seat
        };
        (state.clone(), seat as u16)
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }

    pub fn model(&self) -> &TurnModel {
        &self.model
    }

    /// Solved value for `focal` at `state` with 0-based `mover_seat` on move.
    /// `None` if the position was not part of the solve.
    pub fn value(&self, state: &GameState, mover_seat: usize, focal: usize) -> Option<bool> {
        self.memo.get(&self.key(state, mover_seat, focal)).map(|v| *v)
    }
}

impl Solver {
    /// Solve every position reachable from `initial_state(n)` for the team
    /// `focal`, keeping the table for later lookups.
    pub fn focal_table_for(
        &self,
        params: GameParams,
        n: u32,
        model: &TurnModel,
        focal: usize,
    ) -> Result<FocalTable, SolveError> {
        check_n(n)?;
        if focal >= model.team_count() {
            return Err(ConfigError::UnknownTeam(format!("#{focal}")).into());
        }
        let table = self.focal_table(params, model, false);
        self.evaluate_in(&table, &initial_state(n), 0, focal);
        Ok(table)
    }

    pub fn with_workers(workers: usize) -> Self {
        Solver {
            workers: workers.max(1),
            ..Solver::default()
        }
    }

    pub fn two_player_table(&self, params: GameParams, n: u32) -> Result<TwoPlayerTable, SolveError> {
        check_n(n)?;
        let root = initial_state(n);
        let memo = Memo::default();
        evaluate_parallel(&MoverWins { params }, &root, &memo, self.workers);
        Ok(TwoPlayerTable { params, root, memo })
    }

    pub fn solve_two_player(&self, params: GameParams, n: u32) -> Result<SolveReport, SolveError> {
        let table = self.two_player_table(params, n)?;
        let winners = match table.winner() {
            Some(Player::P1) => vec![0],
            Some(Player::P2) => vec![1],
            None => vec![],
        };
        Ok(SolveReport {
            params,
            n,
            turn_model: TurnModel::two_player(),
            winners,
            states_visited: table.len(),
            policy: self.with_policy.then(|| table.policy()),
        })
    }

    /// Evaluate the maximin value for `focal` with `mover_seat` (0-based) to
    /// move at `state`. `rotational` selects offset keying, which requires
    /// singleton teams.
    fn focal_table(
        &self,
        params: GameParams,
        model: &TurnModel,
        rotational: bool,
    ) -> FocalTable {
        FocalTable {
            params,
            model: model.clone(),
            rotational: rotational && model.is_singleton(),
            memo: Memo::default(),
        }
    }

    fn evaluate_in(&self, table: &FocalTable, state: &GameState, mover_seat: usize, focal: usize) -> bool {
        let rules = table.rules(focal);
        let key = table.key(state, mover_seat, focal);
        evaluate_parallel(&rules, &key, &table.memo, self.workers)
    }

    /// Maximin value at an arbitrary position, keyed by absolute seat.
    /// `mover_seat` and `focal` are 0-based seat / team indices.
    pub fn focal_value_at(
        &self,
        params: GameParams,
        model: &TurnModel,
        state: &GameState,
        mover_seat: usize,
        focal: usize,
    ) -> bool {
        let table = self.focal_table(params, model, false);
        self.evaluate_in(&table, state, mover_seat, focal)
    }

    /// Can the model's focal team force the last move?
    pub fn solve_focal(&self, params: GameParams, n: u32, model: &TurnModel) -> Result<SolveReport, SolveError> {
        check_n(n)?;
        let focal = model.focal().ok_or(ConfigError::MissingFocal)?;
        let table = self.focal_table(params, model, true);
        let root = initial_state(n);
        let wins = !is_terminal(params, &root) && self.evaluate_in(&table, &root, 0, focal);
        let winners = if wins { vec![focal] } else { vec![] };
        let policy = (self.with_policy && wins).then(|| self.focal_policy(&table, focal));
        Ok(SolveReport {
            params,
            n,
            turn_model: model.clone(),
            winners,
            states_visited: table.len(),
            policy,
        })
    }

    /// Every team that can force the last move. At most one can.
    pub fn winners_all(&self, params: GameParams, n: u32, model: &TurnModel) -> Result<SolveReport, SolveError> {
        check_n(n)?;
        let root = initial_state(n);
        let model = model.clone().without_focal();
        let mut winners = Vec::new();
        let mut states_visited = 0;
        let mut policy = None;
        if model.is_singleton() {
            // One offset-keyed table answers for every seat.
            let table = self.focal_table(params, &model, true);
            if !is_terminal(params, &root) {
                for focal in 0..model.team_count() {
                    if self.evaluate_in(&table, &root, 0, focal) {
                        winners.push(focal);
                    }
                }
            }
            states_visited = table.len();
            if let (true, Some(&w)) = (self.with_policy, winners.first()) {
                policy = Some(self.focal_policy(&table, w));
            }
        } else {
            for focal in 0..model.team_count() {
                let table = self.focal_table(params, &model, false);
                if !is_terminal(params, &root) && self.evaluate_in(&table, &root, 0, focal) {
                    winners.push(focal);
                    if self.with_policy {
                        policy = Some(self.focal_policy(&table, focal));
                    }
                }
                states_visited += table.len();
            }
        }
        assert!(
            winners.len() <= 1,
            "two sides cannot both force the last move: {params} n={n} {winners:?}"
        );
        Ok(SolveReport {
            params,
            n,
            turn_model: model,
            winners,
            states_visited,
            policy,
        })
    }

    /// Winning moves for `focal` at every solved position where the focal
    /// side is on move and winning.
    fn focal_policy(&self, table: &FocalTable, focal: usize) -> Policy {
        let rules = table.rules(focal);
        let mut policy = Policy::new(if table.rotational {
            Keying::Offset
        } else {
            Keying::Seat
        });
        let keys: Vec<(GameState, u16)> = table
            .memo
            .iter()
            .filter(|e| *e.value())
            .map(|e| e.key().clone())
            .collect();
        for (state, seat) in keys {
            let focal_moves = if table.rotational {
                seat == 0
            } else {
                table.model.team_of()[seat as usize] == focal
            };
            if !focal_moves {
                continue;
            }
            let next = search::Rules::children(&rules, &(state.clone(), seat));
            let moves = legal_moves(table.params, &state);
            if let Some((mv, _)) = moves
                .into_iter()
                .zip(next)
                .find(|(_, child)| table.memo.get(child).map(|v| *v) == Some(true))
            {
                policy.insert(state.encode(), seat, mv);
            }
        }
        policy
    }

    pub fn mistake_depth(&self, params: GameParams, n: u32) -> Result<MistakeReport, SolveError> {
        let table = self.two_player_table(params, n)?;
        let winner = table.winner().ok_or(SolveError::NoWinner)?;
        let mut frontier: BTreeSet<GameState> = BTreeSet::new();
        frontier.insert(table.root.clone());
        let mut turn = 1u32;
        while !frontier.is_empty() {
            let mover = Player::on_turn(turn);
            let mut next = BTreeSet::new();
            for state in &frontier {
                for mv in legal_moves(params, state) {
                    let child = apply_move(params, state, mv).unwrap();
                    if mover == winner {
                        // The opponent moves next; the child is good for us iff they lose.
                        if table.mover_wins(&child) == Some(true) {
                            return Ok(MistakeReport {
                                winner,
                                mistake_turn: Some(turn),
                            });
                        }
                    }
                    next.insert(child);
                }
            }
            frontier = next;
            turn += 1;
        }
        Ok(MistakeReport {
            winner,
            mistake_turn: None,
        })
    }

    pub fn optimal_line(&self, params: GameParams, n: u32) -> Result<Vec<Move>, SolveError> {
        let table = self.two_player_table(params, n)?;
        let mut state = table.root.clone();
        let mut line = Vec::new();
        while let Some(mv) = table.best_move(&state) {
            state = apply_move(params, &state, mv).unwrap();
            line.push(mv);
        }
        Ok(line)
    }
}

fn check_n(n: u32) -> Result<(), SolveError> {
    if n == 0 {
        Err(SequenceError::ZeroValue.into())
    } else {
        Ok(())
    }
}

pub fn solve_two_player(params: GameParams, n: u32) -> Result<SolveReport, SolveError> {
    Solver::default().solve_two_player(params, n)
}

pub fn solve_focal(params: GameParams, n: u32, model: &TurnModel) -> Result<SolveReport, SolveError> {
    Solver::default().solve_focal(params, n, model)
}

pub fn winners_all(params: GameParams, n: u32, model: &TurnModel) -> Result<SolveReport, SolveError> {
    Solver::default().winners_all(params, n, model)
}

pub fn mistake_depth(params: GameParams, n: u32) -> Result<MistakeReport, SolveError> {
    Solver::default().mistake_depth(params, n)
}

pub fn optimal_line(params: GameParams, n: u32) -> Result<Vec<Move>, SolveError> {
    Solver::default().optimal_line(params, n)
}
