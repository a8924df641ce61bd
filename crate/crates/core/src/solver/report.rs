use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::model::{Mode, TurnModel};
use crate::engine::{GameState, Move};
use crate::sequence::GameParams;

/// Version of the JSON report and cache line layout.
pub const SCHEMA_VERSION: u32 = 1;

/// Chosen move per `(canonical state, seat key)`.
///
/// The seat key is the same one the memo table uses: 0 in two-player mode,
/// the mover-to-focal offset for singleton multiplayer, and the mover's
/// 0-based seat in team mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Policy {
    keying: Keying,
    entries: BTreeMap<(String, u16), Move>,
}

/// How the seat component of a policy key is derived.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Keying {
    /// Two-player table: always 0, the entry is for whoever is on move.
    Mover,
    /// Offset from the mover's seat to the focal seat.
    Offset,
    /// The mover's 0-based seat.
    Seat,
}

impl Policy {
    pub(crate) fn new(keying: Keying) -> Self {
        Policy {
            keying,
            entries: BTreeMap::new(),
        }
    }

    pub fn keying(&self) -> Keying {
        self.keying
    }

    /// Move for `state` with 0-based `mover_seat` on move, solved for the
    /// 0-based `focal` seat or team in a `players`-seat game.
    pub fn move_for(&self, state: &GameState, mover_seat: usize, focal: usize, players: usize) -> Option<Move> {
        let key = match self.keying {
            Keying::Mover => 0,
            Keying::Offset => ((focal + players - mover_seat) % players) as u16,
            Keying::Seat => mover_seat as u16,
        };
        self.get(&state.encode(), key)
    }

    pub(crate) fn insert(&mut self, state: String, seat: u16, mv: Move) {
        self.entries.insert((state, seat), mv);
    }

    pub fn get(&self, state: &str, seat: u16) -> Option<Move> {
        self.entries.get(&(state.to_string(), seat)).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(String, u16), &Move)> {
        self.entries.iter()
    }

    /// Hex SHA-256 over `state|seat|move` lines in key order.
    pub fn digest(&self) -> String {
        let mut hasher = Sha256::new();
        for ((state, seat), mv) in &self.entries {
            hasher.update(format!("{state}|{seat}|{mv}\n").as_bytes());
        }
        let mut out = String::with_capacity(64);
        for b in hasher.finalize() {
            write!(out, "{b:02x}").unwrap();
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub params: GameParams,
    pub n: u32,
    pub turn_model: TurnModel,
    /// Team indices (see [`TurnModel::team_name`]) that can force the last move.
    pub winners: Vec<usize>,
    pub states_visited: usize,
    pub policy: Option<Policy>,
}

impl SolveReport {
    pub fn winner_names(&self) -> Vec<String> {
        self.winners
            .iter()
            .map(|&t| self.turn_model.team_name(t).to_string())
            .collect()
    }

    /// Single winner, if any.
    pub fn winner(&self) -> Option<usize> {
        self.winners.first().copied()
    }

    pub fn to_record(&self, cache_hit: bool) -> ReportRecord {
        ReportRecord {
            schema_version: SCHEMA_VERSION,
            params: self.params,
            n: self.n,
            mode: self.turn_model.mode(),
            players: self.turn_model.players(),
            seating: self.turn_model.seating(),
            winners: self.winner_names(),
            states_visited: self.states_visited,
            cache_hit,
            policy_digest: self.policy.as_ref().map(Policy::digest),
        }
    }
}

/// Serialized form of a [`SolveReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub schema_version: u32,
    pub params: GameParams,
    pub n: u32,
    pub mode: Mode,
    pub players: usize,
    pub seating: String,
    pub winners: Vec<String>,
    pub states_visited: usize,
    pub cache_hit: bool,
    pub policy_digest: Option<String>,
}

/// Which seat of a two-player game.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    P1,
    P2,
}

impl Player {
    pub fn opponent(self) -> Self {
        match self {
            Player::P1 => Player::P2,
            Player::P2 => Player::P1,
        }
    }

    /// Player on move at 1-based `turn`.
    pub fn on_turn(turn: u32) -> Self {
        if turn % 2 == 1 {
            Player::P1
        } else {
            Player::P2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MistakeReport {
    pub winner: Player,
    /// Earliest turn on which the winner can throw the game away.
    pub mistake_turn: Option<u32>,
}
