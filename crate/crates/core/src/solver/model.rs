use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("a game needs at least one seat")]
    NoSeats,
    #[error("too many seats: {0} (limit 64)")]
    TooManySeats(usize),
    #[error("seat {seat} is assigned to team #{team}, but only {teams} teams exist")]
    SeatOutOfRange { seat: usize, team: usize, teams: usize },
    #[error("team {0} has no seats")]
    EmptyTeam(String),
    #[error("invalid seating character {ch:?} at seat {seat}; use one letter per seat")]
    BadSeatingChar { seat: usize, ch: char },
    #[error("seating has {seating} seats but {players} players were requested")]
    SeatCountMismatch { seating: usize, players: usize },
    #[error("unknown team {0:?}")]
    UnknownTeam(String),
    #[error("no focal team selected")]
    MissingFocal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    TwoPlayer,
    Multiplayer,
    Team,
}

/// Seats, their team assignment, and optionally the side being solved for.
///
/// Seats are 1-based in the public API and move cyclically: turn `t` belongs
/// to seat `((t - 1) mod p) + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TurnModel {
    team_of: Vec<usize>,
    team_names: Vec<String>,
    seating: Option<String>,
    focal: Option<usize>,
}

impl TurnModel {
    pub fn two_player() -> Self {
        Self::singletons(2).expect("two seats")
    }

    /// `p` seats, each its own team named `P1..Pp`.
    pub fn singletons(p: usize) -> Result<Self, ConfigError> {
        let names = (1..=p).map(|s| format!("P{s}")).collect();
        Self::new((0..p).collect(), names)
    }

    /// `team_of[s]` is the team index of seat `s + 1`.
    pub fn new(team_of: Vec<usize>, team_names: Vec<String>) -> Result<Self, ConfigError> {
        if team_of.is_empty() {
            return Err(ConfigError::NoSeats);
        }
        if team_of.len() > 64 {
            return Err(ConfigError::TooManySeats(team_of.len()));
        }
        for (seat, &team) in team_of.iter().enumerate() {
            if team >= team_names.len() {
                return Err(ConfigError::SeatOutOfRange {
                    seat: seat + 1,
                    team,
                    teams: team_names.len(),
                });
            }
        }
        for (t, name) in team_names.iter().enumerate() {
            if !team_of.contains(&t) {
                return Err(ConfigError::EmptyTeam(name.clone()));
            }
        }
        Ok(TurnModel {
            team_of,
            team_names,
            seating: None,
            focal: None,
        })
    }

    /// One letter per seat, e.g. `AAAABB`. Teams are named by their letter
    /// and indexed in alphabetical order.
    pub fn from_seating(seating: &str) -> Result<Self, ConfigError> {
        let chars: Vec<char> = seating.chars().collect();
        for (seat, &ch) in chars.iter().enumerate() {
            if !ch.is_ascii_alphabetic() {
                return Err(ConfigError::BadSeatingChar { seat: seat + 1, ch });
            }
        }
        let mut letters = chars.clone();
        letters.sort_unstable();
        letters.dedup();
        let team_of = chars
            .iter()
            .map(|ch| letters.binary_search(ch).unwrap())
            .collect();
        let names = letters.iter().map(|c| c.to_string()).collect();
        let mut model = Self::new(team_of, names)?;
        model.seating = Some(seating.to_string());
        Ok(model)
    }

    pub fn with_focal(mut self, team: &str) -> Result<Self, ConfigError> {
        let idx = self
            .team_names
            .iter()
            .position(|n| n == team)
            .ok_or_else(|| ConfigError::UnknownTeam(team.to_string()))?;
        self.focal = Some(idx);
        Ok(self)
    }

    pub fn with_focal_index(mut self, team: usize) -> Result<Self, ConfigError> {
        if team >= self.team_names.len() {
            return Err(ConfigError::UnknownTeam(format!("#{team}")));
        }
        self.focal = Some(team);
        Ok(self)
    }

    pub fn without_focal(mut self) -> Self {
        self.focal = None;
        self
    }

    pub fn players(&self) -> usize {
        self.team_of.len()
    }

    pub fn team_count(&self) -> usize {
        self.team_names.len()
    }

    pub fn team_of(&self) -> &[usize] {
        &self.team_of
    }

    pub fn team_name(&self, team: usize) -> &str {
        &self.team_names[team]
    }

    pub fn team_names(&self) -> &[String] {
        &self.team_names
    }

    pub fn focal(&self) -> Option<usize> {
        self.focal
    }

    /// Seat (1-based) that plays turn `turn` (1-based).
    pub fn seat_of_turn(&self, turn: u64) -> usize {
        ((turn - 1) % self.players() as u64) as usize + 1
    }

    /// Team of a 1-based seat.
    pub fn team_of_seat(&self, seat: usize) -> usize {
        self.team_of[seat - 1]
    }

    pub fn is_singleton(&self) -> bool {
        self.team_names.len() == self.team_of.len()
    }

    pub fn mode(&self) -> Mode {
        if self.is_singleton() && self.players() == 2 {
            Mode::TwoPlayer
        } else if self.is_singleton() {
            Mode::Multiplayer
        } else {
            Mode::Team
        }
    }

    /// Seating text as given, or the team names joined by commas.
    pub fn seating(&self) -> String {
        match &self.seating {
            Some(s) => s.clone(),
            None => self
                .team_of
                .iter()
                .map(|&t| self.team_names[t].as_str())
                .collect::<Vec<_>>()
                .join(","),
        }
    }
}
