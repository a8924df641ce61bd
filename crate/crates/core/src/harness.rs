//! Finite sweeps that check each winning-strategy result of the game.
//!
//! A claim is asserted only on instances that satisfy its hypotheses; the
//! bounds are checked before anything is solved. Instances below a bound can
//! be attached as `reported` sweeps, which are solved and recorded but never
//! asserted.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::engine::{apply_move, initial_state, legal_moves, GameState, Move, Wedge};
use crate::sequence::{GameParams, Sequence, SequenceError};
use crate::solver::{Player, SolveError, SolveReport, Solver, TurnModel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("{claim}: {instance} violates the hypothesis {bound}")]
    Hypothesis {
        claim: ClaimId,
        instance: String,
        bound: String,
    },
    #[error("unknown profile {0:?} (expected quick or full)")]
    UnknownProfile(String),
    #[error("unknown claim {given:?}; valid ids: {valid}")]
    UnknownClaim { given: String, valid: String },
    #[error("{claim}: arrangement {seating:?} {reason}")]
    Arrangement {
        claim: ClaimId,
        seating: String,
        reason: String,
    },
    #[error(transparent)]
    Solve(#[from] SolveError),
}

impl From<SequenceError> for HarnessError {
    fn from(e: SequenceError) -> Self {
        HarnessError::Solve(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimId {
    /// Fibonacci game, two players: P2 for every n > 2.
    FibTwoPlayer,
    /// Tribonacci game, two players: P2 for every n > 9.
    TribTwoPlayer,
    /// Two players, any (c,k): winner decided by the parity of c.
    Parity,
    /// Tribonacci game, p >= 3 players: nobody can force a win for n >= 7.
    TribMultiplayer,
    /// p >= c + 2 players: nobody can force a win for n >= 3c² + 6c + 3.
    MultiplayerGeneral,
    /// The winner can blunder as early as turn c + 1 (k > 1).
    MistakeDepth,
    /// t teams of d = t - c consecutive seats: no team wins (stated bound).
    TeamNoWinner,
    /// As above, asserted only from the larger supporting-lemma bounds.
    TeamNoWinnerLemma,
    /// c = 1, teams of p - 2 and 2 seats: the larger team wins for n >= 36.
    TeamLargeWins,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::FibTwoPlayer,
        ClaimId::TribTwoPlayer,
        ClaimId::Parity,
        ClaimId::TribMultiplayer,
        ClaimId::MultiplayerGeneral,
        ClaimId::MistakeDepth,
        ClaimId::TeamNoWinner,
        ClaimId::TeamNoWinnerLemma,
        ClaimId::TeamLargeWins,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::FibTwoPlayer => "fib-two-player",
            ClaimId::TribTwoPlayer => "trib-two-player",
            ClaimId::Parity => "parity",
            ClaimId::TribMultiplayer => "trib-multiplayer",
            ClaimId::MultiplayerGeneral => "multiplayer-general",
            ClaimId::MistakeDepth => "mistake-depth",
            ClaimId::TeamNoWinner => "team-no-winner",
            ClaimId::TeamNoWinnerLemma => "team-no-winner-lemma",
            ClaimId::TeamLargeWins => "team-large-wins",
        }
    }

    pub fn valid_ids() -> String {
        ClaimId::ALL.map(ClaimId::as_str).join(", ")
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| HarnessError::UnknownClaim {
                given: s.to_string(),
                valid: ClaimId::valid_ids(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Quick,
    Full,
}

impl FromStr for Profile {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Profile::Quick),
            "full" => Ok(Profile::Full),
            other => Err(HarnessError::UnknownProfile(other.to_string())),
        }
    }
}

/// One rectangular block of instances.
///
/// `seats` holds the player count for multiplayer claims and the team count
/// `t` for the consecutive-team claims; `arrangements` holds seating strings
/// for the large-team claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sweep {
    pub c: Vec<u32>,
    pub k: Vec<u32>,
    pub n: RangeInclusive<u32>,
    #[serde(default)]
    pub seats: Vec<usize>,
    #[serde(default)]
    pub arrangements: Vec<String>,
}

impl Sweep {
    pub fn new(c: &[u32], k: &[u32], n: RangeInclusive<u32>) -> Self {
        Sweep {
            c: c.to_vec(),
            k: k.to_vec(),
            n,
            seats: Vec::new(),
            arrangements: Vec::new(),
        }
    }

    pub fn seats(mut self, seats: &[usize]) -> Self {
        self.seats = seats.to_vec();
        self
    }

    pub fn arrangements(mut self, seatings: &[&str]) -> Self {
        self.arrangements = seatings.iter().map(|s| s.to_string()).collect();
        self
    }

    fn contains(&self, other: &Sweep) -> bool {
        let sub = |a: &[u32], b: &[u32]| a.iter().all(|x| b.contains(x));
        sub(&other.c, &self.c)
            && sub(&other.k, &self.k)
            && other.n.start() >= self.n.start()
            && other.n.end() <= self.n.end()
            && other.seats.iter().all(|s| self.seats.contains(s))
            && other.arrangements.iter().all(|s| self.arrangements.contains(s))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSpec {
    pub id: ClaimId,
    /// Plain statement of the claim.
    pub source: String,
    pub sweeps: Vec<Sweep>,
    /// Solved and recorded, never asserted.
    pub reported: Vec<Sweep>,
}

impl ClaimSpec {
    pub fn new(id: ClaimId, sweeps: Vec<Sweep>) -> Self {
        ClaimSpec {
            id,
            source: source_of(id).to_string(),
            sweeps,
            reported: Vec::new(),
        }
    }

    pub fn with_reported(mut self, reported: Vec<Sweep>) -> Self {
        self.reported = reported;
        self
    }

    /// True iff every asserted instance of `other` is also asserted here.
    pub fn covers(&self, other: &ClaimSpec) -> bool {
        self.id == other.id
            && other
                .sweeps
                .iter()
                .all(|o| self.sweeps.iter().any(|s| s.contains(o)))
    }
}

fn source_of(id: ClaimId) -> &'static str {
    match id {
        ClaimId::FibTwoPlayer => "Fibonacci, two players: P2 wins for n > 2",
        ClaimId::TribTwoPlayer => "Tribonacci, two players: P2 wins for n > 9",
        ClaimId::Parity => "two players, n >= (c+1)^3 + (c+1): P2 wins for odd c, P1 for even c",
        ClaimId::TribMultiplayer => "Tribonacci, p >= 3 players, n >= 7: no player wins",
        ClaimId::MultiplayerGeneral => "p >= c + 2 players, n >= 3c^2 + 6c + 3: no player wins",
        ClaimId::MistakeDepth => "k > 1: the winner can lose the win as early as turn c + 1",
        ClaimId::TeamNoWinner => "t >= c + 2 teams of d = t - c consecutive seats, n >= 2d^2 + 4d: no team wins",
        ClaimId::TeamNoWinnerLemma => "consecutive teams, asserted from the larger lemma bounds: no team wins",
        ClaimId::TeamLargeWins => "c = 1, teams of p - 2 and 2 seats, n >= 36: the larger team wins",
    }
}

/// One solved instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub c: u32,
    pub k: u32,
    pub n: u32,
    pub players: usize,
    pub seating: String,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={} k={} n={} p={}", self.c, self.k, self.n, self.players)?;
        if !self.seating.is_empty() {
            write!(f, " seating={}", self.seating)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub instance: Instance,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub instance: Instance,
    pub expected: String,
    pub got: String,
    /// A complete play from the initial state, following the solved policy
    /// for the side that actually wins.
    pub line: Vec<Move>,
    pub transcript: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimResult {
    pub id: ClaimId,
    pub source: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Outcome of every asserted instance, in sweep order.
    pub observed: Vec<Observation>,
    pub reported: Vec<Observation>,
}

impl ClaimResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

// Hypothesis bounds.

pub fn parity_bound(c: u32) -> u32 {
    (c + 1).pow(3) + (c + 1)
}

pub fn multiplayer_bound(c: u32) -> u32 {
    3 * c * c + 6 * c + 3
}

/// Stated bound `2d² + 4d` for teams of `d` consecutive seats.
pub fn team_stated_bound(d: u32) -> u32 {
    2 * d * d + 4 * d
}

/// The stated bound raised to the supporting lemmas' bounds
/// (`3c² + 15c + 12`, `6c² + 18c + 12`) when their `t >= 2c` condition holds.
pub fn team_lemma_bound(c: u32, t: u32) -> u32 {
    let stated = team_stated_bound(t - c);
    if t >= 2 * c {
        stated
            .max(3 * c * c + 15 * c + 12)
            .max(6 * c * c + 18 * c + 12)
    } else {
        stated
    }
}

/// Consecutive blocks of `d` seats per team, teams lettered `A, B, ...`.
pub fn consecutive_seating(teams: usize, d: usize) -> String {
    (0..teams)
        .flat_map(|t| std::iter::repeat_n((b'A' + t as u8) as char, d))
        .collect()
}

struct Violation<'a> {
    claim: ClaimId,
    instance: &'a dyn fmt::Display,
}

impl Violation<'_> {
    fn err(&self, bound: impl Into<String>) -> HarnessError {
        HarnessError::Hypothesis {
            claim: self.claim,
            instance: self.instance.to_string(),
            bound: bound.into(),
        }
    }
}

struct Ck {
    c: u32,
    k: u32,
}

impl fmt::Display for Ck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c={} k={}", self.c, self.k)
    }
}

/// Check every asserted instance of `spec` against the claim's hypotheses.
pub fn validate(spec: &ClaimSpec) -> Result<(), HarnessError> {
    let id = spec.id;
    for sweep in &spec.sweeps {
        let n0 = *sweep.n.start();
        if n0 == 0 || sweep.n.is_empty() {
            return Err(HarnessError::Hypothesis {
                claim: id,
                instance: format!("n={:?}", sweep.n),
                bound: "non-empty range with n >= 1".into(),
            });
        }
        for &c in &sweep.c {
            for &k in &sweep.k {
                GameParams::new(c, k)?;
                let ck = Ck { c, k };
                let v = Violation {
                    claim: id,
                    instance: &ck,
                };
                let at_least = |bound: u32, what: &str| {
                    if n0 < bound {
                        Err(v.err(format!("n >= {bound} ({what}), range starts at {n0}")))
                    } else {
                        Ok(())
                    }
                };
                match id {
                    ClaimId::FibTwoPlayer => {
                        if (c, k) != (1, 1) {
                            return Err(v.err("c = 1, k = 1"));
                        }
                    }
                    ClaimId::TribTwoPlayer => {
                        if (c, k) != (1, 2) {
                            return Err(v.err("c = 1, k = 2"));
                        }
                        at_least(10, "n > 9")?;
                    }
                    ClaimId::Parity => at_least(parity_bound(c), "(c+1)^3 + (c+1)")?,
                    ClaimId::TribMultiplayer => {
                        if (c, k) != (1, 2) {
                            return Err(v.err("c = 1, k = 2"));
                        }
                        at_least(7, "n >= 7")?;
                        if sweep.seats.is_empty() || sweep.seats.iter().any(|&p| p < 3) {
                            return Err(v.err("p >= 3"));
                        }
                    }
                    ClaimId::MultiplayerGeneral => {
                        at_least(multiplayer_bound(c), "3c^2 + 6c + 3")?;
                        if sweep.seats.is_empty() || sweep.seats.iter().any(|&p| p < c as usize + 2) {
                            return Err(v.err(format!("p >= c + 2 = {}", c + 2)));
                        }
                    }
                    ClaimId::MistakeDepth => {
                        if k < 2 {
                            return Err(v.err("k > 1"));
                        }
                        at_least(parity_bound(c), "(c+1)^3 + (c+1)")?;
                    }
                    ClaimId::TeamNoWinner | ClaimId::TeamNoWinnerLemma => {
                        if sweep.seats.is_empty() {
                            return Err(v.err("at least one team count t"));
                        }
                        for &t in &sweep.seats {
                            let t = t as u32;
                            if t < c + 2 {
                                return Err(v.err(format!("t >= c + 2 = {}, got t = {t}", c + 2)));
                            }
                            let bound = if id == ClaimId::TeamNoWinner {
                                team_stated_bound(t - c)
                            } else {
                                team_lemma_bound(c, t)
                            };
                            at_least(bound, "team bound")?;
                        }
                    }
                    ClaimId::TeamLargeWins => {
                        if c != 1 {
                            return Err(v.err("c = 1"));
                        }
                        at_least(36, "n >= 36")?;
                        if sweep.arrangements.is_empty() {
                            return Err(v.err("at least one arrangement"));
                        }
                        for seating in &sweep.arrangements {
                            large_team(id, seating)?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Team index of the `p - 2` side, validating the two-team split.
fn large_team(claim: ClaimId, seating: &str) -> Result<(TurnModel, usize), HarnessError> {
    let bad = |reason: &str| HarnessError::Arrangement {
        claim,
        seating: seating.to_string(),
        reason: reason.to_string(),
    };
    let model = TurnModel::from_seating(seating).map_err(|e| bad(&e.to_string()))?;
    let p = model.players();
    if p < 6 {
        return Err(bad("needs p >= 6 seats"));
    }
    if model.team_count() != 2 {
        return Err(bad("must have exactly two teams"));
    }
    let sizes: Vec<usize> = (0..2)
        .map(|t| model.team_of().iter().filter(|&&x| x == t).count())
        .collect();
    let large = match (sizes[0], sizes[1]) {
        (a, 2) if a == p - 2 => 0,
        (2, b) if b == p - 2 => 1,
        _ => return Err(bad("must split seats into p - 2 and 2")),
    };
    Ok((model, large))
}

/// Play from the initial state: seats on the winning side follow the
/// report's policy, everybody else takes the first listed move.
pub fn policy_line(report: &SolveReport) -> Vec<Move> {
    let params = report.params;
    let model = &report.turn_model;
    let p = model.players();
    let mut state = initial_state(report.n);
    let mut line = Vec::new();
    let mut seat = 0usize;
    loop {
        let moves = legal_moves(params, &state);
        if moves.is_empty() {
            break;
        }
        let chosen = report
            .winner()
            .filter(|&w| model.team_of()[seat] == w)
            .and_then(|w| report.policy.as_ref()?.move_for(&state, seat, w, p))
            .unwrap_or(moves[0]);
        state = apply_move(params, &state, chosen).expect("policy move is legal");
        line.push(chosen);
        seat = (seat + 1) % p;
    }
    line
}

/// Replay `line` from `initial_state(n)`; returns the final state and the
/// 1-based seat that made the last move.
pub fn replay(params: GameParams, n: u32, players: usize, line: &[Move]) -> Result<(GameState, Option<usize>), crate::engine::EngineError> {
    let mut state = initial_state(n);
    for mv in line {
        state = apply_move(params, &state, *mv)?;
    }
    let last = (!line.is_empty()).then(|| (line.len() - 1) % players + 1);
    Ok((state, last))
}

/// Wedge-notation transcript, one numbered turn per line.
pub fn transcript(params: GameParams, n: u32, players: usize, line: &[Move], style: Wedge) -> String {
    let seq = Sequence::<u64>::with_len(params, 64.min(max_index(params, n, line) + 2)).ok();
    let mut out = String::new();
    let mut state = initial_state(n);
    for (t, mv) in line.iter().enumerate() {
        let seat = t % players + 1;
        let desc = seq
            .as_ref()
            .map(|s| mv.describe(params, s, style))
            .unwrap_or_else(|| mv.to_string());
        state = apply_move(params, &state, *mv).unwrap_or(state);
        let rendered = seq
            .as_ref()
            .map(|s| state.wedge(s, style))
            .unwrap_or_else(|| state.encode());
        writeln!(out, "{:>3}. P{seat}: {desc}  => {{{rendered}}}", t + 1).unwrap();
    }
    out
}

fn max_index(params: GameParams, n: u32, line: &[Move]) -> usize {
    let mut state = initial_state(n);
    let mut top = 1;
    for mv in line {
        if let Ok(next) = apply_move(params, &state, *mv) {
            state = next;
            top = top.max(state.max_index());
        }
    }
    top
}

fn names(report: &SolveReport) -> String {
    let w = report.winner_names();
    if w.is_empty() {
        "none".into()
    } else {
        w.join(",")
    }
}

enum Expect {
    Winner(String),
    NoWinner,
    Mistake(u32),
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expect::Winner(w) => f.write_str(w),
            Expect::NoWinner => f.write_str("none"),
            Expect::Mistake(t) => write!(f, "mistake at turn {t}"),
        }
    }
}

struct Outcome {
    instance: Instance,
    got: String,
    report: Option<SolveReport>,
}

/// Every instance of a sweep, in a fixed order, with its solved outcome.
fn run_sweep(solver: &Solver, id: ClaimId, sweep: &Sweep) -> Result<Vec<Outcome>, HarnessError> {
    let mut out = Vec::new();
    for &c in &sweep.c {
        for &k in &sweep.k {
            let params = GameParams::new(c, k)?;
            for n in sweep.n.clone() {
                match id {
                    ClaimId::FibTwoPlayer | ClaimId::TribTwoPlayer | ClaimId::Parity => {
                        let report = solver.solve_two_player(params, n)?;
                        out.push(Outcome {
                            instance: Instance {
                                c,
                                k,
                                n,
                                players: 2,
                                seating: String::new(),
                            },
                            got: names(&report),
                            report: Some(report),
                        });
                    }
                    ClaimId::MistakeDepth => {
                        let got = match solver.mistake_depth(params, n) {
                            Ok(m) => match m.mistake_turn {
                                Some(t) => format!("mistake at turn {t}"),
                                None => "no mistake possible".into(),
                            },
                            Err(SolveError::NoWinner) => "no winner".into(),
                            Err(e) => return Err(e.into()),
                        };
                        let report = solver.solve_two_player(params, n)?;
                        out.push(Outcome {
                            instance: Instance {
                                c,
                                k,
                                n,
                                players: 2,
                                seating: String::new(),
                            },
                            got,
                            report: Some(report),
                        });
                    }
                    ClaimId::TribMultiplayer | ClaimId::MultiplayerGeneral => {
                        for &p in &sweep.seats {
                            let model = TurnModel::singletons(p).map_err(SolveError::from)?;
                            let report = solver.winners_all(params, n, &model)?;
                            out.push(Outcome {
                                instance: Instance {
                                    c,
                                    k,
                                    n,
                                    players: p,
                                    seating: String::new(),
                                },
                                got: names(&report),
                                report: Some(report),
                            });
                        }
                    }
                    ClaimId::TeamNoWinner | ClaimId::TeamNoWinnerLemma => {
                        for &t in &sweep.seats {
                            let d = t.saturating_sub(c as usize).max(1);
                            let seating = consecutive_seating(t, d);
                            let model = TurnModel::from_seating(&seating).map_err(SolveError::from)?;
                            let report = solver.winners_all(params, n, &model)?;
                            out.push(Outcome {
                                instance: Instance {
                                    c,
                                    k,
                                    n,
                                    players: model.players(),
                                    seating,
                                },
                                got: names(&report),
                                report: Some(report),
                            });
                        }
                    }
                    ClaimId::TeamLargeWins => {
                        for seating in &sweep.arrangements {
                            let model = TurnModel::from_seating(seating).map_err(SolveError::from)?;
                            let report = solver.winners_all(params, n, &model)?;
                            out.push(Outcome {
                                instance: Instance {
                                    c,
                                    k,
                                    n,
                                    players: model.players(),
                                    seating: seating.clone(),
                                },
                                got: names(&report),
                                report: Some(report),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

fn expected(id: ClaimId, inst: &Instance) -> Result<Expect, HarnessError> {
    Ok(match id {
        ClaimId::FibTwoPlayer => match inst.n {
            1 => Expect::NoWinner,
            2 => Expect::Winner("P1".into()),
            _ => Expect::Winner("P2".into()),
        },
        ClaimId::TribTwoPlayer => Expect::Winner("P2".into()),
        ClaimId::Parity => Expect::Winner(if inst.c % 2 == 1 { "P2" } else { "P1" }.into()),
        ClaimId::MistakeDepth => Expect::Mistake(inst.c + 1),
        ClaimId::TribMultiplayer
        | ClaimId::MultiplayerGeneral
        | ClaimId::TeamNoWinner
        | ClaimId::TeamNoWinnerLemma => Expect::NoWinner,
        ClaimId::TeamLargeWins => {
            let (model, large) = large_team(id, &inst.seating)?;
            Expect::Winner(model.team_name(large).to_string())
        }
    })
}

/// Validate, then run every asserted and reported instance of `spec`.
pub fn run_claim(solver: &Solver, spec: &ClaimSpec) -> Result<ClaimResult, HarnessError> {
    validate(spec)?;
    let mut result = ClaimResult {
        id: spec.id,
        source: spec.source.clone(),
        instances: 0,
        failures: Vec::new(),
        observed: Vec::new(),
        reported: Vec::new(),
    };
    for sweep in &spec.sweeps {
        for outcome in run_sweep(solver, spec.id, sweep)? {
            result.instances += 1;
            let want = expected(spec.id, &outcome.instance)?;
            result.observed.push(Observation {
                instance: outcome.instance.clone(),
                outcome: outcome.got.clone(),
            });
            if want.to_string() != outcome.got {
                let line = outcome.report.as_ref().map(policy_line).unwrap_or_default();
                let inst = &outcome.instance;
                let params = GameParams::new(inst.c, inst.k)?;
                result.failures.push(Failure {
                    transcript: transcript(params, inst.n, inst.players, &line, Wedge::Ascii),
                    instance: outcome.instance,
                    expected: want.to_string(),
                    got: outcome.got,
                    line,
                });
            }
        }
    }
    for sweep in &spec.reported {
        for outcome in run_sweep(solver, spec.id, sweep)? {
            result.reported.push(Observation {
                instance: outcome.instance,
                outcome: outcome.got,
            });
        }
    }
    Ok(result)
}

/// Registered claims for a profile. `full` asserts a superset of `quick`.
pub fn claims(profile: Profile) -> Vec<ClaimSpec> {
    let full = profile == Profile::Full;
    let pick = |quick: u32, wide: u32| if full { wide } else { quick };
    vec![
        ClaimSpec::new(
            ClaimId::FibTwoPlayer,
            vec![Sweep::new(&[1], &[1], 1..=pick(40, 60))],
        ),
        ClaimSpec::new(
            ClaimId::TribTwoPlayer,
            vec![Sweep::new(&[1], &[2], 10..=pick(30, 45))],
        )
        .with_reported(vec![Sweep::new(&[1], &[2], 1..=9)]),
        ClaimSpec::new(
            ClaimId::Parity,
            if full {
                vec![
                    Sweep::new(&[1], &[1, 2, 3, 4], 10..=28),
                    Sweep::new(&[2], &[1, 2, 3], 30..=40),
                    Sweep::new(&[3], &[1, 2], 68..=70),
                ]
            } else {
                vec![
                    Sweep::new(&[1], &[1, 2, 3], 10..=20),
                    Sweep::new(&[2], &[1, 2], 30..=34),
                ]
            },
        )
        .with_reported(vec![Sweep::new(&[1], &[1], 5..=5)]),
        ClaimSpec::new(
            ClaimId::TribMultiplayer,
            vec![Sweep::new(&[1], &[2], 7..=pick(16, 22)).seats(if full {
                &[3, 4, 5, 6, 7]
            } else {
                &[3, 4, 5]
            })],
        )
        .with_reported(vec![Sweep::new(&[1], &[2], 3..=6).seats(&[3])]),
        ClaimSpec::new(
            ClaimId::MultiplayerGeneral,
            if full {
                vec![
                    Sweep::new(&[1], &[1, 2], 12..=24).seats(&[3, 4, 5]),
                    Sweep::new(&[2], &[1, 2], 27..=30).seats(&[4, 5]),
                ]
            } else {
                vec![Sweep::new(&[1], &[1], 12..=18).seats(&[3])]
            },
        )
        .with_reported(vec![Sweep::new(&[1], &[1], 5..=11).seats(&[3])]),
        ClaimSpec::new(
            ClaimId::MistakeDepth,
            if full {
                vec![
                    Sweep::new(&[1], &[2], 10..=24),
                    Sweep::new(&[1], &[3, 4], 10..=20),
                    Sweep::new(&[2], &[2, 3], 30..=36),
                ]
            } else {
                vec![
                    Sweep::new(&[1], &[2], 10..=16),
                    Sweep::new(&[1], &[3], 10..=14),
                    Sweep::new(&[2], &[2], 30..=32),
                ]
            },
        )
        .with_reported(vec![Sweep::new(&[1], &[1], 10..=14)]),
        ClaimSpec::new(
            ClaimId::TeamNoWinner,
            vec![Sweep::new(&[1], &[1, 2], 16..=pick(20, 30)).seats(&[3])],
        )
        .with_reported(vec![Sweep::new(&[1], &[1, 2], 10..=15).seats(&[3])]),
        ClaimSpec::new(
            ClaimId::TeamNoWinnerLemma,
            vec![Sweep::new(&[1], &[1, 2], 36..=pick(37, 40)).seats(&[3])],
        )
        .with_reported(vec![Sweep::new(&[1], &[1, 2], 16..=35).seats(&[3])]),
        ClaimSpec::new(
            ClaimId::TeamLargeWins,
            if full {
                vec![Sweep::new(&[1], &[1, 2], 36..=38).arrangements(&[
                    "AAAABB", "AABBAA", "AABAAB", "AAABAAB", "AAAAABB", "AAAAAABB", "AAAABAAB",
                ])]
            } else {
                vec![Sweep::new(&[1], &[1], 36..=36).arrangements(&[
                    "AAAABB", "AABBAA", "AABAAB", "AAAAABB",
                ])]
            },
        ),
    ]
}

pub fn claim(profile: Profile, id: ClaimId) -> ClaimSpec {
    claims(profile)
        .into_iter()
        .find(|c| c.id == id)
        .expect("every id is registered")
}

/// Run every registered claim. Claims run concurrently; results come back
/// in registration order.
pub fn run_all(profile: &str) -> Result<Vec<ClaimResult>, HarnessError> {
    let profile: Profile = profile.parse()?;
    let specs = claims(profile);
    for spec in &specs {
        validate(spec)?;
    }
    let solver = Solver::default();
    specs.par_iter().map(|s| run_claim(&solver, s)).collect()
}

/// Human-readable report.
pub fn render_text(results: &[ClaimResult]) -> String {
    render(results, false)
}

/// Like [`render_text`], with one line per asserted instance as well.
pub fn render_text_verbose(results: &[ClaimResult]) -> String {
    render(results, true)
}

fn render(results: &[ClaimResult], verbose: bool) -> String {
    let mut out = String::new();
    for r in results {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "[{status}] {} ({}): {} instances, {} failures",
            r.id,
            r.source,
            r.instances,
            r.failures.len()
        )
        .unwrap();
        for f in &r.failures {
            writeln!(out, "    {}: expected {}, got {}", f.instance, f.expected, f.got).unwrap();
            for line in f.transcript.lines() {
                writeln!(out, "        {line}").unwrap();
            }
        }
        if verbose {
            for o in &r.observed {
                writeln!(out, "    {}: {}", o.instance, o.outcome).unwrap();
            }
        }
        if !r.reported.is_empty() {
            writeln!(out, "    reported (not asserted):").unwrap();
            for o in &r.reported {
                writeln!(out, "        {}: {}", o.instance, o.outcome).unwrap();
            }
        }
    }
    out
}

impl Player {
    pub fn name(self) -> &'static str {
        match self {
            Player::P1 => "P1",
            Player::P2 => "P2",
        }
    }
}
