//! Interactive play against solved policies.

use std::fmt::Write as _;
use std::io::{self, BufRead, Write};

use zeckgame::solver::{FocalTable, TwoPlayerTable};
use zeckgame::{
    apply_move, initial_state, legal_moves, GameParams, GameState, Move, Sequence64, SolveError,
    Solver, TurnModel, Wedge,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Controller {
    Human,
    Engine,
}

/// `H`/`E` per seat, e.g. `HE`.
pub fn parse_controllers(text: &str, seats: usize) -> Result<Vec<Controller>, String> {
    let list: Vec<Controller> = text
        .chars()
        .map(|ch| match ch.to_ascii_uppercase() {
            'H' => Ok(Controller::Human),
            'E' => Ok(Controller::Engine),
            other => Err(format!("controller {other:?} is not H or E")),
        })
        .collect::<Result<_, _>>()?;
    if list.len() != seats {
        return Err(format!("{} controllers given for {seats} seats", list.len()));
    }
    Ok(list)
}

enum Brain {
    TwoPlayer(TwoPlayerTable),
    /// One maximin table per team that has an engine seat.
    Teams(Vec<Option<FocalTable>>),
}

pub struct PlaySession {
    params: GameParams,
    model: TurnModel,
    controllers: Vec<Controller>,
    state: GameState,
    turn: u64,
    seq: Sequence64,
    wedge: Wedge,
    history: Vec<Move>,
    transcript: String,
    brain: Brain,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SessionEnd {
    /// False when input ran out or the player quit.
    pub finished: bool,
    pub moves: Vec<Move>,
    pub final_state: GameState,
    pub last_seat: Option<usize>,
    pub winner: Option<String>,
    pub transcript: String,
}

impl PlaySession {
    /// Solves everything the engine seats need before the first move.
    pub fn new(
        params: GameParams,
        n: u32,
        model: TurnModel,
        controllers: Vec<Controller>,
        wedge: Wedge,
        solver: &Solver,
    ) -> Result<Self, SolveError> {
        let brain = if model.players() == 2 && model.is_singleton() {
            Brain::TwoPlayer(solver.two_player_table(params, n)?)
        } else {
            let mut tables = Vec::new();
            for team in 0..model.team_count() {
                let needed = model
                    .team_of()
                    .iter()
                    .zip(&controllers)
                    .any(|(&t, &c)| t == team && c == Controller::Engine);
                tables.push(if needed {
                    Some(solver.focal_table_for(params, n, &model, team)?)
                } else {
                    None
                });
            }
            Brain::Teams(tables)
        };
        Ok(PlaySession {
            params,
            state: initial_state(n),
            seq: Sequence64::generate(params, n as u64)?,
            model,
            controllers,
            turn: 1,
            wedge,
            history: Vec::new(),
            transcript: String::new(),
            brain,
        })
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }

    /// 1-based seat on move.
    pub fn seat(&self) -> usize {
        self.model.seat_of_turn(self.turn)
    }

    fn seat_label(&self, seat: usize) -> String {
        let team = self.model.team_name(self.model.team_of_seat(seat));
        if self.model.is_singleton() {
            team.to_string()
        } else {
            format!("P{seat} (team {team})")
        }
    }

    fn engine_move(&self, moves: &[Move]) -> Move {
        let seat0 = self.seat() - 1;
        match &self.brain {
            Brain::TwoPlayer(table) => table.best_move(&self.state).unwrap_or(moves[0]),
            Brain::Teams(tables) => {
                let team = self.model.team_of()[seat0];
                let next_seat = (seat0 + 1) % self.model.players();
                let table = tables[team].as_ref().expect("engine team was solved");
                moves
                    .iter()
                    .copied()
                    .find(|&mv| {
                        let child = apply_move(self.params, &self.state, mv).unwrap();
                        table.value(&child, next_seat, team) == Some(true)
                    })
                    .unwrap_or(moves[0])
            }
        }
    }

    fn describe(&self, mv: Move) -> String {
        mv.describe(self.params, &self.seq, self.wedge)
    }

    fn play(&mut self, mv: Move) {
        let seat = self.seat();
        let desc = self.describe(mv);
        self.state = apply_move(self.params, &self.state, mv).expect("listed move applies");
        writeln!(
            self.transcript,
            "{}. {} {mv} {desc} => {}",
            self.turn,
            self.seat_label(seat),
            self.state.encode()
        )
        .unwrap();
        self.history.push(mv);
        self.turn += 1;
    }

    fn end(&self, finished: bool) -> SessionEnd {
        let last_seat = (!self.history.is_empty()).then(|| self.model.seat_of_turn(self.turn - 1));
        SessionEnd {
            finished,
            moves: self.history.clone(),
            final_state: self.state.clone(),
            last_seat,
            winner: last_seat
                .filter(|_| finished)
                .map(|s| self.model.team_name(self.model.team_of_seat(s)).to_string()),
            transcript: self.transcript.clone(),
        }
    }

    pub fn run<R: BufRead, W: Write + ?Sized>(&mut self, mut input: R, out: &mut W) -> io::Result<SessionEnd> {
        loop {
            let moves = legal_moves(self.params, &self.state);
            if moves.is_empty() {
                let end = self.end(true);
                match (end.last_seat, &end.winner) {
                    (Some(seat), Some(_)) => writeln!(
                        out,
                        "Game over at {{{}}} after {} moves: {} made the last move and wins.",
                        self.state.wedge(&self.seq, self.wedge),
                        self.history.len(),
                        self.seat_label(seat)
                    )?,
                    _ => writeln!(out, "No moves available: the game has no winner.")?,
                }
                return Ok(end);
            }
            let seat = self.seat();
            match self.controllers[seat - 1] {
                Controller::Engine => {
                    let mv = self.engine_move(&moves);
                    writeln!(
                        out,
                        "Turn {}: {} (engine) plays {}",
                        self.turn,
                        self.seat_label(seat),
                        self.describe(mv)
                    )?;
                    self.play(mv);
                }
                Controller::Human => {
                    writeln!(
                        out,
                        "Turn {}: {} to move. State {{{}}} [{}]",
                        self.turn,
                        self.seat_label(seat),
                        self.state.wedge(&self.seq, self.wedge),
                        self.state.encode()
                    )?;
                    for (i, mv) in moves.iter().enumerate() {
                        writeln!(out, "  {}) {}  [{mv}]", i + 1, self.describe(*mv))?;
                    }
                    loop {
                        write!(out, "> ")?;
                        out.flush()?;
                        let mut line = String::new();
                        if input.read_line(&mut line)? == 0 {
                            writeln!(out, "\nInput closed; session aborted.")?;
                            return Ok(self.end(false));
                        }
                        let line = line.trim();
                        if line == "q" || line == "quit" {
                            writeln!(out, "Session aborted.")?;
                            return Ok(self.end(false));
                        }
                        match line.parse::<usize>() {
                            Ok(i) if (1..=moves.len()).contains(&i) => {
                                self.play(moves[i - 1]);
                                break;
                            }
                            _ => writeln!(out, "Invalid selection {line:?}; enter 1..{} or q.", moves.len())?,
                        }
                    }
                }
            }
        }
    }
}
