//! Command implementations behind the `zgame` binary.

pub mod cache;
pub mod dot;
pub mod play;

use std::io::{BufRead, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use zeckgame::harness::{self, ClaimId, ClaimSpec, Profile};
use zeckgame::{
    decompose_greedy, generate_terms, legal_moves, GameParams, GameState, Sequence64, Solver,
    TurnModel, Wedge,
};

use cache::{Cache, CacheKey, CacheRecord, CACHE_ENV};
use dot::DotOptions;
use play::{parse_controllers, PlaySession};

#[derive(Debug, Parser)]
#[command(name = "zgame", version, about = "Solve and play the generalized Zeckendorf game")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the sequence terms up to a bound, plus the first term above it.
    Seq {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        bound: u64,
    },
    /// Greedy decomposition of n, in canonical encoding.
    Decompose {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u64,
    },
    /// List the legal moves at a canonically encoded state.
    Moves {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        state: String,
        #[arg(long)]
        unicode: bool,
    },
    /// Solve a game and print the JSON report.
    Solve {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        seats: SeatArgs,
        /// Only ask whether this team (or player, e.g. P1) can force a win.
        #[arg(long)]
        focal: Option<String>,
        #[arg(long, env = CACHE_ENV)]
        cache: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Run a claim (or `all`) over its registered sweep.
    Verify {
        claim: String,
        #[arg(long, default_value = "quick")]
        profile: String,
        /// Replace the sweep's c values (single claim only).
        #[arg(long, value_delimiter = ',')]
        c: Vec<u32>,
        #[arg(long, value_delimiter = ',')]
        k: Vec<u32>,
        /// Inclusive range `a..b`, or a single n.
        #[arg(long)]
        n: Option<String>,
        /// Player counts for multiplayer claims, team counts for team claims.
        #[arg(long, value_delimiter = ',')]
        players: Vec<usize>,
        /// Seating strings for the large-team claim.
        #[arg(long, value_delimiter = ',')]
        teams: Vec<String>,
        /// Also write the results as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Print the outcome of every asserted instance.
        #[arg(long, short)]
        verbose: bool,
    },
    /// Write the two-player game tree as Graphviz DOT.
    ExportDot {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        /// Expand only the first `depth` turns.
        #[arg(long)]
        depth: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        unicode: bool,
    },
    /// Play in the terminal against the solved policy.
    Play {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        seats: SeatArgs,
        /// One letter per seat, H for human and E for engine (default: seat 1 human).
        #[arg(long)]
        controllers: Option<String>,
        #[arg(long)]
        unicode: bool,
        /// Print the move transcript when the session ends.
        #[arg(long)]
        transcript: bool,
    },
    /// Inspect or clear the solve cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
        #[arg(long, env = CACHE_ENV, global = true)]
        cache: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum CacheAction {
    Stats,
    Clear,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct ParamArgs {
    #[arg(long, default_value_t = 1)]
    pub c: u32,
    #[arg(long, default_value_t = 1)]
    pub k: u32,
}

impl ParamArgs {
    fn params(self) -> Result<GameParams> {
        Ok(GameParams::new(self.c, self.k)?)
    }
}

#[derive(Debug, Clone, Args)]
pub struct SeatArgs {
    #[arg(long)]
    pub players: Option<usize>,
    /// Seating string, one team letter per seat, e.g. AAAABB.
    #[arg(long)]
    pub teams: Option<String>,
}

impl SeatArgs {
    pub fn model(&self) -> Result<TurnModel> {
        match (&self.teams, self.players) {
            (Some(seating), players) => {
                let model = TurnModel::from_seating(seating)?;
                if let Some(p) = players {
                    if p != model.players() {
                        bail!(
                            "--players {p} does not match seating {seating:?} with {} seats",
                            model.players()
                        );
                    }
                }
                Ok(model)
            }
            (None, None) | (None, Some(2)) => Ok(TurnModel::two_player()),
            (None, Some(p)) => Ok(TurnModel::singletons(p)?),
        }
    }
}

fn wedge(unicode: bool) -> Wedge {
    if unicode {
        Wedge::Unicode
    } else {
        Wedge::Ascii
    }
}

/// Exit status of a successful dispatch.
pub type Status = i32;

pub fn run<R: BufRead>(cli: Cli, input: R, out: &mut dyn Write) -> Result<Status> {
    match cli.command {
        Command::Seq { params, bound } => {
            let terms = generate_terms(params.params()?, bound)?;
            let text: Vec<String> = terms.terms().iter().map(u64::to_string).collect();
            writeln!(out, "{}", text.join(" "))?;
        }
        Command::Decompose { params, n } => {
            let state = decompose_greedy(params.params()?, n)?;
            writeln!(out, "{}", state.encode())?;
        }
        Command::Moves { params, state, unicode } => {
            let params = params.params()?;
            let state: GameState = state.parse().map_err(|e| anyhow!("bad state: {e}"))?;
            let value = state.value_for(params).context("state value overflows")?;
            let seq = Sequence64::generate(params, value)?;
            for mv in legal_moves(params, &state) {
                writeln!(out, "{mv}\t{}", mv.describe(params, &seq, wedge(unicode)))?;
            }
        }
        Command::Solve {
            params,
            n,
            seats,
            focal,
            cache,
            workers,
        } => {
            let record = solve(params.params()?, n, &seats, focal, cache, workers)?;
            writeln!(out, "{}", serde_json::to_string(&record)?)?;
        }
        Command::Verify {
            claim,
            profile,
            c,
            k,
            n,
            players,
            teams,
            json,
            verbose,
        } => {
            let overrides = Overrides { c, k, n, players, teams };
            return verify(&claim, &profile, overrides, json, verbose, out);
        }
        Command::ExportDot {
            params,
            n,
            depth,
            out: path,
            unicode,
        } => {
            let table = Solver::default().two_player_table(params.params()?, n)?;
            let text = dot::render(
                &table,
                DotOptions {
                    depth,
                    wedge: wedge(unicode),
                },
            );
            match path {
                Some(path) => std::fs::write(&path, text)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Play {
            params,
            n,
            seats,
            controllers,
            unicode,
            transcript,
        } => {
            let model = seats.model()?;
            let p = model.players();
            let controllers = match controllers {
                Some(text) => parse_controllers(&text, p).map_err(|e| anyhow!(e))?,
                None => parse_controllers(&format!("H{}", "E".repeat(p - 1)), p).unwrap(),
            };
            let mut session =
                PlaySession::new(params.params()?, n, model, controllers, wedge(unicode), &Solver::default())?;
            let end = session.run(input, out)?;
            if transcript || !end.finished {
                writeln!(out, "Transcript:")?;
                out.write_all(end.transcript.as_bytes())?;
            }
            if !end.finished {
                return Ok(3);
            }
        }
        Command::Cache { action, cache } => {
            let path = cache.ok_or_else(|| anyhow!("no cache path: pass --cache or set {CACHE_ENV}"))?;
            let cache = Cache::new(path);
            match action {
                CacheAction::Stats => {
                    let records = cache.records()?;
                    let mut keys: Vec<String> = records.iter().map(|r| format!("{:?}", r.key())).collect();
                    keys.sort();
                    keys.dedup();
                    writeln!(out, "path: {}", cache.path().display())?;
                    writeln!(out, "records: {}", records.len())?;
                    writeln!(out, "distinct games: {}", keys.len())?;
                    if let Some(r) = records.iter().max_by_key(|r| r.timestamp) {
                        writeln!(out, "latest: {} n={} {} winners={:?}", r.params, r.n, serde_json::to_string(&r.mode)?.trim_matches('"'), r.winners)?;
                    }
                }
                CacheAction::Clear => {
                    let removed = cache.clear()?;
                    writeln!(out, "removed {removed} records from {}", cache.path().display())?;
                }
            }
        }
    }
    Ok(0)
}

pub fn solve(
    params: GameParams,
    n: u32,
    seats: &SeatArgs,
    focal: Option<String>,
    cache: Option<PathBuf>,
    workers: usize,
) -> Result<zeckgame::solver::ReportRecord> {
    let mut model = seats.model()?;
    if let Some(name) = &focal {
        model = model.with_focal(name)?;
    }
    let key = CacheKey {
        params,
        n,
        mode: model.mode(),
        p: model.players(),
        seating: model.seating(),
        focal: focal.clone(),
    };
    let cache = cache.map(Cache::new);
    if let Some(cache) = &cache {
        if let Some(hit) = cache.lookup(&key)? {
            return Ok(hit.to_report_record(true));
        }
    }
    let solver = Solver::with_workers(workers.max(1));
    let report = if focal.is_some() {
        solver.solve_focal(params, n, &model)?
    } else if model.players() == 2 && model.is_singleton() {
        solver.solve_two_player(params, n)?
    } else {
        solver.winners_all(params, n, &model)?
    };
    let record = CacheRecord::from_report(&report, focal);
    if let Some(cache) = &cache {
        cache.append(&record)?;
    }
    Ok(record.to_report_record(false))
}

#[derive(Debug, Default)]
pub struct Overrides {
    pub c: Vec<u32>,
    pub k: Vec<u32>,
    pub n: Option<String>,
    pub players: Vec<usize>,
    pub teams: Vec<String>,
}

impl Overrides {
    fn is_empty(&self) -> bool {
        self.c.is_empty() && self.k.is_empty() && self.n.is_none() && self.players.is_empty() && self.teams.is_empty()
    }

    /// Keep only the first sweep, with the given fields replaced. Reported sweeps are dropped.
    fn apply(&self, mut spec: ClaimSpec) -> Result<ClaimSpec> {
        let n = self.n.as_deref().map(parse_range).transpose()?;
        for sweep in &mut spec.sweeps {
            if !self.c.is_empty() {
                sweep.c = self.c.clone();
            }
            if !self.k.is_empty() {
                sweep.k = self.k.clone();
            }
            if let Some(n) = &n {
                sweep.n = n.clone();
            }
            if !self.players.is_empty() {
                sweep.seats = self.players.clone();
            }
            if !self.teams.is_empty() {
                sweep.arrangements = self.teams.clone();
            }
        }
        spec.sweeps.truncate(1);
        spec.reported.clear();
        Ok(spec)
    }
}

pub fn parse_range(text: &str) -> Result<RangeInclusive<u32>> {
    let parse = |s: &str| s.trim().parse::<u32>().with_context(|| format!("bad n range {text:?}"));
    match text.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(parse(a)?..=parse(b)?)
        }
        None => {
            let v = parse(text)?;
            Ok(v..=v)
        }
    }
}

pub fn verify(
    claim: &str,
    profile: &str,
    overrides: Overrides,
    json: Option<PathBuf>,
    verbose: bool,
    out: &mut dyn Write,
) -> Result<Status> {
    let results = if claim == "all" {
        if !overrides.is_empty() {
            bail!("range flags need a single claim id, not `all`");
        }
        harness::run_all(profile)?
    } else {
        let profile: Profile = profile.parse()?;
        let id: ClaimId = claim.parse()?;
        let mut spec = harness::claim(profile, id);
        if !overrides.is_empty() {
            spec = overrides.apply(spec)?;
        }
        harness::validate(&spec)?;
        vec![harness::run_claim(&Solver::default(), &spec)?]
    };
    let text = if verbose {
        harness::render_text_verbose(&results)
    } else {
        harness::render_text(&results)
    };
    write!(out, "{text}")?;
    if let Some(path) = json {
        let text = serde_json::to_string_pretty(&results)?;
        std::fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(status(&results))
}

/// 0 iff every claim passed.
pub fn status(results: &[harness::ClaimResult]) -> Status {
    if results.iter().all(|r| r.passed()) {
        0
    } else {
        1
    }
}
