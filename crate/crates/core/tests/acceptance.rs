//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs as a plain binary so the lines are always printed.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{fibonacci_moves, params, reachable, states_of_value, terminals};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeckgame::harness::{
    claims, run_claim, validate, ClaimId, ClaimResult, ClaimSpec, Profile, Sweep,
};
use zeckgame::{
    apply_move, decompose_greedy, initial_state, legal_moves, monovariant_rank, solve_focal,
    solve_naive_oracle, GameState, Move, Sequence64, Solver, TurnModel,
};

type Check = Result<String, String>;

fn claim_passes(spec: ClaimSpec) -> Result<ClaimResult, String> {
    let result = run_claim(&Solver::default(), &spec).map_err(|e| e.to_string())?;
    if result.passed() {
        Ok(result)
    } else {
        let f = &result.failures[0];
        Err(format!(
            "{} of {} instances failed; first: {} expected {}, got {}",
            result.failures.len(),
            result.instances,
            f.instance,
            f.expected,
            f.got
        ))
    }
}

fn expect_instances(result: &ClaimResult, want: usize) -> Result<(), String> {
    if result.instances == want {
        Ok(())
    } else {
        Err(format!("ran {} instances, expected {want}", result.instances))
    }
}

fn fibonacci_two_player() -> Check {
    let r = claim_passes(ClaimSpec::new(
        ClaimId::FibTwoPlayer,
        vec![Sweep::new(&[1], &[1], 1..=40)],
    ))?;
    expect_instances(&r, 40)?;
    Ok("n=1 none, n=2 P1, n=3..40 P2".into())
}

fn tribonacci_two_player() -> Check {
    let spec = ClaimSpec::new(ClaimId::TribTwoPlayer, vec![Sweep::new(&[1], &[2], 10..=30)])
        .with_reported(vec![Sweep::new(&[1], &[2], 1..=9)]);
    let a = claim_passes(spec.clone())?;
    let b = claim_passes(spec)?;
    expect_instances(&a, 21)?;
    if a.reported != b.reported {
        return Err("n <= 9 table differs between runs".into());
    }
    let table: Vec<String> = a
        .reported
        .iter()
        .map(|o| format!("{}:{}", o.instance.n, o.outcome))
        .collect();
    Ok(format!("P2 for n=10..30; n<=9 table {}", table.join(" ")))
}

fn multiplayer_tribonacci() -> Check {
    let r = claim_passes(ClaimSpec::new(
        ClaimId::TribMultiplayer,
        vec![Sweep::new(&[1], &[2], 7..=16).seats(&[3, 4, 5])],
    ))?;
    expect_instances(&r, 30)?;
    Ok("no winner for p in {3,4,5}, n=7..16".into())
}

fn two_player_parity() -> Check {
    let r = claim_passes(ClaimSpec::new(
        ClaimId::Parity,
        vec![
            Sweep::new(&[1], &[1, 2, 3], 10..=20),
            Sweep::new(&[2], &[1, 2], 30..=34),
        ],
    ))?;
    expect_instances(&r, 33 + 10)?;
    Ok("c=1 -> P2 (k=1..3, n=10..20); c=2 -> P1 (k=1,2, n=30..34)".into())
}

fn mistake_depth() -> Check {
    let r = claim_passes(ClaimSpec::new(
        ClaimId::MistakeDepth,
        vec![
            Sweep::new(&[1], &[2], 10..=16),
            Sweep::new(&[1], &[3], 10..=14),
            Sweep::new(&[2], &[2], 30..=32),
        ],
    ))?;
    expect_instances(&r, 7 + 5 + 3)?;
    Ok("depth c+1 on all 15 instances".into())
}

fn multiplayer_general() -> Check {
    let r = claim_passes(ClaimSpec::new(
        ClaimId::MultiplayerGeneral,
        vec![Sweep::new(&[1], &[1], 12..=18).seats(&[3])],
    ))?;
    expect_instances(&r, 7)?;
    Ok("no winner for (1,1), p=3, n=12..18".into())
}

fn team_no_winner() -> Check {
    let stated = ClaimSpec::new(
        ClaimId::TeamNoWinner,
        vec![Sweep::new(&[1], &[1, 2], 16..=20).seats(&[3])],
    );
    let r = claim_passes(stated.clone())?;
    expect_instances(&r, 10)?;
    let lemma = claims(Profile::Quick)
        .into_iter()
        .find(|c| c.id == ClaimId::TeamNoWinnerLemma)
        .unwrap();
    // The lemma profile sits inside the stated hypothesis region.
    let as_stated = ClaimSpec::new(ClaimId::TeamNoWinner, lemma.sweeps.clone());
    validate(&as_stated).map_err(|e| format!("lemma profile outside stated bound: {e}"))?;
    let l = claim_passes(lemma)?;
    Ok(format!(
        "AABBCC, k=1,2, n=16..20 no team; lemma profile {} instances pass",
        l.instances
    ))
}

fn team_large_wins() -> Check {
    let r = claim_passes(ClaimSpec::new(
        ClaimId::TeamLargeWins,
        vec![Sweep::new(&[1], &[1], 36..=36).arrangements(&["AAAABB", "AABBAA", "AAAAABB"])],
    ))?;
    expect_instances(&r, 3)?;
    Ok("larger team wins AAAABB, AABBAA, AAAAABB at n=36".into())
}

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn property_suite() -> Check {
    let mut checked_moves = 0usize;
    for c in 1..=2 {
        for k in 1..=2 {
            let p = params(c, k);
            let seq = Sequence64::with_len(p, 16).unwrap();
            for v in 1..=25u64 {
                for s in states_of_value(p, v) {
                    let before = monovariant_rank(&s);
                    for mv in legal_moves(p, &s) {
                        let t = apply_move(p, &s, mv).map_err(|e| e.to_string())?;
                        ensure(t.value(&seq) == Some(v), || format!("value changed: {p} {s} {mv}"))?;
                        ensure(monovariant_rank(&t) < before, || format!("rank did not drop: {p} {s} {mv}"))?;
                        checked_moves += 1;
                    }
                }
            }
            for n in 1..=25u32 {
                let ends = terminals(p, &reachable(p, n));
                let greedy = decompose_greedy(p, n as u64).unwrap();
                ensure(ends == BTreeSet::from([greedy]), || format!("confluence: {p} n={n}"))?;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..10_000 {
        let p = params(rng.gen_range(1..=2), rng.gen_range(1..=2));
        let n = rng.gen_range(1..=60u32);
        let mut s = initial_state(n);
        while let Some(&mv) = legal_moves(p, &s).choose(&mut rng) {
            s = apply_move(p, &s, mv).unwrap();
        }
        ensure(s == decompose_greedy(p, n as u64).unwrap(), || format!("playout: {p} n={n}"))?;
    }

    let fib = params(1, 1);
    for v in 1..=30 {
        for s in states_of_value(fib, v) {
            let mut engine: Vec<(Move, GameState)> = legal_moves(fib, &s)
                .into_iter()
                .map(|mv| (mv, apply_move(fib, &s, mv).unwrap()))
                .collect();
            engine.sort();
            ensure(engine == fibonacci_moves(&s), || format!("fibonacci moves differ at {s}"))?;
        }
    }

    // Oracle equivalence; winners_all asserts |winners| <= 1 internally.
    let solver = Solver::default();
    let mut solves = 0;
    for c in 1..=2 {
        for k in 1..=3 {
            let p = params(c, k);
            for n in 1..=12 {
                let two = solver.solve_two_player(p, n).map_err(|e| e.to_string())?;
                let naive = solve_naive_oracle(p, n, &TurnModel::two_player()).unwrap();
                ensure(two.winners == naive.winners, || format!("two-player oracle {p} n={n}"))?;
                ensure(two.winners.len() <= 1, || "two winners".into())?;
                for players in [2, 3] {
                    let model = TurnModel::singletons(players).unwrap();
                    for focal in 0..players {
                        let m = model.clone().with_focal_index(focal).unwrap();
                        let a = solve_focal(p, n, &m).map_err(|e| e.to_string())?;
                        let b = solve_naive_oracle(p, n, &m).unwrap();
                        ensure(a.winners == b.winners, || format!("focal oracle {p} p={players} n={n} focal={focal}"))?;
                        solves += 1;
                    }
                    let all = solver.winners_all(p, n, &model).map_err(|e| e.to_string())?;
                    ensure(all.winners.len() <= 1, || "two winners".into())?;
                }
            }
        }
    }

    // Determinism across repeated and parallel runs.
    let parallel = Solver::with_workers(4);
    for (c, k, n, seating) in [(1, 2, 30, "AB"), (1, 1, 36, "AAAABB"), (1, 2, 16, "ABC")] {
        let model = TurnModel::from_seating(seating).unwrap();
        let a = solver.winners_all(params(c, k), n, &model).unwrap().to_record(false);
        let b = solver.winners_all(params(c, k), n, &model).unwrap().to_record(false);
        let d = parallel.winners_all(params(c, k), n, &model).unwrap().to_record(false);
        ensure(a == b && a == d, || format!("nondeterministic report for {seating} n={n}"))?;
    }

    Ok(format!(
        "{checked_moves} moves conserve value and drop the rank; confluence, 10000 playouts, fibonacci rules, {solves} oracle checks, determinism"
    ))
}

fn refuses_out_of_bound_instances() -> Check {
    let below = [
        ClaimSpec::new(ClaimId::TribTwoPlayer, vec![Sweep::new(&[1], &[2], 9..=12)]),
        ClaimSpec::new(ClaimId::Parity, vec![Sweep::new(&[1], &[1], 9..=12)]),
        ClaimSpec::new(ClaimId::Parity, vec![Sweep::new(&[2], &[1], 29..=31)]),
        ClaimSpec::new(ClaimId::TribMultiplayer, vec![Sweep::new(&[1], &[2], 6..=8).seats(&[3])]),
        ClaimSpec::new(ClaimId::MultiplayerGeneral, vec![Sweep::new(&[1], &[1], 11..=12).seats(&[3])]),
        ClaimSpec::new(ClaimId::MultiplayerGeneral, vec![Sweep::new(&[1], &[1], 12..=12).seats(&[2])]),
        ClaimSpec::new(ClaimId::MistakeDepth, vec![Sweep::new(&[1], &[1], 10..=12)]),
        ClaimSpec::new(ClaimId::MistakeDepth, vec![Sweep::new(&[2], &[2], 29..=30)]),
        ClaimSpec::new(ClaimId::TeamNoWinner, vec![Sweep::new(&[1], &[1], 15..=16).seats(&[3])]),
        ClaimSpec::new(ClaimId::TeamNoWinnerLemma, vec![Sweep::new(&[1], &[1], 35..=36).seats(&[3])]),
        ClaimSpec::new(ClaimId::TeamLargeWins, vec![Sweep::new(&[1], &[1], 35..=36).arrangements(&["AAAABB"])]),
    ];
    for spec in &below {
        if validate(spec).is_ok() {
            return Err(format!("{} accepted {:?}", spec.id, spec.sweeps));
        }
        if run_claim(&Solver::default(), spec).is_ok() {
            return Err(format!("{} ran out-of-bound instances", spec.id));
        }
    }
    for profile in [Profile::Quick, Profile::Full] {
        for spec in claims(profile) {
            validate(&spec).map_err(|e| e.to_string())?;
        }
    }
    Ok(format!("{} out-of-bound sweeps refused; registered claims in bounds", below.len()))
}

type Criterion = (&'static str, Duration, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 fibonacci two-player", Duration::from_secs(30), fibonacci_two_player),
        ("2 tribonacci two-player", Duration::from_secs(60), tribonacci_two_player),
        ("3 multiplayer tribonacci", Duration::from_secs(300), multiplayer_tribonacci),
        ("4 two-player parity", Duration::from_secs(300), two_player_parity),
        ("5 mistake depth", Duration::from_secs(300), mistake_depth),
        ("6 multiplayer general", Duration::from_secs(120), multiplayer_general),
        ("7 team no-winner", Duration::from_secs(600), team_no_winner),
        ("8 team large-wins", Duration::from_secs(900), team_large_wins),
        ("9 property suite", Duration::from_secs(600), property_suite),
        ("10 bounded assertions only", Duration::from_secs(60), refuses_out_of_bound_instances),
    ];
    let mut failed = 0;
    for (name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}; took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({:.2}s): {detail}", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name} ({:.2}s): {why}", elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
