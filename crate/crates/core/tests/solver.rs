mod common;

use common::{params, reachable};
use zeckgame::solver::{oracle_limit, Keying};
use zeckgame::{
    apply_move, decompose_greedy, initial_state, is_terminal, mistake_depth, optimal_line,
    solve_focal, solve_naive_oracle, solve_two_player, winners_all, Move, Player, SolveError,
    Solver, TurnModel,
};

fn winner_names(c: u32, k: u32, n: u32) -> Vec<String> {
    solve_two_player(params(c, k), n).unwrap().winner_names()
}

#[test]
fn two_player_examples() {
    assert_eq!(winner_names(1, 1, 5), ["P2"]);
    assert_eq!(winner_names(1, 2, 10), ["P2"]);
    assert_eq!(winner_names(2, 1, 30), ["P1"]);
    assert!(winner_names(1, 1, 1).is_empty());
    assert_eq!(winner_names(1, 1, 2), ["P1"]);
}

#[test]
fn determinacy() {
    for c in 1..=3 {
        for k in 1..=3 {
            for n in 1..=30 {
                let report = solve_two_player(params(c, k), n).unwrap();
                let expect = if n > c { 1 } else { 0 };
                assert_eq!(report.winners.len(), expect, "c={c} k={k} n={n}");
            }
        }
    }
}

#[test]
fn focal_examples() {
    let p = params(1, 2);
    let model = TurnModel::singletons(3).unwrap();
    for focal in ["P1", "P2", "P3"] {
        let m = model.clone().with_focal(focal).unwrap();
        assert!(solve_focal(p, 7, &m).unwrap().winners.is_empty(), "{focal}");
    }
    assert!(winners_all(params(1, 1), 12, &model).unwrap().winners.is_empty());
    assert!(matches!(
        solve_focal(p, 7, &model),
        Err(SolveError::Config(_))
    ));
}

#[test]
fn a_lone_team_always_wins() {
    for c in 1..=2 {
        for k in 1..=2 {
            for seating in ["A", "AA", "AAA"] {
                let model = TurnModel::from_seating(seating).unwrap();
                for n in c + 1..=12 {
                    let r = winners_all(params(c, k), n, &model).unwrap();
                    assert_eq!(r.winner_names(), ["A"], "{seating} c={c} k={k} n={n}");
                }
                let r = winners_all(params(c, k), c, &model).unwrap();
                assert!(r.winners.is_empty(), "terminal root has no winner");
            }
        }
    }
}

#[test]
fn winners_all_examples() {
    let model = TurnModel::from_seating("AABBCC").unwrap();
    assert!(winners_all(params(1, 1), 16, &model).unwrap().winners.is_empty());
    let model = TurnModel::from_seating("AAAABB").unwrap();
    assert_eq!(winners_all(params(1, 1), 36, &model).unwrap().winner_names(), ["A"]);
    let r = winners_all(params(1, 1), 5, &TurnModel::two_player()).unwrap();
    assert_eq!(r.winner_names(), ["P2"]);
}

#[test]
fn oracle_agrees_with_memoized_solvers() {
    for c in 1..=2 {
        for k in 1..=3 {
            let p = params(c, k);
            for n in 1..=12 {
                let naive = solve_naive_oracle(p, n, &TurnModel::two_player()).unwrap();
                let fast = solve_two_player(p, n).unwrap();
                assert_eq!(naive.winners, fast.winners, "two-player {p} n={n}");
                for players in [2, 3] {
                    let model = TurnModel::singletons(players).unwrap();
                    let naive = solve_naive_oracle(p, n, &model).unwrap();
                    let fast = winners_all(p, n, &model).unwrap();
                    assert_eq!(naive.winners, fast.winners, "{p} p={players} n={n}");
                    for focal in 0..players {
                        let m = model.clone().with_focal_index(focal).unwrap();
                        let a = solve_naive_oracle(p, n, &m).unwrap();
                        let b = solve_focal(p, n, &m).unwrap();
                        assert_eq!(a.winners, b.winners, "{p} p={players} n={n} focal={focal}");
                    }
                }
            }
        }
    }
}

#[test]
fn oracle_agrees_on_team_games() {
    let p = params(1, 1);
    for seating in ["AAB", "ABB", "AABB", "ABAB", "AABBCC"] {
        let model = TurnModel::from_seating(seating).unwrap();
        for n in 1..=12 {
            let naive = solve_naive_oracle(p, n, &model).unwrap();
            let fast = winners_all(p, n, &model).unwrap();
            assert_eq!(naive.winners, fast.winners, "{seating} n={n}");
        }
    }
}

#[test]
fn oracle_refuses_large_games() {
    assert_eq!(oracle_limit(params(1, 3)), 18);
    assert_eq!(oracle_limit(params(2, 1)), 21);
    let err = solve_naive_oracle(params(1, 1), 19, &TurnModel::two_player()).unwrap_err();
    assert_eq!(err, SolveError::OracleScale { n: 19, limit: 18 });
    assert_eq!(err.to_string(), "oracle scale exceeded: n = 19 > 18");
    let r = solve_naive_oracle(params(1, 1), 2, &TurnModel::two_player()).unwrap();
    assert_eq!(r.winner_names(), ["P1"]);
}

#[test]
fn rotating_the_seats_rotates_the_answer() {
    let solver = Solver::default();
    for (c, k) in [(1, 1), (1, 2), (2, 1)] {
        let p = params(c, k);
        for players in [3usize, 4] {
            let model = TurnModel::singletons(players).unwrap();
            for n in [8u32, 11] {
                let states: Vec<_> = reachable(p, n).into_iter().take(25).collect();
                for s in &states {
                    for mover in 0..players {
                        for focal in 0..players {
                            let a = solver.focal_value_at(p, &model, s, mover, focal);
                            let b = solver.focal_value_at(
                                p,
                                &model,
                                s,
                                (mover + 1) % players,
                                (focal + 1) % players,
                            );
                            assert_eq!(a, b, "{p} {s} mover={mover} focal={focal}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn parallel_runs_match_the_single_worker_run() {
    let single = Solver::default();
    let multi = Solver::with_workers(4);
    for (c, k, n) in [(1, 1, 30), (1, 2, 25), (2, 2, 31)] {
        let a = single.solve_two_player(params(c, k), n).unwrap();
        let b = multi.solve_two_player(params(c, k), n).unwrap();
        assert_eq!(a.to_record(false), b.to_record(false));
        assert_eq!(a.policy, b.policy);
    }
    for seating in ["AAAABB", "AABBCC"] {
        let model = TurnModel::from_seating(seating).unwrap();
        let a = single.winners_all(params(1, 1), 24, &model).unwrap();
        let b = multi.winners_all(params(1, 1), 24, &model).unwrap();
        assert_eq!(a.to_record(false), b.to_record(false));
    }
    let model = TurnModel::singletons(3).unwrap();
    let a = single.winners_all(params(1, 2), 14, &model).unwrap();
    let b = multi.winners_all(params(1, 2), 14, &model).unwrap();
    assert_eq!(a.to_record(false), b.to_record(false));
    // Repeated runs are identical too.
    let again = single.winners_all(params(1, 2), 14, &model).unwrap();
    assert_eq!(a.to_record(false), again.to_record(false));
}

#[test]
fn states_visited_counts_the_reachable_graph() {
    for (c, k, n) in [(1, 1, 20), (1, 2, 16), (2, 1, 30)] {
        let r = solve_two_player(params(c, k), n).unwrap();
        assert_eq!(r.states_visited, reachable(params(c, k), n).len());
    }
}

#[test]
fn mistake_depth_examples() {
    let m = mistake_depth(params(1, 2), 12).unwrap();
    assert_eq!((m.winner, m.mistake_turn), (Player::P2, Some(2)));
    let m = mistake_depth(params(2, 2), 30).unwrap();
    assert_eq!((m.winner, m.mistake_turn), (Player::P1, Some(3)));
    assert_eq!(mistake_depth(params(1, 3), 12).unwrap().mistake_turn, Some(2));
    assert_eq!(mistake_depth(params(1, 1), 1), Err(SolveError::NoWinner));
    // n = 2: one forced move, nothing to get wrong.
    let m = mistake_depth(params(1, 1), 2).unwrap();
    assert_eq!((m.winner, m.mistake_turn), (Player::P1, None));
}

#[test]
fn optimal_line_examples() {
    assert_eq!(
        optimal_line(params(1, 1), 3).unwrap(),
        vec![Move::carry(1), Move::combine(2)]
    );
    assert_eq!(optimal_line(params(1, 1), 2).unwrap(), vec![Move::carry(1)]);
    assert!(optimal_line(params(1, 1), 1).unwrap().is_empty());
}

#[test]
fn optimal_lines_end_at_the_decomposition_with_the_winner_moving_last() {
    let cases = [
        (1, 1, 17),
        (1, 2, 23),
        (1, 3, 9),
        (2, 1, 31),
        (2, 2, 19),
        (3, 1, 40),
        (1, 1, 40),
        (2, 3, 12),
        (3, 3, 25),
        (1, 2, 6),
        (1, 4, 15),
        (2, 1, 7),
        (1, 1, 8),
        (3, 2, 33),
        (1, 3, 28),
        (2, 2, 34),
        (4, 1, 20),
        (1, 2, 30),
        (2, 4, 26),
        (1, 1, 29),
    ];
    for (c, k, n) in cases {
        let p = params(c, k);
        let line = optimal_line(p, n).unwrap();
        let mut s = initial_state(n);
        for mv in &line {
            s = apply_move(p, &s, *mv).unwrap();
        }
        assert!(is_terminal(p, &s));
        assert_eq!(s, decompose_greedy(p, n as u64).unwrap());
        let winner = solve_two_player(p, n).unwrap().winner_names();
        let last = if line.len() % 2 == 1 { "P1" } else { "P2" };
        assert_eq!(winner, [last], "{p} n={n}");
    }
}

#[test]
fn policy_keys_follow_the_mode() {
    let r = solve_two_player(params(1, 2), 12).unwrap();
    let policy = r.policy.unwrap();
    assert_eq!(policy.keying(), Keying::Mover);
    assert_eq!(policy.len(), r.states_visited - 1, "every non-terminal state");
    let r = winners_all(params(1, 1), 36, &TurnModel::from_seating("AAAABB").unwrap()).unwrap();
    assert_eq!(r.policy.unwrap().keying(), Keying::Seat);
    let r = winners_all(params(1, 1), 5, &TurnModel::singletons(2).unwrap()).unwrap();
    assert_eq!(r.policy.unwrap().keying(), Keying::Offset);
    let r = winners_all(params(1, 2), 9, &TurnModel::singletons(3).unwrap()).unwrap();
    assert!(r.policy.is_none(), "no winner, no policy");
    assert_eq!(r.to_record(false).policy_digest, None);
}
