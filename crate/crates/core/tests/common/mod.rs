#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use zeckgame::{apply_move, initial_state, legal_moves, GameParams, GameState, Move, Sequence64};

pub fn params(c: u32, k: u32) -> GameParams {
    GameParams::new(c, k).unwrap()
}

/// Every multiset of sequence terms with total value exactly `v`.
pub fn states_of_value(params: GameParams, v: u64) -> Vec<GameState> {
    let seq = Sequence64::generate(params, v).unwrap();
    let terms: Vec<u64> = seq.terms().iter().copied().filter(|&t| t <= v).collect();
    let mut out = Vec::new();
    let mut counts = vec![0u32; terms.len()];
    fill(&terms, terms.len(), v, &mut counts, &mut out);
    out
}

fn fill(terms: &[u64], upto: usize, rest: u64, counts: &mut Vec<u32>, out: &mut Vec<GameState>) {
    if rest == 0 {
        out.push(GameState::from_dense(counts.clone()));
        return;
    }
    if upto == 0 {
        return;
    }
    let idx = upto - 1;
    let t = terms[idx];
    let max = rest / t;
    for m in 0..=max {
        if idx == 0 && m != max {
            continue;
        }
        counts[idx] = m as u32;
        fill(terms, idx, rest - m * t, counts, out);
    }
    counts[idx] = 0;
}

/// Every state reachable from `initial_state(n)`, by brute-force search.
pub fn reachable(params: GameParams, n: u32) -> HashSet<GameState> {
    let mut seen = HashSet::new();
    let mut stack = vec![initial_state(n)];
    seen.insert(initial_state(n));
    while let Some(s) = stack.pop() {
        for mv in legal_moves(params, &s) {
            let t = apply_move(params, &s, mv).unwrap();
            if seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    seen
}

pub fn terminals(params: GameParams, set: &HashSet<GameState>) -> BTreeSet<GameState> {
    set.iter()
        .filter(|s| legal_moves(params, s).is_empty())
        .cloned()
        .collect()
}

/// The Fibonacci rules written out directly: pairs and neighbours.
pub fn fibonacci_moves(s: &GameState) -> Vec<(Move, GameState)> {
    let mut dense: Vec<u32> = (1..=s.max_index()).map(|i| s.count(i)).collect();
    dense.resize(dense.len() + 2, 0);
    let mut out = Vec::new();
    let edit = |changes: &[(usize, i64)]| {
        let mut d = dense.clone();
        for &(i, delta) in changes {
            d[i - 1] = (d[i - 1] as i64 + delta) as u32;
        }
        GameState::from_dense(d)
    };
    let top = s.max_index();
    for i in 1..=top {
        if dense[i - 1] >= 2 {
            let next = match i {
                1 => edit(&[(1, -2), (2, 1)]),
                2 => edit(&[(2, -2), (1, 1), (3, 1)]),
                _ => edit(&[(i, -2), (i - 2, 1), (i + 1, 1)]),
            };
            out.push((Move::carry(i), next));
        }
    }
    for i in 2..=top {
        if dense[i - 2] >= 1 && dense[i - 1] >= 1 {
            out.push((Move::combine(i), edit(&[(i - 1, -1), (i, -1), (i + 1, 1)])));
        }
    }
    out.sort();
    out
}

