//! Backward induction over the acyclic position graph.
//!
//! Every reachable node is evaluated (no short-circuiting), so the memo ends
//! up holding exactly the reachable set regardless of evaluation order or
//! worker count. That keeps `states_visited` and extracted policies identical
//! between single-worker and parallel runs.

use std::hash::Hash;

use dashmap::DashMap;
use rayon::prelude::*;

use crate::engine::{apply_move, legal_moves, GameState};
use crate::sequence::GameParams;

pub(crate) trait Rules: Sync {
    type Key: Clone + Eq + Hash + Send + Sync;

    /// Successor keys in move order; empty means terminal.
    fn children(&self, key: &Self::Key) -> Vec<Self::Key>;
    fn terminal_value(&self, key: &Self::Key) -> bool;
    /// Combine child values (all present, in move order).
    fn combine(&self, key: &Self::Key, kids: &mut dyn Iterator<Item = bool>) -> bool;
}

pub(crate) type Memo<K> = DashMap<K, bool>;

struct Frame<K> {
    key: K,
    children: Vec<K>,
    next: usize,
}

/// Depth-first evaluation with an explicit stack.
pub(crate) fn evaluate<R: Rules>(rules: &R, root: &R::Key, memo: &Memo<R::Key>) -> bool {
    if let Some(v) = memo.get(root) {
        return *v;
    }
    let mut stack = Vec::new();
    let open = |key: R::Key, stack: &mut Vec<Frame<R::Key>>| {
        let children = rules.children(&key);
        if children.is_empty() {
            let v = rules.terminal_value(&key);
            memo.entry(key).or_insert(v);
        } else {
            stack.push(Frame {
                key,
                children,
                next: 0,
            });
        }
    };
    open(root.clone(), &mut stack);
    while let Some(top) = stack.last_mut() {
        if top.next < top.children.len() {
            let child = top.children[top.next].clone();
            top.next += 1;
            if !memo.contains_key(&child) {
                open(child, &mut stack);
            }
            continue;
        }
        let frame = stack.pop().unwrap();
        let mut kids = frame.children.iter().map(|c| *memo.get(c).unwrap());
        let v = rules.combine(&frame.key, &mut kids);
        memo.entry(frame.key).or_insert(v);
    }
    *memo.get(root).unwrap()
}

/// Same result as [`evaluate`], with the lower part of the graph split
/// across a rayon pool of `workers` threads.
pub(crate) fn evaluate_parallel<R: Rules>(
    rules: &R,
    root: &R::Key,
    memo: &Memo<R::Key>,
    workers: usize,
) -> bool {
    if workers <= 1 {
        return evaluate(rules, root, memo);
    }
    // Breadth-first until there are enough independent subproblems.
    let mut frontier = vec![root.clone()];
    let mut seen = std::collections::HashSet::new();
    seen.insert(root.clone());
    for _ in 0..64 {
        if frontier.len() >= workers * 4 {
            break;
        }
        let mut next = Vec::new();
        for key in &frontier {
            for child in rules.children(key) {
                if seen.insert(child.clone()) {
                    next.push(child);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        frontier = next;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    pool.install(|| {
        frontier.par_iter().for_each(|key| {
            evaluate(rules, key, memo);
        });
    });
    evaluate(rules, root, memo)
}

/// Normal play, two seats: value is "the player to move can force the last move".
pub(crate) struct MoverWins {
    pub params: GameParams,
}

impl Rules for MoverWins {
    type Key = GameState;

    fn children(&self, key: &GameState) -> Vec<GameState> {
        successors(self.params, key)
    }

    fn terminal_value(&self, _key: &GameState) -> bool {
        false
    }

    fn combine(&self, _key: &GameState, kids: &mut dyn Iterator<Item = bool>) -> bool {
        kids.fold(false, |acc, child_wins| acc | !child_wins)
    }
}

/// Maximin over seats: the focal side picks, everybody else is one coalition.
///
/// With `rotational` the seat component of the key is the offset from the
/// mover to the focal seat, which is valid only for singleton teams and lets
/// one table serve every focal player. Otherwise it is the absolute seat of
/// the mover and `focal` names a team.
pub(crate) struct Maximin<'a> {
    pub params: GameParams,
    pub team_of: &'a [usize],
    pub focal: usize,
    pub rotational: bool,
}

impl Maximin<'_> {
    fn seats(&self) -> u16 {
        self.team_of.len() as u16
    }

    fn mover_is_focal(&self, seat: u16) -> bool {
        if self.rotational {
            seat == 0
        } else {
            self.team_of[seat as usize] == self.focal
        }
    }

    fn next_seat(&self, seat: u16) -> u16 {
        let p = self.seats();
        if self.rotational {
            (seat + p - 1) % p
        } else {
            (seat + 1) % p
        }
    }

    fn previous_seat(&self, seat: u16) -> u16 {
        let p = self.seats();
        if self.rotational {
            (seat + 1) % p
        } else {
            (seat + p - 1) % p
        }
    }
}

impl Rules for Maximin<'_> {
    type Key = (GameState, u16);

    fn children(&self, key: &(GameState, u16)) -> Vec<(GameState, u16)> {
        let seat = self.next_seat(key.1);
        successors(self.params, &key.0)
            .into_iter()
            .map(|s| (s, seat))
            .collect()
    }

    fn terminal_value(&self, key: &(GameState, u16)) -> bool {
        self.mover_is_focal(self.previous_seat(key.1))
    }

    fn combine(&self, key: &(GameState, u16), kids: &mut dyn Iterator<Item = bool>) -> bool {
        if self.mover_is_focal(key.1) {
            kids.fold(false, |a, b| a | b)
        } else {
            kids.fold(true, |a, b| a & b)
        }
    }
}

pub(crate) fn successors(params: GameParams, state: &GameState) -> Vec<GameState> {
    legal_moves(params, state)
        .into_iter()
        .map(|mv| apply_move(params, state, mv).expect("listed move applies"))
        .collect()
}
