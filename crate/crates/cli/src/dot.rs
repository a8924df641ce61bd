//! Graphviz rendering of the two-player game tree, layered by turn.
//!
//! A position can be reached after move sequences of different lengths, and
//! who is winning depends on whose turn it is, so nodes are identified by
//! turn and canonical state together. Positions reached on the same turn by
//! different lines share one node.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use zeckgame::solver::TwoPlayerTable;
use zeckgame::{apply_move, legal_moves, GameState, Player, Sequence64, Wedge};

pub const P1_COLOR: &str = "red";
pub const P2_COLOR: &str = "blue";

#[derive(Debug, Clone, Copy)]
pub struct DotOptions {
    /// Number of edge layers to emit below the root; `None` for the full tree.
    pub depth: Option<u32>,
    pub wedge: Wedge,
}

pub fn node_id(turn: u32, state: &GameState) -> String {
    format!("t{turn}:{}", state.encode())
}

fn color(p: Player) -> &'static str {
    match p {
        Player::P1 => P1_COLOR,
        Player::P2 => P2_COLOR,
    }
}

/// Player holding the winning strategy at `state` on `turn`.
fn holder(table: &TwoPlayerTable, state: &GameState, turn: u32) -> Player {
    let mover = Player::on_turn(turn);
    if table.mover_wins(state).unwrap_or(false) {
        mover
    } else {
        mover.opponent()
    }
}

pub fn render(table: &TwoPlayerTable, options: DotOptions) -> String {
    let params = table.params();
    let mut seq = Sequence64::with_len(params, 2).expect("two terms fit");
    let mut out = String::new();
    writeln!(out, "digraph zeckendorf {{").unwrap();
    writeln!(out, "  rankdir=TB;").unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();

    let mut layer: BTreeMap<GameState, ()> = BTreeMap::new();
    layer.insert(table.root().clone(), ());
    let mut turn = 1u32;
    loop {
        let mut next: BTreeMap<GameState, ()> = BTreeMap::new();
        let mut edges = String::new();
        let expand = options.depth.is_none_or(|d| turn <= d);
        writeln!(out, "  {{ rank=same;").unwrap();
        for state in layer.keys() {
            seq.ensure_len(state.max_index() + 2).expect("desk-scale terms fit in u64");
            let moves = legal_moves(params, state);
            let terminal = moves.is_empty();
            // On a terminal node the previous mover has already won.
            let owner = holder(table, state, turn);
            let style = if terminal { "filled,bold" } else { "solid" };
            let mut attrs = format!(
                "label=\"{}\", color=\"{}\", style=\"{style}\"",
                state.wedge(&seq, options.wedge),
                color(owner)
            );
            if terminal {
                attrs.push_str(", fillcolor=\"lightgray\", peripheries=2");
            }
            writeln!(out, "    \"{}\" [{attrs}];", node_id(turn, state)).unwrap();
            if !expand {
                continue;
            }
            for mv in moves {
                let child = apply_move(params, state, mv).expect("listed move applies");
                writeln!(
                    edges,
                    "  \"{}\" -> \"{}\" [label=\"{}\"];",
                    node_id(turn, state),
                    node_id(turn + 1, &child),
                    mv.descriptor()
                )
                .unwrap();
                next.insert(child, ());
            }
        }
        writeln!(out, "  }}").unwrap();
        out.push_str(&edges);
        if next.is_empty() {
            break;
        }
        layer = next;
        turn += 1;
    }
    writeln!(out, "}}").unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeckgame::{GameParams, Solver};

    fn table(c: u32, k: u32, n: u32) -> TwoPlayerTable {
        Solver::default()
            .two_player_table(GameParams::new(c, k).unwrap(), n)
            .unwrap()
    }

    fn opts(depth: Option<u32>) -> DotOptions {
        DotOptions {
            depth,
            wedge: Wedge::Ascii,
        }
    }

    #[test]
    fn three_is_a_path() {
        let dot = render(&table(1, 1, 3), opts(None));
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("->")).collect();
        assert_eq!(
            edges,
            [
                "  \"t1:1^3\" -> \"t2:1^1,2^1\" [label=\"carry(1)\"];",
                "  \"t2:1^1,2^1\" -> \"t3:3^1\" [label=\"combine(2)\"];",
            ]
        );
        assert_eq!(dot.matches("[label=\"").count(), 5, "three nodes, two edges");
        // P2 wins n = 3; the terminal node is P2's and drawn distinctly.
        assert!(dot.contains("\"t3:3^1\" [label=\"3\", color=\"blue\", style=\"filled,bold\""));
        assert!(dot.contains("\"t1:1^3\" [label=\"1^3\", color=\"blue\", style=\"solid\""));
    }

    #[test]
    fn depth_cap_one_keeps_root_and_children() {
        let dot = render(&table(1, 2, 10), opts(Some(1)));
        let nodes = dot.lines().filter(|l| l.contains("style=")).count();
        assert_eq!(nodes, 2, "{dot}");
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 1);
    }

    #[test]
    fn tribonacci_prefix() {
        let dot = render(&table(1, 2, 10), opts(None));
        assert!(dot.contains("\"t1:1^10\" -> \"t2:1^8,2^1\" [label=\"carry(1)\"]"));
        assert!(dot.contains("\"t2:1^8,2^1\" -> \"t3:1^6,3^1\" [label=\"lowcombine(2)\"]"));
        assert!(dot.contains("label=\"1^6 ^ 4\""));
        assert!(dot.contains("\"t1:1^10\" [label=\"1^10\", color=\"blue\""));
    }

    #[test]
    fn output_is_stable() {
        let a = render(&table(1, 2, 12), opts(None));
        let b = render(&table(1, 2, 12), opts(None));
        assert_eq!(a, b);
    }
}
