//! Parity and Büchi game solving with positional strategies.

mod attractor;
mod buchi;
mod zielonka;

use crate::game::{ParityGame, Player};
use serde::Serialize;
use thiserror::Error;

pub use buchi::solve_buchi;
pub use zielonka::solve_parity;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("node {node} has priority {priority}; a Büchi game uses only 1 and 2")]
    NotBuchi { node: usize, priority: u32 },
}

/// Winning regions and positional strategies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub winner: Vec<Player>,
    /// For every node with at least one successor, the move its owner plays
    /// (a winning move on the owner's winning region).
    pub strategy: Vec<Option<usize>>,
}

impl Solution {
    pub fn wins(&self, v: usize) -> Player {
        self.winner[v]
    }

    pub fn region(&self, p: Player) -> Vec<usize> {
        (0..self.winner.len()).filter(|&v| self.winner[v] == p).collect()
    }
}

/// Check the positional strategies of `sol` by fixing the winner's strategy
/// and searching the opponent's remaining choices for a losing cycle or a
/// dead end reachable inside the claimed region.
pub fn verify_solution(g: &ParityGame, sol: &Solution) -> Result<(), String> {
    for p in [Player::Even, Player::Odd] {
        let region: Vec<bool> = (0..g.len()).map(|v| sol.winner[v] == p).collect();
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); g.len()];
        for v in (0..g.len()).filter(|&v| region[v]) {
            if g.owner(v) == p {
                let Some(w) = sol.strategy[v] else {
                    return Err(format!("node {v}: winner {p:?} has no move"));
                };
                if !g.successors(v).contains(&w) {
                    return Err(format!("node {v}: strategy move {w} is not an edge"));
                }
                if !region[w] {
                    return Err(format!("node {v}: strategy leaves the winning region"));
                }
                succ[v] = vec![w];
            } else {
                if g.successors(v).is_empty() {
                    continue;
                }
                if let Some(&w) = g.successors(v).iter().find(|&&w| !region[w]) {
                    return Err(format!("node {v}: opponent escapes to {w}"));
                }
                succ[v] = g.successors(v).to_vec();
            }
        }
        // The opponent wins a cycle iff, for some priority q of the
        // opponent's parity, a cycle through a q-node exists among nodes of
        // priority at most q.
        for q in g.priorities().into_iter().filter(|&q| Player::of_priority(q) != p) {
            let keep = |v: usize| region[v] && g.priority(v) <= q;
            let sccs = crate::graph::Sccs::new(g.len(), |v| {
                if keep(v) {
                    succ[v].iter().copied().filter(|&w| keep(w)).collect()
                } else {
                    Vec::new()
                }
            });
            if let Some(v) = (0..g.len()).find(|&v| keep(v) && g.priority(v) == q && sccs.on_cycle(v)) {
                return Err(format!("node {v}: opponent of {p:?} can loop with priority {q}"));
            }
        }
    }
    Ok(())
}

/// Dead-end pre-pass shared by both solvers: returns the solution on the
/// attractors of dead ends and the dead-end-free remainder.
pub(crate) fn remove_dead_ends(g: &ParityGame, pred: &[Vec<usize>]) -> (Vec<Option<Player>>, Vec<Option<usize>>, Vec<bool>) {
    let n = g.len();
    let mut winner = vec![None; n];
    let mut strategy = vec![None; n];
    let mut within = vec![true; n];
    for p in [Player::Even, Player::Odd] {
        let stuck: Vec<bool> = (0..n)
            .map(|v| within[v] && g.owner(v) == p.opponent() && g.successors(v).iter().all(|&w| !within[w]))
            .collect();
        let attr = attractor::attractor(g, pred, &within, &stuck, p, &mut strategy);
        for v in (0..n).filter(|&v| attr[v]) {
            winner[v] = Some(p);
            within[v] = false;
        }
    }
    (winner, strategy, within)
}

/// Any successor inside `within`, used for moves that merely stay in a region.
pub(crate) fn some_move(g: &ParityGame, v: usize, within: &[bool]) -> Option<usize> {
    g.successors(v).iter().copied().find(|&w| within[w])
}
