use super::attractor::attractor;
use super::{remove_dead_ends, some_move, Solution};
use crate::game::{ParityGame, Player};

/// Zielonka's recursive algorithm, max-parity convention. Dead ends are lost
/// by their owner.
pub fn solve_parity(g: &ParityGame) -> Solution {
    let pred = g.predecessors();
    let (pre, mut strategy, within) = remove_dead_ends(g, &pred);
    let mut winner = vec![Player::Even; g.len()];
    let sub = zielonka(g, &pred, &within, &mut strategy);
    for v in 0..g.len() {
        winner[v] = pre[v].or(sub[v]).unwrap_or(Player::Even);
    }
    for v in 0..g.len() {
        if strategy[v].is_none() {
            strategy[v] = g.successors(v).first().copied();
        }
    }
    Solution { winner, strategy }
}

/// Solves the dead-end-free subgame `within`; returns the winner of each of
/// its nodes and writes winning moves into `strategy`.
fn zielonka(g: &ParityGame, pred: &[Vec<usize>], within: &[bool], strategy: &mut [Option<usize>]) -> Vec<Option<Player>> {
    let n = g.len();
    let Some(p) = (0..n).filter(|&v| within[v]).map(|v| g.priority(v)).max() else {
        return vec![None; n];
    };
    let i = Player::of_priority(p);
    let top: Vec<bool> = (0..n).map(|v| within[v] && g.priority(v) == p).collect();
    let mut attr_moves = vec![None; n];
    let a = attractor(g, pred, within, &top, i, &mut attr_moves);
    let rest: Vec<bool> = (0..n).map(|v| within[v] && !a[v]).collect();
    let mut rest_moves = vec![None; n];
    let w1 = zielonka(g, pred, &rest, &mut rest_moves);

    if !(0..n).any(|v| w1[v] == Some(i.opponent())) {
        for v in (0..n).filter(|&v| within[v] && g.owner(v) == i) {
            strategy[v] = if rest[v] {
                rest_moves[v]
            } else if top[v] {
                some_move(g, v, within)
            } else {
                attr_moves[v]
            };
        }
        return (0..n).map(|v| within[v].then_some(i)).collect();
    }

    let lost: Vec<bool> = (0..n).map(|v| w1[v] == Some(i.opponent())).collect();
    let mut b_moves = vec![None; n];
    let b = attractor(g, pred, within, &lost, i.opponent(), &mut b_moves);
    for v in (0..n).filter(|&v| b[v] && g.owner(v) == i.opponent()) {
        strategy[v] = if lost[v] { rest_moves[v] } else { b_moves[v] };
    }
    let remainder: Vec<bool> = (0..n).map(|v| within[v] && !b[v]).collect();
    let mut out = zielonka(g, pred, &remainder, strategy);
    for v in (0..n).filter(|&v| b[v]) {
        out[v] = Some(i.opponent());
    }
    out
}
