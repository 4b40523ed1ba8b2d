use crate::game::{ParityGame, Player};
use std::collections::VecDeque;

/// Nodes of the subgame `within` from which `player` can force a visit to
/// `target`, with attracting moves recorded in `strategy` for the player's
/// nodes outside `target`.
pub(crate) fn attractor(
    g: &ParityGame,
    pred: &[Vec<usize>],
    within: &[bool],
    target: &[bool],
    player: Player,
    strategy: &mut [Option<usize>],
) -> Vec<bool> {
    let n = g.len();
    let mut attr = vec![false; n];
    let mut remaining: Vec<usize> = (0..n)
        .map(|v| {
            if within[v] {
                g.successors(v).iter().filter(|&&w| within[w]).count()
            } else {
                0
            }
        })
        .collect();
    let mut queue = VecDeque::new();
    for v in 0..n {
        if within[v] && target[v] {
            attr[v] = true;
            queue.push_back(v);
        }
    }
    while let Some(w) = queue.pop_front() {
        for &v in &pred[w] {
            if !within[v] || attr[v] {
                continue;
            }
            if g.owner(v) == player {
                attr[v] = true;
                strategy[v] = Some(w);
                queue.push_back(v);
            } else {
                remaining[v] -= 1;
                if remaining[v] == 0 {
                    attr[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }
    attr
}
