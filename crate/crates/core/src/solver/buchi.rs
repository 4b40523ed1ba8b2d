use super::attractor::attractor;
use super::{remove_dead_ends, some_move, Solution, SolverError};
use crate::game::{ParityGame, Player};

/// Solves a game with priorities in {1, 2}: ◇ wins plays visiting priority
/// 2 infinitely often. Dead ends are lost by their owner.
pub fn solve_buchi(g: &ParityGame) -> Result<Solution, SolverError> {
    if let Some(v) = (0..g.len()).find(|&v| !matches!(g.priority(v), 1 | 2)) {
        return Err(SolverError::NotBuchi {
            node: v,
            priority: g.priority(v),
        });
    }
    let n = g.len();
    let pred = g.predecessors();
    let (pre, mut strategy, mut within) = remove_dead_ends(g, &pred);
    let mut winner: Vec<Option<Player>> = pre;

    loop {
        let accepting: Vec<bool> = (0..n).map(|v| within[v] && g.priority(v) == 2).collect();
        let mut reach_moves = vec![None; n];
        let reach = attractor(g, &pred, &within, &accepting, Player::Even, &mut reach_moves);
        let trap: Vec<bool> = (0..n).map(|v| within[v] && !reach[v]).collect();
        if !trap.iter().any(|&t| t) {
            for v in (0..n).filter(|&v| within[v]) {
                winner[v] = Some(Player::Even);
                if g.owner(v) == Player::Even {
                    strategy[v] = if accepting[v] {
                        some_move(g, v, &within)
                    } else {
                        reach_moves[v]
                    };
                }
            }
            break;
        }
        let mut odd_moves = vec![None; n];
        let lost = attractor(g, &pred, &within, &trap, Player::Odd, &mut odd_moves);
        for v in (0..n).filter(|&v| lost[v]) {
            winner[v] = Some(Player::Odd);
            if g.owner(v) == Player::Odd {
                strategy[v] = if trap[v] { some_move(g, v, &trap) } else { odd_moves[v] };
            }
            within[v] = false;
        }
    }

    for v in 0..n {
        if strategy[v].is_none() {
            strategy[v] = g.successors(v).first().copied();
        }
    }
    Ok(Solution {
        winner: winner.into_iter().map(|w| w.unwrap_or(Player::Even)).collect(),
        strategy,
    })
}
