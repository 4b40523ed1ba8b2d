use super::parity::{ParityGame, Player};
use crate::apt::{Apt, Letter, StateKind};
use crate::kripke::KripkeStructure;

/// The letter of world `w`: the automaton's atoms true at `w`.
pub fn world_letter(apt: &Apt, k: &KripkeStructure, w: usize) -> Letter {
    apt.atoms()
        .iter()
        .enumerate()
        .filter(|(_, p)| k.has_atom(w, p))
        .fold(0, |acc, (i, _)| acc | (1 << i))
}

/// Acceptance game of `apt` on `k`: node `(w, q)` has index `w·|Q| + q`.
pub fn build_acceptance_game(apt: &Apt, k: &KripkeStructure) -> ParityGame {
    let n = apt.len();
    let mut g = ParityGame::new();
    for w in 0..k.len() {
        for q in 0..n {
            let owner = match apt.kind(q) {
                StateKind::LocalExistential | StateKind::ModalExistential => Player::Even,
                StateKind::LocalUniversal | StateKind::ModalUniversal => Player::Odd,
            };
            g.add_node(owner, apt.priority(q), format!("{}, {}", k.world(w).id, apt.state(q).label));
        }
    }
    for w in 0..k.len() {
        let letter = world_letter(apt, k, w);
        for q in 0..n {
            let v = w * n + q;
            for &r in apt.delta(q, letter) {
                if apt.kind(q).is_local() {
                    g.add_edge(v, w * n + r);
                } else {
                    for &u in k.successors(w) {
                        g.add_edge(v, u * n + r);
                    }
                }
            }
        }
    }
    g
}
