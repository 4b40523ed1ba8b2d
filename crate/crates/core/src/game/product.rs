use super::arena::{StrategyArena, TrackLetter};
use super::parity::{ParityGame, Player};
use crate::word::Automaton;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ProductNode<T> {
    /// Arena node and tracking state.
    Pos(usize, T),
    /// Label just read, arena target and tracking state before reading it;
    /// player □ resolves the tracking automaton's choice here.
    Mid(usize, usize, T),
}

/// Product of a strategy arena with a (history-)deterministic automaton for
/// the bad plays.
pub struct ProductGame<T> {
    pub game: ParityGame,
    pub nodes: Vec<ProductNode<T>>,
    /// Interned edge labels referenced by [`ProductNode::Mid`].
    pub labels: Vec<TrackLetter>,
    pub initial: usize,
}

impl<T> ProductGame<T> {
    /// Number of nodes of shape `(v, t)`.
    pub fn position_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, ProductNode::Pos(..)))
            .count()
    }
}

/// Builds the reachable part of the product game from `({q₀}, t₀)`.
///
/// Both node shapes carry priority `Ω_H(t) + 1`, so ◇ wins exactly the plays
/// on which `h` rejects. Panics if the `(v, t)` nodes exceed
/// `|arena bound| · h_bound`.
pub fn build_product_game<H>(arena: &StrategyArena<'_>, h: &H, h_bound: f64) -> ProductGame<H::State>
where
    H: Automaton<Letter = TrackLetter>,
{
    let mut game = ParityGame::new();
    let mut nodes: Vec<ProductNode<H::State>> = Vec::new();
    let mut index: HashMap<ProductNode<H::State>, usize> = HashMap::new();
    let mut label_ids: HashMap<TrackLetter, usize> = HashMap::new();
    let mut labels: Vec<TrackLetter> = Vec::new();

    let mut intern = |node: ProductNode<H::State>,
                      game: &mut ParityGame,
                      nodes: &mut Vec<ProductNode<H::State>>|
     -> usize {
        if let Some(&id) = index.get(&node) {
            return id;
        }
        let (owner, t, text) = match &node {
            ProductNode::Pos(v, t) => (arena.owner(*v), t, arena.node_label(*v)),
            ProductNode::Mid(_, v, t) => (Player::Odd, t, format!("-> {}", arena.node_label(*v))),
        };
        let id = game.add_node(owner, h.priority(t) + 1, format!("{text} | {t:?}"));
        index.insert(node.clone(), id);
        nodes.push(node);
        id
    };

    let initial = intern(ProductNode::Pos(0, h.initial()), &mut game, &mut nodes);
    let mut i = 0;
    while i < nodes.len() {
        match nodes[i].clone() {
            ProductNode::Pos(v, t) => {
                for (label, target) in arena.edges(v) {
                    let fresh = labels.len();
                    let l = *label_ids.entry(label.clone()).or_insert_with(|| {
                        labels.push(label.clone());
                        fresh
                    });
                    let mid = intern(ProductNode::Mid(l, *target, t.clone()), &mut game, &mut nodes);
                    game.add_edge(i, mid);
                }
            }
            ProductNode::Mid(l, target, t) => {
                for next in h.post(&t, &labels[l]) {
                    let pos = intern(ProductNode::Pos(target, next), &mut game, &mut nodes);
                    game.add_edge(i, pos);
                }
            }
        }
        i += 1;
    }
    let out = ProductGame {
        game,
        nodes,
        labels,
        initial,
    };
    assert!(
        out.position_count() as f64 <= arena.bound() * h_bound,
        "product game exceeded (m+1)·2ⁿ·S nodes"
    );
    out
}
