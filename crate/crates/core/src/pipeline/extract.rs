use super::PipelineError;
use crate::game::{ArenaNode, Player, ProductGame, ProductNode, StrategyArena};
use crate::kripke::KripkeStructure;
use crate::solver::Solution;
use std::collections::{BTreeSet, HashMap};

/// Reads a Kripke structure off ◇'s winning strategy in a product game with
/// a deterministic tracking automaton.
///
/// Worlds are the product positions at which player □ picks a modal
/// successor, reachable from the initial position when ◇ plays her
/// strategy. Each modal edge of a world leads, after ◇'s local moves, to a
/// successor world.
pub fn extract_model<T>(
    arena: &StrategyArena<'_>,
    product: &ProductGame<T>,
    sol: &Solution,
) -> Result<KripkeStructure, PipelineError> {
    let g = &product.game;
    if sol.wins(product.initial) != Player::Even {
        return Err(PipelineError::Extraction("◇ does not win the initial position".into()));
    }
    let settle = |mut u: usize| -> Result<usize, PipelineError> {
        for _ in 0..=g.len() {
            match &product.nodes[u] {
                ProductNode::Mid(..) => match g.successors(u) {
                    [next] => u = *next,
                    _ => return Err(PipelineError::Nondeterministic),
                },
                ProductNode::Pos(v, _) if arena.owner(*v) == Player::Odd => return Ok(u),
                ProductNode::Pos(..) => {
                    u = sol.strategy[u].ok_or_else(|| {
                        PipelineError::Extraction(format!("strategy stops at {}", g.label(u)))
                    })?;
                }
            }
        }
        Err(PipelineError::Extraction("local moves do not reach a modal step".into()))
    };

    let apt = arena.apt();
    let mut index: HashMap<usize, usize> = HashMap::new();
    let mut worlds: Vec<usize> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let start = settle(product.initial)?;
    index.insert(start, 0);
    worlds.push(start);
    let mut i = 0;
    while i < worlds.len() {
        let u = worlds[i];
        for &m in g.successors(u) {
            let next = settle(m)?;
            let fresh = worlds.len();
            let j = *index.entry(next).or_insert(fresh);
            if j == fresh {
                worlds.push(next);
            }
            edges.push((i, j));
        }
        i += 1;
    }
    let labels: Vec<BTreeSet<String>> = worlds
        .iter()
        .map(|&u| {
            let ProductNode::Pos(v, _) = &product.nodes[u] else {
                unreachable!("worlds are positions")
            };
            let letter = match arena.node(*v) {
                ArenaNode::Letter(_, a) => *a,
                ArenaNode::Set(s) => arena.implied_letter(s),
            };
            apt.letter_atoms(letter).into_iter().map(str::to_string).collect()
        })
        .collect();
    KripkeStructure::from_labels(labels, 0, edges).map_err(|e| PipelineError::Extraction(e.to_string()))
}
