use super::parity::Player;
use crate::apt::{Apt, Letter, StateKind, Transition};
use crate::bitset::StateSet;
use std::collections::HashMap;
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArenaMode {
    /// Letters are chosen explicitly by player ◇.
    Literal,
    /// Letters are left implicit: atom states wait for the modal step and
    /// any node holding a complementary pair of atoms is lost by ◇.
    Sat,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArenaNode {
    Set(StateSet),
    Letter(StateSet, Letter),
}

impl ArenaNode {
    pub fn states(&self) -> &StateSet {
        match self {
            ArenaNode::Set(s) | ArenaNode::Letter(s, _) => s,
        }
    }
}

/// A choice function restricted to the existential local states of a node.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Choice(Vec<(usize, usize)>);

impl Choice {
    pub fn get(&self, q: usize) -> Option<usize> {
        self.0
            .binary_search_by_key(&q, |&(p, _)| p)
            .ok()
            .map(|i| self.0[i].1)
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }
}

/// Edge labels of the arena, which are also the letters of the tracking
/// automaton. In satisfiability mode no letter is recorded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrackLetter {
    Letter(Letter),
    Local { letter: Option<Letter>, choice: Choice },
    /// The chosen existential modal state; `None` when the node has no
    /// existential modal state and only universal obligations move on.
    Modal { letter: Option<Letter>, state: Option<usize> },
}

/// The reachable part of the strategy arena of an automaton.
pub struct StrategyArena<'a> {
    apt: &'a Apt,
    mode: ArenaMode,
    nodes: Vec<ArenaNode>,
    owner: Vec<Player>,
    edges: Vec<Vec<(TrackLetter, usize)>>,
}

impl<'a> StrategyArena<'a> {
    pub fn build(apt: &'a Apt, mode: ArenaMode) -> Self {
        let mut arena = Self {
            apt,
            mode,
            nodes: Vec::new(),
            owner: Vec::new(),
            edges: Vec::new(),
        };
        let mut index: HashMap<ArenaNode, usize> = HashMap::new();
        let start = ArenaNode::Set(StateSet::singleton(apt.initial()));
        index.insert(start.clone(), 0);
        arena.nodes.push(start);
        let mut i = 0;
        while i < arena.nodes.len() {
            let node = arena.nodes[i].clone();
            let owner = arena.owner_of(&node);
            let mut out = Vec::new();
            for (label, target) in arena.moves(&node) {
                let fresh = arena.nodes.len();
                let id = *index.entry(target.clone()).or_insert_with(|| {
                    arena.nodes.push(target);
                    fresh
                });
                out.push((label, id));
            }
            arena.owner.push(owner);
            arena.edges.push(out);
            i += 1;
        }
        assert!(
            arena.len() as f64 <= arena.bound(),
            "arena exceeded (m+1)·2ⁿ nodes"
        );
        arena
    }

    pub fn apt(&self) -> &'a Apt {
        self.apt
    }

    pub fn mode(&self) -> ArenaMode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, v: usize) -> &ArenaNode {
        &self.nodes[v]
    }

    pub fn owner(&self, v: usize) -> Player {
        self.owner[v]
    }

    pub fn edges(&self, v: usize) -> &[(TrackLetter, usize)] {
        &self.edges[v]
    }

    /// `(m+1)·2ⁿ` in literal mode and `2ⁿ` in satisfiability mode.
    pub fn bound(&self) -> f64 {
        let sets = 2f64.powi(self.apt.len() as i32);
        match self.mode {
            ArenaMode::Literal => (self.apt.num_letters() as f64 + 1.0) * sets,
            ArenaMode::Sat => sets,
        }
    }

    fn is_atom(&self, q: usize) -> bool {
        matches!(self.apt.transition(q), Transition::Atom { .. })
    }

    /// Local states that the next local update replaces.
    fn pending(&self, q: usize) -> bool {
        self.apt.kind(q).is_local() && !(self.mode == ArenaMode::Sat && self.is_atom(q))
    }

    /// Whether the node is lost by ◇ without further moves.
    pub fn is_losing(&self, node: &ArenaNode) -> bool {
        let s = node.states();
        if s.contains(self.apt.bot()) {
            return true;
        }
        self.mode == ArenaMode::Sat && self.contradictory(s)
    }

    fn contradictory(&self, s: &StateSet) -> bool {
        let mut pos = 0u32;
        let mut neg = 0u32;
        for q in s.iter() {
            if let Transition::Atom { atom, positive } = self.apt.transition(q) {
                if *positive {
                    pos |= 1 << atom;
                } else {
                    neg |= 1 << atom;
                }
            }
        }
        pos & neg != 0
    }

    /// The letter read at a modal step in satisfiability mode.
    pub fn implied_letter(&self, s: &StateSet) -> Letter {
        s.iter()
            .filter_map(|q| match self.apt.transition(q) {
                Transition::Atom { atom, positive: true } => Some(1 << atom),
                _ => None,
            })
            .fold(0, |a, b| a | b)
    }

    pub fn owner_of(&self, node: &ArenaNode) -> Player {
        match node {
            ArenaNode::Set(s) if self.mode == ArenaMode::Sat => {
                if s.iter().any(|q| self.pending(q)) || self.is_losing(node) {
                    Player::Even
                } else {
                    Player::Odd
                }
            }
            ArenaNode::Set(_) => Player::Even,
            ArenaNode::Letter(s, _) => {
                if s.iter().any(|q| self.pending(q)) {
                    Player::Even
                } else {
                    Player::Odd
                }
            }
        }
    }

    fn moves(&self, node: &ArenaNode) -> Vec<(TrackLetter, ArenaNode)> {
        if self.is_losing(node) {
            return Vec::new();
        }
        let s = node.states();
        let letter = match (self.mode, node) {
            (ArenaMode::Literal, ArenaNode::Set(s)) => {
                return self
                    .apt
                    .letters()
                    .map(|a| (TrackLetter::Letter(a), ArenaNode::Letter(s.clone(), a)))
                    .collect();
            }
            (_, ArenaNode::Letter(_, a)) => Some(*a),
            (ArenaMode::Sat, ArenaNode::Set(_)) => None,
        };
        let wrap = |t: StateSet| match letter {
            Some(a) => ArenaNode::Letter(t, a),
            None => ArenaNode::Set(t),
        };
        if self.owner_of(node) == Player::Even {
            self.choices(s, letter.unwrap_or(0))
                .into_iter()
                .map(|d| {
                    let t = self.update_local(s, letter.unwrap_or(0), &d);
                    (TrackLetter::Local { letter, choice: d }, wrap(t))
                })
                .collect()
        } else {
            let read = letter.unwrap_or_else(|| self.implied_letter(s));
            let diamonds: Vec<usize> = s
                .iter()
                .filter(|&q| self.apt.kind(q) == StateKind::ModalExistential)
                .collect();
            let picks: Vec<Option<usize>> = if diamonds.is_empty() {
                vec![None]
            } else {
                diamonds.into_iter().map(Some).collect()
            };
            picks
                .into_iter()
                .map(|q| {
                    let t = self.update_modal(s, read, q);
                    (TrackLetter::Modal { letter, state: q }, ArenaNode::Set(t))
                })
                .collect()
        }
    }

    /// All choice functions for the existential local states of `s`.
    pub fn choices(&self, s: &StateSet, a: Letter) -> Vec<Choice> {
        let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        for q in s.iter() {
            if self.apt.kind(q) != StateKind::LocalExistential || !self.pending(q) {
                continue;
            }
            let succ = self.apt.delta(q, a);
            out = out
                .into_iter()
                .flat_map(|partial| {
                    succ.iter().map(move |&r| {
                        let mut next = partial.clone();
                        next.push((q, r));
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(Choice).collect()
    }

    pub fn update_local(&self, s: &StateSet, a: Letter, d: &Choice) -> StateSet {
        let mut out = StateSet::new();
        for q in s.iter() {
            if !self.pending(q) {
                out.insert(q);
            } else if self.apt.kind(q) == StateKind::LocalUniversal {
                out.extend(self.apt.delta(q, a).iter().copied());
            } else if let Some(r) = d.get(q) {
                out.insert(r);
            }
        }
        out.remove(self.apt.top());
        out
    }

    pub fn update_modal(&self, s: &StateSet, a: Letter, chosen: Option<usize>) -> StateSet {
        let mut out = StateSet::new();
        if let Some(q) = chosen {
            out.extend(self.apt.delta(q, a).iter().copied());
        }
        for q in s.iter() {
            if self.apt.kind(q) == StateKind::ModalUniversal {
                out.extend(self.apt.delta(q, a).iter().copied());
            }
        }
        out.remove(self.apt.top());
        out
    }

    pub fn node_label(&self, v: usize) -> String {
        let names = |s: &StateSet| {
            s.iter()
                .map(|q| self.apt.state(q).label.clone())
                .collect::<Vec<_>>()
                .join(", ")
        };
        match &self.nodes[v] {
            ArenaNode::Set(s) => format!("{{{}}}", names(s)),
            ArenaNode::Letter(s, a) => {
                format!("({{{}}}, {{{}}})", names(s), self.apt.letter_atoms(*a).join(","))
            }
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph arena {\n");
        for v in 0..self.len() {
            let shape = match self.owner[v] {
                Player::Even => "diamond",
                Player::Odd => "box",
            };
            let _ = writeln!(
                out,
                "  v{v} [shape={shape}, label=\"{}\"];",
                self.node_label(v).replace('"', "'")
            );
        }
        for (v, edges) in self.edges.iter().enumerate() {
            for (label, w) in edges {
                let text = match label {
                    TrackLetter::Letter(a) => self.apt.letter_atoms(*a).join(","),
                    TrackLetter::Local { choice, .. } => choice
                        .pairs()
                        .iter()
                        .map(|(q, r)| format!("{q}->{r}"))
                        .collect::<Vec<_>>()
                        .join(" "),
                    TrackLetter::Modal { state, .. } => match state {
                        Some(q) => format!("q{q}"),
                        None => "box".to_string(),
                    },
                };
                let _ = writeln!(out, "  v{v} -> v{w} [label=\"{text}\"];");
            }
        }
        out.push_str("}\n");
        out
    }
}
