use super::arena::{ArenaMode, TrackLetter};
use crate::apt::{Apt, StateKind, Transition};
use crate::word::{Automaton, Flavor, IndexedAutomaton};
use std::fmt::Write;

/// Word automaton over arena edge labels accepting the plays that contain a
/// bad branch of the run tree. Its states are those of the tree automaton,
/// with every priority raised by one.
pub struct TrackingAutomaton<'a> {
    apt: &'a Apt,
    mode: ArenaMode,
}

impl<'a> TrackingAutomaton<'a> {
    pub fn new(apt: &'a Apt, mode: ArenaMode) -> Self {
        Self { apt, mode }
    }

    pub fn apt(&self) -> &'a Apt {
        self.apt
    }

    fn is_atom(&self, q: usize) -> bool {
        matches!(self.apt.transition(q), Transition::Atom { .. })
    }

    /// Successors of a universal local state; atoms are settled by the
    /// arena in satisfiability mode and end their trace.
    fn conjunctive(&self, q: usize, letter: Option<u32>) -> Vec<usize> {
        match letter {
            Some(a) => self.apt.delta(q, a).to_vec(),
            None if self.is_atom(q) => Vec::new(),
            None => self.apt.delta(q, 0).to_vec(),
        }
    }
}

impl Automaton for TrackingAutomaton<'_> {
    type State = usize;
    type Letter = TrackLetter;

    fn initial(&self) -> usize {
        self.apt.initial()
    }

    fn post(&self, &q: &usize, label: &TrackLetter) -> Vec<usize> {
        let kind = self.apt.kind(q);
        match label {
            TrackLetter::Letter(_) => vec![q],
            TrackLetter::Local { letter, choice } => match kind {
                StateKind::LocalExistential => choice.get(q).into_iter().collect(),
                StateKind::LocalUniversal => self.conjunctive(q, *letter),
                StateKind::ModalExistential | StateKind::ModalUniversal => vec![q],
            },
            TrackLetter::Modal { letter, state } => match kind {
                StateKind::LocalExistential => Vec::new(),
                StateKind::LocalUniversal => self.conjunctive(q, *letter),
                StateKind::ModalExistential if *state == Some(q) => self.apt.delta(q, 0).to_vec(),
                StateKind::ModalExistential => Vec::new(),
                StateKind::ModalUniversal => self.apt.delta(q, 0).to_vec(),
            },
        }
    }

    fn priority(&self, &q: &usize) -> u32 {
        self.apt.priority(q) + 1
    }
}

impl IndexedAutomaton for TrackingAutomaton<'_> {
    fn num_states(&self) -> usize {
        self.apt.len()
    }

    fn successor_sets(&self, q: usize) -> Vec<Vec<usize>> {
        let mut out = vec![vec![q]];
        match self.apt.kind(q) {
            StateKind::LocalExistential => {
                out.push(Vec::new());
                out.extend(self.apt.successors(q).into_iter().map(|r| vec![r]));
            }
            StateKind::LocalUniversal => match self.mode {
                ArenaMode::Literal => {
                    out.extend(self.apt.letters().map(|a| self.apt.delta(q, a).to_vec()));
                }
                ArenaMode::Sat => out.push(self.conjunctive(q, None)),
            },
            StateKind::ModalExistential => {
                out.push(Vec::new());
                out.push(self.apt.delta(q, 0).to_vec());
            }
            StateKind::ModalUniversal => out.push(self.apt.delta(q, 0).to_vec()),
        }
        out.sort();
        out.dedup();
        out
    }
}

impl TrackingAutomaton<'_> {
    /// DOT rendering of the state graph; edge labels are omitted since the
    /// letters are arena moves.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph tracking {\n  rankdir=LR;\n");
        for q in 0..self.apt.len() {
            let label = self.apt.state(q).label.replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "  t{q} [label=\"{label}\\n{}\"];", self.priority(&q));
        }
        for q in 0..self.apt.len() {
            let targets: std::collections::BTreeSet<usize> = self.successor_sets(q).into_iter().flatten().collect();
            for r in targets {
                let _ = writeln!(out, "  t{q} -> t{r};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Reads a weak parity automaton as a co-Büchi automaton: even priorities
/// become accepting (0), odd ones rejecting (1).
pub struct CoBuchiView<A>(pub A);

impl<A: Automaton> Automaton for CoBuchiView<A> {
    type State = A::State;
    type Letter = A::Letter;

    fn initial(&self) -> A::State {
        self.0.initial()
    }

    fn post(&self, q: &A::State, a: &A::Letter) -> Vec<A::State> {
        self.0.post(q, a)
    }

    fn priority(&self, q: &A::State) -> u32 {
        self.0.priority(q) % 2
    }

    fn flavor(&self) -> Flavor {
        Flavor::CoBuchi
    }
}

impl<A: IndexedAutomaton> IndexedAutomaton for CoBuchiView<A> {
    fn num_states(&self) -> usize {
        self.0.num_states()
    }

    fn successor_sets(&self, q: usize) -> Vec<Vec<usize>> {
        self.0.successor_sets(q)
    }
}
