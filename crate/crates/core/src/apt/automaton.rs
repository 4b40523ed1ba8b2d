use crate::graph::Sccs;
use serde::Serialize;
use thiserror::Error;

/// Alphabet letter: a set of atoms encoded as a bitmask over the atom index.
pub type Letter = u32;

/// Maximum number of atoms; the alphabet has `2^atoms` letters.
pub const MAX_ATOMS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AptError {
    #[error("formula mentions {0} atoms; at most {MAX_ATOMS} are supported")]
    AlphabetTooLarge(usize),
    #[error("formula is not closed")]
    NotClosed,
    #[error("formula is not clean")]
    NotClean,
    #[error("formula is not guarded")]
    Unguarded,
    #[error("local loop through state {0}")]
    LocalLoop(usize),
    #[error("cycle through state {0} carries no assigned priority")]
    UnprioritizedCycle(usize),
    #[error("modal state {0} must have exactly one successor")]
    ModalBranching(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum StateKind {
    LocalExistential,
    LocalUniversal,
    ModalExistential,
    ModalUniversal,
}

impl StateKind {
    pub fn is_local(self) -> bool {
        matches!(self, StateKind::LocalExistential | StateKind::LocalUniversal)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            StateKind::LocalExistential => "or",
            StateKind::LocalUniversal => "and",
            StateKind::ModalExistential => "dia",
            StateKind::ModalUniversal => "box",
        }
    }
}

/// Transition of a state. Only atom states inspect the letter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Transition {
    Fixed(Vec<usize>),
    /// Moves to ⊤ if the atom's presence in the letter equals `positive`,
    /// and to ⊥ otherwise.
    Atom { atom: usize, positive: bool },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AptState {
    pub label: String,
    pub kind: StateKind,
    pub transition: Transition,
    /// Priority assigned by the translation before completion.
    pub assigned: Option<u32>,
}

/// An alternating parity tree automaton over `2^atoms`.
#[derive(Debug, Clone, Serialize)]
pub struct Apt {
    pub(crate) atoms: Vec<String>,
    pub(crate) states: Vec<AptState>,
    pub(crate) initial: usize,
    pub(crate) top: usize,
    pub(crate) bot: usize,
    pub(crate) priority: Vec<u32>,
    #[serde(skip)]
    top_set: [usize; 1],
    #[serde(skip)]
    bot_set: [usize; 1],
}

impl Apt {
    /// Assemble an automaton and complete its priorities.
    ///
    /// `top` and `bot` are the designated sink states used by atom
    /// transitions.
    pub fn new(
        atoms: Vec<String>,
        states: Vec<AptState>,
        initial: usize,
        top: usize,
        bot: usize,
    ) -> Result<Self, AptError> {
        if atoms.len() > MAX_ATOMS {
            return Err(AptError::AlphabetTooLarge(atoms.len()));
        }
        for (q, s) in states.iter().enumerate() {
            if !s.kind.is_local() && !matches!(&s.transition, Transition::Fixed(v) if v.len() == 1)
            {
                return Err(AptError::ModalBranching(q));
            }
        }
        let mut apt = Apt {
            atoms,
            priority: vec![0; states.len()],
            states,
            initial,
            top,
            bot,
            top_set: [top],
            bot_set: [bot],
        };
        apt.priority = super::complete_priorities(&apt)?;
        Ok(apt)
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn num_letters(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> {
        0..(1u32 << self.atoms.len())
    }

    pub fn letter_atoms(&self, letter: Letter) -> Vec<&str> {
        self.atoms
            .iter()
            .enumerate()
            .filter(|(i, _)| letter & (1 << i) != 0)
            .map(|(_, p)| p.as_str())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn state(&self, q: usize) -> &AptState {
        &self.states[q]
    }

    pub fn kind(&self, q: usize) -> StateKind {
        self.states[q].kind
    }

    pub fn transition(&self, q: usize) -> &Transition {
        &self.states[q].transition
    }

    pub fn priority(&self, q: usize) -> u32 {
        self.priority[q]
    }

    pub fn priorities(&self) -> &[u32] {
        &self.priority
    }

    /// Number of distinct priorities.
    pub fn rank(&self) -> usize {
        let mut ps = self.priority.clone();
        ps.sort_unstable();
        ps.dedup();
        ps.len()
    }

    pub fn is_sink(&self, q: usize) -> bool {
        q == self.top || q == self.bot
    }

    /// δ(q, letter).
    pub fn delta(&self, q: usize, letter: Letter) -> &[usize] {
        match &self.states[q].transition {
            Transition::Fixed(v) => v,
            Transition::Atom { atom, positive } => {
                if (letter & (1 << atom) != 0) == *positive {
                    &self.top_set
                } else {
                    &self.bot_set
                }
            }
        }
    }

    /// Union of δ(q, a) over all letters.
    pub fn successors(&self, q: usize) -> Vec<usize> {
        match &self.states[q].transition {
            Transition::Fixed(v) => v.clone(),
            Transition::Atom { .. } => vec![self.top, self.bot],
        }
    }

    /// The unique successor of a modal state.
    pub fn modal_successor(&self, q: usize) -> usize {
        match &self.states[q].transition {
            Transition::Fixed(v) => v[0],
            Transition::Atom { .. } => panic!("state {q} is not modal"),
        }
    }

    pub fn sccs(&self) -> Sccs {
        Sccs::new(self.len(), |q| self.successors(q))
    }

    /// Check that no cycle consists of local states only (the ⊤/⊥ sinks
    /// are exempt). Transitions of non-atom states are letter-independent,
    /// so the union graph suffices.
    pub fn check_no_local_loops(&self) -> Result<(), AptError> {
        let local = |q: usize| self.states[q].kind.is_local() && !self.is_sink(q);
        let sccs = Sccs::new(self.len(), |q| {
            if local(q) {
                self.successors(q).into_iter().filter(|&r| local(r)).collect()
            } else {
                Vec::new()
            }
        });
        match (0..self.len()).find(|&q| local(q) && sccs.on_cycle(q)) {
            Some(q) => Err(AptError::LocalLoop(q)),
            None => Ok(()),
        }
    }
}
