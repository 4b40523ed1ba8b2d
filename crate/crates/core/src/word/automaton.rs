use crate::bitset::StateSet;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("initial state {0} out of range")]
    BadInitial(usize),
    #[error("transition {from} -{letter}-> {to} out of range")]
    BadTransition { from: usize, letter: usize, to: usize },
    #[error("state {0} has a transition table of the wrong width")]
    BadWidth(usize),
    #[error("priority {priority} of state {state} not allowed for the {flavor:?} flavor")]
    BadPriority {
        state: usize,
        priority: u32,
        flavor: Flavor,
    },
    #[error("input automaton is not limit-linear")]
    NotLimitLinear,
    #[error("input automaton is not limit-deterministic")]
    NotLimitDeterministic,
    #[error("{0}")]
    Json(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    Parity,
    Buchi,
    CoBuchi,
}

impl Flavor {
    pub fn allows(self, p: u32) -> bool {
        match self {
            Flavor::Parity => true,
            Flavor::Buchi => p == 1 || p == 2,
            Flavor::CoBuchi => p <= 1,
        }
    }
}

/// A nondeterministic parity automaton explored through its successor function.
///
/// A run is accepting iff the largest priority seen infinitely often is even.
pub trait Automaton {
    type State: Clone + Eq + Hash + Ord + Debug;
    type Letter: Clone + Debug;

    fn initial(&self) -> Self::State;
    fn post(&self, q: &Self::State, a: &Self::Letter) -> Vec<Self::State>;
    fn priority(&self, q: &Self::State) -> u32;
    fn flavor(&self) -> Flavor {
        Flavor::Parity
    }
}

/// An automaton with states `0..num_states()` whose transition structure can
/// be inspected without enumerating letters.
pub trait IndexedAutomaton: Automaton<State = usize> {
    fn num_states(&self) -> usize;
    /// Every distinct successor set `post(q, a)` over all letters `a`.
    fn successor_sets(&self, q: usize) -> Vec<Vec<usize>>;

    fn graph_successors(&self, q: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.successor_sets(q).into_iter().flatten().collect();
        out.sort_unstable();
        out.dedup();
        out
    }
}

/// An explicit automaton over letters `0..num_letters`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordAutomaton {
    num_letters: usize,
    initial: usize,
    delta: Vec<Vec<Vec<usize>>>,
    priority: Vec<u32>,
    flavor: Flavor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

impl WordAutomaton {
    /// `delta[q][a]` lists the `a`-successors of `q`.
    pub fn new(
        num_letters: usize,
        initial: usize,
        mut delta: Vec<Vec<Vec<usize>>>,
        priority: Vec<u32>,
        flavor: Flavor,
    ) -> Result<Self, WordError> {
        let n = delta.len();
        if initial >= n || priority.len() != n {
            return Err(WordError::BadInitial(initial));
        }
        for (q, row) in delta.iter_mut().enumerate() {
            if row.len() != num_letters {
                return Err(WordError::BadWidth(q));
            }
            for (a, succ) in row.iter_mut().enumerate() {
                succ.sort_unstable();
                succ.dedup();
                if let Some(&to) = succ.iter().find(|&&r| r >= n) {
                    return Err(WordError::BadTransition { from: q, letter: a, to });
                }
            }
        }
        if let Some((q, &p)) = priority.iter().enumerate().find(|(_, &p)| !flavor.allows(p)) {
            return Err(WordError::BadPriority {
                state: q,
                priority: p,
                flavor,
            });
        }
        Ok(Self {
            num_letters,
            initial,
            delta,
            priority,
            flavor,
            labels: None,
        })
    }

    /// Build from an edge list `(from, letter, to)`.
    pub fn from_edges(
        n: usize,
        num_letters: usize,
        initial: usize,
        edges: &[(usize, usize, usize)],
        priority: Vec<u32>,
        flavor: Flavor,
    ) -> Result<Self, WordError> {
        let mut delta = vec![vec![Vec::new(); num_letters]; n];
        for &(q, a, r) in edges {
            if q >= n || a >= num_letters {
                return Err(WordError::BadTransition { from: q, letter: a, to: r });
            }
            delta[q][a].push(r);
        }
        Self::new(num_letters, initial, delta, priority, flavor)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        if labels.len() == self.delta.len() {
            self.labels = Some(labels);
        }
        self
    }

    pub fn label(&self, q: usize) -> String {
        match &self.labels {
            Some(l) => l[q].clone(),
            None => q.to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.delta.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.is_empty()
    }

    pub fn num_letters(&self) -> usize {
        self.num_letters
    }

    pub fn start(&self) -> usize {
        self.initial
    }

    pub fn delta(&self, q: usize, a: usize) -> &[usize] {
        &self.delta[q][a]
    }

    pub fn priorities(&self) -> &[u32] {
        &self.priority
    }

    pub fn rank(&self) -> u32 {
        self.priority.iter().copied().max().unwrap_or(0)
    }

    pub fn flavor_of(&self) -> Flavor {
        self.flavor
    }

    /// States with priority 2 (Büchi) or 0 (co-Büchi); even states otherwise.
    pub fn accepting(&self) -> StateSet {
        (0..self.len())
            .filter(|&q| match self.flavor {
                Flavor::Buchi => self.priority[q] == 2,
                Flavor::CoBuchi => self.priority[q] == 0,
                Flavor::Parity => self.priority[q].is_multiple_of(2),
            })
            .collect()
    }

    pub fn is_deterministic(&self) -> bool {
        self.delta.iter().flatten().all(|s| s.len() <= 1)
    }

    pub fn post_set(&self, s: &StateSet, a: usize) -> StateSet {
        let mut out = StateSet::new();
        for q in s.iter() {
            out.extend(self.delta[q][a].iter().copied());
        }
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(q, row)| {
            row.iter()
                .enumerate()
                .flat_map(move |(a, succ)| succ.iter().map(move |&r| (q, a, r)))
        })
    }

    pub(crate) fn revalidate(self) -> Result<Self, WordError> {
        let labels = self.labels.clone();
        let mut out = Self::new(self.num_letters, self.initial, self.delta, self.priority, self.flavor)?;
        if let Some(l) = labels {
            out = out.with_labels(l);
        }
        Ok(out)
    }

    /// Same transition structure with a different flavor.
    pub fn reflavor(&self, flavor: Flavor) -> Result<Self, WordError> {
        let mut out = Self::new(
            self.num_letters,
            self.initial,
            self.delta.clone(),
            self.priority.clone(),
            flavor,
        )?;
        out.labels = self.labels.clone();
        Ok(out)
    }
}

impl Automaton for WordAutomaton {
    type State = usize;
    type Letter = usize;

    fn initial(&self) -> usize {
        self.initial
    }

    fn post(&self, q: &usize, a: &usize) -> Vec<usize> {
        self.delta[*q][*a].clone()
    }

    fn priority(&self, q: &usize) -> u32 {
        self.priority[*q]
    }

    fn flavor(&self) -> Flavor {
        self.flavor
    }
}

impl IndexedAutomaton for WordAutomaton {
    fn num_states(&self) -> usize {
        self.len()
    }

    fn successor_sets(&self, q: usize) -> Vec<Vec<usize>> {
        let mut out = self.delta[q].clone();
        out.sort();
        out.dedup();
        out
    }
}

/// Materialize the fragment of `a` reachable from its initial state over
/// letters `0..num_letters`, numbering states in breadth-first order.
pub fn explore<A>(a: &A, num_letters: usize) -> (WordAutomaton, Vec<A::State>)
where
    A: Automaton<Letter = usize>,
{
    let mut index: HashMap<A::State, usize> = HashMap::new();
    let mut states = vec![a.initial()];
    index.insert(a.initial(), 0);
    let mut delta: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut i = 0;
    while i < states.len() {
        let q = states[i].clone();
        let mut row = Vec::with_capacity(num_letters);
        for letter in 0..num_letters {
            let mut succ = Vec::new();
            for r in a.post(&q, &letter) {
                let next = states.len();
                let id = *index.entry(r.clone()).or_insert_with(|| {
                    states.push(r);
                    next
                });
                succ.push(id);
            }
            row.push(succ);
        }
        delta.push(row);
        i += 1;
    }
    let priority = states.iter().map(|q| a.priority(q)).collect();
    let labels = states.iter().map(|q| format!("{q:?}")).collect();
    let out = WordAutomaton::new(num_letters, 0, delta, priority, a.flavor())
        .expect("explored automaton is well formed")
        .with_labels(labels);
    (out, states)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(WordAutomaton::from_edges(1, 1, 0, &[(0, 0, 0)], vec![2], Flavor::Buchi).is_ok());
        assert!(matches!(
            WordAutomaton::from_edges(1, 1, 0, &[(0, 0, 0)], vec![0], Flavor::Buchi),
            Err(WordError::BadPriority { .. })
        ));
        assert!(matches!(
            WordAutomaton::from_edges(1, 1, 0, &[(0, 0, 3)], vec![0], Flavor::CoBuchi),
            Err(WordError::BadTransition { .. })
        ));
    }

    #[test]
    fn explore_keeps_reachable_part() {
        let a = WordAutomaton::from_edges(
            3,
            2,
            0,
            &[(0, 0, 1), (1, 1, 0), (2, 0, 2)],
            vec![1, 2, 2],
            Flavor::Buchi,
        )
        .unwrap();
        let (b, states) = explore(&a, 2);
        assert_eq!(states, vec![0, 1]);
        assert_eq!(b.len(), 2);
        assert!(b.is_deterministic());
    }
}
