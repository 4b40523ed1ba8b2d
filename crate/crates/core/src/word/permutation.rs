use super::automaton::{explore, Automaton, IndexedAutomaton, WordAutomaton, WordError};
use super::classify::is_accepting;
use crate::bitset::StateSet;

/// Macro-state of the permutation method.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermState {
    /// Reachable nondeterministic states.
    pub nondet: StateSet,
    /// Reachable deterministic states, ordered by the age of their runs.
    pub order: Vec<usize>,
    pub priority: u32,
}

/// Determinization of limit-deterministic Büchi automata into parity
/// automata.
///
/// The states reachable from accepting states (`Q_D`) must be deterministic.
/// The deterministic runs are kept in order of age; a run that merges into an
/// older one or dies ends its position, and a run that visits an accepting
/// state makes its position active. The leftmost ending or active position
/// determines the priority.
///
/// If the initial state is deterministic, a fresh nondeterministic copy with
/// index `n` stands in for it.
pub struct Permutation<'a, A> {
    inner: &'a A,
    det: StateSet,
    accepting: StateSet,
    copy: Option<usize>,
}

impl<'a, A: IndexedAutomaton> Permutation<'a, A> {
    pub fn new(inner: &'a A) -> Result<Self, WordError> {
        let n = inner.num_states();
        let accepting: StateSet = (0..n).filter(|&q| is_accepting(inner, q)).collect();
        let mut det = accepting.clone();
        let mut stack: Vec<usize> = accepting.iter().collect();
        while let Some(q) = stack.pop() {
            for r in inner.graph_successors(q) {
                if !det.contains(r) {
                    det.insert(r);
                    stack.push(r);
                }
            }
        }
        if det.iter().any(|q| inner.successor_sets(q).iter().any(|s| s.len() > 1)) {
            return Err(WordError::NotLimitDeterministic);
        }
        let copy = det.contains(inner.initial()).then_some(n);
        Ok(Self {
            inner,
            det,
            accepting,
            copy,
        })
    }

    pub fn deterministic_states(&self) -> &StateSet {
        &self.det
    }

    pub fn max_priority(&self) -> u32 {
        2 * self.det.len() as u32 + 1
    }

    /// `e·(n+1)!` for the input size including the fresh initial copy.
    pub fn bound(&self) -> f64 {
        let n = self.inner.num_states() + usize::from(self.copy.is_some());
        std::f64::consts::E * (1..=n + 1).map(|k| k as f64).product::<f64>()
    }

    fn post_of(&self, q: usize, a: &A::Letter) -> Vec<usize> {
        match self.copy {
            Some(c) if q == c => self.inner.post(&self.inner.initial(), a),
            _ => self.inner.post(&q, a),
        }
    }
}

impl<A: IndexedAutomaton> Automaton for Permutation<'_, A> {
    type State = PermState;
    type Letter = A::Letter;

    fn initial(&self) -> PermState {
        PermState {
            nondet: StateSet::singleton(self.copy.unwrap_or(self.inner.initial())),
            order: Vec::new(),
            priority: 1,
        }
    }

    fn post(&self, s: &PermState, a: &A::Letter) -> Vec<PermState> {
        let mut reached = StateSet::new();
        for q in s.nondet.iter() {
            reached.extend(self.post_of(q, a));
        }
        let moved: Vec<Option<usize>> = s
            .order
            .iter()
            .map(|&q| self.inner.post(&q, a).first().copied())
            .collect();
        let mut order: Vec<usize> = Vec::with_capacity(self.det.len());
        for r in moved.iter().flatten() {
            if !order.contains(r) {
                order.push(*r);
            }
        }
        for r in reached.intersection(&self.det).iter() {
            if !order.contains(&r) {
                order.push(r);
            }
        }
        let d = self.det.len() as u32;
        let mut priority = 1;
        for (i, target) in moved.iter().enumerate() {
            let pos = i as u32 + 1;
            let now = order.get(i).copied();
            if target.is_none() || *target != now {
                priority = 2 * (d - pos) + 3;
                break;
            }
            if now.is_some_and(|r| self.accepting.contains(r)) {
                priority = 2 * (d - pos) + 2;
                break;
            }
        }
        vec![PermState {
            nondet: reached.difference(&self.det),
            order,
            priority,
        }]
    }

    fn priority(&self, s: &PermState) -> u32 {
        s.priority
    }
}

/// Deterministic parity automaton for a limit-deterministic Büchi automaton.
pub fn permutation_determinize(a: &WordAutomaton) -> Result<WordAutomaton, WordError> {
    let p = Permutation::new(a)?;
    let (out, _) = explore(&p, a.num_letters());
    assert!(out.len() as f64 <= p.bound(), "permutation method exceeded e(n+1)!");
    assert!(out.rank() <= p.max_priority());
    Ok(out)
}
