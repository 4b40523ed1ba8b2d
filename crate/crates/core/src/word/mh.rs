use super::automaton::{explore, Automaton, Flavor, IndexedAutomaton, WordAutomaton};
use super::classify::is_accepting;
use crate::bitset::StateSet;

pub(crate) fn post_set<A: Automaton<State = usize>>(a: &A, s: &StateSet, letter: &A::Letter) -> StateSet {
    let mut out = StateSet::new();
    for q in s.iter() {
        out.extend(a.post(&q, letter));
    }
    out
}

/// Breakpoint construction for co-Büchi automata: a macro-state `(U, V)`
/// holds the reachable states `U` and the accepting runs `V ⊆ U ∩ F` that
/// have stayed in `F` since the last breakpoint.
pub struct MiyanoHayashi<'a, A> {
    inner: &'a A,
    accepting: StateSet,
}

impl<'a, A: IndexedAutomaton> MiyanoHayashi<'a, A> {
    pub fn new(inner: &'a A) -> Self {
        let accepting = (0..inner.num_states()).filter(|&q| is_accepting(inner, q)).collect();
        Self { inner, accepting }
    }

    pub fn bound(&self) -> f64 {
        3f64.powi(self.inner.num_states() as i32)
    }
}

impl<A: IndexedAutomaton> Automaton for MiyanoHayashi<'_, A> {
    type State = (StateSet, StateSet);
    type Letter = A::Letter;

    fn initial(&self) -> Self::State {
        (StateSet::singleton(self.inner.initial()), StateSet::new())
    }

    fn post(&self, (u, v): &Self::State, a: &A::Letter) -> Vec<Self::State> {
        let u2 = post_set(self.inner, u, a);
        let v2 = if v.is_empty() {
            u2.intersection(&self.accepting)
        } else {
            post_set(self.inner, v, a).intersection(&self.accepting)
        };
        vec![(u2, v2)]
    }

    fn priority(&self, (_, v): &Self::State) -> u32 {
        u32::from(v.is_empty())
    }

    fn flavor(&self) -> Flavor {
        Flavor::CoBuchi
    }
}

/// Deterministic co-Büchi automaton for the language of `a`.
pub fn miyano_hayashi(a: &WordAutomaton) -> WordAutomaton {
    let mh = MiyanoHayashi::new(a);
    let (out, _) = explore(&mh, a.num_letters());
    assert!(out.len() as f64 <= mh.bound(), "breakpoint construction exceeded 3^n");
    out
}
