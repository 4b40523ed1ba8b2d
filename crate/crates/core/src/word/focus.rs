use super::automaton::{explore, Automaton, Flavor, IndexedAutomaton, WordAutomaton, WordError};
use super::classify::{is_accepting, restricted_sccs};
use super::mh::post_set;
use super::upword::UPWord;
use crate::bitset::StateSet;
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FocusState {
    Unfocused(StateSet),
    Focused(StateSet, usize),
}

impl FocusState {
    pub fn reached(&self) -> &StateSet {
        match self {
            FocusState::Unfocused(u) | FocusState::Focused(u, _) => u,
        }
    }
}

/// History-deterministic co-Büchi automaton for a limit-deterministic
/// co-Büchi automaton.
///
/// Besides the reachable states, a macro-state may focus a single accepting
/// state, which then follows its unique accepting continuation. When the
/// focused run leaves the accepting states the focus is dropped; an
/// unfocused macro-state may focus any reached accepting state.
pub struct Focus<'a, A> {
    inner: &'a A,
    accepting: StateSet,
    /// Component of each accepting state within the accepting subgraph.
    component: Vec<Option<usize>>,
}

impl<'a, A: IndexedAutomaton> Focus<'a, A> {
    pub fn new(inner: &'a A) -> Result<Self, WordError> {
        let n = inner.num_states();
        let accepting: StateSet = (0..n).filter(|&q| is_accepting(inner, q)).collect();
        let sccs = restricted_sccs(inner, |q| accepting.contains(q));
        let mut component = vec![None; n];
        for q in accepting.iter() {
            component[q] = Some(sccs.index[q]);
        }
        for q in accepting.iter() {
            let inside = |r: &usize| component[*r] == component[q];
            if inner.successor_sets(q).iter().any(|s| s.iter().filter(|r| inside(r)).count() > 1) {
                return Err(WordError::NotLimitDeterministic);
            }
        }
        Ok(Self {
            inner,
            accepting,
            component,
        })
    }

    /// The accepting continuation of the focused state `q` under `a`.
    pub fn focus_step(&self, q: usize, a: &A::Letter) -> Option<usize> {
        let succ: Vec<usize> = self
            .inner
            .post(&q, a)
            .into_iter()
            .filter(|&r| self.accepting.contains(r))
            .collect();
        if let [r] = succ.as_slice() {
            return Some(*r);
        }
        let inside: Vec<usize> = succ
            .into_iter()
            .filter(|&r| self.component[r] == self.component[q])
            .collect();
        match inside.as_slice() {
            [r] => Some(*r),
            _ => None,
        }
    }

    pub fn accepting(&self) -> &StateSet {
        &self.accepting
    }

    pub fn bound(&self) -> f64 {
        (self.accepting.len() as f64 + 1.0) * 2f64.powi(self.inner.num_states() as i32)
    }
}

impl<A: IndexedAutomaton> Automaton for Focus<'_, A> {
    type State = FocusState;
    type Letter = A::Letter;

    fn initial(&self) -> FocusState {
        FocusState::Unfocused(StateSet::singleton(self.inner.initial()))
    }

    fn post(&self, s: &FocusState, a: &A::Letter) -> Vec<FocusState> {
        let u = post_set(self.inner, s.reached(), a);
        match s {
            FocusState::Focused(_, q) => match self.focus_step(*q, a) {
                Some(r) => vec![FocusState::Focused(u, r)],
                None => vec![FocusState::Unfocused(u)],
            },
            FocusState::Unfocused(_) => {
                let mut out: Vec<FocusState> = u
                    .intersection(&self.accepting)
                    .iter()
                    .map(|r| FocusState::Focused(u.clone(), r))
                    .collect();
                out.insert(0, FocusState::Unfocused(u));
                out
            }
        }
    }

    fn priority(&self, s: &FocusState) -> u32 {
        u32::from(matches!(s, FocusState::Unfocused(_)))
    }

    fn flavor(&self) -> Flavor {
        Flavor::CoBuchi
    }
}

/// Finite-memory successor choice for a nondeterministic automaton.
pub trait Resolver<A: Automaton> {
    type Memory: Clone + Eq + Hash + Debug;

    fn initial_memory(&self) -> Self::Memory;
    /// A successor in `post(q, a)` together with the updated memory; `None`
    /// only if `q` has no `a`-successor.
    fn choose(&self, mem: &Self::Memory, q: &A::State, a: &A::Letter) -> Option<(A::State, Self::Memory)>;
}

/// Refocuses on the oldest reached accepting state.
///
/// The memory ranks the reached accepting states by age: the age of a state
/// is inherited along focus steps (taking the oldest when several merge),
/// and states reached otherwise are youngest. Ranks are kept dense.
pub struct AgeResolver<'f, 'a, A> {
    focus: &'f Focus<'a, A>,
}

impl<'f, 'a, A: IndexedAutomaton> AgeResolver<'f, 'a, A> {
    pub fn new(focus: &'f Focus<'a, A>) -> Self {
        Self { focus }
    }

    fn update(&self, ages: &[(usize, u32)], a: &A::Letter, next: &StateSet) -> Vec<(usize, u32)> {
        let fresh = u32::MAX;
        let mut raw: Vec<(usize, u32)> = next
            .intersection(&self.focus.accepting)
            .iter()
            .map(|r| (r, fresh))
            .collect();
        for &(q, age) in ages {
            if let Some(r) = self.focus.focus_step(q, a) {
                if let Some(slot) = raw.iter_mut().find(|(s, _)| *s == r) {
                    slot.1 = slot.1.min(age);
                }
            }
        }
        let mut distinct: Vec<u32> = raw.iter().map(|&(_, g)| g).collect();
        distinct.sort_unstable();
        distinct.dedup();
        raw.into_iter()
            .map(|(r, g)| (r, distinct.binary_search(&g).unwrap() as u32))
            .collect()
    }
}

impl<A: IndexedAutomaton> Resolver<Focus<'_, A>> for AgeResolver<'_, '_, A> {
    type Memory = Vec<(usize, u32)>;

    fn initial_memory(&self) -> Self::Memory {
        let q0 = self.focus.inner.initial();
        if self.focus.accepting.contains(q0) {
            vec![(q0, 0)]
        } else {
            Vec::new()
        }
    }

    fn choose(&self, mem: &Self::Memory, q: &FocusState, a: &A::Letter) -> Option<(FocusState, Self::Memory)> {
        let next = post_set(self.focus.inner, q.reached(), a);
        let ages = self.update(mem, a, &next);
        let state = match q {
            FocusState::Focused(..) => self.focus.post(q, a).remove(0),
            FocusState::Unfocused(_) => match ages.iter().min_by_key(|&&(r, g)| (g, r)) {
                Some(&(r, _)) => FocusState::Focused(next, r),
                None => FocusState::Unfocused(next),
            },
        };
        Some((state, ages))
    }
}

/// Whether the run of `h` on `w` chosen by `resolver` is accepting.
pub fn resolver_accepts<A, R>(h: &A, resolver: &R, w: &UPWord<A::Letter>) -> bool
where
    A: Automaton,
    R: Resolver<A>,
{
    let mut seen: HashMap<(A::State, R::Memory, usize), usize> = HashMap::new();
    let mut trace: Vec<u32> = Vec::new();
    let mut state = h.initial();
    let mut mem = resolver.initial_memory();
    let mut pos = 0;
    loop {
        if pos >= w.prefix.len() {
            if let Some(&start) = seen.get(&(state.clone(), mem.clone(), pos)) {
                return trace[start..].iter().max().is_some_and(|p| p % 2 == 0);
            }
            seen.insert((state.clone(), mem.clone(), pos), trace.len());
        }
        let Some((next, next_mem)) = resolver.choose(&mem, &state, w.letter(pos)) else {
            return false;
        };
        debug_assert!(h.post(&state, w.letter(pos)).contains(&next));
        trace.push(h.priority(&next));
        state = next;
        mem = next_mem;
        pos = w.next_position(pos);
    }
}

/// History-deterministic co-Büchi automaton for a limit-deterministic
/// co-Büchi automaton, materialized over its reachable states.
pub fn focus_history_determinize(a: &WordAutomaton) -> Result<WordAutomaton, WordError> {
    let focus = Focus::new(a)?;
    let (out, _) = explore(&focus, a.num_letters());
    assert!(out.len() as f64 <= focus.bound(), "focus method exceeded (|F|+1)·2ⁿ");
    Ok(out)
}
