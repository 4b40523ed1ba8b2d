use super::automaton::{explore, Automaton, Flavor, IndexedAutomaton, WordAutomaton};
use super::classify::restricted_sccs;

/// Büchi automaton guessing a position from which the largest priority seen
/// infinitely often is some even `i`, and then tracking a copy `(q, i)` that
/// may only visit priorities `≤ i`. Copies `(q, i)` with `Ω(q) = i` are
/// accepting.
///
/// State `q < n` is the original state; `(q, i)` is numbered `n·(1 + i/2) + q`.
/// In component mode a copy may only move inside the strongly connected
/// component of `q` among states of priority `≤ i`, and only components
/// that contain a priority-`i` state are entered.
pub struct ParityToBuchi<'a, A> {
    inner: &'a A,
    n: usize,
    layers: usize,
    /// `component[l][q]`: component id of `q` for layer `l` in component mode.
    component: Option<Vec<Vec<Option<usize>>>>,
}

impl<'a, A: IndexedAutomaton> ParityToBuchi<'a, A> {
    pub fn new(inner: &'a A) -> Self {
        let n = inner.num_states();
        let rank = (0..n).map(|q| inner.priority(&q)).max().unwrap_or(0);
        Self {
            inner,
            n,
            layers: rank as usize / 2 + 1,
            component: None,
        }
    }

    pub fn by_components(inner: &'a A) -> Self {
        let mut out = Self::new(inner);
        let mut comps = Vec::with_capacity(out.layers);
        for l in 0..out.layers {
            let i = 2 * l as u32;
            let sccs = restricted_sccs(inner, |q| inner.priority(&q) <= i);
            let mut ids = vec![None; out.n];
            for (c, members) in sccs.components.iter().enumerate() {
                let useful = inner.priority(&members[0]) <= i
                    && sccs.on_cycle(members[0])
                    && members.iter().any(|q| inner.priority(q) == i);
                if useful {
                    for &q in members {
                        ids[q] = Some(c);
                    }
                }
            }
            comps.push(ids);
        }
        out.component = Some(comps);
        out
    }

    pub fn copy(&self, q: usize, i: u32) -> usize {
        self.n * (1 + i as usize / 2) + q
    }

    /// `(q, None)` for an original state, `(q, Some(i))` for a copy.
    pub fn decode(&self, s: usize) -> (usize, Option<u32>) {
        if s < self.n {
            (s, None)
        } else {
            (s % self.n, Some(2 * (s / self.n - 1) as u32))
        }
    }

    fn lift(&self, q: usize, succ: Vec<usize>) -> Vec<usize> {
        let (q, layer) = self.decode(q);
        let mut out = Vec::new();
        match layer {
            None => {
                for &r in &succ {
                    out.push(r);
                    let p = self.inner.priority(&r);
                    if p % 2 == 0 && self.enterable(r, p) {
                        out.push(self.copy(r, p));
                    }
                }
            }
            Some(i) => {
                for &r in &succ {
                    if self.inner.priority(&r) <= i && self.same_component(q, r, i) {
                        out.push(self.copy(r, i));
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn enterable(&self, r: usize, i: u32) -> bool {
        match &self.component {
            None => true,
            Some(c) => c[i as usize / 2][r].is_some(),
        }
    }

    fn same_component(&self, q: usize, r: usize, i: u32) -> bool {
        match &self.component {
            None => true,
            Some(c) => {
                let layer = &c[i as usize / 2];
                layer[q].is_some() && layer[q] == layer[r]
            }
        }
    }

    /// Size bound `(⌈(k+1)/2⌉ + 1)·n`.
    pub fn bound(&self) -> usize {
        (self.layers + 1) * self.n
    }
}

impl<A: IndexedAutomaton> Automaton for ParityToBuchi<'_, A> {
    type State = usize;
    type Letter = A::Letter;

    fn initial(&self) -> usize {
        self.inner.initial()
    }

    fn post(&self, q: &usize, a: &A::Letter) -> Vec<usize> {
        let (orig, _) = self.decode(*q);
        self.lift(*q, self.inner.post(&orig, a))
    }

    fn priority(&self, q: &usize) -> u32 {
        match self.decode(*q) {
            (r, Some(i)) if self.inner.priority(&r) == i => 2,
            _ => 1,
        }
    }

    fn flavor(&self) -> Flavor {
        Flavor::Buchi
    }
}

impl<A: IndexedAutomaton> IndexedAutomaton for ParityToBuchi<'_, A> {
    fn num_states(&self) -> usize {
        self.n * (self.layers + 1)
    }

    fn successor_sets(&self, q: usize) -> Vec<Vec<usize>> {
        let (orig, _) = self.decode(q);
        let mut out: Vec<Vec<usize>> = self
            .inner
            .successor_sets(orig)
            .into_iter()
            .map(|s| self.lift(q, s))
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

fn materialize(p: &ParityToBuchi<'_, WordAutomaton>, a: &WordAutomaton) -> WordAutomaton {
    let (out, states) = explore(p, a.num_letters());
    assert!(out.len() <= p.bound(), "parity to Büchi exceeded its size bound");
    let labels = states
        .iter()
        .map(|&s| match p.decode(s) {
            (q, None) => a.label(q),
            (q, Some(i)) => format!("({},{i})", a.label(q)),
        })
        .collect();
    out.with_labels(labels)
}

/// The reachable part of [`ParityToBuchi::new`].
pub fn parity_to_buchi(a: &WordAutomaton) -> WordAutomaton {
    materialize(&ParityToBuchi::new(a), a)
}

/// The reachable part of [`ParityToBuchi::by_components`]; limit-deterministic
/// inputs yield copies that are deterministic.
pub fn parity_to_buchi_scc(a: &WordAutomaton) -> WordAutomaton {
    materialize(&ParityToBuchi::by_components(a), a)
}
