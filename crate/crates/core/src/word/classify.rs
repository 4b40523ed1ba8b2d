use super::automaton::{Flavor, IndexedAutomaton};
use crate::graph::Sccs;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WordClass {
    pub weak: bool,
    pub limit_linear: bool,
    /// Every even-priority state `q` has an internally deterministic
    /// strongly connected compartment within the states of priority `≤ Ω(q)`.
    pub limit_deterministic: bool,
    /// The same check over everything reachable within priorities `≤ Ω(q)`.
    pub limit_deterministic_strict: bool,
}

pub(crate) fn is_accepting<A: IndexedAutomaton>(a: &A, q: usize) -> bool {
    let p = a.priority(&q);
    match a.flavor() {
        Flavor::Buchi => p == 2,
        Flavor::CoBuchi => p == 0,
        Flavor::Parity => p.is_multiple_of(2),
    }
}

/// Strongly connected components of the graph restricted to `keep`.
pub(crate) fn restricted_sccs<A: IndexedAutomaton>(a: &A, keep: impl Fn(usize) -> bool) -> Sccs {
    Sccs::new(a.num_states(), |q| {
        if keep(q) {
            a.graph_successors(q).into_iter().filter(|&r| keep(r)).collect()
        } else {
            Vec::new()
        }
    })
}

/// Accepting cycles of a limit-linear automaton: the non-trivial components
/// of the accepting subgraph without self-loops, plus accepting states whose
/// only internal edge is a self-loop. `None` if the automaton is not
/// limit-linear.
pub(crate) fn accepting_cycles<A: IndexedAutomaton>(a: &A) -> Option<Vec<Vec<usize>>> {
    let n = a.num_states();
    let acc: Vec<bool> = (0..n).map(|q| is_accepting(a, q)).collect();
    let sccs = Sccs::new(n, |q| {
        if acc[q] {
            a.graph_successors(q).into_iter().filter(|&r| acc[r] && r != q).collect()
        } else {
            Vec::new()
        }
    });
    let mut cycles = Vec::new();
    for comp in &sccs.components {
        let q = comp[0];
        if !acc[q] {
            continue;
        }
        if comp.len() == 1 {
            if a.graph_successors(q).contains(&q) {
                cycles.push(comp.clone());
            }
            continue;
        }
        for &r in comp {
            let inside: Vec<usize> = a
                .graph_successors(r)
                .into_iter()
                .filter(|s| *s != r && comp.binary_search(s).is_ok())
                .collect();
            if inside.len() != 1 {
                return None;
            }
            let per_letter_ok = a
                .successor_sets(r)
                .iter()
                .all(|set| set.iter().filter(|s| comp.binary_search(s).is_ok()).count() <= 1);
            if !per_letter_ok {
                return None;
            }
        }
        cycles.push(comp.clone());
    }
    Some(cycles)
}

pub fn classify_word<A: IndexedAutomaton>(a: &A) -> WordClass {
    let n = a.num_states();
    let all = restricted_sccs(a, |_| true);
    let weak = all.components.iter().all(|c| {
        let parity = a.priority(&c[0]) % 2;
        c.iter().all(|q| a.priority(q) % 2 == parity)
    });
    let co_buchi_like = (0..n).all(|q| a.priority(&q) <= 1) || a.flavor() == Flavor::CoBuchi;
    let limit_linear = co_buchi_like && accepting_cycles(a).is_some();

    let evens: BTreeSet<u32> = (0..n).map(|q| a.priority(&q)).filter(|p| p % 2 == 0).collect();
    let mut ld = true;
    let mut strict = true;
    for p in evens {
        let low = |q: usize| a.priority(&q) <= p;
        let sub = restricted_sccs(a, low);
        for q in (0..n).filter(|&q| a.priority(&q) == p) {
            let comp = sub.component_of(q);
            let inside = |s: &usize| comp.binary_search(s).is_ok();
            if comp
                .iter()
                .any(|&r| a.successor_sets(r).iter().any(|set| set.iter().filter(|s| inside(s)).count() > 1))
            {
                ld = false;
            }
            let mut seen = vec![false; n];
            let mut stack = vec![q];
            seen[q] = true;
            while let Some(r) = stack.pop() {
                for set in a.successor_sets(r) {
                    if set.iter().filter(|&&s| low(s)).count() > 1 {
                        strict = false;
                    }
                }
                for s in a.graph_successors(r) {
                    if low(s) && !seen[s] {
                        seen[s] = true;
                        stack.push(s);
                    }
                }
            }
        }
    }
    WordClass {
        weak,
        limit_linear,
        limit_deterministic: ld,
        limit_deterministic_strict: strict,
    }
}
