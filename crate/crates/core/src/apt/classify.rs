use super::automaton::{Apt, StateKind};
use crate::graph::Sccs;
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AptClass {
    pub weak: bool,
    pub limit_linear: bool,
    /// Priority-bounded determinism of universal states, restricted to the
    /// strongly connected part of each compartment.
    pub limit_deterministic: bool,
    /// The same condition over every reachable universal state.
    pub limit_deterministic_strict: bool,
}

pub fn classify_apt(a: &Apt) -> AptClass {
    let sccs = a.sccs();
    let weak = sccs.components.iter().all(|c| {
        let p = a.priority(c[0]);
        p <= 1 && c.iter().all(|&q| a.priority(q) == p)
    });
    let limit_linear = weak
        && (0..a.len()).filter(|&q| a.priority(q) == 1).all(|q| {
            let comp = sccs.component_of(q);
            sccs.on_cycle(q)
                && comp.iter().all(|&r| {
                    a.successors(r)
                        .iter()
                        .filter(|s| comp.binary_search(s).is_ok())
                        .count()
                        == 1
                })
        });
    let (limit_deterministic, limit_deterministic_strict) = limit_determinism(a);
    AptClass {
        weak,
        limit_linear,
        limit_deterministic,
        limit_deterministic_strict,
    }
}

fn limit_determinism(a: &Apt) -> (bool, bool) {
    let odd: BTreeSet<u32> = a.priorities().iter().copied().filter(|p| p % 2 == 1).collect();
    let mut cyclic = true;
    let mut strict = true;
    for p in odd {
        let low = |q: usize| a.priority(q) <= p;
        let sub = Sccs::new(a.len(), |q| {
            if low(q) {
                a.successors(q).into_iter().filter(|&r| low(r)).collect()
            } else {
                Vec::new()
            }
        });
        for q in (0..a.len()).filter(|&q| a.priority(q) == p) {
            let comp = sub.component_of(q);
            for &r in comp {
                if a.kind(r) == StateKind::LocalUniversal {
                    let inside = a
                        .successors(r)
                        .iter()
                        .filter(|s| comp.binary_search(s).is_ok())
                        .count();
                    if inside > 1 {
                        cyclic = false;
                    }
                }
            }
            let mut seen = vec![false; a.len()];
            let mut stack = vec![q];
            seen[q] = true;
            while let Some(r) = stack.pop() {
                if a.kind(r) == StateKind::LocalUniversal {
                    for letter in a.letters() {
                        if a.delta(r, letter).iter().filter(|&&s| low(s)).count() > 1 {
                            strict = false;
                        }
                    }
                }
                for s in a.successors(r) {
                    if low(s) && !seen[s] {
                        seen[s] = true;
                        stack.push(s);
                    }
                }
            }
        }
    }
    (cyclic, strict)
}
