use super::ast::{FixKind, Formula};
use std::collections::BTreeMap;

/// Alternation depth of a clean formula and the level of each binder.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Alternation {
    pub ad: u32,
    /// Keyed by bound variable.
    pub al: BTreeMap<String, u32>,
    /// Length of the longest alternating path starting at each binder.
    pub depth: BTreeMap<String, u32>,
}

/// Binder kinds and the dependency relation: `deps[X]` holds every `Y`
/// whose body has a free occurrence of `X`.
pub(crate) fn dependencies(
    f: &Formula,
) -> (BTreeMap<String, FixKind>, BTreeMap<String, Vec<String>>) {
    let mut kinds = BTreeMap::new();
    let mut bodies = Vec::new();
    for g in f.subformulas() {
        if let Some((k, x, b)) = g.as_fixpoint() {
            kinds.insert(x.to_string(), k);
            bodies.push((x.to_string(), b));
        }
    }
    let mut deps: BTreeMap<String, Vec<String>> =
        kinds.keys().map(|x| (x.clone(), Vec::new())).collect();
    for (y, body) in &bodies {
        for x in body.free_vars() {
            if x != *y {
                if let Some(v) = deps.get_mut(&x) {
                    v.push(y.clone());
                }
            }
        }
    }
    (kinds, deps)
}

/// Strict part of the dependent nesting order, transitively closed.
fn strictly_below(deps: &BTreeMap<String, Vec<String>>, x: &str) -> Vec<String> {
    let mut seen: Vec<String> = Vec::new();
    let mut stack: Vec<&String> = deps[x].iter().collect();
    while let Some(y) = stack.pop() {
        if !seen.contains(y) {
            seen.push(y.clone());
            stack.extend(deps[y].iter());
        }
    }
    seen
}

pub fn alternation_levels(f: &Formula) -> Alternation {
    let (kinds, deps) = dependencies(f);
    let below: BTreeMap<String, Vec<String>> = kinds
        .keys()
        .map(|x| (x.clone(), strictly_below(&deps, x)))
        .collect();

    fn d(
        x: &str,
        kinds: &BTreeMap<String, FixKind>,
        below: &BTreeMap<String, Vec<String>>,
        memo: &mut BTreeMap<String, u32>,
    ) -> u32 {
        if let Some(&v) = memo.get(x) {
            return v;
        }
        let v = 1 + below[x]
            .iter()
            .filter(|y| kinds[*y] != kinds[x])
            .map(|y| d(y, kinds, below, memo))
            .max()
            .unwrap_or(0);
        memo.insert(x.to_string(), v);
        v
    }

    let mut depth = BTreeMap::new();
    for x in kinds.keys() {
        d(x, &kinds, &below, &mut depth);
    }
    let al = depth
        .iter()
        .map(|(x, &dx)| {
            let level = match kinds[x] {
                FixKind::Mu => 2 * dx.div_ceil(2) - 1,
                FixKind::Nu => 2 * (dx / 2),
            };
            (x.clone(), level)
        })
        .collect();
    Alternation {
        ad: depth.values().copied().max().unwrap_or(0),
        al,
        depth,
    }
}
