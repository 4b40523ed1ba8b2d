use super::automaton::{Apt, AptError};
use crate::graph::Sccs;

/// Total priority function from the assigned partial one.
///
/// An unassigned state on a cycle receives the least `p` such that some
/// cycle through it meets only assigned priorities `≤ p`, i.e. the minimum
/// over its cycles of their largest assigned priority. It never exceeds the
/// largest assigned priority of any cycle through it, so every cycle keeps
/// the parity fixed by its binders. Unassigned states on no cycle receive 0.
pub fn complete_priorities(a: &Apt) -> Result<Vec<u32>, AptError> {
    let n = a.len();
    let assigned: Vec<Option<u32>> = (0..n).map(|q| a.state(q).assigned).collect();
    let below = |p: Option<u32>| {
        let keep: Vec<bool> = assigned.iter().map(|&x| x.is_none_or(|x| Some(x) <= p)).collect();
        Sccs::new(n, |q| {
            if keep[q] {
                a.successors(q).into_iter().filter(|&r| keep[r]).collect()
            } else {
                Vec::new()
            }
        })
    };
    let free = below(None);
    if let Some(q) = (0..n).find(|&q| assigned[q].is_none() && free.on_cycle(q)) {
        return Err(AptError::UnprioritizedCycle(q));
    }
    let all = a.sccs();
    let mut out: Vec<Option<u32>> = (0..n)
        .map(|q| assigned[q].or((!all.on_cycle(q)).then_some(0)))
        .collect();
    let mut levels: Vec<u32> = assigned.iter().flatten().copied().collect();
    levels.sort_unstable();
    levels.dedup();
    for p in levels {
        if out.iter().all(Option::is_some) {
            break;
        }
        let sccs = below(Some(p));
        for q in 0..n {
            if out[q].is_none() && sccs.on_cycle(q) {
                out[q] = Some(p);
            }
        }
    }
    Ok(out.into_iter().map(|p| p.expect("every cycle has an assigned state")).collect())
}
