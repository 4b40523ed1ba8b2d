use super::automaton::{explore, Automaton, Flavor, IndexedAutomaton, WordAutomaton, WordError};
use super::classify::{accepting_cycles, is_accepting};
use super::mh::post_set;
use crate::bitset::StateSet;

/// Macro-state of the circle method: reachable states, token, counter.
pub type CircleState = (StateSet, usize, u32);

/// Determinization of limit-linear co-Büchi automata.
///
/// A token guesses an accepting run on one accepting cycle. While the
/// counter is nonzero the token follows the letters around its cycle; when
/// the guessed run dies the token moves one further position and the counter
/// decreases. At counter zero the token jumps to the next accepting cycle and
/// the counter is reset to the length of the longest cycle.
pub struct Circle<'a, A> {
    inner: &'a A,
    cycle_of: Vec<Option<usize>>,
    cycles: Vec<Vec<usize>>,
    step: Vec<usize>,
    reset: u32,
}

impl<'a, A: IndexedAutomaton> Circle<'a, A> {
    pub fn new(inner: &'a A) -> Result<Self, WordError> {
        let n = inner.num_states();
        let mut cycles = accepting_cycles(inner).ok_or(WordError::NotLimitLinear)?;
        cycles.sort();
        let mut cycle_of = vec![None; n];
        let mut step: Vec<usize> = (0..n).collect();
        for (c, members) in cycles.iter().enumerate() {
            for &q in members {
                cycle_of[q] = Some(c);
                if members.len() > 1 {
                    step[q] = inner
                        .graph_successors(q)
                        .into_iter()
                        .find(|&r| r != q && cycle_of_member(members, r))
                        .expect("accepting cycle has an internal successor");
                }
            }
        }
        let reset = cycles.iter().map(Vec::len).max().unwrap_or(0) as u32;
        Ok(Self {
            inner,
            cycle_of,
            cycles,
            step,
            reset,
        })
    }

    /// The cycle representative following the cycle of `q`, or the first
    /// cycle if `q` lies on none.
    pub fn next(&self, q: usize) -> usize {
        match self.cycle_of[q] {
            Some(_) if self.cycles.len() == 1 => q,
            Some(c) => self.cycles[(c + 1) % self.cycles.len()][0],
            None => self.cycles[0][0],
        }
    }

    pub fn step(&self, q: usize) -> usize {
        self.step[q]
    }

    pub fn bound(&self) -> f64 {
        let n = self.inner.num_states() as f64;
        n * n * 2f64.powi(self.inner.num_states() as i32)
    }

    fn inside(&self, q: usize, succ: &[usize]) -> Vec<usize> {
        let c = self.cycle_of[q].expect("token on a cycle");
        succ.iter().copied().filter(|&r| self.cycle_of[r] == Some(c)).collect()
    }
}

fn cycle_of_member(members: &[usize], r: usize) -> bool {
    members.binary_search(&r).is_ok()
}

impl<A: IndexedAutomaton> Automaton for Circle<'_, A> {
    type State = CircleState;
    type Letter = A::Letter;

    fn initial(&self) -> CircleState {
        let q0 = self.inner.initial();
        (StateSet::singleton(q0), q0, 0)
    }

    fn post(&self, (u, q, c): &CircleState, a: &A::Letter) -> Vec<CircleState> {
        let u2 = post_set(self.inner, u, a);
        let q = *q;
        if self.cycles.is_empty() {
            return vec![(u2, q, 0)];
        }
        if *c == 0 {
            return vec![(u2, self.next(q), self.reset)];
        }
        if u.contains(q) {
            let moved = self.inside(q, &self.inner.post(&q, a));
            if moved.len() == 1 && (moved[0] == self.step(q) || moved[0] == q) {
                return vec![(u2, moved[0], *c)];
            }
        }
        let s = self.step(q);
        let via_letter = self.inside(s, &self.inner.post(&s, a));
        let token = match via_letter.as_slice() {
            [r] => *r,
            _ => self.step(s),
        };
        vec![(u2, token, c - 1)]
    }

    fn priority(&self, (_, _, c): &CircleState) -> u32 {
        u32::from(*c == 0)
    }

    fn flavor(&self) -> Flavor {
        Flavor::CoBuchi
    }
}

/// Deterministic co-Büchi automaton for a limit-linear co-Büchi automaton.
pub fn circle_determinize(a: &WordAutomaton) -> Result<WordAutomaton, WordError> {
    let circle = Circle::new(a)?;
    if a.is_deterministic() && (0..a.len()).all(|q| is_accepting(a, q)) {
        return Ok(a.clone());
    }
    let (out, _) = explore(&circle, a.num_letters());
    assert!(out.len() as f64 <= circle.bound(), "circle method exceeded n²·2ⁿ");
    Ok(out)
}
