use super::automaton::Automaton;
use crate::graph::Sccs;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// The ultimately periodic word `prefix · period^ω`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UPWord<L = usize> {
    pub prefix: Vec<L>,
    pub period: Vec<L>,
}

impl<L: Clone> UPWord<L> {
    /// Panics if `period` is empty.
    pub fn new(prefix: Vec<L>, period: Vec<L>) -> Self {
        assert!(!period.is_empty(), "period of an ultimately periodic word is empty");
        Self { prefix, period }
    }

    pub fn positions(&self) -> usize {
        self.prefix.len() + self.period.len()
    }

    pub fn letter(&self, i: usize) -> &L {
        if i < self.prefix.len() {
            &self.prefix[i]
        } else {
            &self.period[i - self.prefix.len()]
        }
    }

    /// Position following `i` in the lasso of positions.
    pub fn next_position(&self, i: usize) -> usize {
        if i + 1 < self.positions() {
            i + 1
        } else {
            self.prefix.len()
        }
    }
}

/// A `(u, v, expected)` membership test vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UpWordVector(pub Vec<usize>, pub Vec<usize>, pub bool);

pub fn load_vectors(json: &str) -> Result<Vec<UpWordVector>, serde_json::Error> {
    serde_json::from_str(json)
}

pub fn save_vectors(v: &[UpWordVector]) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// Whether `a` accepts `w`.
///
/// Builds the product of `a` with the positions of the lasso; the word is
/// accepted iff for some even `p` a reachable strongly connected component of
/// the product restricted to priorities `≤ p` contains a cycle through a
/// state of priority `p`.
pub fn membership_upword<A: Automaton>(a: &A, w: &UPWord<A::Letter>) -> bool {
    let mut index: HashMap<(A::State, usize), usize> = HashMap::new();
    let mut nodes: Vec<(A::State, usize)> = Vec::new();
    let mut succ: Vec<Vec<usize>> = Vec::new();
    let start = (a.initial(), 0usize);
    index.insert(start.clone(), 0);
    nodes.push(start);
    let mut i = 0;
    while i < nodes.len() {
        let (q, pos) = nodes[i].clone();
        let next = w.next_position(pos);
        let mut out = Vec::new();
        for r in a.post(&q, w.letter(pos)) {
            let key = (r, next);
            let fresh = nodes.len();
            let id = *index.entry(key.clone()).or_insert_with(|| {
                nodes.push(key);
                fresh
            });
            out.push(id);
        }
        succ.push(out);
        i += 1;
    }
    let prio: Vec<u32> = nodes.iter().map(|(q, _)| a.priority(q)).collect();
    let mut evens: Vec<u32> = prio.iter().copied().filter(|p| p % 2 == 0).collect();
    evens.sort_unstable();
    evens.dedup();
    evens.into_iter().any(|p| {
        let low = |v: usize| prio[v] <= p;
        let sccs = Sccs::new(nodes.len(), |v| {
            if low(v) {
                succ[v].iter().copied().filter(|&x| low(x)).collect()
            } else {
                Vec::new()
            }
        });
        (0..nodes.len()).any(|v| prio[v] == p && sccs.on_cycle(v))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::automaton::{Flavor, WordAutomaton};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Explicit run enumeration: all `(q, q', m)` such that reading the
    /// period from `q` can end in `q'` with maximal priority `m`, then a
    /// search for a cycle of such blocks with even maximum.
    fn oracle(a: &WordAutomaton, w: &UPWord) -> bool {
        let n = a.len();
        let mut current: BTreeSet<usize> = BTreeSet::from([a.start()]);
        for &l in &w.prefix {
            current = current.iter().flat_map(|&q| a.delta(q, l).to_vec()).collect();
        }
        let mut blocks: BTreeSet<(usize, usize, u32)> = BTreeSet::new();
        for q in 0..n {
            let mut runs = vec![(q, 0u32)];
            for &l in &w.period {
                runs = runs
                    .iter()
                    .flat_map(|&(r, m)| {
                        a.delta(r, l).iter().map(move |&s| (s, m.max(a.priorities()[s])))
                    })
                    .collect::<BTreeSet<_>>()
                    .into_iter()
                    .collect();
            }
            blocks.extend(runs.into_iter().map(|(r, m)| (q, r, m)));
        }
        let mut reach = vec![vec![false; n]; n];
        for &(q, r, _) in &blocks {
            reach[q][r] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if reach[i][k] && reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
        let reachable = |q: usize| current.contains(&q) || current.iter().any(|&c| reach[c][q]);
        let top = a.rank();
        (0..=top).filter(|p| p % 2 == 0).any(|p| {
            let mut low = vec![vec![false; n]; n];
            for &(q, r, m) in &blocks {
                if m <= p {
                    low[q][r] = true;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if low[i][k] && low[k][j] {
                            low[i][j] = true;
                        }
                    }
                }
            }
            blocks.iter().any(|&(q, r, m)| {
                m == p && reachable(q) && (q == r || low[r][q])
            })
        })
    }

    fn circle_example() -> WordAutomaton {
        // x=0 y=1 u=2 z=3, letters a=0 b=1
        WordAutomaton::from_edges(
            4,
            2,
            0,
            &[(0, 0, 1), (0, 0, 3), (1, 1, 2), (2, 0, 1), (3, 1, 3)],
            vec![1, 0, 0, 1],
            Flavor::CoBuchi,
        )
        .unwrap()
    }

    #[test]
    fn single_accepting_loop() {
        let a = WordAutomaton::from_edges(1, 2, 0, &[(0, 0, 0), (0, 1, 0)], vec![0], Flavor::CoBuchi)
            .unwrap();
        assert!(membership_upword(&a, &UPWord::new(vec![1, 0], vec![0, 1, 1])));
    }

    #[test]
    fn circle_example_language() {
        let a = circle_example();
        assert!(membership_upword(&a, &UPWord::new(vec![], vec![0, 1])));
        assert!(membership_upword(&a, &UPWord::new(vec![0], vec![1, 0])));
        assert!(!membership_upword(&a, &UPWord::new(vec![0], vec![1])));
        assert!(!membership_upword(&a, &UPWord::new(vec![0, 1, 0], vec![1])));
    }

    #[test]
    fn vectors_round_trip() {
        let v = vec![UpWordVector(vec![0], vec![1, 0], true)];
        assert_eq!(load_vectors(&save_vectors(&v)).unwrap(), v);
        assert!(!load_vectors("[[[], [1], false]]").unwrap()[0].2);
    }

    proptest! {
        #[test]
        fn agrees_with_run_enumeration(
            n in 1usize..=4,
            edges in proptest::collection::vec((0usize..4, 0usize..2, 0usize..4), 0..14),
            prios in proptest::collection::vec(0u32..4, 4),
            u in proptest::collection::vec(0usize..2, 0..3),
            v in proptest::collection::vec(0usize..2, 1..4),
        ) {
            let edges: Vec<_> = edges.into_iter().filter(|&(q, _, r)| q < n && r < n).collect();
            let a = WordAutomaton::from_edges(n, 2, 0, &edges, prios[..n].to_vec(), Flavor::Parity)
                .unwrap();
            let w = UPWord::new(u, v);
            prop_assert_eq!(membership_upword(&a, &w), oracle(&a, &w));
        }
    }
}
