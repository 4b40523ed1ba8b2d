//! Strongly connected components of small explicit graphs.

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

/// SCC decomposition of a graph on `0..n`.
#[derive(Debug, Clone)]
pub struct Sccs {
    /// Components, each sorted ascending, in reverse topological order.
    pub components: Vec<Vec<usize>>,
    /// Component index of every node.
    pub index: Vec<usize>,
    /// Whether the component contains a cycle (size > 1 or a self-loop).
    pub nontrivial: Vec<bool>,
}

impl Sccs {
    pub fn new<I>(n: usize, mut succ: impl FnMut(usize) -> I) -> Self
    where
        I: IntoIterator<Item = usize>,
    {
        let mut g: DiGraph<(), ()> = DiGraph::with_capacity(n, n);
        for _ in 0..n {
            g.add_node(());
        }
        let mut self_loop = vec![false; n];
        for v in 0..n {
            for w in succ(v) {
                if v == w {
                    self_loop[v] = true;
                }
                g.add_edge(NodeIndex::new(v), NodeIndex::new(w), ());
            }
        }
        let mut components: Vec<Vec<usize>> = tarjan_scc(&g)
            .into_iter()
            .map(|c| {
                let mut c: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
                c.sort_unstable();
                c
            })
            .collect();
        components.retain(|c| !c.is_empty());
        let mut index = vec![0; n];
        for (i, c) in components.iter().enumerate() {
            for &v in c {
                index[v] = i;
            }
        }
        let nontrivial = components
            .iter()
            .map(|c| c.len() > 1 || self_loop[c[0]])
            .collect();
        Sccs {
            components,
            index,
            nontrivial,
        }
    }

    pub fn component_of(&self, v: usize) -> &[usize] {
        &self.components[self.index[v]]
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.index[a] == self.index[b]
    }

    pub fn on_cycle(&self, v: usize) -> bool {
        self.nontrivial[self.index[v]]
    }
}
