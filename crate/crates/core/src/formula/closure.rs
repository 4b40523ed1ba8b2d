use super::alternation::{alternation_levels, Alternation};
use super::ast::{FixKind, Formula};
use indexmap::IndexMap;
use std::collections::BTreeMap;

/// A closure member with its immediate successors resolved to indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Node {
    True,
    False,
    Atom(String),
    NegAtom(String),
    And(usize, usize),
    Or(usize, usize),
    Diamond(usize),
    Box(usize),
    Fix {
        kind: FixKind,
        var: String,
        unfolding: usize,
    },
}

/// The Fischer–Ladner closure of a clean, closed formula.
///
/// Members are interned structurally, so all unfoldings of a fixpoint
/// collapse to one entry. Index 0 is the root formula.
#[derive(Debug, Clone)]
pub struct ClosureTable {
    members: IndexMap<Formula, usize>,
    nodes: Vec<Node>,
    theta: BTreeMap<String, Formula>,
    alternation: Alternation,
}

impl ClosureTable {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn node(&self, i: usize) -> &Node {
        &self.nodes[i]
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn formula(&self, i: usize) -> &Formula {
        self.members.get_index(i).expect("closure index").0
    }

    pub fn formulas(&self) -> impl Iterator<Item = &Formula> {
        self.members.keys()
    }

    pub fn index_of(&self, f: &Formula) -> Option<usize> {
        self.members.get(f).copied()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.members.contains_key(f)
    }

    /// The fixpoint subformula of the input that binds `x`.
    pub fn theta(&self, x: &str) -> Option<&Formula> {
        self.theta.get(x)
    }

    pub fn alternation(&self) -> &Alternation {
        &self.alternation
    }

    pub fn ad(&self) -> u32 {
        self.alternation.ad
    }

    /// Alternation level of the binder of `x`.
    pub fn al(&self, x: &str) -> u32 {
        self.alternation.al[x]
    }

    pub fn atoms(&self) -> Vec<String> {
        self.formula(0).atoms().into_iter().collect()
    }
}

/// Substitute the closed formulas bound in `env` for free variables.
fn close(f: &Formula, env: &BTreeMap<String, Formula>) -> Formula {
    match f {
        Formula::Var(x) => env.get(x).cloned().unwrap_or_else(|| f.clone()),
        _ => f.map_children(|c| close(c, env)),
    }
}

/// Build FL(f). `f` must be clean and closed.
pub fn closure(f: &Formula) -> ClosureTable {
    debug_assert!(f.is_clean() && f.is_closed());
    let mut members: IndexMap<Formula, usize> = IndexMap::new();
    let mut nodes: Vec<Option<Node>> = Vec::new();
    let mut theta = BTreeMap::new();
    for g in f.subformulas() {
        if let Some((_, x, _)) = g.as_fixpoint() {
            theta.insert(x.to_string(), g.clone());
        }
    }

    fn visit(
        f: &Formula,
        env: &mut BTreeMap<String, Formula>,
        members: &mut IndexMap<Formula, usize>,
        nodes: &mut Vec<Option<Node>>,
    ) -> usize {
        if let Formula::Var(x) = f {
            return members[&env[x]];
        }
        let closed = close(f, env);
        if let Some(&i) = members.get(&closed) {
            return i;
        }
        let id = nodes.len();
        members.insert(closed.clone(), id);
        nodes.push(None);
        let node = match f {
            Formula::True => Node::True,
            Formula::False => Node::False,
            Formula::Atom(p) => Node::Atom(p.clone()),
            Formula::NegAtom(p) => Node::NegAtom(p.clone()),
            Formula::And(l, r) => {
                let a = visit(l, env, members, nodes);
                let b = visit(r, env, members, nodes);
                Node::And(a, b)
            }
            Formula::Or(l, r) => {
                let a = visit(l, env, members, nodes);
                let b = visit(r, env, members, nodes);
                Node::Or(a, b)
            }
            Formula::Diamond(s) => Node::Diamond(visit(s, env, members, nodes)),
            Formula::Box(s) => Node::Box(visit(s, env, members, nodes)),
            Formula::Mu(x, b) | Formula::Nu(x, b) => {
                let kind = f.as_fixpoint().unwrap().0;
                let shadowed = env.insert(x.clone(), closed);
                let unfolding = visit(b, env, members, nodes);
                match shadowed {
                    Some(old) => env.insert(x.clone(), old),
                    None => env.remove(x),
                };
                Node::Fix {
                    kind,
                    var: x.clone(),
                    unfolding,
                }
            }
            Formula::Var(_) => unreachable!(),
        };
        nodes[id] = Some(node);
        id
    }

    visit(f, &mut BTreeMap::new(), &mut members, &mut nodes);
    let nodes = nodes.into_iter().map(|n| n.expect("closure node")).collect();
    ClosureTable {
        members,
        nodes,
        theta,
        alternation: alternation_levels(f),
    }
}
