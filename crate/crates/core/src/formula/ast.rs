use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub enum FixKind {
    Mu,
    Nu,
}

impl FixKind {
    pub fn keyword(self) -> &'static str {
        match self {
            FixKind::Mu => "mu",
            FixKind::Nu => "nu",
        }
    }
}

/// A μ-calculus formula in negation normal form.
///
/// Equality, ordering and hashing are structural, so formulas can be used
/// directly as closure-set keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Atom(String),
    NegAtom(String),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Diamond(Box<Formula>),
    Box(Box<Formula>),
    Var(String),
    Mu(String, Box<Formula>),
    Nu(String, Box<Formula>),
}

impl Formula {
    pub fn atom(p: &str) -> Self {
        Formula::Atom(p.to_string())
    }

    pub fn neg_atom(p: &str) -> Self {
        Formula::NegAtom(p.to_string())
    }

    pub fn var(x: &str) -> Self {
        Formula::Var(x.to_string())
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::Or(Box::new(l), Box::new(r))
    }

    pub fn diamond(f: Formula) -> Self {
        Formula::Diamond(Box::new(f))
    }

    pub fn boxed(f: Formula) -> Self {
        Formula::Box(Box::new(f))
    }

    pub fn mu(x: &str, f: Formula) -> Self {
        Formula::Mu(x.to_string(), Box::new(f))
    }

    pub fn nu(x: &str, f: Formula) -> Self {
        Formula::Nu(x.to_string(), Box::new(f))
    }

    pub fn fix(kind: FixKind, x: &str, f: Formula) -> Self {
        match kind {
            FixKind::Mu => Formula::mu(x, f),
            FixKind::Nu => Formula::nu(x, f),
        }
    }

    /// Binder kind, variable and body of a fixpoint formula.
    pub fn as_fixpoint(&self) -> Option<(FixKind, &str, &Formula)> {
        match self {
            Formula::Mu(x, b) => Some((FixKind::Mu, x, b)),
            Formula::Nu(x, b) => Some((FixKind::Nu, x, b)),
            _ => None,
        }
    }

    pub fn children(&self) -> Vec<&Formula> {
        match self {
            Formula::And(l, r) | Formula::Or(l, r) => vec![l, r],
            Formula::Diamond(s) | Formula::Box(s) | Formula::Mu(_, s) | Formula::Nu(_, s) => {
                vec![s]
            }
            _ => Vec::new(),
        }
    }

    /// Number of nodes of the syntax tree.
    pub fn size(&self) -> usize {
        1 + self.children().into_iter().map(Formula::size).sum::<usize>()
    }

    /// All subformulas in preorder, including `self`.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            out.push(f);
            let mut cs = f.children();
            cs.reverse();
            stack.extend(cs);
        }
        out
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                Formula::Var(x) => {
                    if !bound.contains(x) {
                        out.insert(x.clone());
                    }
                }
                Formula::Mu(x, b) | Formula::Nu(x, b) => {
                    bound.push(x.clone());
                    go(b, bound, out);
                    bound.pop();
                }
                _ => {
                    for c in f.children() {
                        go(c, bound, out);
                    }
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_closed(&self) -> bool {
        self.free_vars().is_empty()
    }

    pub fn has_free(&self, x: &str) -> bool {
        match self {
            Formula::Var(y) => x == y,
            Formula::Mu(y, b) | Formula::Nu(y, b) => y != x && b.has_free(x),
            _ => self.children().into_iter().any(|c| c.has_free(x)),
        }
    }

    /// Number of free occurrences of `x`.
    pub fn occurrences(&self, x: &str) -> usize {
        match self {
            Formula::Var(y) => usize::from(x == y),
            Formula::Mu(y, _) | Formula::Nu(y, _) if y == x => 0,
            _ => self.children().into_iter().map(|c| c.occurrences(x)).sum(),
        }
    }

    /// Atoms mentioned positively or negatively.
    pub fn atoms(&self) -> BTreeSet<String> {
        self.subformulas()
            .into_iter()
            .filter_map(|f| match f {
                Formula::Atom(p) | Formula::NegAtom(p) => Some(p.clone()),
                _ => None,
            })
            .collect()
    }

    /// Replace free occurrences of `x` by `by`.
    ///
    /// Capture is not checked; callers substitute closed formulas only.
    pub fn substitute(&self, x: &str, by: &Formula) -> Formula {
        match self {
            Formula::Var(y) if y == x => by.clone(),
            Formula::Mu(y, _) | Formula::Nu(y, _) if y == x => self.clone(),
            _ => self.map_children(|c| c.substitute(x, by)),
        }
    }

    pub fn map_children(&self, mut g: impl FnMut(&Formula) -> Formula) -> Formula {
        match self {
            Formula::And(l, r) => Formula::and(g(l), g(r)),
            Formula::Or(l, r) => Formula::or(g(l), g(r)),
            Formula::Diamond(s) => Formula::diamond(g(s)),
            Formula::Box(s) => Formula::boxed(g(s)),
            Formula::Mu(x, s) => Formula::mu(x, g(s)),
            Formula::Nu(x, s) => Formula::nu(x, g(s)),
            leaf => leaf.clone(),
        }
    }

    /// Names bound by some binder, in preorder with repetitions.
    pub fn binders(&self) -> Vec<(FixKind, &str)> {
        self.subformulas()
            .into_iter()
            .filter_map(|f| f.as_fixpoint().map(|(k, x, _)| (k, x)))
            .collect()
    }

    pub fn is_clean(&self) -> bool {
        let names = self.binders();
        let set: BTreeSet<&str> = names.iter().map(|(_, x)| *x).collect();
        set.len() == names.len()
    }
}

fn needs_parens(f: &Formula) -> bool {
    matches!(
        f,
        Formula::And(..) | Formula::Or(..) | Formula::Mu(..) | Formula::Nu(..)
    )
}

struct Operand<'a>(&'a Formula);

impl fmt::Display for Operand<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if needs_parens(self.0) {
            write!(f, "({})", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

/// Concrete syntax accepted by the parser; `parse(&f.to_string()) == f`.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Atom(p) => write!(f, "{p}"),
            Formula::NegAtom(p) => write!(f, "~{p}"),
            Formula::Var(x) => write!(f, "{x}"),
            Formula::And(l, r) => write!(f, "{} & {}", Operand(l), Operand(r)),
            Formula::Or(l, r) => write!(f, "{} | {}", Operand(l), Operand(r)),
            Formula::Diamond(s) => write!(f, "<>{}", Operand(s)),
            Formula::Box(s) => write!(f, "[]{}", Operand(s)),
            Formula::Mu(x, s) => write!(f, "mu {x}. {s}"),
            Formula::Nu(x, s) => write!(f, "nu {x}. {s}"),
        }
    }
}
