use super::ast::Formula;
use std::collections::{BTreeMap, BTreeSet};

/// Record of the binders renamed by [`make_clean`], in preorder.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CleanWarning {
    pub renamed: Vec<(String, String)>,
}

impl std::fmt::Display for CleanWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "formula was not clean; renamed binders")?;
        for (old, new) in &self.renamed {
            write!(f, " {old}->{new}")?;
        }
        Ok(())
    }
}

/// α-rename so that every variable is bound at most once.
///
/// Names bound more than once are replaced at every binder by fresh names
/// `X0, X1, …`. Already clean formulas are returned unchanged.
pub fn make_clean(f: &Formula) -> (Formula, Option<CleanWarning>) {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for (_, x) in f.binders() {
        *counts.entry(x.to_string()).or_default() += 1;
    }
    if counts.values().all(|&c| c <= 1) {
        return (f.clone(), None);
    }
    let mut used: BTreeSet<String> = counts.keys().cloned().collect();
    let mut next_index: BTreeMap<String, usize> = BTreeMap::new();
    let mut renamed = Vec::new();

    struct Ctx<'a> {
        counts: &'a BTreeMap<String, usize>,
        used: &'a mut BTreeSet<String>,
        next_index: &'a mut BTreeMap<String, usize>,
        renamed: &'a mut Vec<(String, String)>,
    }

    fn fresh(ctx: &mut Ctx<'_>, x: &str) -> String {
        loop {
            let i = ctx.next_index.entry(x.to_string()).or_default();
            let cand = format!("{x}{i}");
            *i += 1;
            if ctx.used.insert(cand.clone()) {
                return cand;
            }
        }
    }

    fn go(f: &Formula, env: &mut Vec<(String, String)>, ctx: &mut Ctx<'_>) -> Formula {
        match f {
            Formula::Var(x) => {
                let target = env
                    .iter()
                    .rev()
                    .find(|(old, _)| old == x)
                    .map(|(_, new)| new.clone())
                    .unwrap_or_else(|| x.clone());
                Formula::Var(target)
            }
            Formula::Mu(x, b) | Formula::Nu(x, b) => {
                let kind = f.as_fixpoint().unwrap().0;
                let new = if ctx.counts.get(x).copied().unwrap_or(0) > 1 {
                    let n = fresh(ctx, x);
                    ctx.renamed.push((x.clone(), n.clone()));
                    n
                } else {
                    x.clone()
                };
                env.push((x.clone(), new.clone()));
                let body = go(b, env, ctx);
                env.pop();
                Formula::fix(kind, &new, body)
            }
            _ => f.map_children(|c| go(c, env, ctx)),
        }
    }

    let mut ctx = Ctx {
        counts: &counts,
        used: &mut used,
        next_index: &mut next_index,
        renamed: &mut renamed,
    };
    let out = go(f, &mut Vec::new(), &mut ctx);
    (out, Some(CleanWarning { renamed }))
}

/// True iff every bound variable occurrence lies under a modality that is
/// itself inside the binder's scope.
pub fn check_guarded(f: &Formula) -> bool {
    fn go(f: &Formula, depth: usize, binders: &mut Vec<(String, usize)>) -> bool {
        match f {
            Formula::Var(x) => match binders.iter().rev().find(|(y, _)| y == x) {
                Some((_, d)) => depth > *d,
                None => true,
            },
            Formula::Diamond(s) | Formula::Box(s) => go(s, depth + 1, binders),
            Formula::Mu(x, b) | Formula::Nu(x, b) => {
                binders.push((x.clone(), depth));
                let ok = go(b, depth, binders);
                binders.pop();
                ok
            }
            _ => f.children().into_iter().all(|c| go(c, depth, binders)),
        }
    }
    go(f, 0, &mut Vec::new())
}
