use super::structure::{KripkeError, KripkeStructure};
use crate::bitset::StateSet;
use crate::formula::Formula;
use std::collections::BTreeMap;

/// Assignment of world sets to free variables.
pub type Valuation = BTreeMap<String, StateSet>;

/// ⟦f⟧_η, with fixpoints computed by Knaster–Tarski iteration.
pub fn eval_semantics(
    f: &Formula,
    k: &KripkeStructure,
    eta: &Valuation,
) -> Result<StateSet, KripkeError> {
    let mut env = eta.clone();
    eval(f, k, &mut env)
}

fn all_worlds(k: &KripkeStructure) -> StateSet {
    (0..k.len()).collect()
}

fn eval(f: &Formula, k: &KripkeStructure, env: &mut Valuation) -> Result<StateSet, KripkeError> {
    Ok(match f {
        Formula::True => all_worlds(k),
        Formula::False => StateSet::new(),
        Formula::Atom(p) => (0..k.len()).filter(|&w| k.has_atom(w, p)).collect(),
        Formula::NegAtom(p) => (0..k.len()).filter(|&w| !k.has_atom(w, p)).collect(),
        Formula::And(l, r) => eval(l, k, env)?.intersection(&eval(r, k, env)?),
        Formula::Or(l, r) => {
            let mut s = eval(l, k, env)?;
            s.union_with(&eval(r, k, env)?);
            s
        }
        Formula::Diamond(s) => {
            let t = eval(s, k, env)?;
            (0..k.len())
                .filter(|&w| k.successors(w).iter().any(|&v| t.contains(v)))
                .collect()
        }
        Formula::Box(s) => {
            let t = eval(s, k, env)?;
            (0..k.len())
                .filter(|&w| k.successors(w).iter().all(|&v| t.contains(v)))
                .collect()
        }
        Formula::Var(x) => env
            .get(x)
            .cloned()
            .ok_or_else(|| KripkeError::UnboundVariable(x.clone()))?,
        Formula::Mu(x, b) | Formula::Nu(x, b) => {
            let start = if matches!(f, Formula::Mu(..)) {
                StateSet::new()
            } else {
                all_worlds(k)
            };
            let saved = env.insert(x.clone(), start.clone());
            let mut cur = start;
            let result = loop {
                env.insert(x.clone(), cur.clone());
                let next = eval(b, k, env)?;
                if next == cur {
                    break cur;
                }
                cur = next;
            };
            match saved {
                Some(v) => env.insert(x.clone(), v),
                None => env.remove(x),
            };
            result
        }
    })
}

/// w₀ ∈ ⟦f⟧ for a closed formula.
pub fn satisfies(f: &Formula, k: &KripkeStructure) -> Result<bool, KripkeError> {
    Ok(eval_semantics(f, k, &Valuation::new())?.contains(k.initial()))
}

/// `ψ[X ↦ ηX.ψ]` for a fixpoint formula; other formulas are returned as is.
pub fn unfold_once(f: &Formula) -> Formula {
    match f {
        Formula::Mu(x, b) | Formula::Nu(x, b) => b.substitute(x, f),
        _ => f.clone(),
    }
}
