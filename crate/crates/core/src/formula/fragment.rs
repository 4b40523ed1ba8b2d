use super::alternation::alternation_levels;
use super::ast::{FixKind, Formula};
use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Fragment {
    LimitLinear,
    AFAconjunctive,
    AlternationFree,
    Aconjunctive,
    Unrestricted,
}

impl Fragment {
    pub fn name(self) -> &'static str {
        match self {
            Fragment::LimitLinear => "limit-linear",
            Fragment::AFAconjunctive => "alternation-free-aconjunctive",
            Fragment::AlternationFree => "alternation-free",
            Fragment::Aconjunctive => "aconjunctive",
            Fragment::Unrestricted => "unrestricted",
        }
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FragmentReport {
    pub limit_linear: bool,
    pub alternation_free: bool,
    pub aconjunctive: bool,
    pub af_aconjunctive: bool,
    pub best_fragment: Fragment,
    pub ad: u32,
}

/// Every `μX.ψ` has exactly one occurrence of `X` in `ψ`, and that
/// occurrence is not below a fixpoint of `ψ`.
pub fn linear_mu_occurrences(f: &Formula) -> bool {
    fn outside_fixpoints(f: &Formula, x: &str) -> usize {
        match f {
            Formula::Var(y) => usize::from(x == y),
            Formula::Mu(..) | Formula::Nu(..) => 0,
            _ => f.children().into_iter().map(|c| outside_fixpoints(c, x)).sum(),
        }
    }
    f.subformulas().into_iter().all(|g| match g {
        Formula::Mu(x, b) => b.occurrences(x) == 1 && outside_fixpoints(b, x) == 1,
        _ => true,
    })
}

/// At most one conjunct of every conjunction has a free μ-variable.
///
/// A free ν-variable counts as well when its binder has a free μ-variable
/// (directly or through further ν-variables), since unfolding it brings the
/// μ-variable back into the conjunct.
pub fn is_aconjunctive(f: &Formula) -> bool {
    let binders: Vec<&Formula> = f.subformulas().into_iter().filter(|g| g.as_fixpoint().is_some()).collect();
    let mut tainted: BTreeSet<String> = f
        .binders()
        .into_iter()
        .filter(|(k, _)| *k == FixKind::Mu)
        .map(|(_, x)| x.to_string())
        .collect();
    loop {
        let fresh: Vec<String> = binders
            .iter()
            .filter_map(|g| g.as_fixpoint())
            .filter(|(_, y, body)| !tainted.contains(*y) && body.free_vars().iter().any(|z| z != y && tainted.contains(z)))
            .map(|(_, y, _)| y.to_string())
            .collect();
        if fresh.is_empty() {
            break;
        }
        tainted.extend(fresh);
    }
    let has_free_mu = |g: &Formula| g.free_vars().iter().any(|x| tainted.contains(x));
    f.subformulas().into_iter().all(|g| match g {
        Formula::And(l, r) => !(has_free_mu(l) && has_free_mu(r)),
        _ => true,
    })
}

/// Classify a clean, closed formula.
///
/// The limit-linear flag additionally requires alternation freedom: the
/// occurrence condition alone admits e.g. `nu X. mu Y. (<>Y | <>X)`.
pub fn classify_fragment(f: &Formula) -> FragmentReport {
    let ad = alternation_levels(f).ad;
    let alternation_free = ad <= 1;
    let aconjunctive = is_aconjunctive(f);
    let limit_linear = linear_mu_occurrences(f) && alternation_free;
    let af_aconjunctive = alternation_free && aconjunctive;
    let best_fragment = if limit_linear {
        Fragment::LimitLinear
    } else if af_aconjunctive {
        Fragment::AFAconjunctive
    } else if alternation_free {
        Fragment::AlternationFree
    } else if aconjunctive {
        Fragment::Aconjunctive
    } else {
        Fragment::Unrestricted
    };
    FragmentReport {
        limit_linear,
        alternation_free,
        aconjunctive,
        af_aconjunctive,
        best_fragment,
        ad,
    }
}
