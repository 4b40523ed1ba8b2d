//! Formulas: parsing, normalization, closure and fragment analysis.

mod alternation;
mod ast;
mod closure;
mod fragment;
mod normalize;
mod parser;

pub use alternation::{alternation_levels, Alternation};
pub use ast::{FixKind, Formula};
pub use closure::{closure, ClosureTable, Node};
pub use fragment::{
    classify_fragment, is_aconjunctive, linear_mu_occurrences, Fragment, FragmentReport,
};
pub use normalize::{check_guarded, make_clean, CleanWarning};
pub use parser::{parse, ParseError};

