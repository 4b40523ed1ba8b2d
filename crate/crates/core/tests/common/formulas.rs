use mu_sat::formula::{closure, FixKind, Formula};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Random closed, clean and guarded formulas.
pub struct FormulaGen {
    rng: StdRng,
    atoms: Vec<String>,
    fresh: usize,
}

#[derive(Clone)]
struct Bound {
    name: String,
    guarded: bool,
}

impl FormulaGen {
    pub fn new(seed: u64, atoms: &[&str]) -> Self {
        Self {
            rng: StdRng::seed_from_u64(seed),
            atoms: atoms.iter().map(|a| a.to_string()).collect(),
            fresh: 0,
        }
    }

    pub fn formula(&mut self, size: usize) -> Formula {
        self.fresh = 0;
        self.go(size, &[])
    }

    fn leaf(&mut self, scope: &[Bound]) -> Formula {
        let usable: Vec<&Bound> = scope.iter().filter(|b| b.guarded).collect();
        if !usable.is_empty() && self.rng.gen_bool(0.6) {
            let b = usable[self.rng.gen_range(0..usable.len())];
            return Formula::var(&b.name);
        }
        let p = self.atoms[self.rng.gen_range(0..self.atoms.len())].clone();
        match self.rng.gen_range(0..10) {
            0 => Formula::True,
            1 => Formula::False,
            2..=5 => Formula::atom(&p),
            _ => Formula::neg_atom(&p),
        }
    }

    fn go(&mut self, size: usize, scope: &[Bound]) -> Formula {
        if size <= 1 {
            return self.leaf(scope);
        }
        match self.rng.gen_range(0..6) {
            0 | 1 => {
                let left = self.rng.gen_range(1..size);
                let l = self.go(left, scope);
                let r = self.go(size - left, scope);
                if self.rng.gen_bool(0.5) {
                    Formula::and(l, r)
                } else {
                    Formula::or(l, r)
                }
            }
            2 | 3 => {
                let inner: Vec<Bound> = scope
                    .iter()
                    .map(|b| Bound {
                        guarded: true,
                        ..b.clone()
                    })
                    .collect();
                let body = self.go(size - 1, &inner);
                if self.rng.gen_bool(0.5) {
                    Formula::diamond(body)
                } else {
                    Formula::boxed(body)
                }
            }
            _ => {
                let name = format!("X{}", self.fresh);
                self.fresh += 1;
                let mut inner = scope.to_vec();
                inner.push(Bound {
                    name: name.clone(),
                    guarded: false,
                });
                let body = self.go(size - 1, &inner);
                let kind = if self.rng.gen_bool(0.5) { FixKind::Mu } else { FixKind::Nu };
                Formula::fix(kind, &name, body)
            }
        }
    }
}

/// Random formulas with `|FL| ≤ max_fl`, drawn until `accept` holds for
/// `count` of them.
pub fn sample_formulas(
    seed: u64,
    count: usize,
    max_fl: usize,
    atoms: &[&str],
    accept: impl Fn(&Formula) -> bool,
) -> Vec<Formula> {
    let mut gen = FormulaGen::new(seed, atoms);
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        assert!(tries < 1_000_000, "generator yield too low");
        let size = 2 + tries % 14;
        let f = gen.formula(size);
        if closure(&f).len() <= max_fl && accept(&f) {
            out.push(f);
        }
    }
    out
}

/// Formulas with known satisfiability status.
pub const CORPUS: &[(&str, bool)] = &[
    ("p & ~p", false),
    ("false", false),
    ("<>false", false),
    ("[]false", false),
    ("mu X. <>X", false),
    ("mu X. []X", false),
    ("mu X. (<>X & []X)", false),
    ("mu X. ((p & ~p) | <>X)", false),
    ("(nu X. (p & []X)) & <>~p", false),
    ("(mu X. (p | <>X)) & (nu Y. (~p & []Y))", false),
    ("<>p & []~p", false),
    ("(mu X. (q | (p & <>X))) & (nu Y. (~q & []Y))", false),
    ("(nu X. (p & <>X)) & (mu Y. (~p | []Y))", false),
    ("(nu X. <>X) & false", false),
    ("(nu X. (q & []X)) & (mu Y. (~q | <>Y))", false),
    ("<>(p & ~p)", false),
    ("[]p & <>(~p & q)", false),
    ("<>p & []q & <>~q", false),
    ("(nu X. mu Y. ((p & <>X) | <>Y)) & (mu Z. ((nu W. (~p & []W)) | []Z))", false),
    ("(nu X. ([]X & mu Y. (p | []Y))) & (mu Z. (nu W. (~p & <>W)) | <>Z)", false),
    ("p", true),
    ("true", true),
    ("<>true", true),
    ("p | ~p", true),
    ("nu X. <>X", true),
    ("nu X. (p & []X)", true),
    ("mu X. (p | <>X)", true),
    ("mu X. (q | (p & <>X))", true),
    ("mu X. (q | (p & []X))", true),
    ("<>p & <>~p", true),
    ("(nu X. (p & []X)) & <>p", true),
    ("(mu X. (p | <>X)) & (mu Y. (~p | <>Y))", true),
    ("nu X. (((p & <>~p) | (~p & <>p)) & []X)", true),
    ("mu X. ([]X | p)", true),
    ("nu X. (<>X & (mu Y. (p | <>Y)))", true),
    ("nu X. ([]X & (mu Y. (p | []Y)))", true),
    ("nu X. ([]X & (mu Y. (p | <>Y)) & (mu Z. (~p | <>Z)))", true),
    ("(nu X. (q & <>X)) & (mu Y. (p | <>Y))", true),
    ("mu X. ((p & []q) | <>X)", true),
    ("nu X. mu Y. ((p & <>X) | <>Y)", true),
    ("nu X. mu Y. ((p & []X) | []Y)", true),
    ("mu X. nu Y. ((p & <>X) | (~p & <>Y))", true),
    ("mu X. nu Y. ((p & []X) | (~p & []Y))", true),
    ("(nu X. (<>X & <>~p)) & p", true),
    ("nu X. mu Y. ((p & <>X) | (~p & <>Y)) & (nu Z. mu W. ((~p & <>Z) | <>W))", true),
    ("(nu X. (<>X & q)) & (nu Y. mu Z. ((p & <>Y) | <>Z))", true),
    ("mu X. (p | <>X | []X)", true),
    ("mu X. (<>X | <>(p & <>X))", false),
    ("(mu X. (p | <>X | <><>X)) & (nu Y. (~p & []Y))", false),
    ("nu X. ((mu Y. (p | <>Y | []Y)) & []X)", true),
    ("mu X. ((<>X & []X) | p)", true),
    ("(mu X. ((<>X & <>X) | p)) & (nu Y. (~p & []Y))", false),
    ("mu X. ((<>X & <>(q | X)) | (p & q))", true),
    ("(mu X. ((<>X & []X) | q)) & (nu Y. (~q & []Y))", false),
];
