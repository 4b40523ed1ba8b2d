use super::automaton::{Apt, AptError, AptState, StateKind, Transition, MAX_ATOMS};
use crate::formula::{check_guarded, ClosureTable, Formula, Node};

/// The formula automaton A(φ) with states FL(φ) ∪ {⊤, ⊥}.
///
/// The closure members `true` and `false` are identified with ⊤ and ⊥.
pub fn formula_to_apt(f: &Formula, t: &ClosureTable) -> Result<Apt, AptError> {
    if !f.is_closed() {
        return Err(AptError::NotClosed);
    }
    if !f.is_clean() {
        return Err(AptError::NotClean);
    }
    if !check_guarded(f) {
        return Err(AptError::Unguarded);
    }
    let atoms = t.atoms();
    if atoms.len() > MAX_ATOMS {
        return Err(AptError::AlphabetTooLarge(atoms.len()));
    }

    let mut index = vec![usize::MAX; t.len()];
    let mut next = 0;
    for (i, n) in t.nodes().iter().enumerate() {
        if !matches!(n, Node::True | Node::False) {
            index[i] = next;
            next += 1;
        }
    }
    let (top, bot) = (next, next + 1);
    for (i, n) in t.nodes().iter().enumerate() {
        match n {
            Node::True => index[i] = top,
            Node::False => index[i] = bot,
            _ => {}
        }
    }
    let atom_index = |p: &str| atoms.iter().position(|a| a == p).expect("atom listed");

    let mut states = Vec::with_capacity(next + 2);
    for (i, n) in t.nodes().iter().enumerate() {
        if matches!(n, Node::True | Node::False) {
            continue;
        }
        let pair = |a: usize, b: usize| {
            let (a, b) = (index[a], index[b]);
            if a == b {
                vec![a]
            } else {
                vec![a, b]
            }
        };
        let (kind, transition, assigned) = match n {
            Node::Atom(p) => (
                StateKind::LocalUniversal,
                Transition::Atom {
                    atom: atom_index(p),
                    positive: true,
                },
                None,
            ),
            Node::NegAtom(p) => (
                StateKind::LocalUniversal,
                Transition::Atom {
                    atom: atom_index(p),
                    positive: false,
                },
                None,
            ),
            Node::And(a, b) => (StateKind::LocalUniversal, Transition::Fixed(pair(*a, *b)), None),
            Node::Or(a, b) => (StateKind::LocalExistential, Transition::Fixed(pair(*a, *b)), None),
            Node::Diamond(a) => (
                StateKind::ModalExistential,
                Transition::Fixed(vec![index[*a]]),
                None,
            ),
            Node::Box(a) => (
                StateKind::ModalUniversal,
                Transition::Fixed(vec![index[*a]]),
                None,
            ),
            Node::Fix { var, unfolding, .. } => (
                StateKind::LocalExistential,
                Transition::Fixed(vec![index[*unfolding]]),
                Some(t.al(var)),
            ),
            Node::True | Node::False => unreachable!(),
        };
        states.push(AptState {
            label: t.formula(i).to_string(),
            kind,
            transition,
            assigned,
        });
    }
    states.push(AptState {
        label: "⊤".into(),
        kind: StateKind::LocalUniversal,
        transition: Transition::Fixed(vec![top]),
        assigned: Some(0),
    });
    states.push(AptState {
        label: "⊥".into(),
        kind: StateKind::LocalExistential,
        transition: Transition::Fixed(vec![bot]),
        assigned: Some(1),
    });
    let apt = Apt::new(atoms, states, index[t.root()], top, bot)?;
    apt.check_no_local_loops()?;
    Ok(apt)
}
