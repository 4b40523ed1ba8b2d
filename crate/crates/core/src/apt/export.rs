use super::automaton::{Apt, Transition};
use std::fmt::Write;

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

impl Apt {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph apt {\n  rankdir=LR;\n");
        for (q, s) in self.states.iter().enumerate() {
            let _ = writeln!(
                out,
                "  q{q} [label=\"{}\\n{} / {}\"{}];",
                escape(&s.label),
                s.kind.symbol(),
                self.priority[q],
                if q == self.initial { ", penwidth=2" } else { "" }
            );
        }
        for (q, s) in self.states.iter().enumerate() {
            match &s.transition {
                Transition::Fixed(v) => {
                    for r in v {
                        let _ = writeln!(out, "  q{q} -> q{r};");
                    }
                }
                Transition::Atom { atom, positive } => {
                    let p = &self.atoms[*atom];
                    let (yes, no) = if *positive {
                        (self.top, self.bot)
                    } else {
                        (self.bot, self.top)
                    };
                    let _ = writeln!(out, "  q{q} -> q{yes} [label=\"{p}\"];");
                    let _ = writeln!(out, "  q{q} -> q{no} [label=\"!{p}\"];");
                }
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
