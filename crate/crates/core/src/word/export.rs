use super::automaton::{WordAutomaton, WordError};
use std::fmt::Write;

impl WordAutomaton {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph word {\n  rankdir=LR;\n");
        for q in 0..self.len() {
            let _ = writeln!(
                out,
                "  s{q} [label=\"{} / {}\"{}];",
                self.label(q).replace('"', "\\\""),
                self.priorities()[q],
                if q == self.start() { ", penwidth=2" } else { "" }
            );
        }
        for (q, a, r) in self.edges() {
            let _ = writeln!(out, "  s{q} -> s{r} [label=\"{a}\"];");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Parse and validate an automaton written by [`WordAutomaton::to_json`].
    pub fn from_json(text: &str) -> Result<Self, WordError> {
        let raw: WordAutomaton = serde_json::from_str(text).map_err(|e| WordError::Json(e.to_string()))?;
        raw.revalidate()
    }
}
