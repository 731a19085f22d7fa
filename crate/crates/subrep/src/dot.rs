//! Graphviz output of Hasse diagrams.

use std::fmt::Write as _;

use subrep_core::{Poset, SubsetMask};

fn quote(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

/// A bottom-to-top digraph of the cover relation; elements in `highlight`
/// are filled.
pub fn to_dot(p: &Poset, highlight: Option<SubsetMask>) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for (i, name) in p.names().iter().enumerate() {
        let marked = highlight.is_some_and(|m| m.contains(i));
        if marked {
            writeln!(out, "  {} [style=filled, fillcolor=gray80];", quote(name)).unwrap();
        } else {
            writeln!(out, "  {};", quote(name)).unwrap();
        }
    }
    for (a, b) in p.covers() {
        writeln!(out, "  {} -> {};", quote(p.name(a)), quote(p.name(b))).unwrap();
    }
    out.push_str("}\n");
    out
}
