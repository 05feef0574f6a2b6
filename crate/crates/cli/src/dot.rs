//! Graphviz export. Nodes and edges are sorted by label, so output is stable
//! across runs and diff-friendly.

use std::fmt::Write;

use esakia_core::{FinitePoset, FiniteTopology};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT digraph of the Hasse diagram, edges drawn from lower to upper element
/// with `rankdir=BT`. With a topology each node is annotated with its least
/// open neighbourhood.
pub fn export_dot(p: &FinitePoset, t: Option<&FiniteTopology>) -> String {
    let label = |x: usize| p.label(x).into_owned();
    let mut nodes: Vec<usize> = (0..p.len()).collect();
    nodes.sort_by_key(|&x| label(x));
    let mut edges: Vec<(String, String)> = p.covers().iter().map(|&(l, u)| (label(l), label(u))).collect();
    edges.sort();

    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in nodes {
        match t {
            Some(t) => {
                let mut nb: Vec<String> = t.neighbourhood(x).iter().map(label).collect();
                nb.sort();
                let tooltip = format!("N = {{{}}}", nb.join(", "));
                writeln!(out, "  {} [tooltip={}];", quote(&label(x)), quote(&tooltip)).unwrap();
            }
            None => writeln!(out, "  {};", quote(&label(x))).unwrap(),
        }
    }
    for (l, u) in edges {
        writeln!(out, "  {} -> {};", quote(&l), quote(&u)).unwrap();
    }
    out.push_str("}\n");
    out
}
