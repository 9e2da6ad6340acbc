//! Graphviz rendering: weights inside the nodes, one undirected arc per unit
//! of multiplicity.

use std::fmt::Write;

use crate::contraction::ContractionCertificate;
use crate::error::Result;
use crate::graph::WeightedMultigraph;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn to_dot(g: &WeightedMultigraph, name: &str) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {{", quote(name)).unwrap();
    out.push_str("  node [shape=circle];\n");
    for (v, w) in g.vertex_weights() {
        writeln!(out, "  {} [label={}];", quote(v.as_str()), quote(&format!("{v}\\n{w}"))).unwrap();
    }
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            writeln!(out, "  {} -- {};", quote(u.as_str()), quote(v.as_str())).unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// One document per intermediate graph, starting with the initial one. The
/// `i`-th graph is named `{name}_step{i}`.
pub fn certificate_to_dot(cert: &ContractionCertificate, name: &str) -> Result<Vec<String>> {
    let replay = cert.replay()?;
    Ok(replay
        .graphs
        .iter()
        .enumerate()
        .map(|(i, g)| to_dot(g, &format!("{name}_step{i}")))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Builtin;
    use crate::published::published_certificate;

    #[test]
    fn k1_has_five_nodes_and_ten_arcs() {
        let dot = to_dot(&Builtin::K1.graph(), "K1");
        assert_eq!(dot.matches("[label=").count(), 5);
        assert_eq!(dot.matches(" -- ").count(), 10);
        assert!(dot.contains("\"v1\\n2\""));
    }

    #[test]
    fn parallel_edges_are_drawn_separately() {
        let dot = to_dot(&Builtin::ExampleG.graph(), "G");
        let g = Builtin::ExampleG.graph();
        assert_eq!(dot.matches(" -- ").count() as u64, g.total_multiplicity());
    }

    #[test]
    fn one_document_per_step() {
        let cert = published_certificate(Builtin::K2).unwrap();
        let docs = certificate_to_dot(&cert, "K2").unwrap();
        assert_eq!(docs.len(), cert.steps.len() + 1);
        assert!(docs.last().unwrap().contains("\\n12\""));
    }
}
