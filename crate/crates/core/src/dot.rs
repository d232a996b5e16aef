//! Graphviz rendering of an [`Hg2`].
//!
//! DOT has no hyperedges, so each hyperedge becomes a small square junction
//! vertex: head nodes link into it (drawn bold, no arrowhead) and it links
//! out to its tail nodes. The two layers are separate clusters; connectors
//! are dashed links between them, bold for edge-to-node connectors.

use std::fmt::Write;

use crate::hg2::Hg2;

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => {}
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub fn to_dot(hg2: &Hg2) -> String {
    let h = hg2.hypergraph();
    let g = hg2.graph();
    let mut out = String::new();

    // writes to a String cannot fail
    let _ = writeln!(out, "digraph hg2 {{");
    let _ = writeln!(out, "  compound=true;");
    let _ = writeln!(out, "  node [fontsize=10];");

    let _ = writeln!(out, "  subgraph cluster_hypergraph {{");
    let _ = writeln!(out, "    label=\"H\";");
    for (id, payload) in h.nodes() {
        let _ = writeln!(out, "    h{} [label={}];", id.0, quote(&payload.to_string()));
    }
    for edge in h.edges() {
        let _ = writeln!(
            out,
            "    e{} [shape=square, width=0.25, fixedsize=true, label={}];",
            edge.id.0,
            quote(&format!("E{}", edge.id.0))
        );
    }
    for edge in h.edges() {
        for n in &edge.head {
            let _ = writeln!(
                out,
                "    h{} -> e{} [arrowhead=none, style=bold];",
                n.0, edge.id.0
            );
        }
        for n in &edge.tail {
            let _ = writeln!(out, "    e{} -> h{};", edge.id.0, n.0);
        }
    }
    let _ = writeln!(out, "  }}");

    let _ = writeln!(out, "  subgraph cluster_graph {{");
    let _ = writeln!(out, "    label=\"G\";");
    for (id, iri) in g.nodes() {
        let _ = writeln!(out, "    g{} [shape=box, label={}];", id.0, quote(iri));
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "    g{} -> g{} [label=\"{}\"];",
            e.from.0,
            e.to.0,
            e.kind.code()
        );
    }
    let _ = writeln!(out, "  }}");

    for (from, to) in hg2.connectors_v() {
        let _ = writeln!(out, "  h{} -> g{} [style=dashed, arrowhead=box];", from.0, to.0);
    }
    for (from, to) in hg2.connectors_e() {
        let _ = writeln!(
            out,
            "  e{} -> g{} [style=\"dashed,bold\", arrowhead=box];",
            from.0, to.0
        );
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapper::NodePayload;

    #[test]
    fn empty_structure_has_both_clusters() {
        let dot = to_dot(&Hg2::new());
        assert!(dot.contains("subgraph cluster_hypergraph {"));
        assert!(dot.contains("subgraph cluster_graph {"));
        assert!(dot.trim_end().ends_with('}'));
    }

    #[test]
    fn labels_are_escaped() {
        let mut hg2 = Hg2::new();
        hg2.add_hypernode(NodePayload::plain_literal("say \"hi\"\\"));
        let dot = to_dot(&hg2);
        assert!(dot.contains(r#"h0 [label="\"say \\\"hi\\\"\\\\\""];"#), "{dot}");
    }
}
