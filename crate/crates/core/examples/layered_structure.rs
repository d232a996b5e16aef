//! Build a small two-layer structure by hand: seven hypernodes, four
//! hyperedges, six graph nodes and six connectors.
//!
//! cargo run --example layered_structure

use hg2_rdf::{Connector, Entity, Hg2, HyperNodeId, NodePayload};

fn main() {
    let mut hg2 = Hg2::new();
    let v: Vec<_> = (1..=7)
        .map(|k| hg2.add_hypernode(NodePayload::Uri(format!("urn:node:{k}"))))
        .collect();

    let slots: [(&[usize], &[usize]); 4] = [
        (&[1, 2], &[3]),
        (&[3, 4], &[5, 6]),
        (&[4, 5], &[7]),
        (&[5, 6], &[7]),
    ];
    let mut e = Vec::new();
    for (head, tail) in slots {
        let head = head.iter().map(|k| v[k - 1]).collect();
        let tail = tail.iter().map(|k| v[k - 1]).collect();
        e.push(hg2.add_hyperedge(head, tail).expect("nodes exist"));
    }

    let g: Vec<_> = ('a'..='f')
        .map(|c| hg2.graph_mut().intern_class(&format!("urn:class:{c}")))
        .collect();
    for (node, class) in [(0, 0), (5, 1), (1, 3)] {
        hg2.add_connector(Connector::NodeToNode {
            from: v[node],
            to: g[class],
        })
        .unwrap();
    }
    for (edge, class) in [(0, 2), (2, 4), (3, 5)] {
        hg2.add_connector(Connector::EdgeToNode {
            from: e[edge],
            to: g[class],
        })
        .unwrap();
    }

    let list = |ids: &[HyperNodeId]| ids.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    println!("{}", hg2.stats());
    for edge in hg2.hypergraph().edges() {
        println!(
            "{}: head [{}] tail [{}]",
            edge.id,
            list(&edge.head),
            list(&edge.tail)
        );
    }
    for c in hg2.connectors() {
        println!("connector {c}");
    }

    let reach = hg2.hypergraph().forward_reachable(v[0]).unwrap();
    println!(
        "reachable from v0: [{}]",
        list(&reach.into_iter().collect::<Vec<_>>())
    );
    let anchors = hg2.anchors_of(Entity::Edge(e[0])).unwrap();
    let anchors: Vec<_> = anchors.iter().map(|g| hg2.graph().iri(*g).unwrap()).collect();
    println!("anchors of {}: {anchors:?}", e[0]);

    // Connectors must start in the hypergraph and end at an existing graph node.
    let bad = Connector::NodeToNode {
        from: v[0],
        to: hg2_rdf::GraphNodeId(99),
    };
    println!("adding {bad}: {:?}", hg2.add_connector(bad));
}
