//! Read-only queries over a built [`Hg2`].

use std::collections::BTreeSet;

use serde::Serialize;

use crate::hg2::Hg2;
use crate::hypergraph::{HyperEdgeId, HyperNodeId, Slot};
use crate::ntriples::Statement;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ResultKind {
    NodeSet,
    EdgeSet,
    Path,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    Hypergraph,
    Graph,
}

/// Ordered, duplicate-free ids with the layer each one comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QueryResult {
    pub kind: ResultKind,
    pub items: Vec<usize>,
    pub provenance: Vec<Layer>,
}

impl QueryResult {
    fn hypergraph(kind: ResultKind, items: Vec<usize>) -> Self {
        let provenance = vec![Layer::Hypergraph; items.len()];
        QueryResult {
            kind,
            items,
            provenance,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn node_ids(&self) -> impl Iterator<Item = HyperNodeId> + '_ {
        self.items.iter().map(|&i| HyperNodeId(i))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = HyperEdgeId> + '_ {
        self.items.iter().map(|&i| HyperEdgeId(i))
    }
}

/// Hyperedges whose subject slot holds `subject_iri`.
pub fn statements_about(hg2: &Hg2, subject_iri: &str) -> QueryResult {
    let mut items = Vec::new();
    if let Some(n) = hg2.lookup_iri(subject_iri) {
        let incidence = hg2.hypergraph().incidence_of(n).unwrap_or_default();
        items.extend(
            incidence
                .iter()
                .filter(|inc| inc.slot == Slot::Tail && inc.position == 0)
                .map(|inc| inc.edge.0),
        );
        items.dedup();
    }
    QueryResult::hypergraph(ResultKind::EdgeSet, items)
}

/// Hypernodes typed as `class_iri` or as any of its descendants.
pub fn instances_of(hg2: &Hg2, class_iri: &str) -> QueryResult {
    let g = hg2.graph();
    let Some(class) = g.lookup(class_iri) else {
        return QueryResult::hypergraph(ResultKind::NodeSet, Vec::new());
    };
    let closure = g.subclass_closure(class).expect("looked-up node exists");
    let nodes: BTreeSet<usize> = hg2
        .typing_connectors()
        .filter(|(_, to)| closure.contains(to))
        .map(|(from, _)| from.0)
        .collect();
    QueryResult::hypergraph(ResultKind::NodeSet, nodes.into_iter().collect())
}

/// Hypernodes forward-reachable from the node of `iri`.
pub fn reachable_from(hg2: &Hg2, iri: &str) -> QueryResult {
    let items = hg2
        .lookup_iri(iri)
        .and_then(|n| hg2.hypergraph().forward_reachable(n).ok())
        .map(|set| set.into_iter().map(|n| n.0).collect())
        .unwrap_or_default();
    QueryResult::hypergraph(ResultKind::NodeSet, items)
}

/// `Some(witness)` when the node of `to_iri` is forward-reachable from the
/// node of `from_iri`. The witness lists hyperedges along a breadth-first
/// path that prefers low edge ids. Identical IRIs always yield an empty
/// witness.
pub fn path_exists(hg2: &Hg2, from_iri: &str, to_iri: &str) -> Option<QueryResult> {
    if from_iri == to_iri {
        return Some(QueryResult::hypergraph(ResultKind::Path, Vec::new()));
    }
    let from = hg2.lookup_iri(from_iri)?;
    let to = hg2.lookup_iri(to_iri)?;
    path_between(hg2, from, to)
}

/// Node-level form of [`path_exists`].
pub fn path_between(hg2: &Hg2, from: HyperNodeId, to: HyperNodeId) -> Option<QueryResult> {
    let path = hg2.hypergraph().find_path(from, to).ok()??;
    Some(QueryResult::hypergraph(
        ResultKind::Path,
        path.into_iter().map(|e| e.0).collect(),
    ))
}

/// The statement a mapper-shaped hyperedge stands for.
pub fn edge_statement(hg2: &Hg2, edge: HyperEdgeId) -> Option<Statement> {
    let e = hg2.hypergraph().edge(edge)?;
    let ([p], [s, o]) = (e.head.as_slice(), e.tail.as_slice()) else {
        return None;
    };
    let term = |n: &HyperNodeId| hg2.payload(*n).and_then(|p| p.to_term());
    let predicate = term(p)?.as_iri()?.clone();
    Statement::new(term(s)?, predicate, term(o)?, 0)
}
