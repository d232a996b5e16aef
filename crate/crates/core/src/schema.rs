//! Labeled directed graph over RDFS classes and properties.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::vocab;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphNodeId(pub usize);

impl fmt::Display for GraphNodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}

/// The four schema edge kinds, written `s`, `t`, `d` and `r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    SubClassOf,
    Type,
    Domain,
    Range,
}

impl EdgeKind {
    pub const ALL: [EdgeKind; 4] = [
        EdgeKind::SubClassOf,
        EdgeKind::Type,
        EdgeKind::Domain,
        EdgeKind::Range,
    ];

    pub fn code(self) -> char {
        match self {
            EdgeKind::SubClassOf => 's',
            EdgeKind::Type => 't',
            EdgeKind::Domain => 'd',
            EdgeKind::Range => 'r',
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        match code {
            "s" => Some(EdgeKind::SubClassOf),
            "t" => Some(EdgeKind::Type),
            "d" => Some(EdgeKind::Domain),
            "r" => Some(EdgeKind::Range),
            _ => None,
        }
    }

    /// The RDFS predicate this kind stands for.
    pub fn predicate_iri(self) -> &'static str {
        match self {
            EdgeKind::SubClassOf => vocab::RDFS_SUBCLASS_OF,
            EdgeKind::Type => vocab::RDF_TYPE,
            EdgeKind::Domain => vocab::RDFS_DOMAIN,
            EdgeKind::Range => vocab::RDFS_RANGE,
        }
    }

    pub fn from_predicate(iri: &str) -> Option<Self> {
        EdgeKind::ALL.into_iter().find(|k| k.predicate_iri() == iri)
    }
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Constraint {
    Domain,
    Range,
}

impl From<Constraint> for EdgeKind {
    fn from(c: Constraint) -> Self {
        match c {
            Constraint::Domain => EdgeKind::Domain,
            Constraint::Range => EdgeKind::Range,
        }
    }
}

/// `SubClassOf` edges point from the child class to its parent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GraphEdge {
    pub from: GraphNodeId,
    pub to: GraphNodeId,
    pub kind: EdgeKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum SchemaError {
    #[error("unknown graph node {0}")]
    UnknownNode(GraphNodeId),
}

#[derive(Clone, Debug, Default)]
pub struct SchemaGraph {
    iris: Vec<String>,
    index: HashMap<String, GraphNodeId>,
    edges: Vec<GraphEdge>,
    edge_set: HashSet<GraphEdge>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

// The lookup tables are derived from `iris` and `edges`.
impl PartialEq for SchemaGraph {
    fn eq(&self, other: &Self) -> bool {
        self.iris == other.iris && self.edges == other.edges
    }
}

impl Eq for SchemaGraph {}

impl SchemaGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph holding only the built-in RDF/RDFS vocabulary.
    pub fn load_builtin_vocabulary() -> Self {
        let mut g = SchemaGraph::new();
        g.load_builtin_into();
        g
    }

    /// Adds the built-in vocabulary to this graph. Idempotent.
    pub fn load_builtin_into(&mut self) {
        for iri in vocab::BUILTIN {
            self.intern_class(iri);
        }
        let resource = self.intern_class(vocab::RDFS_RESOURCE);
        for class in vocab::BUILTIN_RESOURCE_SUBCLASSES {
            let child = self.intern_class(class);
            self.insert_edge(GraphEdge {
                from: child,
                to: resource,
                kind: EdgeKind::SubClassOf,
            });
        }
    }

    pub fn node_count(&self) -> usize {
        self.iris.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, id: GraphNodeId) -> bool {
        id.0 < self.iris.len()
    }

    /// Returns the node for `iri`, creating it on first sight.
    pub fn intern_class(&mut self, iri: &str) -> GraphNodeId {
        if let Some(&id) = self.index.get(iri) {
            return id;
        }
        let id = GraphNodeId(self.iris.len());
        self.iris.push(iri.to_owned());
        self.index.insert(iri.to_owned(), id);
        self.outgoing.push(Vec::new());
        self.incoming.push(Vec::new());
        id
    }

    pub fn lookup(&self, iri: &str) -> Option<GraphNodeId> {
        self.index.get(iri).copied()
    }

    pub fn iri(&self, id: GraphNodeId) -> Option<&str> {
        self.iris.get(id.0).map(String::as_str)
    }

    pub fn nodes(&self) -> impl ExactSizeIterator<Item = (GraphNodeId, &str)> + '_ {
        self.iris
            .iter()
            .enumerate()
            .map(|(i, iri)| (GraphNodeId(i), iri.as_str()))
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn edges_from(&self, id: GraphNodeId) -> impl Iterator<Item = &GraphEdge> + '_ {
        self.outgoing
            .get(id.0)
            .into_iter()
            .flatten()
            .map(|&i| &self.edges[i])
    }

    /// Records an edge. Returns `false` if the same edge already existed.
    pub fn add_schema_edge(
        &mut self,
        from: GraphNodeId,
        to: GraphNodeId,
        kind: EdgeKind,
    ) -> Result<bool, SchemaError> {
        for n in [from, to] {
            if !self.contains(n) {
                return Err(SchemaError::UnknownNode(n));
            }
        }
        Ok(self.insert_edge(GraphEdge { from, to, kind }))
    }

    fn insert_edge(&mut self, edge: GraphEdge) -> bool {
        if !self.edge_set.insert(edge) {
            return false;
        }
        let idx = self.edges.len();
        self.edges.push(edge);
        self.outgoing[edge.from.0].push(idx);
        self.incoming[edge.to.0].push(idx);
        true
    }

    /// The class together with every descendant along `SubClassOf` edges.
    /// Terminates on cycles.
    pub fn subclass_closure(&self, class: GraphNodeId) -> Result<BTreeSet<GraphNodeId>, SchemaError> {
        if !self.contains(class) {
            return Err(SchemaError::UnknownNode(class));
        }
        let mut closure = BTreeSet::from([class]);
        let mut stack = vec![class];
        while let Some(parent) = stack.pop() {
            for &i in &self.incoming[parent.0] {
                let edge = self.edges[i];
                if edge.kind == EdgeKind::SubClassOf && closure.insert(edge.from) {
                    stack.push(edge.from);
                }
            }
        }
        Ok(closure)
    }

    /// Target of the first-declared domain or range edge of `property`.
    pub fn constraint_of(
        &self,
        property: GraphNodeId,
        which: Constraint,
    ) -> Result<Option<GraphNodeId>, SchemaError> {
        if !self.contains(property) {
            return Err(SchemaError::UnknownNode(property));
        }
        let kind = EdgeKind::from(which);
        Ok(self.edges_from(property).find(|e| e.kind == kind).map(|e| e.to))
    }

    /// Rebuilds a graph from node IRIs and edges; used by deserialization.
    /// Fails on an edge that references a missing node. Duplicate IRIs keep
    /// their first id in the lookup table.
    pub(crate) fn from_parts(iris: Vec<String>, edges: Vec<GraphEdge>) -> Result<Self, SchemaError> {
        let mut g = SchemaGraph::new();
        for iri in iris {
            let id = GraphNodeId(g.iris.len());
            g.index.entry(iri.clone()).or_insert(id);
            g.iris.push(iri);
            g.outgoing.push(Vec::new());
            g.incoming.push(Vec::new());
        }
        for edge in edges {
            g.add_schema_edge(edge.from, edge.to, edge.kind)?;
        }
        Ok(g)
    }
}
