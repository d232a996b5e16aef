//! The two-layer structure: a hypergraph of instance terms, a schema graph,
//! and connectors that always point from the hypergraph layer down to the
//! graph layer.

use std::collections::HashMap;
use std::fmt;

use indexmap::IndexSet;
use thiserror::Error;

use crate::hypergraph::{HyperEdgeId, HyperNodeId, Hypergraph, HypergraphError};
use crate::mapper::NodePayload;
use crate::schema::{GraphNodeId, SchemaGraph};
use crate::vocab;

/// A dependency link from a hypergraph entity to a graph node. There is no
/// variant originating in the graph layer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connector {
    NodeToNode { from: HyperNodeId, to: GraphNodeId },
    EdgeToNode { from: HyperEdgeId, to: GraphNodeId },
}

impl Connector {
    pub fn target(&self) -> GraphNodeId {
        match *self {
            Connector::NodeToNode { to, .. } | Connector::EdgeToNode { to, .. } => to,
        }
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connector::NodeToNode { from, to } => write!(f, "c^v({from} -> {to})"),
            Connector::EdgeToNode { from, to } => write!(f, "c^e({from} -> {to})"),
        }
    }
}

/// A hypergraph-layer entity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Entity {
    Node(HyperNodeId),
    Edge(HyperEdgeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum Hg2Error {
    #[error("unknown hypernode {0}")]
    UnknownHyperNode(HyperNodeId),
    #[error("unknown hyperedge {0}")]
    UnknownHyperEdge(HyperEdgeId),
    #[error("unknown graph node {0}")]
    UnknownGraphNode(GraphNodeId),
    #[error(transparent)]
    Hypergraph(#[from] HypergraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LayeringViolation {
    /// A connector endpoint does not exist in its layer.
    DanglingEndpoint(Connector),
}

impl fmt::Display for LayeringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LayeringViolation::DanglingEndpoint(c) => write!(f, "DanglingEndpoint {c}"),
        }
    }
}

/// Entity counts: `|V^h|`, `|E^h|`, `|V^g|`, `|E^g|`, `|C^v|`, `|C^e|`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct Stats {
    pub hypernodes: usize,
    pub hyperedges: usize,
    pub graph_nodes: usize,
    pub graph_edges: usize,
    pub connectors_v: usize,
    pub connectors_e: usize,
}

impl fmt::Display for Stats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "hypernodes    {}", self.hypernodes)?;
        writeln!(f, "hyperedges    {}", self.hyperedges)?;
        writeln!(f, "graph_nodes   {}", self.graph_nodes)?;
        writeln!(f, "graph_edges   {}", self.graph_edges)?;
        writeln!(f, "connectors_v  {}", self.connectors_v)?;
        write!(f, "connectors_e  {}", self.connectors_e)
    }
}

type EdgeKey = (Vec<HyperNodeId>, Vec<HyperNodeId>);

#[derive(Clone, Debug, Default)]
pub struct Hg2 {
    h: Hypergraph<NodePayload>,
    g: SchemaGraph,
    c_v: IndexSet<(HyperNodeId, GraphNodeId)>,
    c_e: IndexSet<(HyperEdgeId, GraphNodeId)>,
    // first node / edge seen for each payload / slot layout
    term_index: HashMap<NodePayload, HyperNodeId>,
    edge_index: HashMap<EdgeKey, HyperEdgeId>,
}

impl PartialEq for Hg2 {
    fn eq(&self, other: &Self) -> bool {
        self.h == other.h
            && self.g == other.g
            && self.c_v.iter().eq(other.c_v.iter())
            && self.c_e.iter().eq(other.c_e.iter())
    }
}

impl Eq for Hg2 {}

impl Hg2 {
    /// Both layers empty.
    pub fn new() -> Self {
        Self::default()
    }

    /// Empty hypergraph over the built-in schema vocabulary.
    pub fn with_builtin_vocabulary() -> Self {
        Hg2 {
            g: SchemaGraph::load_builtin_vocabulary(),
            ..Self::default()
        }
    }

    pub fn hypergraph(&self) -> &Hypergraph<NodePayload> {
        &self.h
    }

    pub fn graph(&self) -> &SchemaGraph {
        &self.g
    }

    /// The schema graph only grows, so connectors stay valid under mutation.
    pub fn graph_mut(&mut self) -> &mut SchemaGraph {
        &mut self.g
    }

    pub fn payload(&self, node: HyperNodeId) -> Option<&NodePayload> {
        self.h.node(node)
    }

    /// Always appends a new hypernode.
    pub fn add_hypernode(&mut self, payload: NodePayload) -> HyperNodeId {
        let id = self.h.add_node(payload.clone());
        self.term_index.entry(payload).or_insert(id);
        id
    }

    /// Returns the existing node carrying `payload`, or adds one.
    pub fn intern_hypernode(&mut self, payload: NodePayload) -> HyperNodeId {
        match self.term_index.get(&payload) {
            Some(&id) => id,
            None => self.add_hypernode(payload),
        }
    }

    pub fn lookup_node(&self, payload: &NodePayload) -> Option<HyperNodeId> {
        self.term_index.get(payload).copied()
    }

    pub fn lookup_iri(&self, iri: &str) -> Option<HyperNodeId> {
        self.lookup_node(&NodePayload::Uri(iri.to_owned()))
    }

    /// Always appends a new hyperedge.
    pub fn add_hyperedge(
        &mut self,
        head: Vec<HyperNodeId>,
        tail: Vec<HyperNodeId>,
    ) -> Result<HyperEdgeId, Hg2Error> {
        let key = (head.clone(), tail.clone());
        let id = self.h.add_hyperedge(head, tail)?;
        self.edge_index.entry(key).or_insert(id);
        Ok(id)
    }

    /// Returns the existing edge with exactly these slots, or adds one. The
    /// flag is `true` when a new edge was created.
    pub fn intern_hyperedge(
        &mut self,
        head: Vec<HyperNodeId>,
        tail: Vec<HyperNodeId>,
    ) -> Result<(HyperEdgeId, bool), Hg2Error> {
        if let Some(&id) = self.edge_index.get(&(head.clone(), tail.clone())) {
            return Ok((id, false));
        }
        self.add_hyperedge(head, tail).map(|id| (id, true))
    }

    /// Adds a connector after checking both endpoints. Returns `false` for a
    /// duplicate.
    pub fn add_connector(&mut self, connector: Connector) -> Result<bool, Hg2Error> {
        if let Some(err) = self.endpoint_error(&connector) {
            return Err(err);
        }
        Ok(self.insert_connector_unchecked(connector))
    }

    pub(crate) fn insert_connector_unchecked(&mut self, connector: Connector) -> bool {
        match connector {
            Connector::NodeToNode { from, to } => self.c_v.insert((from, to)),
            Connector::EdgeToNode { from, to } => self.c_e.insert((from, to)),
        }
    }

    fn endpoint_error(&self, connector: &Connector) -> Option<Hg2Error> {
        match *connector {
            Connector::NodeToNode { from, .. } if !self.h.contains_node(from) => {
                Some(Hg2Error::UnknownHyperNode(from))
            }
            Connector::EdgeToNode { from, .. } if !self.h.contains_edge(from) => {
                Some(Hg2Error::UnknownHyperEdge(from))
            }
            c if !self.g.contains(c.target()) => Some(Hg2Error::UnknownGraphNode(c.target())),
            _ => None,
        }
    }

    /// Node-to-node connectors (`C^v`) in insertion order.
    pub fn connectors_v(&self) -> impl ExactSizeIterator<Item = (HyperNodeId, GraphNodeId)> + '_ {
        self.c_v.iter().copied()
    }

    /// Edge-to-node connectors (`C^e`) in insertion order.
    pub fn connectors_e(&self) -> impl ExactSizeIterator<Item = (HyperEdgeId, GraphNodeId)> + '_ {
        self.c_e.iter().copied()
    }

    /// All connectors, `C^v` first.
    pub fn connectors(&self) -> impl Iterator<Item = Connector> + '_ {
        self.connectors_v()
            .map(|(from, to)| Connector::NodeToNode { from, to })
            .chain(
                self.connectors_e()
                    .map(|(from, to)| Connector::EdgeToNode { from, to }),
            )
    }

    pub fn connector_count(&self) -> usize {
        self.c_v.len() + self.c_e.len()
    }

    /// Graph nodes one connector hop away from `entity`, in insertion order.
    pub fn anchors_of(&self, entity: Entity) -> Result<Vec<GraphNodeId>, Hg2Error> {
        match entity {
            Entity::Node(n) => {
                if !self.h.contains_node(n) {
                    return Err(Hg2Error::UnknownHyperNode(n));
                }
                Ok(self
                    .c_v
                    .iter()
                    .filter(|(f, _)| *f == n)
                    .map(|(_, t)| *t)
                    .collect())
            }
            Entity::Edge(e) => {
                if !self.h.contains_edge(e) {
                    return Err(Hg2Error::UnknownHyperEdge(e));
                }
                Ok(self
                    .c_e
                    .iter()
                    .filter(|(f, _)| *f == e)
                    .map(|(_, t)| *t)
                    .collect())
            }
        }
    }

    /// Node-to-node connectors other than those pointing at the role anchors
    /// (`rdf:subject`, `rdf:predicate`, `rdf:object`, `rdf:datatype`).
    pub fn typing_connectors(&self) -> impl Iterator<Item = (HyperNodeId, GraphNodeId)> + '_ {
        let roles: Vec<_> = vocab::ROLE_ANCHORS
            .iter()
            .filter_map(|iri| self.g.lookup(iri))
            .collect();
        self.connectors_v().filter(move |(_, t)| !roles.contains(t))
    }

    /// Graph nodes that `node` is typed as.
    pub fn typing_anchors_of(&self, node: HyperNodeId) -> Vec<GraphNodeId> {
        self.typing_connectors()
            .filter(|(f, _)| *f == node)
            .map(|(_, t)| t)
            .collect()
    }

    /// Reports every connector whose endpoint is missing from its layer.
    pub fn validate_layering(&self) -> Vec<LayeringViolation> {
        self.connectors()
            .filter(|c| self.endpoint_error(c).is_some())
            .map(LayeringViolation::DanglingEndpoint)
            .collect()
    }

    pub fn stats(&self) -> Stats {
        Stats {
            hypernodes: self.h.node_count(),
            hyperedges: self.h.edge_count(),
            graph_nodes: self.g.node_count(),
            graph_edges: self.g.edge_count(),
            connectors_v: self.c_v.len(),
            connectors_e: self.c_e.len(),
        }
    }
}
