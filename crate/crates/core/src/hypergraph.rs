//! Directed hypergraph with head/tail-partitioned hyperedges.
//!
//! Node payloads are opaque here. Head and tail are ordered lists so callers
//! can give positions a meaning; the same node may appear in both.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperNodeId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperEdgeId(pub usize);

impl fmt::Display for HyperNodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for HyperEdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Head,
    Tail,
}

/// One occurrence of a node inside a hyperedge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Incidence {
    pub edge: HyperEdgeId,
    pub slot: Slot,
    pub position: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HyperEdge {
    pub id: HyperEdgeId,
    pub head: Vec<HyperNodeId>,
    pub tail: Vec<HyperNodeId>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum HypergraphError {
    #[error("unknown hypernode {0}")]
    UnknownNode(HyperNodeId),
    #[error("unknown hyperedge {0}")]
    UnknownEdge(HyperEdgeId),
    #[error("hyperedge {0:?} slot is empty")]
    EmptySlot(Slot),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph<N> {
    nodes: Vec<N>,
    edges: Vec<HyperEdge>,
    incidence: Vec<Vec<Incidence>>,
}

impl<N> Default for Hypergraph<N> {
    fn default() -> Self {
        Hypergraph {
            nodes: Vec::new(),
            edges: Vec::new(),
            incidence: Vec::new(),
        }
    }
}

impl<N> Hypergraph<N> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, id: HyperNodeId) -> bool {
        id.0 < self.nodes.len()
    }

    pub fn contains_edge(&self, id: HyperEdgeId) -> bool {
        id.0 < self.edges.len()
    }

    pub fn node(&self, id: HyperNodeId) -> Option<&N> {
        self.nodes.get(id.0)
    }

    pub fn edge(&self, id: HyperEdgeId) -> Option<&HyperEdge> {
        self.edges.get(id.0)
    }

    /// Nodes with their ids, in id order.
    pub fn nodes(&self) -> impl ExactSizeIterator<Item = (HyperNodeId, &N)> + '_ {
        self.nodes.iter().enumerate().map(|(i, n)| (HyperNodeId(i), n))
    }

    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    /// Appends a node; its id equals the previous node count.
    pub fn add_node(&mut self, payload: N) -> HyperNodeId {
        let id = HyperNodeId(self.nodes.len());
        self.nodes.push(payload);
        self.incidence.push(Vec::new());
        id
    }

    pub fn add_hyperedge(
        &mut self,
        head: Vec<HyperNodeId>,
        tail: Vec<HyperNodeId>,
    ) -> Result<HyperEdgeId, HypergraphError> {
        if head.is_empty() {
            return Err(HypergraphError::EmptySlot(Slot::Head));
        }
        if tail.is_empty() {
            return Err(HypergraphError::EmptySlot(Slot::Tail));
        }
        if let Some(&bad) = head.iter().chain(&tail).find(|n| !self.contains_node(**n)) {
            return Err(HypergraphError::UnknownNode(bad));
        }
        let id = HyperEdgeId(self.edges.len());
        let edge = HyperEdge { id, head, tail };
        index_edge(&mut self.incidence, &edge);
        self.edges.push(edge);
        Ok(id)
    }

    /// Occurrences of `node`, ordered by edge id, then head before tail, then
    /// position.
    pub fn incidence_of(&self, node: HyperNodeId) -> Result<&[Incidence], HypergraphError> {
        self.incidence
            .get(node.0)
            .map(Vec::as_slice)
            .ok_or(HypergraphError::UnknownNode(node))
    }

    /// Recomputes the incidence index from the edge list alone.
    pub fn rebuild_incidence(&self) -> Vec<Vec<Incidence>> {
        let mut incidence = vec![Vec::new(); self.nodes.len()];
        for edge in &self.edges {
            index_edge(&mut incidence, edge);
        }
        incidence
    }

    pub fn incidence_index(&self) -> &[Vec<Incidence>] {
        &self.incidence
    }

    /// Edges listing `node` in their head, in edge-id order.
    fn heads_of(&self, node: HyperNodeId) -> impl Iterator<Item = HyperEdgeId> + '_ {
        let mut last = None;
        self.incidence[node.0]
            .iter()
            .filter(|inc| inc.slot == Slot::Head)
            .map(|inc| inc.edge)
            .filter(move |e| {
                let fresh = last != Some(*e);
                last = Some(*e);
                fresh
            })
    }

    /// Least fixed point of "if `n` is reachable and `n` is in the head of
    /// `E`, every tail node of `E` is reachable". `start` is included only if
    /// some edge leads back to it.
    pub fn forward_reachable(&self, start: HyperNodeId) -> Result<BTreeSet<HyperNodeId>, HypergraphError> {
        if !self.contains_node(start) {
            return Err(HypergraphError::UnknownNode(start));
        }
        let mut reached = BTreeSet::new();
        let mut expanded = vec![false; self.nodes.len()];
        let mut queue = VecDeque::from([start]);
        expanded[start.0] = true;
        while let Some(n) = queue.pop_front() {
            for e in self.heads_of(n) {
                for &t in &self.edges[e.0].tail {
                    reached.insert(t);
                    if !expanded[t.0] {
                        expanded[t.0] = true;
                        queue.push_back(t);
                    }
                }
            }
        }
        Ok(reached)
    }

    /// Breadth-first hyperedge path from `from` to `to`, exploring edges in
    /// ascending id order. `Some(vec![])` when `from == to`.
    pub fn find_path(
        &self,
        from: HyperNodeId,
        to: HyperNodeId,
    ) -> Result<Option<Vec<HyperEdgeId>>, HypergraphError> {
        for n in [from, to] {
            if !self.contains_node(n) {
                return Err(HypergraphError::UnknownNode(n));
            }
        }
        if from == to {
            return Ok(Some(Vec::new()));
        }
        // parent[n] = (edge, predecessor) that first discovered n
        let mut parent: Vec<Option<(HyperEdgeId, HyperNodeId)>> = vec![None; self.nodes.len()];
        let mut seen = vec![false; self.nodes.len()];
        seen[from.0] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(n) = queue.pop_front() {
            for e in self.heads_of(n) {
                for &t in &self.edges[e.0].tail {
                    if seen[t.0] {
                        continue;
                    }
                    seen[t.0] = true;
                    parent[t.0] = Some((e, n));
                    if t == to {
                        let mut path = Vec::new();
                        let mut cur = to;
                        while let Some((edge, prev)) = parent[cur.0] {
                            path.push(edge);
                            cur = prev;
                        }
                        path.reverse();
                        return Ok(Some(path));
                    }
                    queue.push_back(t);
                }
            }
        }
        Ok(None)
    }
}

fn index_edge(incidence: &mut [Vec<Incidence>], edge: &HyperEdge) {
    for (slot, members) in [(Slot::Head, &edge.head), (Slot::Tail, &edge.tail)] {
        for (position, n) in members.iter().enumerate() {
            incidence[n.0].push(Incidence {
                edge: edge.id,
                slot,
                position,
            });
        }
    }
}
