//! JSON document form of an [`Hg2`] (format `hg2/1`).
//!
//! All references are dense integer ids in first-seen order, so a given
//! structure always serializes to the same bytes.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hg2::{Connector, Hg2};
use crate::hypergraph::{HyperEdgeId, HyperNodeId};
use crate::mapper::NodePayload;
use crate::schema::{EdgeKind, GraphEdge, GraphNodeId, SchemaGraph};

pub const FORMAT_VERSION: &str = "hg2/1";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("schema violation: {0}")]
    SchemaViolation(String),
    #[error("unknown {section} kind {kind:?}")]
    UnknownKind { section: &'static str, kind: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub hypernodes: Vec<NodeEntry>,
    pub hyperedges: Vec<EdgeEntry>,
    pub graph_nodes: Vec<GraphNodeEntry>,
    pub graph_edges: Vec<GraphEdgeEntry>,
    pub connectors_v: Vec<ConnectorEntry>,
    pub connectors_e: Vec<ConnectorEntry>,
    pub meta: Meta,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub format: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NodeEntry {
    pub id: usize,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub iri: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lexical_form: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub language_tag: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub datatype: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub id: usize,
    pub head: Vec<usize>,
    pub tail: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphNodeEntry {
    pub id: usize,
    pub iri: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphEdgeEntry {
    pub from: usize,
    pub to: usize,
    pub kind: String,
}

/// `kind` is `"v"` in `connectors_v` and `"e"` in `connectors_e`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectorEntry {
    pub kind: String,
    pub from: usize,
    pub to: usize,
}

impl From<&NodePayload> for NodeEntry {
    fn from(payload: &NodePayload) -> Self {
        let mut entry = NodeEntry {
            id: 0,
            kind: String::new(),
            iri: None,
            label: None,
            lexical_form: None,
            language_tag: None,
            datatype: None,
        };
        match payload {
            NodePayload::Uri(iri) => {
                entry.kind = "uri".into();
                entry.iri = Some(iri.clone());
            }
            NodePayload::Blank(label) => {
                entry.kind = "blank".into();
                entry.label = Some(label.clone());
            }
            NodePayload::Literal {
                lexical_form,
                language_tag,
                datatype_iri,
            } => {
                entry.kind = "literal".into();
                entry.lexical_form = Some(lexical_form.clone());
                entry.language_tag = language_tag.clone();
                entry.datatype = datatype_iri.clone();
            }
        }
        entry
    }
}

impl NodeEntry {
    fn into_payload(self) -> Result<NodePayload, DocumentError> {
        let id = self.id;
        let stray = |what: &str| {
            DocumentError::SchemaViolation(format!(
                "hypernode {id}: unexpected field {what} for kind {}",
                self.kind
            ))
        };
        let missing =
            |what: &str| DocumentError::SchemaViolation(format!("hypernode {id}: missing field {what}"));
        match self.kind.as_str() {
            "uri" => {
                if self.label.is_some()
                    || self.lexical_form.is_some()
                    || self.language_tag.is_some()
                    || self.datatype.is_some()
                {
                    return Err(stray("label/lexical_form/language_tag/datatype"));
                }
                self.iri
                    .clone()
                    .map(NodePayload::Uri)
                    .ok_or_else(|| missing("iri"))
            }
            "blank" => {
                if self.iri.is_some()
                    || self.lexical_form.is_some()
                    || self.language_tag.is_some()
                    || self.datatype.is_some()
                {
                    return Err(stray("iri/lexical_form/language_tag/datatype"));
                }
                self.label
                    .clone()
                    .map(NodePayload::Blank)
                    .ok_or_else(|| missing("label"))
            }
            "literal" => {
                if self.iri.is_some() || self.label.is_some() {
                    return Err(stray("iri/label"));
                }
                let lexical_form = self.lexical_form.clone().ok_or_else(|| missing("lexical_form"))?;
                Ok(NodePayload::Literal {
                    lexical_form,
                    language_tag: self.language_tag,
                    datatype_iri: self.datatype,
                })
            }
            _ => Err(DocumentError::UnknownKind {
                section: "hypernode",
                kind: self.kind,
            }),
        }
    }
}

pub fn to_document(hg2: &Hg2) -> Document {
    let h = hg2.hypergraph();
    let g = hg2.graph();
    Document {
        hypernodes: h
            .nodes()
            .map(|(id, payload)| NodeEntry {
                id: id.0,
                ..NodeEntry::from(payload)
            })
            .collect(),
        hyperedges: h
            .edges()
            .iter()
            .map(|e| EdgeEntry {
                id: e.id.0,
                head: e.head.iter().map(|n| n.0).collect(),
                tail: e.tail.iter().map(|n| n.0).collect(),
            })
            .collect(),
        graph_nodes: g
            .nodes()
            .map(|(id, iri)| GraphNodeEntry {
                id: id.0,
                iri: iri.to_owned(),
            })
            .collect(),
        graph_edges: g
            .edges()
            .iter()
            .map(|e| GraphEdgeEntry {
                from: e.from.0,
                to: e.to.0,
                kind: e.kind.code().to_string(),
            })
            .collect(),
        connectors_v: hg2
            .connectors_v()
            .map(|(from, to)| ConnectorEntry {
                kind: "v".into(),
                from: from.0,
                to: to.0,
            })
            .collect(),
        connectors_e: hg2
            .connectors_e()
            .map(|(from, to)| ConnectorEntry {
                kind: "e".into(),
                from: from.0,
                to: to.0,
            })
            .collect(),
        meta: Meta {
            format: FORMAT_VERSION.into(),
        },
    }
}

fn check_dense(section: &str, ids: impl Iterator<Item = usize>) -> Result<(), DocumentError> {
    for (pos, id) in ids.enumerate() {
        if pos != id {
            return Err(DocumentError::SchemaViolation(format!(
                "{section}: id {id} at position {pos}; ids must be dense and ordered"
            )));
        }
    }
    Ok(())
}

fn connector_kind(
    section: &'static str,
    entry: &ConnectorEntry,
    expected: &str,
) -> Result<(), DocumentError> {
    match entry.kind.as_str() {
        k if k == expected => Ok(()),
        "v" | "e" => Err(DocumentError::SchemaViolation(format!(
            "{section}: connector of kind {:?} in the wrong section",
            entry.kind
        ))),
        _ => Err(DocumentError::UnknownKind {
            section: "connector",
            kind: entry.kind.clone(),
        }),
    }
}

/// Rebuilds an [`Hg2`]. Structural problems (bad ids, unknown kinds, edges
/// over missing nodes) are errors. Connectors with missing endpoints are
/// kept so that layering validation can report them.
pub fn from_document(doc: Document) -> Result<Hg2, DocumentError> {
    if doc.meta.format != FORMAT_VERSION {
        return Err(DocumentError::SchemaViolation(format!(
            "unsupported format {:?}, expected {FORMAT_VERSION:?}",
            doc.meta.format
        )));
    }
    check_dense("hypernodes", doc.hypernodes.iter().map(|n| n.id))?;
    check_dense("hyperedges", doc.hyperedges.iter().map(|e| e.id))?;
    check_dense("graph_nodes", doc.graph_nodes.iter().map(|n| n.id))?;

    let mut seen = std::collections::HashSet::new();
    for n in &doc.graph_nodes {
        if !seen.insert(n.iri.as_str()) {
            return Err(DocumentError::SchemaViolation(format!(
                "graph_nodes: duplicate iri {:?}",
                n.iri
            )));
        }
    }
    let mut edges = Vec::with_capacity(doc.graph_edges.len());
    for e in &doc.graph_edges {
        let kind = EdgeKind::from_code(&e.kind).ok_or_else(|| DocumentError::UnknownKind {
            section: "graph edge",
            kind: e.kind.clone(),
        })?;
        edges.push(GraphEdge {
            from: GraphNodeId(e.from),
            to: GraphNodeId(e.to),
            kind,
        });
    }
    let graph = SchemaGraph::from_parts(doc.graph_nodes.into_iter().map(|n| n.iri).collect(), edges)
        .map_err(|e| DocumentError::SchemaViolation(format!("graph_edges: {e}")))?;

    let mut hg2 = Hg2::new();
    *hg2.graph_mut() = graph;
    for entry in doc.hypernodes {
        let payload = entry.into_payload()?;
        hg2.add_hypernode(payload);
    }
    for e in doc.hyperedges {
        let id = e.id;
        hg2.add_hyperedge(
            e.head.into_iter().map(HyperNodeId).collect(),
            e.tail.into_iter().map(HyperNodeId).collect(),
        )
        .map_err(|err| DocumentError::SchemaViolation(format!("hyperedge {id}: {err}")))?;
    }
    for c in &doc.connectors_v {
        connector_kind("connectors_v", c, "v")?;
        hg2.insert_connector_unchecked(Connector::NodeToNode {
            from: HyperNodeId(c.from),
            to: GraphNodeId(c.to),
        });
    }
    for c in &doc.connectors_e {
        connector_kind("connectors_e", c, "e")?;
        hg2.insert_connector_unchecked(Connector::EdgeToNode {
            from: HyperEdgeId(c.from),
            to: GraphNodeId(c.to),
        });
    }
    Ok(hg2)
}

/// Pretty-printed JSON with a trailing newline.
pub fn serialize(hg2: &Hg2) -> String {
    let mut out = serde_json::to_string_pretty(&to_document(hg2)).expect("document is plain data");
    out.push('\n');
    out
}

pub fn deserialize(text: &str) -> Result<Hg2, DocumentError> {
    let doc: Document =
        serde_json::from_str(text).map_err(|e| DocumentError::SchemaViolation(e.to_string()))?;
    from_document(doc)
}
