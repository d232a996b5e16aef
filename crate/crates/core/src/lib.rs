//! Integration of RDF N-Triples documents into a two-layer hypergraph-graph
//! structure.
//!
//! Instance statements become hyperedges (`[predicate] -> [subject, object]`)
//! over interned term nodes; RDFS vocabulary (`rdfs:subClassOf`, `rdf:type`,
//! `rdfs:domain`, `rdfs:range`) becomes a labeled schema graph; connectors
//! tie hypergraph entities to the graph nodes they depend on.
//!
//! ```
//! use hg2_rdf::{integrate, parse_str, IntegrationOptions};
//!
//! let doc = parse_str("<http://ex/a> <http://ex/knows> <http://ex/b> .\n");
//! let (hg2, report) = integrate(&doc.statements, &IntegrationOptions::default()).unwrap();
//! assert_eq!(report.hyperedges_created, 1);
//! assert_eq!(hg2.hypergraph().node_count(), 3);
//! ```
//!
//! The `examples/` directory has one runnable program per capability.

pub mod cli;
pub mod document;
pub mod dot;
pub mod hg2;
pub mod hypergraph;
pub mod mapper;
pub mod ntriples;
pub mod schema;
pub mod traversal;
pub mod vocab;

pub use hg2::{Connector, Entity, Hg2, Hg2Error, LayeringViolation, Stats};
pub use hypergraph::{HyperEdge, HyperEdgeId, HyperNodeId, Hypergraph, HypergraphError, Incidence, Slot};
pub use mapper::{
    integrate, integrate_into, IntegrationOptions, IntegrationReport, MapError, MappingViolation, NodeKind,
    NodePayload, Warning,
};
pub use ntriples::{
    parse_document, parse_line, parse_str, unescape_literal, BlankLabel, IriRef, Literal, ParseError,
    ParseErrorKind, ParsedDocument, Statement, Term,
};
pub use schema::{Constraint, EdgeKind, GraphEdge, GraphNodeId, SchemaGraph};
pub use traversal::QueryResult;
