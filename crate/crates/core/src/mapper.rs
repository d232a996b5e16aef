//! Integration of parsed statements into an [`Hg2`].
//!
//! Statements using one of `rdfs:subClassOf`, `rdf:type`, `rdfs:domain` or
//! `rdfs:range` between two IRIs go to the schema graph. Everything else
//! becomes a hyperedge with the predicate as its single head node and
//! `[subject, object]` as its tail. Connectors are then derived from the
//! layout of both layers.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::hg2::{Connector, Hg2};
use crate::hypergraph::{HyperEdgeId, HyperNodeId, Slot};
use crate::ntriples::{
    write_escaped_iri, write_escaped_literal, BlankLabel, IriRef, Literal, Statement, Term,
};
use crate::schema::{Constraint, EdgeKind, GraphNodeId};
use crate::vocab;

/// What a hypernode stands for. Literal components live on the payload, so
/// each statement still spans exactly three hypernodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodePayload {
    Uri(String),
    Blank(String),
    Literal {
        lexical_form: String,
        language_tag: Option<String>,
        datatype_iri: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeKind {
    Uri,
    Blank,
    Literal,
}

impl NodePayload {
    pub fn kind(&self) -> NodeKind {
        match self {
            NodePayload::Uri(_) => NodeKind::Uri,
            NodePayload::Blank(_) => NodeKind::Blank,
            NodePayload::Literal { .. } => NodeKind::Literal,
        }
    }

    pub fn iri(&self) -> Option<&str> {
        match self {
            NodePayload::Uri(iri) => Some(iri),
            _ => None,
        }
    }

    pub fn plain_literal(lexical_form: impl Into<String>) -> Self {
        NodePayload::Literal {
            lexical_form: lexical_form.into(),
            language_tag: None,
            datatype_iri: None,
        }
    }

    /// Converts back to a term. `None` if the payload cannot be written as
    /// one (empty IRI, bad blank label, or a literal carrying both a tag and
    /// a datatype).
    pub fn to_term(&self) -> Option<Term> {
        match self {
            NodePayload::Uri(iri) => IriRef::new(iri.as_str()).map(Term::Iri),
            NodePayload::Blank(label) => BlankLabel::new(label.as_str()).map(Term::Blank),
            NodePayload::Literal {
                lexical_form,
                language_tag,
                datatype_iri,
            } => match (language_tag, datatype_iri) {
                (Some(_), Some(_)) => None,
                (Some(tag), None) => Some(Term::Literal(Literal::lang(lexical_form.as_str(), tag))),
                (None, Some(dt)) => IriRef::new(dt.as_str())
                    .map(|dt| Term::Literal(Literal::typed(lexical_form.as_str(), dt))),
                (None, None) => Some(Term::Literal(Literal::plain(lexical_form.as_str()))),
            },
        }
    }
}

impl From<&Term> for NodePayload {
    fn from(term: &Term) -> Self {
        match term {
            Term::Iri(iri) => NodePayload::Uri(iri.as_str().to_owned()),
            Term::Blank(b) => NodePayload::Blank(b.as_str().to_owned()),
            Term::Literal(l) => NodePayload::Literal {
                lexical_form: l.lexical_form.clone(),
                language_tag: l.language_tag.clone(),
                datatype_iri: l.datatype.as_ref().map(|d| d.as_str().to_owned()),
            },
        }
    }
}

/// N-Triples spelling of the term.
impl fmt::Display for NodePayload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodePayload::Uri(iri) => {
                f.write_str("<")?;
                write_escaped_iri(f, iri)?;
                f.write_str(">")
            }
            NodePayload::Blank(label) => write!(f, "_:{label}"),
            NodePayload::Literal {
                lexical_form,
                language_tag,
                datatype_iri,
            } => {
                f.write_str("\"")?;
                write_escaped_literal(f, lexical_form)?;
                f.write_str("\"")?;
                if let Some(tag) = language_tag {
                    write!(f, "@{tag}")?;
                }
                if let Some(dt) = datatype_iri {
                    f.write_str("^^<")?;
                    write_escaped_iri(f, dt)?;
                    f.write_str(">")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntegrationOptions {
    /// Send the four RDFS predicates to the schema graph.
    pub stratify_schema: bool,
    /// Connect heads, subjects, objects and datatyped literals to their
    /// reification anchors.
    pub generate_role_connectors: bool,
    /// Share one hypernode between equal literals.
    pub dedupe_literals: bool,
}

impl Default for IntegrationOptions {
    fn default() -> Self {
        IntegrationOptions {
            stratify_schema: true,
            generate_role_connectors: true,
            dedupe_literals: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Warning {
    DomainUnsatisfied {
        edge: HyperEdgeId,
        subject: HyperNodeId,
        subject_term: String,
        property: String,
        class: String,
    },
    RangeUnsatisfied {
        edge: HyperEdgeId,
        object: HyperNodeId,
        object_term: String,
        property: String,
        class: String,
    },
    /// A second domain or range for a property; the first one stays in force.
    ConflictingConstraint {
        property: String,
        kind: EdgeKind,
        kept: String,
        ignored: String,
    },
    Mapping(MappingViolation),
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Warning::DomainUnsatisfied {
                edge,
                subject_term,
                property,
                class,
                ..
            } => write!(
                f,
                "DomainUnsatisfied: {edge} subject {subject_term} of <{property}> is not a <{class}>"
            ),
            Warning::RangeUnsatisfied {
                edge,
                object_term,
                property,
                class,
                ..
            } => write!(
                f,
                "RangeUnsatisfied: {edge} object {object_term} of <{property}> is not a <{class}>"
            ),
            Warning::ConflictingConstraint {
                property,
                kind,
                kept,
                ignored,
            } => write!(
                f,
                "ConflictingConstraint: <{property}> {} <{ignored}> ignored, keeping <{kept}>",
                kind_name(*kind)
            ),
            Warning::Mapping(v) => v.fmt(f),
        }
    }
}

impl Serialize for Warning {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

fn kind_name(kind: EdgeKind) -> &'static str {
    match kind {
        EdgeKind::SubClassOf => "subClassOf",
        EdgeKind::Type => "type",
        EdgeKind::Domain => "domain",
        EdgeKind::Range => "range",
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MappingViolation {
    LiteralInHead {
        edge: HyperEdgeId,
        node: HyperNodeId,
    },
    LiteralAsSubject {
        edge: HyperEdgeId,
        node: HyperNodeId,
    },
    BlankInHead {
        edge: HyperEdgeId,
        node: HyperNodeId,
    },
    EdgeArityViolation {
        edge: HyperEdgeId,
        head: usize,
        tail: usize,
    },
    LanguageTagOnTyped {
        node: HyperNodeId,
    },
}

impl fmt::Display for MappingViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MappingViolation::LiteralInHead { edge, node } => {
                write!(f, "LiteralInHead: literal {node} in head of {edge}")
            }
            MappingViolation::LiteralAsSubject { edge, node } => {
                write!(f, "LiteralAsSubject: literal {node} in subject slot of {edge}")
            }
            MappingViolation::BlankInHead { edge, node } => {
                write!(f, "BlankInHead: blank node {node} in head of {edge}")
            }
            MappingViolation::EdgeArityViolation { edge, head, tail } => {
                write!(
                    f,
                    "EdgeArityViolation: {edge} has {head} head and {tail} tail nodes"
                )
            }
            MappingViolation::LanguageTagOnTyped { node } => {
                write!(
                    f,
                    "LanguageTagOnTyped: literal {node} has both a language tag and a datatype"
                )
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntegrationReport {
    pub statements_in: usize,
    pub hyperedges_created: usize,
    pub schema_edges_created: usize,
    /// `|C^v|` after integration.
    pub connectors_v: usize,
    /// `|C^e|` after integration.
    pub connectors_e: usize,
    pub warnings: Vec<Warning>,
}

impl IntegrationReport {
    /// Folds a later batch into this report. Connector totals are taken from
    /// `later`.
    pub fn merge(&mut self, later: IntegrationReport) {
        self.statements_in += later.statements_in;
        self.hyperedges_created += later.hyperedges_created;
        self.schema_edges_created += later.schema_edges_created;
        self.connectors_v = later.connectors_v;
        self.connectors_e = later.connectors_e;
        self.warnings.extend(later.warnings);
    }
}

impl fmt::Display for IntegrationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "statements in        {}", self.statements_in)?;
        writeln!(f, "hyperedges created   {}", self.hyperedges_created)?;
        writeln!(f, "schema edges created {}", self.schema_edges_created)?;
        writeln!(f, "connectors (C^v)     {}", self.connectors_v)?;
        write!(f, "connectors (C^e)     {}", self.connectors_e)?;
        for w in &self.warnings {
            write!(f, "\nwarning: {w}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("built-in graph node <{0}> is missing; load the vocabulary first")]
    MissingAnchor(&'static str),
    #[error("statement is not a schema statement: {0}")]
    NotSchemaStatement(String),
    #[error("unknown hypernode {0}")]
    UnknownNode(HyperNodeId),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    Schema,
    Instance,
}

pub fn route_statement(s: &Statement) -> Layer {
    match (s.subject(), s.object()) {
        (Term::Iri(_), Term::Iri(_)) if EdgeKind::from_predicate(s.predicate().as_str()).is_some() => {
            Layer::Schema
        }
        _ => Layer::Instance,
    }
}

fn intern_term(hg2: &mut Hg2, term: &Term, options: &IntegrationOptions) -> HyperNodeId {
    let payload = NodePayload::from(term);
    if term.is_literal() && !options.dedupe_literals {
        hg2.add_hypernode(payload)
    } else {
        hg2.intern_hypernode(payload)
    }
}

/// Adds the hyperedge `[predicate] -> [subject, object]`. The flag is `true`
/// when the edge is new.
pub fn map_statement(s: &Statement, hg2: &mut Hg2, options: &IntegrationOptions) -> (HyperEdgeId, bool) {
    let subject = intern_term(hg2, s.subject(), options);
    let predicate = hg2.intern_hypernode(NodePayload::Uri(s.predicate().as_str().to_owned()));
    let object = intern_term(hg2, s.object(), options);
    hg2.intern_hyperedge(vec![predicate], vec![subject, object])
        .expect("interned nodes exist and slots are non-empty")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchemaMapping {
    pub added: bool,
    pub warning: Option<Warning>,
}

/// Adds the schema edge `subject -> object` of the predicate's kind.
pub fn map_schema_statement(s: &Statement, hg2: &mut Hg2) -> Result<SchemaMapping, MapError> {
    let (Term::Iri(subject), Term::Iri(object)) = (s.subject(), s.object()) else {
        return Err(MapError::NotSchemaStatement(s.to_string()));
    };
    let kind = EdgeKind::from_predicate(s.predicate().as_str())
        .ok_or_else(|| MapError::NotSchemaStatement(s.to_string()))?;
    let g = hg2.graph_mut();
    let from = g.intern_class(subject.as_str());
    let to = g.intern_class(object.as_str());
    let added = g
        .add_schema_edge(from, to, kind)
        .expect("both endpoints were just interned");

    let mut warning = None;
    if added {
        let constraint = match kind {
            EdgeKind::Domain => Some(Constraint::Domain),
            EdgeKind::Range => Some(Constraint::Range),
            _ => None,
        };
        if let Some(c) = constraint {
            let kept = g.constraint_of(from, c).expect("node exists");
            if let Some(kept) = kept.filter(|k| *k != to) {
                warning = Some(Warning::ConflictingConstraint {
                    property: subject.as_str().to_owned(),
                    kind,
                    kept: g.iri(kept).unwrap_or_default().to_owned(),
                    ignored: object.as_str().to_owned(),
                });
            }
        }
    }
    Ok(SchemaMapping { added, warning })
}

struct Anchors {
    statement: GraphNodeId,
    subject: GraphNodeId,
    predicate: GraphNodeId,
    object: GraphNodeId,
    datatype: GraphNodeId,
}

fn anchors(hg2: &Hg2) -> Result<Anchors, MapError> {
    let find = |iri: &'static str| hg2.graph().lookup(iri).ok_or(MapError::MissingAnchor(iri));
    Ok(Anchors {
        statement: find(vocab::RDF_STATEMENT)?,
        subject: find(vocab::RDF_SUBJECT)?,
        predicate: find(vocab::RDF_PREDICATE)?,
        object: find(vocab::RDF_OBJECT)?,
        datatype: find(vocab::RDF_DATATYPE)?,
    })
}

/// Derives connectors from the current layers. Returns the number of new
/// connectors; running it again on an unchanged structure adds none.
pub fn generate_connectors(hg2: &mut Hg2, options: &IntegrationOptions) -> Result<usize, MapError> {
    let anchors = anchors(hg2)?;
    let mut pending = Vec::new();
    let h = hg2.hypergraph();
    let g = hg2.graph();

    for edge in h.edges() {
        pending.push(Connector::EdgeToNode {
            from: edge.id,
            to: anchors.statement,
        });
        if options.generate_role_connectors {
            for &n in &edge.head {
                pending.push(Connector::NodeToNode {
                    from: n,
                    to: anchors.predicate,
                });
            }
            if let Some(&s) = edge.tail.first() {
                pending.push(Connector::NodeToNode {
                    from: s,
                    to: anchors.subject,
                });
            }
            if let Some(&o) = edge.tail.get(1) {
                pending.push(Connector::NodeToNode {
                    from: o,
                    to: anchors.object,
                });
            }
        }
        // rdf:type kept in the instance layer still types its subject when
        // the class is known to the schema graph.
        if let ([p], [s, o, ..]) = (edge.head.as_slice(), edge.tail.as_slice()) {
            if h.node(*p).and_then(NodePayload::iri) == Some(vocab::RDF_TYPE) {
                if let Some(class) = h
                    .node(*o)
                    .and_then(NodePayload::iri)
                    .and_then(|iri| g.lookup(iri))
                {
                    pending.push(Connector::NodeToNode { from: *s, to: class });
                }
            }
        }
    }

    for (id, payload) in h.nodes() {
        match payload {
            NodePayload::Literal {
                datatype_iri: Some(_),
                ..
            } if options.generate_role_connectors => {
                pending.push(Connector::NodeToNode {
                    from: id,
                    to: anchors.datatype,
                });
            }
            NodePayload::Uri(iri) => {
                if let Some(gn) = g.lookup(iri) {
                    for e in g.edges_from(gn).filter(|e| e.kind == EdgeKind::Type) {
                        pending.push(Connector::NodeToNode { from: id, to: e.to });
                    }
                }
            }
            _ => {}
        }
    }

    let mut added = 0;
    for c in pending {
        if hg2
            .add_connector(c)
            .expect("endpoints come from the structure itself")
        {
            added += 1;
        }
    }
    Ok(added)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeClassification {
    pub kind: NodeKind,
    /// Every (slot, position) the node occupies across all hyperedges.
    pub occurrences: BTreeSet<(Slot, usize)>,
}

pub fn classify_node(hg2: &Hg2, n: HyperNodeId) -> Result<NodeClassification, MapError> {
    let payload = hg2.payload(n).ok_or(MapError::UnknownNode(n))?;
    let occurrences = hg2
        .hypergraph()
        .incidence_of(n)
        .map_err(|_| MapError::UnknownNode(n))?
        .iter()
        .map(|inc| (inc.slot, inc.position))
        .collect();
    Ok(NodeClassification {
        kind: payload.kind(),
        occurrences,
    })
}

/// Checks node placement and edge shape against the statement mapping.
/// Never mutates.
pub fn validate_mapping(hg2: &Hg2) -> Vec<MappingViolation> {
    let h = hg2.hypergraph();
    let mut out = Vec::new();
    for edge in h.edges() {
        if edge.head.len() != 1 || edge.tail.len() != 2 {
            out.push(MappingViolation::EdgeArityViolation {
                edge: edge.id,
                head: edge.head.len(),
                tail: edge.tail.len(),
            });
        }
        for &n in &edge.head {
            match h.node(n).map(NodePayload::kind) {
                Some(NodeKind::Literal) => out.push(MappingViolation::LiteralInHead {
                    edge: edge.id,
                    node: n,
                }),
                Some(NodeKind::Blank) => out.push(MappingViolation::BlankInHead {
                    edge: edge.id,
                    node: n,
                }),
                _ => {}
            }
        }
        if let Some(&s) = edge.tail.first() {
            if h.node(s).map(NodePayload::kind) == Some(NodeKind::Literal) {
                out.push(MappingViolation::LiteralAsSubject {
                    edge: edge.id,
                    node: s,
                });
            }
        }
    }
    for (id, payload) in h.nodes() {
        if let NodePayload::Literal {
            language_tag: Some(_),
            datatype_iri: Some(_),
            ..
        } = payload
        {
            out.push(MappingViolation::LanguageTagOnTyped { node: id });
        }
    }
    out
}

/// Classes a node counts as an instance of: its typing anchors, plus
/// `rdfs:Literal` and a known datatype class for literals.
fn classes_of(hg2: &Hg2, n: HyperNodeId) -> Vec<GraphNodeId> {
    let g = hg2.graph();
    let mut classes = hg2.typing_anchors_of(n);
    if let Some(NodePayload::Literal { datatype_iri, .. }) = hg2.payload(n) {
        classes.extend(g.lookup(vocab::RDFS_LITERAL));
        if let Some(dt) = datatype_iri {
            classes.extend(g.lookup(dt));
        }
    }
    classes
}

/// Reports statements whose subject or object does not satisfy the
/// predicate's declared domain or range. A node satisfies class `C` when it
/// is typed as `C` or as a descendant of `C`.
pub fn check_domain_range(hg2: &Hg2) -> Vec<Warning> {
    let h = hg2.hypergraph();
    let g = hg2.graph();
    let mut out = Vec::new();
    for edge in h.edges() {
        let ([p], [s, o, ..]) = (edge.head.as_slice(), edge.tail.as_slice()) else {
            continue;
        };
        let Some(property) = h.node(*p).and_then(NodePayload::iri) else {
            continue;
        };
        let Some(pg) = g.lookup(property) else {
            continue;
        };
        for (which, node) in [(Constraint::Domain, *s), (Constraint::Range, *o)] {
            let Some(class) = g.constraint_of(pg, which).ok().flatten() else {
                continue;
            };
            let closure = g.subclass_closure(class).expect("constraint target exists");
            if classes_of(hg2, node).iter().any(|c| closure.contains(c)) {
                continue;
            }
            let term = h.node(node).map(ToString::to_string).unwrap_or_default();
            let property = property.to_owned();
            let class = g.iri(class).unwrap_or_default().to_owned();
            out.push(match which {
                Constraint::Domain => Warning::DomainUnsatisfied {
                    edge: edge.id,
                    subject: node,
                    subject_term: term,
                    property,
                    class,
                },
                Constraint::Range => Warning::RangeUnsatisfied {
                    edge: edge.id,
                    object: node,
                    object_term: term,
                    property,
                    class,
                },
            });
        }
    }
    out
}

/// Builds a fresh structure over the built-in vocabulary.
pub fn integrate(
    statements: &[Statement],
    options: &IntegrationOptions,
) -> Result<(Hg2, IntegrationReport), MapError> {
    let mut hg2 = Hg2::with_builtin_vocabulary();
    let report = integrate_into(&mut hg2, statements, options)?;
    Ok((hg2, report))
}

/// Integrates another batch of statements into an existing structure.
/// Terms already present are reused, and repeated statements map onto their
/// existing hyperedge.
pub fn integrate_into(
    hg2: &mut Hg2,
    statements: &[Statement],
    options: &IntegrationOptions,
) -> Result<IntegrationReport, MapError> {
    hg2.graph_mut().load_builtin_into();
    let mut report = IntegrationReport {
        statements_in: statements.len(),
        ..IntegrationReport::default()
    };
    for s in statements {
        if options.stratify_schema && route_statement(s) == Layer::Schema {
            let mapping = map_schema_statement(s, hg2)?;
            if mapping.added {
                report.schema_edges_created += 1;
            }
            report.warnings.extend(mapping.warning);
        } else if map_statement(s, hg2, options).1 {
            report.hyperedges_created += 1;
        }
    }
    generate_connectors(hg2, options)?;
    report
        .warnings
        .extend(validate_mapping(hg2).into_iter().map(Warning::Mapping));
    report.connectors_v = hg2.connectors_v().len();
    report.connectors_e = hg2.connectors_e().len();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hg2::Entity;
    use crate::ntriples::parse_str;

    const W3C_SAMPLE: &str = "\
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> \"Dave Beckett\" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> \"Art Barstow\" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/publisher> <http://www.w3.org/> .
";
    const EX: &str = "http://example.org/";

    fn statements(text: &str) -> Vec<Statement> {
        let doc = parse_str(text);
        assert!(doc.errors.is_empty(), "{:?}", doc.errors);
        doc.statements
    }

    fn build(text: &str) -> (Hg2, IntegrationReport) {
        integrate(&statements(text), &IntegrationOptions::default()).unwrap()
    }

    fn one(line: &str) -> Statement {
        statements(line).remove(0)
    }

    fn anchor(hg2: &Hg2, iri: &str) -> GraphNodeId {
        hg2.graph().lookup(iri).unwrap()
    }

    #[test]
    fn routing() {
        let sub = one(&format!("<{EX}Dog> <{}> <{EX}Animal> .", vocab::RDFS_SUBCLASS_OF));
        assert_eq!(route_statement(&sub), Layer::Schema);
        let creator = one(&format!("<{EX}d1> <{EX}creator> \"X\" ."));
        assert_eq!(route_statement(&creator), Layer::Instance);
        let blank_type = one(&format!("<{EX}d1> <{}> _:b .", vocab::RDF_TYPE));
        assert_eq!(route_statement(&blank_type), Layer::Instance);
        let lit_range = one(&format!("<{EX}p> <{}> \"x\" .", vocab::RDFS_RANGE));
        assert_eq!(route_statement(&lit_range), Layer::Instance);
    }

    #[test]
    fn dublin_core_build() {
        let (hg2, report) = build(W3C_SAMPLE);
        assert_eq!(report.statements_in, 3);
        assert_eq!(report.hyperedges_created, 3);
        assert_eq!(report.schema_edges_created, 0);
        assert_eq!(report.connectors_e, 3);
        assert_eq!(report.connectors_v, 6);
        assert!(report.warnings.is_empty());
        assert_eq!(hg2.hypergraph().node_count(), 6);

        let e0 = &hg2.hypergraph().edges()[0];
        let creator = hg2.lookup_iri("http://purl.org/dc/elements/1.1/creator").unwrap();
        let subject = hg2
            .lookup_iri("http://www.w3.org/2001/sw/RDFCore/ntriples/")
            .unwrap();
        let dave = hg2
            .lookup_node(&NodePayload::plain_literal("Dave Beckett"))
            .unwrap();
        assert_eq!(e0.head, vec![creator]);
        assert_eq!(e0.tail, vec![subject, dave]);

        let pred = anchor(&hg2, vocab::RDF_PREDICATE);
        let obj = anchor(&hg2, vocab::RDF_OBJECT);
        let subj = anchor(&hg2, vocab::RDF_SUBJECT);
        let publisher = hg2
            .lookup_iri("http://purl.org/dc/elements/1.1/publisher")
            .unwrap();
        let cv: Vec<_> = hg2.connectors_v().collect();
        assert!(cv.contains(&(creator, pred)));
        assert!(cv.contains(&(publisher, pred)));
        assert!(cv.contains(&(subject, subj)));
        assert_eq!(cv.iter().filter(|(_, t)| *t == obj).count(), 3);

        let stmt = anchor(&hg2, vocab::RDF_STATEMENT);
        for e in hg2.hypergraph().edges() {
            assert_eq!(hg2.anchors_of(Entity::Edge(e.id)).unwrap(), vec![stmt]);
        }
    }

    #[test]
    fn self_triple() {
        let (hg2, _) = build("<a> <a> <a> .");
        assert_eq!(hg2.hypergraph().node_count(), 1);
        let e = &hg2.hypergraph().edges()[0];
        assert_eq!(e.head, vec![HyperNodeId(0)]);
        assert_eq!(e.tail, vec![HyperNodeId(0), HyperNodeId(0)]);
        assert!(validate_mapping(&hg2).is_empty());
    }

    #[test]
    fn schema_statements() {
        let mut hg2 = Hg2::with_builtin_vocabulary();
        let s = one(&format!("<{EX}Dog> <{}> <{EX}Animal> .", vocab::RDFS_SUBCLASS_OF));
        assert!(map_schema_statement(&s, &mut hg2).unwrap().added);
        assert!(!map_schema_statement(&s, &mut hg2).unwrap().added);
        let dog = anchor(&hg2, &format!("{EX}Dog"));
        let animal = anchor(&hg2, &format!("{EX}Animal"));
        assert!(hg2
            .graph()
            .edges_from(dog)
            .any(|e| e.to == animal && e.kind == EdgeKind::SubClassOf));

        let range = one(&format!(
            "<{EX}creator> <{}> <{}> .",
            vocab::RDFS_RANGE,
            vocab::RDFS_LITERAL
        ));
        map_schema_statement(&range, &mut hg2).unwrap();
        let creator = anchor(&hg2, &format!("{EX}creator"));
        assert_eq!(
            hg2.graph().constraint_of(creator, Constraint::Range).unwrap(),
            Some(anchor(&hg2, vocab::RDFS_LITERAL))
        );

        let domain = one(&format!(
            "<{EX}creator> <{}> <{EX}Document> .",
            vocab::RDFS_DOMAIN
        ));
        assert!(map_schema_statement(&domain, &mut hg2).unwrap().warning.is_none());
        let other = one(&format!("<{EX}creator> <{}> <{EX}Book> .", vocab::RDFS_DOMAIN));
        let m = map_schema_statement(&other, &mut hg2).unwrap();
        assert!(matches!(m.warning, Some(Warning::ConflictingConstraint { .. })));
        assert_eq!(
            hg2.graph().constraint_of(creator, Constraint::Domain).unwrap(),
            Some(anchor(&hg2, &format!("{EX}Document")))
        );

        let inst = one("<a> <b> <c> .");
        assert!(map_schema_statement(&inst, &mut hg2).is_err());
    }

    #[test]
    fn typing_connector() {
        let (hg2, report) = build(&format!(
            "<{EX}d> <{}> <{EX}Doc> .\n<{EX}d> <{EX}p> \"x\" .\n",
            vocab::RDF_TYPE
        ));
        assert_eq!(report.schema_edges_created, 1);
        assert_eq!(report.hyperedges_created, 1);
        let d = hg2.lookup_iri(&format!("{EX}d")).unwrap();
        let doc = anchor(&hg2, &format!("{EX}Doc"));
        assert!(hg2.anchors_of(Entity::Node(d)).unwrap().contains(&doc));
        assert_eq!(hg2.typing_anchors_of(d), vec![doc]);
    }

    #[test]
    fn blank_typed_through_instance_edge() {
        let (hg2, _) = build(&format!(
            "<{EX}Doc> <{}> <{}> .\n_:x <{}> <{EX}Doc> .\n",
            vocab::RDFS_SUBCLASS_OF,
            vocab::RDFS_RESOURCE,
            vocab::RDF_TYPE
        ));
        let x = hg2.lookup_node(&NodePayload::Blank("x".into())).unwrap();
        assert_eq!(hg2.typing_anchors_of(x), vec![anchor(&hg2, &format!("{EX}Doc"))]);
    }

    #[test]
    fn datatype_connector_and_options() {
        let text = "<s> <p> \"1\"^^<http://www.w3.org/2001/XMLSchema#int> .\n<s> <q> \"1\"^^<http://www.w3.org/2001/XMLSchema#int> .\n";
        let (hg2, _) = build(text);
        let lit = hg2
            .hypergraph()
            .nodes()
            .find(|(_, p)| p.kind() == NodeKind::Literal)
            .unwrap()
            .0;
        assert!(hg2
            .anchors_of(Entity::Node(lit))
            .unwrap()
            .contains(&anchor(&hg2, vocab::RDF_DATATYPE)));
        assert_eq!(hg2.hypergraph().node_count(), 4);

        let opts = IntegrationOptions {
            dedupe_literals: false,
            generate_role_connectors: false,
            ..IntegrationOptions::default()
        };
        let (hg2, report) = integrate(&statements(text), &opts).unwrap();
        assert_eq!(hg2.hypergraph().node_count(), 5);
        assert_eq!(report.connectors_v, 0);
        assert_eq!(report.connectors_e, 2);

        let flat = IntegrationOptions {
            stratify_schema: false,
            ..IntegrationOptions::default()
        };
        let sub = format!("<{EX}A> <{}> <{EX}B> .", vocab::RDFS_SUBCLASS_OF);
        let (_, report) = integrate(&statements(&sub), &flat).unwrap();
        assert_eq!((report.hyperedges_created, report.schema_edges_created), (1, 0));
    }

    #[test]
    fn classification() {
        let (hg2, _) = build(W3C_SAMPLE);
        let creator = hg2.lookup_iri("http://purl.org/dc/elements/1.1/creator").unwrap();
        let c = classify_node(&hg2, creator).unwrap();
        assert_eq!(c.kind, NodeKind::Uri);
        assert_eq!(c.occurrences, BTreeSet::from([(Slot::Head, 0)]));
        let dave = hg2
            .lookup_node(&NodePayload::plain_literal("Dave Beckett"))
            .unwrap();
        let c = classify_node(&hg2, dave).unwrap();
        assert_eq!(c.kind, NodeKind::Literal);
        assert_eq!(c.occurrences, BTreeSet::from([(Slot::Tail, 1)]));

        let (hg2, _) = build("_:b <p> <o> .");
        let b = hg2.lookup_node(&NodePayload::Blank("b".into())).unwrap();
        let c = classify_node(&hg2, b).unwrap();
        assert_eq!(c.kind, NodeKind::Blank);
        assert_eq!(c.occurrences, BTreeSet::from([(Slot::Tail, 0)]));
        assert!(classify_node(&hg2, HyperNodeId(99)).is_err());
    }

    #[test]
    fn injected_violations() {
        let (hg2, _) = build(W3C_SAMPLE);
        assert!(validate_mapping(&hg2).is_empty());

        let mut hg2 = Hg2::new();
        let lit = hg2.add_hypernode(NodePayload::plain_literal("x"));
        let blank = hg2.add_hypernode(NodePayload::Blank("b".into()));
        let s = hg2.add_hypernode(NodePayload::Uri("s".into()));
        let e0 = hg2.add_hyperedge(vec![lit], vec![s, s]).unwrap();
        let e1 = hg2.add_hyperedge(vec![blank], vec![lit, s, s]).unwrap();
        let both = hg2.add_hypernode(NodePayload::Literal {
            lexical_form: "y".into(),
            language_tag: Some("en".into()),
            datatype_iri: Some("dt".into()),
        });
        assert_eq!(
            validate_mapping(&hg2),
            vec![
                MappingViolation::LiteralInHead { edge: e0, node: lit },
                MappingViolation::EdgeArityViolation {
                    edge: e1,
                    head: 1,
                    tail: 3
                },
                MappingViolation::BlankInHead {
                    edge: e1,
                    node: blank
                },
                MappingViolation::LiteralAsSubject { edge: e1, node: lit },
                MappingViolation::LanguageTagOnTyped { node: both },
            ]
        );
    }

    fn domain_doc(with_typing: bool) -> String {
        let mut text = format!("<{EX}creator> <{}> <{EX}Doc> .\n", vocab::RDFS_DOMAIN);
        if with_typing {
            text += &format!("<{EX}d> <{}> <{EX}Doc> .\n", vocab::RDF_TYPE);
        }
        text + &format!("<{EX}d> <{EX}creator> \"X\" .\n")
    }

    #[test]
    fn domain_range() {
        let (hg2, _) = build(&domain_doc(true));
        assert_eq!(check_domain_range(&hg2), vec![]);

        let (hg2, _) = build(&domain_doc(false));
        let warnings = check_domain_range(&hg2);
        assert_eq!(warnings.len(), 1);
        let d = hg2.lookup_iri(&format!("{EX}d")).unwrap();
        assert!(matches!(
            &warnings[0],
            Warning::DomainUnsatisfied { subject, class, .. } if *subject == d && class == &format!("{EX}Doc")
        ));

        let (hg2, _) = build("<a> <b> <c> .\n_:x <b> \"y\" .\n");
        assert!(check_domain_range(&hg2).is_empty());
    }

    #[test]
    fn domain_satisfied_by_subclass_and_literal_range() {
        let text = format!(
            "<{EX}creator> <{d}> <{EX}Doc> .\n<{EX}creator> <{r}> <{lit}> .\n<{EX}Book> <{sc}> <{EX}Doc> .\n\
             <{EX}b> <{t}> <{EX}Book> .\n<{EX}b> <{EX}creator> \"X\" .\n<{EX}b> <{EX}creator> <{EX}x> .\n",
            d = vocab::RDFS_DOMAIN,
            r = vocab::RDFS_RANGE,
            lit = vocab::RDFS_LITERAL,
            sc = vocab::RDFS_SUBCLASS_OF,
            t = vocab::RDF_TYPE,
        );
        let (hg2, _) = build(&text);
        let warnings = check_domain_range(&hg2);
        assert_eq!(warnings.len(), 1, "{warnings:?}");
        assert!(
            matches!(&warnings[0], Warning::RangeUnsatisfied { object_term, .. } if object_term == &format!("<{EX}x>"))
        );
    }

    #[test]
    fn empty_and_repeated_integration() {
        let (hg2, report) = build("");
        assert_eq!(hg2.stats().hypernodes, 0);
        assert_eq!(hg2.stats().graph_nodes, 13);
        assert_eq!((report.connectors_v, report.connectors_e), (0, 0));

        let stmts = statements(W3C_SAMPLE);
        let (mut hg2, _) = integrate(&stmts, &IntegrationOptions::default()).unwrap();
        let before = hg2.clone();
        let again = integrate_into(&mut hg2, &stmts, &IntegrationOptions::default()).unwrap();
        assert_eq!(again.hyperedges_created, 0);
        assert_eq!(hg2, before);
        assert_eq!(
            generate_connectors(&mut hg2, &IntegrationOptions::default()).unwrap(),
            0
        );
    }

    #[test]
    fn missing_anchor() {
        let mut hg2 = Hg2::new();
        assert_eq!(
            generate_connectors(&mut hg2, &IntegrationOptions::default()),
            Err(MapError::MissingAnchor(vocab::RDF_STATEMENT))
        );
    }

    #[test]
    fn payload_terms_round_trip() {
        for line in ["_:a <p> \"x\"@en .", "<s> <p> \"x\\ny\"^^<dt> .", "<s> <p> <o> ."] {
            let s = one(line);
            let payload = NodePayload::from(s.object());
            assert_eq!(payload.to_term().as_ref(), Some(s.object()));
            assert_eq!(payload.to_string(), s.object().to_string());
        }
    }
}
