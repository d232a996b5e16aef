//! RDF and RDFS IRIs used as schema-graph anchors.

pub const RDF_NS: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
pub const RDFS_NS: &str = "http://www.w3.org/2000/01/rdf-schema#";

pub const RDFS_RESOURCE: &str = "http://www.w3.org/2000/01/rdf-schema#Resource";
pub const RDFS_CLASS: &str = "http://www.w3.org/2000/01/rdf-schema#Class";
pub const RDFS_LITERAL: &str = "http://www.w3.org/2000/01/rdf-schema#Literal";
pub const RDF_PROPERTY: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Property";
pub const RDF_STATEMENT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#Statement";

pub const RDF_TYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
pub const RDFS_SUBCLASS_OF: &str = "http://www.w3.org/2000/01/rdf-schema#subClassOf";
pub const RDFS_DOMAIN: &str = "http://www.w3.org/2000/01/rdf-schema#domain";
pub const RDFS_RANGE: &str = "http://www.w3.org/2000/01/rdf-schema#range";

pub const RDF_SUBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#subject";
pub const RDF_PREDICATE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#predicate";
pub const RDF_OBJECT: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#object";
pub const RDF_DATATYPE: &str = "http://www.w3.org/1999/02/22-rdf-syntax-ns#datatype";

/// Every IRI pre-loaded into a fresh schema graph, in load order.
pub const BUILTIN: [&str; 13] = [
    RDFS_RESOURCE,
    RDFS_CLASS,
    RDFS_LITERAL,
    RDF_PROPERTY,
    RDF_STATEMENT,
    RDF_TYPE,
    RDFS_SUBCLASS_OF,
    RDFS_DOMAIN,
    RDFS_RANGE,
    RDF_SUBJECT,
    RDF_PREDICATE,
    RDF_OBJECT,
    RDF_DATATYPE,
];

/// Classes declared as direct subclasses of `rdfs:Resource` on load.
pub const BUILTIN_RESOURCE_SUBCLASSES: [&str; 4] = [RDFS_CLASS, RDFS_LITERAL, RDF_PROPERTY, RDF_STATEMENT];

/// Graph nodes that role connectors point at. Connectors to anything else are
/// typing connectors.
pub const ROLE_ANCHORS: [&str; 4] = [RDF_SUBJECT, RDF_PREDICATE, RDF_OBJECT, RDF_DATATYPE];
