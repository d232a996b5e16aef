#![allow(dead_code)]

use std::collections::BTreeSet;
use std::fmt::Write;

use hg2_rdf::vocab;
use hg2_rdf::{
    Connector, EdgeKind, GraphNodeId, Hg2, HyperEdgeId, HyperNodeId, NodePayload, Statement, Term,
};
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const NTRIPLES_PAGE: &str = "http://www.w3.org/2001/sw/RDFCore/ntriples/";
pub const DC_CREATOR: &str = "http://purl.org/dc/elements/1.1/creator";
pub const DC_PUBLISHER: &str = "http://purl.org/dc/elements/1.1/publisher";
pub const W3C: &str = "http://www.w3.org/";

pub const W3C_SAMPLE: &str = "\
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> \"Dave Beckett\" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> \"Art Barstow\" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/publisher> <http://www.w3.org/> .
";

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn build(text: &str) -> Hg2 {
    let doc = hg2_rdf::parse_str(text);
    assert!(doc.errors.is_empty(), "{:?}", doc.errors);
    hg2_rdf::integrate(&doc.statements, &Default::default())
        .unwrap()
        .0
}

/// Head and tail lists of the four hyperedges, by one-based node number.
pub const LAYERED_EDGES: [(&[usize], &[usize]); 4] = [
    (&[1, 2], &[3]),
    (&[3, 4], &[5, 6]),
    (&[4, 5], &[7]),
    (&[5, 6], &[7]),
];
pub const LAYERED_CONNECTORS_V: [(usize, char); 3] = [(1, 'a'), (6, 'b'), (2, 'd')];
pub const LAYERED_CONNECTORS_E: [(usize, char); 3] = [(1, 'c'), (3, 'e'), (4, 'f')];

pub struct Layered {
    pub hg2: Hg2,
    /// `v[k - 1]` is node `k`.
    pub v: Vec<HyperNodeId>,
    /// `e[k - 1]` is edge `E_k`.
    pub e: Vec<HyperEdgeId>,
    /// `g[0]` is `a`.
    pub g: Vec<GraphNodeId>,
}

pub fn layered() -> Layered {
    let mut hg2 = Hg2::new();
    let v: Vec<_> = (1..=7)
        .map(|k| hg2.add_hypernode(NodePayload::Uri(format!("urn:layered:{k}"))))
        .collect();
    let e: Vec<_> = LAYERED_EDGES
        .iter()
        .map(|(h, t)| {
            hg2.add_hyperedge(
                h.iter().map(|k| v[k - 1]).collect(),
                t.iter().map(|k| v[k - 1]).collect(),
            )
            .unwrap()
        })
        .collect();
    let g: Vec<_> = ('a'..='f')
        .map(|c| hg2.graph_mut().intern_class(&format!("urn:layered:{c}")))
        .collect();
    let col = |c: char| g[(c as u8 - b'a') as usize];
    for (k, c) in LAYERED_CONNECTORS_V {
        hg2.add_connector(Connector::NodeToNode {
            from: v[k - 1],
            to: col(c),
        })
        .unwrap();
    }
    for (k, c) in LAYERED_CONNECTORS_E {
        hg2.add_connector(Connector::EdgeToNode {
            from: e[k - 1],
            to: col(c),
        })
        .unwrap();
    }
    Layered { hg2, v, e, g }
}

/// Head and tail node lists of one hyperedge.
pub type RawEdge = (Vec<usize>, Vec<usize>);

/// Iterates "head member reached implies tail reached" until nothing changes.
pub fn naive_reachable(edges: &[RawEdge], start: usize) -> BTreeSet<usize> {
    let mut reached = BTreeSet::new();
    loop {
        let before = reached.len();
        for (head, tail) in edges {
            if head.iter().any(|h| *h == start || reached.contains(h)) {
                reached.extend(tail.iter().copied());
            }
        }
        if reached.len() == before {
            return reached;
        }
    }
}

/// `closure[c]` holds `c` and every `d` with a subclass path `d -> ... -> c`.
pub fn floyd_warshall_closure(n: usize, child_parent: &[(usize, usize)]) -> Vec<BTreeSet<usize>> {
    let mut reach = vec![vec![false; n]; n];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(c, p) in child_parent {
        reach[c][p] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    (0..n)
        .map(|c| (0..n).filter(|&d| reach[d][c]).collect())
        .collect()
}

const RDFS_PREDICATES: [&str; 4] = [
    vocab::RDF_TYPE,
    vocab::RDFS_SUBCLASS_OF,
    vocab::RDFS_DOMAIN,
    vocab::RDFS_RANGE,
];

/// Restates the layer routing rule for test oracles.
pub fn is_schema_statement(s: &Statement) -> bool {
    RDFS_PREDICATES.contains(&s.predicate().as_str())
        && matches!(s.subject(), Term::Iri(_))
        && matches!(s.object(), Term::Iri(_))
}

fn ws(rng: &mut ChaCha8Rng) -> &'static str {
    [" ", " ", "\t", "  ", " \t "].choose(rng).unwrap()
}

fn lexical(rng: &mut ChaCha8Rng, out: &mut String) {
    const CHARS: [char; 14] = [
        'a', 'b', 'Z', '0', ' ', '"', '\\', '\n', '\t', '\r', 'é', '日', '😀', '.',
    ];
    for _ in 0..rng.random_range(0..8) {
        let c = *CHARS.choose(rng).unwrap();
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c if !c.is_ascii() && c as u32 <= 0xFFFF && rng.random_bool(0.5) => {
                let _ = write!(out, "\\u{:04X}", c as u32);
            }
            c => out.push(c),
        }
    }
}

fn iri(rng: &mut ChaCha8Rng, out: &mut String, pool: &str, size: usize) {
    let _ = write!(out, "<http://ex.org/{pool}{}>", rng.random_range(0..size));
}

fn object(rng: &mut ChaCha8Rng, out: &mut String) {
    match rng.random_range(0..10) {
        0..=2 => iri(rng, out, "r", 12),
        3 => {
            let _ = write!(out, "_:b{}", rng.random_range(0..5));
        }
        4 => iri(rng, out, "C", 6),
        5 => {
            out.push('"');
            lexical(rng, out);
            out.push('"');
            out.push_str(["@en", "@EN-gb", "@de"].choose(rng).unwrap());
        }
        6 => {
            out.push('"');
            lexical(rng, out);
            out.push_str("\"^^");
            let dt = [
                "<http://www.w3.org/2001/XMLSchema#string>",
                "<http://www.w3.org/2001/XMLSchema#integer>",
                "<http://ex.org/C0>",
            ];
            out.push_str(dt.choose(rng).unwrap());
        }
        _ => {
            out.push('"');
            lexical(rng, out);
            out.push('"');
        }
    }
}

/// A well-formed N-Triples document mixing schema and instance statements,
/// blank nodes, escaped literals, comments and blank lines.
pub fn fuzz_document(rng: &mut ChaCha8Rng) -> String {
    let mut out = String::new();
    for _ in 0..rng.random_range(0..40) {
        match rng.random_range(0..20) {
            0 => {
                out.push_str("# comment\n");
                continue;
            }
            1 => {
                out.push_str(ws(rng));
                out.push('\n');
                continue;
            }
            _ => {}
        }
        if rng.random_bool(0.25) {
            let _ = write!(out, "_:b{}", rng.random_range(0..5));
        } else if rng.random_bool(0.3) {
            iri(rng, &mut out, "C", 6);
        } else {
            iri(rng, &mut out, "r", 12);
        }
        out.push_str(ws(rng));
        let schema = rng.random_bool(0.35);
        if schema {
            let _ = write!(out, "<{}>", RDFS_PREDICATES.choose(rng).unwrap());
        } else if rng.random_bool(0.15) {
            let _ = write!(out, "<{}>", vocab::RDF_TYPE);
        } else {
            iri(rng, &mut out, "p", 6);
        }
        out.push_str(ws(rng));
        if schema && rng.random_bool(0.8) {
            iri(rng, &mut out, "C", 6);
        } else {
            object(rng, &mut out);
        }
        if rng.random_bool(0.5) {
            out.push_str(ws(rng));
        }
        out.push('.');
        if rng.random_bool(0.2) {
            out.push_str(ws(rng));
        }
        out.push_str(if rng.random_bool(0.1) { "\r\n" } else { "\n" });
    }
    out
}

/// Distinct statements of a document in first-occurrence order.
pub fn distinct(statements: &[Statement]) -> Vec<Statement> {
    let mut seen = std::collections::HashSet::new();
    statements
        .iter()
        .filter(|s| seen.insert(s.to_string().trim_end().to_owned()))
        .cloned()
        .collect()
}

fn random_payload(rng: &mut ChaCha8Rng, k: usize) -> NodePayload {
    const ODD: [&str; 5] = [
        "",
        " spaced ",
        "quote\"back\\slash",
        "line\nbreak\ttab",
        "ünï日😀",
    ];
    let odd = ODD.choose(rng).unwrap();
    match rng.random_range(0..4) {
        0 => NodePayload::Uri(format!("http://ex.org/n{k}{odd}")),
        1 => NodePayload::Blank(format!("b{k}")),
        2 => NodePayload::Literal {
            lexical_form: format!("{odd}{k}"),
            language_tag: rng.random_bool(0.5).then(|| "en".to_owned()),
            datatype_iri: rng.random_bool(0.3).then(|| "http://ex.org/dt".to_owned()),
        },
        _ => NodePayload::Uri(format!("urn:x:{k}")),
    }
}

/// An arbitrary structure: hyperedges of any arity, every graph edge kind,
/// and connectors of both kinds.
pub fn random_hg2(rng: &mut ChaCha8Rng) -> Hg2 {
    let mut hg2 = if rng.random_bool(0.5) {
        Hg2::with_builtin_vocabulary()
    } else {
        Hg2::new()
    };
    let nodes: Vec<_> = (0..rng.random_range(0..30))
        .map(|k| {
            let payload = random_payload(rng, k);
            hg2.intern_hypernode(payload)
        })
        .collect();
    let mut edges = Vec::new();
    if !nodes.is_empty() {
        for _ in 0..rng.random_range(0..20) {
            let head: Vec<_> = (0..rng.random_range(1..4))
                .map(|_| *nodes.choose(rng).unwrap())
                .collect();
            let tail: Vec<_> = (0..rng.random_range(1..5))
                .map(|_| *nodes.choose(rng).unwrap())
                .collect();
            edges.push(hg2.add_hyperedge(head, tail).unwrap());
        }
    }
    for k in 0..rng.random_range(0..10) {
        hg2.graph_mut().intern_class(&format!("http://ex.org/class/{k}"));
    }
    let g: Vec<_> = hg2.graph().nodes().map(|(id, _)| id).collect();
    if g.is_empty() {
        return hg2;
    }
    for _ in 0..rng.random_range(0..15) {
        let kind = *EdgeKind::ALL.choose(rng).unwrap();
        let (a, b) = (*g.choose(rng).unwrap(), *g.choose(rng).unwrap());
        hg2.graph_mut().add_schema_edge(a, b, kind).unwrap();
    }
    for _ in 0..rng.random_range(0..15) {
        let to = *g.choose(rng).unwrap();
        let connector = if rng.random_bool(0.5) && !nodes.is_empty() {
            Connector::NodeToNode {
                from: *nodes.choose(rng).unwrap(),
                to,
            }
        } else if let Some(&from) = edges.choose(rng) {
            Connector::EdgeToNode { from, to }
        } else {
            continue;
        };
        hg2.add_connector(connector).unwrap();
    }
    hg2
}
