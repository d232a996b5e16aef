//! Run the read-only queries: instances of a class (through the subclass
//! hierarchy), statements about a subject, reachability and paths.
//!
//! cargo run --example semantic_queries

use hg2_rdf::traversal::{edge_statement, instances_of, path_exists, reachable_from, statements_about};
use hg2_rdf::{integrate, parse_str, IntegrationOptions};

const SCHEMA: &str = include_str!("data/library.schema.nt");
const DATA: &str = include_str!("data/library.nt");
const LIB: &str = "http://example.org/lib#";

fn main() {
    let doc = parse_str(&format!("{SCHEMA}{DATA}"));
    let (hg2, _) = integrate(&doc.statements, &IntegrationOptions::default()).unwrap();
    let term = |n| hg2.payload(n).unwrap().to_string();

    for class in ["Work", "Book", "Agent"] {
        let r = instances_of(&hg2, &format!("{LIB}{class}"));
        let names: Vec<_> = r.node_ids().map(term).collect();
        println!("instances of {class}: {names:?}");
    }

    println!("statements about b1:");
    for e in statements_about(&hg2, &format!("{LIB}b1")).edge_ids() {
        println!("  {}", edge_statement(&hg2, e).unwrap());
    }

    let author = format!("{LIB}author");
    let reached: Vec<_> = reachable_from(&hg2, &author).node_ids().map(term).collect();
    println!("reachable from the author predicate: {reached:?}");

    for (from, to) in [
        (author.as_str(), "http://example.org/lib#tbl"),
        ("http://example.org/lib#tbl", author.as_str()),
    ] {
        match path_exists(&hg2, from, to) {
            Some(p) => println!("path {from} => {to}: via {:?}", p.items),
            None => println!("no path {from} => {to}"),
        }
    }
}
