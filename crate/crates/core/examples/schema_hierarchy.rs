//! Load the built-in RDFS vocabulary, extend it with a class hierarchy and
//! property constraints, and query subclass closures.
//!
//! cargo run --example schema_hierarchy

use hg2_rdf::{Constraint, EdgeKind, SchemaGraph};

fn main() {
    let mut g = SchemaGraph::load_builtin_vocabulary();
    let animal = g.intern_class("http://example.org/Animal");
    let dog = g.intern_class("http://example.org/Dog");
    let puppy = g.intern_class("http://example.org/Puppy");
    let cat = g.intern_class("http://example.org/Cat");
    let owner = g.intern_class("http://example.org/owner");
    let person = g.intern_class("http://example.org/Person");

    for (child, parent) in [(dog, animal), (puppy, dog), (cat, animal)] {
        g.add_schema_edge(child, parent, EdgeKind::SubClassOf).unwrap();
    }
    g.add_schema_edge(owner, animal, EdgeKind::Domain).unwrap();
    g.add_schema_edge(owner, person, EdgeKind::Range).unwrap();
    // A second domain is recorded but the first stays in force.
    g.add_schema_edge(owner, dog, EdgeKind::Domain).unwrap();

    for class in [animal, dog, puppy] {
        let names: Vec<_> = g
            .subclass_closure(class)
            .unwrap()
            .into_iter()
            .map(|c| g.iri(c).unwrap())
            .collect();
        println!("{} covers {names:?}", g.iri(class).unwrap());
    }

    let domain = g.constraint_of(owner, Constraint::Domain).unwrap().unwrap();
    let range = g.constraint_of(owner, Constraint::Range).unwrap().unwrap();
    println!(
        "owner: domain {} range {}",
        g.iri(domain).unwrap(),
        g.iri(range).unwrap()
    );

    println!("{} nodes, {} edges", g.node_count(), g.edge_count());
    for e in g.edges().iter().filter(|e| e.kind == EdgeKind::SubClassOf) {
        println!("  {} -s-> {}", g.iri(e.from).unwrap(), g.iri(e.to).unwrap());
    }
}
