//! Integrate a schema file and a data file into one structure and print the
//! integration report.
//!
//! cargo run --example integrate_document [-- data.nt [schema.nt]]

use std::path::PathBuf;
use std::{env, fs};

use hg2_rdf::{integrate_into, parse_str, Hg2, IntegrationOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let here = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let mut args = env::args().skip(1);
    let data = args.next().map(PathBuf::from).unwrap_or(here.join("library.nt"));
    let schema = args
        .next()
        .map(PathBuf::from)
        .unwrap_or(here.join("library.schema.nt"));

    let mut hg2 = Hg2::with_builtin_vocabulary();
    let opts = IntegrationOptions::default();
    for path in [&schema, &data] {
        let doc = parse_str(&fs::read_to_string(path)?);
        for e in &doc.errors {
            eprintln!("{}: {e}", path.display());
        }
        let report = integrate_into(&mut hg2, &doc.statements, &opts)?;
        println!("== {}\n{report}\n", path.display());
    }

    println!("{}", hg2.stats());
    println!();
    for edge in hg2.hypergraph().edges() {
        let show = |ids: &[hg2_rdf::HyperNodeId]| -> Vec<String> {
            ids.iter().map(|n| hg2.payload(*n).unwrap().to_string()).collect()
        };
        println!("{} {:?} -> {:?}", edge.id, show(&edge.head), show(&edge.tail));
    }
    Ok(())
}
