//! Serialize a build to the json-doc format, load it back, and render it as
//! Graphviz DOT.
//!
//! cargo run --example export_formats [-- out-dir]

use std::path::PathBuf;
use std::{env, fs};

use hg2_rdf::{document, dot, integrate, parse_str, IntegrationOptions};

const TABLE: &str = r#"<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> "Dave Beckett" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> "Art Barstow" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/publisher> <http://www.w3.org/> .
"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (hg2, _) = integrate(&parse_str(TABLE).statements, &IntegrationOptions::default())?;

    let json = document::serialize(&hg2);
    let back = document::deserialize(&json)?;
    assert!(back == hg2);
    let dot = dot::to_dot(&hg2);

    match env::args().nth(1).map(PathBuf::from) {
        Some(dir) => {
            fs::create_dir_all(&dir)?;
            fs::write(dir.join("table.json"), &json)?;
            fs::write(dir.join("table.dot"), &dot)?;
            println!("wrote table.json and table.dot to {}", dir.display());
        }
        None => {
            println!("json-doc: {} bytes, round trip ok", json.len());
            print!("{dot}");
        }
    }
    Ok(())
}
