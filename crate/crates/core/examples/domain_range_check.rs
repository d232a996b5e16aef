//! Check instance statements against declared domains and ranges. Untyped
//! subjects and objects produce warnings; nothing is rejected.
//!
//! cargo run --example domain_range_check

use hg2_rdf::mapper::check_domain_range;
use hg2_rdf::{integrate, parse_str, IntegrationOptions};

const SCHEMA: &str = include_str!("data/library.schema.nt");
const DATA: &str = include_str!("data/library.nt");

fn main() {
    let doc = parse_str(&format!("{SCHEMA}{DATA}"));
    let (hg2, report) = integrate(&doc.statements, &IntegrationOptions::default()).unwrap();
    println!(
        "{} statements, {} warnings from integration",
        report.statements_in,
        report.warnings.len()
    );

    let warnings = check_domain_range(&hg2);
    if warnings.is_empty() {
        println!("all constraints satisfied");
    }
    for w in &warnings {
        println!("{w}");
    }
}
