//! Parse an N-Triples document, keep going past bad lines, and print each
//! statement back in canonical form.
//!
//! cargo run --example parse_ntriples

use hg2_rdf::{parse_str, Term};

const DOC: &str = r#"# three statements about the N-Triples page
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> "Dave Beckett" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/creator> "Art Barstow" .
<http://www.w3.org/2001/sw/RDFCore/ntriples/> <http://purl.org/dc/elements/1.1/publisher> <http://www.w3.org/> .

_:note <http://purl.org/dc/elements/1.1/description> "line one\nline two"@EN-GB .
_:note <http://example.org/size> "42"^^<http://www.w3.org/2001/XMLSchema#integer> .
"literal" <http://example.org/p> <http://example.org/o> .
<http://example.org/s> <http://example.org/p> <http://example.org/o>
"#;

fn main() {
    let doc = parse_str(DOC);
    for s in &doc.statements {
        let shape = match s.object() {
            Term::Iri(_) => "iri",
            Term::Blank(_) => "blank",
            Term::Literal(l) if l.language_tag.is_some() => "lang literal",
            Term::Literal(l) if l.datatype.is_some() => "typed literal",
            Term::Literal(_) => "plain literal",
        };
        println!("line {:>2} [{shape:>13}] {s}", s.line_no());
    }
    for e in &doc.errors {
        println!("error: {e}");
    }
}
