mod common;

use std::collections::BTreeSet;

use common::*;
use hg2_rdf::traversal::{self, ResultKind};
use hg2_rdf::{Hg2, NodePayload, Term};
use proptest::prelude::*;

fn urn(k: usize) -> String {
    format!("urn:n:{k}")
}

fn random_h(max: usize) -> impl Strategy<Value = (usize, Vec<RawEdge>)> {
    (1..=max).prop_flat_map(|n| {
        let slot = proptest::collection::vec(0..n, 1..4);
        (Just(n), proptest::collection::vec((slot.clone(), slot), 0..2 * n))
    })
}

fn build_h(n: usize, edges: &[RawEdge]) -> Hg2 {
    let mut hg2 = Hg2::with_builtin_vocabulary();
    let ids: Vec<_> = (0..n)
        .map(|k| hg2.intern_hypernode(NodePayload::Uri(urn(k))))
        .collect();
    for (h, t) in edges {
        hg2.add_hyperedge(
            h.iter().map(|&k| ids[k]).collect(),
            t.iter().map(|&k| ids[k]).collect(),
        )
        .unwrap();
    }
    hg2
}

proptest! {
    #[test]
    fn path_exists_matches_fixpoint_oracle((n, edges) in random_h(50), a in 0..50usize, b in 0..50usize) {
        let hg2 = build_h(n, &edges);
        let (a, b) = (a % n, b % n);
        let expected = a == b || naive_reachable(&edges, a).contains(&b);
        let got = traversal::path_exists(&hg2, &urn(a), &urn(b));
        prop_assert_eq!(got.is_some(), expected);
        if let Some(r) = got {
            prop_assert_eq!(r.kind, ResultKind::Path);
            prop_assert_eq!(r.items.is_empty(), a == b);
        }
    }

    #[test]
    fn reachable_query_matches_fixpoint_oracle((n, edges) in random_h(50), a in 0..50usize) {
        let hg2 = build_h(n, &edges);
        let a = a % n;
        let got: BTreeSet<usize> = traversal::reachable_from(&hg2, &urn(a)).items.into_iter().collect();
        prop_assert_eq!(got, naive_reachable(&edges, a));
    }

    #[test]
    fn statements_about_matches_brute_force(seed in any::<u64>()) {
        let doc = hg2_rdf::parse_str(&fuzz_document(&mut rng(seed)));
        let stmts = distinct(&doc.statements);
        let (hg2, _) = hg2_rdf::integrate(&stmts, &Default::default()).unwrap();
        let subjects: BTreeSet<String> = stmts
            .iter()
            .filter_map(|s| match s.subject() {
                Term::Iri(i) => Some(i.as_str().to_owned()),
                _ => None,
            })
            .collect();
        for subject in subjects {
            let expected: BTreeSet<String> = stmts
                .iter()
                .filter(|s| !is_schema_statement(s))
                .filter(|s| s.subject().as_iri().is_some_and(|i| i.as_str() == subject))
                .map(|s| s.to_string())
                .collect();
            let r = traversal::statements_about(&hg2, &subject);
            let got: BTreeSet<String> = r
                .edge_ids()
                .map(|e| traversal::edge_statement(&hg2, e).unwrap().to_string())
                .collect();
            prop_assert_eq!(got, expected);
            prop_assert_eq!(r.provenance.len(), r.items.len());
        }
    }
}

#[test]
fn layered_example_path_prefers_low_edge_ids() {
    let f = layered();
    let r = traversal::path_between(&f.hg2, f.v[0], f.v[6]).unwrap();
    assert_eq!(r.items, vec![f.e[0].0, f.e[1].0, f.e[2].0]);
    assert!(traversal::path_between(&f.hg2, f.v[6], f.v[0]).is_none());
    assert!(traversal::path_exists(&f.hg2, "urn:layered:1", "urn:layered:7").is_some());
    assert!(traversal::path_exists(&f.hg2, "urn:layered:4", "urn:layered:2").is_none());
}

#[test]
fn unknown_terms_give_empty_results() {
    let hg2 = build(W3C_SAMPLE);
    assert!(traversal::statements_about(&hg2, "urn:missing").is_empty());
    assert!(traversal::instances_of(&hg2, "urn:missing").is_empty());
    assert!(traversal::reachable_from(&hg2, "urn:missing").is_empty());
    assert!(traversal::path_exists(&hg2, "urn:missing", NTRIPLES_PAGE).is_none());
}
