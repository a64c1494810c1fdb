mod common;

use std::fs;

use spc_core::{classify, lift_suite, negative_girth, packing_number, packs, sgraph, Girth, Packing};

#[test]
fn lift_suite_files_match_the_generator() {
    let files = common::load_fixtures("lift-suite");
    let generated = lift_suite(8).unwrap();
    assert_eq!(files.len(), generated.len(), "regenerate with the `fixtures` example");
    for ((name, g), h) in files.iter().zip(&generated) {
        assert_eq!(g, h, "{name}");
    }
}

#[test]
fn canonical_files_round_trip() {
    let dir = common::fixtures_dir();
    let mut paths = vec![dir.join("spc2.sg"), dir.join("spc4.sg"), dir.join("c-4.sg")];
    for sub in ["lift-suite", "pack-conjecture"] {
        for e in fs::read_dir(dir.join(sub)).unwrap() {
            paths.push(e.unwrap().path());
        }
    }
    for p in paths {
        let text = fs::read_to_string(&p).unwrap();
        let body: String = text.lines().filter(|l| !l.starts_with('#')).map(|l| format!("{l}\n")).collect();
        let g = sgraph::parse(&text).unwrap();
        assert_eq!(sgraph::write(&g), body, "{}", p.display());
    }
}

/// Every curated planar signed bipartite or antibalanced graph on at most
/// ten vertices packs. Failures are collected and reported together.
#[test]
fn planar_bipartite_and_antibalanced_instances_pack() {
    let list = common::load_fixtures("pack-conjecture");
    assert!(list.len() >= 50);
    let mut failures = Vec::new();
    for (name, g) in &list {
        let c = classify(g);
        assert!(c.planar && (c.signed_bipartite || c.antibalanced) && g.n() <= 10, "{name} is outside the class");
        if !packs(g).unwrap() {
            failures.push(format!("{name}: packing {:?}, negative girth {:?}", packing_number(g).unwrap(), negative_girth(g)));
        }
    }
    assert!(failures.is_empty(), "{} of {} do not pack:\n{}", failures.len(), list.len(), failures.join("\n"));
}

#[test]
fn fixture_graphs_have_the_stated_profiles() {
    let dir = common::fixtures_dir();
    let read = |f: &str| sgraph::parse(&fs::read_to_string(dir.join(f)).unwrap()).unwrap();
    assert_eq!(negative_girth(&read("spc4.sg")), Girth::Finite(5));
    assert_eq!(packing_number(&read("c-4.sg")).unwrap(), Packing::Finite(4));
}
