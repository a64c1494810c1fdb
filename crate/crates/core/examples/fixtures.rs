//! Regenerates the shipped fixture files.
//!
//! ```text
//! cargo run -p spc-core --example fixtures -- <fixtures dir>
//! ```

use std::fs;
use std::path::Path;

use spc_core::construct::{negative_cycle, positive_cycle};
use spc_core::{classify, glued_quadrangulations, lift_suite, negative_girth, sgraph, Girth, SignedGraph, Switching};

fn wheel(k: usize) -> SignedGraph {
    let rim = (0..k).map(|i| (i, (i + 1) % k));
    let spokes = (0..k).map(|i| (i, k));
    SignedGraph::unsigned(k + 1, rim.chain(spokes)).unwrap()
}

fn prism(k: usize) -> SignedGraph {
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
    }
    SignedGraph::unsigned(2 * k, e).unwrap()
}

fn antiprism(k: usize) -> SignedGraph {
    let mut e = Vec::new();
    for i in 0..k {
        e.push((i, (i + 1) % k));
        e.push((k + i, k + (i + 1) % k));
        e.push((i, k + i));
        e.push(((i + 1) % k, k + i));
    }
    SignedGraph::unsigned(2 * k, e).unwrap()
}

fn k4() -> SignedGraph {
    SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Planar members of C10 (signed bipartite) and C11 (antibalanced) on at
/// most ten vertices.
fn conjecture_list() -> Vec<(String, SignedGraph)> {
    let mut out: Vec<(String, SignedGraph)> = Vec::new();
    for k in [2, 4, 6, 8, 10] {
        out.push((format!("negative cycle C_-{k}"), negative_cycle(k).unwrap()));
    }
    for (i, g) in lift_suite(8).unwrap().into_iter().enumerate() {
        out.push((format!("lift suite member {i}"), g));
    }
    // larger quadrangulations: one or two negative edges
    for (i, g) in glued_quadrangulations(10).unwrap().into_iter().filter(|g| g.n() >= 9).enumerate() {
        let m = g.edge_count();
        let one = g.with_signature(&spc_core::Signature::from_negative_set(m, &[0])).unwrap();
        out.push((format!("quadrangulation {i} with one negative edge"), one));
        let two = g.with_signature(&spc_core::Signature::from_negative_set(m, &[0, m - 1])).unwrap();
        if negative_girth(&two) != Girth::Infinite {
            out.push((format!("quadrangulation {i} with two negative edges"), two));
        }
    }
    let mut odd: Vec<(String, SignedGraph)> = Vec::new();
    for k in [3, 5, 7, 9] {
        odd.push((format!("odd cycle C_{k}"), positive_cycle(k).unwrap()));
    }
    odd.push(("K4".into(), k4()));
    for k in 3..=9 {
        odd.push((format!("wheel W_{k}"), wheel(k)));
    }
    for k in 3..=5 {
        odd.push((format!("prism over C_{k}"), prism(k)));
    }
    for k in 3..=5 {
        odd.push((format!("antiprism over C_{k}"), antiprism(k)));
    }
    for (name, g) in odd {
        let neg = g.all_negative();
        // a switched copy keeps the class but hides the all-negative form
        let x = Switching::new((0..g.n()).step_by(2));
        let switched = neg.switch(&x).unwrap();
        out.push((format!("{name}, all negative"), neg));
        out.push((format!("{name}, all negative, switched at even vertices"), switched));
    }
    out
}

fn write_dir(dir: &Path, items: &[(String, SignedGraph)]) {
    if dir.exists() {
        fs::remove_dir_all(dir).unwrap();
    }
    fs::create_dir_all(dir).unwrap();
    for (i, (name, g)) in items.iter().enumerate() {
        let text = format!("# {name}\n{}", sgraph::write(g));
        fs::write(dir.join(format!("{i:03}.sg")), text).unwrap();
    }
}

fn main() {
    let root = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    let root = Path::new(&root);
    let suite: Vec<(String, SignedGraph)> = lift_suite(8)
        .unwrap()
        .into_iter()
        .map(|g| (format!("glued quadrangulation on {} vertices, negative girth 4", g.n()), g))
        .collect();
    write_dir(&root.join("lift-suite"), &suite);
    let list = conjecture_list();
    for (name, g) in &list {
        let c = classify(g);
        assert!(c.planar && (c.signed_bipartite || c.antibalanced), "{name}");
        assert!(g.n() <= 10, "{name}");
    }
    write_dir(&root.join("pack-conjecture"), &list);
    fs::write(root.join("spc4.sg"), sgraph::write(&spc_core::spc(4, spc_core::SpcMethod::Cayley).unwrap())).unwrap();
    fs::write(root.join("spc2.sg"), sgraph::write(&spc_core::spc(2, spc_core::SpcMethod::Cayley).unwrap())).unwrap();
    fs::write(root.join("c-4.sg"), sgraph::write(&negative_cycle(4).unwrap())).unwrap();
    println!("{} lift instances, {} packing instances", suite.len(), list.len());
}
