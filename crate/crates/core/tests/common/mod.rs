#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use rand::Rng;
use spc_core::{sgraph, Sign, SignedGraph};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

/// `(file name, graph)` for every `.sg` file in a fixture subdirectory,
/// sorted by name.
pub fn load_fixtures(sub: &str) -> Vec<(String, SignedGraph)> {
    let dir = fixtures_dir().join(sub);
    let mut names: Vec<String> = fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".sg"))
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|n| {
            let text = fs::read_to_string(dir.join(&n)).unwrap();
            let g = sgraph::parse(&text).unwrap_or_else(|e| panic!("{n}: {e}"));
            (n, g)
        })
        .collect()
}

/// Loopless random signed graph: each pair is an edge with probability `p`
/// (uniform sign), upgraded to a digon with probability `digon`.
pub fn random_signed_graph<R: Rng>(rng: &mut R, n: usize, p: f64, digon: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                if rng.gen_bool(digon) {
                    edges.push((a, b, Sign::Positive));
                    edges.push((a, b, Sign::Negative));
                } else {
                    edges.push((a, b, Sign::from_negative(rng.gen_bool(0.5))));
                }
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

pub fn k4() -> SignedGraph {
    SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
}
