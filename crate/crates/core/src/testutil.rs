//! Shared generators for unit tests.

use proptest::prelude::*;
use rand::Rng;

use crate::graph::{Sign, SignedGraph};

fn build(n: usize, states: &[u8], loops: &[bool]) -> SignedGraph {
    let mut edges = Vec::new();
    let mut k = 0;
    for a in 0..n {
        for b in a + 1..n {
            match states[k] {
                1 => edges.push((a, b, Sign::Positive)),
                2 => edges.push((a, b, Sign::Negative)),
                3 => {
                    edges.push((a, b, Sign::Positive));
                    edges.push((a, b, Sign::Negative));
                }
                _ => {}
            }
            k += 1;
        }
        if loops[a] {
            edges.push((a, a, Sign::Positive));
        }
    }
    SignedGraph::new(n, edges).unwrap()
}

/// Arbitrary signed graph on `1..=max_n` vertices: every pair is empty,
/// positive, negative or a digon; a few vertices carry positive loops.
pub(crate) fn arb_signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(0u8..4, pairs),
            proptest::collection::vec(proptest::bool::weighted(0.15), n),
        )
            .prop_map(|(n, states, loops)| build(n, &states, &loops))
    })
}

/// Like [`arb_signed_graph`] without loops or digons.
pub(crate) fn arb_simple_signed_graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(0u8..3, pairs))
            .prop_map(|(n, states)| build(n, &states, &vec![false; n]))
    })
}

/// Random loopless signed graph with edge density `p`; digons with
/// probability `digon`.
pub(crate) fn random_signed_graph<R: Rng>(rng: &mut R, n: usize, p: f64, digon: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                if rng.gen_bool(digon) {
                    edges.push((a, b, Sign::Positive));
                    edges.push((a, b, Sign::Negative));
                } else {
                    let s = Sign::from_negative(rng.gen_bool(0.5));
                    edges.push((a, b, s));
                }
            }
        }
    }
    SignedGraph::new(n, edges).unwrap()
}
