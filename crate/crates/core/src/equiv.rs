//! Switching equivalence of signatures.
//!
//! Two signatures on the same edge multiset are equivalent iff the edges on
//! which they differ form an edge cut. That is a parity-constrained
//! 2-colouring problem, solved per component by breadth-first search.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{SignedGraph, Signature, Switching};

/// Assigns a side to every vertex so that edge `i` crosses iff `crossing[i]`.
/// The least vertex of every component gets side `false`. `None` if no such
/// assignment exists (a loop can never cross).
pub fn parity_bipartition(n: usize, edges: &[(usize, usize)], crossing: &[bool]) -> Option<Vec<bool>> {
    debug_assert_eq!(edges.len(), crossing.len());
    let mut adj: Vec<Vec<(usize, bool)>> = vec![Vec::new(); n];
    for (&(u, v), &c) in edges.iter().zip(crossing) {
        if u == v {
            if c {
                return None;
            }
            continue;
        }
        adj[u].push((v, c));
        adj[v].push((u, c));
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for &(y, c) in &adj[x] {
                let want = sx ^ c;
                match side[y] {
                    None => {
                        side[y] = Some(want);
                        queue.push_back(y);
                    }
                    Some(s) if s != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.unwrap()).collect())
}

/// Switching witness between two signatures on an arbitrary edge multiset.
pub fn find_switching(
    n: usize,
    edges: &[(usize, usize)],
    a: &Signature,
    b: &Signature,
) -> Result<Option<Switching>> {
    if a.len() != edges.len() || b.len() != edges.len() {
        return Err(Error::InvalidSignature(format!(
            "signature lengths {} and {} do not match {} edges",
            a.len(),
            b.len(),
            edges.len()
        )));
    }
    for &(u, v) in edges {
        if u >= n || v >= n {
            return Err(Error::InvalidSignature(format!("edge {u}-{v} has no vertex in 0..{n}")));
        }
    }
    let crossing: Vec<bool> = a.iter().zip(b.iter()).map(|(x, y)| x != y).collect();
    Ok(parity_bipartition(n, edges, &crossing).map(|side| Switching::from_mask(&side)))
}

/// Witness `X` with `switch((G, s1), X) = (G, s2)`, where both signatures are
/// indexed by `g.edges()`.
pub fn is_switching_equivalent(g: &SignedGraph, s1: &Signature, s2: &Signature) -> Result<Option<Switching>> {
    for (name, s) in [("first", s1), ("second", s2)] {
        if s.len() != g.edge_count() {
            return Err(Error::InvalidSignature(format!(
                "{name} signature has {} entries, graph has {} edges",
                s.len(),
                g.edge_count()
            )));
        }
        if let Some(e) = g
            .edges()
            .iter()
            .zip(s.iter())
            .find(|(e, s)| e.is_loop() && s.is_negative())
        {
            return Err(Error::InvalidSignature(format!(
                "{name} signature makes the loop at {} negative",
                e.0.u
            )));
        }
    }
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    find_switching(g.n(), &pairs, s1, s2)
}
