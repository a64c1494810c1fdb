//! Exhaustive small signed graphs.
//!
//! Graphs are listed once per isomorphism class of the underlying multigraph
//! (pairs are empty, a single edge or a digon; vertices may carry a positive
//! loop), and once per switching class of the signature on that labelled
//! multigraph. Distinct entries can still be switching isomorphic when the
//! multigraph has automorphisms.

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub const MAX_ENUM_VERTICES: usize = 6;

#[derive(Copy, Clone, PartialEq, Eq)]
enum Pair {
    Empty,
    Single,
    Digon,
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

fn connected(n: usize, pairs: &[(usize, usize)], code: &[u8]) -> bool {
    if n == 0 {
        return false;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if code[i] != 0 && (a == x || b == x) {
                let y = a + b - x;
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Underlying multigraphs (pair states in `0..3`) up to isomorphism, with
/// the automorphisms of each.
fn multigraph_classes(n: usize, only_connected: bool) -> Vec<(Vec<u8>, Vec<Vec<usize>>)> {
    let ps = pairs(n);
    let mut index = vec![vec![0; n]; n];
    for (i, &(a, b)) in ps.iter().enumerate() {
        index[a][b] = i;
        index[b][a] = i;
    }
    let perms = permutations(n);
    // image of pair i under each permutation
    let moved: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| ps.iter().map(|&(a, b)| index[p[a]][p[b]]).collect())
        .collect();
    let total = 3usize.pow(ps.len() as u32);
    let mut out = Vec::new();
    let mut code = vec![0u8; ps.len()];
    let mut image = vec![0u8; ps.len()];
    for c in 0..total {
        let mut x = c;
        for s in code.iter_mut() {
            *s = (x % 3) as u8;
            x /= 3;
        }
        if only_connected && !connected(n, &ps, &code) {
            continue;
        }
        // canonical iff no permutation gives a lexicographically smaller code
        let mut canonical = true;
        let mut auts = Vec::new();
        for (pi, m) in moved.iter().enumerate() {
            for (i, &j) in m.iter().enumerate() {
                image[j] = code[i];
            }
            match image.iter().rev().cmp(code.iter().rev()) {
                std::cmp::Ordering::Less => {
                    canonical = false;
                    break;
                }
                std::cmp::Ordering::Equal => auts.push(perms[pi].clone()),
                std::cmp::Ordering::Greater => {}
            }
        }
        if canonical {
            out.push((code.clone(), auts));
        }
    }
    out
}

/// Loop sets up to the automorphism group of the loopless part.
fn loop_masks(n: usize, auts: &[Vec<usize>]) -> Vec<u32> {
    (0..1u32 << n)
        .filter(|&m| {
            auts.iter().all(|p| {
                let img = (0..n).filter(|&v| m >> v & 1 == 1).fold(0u32, |acc, v| acc | 1 << p[v]);
                img >= m
            })
        })
        .collect()
}

/// Signed graphs on exactly `n` vertices as described in the module docs.
pub fn signed_graphs(n: usize, only_connected: bool, with_loops: bool) -> Result<Vec<SignedGraph>> {
    if n > MAX_ENUM_VERTICES {
        return Err(Error::SizeLimitExceeded { what: "enumeration order", size: n, limit: MAX_ENUM_VERTICES });
    }
    if n == 0 {
        return Ok(if only_connected { Vec::new() } else { vec![SignedGraph::empty(0)] });
    }
    let ps = pairs(n);
    let mut out = Vec::new();
    for (code, auts) in multigraph_classes(n, only_connected) {
        let states: Vec<Pair> = code
            .iter()
            .map(|&s| match s {
                0 => Pair::Empty,
                1 => Pair::Single,
                _ => Pair::Digon,
            })
            .collect();
        // single edges on a spanning forest of the single-edge subgraph stay
        // positive; every switching class has exactly one such signature
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let mut free = Vec::new();
        for (i, &(a, b)) in ps.iter().enumerate() {
            if states[i] == Pair::Single {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra == rb {
                    free.push(i);
                } else {
                    parent[ra] = rb;
                }
            }
        }
        let masks = if with_loops { loop_masks(n, &auts) } else { vec![0] };
        for signs in 0..1u32 << free.len() {
            let mut edges = Vec::new();
            for (i, &(a, b)) in ps.iter().enumerate() {
                match states[i] {
                    Pair::Empty => {}
                    Pair::Single => {
                        let neg = free.iter().position(|&f| f == i).is_some_and(|j| signs >> j & 1 == 1);
                        edges.push((a, b, Sign::from_negative(neg)));
                    }
                    Pair::Digon => {
                        edges.push((a, b, Sign::Positive));
                        edges.push((a, b, Sign::Negative));
                    }
                }
            }
            for &m in &masks {
                let loops = (0..n).filter(|&v| m >> v & 1 == 1).map(|v| (v, v, Sign::Positive));
                out.push(SignedGraph::new(n, edges.iter().copied().chain(loops))?);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equiv::is_switching_equivalent;
    use crate::iso::switching_isomorphic;

    #[test]
    fn small_counts() {
        // n = 2 connected: single edge, digon; each with 0, 1 or 2 loops
        assert_eq!(signed_graphs(2, true, false).unwrap().len(), 2);
        assert_eq!(signed_graphs(2, true, true).unwrap().len(), 6);
        // unlabelled simple graphs on 4 vertices
        let simple = multigraph_classes(4, false).into_iter().filter(|(c, _)| c.iter().all(|&s| s < 2)).count();
        assert_eq!(simple, 11);
        let connected = multigraph_classes(4, true).into_iter().filter(|(c, _)| c.iter().all(|&s| s < 2)).count();
        assert_eq!(connected, 6);
        // triangle: balanced and unbalanced
        let n3: Vec<_> = signed_graphs(3, true, false).unwrap();
        assert_eq!(n3.iter().filter(|g| g.edge_count() == 3 && g.digon_count() == 0).count(), 2);
    }

    #[test]
    fn covers_every_switching_isomorphism_class() {
        // brute force over all labelled signed graphs on 4 vertices without loops
        let list = signed_graphs(4, true, false).unwrap();
        let ps = pairs(4);
        for code in 0..4u32.pow(ps.len() as u32) {
            let mut edges = Vec::new();
            let mut x = code;
            for &(a, b) in &ps {
                match x % 4 {
                    1 => edges.push((a, b, Sign::Positive)),
                    2 => edges.push((a, b, Sign::Negative)),
                    3 => edges.extend([(a, b, Sign::Positive), (a, b, Sign::Negative)]),
                    _ => {}
                }
                x /= 4;
            }
            let g = SignedGraph::new(4, edges).unwrap();
            if !g.is_connected() || code % 7 != 0 {
                continue;
            }
            let hit = list.iter().any(|h| switching_isomorphic(&g, h).unwrap().is_some());
            assert!(hit, "{g:?}");
        }
    }

    #[test]
    fn no_duplicate_switching_classes_per_multigraph() {
        let list = signed_graphs(4, true, false).unwrap();
        for (i, g) in list.iter().enumerate() {
            for h in &list[i + 1..] {
                if g.underlying() == h.underlying() && g.digon_count() == h.digon_count() {
                    let same = g.edges().iter().map(|e| (e.u, e.v)).eq(h.edges().iter().map(|e| (e.u, e.v)));
                    if same {
                        assert!(is_switching_equivalent(g, &g.signature(), &h.signature()).unwrap().is_none());
                    }
                }
            }
        }
    }
}
