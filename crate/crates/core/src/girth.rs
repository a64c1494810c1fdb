//! Girth profiles `g_ij`: the length of a shortest closed walk whose number of
//! negative edges has parity `i` and whose length has parity `j`.
//!
//! Walks have length at least one, so any edge gives `g_00 = 2` (across and
//! back). The shortest negative closed walk always contains a negative cycle
//! of at most the same length, hence `min(g_10, g_11)` is also the negative
//! girth measured on cycles (a digon counts as a cycle of length two).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::graph::{Sign, SignedGraph};

/// A length that may be infinite. `Finite(_) < Infinite`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn is_finite(self) -> bool {
        matches!(self, Girth::Finite(_))
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(x) => Some(x),
            Girth::Infinite => None,
        }
    }

    /// `Infinite + k = Infinite`.
    pub fn plus(self, k: usize) -> Girth {
        match self {
            Girth::Finite(x) => Girth::Finite(x + k),
            Girth::Infinite => Girth::Infinite,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(x) => write!(f, "{x}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(x) => s.serialize_u64(*x as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(x) => Ok(Girth::Finite(x as usize)),
            Raw::Str(s) if s == "inf" => Ok(Girth::Infinite),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("bad girth {s:?}"))),
        }
    }
}

/// `(g_00, g_01, g_10, g_11)`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GirthProfile {
    pub g00: Girth,
    pub g01: Girth,
    pub g10: Girth,
    pub g11: Girth,
}

impl GirthProfile {
    pub const EMPTY: GirthProfile = GirthProfile {
        g00: Girth::Infinite,
        g01: Girth::Infinite,
        g10: Girth::Infinite,
        g11: Girth::Infinite,
    };

    pub fn from_array(a: [Girth; 4]) -> GirthProfile {
        GirthProfile {
            g00: a[0],
            g01: a[1],
            g10: a[2],
            g11: a[3],
        }
    }

    /// Index `2i + j`.
    pub fn as_array(&self) -> [Girth; 4] {
        [self.g00, self.g01, self.g10, self.g11]
    }

    pub fn get(&self, i: usize, j: usize) -> Girth {
        self.as_array()[2 * i + j]
    }

    pub fn negative_girth(&self) -> Girth {
        self.g10.min(self.g11)
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &GirthProfile) -> bool {
        self.as_array()
            .iter()
            .zip(other.as_array().iter())
            .all(|(a, b)| a >= b)
    }

    fn merge_min(&mut self, other: &GirthProfile) {
        self.g00 = self.g00.min(other.g00);
        self.g01 = self.g01.min(other.g01);
        self.g10 = self.g10.min(other.g10);
        self.g11 = self.g11.min(other.g11);
    }
}

impl fmt::Display for GirthProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.g00, self.g01, self.g10, self.g11)
    }
}

/// Adjacency for the 4-fold cover walk; loops appear once.
struct WalkAdjacency {
    adj: Vec<Vec<(usize, usize)>>,
}

impl WalkAdjacency {
    fn new(n: usize, edges: impl Iterator<Item = (usize, usize, Sign)>) -> WalkAdjacency {
        let mut adj = vec![Vec::new(); n];
        for (u, v, s) in edges {
            adj[u].push((v, s.bit()));
            if u != v {
                adj[v].push((u, s.bit()));
            }
        }
        WalkAdjacency { adj }
    }

    fn profile_at(&self, base: usize, dist: &mut [usize], queue: &mut VecDeque<usize>) -> GirthProfile {
        dist.fill(usize::MAX);
        queue.clear();
        // state = 4 * vertex + 2 * sign_parity + length_parity
        for &(w, s) in &self.adj[base] {
            let st = 4 * w + 2 * s + 1;
            if dist[st] == usize::MAX {
                dist[st] = 1;
                queue.push_back(st);
            }
        }
        while let Some(st) = queue.pop_front() {
            let (x, i, j) = (st / 4, (st / 2) & 1, st & 1);
            let d = dist[st] + 1;
            for &(w, s) in &self.adj[x] {
                let nt = 4 * w + 2 * (i ^ s) + (j ^ 1);
                if dist[nt] == usize::MAX {
                    dist[nt] = d;
                    queue.push_back(nt);
                }
            }
        }
        let g = |k: usize| match dist[4 * base + k] {
            usize::MAX => Girth::Infinite,
            d => Girth::Finite(d),
        };
        GirthProfile::from_array([g(0), g(1), g(2), g(3)])
    }
}

/// Profile of an arbitrary edge multiset (parallel edges and loops of either
/// sign allowed).
pub fn profile_of_edges<I>(n: usize, edges: I) -> GirthProfile
where
    I: IntoIterator<Item = (usize, usize, Sign)>,
{
    let adj = WalkAdjacency::new(n, edges.into_iter());
    let mut dist = vec![usize::MAX; 4 * n];
    let mut queue = VecDeque::new();
    let mut out = GirthProfile::EMPTY;
    for v in 0..n {
        let p = adj.profile_at(v, &mut dist, &mut queue);
        out.merge_min(&p);
    }
    out
}

pub fn girth_profile(g: &SignedGraph) -> GirthProfile {
    profile_of_edges(g.n(), g.edges().iter().map(|e| (e.u, e.v, e.sign)))
}

/// Shortest closed walks through `v` only. For vertex-transitive graphs this
/// equals the full profile.
pub fn girth_profile_at(g: &SignedGraph, v: usize) -> GirthProfile {
    let adj = WalkAdjacency::new(g.n(), g.edges().iter().map(|e| (e.u, e.v, e.sign)));
    let mut dist = vec![usize::MAX; 4 * g.n()];
    adj.profile_at(v, &mut dist, &mut VecDeque::new())
}

/// Length of a shortest negative cycle.
pub fn negative_girth(g: &SignedGraph) -> Girth {
    girth_profile(g).negative_girth()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{gallery, negative_cycle, spc, Gallery, SpcMethod};
    use proptest::prelude::*;
    use Girth::*;

    /// Exhaustive enumeration of closed walks up to `max_len`.
    fn walk_oracle(g: &SignedGraph, max_len: usize) -> GirthProfile {
        let mut best = [Infinite; 4];
        // reach[v][i] after `len` steps starting from base
        for base in 0..g.n() {
            let mut cur = vec![[false; 2]; g.n()];
            cur[base][0] = true;
            for len in 1..=max_len {
                let mut next = vec![[false; 2]; g.n()];
                for x in 0..g.n() {
                    for i in 0..2 {
                        if !cur[x][i] {
                            continue;
                        }
                        for e in g.edges() {
                            if e.u == x || e.v == x {
                                let y = e.other(x);
                                next[y][i ^ e.sign.bit()] = true;
                            }
                        }
                    }
                }
                for i in 0..2 {
                    if next[base][i] {
                        let k = 2 * i + (len & 1);
                        best[k] = best[k].min(Finite(len));
                    }
                }
                cur = next;
            }
        }
        GirthProfile::from_array(best)
    }

    #[test]
    fn negative_five_cycle() {
        let p = girth_profile(&negative_cycle(5).unwrap());
        assert_eq!(p.as_array(), [Finite(2), Infinite, Infinite, Finite(5)]);
        assert_eq!(p, walk_oracle(&negative_cycle(5).unwrap(), 12));
    }

    #[test]
    fn edgeless_graph_is_all_infinite() {
        assert_eq!(girth_profile(&SignedGraph::empty(3)), GirthProfile::EMPTY);
    }

    #[test]
    fn spc3_matches_negative_four_cycle() {
        let p = girth_profile(&spc(3, SpcMethod::Cayley).unwrap());
        assert_eq!(p.as_array(), [Finite(2), Infinite, Finite(4), Infinite]);
        assert_eq!(p, girth_profile(&negative_cycle(4).unwrap()));
    }

    #[test]
    fn positive_loop_gives_odd_positive_walk() {
        let g = SignedGraph::new(1, [(0, 0, Sign::Positive)]).unwrap();
        assert_eq!(girth_profile(&g).as_array(), [Finite(2), Finite(1), Infinite, Infinite]);
    }

    #[test]
    fn profile_at_matches_global_on_vertex_transitive() {
        let g = gallery(&Gallery::Clebsch).unwrap().all_negative();
        assert_eq!(girth_profile_at(&g, 5), girth_profile(&g));
    }

    #[test]
    fn girth_display_and_order() {
        assert!(Finite(100) < Infinite);
        assert_eq!(Infinite.plus(3), Infinite);
        assert_eq!(format!("{}", girth_profile(&negative_cycle(3).unwrap())), "(2, inf, inf, 3)");
    }

    proptest! {
        #[test]
        fn matches_walk_enumeration(g in crate::testutil::arb_signed_graph(7)) {
            let bound = 4 * g.n() + 1;
            prop_assert_eq!(girth_profile(&g), walk_oracle(&g, bound));
        }
    }
}
