//! Signed graph data model.
//!
//! A [`SignedGraph`] is simple in the signed sense: between two vertices there
//! is at most one edge of each sign, so a pair may carry a digon (one positive
//! and one negative edge). Loops are allowed only with a positive sign.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn from_negative(negative: bool) -> Sign {
        if negative {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }

    /// Index 0 for `+`, 1 for `-`.
    pub fn bit(self) -> usize {
        self as usize
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self.is_negative() != rhs.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// An edge with `u <= v`. The derived order is `(u, v, sign)` with `+` first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    pub fn new(a: usize, b: usize, sign: Sign) -> Edge {
        Edge {
            u: a.min(b),
            v: a.max(b),
            sign,
        }
    }

    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.u, self.sign, self.v)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    pos: Vec<Vec<usize>>,
    neg: Vec<Vec<usize>>,
    loops: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    n: usize,
    edges: Vec<(usize, usize, Sign)>,
}

impl From<SignedGraph> for RawGraph {
    fn from(g: SignedGraph) -> RawGraph {
        RawGraph { n: g.n, edges: g.edges.iter().map(|e| (e.u, e.v, e.sign)).collect() }
    }
}

impl TryFrom<RawGraph> for SignedGraph {
    type Error = Error;

    fn try_from(r: RawGraph) -> Result<SignedGraph> {
        SignedGraph::new(r.n, r.edges)
    }
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

impl std::hash::Hash for SignedGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl SignedGraph {
    /// Builds a graph, rejecting out-of-range endpoints, negative loops and
    /// repeated `(pair, sign)` triples.
    pub fn new<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            let e = Self::checked_edge(n, a, b, sign)?;
            list.push(e);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                u: w[0].u,
                v: w[0].v,
                sign: w[0].sign,
            });
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Like [`SignedGraph::new`] but silently merges repeated edges of the
    /// same sign into one.
    pub fn simplified<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            list.push(Self::checked_edge(n, a, b, sign)?);
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted(n, list))
    }

    /// An all-positive graph, the representation used for unsigned graphs.
    pub fn unsigned<I>(n: usize, pairs: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, pairs.into_iter().map(|(a, b)| (a, b, Sign::Positive)))
    }

    pub fn empty(n: usize) -> SignedGraph {
        Self::from_sorted(n, Vec::new())
    }

    fn checked_edge(n: usize, a: usize, b: usize, sign: Sign) -> Result<Edge> {
        for x in [a, b] {
            if x >= n {
                return Err(Error::InvalidVertex { vertex: x, n });
            }
        }
        if a == b && sign.is_negative() {
            return Err(Error::NegativeLoopForbidden(a));
        }
        Ok(Edge::new(a, b, sign))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> SignedGraph {
        let mut pos = vec![Vec::new(); n];
        let mut neg = vec![Vec::new(); n];
        let mut loops = vec![false; n];
        for e in &edges {
            if e.is_loop() {
                loops[e.u] = true;
                continue;
            }
            let lists = match e.sign {
                Sign::Positive => &mut pos,
                Sign::Negative => &mut neg,
            };
            lists[e.u].push(e.v);
            lists[e.v].push(e.u);
        }
        for l in pos.iter_mut().chain(neg.iter_mut()) {
            l.sort_unstable();
        }
        SignedGraph {
            n,
            edges,
            pos,
            neg,
            loops,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn positive_neighbors(&self, v: usize) -> &[usize] {
        &self.pos[v]
    }

    pub fn negative_neighbors(&self, v: usize) -> &[usize] {
        &self.neg[v]
    }

    pub fn neighbors_with_sign(&self, v: usize, sign: Sign) -> &[usize] {
        match sign {
            Sign::Positive => &self.pos[v],
            Sign::Negative => &self.neg[v],
        }
    }

    /// Non-loop neighbours with the sign of the connecting edge; a digon
    /// neighbour appears twice.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.pos[v]
            .iter()
            .map(|&w| (w, Sign::Positive))
            .chain(self.neg[v].iter().map(|&w| (w, Sign::Negative)))
    }

    /// Distinct non-loop neighbours.
    pub fn underlying_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.pos[v].iter().chain(self.neg[v].iter()).copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn has_loop(&self, v: usize) -> bool {
        self.loops[v]
    }

    pub fn has_edge(&self, a: usize, b: usize, sign: Sign) -> bool {
        if a >= self.n || b >= self.n {
            return false;
        }
        if a == b {
            return sign == Sign::Positive && self.loops[a];
        }
        self.neighbors_with_sign(a, sign).binary_search(&b).is_ok()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.has_edge(a, b, Sign::Positive) || self.has_edge(a, b, Sign::Negative)
    }

    /// Number of non-loop edge ends at `v` (a digon counts twice).
    pub fn degree(&self, v: usize) -> usize {
        self.pos[v].len() + self.neg[v].len()
    }

    pub fn negative_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    pub fn has_loops(&self) -> bool {
        self.loops.iter().any(|&l| l)
    }

    pub fn is_all_positive(&self) -> bool {
        self.edges.iter().all(|e| !e.sign.is_negative())
    }

    pub fn digon_count(&self) -> usize {
        self.edges
            .windows(2)
            .filter(|w| w[0].u == w[1].u && w[0].v == w[1].v)
            .count()
    }

    /// Sorted distinct non-loop vertex pairs.
    pub fn underlying_pairs(&self) -> Vec<(usize, usize)> {
        let mut pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|e| !e.is_loop())
            .map(|e| (e.u, e.v))
            .collect();
        pairs.dedup();
        pairs
    }

    pub fn signature(&self) -> Signature {
        Signature(self.edges.iter().map(|e| e.sign).collect())
    }

    /// Re-signs the edge list of `self` (edge `i` receives `sig[i]`).
    pub fn with_signature(&self, sig: &Signature) -> Result<SignedGraph> {
        if sig.len() != self.edges.len() {
            return Err(Error::InvalidSignature(format!(
                "signature has {} entries, graph has {} edges",
                sig.len(),
                self.edges.len()
            )));
        }
        SignedGraph::new(
            self.n,
            self.edges
                .iter()
                .zip(sig.iter())
                .map(|(e, &s)| (e.u, e.v, s)),
        )
        .map_err(|e| Error::InvalidSignature(e.to_string()))
    }

    /// Switches at the cut `(X, V \ X)`.
    pub fn switch(&self, x: &Switching) -> Result<SignedGraph> {
        x.validate(self.n)?;
        let mask = x.mask(self.n);
        let edges = self.edges.iter().map(|e| {
            let s = if mask[e.u] != mask[e.v] { e.sign.flip() } else { e.sign };
            (e.u, e.v, s)
        });
        SignedGraph::new(self.n, edges)
    }

    /// All signs multiplied by `-`. Fails on positive loops.
    pub fn negated(&self) -> Result<SignedGraph> {
        SignedGraph::new(self.n, self.edges.iter().map(|e| (e.u, e.v, e.sign.flip())))
    }

    /// The underlying simple graph with every edge made negative (digons
    /// collapse, loops are dropped).
    pub fn all_negative(&self) -> SignedGraph {
        let pairs = self.underlying_pairs();
        SignedGraph::from_sorted(
            self.n,
            pairs
                .into_iter()
                .map(|(u, v)| Edge::new(u, v, Sign::Negative))
                .collect(),
        )
    }

    /// The underlying simple graph, all edges positive.
    pub fn underlying(&self) -> SignedGraph {
        let mut edges: Vec<Edge> = self
            .underlying_pairs()
            .into_iter()
            .map(|(u, v)| Edge::new(u, v, Sign::Positive))
            .collect();
        edges.extend(
            (0..self.n)
                .filter(|&v| self.loops[v])
                .map(|v| Edge::new(v, v, Sign::Positive)),
        );
        edges.sort_unstable();
        SignedGraph::from_sorted(self.n, edges)
    }

    /// Renames vertex `v` to `perm[v]`; `perm` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.n {
            return Err(Error::IncompleteMapping(format!(
                "permutation has {} entries, graph has {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::IncompleteMapping("not a permutation".into()));
            }
        }
        SignedGraph::new(
            self.n,
            self.edges.iter().map(|e| (perm[e.u], perm[e.v], e.sign)),
        )
    }

    /// Subgraph induced on `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<SignedGraph> {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::InvalidVertex { vertex: v, n: self.n });
            }
            if index[v] != usize::MAX {
                return Err(Error::PreconditionFailed(format!(
                    "vertex {v} listed twice"
                )));
            }
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| index[e.u] != usize::MAX && index[e.v] != usize::MAX)
            .map(|e| (index[e.u], index[e.v], e.sign));
        SignedGraph::new(vertices.len(), edges)
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for (y, _) in self.neighbors(x) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SignedGraph) -> SignedGraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge::new(e.u + shift, e.v + shift, e.sign)));
        edges.sort_unstable();
        SignedGraph::from_sorted(self.n + other.n, edges)
    }

    /// Adds a positive loop on every vertex.
    pub fn with_positive_loops(&self) -> SignedGraph {
        let mut edges: Vec<Edge> = self.edges.clone();
        edges.extend(
            (0..self.n)
                .filter(|&v| !self.loops[v])
                .map(|v| Edge::new(v, v, Sign::Positive)),
        );
        edges.sort_unstable();
        SignedGraph::from_sorted(self.n, edges)
    }

    pub fn without_loops(&self) -> SignedGraph {
        SignedGraph::from_sorted(
            self.n,
            self.edges.iter().filter(|e| !e.is_loop()).copied().collect(),
        )
    }
}

/// One side `X` of a cut `(X, V \ X)`. `X` and its complement induce the same
/// switching; [`Switching::canonical`] picks the side without vertex 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Switching(Vec<usize>);

impl Switching {
    pub fn new<I: IntoIterator<Item = usize>>(vertices: I) -> Switching {
        let set: BTreeSet<usize> = vertices.into_iter().collect();
        Switching(set.into_iter().collect())
    }

    pub fn empty() -> Switching {
        Switching(Vec::new())
    }

    pub fn from_mask(mask: &[bool]) -> Switching {
        Switching(
            mask.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| i)
                .collect(),
        )
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for &v in &self.0 {
            if v < n {
                m[v] = true;
            }
        }
        m
    }

    pub fn validate(&self, n: usize) -> Result<()> {
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn complement(&self, n: usize) -> Switching {
        let m = self.mask(n);
        Switching((0..n).filter(|&v| !m[v]).collect())
    }

    pub fn canonical(&self, n: usize) -> Switching {
        if self.contains(0) {
            self.complement(n)
        } else {
            self.clone()
        }
    }

    pub fn symmetric_difference(&self, other: &Switching) -> Switching {
        let a: BTreeSet<usize> = self.0.iter().copied().collect();
        let b: BTreeSet<usize> = other.0.iter().copied().collect();
        Switching(a.symmetric_difference(&b).copied().collect())
    }

    /// Whether the edge `u v` crosses the cut.
    pub fn crosses(&self, u: usize, v: usize) -> bool {
        self.contains(u) != self.contains(v)
    }
}

/// A sign per edge of some fixed edge list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Signature(pub Vec<Sign>);

impl Signature {
    pub fn from_negative_set(len: usize, negative: &[usize]) -> Signature {
        let mut s = vec![Sign::Positive; len];
        for &i in negative {
            s[i] = Sign::Negative;
        }
        Signature(s)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Sign> {
        self.0.iter()
    }

    pub fn is_negative(&self, i: usize) -> bool {
        self.0[i].is_negative()
    }

    pub fn negative_set(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i].is_negative()).collect()
    }
}

impl std::ops::Index<usize> for Signature {
    type Output = Sign;

    fn index(&self, i: usize) -> &Sign {
        &self.0[i]
    }
}
