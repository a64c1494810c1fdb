//! Lifting a bound through the extended double cover.
//!
//! Given `G` with a packing `σ_1..σ_{l+1}` that partitions its edges,
//! contract the negative edges of the distinguished `σ_{l+1}` (keeping
//! parallel edges), map the contracted graph to a bound `B̂`, pull that
//! signature back to `G`, and send `v` to `(x, 0)` or `(x, 1)` in `EDC(B̂)`
//! according to the side of the cut separating it from `σ_{l+1}`.

use serde::{Deserialize, Serialize};

use crate::classify::in_sp_k;
use crate::construct::edc;
use crate::equiv::{find_switching, parity_bipartition};
use crate::error::{Error, Result};
use crate::girth::{girth_profile, negative_girth, profile_of_edges};
use crate::graph::{Sign, SignedGraph, Signature, Switching};
use crate::iso::switching_isomorphic;
use crate::hom::{find_homomorphism_with, verify_edge_map, verify_homomorphism, Homomorphism};
use crate::pack::SignaturePacking;
use crate::search::SearchConfig;

/// The graph `G*` obtained by contracting one packing class. Parallel edges
/// are kept; `origin[e]` is the edge of `G` behind edge `e` of `G*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Contraction {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub origin: Vec<usize>,
    /// `projection[v]`: the vertex of `G*` that `v` was merged into.
    pub projection: Vec<usize>,
    /// Packing indices of the remaining signatures, in order.
    pub classes: Vec<usize>,
    /// The remaining signatures restricted to the edges of `G*`.
    pub signatures: Vec<Signature>,
}

impl Contraction {
    fn signed_edges(&self, which: usize) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges
            .iter()
            .zip(self.signatures[which].iter())
            .map(|(&(u, v), &s)| (u, v, s))
    }

    /// `G*` with its `which`-th remaining signature, same-sign parallel edges
    /// merged.
    pub fn simple_graph(&self, which: usize) -> Result<SignedGraph> {
        SignedGraph::simplified(self.n, self.signed_edges(which))
    }

    /// Whether all remaining signatures are switching equivalent on `G*`.
    pub fn signatures_equivalent(&self) -> Result<bool> {
        for s in self.signatures.iter().skip(1) {
            if find_switching(self.n, &self.edges, &self.signatures[0], s)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `SP_k` membership of `G*` (multigraph aware: planarity of the
    /// underlying simple graph, girth profile over the full edge list).
    pub fn in_sp(&self, k: usize) -> Result<bool> {
        if k < 2 {
            return Err(Error::PreconditionFailed(format!("SP_k needs k >= 2, got {k}")));
        }
        if self.signatures.is_empty() {
            return Ok(false);
        }
        let bound = girth_profile(&crate::construct::negative_cycle(k)?);
        let profile = profile_of_edges(self.n, self.signed_edges(0));
        let pairs = self.edges.iter().filter(|(u, v)| u != v).map(|&(u, v)| (u, v, Sign::Positive));
        let planar = crate::classify::is_planar(&SignedGraph::simplified(self.n, pairs)?);
        Ok(planar && profile.dominates(&bound))
    }
}

fn check_partition(g: &SignedGraph, packing: &SignaturePacking) -> Result<()> {
    if !packing.verify(g)? {
        return Err(Error::NotAPartition("negative sets overlap or do not come from their cuts".into()));
    }
    if !packing.is_partition(g) {
        return Err(Error::NotAPartition("some edge is positive in every signature".into()));
    }
    Ok(())
}

/// Contracts the negative edges of signature `i`.
pub fn contract_packing_class(g: &SignedGraph, packing: &SignaturePacking, i: usize) -> Result<Contraction> {
    check_partition(g, packing)?;
    if i >= packing.len() {
        return Err(Error::PreconditionFailed(format!("class {i} out of range for {} signatures", packing.len())));
    }
    let mut parent: Vec<usize> = (0..g.n()).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut x = x;
        while p[x] != r {
            let next = p[x];
            p[x] = r;
            x = next;
        }
        r
    }
    let contracted = &packing.negative_sets[i];
    for &e in contracted {
        let (a, b) = (find(&mut parent, g.edges()[e].u), find(&mut parent, g.edges()[e].v));
        parent[a.max(b)] = a.min(b);
    }
    let mut index = vec![usize::MAX; g.n()];
    let mut n = 0;
    let mut projection = vec![0; g.n()];
    for v in 0..g.n() {
        let r = find(&mut parent, v);
        if index[r] == usize::MAX {
            index[r] = n;
            n += 1;
        }
        projection[v] = index[r];
    }
    let mut drop = vec![false; g.edge_count()];
    contracted.iter().for_each(|&e| drop[e] = true);
    let origin: Vec<usize> = (0..g.edge_count()).filter(|&e| !drop[e]).collect();
    let edges = origin
        .iter()
        .map(|&e| {
            let (a, b) = (projection[g.edges()[e].u], projection[g.edges()[e].v]);
            (a.min(b), a.max(b))
        })
        .collect();
    let classes: Vec<usize> = (0..packing.len()).filter(|&j| j != i).collect();
    let signatures = classes
        .iter()
        .map(|&j| {
            let mut neg = vec![false; g.edge_count()];
            packing.negative_sets[j].iter().for_each(|&e| neg[e] = true);
            Signature(origin.iter().map(|&e| Sign::from_negative(neg[e])).collect())
        })
        .collect();
    let c = Contraction { n, edges, origin, projection, classes, signatures };
    if !c.signatures_equivalent()? {
        return Err(Error::PreconditionFailed(
            "remaining signatures are not equivalent on the contracted graph".into(),
        ));
    }
    let l = packing.len() - 1;
    if l >= 2 && in_sp_k(g, l + 1)? && !c.in_sp(l)? {
        return Err(Error::PreconditionFailed(format!(
            "contracted graph left SP_{l} although the input is in SP_{}",
            l + 1
        )));
    }
    Ok(c)
}

fn cut_of(n: usize, pairs: &[(usize, usize)], a: &Signature, b: &Signature) -> Result<Switching> {
    if let Some(e) = (0..a.len()).find(|&e| a.is_negative(e) && b.is_negative(e)) {
        return Err(Error::NotACut(format!("edge {e} is negative in both signatures")));
    }
    let crossing: Vec<bool> = a.iter().zip(b.iter()).map(|(x, y)| x.is_negative() || y.is_negative()).collect();
    let side = parity_bipartition(n, pairs, &crossing)
        .ok_or_else(|| Error::NotACut("the union of the negative sets is not an edge cut".into()))?;
    Ok(Switching::new((0..n).filter(|&v| side[v] == side.first().copied().unwrap_or(false))))
}

/// The side `A` (containing vertex 0) of a cut whose edges are exactly the
/// edges negative in `a` or in `b`.
pub fn separating_cut(g: &SignedGraph, a: &Signature, b: &Signature) -> Result<Switching> {
    for s in [a, b] {
        if s.len() != g.edge_count() {
            return Err(Error::InvalidSignature(format!(
                "signature has {} entries, graph has {} edges",
                s.len(),
                g.edge_count()
            )));
        }
    }
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    cut_of(g.n(), &pairs, a, b)
}

/// Everything the lift needs. `hom_to_bhat` maps the contraction of class
/// `distinguished`, carrying its first remaining signature, into `bhat`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftInstance {
    pub graph: SignedGraph,
    pub packing: SignaturePacking,
    pub distinguished: usize,
    pub bhat: SignedGraph,
    pub hom_to_bhat: Homomorphism,
}

impl LiftInstance {
    /// Builds an instance by contracting `distinguished` and searching for a
    /// map of the contraction into `bhat`. `None` if there is none.
    pub fn solve(
        graph: SignedGraph,
        packing: SignaturePacking,
        distinguished: usize,
        bhat: SignedGraph,
        config: &SearchConfig,
    ) -> Result<Option<LiftInstance>> {
        let c = contract_packing_class(&graph, &packing, distinguished)?;
        let Some(hom_to_bhat) = find_homomorphism_with(&c.simple_graph(0)?, &bhat, config)? else {
            return Ok(None);
        };
        Ok(Some(LiftInstance { graph, packing, distinguished, bhat, hom_to_bhat }))
    }
}

/// A homomorphism of `inst.graph` into `edc(inst.bhat)`; its switching turns
/// the input signature into the distinguished one.
pub fn lift_to_edc(inst: &LiftInstance) -> Result<Homomorphism> {
    let g = &inst.graph;
    let l1 = inst.packing.len();
    if l1 < 2 || !in_sp_k(g, l1)? {
        return Err(Error::PreconditionFailed(format!("input is not in SP_{l1}")));
    }
    let c = contract_packing_class(g, &inst.packing, inst.distinguished)?;
    let psi = &inst.hom_to_bhat;
    if let Some(v) = verify_edge_map(c.n, c.signed_edges(0), &inst.bhat, psi)? {
        return Err(Error::InvalidHomomorphism(format!(
            "map of the contracted graph fails on {} (image {}-{}, needs {})",
            v.edge, v.image.0, v.image.1, v.required
        )));
    }
    // σ' on G: the first remaining signature switched as ψ prescribes
    let first = c.classes[0];
    let mut neg_first = vec![false; g.edge_count()];
    inst.packing.negative_sets[first].iter().for_each(|&e| neg_first[e] = true);
    let lifted = |v: usize| psi.switching.contains(c.projection[v]);
    let sigma_prime = Signature(
        g.edges()
            .iter()
            .enumerate()
            .map(|(i, e)| Sign::from_negative(neg_first[i] != (lifted(e.u) != lifted(e.v))))
            .collect(),
    );
    let distinguished = Signature::from_negative_set(g.edge_count(), &inst.packing.negative_sets[inst.distinguished]);
    let a = separating_cut(g, &sigma_prime, &distinguished).map_err(|e| match e {
        Error::NotACut(m) => Error::PreconditionFailed(format!("pulled-back signature and the distinguished one: {m}")),
        other => other,
    })?;
    let nb = inst.bhat.n();
    let vmap = (0..g.n())
        .map(|v| psi.vmap[c.projection[v]] + if a.contains(v) { 0 } else { nb })
        .collect();
    let hom = Homomorphism { switching: inst.packing.cuts[inst.distinguished].clone(), vmap };
    let target = edc(&inst.bhat)?;
    if let Some(v) = verify_homomorphism(g, &target, &hom)? {
        return Err(Error::InvalidHomomorphism(format!("lifted map fails on {}", v.edge)));
    }
    Ok(hom)
}

/// Planar bipartite graphs built from a 4-cycle by gluing 4-faces: either a
/// path of length 3 along a face edge, or a new vertex joined to two
/// vertices at distance 2 on a face. Up to isomorphism, at most `max_n`
/// vertices, ordered by size.
pub fn glued_quadrangulations(max_n: usize) -> Result<Vec<SignedGraph>> {
    #[derive(Clone)]
    struct Plane {
        n: usize,
        faces: Vec<Vec<usize>>,
    }
    impl Plane {
        fn graph(&self) -> SignedGraph {
            let mut pairs = Vec::new();
            for f in &self.faces {
                for i in 0..f.len() {
                    let (a, b) = (f[i], f[(i + 1) % f.len()]);
                    pairs.push((a.min(b), a.max(b), Sign::Positive));
                }
            }
            SignedGraph::simplified(self.n, pairs).expect("face vertices are in range")
        }
    }
    let mut out: Vec<SignedGraph> = Vec::new();
    let mut frontier = vec![Plane { n: 4, faces: vec![vec![0, 1, 2, 3], vec![3, 2, 1, 0]] }];
    while let Some(p) = frontier.pop() {
        let g = p.graph();
        let mut fresh = true;
        for h in &out {
            if crate::iso::isomorphic(&g, h)?.is_some() {
                fresh = false;
                break;
            }
        }
        if !fresh {
            continue;
        }
        out.push(g);
        for (fi, f) in p.faces.iter().enumerate() {
            let len = f.len();
            for i in 0..len {
                let (a, x, b) = (f[i], f[(i + 1) % len], f[(i + 2) % len]);
                if p.n + 2 <= max_n {
                    // path a-c-d-x inside the face
                    let (c, d) = (p.n, p.n + 1);
                    let mut faces = p.faces.clone();
                    let mut rest = f.clone();
                    rest.splice(i + 1..i + 1, [c, d]);
                    faces[fi] = rest;
                    faces.push(vec![a, c, d, x]);
                    frontier.push(Plane { n: p.n + 2, faces });
                }
                if p.n < max_n && a != b {
                    let c = p.n;
                    let mut faces = p.faces.clone();
                    let mut rest = f.clone();
                    rest[(i + 1) % len] = c;
                    faces[fi] = rest;
                    faces.push(vec![a, x, b, c]);
                    frontier.push(Plane { n: p.n + 1, faces });
                }
            }
        }
    }
    out.sort_by_key(|g| (g.n(), g.edge_count()));
    Ok(out)
}

/// The signed lift suite: every switching class of negative girth 4 on each
/// glued quadrangulation with at most `max_n` vertices, one representative
/// per switching isomorphism class.
pub fn lift_suite(max_n: usize) -> Result<Vec<SignedGraph>> {
    let mut out = Vec::new();
    for g in glued_quadrangulations(max_n)? {
        let n = g.n();
        let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        // spanning tree by BFS from 0; cotree edges carry the signature
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut tree = vec![false; pairs.len()];
        let mut queue = std::collections::VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for (i, &(a, b)) in pairs.iter().enumerate() {
                if a == x || b == x {
                    let y = a + b - x;
                    if !seen[y] {
                        seen[y] = true;
                        tree[i] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        let cotree: Vec<usize> = (0..pairs.len()).filter(|&i| !tree[i]).collect();
        let mut mine: Vec<SignedGraph> = Vec::new();
        for signs in 1u32..1 << cotree.len() {
            let neg: Vec<usize> = (0..cotree.len()).filter(|&j| signs >> j & 1 == 1).map(|j| cotree[j]).collect();
            let h = g.with_signature(&Signature::from_negative_set(pairs.len(), &neg))?;
            if negative_girth(&h) != crate::girth::Girth::Finite(4) {
                continue;
            }
            let mut fresh = true;
            for k in &mine {
                if switching_isomorphic(&h, k)?.is_some() {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                mine.push(h);
            }
        }
        out.extend(mine);
    }
    Ok(out)
}
