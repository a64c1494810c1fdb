//! Homomorphisms of signed graphs: search, verification, the explicit
//! projection `SPC(k+2) → SPC(k)`, girth obstructions and extraction of an
//! induced `SPC` from a binary Cayley graph.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::construct::{all_ones, signed_cayley, spc, CayleySpec, SpcMethod, MAX_SPC_DIM};
use crate::error::{Error, Result};
use crate::girth::{girth_profile, Girth};
use crate::graph::{Edge, Sign, SignedGraph, Switching};
use crate::search::{search, SearchConfig};

/// Switch the source by `switching`, then map vertex `v` to `vmap[v]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Homomorphism {
    pub switching: Switching,
    pub vmap: Vec<usize>,
}

impl Homomorphism {
    pub fn identity(n: usize) -> Homomorphism {
        Homomorphism { switching: Switching::empty(), vmap: (0..n).collect() }
    }

    /// `other ∘ self`: first `self` (G → H), then `other` (H → K).
    pub fn then(&self, other: &Homomorphism) -> Result<Homomorphism> {
        let vmap = self
            .vmap
            .iter()
            .map(|&w| {
                other.vmap.get(w).copied().ok_or_else(|| {
                    Error::IncompleteMapping(format!("vertex {w} has no image in the second map"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let pulled = Switching::new((0..self.vmap.len()).filter(|&v| other.switching.contains(self.vmap[v])));
        Ok(Homomorphism { switching: self.switching.symmetric_difference(&pulled), vmap })
    }
}

/// First source edge whose image has the wrong sign or does not exist.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeViolation {
    /// The source edge with its original sign.
    pub edge: Edge,
    /// Images of its endpoints.
    pub image: (usize, usize),
    /// Sign the image must carry after switching.
    pub required: Sign,
}

/// Checks a homomorphism against an explicit edge list, which may contain
/// parallel edges. `Ok(None)` means valid.
pub fn verify_edge_map<I>(n: usize, edges: I, h: &SignedGraph, hom: &Homomorphism) -> Result<Option<EdgeViolation>>
where
    I: IntoIterator<Item = (usize, usize, Sign)>,
{
    if hom.vmap.len() != n {
        return Err(Error::IncompleteMapping(format!(
            "map has {} entries, source has {n} vertices",
            hom.vmap.len()
        )));
    }
    if let Some(v) = hom.vmap.iter().position(|&w| w >= h.n()) {
        return Err(Error::IncompleteMapping(format!(
            "vertex {v} maps to {} outside the target's {} vertices",
            hom.vmap[v],
            h.n()
        )));
    }
    hom.switching.validate(n)?;
    for (u, v, sign) in edges {
        let required = if hom.switching.crosses(u, v) { sign.flip() } else { sign };
        let image = (hom.vmap[u], hom.vmap[v]);
        if !h.has_edge(image.0, image.1, required) {
            return Ok(Some(EdgeViolation { edge: Edge::new(u, v, sign), image, required }));
        }
    }
    Ok(None)
}

/// `Ok(None)` if `hom` is a homomorphism `g → h`, otherwise the first
/// violated edge.
pub fn verify_homomorphism(g: &SignedGraph, h: &SignedGraph, hom: &Homomorphism) -> Result<Option<EdgeViolation>> {
    verify_edge_map(g.n(), g.edges().iter().map(|e| (e.u, e.v, e.sign)), h, hom)
}

/// A girth class `ij` in which the source has strictly shorter closed walks
/// than the target, which rules out any homomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoHomCertificate {
    pub i: u8,
    pub j: u8,
    pub source: Girth,
    pub target: Girth,
}

impl NoHomCertificate {
    pub fn label(&self) -> String {
        format!("g{}{}", self.i, self.j)
    }
}

pub fn no_hom_certificate(g: &SignedGraph, h: &SignedGraph) -> Option<NoHomCertificate> {
    let (a, b) = (girth_profile(g), girth_profile(h));
    (0..4).find_map(|idx| {
        let (i, j) = (idx / 2, idx % 2);
        let (s, t) = (a.get(i, j), b.get(i, j));
        (s < t).then_some(NoHomCertificate { i: i as u8, j: j as u8, source: s, target: t })
    })
}

pub fn find_homomorphism(g: &SignedGraph, h: &SignedGraph) -> Result<Option<Homomorphism>> {
    find_homomorphism_with(g, h, &SearchConfig::default())
}

/// Exhaustive search for `g → h`. Every component of the source is switched
/// independently and its least vertex is never in the switching set.
pub fn find_homomorphism_with(g: &SignedGraph, h: &SignedGraph, config: &SearchConfig) -> Result<Option<Homomorphism>> {
    if config.allow_switching && no_hom_certificate(g, h).is_some() {
        return Ok(None);
    }
    let out = search(g, h, config, None)?;
    Ok(out.solution.map(|m| Homomorphism {
        switching: Switching::new((0..g.n()).filter(|&v| m.images[v].1)),
        vmap: m.images.iter().map(|&(w, _)| w).collect(),
    }))
}

/// The projection `SPC(k+2) → SPC(k)` on Cayley labels: switch the vertices
/// whose two lowest bits differ (making the `e_1`, `e_2` and `J` edges
/// negative), then drop those two bits, complementing when they differ.
pub fn spc_projection_hom(k: usize) -> Result<Homomorphism> {
    if k == 0 || k + 2 > MAX_SPC_DIM {
        return Err(Error::PreconditionFailed(format!(
            "projection needs 1 <= k <= {}, got {k}",
            MAX_SPC_DIM - 2
        )));
    }
    let j = all_ones(k);
    let n = 1usize << (k + 2);
    let odd = |u: usize| (u ^ (u >> 1)) & 1 == 1;
    let vmap = (0..n)
        .map(|u| {
            let low = (u >> 2) as u64;
            (if odd(u) { low ^ j } else { low }) as usize
        })
        .collect();
    Ok(Homomorphism { switching: Switching::new((0..n).filter(|&u| odd(u))), vmap })
}

/// An induced copy of `SPC(dimension)` in a Cayley host.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedEmbedding {
    pub dimension: usize,
    /// `map[x]`: host vertex playing the `SPC` vertex with Cayley label `x`.
    pub map: Vec<usize>,
    /// The same vertices, sorted.
    pub vertices: Vec<usize>,
    /// Host vertices to switch so that the copy matches signs exactly.
    pub switching: Switching,
}

impl InducedEmbedding {
    /// Whether the induced, switched subgraph equals `spc(dimension)` under
    /// `map`.
    pub fn verify(&self, host: &SignedGraph) -> Result<bool> {
        let target = spc(self.dimension, SpcMethod::Cayley)?;
        let sub = host.switch(&self.switching)?.induced_subgraph(&self.map)?;
        Ok(sub == target)
    }
}

/// Finds a shortest negative closed walk through 0 in the Cayley graph and
/// spans an induced `SPC` by the subset sums of its generators.
///
/// The host must be unbalanced and either signed bipartite (shortest
/// negative cycle `2k`, giving `SPC(2k-1)`) or antibalanced (odd
/// shortest negative cycle `2k+1`, giving `SPC(2k)`).
pub fn find_induced_spc(spec: &CayleySpec) -> Result<InducedEmbedding> {
    let host = signed_cayley(spec);
    let profile = girth_profile(&host);
    let bipartite = !profile.g01.is_finite() && !profile.g11.is_finite();
    let antibalanced = !profile.g01.is_finite() && !profile.g10.is_finite();
    if !profile.negative_girth().is_finite() {
        return Err(Error::PreconditionFailed("host is balanced".into()));
    }
    if !bipartite && !antibalanced {
        return Err(Error::PreconditionFailed(
            "host is neither signed bipartite nor antibalanced".into(),
        ));
    }
    let gens = negative_generator_walk(spec);
    let m = gens.len() - 1;
    if m > MAX_SPC_DIM {
        return Err(Error::SizeLimitExceeded { what: "induced SPC dimension", size: m, limit: MAX_SPC_DIM });
    }
    let negative: u64 = (0..m).filter(|&i| gens[i].1.is_negative()).map(|i| 1 << i).sum();
    let mut map = Vec::with_capacity(1 << m);
    let mut switched = Vec::new();
    for x in 0u64..1 << m {
        let u = (0..m).filter(|&i| x >> i & 1 == 1).fold(0u64, |acc, i| acc ^ gens[i].0) as usize;
        if (x & negative).count_ones() % 2 == 1 {
            switched.push(u);
        }
        map.push(u);
    }
    let mut vertices = map.clone();
    vertices.sort_unstable();
    let emb = InducedEmbedding { dimension: m, map, vertices, switching: Switching::new(switched) };
    if emb.vertices.windows(2).any(|w| w[0] == w[1]) || !emb.verify(&host)? {
        return Err(Error::PreconditionFailed(
            "subset sums of a shortest negative cycle do not induce a projective cube".into(),
        ));
    }
    Ok(emb)
}

/// Generators along a shortest negative closed walk from 0, reordered so the
/// last one is negative.
fn negative_generator_walk(spec: &CayleySpec) -> Vec<(u64, Sign)> {
    let gens: Vec<(u64, Sign)> = spec
        .splus()
        .iter()
        .filter(|&&s| s != 0)
        .map(|&s| (s, Sign::Positive))
        .chain(spec.sminus().iter().map(|&s| (s, Sign::Negative)))
        .collect();
    let states = 2 * spec.order();
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; states];
    let mut seen = vec![false; states];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let goal = 1;
    while let Some(st) = queue.pop_front() {
        if st == goal {
            break;
        }
        let (x, par) = (st >> 1, st & 1);
        for (gi, &(s, sign)) in gens.iter().enumerate() {
            let next = (((x as u64 ^ s) as usize) << 1) | (par ^ sign.bit());
            if !seen[next] {
                seen[next] = true;
                prev[next] = Some((st, gi));
                queue.push_back(next);
            }
        }
    }
    let mut walk = Vec::new();
    let mut st = goal;
    while let Some((p, gi)) = prev[st] {
        walk.push(gens[gi]);
        st = p;
    }
    walk.reverse();
    let last = walk.iter().rposition(|g| g.1.is_negative()).expect("walk is negative");
    let neg = walk.remove(last);
    walk.push(neg);
    walk
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{negative_cycle, unit};
    use crate::testutil::arb_signed_graph;
    use proptest::prelude::*;

    fn spcg(k: usize) -> SignedGraph {
        spc(k, SpcMethod::Cayley).unwrap()
    }

    #[test]
    fn spc4_maps_to_spc2() {
        let h = find_homomorphism(&spcg(4), &spcg(2)).unwrap().unwrap();
        assert_eq!(verify_homomorphism(&spcg(4), &spcg(2), &h).unwrap(), None);
    }

    #[test]
    fn spc2_does_not_map_to_spc4() {
        let c = no_hom_certificate(&spcg(2), &spcg(4)).unwrap();
        assert_eq!((c.i, c.j, c.source, c.target), (1, 1, Girth::Finite(3), Girth::Finite(5)));
        assert_eq!(find_homomorphism(&spcg(2), &spcg(4)).unwrap(), None);
    }

    #[test]
    fn negative_four_cycle_into_spc3() {
        let c = negative_cycle(4).unwrap();
        let h = find_homomorphism(&c, &spcg(3)).unwrap().unwrap();
        assert_eq!(verify_homomorphism(&c, &spcg(3), &h).unwrap(), None);
        // hand-made: 0 → e1 → e1+e2 → e1+e2+e3 = J closes with the negative J edge
        let hand = Homomorphism { switching: Switching::empty(), vmap: vec![0, 1, 3, 7] };
        assert_eq!(verify_homomorphism(&c, &spcg(3), &hand).unwrap(), None);
    }

    #[test]
    fn certificates() {
        let c = |a, b| no_hom_certificate(&negative_cycle(a).unwrap(), &negative_cycle(b).unwrap());
        assert_eq!(c(3, 5).map(|c| c.label()), Some("g11".into()));
        assert_eq!(c(5, 3), None);
        let x = no_hom_certificate(&spcg(2), &spcg(3)).unwrap();
        assert_eq!((x.i, x.j, x.target), (1, 1, Girth::Infinite));
    }

    #[test]
    fn projections_verify() {
        for k in 1..=6 {
            let h = spc_projection_hom(k).unwrap();
            assert_eq!(verify_homomorphism(&spcg(k + 2), &spcg(k), &h).unwrap(), None, "k = {k}");
        }
        let two = spc_projection_hom(4).unwrap().then(&spc_projection_hom(2).unwrap()).unwrap();
        assert_eq!(verify_homomorphism(&spcg(6), &spcg(2), &two).unwrap(), None);
        assert!(spc_projection_hom(0).is_err());
    }

    #[test]
    fn violations_are_named() {
        let g = spcg(3);
        assert_eq!(verify_homomorphism(&g, &g, &Homomorphism::identity(8)).unwrap(), None);
        let single = SignedGraph::new(2, [(0, 1, Sign::Negative)]).unwrap();
        let pos = SignedGraph::unsigned(2, [(0, 1)]).unwrap();
        let v = verify_homomorphism(&single, &pos, &Homomorphism::identity(2)).unwrap().unwrap();
        assert_eq!(v.edge, Edge::new(0, 1, Sign::Negative));
        assert_eq!(v.required, Sign::Negative);
        let short = Homomorphism { switching: Switching::empty(), vmap: vec![0] };
        assert!(matches!(verify_homomorphism(&single, &pos, &short), Err(Error::IncompleteMapping(_))));
    }

    #[test]
    fn induced_spc3_in_four_dimensional_host() {
        let spec = CayleySpec::new(4, (1..=4).map(unit), [unit(1) | unit(2) | unit(3)]).unwrap();
        let emb = find_induced_spc(&spec).unwrap();
        assert_eq!(emb.dimension, 3);
        assert_eq!(emb.vertices.len(), 8);
        assert!(emb.verify(&signed_cayley(&spec)).unwrap());
    }

    #[test]
    fn host_equal_to_target() {
        let spec = CayleySpec::spc(3).unwrap();
        let emb = find_induced_spc(&spec).unwrap();
        assert_eq!(emb.vertices, (0..8).collect::<Vec<_>>());
    }

    #[test]
    fn unsigned_odd_girth_five_host() {
        // the Clebsch graph with every edge negative
        let s: Vec<u64> = (1..=4).map(unit).chain([all_ones(4)]).collect();
        let spec = CayleySpec::new(4, [], s).unwrap();
        let emb = find_induced_spc(&spec).unwrap();
        assert_eq!(emb.dimension, 4);
        assert!(emb.verify(&signed_cayley(&spec)).unwrap());
    }

    #[test]
    fn balanced_host_is_rejected() {
        let spec = CayleySpec::new(3, (1..=3).map(unit), []).unwrap();
        assert!(matches!(find_induced_spc(&spec), Err(Error::PreconditionFailed(_))));
    }

    fn brute(g: &SignedGraph, h: &SignedGraph) -> bool {
        let (n, m) = (g.n(), h.n());
        if n == 0 {
            return true;
        }
        (0u32..1 << n).any(|x| {
            let gs = g.switch(&Switching::new((0..n).filter(|&v| x >> v & 1 == 1))).unwrap();
            (0..m.pow(n as u32)).any(|code| {
                let f: Vec<usize> = (0..n).map(|v| code / m.pow(v as u32) % m).collect();
                gs.edges().iter().all(|e| h.has_edge(f[e.u], f[e.v], e.sign))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(96))]

        #[test]
        fn agrees_with_brute_force(g in arb_signed_graph(5), h in arb_signed_graph(4)) {
            let found = find_homomorphism(&g, &h).unwrap();
            prop_assert_eq!(found.is_some(), brute(&g, &h));
            if let Some(hom) = found {
                prop_assert_eq!(verify_homomorphism(&g, &h, &hom).unwrap(), None);
            }
            if no_hom_certificate(&g, &h).is_some() {
                prop_assert!(!brute(&g, &h));
            }
        }
    }
}
