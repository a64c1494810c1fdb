//! Signature packings: families of signatures, each switching equivalent to
//! the given one, whose negative edge sets are pairwise disjoint.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::construct::spc_loops;
use crate::equiv::is_switching_equivalent;
use crate::error::{Error, Result};
use crate::girth::{girth_profile, Girth};
use crate::graph::{SignedGraph, Signature, Switching};
use crate::hom::{find_homomorphism_with, verify_homomorphism, Homomorphism};
use crate::search::SearchConfig;

/// Largest input of [`packing_number_oracle`].
pub const MAX_ORACLE_VERTICES: usize = 12;

/// A packing number; balanced graphs pack infinitely often.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Packing {
    Finite(usize),
    Infinite,
}

impl Packing {
    pub fn from_girth(g: Girth) -> Packing {
        match g {
            Girth::Finite(x) => Packing::Finite(x),
            Girth::Infinite => Packing::Infinite,
        }
    }
}

impl fmt::Display for Packing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Packing::Finite(x) => write!(f, "{x}"),
            Packing::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Packing {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Packing::Finite(x) => s.serialize_u64(*x as u64),
            Packing::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Packing {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Packing, D::Error> {
        Ok(match Girth::deserialize(d)? {
            Girth::Finite(x) => Packing::Finite(x),
            Girth::Infinite => Packing::Infinite,
        })
    }
}

/// Signatures `σ_i = σ` switched at `cuts[i]`; `negative_sets[i]` indexes
/// `g.edges()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignaturePacking {
    pub cuts: Vec<Switching>,
    pub negative_sets: Vec<Vec<usize>>,
}

fn negative_set_after(g: &SignedGraph, x: &Switching) -> Vec<usize> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.sign.is_negative() != x.crosses(e.u, e.v))
        .map(|(i, _)| i)
        .collect()
}

impl SignaturePacking {
    /// Builds the packing from cuts, rejecting overlapping negative sets.
    pub fn from_cuts(g: &SignedGraph, cuts: Vec<Switching>) -> Result<SignaturePacking> {
        for x in &cuts {
            x.validate(g.n())?;
        }
        let negative_sets = cuts.iter().map(|x| negative_set_after(g, x)).collect();
        let p = SignaturePacking { cuts, negative_sets };
        p.check_disjoint(g)?;
        Ok(p)
    }

    /// Recovers the cuts of explicit signatures on `g.edges()`.
    pub fn from_signatures(g: &SignedGraph, sigs: &[Signature]) -> Result<SignaturePacking> {
        let base = g.signature();
        let cuts = sigs
            .iter()
            .enumerate()
            .map(|(i, s)| {
                is_switching_equivalent(g, &base, s)?
                    .ok_or_else(|| Error::InvalidSignature(format!("signature {i} is not equivalent to the graph's")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignaturePacking::from_cuts(g, cuts)
    }

    pub fn len(&self) -> usize {
        self.cuts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty()
    }

    pub fn signatures(&self, g: &SignedGraph) -> Vec<Signature> {
        self.negative_sets
            .iter()
            .map(|s| Signature::from_negative_set(g.edge_count(), s))
            .collect()
    }

    fn check_disjoint(&self, g: &SignedGraph) -> Result<()> {
        let mut owner = vec![usize::MAX; g.edge_count()];
        for (i, set) in self.negative_sets.iter().enumerate() {
            for &e in set {
                if owner[e] != usize::MAX {
                    return Err(Error::NotAPartition(format!(
                        "edge {} is negative in signatures {} and {i}",
                        g.edges()[e],
                        owner[e]
                    )));
                }
                owner[e] = i;
            }
        }
        Ok(())
    }

    /// Whether every edge is negative in exactly one signature.
    pub fn is_partition(&self, g: &SignedGraph) -> bool {
        self.check_disjoint(g).is_ok() && self.negative_sets.iter().map(Vec::len).sum::<usize>() == g.edge_count()
    }

    /// Re-derives every negative set from its cut and checks disjointness.
    pub fn verify(&self, g: &SignedGraph) -> Result<bool> {
        if self.cuts.len() != self.negative_sets.len() {
            return Ok(false);
        }
        for (x, set) in self.cuts.iter().zip(&self.negative_sets) {
            x.validate(g.n())?;
            if negative_set_after(g, x) != *set {
                return Ok(false);
            }
        }
        Ok(self.check_disjoint(g).is_ok())
    }
}

/// Exhaustive maximum packing over the `2^(n-1)` switchings (per component
/// redundancy is removed by deduplicating negative sets).
pub fn packing_number_oracle(g: &SignedGraph) -> Result<(Packing, SignaturePacking)> {
    if g.n() > MAX_ORACLE_VERTICES {
        return Err(Error::SizeLimitExceeded { what: "packing oracle input", size: g.n(), limit: MAX_ORACLE_VERTICES });
    }
    let m = g.edge_count();
    let mut seen: HashSet<FixedBitSet> = HashSet::new();
    let mut sets: Vec<(FixedBitSet, Switching)> = Vec::new();
    let half = g.n().saturating_sub(1);
    for mask in 0u32..1 << half {
        let x = Switching::new((0..half).filter(|&v| mask >> v & 1 == 1).map(|v| v + 1));
        let mut b = FixedBitSet::with_capacity(m);
        negative_set_after(g, &x).into_iter().for_each(|i| b.insert(i));
        if seen.insert(b.clone()) {
            sets.push((b, x));
        }
    }
    if let Some((_, x)) = sets.iter().find(|(b, _)| b.is_clear()) {
        let p = SignaturePacking::from_cuts(g, vec![x.clone()])?;
        return Ok((Packing::Infinite, p));
    }
    // a maximum packing may as well use inclusion-minimal negative sets
    let minimal: Vec<(FixedBitSet, Switching)> = sets
        .iter()
        .filter(|(b, _)| !sets.iter().any(|(c, _)| c != b && c.is_subset(b)))
        .cloned()
        .collect();
    let mut order: Vec<usize> = (0..minimal.len()).collect();
    order.sort_by_key(|&i| (minimal[i].0.count_ones(..), minimal[i].0.ones().collect::<Vec<_>>()));
    let cycle = shortest_negative_cycle_edges(g);
    let bound = cycle.count_ones(..);
    let mut best: Vec<usize> = Vec::new();
    let mut chosen = Vec::new();
    let used = FixedBitSet::with_capacity(m);
    pack_dfs(&minimal, &order, 0, &used, &cycle, bound, &mut chosen, &mut best);
    let cuts = best.iter().map(|&i| minimal[i].1.clone()).collect();
    let p = SignaturePacking::from_cuts(g, cuts)?;
    Ok((Packing::Finite(p.len()), p))
}

#[allow(clippy::too_many_arguments)]
fn pack_dfs(
    sets: &[(FixedBitSet, Switching)],
    order: &[usize],
    from: usize,
    used: &FixedBitSet,
    cycle: &FixedBitSet,
    bound: usize,
    chosen: &mut Vec<usize>,
    best: &mut Vec<usize>,
) {
    if chosen.len() > best.len() {
        *best = chosen.clone();
    }
    if best.len() == bound {
        return;
    }
    // every further set needs its own, still unused, edge of the cycle
    let free_cycle = cycle.difference(used).count();
    if chosen.len() + free_cycle <= best.len() {
        return;
    }
    for (pos, &i) in order.iter().enumerate().skip(from) {
        let s = &sets[i].0;
        if !s.is_disjoint(used) {
            continue;
        }
        let mut next = used.clone();
        next.union_with(s);
        chosen.push(i);
        pack_dfs(sets, order, pos + 1, &next, cycle, bound, chosen, best);
        chosen.pop();
        if best.len() == bound {
            return;
        }
    }
}

/// Edge indices of one shortest negative cycle (empty if balanced).
fn shortest_negative_cycle_edges(g: &SignedGraph) -> FixedBitSet {
    use std::collections::VecDeque;
    let m = g.edge_count();
    let mut out = FixedBitSet::with_capacity(m);
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.n()];
    for (i, e) in g.edges().iter().enumerate() {
        if !e.is_loop() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
    }
    let mut best: Option<Vec<usize>> = None;
    for root in 0..g.n() {
        // BFS on the sign double cover from (root, +) to (root, -)
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; 2 * g.n()];
        let mut seen = vec![false; 2 * g.n()];
        seen[2 * root] = true;
        let mut queue = VecDeque::from([2 * root]);
        while let Some(st) = queue.pop_front() {
            if st == 2 * root + 1 {
                break;
            }
            for &(w, i) in &adj[st / 2] {
                let next = 2 * w + ((st & 1) ^ g.edges()[i].sign.bit());
                if !seen[next] {
                    seen[next] = true;
                    prev[next] = Some((st, i));
                    queue.push_back(next);
                }
            }
        }
        if !seen[2 * root + 1] {
            continue;
        }
        let mut walk = Vec::new();
        let mut st = 2 * root + 1;
        while let Some((p, i)) = prev[st] {
            walk.push(i);
            st = p;
        }
        if best.as_ref().is_none_or(|b| walk.len() < b.len()) {
            best = Some(walk);
        }
    }
    if let Some(w) = best {
        w.into_iter().for_each(|i| out.insert(i));
    }
    out
}

pub fn packing_number(g: &SignedGraph) -> Result<Packing> {
    packing_number_with(g, &SearchConfig::default())
}

/// Largest `k` such that `g → SPC°(k-1)`, scanning down from the negative
/// girth. Unbalanced graphs always reach at least 1 (the signature itself).
pub fn packing_number_with(g: &SignedGraph, config: &SearchConfig) -> Result<Packing> {
    let girth = girth_profile(g).negative_girth();
    let Girth::Finite(top) = girth else {
        return Ok(Packing::Infinite);
    };
    let config = SearchConfig { transitive_target: true, ..config.clone() };
    for k in (2..=top).rev() {
        if find_homomorphism_with(g, &spc_loops(k - 1)?, &config)?.is_some() {
            return Ok(Packing::Finite(k));
        }
    }
    Ok(Packing::Finite(1))
}

/// Whether the packing number reaches the negative girth.
pub fn packs(g: &SignedGraph) -> Result<bool> {
    Ok(packing_number(g)? == Packing::from_girth(girth_profile(g).negative_girth()))
}

/// Pulls the edge labels `e_1..e_k, J` of `SPC(k)` back through `hom`:
/// signature `i < k` is negative on the `e_{i+1}`-edges, the last on the
/// `J`-edges. Edges sent to loops are positive in all of them. `hom` may
/// target `SPC(k)` or `SPC°(k)` on Cayley labels.
pub fn hom_to_signatures(g: &SignedGraph, hom: &Homomorphism, k: usize) -> Result<SignaturePacking> {
    let target = spc_loops(k)?;
    if let Some(v) = verify_homomorphism(g, &target, hom)? {
        return Err(Error::InvalidHomomorphism(format!(
            "edge {} maps to {}-{} which has no {} edge",
            v.edge, v.image.0, v.image.1, v.required
        )));
    }
    let x = &hom.switching;
    let mut cuts: Vec<Switching> = (0..k)
        .map(|bit| {
            let y = Switching::new((0..g.n()).filter(|&v| hom.vmap[v] >> bit & 1 == 1));
            x.symmetric_difference(&y)
        })
        .collect();
    cuts.push(x.clone());
    let packing = SignaturePacking::from_cuts(g, cuts)?;
    debug_assert!(packing.verify(g).unwrap_or(false));
    Ok(packing)
}

/// The converse: from `k + 1` disjoint signatures, the map
/// `v ↦ Σ_i [v ∈ X_i Δ X_{k+1}] e_i` with switching `X_{k+1}` is a
/// homomorphism into `SPC°(k)`, and into `SPC(k)` when the packing is a
/// partition of the edges.
pub fn signatures_to_hom(g: &SignedGraph, packing: &SignaturePacking) -> Result<Homomorphism> {
    if packing.is_empty() {
        return Err(Error::PreconditionFailed("empty packing".into()));
    }
    if !packing.verify(g)? {
        return Err(Error::NotAPartition("negative sets do not match the cuts or overlap".into()));
    }
    let k = packing.len() - 1;
    if k > crate::construct::MAX_SPC_DIM {
        return Err(Error::SizeLimitExceeded { what: "packing size", size: k + 1, limit: crate::construct::MAX_SPC_DIM + 1 });
    }
    let last = &packing.cuts[k];
    let vmap = (0..g.n())
        .map(|v| {
            (0..k)
                .filter(|&i| packing.cuts[i].contains(v) != last.contains(v))
                .map(|i| 1usize << i)
                .sum()
        })
        .collect();
    Ok(Homomorphism { switching: last.clone(), vmap })
}
