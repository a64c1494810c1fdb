//! Isomorphism and switching isomorphism.
//!
//! Both are decided by the cover search of [`crate::search`] in isomorphism
//! mode, with candidate images restricted to vertices of the same colour under
//! a joint colour refinement of the two graphs. For switching isomorphism the
//! colours only use switching-invariant data: the underlying graph, digons,
//! loops and the girth profile at each vertex.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::girth::{girth_profile_at, Girth};
use crate::graph::{Sign, SignedGraph, Switching};
use crate::search::{search, SearchConfig};

/// Largest vertex count accepted by the isomorphism routines.
pub const MAX_ISO_VERTICES: usize = 256;

/// `perm[v]` is the image of vertex `v`; `switching` is applied to the source
/// first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isomorphism {
    pub perm: Vec<usize>,
    pub switching: Switching,
}

impl Isomorphism {
    /// Checks that switching `g1` and relabelling by `perm` gives exactly `g2`.
    pub fn verify(&self, g1: &SignedGraph, g2: &SignedGraph) -> Result<bool> {
        if g1.n() != g2.n() || self.perm.len() != g1.n() {
            return Ok(false);
        }
        Ok(g1.switch(&self.switching)?.relabel(&self.perm)? == *g2)
    }

    /// The inverse witness, mapping `g2` back onto `g1`.
    pub fn inverse(&self) -> Isomorphism {
        let mut inv = vec![0; self.perm.len()];
        for (v, &w) in self.perm.iter().enumerate() {
            inv[w] = v;
        }
        Isomorphism {
            switching: Switching::new(self.switching.vertices().iter().map(|&v| self.perm[v])),
            perm: inv,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Plain,
    Switching,
}

fn pair_kind(g: &SignedGraph, u: usize, v: usize, mode: Mode) -> u8 {
    let p = g.has_edge(u, v, Sign::Positive);
    let n = g.has_edge(u, v, Sign::Negative);
    match (mode, p, n) {
        (_, true, true) => 2,
        (Mode::Switching, _, _) => 1,
        (Mode::Plain, true, false) => 0,
        (Mode::Plain, _, _) => 1,
    }
}

type Key = (u8, Vec<usize>, [Girth; 4]);

fn initial_key(g: &SignedGraph, v: usize, mode: Mode) -> Key {
    let nbrs = g.underlying_neighbors(v);
    let mut counts = vec![0usize; 3];
    for &w in &nbrs {
        counts[pair_kind(g, v, w, mode) as usize] += 1;
    }
    (g.has_loop(v) as u8, counts, girth_profile_at(g, v).as_array())
}

/// Stable colouring of the disjoint union of `graphs`; colours are
/// comparable across the graphs.
fn refine(graphs: &[&SignedGraph], mode: Mode) -> Vec<Vec<usize>> {
    let mut keys: BTreeMap<Key, usize> = BTreeMap::new();
    let raw: Vec<Vec<Key>> = graphs
        .iter()
        .map(|g| (0..g.n()).map(|v| initial_key(g, v, mode)).collect())
        .collect();
    for k in raw.iter().flatten() {
        let next = keys.len();
        keys.entry(k.clone()).or_insert(next);
    }
    let mut colours: Vec<Vec<usize>> = raw
        .iter()
        .map(|r| r.iter().map(|k| keys[k]).collect())
        .collect();
    let mut classes = keys.len();
    loop {
        let mut table: BTreeMap<(usize, Vec<(u8, usize)>), usize> = BTreeMap::new();
        let sigs: Vec<Vec<(usize, Vec<(u8, usize)>)>> = graphs
            .iter()
            .zip(&colours)
            .map(|(g, c)| {
                (0..g.n())
                    .map(|v| {
                        let mut s: Vec<(u8, usize)> = g
                            .underlying_neighbors(v)
                            .into_iter()
                            .map(|w| (pair_kind(g, v, w, mode), c[w]))
                            .collect();
                        s.sort_unstable();
                        (c[v], s)
                    })
                    .collect()
            })
            .collect();
        for s in sigs.iter().flatten() {
            let next = table.len();
            table.entry(s.clone()).or_insert(next);
        }
        colours = sigs.iter().map(|r| r.iter().map(|s| table[s]).collect()).collect();
        if table.len() == classes {
            return colours;
        }
        classes = table.len();
    }
}

fn histogram(c: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &x in c {
        *h.entry(x).or_insert(0) += 1;
    }
    h
}

fn check_size(g: &SignedGraph) -> Result<()> {
    if g.n() > MAX_ISO_VERTICES {
        return Err(Error::SizeLimitExceeded {
            what: "isomorphism input",
            size: g.n(),
            limit: MAX_ISO_VERTICES,
        });
    }
    Ok(())
}

fn find(
    g1: &SignedGraph,
    g2: &SignedGraph,
    mode: Mode,
    pin: Option<(usize, usize)>,
) -> Result<Option<Isomorphism>> {
    check_size(g1)?;
    check_size(g2)?;
    if g1.n() != g2.n() || g1.edge_count() != g2.edge_count() || g1.digon_count() != g2.digon_count() {
        return Ok(None);
    }
    if mode == Mode::Plain && g1.negative_edge_count() != g2.negative_edge_count() {
        return Ok(None);
    }
    let colours = refine(&[g1, g2], mode);
    if histogram(&colours[0]) != histogram(&colours[1]) {
        return Ok(None);
    }
    let config = SearchConfig {
        budget: u64::MAX,
        allow_switching: mode == Mode::Switching,
        isomorphism: true,
        ..SearchConfig::default()
    };
    let allowed = |v: usize, w: usize| {
        colours[0][v] == colours[1][w] && pin.is_none_or(|(a, b)| a != v || b == w)
    };
    let out = search(g1, g2, &config, Some(&allowed))?;
    let Some(map) = out.solution else {
        return Ok(None);
    };
    let iso = Isomorphism {
        perm: map.images.iter().map(|&(w, _)| w).collect(),
        switching: Switching::new((0..g1.n()).filter(|&v| map.images[v].1)),
    };
    debug_assert!(iso.verify(g1, g2).unwrap_or(false));
    Ok(Some(iso))
}

/// An isomorphism after switching `g1`, or `None`.
pub fn switching_isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<Isomorphism>> {
    find(g1, g2, Mode::Switching, None)
}

/// A sign-preserving isomorphism (empty switching), or `None`.
pub fn isomorphic(g1: &SignedGraph, g2: &SignedGraph) -> Result<Option<Isomorphism>> {
    find(g1, g2, Mode::Plain, None)
}

/// Vertices reachable from `v` by automorphisms (switching automorphisms if
/// `switching` is set).
pub fn orbit(g: &SignedGraph, v: usize, switching: bool) -> Result<Vec<usize>> {
    if v >= g.n() {
        return Err(Error::InvalidVertex { vertex: v, n: g.n() });
    }
    let mode = if switching { Mode::Switching } else { Mode::Plain };
    let mut out = Vec::new();
    for w in 0..g.n() {
        if find(g, g, mode, Some((v, w)))?.is_some() {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn is_vertex_transitive(g: &SignedGraph, switching: bool) -> Result<bool> {
    Ok(g.n() == 0 || orbit(g, 0, switching)?.len() == g.n())
}
