//! Switching classes read off the girth profile, planarity and the
//! `SP_k` classes.

use rustworkx_core::petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::construct::negative_cycle;
use crate::error::{Error, Result};
use crate::girth::{girth_profile, Girth, GirthProfile};
use crate::graph::SignedGraph;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    /// Switching equivalent to all positive.
    pub balanced: bool,
    /// Switching equivalent to all negative.
    pub antibalanced: bool,
    /// Underlying graph bipartite (no odd closed walk, loops included).
    pub signed_bipartite: bool,
    pub planar: bool,
}

impl Classification {
    pub fn from_profile(p: &GirthProfile, planar: bool) -> Classification {
        let inf = |g: Girth| !g.is_finite();
        Classification {
            balanced: inf(p.g10) && inf(p.g11),
            // negating the signature swaps g01 and g11 and keeps g10
            antibalanced: inf(p.g01) && inf(p.g10),
            signed_bipartite: inf(p.g01) && inf(p.g11),
            planar,
        }
    }
}

pub fn classify(g: &SignedGraph) -> Classification {
    Classification::from_profile(&girth_profile(g), is_planar(g))
}

/// Planarity of the underlying simple graph (digons merged, loops ignored).
pub fn is_planar(g: &SignedGraph) -> bool {
    let pairs = g.underlying_pairs();
    // Euler bound short-circuits dense inputs before building anything.
    if g.n() >= 3 && pairs.len() > 3 * g.n() - 6 {
        return false;
    }
    let ug = UnGraph::<(), ()>::from_edges(pairs.iter().map(|&(u, v)| (u as u32, v as u32)));
    rustworkx_core::planar::is_planar(&ug)
}

/// Membership in `SP_k`: planar with `g_ij >= g_ij(C_{-k})` for all `ij`.
pub fn in_sp_k(g: &SignedGraph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::PreconditionFailed(format!("SP_k needs k >= 2, got {k}")));
    }
    let bound = girth_profile(&negative_cycle(k)?);
    Ok(girth_profile(g).dominates(&bound) && is_planar(g))
}
