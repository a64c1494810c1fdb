//! Signed minor operations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Switching};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SignedMinorOp {
    /// Removes `v`; higher ids shift down by one.
    DeleteVertex(usize),
    DeleteEdge { u: usize, v: usize, sign: Sign },
    Switch(Switching),
    /// Merges `v` into `u` (the merged vertex keeps the smaller id, the
    /// larger id is removed and higher ids shift down).
    ContractPositiveEdge { u: usize, v: usize },
}

fn check_vertex(g: &SignedGraph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::InvalidVertex { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Index map that removes vertex `gone`.
fn removal_map(n: usize, gone: usize) -> impl Fn(usize) -> usize {
    debug_assert!(gone < n);
    move |x| if x > gone { x - 1 } else { x }
}

pub fn apply_minor_op(g: &SignedGraph, op: &SignedMinorOp) -> Result<SignedGraph> {
    match *op {
        SignedMinorOp::DeleteVertex(v) => {
            check_vertex(g, v)?;
            let f = removal_map(g.n(), v);
            SignedGraph::new(
                g.n() - 1,
                g.edges()
                    .iter()
                    .filter(|e| e.u != v && e.v != v)
                    .map(|e| (f(e.u), f(e.v), e.sign)),
            )
        }
        SignedMinorOp::DeleteEdge { u, v, sign } => {
            check_vertex(g, u)?;
            check_vertex(g, v)?;
            if !g.has_edge(u, v, sign) {
                return Err(Error::EdgeNotFound { u, v, sign });
            }
            let target = crate::graph::Edge::new(u, v, sign);
            SignedGraph::new(
                g.n(),
                g.edges()
                    .iter()
                    .filter(|&&e| e != target)
                    .map(|e| (e.u, e.v, e.sign)),
            )
        }
        SignedMinorOp::Switch(ref x) => g.switch(x),
        SignedMinorOp::ContractPositiveEdge { u, v } => {
            check_vertex(g, u)?;
            check_vertex(g, v)?;
            if u == v || !g.has_edge(u, v, Sign::Positive) {
                return Err(Error::IllegalContraction { u, v });
            }
            let (keep, gone) = (u.min(v), u.max(v));
            let shift = removal_map(g.n(), gone);
            let f = |x: usize| shift(if x == gone { keep } else { x });
            let mut edges = Vec::with_capacity(g.edge_count());
            for e in g.edges() {
                if e.u == keep && e.v == gone && e.sign == Sign::Positive {
                    continue;
                }
                let (a, b) = (f(e.u), f(e.v));
                if a == b && e.sign.is_negative() {
                    return Err(Error::NegativeLoopForbidden(a));
                }
                edges.push((a, b, e.sign));
            }
            SignedGraph::simplified(g.n() - 1, edges)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{negative_cycle, positive_cycle};
    use crate::girth::{girth_profile, Girth};
    use crate::testutil::arb_signed_graph;
    use proptest::prelude::*;

    #[test]
    fn contracting_positive_triangle_edge() {
        let t = positive_cycle(3).unwrap();
        let h = apply_minor_op(&t, &SignedMinorOp::ContractPositiveEdge { u: 0, v: 1 }).unwrap();
        assert_eq!(h, SignedGraph::unsigned(2, [(0, 1)]).unwrap());
    }

    #[test]
    fn contracting_negative_four_cycle_gives_triangle() {
        let c = negative_cycle(4).unwrap();
        let e = c.edges().iter().find(|e| e.sign == Sign::Positive).unwrap();
        let h = apply_minor_op(&c, &SignedMinorOp::ContractPositiveEdge { u: e.u, v: e.v }).unwrap();
        assert_eq!(h.n(), 3);
        assert_eq!(h.negative_edge_count(), 1);
        let (before, after) = (girth_profile(&c), girth_profile(&h));
        assert_eq!(before.g10, Girth::Finite(4));
        assert_eq!(after.g11, Girth::Finite(3));
        assert_eq!(after.g10, Girth::Infinite);
    }

    #[test]
    fn contracting_digon_creates_negative_loop() {
        let d = negative_cycle(2).unwrap();
        assert_eq!(
            apply_minor_op(&d, &SignedMinorOp::ContractPositiveEdge { u: 0, v: 1 }),
            Err(Error::NegativeLoopForbidden(0))
        );
    }

    #[test]
    fn contracting_negative_edge_is_illegal() {
        let g = SignedGraph::new(2, [(0, 1, Sign::Negative)]).unwrap();
        assert_eq!(
            apply_minor_op(&g, &SignedMinorOp::ContractPositiveEdge { u: 1, v: 0 }),
            Err(Error::IllegalContraction { u: 1, v: 0 })
        );
    }

    #[test]
    fn deletions_relabel_and_check() {
        let c = negative_cycle(5).unwrap();
        let h = apply_minor_op(&c, &SignedMinorOp::DeleteVertex(2)).unwrap();
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 3);
        assert!(matches!(
            apply_minor_op(&c, &SignedMinorOp::DeleteEdge { u: 0, v: 2, sign: Sign::Positive }),
            Err(Error::EdgeNotFound { .. })
        ));
        let e = c.edges()[0];
        let h = apply_minor_op(&c, &SignedMinorOp::DeleteEdge { u: e.v, v: e.u, sign: e.sign }).unwrap();
        assert_eq!(h.edge_count(), 4);
    }

    proptest! {
        /// Every surviving edge keeps its sign and every image edge has a
        /// preimage of the same sign, so no cycle changes sign.
        #[test]
        fn contraction_preserves_edge_signs(g in arb_signed_graph(7), pick in any::<prop::sample::Index>()) {
            let positive: Vec<_> = g.edges().iter().filter(|e| !e.is_loop() && e.sign == Sign::Positive).copied().collect();
            prop_assume!(!positive.is_empty());
            let c = *pick.get(&positive);
            let (keep, gone) = (c.u, c.v);
            let f = |x: usize| { let x = if x == gone { keep } else { x }; if x > gone { x - 1 } else { x } };
            match apply_minor_op(&g, &SignedMinorOp::ContractPositiveEdge { u: c.u, v: c.v }) {
                Ok(h) => {
                    for e in g.edges().iter().filter(|&&e| e != c) {
                        prop_assert!(h.has_edge(f(e.u), f(e.v), e.sign));
                    }
                    for e in h.edges() {
                        let pre = g.edges().iter().filter(|&&d| d != c).any(|d| {
                            d.sign == e.sign && crate::graph::Edge::new(f(d.u), f(d.v), d.sign) == *e
                        });
                        prop_assert!(pre, "{} has no preimage", e);
                    }
                    prop_assert!(girth_profile(&h).negative_girth() <= girth_profile(&g).negative_girth());
                }
                Err(Error::NegativeLoopForbidden(_)) => prop_assert!(g.has_edge(c.u, c.v, Sign::Negative)),
                Err(e) => prop_assert!(false, "unexpected {e}"),
            }
        }
    }
}
