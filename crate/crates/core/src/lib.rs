//! Exact algorithms for signed graphs built around the signed projective
//! cubes `SPC(k)`.
//!
//! The crate covers the data model and switching algebra ([`graph`],
//! [`equiv`], [`girth`], [`minor`], [`classify`]), generators ([`construct`]),
//! a homomorphism/isomorphism solver on signed double covers ([`search`],
//! [`iso`], [`hom`]), circular colouring ([`circ`]), signature packing
//! ([`pack`]), the extended-double-cover lift ([`lift`]), small-graph
//! enumeration ([`enumerate`]) and a text format ([`sgraph`]).

pub mod circ;
pub mod classify;
pub mod construct;
pub mod enumerate;
pub mod equiv;
pub mod error;
pub mod girth;
pub mod graph;
pub mod hom;
pub mod iso;
pub mod lift;
pub mod minor;
pub mod pack;
pub mod search;
pub mod sgraph;

#[cfg(test)]
mod testutil;

pub use circ::{
    circular_chromatic_number, circular_chromatic_number_with, circular_clique, descend_coloring,
    has_circular_coloring, has_circular_coloring_with, verify_circular_coloring, CircularColoring, Descent, Rational,
};
pub use classify::{classify, in_sp_k, is_planar, Classification};
pub use construct::{
    common_product, contract_label, cycle_star_product, edc, gallery, negative_cycle,
    pc_distance, positive_cycle, signed_cayley, spc, spc_loops, CayleySpec, Gallery,
    PcDistance, PosetVertex, SpcMethod,
};
pub use equiv::{find_switching, is_switching_equivalent};
pub use error::{Error, Result};
pub use girth::{girth_profile, girth_profile_at, negative_girth, Girth, GirthProfile};
pub use graph::{Edge, Sign, SignedGraph, Signature, Switching};
pub use hom::{
    find_homomorphism, find_homomorphism_with, find_induced_spc, no_hom_certificate,
    spc_projection_hom, verify_homomorphism, Homomorphism, InducedEmbedding, NoHomCertificate,
};
pub use iso::{is_vertex_transitive, isomorphic, orbit, switching_isomorphic, Isomorphism};
pub use lift::{
    contract_packing_class, glued_quadrangulations, lift_suite, lift_to_edc, separating_cut,
    Contraction, LiftInstance,
};
pub use minor::{apply_minor_op, SignedMinorOp};
pub use pack::{
    hom_to_signatures, packing_number, packing_number_oracle, packing_number_with, packs, signatures_to_hom,
    Packing, SignaturePacking,
};
pub use search::SearchConfig;
