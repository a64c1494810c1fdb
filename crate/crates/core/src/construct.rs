//! Generators: signed binary Cayley graphs, every construction of `SPC(k)`,
//! the extended double cover, the common product and a gallery of classical
//! graphs.
//!
//! Vectors of `Z_2^k` are `u64` bit masks with `e_i = 1 << (i - 1)` and
//! `J = 2^k - 1`. Every `SPC(k)` generator emits vertex `x` for vector `x`,
//! so different constructions can be compared with `==`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, Switching};

pub const MAX_CAYLEY_DIM: usize = 20;
pub const MAX_SPC_DIM: usize = 16;

pub fn unit(i: usize) -> u64 {
    1 << (i - 1)
}

pub fn all_ones(k: usize) -> u64 {
    (1u64 << k) - 1
}

/// `(Z_2^dim, S+, S-)`. `0` in `S+` puts a positive loop on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CayleySpec {
    dim: usize,
    splus: Vec<u64>,
    sminus: Vec<u64>,
}

impl CayleySpec {
    pub fn new<P, M>(dim: usize, splus: P, sminus: M) -> Result<CayleySpec>
    where
        P: IntoIterator<Item = u64>,
        M: IntoIterator<Item = u64>,
    {
        if dim > MAX_CAYLEY_DIM {
            return Err(Error::SizeLimitExceeded {
                what: "Cayley dimension",
                size: dim,
                limit: MAX_CAYLEY_DIM,
            });
        }
        let check = |v: Vec<u64>| -> Result<Vec<u64>> {
            let mut v = v;
            if let Some(&bad) = v.iter().find(|&&s| s >> dim != 0) {
                return Err(Error::InvalidGenerator(format!("{bad:#b} does not lie in Z_2^{dim}")));
            }
            v.sort_unstable();
            v.dedup();
            Ok(v)
        };
        let splus = check(splus.into_iter().collect())?;
        let sminus = check(sminus.into_iter().collect())?;
        if sminus.first() == Some(&0) {
            return Err(Error::InvalidGenerator("0 in S- would put a negative loop on every vertex".into()));
        }
        Ok(CayleySpec { dim, splus, sminus })
    }

    /// `(Z_2^k, {e_1..e_k}, {J})`.
    pub fn spc(k: usize) -> Result<CayleySpec> {
        CayleySpec::new(k, (1..=k).map(unit), [all_ones(k)])
    }

    /// `SPC°(k)`: as [`CayleySpec::spc`] with `0` added to `S+`.
    pub fn spc_loops(k: usize) -> Result<CayleySpec> {
        CayleySpec::new(k, std::iter::once(0).chain((1..=k).map(unit)), [all_ones(k)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn splus(&self) -> &[u64] {
        &self.splus
    }

    pub fn sminus(&self) -> &[u64] {
        &self.sminus
    }

    pub fn order(&self) -> usize {
        1 << self.dim
    }

    /// Sign of the edge `x (x+d)`, `None` if absent. Prefers `+` on a digon.
    pub fn sign_of(&self, d: u64) -> Option<Sign> {
        if self.splus.binary_search(&d).is_ok() {
            Some(Sign::Positive)
        } else if self.sminus.binary_search(&d).is_ok() {
            Some(Sign::Negative)
        } else {
            None
        }
    }
}

pub fn signed_cayley(spec: &CayleySpec) -> SignedGraph {
    let n = spec.order();
    let mut edges = Vec::with_capacity(n * (spec.splus.len() + spec.sminus.len()) / 2);
    for x in 0..n as u64 {
        for (set, sign) in [(&spec.splus, Sign::Positive), (&spec.sminus, Sign::Negative)] {
            for &s in set {
                let y = x ^ s;
                if x <= y {
                    edges.push((x as usize, y as usize, sign));
                }
            }
        }
    }
    SignedGraph::new(n, edges).expect("Cayley edges are distinct and in range")
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpcMethod {
    /// Antipodal quotient of `H(k+1)`.
    Projection,
    /// `H(k)` plus negative antipodal edges.
    Augmented,
    Cayley,
    /// Even component of the power graph of `C_{-(k+1)}`.
    Power,
    /// Complementary pairs of subsets of a `(k+1)`-set.
    Poset,
    /// Iterated extended double cover of the digon.
    Edc,
    /// `SPC(a) ∘ SPC(b)` with `a + b = k`.
    Product(usize, usize),
}

impl SpcMethod {
    pub const SIMPLE: [SpcMethod; 6] = [
        SpcMethod::Projection,
        SpcMethod::Augmented,
        SpcMethod::Cayley,
        SpcMethod::Power,
        SpcMethod::Poset,
        SpcMethod::Edc,
    ];

    /// Every method applicable to dimension `k`, including all product splits.
    pub fn all_for(k: usize) -> Vec<SpcMethod> {
        let mut v: Vec<SpcMethod> = SpcMethod::SIMPLE
            .iter()
            .copied()
            .filter(|m| *m != SpcMethod::Edc || k >= 2)
            .collect();
        v.extend((1..k).map(|a| SpcMethod::Product(a, k - a)));
        v
    }
}

impl fmt::Display for SpcMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpcMethod::Projection => f.write_str("projection"),
            SpcMethod::Augmented => f.write_str("augmented"),
            SpcMethod::Cayley => f.write_str("cayley"),
            SpcMethod::Power => f.write_str("power"),
            SpcMethod::Poset => f.write_str("poset"),
            SpcMethod::Edc => f.write_str("edc"),
            SpcMethod::Product(a, b) => write!(f, "product:{a}+{b}"),
        }
    }
}

impl FromStr for SpcMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<SpcMethod> {
        Ok(match s {
            "projection" => SpcMethod::Projection,
            "augmented" => SpcMethod::Augmented,
            "cayley" => SpcMethod::Cayley,
            "power" => SpcMethod::Power,
            "poset" => SpcMethod::Poset,
            "edc" => SpcMethod::Edc,
            _ => {
                let split = s
                    .strip_prefix("product:")
                    .and_then(|r| r.split_once('+'))
                    .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)));
                match split {
                    Some((a, b)) => SpcMethod::Product(a, b),
                    None => return Err(Error::MethodNotApplicable(format!("unknown method {s:?}"))),
                }
            }
        })
    }
}

fn check_spc_dim(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::MethodNotApplicable("SPC(k) needs k >= 1".into()));
    }
    if k > MAX_SPC_DIM {
        return Err(Error::SizeLimitExceeded {
            what: "SPC dimension",
            size: k,
            limit: MAX_SPC_DIM,
        });
    }
    Ok(())
}

pub fn spc(k: usize, method: SpcMethod) -> Result<SignedGraph> {
    check_spc_dim(k)?;
    match method {
        SpcMethod::Cayley => Ok(signed_cayley(&CayleySpec::spc(k)?)),
        SpcMethod::Projection => Ok(spc_projection(k)),
        SpcMethod::Augmented => Ok(spc_augmented(k)),
        SpcMethod::Power => spc_power(k),
        SpcMethod::Poset => Ok(spc_poset(k)),
        SpcMethod::Edc => {
            if k < 2 {
                return Err(Error::MethodNotApplicable("the EDC construction starts at k = 2".into()));
            }
            spc_edc(k)
        }
        SpcMethod::Product(a, b) => {
            if a == 0 || b == 0 || a + b != k {
                return Err(Error::MethodNotApplicable(format!(
                    "product split {a}+{b} is not a split of {k} into positive parts"
                )));
            }
            // (g, h) -> g + 2^a h = g | h << a
            Ok(common_product(&spc(a, SpcMethod::Cayley)?, &spc(b, SpcMethod::Cayley)?))
        }
    }
}

/// `SPC°(k)`: `SPC(k)` with a positive loop at every vertex.
pub fn spc_loops(k: usize) -> Result<SignedGraph> {
    check_spc_dim(k)?;
    Ok(signed_cayley(&CayleySpec::spc_loops(k)?))
}

fn spc_projection(k: usize) -> SignedGraph {
    let full = all_ones(k + 1);
    let top = unit(k + 1);
    let rep = |y: u64| if y & top != 0 { y ^ full } else { y };
    let mut edges = Vec::new();
    for y in 0..1u64 << (k + 1) {
        for i in 1..=k + 1 {
            let z = y ^ unit(i);
            if y < z {
                edges.push((rep(y) as usize, rep(z) as usize, Sign::from_negative(i == k + 1)));
            }
        }
    }
    SignedGraph::simplified(1 << k, edges).expect("projection edges are valid")
}

fn spc_augmented(k: usize) -> SignedGraph {
    let j = all_ones(k);
    let mut edges = Vec::new();
    for x in 0..1u64 << k {
        for i in 1..=k {
            let y = x ^ unit(i);
            if x < y {
                edges.push((x as usize, y as usize, Sign::Positive));
            }
        }
        if x < x ^ j {
            edges.push((x as usize, (x ^ j) as usize, Sign::Negative));
        }
    }
    SignedGraph::new(1 << k, edges).expect("augmented cube edges are distinct")
}

/// `pow(G)`: the signed Cayley graph on subsets of `V(G)` whose difference
/// sets are the positive and negative edges (as 2-subsets).
pub fn power_graph(g: &SignedGraph) -> Result<SignedGraph> {
    let pair = |u: usize, v: usize| if u == v { 0 } else { (1u64 << u) | (1u64 << v) };
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for e in g.edges() {
        match e.sign {
            Sign::Positive => plus.push(pair(e.u, e.v)),
            Sign::Negative => minus.push(pair(e.u, e.v)),
        }
    }
    Ok(signed_cayley(&CayleySpec::new(g.n(), plus, minus)?))
}

/// Label of an even subset `T` of `V(C_{-(k+1)})` in `SPC(k)`:
/// `x_j = |T ∩ {1..j}| mod 2`.
pub fn power_encoding(k: usize, t: u64) -> u64 {
    let mut x = 0;
    let mut parity = 0;
    for j in 0..k {
        parity ^= (t >> j) & 1;
        x |= parity << j;
    }
    x
}

fn spc_power(k: usize) -> Result<SignedGraph> {
    // C_{-(k+1)} on 0..=k: path edges positive, closing edge {0, k} negative
    let cycle = negative_cycle(k + 1)?;
    let pow = power_graph(&cycle)?;
    let edges = pow.edges().iter().filter(|e| (e.u as u64).count_ones().is_multiple_of(2)).map(|e| {
        (
            power_encoding(k, e.u as u64) as usize,
            power_encoding(k, e.v as u64) as usize,
            e.sign,
        )
    });
    SignedGraph::new(1 << k, edges)
}

/// A vertex `{A, Ā}` of the poset presentation over the ground set
/// `{1, .., k+1}`, where `k + 1` is the negative element. Stored as the member
/// with the smaller characteristic vector (element `i` is bit `i - 1`), i.e.
/// the member avoiding `k + 1`; that vector is also the Cayley label.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PosetVertex {
    k: usize,
    set: u64,
}

impl PosetVertex {
    pub fn from_mask(k: usize, mask: u64) -> Result<PosetVertex> {
        if mask >> (k + 1) != 0 {
            return Err(Error::InvalidSubset(format!(
                "{mask:#b} is not a subset of a {}-element ground set",
                k + 1
            )));
        }
        Ok(PosetVertex {
            k,
            set: mask.min(mask ^ all_ones(k + 1)),
        })
    }

    pub fn from_elements(k: usize, elements: &[usize]) -> Result<PosetVertex> {
        PosetVertex::from_mask(k, subset_mask(k, elements)?)
    }

    pub fn label(&self) -> u64 {
        self.set
    }

    pub fn elements(&self) -> Vec<usize> {
        (1..=self.k + 1).filter(|&i| self.set & unit(i) != 0).collect()
    }

    /// `min(|A|, |Ā|)`, the distance from `{∅, S}`.
    pub fn order(&self) -> usize {
        let a = self.set.count_ones() as usize;
        a.min(self.k + 1 - a)
    }

    /// Neighbour obtained by toggling `element`, with the edge sign.
    pub fn toggle(&self, element: usize) -> (PosetVertex, Sign) {
        let v = PosetVertex::from_mask(self.k, self.set ^ unit(element)).expect("element in range");
        (v, Sign::from_negative(element == self.k + 1))
    }
}

fn subset_mask(k: usize, elements: &[usize]) -> Result<u64> {
    let mut mask = 0;
    for &e in elements {
        if e == 0 || e > k + 1 {
            return Err(Error::InvalidSubset(format!("element {e} is outside 1..={}", k + 1)));
        }
        if mask & unit(e) != 0 {
            return Err(Error::InvalidSubset(format!("element {e} repeated")));
        }
        mask |= unit(e);
    }
    Ok(mask)
}

fn spc_poset(k: usize) -> SignedGraph {
    let mut edges = Vec::new();
    for a in 0..1u64 << k {
        let v = PosetVertex { k, set: a };
        for s in 1..=k + 1 {
            let (w, sign) = v.toggle(s);
            edges.push((v.label() as usize, w.label() as usize, sign));
        }
    }
    SignedGraph::simplified(1 << k, edges).expect("poset edges are valid")
}

fn spc_edc(k: usize) -> Result<SignedGraph> {
    let mut g = signed_cayley(&CayleySpec::spc(1)?);
    for j in 2..=k {
        // edc(SPC(j-1)) = (Z_2^j, {e_1..e_{j-1}, J}, {e_j}); switching at the
        // top half exchanges the signs of the e_j and J classes
        g = edc(&g)?;
        let top = unit(j) as usize;
        g = g.switch(&Switching::new((0..g.n()).filter(|&x| x & top != 0)))?;
    }
    Ok(g)
}

/// Extended double cover; vertex `(x, b)` becomes `x + b·n`.
pub fn edc(g: &SignedGraph) -> Result<SignedGraph> {
    if let Some(v) = (0..g.n()).find(|&v| g.has_loop(v)) {
        return Err(Error::UnsupportedInput(format!(
            "EDC is undefined on graphs with loops (positive loop at {v})"
        )));
    }
    let n = g.n();
    let mut edges: Vec<(usize, usize, Sign)> = (0..n).map(|x| (x, x + n, Sign::Negative)).collect();
    for e in g.edges() {
        match e.sign {
            Sign::Positive => {
                edges.push((e.u, e.v, Sign::Positive));
                edges.push((e.u + n, e.v + n, Sign::Positive));
            }
            Sign::Negative => {
                edges.push((e.u, e.v + n, Sign::Positive));
                edges.push((e.u + n, e.v, Sign::Positive));
            }
        }
    }
    SignedGraph::new(2 * n, edges)
}

/// Common product; vertex `(x, u)` becomes `x + n_G·u`. Positive part is the
/// Cartesian product of the positive parts, negative part the categorical
/// product of the negative parts.
pub fn common_product(g: &SignedGraph, h: &SignedGraph) -> SignedGraph {
    let ng = g.n();
    let id = |x: usize, u: usize| x + ng * u;
    let mut edges = Vec::new();
    for e in g.edges().iter().filter(|e| e.sign == Sign::Positive) {
        for u in 0..h.n() {
            edges.push((id(e.u, u), id(e.v, u), Sign::Positive));
        }
    }
    for f in h.edges().iter().filter(|e| e.sign == Sign::Positive) {
        for x in 0..ng {
            edges.push((id(x, f.u), id(x, f.v), Sign::Positive));
        }
    }
    for e in g.edges().iter().filter(|e| e.sign.is_negative()) {
        for f in h.edges().iter().filter(|e| e.sign.is_negative()) {
            edges.push((id(e.u, f.u), id(e.v, f.v), Sign::Negative));
            edges.push((id(e.u, f.v), id(e.v, f.u), Sign::Negative));
        }
    }
    SignedGraph::new(ng * h.n(), edges).expect("common product edges are distinct")
}

/// Image of `x` in the quotient by `x ~ x + s` (see [`quotient_spec`]).
pub fn quotient_vertex(s: u64, x: u64) -> u64 {
    debug_assert!(s != 0);
    let pivot = 63 - s.leading_zeros() as usize;
    let x = if x >> pivot & 1 == 1 { x ^ s } else { x };
    (x & ((1 << pivot) - 1)) | ((x >> (pivot + 1)) << pivot)
}

/// Quotient of `spec` by `x ~ x + s`, presented on `Z_2^{dim-1}` by deleting
/// the highest set bit of `s`. Every generator maps to its coset; `s` itself
/// becomes `0`, a positive loop.
pub fn quotient_spec(spec: &CayleySpec, s: u64) -> Result<CayleySpec> {
    if s == 0 || spec.splus.binary_search(&s).is_err() {
        return Err(Error::InvalidGenerator(format!("{s:#b} is not a nonzero element of S+")));
    }
    let project = |x: u64| quotient_vertex(s, x);
    let plus: Vec<u64> = spec.splus.iter().map(|&g| project(g)).collect();
    let minus: Vec<u64> = spec.sminus.iter().map(|&g| project(g)).collect();
    if minus.contains(&0) {
        return Err(Error::NegativeLoopForbidden(0));
    }
    CayleySpec::new(spec.dim - 1, plus, minus)
}

/// Identifies the endpoints of every `s`-edge and merges parallel edges of the
/// same sign.
pub fn contract_label(spec: &CayleySpec, s: u64) -> Result<SignedGraph> {
    Ok(signed_cayley(&quotient_spec(spec, s)?))
}

/// `C * G`: a 4-cycle `(u,1)..(u,4)` per vertex and, per edge `uv`, the edges
/// `(u,1)(v,3), (u,2)(v,4), (u,3)(v,1), (u,4)(v,2)`. Vertex `(u, i)` becomes
/// `4u + i - 1`. Signs of the input are ignored; the output is all positive.
pub fn cycle_star_product(g: &SignedGraph) -> Result<SignedGraph> {
    if g.has_loops() {
        return Err(Error::UnsupportedInput("C * G needs a loopless graph".into()));
    }
    let id = |u: usize, i: usize| 4 * u + i - 1;
    let mut edges = Vec::new();
    for u in 0..g.n() {
        for i in 1..=4 {
            edges.push((id(u, i), id(u, i % 4 + 1)));
        }
    }
    for (u, v) in g.underlying_pairs() {
        for (i, j) in [(1, 3), (2, 4), (3, 1), (4, 2)] {
            edges.push((id(u, i), id(v, j)));
        }
    }
    SignedGraph::unsigned(4 * g.n(), edges)
}

/// Shortest positive and negative path lengths between two vertices of
/// `SPC(k)` in the poset presentation.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcDistance {
    pub distance: usize,
    pub positive: usize,
    pub negative: usize,
}

/// Distance between `{A, Ā}` and `{B, B̄}` in `PC(k)`; subsets are given as
/// elements of `{1, .., k+1}` with `k + 1` the negative element.
pub fn pc_distance(a: &[usize], b: &[usize], k: usize) -> Result<PcDistance> {
    let d = subset_mask(k, a)? ^ subset_mask(k, b)?;
    let direct = d.count_ones() as usize;
    let around = k + 1 - direct;
    // toggling the elements of A ⊕ B walks a path whose sign is negative iff
    // it toggles k+1; the complementary toggles give the other path
    let (positive, negative) = if d & unit(k + 1) == 0 {
        (direct, around)
    } else {
        (around, direct)
    };
    Ok(PcDistance {
        distance: direct.min(around),
        positive,
        negative,
    })
}

/// `C_{-k}`: the cycle `0 1 .. k-1` whose closing edge `{0, k-1}` is
/// negative. `k = 2` is the digon.
pub fn negative_cycle(k: usize) -> Result<SignedGraph> {
    if k < 2 {
        return Err(Error::InvalidGalleryArgs(format!("negative cycle needs length >= 2, got {k}")));
    }
    SignedGraph::new(k, (0..k).map(|i| (i, (i + 1) % k, Sign::from_negative(i == k - 1))))
}

pub fn positive_cycle(k: usize) -> Result<SignedGraph> {
    if k < 3 {
        return Err(Error::InvalidGalleryArgs(format!("positive cycle needs length >= 3, got {k}")));
    }
    SignedGraph::unsigned(k, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn kneser(n: usize, k: usize) -> Result<SignedGraph> {
    if k == 0 || n < 2 * k || n > 20 {
        return Err(Error::InvalidGalleryArgs(format!("kneser({n},{k}) needs 1 <= k, 2k <= n <= 20")));
    }
    let verts: Vec<u32> = (0..1u32 << n).filter(|m| m.count_ones() as usize == k).collect();
    if verts.len() > 1 << 14 {
        return Err(Error::SizeLimitExceeded {
            what: "Kneser graph order",
            size: verts.len(),
            limit: 1 << 14,
        });
    }
    let mut edges = Vec::new();
    for (i, &a) in verts.iter().enumerate() {
        for (j, &b) in verts.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i, j));
            }
        }
    }
    SignedGraph::unsigned(verts.len(), edges)
}

/// Multiplication in `GF(16) = Z_2[x]/(x^4 + x + 1)`; bit `i` is the
/// coefficient of `x^i`.
pub fn gf16_mul(a: u8, b: u8) -> u8 {
    let mut acc: u8 = 0;
    let (mut a, mut b) = (a & 15, b & 15);
    while b != 0 {
        if b & 1 == 1 {
            acc ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & 16 != 0 {
            a ^= 0b10011;
        }
    }
    acc
}

/// The nonzero cubes of `GF(16)`, sorted.
pub fn gf16_cubic_residues() -> Vec<u8> {
    let mut r: Vec<u8> = (1..16u8).map(|y| gf16_mul(y, gf16_mul(y, y))).collect();
    r.sort_unstable();
    r.dedup();
    r
}

/// Colour class `c` of the 3-edge-colouring of `K16` by the cosets
/// `x^c · R` of the cubic residues `R`.
pub fn ramsey333_class(c: usize) -> Result<SignedGraph> {
    if c > 2 {
        return Err(Error::InvalidGalleryArgs(format!("colour class {c} is not in 0..3")));
    }
    let mut shift = 1u8;
    for _ in 0..c {
        shift = gf16_mul(shift, 0b10);
    }
    let coset: Vec<u8> = gf16_cubic_residues().into_iter().map(|r| gf16_mul(r, shift)).collect();
    let mut edges = Vec::new();
    for a in 0..16u8 {
        for b in a + 1..16 {
            if coset.contains(&(a ^ b)) {
                edges.push((a as usize, b as usize));
            }
        }
    }
    SignedGraph::unsigned(16, edges)
}

/// The 27-line intersection graph: `a_i = i-1`, `b_i = 5+i`, then
/// `c_ij` (`i < j`) in lexicographic order from 12.
pub fn schlafli27() -> SignedGraph {
    let mut pairs = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            pairs.push((i, j));
        }
    }
    let c = |p: usize| 12 + p;
    let mut edges = Vec::new();
    for i in 0..6 {
        for j in 0..6 {
            if i != j {
                edges.push((i, 6 + j));
            }
        }
        for (p, &(a, b)) in pairs.iter().enumerate() {
            if i == a || i == b {
                edges.push((i, c(p)));
                edges.push((6 + i, c(p)));
            }
        }
    }
    for (p, &(a, b)) in pairs.iter().enumerate() {
        for (q, &(x, y)) in pairs.iter().enumerate().skip(p + 1) {
            if a != x && a != y && b != x && b != y {
                edges.push((c(p), c(q)));
            }
        }
    }
    SignedGraph::unsigned(27, edges).expect("Schläfli edges are distinct")
}

/// `K_{3,3}` on `a_i = i-1`, `b_i = 2+i` with the matching `a_i b_i` negative.
pub fn k33_matching() -> SignedGraph {
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            edges.push((i, 3 + j, Sign::from_negative(i == j)));
        }
    }
    SignedGraph::new(6, edges).expect("K33 edges are distinct")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Gallery {
    Kneser(usize, usize),
    Petersen,
    Clebsch,
    Gg16,
    Ramsey333Class(usize),
    Schlafli27,
    K33Matching,
    NegativeCycle(usize),
    PositiveCycle(usize),
}

impl Gallery {
    pub const NAMES: &'static str =
        "kneser:N:K, petersen, clebsch, gg16, ramsey333[:C], schlafli27, k33_matching, negative_cycle:K, positive_cycle:K";
}

impl FromStr for Gallery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Gallery> {
        let mut parts = s.split(':');
        let name = parts.next().unwrap_or_default();
        let args: Vec<&str> = parts.collect();
        let num = |i: usize| -> Result<usize> {
            args.get(i)
                .and_then(|a| a.parse().ok())
                .ok_or_else(|| Error::InvalidGalleryArgs(format!("{s:?}: expected a number in position {}", i + 1)))
        };
        let arity = |n: usize| -> Result<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(Error::InvalidGalleryArgs(format!("{s:?}: expected {n} arguments")))
            }
        };
        let g = match name {
            "kneser" => {
                arity(2)?;
                Gallery::Kneser(num(0)?, num(1)?)
            }
            "petersen" => Gallery::Petersen,
            "clebsch" => Gallery::Clebsch,
            "gg16" => Gallery::Gg16,
            "ramsey333" | "ramsey333_coloring" => {
                if args.is_empty() {
                    Gallery::Ramsey333Class(0)
                } else {
                    arity(1)?;
                    Gallery::Ramsey333Class(num(0)?)
                }
            }
            "schlafli27" => Gallery::Schlafli27,
            "k33_matching" => Gallery::K33Matching,
            "negative_cycle" => {
                arity(1)?;
                Gallery::NegativeCycle(num(0)?)
            }
            "positive_cycle" => {
                arity(1)?;
                Gallery::PositiveCycle(num(0)?)
            }
            _ => {
                return Err(Error::InvalidGalleryArgs(format!(
                    "unknown gallery graph {name:?}; known: {}",
                    Gallery::NAMES
                )))
            }
        };
        if !matches!(g, Gallery::Kneser(..) | Gallery::Ramsey333Class(_) | Gallery::NegativeCycle(_) | Gallery::PositiveCycle(_))
            && !args.is_empty()
        {
            return Err(Error::InvalidGalleryArgs(format!("{name} takes no arguments")));
        }
        Ok(g)
    }
}

pub fn gallery(name: &Gallery) -> Result<SignedGraph> {
    match *name {
        Gallery::Kneser(n, k) => kneser(n, k),
        Gallery::Petersen => kneser(5, 2),
        Gallery::Clebsch => Ok(spc(4, SpcMethod::Cayley)?.underlying()),
        Gallery::Gg16 => ramsey333_class(0),
        Gallery::Ramsey333Class(c) => ramsey333_class(c),
        Gallery::Schlafli27 => Ok(schlafli27()),
        Gallery::K33Matching => Ok(k33_matching()),
        Gallery::NegativeCycle(k) => negative_cycle(k),
        Gallery::PositiveCycle(k) => positive_cycle(k),
    }
}
