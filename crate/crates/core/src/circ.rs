//! Circular colouring of signed graphs.
//!
//! A circular `r`-colouring places vertices on a circle of circumference `r`
//! so that negative edges join points at distance at least 1 and positive
//! edges join points at distance at most `r/2 - 1`. For `r = p/q` the circle
//! is discretised to `Z_{2p}` with unit `1/(2q)`: every threshold is then an
//! integer, so any colouring can be rounded onto the grid, and the antipodal
//! shift (which realises switching) stays on the grid.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::construct::{contract_label, quotient_vertex, signed_cayley, CayleySpec};
use crate::error::{Error, Result};
use crate::graph::{Edge, Sign, SignedGraph};
use crate::search::{search, SearchConfig};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A non-negative fraction in lowest terms.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    /// Panics if `den == 0`.
    pub fn new(num: u64, den: u64) -> Rational {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den);
        Rational { num: num / g, den: den / g }
    }

    pub fn integer(n: u64) -> Rational {
        Rational { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Rational> {
        let bad = || Error::PreconditionFailed(format!("not a fraction: {s:?}"));
        let (a, b) = s.split_once('/').unwrap_or((s, "1"));
        let num = a.trim().parse().map_err(|_| bad())?;
        let den: u64 = b.trim().parse().map_err(|_| bad())?;
        if den == 0 {
            return Err(bad());
        }
        Ok(Rational::new(num, den))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Points in `Z_p`; point `i` sits at position `i/q` on a circle of
/// circumference `p/q`. `p/q` need not be reduced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircularColoring {
    pub p: u64,
    pub q: u64,
    pub points: Vec<u64>,
}

impl CircularColoring {
    pub fn ratio(&self) -> Rational {
        Rational::new(self.p, self.q)
    }
}

/// Distance on `Z_p`.
pub fn circular_distance(a: u64, b: u64, p: u64) -> u64 {
    let d = (a + p - b) % p;
    d.min(p - d)
}

fn check_clique_args(p: u64, q: u64) -> Result<()> {
    if q == 0 || p < 2 * q {
        return Err(Error::InfeasibleClique { p, q });
    }
    Ok(())
}

/// The target of `(p, q)`-colourings: vertices `Z_p`, a negative edge at
/// distance at least `q`, a positive edge at distance `d` with
/// `0 < 2d <= p - 2q`, and a positive loop on every vertex.
pub fn circular_clique(p: u64, q: u64) -> Result<SignedGraph> {
    check_clique_args(p, q)?;
    let mut edges = Vec::new();
    for i in 0..p {
        edges.push((i as usize, i as usize, Sign::Positive));
        for j in i + 1..p {
            let d = circular_distance(i, j, p);
            if d >= q {
                edges.push((i as usize, j as usize, Sign::Negative));
            }
            if 2 * d + 2 * q <= p {
                edges.push((i as usize, j as usize, Sign::Positive));
            }
        }
    }
    SignedGraph::new(p as usize, edges)
}

/// The first edge whose constraint fails and the distance it has.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringViolation {
    pub edge: Edge,
    pub distance: u64,
}

fn edge_ok(sign: Sign, d: u64, p: u64, q: u64) -> bool {
    match sign {
        Sign::Negative => d >= q,
        Sign::Positive => 2 * d + 2 * q <= p,
    }
}

/// `Ok(None)` if `c` is a valid colouring of `g`. Malformed colourings
/// (wrong length, points outside `Z_p`, `q = 0`) are errors.
pub fn verify_circular_coloring(g: &SignedGraph, c: &CircularColoring) -> Result<Option<ColoringViolation>> {
    if c.q == 0 || c.p == 0 {
        return Err(Error::InvalidInputColoring(format!("degenerate circumference {}/{}", c.p, c.q)));
    }
    if c.points.len() != g.n() {
        return Err(Error::InvalidInputColoring(format!(
            "{} points for {} vertices",
            c.points.len(),
            g.n()
        )));
    }
    if let Some(v) = c.points.iter().position(|&x| x >= c.p) {
        return Err(Error::InvalidInputColoring(format!("point of vertex {v} is outside Z_{}", c.p)));
    }
    Ok(g.edges().iter().find_map(|e| {
        let d = circular_distance(c.points[e.u], c.points[e.v], c.p);
        (!edge_ok(e.sign, d, c.p, c.q)).then_some(ColoringViolation { edge: *e, distance: d })
    }))
}

pub fn has_circular_coloring(g: &SignedGraph, p: u64, q: u64) -> Result<Option<CircularColoring>> {
    has_circular_coloring_with(g, p, q, &SearchConfig::default())
}

/// Searches for a homomorphism into `circular_clique(2p, 2q)`. Switching is
/// not searched: on the even grid it is the antipodal shift, an automorphism
/// of the clique.
pub fn has_circular_coloring_with(
    g: &SignedGraph,
    p: u64,
    q: u64,
    config: &SearchConfig,
) -> Result<Option<CircularColoring>> {
    check_clique_args(p, q)?;
    let clique = circular_clique(2 * p, 2 * q)?;
    let config = SearchConfig { allow_switching: false, isomorphism: false, transitive_target: true, ..config.clone() };
    let out = search(g, &clique, &config, None)?;
    Ok(out.solution.map(|m| {
        let points: Vec<u64> = m.images.iter().map(|&(w, _)| w as u64).collect();
        if points.iter().all(|x| x % 2 == 0) {
            CircularColoring { p, q, points: points.into_iter().map(|x| x / 2).collect() }
        } else {
            CircularColoring { p: 2 * p, q: 2 * q, points }
        }
    }))
}

/// Reduced fractions `p/q` with `q <= max_q` and `2q <= p <= max_p`,
/// ascending.
pub fn candidate_grid(max_q: u64, max_p: u64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (1..=max_q)
        .flat_map(|q| (2 * q..=max_p).filter(move |&p| gcd(p, q) == 1).map(move |p| Rational::new(p, q)))
        .collect();
    out.sort_unstable();
    out
}

/// How many candidates above the optimum are re-checked for feasibility.
const MONOTONE_SAMPLES: usize = 3;

pub fn circular_chromatic_number(g: &SignedGraph) -> Result<(Rational, CircularColoring)> {
    circular_chromatic_number_with(g, &SearchConfig::default())
}

/// Smallest feasible `p/q` over the grid `q <= n`, `2q <= p <= 4n`.
pub fn circular_chromatic_number_with(g: &SignedGraph, config: &SearchConfig) -> Result<(Rational, CircularColoring)> {
    let n = g.n().max(1) as u64;
    let grid = candidate_grid(n, 4 * n);
    for (i, r) in grid.iter().enumerate() {
        let Some(c) = has_circular_coloring_with(g, r.numer(), r.denom(), config)? else {
            continue;
        };
        for s in grid.iter().skip(i + 1).take(MONOTONE_SAMPLES) {
            if has_circular_coloring_with(g, s.numer(), s.denom(), config)?.is_none() {
                return Err(Error::NonMonotone(format!("feasible at {r} but not at {s}")));
            }
        }
        return Ok((*r, c));
    }
    Err(Error::UnboundedCandidate)
}

/// Output of [`descend_coloring`]: a colouring of the contracted graph and
/// whether it is valid there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Descent {
    pub coloring: CircularColoring,
    pub valid: bool,
}

/// Pushes a colouring of a Cayley graph through the contraction of its
/// `s1`-edges. Each pair `{x, x + s1}` keeps the point of the end from which
/// the clockwise arc to the other end is the short side (the smaller point on
/// a tie). Always valid when `p/q < 4`.
pub fn descend_coloring(spec: &CayleySpec, s1: u64, c: &CircularColoring) -> Result<Descent> {
    if s1 == 0 || spec.splus().binary_search(&s1).is_err() {
        return Err(Error::InvalidGenerator(format!("{s1:#b} is not a nonzero element of S+")));
    }
    let g = signed_cayley(spec);
    match verify_circular_coloring(&g, c)? {
        None => {}
        Some(v) => {
            return Err(Error::InvalidInputColoring(format!(
                "edge {} is at distance {}",
                v.edge, v.distance
            )))
        }
    }
    let contracted = contract_label(spec, s1)?;
    let mut points = vec![0u64; contracted.n()];
    for x in 0..g.n() as u64 {
        let y = x ^ s1;
        if y < x {
            continue;
        }
        let (a, b) = (c.points[x as usize], c.points[y as usize]);
        let clockwise = |from: u64, to: u64| (to + c.p - from) % c.p;
        let a_short = 2 * clockwise(a, b) <= c.p;
        let b_short = 2 * clockwise(b, a) <= c.p;
        let point = match (a_short, b_short) {
            (true, true) => a.min(b),
            (true, false) => a,
            _ => b,
        };
        points[quotient_vertex(s1, x) as usize] = point;
    }
    let coloring = CircularColoring { p: c.p, q: c.q, points };
    let valid = verify_circular_coloring(&contracted, &coloring)?.is_none();
    Ok(Descent { coloring, valid })
}
