//! Built-in identity batteries for `spc verify`.

use std::time::Instant;

use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use spc_core::construct::{cycle_star_product, positive_cycle, ramsey333_class, schlafli27};
use spc_core::enumerate::signed_graphs;
use spc_core::{
    circular_chromatic_number, contract_label, descend_coloring, edc, find_homomorphism, gallery, girth_profile,
    has_circular_coloring, hom_to_signatures, is_vertex_transitive, isomorphic, lift_suite, lift_to_edc,
    negative_girth, packing_number, packing_number_oracle, sgraph, signed_cayley, spc, verify_circular_coloring,
    verify_homomorphism, CayleySpec, Gallery, LiftInstance, Packing, PosetVertex, Rational, SearchConfig, Sign,
    SignedGraph, SpcMethod,
};

use crate::report::Report;

#[derive(Copy, Clone, Debug, ValueEnum)]
pub enum Suite {
    /// Every construction method yields the same SPC(k), k = 1..6.
    SpcEquivalence,
    /// Schlafli graph minus a closed neighbourhood down to C6.
    ClebschChain,
    /// Greenwood-Gleason graph, K4*C4 and the middle poset layer.
    Gg16,
    /// The three colour classes of the K16 Ramsey colouring.
    Ramsey333,
    /// Girth identities of the extended double cover.
    EdcGirth,
    /// Packing oracle against homomorphism search.
    PackingConsistency,
    /// Properties of K3*C4.
    K3c4,
    /// Homomorphism, contraction and lift on planar quadrangulations.
    LiftPipeline,
    /// Circular colourings descend to label contractions.
    CircDescent,
}

#[derive(Serialize)]
struct Check {
    name: String,
    pass: bool,
    detail: String,
}

#[derive(Default)]
struct Log(Vec<Check>);

impl Log {
    fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.0.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<String, String>) {
        match f() {
            Ok(d) => self.check(name, true, d),
            Err(d) => self.check(name, false, d),
        }
    }
}

fn cayley(k: usize) -> SignedGraph {
    spc(k, SpcMethod::Cayley).expect("SPC(k) for small k")
}

fn iso(a: &SignedGraph, b: &SignedGraph) -> bool {
    isomorphic(a, b).map(|r| r.is_some()).unwrap_or(false)
}

fn minus_closed_neighbourhood(g: &SignedGraph, v: usize) -> SignedGraph {
    let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v && !g.adjacent(v, w)).collect();
    g.induced_subgraph(&keep).expect("vertices in range")
}

fn triangle_free(g: &SignedGraph) -> bool {
    g.edges().iter().all(|e| e.is_loop() || (0..g.n()).all(|w| !(g.adjacent(e.u, w) && g.adjacent(e.v, w))))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
    let p = rng.gen_range(0.2..0.8);
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                if rng.gen_bool(0.1) {
                    edges.push((a, b, Sign::Positive));
                    edges.push((a, b, Sign::Negative));
                } else {
                    edges.push((a, b, Sign::from_negative(rng.gen_bool(0.5))));
                }
            }
        }
    }
    SignedGraph::new(n, edges).expect("valid random graph")
}

fn spc_equivalence(log: &mut Log) {
    for k in 1..=6 {
        let reference = sgraph::write(&cayley(k));
        for m in SpcMethod::all_for(k) {
            let got = spc(k, m).map(|g| sgraph::write(&g));
            let pass = got.as_ref().is_ok_and(|t| *t == reference);
            let detail = match got {
                Ok(_) if pass => "identical to cayley".to_string(),
                Ok(_) => "differs from cayley".to_string(),
                Err(e) => e.to_string(),
            };
            log.check(format!("k={k} {m}"), pass, detail);
        }
    }
}

fn clebsch_chain(log: &mut Log) {
    let pc4 = cayley(4).underlying();
    let petersen = gallery(&Gallery::Petersen).expect("petersen");
    let c6 = positive_cycle(6).expect("C6");
    let s27 = schlafli27();
    log.check("schlafli 10-regular", (0..27).all(|v| s27.degree(v) == 10), "27 vertices");
    let bad = (0..27).filter(|&v| !iso(&minus_closed_neighbourhood(&s27, v), &pc4)).count();
    log.check("27 -> 16", bad == 0, format!("{bad} of 27 vertices fail"));
    let h16 = minus_closed_neighbourhood(&s27, 0);
    let bad = (0..16).filter(|&v| !iso(&minus_closed_neighbourhood(&h16, v), &petersen)).count();
    log.check("16 -> 10", bad == 0, format!("{bad} of 16 vertices fail"));
    let h10 = minus_closed_neighbourhood(&h16, 0);
    let bad = (0..10).filter(|&v| !iso(&minus_closed_neighbourhood(&h10, v), &c6)).count();
    log.check("10 -> 6", bad == 0, format!("{bad} of 10 vertices fail"));
}

fn gg16(log: &mut Log) {
    let pc4 = cayley(4).underlying();
    let g = gallery(&Gallery::Gg16).expect("gg16");
    log.check("order and size", g.n() == 16 && g.edge_count() == 40, format!("{} vertices, {} edges", g.n(), g.edge_count()));
    log.check("gg16 = PC(4)", iso(&g, &pc4), "underlying isomorphism");
    let k4 = SignedGraph::unsigned(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).expect("K4");
    log.check("K4*C4 = PC(4)", iso(&cycle_star_product(&k4).expect("K4*C4"), &pc4), "underlying isomorphism");
    let poset = spc(4, SpcMethod::Poset).expect("poset").underlying();
    let layer: Vec<usize> =
        (0..16u64).filter(|&a| PosetVertex::from_mask(4, a).map(|p| p.order() == 2).unwrap_or(false)).map(|a| a as usize).collect();
    let middle = poset.induced_subgraph(&layer).expect("layer");
    let petersen = gallery(&Gallery::Petersen).expect("petersen");
    log.check("middle layer = Petersen", iso(&middle, &petersen), format!("{} vertices", layer.len()));
}

fn ramsey(log: &mut Log) {
    let g16 = gallery(&Gallery::Gg16).expect("gg16");
    let mut total = 0;
    for c in 0..3 {
        let class = ramsey333_class(c).expect("class");
        total += class.edge_count();
        log.check(format!("class {c} triangle-free"), triangle_free(&class), format!("{} edges", class.edge_count()));
        log.check(format!("class {c} = gg16"), iso(&class, &g16), "underlying isomorphism");
    }
    log.check("classes partition K16", total == 120, format!("{total} edges"));
}

fn edc_girth(log: &mut Log) {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut bad = Vec::new();
    for i in 0..100 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n);
        let a = girth_profile(&g);
        let b = girth_profile(&edc(&g).expect("edc"));
        if b.get(0, 1) != a.get(0, 1) || b.get(1, 0) != a.get(1, 1).plus(1) || b.get(1, 1) != a.get(1, 0).plus(1) {
            bad.push(i);
        }
    }
    log.check("100 random graphs", bad.is_empty(), format!("failing draws: {bad:?}"));
}

fn packing_consistency(log: &mut Log) {
    let agree = |g: &SignedGraph| -> Result<(), String> {
        let (oracle, w) = packing_number_oracle(g).map_err(|e| e.to_string())?;
        let hom = packing_number(g).map_err(|e| e.to_string())?;
        if !w.verify(g).map_err(|e| e.to_string())? {
            return Err(format!("oracle witness invalid on {}", sgraph::write(g)));
        }
        if oracle != hom || oracle > Packing::from_girth(negative_girth(g)) {
            return Err(format!("oracle {oracle:?}, search {hom:?} on {}", sgraph::write(g)));
        }
        Ok(())
    };
    for n in 1..=4 {
        log.run(&format!("all connected n={n}"), || {
            let all = signed_graphs(n, true, true).map_err(|e| e.to_string())?;
            all.iter().try_for_each(agree)?;
            Ok(format!("{} classes", all.len()))
        });
    }
    log.run("100 random n <= 8", || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..100 {
            let n = rng.gen_range(1..=8);
            agree(&random_graph(&mut rng, n))?;
        }
        Ok("agree".into())
    });
}

fn k3c4(log: &mut Log) {
    let k3 = SignedGraph::unsigned(3, [(0, 1), (1, 2), (0, 2)]).expect("K3");
    let g = cycle_star_product(&k3).expect("K3*C4");
    log.check("4-regular on 12", g.n() == 12 && (0..12).all(|v| g.degree(v) == 4), format!("{} vertices", g.n()));
    log.check("triangle-free", triangle_free(&g), "");
    let alpha = (0u32..1 << g.n())
        .filter(|&m| g.edges().iter().all(|e| !(m >> e.u & 1 == 1 && m >> e.v & 1 == 1)))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0);
    log.check("independence number 4", alpha == 4, format!("alpha = {alpha}"));
    log.run("circular chromatic number 3", || {
        let (r, _) = circular_chromatic_number(&g.all_negative()).map_err(|e| e.to_string())?;
        if r == Rational::new(3, 1) {
            Ok(format!("{r}"))
        } else {
            Err(format!("{r}"))
        }
    });
    log.check("vertex-transitive", is_vertex_transitive(&g, false).unwrap_or(false), "");
}

fn lift_pipeline(log: &mut Log) {
    let (s2, s3) = (cayley(2), cayley(3));
    let target = edc(&s2).expect("edc");
    let suite = match lift_suite(7) {
        Ok(s) => s,
        Err(e) => return log.check("generate instances", false, e.to_string()),
    };
    let config = SearchConfig::default();
    for (i, g) in suite.iter().enumerate() {
        log.run(&format!("instance {i:03}"), || {
            let h = find_homomorphism(g, &s3).map_err(|e| e.to_string())?.ok_or("no map to SPC(3)")?;
            let packing = hom_to_signatures(g, &h, 3).map_err(|e| e.to_string())?;
            let inst = LiftInstance::solve(g.clone(), packing, 3, s2.clone(), &config)
                .map_err(|e| e.to_string())?
                .ok_or("contraction does not map to SPC(2)")?;
            let lifted = lift_to_edc(&inst).map_err(|e| e.to_string())?;
            match verify_homomorphism(g, &target, &lifted).map_err(|e| e.to_string())? {
                None => Ok(format!("n = {}", g.n())),
                Some(v) => Err(format!("edge {:?} maps badly", v.edge)),
            }
        });
    }
}

fn circ_descent(log: &mut Log) {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid: Vec<Rational> =
        spc_core::circ::candidate_grid(6, 23).into_iter().filter(|r| *r < Rational::new(4, 1)).collect();
    let (mut done, mut draws, mut bad) = (0, 0, 0);
    while done < 100 && draws < 10_000 {
        draws += 1;
        let dim = rng.gen_range(1..=4);
        let top = 1u64 << dim;
        let splus: Vec<u64> = (1..top).filter(|_| rng.gen_bool(0.35)).collect();
        let sminus: Vec<u64> = (1..top).filter(|_| rng.gen_bool(0.25)).collect();
        let choices: Vec<u64> = splus.iter().copied().filter(|s| !sminus.contains(s)).collect();
        if choices.is_empty() {
            continue;
        }
        let s1 = choices[rng.gen_range(0..choices.len())];
        let Ok(spec) = CayleySpec::new(dim, splus, sminus) else { continue };
        let g = signed_cayley(&spec);
        let r = grid[rng.gen_range(0..grid.len())];
        let Ok(Some(c)) = has_circular_coloring(&g, r.numer(), r.denom()) else { continue };
        done += 1;
        let ok = descend_coloring(&spec, s1, &c).is_ok_and(|d| {
            d.valid
                && contract_label(&spec, s1)
                    .is_ok_and(|q| verify_circular_coloring(&q, &d.coloring).is_ok_and(|v| v.is_none()))
        });
        if !ok {
            bad += 1;
        }
    }
    log.check("random descents", done == 100 && bad == 0, format!("{bad} of {done} fail ({draws} draws)"));
}

/// Runs a suite; the flag is true when every check passed.
pub fn run(suite: Suite) -> (Report, bool) {
    let start = Instant::now();
    let mut log = Log::default();
    match suite {
        Suite::SpcEquivalence => spc_equivalence(&mut log),
        Suite::ClebschChain => clebsch_chain(&mut log),
        Suite::Gg16 => gg16(&mut log),
        Suite::Ramsey333 => ramsey(&mut log),
        Suite::EdcGirth => edc_girth(&mut log),
        Suite::PackingConsistency => packing_consistency(&mut log),
        Suite::K3c4 => k3c4(&mut log),
        Suite::LiftPipeline => lift_pipeline(&mut log),
        Suite::CircDescent => circ_descent(&mut log),
    }
    let failed = log.0.iter().filter(|c| !c.pass).count();
    let name = suite.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let results = json!({ "suite": name, "passed": log.0.len() - failed, "failed": failed, "checks": log.0 });
    let report = Report::new("verify", [], results).with_timing(Some(start.elapsed()));
    (report, failed == 0)
}
