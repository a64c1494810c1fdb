//! Acceptance criteria. Runs without the libtest harness and prints one
//! PASS/FAIL line per criterion; exits non-zero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spc_core::construct::{
    all_ones, cycle_star_product, k33_matching, negative_cycle, positive_cycle, ramsey333_class, schlafli27, unit,
};
use spc_core::enumerate::signed_graphs;
use spc_core::*;

type Check = fn() -> std::result::Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn methods(k: usize) -> Vec<SpcMethod> {
    let mut m = vec![SpcMethod::Projection, SpcMethod::Augmented, SpcMethod::Cayley, SpcMethod::Power, SpcMethod::Poset];
    if k >= 2 {
        m.push(SpcMethod::Edc);
        m.extend((1..k).map(|a| SpcMethod::Product(a, k - a)));
    }
    m
}

fn c1_cross_definition() -> std::result::Result<String, String> {
    let mut files = 0;
    for k in 1..=8 {
        let reference = sgraph::write(&spc(k, SpcMethod::Cayley).map_err(|e| e.to_string())?);
        for m in methods(k) {
            let text = sgraph::write(&spc(k, m).map_err(|e| format!("k={k} {m}: {e}"))?);
            ensure!(text == reference, "k={k}: {m} differs from cayley");
            files += 1;
        }
    }
    Ok(format!("{files} files byte-identical"))
}

fn c2_girth_profiles() -> std::result::Result<String, String> {
    for k in 1..=8 {
        let a = girth_profile(&spc(k, SpcMethod::Cayley).unwrap());
        let b = girth_profile(&negative_cycle(k + 1).unwrap());
        ensure!(a == b, "k={k}: {a:?} vs {b:?}");
    }
    Ok("k = 1..8 equal to C_-(k+1)".into())
}

fn c3_hom_order() -> std::result::Result<String, String> {
    for k in 1..=6 {
        let h = spc_projection_hom(k).unwrap();
        let bad = verify_homomorphism(&spc(k + 2, SpcMethod::Cayley).unwrap(), &spc(k, SpcMethod::Cayley).unwrap(), &h)
            .map_err(|e| e.to_string())?;
        ensure!(bad.is_none(), "projection k={k} fails at {bad:?}");
    }
    let (s2, s4) = (spc(2, SpcMethod::Cayley).unwrap(), spc(4, SpcMethod::Cayley).unwrap());
    let h = find_homomorphism(&s4, &s2).map_err(|e| e.to_string())?;
    let h = h.ok_or("no SPC(4) -> SPC(2)")?;
    ensure!(verify_homomorphism(&s4, &s2, &h).unwrap().is_none(), "solver witness fails");
    ensure!(find_homomorphism(&s2, &s4).map_err(|e| e.to_string())?.is_none(), "SPC(2) -> SPC(4) found");
    let cert = no_hom_certificate(&s2, &s4).ok_or("no certificate")?;
    ensure!(
        cert.label() == "g11" && cert.source == Girth::Finite(3) && cert.target == Girth::Finite(5),
        "certificate {cert:?}"
    );
    Ok("projections k = 1..6 verify; SPC(4)->SPC(2) found; SPC(2)->SPC(4) refuted by g11 3 < 5".into())
}

fn c4_circular() -> std::result::Result<String, String> {
    let four = Rational::new(4, 1);
    for k in 1..=3 {
        let g = spc(k, SpcMethod::Cayley).unwrap();
        let (r, c) = circular_chromatic_number(&g).map_err(|e| format!("k={k}: {e}"))?;
        ensure!(r == four, "chi_c(SPC({k})) = {r}");
        ensure!(verify_circular_coloring(&g, &c).unwrap().is_none(), "k={k} witness invalid");
    }
    let g = spc(4, SpcMethod::Cayley).unwrap();
    let c = has_circular_coloring(&g, 4, 1).map_err(|e| e.to_string())?.ok_or("SPC(4) has no (4,1) colouring")?;
    ensure!(verify_circular_coloring(&g, &c).unwrap().is_none(), "SPC(4) (4,1) witness invalid");
    let below: Vec<Rational> = spc_core::circ::candidate_grid(8, 16).into_iter().filter(|r| *r < four).collect();
    for r in &below {
        let got = has_circular_coloring(&g, r.numer(), r.denom()).map_err(|e| format!("{r}: {e}"))?;
        ensure!(got.is_none(), "SPC(4) coloured at {r}");
    }
    Ok(format!("chi_c = 4 for k = 1..3; SPC(4) feasible at 4/1, infeasible at {} candidates below 4", below.len()))
}

fn random_cayley_spec(rng: &mut ChaCha8Rng) -> (CayleySpec, u64) {
    loop {
        let dim = rng.gen_range(1..=4);
        let top = 1u64 << dim;
        let pick = |rng: &mut ChaCha8Rng, p: f64| -> Vec<u64> { (1..top).filter(|_| rng.gen_bool(p)).collect() };
        let splus = pick(rng, 0.35);
        let sminus = pick(rng, 0.25);
        let choices: Vec<u64> = splus.iter().copied().filter(|s| !sminus.contains(s)).collect();
        if choices.is_empty() {
            continue;
        }
        let s1 = choices[rng.gen_range(0..choices.len())];
        return (CayleySpec::new(dim, splus, sminus).unwrap(), s1);
    }
}

fn c5_descent() -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let grid: Vec<Rational> = spc_core::circ::candidate_grid(6, 23).into_iter().filter(|r| *r < Rational::new(4, 1)).collect();
    let mut trials = 0;
    let mut attempts = 0;
    while trials < 500 {
        attempts += 1;
        ensure!(attempts < 20_000, "only {trials} colourable instances found");
        let (spec, s1) = random_cayley_spec(&mut rng);
        let g = signed_cayley(&spec);
        let r = grid[rng.gen_range(0..grid.len())];
        let Some(mut c) = has_circular_coloring(&g, r.numer(), r.denom()).map_err(|e| e.to_string())? else {
            continue;
        };
        // rotate and possibly reflect: still a valid colouring
        let shift = rng.gen_range(0..c.p);
        let flip = rng.gen_bool(0.5);
        for x in c.points.iter_mut() {
            let y = if flip { (c.p - *x) % c.p } else { *x };
            *x = (y + shift) % c.p;
        }
        ensure!(verify_circular_coloring(&g, &c).unwrap().is_none(), "input colouring invalid");
        let d = descend_coloring(&spec, s1, &c).map_err(|e| e.to_string())?;
        let quotient = contract_label(&spec, s1).map_err(|e| e.to_string())?;
        let ok = verify_circular_coloring(&quotient, &d.coloring).map_err(|e| e.to_string())?.is_none();
        ensure!(d.valid && ok, "descent failed on {spec:?}, s1={s1}, {c:?}");
        trials += 1;
    }
    Ok(format!("{trials} descents re-validate ({attempts} draws)"))
}

fn c6_packing() -> std::result::Result<String, String> {
    let check = |g: &SignedGraph| -> std::result::Result<(), String> {
        let (oracle, witness) = packing_number_oracle(g).map_err(|e| e.to_string())?;
        ensure!(witness.verify(g).unwrap(), "oracle witness invalid on {g:?}");
        let via_hom = packing_number(g).map_err(|e| e.to_string())?;
        ensure!(oracle == via_hom, "oracle {oracle:?} vs hom {via_hom:?} on {g:?}");
        let bound = spc_core::pack::Packing::from_girth(negative_girth(g));
        ensure!(oracle <= bound, "packing {oracle:?} above negative girth on {g:?}");
        Ok(())
    };
    let mut exhaustive = 0;
    for n in 1..=5 {
        for g in signed_graphs(n, true, true).unwrap() {
            check(&g)?;
            exhaustive += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = common::random_signed_graph(&mut rng, n, p, 0.1);
        check(&g)?;
    }
    Ok(format!("{exhaustive} connected classes n <= 5 and 200 random n <= 8 agree"))
}

fn c7_hom_to_signatures() -> std::result::Result<String, String> {
    let mut sources: Vec<SignedGraph> = (2..=6).map(|k| negative_cycle(k).unwrap()).collect();
    sources.push(common::k4().all_negative());
    sources.push(k33_matching());
    sources.push(gallery(&Gallery::Petersen).unwrap().all_negative());
    sources.extend((1..=4).map(|k| spc(k, SpcMethod::Cayley).unwrap()));
    sources.extend(lift_suite(7).unwrap());
    let mut checked = 0;
    for g in &sources {
        let sigma = g.signature();
        for k in 1..=4 {
            let target = spc(k, SpcMethod::Cayley).unwrap();
            let Some(h) = find_homomorphism(g, &target).map_err(|e| e.to_string())? else {
                continue;
            };
            let p = hom_to_signatures(g, &h, k).map_err(|e| e.to_string())?;
            ensure!(p.len() == k + 1 && p.is_partition(g), "not a partition for k={k} on {g:?}");
            for s in p.signatures(g) {
                let eq = is_switching_equivalent(g, &sigma, &s).map_err(|e| e.to_string())?;
                ensure!(eq.is_some(), "pulled-back signature not equivalent, k={k}, {g:?}");
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} homomorphisms from {} sources pulled back", sources.len()))
}

fn c8_edc_identities() -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.2..0.8);
        let g = common::random_signed_graph(&mut rng, n, p, 0.1);
        let a = girth_profile(&g);
        let b = girth_profile(&edc(&g).map_err(|e| e.to_string())?);
        ensure!(b.get(0, 1) == a.get(0, 1), "g01 on {g:?}");
        ensure!(b.get(1, 0) == a.get(1, 1).plus(1), "g10 on {g:?}");
        ensure!(b.get(1, 1) == a.get(1, 0).plus(1), "g11 on {g:?}");
    }
    Ok("200 random graphs satisfy all three identities".into())
}

fn c9_lift_pipeline() -> std::result::Result<String, String> {
    let suite = common::load_fixtures("lift-suite");
    ensure!(!suite.is_empty(), "empty lift suite");
    let (s2, s3) = (spc(2, SpcMethod::Cayley).unwrap(), spc(3, SpcMethod::Cayley).unwrap());
    let target = edc(&s2).unwrap();
    ensure!(switching_isomorphic(&target, &s3).unwrap().is_some(), "edc(SPC(2)) is not SPC(3)");
    let config = SearchConfig::default();
    for (name, g) in &suite {
        ensure!(g.n() <= 8 && negative_girth(g) == Girth::Finite(4), "{name}: not in the suite's class");
        let c = classify(g);
        ensure!(c.planar && c.signed_bipartite, "{name}: not planar bipartite");
        let h = find_homomorphism(g, &s3).map_err(|e| e.to_string())?.ok_or(format!("{name}: no map to SPC(3)"))?;
        let packing = hom_to_signatures(g, &h, 3).map_err(|e| format!("{name}: {e}"))?;
        let inst = LiftInstance::solve(g.clone(), packing, 3, s2.clone(), &config)
            .map_err(|e| format!("{name}: {e}"))?
            .ok_or(format!("{name}: contraction does not map to SPC(2)"))?;
        let lifted = lift_to_edc(&inst).map_err(|e| format!("{name}: {e}"))?;
        ensure!(verify_homomorphism(g, &target, &lifted).unwrap().is_none(), "{name}: lifted map invalid");
    }
    Ok(format!("{}/{} instances lifted into EDC(SPC(2)) = SPC(3)", suite.len(), suite.len()))
}

fn delete_closed_neighbourhood(g: &SignedGraph, v: usize) -> SignedGraph {
    let keep: Vec<usize> = (0..g.n()).filter(|&w| w != v && !g.adjacent(v, w)).collect();
    g.induced_subgraph(&keep).unwrap()
}

fn triangle_free(g: &SignedGraph) -> bool {
    g.edges().iter().all(|e| e.is_loop() || (0..g.n()).all(|w| !(g.adjacent(e.u, w) && g.adjacent(e.v, w))))
}

fn independence_number(g: &SignedGraph) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|&m| g.edges().iter().all(|e| !(m >> e.u & 1 == 1 && m >> e.v & 1 == 1)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn colourable(g: &SignedGraph, k: usize) -> bool {
    fn go(g: &SignedGraph, k: usize, col: &mut Vec<usize>) -> bool {
        let v = col.len();
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|w| !(g.adjacent(v, w) && col[w] == c)) {
                col.push(c);
                if go(g, k, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    go(g, k, &mut Vec::new())
}

fn c10_gallery() -> std::result::Result<String, String> {
    let pc4 = spc(4, SpcMethod::Cayley).unwrap().underlying();
    let iso = |a: &SignedGraph, b: &SignedGraph| isomorphic(a, b).unwrap().is_some();
    let gg16 = gallery(&Gallery::Gg16).unwrap();
    ensure!(iso(&gg16, &pc4), "gg16 not isomorphic to PC(4)");
    ensure!(iso(&cycle_star_product(&common::k4()).unwrap(), &pc4), "K4*C4 not isomorphic to PC(4)");

    let (petersen, c6) = (gallery(&Gallery::Petersen).unwrap(), positive_cycle(6).unwrap());
    let s27 = schlafli27();
    ensure!((0..27).all(|v| s27.degree(v) == 10), "Schlafli graph not 10-regular");
    for v in 0..27 {
        let h16 = delete_closed_neighbourhood(&s27, v);
        ensure!(iso(&h16, &pc4), "27 -> 16 fails at {v}");
        if v == 0 {
            for w in 0..16 {
                let h10 = delete_closed_neighbourhood(&h16, w);
                ensure!(iso(&h10, &petersen), "16 -> 10 fails at {w}");
                for x in 0..10 {
                    ensure!(iso(&delete_closed_neighbourhood(&h10, x), &c6), "10 -> 6 fails at {x}");
                }
            }
        }
    }

    let mut total = 0;
    for c in 0..3 {
        let class = ramsey333_class(c).unwrap();
        ensure!(triangle_free(&class), "colour class {c} has a triangle");
        ensure!(iso(&class, &gg16), "colour class {c} not isomorphic to gg16");
        total += class.edge_count();
    }
    ensure!(total == 120, "colour classes cover {total} edges of K16");

    let k3 = SignedGraph::unsigned(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
    let k3c4 = cycle_star_product(&k3).unwrap();
    ensure!(k3c4.n() == 12 && (0..12).all(|v| k3c4.degree(v) == 4), "K3*C4 not 4-regular on 12 vertices");
    ensure!(triangle_free(&k3c4), "K3*C4 has a triangle");
    let alpha = independence_number(&k3c4);
    ensure!(alpha == 4, "alpha(K3*C4) = {alpha}");
    ensure!(colourable(&k3c4, 3) && !colourable(&k3c4, 2), "chi(K3*C4) != 3");
    let (chic, _) = circular_chromatic_number(&k3c4.all_negative()).map_err(|e| e.to_string())?;
    ensure!(chic == Rational::new(3, 1), "chi_c(K3*C4) = {chic}");
    ensure!(is_vertex_transitive(&k3c4, false).unwrap(), "K3*C4 not vertex-transitive");

    let poset = spc(4, SpcMethod::Poset).unwrap().underlying();
    let layer: Vec<usize> = (0..16u64)
        .filter(|&a| PosetVertex::from_mask(4, a).unwrap().order() == 2)
        .map(|a| a as usize)
        .collect();
    ensure!(iso(&poset.induced_subgraph(&layer).unwrap(), &petersen), "middle layer of PC(4) is not Petersen");
    Ok("gg16, K4*C4, Schlafli chain, Ramsey classes, K3*C4, middle layer".into())
}

fn c11_induced_spc() -> std::result::Result<String, String> {
    let e = unit;
    let hosts = [
        CayleySpec::new(4, (1..=4).map(e), [e(1) ^ e(2) ^ e(3)]),
        CayleySpec::new(3, (1..=3).map(e), [all_ones(3)]),
        CayleySpec::new(5, (1..=5).map(e), [all_ones(5)]),
        CayleySpec::new(5, (1..=5).map(e), [e(1) ^ e(2) ^ e(3)]),
        CayleySpec::new(6, (1..=6).map(e), [e(1) ^ e(2) ^ e(3) ^ e(4) ^ e(5)]),
        CayleySpec::new(5, (1..=5).map(e), [e(1) ^ e(2) ^ e(3), e(3) ^ e(4) ^ e(5)]),
    ];
    let mut dims = Vec::new();
    for spec in hosts {
        let spec = spec.map_err(|e| e.to_string())?;
        let host = signed_cayley(&spec);
        let emb = find_induced_spc(&spec).map_err(|e| format!("{spec:?}: {e}"))?;
        ensure!(emb.verify(&host).map_err(|e| e.to_string())?, "embedding fails on {spec:?}");
        dims.push(emb.dimension);
    }
    ensure!(dims[0] == 3, "first host gives SPC({})", dims[0]);
    Ok(format!("{} hosts, induced dimensions {dims:?}", dims.len()))
}

fn c12_components() -> std::result::Result<String, String> {
    let mut mismatches = Vec::new();
    for n in 1..=8usize {
        for k in 1..n {
            let s: Vec<u64> = (1..=k).map(unit).collect();
            let star = s.iter().fold(0, |a, b| a ^ b);
            let g = signed_cayley(&CayleySpec::new(n, s, [star]).unwrap());
            let comps = g.components();
            let reference = spc(k, SpcMethod::Cayley).unwrap();
            for c in &comps {
                let h = g.induced_subgraph(c).unwrap();
                ensure!(switching_isomorphic(&h, &reference).unwrap().is_some(), "n={n} k={k}: component not SPC({k})");
            }
            let expected = 1usize << (n - k - 1);
            if comps.len() != expected {
                mismatches.push(format!("n={n},k={k}: {} != {expected}", comps.len()));
            }
        }
    }
    ensure!(
        mismatches.is_empty(),
        "components all switching isomorphic to SPC(k), but counts differ from 2^(n-k-1) in {} cases, e.g. {}",
        mismatches.len(),
        mismatches[..3.min(mismatches.len())].join("; ")
    );
    Ok("counts and components match".into())
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, u64, Check); 12] = [
        (1, "cross-definition equality", 10, c1_cross_definition),
        (2, "girth profiles", 5, c2_girth_profiles),
        (3, "homomorphism order", 30, c3_hom_order),
        (4, "circular chromatic number", 600, c4_circular),
        (5, "descent soundness", 120, c5_descent),
        (6, "packing consistency", 600, c6_packing),
        (7, "hom_to_signatures", 60, c7_hom_to_signatures),
        (8, "EDC identities", 60, c8_edc_identities),
        (9, "lift pipeline", 300, c9_lift_pipeline),
        (10, "gallery identities", 120, c10_gallery),
        (11, "induced SPC extraction", 60, c11_induced_spc),
        (12, "component count", 120, c12_components),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || *f == id.to_string()) {
            continue;
        }
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(limit);
        let (status, detail) = match result {
            Ok(d) if elapsed <= limit => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; over the {limit:?} limit")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {status} [{name}] {detail} ({:.2}s)", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
