mod report;
mod suites;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spc_core::pack::MAX_ORACLE_VERTICES;
use spc_core::search::DEFAULT_BUDGET;
use spc_core::{
    circular_chromatic_number_with, classify, common_product, edc, find_homomorphism_with, gallery, girth_profile,
    hom_to_signatures, lift_to_edc, negative_girth, no_hom_certificate, packing_number_oracle, packing_number_with,
    sgraph, spc, verify_circular_coloring, verify_homomorphism, CircularColoring, Error, Gallery, Homomorphism,
    LiftInstance, Packing, Rational, SearchConfig, SignaturePacking, SignedGraph, SpcMethod,
};

use report::{digest, Fail, Report};

#[derive(Parser)]
#[command(name = "spc", version, about = "Signed projective cubes: generators, exact solvers and checks")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Solver {
    /// Search node budget; exhausting it exits with code 3.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Single thread and no timing in the report, so output is reproducible.
    #[arg(long)]
    deterministic: bool,
}

impl Solver {
    fn config(&self) -> SearchConfig {
        let threads = if self.deterministic { 1 } else { self.threads };
        SearchConfig::default().with_budget(self.budget).with_threads(threads)
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Sgraph,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a generated graph to stdout.
    Construct {
        #[command(subcommand)]
        what: Construct,
        #[arg(long, value_enum, default_value_t = Format::Sgraph, global = true)]
        format: Format,
    },
    /// Girth profile and classification.
    Analyze { file: PathBuf },
    /// Decide whether FILE maps to TARGET.
    Hom {
        file: PathBuf,
        target: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Circular chromatic number with a witness colouring.
    Chic {
        file: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Signature packing number.
    Pack {
        file: PathBuf,
        #[command(flatten)]
        solver: Solver,
    },
    /// Map FILE to SPC(l), contract one label class, map the contraction to
    /// the bound and lift into its extended double cover.
    Lift {
        file: PathBuf,
        /// The bound for the contracted graph; SPC(l-1) if omitted.
        #[arg(long)]
        bhat: Option<PathBuf>,
        /// Number of packing classes minus one.
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[command(flatten)]
        solver: Solver,
    },
    /// Re-validate the witness in a report against its input files.
    Check {
        report: PathBuf,
        file: PathBuf,
        /// Second input (hom target or lift bound), when the report has one.
        other: Option<PathBuf>,
    },
    /// Run a named battery of identity checks.
    Verify {
        #[arg(value_enum)]
        suite: suites::Suite,
    },
}

#[derive(Subcommand)]
enum Construct {
    Spc {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "cayley")]
        method: SpcMethod,
    },
    Gallery {
        /// One of: kneser:N:K, petersen, clebsch, gg16, ramsey333[:C],
        /// schlafli27, k33_matching, negative_cycle:K, positive_cycle:K.
        #[arg(long)]
        name: Gallery,
    },
    Edc {
        #[arg(long = "in")]
        input: PathBuf,
    },
    Product {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
}

fn read_graph(path: &Path) -> Result<(SignedGraph, String), Fail> {
    let bytes = fs::read(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| Fail::Usage(format!("{}: not UTF-8", path.display())))?;
    let g = sgraph::parse(&text).map_err(|e| match e {
        Error::Parse { line, message } => Fail::Usage(format!("{}:{line}: {message}", path.display())),
        other => Fail::Usage(format!("{}: {other}", path.display())),
    })?;
    Ok((g, digest(&bytes)))
}

fn emit(g: &SignedGraph, format: Format) {
    match format {
        Format::Sgraph => print!("{}", sgraph::write(g)),
        Format::Dot => print!("{}", sgraph::to_dot(g)),
    }
}

fn construct(what: Construct, format: Format) -> Result<(), Fail> {
    let g = match what {
        Construct::Spc { dim, method } => spc(dim, method)?,
        Construct::Gallery { name } => gallery(&name)?,
        Construct::Edc { input } => edc(&read_graph(&input)?.0)?,
        Construct::Product { a, b } => common_product(&read_graph(&a)?.0, &read_graph(&b)?.0),
    };
    emit(&g, format);
    Ok(())
}

fn analyze(file: &Path) -> Result<Report, Fail> {
    let (g, d) = read_graph(file)?;
    let p = girth_profile(&g);
    let results = json!({
        "n": g.n(),
        "edges": g.edge_count(),
        "negative_edges": g.negative_edge_count(),
        "profile": p,
        "negative_girth": negative_girth(&g),
        "classification": classify(&g),
    });
    Ok(Report::new("analyze", [("file", d)], results))
}

fn hom(file: &Path, target: &Path, solver: &Solver) -> Result<Report, Fail> {
    let (g, dg) = read_graph(file)?;
    let (h, dh) = read_graph(target)?;
    let results = match find_homomorphism_with(&g, &h, &solver.config())? {
        Some(w) => json!({ "status": "found", "witness": w }),
        None => json!({ "status": "none", "certificate": no_hom_certificate(&g, &h) }),
    };
    Ok(Report::new("hom", [("file", dg), ("target", dh)], results))
}

fn chic(file: &Path, solver: &Solver) -> Result<Report, Fail> {
    let (g, d) = read_graph(file)?;
    let (r, c) = circular_chromatic_number_with(&g, &solver.config())?;
    Ok(Report::new("chic", [("file", d)], json!({ "chi_c": r, "witness": c })))
}

fn pack(file: &Path, solver: &Solver) -> Result<Report, Fail> {
    let (g, d) = read_graph(file)?;
    let p = packing_number_with(&g, &solver.config())?;
    let witness = if g.n() <= MAX_ORACLE_VERTICES {
        let (q, w) = packing_number_oracle(&g)?;
        if q != p {
            return Err(Fail::Failed(format!("oracle gives {q:?}, homomorphism search gives {p:?}")));
        }
        Some(w)
    } else {
        None
    };
    let girth = negative_girth(&g);
    let results = json!({
        "packing_number": p,
        "negative_girth": girth,
        "packs": p == Packing::from_girth(girth),
        "witness": witness,
    });
    Ok(Report::new("pack", [("file", d)], results))
}

fn lift(file: &Path, bhat: Option<&Path>, dim: usize, solver: &Solver) -> Result<Report, Fail> {
    let (g, dg) = read_graph(file)?;
    if dim < 2 {
        return Err(Fail::Usage("--dim must be at least 2".into()));
    }
    let (b, db) = match bhat {
        Some(p) => read_graph(p)?,
        None => {
            let b = spc(dim - 1, SpcMethod::Cayley)?;
            let d = digest(sgraph::write(&b).as_bytes());
            (b, d)
        }
    };
    let config = solver.config();
    let target = spc(dim, SpcMethod::Cayley)?;
    let Some(h) = find_homomorphism_with(&g, &target, &config)? else {
        return Err(Fail::Failed(format!("input does not map to SPC({dim}), so it has no packing of size {}", dim + 1)));
    };
    let packing = hom_to_signatures(&g, &h, dim)?;
    let Some(inst) = LiftInstance::solve(g.clone(), packing, dim, b.clone(), &config)? else {
        return Err(Fail::Failed("the contracted graph does not map to the bound".into()));
    };
    let lifted = lift_to_edc(&inst)?;
    let results = json!({
        "packing": inst.packing,
        "distinguished": inst.distinguished,
        "bhat": sgraph::write(&b),
        "hom_to_bhat": inst.hom_to_bhat,
        "lifted": lifted,
    });
    Ok(Report::new("lift", [("file", dg), ("bhat", db)], results))
}

fn field<T: serde::de::DeserializeOwned>(v: &Value, key: &str) -> Result<T, Fail> {
    let x = v.get(key).ok_or_else(|| Fail::Usage(format!("report has no `{key}`")))?;
    serde_json::from_value(x.clone()).map_err(|e| Fail::Usage(format!("`{key}`: {e}")))
}

fn check(report: &Path, file: &Path, other: Option<&Path>) -> Result<Report, Fail> {
    let text = fs::read_to_string(report).map_err(|e| Fail::Usage(format!("{}: {e}", report.display())))?;
    let r: Value = serde_json::from_str(&text).map_err(|e| Fail::Usage(format!("{}: {e}", report.display())))?;
    let command: String = field(&r, "command")?;
    let digests: Value = field(&r, "input_digest")?;
    let results: Value = field(&r, "results")?;
    let (g, dg) = read_graph(file)?;
    if digests.get("file").and_then(Value::as_str) != Some(dg.as_str()) {
        return Err(Fail::Failed(format!("{} is not the input of this report", file.display())));
    }
    let second = |role: &str| -> Result<SignedGraph, Fail> {
        let p = other.ok_or_else(|| Fail::Usage(format!("this report needs its `{role}` file")))?;
        let (h, dh) = read_graph(p)?;
        if digests.get(role).and_then(Value::as_str) != Some(dh.as_str()) {
            return Err(Fail::Failed(format!("{} is not the `{role}` input of this report", p.display())));
        }
        Ok(h)
    };
    let detail = match command.as_str() {
        "hom" => {
            let h = second("target")?;
            if results.get("status").and_then(Value::as_str) != Some("found") {
                let cert: Option<spc_core::NoHomCertificate> = field(&results, "certificate")?;
                match cert {
                    Some(c) if no_hom_certificate(&g, &h) == Some(c) => format!("certificate {} holds", c.label()),
                    Some(_) => return Err(Fail::Failed("certificate does not match the girth profiles".into())),
                    None => "no witness to check".into(),
                }
            } else {
                let w: Homomorphism = field(&results, "witness")?;
                match verify_homomorphism(&g, &h, &w)? {
                    None => "homomorphism verified".into(),
                    Some(v) => return Err(Fail::Failed(format!("edge {} maps badly", v.edge))),
                }
            }
        }
        "chic" => {
            let r: Rational = field(&results, "chi_c")?;
            let c: CircularColoring = field(&results, "witness")?;
            if c.ratio() != r {
                return Err(Fail::Failed(format!("witness uses {} but reports {r}", c.ratio())));
            }
            match verify_circular_coloring(&g, &c)? {
                None => format!("({}, {}) colouring verified", c.p, c.q),
                Some(v) => return Err(Fail::Failed(format!("edge {} violated", v.edge))),
            }
        }
        "pack" => {
            let p: Packing = field(&results, "packing_number")?;
            let w: Option<SignaturePacking> = field(&results, "witness")?;
            match w {
                Some(w) if w.verify(&g)? && (p == Packing::Infinite || Packing::Finite(w.len()) == p) => {
                    format!("packing of size {} verified", w.len())
                }
                Some(_) => return Err(Fail::Failed("packing witness invalid".into())),
                None => "no witness to check".into(),
            }
        }
        "lift" => {
            let text: String = field(&results, "bhat")?;
            let b = sgraph::parse(&text)?;
            if let Some(p) = other {
                let (h, _) = read_graph(p)?;
                if h != b {
                    return Err(Fail::Failed("bound differs from the one in the report".into()));
                }
            }
            let w: Homomorphism = field(&results, "lifted")?;
            match verify_homomorphism(&g, &edc(&b)?, &w)? {
                None => "lifted homomorphism into EDC(bhat) verified".into(),
                Some(v) => return Err(Fail::Failed(format!("edge {} maps badly", v.edge))),
            }
        }
        "analyze" => {
            let stored: spc_core::GirthProfile = field(&results, "profile")?;
            if stored != girth_profile(&g) {
                return Err(Fail::Failed("stored profile differs".into()));
            }
            "profile recomputed".into()
        }
        other => return Err(Fail::Usage(format!("cannot check `{other}` reports"))),
    };
    Ok(Report::new("check", [("report", digest(text.as_bytes()))], json!({ "command": command, "ok": true, "detail": detail })))
}

fn run(cli: Cli) -> Result<(), Fail> {
    let start = Instant::now();
    let (report, deterministic) = match cli.cmd {
        Cmd::Construct { what, format } => return construct(what, format),
        Cmd::Analyze { file } => (analyze(&file)?, false),
        Cmd::Hom { file, target, solver } => (hom(&file, &target, &solver)?, solver.deterministic),
        Cmd::Chic { file, solver } => (chic(&file, &solver)?, solver.deterministic),
        Cmd::Pack { file, solver } => (pack(&file, &solver)?, solver.deterministic),
        Cmd::Lift { file, bhat, dim, solver } => (lift(&file, bhat.as_deref(), dim, &solver)?, solver.deterministic),
        Cmd::Check { report, file, other } => (check(&report, &file, other.as_deref())?, true),
        Cmd::Verify { suite } => {
            let (report, ok) = suites::run(suite);
            report.print();
            return if ok { Ok(()) } else { Err(Fail::Failed(format!("suite {suite:?} has failing checks"))) };
        }
    };
    report.with_timing(if deterministic { None } else { Some(start.elapsed()) }).print();
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
