use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wirtlab::diagram::{
    auto_region_b, check_components, check_facing, check_theorem, parse_diagram, serialize_diagram,
    validate_wirtinger_type, CurveDiagram, RegionFailure, TheoremReport,
};
use wirtlab::genpres::{
    diagram_braid_monodromy, extended_details, projective_closure, wirtinger_presentation, zvk_presentation,
};
use wirtlab::hypocycloid::{hypo_stats, quotient_diagram, verify_case, HypoParams};
use wirtlab::presentation::{parse_presentation, profile, tietze_simplify, Presentation, TargetSet};

#[derive(Parser)]
#[command(name = "wirtlab", version, about = "Fundamental groups of plane curve complements from real diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Gap,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
}

#[derive(Args)]
struct Targets {
    /// Symmetric groups to count homomorphisms into, e.g. `s3,s4,s5`.
    #[arg(long, default_value = "s3,s4")]
    targets: String,
}

impl Targets {
    fn get(&self) -> Result<TargetSet, CliError> {
        TargetSet::parse(&self.targets).map_err(|m| CliError::new("usage", m))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the hypotheses on a diagram file.
    Validate {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Wirtinger presentation of a diagram.
    Wirtinger {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Wirtinger presentation with obstruction conjugators.
    Extended {
        file: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Zariski-van Kampen presentation from the diagram's braid monodromy.
    Zvk {
        file: PathBuf,
        /// Add the relation at infinity.
        #[arg(long)]
        projective: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Tietze-simplify a presentation (or a diagram's Wirtinger presentation).
    Simplify {
        file: PathBuf,
        #[arg(long)]
        allow_iib: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Abelianization and hom counts.
    Invariants {
        file: PathBuf,
        #[command(flatten)]
        targets: Targets,
        #[command(flatten)]
        out: Output,
    },
    /// Compare the profiles of two presentations or diagrams.
    Compare {
        left: PathBuf,
        right: PathBuf,
        #[command(flatten)]
        targets: Targets,
        #[command(flatten)]
        out: Output,
    },
    /// Singularity counts of the hypocycloid C_{k,l}.
    HypoStats {
        #[arg(long)]
        k: u32,
        /// Defaults to k - 1.
        #[arg(long)]
        l: Option<u32>,
        #[command(flatten)]
        out: Output,
    },
    /// Diagram of the quotient curve, in the diagram language.
    HypoDiagram {
        #[arg(long)]
        k: u32,
    },
    /// Compare the orbifold group with the semidirect product.
    HypoVerify {
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        targets: Targets,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug)]
struct CliError {
    kind: &'static str,
    message: String,
}

impl CliError {
    fn new(kind: &'static str, message: impl Into<String>) -> Self {
        CliError { kind, message: message.into() }
    }

    fn json(&self) -> Value {
        json!({ "schema": 1, "error": { "kind": self.kind, "message": self.message } })
    }
}

fn fail<E: std::fmt::Display>(kind: &'static str) -> impl Fn(E) -> CliError {
    move |e| CliError::new(kind, e.to_string())
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::new("io", format!("{}: {e}", path.display())))
}

fn load_diagram(path: &Path) -> Result<CurveDiagram, CliError> {
    parse_diagram(&read(path)?).map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))
}

fn is_diagram(text: &str) -> bool {
    text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty()) == Some("diagram")
}

/// A presentation file, or the Wirtinger presentation of a diagram file.
fn load_presentation(path: &Path) -> Result<Presentation, CliError> {
    let text = read(path)?;
    if is_diagram(&text) {
        let dg = parse_diagram(&text).map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))?;
        Ok(wirtinger_presentation(&dg).map_err(fail("generation"))?.presentation)
    } else {
        parse_presentation(&text).map_err(|e| CliError::new("parse", format!("{}: {e}", path.display())))
    }
}

fn render(p: &Presentation, format: Format) -> String {
    match format {
        Format::Plain => format!("{p}\n"),
        Format::Json => json_line(&serde_json::to_value(p.to_json()).expect("serializable")),
        Format::Gap => p.to_gap(),
    }
}

fn json_line(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("serializable"))
}

fn validate(dg: &CurveDiagram, format: Format) -> Result<String, CliError> {
    let wt = validate_wirtinger_type(dg);
    let facing = check_facing(dg);
    let components = check_components(dg).map_err(fail("diagram"))?;
    let region = auto_region_b(dg);
    let report = check_theorem(dg);
    let verdict = if report.is_verified() { "verified" } else { "violations" };
    let region_json = match &region {
        Ok(b) => json!({ "ok": true, "faces": b.faces, "euler": b.euler, "connected": b.connected }),
        Err(RegionFailure::NoValidRegion { reasons, blocking, euler, connected }) => json!({
            "ok": false, "verdict": "NoValidRegion", "reasons": reasons, "blocking_events": blocking,
            "euler": euler, "connected": connected,
        }),
        Err(RegionFailure::Diagram(e)) => json!({ "ok": false, "error": e.to_string() }),
    };
    if format == Format::Json {
        return Ok(json_line(&json!({
            "schema": 1,
            "verdict": verdict,
            "wirtinger_type": wt,
            "components": components,
            "region": region_json,
            "facing": facing.violations,
            "violations": report.violations(),
        })));
    }
    let mut s = String::new();
    let _ = writeln!(s, "verdict: {verdict}");
    for (name, ok, msg) in &wt.checks {
        let _ = writeln!(s, "  {name} {}: {msg}", if *ok { "ok" } else { "FAILED" });
    }
    match &region {
        Ok(b) => {
            let _ = writeln!(s, "  region B: {} faces, euler {}", b.faces.len(), b.euler);
        }
        Err(e) => {
            let _ = writeln!(s, "  region B: {e}");
        }
    }
    if let TheoremReport::Violations(vs) = &report {
        for v in vs {
            let _ = writeln!(s, "  {v}");
        }
    }
    Ok(s)
}

fn run(cmd: Command) -> Result<String, CliError> {
    match cmd {
        Command::Validate { file, out } => validate(&load_diagram(&file)?, out.format),
        Command::Wirtinger { file, out } => {
            let w = wirtinger_presentation(&load_diagram(&file)?).map_err(fail("generation"))?;
            Ok(match out.format {
                Format::Json => json_line(&w.to_json(false)),
                f => render(&w.presentation, f),
            })
        }
        Command::Extended { file, out } => {
            let x = extended_details(&load_diagram(&file)?).map_err(fail("generation"))?;
            Ok(match out.format {
                Format::Json => json_line(&json!({
                    "schema": 1,
                    "generators": x.presentation.generators(),
                    "relators": x.presentation.relator_strings(),
                    "edge_map": x.edge_map,
                    "corrections": x.corrections,
                })),
                f => render(&x.presentation, f),
            })
        }
        Command::Zvk { file, projective, out } => {
            let dg = load_diagram(&file)?;
            let mono = diagram_braid_monodromy(&dg).map_err(fail("generation"))?;
            let mut p = zvk_presentation(dg.d(), &mono).map_err(fail("generation"))?;
            if projective {
                p = projective_closure(&p, dg.d()).map_err(fail("generation"))?;
            }
            Ok(render(&p, out.format))
        }
        Command::Simplify { file, allow_iib, out } => {
            let p = load_presentation(&file)?;
            let (q, t) = tietze_simplify(&p, allow_iib);
            Ok(match out.format {
                Format::Json => json_line(&json!({
                    "schema": 1,
                    "presentation": q.to_json(),
                    "transcript": t,
                    "summary": { "I": t.count("I"), "IIa": t.count("IIa"), "IIb": t.count("IIb") },
                })),
                Format::Gap => q.to_gap(),
                Format::Plain => format!(
                    "{q}\nmoves: I {}, IIa {}, IIb {}\n",
                    t.count("I"),
                    t.count("IIa"),
                    t.count("IIb")
                ),
            })
        }
        Command::Invariants { file, targets, out } => {
            let t = targets.get()?;
            let pr = profile(&load_presentation(&file)?, &t).map_err(fail("hom"))?;
            Ok(match out.format {
                Format::Json => json_line(&json!({ "schema": 1, "profile": pr })),
                _ => format!("{pr}\n"),
            })
        }
        Command::Compare { left, right, targets, out } => {
            let t = targets.get()?;
            let a = profile(&load_presentation(&left)?, &t).map_err(fail("hom"))?;
            let b = profile(&load_presentation(&right)?, &t).map_err(fail("hom"))?;
            let equal = a.same_invariants(&b);
            Ok(match out.format {
                Format::Json => json_line(&json!({
                    "schema": 1, "profile_left": a, "profile_right": b, "equal": equal,
                    "note": "equal profiles are necessary for an isomorphism, not a proof of one",
                })),
                _ => format!("left:  {a}\nright: {b}\nequal: {equal}\n"),
            })
        }
        Command::HypoStats { k, l, out } => {
            let p = HypoParams::new(k, l.unwrap_or(k.saturating_sub(1))).map_err(fail("hypocycloid"))?;
            let s = hypo_stats(&p);
            Ok(match out.format {
                Format::Json => json_line(&json!({ "schema": 1, "k": p.k, "l": p.l, "stats": s })),
                _ => format!(
                    "C_{{{},{}}}: degree {}, cusps {}, nodes {} ({} real), vertical tangencies {}\n",
                    p.k, p.l, s.degree, s.cusps, s.nodes, s.real_nodes, s.tangencies
                ),
            })
        }
        Command::HypoDiagram { k } => Ok(serialize_diagram(&quotient_diagram(k).map_err(fail("hypocycloid"))?)),
        Command::HypoVerify { k, targets, out } => {
            let r = verify_case(k, &targets.get()?).map_err(fail("hypocycloid"))?;
            Ok(match out.format {
                Format::Json => json_line(&serde_json::to_value(&r).expect("serializable")),
                _ => format!(
                    "k = {}, N = {}\norbifold:    {}\nsemidirect:  {}\nequal: {}\nsemidirect on all {} generators: {} (equal: {})\n{}\n",
                    r.k, r.n, r.profile_left, r.profile_right, r.equal, r.n, r.profile_full, r.equal_full, r.note
                ),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", serde_json::to_string(&e.json()).expect("serializable"));
            ExitCode::FAILURE
        }
    }
}
