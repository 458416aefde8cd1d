use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linsyz::check::{check_property, CheckOutcome, Method, Property, Verdict};
use linsyz::complex::{cm_shape_report, is_cohen_macaulay, is_shellable, is_vertex_decomposable_pure};
use linsyz::generators;
use linsyz::graph::{build_syzygy_graph, classify_shape, has_linear_relations_combinatorial, GraphShape};
use linsyz::oracle::betti_table;
use linsyz::text::{format_complex, format_ideal, parse_complex, parse_ideal};
use linsyz::verify::{run_suite, Suite};
use linsyz::{Caps, Error, FieldSpec, MonomialIdeal, SimplicialComplex};

mod report;

use report::{betti_json, digest, one_based, render_text, Report};

#[derive(Parser)]
#[command(name = "linsyz", version, about = "Linear syzygy graphs of squarefree monomial ideals")]
struct Cli {
    /// Coefficient field: `rat` or `gf:p`.
    #[arg(long, global = true, default_value = "rat")]
    field: FieldSpec,
    /// Maximum variable count for the Betti oracle.
    #[arg(long, global = true, env = "LINSYZ_CAP_N")]
    cap_n: Option<usize>,
    /// Maximum generator/facet count for Scarf and shelling enumeration.
    #[arg(long, global = true, env = "LINSYZ_CAP_M")]
    cap_m: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print the structured report as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Syzygy graph, pruned triangles and shape.
    Graph(FileArg),
    /// Graded Betti table.
    Betti(FileArg),
    /// Decide a property by criterion, by exact computation, or both.
    Check {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, default_value = "linear-resolution")]
        property: Vec<Property>,
        #[arg(long, default_value = "auto")]
        method: Method,
    },
    /// Cohen-Macaulay, shellability and vertex-decomposability of a complex.
    Complex {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum, default_value = "all")]
        report: ComplexReport,
    },
    /// Print an ideal or complex from a named family.
    Gen(GenArgs),
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 20)]
        count: usize,
    },
}

#[derive(Args)]
struct FileArg {
    /// Input file, or `-` for stdin.
    file: PathBuf,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComplexReport {
    Cm,
    Shellable,
    VertexDecomposable,
    Shape,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    PathCycle,
    PathLine,
    CycleFamily,
    RandomTree,
    RandomLine,
    Random,
    RandomComplex,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: Family,
    #[arg(long)]
    n: usize,
    /// Path length for path ideals.
    #[arg(long)]
    t: Option<usize>,
    /// Generator or facet count for random families.
    #[arg(long)]
    m: Option<usize>,
    /// Generator degree (`random`) or facet size (`random-complex`).
    #[arg(long)]
    d: Option<usize>,
    /// Keep the tree criterion satisfied while growing a random tree.
    #[arg(long)]
    nested: bool,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<(Value, bool), Failure>;

fn caps(cli: &Cli) -> Caps {
    let mut c = Caps::default();
    if let Some(n) = cli.cap_n {
        c.oracle_vars = n;
    }
    if let Some(m) = cli.cap_m {
        c.scarf_gens = m;
        c.shelling_facets = m;
    }
    c
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut s = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(e.to_string()))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(s)
}

fn ideal_input(path: &PathBuf) -> Result<(MonomialIdeal, Value), Failure> {
    let src = read_input(path)?;
    let ideal = parse_ideal(&src)?;
    let info = json!({
        "digest": digest(src.as_bytes()),
        "n": ideal.n(),
        "m": ideal.len(),
        "was_minimal": ideal.was_minimal(),
        "generators": ideal.gens().iter().map(|g| g.support()).collect::<Vec<_>>(),
    });
    Ok((ideal, info))
}

fn complex_input(path: &PathBuf) -> Result<(SimplicialComplex, Value), Failure> {
    let src = read_input(path)?;
    let complex = parse_complex(&src)?;
    let info = json!({
        "digest": digest(src.as_bytes()),
        "n": complex.n(),
        "facets": complex.facets().iter().map(|f| f.support()).collect::<Vec<_>>(),
        "pure": complex.is_pure(),
    });
    Ok((complex, info))
}

fn shape_json(shape: &GraphShape) -> Value {
    match shape {
        GraphShape::Line { order } | GraphShape::Cycle { order } => {
            json!({ "name": shape.name(), "order": one_based(order) })
        }
        _ => json!({ "name": shape.name() }),
    }
}

fn verdict_json(v: &Verdict) -> Value {
    json!({
        "holds": v.holds,
        "source": v.source,
        "reason": v.reason,
        "certificate": v.certificate.as_deref().map(one_based),
    })
}

fn outcome_json(o: &CheckOutcome) -> Value {
    json!({
        "holds": o.holds,
        "method": o.method.to_string(),
        "criterion": o.criterion.as_ref().map(verdict_json),
        "exact": o.exact.as_ref().map(verdict_json),
        "agree": o.agree,
    })
}

fn cmd_graph(file: &FileArg) -> Outcome {
    let (ideal, info) = ideal_input(&file.file)?;
    let mut r = Report::new("graph", json!({ "file": file.file }));
    r.set("input", info);
    let g = build_syzygy_graph(&ideal)?;
    let edges: Vec<Vec<usize>> = g.edges().iter().map(|&(a, b)| vec![a + 1, b + 1]).collect();
    let pruned: Vec<Value> = g
        .pruned_edges()
        .iter()
        .map(|p| json!({ "edge": one_based(&[p.edge.0, p.edge.1]), "triangle": one_based(&[p.triangle.0, p.triangle.1, p.triangle.2]) }))
        .collect();
    r.set(
        "graph",
        json!({
            "vertices": g.vertex_count(),
            "edges": edges,
            "pruned": pruned,
            "shape": shape_json(&classify_shape(&g)),
            "connected": g.is_connected(),
        }),
    );
    let cert = has_linear_relations_combinatorial(&ideal)?;
    r.verdict(
        "linear-relations",
        json!({
            "holds": cert.violating_pair.is_none(),
            "source": "pair subgraph connectivity",
            "certificate": cert.violating_pair.map(|(a, b)| vec![a + 1, b + 1]),
        }),
    );
    Ok((r.finish(0.0), false))
}

fn cmd_betti(cli: &Cli, file: &FileArg) -> Outcome {
    let (ideal, info) = ideal_input(&file.file)?;
    let mut r = Report::new("betti", json!({ "file": file.file, "field": cli.field.to_string() }));
    r.set("input", info);
    let table = betti_table(&ideal, cli.field, &caps(cli))?;
    if let Some(d) = ideal.degree() {
        r.verdict("linear-resolution", json!({ "holds": table.is_linear(d), "source": "betti oracle" }));
        r.verdict("linear-relations", json!({ "holds": table.has_linear_relations(d), "source": "betti oracle" }));
    }
    r.set("betti", betti_json(&table));
    Ok((r.finish(0.0), false))
}

fn cmd_check(cli: &Cli, file: &FileArg, properties: &[Property], method: Method) -> Outcome {
    let (ideal, info) = ideal_input(&file.file)?;
    let names: Vec<&str> = properties.iter().map(|p| p.name()).collect();
    let mut r = Report::new(
        "check",
        json!({ "file": file.file, "property": names, "method": method.to_string(), "field": cli.field.to_string() }),
    );
    r.set("input", info);
    let mut disagreement = false;
    for &p in properties {
        let o = check_property(&ideal, p, method, cli.field, &caps(cli))?;
        disagreement |= o.is_disagreement();
        r.verdict(p.name(), outcome_json(&o));
    }
    Ok((r.finish(0.0), disagreement))
}

fn cmd_complex(cli: &Cli, file: &FileArg, which: ComplexReport) -> Outcome {
    let (complex, info) = complex_input(&file.file)?;
    let caps = caps(cli);
    let name = match which {
        ComplexReport::Cm => "cm",
        ComplexReport::Shellable => "shellable",
        ComplexReport::VertexDecomposable => "vertex-decomposable",
        ComplexReport::Shape => "shape",
        ComplexReport::All => "all",
    };
    let mut r = Report::new("complex", json!({ "file": file.file, "report": name, "field": cli.field.to_string() }));
    r.set("input", info);
    let cm = |r: &mut Report| -> Result<(), Failure> {
        let v = is_cohen_macaulay(&complex, cli.field, &caps)?;
        r.verdict("cohen-macaulay", json!({ "holds": v.cohen_macaulay, "reason": v.reason }));
        Ok(())
    };
    let shell = |r: &mut Report| -> Result<(), Failure> {
        let order = is_shellable(&complex, &caps)?;
        r.verdict(
            "shellable",
            json!({ "holds": order.is_some(), "certificate": order.as_deref().map(one_based), "source": "shelling order search" }),
        );
        Ok(())
    };
    let vd = |r: &mut Report| -> Result<(), Failure> {
        let holds = is_vertex_decomposable_pure(&complex)?;
        r.verdict("vertex-decomposable", json!({ "holds": holds, "source": "dual variable-decomposability" }));
        Ok(())
    };
    let shape = |r: &mut Report| -> Result<(), Failure> {
        let rep = cm_shape_report(&complex, cli.field, &caps)?;
        r.set(
            "shape",
            json!({
                "facet_graph": shape_json(&rep.shape),
                "condition": rep.condition.as_ref().map(|c| json!({
                    "holds": c.holds,
                    "reason": c.reason,
                    "certificate": c.witness.as_deref().map(one_based),
                })),
                "equivalences_hold": rep.equivalences_hold,
                "pair_subcomplexes_connected": rep.pair_subcomplexes_connected,
            }),
        );
        Ok(())
    };
    match which {
        ComplexReport::Cm => cm(&mut r)?,
        ComplexReport::Shellable => shell(&mut r)?,
        ComplexReport::VertexDecomposable => vd(&mut r)?,
        ComplexReport::Shape => shape(&mut r)?,
        ComplexReport::All => {
            cm(&mut r)?;
            if complex.is_pure() {
                shell(&mut r)?;
                vd(&mut r)?;
                shape(&mut r)?;
            }
        }
    }
    Ok((r.finish(0.0), false))
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::Lib(Error::Input(format!("this family needs --{flag}"))))
}

enum Generated {
    Ideal(MonomialIdeal),
    Complex(SimplicialComplex),
}

fn cmd_gen(cli: &Cli, g: &GenArgs) -> Result<(Value, Generated), Failure> {
    let out = match g.family {
        Family::PathCycle => Generated::Ideal(generators::path_ideal_cycle(g.n, need(g.t, "t")?)?),
        Family::PathLine => Generated::Ideal(generators::path_ideal_line(g.n, need(g.t, "t")?)?),
        Family::CycleFamily => Generated::Ideal(generators::cycle_family(g.n)?),
        Family::RandomTree => Generated::Ideal(generators::random_tree_ideal_with(g.n, need(g.m, "m")?, cli.seed, g.nested)?),
        Family::RandomLine => Generated::Ideal(generators::random_line_ideal(g.n, need(g.m, "m")?, cli.seed)?),
        Family::Random => Generated::Ideal(generators::random_ideal(g.n, need(g.m, "m")?, need(g.d, "d")?, cli.seed)?),
        Family::RandomComplex => {
            Generated::Complex(generators::random_pure_complex(g.n, need(g.m, "m")?, need(g.d, "d")?, cli.seed)?)
        }
    };
    let family = g.family.to_possible_value().map(|p| p.get_name().to_string()).unwrap_or_default();
    let args = json!({ "family": family, "n": g.n, "t": g.t, "m": g.m, "d": g.d, "nested": g.nested, "seed": cli.seed });
    let mut r = Report::new("gen", args);
    let text = match &out {
        Generated::Ideal(i) => format_ideal(i),
        Generated::Complex(c) => format_complex(c),
    };
    r.set("output", json!({ "digest": digest(text.as_bytes()), "text": text }));
    Ok((r.finish(0.0), out))
}

fn cmd_verify(cli: &Cli, suite: Suite, count: usize) -> Outcome {
    let mut r = Report::new(
        "verify",
        json!({ "suite": suite.name(), "count": count, "seed": cli.seed, "field": cli.field.to_string() }),
    );
    let rep = run_suite(suite, count, cli.seed, cli.field, &caps(cli))?;
    let instances: Vec<Value> = rep
        .instances
        .iter()
        .map(|i| {
            json!({
                "index": i.index + 1,
                "family": i.family,
                "input": i.input,
                "skipped": i.skipped,
                "values": i.values,
                "violations": i.violations,
            })
        })
        .collect();
    r.set(
        "suite",
        json!({
            "name": suite.name(),
            "instances": instances,
            "disagreements": rep.disagreements,
            "skipped": rep.skipped,
        }),
    );
    r.verdict(
        "all-predicates-agree",
        json!({ "holds": rep.passed(), "reason": format!("{} of {} instances disagree", rep.disagreements, count) }),
    );
    Ok((r.finish(0.0), !rep.passed()))
}

fn with_timing(mut report: Value, start: Instant) -> Value {
    if let Some(t) = report.get_mut("timings") {
        *t = json!({ "elapsed_ms": (start.elapsed().as_secs_f64() * 1000.0 * 1000.0).round() / 1000.0 });
    }
    report
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let start = Instant::now();
    let result = match &cli.command {
        Command::Graph(f) => cmd_graph(f),
        Command::Betti(f) => cmd_betti(&cli, f),
        Command::Check { file, property, method } => cmd_check(&cli, file, property, *method),
        Command::Complex { file, report } => cmd_complex(&cli, file, *report),
        Command::Verify { suite, count } => cmd_verify(&cli, *suite, *count),
        Command::Gen(g) => match cmd_gen(&cli, g) {
            Ok((report, out)) => {
                if cli.json {
                    println!("{}", serde_json::to_string_pretty(&with_timing(report, start)).expect("json"));
                } else {
                    match out {
                        Generated::Ideal(i) => print!("{}", format_ideal(&i)),
                        Generated::Complex(c) => print!("{}", format_complex(&c)),
                    }
                }
                return ExitCode::SUCCESS;
            }
            Err(e) => Err(e),
        },
    };
    match result {
        Ok((report, disagreement)) => {
            let report = with_timing(report, start);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("json"));
            } else {
                print!("{}", render_text(&report));
            }
            if disagreement {
                eprintln!("linsyz: criterion and exact computation disagree");
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Lib(e @ Error::Cap { .. })) => {
            eprintln!("linsyz: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("linsyz: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("linsyz: {e}");
            ExitCode::from(2)
        }
    }
}
