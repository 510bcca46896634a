use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use bfg_core::classify::{classify, repeated_neighbour_degree};
use bfg_core::gen::{fixture, generate, EdgePattern, GenSpec};
use bfg_core::metrics::{degree_extremes, degrees, order, size, total_degrees, DegreeExtremes};
use bfg_core::transform::complement;
use bfg_core::verify::{check, search_counterexamples, Theorem, Verdict};
use bfg_core::{Bipolar, BipolarFuzzyGraph, Scalar, SignedSum, VertexId};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::format::{parse_graph_bytes, write_graph};

const DEFAULT_GRID: &str = "0.1,0.2,0.3";

#[derive(Parser)]
#[command(name = "bfg", version, about = "Bipolar fuzzy graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order, size, per-vertex degree and total degree, extremes.
    Metrics {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Regularity and irregularity predicates.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Complement, written canonically to -o (or stdout).
    Complement {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs theorem checkers on a graph. A failing theorem is a result, not an error.
    Verify {
        file: PathBuf,
        /// handshake, thm1..thm6, thm4-forward, thm4-converse, complement-remark, or all.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        json: bool,
    },
    /// Seeded graph generation.
    Generate {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        /// Edge probability for random graphs.
        #[arg(long, default_value = "0.5")]
        p: String,
        #[arg(long, value_enum, default_value_t = Pattern::Constant)]
        pattern: Pattern,
        /// Edge values: `g` for (g,-g) or `pos:neg`, comma separated.
        #[arg(long, default_value = DEFAULT_GRID)]
        grid: String,
        /// Vertex membership `pos:neg` for even-cycle and constant-vertex.
        #[arg(long)]
        vertex: Option<String>,
        /// Base shape for constant-vertex.
        #[arg(long, value_enum, default_value_t = Base::Random)]
        base: Base,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Counterexample search over generated graphs.
    Search {
        #[arg(long, value_parser = parse_theorem)]
        theorem: Theorem,
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        budget: u64,
        /// Value levels g in [0,1]; edges take (g,-g).
        #[arg(long, default_value = DEFAULT_GRID)]
        grid: String,
        /// Counterexamples to print.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long)]
        json: bool,
    },
    /// Writes a reference fixture.
    Fixtures {
        #[arg(long, value_parser = ["F1", "F2", "F3", "F4", "F5"])]
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Random,
    EvenCycle,
    ConstantVertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Pattern {
    Constant,
    Alternating,
}

#[derive(Clone, Copy, ValueEnum)]
enum Base {
    Random,
    EvenCycle,
}

fn parse_theorem(s: &str) -> Result<Theorem, String> {
    s.parse().map_err(|e: bfg_core::Error| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 1,
        }
    }
}

impl From<bfg_core::Error> for Failure {
    fn from(e: bfg_core::Error) -> Failure {
        Failure::Domain(e.to_string())
    }
}

/// Result of one invocation: exit code and captured streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: Vec<u8>,
    pub stderr: Vec<u8>,
}

impl CliOutput {
    pub fn stdout_text(&self) -> String {
        String::from_utf8_lossy(&self.stdout).into_owned()
    }

    pub fn stderr_text(&self) -> String {
        String::from_utf8_lossy(&self.stderr).into_owned()
    }
}

/// Runs one command; `args` excludes the program name.
pub fn run_cli<I, S>(args: I) -> CliOutput
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once("bfg".into()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string().into_bytes();
            return if e.use_stderr() {
                CliOutput { code: 2, stdout: Vec::new(), stderr: text }
            } else {
                CliOutput { code: 0, stdout: text, stderr: Vec::new() }
            };
        }
    };
    match run(cli.command) {
        Ok(stdout) => CliOutput { code: 0, stdout: stdout.into_bytes(), stderr: Vec::new() },
        Err(f) => {
            let code = f.code();
            let (Failure::Usage(msg) | Failure::Domain(msg)) = f;
            CliOutput { code, stdout: Vec::new(), stderr: format!("bfg: {msg}\n").into_bytes() }
        }
    }
}

fn run(command: Command) -> Result<String, Failure> {
    match command {
        Command::Metrics { file, json } => metrics(&load(&file)?, json),
        Command::Classify { file, json } => classification(&load(&file)?, json),
        Command::Complement { file, output } => emit(&write_graph(&complement(&load(&file)?)), output.as_deref()),
        Command::Verify { file, theorem, json } => {
            let theorems = theorem_selection(&theorem)?;
            let g = load(&file)?;
            let verdicts: Vec<Verdict> = theorems.into_iter().map(|t| check(t, &g)).collect();
            Ok(verify_report(&verdicts, json))
        }
        Command::Generate { kind, n, seed, p, pattern, grid, vertex, base, output } => {
            let edge_probability = parse_probability(&p)?;
            let grid = parse_bipolar_grid(&grid)?;
            let vertex = vertex.as_deref().map(parse_pair).transpose()?;
            let pattern = match pattern {
                Pattern::Constant => EdgePattern::Constant,
                Pattern::Alternating => EdgePattern::Alternating,
            };
            let random = || GenSpec::Random { n, edge_probability, grid: grid.clone(), seed };
            let cycle = |vertex| GenSpec::EvenCycle { n, pattern, grid: grid.clone(), vertex, seed };
            let spec = match (kind, base) {
                (Kind::Random, _) => random(),
                (Kind::EvenCycle, _) => cycle(vertex),
                (Kind::ConstantVertex, Base::Random) => GenSpec::ConstantVertex { base: Box::new(random()), vertex },
                (Kind::ConstantVertex, Base::EvenCycle) => {
                    GenSpec::ConstantVertex { base: Box::new(cycle(None)), vertex }
                }
            };
            emit(&write_graph(&generate(&spec)?), output.as_deref())
        }
        Command::Search { theorem, max_n, seed, budget, grid, limit, json } => {
            let levels = parse_levels(&grid)?;
            let found = search_counterexamples(theorem, max_n, &levels, seed, budget)?;
            Ok(search_report(theorem, budget, &found, limit, json))
        }
        Command::Fixtures { name, output } => {
            let g = fixture(&name).ok_or_else(|| Failure::Usage(format!("unknown fixture {name}")))?;
            emit(&write_graph(&g), output.as_deref())
        }
    }
}

fn load(path: &Path) -> Result<BipolarFuzzyGraph, Failure> {
    let bytes = std::fs::read(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    parse_graph_bytes(&bytes).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

/// Writes `text` to `output`, or returns it for stdout.
fn emit(text: &str, output: Option<&Path>) -> Result<String, Failure> {
    match output {
        None => Ok(text.to_string()),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn theorem_selection(arg: &str) -> Result<Vec<Theorem>, Failure> {
    match arg {
        "all" => Ok(Theorem::ALL.to_vec()),
        "thm4" => Ok(vec![Theorem::DistinctDegreesForward, Theorem::DistinctDegreesConverse]),
        other => other.parse().map(|t| vec![t]).map_err(|e: bfg_core::Error| Failure::Usage(e.to_string())),
    }
}

fn parse_probability(s: &str) -> Result<Scalar, Failure> {
    let p: Scalar = s.parse().map_err(|e: bfg_core::Error| Failure::Usage(format!("--p: {e}")))?;
    if p < Scalar::ZERO || p > Scalar::ONE {
        return Err(Failure::Usage(format!("--p: {p} is outside [0,1]")));
    }
    Ok(p)
}

fn parse_pair(s: &str) -> Result<Bipolar, Failure> {
    let result = match s.split_once(':') {
        Some((pos, neg)) => Bipolar::parse(pos, neg),
        None => s.parse::<Scalar>().and_then(|g| Bipolar::new(g, -g)),
    };
    result.map_err(|e| Failure::Usage(format!("value {s:?}: {e}")))
}

fn parse_bipolar_grid(s: &str) -> Result<Vec<Bipolar>, Failure> {
    s.split(',').map(|v| parse_pair(v.trim())).collect()
}

fn parse_levels(s: &str) -> Result<Vec<Scalar>, Failure> {
    s.split(',')
        .map(|v| v.trim().parse().map_err(|e: bfg_core::Error| Failure::Usage(format!("--grid {v:?}: {e}"))))
        .collect()
}

#[derive(Serialize)]
struct VertexMetrics<'a> {
    id: &'a VertexId,
    membership: Bipolar,
    degree: SignedSum,
    total_degree: SignedSum,
}

#[derive(Serialize)]
struct MetricsReport<'a> {
    order: SignedSum,
    size: SignedSum,
    extremes: Option<DegreeExtremes>,
    vertices: Vec<VertexMetrics<'a>>,
}

fn metrics(g: &BipolarFuzzyGraph, json: bool) -> Result<String, Failure> {
    let (d, td) = (degrees(g), total_degrees(g));
    let report = MetricsReport {
        order: order(g),
        size: size(g),
        extremes: degree_extremes(g).ok(),
        vertices: g
            .vertices()
            .map(|(v, b)| VertexMetrics { id: v, membership: b, degree: d[v], total_degree: td[v] })
            .collect(),
    };
    if json {
        return Ok(to_json(&report));
    }
    let mut out = String::new();
    writeln!(out, "order {}", report.order).unwrap();
    writeln!(out, "size {}", report.size).unwrap();
    if let Some(x) = report.extremes {
        writeln!(out, "min_degree {}", x.min).unwrap();
        writeln!(out, "max_degree {}", x.max).unwrap();
    }
    for v in &report.vertices {
        writeln!(out, "vertex {} membership {} degree {} total_degree {}", v.id, v.membership, v.degree, v.total_degree)
            .unwrap();
    }
    Ok(out)
}

fn classification(g: &BipolarFuzzyGraph, json: bool) -> Result<String, Failure> {
    let r = classify(g);
    if json {
        return Ok(to_json(&r));
    }
    let opt = |v: Option<SignedSum>| v.map_or_else(|| "none".to_string(), |d| d.to_string());
    let mut out = String::new();
    writeln!(out, "complete={}", r.complete).unwrap();
    writeln!(out, "strong={}", r.strong).unwrap();
    writeln!(out, "connected={}", r.connected).unwrap();
    writeln!(out, "regular={}", opt(r.regularity.regular)).unwrap();
    writeln!(out, "totally_regular={}", opt(r.regularity.totally_regular)).unwrap();
    writeln!(out, "irregular={}", r.irregular).unwrap();
    writeln!(out, "neighbourly_irregular={}", r.neighbourly_irregular).unwrap();
    writeln!(out, "totally_irregular={}", r.totally_irregular).unwrap();
    writeln!(out, "neighbourly_totally_irregular={}", r.neighbourly_totally_irregular).unwrap();
    write!(out, "highly_irregular={}", r.highly_irregular).unwrap();
    // Name the offending vertex: "highly irregular" is easy to misread as a
    // per-vertex-count property rather than a pairwise one.
    if let Some(w) = repeated_neighbour_degree(g) {
        write!(out, " (pairwise: {} has neighbours {} and {} of equal degree {})", w.vertex, w.first, w.second, w.degree)
            .unwrap();
    }
    out.push('\n');
    Ok(out)
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    verdicts: &'a [Verdict],
}

fn verify_report(verdicts: &[Verdict], json: bool) -> String {
    if json {
        return to_json(&VerifyReport { verdicts });
    }
    let mut out = String::new();
    for v in verdicts {
        write_verdict(&mut out, v);
    }
    out
}

fn write_verdict(out: &mut String, v: &Verdict) {
    writeln!(out, "{} {}: {}", v.theorem, v.outcome, v.note).unwrap();
    if let Some(w) = &v.witness {
        if !w.vertices.is_empty() {
            let ids: Vec<&str> = w.vertices.iter().map(VertexId::as_str).collect();
            writeln!(out, "  witness {}", ids.join(",")).unwrap();
        }
        for l in &w.values {
            writeln!(out, "  {} {}", l.label, l.value).unwrap();
        }
    }
}

#[derive(Serialize)]
struct Found<'a> {
    index: u64,
    verdict: &'a Verdict,
    graph: String,
}

#[derive(Serialize)]
struct SearchReport<'a> {
    theorem: Theorem,
    budget: u64,
    failures: usize,
    counterexamples: Vec<Found<'a>>,
}

fn search_report(
    theorem: Theorem,
    budget: u64,
    found: &[bfg_core::verify::Counterexample],
    limit: usize,
    json: bool,
) -> String {
    let report = SearchReport {
        theorem,
        budget,
        failures: found.len(),
        counterexamples: found
            .iter()
            .take(limit)
            .map(|c| Found { index: c.index, verdict: &c.verdict, graph: write_graph(&c.graph) })
            .collect(),
    };
    if json {
        return to_json(&report);
    }
    let mut out = String::new();
    writeln!(out, "theorem {theorem}").unwrap();
    writeln!(out, "candidates {budget}").unwrap();
    writeln!(out, "failures {}", report.failures).unwrap();
    for c in &report.counterexamples {
        writeln!(out, "\ncounterexample {}", c.index).unwrap();
        write_verdict(&mut out, c.verdict);
        for line in c.graph.lines() {
            writeln!(out, "  | {line}").unwrap();
        }
    }
    out
}
