//! Command-line interface: exact spectra, integrality certificates, and
//! characterization sweeps for wheel-like graph families.
//!
//! Exit codes: 0 success, 1 closed-form/oracle mismatch in `--both` mode,
//! 2 argument or parameter error, 3 disconnected input graph.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use distint_core::{
    certify_matrix, check_no_d_integral_dumbbells, complete_bipartite, cycle, distance_laplacian,
    distance_matrix, dumbbell, dumbbell_distance_laplacian_spectrum, dumbbell_distance_spectrum,
    egw, egw_distance_spectrum, find_d_integral_egw, find_d_integral_kpp, find_d_integral_wheels,
    find_dl_integral_dumbbells, generalized_wheel, join, kpp_join_cycle_distance_spectrum,
    parse_graph6, spectrum_report_to_csv, theorem_report_to_csv, to_json_bytes,
    wheel_distance_spectrum, Error as CoreError, ExactMatrix, Graph, GraphDescriptor, SearchRange,
    Spectrum, SpectrumReport, TheoremReport, DEFAULT_TOL,
};

/// Largest graph the matrix oracle will materialize; the closed forms have
/// no such bound (they are symbolic in the parameters).
const ORACLE_ORDER_CAP: usize = 100_000;

#[derive(Parser)]
#[command(
    name = "distint",
    version,
    about = "Exact distance spectra, integrality certificates, and \
             characterization sweeps for wheel-like graph families"
)]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Worker threads for parallel sweeps (default: available parallelism)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Tolerance when cross-validating closed-form against oracle spectra
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum MatrixKind {
    /// Distance matrix
    D,
    /// Distance Laplacian (transmission minus distance)
    Dl,
}

impl MatrixKind {
    fn name(self) -> &'static str {
        match self {
            MatrixKind::D => "distance",
            MatrixKind::Dl => "distance_laplacian",
        }
    }

    fn of(self, g: &Graph) -> distint_core::Result<ExactMatrix> {
        match self {
            MatrixKind::D => distance_matrix(g),
            MatrixKind::Dl => distance_laplacian(g),
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    /// Generalized wheel: m independent apexes joined to an n-cycle
    Wheel,
    /// a disjoint edgeless m-vertex groups joined to an n-cycle
    Egw,
    /// Balanced complete bipartite K_{p,p} joined to an n-cycle
    Kpp,
    /// Two wheels with matched apexes
    Dumbbell,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form and/or oracle spectrum of one family member
    Spectrum(SpectrumArgs),
    /// Integrality certificate for one graph6-encoded connected graph
    Check(CheckArgs),
    /// Reproduce one integrality characterization by Diophantine sweep
    /// plus brute-force matrix oracle
    Search(SearchArgs),
    /// Certify every graph6 line of a file and count the integral graphs
    Corpus(CorpusArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long, value_enum)]
    family: FamilyKind,

    /// Comma-separated parameters: m=..,n=.. (wheel, dumbbell),
    /// a=..,m=..,n=.. (egw), p=..,n=.. (kpp)
    #[arg(long)]
    params: String,

    #[arg(long, value_enum, default_value_t = MatrixKind::D)]
    matrix: MatrixKind,

    /// Evaluate the closed form only (no matrix is built)
    #[arg(long, conflicts_with_all = ["oracle", "both"])]
    closed_form: bool,

    /// Run the exact matrix oracle only
    #[arg(long, conflicts_with = "both")]
    oracle: bool,

    /// Cross-validate the closed form against the oracle (the default)
    #[arg(long)]
    both: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// graph6 encoding of the graph
    #[arg(long)]
    graph6: String,

    #[arg(long, value_enum, default_value_t = MatrixKind::D)]
    matrix: MatrixKind,
}

#[derive(Args)]
struct SearchArgs {
    /// Which characterization to reproduce: 1 wheels (distance), 2 apex
    /// groups (distance), 4 balanced bipartite joins (distance),
    /// 5 dumbbells (distance), 6 dumbbells (distance Laplacian)
    #[arg(long, value_parser = ["1", "2", "4", "5", "6"])]
    theorem: String,

    /// Bound on the swept parameter (m for 1/5/6, a*m for 2, p for 4)
    #[arg(long)]
    max: u64,

    /// Override the brute-force verification box's parameter bound
    #[arg(long)]
    oracle_max: Option<u64>,
}

#[derive(Args)]
struct CorpusArgs {
    /// File with one graph6 string per line (blank lines are skipped)
    #[arg(long)]
    file: PathBuf,

    #[arg(long, value_enum, default_value_t = MatrixKind::D)]
    matrix: MatrixKind,
}

/// A failed command: message for stderr plus the process exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Failure {
        let code = match &e {
            CoreError::Disconnected => 3,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn param_err(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(k) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(k).build_global() {
            eprintln!("error: could not size the thread pool: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(output) => {
            let mut out = std::io::stdout();
            if out.write_all(&output).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Vec<u8>, Failure> {
    match &cli.command {
        Command::Spectrum(a) => spectrum_cmd(a, cli),
        Command::Check(a) => check_cmd(a, cli),
        Command::Search(a) => search_cmd(a, cli),
        Command::Corpus(a) => corpus_cmd(a, cli),
    }
}

// ----- spectrum -------------------------------------------------------

/// Fully validated family member.
enum FamilyInstance {
    Wheel { m: usize, n: usize },
    Egw { a: usize, m: usize, n: usize },
    Kpp { p: usize, n: usize },
    Dumbbell { m: usize, n: usize },
}

impl FamilyInstance {
    fn resolve(kind: FamilyKind, params: &str) -> Result<FamilyInstance, Failure> {
        let mut map = parse_params(params)?;
        let (family, keys): (&str, &[&str]) = match kind {
            FamilyKind::Wheel => ("wheel", &["m", "n"]),
            FamilyKind::Egw => ("egw", &["a", "m", "n"]),
            FamilyKind::Kpp => ("kpp", &["p", "n"]),
            FamilyKind::Dumbbell => ("dumbbell", &["m", "n"]),
        };
        let mut take = |key: &str| -> Result<usize, Failure> {
            let v = map.remove(key).ok_or_else(|| {
                param_err(format!(
                    "family {family} needs parameters {}; '{key}' is missing",
                    keys.join(",")
                ))
            })?;
            usize::try_from(v)
                .map_err(|_| param_err(format!("parameter '{key}' is too large")))
        };
        let inst = match kind {
            FamilyKind::Wheel => FamilyInstance::Wheel {
                m: take("m")?,
                n: take("n")?,
            },
            FamilyKind::Egw => FamilyInstance::Egw {
                a: take("a")?,
                m: take("m")?,
                n: take("n")?,
            },
            FamilyKind::Kpp => FamilyInstance::Kpp {
                p: take("p")?,
                n: take("n")?,
            },
            FamilyKind::Dumbbell => FamilyInstance::Dumbbell {
                m: take("m")?,
                n: take("n")?,
            },
        };
        if let Some(extra) = map.keys().next() {
            return Err(param_err(format!(
                "unknown parameter '{extra}' for family {family} (expected {})",
                keys.join(",")
            )));
        }
        Ok(inst)
    }

    fn descriptor(&self) -> GraphDescriptor {
        match self {
            FamilyInstance::Wheel { m, n } => {
                GraphDescriptor::family("wheel", &[("m", *m as u64), ("n", *n as u64)])
            }
            FamilyInstance::Egw { a, m, n } => GraphDescriptor::family(
                "egw",
                &[("a", *a as u64), ("m", *m as u64), ("n", *n as u64)],
            ),
            FamilyInstance::Kpp { p, n } => {
                GraphDescriptor::family("kpp", &[("p", *p as u64), ("n", *n as u64)])
            }
            FamilyInstance::Dumbbell { m, n } => {
                GraphDescriptor::family("dumbbell", &[("m", *m as u64), ("n", *n as u64)])
            }
        }
    }

    fn order(&self) -> Option<usize> {
        match self {
            FamilyInstance::Wheel { m, n } => m.checked_add(*n),
            FamilyInstance::Egw { a, m, n } => a.checked_mul(*m)?.checked_add(*n),
            FamilyInstance::Kpp { p, n } => p.checked_mul(2)?.checked_add(*n),
            FamilyInstance::Dumbbell { m, n } => m.checked_add(*n)?.checked_mul(2),
        }
    }

    fn build(&self) -> Result<Graph, Failure> {
        match self.order() {
            Some(v) if v <= ORACLE_ORDER_CAP => {}
            _ => {
                return Err(param_err(format!(
                    "this family member exceeds the oracle size bound of {ORACLE_ORDER_CAP} \
                     vertices; use --closed-form"
                )))
            }
        }
        let g = match *self {
            FamilyInstance::Wheel { m, n } => generalized_wheel(m, n)?,
            FamilyInstance::Egw { a, m, n } => egw(a, m, n)?,
            FamilyInstance::Kpp { p, n } => join(&complete_bipartite(p, p)?, &cycle(n)?),
            FamilyInstance::Dumbbell { m, n } => dumbbell(m, n)?,
        };
        Ok(g)
    }

    fn closed_form(&self, matrix: MatrixKind) -> Result<Spectrum, Failure> {
        let spec = match (self, matrix) {
            (FamilyInstance::Wheel { m, n }, MatrixKind::D) => wheel_distance_spectrum(*m, *n)?,
            (FamilyInstance::Egw { a, m, n }, MatrixKind::D) => egw_distance_spectrum(*a, *m, *n)?,
            (FamilyInstance::Kpp { p, n }, MatrixKind::D) => {
                kpp_join_cycle_distance_spectrum(*p, *n)?
            }
            (FamilyInstance::Dumbbell { m, n }, MatrixKind::D) => {
                dumbbell_distance_spectrum(*m, *n)?
            }
            (FamilyInstance::Dumbbell { m, n }, MatrixKind::Dl) => {
                dumbbell_distance_laplacian_spectrum(*m, *n)?
            }
            (_, MatrixKind::Dl) => {
                return Err(param_err(
                    "no closed form is shipped for the distance Laplacian of this family; \
                     use --oracle",
                ))
            }
        };
        Ok(spec)
    }
}

fn parse_params(s: &str) -> Result<BTreeMap<String, u64>, Failure> {
    let mut map = BTreeMap::new();
    for part in s.split(',') {
        let (k, v) = part.split_once('=').ok_or_else(|| {
            param_err(format!("parameter '{part}' is not of the form key=value"))
        })?;
        let k = k.trim();
        let v: u64 = v.trim().parse().map_err(|_| {
            param_err(format!(
                "parameter '{k}' has a non-integer value '{}'",
                v.trim()
            ))
        })?;
        if map.insert(k.to_string(), v).is_some() {
            return Err(param_err(format!("parameter '{k}' given twice")));
        }
    }
    Ok(map)
}

fn spectrum_cmd(a: &SpectrumArgs, cli: &Cli) -> Result<Vec<u8>, Failure> {
    let inst = FamilyInstance::resolve(a.family, &a.params)?;
    let oracle_only = a.oracle;
    let closed_only = a.closed_form;

    let closed = if oracle_only {
        None
    } else {
        Some(inst.closed_form(a.matrix)?)
    };
    let cert = if closed_only {
        None
    } else {
        let g = inst.build()?;
        let m = a.matrix.of(&g)?;
        Some(certify_matrix(&m, DEFAULT_TOL)?)
    };

    let report = match (&closed, &cert) {
        (Some(s), None) => {
            SpectrumReport::from_closed_form(inst.descriptor(), a.matrix.name(), s)
        }
        (None, Some(c)) => {
            SpectrumReport::from_certificate(inst.descriptor(), a.matrix.name(), c)
        }
        (Some(s), Some(c)) => {
            SpectrumReport::from_both(inst.descriptor(), a.matrix.name(), s, c, cli.tol)
                .map_err(|e| Failure {
                    code: 1,
                    message: e.to_string(),
                })?
        }
        (None, None) => unreachable!("flag conflicts are rejected by the parser"),
    };
    render_spectrum(&report, cli.format)
}

fn check_cmd(a: &CheckArgs, cli: &Cli) -> Result<Vec<u8>, Failure> {
    let g = parse_graph6(&a.graph6)?;
    let m = a.matrix.of(&g)?;
    let cert = certify_matrix(&m, DEFAULT_TOL)?;
    let report =
        SpectrumReport::from_certificate(GraphDescriptor::graph6(&a.graph6), a.matrix.name(), &cert);
    render_spectrum(&report, cli.format)
}

fn search_cmd(a: &SearchArgs, cli: &Cli) -> Result<Vec<u8>, Failure> {
    let report = match a.theorem.as_str() {
        "1" => find_d_integral_wheels(a.max, a.oracle_max)?,
        "2" => find_d_integral_egw(a.max, a.oracle_max)?,
        "4" => find_d_integral_kpp(a.max, a.oracle_max)?,
        "5" => check_no_d_integral_dumbbells(a.max, a.oracle_max)?,
        "6" => find_dl_integral_dumbbells(a.max, a.oracle_max)?,
        _ => unreachable!("the parser restricts --theorem values"),
    };
    match cli.format {
        Format::Json => Ok(to_json_bytes(&report)),
        Format::Csv => Ok(theorem_report_to_csv(&report)
            .map_err(Failure::from)?
            .into_bytes()),
        Format::Plain => Ok(plain_theorem(&report).into_bytes()),
    }
}

// ----- corpus ---------------------------------------------------------

#[derive(Serialize)]
struct CorpusEntry {
    line: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    integral: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

#[derive(Serialize)]
struct CorpusReport {
    matrix: String,
    lines: usize,
    certified: usize,
    integral: usize,
    errors: usize,
    entries: Vec<CorpusEntry>,
}

fn certify_line(line: usize, s: &str, matrix: MatrixKind) -> CorpusEntry {
    let outcome = parse_graph6(s)
        .and_then(|g| Ok((g.order(), matrix.of(&g)?)))
        .and_then(|(order, m)| Ok((order, certify_matrix(&m, DEFAULT_TOL)?)));
    match outcome {
        Ok((order, cert)) => CorpusEntry {
            line,
            graph6: s.to_string(),
            order: Some(order),
            integral: Some(cert.integral),
            error: None,
        },
        Err(e) => CorpusEntry {
            line,
            graph6: s.to_string(),
            order: None,
            integral: None,
            error: Some(e.to_string()),
        },
    }
}

fn corpus_cmd(a: &CorpusArgs, cli: &Cli) -> Result<Vec<u8>, Failure> {
    let text = std::fs::read_to_string(&a.file).map_err(|e| {
        param_err(format!("could not read {}: {e}", a.file.display()))
    })?;
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let entries: Vec<CorpusEntry> = lines
        .par_iter()
        .map(|(no, s)| certify_line(*no, s, a.matrix))
        .collect();
    let report = CorpusReport {
        matrix: a.matrix.name().to_string(),
        lines: entries.len(),
        certified: entries.iter().filter(|e| e.integral.is_some()).count(),
        integral: entries.iter().filter(|e| e.integral == Some(true)).count(),
        errors: entries.iter().filter(|e| e.error.is_some()).count(),
        entries,
    };
    match cli.format {
        Format::Json => Ok(to_json_bytes(&report)),
        Format::Csv => corpus_csv(&report),
        Format::Plain => Ok(plain_corpus(&report).into_bytes()),
    }
}

fn corpus_csv(r: &CorpusReport) -> Result<Vec<u8>, Failure> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_fail = |e: csv::Error| param_err(format!("CSV serialization failed: {e}"));
    w.write_record(["line", "graph6", "order", "integral", "error"])
        .map_err(io_fail)?;
    for e in &r.entries {
        w.write_record([
            e.line.to_string(),
            e.graph6.clone(),
            e.order.map(|v| v.to_string()).unwrap_or_default(),
            e.integral.map(|v| v.to_string()).unwrap_or_default(),
            e.error.clone().unwrap_or_default(),
        ])
        .map_err(io_fail)?;
    }
    w.into_inner()
        .map_err(|e| param_err(format!("CSV flush failed: {e}")))
}

// ----- plain renderers ------------------------------------------------

fn render_spectrum(r: &SpectrumReport, format: Format) -> Result<Vec<u8>, Failure> {
    match format {
        Format::Json => Ok(to_json_bytes(r)),
        Format::Csv => Ok(spectrum_report_to_csv(r).map_err(Failure::from)?.into_bytes()),
        Format::Plain => Ok(plain_spectrum(r).into_bytes()),
    }
}

fn descriptor_line(d: &GraphDescriptor) -> String {
    match d {
        GraphDescriptor::Family { family, params } => {
            let kv: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            format!("{family} {}", kv.join(" "))
        }
        GraphDescriptor::Graph6 { graph6 } => format!("graph6 {graph6}"),
    }
}

fn plain_spectrum(r: &SpectrumReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "graph: {}", descriptor_line(&r.graph));
    let _ = writeln!(s, "matrix: {}", r.matrix);
    let _ = writeln!(s, "order: {}", r.order);
    let _ = writeln!(s, "integral: {}", r.integral);
    if let Some(w) = &r.non_integral_witness {
        let _ = writeln!(s, "witness: {w}");
    }
    if let Some(entries) = &r.closed_form {
        let _ = writeln!(s, "closed form:");
        for e in entries {
            let _ = writeln!(
                s,
                "  {}  x{}  [{}]",
                e.display, e.multiplicity, e.provenance
            );
        }
    }
    if let Some(roots) = &r.integer_roots {
        let _ = writeln!(s, "integer roots:");
        for e in roots {
            let _ = writeln!(s, "  {}  x{}", e.value, e.multiplicity);
        }
    }
    if let Some(rem) = &r.remainder {
        if rem.len() > 1 {
            let _ = writeln!(s, "remainder coefficients (ascending): [{}]", rem.join(", "));
        }
    }
    if let Some(f) = &r.float_eigenvalues {
        let joined: Vec<String> = f.iter().map(|v| format!("{v}")).collect();
        let _ = writeln!(s, "float eigenvalues: {}", joined.join(" "));
    }
    if let Some(d) = r.max_deviation {
        let _ = writeln!(s, "max deviation: {d:e}");
    }
    s
}

fn range_line(r: &SearchRange) -> String {
    let ns: Vec<String> = r.n_values.iter().map(|v| v.to_string()).collect();
    format!("{} <= {}, n in [{}]", r.parameter, r.max, ns.join(", "))
}

fn tuple_line(t: &[u64]) -> String {
    let parts: Vec<String> = t.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(", "))
}

fn plain_theorem(r: &TheoremReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem: {} ({})", r.theorem, r.tuple_labels.join(", "));
    let _ = writeln!(
        s,
        "diophantine sweep: {} -> {} hits",
        range_line(&r.diophantine_range),
        r.diophantine_hits.len()
    );
    for hit in &r.diophantine_hits {
        let _ = writeln!(s, "  {}", tuple_line(hit));
    }
    let _ = writeln!(
        s,
        "oracle box: {} -> {} hits",
        range_line(&r.oracle_range),
        r.oracle_hits.len()
    );
    for hit in &r.oracle_hits {
        let _ = writeln!(s, "  {}", tuple_line(hit));
    }
    let _ = writeln!(s, "agreement: {}", r.agreement);
    if let Some(cands) = &r.first_condition_candidates {
        let _ = writeln!(s, "first-condition-only candidates: {}", cands.len());
        for c in cands {
            let _ = writeln!(s, "  {}", tuple_line(c));
        }
    }
    if !r.notes.is_empty() {
        let _ = writeln!(s, "notes:");
        for note in &r.notes {
            let _ = writeln!(s, "  - {note}");
        }
    }
    s
}

fn plain_corpus(r: &CorpusReport) -> String {
    let mut s = String::new();
    for e in &r.entries {
        match (&e.integral, &e.error) {
            (Some(i), _) => {
                let _ = writeln!(
                    s,
                    "line {}: {} order={} integral={}",
                    e.line,
                    e.graph6,
                    e.order.unwrap_or(0),
                    i
                );
            }
            (None, Some(err)) => {
                let _ = writeln!(s, "line {}: {} error: {}", e.line, e.graph6, err);
            }
            (None, None) => unreachable!("every entry carries a verdict or an error"),
        }
    }
    let _ = writeln!(
        s,
        "integral: {} of {} certified ({} lines, {} errors)",
        r.integral, r.certified, r.lines, r.errors
    );
    s
}
