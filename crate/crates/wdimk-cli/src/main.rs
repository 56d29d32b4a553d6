//! Command-line front end: compute, verify, construct, export, and the
//! table/conjecture harnesses.
//!
//! Exit codes: 0 proved/valid, 1 invalid certificate or table mismatch,
//! 2 incumbent-only (budget ran out before optimality was proved),
//! 3 infeasible k, 64 usage errors, 65 unreadable or unparsable input.
//! Data payloads on stdout are byte-deterministic; timing lives in a
//! one-line JSON object on stderr.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wdimk::graph::{make_from_edges, make_hamming, make_hypercube, parse_edge_list, Graph};
use wdimk::ilp::{build_model, export_lp, wdim_ilp, Formulation, IlpError, SolveOptions};
use wdimk::report::{parse_expected_csv, run_conjecture, run_table, ReportError, TableMethod};
use wdimk::resolving::{
    construct_diagonal, construct_xt, construct_xt_prime, construct_yn, kappa_bruteforce,
    kappa_hamming_formula, set_json, verify, wdim1_knkn, wdim_exact_bruteforce,
    wdim_formula_knkn, GraphJson, Method, ResolvingError, SearchOptions, VertexSet, WdimResult,
};
use wdimk::graph::VertexId;

const EXIT_OK: u8 = 0;
const EXIT_INVALID: u8 = 1;
const EXIT_INCUMBENT: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_INPUT: u8 = 65;

#[derive(Parser)]
#[command(
    name = "wdimk",
    about = "Weak k-resolving sets and the weak k-metric dimension of graphs",
    version
)]
struct Cli {
    /// Output format for table and conjecture reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Node budget for exact searches (overrides WDIMK_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Solver telemetry on standard error.
    #[arg(long, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Largest k for which a weak k-resolving set exists.
    Kappa {
        /// hamming:N,M | hamming:N1,...,NR | hypercube:R | file:PATH
        graph: String,
    },
    /// Compute wdim_k with a chosen method.
    Compute {
        graph: String,
        #[arg(short)]
        k: u32,
        /// auto | formula | brute | ilp:fs | ilp:fs- | ilp:fgh
        #[arg(long, default_value = "auto")]
        method: String,
    },
    /// Verify a vertex set against a threshold k.
    Verify {
        graph: String,
        /// Coordinate pairs (one per line) or a JSON array of pairs.
        set_file: PathBuf,
        #[arg(short)]
        k: u32,
    },
    /// Emit a constructive family and its certificate.
    Construct {
        family: Family,
        #[arg(long)]
        n: u16,
        /// Number of leading diagonals left out (xt / xtprime).
        #[arg(long)]
        t: Option<u16>,
        /// Diagonal index for the diagonal family.
        #[arg(long)]
        i: Option<u16>,
    },
    /// Write a formulation to an LP-format file.
    Export {
        graph: String,
        #[arg(short)]
        k: u32,
        /// fs | fs- | fgh
        #[arg(long)]
        form: String,
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Fill a (k, m) grid of wdim_k(K_n [] K_m) values.
    Table {
        #[arg(long)]
        n: u16,
        /// Inclusive, e.g. 5..10
        #[arg(long)]
        m_range: String,
        /// Inclusive, e.g. 2..10
        #[arg(long)]
        k_range: String,
        #[arg(long, default_value = "ilp:fgh")]
        method: String,
        /// Expected-values CSV; any proved cell that disagrees is a mismatch.
        #[arg(long)]
        expected: Option<PathBuf>,
    },
    /// Compare exact optima to the conjectured rectangle formula.
    Conjecture {
        #[arg(long)]
        n: u16,
        #[arg(long)]
        m_range: String,
        #[arg(long)]
        k_range: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Diagonal,
    Xt,
    Xtprime,
    Yn,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let code = run(cli);
    eprintln!(
        "{{\"meta\":{{\"elapsed_ms\":{}}}}}",
        start.elapsed().as_millis()
    );
    ExitCode::from(code)
}

/// Early return carrying an exit code and a message for stderr.
struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn run(cli: Cli) -> u8 {
    let opts = solve_options(&cli);
    let result = match cli.command {
        Command::Kappa { ref graph } => cmd_kappa(graph),
        Command::Compute {
            ref graph,
            k,
            ref method,
        } => cmd_compute(graph, k, method, &opts),
        Command::Verify {
            ref graph,
            ref set_file,
            k,
        } => cmd_verify(graph, set_file, k),
        Command::Construct { family, n, t, i } => cmd_construct(family, n, t, i),
        Command::Export {
            ref graph,
            k,
            ref form,
            ref out,
        } => cmd_export(graph, k, form, out),
        Command::Table {
            n,
            ref m_range,
            ref k_range,
            ref method,
            ref expected,
        } => cmd_table(
            n,
            m_range,
            k_range,
            method,
            expected.as_deref(),
            cli.format,
            &opts,
        ),
        Command::Conjecture {
            n,
            ref m_range,
            ref k_range,
        } => cmd_conjecture(n, m_range, k_range, cli.format, &opts),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("wdimk: {}", f.message);
            f.code
        }
    }
}

fn solve_options(cli: &Cli) -> SolveOptions {
    let mut opts = SolveOptions {
        verbose: cli.verbose,
        ..Default::default()
    };
    let env_budget = std::env::var("WDIMK_BUDGET")
        .ok()
        .and_then(|v| v.parse::<u64>().ok());
    if let Some(b) = cli.budget.or(env_budget) {
        opts.node_budget = b;
    }
    opts
}

enum GraphSpec {
    Hamming(Vec<u16>),
    Hypercube(u16),
    File(PathBuf),
}

fn parse_graph_spec(s: &str) -> Result<GraphSpec, Failure> {
    let (kind, rest) = s
        .split_once(':')
        .ok_or_else(|| fail(EXIT_USAGE, format!("bad graph spec '{s}': missing ':'")))?;
    match kind {
        "hamming" => {
            let dims: Result<Vec<u16>, _> = rest.split(',').map(|p| p.trim().parse()).collect();
            match dims {
                Ok(dims) if !dims.is_empty() => Ok(GraphSpec::Hamming(dims)),
                _ => Err(fail(
                    EXIT_USAGE,
                    format!("bad hamming dims '{rest}': expected comma-separated integers"),
                )),
            }
        }
        "hypercube" => rest
            .trim()
            .parse::<u16>()
            .map(GraphSpec::Hypercube)
            .map_err(|_| fail(EXIT_USAGE, format!("bad hypercube dimension '{rest}'"))),
        "file" => Ok(GraphSpec::File(PathBuf::from(rest))),
        other => Err(fail(EXIT_USAGE, format!("unknown graph kind '{other}'"))),
    }
}

fn build_graph(spec: &GraphSpec) -> Result<Graph, Failure> {
    match spec {
        GraphSpec::Hamming(dims) => make_hamming(dims).map_err(|e| fail(EXIT_USAGE, e.to_string())),
        GraphSpec::Hypercube(r) => {
            make_hypercube(*r).map_err(|e| fail(EXIT_USAGE, e.to_string()))
        }
        GraphSpec::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
            let (n, edges) = parse_edge_list(&text).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
            make_from_edges(n, &edges).map_err(|e| fail(EXIT_INPUT, e.to_string()))
        }
    }
}

fn load_graph(spec_str: &str) -> Result<Graph, Failure> {
    build_graph(&parse_graph_spec(spec_str)?)
}

fn print_json(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn cmd_kappa(spec_str: &str) -> Result<u8, Failure> {
    let g = load_graph(spec_str)?;
    let (kappa, method) = match g.dims() {
        Some(dims) => {
            let mut sorted = dims.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            // A single clique factor has no product formula; fall back.
            match kappa_hamming_formula(&sorted) {
                Ok(v) if g.vertex_count() <= 400 => {
                    let brute = kappa_bruteforce(&g) as u64;
                    if brute != v {
                        return Err(fail(
                            EXIT_INVALID,
                            format!("formula kappa {v} disagrees with brute force {brute}"),
                        ));
                    }
                    (v, "formula+brute")
                }
                Ok(v) => (v, "formula"),
                Err(_) => (kappa_bruteforce(&g) as u64, "brute"),
            }
        }
        None => (kappa_bruteforce(&g) as u64, "brute"),
    };
    print_json(&json!({
        "graph": GraphJson::of(&g),
        "kappa": kappa,
        "method": method,
    }));
    Ok(EXIT_OK)
}

fn wdim_json(g: &Graph, r: &WdimResult, formula_tag: Option<&str>) -> serde_json::Value {
    let mut value = json!({
        "graph": GraphJson::of(g),
        "k": r.k,
        "value": r.value,
        "witness": r.witness.as_ref().map(|w| set_json(g, w)),
        "method": r.method,
        "proved": r.proved,
    });
    if let Some(tag) = formula_tag {
        value["formula"] = json!(tag);
    }
    value
}

/// κ by the product formula when the graph carries coordinates, brute force
/// otherwise.
fn kappa_of(g: &Graph) -> u64 {
    match g.dims() {
        Some(dims) => {
            let mut sorted = dims.to_vec();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            kappa_hamming_formula(&sorted).unwrap_or_else(|_| kappa_bruteforce(g) as u64)
        }
        None => kappa_bruteforce(g) as u64,
    }
}

fn cmd_compute(spec_str: &str, k: u32, method: &str, opts: &SolveOptions) -> Result<u8, Failure> {
    let g = load_graph(spec_str)?;
    if k == 0 {
        return Err(fail(EXIT_USAGE, "k must be >= 1"));
    }
    let kappa = kappa_of(&g);
    if k as u64 > kappa {
        return Err(fail(
            EXIT_INFEASIBLE,
            format!("no weak {k}-resolving set exists: kappa is {kappa}"),
        ));
    }
    let (result, formula_tag) = compute_dispatch(&g, k, method, opts)?;
    print_json(&wdim_json(&g, &result, formula_tag));
    Ok(if result.proved {
        EXIT_OK
    } else {
        EXIT_INCUMBENT
    })
}

fn compute_dispatch(
    g: &Graph,
    k: u32,
    method: &str,
    opts: &SolveOptions,
) -> Result<(WdimResult, Option<&'static str>), Failure> {
    match method {
        "auto" => compute_auto(g, k, opts),
        "formula" => compute_formula(g, k),
        "brute" => Ok((compute_brute(g, k, opts)?, None)),
        "ilp:fs" => Ok((compute_ilp(g, k, Formulation::Fs, opts)?, None)),
        "ilp:fs-" => Ok((compute_ilp(g, k, Formulation::FsMinus, opts)?, None)),
        "ilp:fgh" => Ok((compute_ilp(g, k, Formulation::Fgh, opts)?, None)),
        other => Err(fail(EXIT_USAGE, format!("unknown method '{other}'"))),
    }
}

/// Formula when one is proven (square Hamming), layer ILP on other
/// two-dimensional Hamming graphs, exhaustive search elsewhere.
fn compute_auto(
    g: &Graph,
    k: u32,
    opts: &SolveOptions,
) -> Result<(WdimResult, Option<&'static str>), Failure> {
    if let Some((n, m)) = g.hamming2_dims() {
        if n == m && n >= 3 && (k == 1 || k <= 2 * n as u32) {
            // The k = 2 bases for n in {3,4,5} have no closed construction;
            // report the solver witness there.
            if k == 2 && n < 6 {
                return Ok((compute_ilp(g, k, Formulation::Fgh, opts)?, None));
            }
            return compute_formula(g, k);
        }
        return Ok((compute_ilp(g, k, Formulation::Fgh, opts)?, None));
    }
    Ok((compute_brute(g, k, opts)?, None))
}

fn compute_formula(g: &Graph, k: u32) -> Result<(WdimResult, Option<&'static str>), Failure> {
    match g.hamming2_dims() {
        Some((n, m)) if n == m => {
            let (value, tag) = if k == 1 {
                (
                    wdim1_knkn(n).map_err(|e| fail(EXIT_USAGE, e.to_string()))?,
                    "metric_dimension_square",
                )
            } else {
                (
                    wdim_formula_knkn(n, k).map_err(|e| fail(EXIT_USAGE, e.to_string()))?,
                    "square_three_case",
                )
            };
            let witness = formula_witness(g, n, k);
            Ok((
                WdimResult {
                    k,
                    value,
                    witness,
                    method: Method::Formula,
                    proved: true,
                },
                Some(tag),
            ))
        }
        _ => Err(fail(
            EXIT_USAGE,
            "method=formula needs a square two-dimensional Hamming graph",
        )),
    }
}

/// The constructive set matching the formula value, where one exists.
fn formula_witness(g: &Graph, n: u16, k: u32) -> Option<VertexSet> {
    let two_n = 2 * n as u32;
    if k == two_n {
        return Some(VertexSet::full(g));
    }
    if k == 2 && n >= 6 {
        return construct_yn(g).ok();
    }
    if k >= 4 && k.is_multiple_of(2) && k <= two_n - 2 {
        return construct_xt(g, n - (k / 2) as u16).ok();
    }
    if k >= 5 && k % 2 == 1 && k < two_n {
        return construct_xt_prime(g, n - k.div_ceil(2) as u16).ok();
    }
    None
}

fn compute_brute(g: &Graph, k: u32, opts: &SolveOptions) -> Result<WdimResult, Failure> {
    let search = SearchOptions {
        node_budget: opts.node_budget,
        ..Default::default()
    };
    wdim_exact_bruteforce(g, k, &search).map_err(|e| match e {
        ResolvingError::KExceedsKappa { .. } => fail(EXIT_INFEASIBLE, e.to_string()),
        ResolvingError::BudgetExceeded { .. } => fail(EXIT_INCUMBENT, e.to_string()),
        other => fail(EXIT_USAGE, other.to_string()),
    })
}

fn compute_ilp(
    g: &Graph,
    k: u32,
    f: Formulation,
    opts: &SolveOptions,
) -> Result<WdimResult, Failure> {
    wdim_ilp(g, k, f, None, opts).map_err(ilp_failure)
}

fn ilp_failure(e: IlpError) -> Failure {
    match e {
        IlpError::KExceedsKappa { .. } | IlpError::Infeasible => {
            fail(EXIT_INFEASIBLE, e.to_string())
        }
        IlpError::BudgetExceeded => fail(EXIT_INCUMBENT, e.to_string()),
        IlpError::KTooSmallForReduction(_) | IlpError::UnsupportedGraph => {
            fail(EXIT_USAGE, e.to_string())
        }
        other => fail(EXIT_INVALID, other.to_string()),
    }
}

fn cmd_verify(spec_str: &str, set_file: &Path, k: u32) -> Result<u8, Failure> {
    let g = load_graph(spec_str)?;
    if k == 0 {
        return Err(fail(EXIT_USAGE, "k must be >= 1"));
    }
    let text = std::fs::read_to_string(set_file)
        .map_err(|e| fail(EXIT_INPUT, format!("cannot read {}: {e}", set_file.display())))?;
    let set = parse_set(&g, &text).map_err(|msg| fail(EXIT_INPUT, msg))?;
    let cert = verify(&g, &set, k).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    let payload = serde_json::to_value(cert.to_json(&g)).expect("serializable");
    print_json(&payload);
    Ok(if cert.is_valid() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

/// Accepts either a JSON array (coordinate tuples or raw indices) or plain
/// text with one vertex per line; `#` starts a comment.
fn parse_set(g: &Graph, text: &str) -> Result<VertexSet, String> {
    let trimmed = text.trim_start();
    let coords_len = g.dims().map(<[u16]>::len);
    if trimmed.starts_with('[') {
        let value: serde_json::Value =
            serde_json::from_str(trimmed).map_err(|e| format!("bad JSON set: {e}"))?;
        let arr = value.as_array().ok_or("expected a JSON array")?;
        let mut members = Vec::with_capacity(arr.len());
        for item in arr {
            members.push(json_vertex(g, item)?);
        }
        return VertexSet::new(g, members).map_err(|e| e.to_string());
    }
    let mut members = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let nums: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|_| format!("line {}: expected integers", lineno + 1))?;
        let v = match (nums.len(), coords_len) {
            (1, _) => VertexId(nums[0]),
            (len, Some(r)) if len == r => {
                let coords: Vec<u16> = nums.iter().map(|&x| x as u16).collect();
                g.vertex_at(&coords)
                    .map_err(|e| format!("line {}: {e}", lineno + 1))?
            }
            _ => return Err(format!("line {}: wrong number of fields", lineno + 1)),
        };
        members.push(v);
    }
    VertexSet::new(g, members).map_err(|e| e.to_string())
}

fn json_vertex(g: &Graph, item: &serde_json::Value) -> Result<VertexId, String> {
    match item {
        serde_json::Value::Number(n) => {
            let idx = n.as_u64().ok_or("vertex index must be nonnegative")?;
            Ok(VertexId(idx as u32))
        }
        serde_json::Value::Array(parts) => {
            let coords: Result<Vec<u16>, String> = parts
                .iter()
                .map(|p| {
                    p.as_u64()
                        .map(|x| x as u16)
                        .ok_or_else(|| "coordinates must be integers".to_string())
                })
                .collect();
            g.vertex_at(&coords?).map_err(|e| e.to_string())
        }
        _ => Err("set entries must be indices or coordinate tuples".into()),
    }
}

fn cmd_construct(family: Family, n: u16, t: Option<u16>, i: Option<u16>) -> Result<u8, Failure> {
    let g = make_hamming(&[n, n]).map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    let out_of_range = |e: ResolvingError| fail(EXIT_USAGE, e.to_string());
    let (name, set, guaranteed_k, params): (&str, VertexSet, Option<u32>, serde_json::Value) =
        match family {
            Family::Diagonal => {
                let i = i.ok_or_else(|| fail(EXIT_USAGE, "diagonal needs --i"))?;
                let set = construct_diagonal(&g, i).map_err(out_of_range)?;
                ("diagonal", set, None, json!({ "i": i }))
            }
            Family::Xt => {
                let t = t.ok_or_else(|| fail(EXIT_USAGE, "xt needs --t"))?;
                let set = construct_xt(&g, t).map_err(out_of_range)?;
                ("xt", set, Some(2 * (n - t) as u32), json!({ "t": t }))
            }
            Family::Xtprime => {
                let t = t.ok_or_else(|| fail(EXIT_USAGE, "xtprime needs --t"))?;
                let set = construct_xt_prime(&g, t).map_err(out_of_range)?;
                (
                    "xtprime",
                    set,
                    Some(2 * (n - t) as u32 - 1),
                    json!({ "t": t }),
                )
            }
            Family::Yn => {
                let set = construct_yn(&g).map_err(out_of_range)?;
                ("yn", set, Some(2), json!({}))
            }
        };
    let certificate = match guaranteed_k {
        Some(k) => Some(verify(&g, &set, k).map_err(|e| fail(EXIT_INVALID, e.to_string()))?),
        None => None,
    };
    let valid = certificate.as_ref().map(|c| c.is_valid());
    let payload = json!({
        "family": name,
        "n": n,
        "params": params,
        "k": guaranteed_k,
        "size": set.len(),
        "set": set_json(&g, &set),
        "certificate": certificate.map(|c| serde_json::to_value(c.to_json(&g)).unwrap()),
    });
    print_json(&payload);
    Ok(if valid == Some(false) {
        EXIT_INVALID
    } else {
        EXIT_OK
    })
}

fn cmd_export(spec_str: &str, k: u32, form: &str, out: &Path) -> Result<u8, Failure> {
    let g = load_graph(spec_str)?;
    let formulation: Formulation = form.parse().map_err(|e: String| fail(EXIT_USAGE, e))?;
    let model = build_model(&g, k, formulation).map_err(ilp_failure)?;
    export_lp(&model, out).map_err(|e| fail(EXIT_INPUT, e.to_string()))?;
    print_json(&json!({
        "path": out.display().to_string(),
        "formulation": formulation,
        "variables": model.variables.len(),
        "constraints": model.constraints.len(),
    }));
    Ok(EXIT_OK)
}

fn parse_range<T: std::str::FromStr + Copy>(s: &str) -> Result<(T, T), Failure> {
    let bad = || fail(EXIT_USAGE, format!("bad range '{s}': expected A..B"));
    match s.split_once("..") {
        Some((a, b)) => {
            let lo = a.trim().parse().map_err(|_| bad())?;
            let hi = b.trim().parse().map_err(|_| bad())?;
            Ok((lo, hi))
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

fn table_method(s: &str) -> Result<TableMethod, Failure> {
    Ok(match s {
        "auto" | "ilp:fgh" => TableMethod::Ilp(Formulation::Fgh),
        "ilp:fs" => TableMethod::Ilp(Formulation::Fs),
        "ilp:fs-" => TableMethod::Ilp(Formulation::FsMinus),
        "formula" => TableMethod::Formula,
        "brute" => TableMethod::Brute,
        other => return Err(fail(EXIT_USAGE, format!("unknown method '{other}'"))),
    })
}

fn report_failure(e: ReportError) -> Failure {
    match e {
        ReportError::Ilp(e) => ilp_failure(e),
        ReportError::BadRange(msg) => fail(EXIT_USAGE, msg),
        ReportError::ExpectedCsv { .. } => fail(EXIT_INPUT, e.to_string()),
        other => fail(EXIT_USAGE, other.to_string()),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_table(
    n: u16,
    m_range: &str,
    k_range: &str,
    method: &str,
    expected_path: Option<&Path>,
    format: Format,
    opts: &SolveOptions,
) -> Result<u8, Failure> {
    let m_range = parse_range::<u16>(m_range)?;
    let k_range = parse_range::<u32>(k_range)?;
    let method = table_method(method)?;
    let expected = match expected_path {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
            Some(parse_expected_csv(&text).map_err(report_failure)?)
        }
        None => None,
    };
    let report =
        run_table(n, m_range, k_range, method, expected.as_ref(), opts).map_err(report_failure)?;
    match format {
        Format::Csv => print!("{}", report.to_csv()),
        Format::Json => print_json(&serde_json::to_value(&report).expect("serializable")),
    }
    Ok(if report.mismatches.is_empty() {
        EXIT_OK
    } else {
        EXIT_INVALID
    })
}

fn cmd_conjecture(
    n: u16,
    m_range: &str,
    k_range: &str,
    format: Format,
    opts: &SolveOptions,
) -> Result<u8, Failure> {
    let m_range = parse_range::<u16>(m_range)?;
    let k_range = parse_range::<u32>(k_range)?;
    let report = run_conjecture(n, m_range, k_range, opts).map_err(report_failure)?;
    match format {
        Format::Csv => print!("{}", report.to_csv()),
        Format::Json => print_json(&serde_json::to_value(&report).expect("serializable")),
    }
    Ok(EXIT_OK)
}
