//! `hosoya`: compute Hosoya indices, build named families, enumerate
//! unicyclic graphs, and run the verification checks.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input or parameters,
//! 3 the chosen method cannot handle the input, 4 internal inconsistency.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hosoya_core::edge_list;
use hosoya_core::enumerate::{self, Unicyclic};
use hosoya_core::families::{FamilyParams, FamilySpec};
use hosoya_core::hosoya::{
    hosoya, hosoya_bruteforce, hosoya_fast, hosoya_recursive, matching_polynomial, matching_polynomial_bruteforce,
    CountError, MatchingPolynomial,
};
use hosoya_core::verify::{self, CheckKind, CheckResult, RunParams};
use hosoya_core::{BigNat, Graph};

#[derive(Parser)]
#[command(name = "hosoya", version, about = "Hosoya index tools for unicyclic graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Auto,
    Brute,
    Recursive,
    Fast,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Graph,
    Value,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Tables,
    Theorem,
    Bound,
    GirthMax,
    SecondMax,
    Chain,
    Slide,
    Claims,
    Identities,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Hosoya index (and optionally matching numbers) of edge-list graphs.
    Compute {
        /// Edge-list file, or `-` for standard input. May hold several
        /// records separated by `%` lines.
        file: PathBuf,
        /// Also print m(G,k) for k = 0..floor(n/2).
        #[arg(long)]
        polynomial: bool,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a named family member and/or report its Hosoya index.
    Family {
        /// lollipop, l1, l2, l3, l1max, l2max, l3max, uprime, udoubleprime,
        /// path, star, cycle, or pathattach.
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Base graph for pathattach.
        #[arg(long)]
        base: Option<PathBuf>,
        /// Attachment vertex for pathattach.
        #[arg(long)]
        v: Option<usize>,
        #[arg(long, value_enum, default_value_t = Emit::Value)]
        emit: Emit,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// All unicyclic graphs of order n up to isomorphism.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        girth: Option<usize>,
        #[arg(long)]
        count_only: bool,
        /// Write here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run verification checks; exits 1 if any fails.
    Verify {
        #[arg(long, value_enum)]
        check: CheckArg,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        /// Range bound (identities) or instance count (chain).
        #[arg(long)]
        max: Option<usize>,
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads; defaults to all cores.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug)]
enum CliError {
    /// A check ran and failed; the report is already printed.
    CheckFailed,
    Input(String),
    Method(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::CheckFailed => 1,
            CliError::Input(_) => 2,
            CliError::Method(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn input_err(e: impl std::fmt::Display) -> CliError {
    CliError::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::CheckFailed => {}
                CliError::Input(m) | CliError::Method(m) | CliError::Internal(m) => {
                    eprintln!("error: {m}");
                }
            }
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Compute {
            file,
            polynomial,
            method,
            format,
        } => {
            let text = read_input(&file)?;
            let graphs = edge_list::parse_stream(&text).map_err(input_err)?;
            emit(&compute(&graphs, polynomial, method, format)?, None)
        }
        Command::Family {
            name,
            n,
            k,
            s,
            t,
            l,
            base,
            v,
            emit: what,
            format,
        } => {
            let spec = if name == "pathattach" {
                let base = base.ok_or_else(|| input_err("pathattach needs --base"))?;
                let base = edge_list::parse(&read_input(&base)?).map_err(input_err)?;
                let spec = FamilySpec::PathAttach {
                    base,
                    v: v.ok_or_else(|| input_err("pathattach needs --v"))?,
                    n: n.ok_or_else(|| input_err("pathattach needs --n"))?,
                    k: k.ok_or_else(|| input_err("pathattach needs --k"))?,
                };
                spec.validate().map_err(input_err)?;
                spec
            } else {
                FamilySpec::from_tag(&name, &FamilyParams { n, k, s, t, l }).map_err(input_err)?
            };
            emit(&family(&spec, what, format)?, None)
        }
        Command::Enumerate {
            n,
            girth,
            count_only,
            output,
            format,
        } => {
            let graphs = enumerate::enumerate_unicyclic(n, girth).map_err(input_err)?;
            emit(&enumeration(n, girth, &graphs, count_only, format), output.as_deref())
        }
        Command::Verify {
            check,
            n,
            k,
            max,
            seed,
            format,
            jobs,
        } => {
            let params = RunParams { n, k, max, seed };
            let kinds: Vec<CheckKind> = match check {
                CheckArg::All => CheckKind::ALL.to_vec(),
                other => vec![kind_of(other)],
            };
            let threads = jobs.unwrap_or(0);
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Internal(e.to_string()))?;
            let results = pool.install(|| -> Result<Vec<CheckResult>> {
                let mut all = Vec::new();
                for kind in kinds {
                    // `all` runs each check's default sweep
                    let p = if check == CheckArg::All {
                        RunParams {
                            seed,
                            ..RunParams::default()
                        }
                    } else {
                        params
                    };
                    all.extend(verify::run_check(kind, &p).map_err(input_err)?);
                }
                Ok(all)
            })?;
            emit(&render_checks(&results, format), None)?;
            outcome(&results)
        }
    }
}

fn outcome(results: &[CheckResult]) -> Result<()> {
    if results.iter().all(CheckResult::passed) {
        Ok(())
    } else {
        Err(CliError::CheckFailed)
    }
}

fn kind_of(c: CheckArg) -> CheckKind {
    match c {
        CheckArg::Tables => CheckKind::Tables,
        CheckArg::Theorem => CheckKind::Theorem,
        CheckArg::Bound => CheckKind::Bound,
        CheckArg::GirthMax => CheckKind::GirthMax,
        CheckArg::SecondMax => CheckKind::SecondMax,
        CheckArg::Chain => CheckKind::Chain,
        CheckArg::Slide => CheckKind::Slide,
        CheckArg::Claims => CheckKind::Claims,
        CheckArg::Identities => CheckKind::Identities,
        CheckArg::All => unreachable!("expanded by caller"),
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(input_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| input_err(format!("{}: {e}", path.display())))
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| input_err(format!("{}: {e}", path.display()))),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}

fn method_err(e: CountError) -> CliError {
    CliError::Method(e.to_string())
}

fn count(g: &Graph, method: Method) -> Result<BigNat> {
    match method {
        Method::Auto => Ok(hosoya(g)),
        Method::Brute => hosoya_bruteforce(g).map_err(method_err),
        Method::Recursive => Ok(hosoya_recursive(g)),
        Method::Fast => hosoya_fast(g).map_err(method_err),
    }
}

fn polynomial_of(g: &Graph, method: Method) -> Result<MatchingPolynomial> {
    match method {
        Method::Brute => matching_polynomial_bruteforce(g).map_err(method_err),
        Method::Fast => {
            // same precondition as the fast count
            hosoya_fast(g).map_err(method_err)?;
            Ok(matching_polynomial(g))
        }
        Method::Auto | Method::Recursive => Ok(matching_polynomial(g)),
    }
}

fn compute(graphs: &[Graph], with_poly: bool, method: Method, format: Format) -> Result<String> {
    let mut rows = Vec::with_capacity(graphs.len());
    for g in graphs {
        let z = count(g, method)?;
        let poly = if with_poly {
            Some(polynomial_of(g, method)?)
        } else {
            None
        };
        if let Some(p) = &poly {
            if p.total() != z {
                return Err(CliError::Internal(format!(
                    "matching numbers sum to {} but Z = {z}",
                    p.total()
                )));
            }
        }
        rows.push((g, z, poly));
    }
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            for (_, z, poly) in &rows {
                out.push_str(&format!("{z}\n"));
                if let Some(p) = poly {
                    out.push_str(&format!("{p}\n"));
                }
            }
            out
        }
        Format::Json => {
            let results: Vec<Value> = rows
                .iter()
                .enumerate()
                .map(|(i, (g, z, poly))| {
                    let mut v = json!({
                        "index": i,
                        "n": g.vertex_count(),
                        "m": g.edge_count(),
                        "z": z.to_string(),
                    });
                    if let Some(p) = poly {
                        v["polynomial"] = json!(p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>());
                    }
                    v
                })
                .collect();
            pretty(&json!({ "results": results }))
        }
        Format::Csv => {
            let mut out = String::from(if with_poly {
                "index,n,m,z,polynomial\n"
            } else {
                "index,n,m,z\n"
            });
            for (i, (g, z, poly)) in rows.iter().enumerate() {
                out.push_str(&format!("{i},{},{},{z}", g.vertex_count(), g.edge_count()));
                if let Some(p) = poly {
                    out.push_str(&format!(",\"{p}\""));
                }
                out.push('\n');
            }
            out
        }
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// The index of a family member, cross-checking the closed form (when there
/// is one) against the computed value.
fn family_value(spec: &FamilySpec, g: &Graph) -> Result<(BigNat, bool)> {
    let computed = hosoya(g);
    match spec.closed_form_z() {
        Ok(closed) => {
            consistent(&closed, &computed, spec)?;
            Ok((closed, true))
        }
        Err(_) => Ok((computed, false)),
    }
}

fn consistent(closed: &BigNat, computed: &BigNat, spec: &FamilySpec) -> Result<()> {
    if closed == computed {
        Ok(())
    } else {
        Err(CliError::Internal(format!(
            "closed form {closed} disagrees with computed {computed} for {spec}"
        )))
    }
}

fn family(spec: &FamilySpec, what: Emit, format: Format) -> Result<String> {
    let g = spec.build().map_err(input_err)?;
    let (z, closed) = family_value(spec, &g)?;
    let show_graph = what != Emit::Value;
    let show_value = what != Emit::Graph;
    Ok(match format {
        Format::Text => {
            let mut out = String::new();
            if show_graph {
                out.push_str(&edge_list::write(&g));
            }
            match (show_graph, show_value) {
                (true, true) => out.push_str(&format!("# Z = {z}\n")),
                (false, true) => out.push_str(&format!("{z}\n")),
                _ => {}
            }
            out
        }
        Format::Json => {
            let mut v = json!({
                "family": spec.tag(),
                "label": spec.to_string(),
                "n": g.vertex_count(),
                "m": g.edge_count(),
            });
            if show_graph {
                v["edges"] = json!(g.edges());
            }
            if show_value {
                v["z"] = json!(z.to_string());
                v["closed_form"] = json!(closed);
            }
            pretty(&v)
        }
        Format::Csv => {
            let mut header = vec!["family", "label", "n", "m"];
            let mut row = vec![
                spec.tag().to_owned(),
                format!("\"{spec}\""),
                g.vertex_count().to_string(),
                g.edge_count().to_string(),
            ];
            if show_graph {
                header.push("edges");
                let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
                row.push(edges.join(" "));
            }
            if show_value {
                header.push("z");
                row.push(z.to_string());
            }
            format!("{}\n{}\n", header.join(","), row.join(","))
        }
    })
}

fn enumeration(n: usize, girth: Option<usize>, graphs: &[Unicyclic], count_only: bool, format: Format) -> String {
    match (format, count_only) {
        (Format::Text, true) => format!("{}\n", graphs.len()),
        (Format::Text, false) => edge_list::write_stream(graphs.iter().map(|u| &u.graph)),
        (Format::Json, true) => pretty(&json!({ "n": n, "girth": girth, "count": graphs.len() })),
        (Format::Json, false) => {
            let items: Vec<Value> = graphs
                .iter()
                .map(|u| json!({ "code": u.code.as_str(), "girth": u.girth, "edges": u.graph.edges() }))
                .collect();
            pretty(&json!({ "n": n, "girth": girth, "count": graphs.len(), "graphs": items }))
        }
        (Format::Csv, true) => {
            format!(
                "n,girth,count\n{n},{},{}\n",
                girth.map(|g| g.to_string()).unwrap_or_default(),
                graphs.len()
            )
        }
        (Format::Csv, false) => {
            let mut out = String::from("index,code,girth,edges\n");
            for (i, u) in graphs.iter().enumerate() {
                let edges: Vec<String> = u.graph.edges().iter().map(|(a, b)| format!("{a}-{b}")).collect();
                out.push_str(&format!("{i},{},{},{}\n", u.code, u.girth, edges.join(" ")));
            }
            out
        }
    }
}

fn render_checks(results: &[CheckResult], format: Format) -> String {
    match format {
        Format::Text => {
            let mut out: String = results.iter().map(CheckResult::render_text).collect();
            let failed = results.iter().filter(|r| !r.passed()).count();
            out.push_str(&format!("{} checks, {} failed\n", results.len(), failed));
            out
        }
        Format::Json => pretty(&json!({
            "passed": results.iter().all(CheckResult::passed),
            "checks": results,
        })),
        Format::Csv => verify::render_csv(results),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::CheckFailed.code(), 1);
        assert_eq!(CliError::Input(String::new()).code(), 2);
        assert_eq!(CliError::Method(String::new()).code(), 3);
        assert_eq!(CliError::Internal(String::new()).code(), 4);
    }

    #[test]
    fn failed_check_exits_one() {
        let ok = CheckResult::new("tables", "x");
        let mut bad = CheckResult::new("tables", "x");
        bad.fail(verify::Witness::new("injected"));
        assert!(outcome(std::slice::from_ref(&ok)).is_ok());
        assert_eq!(outcome(&[ok, bad]).unwrap_err().code(), 1);
    }

    #[test]
    fn closed_form_mismatch_is_internal() {
        let spec = FamilySpec::Cycle(5);
        let err = consistent(&BigNat::from(12u32), &BigNat::from(11u32), &spec).unwrap_err();
        assert_eq!(err.code(), 4);
        assert!(consistent(&BigNat::from(11u32), &BigNat::from(11u32), &spec).is_ok());
    }
}
