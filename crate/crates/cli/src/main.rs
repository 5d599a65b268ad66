//! cubelat: generate cubical polytope instances, validate files, run
//! connectivity queries, and execute the verification suite.
//!
//! Exit codes are stable: 0 success, 1 claim failure, 2 input error,
//! 3 work-limit refusal.

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cubelat_core::connectivity::{
    enumerate_separators_of_size, vertex_connectivity, ConnectivityError, EnumerationLimits,
};
use cubelat_core::polytope::{
    chain_of_cubes, connected_sum, hypercube, load_instance, vertex_census, CubicalPolytope,
};
use cubelat_core::verify::{run_claim, Outcome, VerifyConfig, INSTANCE_CLAIMS};

const EXIT_OK: i32 = 0;
const EXIT_CLAIM_FAILURE: i32 = 1;
const EXIT_INPUT_ERROR: i32 = 2;
const EXIT_WORK_LIMIT: i32 = 3;

#[derive(Parser)]
#[command(name = "cubelat", version, about = "Cubical polytope connectivity workbench")]
struct Cli {
    /// Budget for exhaustive subset sweeps.
    #[arg(long, global = true, env = "CUBELAT_WORK_LIMIT", default_value_t = 100_000_000)]
    work_limit: u64,
    /// Worker threads for subset sweeps.
    #[arg(long, global = true, env = "CUBELAT_JOBS", default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an instance file.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Load and validate an instance file.
    Validate { instance: PathBuf },
    /// Vertex connectivity and degree census of an instance.
    Connectivity { instance: PathBuf },
    /// All separators of a given size, classified.
    Separators {
        instance: PathBuf,
        #[arg(long)]
        size: usize,
        /// Keep at most this many separator reports.
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run verification claims against an instance; one JSON line each.
    Verify {
        instance: PathBuf,
        /// Claim names, or ALL.
        #[arg(default_values_t = [String::from("ALL")])]
        claims: Vec<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Summarize a JSON-lines report produced by `verify`.
    Report { report: PathBuf },
}

#[derive(Subcommand)]
enum Family {
    /// The d-cube.
    Cube {
        d: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// n copies of the d-cube glued in a path along opposite facets.
    Chain {
        d: usize,
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The connected sum of two instance files along chosen facets.
    Connsum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, default_value_t = 0)]
        facet_a: usize,
        #[arg(long, default_value_t = 0)]
        facet_b: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let cfg = VerifyConfig { work_limit: cli.work_limit, cap: 100_000, jobs: cli.jobs };
    match cli.command {
        Command::Generate { family } => generate(family),
        Command::Validate { instance } => validate(&instance),
        Command::Connectivity { instance } => connectivity(&instance),
        Command::Separators { instance, size, cap, out } => {
            separators(&instance, size, cap, &cfg, out.as_deref())
        }
        Command::Verify { instance, claims, out } => verify(&instance, &claims, &cfg, out.as_deref()),
        Command::Report { report } => summarize(&report),
    }
}

fn fail_input(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    EXIT_INPUT_ERROR
}

fn emit(value: &Value, out: Option<&Path>) -> i32 {
    let text = format!("{:#}\n", value);
    match out {
        None => {
            print!("{text}");
            EXIT_OK
        }
        Some(path) => match std::fs::write(path, text) {
            Ok(()) => EXIT_OK,
            Err(e) => fail_input(format!("cannot write {}: {e}", path.display())),
        },
    }
}

fn generate(family: Family) -> i32 {
    let (built, out) = match family {
        Family::Cube { d, out } => (hypercube(d), out),
        Family::Chain { d, n, out } => (chain_of_cubes(d, n), out),
        Family::Connsum { a, b, facet_a, facet_b, out } => {
            let left = match load_instance(&a) {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            };
            let right = match load_instance(&b) {
                Ok(p) => p,
                Err(e) => return fail_input(e),
            };
            (connected_sum(&left, facet_a, &right, facet_b, None), out)
        }
    };
    match built {
        Ok(p) => emit(&p.to_instance_json(), out.as_deref()),
        Err(e) => fail_input(e),
    }
}

fn validate(path: &Path) -> i32 {
    match load_instance(path) {
        Ok(p) => emit(&summary(&p), None),
        Err(e) => fail_input(e),
    }
}

fn summary(p: &CubicalPolytope) -> Value {
    json!({
        "valid": true,
        "d": p.d(),
        "vertices": p.vertex_count(),
        "edges": p.edge_count(),
        "facets": p.facet_count(),
    })
}

fn connectivity(path: &Path) -> i32 {
    let p = match load_instance(path) {
        Ok(p) => p,
        Err(e) => return fail_input(e),
    };
    let census = vertex_census(&p);
    let kappa = vertex_connectivity(&p.graph());
    let value = json!({
        "d": p.d(),
        "vertices": p.vertex_count(),
        "edges": p.edge_count(),
        "delta": census.delta,
        "kappa": kappa,
        "simple_vertices": census.simple_vertices.len(),
    });
    emit(&value, None)
}

fn separators(path: &Path, size: usize, cap: usize, cfg: &VerifyConfig, out: Option<&Path>) -> i32 {
    let p = match load_instance(path) {
        Ok(p) => p,
        Err(e) => return fail_input(e),
    };
    let graph = p.graph();
    let kappa = vertex_connectivity(&graph);
    if size < kappa {
        return fail_input(format!(
            "no separators of size {size} exist: the connectivity is {kappa}"
        ));
    }
    let limits = EnumerationLimits { work_limit: cfg.work_limit, cap, jobs: cfg.jobs };
    match enumerate_separators_of_size(&graph, size, &limits) {
        Err(e @ ConnectivityError::WorkLimitExceeded { .. }) => {
            let value = json!({
                "instance": path.display().to_string(),
                "error": "work-limit",
                "detail": e.to_string(),
                "truncated": true,
            });
            let _ = emit(&value, out);
            EXIT_WORK_LIMIT
        }
        Err(e) => fail_input(e),
        Ok(sweep) => {
            let reports: Vec<Value> = sweep
                .reports
                .iter()
                .map(|r| serde_json::to_value(r).expect("report serializes"))
                .collect();
            let value = json!({
                "instance": path.display().to_string(),
                "size": size,
                "kappa": kappa,
                "subsets_checked": sweep.subsets_checked,
                "count": sweep.found,
                "truncated": sweep.truncated,
                "separators": reports,
            });
            emit(&value, out)
        }
    }
}

fn verify(path: &Path, claims: &[String], cfg: &VerifyConfig, out: Option<&Path>) -> i32 {
    let p = match load_instance(path) {
        Ok(p) => p,
        Err(e) => return fail_input(e),
    };
    let selected: Vec<&str> = if claims.iter().any(|c| c == "ALL") {
        INSTANCE_CLAIMS.to_vec()
    } else {
        let mut selected = Vec::new();
        for claim in claims {
            if !INSTANCE_CLAIMS.contains(&claim.as_str()) {
                return fail_input(format!(
                    "unknown claim {claim:?}; known claims: {}",
                    INSTANCE_CLAIMS.join(", ")
                ));
            }
            selected.push(claim.as_str());
        }
        selected
    };
    let mut lines = String::new();
    let mut any_failed = false;
    let mut any_indeterminate = false;
    for claim in selected {
        let report = run_claim(claim, &p, cfg).expect("claim name already validated");
        any_failed |= report.outcome == Outcome::Fail;
        any_indeterminate |= report.outcome == Outcome::Indeterminate;
        lines.push_str(&report.to_json().to_string());
        lines.push('\n');
    }
    let write_result = match out {
        None => std::io::stdout().write_all(lines.as_bytes()).map_err(|e| e.to_string()),
        Some(path) => std::fs::write(path, &lines).map_err(|e| e.to_string()),
    };
    if let Err(e) = write_result {
        return fail_input(format!("cannot write report: {e}"));
    }
    if any_indeterminate {
        eprintln!("note: some claims were indeterminate under the work limit");
    }
    if any_failed {
        EXIT_CLAIM_FAILURE
    } else {
        EXIT_OK
    }
}

fn summarize(path: &Path) -> i32 {
    let text = match std::fs::read_to_string(path) {
        Ok(text) => text,
        Err(e) => return fail_input(format!("{}: {e}", path.display())),
    };
    let mut counts: std::collections::BTreeMap<&str, usize> = Default::default();
    let mut failures: Vec<String> = Vec::new();
    let mut instances: BTreeSet<String> = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(e) => return fail_input(format!("line {}: {e}", lineno + 1)),
        };
        let claim = value["claim"].as_str().unwrap_or("?").to_string();
        if let Some(instance) = value["instance"].as_str() {
            instances.insert(instance.to_string());
        }
        let status = match &value["passed"] {
            Value::Bool(true) => "pass",
            Value::Bool(false) => "fail",
            Value::String(s) if s == "indeterminate" => "indeterminate",
            Value::String(s) if s == "n/a" => "n/a",
            other => return fail_input(format!("line {}: bad passed field {other}", lineno + 1)),
        };
        *counts.entry(status).or_default() += 1;
        let ms = value["ms"].as_f64().unwrap_or(0.0);
        println!("{status:>13}  {claim:<28} {ms:>9.1} ms");
        if status == "fail" {
            failures.push(claim);
        }
    }
    println!(
        "\n{} pass, {} fail, {} indeterminate, {} n/a across {} instance(s)",
        counts.get("pass").unwrap_or(&0),
        counts.get("fail").unwrap_or(&0),
        counts.get("indeterminate").unwrap_or(&0),
        counts.get("n/a").unwrap_or(&0),
        instances.len(),
    );
    if failures.is_empty() {
        EXIT_OK
    } else {
        eprintln!("failed claims: {}", failures.join(", "));
        EXIT_CLAIM_FAILURE
    }
}
