//! Dispatch and certification logic behind the `rdsolve` binary.

use std::path::Path;

use restrained_domination::block::{is_block_graph, solve_block_graph};
use restrained_domination::chain::solve_chain;
use restrained_domination::cograph::solve_cograph;
use restrained_domination::graph::{restrained_violation, ViolationKind};
use restrained_domination::oracle::{brute_force_gamma_r, OracleLimit};
use restrained_domination::randomized::randomized_rds;
use restrained_domination::threshold::solve_threshold;
use restrained_domination::{Error, Graph, Method, RdsResult, VertexSet};

/// Process exit codes: parse errors, inputs no solver covers, and results
/// that fail their own certificate (a solver bug, never expected).
#[derive(Debug)]
pub enum CliError {
    Parse(String),
    Unsupported(String),
    Certificate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Unsupported(_) => 2,
            CliError::Certificate(_) => 3,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Parse(m) | CliError::Unsupported(m) | CliError::Certificate(m) => m,
        }
    }
}

fn classify_error(e: Error) -> CliError {
    match e {
        Error::Parse { .. } => CliError::Parse(e.to_string()),
        _ => CliError::Unsupported(e.to_string()),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Oracle,
    Block,
    Threshold,
    Cograph,
    Chain,
    Random,
}

#[derive(Debug)]
pub struct SolveRequest {
    pub method: MethodChoice,
    pub seed: Option<u64>,
    pub json: bool,
}

/// Outcome of a solve: the certified result, plus the seed actually used
/// when the randomized method ran.
#[derive(Debug)]
pub struct SolveOutcome {
    pub result: RdsResult,
    pub seed: Option<u64>,
}

fn random_result(g: &Graph, seed: u64) -> Result<RdsResult, Error> {
    let run = randomized_rds(g, seed)?;
    Ok(RdsResult::new(run.result, Method::Randomized))
}

/// Routes the graph to a solver. `auto` tries, in order: trivially small
/// graphs, complete graphs, block graphs, threshold graphs, cographs, chain
/// graphs, and finally the exhaustive oracle when the graph is small enough.
pub fn dispatch(g: &Graph, req: &SolveRequest) -> Result<SolveOutcome, CliError> {
    let mut seed_used = None;
    let result = match req.method {
        MethodChoice::Auto => auto_solve(g).map_err(classify_error)?,
        MethodChoice::Oracle => brute_force_gamma_r(g).map_err(classify_error)?,
        MethodChoice::Block => solve_block_graph(g).map_err(classify_error)?,
        MethodChoice::Threshold => {
            if g.n() <= 2 {
                trivial_all(g)
            } else {
                solve_threshold(g).map_err(classify_error)?
            }
        }
        MethodChoice::Cograph => solve_cograph(g).map_err(classify_error)?,
        MethodChoice::Chain => solve_chain(g).map_err(classify_error)?,
        MethodChoice::Random => {
            let seed = req.seed.unwrap_or_else(rand::random);
            seed_used = Some(seed);
            random_result(g, seed).map_err(classify_error)?
        }
    };
    certify(g, &result)?;
    Ok(SolveOutcome {
        result,
        seed: seed_used,
    })
}

fn trivial_all(g: &Graph) -> RdsResult {
    RdsResult {
        gamma_r: g.n(),
        witness: VertexSet::full(g.n()),
        method: Method::Trivial,
    }
}

fn auto_solve(g: &Graph) -> Result<RdsResult, Error> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() <= 2 {
        return Ok(trivial_all(g));
    }
    if g.is_complete() {
        let witness: VertexSet = [0usize].into_iter().collect();
        return Ok(RdsResult::new(witness, Method::Trivial));
    }
    if is_block_graph(g)? {
        return solve_block_graph(g);
    }
    if restrained_domination::threshold::recognize_threshold(g).is_ok() {
        return solve_threshold(g);
    }
    if restrained_domination::cograph::build_cotree(g).is_ok() {
        return solve_cograph(g);
    }
    if restrained_domination::chain::recognize_chain(g).is_ok() {
        return solve_chain(g);
    }
    if g.n() <= OracleLimit::default().max_n {
        return brute_force_gamma_r(g);
    }
    Err(Error::Invalid(
        "graph class not supported, use --method random".into(),
    ))
}

/// Every result printed by the CLI must pass the certificate first.
pub fn certify(g: &Graph, r: &RdsResult) -> Result<(), CliError> {
    if r.witness.len() != r.gamma_r {
        return Err(CliError::Certificate(format!(
            "internal certificate failure: witness size {} does not match gamma_r {}",
            r.witness.len(),
            r.gamma_r
        )));
    }
    if let Some((v, kind)) = restrained_violation(g, &r.witness) {
        return Err(CliError::Certificate(format!(
            "internal certificate failure: vertex {} has {}",
            v + 1,
            kind.describe()
        )));
    }
    Ok(())
}

/// Verdict of checking a witness file against a graph.
#[derive(Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub valid: bool,
    /// First violating vertex (1-based) and the clause it violates.
    pub violation: Option<(usize, &'static str)>,
}

pub fn check(g: &Graph, witness: &VertexSet) -> Result<CheckReport, CliError> {
    if let Some(v) = witness.iter().find(|&v| v >= g.n()) {
        return Err(CliError::Parse(format!(
            "witness vertex {} out of range for {} vertices",
            v + 1,
            g.n()
        )));
    }
    Ok(match restrained_violation(g, witness) {
        None => CheckReport {
            valid: true,
            violation: None,
        },
        Some((v, kind)) => CheckReport {
            valid: false,
            violation: Some((v + 1, kind.describe())),
        },
    })
}

pub fn read_to_string(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_graph_file(path: &Path) -> Result<Graph, CliError> {
    Graph::parse(&read_to_string(path)?).map_err(|e| CliError::Parse(e.to_string()))
}

/// Human-readable rendering of a result; `seed` is echoed for randomized
/// runs.
pub fn render_human(r: &RdsResult, seed: Option<u64>) -> String {
    let members: Vec<String> = r.witness.iter().map(|v| (v + 1).to_string()).collect();
    let mut out = format!(
        "gamma_r = {}\nwitness = {{{}}}\nmethod = {}\n",
        r.gamma_r,
        members.join(", "),
        r.method
    );
    if let Some(s) = seed {
        out.push_str(&format!("seed = {s}\n"));
    }
    out
}

pub fn render_json(r: &RdsResult, seed: Option<u64>) -> String {
    match seed {
        None => r.to_json(),
        Some(s) => {
            let mut v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
            v["seed"] = serde_json::json!(s);
            v.to_string()
        }
    }
}

pub use restrained_domination as core;

/// Clause names as used in `check` output, mirroring the certificate.
pub fn violation_clause(kind: ViolationKind) -> &'static str {
    kind.describe()
}
