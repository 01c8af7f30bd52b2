use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rdsolve::core::oracle::brute_force_gamma_r;
use rdsolve::core::randomized::upper_bound;
use rdsolve::core::reductions::{gen_gp_graph, gen_x3c_graph, X3cInstance};
use rdsolve::core::RdsResult;
use rdsolve::{
    certify, check, dispatch, parse_graph_file, read_to_string, render_human, render_json,
    CliError, MethodChoice, SolveRequest,
};

#[derive(Parser)]
#[command(
    name = "rdsolve",
    about = "Exact and randomized solvers for minimum restrained domination",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Oracle,
    Block,
    Threshold,
    Cograph,
    Chain,
    Random,
}

impl From<MethodArg> for MethodChoice {
    fn from(m: MethodArg) -> MethodChoice {
        match m {
            MethodArg::Auto => MethodChoice::Auto,
            MethodArg::Oracle => MethodChoice::Oracle,
            MethodArg::Block => MethodChoice::Block,
            MethodArg::Threshold => MethodChoice::Threshold,
            MethodArg::Cograph => MethodChoice::Cograph,
            MethodArg::Chain => MethodChoice::Chain,
            MethodArg::Random => MethodChoice::Random,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph file, routing to a solver by class
    Solve {
        /// Graph file in the `p edge` format
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
        /// Seed for the randomized method (defaults to entropy, echoed)
        #[arg(long)]
        seed: Option<u64>,
        /// Emit the witness JSON object instead of human-readable text
        #[arg(long)]
        json: bool,
    },
    /// Check a witness file against a graph
    Check {
        /// Graph file
        input: PathBuf,
        /// Witness JSON file as produced by `solve --json`
        witness: PathBuf,
    },
    /// Exhaustive minimum restrained dominating set (small graphs only)
    Oracle {
        input: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Generate the decision graph of an exact-cover-by-3-sets instance
    GenX3c {
        /// Instance file: `q m`, then m lines of three 1-based element ids
        input: PathBuf,
        /// Write the graph here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write a JSON role map here
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Append a three-edge pendant path to every vertex of a graph
    GenGp {
        /// Base graph file
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        roles: Option<PathBuf>,
    },
    /// Run the randomized restrained-domination algorithm once
    RandomRds {
        input: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate the probabilistic upper bound for given order and minimum degree
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        json: bool,
    },
}

fn emit_result(r: &RdsResult, seed: Option<u64>, json: bool) {
    if json {
        println!("{}", render_json(r, seed));
    } else {
        print!("{}", render_human(r, seed));
    }
}

fn write_out(path: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match path {
        None => {
            print!("{content}");
            Ok(())
        }
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", p.display()))),
    }
}

fn write_roles(path: Option<&PathBuf>, value: serde_json::Value) -> Result<(), CliError> {
    if let Some(p) = path {
        std::fs::write(p, format!("{value}\n"))
            .map_err(|e| CliError::Parse(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Command::Solve {
            input,
            method,
            seed,
            json,
        } => {
            let g = parse_graph_file(&input)?;
            let req = SolveRequest {
                method: method.into(),
                seed,
                json,
            };
            let outcome = dispatch(&g, &req)?;
            emit_result(&outcome.result, outcome.seed, json);
            Ok(())
        }
        Command::Check { input, witness } => {
            let g = parse_graph_file(&input)?;
            let r = RdsResult::from_json(&read_to_string(&witness)?)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let report = check(&g, &r.witness)?;
            match report.violation {
                None => println!("valid restrained dominating set"),
                Some((v, clause)) => println!("INVALID: vertex {v} has {clause}"),
            }
            Ok(())
        }
        Command::Oracle { input, json } => {
            let g = parse_graph_file(&input)?;
            let r = brute_force_gamma_r(&g).map_err(|e| CliError::Unsupported(e.to_string()))?;
            certify(&g, &r)?;
            emit_result(&r, None, json);
            Ok(())
        }
        Command::GenX3c { input, out, roles } => {
            let inst = X3cInstance::parse(&read_to_string(&input)?)
                .map_err(|e| CliError::Parse(e.to_string()))?;
            let rg = gen_x3c_graph(&inst);
            write_out(out.as_ref(), &rg.graph.to_dimacs())?;
            let labels: Vec<String> = rg.role_map.iter().map(|r| r.label()).collect();
            let dpeo: Vec<usize> = rg.dpeo.iter().map(|v| v + 1).collect();
            write_roles(
                roles.as_ref(),
                serde_json::json!({ "k": rg.k, "roles": labels, "dpeo": dpeo }),
            )
        }
        Command::GenGp { input, out, roles } => {
            let h = parse_graph_file(&input)?;
            let gp = gen_gp_graph(&h).map_err(|e| CliError::Parse(e.to_string()))?;
            write_out(out.as_ref(), &gp.graph.to_dimacs())?;
            let labels: Vec<String> = gp.role_map.iter().map(|r| r.label()).collect();
            write_roles(
                roles.as_ref(),
                serde_json::json!({ "base_n": gp.base_n, "roles": labels }),
            )
        }
        Command::RandomRds { input, seed, json } => {
            let g = parse_graph_file(&input)?;
            let req = SolveRequest {
                method: MethodChoice::Random,
                seed,
                json,
            };
            let outcome = dispatch(&g, &req)?;
            emit_result(&outcome.result, outcome.seed, json);
            Ok(())
        }
        Command::Bound { n, delta, json } => {
            let b = upper_bound(n, delta).map_err(|e| CliError::Unsupported(e.to_string()))?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "n": b.n,
                        "delta": b.delta,
                        "p": b.p,
                        "bound": b.bound,
                        "closed_form": b.closed_form,
                    })
                );
            } else {
                println!("n = {}", b.n);
                println!("delta = {}", b.delta);
                println!("p = {:.6}", b.p);
                println!("bound = {:.6}", b.bound);
                println!("closed_form = {:.6}", b.closed_form);
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
