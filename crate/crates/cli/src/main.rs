use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use haar_cli::{
    run_scan, run_target, Cache, Context, ScanOptions, TargetParams, VerificationReport, TARGETS,
};
use haar_core::aut::automorphism_search;
use haar_core::{atlas, Graph};

#[derive(Parser)]
#[command(
    name = "haarlab",
    version,
    about = "Symmetry of Haar graphs: verification targets and scans"
)]
struct Cli {
    /// Verdict cache (JSONL). Defaults to $HAARLAB_CACHE_DIR/verdicts.jsonl.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Disable the cache even if $HAARLAB_CACHE_DIR is set.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Write the report as JSON to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification target, or `all`.
    Verify {
        target: String,
        /// Values of n (comma-separated).
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        /// Primes p (comma-separated).
        #[arg(long, value_delimiter = ',')]
        p: Vec<usize>,
    },
    /// Classify every Haar graph H(G, S) with 1 in S.
    Scan {
        group: String,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        max_size: Option<usize>,
        /// Stop at the first non-Cayley graph.
        #[arg(long)]
        find_non_cayley: bool,
        /// Write graph6 files into this directory.
        #[arg(long)]
        export_graph6: Option<PathBuf>,
    },
    /// Print a catalog group as JSON.
    Atlas { name: String },
    /// Automorphism group of a graph6 graph (argument or stdin).
    Aut { graph6: Option<String> },
}

fn context(cli: &Cli) -> Result<Context, String> {
    let path = if cli.no_cache {
        None
    } else {
        cli.cache.clone().or_else(Cache::default_path)
    };
    let cache = match path {
        Some(p) => {
            Some(Cache::open(&p).map_err(|e| format!("cannot open cache {}: {e}", p.display()))?)
        }
        None => None,
    };
    Ok(Context::new(cache, cli.jobs.max(1)))
}

fn emit(cli: &Cli, value: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    match &cli.json {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn finish_reports(
    cli: &Cli,
    ctx: &Context,
    reports: Vec<VerificationReport>,
) -> Result<bool, String> {
    let ok = reports.iter().all(VerificationReport::all_pass);
    for r in &reports {
        print!("{}", r.render());
    }
    println!(
        "automorphism computations: {}, cache hits: {}",
        ctx.aut_computations(),
        ctx.cache_hits()
    );
    if let Some(path) = &cli.json {
        let value = if reports.len() == 1 {
            serde_json::to_value(&reports[0])
        } else {
            serde_json::to_value(&reports)
        }
        .map_err(|e| e.to_string())?;
        let text = serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?;
        std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(ok)
}

fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Verify { target, n, p } => {
            let ctx = context(cli)?;
            let params = TargetParams {
                n: n.clone(),
                p: p.clone(),
            };
            let names: Vec<&str> = if target == "all" {
                TARGETS.to_vec()
            } else {
                vec![target.as_str()]
            };
            let mut reports = Vec::new();
            for name in names {
                reports.push(run_target(&ctx, name, &params).map_err(|e| e.to_string())?);
            }
            finish_reports(cli, &ctx, reports)
        }
        Command::Scan {
            group,
            connected,
            max_size,
            find_non_cayley,
            export_graph6,
        } => {
            let ctx = context(cli)?;
            let opts = ScanOptions {
                connected_only: *connected,
                max_size: *max_size,
                find_non_cayley: *find_non_cayley,
                export_graph6: export_graph6.clone(),
            };
            let report = run_scan(&ctx, group, &opts).map_err(|e| e.to_string())?;
            finish_reports(cli, &ctx, vec![report])
        }
        Command::Atlas { name } => {
            let g = atlas(name).map_err(|e| e.to_string())?;
            emit(cli, &g.to_json())?;
            Ok(true)
        }
        Command::Aut { graph6 } => {
            let text = match graph6 {
                Some(t) if t != "-" => t.clone(),
                _ => {
                    let mut s = String::new();
                    std::io::stdin()
                        .read_to_string(&mut s)
                        .map_err(|e| e.to_string())?;
                    s
                }
            };
            let graph = Graph::from_graph6(text.trim()).map_err(|e| e.to_string())?;
            let aut = automorphism_search(&graph, None, haar_core::aut::DEFAULT_NODE_BUDGET)
                .map_err(|e| e.to_string())?;
            let gens: Vec<Vec<u32>> = aut.generators.iter().map(|g| g.images().to_vec()).collect();
            emit(
                cli,
                &serde_json::json!({
                    "vertices": graph.order(),
                    "order": aut.group.order().to_string(),
                    "generators": gens,
                    "orbits": aut.group.orbits(),
                    "nodes": aut.nodes,
                }),
            )?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
