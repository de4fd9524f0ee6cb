use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use rank3::autsolve::{are_isomorphic_with, automorphism_group_with, IsoOutcome, SolverOptions};
use rank3::catalog::{builtin_catalog, load_catalog, verify_all, CatalogEntry, TierFilter, Verdict};
use rank3::families::{nonzero_orbits, FamilyId};
use rank3::graphs::{from_adjacency_list, from_graph6, to_adjacency_list, to_graph6, DenseGraph};
use rank3::permgrp::{affine_perms, group_order, rank_and_subdegrees, MatrixGroupSpec, DEFAULT_SL25_SEED};

#[derive(Parser)]
#[command(name = "rank3", version, about = "Affine rank 3 graphs and their automorphism groups")]
struct Cli {
    /// Seed for randomised group searches (the sl25 orbital recipe).
    #[arg(long, global = true, default_value_t = DEFAULT_SL25_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph; prints its adjacency list unless --graph6 is given.
    Construct {
        descriptor: String,
        /// Write graph6 to this file ("-" for stdout).
        #[arg(long)]
        graph6: Option<PathBuf>,
    },
    /// Strongly regular parameters of a graph.
    Params { descriptor: String },
    /// Automorphism group order and generators.
    Aut {
        descriptor: String,
        /// Time budget in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// Also print the generators, one per line.
        #[arg(long)]
        generators: bool,
    },
    /// Decide whether two graphs are isomorphic.
    Iso {
        first: String,
        second: String,
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
    },
    /// Rank and subdegrees of the affine group of a matrix-group spec file.
    Rank { spec_file: PathBuf },
    /// Run the verification catalog.
    Verify {
        #[arg(long, value_enum, default_value_t = TierArg::Full)]
        tier: TierArg,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Solver budget per entry, in seconds.
        #[arg(long, default_value_t = 60.0)]
        budget: f64,
        /// Use this JSON list of entries instead of the built-in catalog.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Inspect the catalog.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// One line per entry.
    List {
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TierArg {
    Full,
    Slow,
    All,
}

impl From<TierArg> for TierFilter {
    fn from(t: TierArg) -> Self {
        match t {
            TierArg::Full => TierFilter::Full,
            TierArg::Slow => TierFilter::Slow,
            TierArg::All => TierFilter::All,
        }
    }
}

/// Exit statuses: 0 success, 1 a check failed, 2 bad input.
enum Failure {
    Check(String),
    Usage(String),
}

type CmdResult = Result<(), Failure>;

fn usage<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Usage(e.to_string())
}

fn budget(secs: f64) -> Result<SolverOptions, Failure> {
    Duration::try_from_secs_f64(secs)
        .map(SolverOptions::with_budget)
        .map_err(|_| Failure::Usage(format!("invalid budget {secs}")))
}

/// A family descriptor, or a file holding graph6 or an adjacency list.
fn load_graph(arg: &str, seed: u64) -> Result<DenseGraph, Failure> {
    match FamilyId::parse_with_seed(arg, seed) {
        Ok(id) => id.graph().map_err(usage),
        Err(parse_err) => {
            let path = Path::new(arg);
            if !path.is_file() {
                return Err(usage(parse_err));
            }
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{arg}: {e}")))?;
            let first = text.lines().next().unwrap_or("").trim();
            let parsed = if first.parse::<usize>().is_ok() {
                from_adjacency_list(&text)
            } else {
                from_graph6(first)
            };
            parsed.map_err(|e| usage(format!("{arg}: {e}")))
        }
    }
}

fn entries(path: Option<&Path>) -> Result<Vec<CatalogEntry>, Failure> {
    match path {
        Some(p) => load_catalog(p).map_err(usage),
        None => Ok(builtin_catalog()),
    }
}

fn run(cli: Cli) -> CmdResult {
    let seed = cli.seed;
    match cli.command {
        Command::Construct { descriptor, graph6 } => {
            let g = load_graph(&descriptor, seed)?;
            match graph6 {
                Some(out) if out.as_os_str() == "-" => println!("{}", to_graph6(&g)),
                Some(out) => {
                    std::fs::write(&out, to_graph6(&g) + "\n").map_err(|e| usage(format!("{}: {e}", out.display())))?;
                    eprintln!("{descriptor}: {} vertices, {} edges", g.order(), g.edge_count());
                }
                None => print!("{}", to_adjacency_list(&g)),
            }
        }
        Command::Params { descriptor } => {
            let g = load_graph(&descriptor, seed)?;
            match g.srg_params() {
                Ok(p) => println!("{p}"),
                Err(e) => return Err(Failure::Check(format!("{descriptor}: {e}"))),
            }
        }
        Command::Aut {
            descriptor,
            budget: secs,
            generators,
        } => {
            let g = load_graph(&descriptor, seed)?;
            let r = automorphism_group_with(&g, &budget(secs)?).map_err(|e| Failure::Check(e.to_string()))?;
            println!("order {}", r.order);
            println!("generators {}", r.generators.gens().len());
            println!(
                "base {}",
                r.base.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
            );
            println!(
                "nodes {} refinements {} leaves {} time {} ms",
                r.stats.nodes, r.stats.refinements, r.stats.leaves, r.stats.elapsed_ms
            );
            if generators {
                for h in r.generators.gens() {
                    println!("{h}");
                }
            }
        }
        Command::Iso {
            first,
            second,
            budget: secs,
        } => {
            let g = load_graph(&first, seed)?;
            let h = load_graph(&second, seed)?;
            match are_isomorphic_with(&g, &h, &budget(secs)?).map_err(|e| Failure::Check(e.to_string()))? {
                IsoOutcome::Isomorphic(map) => {
                    println!("isomorphic");
                    println!("{}", map.iter().map(u32::to_string).collect::<Vec<_>>().join(" "));
                }
                IsoOutcome::NotIsomorphic(reason) => println!("not isomorphic ({reason:?})"),
            }
        }
        Command::Rank { spec_file } => {
            let text = std::fs::read_to_string(&spec_file).map_err(|e| usage(format!("{}: {e}", spec_file.display())))?;
            let spec = MatrixGroupSpec::parse(&text).map_err(usage)?;
            let gs = affine_perms(&spec).map_err(usage)?;
            let info = rank_and_subdegrees(&gs).map_err(|e| Failure::Check(e.to_string()))?;
            let orbits = nonzero_orbits(&spec).map_err(usage)?;
            println!("degree {}", gs.degree());
            println!("group order {}", group_order(&gs));
            println!("rank {}", info.rank);
            println!(
                "subdegrees {}",
                info.subdegrees.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
            );
            println!(
                "zero stabiliser orbits {}",
                orbits.iter().map(|o| o.len().to_string()).collect::<Vec<_>>().join(" ")
            );
        }
        Command::Verify {
            tier,
            json,
            budget: secs,
            catalog,
        } => {
            let cat = entries(catalog.as_deref())?;
            let per_entry = Duration::try_from_secs_f64(secs).map_err(|_| usage(format!("invalid budget {secs}")))?;
            let run = verify_all(&cat, tier.into(), per_entry, seed);
            for r in &run.reports {
                let total: u64 = r.timings_ms.values().sum();
                let verdict = match r.verdict {
                    Verdict::Pass => "PASS",
                    Verdict::PassDowngraded => "PASS_DOWNGRADED",
                    Verdict::Fail => "FAIL",
                };
                println!("{verdict:16} {:10} {:22} {total:>7} ms", r.id, r.family);
                if r.verdict != Verdict::Pass {
                    for (name, stage) in [
                        ("construct", &r.stages.construct),
                        ("srg", &r.stages.srg),
                        ("subdegrees", &r.stages.subdegrees),
                        ("aut_order", &r.stages.aut_order),
                        ("iso_claims", &r.stages.iso_claims),
                    ] {
                        if let Some(s) = stage {
                            println!("    {name}: {:?} {}", s.status, s.detail);
                        }
                    }
                }
            }
            let s = &run.summary;
            println!(
                "total {} pass {} downgraded {} fail {}",
                s.total, s.pass, s.pass_downgraded, s.fail
            );
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&run).expect("reports serialise");
                std::fs::write(&path, text + "\n").map_err(|e| usage(format!("{}: {e}", path.display())))?;
            }
            if run.any_fail() {
                return Err(Failure::Check(format!("{} catalog entries failed", s.fail)));
            }
        }
        Command::Catalog {
            action: CatalogAction::List { catalog },
        } => {
            let mut out = std::io::stdout().lock();
            for e in entries(catalog.as_deref())? {
                let order = e
                    .expected_aut_order
                    .as_ref()
                    .map_or_else(|| "unknown".to_string(), |o| o.to_string());
                // A closed pipe (`| head`) just ends the listing.
                let line = writeln!(
                    out,
                    "{:10} {:22} {:>5} {:>5},{:<5} {:11} {:>14}  {}",
                    e.id,
                    e.family.to_string(),
                    e.degree,
                    e.subdegrees[0],
                    e.subdegrees[1],
                    format!("{:?}", e.tier),
                    order,
                    e.group_name
                );
                if line.is_err() {
                    break;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
