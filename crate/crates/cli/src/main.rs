use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use clawkit::decompose::{decompose_explicit, decompose_generic, Decomposition};
use clawkit::edge_graph::edge_graph;
use clawkit::format::{graph6_encode, parse_graph, to_dot};
use clawkit::homogeneous::homogeneous_triples;
use clawkit::incidence::{build_w, wilson_kernel_members, RatMatrix};
use clawkit::structure::{classify_theorem1, Certificate};
use clawkit::verify::{run_suite, Suite};
use clawkit::Graph;

/// Claw-free, co-claw-free graphs, edge-graphs and 3-homogeneous decompositions.
///
/// Graph input is graph6 or an edge list ("n m" then one "u v" per line),
/// read from FILE or stdin.
#[derive(Parser)]
#[command(name = "clawkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a forbidden subgraph or a positive structure certificate.
    /// Exit 0 in the class, 1 otherwise.
    Classify { file: Option<PathBuf> },
    /// Check a certificate line against a graph. Exit 0 if it holds, 1 if not.
    VerifyCertificate {
        #[arg(long)]
        cert: String,
        file: Option<PathBuf>,
    },
    /// The edge-graph S(U) as graph6 plus vertex labels.
    EdgeGraph {
        #[arg(long)]
        dot: bool,
        file: Option<PathBuf>,
    },
    /// Homogeneous triples, one per line.
    Homog { file: Option<PathBuf> },
    /// Split U into G, G' with the same homogeneous triples and G + G' = U.
    /// Exit 1 when no decomposition exists.
    Decompose {
        /// Use the edge-graph 2-coloring construction only.
        #[arg(long)]
        generic: bool,
        #[arg(long)]
        dot: bool,
        file: Option<PathBuf>,
    },
    /// Ranks and kernels of the t-subset versus k-subset inclusion matrix.
    Incidence {
        #[arg(long)]
        v: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
    /// Exhaustive check of one statement over all graphs of order N.
    /// Exit 0 iff there are no mismatches.
    Verify {
        /// theorem1, theorem2-23, theorem2-12, star, claim, harary,
        /// decompose, homogeneous or hypo3.
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        n: usize,
        /// Worker threads; 0 uses all available.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn read_graph(file: Option<&PathBuf>) -> Result<Graph> {
    let text = match file {
        Some(path) => {
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
        }
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .context("reading stdin")?;
            s
        }
    };
    Ok(parse_graph(&text)?)
}

fn exit(affirmative: bool) -> ExitCode {
    if affirmative {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn print_decomposition(d: &Decomposition, dot: bool) {
    if dot {
        for g in [&d.g, &d.gp, &d.u] {
            print!("{}", to_dot(g));
        }
    } else {
        println!("{d}");
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Classify { file } => {
            let g = read_graph(file.as_ref())?;
            let cert = classify_theorem1(&g);
            println!("{cert}");
            Ok(exit(cert.is_positive()))
        }
        Command::VerifyCertificate { cert, file } => {
            let cert: Certificate = cert.parse()?;
            let g = read_graph(file.as_ref())?;
            let ok = cert.verify(&g);
            println!("{}", if ok { "valid" } else { "invalid" });
            Ok(exit(ok))
        }
        Command::EdgeGraph { dot, file } => {
            let u = read_graph(file.as_ref())?;
            let s = edge_graph(&u)?;
            if dot {
                print!("{}", to_dot(s.base()));
            } else {
                print!("{}", s.to_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Homog { file } => {
            let g = read_graph(file.as_ref())?;
            print!("{}", homogeneous_triples(&g).to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { generic, dot, file } => {
            let u = read_graph(file.as_ref())?;
            let d = if generic {
                decompose_generic(&u)?
            } else {
                decompose_explicit(&u).map_or_else(|| decompose_generic(&u), |d| Ok(Some(d)))?
            };
            match d {
                Some(d) => {
                    print_decomposition(&d, dot);
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!(
                        "no decomposition: {} fails the bipartite edge-graph test",
                        graph6_encode(&u)
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Incidence { v, k, t } => {
            let w = build_w(t, k, v)?;
            println!("W_{t}{k} on {v} points: {} x {}", w.rows(), w.cols());
            println!("gf2 rank: {}", w.rank());
            println!("rational rank: {}", RatMatrix::from(&w).rank());
            println!("gf2 kernel dim: {}", w.transpose().kernel().len());
            if t == 2 {
                if let Ok(report) = wilson_kernel_members(v, k) {
                    for (g, kind) in &report.members {
                        println!("{} {kind:?}", graph6_encode(g));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, n, jobs } => {
            let report = run_suite(suite, n, jobs)?;
            println!("{report}");
            Ok(exit(report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
