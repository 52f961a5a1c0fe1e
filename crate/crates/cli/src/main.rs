use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

use hypercut::cut::{
    wiener_cut, wiener_general, wiener_hypertree, validate_cut_partition, CutPartition,
    WienerBreakdown, WienerCutError,
};
use hypercut::generators;
use hypercut::metric::wiener_brute_threaded;
use hypercut::pc::{recognize, theta_structure};
use hypercut::Hypergraph;

use hypercut_cli::bench::{run_bench, to_csv, BenchConfig, Family};
use hypercut_cli::format::{
    parse_cuts, parse_hypergraph, write_cuts, write_hypergraph, ParseOptions,
};
use hypercut_cli::output;

/// Wiener indices of hypergraphs, by brute force or by cut decompositions.
#[derive(Parser)]
#[command(name = "hypercut", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a hypergraph from a built-in family
    Gen {
        #[command(subcommand)]
        family: GenFamily,
    },
    /// Compute the Wiener index of a hypergraph file
    Wiener {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Cut partition file for --method general (defaults to one cut per
        /// edge)
        #[arg(long)]
        cuts: Option<PathBuf>,
        /// Skip inline validation of the cut partition
        #[arg(long)]
        prevalidated: bool,
        /// Threads for the brute-force per-source fan-out
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        json: bool,
        /// Drop singleton edges with a warning instead of rejecting the file
        #[arg(long)]
        allow_singleton_edges: bool,
    },
    /// Decide whether a hypergraph is a k-uniform partial cube-hypergraph
    Recognize {
        file: PathBuf,
        /// Also check the convexity characterization and report agreement
        #[arg(long)]
        validate_convexity: bool,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_singleton_edges: bool,
    },
    /// List the Θ-classes with their component sizes
    Theta {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_singleton_edges: bool,
    },
    /// Validate a cut partition against a hypergraph
    CutsValidate {
        file: PathBuf,
        #[arg(long)]
        cuts: PathBuf,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        allow_singleton_edges: bool,
    },
    /// Time brute force against the cut methods and write CSV
    Bench {
        /// Families to run; pass a bare --families for an empty grid
        #[arg(long, value_enum, value_delimiter = ',', num_args = 0..)]
        families: Option<Vec<Family>>,
        /// Output CSV path, or - for stdout
        #[arg(long)]
        csv: PathBuf,
        /// Phenylene chain lengths
        #[arg(long, value_delimiter = ',')]
        phenylene_n: Option<Vec<usize>>,
        /// Timed repetitions per measurement (minimum is reported)
        #[arg(long, default_value_t = 5)]
        repeats: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GenFamily {
    /// k-uniform n-cube
    Cube {
        k: usize,
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Linear phenylene chain of n hexagons
    Phenylene {
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Random hypertree with the given edge sizes
    Hypertree {
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The seven-vertex example hypertree (Wiener index 37)
    T1 {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The embedded Clar-structure hypergraph (Wiener index 2985)
    Clar {
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Also write its canonical cut partition
        #[arg(long)]
        cuts_out: Option<PathBuf>,
    },
    /// Single edge on k vertices
    Single {
        k: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Cut,
    Tree,
    General,
    Auto,
}

fn main() {
    let cli = Cli::parse();
    if let Err(e) = run(cli) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Gen { family } => gen(family),
        Command::Wiener {
            file,
            method,
            cuts,
            prevalidated,
            threads,
            json,
            allow_singleton_edges,
        } => {
            if cuts.is_some() && !matches!(method, Method::General) {
                Cli::command()
                    .error(
                        clap::error::ErrorKind::ArgumentConflict,
                        "--cuts only applies to --method general",
                    )
                    .exit();
            }
            wiener(
                &file,
                method,
                cuts.as_deref(),
                prevalidated,
                threads,
                json,
                allow_singleton_edges,
            )
        }
        Command::Recognize {
            file,
            validate_convexity,
            json,
            allow_singleton_edges,
        } => {
            let h = load(&file, allow_singleton_edges)?;
            let report = recognize(&h, validate_convexity)?;
            if json {
                println!("{}", output::recognition_json(&report));
            } else {
                print!("{}", output::recognition_text(&report));
            }
            Ok(())
        }
        Command::Theta {
            file,
            json,
            allow_singleton_edges,
        } => {
            let h = load(&file, allow_singleton_edges)?;
            let structure = theta_structure(&h)?;
            if json {
                println!("{}", output::theta_json(&structure));
            } else {
                print!("{}", output::theta_text(&structure));
            }
            Ok(())
        }
        Command::CutsValidate {
            file,
            cuts,
            json,
            allow_singleton_edges,
        } => {
            let h = load(&file, allow_singleton_edges)?;
            let partition = load_cuts(&cuts, &h)?;
            let report = validate_cut_partition(&h, &partition)?;
            if json {
                println!("{}", output::validation_json(&report));
            } else {
                print!("{}", output::validation_text(&report));
            }
            Ok(())
        }
        Command::Bench {
            families,
            csv,
            phenylene_n,
            repeats,
            seed,
        } => {
            let defaults = BenchConfig::default();
            let cfg = BenchConfig {
                families: families.unwrap_or(defaults.families),
                phenylene_n: phenylene_n.unwrap_or(defaults.phenylene_n),
                repeats,
                seed,
            };
            let records = run_bench(&cfg)?;
            let text = to_csv(&records);
            if csv == Path::new("-") {
                print!("{text}");
            } else {
                std::fs::write(&csv, text)
                    .with_context(|| format!("writing {}", csv.display()))?;
                eprintln!("wrote {} rows to {}", records.len(), csv.display());
            }
            Ok(())
        }
    }
}

fn gen(family: GenFamily) -> Result<()> {
    let (header, h, cuts, out, cuts_out) = match family {
        GenFamily::Cube { k, n, out } => {
            let (h, _) = generators::cube(k, n)?;
            (format!("# cube k={k} n={n}"), h, None, out, None)
        }
        GenFamily::Phenylene { n, out } => (
            format!("# phenylene n={n}"),
            generators::phenylene(n)?,
            None,
            out,
            None,
        ),
        GenFamily::Hypertree { sizes, seed, out } => {
            let h = generators::random_hypertree(&sizes, seed)?;
            (format!("# hypertree sizes={sizes:?} seed={seed}"), h, None, out, None)
        }
        GenFamily::T1 { out } => ("# example hypertree t1".into(), generators::example_t1(), None, out, None),
        GenFamily::Clar { out, cuts_out } => {
            let (h, partition) = generators::example_clar();
            ("# clar structure hypergraph".into(), h, Some(partition), out, cuts_out)
        }
        GenFamily::Single { k, out } => (
            format!("# single edge k={k}"),
            generators::single_edge(k)?,
            None,
            out,
            None,
        ),
    };
    let text = format!("{header}\n{}", write_hypergraph(&h));
    match out {
        Some(path) => std::fs::write(&path, text)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    if let Some(path) = cuts_out {
        let partition = cuts.ok_or_else(|| anyhow!("--cuts-out needs a family with cuts"))?;
        std::fs::write(&path, write_cuts(&partition))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn load(path: &Path, allow_singleton_edges: bool) -> Result<Hypergraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    let options = ParseOptions {
        allow_singleton_edges,
    };
    let (h, warnings) = parse_hypergraph(&text, options)
        .map_err(|e| anyhow!("{}: {e}", path.display()))?;
    for w in warnings {
        eprintln!("warning: {}:{}: {}", path.display(), w.line, w.message);
    }
    Ok(h)
}

fn load_cuts(path: &Path, h: &Hypergraph) -> Result<CutPartition> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading {}", path.display()))?;
    parse_cuts(&text, h.edge_count()).map_err(|e| anyhow!("{}: {e}", path.display()))
}

#[allow(clippy::too_many_arguments)]
fn wiener(
    file: &Path,
    method: Method,
    cuts: Option<&Path>,
    prevalidated: bool,
    threads: usize,
    json: bool,
    allow_singleton_edges: bool,
) -> Result<()> {
    let h = load(file, allow_singleton_edges)?;
    let start = Instant::now();
    let (method_name, value, breakdown): (&str, u128, Option<WienerBreakdown>) = match method {
        Method::Brute => ("brute", wiener_brute_threaded(&h, threads)?, None),
        Method::Cut => {
            let b = wiener_cut(&h)?;
            ("cut", b.total, Some(b))
        }
        Method::Tree => {
            let b = wiener_hypertree(&h)?;
            ("tree", b.total, Some(b))
        }
        Method::General => {
            let partition = match cuts {
                Some(path) => load_cuts(path, &h)?,
                None => CutPartition::singletons(&h),
            };
            let b = wiener_general(&h, &partition, prevalidated)?;
            ("general", b.total, Some(b))
        }
        Method::Auto => auto_wiener(&h, threads)?,
    };
    let nanos = start.elapsed().as_nanos();
    if json {
        println!(
            "{}",
            output::wiener_json(method_name, value, breakdown.as_ref(), nanos)
        );
    } else {
        eprintln!("method: {method_name}");
        println!("{value}");
    }
    Ok(())
}

/// Tries the cut method, then the hypertree method, then the generalized
/// method with singleton cuts, and finally falls back to brute force.
fn auto_wiener(h: &Hypergraph, threads: usize) -> Result<(&'static str, u128, Option<WienerBreakdown>)> {
    match wiener_cut(h) {
        Ok(b) => return Ok(("cut", b.total, Some(b))),
        Err(WienerCutError::Disconnected) => bail!("hypergraph is disconnected"),
        Err(WienerCutError::NotPartialCube(_)) => {}
    }
    if let Ok(b) = wiener_hypertree(h) {
        return Ok(("tree", b.total, Some(b)));
    }
    if let Ok(b) = wiener_general(h, &CutPartition::singletons(h), false) {
        return Ok(("general", b.total, Some(b)));
    }
    Ok(("brute", wiener_brute_threaded(h, threads)?, None))
}
