//! solvcoh: cohomology, lattice criteria, symplectic properties, minimal
//! models and formality of six dimensional almost abelian solvmanifolds.

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use solvcoh::commands::{self, Source};
use solvcoh::output;
use solvcoh_exact::scalar::Rat;

#[derive(Parser)]
#[command(name = "solvcoh", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, default_value = "json", value_parser = ["json", "tsv"])]
    format: String,
    /// Seed for the randomized fast paths (results are reproducible).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct SourceArgs {
    /// Algebra file (see the grammar in the README).
    #[arg(long, conflicts_with_all = ["catalog", "params"])]
    algebra: Option<String>,
    /// Catalog entry name (see `solvcoh catalog`).
    #[arg(long)]
    catalog: Option<String>,
    /// Parameter bindings k=v, comma separated; rationals as p/q.
    #[arg(long, value_delimiter = ',')]
    params: Vec<String>,
}

#[derive(Args)]
struct TbarArg {
    /// Rational q with t = q pi (e.g. 2, 1, 1/2, 1/3).
    #[arg(long)]
    tbar: String,
}

#[derive(Subcommand)]
enum Command {
    /// Betti numbers of the Chevalley-Eilenberg cohomology H*(g).
    Betti(SourceArgs),
    /// The Mostow condition at t = q pi (Gorbatsevich's criterion).
    Mostow {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        tbar: TbarArg,
    },
    /// The modified (deformed) algebra g~.
    Modify(SourceArgs),
    /// Lattice integrality criteria at t = q pi, or the integer system
    /// satisfiability with --h1/--h2.
    LatticeCheck {
        #[command(flatten)]
        src: SourceArgs,
        /// Rational q with t = q pi.
        #[arg(long)]
        tbar: Option<String>,
        /// First integer of the weight-one lattice system.
        #[arg(long, requires = "h2")]
        h1: Option<i64>,
        /// Second integer of the weight-one lattice system.
        #[arg(long, requires = "h1")]
        h2: Option<i64>,
    },
    /// Invariant cohomology of the covered quotient at t = q pi.
    Invariants {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        tbar: TbarArg,
    },
    /// Symplectic existence with the generic closed 2-form and Pfaffian.
    Symplectic {
        #[command(flatten)]
        src: SourceArgs,
        /// Test the modified algebra instead of g itself.
        #[arg(long)]
        modified: bool,
    },
    /// s-Lefschetz verdicts of the generic symplectic family.
    Lefschetz {
        #[command(flatten)]
        src: SourceArgs,
        /// Quotient angle t = q pi; without it the algebra itself is used.
        #[arg(long)]
        tbar: Option<String>,
        /// Check L^{n-k} for k <= s.
        #[arg(short, long, default_value_t = 3)]
        s: usize,
    },
    /// Sullivan minimal model of the quotient up to the cap.
    Model {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        tbar: Option<String>,
        /// Quasi-isomorphism through degree cap-1 with injectivity at cap.
        #[arg(long, default_value_t = 7)]
        cap: usize,
    },
    /// Formality verdict (FORMAL / NOT_FORMAL / UNKNOWN) with certificates.
    Formality {
        #[command(flatten)]
        src: SourceArgs,
        #[arg(long)]
        tbar: Option<String>,
    },
    /// The nilpotent-monodromy submodule U of H*(fiber) at t = q pi.
    Umodule {
        #[command(flatten)]
        src: SourceArgs,
        #[command(flatten)]
        tbar: TbarArg,
    },
    /// Recompute the whole reproduction table and diff against the
    /// embedded expected values; exits nonzero on mismatch.
    Table1,
    /// List the built-in catalog.
    Catalog,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    let seed = cli.seed;
    let (doc, code) = match &cli.command {
        Command::Betti(src) => commands::betti(&source(src)?, seed)?,
        Command::Mostow { src, tbar } => {
            commands::mostow(&source(src)?, &parse_rat(&tbar.tbar)?, seed)?
        }
        Command::Modify(src) => commands::modify(&source(src)?, seed)?,
        Command::LatticeCheck { src, tbar, h1, h2 } => match (h1, h2) {
            (Some(h1), Some(h2)) => commands::lattice_system(*h1, *h2, seed)?,
            _ => {
                let q = tbar
                    .as_ref()
                    .ok_or("lattice-check needs --tbar or --h1/--h2")?;
                commands::lattice_check(&source(src)?, &parse_rat(q)?, seed)?
            }
        },
        Command::Invariants { src, tbar } => {
            commands::invariants(&source(src)?, &parse_rat(&tbar.tbar)?, seed)?
        }
        Command::Symplectic { src, modified } => {
            commands::symplectic(&source(src)?, *modified, seed)?
        }
        Command::Lefschetz { src, tbar, s } => {
            let q = tbar.as_ref().map(|t| parse_rat(t)).transpose()?;
            commands::lefschetz(&source(src)?, q.as_ref(), *s, seed)?
        }
        Command::Model { src, tbar, cap } => {
            let q = tbar.as_ref().map(|t| parse_rat(t)).transpose()?;
            commands::model(&source(src)?, q.as_ref(), *cap, seed)?
        }
        Command::Formality { src, tbar } => {
            let q = tbar.as_ref().map(|t| parse_rat(t)).transpose()?;
            commands::formality(&source(src)?, q.as_ref(), seed)?
        }
        Command::Umodule { src, tbar } => {
            commands::umodule(&source(src)?, &parse_rat(&tbar.tbar)?, seed)?
        }
        Command::Table1 => {
            let (doc, tsv_rows, code) = commands::table1(seed);
            if cli.format == "tsv" {
                print!(
                    "{}",
                    output::tsv(
                        &[
                            "group", "tbar", "b1 b2 b3 (g)", "b1 b2 b3 (G/Gamma)", "formality",
                            "inv-sympl", "new-sympl", "hard-lefschetz", "status",
                        ],
                        &tsv_rows,
                    )
                );
            } else {
                println!("{}", doc.to_json());
            }
            return Ok(code as u8);
        }
        Command::Catalog => {
            let entries: Vec<serde_json::Value> = solvcoh_algebra::catalog::CATALOG
                .iter()
                .map(|e| {
                    serde_json::json!({
                        "name": e.name,
                        "brackets": e.bracket_summary,
                        "params": e.param_names,
                        "constraints": e.constraints,
                        "modified": e.modified_identification,
                        "in_table1": e.in_table1,
                    })
                })
                .collect();
            let doc = output::ResultDocument::new(
                "catalog",
                serde_json::json!({}),
                serde_json::json!({ "entries": entries }),
                seed,
            );
            println!("{}", doc.to_json());
            return Ok(0);
        }
    };
    println!("{}", doc.to_json());
    Ok(code as u8)
}

fn source(args: &SourceArgs) -> Result<Source, String> {
    match (&args.algebra, &args.catalog) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            Ok(Source::File { path: path.clone(), text })
        }
        (None, Some(name)) => {
            let mut params = BTreeMap::new();
            for kv in &args.params {
                if kv.is_empty() {
                    continue;
                }
                let (k, v) = kv
                    .split_once('=')
                    .ok_or_else(|| format!("bad parameter binding '{kv}', expected k=v"))?;
                params.insert(k.trim().to_string(), parse_rat(v.trim())?);
            }
            Ok(Source::Catalog { name: name.clone(), params })
        }
        _ => Err("exactly one of --algebra or --catalog is required".into()),
    }
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|e| format!("bad rational '{s}': {e}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den == BigInt::from(0) {
                return Err(format!("bad rational '{s}': zero denominator"));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}
