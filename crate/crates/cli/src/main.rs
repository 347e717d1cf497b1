//! `eckardt`: lattice utilities, the verification report and the
//! weighted-hypersurface classifier.
//!
//! Exit codes: 0 on success (all checks pass), 1 on verification failure,
//! 2 on usage or input errors.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use eckardt_core::discform::FiniteQuadraticForm;
use eckardt_core::lattice::{GramLattice, LatticeEmbedding};
use eckardt_core::matrix::{Int, Rat};
use eckardt_core::roots::short_vectors;
use eckardt_core::wps;
use serde_json::json;

#[derive(Parser)]
#[command(name = "eckardt", version, about = "Exact lattice and weighted-hypersurface computations", long_about = None)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect lattices given as JSON files.
    Lattice(LatticeArgs),
    /// Run the full verification suite and emit the report.
    #[command(name = "verify-paper")]
    VerifyPaper(VerifyArgs),
    /// Weighted projective hypersurfaces: classify, Hodge numbers, partitions.
    Wps(WpsArgs),
}

#[derive(Args)]
struct LatticeArgs {
    #[command(subcommand)]
    command: LatticeCommand,
}

#[derive(Subcommand)]
enum LatticeCommand {
    /// Determinant, signature, parity and discriminant group of a lattice.
    Info {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Orthogonal complement of an embedded sublattice.
    Complement {
        /// Embedding JSON: {labels, gram, images, ambient}.
        #[arg(long)]
        file: PathBuf,
    },
    /// Discriminant form of a lattice as JSON.
    Discriminant {
        #[arg(long)]
        file: PathBuf,
    },
    /// Count and list the vectors of a given norm, up to sign.
    Roots {
        #[arg(long, alias = "lattice")]
        file: PathBuf,
        #[arg(long, default_value_t = 2)]
        norm: u64,
        /// Print the representatives as well as the count.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Restrict to entries whose id or anchor contains this string.
    #[arg(long)]
    only: Option<String>,
    /// Seed for the pseudorandom spot checks (recorded in the report).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct WpsArgs {
    #[command(subcommand)]
    command: WpsCommand,
}

#[derive(Subcommand)]
enum WpsCommand {
    /// Classify the quasi-K3 Fermat fourfolds.
    Classify {
        /// Complex dimension of the hypersurfaces (only 4 is implemented).
        #[arg(long, default_value_t = 4)]
        dim: u32,
        /// Restrict to families with a Fermat member (always on).
        #[arg(long)]
        fermat: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Hodge numbers of a Fermat hypersurface.
    Hodge {
        /// Comma-separated weights, e.g. 1,2,2,2,2,3.
        #[arg(long)]
        weights: String,
        #[arg(long)]
        degree: u64,
    },
    /// Partitions of a rational target into unit fractions.
    Partitions {
        /// Target value, e.g. 1 or 1/2.
        #[arg(long)]
        target: String,
        #[arg(long)]
        parts: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Table,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            // tolerate a closed pipe (e.g. `eckardt ... | head`)
            use std::io::Write;
            if let Err(e) = std::io::stdout().write_all(out.as_bytes()) {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            }
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

type CommandOutput = (String, ExitCode);

fn run(cli: Cli) -> Result<CommandOutput, String> {
    match cli.command {
        Command::Lattice(args) => lattice_command(args.command),
        Command::VerifyPaper(args) => verify_command(args),
        Command::Wps(args) => wps_command(args.command),
    }
}

fn read_lattice(path: &PathBuf) -> Result<GramLattice, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    GramLattice::from_json(&text).map_err(|e| e.to_string())
}

fn rat_str(x: &Rat) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn lattice_command(cmd: LatticeCommand) -> Result<CommandOutput, String> {
    match cmd {
        LatticeCommand::Info { file, format } => {
            let l = read_lattice(&file)?;
            let (p, n, z) = l.signature();
            let dg = l.discriminant_group().ok();
            let orders: Vec<String> = dg
                .as_ref()
                .map(|d| d.orders().iter().map(Int::to_string).collect())
                .unwrap_or_default();
            let out = if format == Format::Json {
                let doc = serde_json::to_string_pretty(&json!({
                    "rank": l.rank(),
                    "det": l.det().to_string(),
                    "signature": [p, n, z],
                    "even": l.is_even(),
                    "discriminant_group_orders": orders,
                }))
                .unwrap();
                format!("{doc}\n")
            } else {
                let mut out = String::new();
                out.push_str(&format!("rank:      {}\n", l.rank()));
                out.push_str(&format!("det:       {}\n", l.det()));
                out.push_str(&format!("signature: ({p}, {n}, {z})\n"));
                out.push_str(&format!(
                    "parity:    {}\n",
                    if l.is_even() { "even" } else { "odd" }
                ));
                if orders.is_empty() {
                    out.push_str("disc grp:  trivial or degenerate\n");
                } else {
                    out.push_str(&format!("disc grp:  Z/{}\n", orders.join(" + Z/")));
                }
                out
            };
            Ok((out, ExitCode::SUCCESS))
        }
        LatticeCommand::Complement { file } => {
            let text = fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            let emb = LatticeEmbedding::from_json(&text).map_err(|e| e.to_string())?;
            let comp = emb.orthogonal_complement().map_err(|e| e.to_string())?;
            let doc = comp.to_json().map_err(|e| e.to_string())?;
            Ok((format!("{doc}\n"), ExitCode::SUCCESS))
        }
        LatticeCommand::Discriminant { file } => {
            let l = read_lattice(&file)?;
            let f = FiniteQuadraticForm::of_lattice(&l).map_err(|e| e.to_string())?;
            let doc = serde_json::to_string_pretty(&f.to_json_value()).unwrap();
            Ok((format!("{doc}\n"), ExitCode::SUCCESS))
        }
        LatticeCommand::Roots { file, norm, list } => {
            let l = read_lattice(&file)?;
            let sv = short_vectors(&l, norm).map_err(|e| e.to_string())?;
            let mut out = format!("{}\n", sv.count_with_signs);
            if list {
                for v in &sv.representatives {
                    let coords: Vec<String> = v.iter().map(Int::to_string).collect();
                    out.push_str(&format!("[{}]\n", coords.join(", ")));
                }
            }
            Ok((out, ExitCode::SUCCESS))
        }
    }
}

fn verify_command(args: VerifyArgs) -> Result<CommandOutput, String> {
    let report = eckardt_core::verify::run(args.seed, args.only.as_deref());
    let rendered = match args.format {
        Format::Json => report.to_json(),
        _ => report.to_text(),
    };
    let code = if report.all_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    };
    match &args.out {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| e.to_string())?;
            Ok((String::new(), code))
        }
        None => Ok((rendered, code)),
    }
}

fn parse_rational(s: &str) -> Result<Rat, String> {
    let parse_int = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|e| format!("bad number `{t}`: {e}"))
    };
    match s.split_once('/') {
        Some((n, d)) => Ok(Rat::new(Int::from(parse_int(n)?), Int::from(parse_int(d)?))),
        None => Ok(Rat::from_integer(Int::from(parse_int(s)?))),
    }
}

fn wps_command(cmd: WpsCommand) -> Result<CommandOutput, String> {
    match cmd {
        WpsCommand::Classify {
            dim,
            fermat: _,
            format,
        } => {
            if dim != 4 {
                return Err(format!("only dimension 4 is implemented, got {dim}"));
            }
            let fams = wps::classify_quasi_k3_fermat_fourfolds().map_err(|e| e.to_string())?;
            let out = if format == Format::Json {
                let rows: Vec<_> = fams
                    .iter()
                    .map(|f| {
                        json!({
                            "case": f.case,
                            "weights": f.weights,
                            "degree": f.degree,
                            "h22_prim": f.h22_prim,
                            "hodge": f.hodge,
                        })
                    })
                    .collect();
                format!("{}\n", serde_json::to_string_pretty(&rows).unwrap())
            } else {
                let mut out = format!(
                    "{:<5} {:<24} {:>6} {:>9}\n",
                    "case", "weights", "degree", "h22_prim"
                );
                for f in &fams {
                    let w: Vec<String> = f.weights.iter().map(u64::to_string).collect();
                    out.push_str(&format!(
                        "{:<5} {:<24} {:>6} {:>9}\n",
                        f.case,
                        format!("({})", w.join(",")),
                        f.degree,
                        f.h22_prim
                    ));
                }
                out
            };
            Ok((out, ExitCode::SUCCESS))
        }
        WpsCommand::Hodge { weights, degree } => {
            let weights: Vec<u64> = weights
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u64>()
                        .map_err(|e| format!("bad weight `{t}`: {e}"))
                })
                .collect::<Result<_, _>>()?;
            let w = wps::WeightedHypersurface::new(weights, degree).map_err(|e| e.to_string())?;
            let hodge = w.fermat_hodge_numbers().map_err(|e| e.to_string())?;
            let doc = serde_json::to_string_pretty(&json!({
                "weights": w.weights,
                "degree": w.degree,
                "well_formed": w.is_well_formed(),
                "quasi_k3": w.is_quasi_k3(),
                "hodge_prim": hodge,
            }))
            .unwrap();
            Ok((format!("{doc}\n"), ExitCode::SUCCESS))
        }
        WpsCommand::Partitions { target, parts } => {
            let target = parse_rational(&target)?;
            let rows = wps::unit_fraction_partitions(&target, parts);
            let mut out = String::new();
            for row in &rows {
                let parts: Vec<String> = row.iter().map(|n| format!("1/{n}")).collect();
                out.push_str(&format!("{} = {}\n", rat_str(&target), parts.join(" + ")));
            }
            eprintln!("{} partitions", rows.len());
            Ok((out, ExitCode::SUCCESS))
        }
    }
}
