mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use superdim::{Exec, Field};

use commands::Outcome;

/// Krull super-dimension, Harish-Chandra groups and odd orbits.
#[derive(Parser, Debug)]
#[command(name = "superdim", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Emit `{command, inputs, result, certificate?}` as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Scalar field: `q`, or `fp <p>` for an odd prime p.
    #[arg(long, global = true, num_args = 1..=2, value_names = ["FIELD", "P"], default_value = "q")]
    pub field: Vec<String>,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Run batch work sequentially.
    #[arg(long, global = true)]
    pub sequential: bool,
}

impl Global {
    pub fn field(&self) -> Result<Field> {
        match self
            .field
            .iter()
            .map(String::as_str)
            .collect::<Vec<_>>()
            .as_slice()
        {
            ["q"] | ["Q"] => Ok(Field::Rational),
            ["fp", p] => Ok(Field::prime(
                p.parse().with_context(|| format!("bad prime `{p}`"))?,
            )?),
            [s] if s.starts_with("fp") => Ok(Field::prime(
                s[2..].parse().with_context(|| format!("bad field `{s}`"))?,
            )?),
            other => bail!("unknown field `{}`; use `q` or `fp <p>`", other.join(" ")),
        }
    }

    pub fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Krull super-dimension with an odd-parameter certificate.
    Ksdim {
        file: PathBuf,
        /// Extra odd candidates, comma separated.
        #[arg(long)]
        extra: Option<String>,
        /// Number of random odd combinations to try.
        #[arg(long, default_value_t = 4)]
        random: usize,
    },
    /// The purely even quotient A / A A_1.
    Bar { file: PathBuf },
    /// The Grassman graded algebra gr(A).
    Gr { file: PathBuf },
    /// Annihilator of a homogeneous element.
    Ann {
        file: PathBuf,
        #[arg(long)]
        elem: String,
    },
    /// Is the sequence a system of odd parameters?
    OddParams {
        file: PathBuf,
        #[arg(long)]
        seq: String,
    },
    /// Is the sequence odd regular?
    OddRegular {
        file: PathBuf,
        #[arg(long)]
        seq: String,
    },
    /// dim of (A_1 / 𝔐 A_1) at a rational point, and the odd regularity check there.
    PhiDim {
        file: PathBuf,
        #[arg(long)]
        point: String,
    },
    /// Localize at an even element, or check Ksdim on a cover.
    Localize {
        file: PathBuf,
        #[arg(long, conflicts_with = "cover")]
        at: Option<String>,
        /// Even elements generating the unit ideal, comma separated.
        #[arg(long)]
        cover: Option<String>,
    },
    /// Necessary condition B_1 = B_0 φ(A_1) for a monomorphism A -> B.
    MonoCheck {
        source: PathBuf,
        target: PathBuf,
        /// Images of the generators of the source, even first, separated by `;`.
        #[arg(long)]
        images: String,
    },
    /// Harish-Chandra pairs.
    Hc {
        #[command(subcommand)]
        command: HcCommand,
    },
    /// Orbit of an odd unipotent action through a point.
    Orbit {
        file: PathBuf,
        #[arg(long)]
        derivation: Option<String>,
        #[arg(long)]
        point: Option<String>,
    },
    /// Orbit closedness, stability and dimension identities at every point.
    VerifyOrbits {
        file: PathBuf,
        #[arg(long)]
        derivation: Option<String>,
        /// Repeatable; defaults to the points in the file.
        #[arg(long)]
        point: Vec<String>,
    },
    /// Run the bundled acceptance corpus.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum HcCommand {
    /// Check the pair axioms.
    Validate { file: PathBuf },
    /// Product of two elements of G(A) in normal form.
    Mul {
        file: PathBuf,
        /// `[[..]] | a1, a2, ...`: a point of G(A_0) and odd coordinates.
        left: String,
        right: String,
        #[command(flatten)]
        opts: HcOpts,
    },
    /// Inverse of an element of G(A).
    Inv {
        file: PathBuf,
        elem: String,
        /// Coefficient algebra; defaults to Λ(s, t, u, w).
        #[arg(long)]
        coeff: Option<PathBuf>,
    },
    /// sdim(G) = (dim G_ev | dim V).
    Sdim { file: PathBuf },
    /// Does the bracket vanish? Optionally print gr of the pair.
    Graded {
        file: PathBuf,
        #[arg(long)]
        show_gr: bool,
    },
}

#[derive(Args, Debug, Clone)]
pub struct HcOpts {
    /// Coefficient algebra; defaults to Λ(s, t, u, w).
    #[arg(long)]
    pub coeff: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Leftmost)]
    pub strategy: StrategyArg,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
pub enum StrategyArg {
    Leftmost,
    Rightmost,
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Ksdim {
            file,
            extra,
            random,
        } => commands::ksdim(g, file, extra.as_deref(), *random),
        Command::Bar { file } => commands::bar(g, file),
        Command::Gr { file } => commands::gr(g, file),
        Command::Ann { file, elem } => commands::ann(g, file, elem),
        Command::OddParams { file, seq } => commands::odd_params(g, file, seq),
        Command::OddRegular { file, seq } => commands::odd_regular(g, file, seq),
        Command::PhiDim { file, point } => commands::phi_dim(g, file, point),
        Command::Localize { file, at, cover } => {
            commands::localize(g, file, at.as_deref(), cover.as_deref())
        }
        Command::MonoCheck {
            source,
            target,
            images,
        } => commands::mono_check(g, source, target, images),
        Command::Hc { command } => commands::hc(g, command),
        Command::Orbit {
            file,
            derivation,
            point,
        } => commands::orbit(g, file, derivation.as_deref(), point.as_deref()),
        Command::VerifyOrbits {
            file,
            derivation,
            point,
        } => commands::verify_orbits(g, file, derivation.as_deref(), point),
        Command::Selftest => Ok(commands::selftest(g)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if cli.global.json {
                println!("{}", out.json());
            } else {
                print!("{}", out.text);
            }
            match out.verdict {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
