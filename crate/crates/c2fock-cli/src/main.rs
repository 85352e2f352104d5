//! `c2fock`: Young walls, crystal graphs, Fock space actions and global bases
//! for the level-one representations of `U_q(C₂⁽¹⁾)`.
//!
//! Exit codes: `0` success, `1` invalid input, `2` a verification suite failed.

use std::io::Write;
use std::process::ExitCode;

use c2fock::globalbasis::BasisKind;
use c2fock_cli::{
    cmd_crystal, cmd_decompose, cmd_fock, cmd_gb, cmd_verify, cmd_wall, parse_grounds, CliError, FockOp, GbTarget,
    GraphFormat, Suite,
};
use clap::{ArgGroup, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "c2fock", version, about = "Young-wall Fock space and global bases of U_q(C2(1))")]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    E,
    F,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(name = "A")]
    A,
    #[value(name = "G")]
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Ef,
    Serre,
    CrystalAxioms,
    GbProps,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a wall literal such as `L1[3,1]` and report its invariants.
    Wall { literal: String },
    /// Export the crystal graph generated from a ground state.
    #[command(group(ArgGroup::new("which").args(["all", "reduced"])))]
    Crystal {
        #[arg(long, default_value = "L1")]
        ground: String,
        #[arg(long, default_value_t = 5)]
        depth: u32,
        #[arg(long, value_enum, default_value = "dot")]
        format: FormatArg,
        /// Keep every proper wall.
        #[arg(long)]
        all: bool,
        /// Keep only reduced walls (the default).
        #[arg(long)]
        reduced: bool,
    },
    /// Apply `e_i` or `f_i` (optionally a divided power) to a vector.
    Fock {
        #[arg(long, value_enum)]
        op: OpArg,
        #[arg(long)]
        i: u8,
        #[arg(long, default_value_t = 1)]
        pow: u32,
        /// Use the divided power X^(pow) = X^pow / [pow]_i!.
        #[arg(long)]
        divided: bool,
        /// A wall literal or the path of a JSON vector file.
        input: String,
    },
    /// Compute A(Y) or G(Y) for a wall or for every reduced wall of a weight.
    #[command(group(ArgGroup::new("target").required(true).args(["wall", "weight"])))]
    Gb {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        wall: Option<String>,
        /// `k0,k1,k2` for the weight Λ − k0·α0 − k1·α1 − k2·α2.
        #[arg(long, requires = "ground")]
        weight: Option<String>,
        #[arg(long)]
        ground: Option<String>,
    },
    /// List the maximal walls of weight Λ − mδ for m up to a bound.
    Decompose {
        #[arg(long)]
        ground: String,
        #[arg(long)]
        max_delta: u32,
    },
    /// Run an exhaustive verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// `L0`, `L1`, `L2` or `all`.
        #[arg(long, default_value = "all")]
        ground: String,
        #[arg(long, default_value_t = 8)]
        max_blocks: u32,
    },
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Wall { literal } => cmd_wall(&literal),
        Command::Crystal { ground, depth, format, all, reduced: _ } => {
            let format = match format {
                FormatArg::Dot => GraphFormat::Dot,
                FormatArg::Json => GraphFormat::Json,
            };
            cmd_crystal(&ground, depth, format, !all)
        }
        Command::Fock { op, i, pow, divided, input } => {
            let op = match op {
                OpArg::E => FockOp::E,
                OpArg::F => FockOp::F,
            };
            cmd_fock(op, i, pow, divided, &input)
        }
        Command::Gb { kind, wall, weight, ground } => {
            let kind = match kind {
                KindArg::A => BasisKind::A,
                KindArg::G => BasisKind::G,
            };
            let target = match (wall, weight, ground) {
                (Some(w), _, _) => GbTarget::Wall(w),
                (None, Some(weight), Some(ground)) => GbTarget::Weight { ground, weight },
                _ => unreachable!("clap enforces --wall or --weight with --ground"),
            };
            cmd_gb(kind, &target)
        }
        Command::Decompose { ground, max_delta } => cmd_decompose(&ground, max_delta),
        Command::Verify { suite, ground, max_blocks } => {
            let suite = match suite {
                SuiteArg::Ef => Suite::Ef,
                SuiteArg::Serre => Suite::Serre,
                SuiteArg::CrystalAxioms => Suite::CrystalAxioms,
                SuiteArg::GbProps => Suite::GbProps,
            };
            cmd_verify(suite, &parse_grounds(&ground)?, max_blocks)
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(args.command) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::SuiteFailure(report) = &e {
                let _ = std::io::stdout().write_all(report.as_bytes());
            }
            eprintln!("error: {}", e.to_string().trim_end());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
