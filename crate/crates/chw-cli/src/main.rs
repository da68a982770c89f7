use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use chw_cli::commands::{
    cmd_apply, cmd_ball, cmd_h1, cmd_h2, cmd_induced, cmd_nf, cmd_snf, cmd_verify, SuiteChoice,
};

#[derive(Parser)]
#[command(
    name = "chw",
    version,
    about = "Exact computations in combinatorial Hantzsche-Wendt groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of a group word.
    ///
    /// Words are products of factors `x<i>` with optional integer
    /// exponents and parenthesized subwords, e.g. "x1^-1 x2^2 x1 x2^2"
    /// or "(x1 x2)^3"; the canonical form `x1 x2 ; [z1,...,zn]` is also
    /// accepted.
    Nf {
        /// Number of generators.
        #[arg(long)]
        n: usize,
        /// The word to normalize.
        word: String,
    },
    /// Apply an automorphism word to a group word.
    ///
    /// Automorphism words are whitespace-separated tokens `p[...]`
    /// (permutation by images), `a[i,j]`, `e[i,j]` (optionally with an
    /// integer power `^k`), and `d[i]`; a postfix `'` inverts a token.
    /// Tokens compose right to left: the rightmost acts first.
    Apply {
        #[arg(long)]
        n: usize,
        /// The automorphism word.
        #[arg(long = "auto")]
        auto: String,
        /// The group word to map.
        word: String,
    },
    /// Print the action induced on the quotient and on the lattice.
    Induced {
        #[arg(long)]
        n: usize,
        #[arg(long = "auto")]
        auto: String,
    },
    /// Run verification suites; exit code 0 exactly when all checks pass.
    Verify {
        #[arg(long)]
        n: usize,
        /// Which suite to run.
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Seed for the randomized samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// First cohomology of the quotient with lattice coefficients.
    H1 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Second cohomology of the quotient with lattice coefficients.
    H2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Smith normal form of an integer matrix file.
    ///
    /// The file holds one row per line of whitespace-separated
    /// integers, or a JSON array of arrays.
    Snf {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Count the normal forms with bounded word length and shift box.
    Ball {
        #[arg(long)]
        n: usize,
        /// Maximum word length.
        #[arg(long)]
        len: usize,
        /// Bound on the absolute value of each shift coordinate.
        #[arg(long = "box")]
        box_bound: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Autw,
    Monoid,
    Autg,
    Outg,
    Structure,
    All,
}

impl From<SuiteArg> for SuiteChoice {
    fn from(arg: SuiteArg) -> SuiteChoice {
        match arg {
            SuiteArg::Autw => SuiteChoice::Autw,
            SuiteArg::Monoid => SuiteChoice::Monoid,
            SuiteArg::Autg => SuiteChoice::Autg,
            SuiteArg::Outg => SuiteChoice::Outg,
            SuiteArg::Structure => SuiteChoice::Structure,
            SuiteArg::All => SuiteChoice::All,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(error) => error.exit(),
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(error) => {
            eprintln!("error: {error}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8, chw_cli::CliError> {
    match command {
        Command::Nf { n, word } => {
            println!("{}", cmd_nf(n, &word)?);
            Ok(0)
        }
        Command::Apply { n, auto, word } => {
            println!("{}", cmd_apply(n, &auto, &word)?);
            Ok(0)
        }
        Command::Induced { n, auto } => {
            println!("{}", cmd_induced(n, &auto)?);
            Ok(0)
        }
        Command::Verify {
            n,
            suite,
            seed,
            json,
        } => {
            let (output, code) = cmd_verify(n, suite.into(), seed, json)?;
            println!("{output}");
            Ok(code)
        }
        Command::H1 { n, json } => {
            println!("{}", cmd_h1(n, json)?);
            Ok(0)
        }
        Command::H2 { n, json } => {
            println!("{}", cmd_h2(n, json)?);
            Ok(0)
        }
        Command::Snf { file, json } => {
            println!("{}", cmd_snf(&file, json)?);
            Ok(0)
        }
        Command::Ball { n, len, box_bound } => {
            println!("{}", cmd_ball(n, len, box_bound)?);
            Ok(0)
        }
    }
}
