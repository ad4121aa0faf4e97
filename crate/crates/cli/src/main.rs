use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use idemsys::census::DEFAULT_BUDGET;
use idemsys_cli::{
    cmd_ao, cmd_character, cmd_classify, cmd_dual, cmd_eigendata, cmd_enumerate, cmd_normalize,
    cmd_verify, parse_algebra_document, parse_matrix_document, CliError, Output,
};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Pretty,
}

/// Exact classification of idempotent systems and character systems.
#[derive(Debug, Parser)]
#[command(name = "idemsys", version)]
struct Cli {
    /// Input document; standard input when omitted.
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Largest number of candidates `enumerate` may search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Report invertible, solid, normalized and AO flags.
    Classify,
    /// Emit the normalized representative of a solid matrix.
    Normalize,
    /// Test almost orthogonality and print the diagonal witness.
    Ao,
    /// Eigenmatrices, valencies, multiplicities and intersection numbers of an AON matrix.
    Eigendata,
    /// Emit the dual `nu P^-1` of an AON matrix.
    Dual,
    /// Decompose a character algebra given by structure constants.
    Character,
    /// List normalized matrices over F_p, flagging the AON ones.
    Enumerate {
        /// Diameter.
        d: usize,
        /// Prime.
        p: u64,
    },
    /// Run every applicable invariant check on a matrix.
    Verify,
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) => Ok(std::fs::read_to_string(p)?),
        None => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let matrix = || read_input(&cli.input).and_then(|t| parse_matrix_document(&t));
    Ok(match &cli.command {
        Command::Classify => cmd_classify(&matrix()?),
        Command::Normalize => cmd_normalize(&matrix()?)?,
        Command::Ao => cmd_ao(&matrix()?)?,
        Command::Eigendata => cmd_eigendata(&matrix()?)?,
        Command::Dual => cmd_dual(&matrix()?)?,
        Command::Character => {
            let text = read_input(&cli.input)?;
            cmd_character(&parse_algebra_document(&text)?)?
        }
        Command::Enumerate { d, p } => cmd_enumerate(*d, *p, cli.budget)?,
        Command::Verify => cmd_verify(&matrix()?),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("valid json")
                ),
                Format::Pretty => print!("{}", out.pretty),
            }
            if out.success {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
