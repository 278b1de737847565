use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use folsym::{CliError, Config, MolienArgs, Output, SeriesKind};

#[derive(Parser)]
#[command(name = "folsym", version, about = "Symmetry groups of polynomial foliations of the projective plane")]
struct Cli {
    /// Highest power of t kept in power series.
    #[arg(long, global = true, default_value_t = 40, value_parser = clap::value_parser!(u32).range(1..))]
    trunc: u32,
    /// Abort group closures beyond this many elements.
    #[arg(long, global = true, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_order: u64,
    #[arg(long, global = true, default_value_t = 120, value_parser = clap::value_parser!(u64).range(1..))]
    conductor_cap: u64,
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Ring,
    Vector,
    Fields,
}

#[derive(Subcommand)]
enum Command {
    /// Diagonal symmetries of an affine 1-form read from FILE.
    Diag {
        file: PathBuf,
        #[arg(long)]
        enumerate: bool,
    },
    /// Molien series of a group and linear character.
    Molien {
        #[arg(long)]
        group: String,
        #[arg(long = "char", default_value_t = 0)]
        character: usize,
        #[arg(long, value_enum, default_value = "fields")]
        kind: Kind,
        /// File holding a closed-form numerator such as `t^4 + t^7`.
        #[arg(long, requires = "denom")]
        compare: Option<PathBuf>,
        /// Denominator exponents `a,b,c` of `(1-t^a)(1-t^b)(1-t^c)`.
        #[arg(long, value_delimiter = ',', requires = "compare")]
        denom: Vec<u32>,
    },
    /// Basis of divergence-free semi-invariant fields of one degree.
    Semi {
        #[arg(long)]
        group: String,
        #[arg(long = "char", default_value_t = 0)]
        character: usize,
        #[arg(long)]
        degree: u32,
    },
    /// The catalog of foliations with large automorphism groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Orbit of a projective point, coordinates separated by commas.
    Orbit {
        #[arg(long)]
        group: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Verify {
        #[arg(long)]
        name: String,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Print the catalog data file.
    Export,
}

fn run(cli: Cli) -> Result<folsym::Outcome, CliError> {
    let config = Config {
        truncation: cli.trunc as usize,
        max_order: cli.max_order as usize,
        conductor_cap: cli.conductor_cap,
        output: if cli.json { Output::Json } else { Output::Text },
    };
    match cli.command {
        Command::Diag { file, enumerate } => folsym::cmd_diag(&config, &file, enumerate),
        Command::Molien { group, character, kind, compare, denom } => {
            let kind = match kind {
                Kind::Ring => SeriesKind::Ring,
                Kind::Vector => SeriesKind::Vector,
                Kind::Fields => SeriesKind::Fields,
            };
            let compare = compare.as_deref().map(|p| (p, denom));
            folsym::cmd_molien(&config, MolienArgs { group: &group, character, kind, compare })
        }
        Command::Semi { group, character, degree } => folsym::cmd_semi(&config, &group, character, degree),
        Command::Catalog { action: CatalogAction::List } => folsym::cmd_catalog_list(&config),
        Command::Catalog { action: CatalogAction::Verify { name, degree } } => {
            folsym::cmd_catalog_verify(&config, &name, degree)
        }
        Command::Catalog { action: CatalogAction::Export } => folsym::cmd_catalog_export(),
        Command::Orbit { group, point } => folsym::cmd_orbit(&config, &group, &point),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.status.exit_code())
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.exit_code())
        }
    }
}
