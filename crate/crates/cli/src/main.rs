use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use schurflex::translation::{partition_model, PartitionIndex};
use schurflex::{CominusculeSpace, Family};

mod render;
mod translate;

#[derive(Parser)]
#[command(name = "schurflex", version, about = "Schur rigidity of Schubert classes in cominuscule spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Every Schubert class with its invariants and rigidity.
    List {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Convention::Increasing)]
        convention: Convention,
    },
    /// The Hasse diagram, as a cover list or in DOT.
    Hasse {
        #[command(flatten)]
        space: SpaceArgs,
        #[arg(long)]
        dot: bool,
    },
    /// Run a cross-check suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Convert between a partition and (a, J) and decide rigidity.
    Translate {
        #[command(flatten)]
        space: SpaceArgs,
        /// Comma-separated parts.
        #[arg(long, conflicts_with = "aj", required_unless_present = "aj")]
        partition: Option<String>,
        /// `a:j1,j2,...`
        #[arg(long)]
        aj: Option<String>,
        #[arg(long, value_enum, default_value_t = Convention::Increasing)]
        convention: Convention,
    },
}

#[derive(Args)]
struct SpaceArgs {
    /// A, B, C, D, E6 or E7.
    #[arg(long)]
    family: Family,
    #[arg(long)]
    rank: Option<usize>,
    /// Defaults: B -> 1, C -> rank, E6 -> 6, E7 -> 7.
    #[arg(long)]
    node: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Md,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Convention {
    Increasing,
    Decreasing,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Dictionaries,
    Criteria,
    Duality,
    Figures,
    Examples,
    Structure,
    All,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<schurflex::Error> for Failure {
    fn from(e: schurflex::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl SpaceArgs {
    fn resolve(&self) -> Result<CominusculeSpace, Failure> {
        let rank = match (self.family, self.rank) {
            (_, Some(r)) => r,
            (Family::E6, None) => 6,
            (Family::E7, None) => 7,
            (f, None) => return Err(Failure::Usage(format!("--rank is required for family {f}"))),
        };
        let node = match (self.family, self.node) {
            (_, Some(k)) => k,
            (Family::B, None) => 1,
            (Family::C, None) => rank,
            (Family::E6, None) => 6,
            (Family::E7, None) => 7,
            (f, None) => return Err(Failure::Usage(format!("--node is required for family {f}"))),
        };
        Ok(CominusculeSpace::new(self.family, rank, node)?)
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Failure::Usage(format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

fn parse_partition(
    space: &CominusculeSpace,
    text: &str,
    convention: Convention,
) -> Result<PartitionIndex, Failure> {
    let fam = partition_model(space)?;
    let parts = parse_list(text)?;
    Ok(match convention {
        Convention::Increasing => PartitionIndex::new(fam, parts)?,
        Convention::Decreasing => PartitionIndex::from_decreasing(fam, &parts)?,
    })
}

fn run_verify(suite: Suite) -> Result<(), Failure> {
    use schurflex::verify;
    let reports = match suite {
        Suite::Dictionaries => vec![verify::check_dictionaries()],
        Suite::Criteria => vec![verify::check_criteria()],
        Suite::Duality => vec![verify::check_duality()],
        Suite::Figures => vec![
            verify::check_lg5_table(),
            verify::check_spinor6_table(),
            verify::check_e6_figure(),
            verify::check_e7_figure(),
        ],
        Suite::Examples => vec![verify::check_examples()],
        Suite::Structure => vec![verify::check_structure()],
        Suite::All => verify::check_all(),
    };
    let mut failed = Vec::new();
    for r in &reports {
        println!("{} {}", if r.passed() { "ok  " } else { "FAIL" }, r.summary());
        if !r.passed() {
            failed.push(r.name.clone());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Verification(format!("failed: {}", failed.join(", "))))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Command::List {
            space,
            format,
            convention,
        } => {
            let space = space.resolve()?;
            let decreasing = convention == Convention::Decreasing;
            print!("{}", render::list(&space, format, decreasing)?);
        }
        Command::Hasse { space, dot } => {
            let space = space.resolve()?;
            let out = if dot {
                render::dot(&space)?
            } else {
                render::covers(&space)?
            };
            print!("{out}");
        }
        Command::Verify { suite } => run_verify(suite)?,
        Command::Translate {
            space,
            partition,
            aj,
            convention,
        } => {
            let space = space.resolve()?;
            let input = match (partition, aj) {
                (Some(p), _) => translate::Input::Partition(parse_partition(&space, &p, convention)?),
                (None, Some(a)) => translate::Input::AJ(translate::parse_aj(&a)?),
                (None, None) => return Err(Failure::Usage("give --partition or --aj".into())),
            };
            let decreasing = convention == Convention::Decreasing;
            print!("{}", translate::translate(&space, input, decreasing)?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
