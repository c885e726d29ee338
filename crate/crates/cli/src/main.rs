use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

mod commands;
mod failure;
mod input;

use failure::Failure;

#[derive(Parser)]
#[command(name = "invsg", version, about = "Inverse semigroups of finite groups, partial actions and partial representations")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The inverse semigroup S(G).
    #[command(subcommand)]
    Sg(SgCommand),
    /// Partial actions on {0, …, n-1}.
    #[command(subcommand)]
    Pa(PaCommand),
    /// Partial representations by matrices.
    #[command(subcommand)]
    Rep(RepCommand),
    /// The algebra C[S(G)].
    #[command(subcommand)]
    Alg(AlgCommand),
    /// Grading subspaces of C[S(G)].
    #[command(subcommand)]
    Graded(GradedCommand),
}

#[derive(Args)]
struct GroupArg {
    /// cyclic:n, dihedral:n, klein4, trivial, or a JSON group file.
    group: String,
}

#[derive(Subcommand)]
enum SgCommand {
    /// |S(G)| = 2^(p-2)(p+1), cross-checked by enumeration when feasible.
    Order(GroupArg),
    /// Every element in canonical order.
    Enumerate {
        #[command(flatten)]
        group: GroupArg,
        /// Largest group order to enumerate.
        #[arg(long, default_value_t = invsg::sg::DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Canonical form of a product of generators [t1][t2]...
    Reduce {
        #[command(flatten)]
        group: GroupArg,
        /// Comma-separated group element indices.
        #[arg(long)]
        word: String,
    },
    /// Checks the inverse-semigroup axioms on the enumerated S(G).
    Verify(GroupArg),
}

#[derive(Subcommand)]
enum PaCommand {
    /// Checks the partial-action axioms and their semigroup reformulation.
    Validate { file: PathBuf },
    /// The induced action of S(G), tabulated.
    Extend { file: PathBuf },
    /// Translation on subsets containing the identity.
    Bernoulli(GroupArg),
}

#[derive(Subcommand)]
enum RepCommand {
    /// Checks the partial-representation identities.
    Validate {
        file: PathBuf,
        /// Entry tolerance; defaults to 0 for integer matrices and 1e-9 otherwise.
        #[arg(long)]
        tolerance: Option<f64>,
    },
    /// The induced representation of S(G), tabulated and checked.
    Extend {
        file: PathBuf,
        #[arg(long)]
        tolerance: Option<f64>,
    },
}

#[derive(Subcommand)]
enum AlgCommand {
    /// Matrix block sizes of C[S(G)].
    Decompose {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest algebra dimension to build.
        #[arg(long, default_value_t = invsg::algebra::DEFAULT_ALGEBRA_CAP)]
        cap: usize,
    },
}

#[derive(Subcommand)]
enum GradedCommand {
    /// Size of the semigroup generated by the grading subspaces.
    Count(GroupArg),
    /// Each element a of S(G) with the basis indices spanning B^a.
    Map(GroupArg),
}

fn run(cli: Cli) -> anyhow::Result<commands::Report> {
    use commands::*;
    match cli.command {
        Command::Sg(c) => match c {
            SgCommand::Order(g) => sg_order(&g.group),
            SgCommand::Enumerate { group, cap } => sg_enumerate(&group.group, cap),
            SgCommand::Reduce { group, word } => sg_reduce(&group.group, &word),
            SgCommand::Verify(g) => sg_verify(&g.group),
        },
        Command::Pa(c) => match c {
            PaCommand::Validate { file } => pa_validate(&file),
            PaCommand::Extend { file } => pa_extend(&file),
            PaCommand::Bernoulli(g) => pa_bernoulli(&g.group),
        },
        Command::Rep(c) => match c {
            RepCommand::Validate { file, tolerance } => rep_validate(&file, tolerance),
            RepCommand::Extend { file, tolerance } => rep_extend(&file, tolerance),
        },
        Command::Alg(AlgCommand::Decompose { group, seed, cap }) => alg_decompose(&group.group, seed, cap),
        Command::Graded(c) => match c {
            GradedCommand::Count(g) => graded_count(&g.group),
            GradedCommand::Map(g) => graded_map(&g.group),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let as_json = cli.json;
    match run(cli) {
        Ok(report) => {
            if as_json {
                println!("{}", serde_json::to_string(&report.json).expect("values serialize"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            let (code, message, details) = match err.downcast_ref::<Failure>() {
                Some(Failure::Domain { message, details }) => (1, message.clone(), details.clone()),
                Some(f @ Failure::Usage(_)) => (f.exit_code(), f.to_string(), None),
                None => (1, format!("{err:#}"), None),
            };
            if as_json {
                let kind = if code == 2 { "usage" } else { "domain" };
                let payload = json!({ "error": kind, "message": message, "details": details });
                println!("{payload}");
            } else {
                eprintln!("error: {message}");
                if let Some(d) = details {
                    eprintln!("{}", serde_json::to_string_pretty(&d).expect("values serialize"));
                }
            }
            ExitCode::from(code)
        }
    }
}
