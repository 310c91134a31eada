use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Args, Parser, Subcommand, ValueEnum};
use renner_core::bruhat::{bruhat_order, renner_poset};
use renner_core::cosets::double_coset_poset;
use renner_core::poset::{PosetDocument, DEFAULT_EL_BUDGET};
use renner_core::putcha::{csl_dcm, putcha_poset_dcm, putcha_poset_mn, Parity};
use renner_core::verify::{run_all, run_claim, ClaimParams, Status, CLAIM_IDS, POSET_TARGETS};
use renner_core::weak::{weak_poset_w, wew_weak_dcm, wew_weak_mn, WeakKind};
use renner_core::{EnumerationLimits, Error, SimpleSubset};

/// Rook monoids, Renner order, Putcha posets and two-sided weak orders.
#[derive(Parser)]
#[command(name = "renner", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a poset and print it as JSON or DOT.
    Poset(PosetArgs),
    /// Check one claim exhaustively; exit 0 pass, 1 fail, 3 skipped for budget.
    Verify(VerifyArgs),
    /// Check every claim at its default range; exit 0 iff all pass.
    VerifyAll(VerifyAllArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetKind {
    Bruhat,
    Renner,
    DoubleCoset,
    PutchaDcm,
    PutchaMn,
    WeakW,
    WeakWewDcm,
    WeakWewMn,
    CslDcm,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
    Lr,
}

#[derive(Args)]
struct PosetArgs {
    #[arg(value_enum)]
    kind: PosetKind,
    /// Degree of S_n or R_n.
    #[arg(long)]
    n: usize,
    /// Simple generators, e.g. `1,2`, or `none`.
    #[arg(long = "I", value_name = "I")]
    subset: Option<String>,
    /// Right parabolic for double cosets; defaults to --I.
    #[arg(long = "J", value_name = "J")]
    right: Option<String>,
    /// Rank of the idempotent e_i.
    #[arg(long)]
    i: Option<usize>,
    #[arg(long, value_enum, default_value = "lr")]
    side: SideArg,
    #[arg(long, value_enum, default_value = "json")]
    format: OutputFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_parser = PossibleValuesParser::new(CLAIM_IDS))]
    claim: String,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, value_parser = ["even", "odd"])]
    parity: Option<String>,
    #[arg(long = "I", value_name = "I")]
    subset: Option<String>,
    #[arg(long)]
    i: Option<usize>,
    /// Target for eulerian and el-shellable.
    #[arg(long, value_parser = PossibleValuesParser::new(POSET_TARGETS))]
    poset: Option<String>,
    /// Largest EL label; defaults to 2(n-1).
    #[arg(long)]
    labels: Option<u32>,
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct VerifyAllArgs {
    #[command(flatten)]
    budget: Budget,
}

#[derive(Args)]
struct Budget {
    /// Node budget for the EL search.
    #[arg(long, env = "RENNER_BUDGET", default_value_t = DEFAULT_EL_BUDGET)]
    budget: u64,
    /// Cap on the degree of default ranges.
    #[arg(long)]
    max_n: Option<usize>,
}

fn subset(n: usize, arg: Option<&str>) -> Result<SimpleSubset, Error> {
    match arg {
        Some(s) => SimpleSubset::parse(n, s),
        None => Err(Error::InvalidParameters(
            "--I is required for this kind".into(),
        )),
    }
}

fn build_poset(args: &PosetArgs) -> Result<PosetDocument, Error> {
    let lim = EnumerationLimits::default();
    let n = args.n;
    let i_subset = || subset(n, args.subset.as_deref());
    let rank = || {
        args.i
            .ok_or_else(|| Error::InvalidParameters("--i is required for this kind".into()))
    };
    let doc = match args.kind {
        PosetKind::Bruhat => bruhat_order(n, &lim)?.to_document(),
        PosetKind::Renner => renner_poset(n, &lim)?.poset.to_document(),
        PosetKind::DoubleCoset => {
            let i = i_subset()?;
            let j = match &args.right {
                Some(j) => SimpleSubset::parse(n, j)?,
                None => i,
            };
            double_coset_poset(&i, &j)?.to_document()
        }
        PosetKind::PutchaDcm => putcha_poset_dcm(&i_subset()?)?.to_document(),
        PosetKind::PutchaMn => putcha_poset_mn(n, &lim)?.poset.to_document(),
        PosetKind::WeakW => {
            let kind = match args.side {
                SideArg::Left => WeakKind::Left,
                SideArg::Right => WeakKind::Right,
                SideArg::Lr => WeakKind::TwoSided,
            };
            weak_poset_w(n, kind, &lim)?.document()
        }
        PosetKind::WeakWewDcm => wew_weak_dcm(&i_subset()?)?.weak.document(),
        PosetKind::WeakWewMn => wew_weak_mn(n, rank()?, &lim)?.weak.document(),
        PosetKind::CslDcm => csl_dcm(n).to_document(),
    };
    let name = args
        .kind
        .to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default();
    Ok(doc.with_name(name))
}

fn usage_error(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn exit_for(status: Status) -> ExitCode {
    ExitCode::from(match status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::SkippedBudget => 3,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Poset(args) => match build_poset(&args) {
            Ok(doc) => {
                match args.format {
                    OutputFormat::Json => println!("{}", doc.to_json()),
                    OutputFormat::Dot => print!("{}", doc.to_dot()),
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Verify(args) => {
            let params = ClaimParams {
                n: args.n,
                m: args.m,
                parity: args
                    .parity
                    .as_deref()
                    .map(|p| p.parse::<Parity>().expect("validated by clap")),
                subset: args.subset,
                i: args.i,
                poset: args.poset,
                labels: args.labels,
                budget: args.budget.budget,
                max_n: args.budget.max_n,
                limits: EnumerationLimits::default(),
            };
            match run_claim(&args.claim, &params) {
                Ok(report) => {
                    eprint!("{report}");
                    exit_for(report.status)
                }
                Err(e) => usage_error(e),
            }
        }
        Command::VerifyAll(args) => match run_all(args.budget.max_n, args.budget.budget) {
            Ok(reports) => {
                let mut all_pass = true;
                for r in &reports {
                    eprint!("{r}");
                    println!("{:<22} {}", r.claim, r.status);
                    all_pass &= r.status == Status::Pass;
                }
                if all_pass {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::from(1)
                }
            }
            Err(e) => usage_error(e),
        },
    }
}
