use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hwdesign::arcs::{build_arcs, frame_for};
use hwdesign::cayley::{construction_00, construction_2ku, construction_2l, lemma_cm9, lemma_cmn_two};
use hwdesign::compose::{self, arcs_status, factorization_status, hwp_status, Externals, HwpStatus};
use hwdesign::format;
use hwdesign::model::Certificate;
use hwdesign::search::Budget;
use hwdesign::verify::check_certificate;
use hwdesign::Error;

const EXIT_INTERNAL: u8 = 1;
const EXIT_CLASSIFIED: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_USAGE: u8 = 64;
const EXIT_PARSE: u8 = 65;

const AFTER_HELP: &str = "\
EXIT CODES:
    0   success (verify: VALID)
    1   internal failure
    2   the request is classified NONEXISTENT, OPEN, NECESSARY_FAIL or
        MISSING_INGREDIENT, or no construction was found
    3   verify: INVALID
    64  bad flags
    65  verify: the file does not parse

ENVIRONMENT:
    DESIGN_FIXTURE_DIR
        Directory where searched ingredients (frames, small base designs)
        are cached. Unset means every search runs from scratch.
";

#[derive(Parser, Debug)]
#[command(name = "hwdesign", version)]
#[command(about = "Build, verify and classify cycle factorizations")]
#[command(after_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a design and write its certificate
    Build {
        #[command(subcommand)]
        what: BuildCommand,
        /// Output file (stdout when omitted)
        #[arg(short = 'o', long = "output", value_name = "PATH", global = true)]
        output: Option<PathBuf>,
    },
    /// Check a certificate file
    Verify {
        path: PathBuf,
    },
    /// Classify a Hamilton-Waterloo tuple, an ARCS order or a K_u[g]
    /// factorization
    Status(StatusArgs),
}

#[derive(Subcommand, Debug)]
enum BuildCommand {
    /// Almost resolvable k-cycle system of order 2kt+1
    Arcs {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// HW(v; m, n; alpha, beta)
    Hw {
        #[arg(long)]
        v: u32,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        alpha: u32,
        #[arg(long)]
        beta: u32,
        /// Certificate of an ingredient built elsewhere (repeatable)
        #[arg(long = "external", value_name = "PATH")]
        external: Vec<PathBuf>,
    },
    /// Cycle factorization of a Cayley graph on Z_k x Z_n
    Cayley(CayleyArgs),
    /// One of the stored designs (L4.1, L4.2, L4.3, L4.5, L4.6, L4.7, L3.11)
    Fixture {
        #[arg(long)]
        name: String,
    },
    /// (k,1)-cycle frame of type g^u
    Frame {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        u: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Construction {
    /// k C_k-factors from a k-ARCS(2kt+1) (needs --k --t)
    #[value(name = "00")]
    Zero,
    /// C_k- and C_{2kt+1}-factors (needs --k --t --l)
    #[value(name = "2l")]
    TwoL,
    /// C_k-factors plus a 1-factor from a (k,1)-CF(2^u) (needs --k --u)
    #[value(name = "2ku")]
    TwoKu,
    /// Two C_m-factors on C_m[n] (needs --m --n)
    #[value(name = "cmn")]
    Cmn,
    /// Four C_m-factors on C_m[9] (needs --m)
    #[value(name = "cm9")]
    Cm9,
}

#[derive(Args, Debug)]
struct CayleyArgs {
    #[arg(long, value_enum)]
    construction: Construction,
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    t: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
    #[arg(long)]
    u: Option<u32>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
    /// Frame certificate for 2ku instead of searching one
    #[arg(long, value_name = "PATH")]
    frame: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
struct StatusArgs {
    #[command(subcommand)]
    other: Option<StatusCommand>,
    #[arg(long)]
    v: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    alpha: Option<u64>,
    #[arg(long)]
    beta: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum StatusCommand {
    /// Existence of a k-ARCS(2kt+1)
    Arcs {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        t: u64,
    },
    /// Existence of a C_k-factorization of K_u[g]
    Factorization {
        #[arg(long)]
        k: u64,
        #[arg(long)]
        u: u64,
        #[arg(long, default_value_t = 1)]
        g: u64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match cli.command {
        Command::Build { what, output } => cmd_build(what, output),
        Command::Verify { path } => cmd_verify(&path),
        Command::Status(args) => cmd_status(args),
    }
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn need(v: Option<u32>, flag: &str, what: Construction) -> Result<u32, String> {
    v.ok_or_else(|| format!("construction {what:?} needs --{flag}"))
}

fn build(what: BuildCommand) -> Result<hwdesign::Result<Certificate>, String> {
    let budget = Budget::default();
    Ok(match what {
        BuildCommand::Arcs { k, t } => build_arcs(k, t),
        BuildCommand::Hw { v, m, n, alpha, beta, external } => {
            Externals::load(&external).and_then(|ext| compose::build_hw(v, m, n, alpha, beta, &ext))
        }
        BuildCommand::Fixture { name } => compose::fixture(&name),
        BuildCommand::Frame { k, g, u } => frame_for(k, g, u, budget),
        BuildCommand::Cayley(a) => {
            let c = a.construction;
            match c {
                Construction::Zero => {
                    let (k, t) = (need(a.k, "k", c)?, need(a.t, "t", c)?);
                    build_arcs(k as usize, t as usize).and_then(|arcs| construction_00(&arcs))
                }
                Construction::TwoL => {
                    construction_2l(need(a.k, "k", c)?, need(a.t, "t", c)?, need(a.l, "l", c)?)
                }
                Construction::TwoKu => {
                    let frame = match &a.frame {
                        Some(p) => format::read_file(p),
                        None => frame_for(need(a.k, "k", c)?, 2, need(a.u, "u", c)?, budget),
                    };
                    frame.and_then(|f| construction_2ku(&f))
                }
                Construction::Cmn => lemma_cmn_two(need(a.m, "m", c)?, need(a.n, "n", c)?),
                Construction::Cm9 => lemma_cm9(need(a.m, "m", c)?),
            }
        }
    })
}

fn cmd_build(what: BuildCommand, output: Option<PathBuf>) -> ExitCode {
    let cert = match build(what) {
        Err(msg) => return usage(&msg),
        Ok(Ok(c)) => c,
        Ok(Err(e)) => return report_error(&e),
    };
    match output {
        Some(path) => {
            if let Err(e) = format::write_file(&path, &cert) {
                eprintln!("{e}");
                return ExitCode::from(EXIT_INTERNAL);
            }
        }
        None => {
            let _ = std::io::stdout().lock().write_all(format::serialize(&cert).as_bytes());
        }
    }
    ExitCode::SUCCESS
}

fn report_error(e: &Error) -> ExitCode {
    println!("{e}");
    match e {
        Error::RejectParams(_) | Error::UnknownFixture(_) => ExitCode::from(EXIT_USAGE),
        e if e.is_classification() => ExitCode::from(EXIT_CLASSIFIED),
        _ => ExitCode::from(EXIT_INTERNAL),
    }
}

fn cmd_verify(path: &std::path::Path) -> ExitCode {
    let cert = match format::read_file(path) {
        Ok(c) => c,
        Err(e @ Error::Parse { .. }) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(EXIT_PARSE);
        }
        Err(e) => {
            eprintln!("{}: {e}", path.display());
            return ExitCode::from(EXIT_INTERNAL);
        }
    };
    let report = check_certificate(&cert);
    print!("{report}");
    if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INVALID)
    }
}

fn cmd_status(args: StatusArgs) -> ExitCode {
    match args.other {
        Some(StatusCommand::Arcs { k, t }) => println!("{}", arcs_status(k, t)),
        Some(StatusCommand::Factorization { k, u, g }) => println!("{}", factorization_status(k, u, g)),
        None => {
            let (Some(v), Some(m), Some(n)) = (args.v, args.m, args.n) else {
                return usage("status needs --v, --m and --n (or the arcs / factorization form)");
            };
            let mut out = std::io::stdout().lock();
            for line in hw_status_lines(v, m, n, args.alpha, args.beta) {
                // a closed pipe (e.g. `| head`) just ends the listing
                if writeln!(out, "{line}").is_err() {
                    break;
                }
            }
        }
    }
    ExitCode::SUCCESS
}

/// With both counts given, one line. Otherwise every split of the missing
/// count is classified; when all of them fail the same way one line is
/// enough.
fn hw_status_lines(v: u64, m: u64, n: u64, alpha: Option<u64>, beta: Option<u64>) -> Vec<String> {
    let total = v.saturating_sub(1) / 2;
    let splits: Vec<(u64, u64)> = match (alpha, beta) {
        (Some(a), Some(b)) => vec![(a, b)],
        (Some(a), None) => vec![(a, total.saturating_sub(a))],
        (None, Some(b)) => vec![(total.saturating_sub(b), b)],
        (None, None) => (0..=total).map(|a| (a, total - a)).collect(),
    };
    let all: Vec<(u64, u64, HwpStatus)> = splits
        .into_iter()
        .map(|(a, b)| (a, b, hwp_status(v, m, n, a, b)))
        .collect();
    if all.len() > 1 && all.iter().all(|(_, _, s)| matches!(s, HwpStatus::NecessaryFail(_))) {
        return vec![all[0].2.to_string()];
    }
    if all.len() == 1 {
        return vec![all[0].2.to_string()];
    }
    all.into_iter()
        .map(|(a, b, s)| format!("alpha={a} beta={b} {s}"))
        .collect()
}
