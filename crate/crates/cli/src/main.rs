use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use polya::{parse_catalog, resolve_caps, run, run_suite, Command, Format, JobSpec, Status};

#[derive(Parser)]
#[command(
    name = "polya",
    version,
    about = "Generalized cycle indices with linear characters, checked exactly"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List the linear characters of a group
    Characters(Common),
    /// Print Z(chi; p_1, ..., p_d)
    CycleIndex(Common),
    /// Orbit census on [0,n]^d
    Orbits(Common),
    /// Weighted sum over chi-orbit representatives
    Gn(Common),
    /// Check g_n against the specialized cycle index
    Verify(Common),
    /// Check the product rule; pass --group/--char twice
    VerifyProduct(Common),
    /// Check the insertion rule; pass the inner group/char first
    VerifyPlethysm(Common),
    /// Check the projector and basis statements on the tensor power
    VerifyBasis(Common),
    /// Run every job of a catalog file
    Suite(SuiteArgs),
}

#[derive(Args)]
struct Common {
    /// Group expression, e.g. "S(3)" or "wreath(S(2),C(3))"
    #[arg(long)]
    group: Vec<String>,
    /// Character: unit, sign, index:k or vals{g1:k/m,...}
    #[arg(long = "char")]
    chars: Vec<String>,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Fmt,
    /// Work cap for orbit enumeration and expansion
    #[arg(long)]
    cap: Option<u128>,
    /// Random monomial twist (verify-basis only)
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SuiteArgs {
    #[arg(long)]
    catalog: PathBuf,
    #[arg(long, value_enum, default_value = "text")]
    format: Fmt,
    #[arg(long)]
    cap: Option<u128>,
    /// Worker threads; 0 picks one per core
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Text,
    Json,
    Tsv,
}

impl From<Fmt> for Format {
    fn from(f: Fmt) -> Self {
        match f {
            Fmt::Text => Format::Text,
            Fmt::Json => Format::Json,
            Fmt::Tsv => Format::Tsv,
        }
    }
}

fn env(name: &str) -> Option<String> {
    std::env::var(name).ok()
}

fn finish(status: Status, out: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(status.exit_code() as u8)
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(Status::Usage.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (command, c) = match cli.cmd {
        Cmd::Characters(c) => (Command::Characters, c),
        Cmd::CycleIndex(c) => (Command::CycleIndex, c),
        Cmd::Orbits(c) => (Command::Orbits, c),
        Cmd::Gn(c) => (Command::Gn, c),
        Cmd::Verify(c) => (Command::Verify, c),
        Cmd::VerifyProduct(c) => (Command::VerifyProduct, c),
        Cmd::VerifyPlethysm(c) => (Command::VerifyPlethysm, c),
        Cmd::VerifyBasis(c) => (Command::VerifyBasis, c),
        Cmd::Suite(s) => {
            let caps = match resolve_caps(s.cap, env) {
                Ok(c) => c,
                Err(e) => return usage(e),
            };
            let text = match std::fs::read_to_string(&s.catalog) {
                Ok(t) => t,
                Err(e) => return usage(format!("{}: {e}", s.catalog.display())),
            };
            let entries = match parse_catalog(&text) {
                Ok(e) => e,
                Err(e) => return usage(e),
            };
            if entries.is_empty() {
                return usage(format!("{}: catalog has no jobs", s.catalog.display()));
            }
            return match run_suite(&entries, caps, s.jobs) {
                Ok(report) => finish(report.status(), &report.render(s.format.into())),
                Err(e) => usage(e),
            };
        }
    };
    let caps = match resolve_caps(c.cap, env) {
        Ok(c) => c,
        Err(e) => return usage(e),
    };
    let mut spec = match JobSpec::from_args(command, &c.group, &c.chars, c.n, c.format.into(), caps)
    {
        Ok(s) => s,
        Err(e) => return usage(e),
    };
    spec.seed = c.seed;
    let outcome = run(&spec);
    if outcome.status == Status::Ok || outcome.status == Status::Mismatch {
        finish(outcome.status, &outcome.output)
    } else {
        eprint!("{}", outcome.output);
        ExitCode::from(outcome.status.exit_code() as u8)
    }
}
