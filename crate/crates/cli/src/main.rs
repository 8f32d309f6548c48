use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use weylchar::format::{parse_cycle_list, parse_int_list};
use weylchar::report::{timed, ClaimId, VerificationReport};
use weylchar::sn::mn_trace_sn;
use weylchar::table::{character_table_sn, character_table_wn};
use weylchar::wn::mn_trace_wn;
use weylchar::{so5, verify, BetaSequence, BiSymbol, SignedCycleType, SnClass};

#[derive(Parser)]
#[command(name = "weylchar", version, about = "Characters of symmetric and hyperoctahedral groups, and exhaustive checks")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true, env = "WEYLCHAR_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a virtual character at a conjugacy class
    #[command(subcommand)]
    Trace(TraceCmd),
    /// Run verification checks
    Verify(VerifyArgs),
    /// Print a character table
    Table(TableArgs),
}

#[derive(Subcommand)]
enum TraceCmd {
    /// `[beta]` of S_n at the class with the given cycle lengths
    Sn {
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long)]
        cycles: String,
    },
    /// Bi-symbol of W_n at a signed cycle type
    Wn {
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        top: String,
        #[arg(long, allow_hyphen_values = true, default_value = "")]
        bottom: String,
        #[arg(long, default_value = "")]
        pos: String,
        #[arg(long, default_value = "")]
        neg: String,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Claim {
    #[value(name = "lemma26")]
    TracesWm,
    #[value(name = "lemma27")]
    ParityWm,
    #[value(name = "lemma29")]
    TracesWpm,
    #[value(name = "lemma210")]
    ParityWpm,
    #[value(name = "prop211")]
    MultiplicityBc,
    #[value(name = "prop212")]
    MultiplicityD,
    #[value(name = "lemma217")]
    W4Evenness,
    So5,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    claim: Claim,
    /// Parameter m (m' for the type D parity check); default: the standard range
    #[arg(long)]
    m: Option<u32>,
    /// Field size for so5
    #[arg(long, default_value_t = 3)]
    q: u32,
    /// Random samples for so5 instead of full enumeration
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
    /// Include wall time in reports
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Sn,
    Wn,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Text,
    Csv,
}

#[derive(Args)]
struct TableArgs {
    #[arg(value_enum)]
    group: Group,
    #[arg(long)]
    n: u32,
    #[arg(long, value_enum, default_value_t = TableFormat::Text)]
    format: TableFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit codes: 0 pass, 1 a check failed, 2 bad input.
enum Failure {
    Checks,
    Input(String),
}

impl From<weylchar::Error> for Failure {
    fn from(e: weylchar::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn default_range(claim: ClaimId) -> Vec<u32> {
    match claim {
        ClaimId::TracesWm => (0..=5).collect(),
        ClaimId::ParityWm | ClaimId::TracesWpm | ClaimId::MultiplicityBc => (1..=5).collect(),
        ClaimId::ParityWpm => vec![1, 2],
        ClaimId::MultiplicityD => vec![2, 4],
        ClaimId::W4Evenness | ClaimId::So5 => vec![0],
    }
}

fn run_one(claim: ClaimId, m: u32, args: &VerifyArgs) -> weylchar::Result<VerificationReport> {
    match claim {
        ClaimId::TracesWm => verify::check_traces_w_m(m),
        ClaimId::ParityWm => verify::check_parity_w_m(m),
        ClaimId::TracesWpm => verify::check_traces_w_prime_m(m),
        ClaimId::ParityWpm => verify::check_parity_w_prime_m(m),
        ClaimId::MultiplicityBc => verify::check_multiplicity_bc(m),
        ClaimId::MultiplicityD => verify::check_multiplicity_d(m),
        ClaimId::W4Evenness => verify::check_w4_evenness(),
        ClaimId::So5 => so5::verify_so5(args.q, args.samples, args.seed),
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<String, Failure> {
    let claims: Vec<ClaimId> = match args.claim {
        Claim::All => ClaimId::ALL.to_vec(),
        // variants are declared in the order of ClaimId::ALL
        c => vec![ClaimId::ALL[c as usize]],
    };
    let mut reports = Vec::new();
    for claim in claims {
        let ms = match args.m {
            Some(m) if args.claim != Claim::All => vec![m],
            _ => default_range(claim),
        };
        for m in ms {
            let mut r = if args.timings {
                timed(|| run_one(claim, m, args))?
            } else {
                run_one(claim, m, args)?
            };
            r.seed = args.seed;
            reports.push(r);
        }
    }
    let mut out = String::new();
    for r in &reports {
        match args.format {
            ReportFormat::Text => out.push_str(&r.to_text()),
            ReportFormat::Json => out.push_str(&r.to_json_line()),
        }
        out.push('\n');
    }
    emit(&out, args.out.as_ref())?;
    if reports.iter().all(VerificationReport::passed) {
        Ok(String::new())
    } else {
        Err(Failure::Checks)
    }
}

fn cmd_trace(cmd: &TraceCmd) -> Result<String, Failure> {
    let v = match cmd {
        TraceCmd::Sn { beta, cycles } => {
            let beta = BetaSequence::new(parse_int_list(beta)?);
            let cls = SnClass::new(parse_cycle_list(cycles)?)?;
            mn_trace_sn(&beta, &cls)?
        }
        TraceCmd::Wn { top, bottom, pos, neg } => {
            let sym = BiSymbol::new(parse_int_list(top)?, parse_int_list(bottom)?);
            let cls = SignedCycleType::new(parse_cycle_list(pos)?, parse_cycle_list(neg)?)?;
            mn_trace_wn(&sym, &cls)?
        }
    };
    Ok(format!("{v}\n"))
}

fn cmd_table(args: &TableArgs) -> Result<String, Failure> {
    let table = match args.group {
        Group::Sn => character_table_sn(args.n)?,
        Group::Wn => character_table_wn(args.n)?,
    };
    let text = match args.format {
        TableFormat::Text => table.to_text(),
        TableFormat::Csv => table.to_csv(),
    };
    emit(&text, args.out.as_ref())?;
    Ok(String::new())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Input(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Trace(t) => cmd_trace(t),
        Command::Verify(v) => cmd_verify(v),
        Command::Table(t) => cmd_table(t),
    };
    match result {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
