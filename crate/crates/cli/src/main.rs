//! `soscert`: exact sums-of-squares certification from the command line.
//!
//! Exit codes: 0 all requested verdicts definite, 1 instance fails
//! verification, 2 parse/usage error, 3 stage-1 inconclusive, 4 budget
//! exhausted.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sos_core::certify::SosInstance;
use sos_core::groebner::Budget;
use sos_core::instances;
use sos_core::poly::MonomialOrder;
use sos_core::report::{render_text, run_certification, run_verification_report};

const EXIT_OK: u8 = 0;
const EXIT_INVALID_INSTANCE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(
    name = "soscert",
    about = "Verify sums-of-squares decompositions and certify minimal square counts, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the squared generators sum to the target polynomial
    Verify(InstanceArgs),
    /// Dual analysis: obstruction space, PSD element, kernel, pin verdict
    Dual(AnalysisArgs),
    /// Decide for each requested square count whether it suffices
    Certify(CertifyArgs),
}

#[derive(Args)]
struct InstanceArgs {
    /// Bundled instance name (example-2.1 | example-2.2)
    #[arg(long, conflicts_with = "file")]
    builtin: Option<String>,
    /// Instance file path
    #[arg(long)]
    file: Option<PathBuf>,
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalysisArgs {
    #[command(flatten)]
    instance: InstanceArgs,
    /// Monomial order for bases and Groebner runs
    #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
    order: OrderArg,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    analysis: AnalysisArgs,
    /// Square count to decide: a single t or an inclusive range t1..t2
    #[arg(long)]
    squares: String,
    /// Groebner budget: maximum S-pairs processed
    #[arg(long, default_value_t = Budget::default().max_pairs)]
    max_pairs: usize,
    /// Groebner budget: maximum coefficient size in bits
    #[arg(long, default_value_t = Budget::default().max_coeff_bits)]
    max_coeff_bits: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> MonomialOrder {
        match o {
            OrderArg::Degrevlex => MonomialOrder::DegRevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

fn load_instance(args: &InstanceArgs) -> Result<SosInstance, (u8, String)> {
    let (name, text) = if let Some(builtin) = &args.builtin {
        let Some(text) = instances::builtin_text(builtin) else {
            return Err((
                EXIT_PARSE,
                format!(
                    "unknown builtin '{builtin}' (available: {})",
                    instances::BUILTIN_NAMES.join(", ")
                ),
            ));
        };
        (builtin.clone(), text.to_string())
    } else if let Some(path) = &args.file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| (EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
        (path.display().to_string(), text)
    } else {
        return Err((EXIT_PARSE, "give --builtin <name> or --file <path>".into()));
    };
    SosInstance::from_instance_text(&name, &text).map_err(|e| (EXIT_PARSE, e.to_string()))
}

fn emit(args: &InstanceArgs, body: &str) -> Result<(), (u8, String)> {
    match &args.out {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .map_err(|e| (EXIT_PARSE, e.to_string()))
        }
        Some(path) => std::fs::write(path, body)
            .map_err(|e| (EXIT_PARSE, format!("cannot write {}: {e}", path.display()))),
    }
}

fn parse_squares(arg: &str) -> Result<Vec<usize>, String> {
    let parse_one = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| format!("bad square count '{s}'"))
            .and_then(|t| {
                if t == 0 {
                    Err("square count must be positive".into())
                } else {
                    Ok(t)
                }
            })
    };
    match arg.split_once("..") {
        None => Ok(vec![parse_one(arg)?]),
        Some((lo, hi)) => {
            let lo = parse_one(lo)?;
            let hi = parse_one(hi)?;
            if lo > hi {
                return Err(format!("empty range {lo}..{hi}"));
            }
            Ok((lo..=hi).collect())
        }
    }
}

fn log_timings(report: &sos_core::report::CertificateReport) {
    if let Some(d) = report.timings.stage1 {
        eprintln!("stage 1: {d:.2?}");
    }
    for (t, d) in &report.timings.stage2 {
        eprintln!("stage 2 (t={t}): {d:.2?}");
    }
}

fn run() -> Result<u8, (u8, String)> {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => {
            let inst = load_instance(&args)?;
            let report = run_verification_report(&inst, MonomialOrder::DegRevLex)
                .map_err(|e| (EXIT_PARSE, e.to_string()))?;
            let body = match args.format {
                Format::Json => report.to_json() + "\n",
                Format::Text => render_text(&report, None),
            };
            emit(&args, &body)?;
            Ok(if report.verification.valid() {
                EXIT_OK
            } else {
                EXIT_INVALID_INSTANCE
            })
        }
        Command::Dual(args) => {
            let inst = load_instance(&args.instance)?;
            let run = run_certification(&inst, &[], args.order.into(), &Budget::default())
                .map_err(|e| (EXIT_PARSE, e.to_string()))?;
            let body = match args.instance.format {
                Format::Json => run.report.to_json() + "\n",
                Format::Text => render_text(&run.report, run.stage1.as_ref()),
            };
            emit(&args.instance, &body)?;
            log_timings(&run.report);
            if !run.report.verification.valid() {
                return Ok(EXIT_INVALID_INSTANCE);
            }
            let pinned = run
                .report
                .stage1
                .as_ref()
                .is_some_and(|s| s.verdict == "pinned");
            Ok(if pinned { EXIT_OK } else { EXIT_INCONCLUSIVE })
        }
        Command::Certify(args) => {
            let inst = load_instance(&args.analysis.instance)?;
            let squares = parse_squares(&args.squares).map_err(|m| (EXIT_PARSE, m))?;
            if args.max_pairs == 0 || args.max_coeff_bits == 0 {
                return Err((EXIT_PARSE, "budgets must be positive".into()));
            }
            let budget = Budget {
                max_pairs: args.max_pairs,
                max_coeff_bits: args.max_coeff_bits,
            };
            let run = run_certification(&inst, &squares, args.analysis.order.into(), &budget)
                .map_err(|e| (EXIT_PARSE, e.to_string()))?;
            let body = match args.analysis.instance.format {
                Format::Json => run.report.to_json() + "\n",
                Format::Text => render_text(&run.report, run.stage1.as_ref()),
            };
            emit(&args.analysis.instance, &body)?;
            log_timings(&run.report);
            if !run.report.verification.valid() {
                return Ok(EXIT_INVALID_INSTANCE);
            }
            let sound = run.stage1.as_ref().is_some_and(|s| s.stage2_sound());
            if !sound {
                return Ok(EXIT_INCONCLUSIVE);
            }
            if run
                .report
                .stage2
                .iter()
                .any(|s| s.verdict == "budget-exhausted")
            {
                return Ok(EXIT_BUDGET);
            }
            Ok(EXIT_OK)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err((code, message)) => {
            eprintln!("soscert: {message}");
            ExitCode::from(code)
        }
    }
}
