//! Command-line front end: print closed forms, evaluate sums exactly,
//! verify against the brute-force oracle, regenerate the published
//! identity table, and benchmark closed-form vs direct evaluation.
//!
//! Exit codes: 0 success, 1 verification/golden failure, 2 usage error,
//! 3 singular or divergent weight.

mod table;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use fibsum_core::engine::{
    closed_form, closed_form_latex, closed_form_symbolic, closed_form_text, closed_form_to_json,
    evaluate_closed, generating_function, generating_function_analytic,
    generating_function_symbolic, rebase_tail, split_alternating, split_latex, split_text,
    split_to_json, Basis, ClosedForm,
};
use fibsum_core::error::Error;
use fibsum_core::fib::Seeds;
use fibsum_core::oracle::{brute_sum, default_w_grid, integer_seed_grid, run_sweep, SweepConfig};
use fibsum_core::scalar::GaussianRational;

#[derive(Parser)]
#[command(
    name = "fibsum",
    about = "Exact closed forms for weighted generalized Fibonacci power sums",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BasisFlag {
    /// Standard n = 1 tail basis {G_k, G_{k+1}}.
    Gk,
    /// Shifted tail basis {G_{k+1}^n .. G_{k+n+1}^n}.
    Gk1,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closed form of sum_{j=0}^k w^j j^r G_j^n.
    ClosedForm(ClosedFormArgs),
    /// Evaluate the sum exactly at a concrete upper limit and seeds.
    Eval(EvalArgs),
    /// Print the infinite-sum (generating function) head.
    Genfunc(GenfuncArgs),
    /// Print the even/odd alternating identities for weight i.
    Split(SplitArgs),
    /// Sweep closed forms against direct summation and report.
    Verify(VerifyArgs),
    /// Regenerate the published identity corpus and diff it.
    PaperTable(PaperTableArgs),
    /// Time closed-form evaluation against direct summation.
    Bench(BenchArgs),
}

#[derive(Args)]
struct ClosedFormArgs {
    #[arg(long, value_name = "N")]
    n: u32,
    #[arg(long, value_name = "R")]
    r: u32,
    /// Weight: rational (`1/2`), Gaussian (`1+2*i`, `i`), or `symbolic`.
    #[arg(long, value_name = "W", allow_hyphen_values = true)]
    w: String,
    #[arg(long, value_enum)]
    basis: Option<BasisFlag>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
    /// Seeds `G0,G1`, each component rational (default Fibonacci `0,1`).
    #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
    seeds: String,
    /// Cross-check the closed-form value against direct summation.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct GenfuncArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    /// Print the analytic head even when the sum diverges.
    #[arg(long)]
    analytic: bool,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct SplitArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "4")]
    max_n: u32,
    #[arg(long, default_value = "4")]
    max_r: u32,
    #[arg(long, default_value = "25", allow_negative_numbers = true)]
    max_k: i64,
    /// Comma-separated weights overriding the default grid, e.g. `i,-i`.
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    w_grid: Option<String>,
    /// Extra random rational seed pairs beyond the integer grid.
    #[arg(long, default_value = "2")]
    trials: u32,
    #[arg(long, default_value = "4058641133")]
    rng_seed: u64,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct PaperTableArgs {
    /// Run only the identity with this id.
    #[arg(long, value_name = "ID")]
    only: Option<String>,
    /// Alternative fixture file (defaults to the embedded corpus).
    #[arg(long, value_name = "PATH")]
    fixtures: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    r: u32,
    #[arg(long, allow_hyphen_values = true)]
    w: String,
    /// Comma-separated upper limits, e.g. `1000,10000,100000`.
    #[arg(long, value_name = "LIST")]
    k_list: String,
    #[arg(long, default_value = "0,1", allow_hyphen_values = true)]
    seeds: String,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long, value_name = "PATH")]
    out: Option<String>,
}

/// Command outcomes that map onto the documented exit codes.
enum CliError {
    Usage(String),
    Failure(String),
    Weight(&'static str),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::SingularWeight => CliError::Weight("singular weight"),
            Error::DivergentWeight => CliError::Weight("divergent weight"),
            other => CliError::Usage(other.to_string()),
        }
    }
}

type CmdResult = Result<String, CliError>;

fn parse_weight(text: &str) -> Result<Option<GaussianRational>, CliError> {
    if text == "symbolic" {
        return Ok(None);
    }
    text.parse::<GaussianRational>()
        .map(Some)
        .map_err(|e| CliError::Usage(format!("bad weight `{text}`: {e}")))
}

fn parse_seeds(text: &str) -> Result<Seeds, CliError> {
    text.parse()
        .map_err(|e: Error| CliError::Usage(format!("bad seeds `{text}`: {e}")))
}

fn render_closed_numeric(cf: &ClosedForm<GaussianRational>, format: Format) -> CmdResult {
    match format {
        Format::Text => {
            let mut out = closed_form_text(cf);
            if cf.extension {
                out.push_str("\nextension: true");
            }
            Ok(out)
        }
        Format::Latex => Ok(closed_form_latex(cf)),
        Format::Json => Ok(closed_form_to_json(cf).to_string()),
        Format::Csv => Err(CliError::Usage("csv applies to bench only".into())),
    }
}

fn cmd_closed_form(args: &ClosedFormArgs) -> CmdResult {
    if args.n < 1 {
        return Err(CliError::Usage("closed forms require --n >= 1".into()));
    }
    let basis = match args.basis {
        Some(BasisFlag::Gk) | None if args.n == 1 => Basis::Standard,
        Some(BasisFlag::Gk) => {
            return Err(CliError::Usage(
                "--basis gk is only defined for n = 1".into(),
            ))
        }
        _ => Basis::Shifted,
    };
    match parse_weight(&args.w)? {
        Some(w) => {
            let cf = closed_form(args.n, args.r, &w)?;
            let cf = if basis == Basis::Standard {
                rebase_tail(&cf)?
            } else {
                cf
            };
            render_closed_numeric(&cf, args.format)
        }
        None => {
            let cf = closed_form_symbolic(args.n, args.r);
            let cf = if basis == Basis::Standard {
                rebase_tail(&cf)?
            } else {
                cf
            };
            match args.format {
                Format::Text => Ok(closed_form_text(&cf)),
                Format::Latex => Ok(closed_form_latex(&cf)),
                Format::Json => Ok(closed_form_to_json(&cf).to_string()),
                Format::Csv => Err(CliError::Usage("csv applies to bench only".into())),
            }
        }
    }
}

fn cmd_eval(args: &EvalArgs) -> CmdResult {
    if args.n < 1 {
        return Err(CliError::Usage("evaluation requires --n >= 1".into()));
    }
    if args.k < 0 {
        return Err(CliError::Usage("--k must be >= 0".into()));
    }
    let w = parse_weight(&args.w)?
        .ok_or_else(|| CliError::Usage("eval needs a numeric weight".into()))?;
    let seeds = parse_seeds(&args.seeds)?;
    let cf = closed_form(args.n, args.r, &w)?;
    let value = evaluate_closed(&cf, args.k, &seeds);
    if args.check {
        let direct = brute_sum(args.n, args.r, &w, args.k, &seeds);
        if direct != value {
            return Err(CliError::Failure(format!(
                "closed form {value} != direct sum {direct}"
            )));
        }
    }
    match args.format {
        Format::Json => Ok(json!({
            "n": args.n,
            "r": args.r,
            "w": w.to_string(),
            "k": args.k,
            "seeds": seeds.to_string(),
            "value": value.to_string(),
            "checked": args.check,
        })
        .to_string()),
        _ => Ok(value.to_string()),
    }
}

fn cmd_genfunc(args: &GenfuncArgs) -> CmdResult {
    if args.n < 1 {
        return Err(CliError::Usage("generating functions require --n >= 1".into()));
    }
    match parse_weight(&args.w)? {
        Some(w) => {
            let gf = if args.analytic {
                generating_function_analytic(args.n, args.r, &w)?
            } else {
                generating_function(args.n, args.r, &w)?
            };
            render_closed_numeric(&gf, args.format)
        }
        None => {
            let gf = generating_function_symbolic(args.n, args.r);
            match args.format {
                Format::Text => {
                    let mut out = closed_form_text(&gf);
                    if gf.extension {
                        out.push_str("\nextension: true");
                    }
                    Ok(out)
                }
                Format::Latex => Ok(closed_form_latex(&gf)),
                Format::Json => Ok(closed_form_to_json(&gf).to_string()),
                Format::Csv => Err(CliError::Usage("csv applies to bench only".into())),
            }
        }
    }
}

fn cmd_split(args: &SplitArgs) -> CmdResult {
    if args.n < 1 {
        return Err(CliError::Usage("splits require --n >= 1".into()));
    }
    let split = split_alternating(args.n, args.r)?;
    match args.format {
        Format::Text => Ok(split_text(&split)),
        Format::Latex => Ok(split_latex(&split)),
        Format::Json => Ok(split_to_json(&split).to_string()),
        Format::Csv => Err(CliError::Usage("csv applies to bench only".into())),
    }
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    if args.max_n < 1 {
        return Err(CliError::Usage("--max-n must be >= 1".into()));
    }
    if args.max_k < 0 {
        return Err(CliError::Usage("--max-k must be >= 0".into()));
    }
    let w_grid = match &args.w_grid {
        None => default_w_grid(),
        Some(list) => {
            let mut grid = Vec::new();
            for item in list.split(',') {
                let w: GaussianRational = item
                    .parse()
                    .map_err(|e| CliError::Usage(format!("bad weight `{item}`: {e}")))?;
                grid.push(w);
            }
            if grid.is_empty() {
                return Err(CliError::Usage("--w-grid must not be empty".into()));
            }
            grid
        }
    };
    let config = SweepConfig {
        n_max: args.max_n,
        r_max: args.max_r,
        k_max: args.max_k,
        w_grid,
        seed_grid: integer_seed_grid(args.max_n as i64),
        trials: args.trials,
        rng_seed: args.rng_seed,
    };
    let report = run_sweep(&config);
    let rendered = report.to_json().to_string();
    if report.passed() {
        Ok(rendered)
    } else {
        // The report is still the output; the exit code carries failure.
        Err(CliError::Failure(rendered))
    }
}

fn cmd_paper_table(args: &PaperTableArgs) -> CmdResult {
    let corpus_text = match &args.fixtures {
        None => table::GOLDEN_CORPUS.to_string(),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read `{path}`: {e}")))?,
    };
    let corpus = table::parse_corpus(&corpus_text)?;
    let rows = table::run_table(&corpus, args.only.as_deref())?;
    let failures = rows
        .iter()
        .filter(|r| r.status == table::TableStatus::Fail)
        .count();
    let rendered = match args.format {
        Format::Json => {
            let entries: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    let mut v = json!({
                        "id": r.id,
                        "status": if r.status == table::TableStatus::Pass { "pass" } else { "fail" },
                    });
                    if let Some((expected, regenerated)) = &r.diff {
                        v["expected"] = expected.clone();
                        v["regenerated"] = regenerated.clone();
                    }
                    v
                })
                .collect();
            json!({
                "identities": rows.len(),
                "failures": failures,
                "rows": entries,
            })
            .to_string()
        }
        _ => {
            let mut out = String::new();
            for r in &rows {
                match (&r.status, &r.diff) {
                    (table::TableStatus::Pass, _) => {
                        out.push_str(&format!("pass  {}\n", r.id));
                    }
                    (table::TableStatus::Fail, Some((expected, regenerated))) => {
                        out.push_str(&format!(
                            "FAIL  {}\n  expected:    {}\n  regenerated: {}\n",
                            r.id, expected, regenerated
                        ));
                    }
                    (table::TableStatus::Fail, None) => {
                        out.push_str(&format!("FAIL  {}\n", r.id));
                    }
                }
            }
            out.push_str(&format!(
                "{} identities, {} failures\n",
                rows.len(),
                failures
            ));
            out.trim_end().to_string()
        }
    };
    if failures == 0 {
        Ok(rendered)
    } else {
        Err(CliError::Failure(rendered))
    }
}

fn cmd_bench(args: &BenchArgs) -> CmdResult {
    if args.n < 1 {
        return Err(CliError::Usage("bench requires --n >= 1".into()));
    }
    let w = parse_weight(&args.w)?
        .ok_or_else(|| CliError::Usage("bench needs a numeric weight".into()))?;
    let seeds = parse_seeds(&args.seeds)?;
    let mut k_values = Vec::new();
    for item in args.k_list.split(',') {
        let k: i64 = item
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad k value `{item}`")))?;
        if k < 0 {
            return Err(CliError::Usage("k values must be >= 0".into()));
        }
        k_values.push(k);
    }
    if k_values.is_empty() {
        return Err(CliError::Usage("--k-list must not be empty".into()));
    }
    let synth_start = Instant::now();
    let cf = closed_form(args.n, args.r, &w)?;
    let synthesis_ns = synth_start.elapsed().as_nanos();
    let mut rows = Vec::new();
    for &k in &k_values {
        let brute_start = Instant::now();
        let direct = brute_sum(args.n, args.r, &w, k, &seeds);
        let brute_ns = brute_start.elapsed().as_nanos();
        let closed_start = Instant::now();
        let value = evaluate_closed(&cf, k, &seeds);
        let closed_ns = closed_start.elapsed().as_nanos();
        let equal = value == direct;
        if !equal {
            return Err(CliError::Failure(format!(
                "closed form and direct sum disagree at k = {k}"
            )));
        }
        let speedup = brute_ns as f64 / closed_ns.max(1) as f64;
        rows.push((k, brute_ns, closed_ns, equal, speedup));
    }
    match args.format {
        Format::Csv => {
            let mut out = String::from("k,brute_ns,closed_ns,equal,speedup\n");
            for (k, brute_ns, closed_ns, equal, speedup) in &rows {
                out.push_str(&format!("{k},{brute_ns},{closed_ns},{equal},{speedup:.2}\n"));
            }
            Ok(out.trim_end().to_string())
        }
        Format::Json => Ok(json!({
            "n": args.n,
            "r": args.r,
            "w": w.to_string(),
            "seeds": seeds.to_string(),
            "synthesis_ns": synthesis_ns as u64,
            "rows": rows.iter().map(|(k, brute_ns, closed_ns, equal, speedup)| json!({
                "k": k,
                "brute_ns": *brute_ns as u64,
                "closed_ns": *closed_ns as u64,
                "equal": equal,
                "speedup": speedup,
            })).collect::<Vec<_>>(),
        })
        .to_string()),
        _ => Err(CliError::Usage("bench emits --format json or csv".into())),
    }
}

fn emit(out_path: Option<&str>, payload: &str) -> Result<(), CliError> {
    match out_path {
        None => {
            println!("{payload}");
            Ok(())
        }
        Some(path) => {
            let mut f = std::fs::File::create(path)
                .map_err(|e| CliError::Usage(format!("cannot create `{path}`: {e}")))?;
            writeln!(f, "{payload}").map_err(|e| CliError::Usage(format!("write failed: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (result, out_path) = match &cli.command {
        Command::ClosedForm(a) => (cmd_closed_form(a), a.out.clone()),
        Command::Eval(a) => (cmd_eval(a), a.out.clone()),
        Command::Genfunc(a) => (cmd_genfunc(a), a.out.clone()),
        Command::Split(a) => (cmd_split(a), a.out.clone()),
        Command::Verify(a) => (cmd_verify(a), a.out.clone()),
        Command::PaperTable(a) => (cmd_paper_table(a), a.out.clone()),
        Command::Bench(a) => (cmd_bench(a), a.out.clone()),
    };
    match result {
        Ok(payload) => match emit(out_path.as_deref(), &payload) {
            Ok(()) => ExitCode::from(0),
            Err(CliError::Usage(msg)) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Err(_) => ExitCode::from(2),
        },
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failure(payload)) => {
            // Failure output still goes to the requested sink.
            let _ = emit(out_path.as_deref(), &payload);
            ExitCode::from(1)
        }
        Err(CliError::Weight(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}
