//! Command-line front end: `ruling`, `torus`, `ade`, `scan`, `check`,
//! `indep` and `regress`.
//!
//! Exit codes: 0 success, 1 runtime failure (I/O and the like), 2 usage or
//! input error, 3 conjecture violations found by `scan`, 4 an internal
//! cross-check failed.

pub mod emit;
pub mod regress;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use bps_core::braidcore::BraidWord;
use bps_core::closedforms::{
    ade_bps, ade_braid, ade_graph, independence_poly, torus_rtilde, AdeLabel, ClosedFormError, DynkinGraph,
};
use bps_core::concavity::conjecture_report;
use bps_core::rulingdp::{normalized_ruling_poly, ruling_poly, RulingError, MAX_STRANDS};
use bps_core::scanner::{scan, singlepeak_factors, ScanConfig, ScanError, ScanRecord};
use bps_core::BpsSequence;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Parser, Debug)]
#[command(
    name = "bps",
    version,
    about = "BPS invariants from normal rulings of positive braids"
)]
pub struct Cli {
    #[command(flatten)]
    format: FormatArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct FormatArgs {
    /// Emit JSON (one object per record)
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV with a header row
    #[arg(long, global = true)]
    csv: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ruling polynomial, R~ and the sequence predicates of a braid word
    /// such as `1^2,2^2,3^2,4^2,3^2,2,1@5`
    Ruling { word: String },
    /// Closed form for the (n, m) torus knot, cross-checked against rulings
    Torus {
        n: u32,
        m: u32,
        /// Skip the ruling cross-check
        #[arg(long)]
        no_check: bool,
    },
    /// Closed form, independence polynomial and braid for an ADE label (A5, D7, E8)
    Ade { label: String },
    /// Exhaustive scan of positive braid words
    Scan(ScanArgs),
    /// Predicates of a comma-separated coefficient list
    Check { coeffs: String },
    /// Independence polynomial of a forest given as an edge-list file
    Indep { edge_file: PathBuf },
    /// Evaluate every built-in regression vector
    Regress,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, default_value_t = 4)]
    max_strands: usize,
    #[arg(long, default_value_t = 8)]
    max_length: usize,
    /// Worker threads (default: available cores)
    #[arg(long, env = "BPS_WORKERS")]
    workers: Option<usize>,
    /// Append records to this cache file
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Reuse records already in the cache
    #[arg(long, requires = "cache")]
    resume: bool,
    /// Print only the summary and any violations
    #[arg(long)]
    summary: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Runtime(_) => EXIT_RUNTIME,
            Failure::Internal(_) => EXIT_INTERNAL,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Runtime(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

impl From<RulingError> for Failure {
    fn from(e: RulingError) -> Self {
        match e {
            RulingError::TooManyStrands { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<ClosedFormError> for Failure {
    fn from(e: ClosedFormError) -> Self {
        match e {
            ClosedFormError::Algebra(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ScanError> for Failure {
    fn from(e: ScanError) -> Self {
        match e {
            ScanError::Io(_) | ScanError::ThreadPool(_) | ScanError::CacheCorrupt { .. } => {
                Failure::Runtime(e.to_string())
            }
            ScanError::ResourceExceeded { .. } | ScanError::InvalidConfig(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Format {
    Human,
    Json,
    Csv,
}

/// Parses `args` (including the program name) and runs the command, writing
/// machine output to `out` and diagnostics to stderr. Returns the exit code.
pub fn run_with<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let format = if cli.format.json {
        Format::Json
    } else if cli.format.csv {
        Format::Csv
    } else {
        Format::Human
    };
    let result = match cli.command {
        Command::Ruling { word } => cmd_ruling(&word, format, out),
        Command::Torus { n, m, no_check } => cmd_torus(n, m, !no_check, format, out),
        Command::Ade { label } => cmd_ade(&label, format, out),
        Command::Scan(args) => cmd_scan(args, format, out),
        Command::Check { coeffs } => cmd_check(&coeffs, format, out),
        Command::Indep { edge_file } => cmd_indep(&edge_file, format, out),
        Command::Regress => cmd_regress(format, out),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message());
            f.code()
        }
    }
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    let code = run_with(args, &mut lock);
    let _ = lock.flush();
    code
}

fn write_json<W: Write>(out: &mut W, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{v}")?;
    Ok(())
}

fn write_csv<W: Write>(out: &mut W, header: &[&str], rows: &[Vec<String>]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in rows {
        w.write_record(r)?;
    }
    w.flush()?;
    Ok(())
}

fn parse_word(s: &str) -> Result<BraidWord, Failure> {
    s.parse()
        .map_err(|e: bps_core::braidcore::BraidError| Failure::Usage(e.to_string()))
}

fn cmd_ruling<W: Write>(word: &str, format: Format, out: &mut W) -> Result<i32, Failure> {
    let w = parse_word(word)?;
    let r = ruling_poly(&w)?;
    let rec = ScanRecord::compute(w.clone())?;
    let factors = singlepeak_factors(&w).ok();
    if let Some(fs) = &factors {
        let product = fs.iter().fold(BpsSequence::one(), |acc, f| acc.product(&f.rtilde));
        if product != rec.rtilde {
            return Err(Failure::Internal(format!(
                "single-peak product {product} disagrees with the ruling DP {}",
                rec.rtilde
            )));
        }
    }
    match format {
        Format::Json => {
            let mut m = emit::record(&rec);
            m.insert("input".into(), json!(w.to_string()));
            m.insert("ruling_poly".into(), json!(r.to_string()));
            if let Some(fs) = &factors {
                let v: Vec<Value> = fs
                    .iter()
                    .map(|f| json!({"tower": f.exponent, "rtilde": emit::sequence(&f.rtilde)}))
                    .collect();
                m.insert("peak_factors".into(), Value::Array(v));
            }
            write_json(out, &Value::Object(m))?;
        }
        Format::Csv => write_csv(out, &emit::RECORD_HEADER, &[emit::record_row(&rec)])?,
        Format::Human => {
            writeln!(out, "word        {} ({} strands)", w.pretty(), w.strands())?;
            writeln!(out, "invariants  ell={} tb={} mu={}", rec.ell, rec.tb, rec.mu)?;
            writeln!(out, "R(z)        {r}")?;
            writeln!(out, "R~          {}", rec.rtilde)?;
            writeln!(out, "            {}", rec.rtilde.to_poly_string())?;
            if let Some(fs) = &factors {
                let parts: Vec<String> = fs.iter().map(|f| format!("({})", f.rtilde.to_poly_string())).collect();
                writeln!(out, "peeled      {}", parts.join(""))?;
            }
            writeln!(out, "report      {}", emit::report_line(&rec.report))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_torus<W: Write>(n: u32, m: u32, check: bool, format: Format, out: &mut W) -> Result<i32, Failure> {
    let rt = torus_rtilde(n, m)?;
    let report = conjecture_report(&rt);
    let cross = if check && (n as usize) <= MAX_STRANDS {
        let w = BraidWord::torus(n as usize, m as usize).map_err(|e| Failure::Usage(e.to_string()))?;
        Some(normalized_ruling_poly(&w)? == rt)
    } else {
        None
    };
    let cross_str = match cross {
        Some(true) => "ok",
        Some(false) => "mismatch",
        None => "skipped",
    };
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "n": n, "m": m,
                "delta": rt.delta(),
                "rtilde": emit::sequence(&rt),
                "report": emit::report(&report),
                "cross_check": cross_str,
            }),
        )?,
        Format::Csv => write_csv(
            out,
            &[
                "n",
                "m",
                "rtilde",
                "log_concave",
                "no_internal_zeros",
                "unimodal",
                "cross_check",
            ],
            &[vec![
                n.to_string(),
                m.to_string(),
                rt.to_csv(),
                report.log_concave.to_string(),
                report.no_internal_zeros.to_string(),
                report.unimodal.to_string(),
                cross_str.to_string(),
            ]],
        )?,
        Format::Human => {
            writeln!(out, "torus knot  ({n}, {m}), delta {}", rt.delta())?;
            writeln!(out, "R~          {rt}")?;
            writeln!(out, "report      {}", emit::report_line(&report))?;
            writeln!(out, "cross-check {cross_str}")?;
        }
    }
    if cross == Some(false) {
        return Err(Failure::Internal("closed form disagrees with the ruling DP".into()));
    }
    Ok(EXIT_OK)
}

fn cmd_ade<W: Write>(label: &str, format: Format, out: &mut W) -> Result<i32, Failure> {
    let label: AdeLabel = label.parse()?;
    let closed = ade_bps(label);
    let indep = independence_poly(&ade_graph(label))?;
    let from_graph = BpsSequence::new(indep.clone()).reversed();
    let braid = ade_braid(label);
    let from_braid = if braid.strands() <= MAX_STRANDS {
        Some(normalized_ruling_poly(&braid)?)
    } else {
        None
    };
    let agree = from_graph == closed && from_braid.as_ref().is_none_or(|b| *b == closed);
    let report = conjecture_report(&closed);
    let status = if agree { "ok" } else { "mismatch" };
    let indep_seq = BpsSequence::new(indep);
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "label": label.to_string(),
                "delta": label.delta(),
                "rtilde": emit::sequence(&closed),
                "independence": emit::sequence(&indep_seq),
                "braid": braid.to_string(),
                "braid_rtilde": from_braid.as_ref().map(emit::sequence),
                "report": emit::report(&report),
                "cross_check": status,
            }),
        )?,
        Format::Csv => write_csv(
            out,
            &[
                "label",
                "rtilde",
                "independence",
                "braid",
                "log_concave",
                "no_internal_zeros",
                "unimodal",
                "cross_check",
            ],
            &[vec![
                label.to_string(),
                closed.to_csv(),
                indep_seq.to_csv(),
                braid.to_string(),
                report.log_concave.to_string(),
                report.no_internal_zeros.to_string(),
                report.unimodal.to_string(),
                status.to_string(),
            ]],
        )?,
        Format::Human => {
            writeln!(out, "singularity {label}, delta {}", label.delta())?;
            writeln!(out, "closed form {closed}")?;
            writeln!(out, "independent sets {indep_seq} (reversed: {from_graph})")?;
            match &from_braid {
                Some(b) => writeln!(out, "braid       {} -> {b}", braid.pretty())?,
                None => writeln!(out, "braid       {} (not evaluated)", braid.pretty())?,
            }
            writeln!(out, "report      {}", emit::report_line(&report))?;
            writeln!(out, "cross-check {status}")?;
        }
    }
    if !agree {
        return Err(Failure::Internal(format!(
            "{label}: closed form, graph and braid disagree"
        )));
    }
    Ok(EXIT_OK)
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn cmd_scan<W: Write>(args: ScanArgs, format: Format, out: &mut W) -> Result<i32, Failure> {
    let cfg = ScanConfig {
        max_strands: args.max_strands,
        max_length: args.max_length,
        workers: args.workers.unwrap_or_else(default_workers),
        cache_path: args.cache,
        resume: args.resume,
    };
    let outcome = scan(&cfg)?;
    let violations: Vec<&ScanRecord> = outcome.violations().collect();
    let shown: Vec<&ScanRecord> = if args.summary {
        violations.clone()
    } else {
        outcome.records.iter().collect()
    };
    match format {
        Format::Json => {
            for r in &shown {
                write_json(out, &Value::Object(emit::record(r)))?;
            }
        }
        Format::Csv => {
            let rows: Vec<_> = shown.iter().map(|r| emit::record_row(r)).collect();
            write_csv(out, &emit::RECORD_HEADER, &rows)?;
        }
        Format::Human => {
            for r in &shown {
                writeln!(
                    out,
                    "{:<28} {:<24} {}",
                    r.word.to_string(),
                    r.rtilde.to_string(),
                    emit::report_line(&r.report)
                )?;
            }
            writeln!(
                out,
                "{} words ({} computed, {} from cache), {} violations",
                outcome.records.len(),
                outcome.computed,
                outcome.reused,
                violations.len()
            )?;
        }
    }
    if !violations.is_empty() {
        eprintln!("{} conjecture violation(s) found", violations.len());
        return Ok(EXIT_VIOLATION);
    }
    Ok(EXIT_OK)
}

fn cmd_check<W: Write>(coeffs: &str, format: Format, out: &mut W) -> Result<i32, Failure> {
    let seq: BpsSequence = coeffs
        .parse()
        .map_err(|e| Failure::Usage(format!("cannot parse coefficient list {coeffs:?}: {e}")))?;
    let report = conjecture_report(&seq);
    match format {
        Format::Json => write_json(
            out,
            &json!({"sequence": emit::sequence(&seq), "report": emit::report(&report)}),
        )?,
        Format::Csv => write_csv(
            out,
            &["sequence", "log_concave", "no_internal_zeros", "unimodal"],
            &[vec![
                seq.to_csv(),
                report.log_concave.to_string(),
                report.no_internal_zeros.to_string(),
                report.unimodal.to_string(),
            ]],
        )?,
        Format::Human => {
            writeln!(out, "sequence    {seq}")?;
            writeln!(out, "report      {}", emit::report_line(&report))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_indep<W: Write>(path: &std::path::Path, format: Format, out: &mut W) -> Result<i32, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))?;
    let g: DynkinGraph = text.parse()?;
    let seq = BpsSequence::new(independence_poly(&g)?);
    let report = conjecture_report(&seq);
    match format {
        Format::Json => write_json(
            out,
            &json!({
                "vertices": g.vertices(),
                "independence": emit::sequence(&seq),
                "report": emit::report(&report),
            }),
        )?,
        Format::Csv => write_csv(
            out,
            &[
                "vertices",
                "independence",
                "log_concave",
                "no_internal_zeros",
                "unimodal",
            ],
            &[vec![
                g.vertices().to_string(),
                seq.to_csv(),
                report.log_concave.to_string(),
                report.no_internal_zeros.to_string(),
                report.unimodal.to_string(),
            ]],
        )?,
        Format::Human => {
            writeln!(out, "vertices    {}", g.vertices())?;
            writeln!(out, "m_k         {seq}")?;
            writeln!(out, "report      {}", emit::report_line(&report))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_regress<W: Write>(format: Format, out: &mut W) -> Result<i32, Failure> {
    let results = regress::regress();
    match format {
        Format::Json => {
            for r in &results {
                write_json(
                    out,
                    &json!({
                        "name": r.vector.name,
                        "source": r.vector.source,
                        "sequence": emit::sequence(&r.vector.sequence),
                        "braid": r.vector.braid.as_ref().map(ToString::to_string),
                        "braid_matches": r.braid_matches,
                        "report": emit::report(&r.report),
                        "pass": r.passed(),
                    }),
                )?;
            }
        }
        Format::Csv => {
            let rows: Vec<_> = results
                .iter()
                .map(|r| {
                    vec![
                        r.vector.name.to_string(),
                        r.vector.sequence.to_csv(),
                        r.report.log_concave.to_string(),
                        r.report.no_internal_zeros.to_string(),
                        r.report.unimodal.to_string(),
                        r.braid_matches.map(|b| b.to_string()).unwrap_or_default(),
                        r.passed().to_string(),
                    ]
                })
                .collect();
            write_csv(
                out,
                &[
                    "name",
                    "sequence",
                    "log_concave",
                    "no_internal_zeros",
                    "unimodal",
                    "braid_matches",
                    "pass",
                ],
                &rows,
            )?;
        }
        Format::Human => {
            for r in &results {
                let braid = match r.braid_matches {
                    Some(true) => ", braid ok",
                    Some(false) => ", braid MISMATCH",
                    None => "",
                };
                writeln!(
                    out,
                    "{} {:<18} {}{braid}",
                    if r.passed() { "PASS" } else { "FAIL" },
                    r.vector.name,
                    emit::report_line(&r.report)
                )?;
                writeln!(out, "     {}  [{}]", r.vector.sequence, r.vector.source)?;
            }
        }
    }
    if results.iter().any(|r| !r.passed()) {
        return Err(Failure::Internal("a regression vector failed".into()));
    }
    Ok(EXIT_OK)
}
