//! Command-line front end.
//!
//! ```text
//! partseq [--composition-cap <n>] [--stable] <command>
//!   compute --seq <name|@file> --from <n> --to <n> [--method <id>] [--format <plain|json|csv>]
//!   verify  --seq <name|all|@file> --max-n <n> [--format ...]
//!   enum    --n <n> --kind <partitions|compositions|diophantine> [--format ...]
//!   bench   --seq <name|@file> --n <n> --methods <id,...> --repeats <k> [--format ...]
//!   list    [--format ...]
//! ```
//!
//! Exit status: 0 success, 1 verification mismatch, 2 usage or input error,
//! 3 composition cap exceeded. Results go to stdout, diagnostics to stderr.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::catalog::{identity_suite, CatalogEntry, IdentityReport};
use crate::error::Error;
use crate::exact::Rational;
use crate::partitions::{
    self, composition_count, multiplicity, DEFAULT_COMPOSITION_CAP,
};
use crate::recurrence::{
    evaluate, verify_all_methods, CoefficientSequence, MethodId, Outcome, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Success = 0,
    Mismatch = 1,
    Usage = 2,
    ResourceLimit = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }

    fn for_error(e: &Error) -> Self {
        match e {
            Error::CompositionCap { .. } => ExitStatus::ResourceLimit,
            _ => ExitStatus::Usage,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnumKind {
    Partitions,
    Compositions,
    Diophantine,
}

#[derive(Debug, Parser)]
#[command(
    name = "partseq",
    version,
    about = "Exact reciprocal sequences via partitions, compositions and related sums"
)]
struct Cli {
    /// Largest n for which all 2^(n-1) compositions may be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_COMPOSITION_CAP)]
    composition_cap: usize,

    /// Suppress timing columns so repeated runs are byte-identical.
    #[arg(long, global = true)]
    stable: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute b_n (and the named number, for catalog entries) for a range of n.
    Compute(ComputeArgs),
    /// Cross-check every method against the recursion.
    Verify(VerifyArgs),
    /// List partitions, compositions or diophantine solutions of n.
    Enum(EnumArgs),
    /// Time methods and report how many terms each one sums.
    Bench(BenchArgs),
    /// List the built-in sequences.
    List(FormatArg),
}

#[derive(Debug, Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    /// Catalog name or @path to a coefficient file.
    #[arg(long)]
    seq: String,
    #[arg(long)]
    from: usize,
    #[arg(long)]
    to: usize,
    #[arg(long, value_parser = parse_method, default_value = "partition")]
    method: MethodId,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Catalog name, "all", or @path to a coefficient file.
    #[arg(long)]
    seq: String,
    #[arg(long)]
    max_n: usize,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum)]
    kind: EnumKind,
    #[command(flatten)]
    format: FormatArg,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    seq: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_parser = parse_method, value_delimiter = ',', required = true)]
    methods: Vec<MethodId>,
    #[arg(long)]
    repeats: usize,
    #[command(flatten)]
    format: FormatArg,
}

fn parse_method(s: &str) -> Result<MethodId, String> {
    s.parse::<MethodId>().map_err(|e| e.to_string())
}

/// A sequence named on the command line.
enum Target {
    Catalog(CatalogEntry),
    File(CoefficientSequence),
}

impl Target {
    fn resolve(arg: &str) -> Result<Self, Error> {
        match arg.strip_prefix('@') {
            Some(path) => Ok(Target::File(CoefficientSequence::from_json_file(path)?)),
            None => Ok(Target::Catalog(arg.parse()?)),
        }
    }

    fn sequence(&self) -> CoefficientSequence {
        match self {
            Target::Catalog(e) => e.sequence(),
            Target::File(s) => s.clone(),
        }
    }

    fn entry(&self) -> Option<CatalogEntry> {
        match self {
            Target::Catalog(e) => Some(*e),
            Target::File(_) => None,
        }
    }
}

/// Failure of a command: a status plus what to print on stderr.
struct Failure {
    status: ExitStatus,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            status: ExitStatus::for_error(&e),
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            status: ExitStatus::Usage,
            message: format!("output error: {e}"),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure {
            status: ExitStatus::Usage,
            message: format!("output error: {e}"),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: ExitStatus::Usage,
        message: message.into(),
    }
}

type CmdResult = Result<ExitStatus, Failure>;

struct Context {
    composition_cap: usize,
    stable: bool,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { ExitStatus::Usage } else { ExitStatus::Success };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return status;
        }
    };
    let ctx = Context {
        composition_cap: cli.composition_cap,
        stable: cli.stable,
    };
    let result = match cli.command {
        Command::Compute(a) => cmd_compute(&ctx, a, out),
        Command::Verify(a) => cmd_verify(&ctx, a, out, err),
        Command::Enum(a) => cmd_enum(&ctx, a, out),
        Command::Bench(a) => cmd_bench(&ctx, a, out),
        Command::List(a) => cmd_list(a.format, out),
    };
    match result {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn micros(d: Duration) -> u128 {
    d.as_micros()
}

fn cmd_compute(ctx: &Context, args: ComputeArgs, out: &mut dyn Write) -> CmdResult {
    if args.from == 0 || args.from > args.to {
        return Err(usage(format!(
            "need 1 <= --from <= --to (got --from {} --to {})",
            args.from, args.to
        )));
    }
    let target = Target::resolve(&args.seq)?;
    let seq = target.sequence();
    struct Row {
        n: usize,
        b: Rational,
        named: Option<Rational>,
        terms: u128,
    }
    let mut rows = Vec::new();
    for n in args.from..=args.to {
        let e = evaluate(&seq, n, args.method, ctx.composition_cap)?;
        let named = match target.entry() {
            Some(entry) => Some(entry.transform(n, &e.value)?),
            None => None,
        };
        rows.push(Row {
            n,
            b: e.value,
            named,
            terms: e.terms,
        });
    }
    let method = args.method.name();
    match args.format.format {
        OutputFormat::Plain => {
            for r in &rows {
                let named = r.named.as_ref().map_or("-".to_string(), |v| v.to_string());
                writeln!(out, "{}  {}  {}  {}", r.n, r.b, named, method)?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["n", "b", "named", "method", "terms"])?;
            for r in &rows {
                let named = r.named.as_ref().map_or(String::new(), |v| v.to_string());
                w.write_record([
                    r.n.to_string(),
                    r.b.to_string(),
                    named,
                    method.to_string(),
                    r.terms.to_string(),
                ])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n,
                        "b": r.b.to_string(),
                        "named": r.named.as_ref().map(|v| v.to_string()),
                        "method": method,
                        "terms": r.terms.to_string(),
                    })
                })
                .collect();
            write_json(
                out,
                &json!({ "sequence": seq.name(), "method": method, "rows": rows }),
            )?;
        }
    }
    Ok(ExitStatus::Success)
}

fn cmd_verify(ctx: &Context, args: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if args.max_n == 0 {
        return Err(usage("--max-n must be at least 1"));
    }
    let (sequences, identities): (Vec<CoefficientSequence>, Option<IdentityReport>) =
        if args.seq == "all" {
            let seqs = CatalogEntry::ALL.iter().map(|e| e.sequence()).collect();
            (seqs, Some(identity_suite(args.max_n)?))
        } else {
            (vec![Target::resolve(&args.seq)?.sequence()], None)
        };
    let reports = sequences
        .iter()
        .map(|s| verify_all_methods(s, args.max_n, ctx.composition_cap))
        .collect::<Result<Vec<VerificationReport>, Error>>()?;

    let mut failed = false;
    for report in &reports {
        for row in report.failures() {
            failed = true;
            if let Outcome::Mismatch { expected, got } = &row.outcome {
                writeln!(
                    err,
                    "mismatch: sequence={} n={} method={} expected={} got={}",
                    report.sequence, row.n, row.method, expected, got
                )?;
            }
        }
    }
    if let Some(ids) = &identities {
        for c in ids.failures() {
            failed = true;
            writeln!(err, "identity failed: {} n={} lhs={} rhs={}", c.identity, c.n, c.lhs, c.rhs)?;
        }
    }

    let rows = reports.iter().flat_map(|r| r.rows.iter().map(move |row| (r.sequence.as_str(), row)));
    let count = |label: &str| -> usize {
        reports
            .iter()
            .flat_map(|r| &r.rows)
            .filter(|row| row.outcome.label() == label)
            .count()
            + identities.as_ref().map_or(0, |ids| {
                ids.checks
                    .iter()
                    .filter(|c| (c.passed() && label == "pass") || (!c.passed() && label == "FAIL"))
                    .count()
            })
    };
    let (passed, mismatched, skipped) = (count("pass"), count("FAIL"), count("skipped"));

    match args.format.format {
        OutputFormat::Plain => {
            for (name, row) in rows {
                let terms = row.terms.map_or("-".to_string(), |t| t.to_string());
                if ctx.stable {
                    writeln!(out, "{}  {}  {}  {}  {}", name, row.n, row.method, row.outcome.label(), terms)?;
                } else {
                    writeln!(
                        out,
                        "{}  {}  {}  {}  {}  {}us",
                        name,
                        row.n,
                        row.method,
                        row.outcome.label(),
                        terms,
                        micros(row.elapsed)
                    )?;
                }
            }
            if let Some(ids) = &identities {
                for c in &ids.checks {
                    let label = if c.passed() { "pass" } else { "FAIL" };
                    writeln!(out, "identity  {}  {}  {}", c.n, c.identity, label)?;
                }
            }
            writeln!(out, "summary  pass={passed}  fail={mismatched}  skipped={skipped}")?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["sequence", "n", "check", "status", "terms", "expected", "got"];
            if !ctx.stable {
                header.push("elapsed_us");
            }
            w.write_record(&header)?;
            for (name, row) in rows {
                let (expected, got) = match &row.outcome {
                    Outcome::Mismatch { expected, got } => (expected.to_string(), got.to_string()),
                    _ => (String::new(), String::new()),
                };
                let mut record = vec![
                    name.to_string(),
                    row.n.to_string(),
                    row.method.to_string(),
                    row.outcome.label().to_string(),
                    row.terms.map_or(String::new(), |t| t.to_string()),
                    expected,
                    got,
                ];
                if !ctx.stable {
                    record.push(micros(row.elapsed).to_string());
                }
                w.write_record(&record)?;
            }
            if let Some(ids) = &identities {
                for c in &ids.checks {
                    let label = if c.passed() { "pass" } else { "FAIL" };
                    let mut record = vec![
                        "identity".to_string(),
                        c.n.to_string(),
                        c.identity.to_string(),
                        label.to_string(),
                        String::new(),
                        c.rhs.to_string(),
                        c.lhs.to_string(),
                    ];
                    if !ctx.stable {
                        record.push(String::new());
                    }
                    w.write_record(&record)?;
                }
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let seqs: Vec<Value> = reports
                .iter()
                .map(|r| {
                    let rows: Vec<Value> = r
                        .rows
                        .iter()
                        .map(|row| {
                            let mut v = serde_json::to_value(row).expect("row serializes");
                            if let Some(t) = row.terms {
                                v["terms"] = json!(t.to_string());
                            }
                            if !ctx.stable {
                                v["elapsed_us"] = json!(micros(row.elapsed).to_string());
                            }
                            v
                        })
                        .collect();
                    json!({ "sequence": r.sequence, "passed": r.passed(), "rows": rows })
                })
                .collect();
            let ids = identities.as_ref().map(|ids| {
                let checks: Vec<Value> = ids
                    .checks
                    .iter()
                    .map(|c| {
                        json!({
                            "identity": c.identity.name(),
                            "n": c.n,
                            "lhs": c.lhs.to_string(),
                            "rhs": c.rhs.to_string(),
                            "passed": c.passed(),
                        })
                    })
                    .collect();
                json!({ "passed": ids.passed(), "checks": checks })
            });
            write_json(
                out,
                &json!({
                    "max_n": args.max_n,
                    "passed": !failed,
                    "summary": { "pass": passed, "fail": mismatched, "skipped": skipped },
                    "sequences": seqs,
                    "identities": ids,
                }),
            )?;
        }
    }
    Ok(if failed { ExitStatus::Mismatch } else { ExitStatus::Success })
}

fn cmd_enum(ctx: &Context, args: EnumArgs, out: &mut dyn Write) -> CmdResult {
    let n = args.n;
    // (item text, parts for json, per-kind extra column)
    let mut items: Vec<(String, Vec<usize>, String)> = Vec::new();
    let mut sum_mu = BigInt::from(0);
    match args.kind {
        EnumKind::Partitions => {
            for p in partitions::partitions(n)? {
                let mu = multiplicity(&p);
                sum_mu += &mu;
                items.push((p.to_string(), p.parts().to_vec(), mu.to_string()));
            }
        }
        EnumKind::Compositions => {
            for c in partitions::compositions(n, ctx.composition_cap)? {
                items.push((c.to_string(), c.parts().to_vec(), c.len().to_string()));
            }
        }
        EnumKind::Diophantine => {
            for s in partitions::diophantine(n)? {
                items.push((s.to_string(), s.q().to_vec(), s.total().to_string()));
            }
        }
    }
    let kind = match args.kind {
        EnumKind::Partitions => "partitions",
        EnumKind::Compositions => "compositions",
        EnumKind::Diophantine => "diophantine",
    };
    let partitions = args.kind == EnumKind::Partitions;
    match args.format.format {
        OutputFormat::Plain => {
            for (text, _, _) in &items {
                writeln!(out, "{text}")?;
            }
            if partitions {
                writeln!(out, "count {}  sum_mu {}", items.len(), sum_mu)?;
            } else {
                writeln!(out, "count {}", items.len())?;
            }
        }
        OutputFormat::Csv => {
            let extra = match args.kind {
                EnumKind::Partitions => "mu",
                EnumKind::Compositions => "length",
                EnumKind::Diophantine => "total",
            };
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["item", extra])?;
            for (text, _, col) in &items {
                w.write_record([text, col])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let lists: Vec<&Vec<usize>> = items.iter().map(|(_, parts, _)| parts).collect();
            let mut doc = json!({ "n": n, "kind": kind, "items": lists, "count": items.len() });
            if partitions {
                doc["sum_mu"] = json!(sum_mu.to_string());
            }
            write_json(out, &doc)?;
        }
    }
    Ok(ExitStatus::Success)
}

fn cmd_bench(ctx: &Context, args: BenchArgs, out: &mut dyn Write) -> CmdResult {
    if args.repeats == 0 {
        return Err(usage("--repeats must be at least 1"));
    }
    if args.n == 0 {
        return Err(usage("--n must be at least 1"));
    }
    let target = Target::resolve(&args.seq)?;
    let n = args.n;
    let partition_count = partitions::partitions(n)?.count();
    let solution_count = partitions::diophantine(n)?.count();

    struct Row {
        method: MethodId,
        outcome: Result<(Rational, u128, Duration), String>,
    }
    let mut rows = Vec::new();
    for &method in &args.methods {
        let mut total = Duration::ZERO;
        let mut last = None;
        let mut skipped = None;
        for _ in 0..args.repeats {
            // fresh sequence each time so memoized values are not reused
            let seq = target.sequence();
            let start = Instant::now();
            match evaluate(&seq, n, method, ctx.composition_cap) {
                Ok(e) => {
                    total += start.elapsed();
                    last = Some(e);
                }
                Err(e @ Error::CompositionCap { .. }) => {
                    skipped = Some(e.to_string());
                    break;
                }
                Err(e) => return Err(e.into()),
            }
        }
        let outcome = match (skipped, last) {
            (Some(reason), _) => Err(reason),
            (None, Some(e)) => Ok((e.value, e.terms, total / args.repeats as u32)),
            (None, None) => unreachable!("repeats >= 1"),
        };
        rows.push(Row { method, outcome });
    }
    let values: Vec<&Rational> = rows.iter().filter_map(|r| r.outcome.as_ref().ok().map(|o| &o.0)).collect();
    let agree = values.windows(2).all(|w| w[0] == w[1]);

    match args.format.format {
        OutputFormat::Plain => {
            writeln!(
                out,
                "n {}  partitions {}  compositions {}  solutions {}",
                n,
                partition_count,
                composition_count(n),
                solution_count
            )?;
            for r in &rows {
                match &r.outcome {
                    Ok((value, terms, mean)) => {
                        if ctx.stable {
                            writeln!(out, "{}  {}  {}", r.method, terms, value)?;
                        } else {
                            writeln!(out, "{}  {}  {}  {}us", r.method, terms, value, micros(*mean))?;
                        }
                    }
                    Err(reason) => writeln!(out, "{}  skipped  {}", r.method, reason)?,
                }
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            let mut header = vec!["method", "status", "terms", "value"];
            if !ctx.stable {
                header.push("mean_us");
            }
            w.write_record(&header)?;
            for r in &rows {
                let mut record = match &r.outcome {
                    Ok((value, terms, mean)) => {
                        let mut rec =
                            vec![r.method.to_string(), "ok".into(), terms.to_string(), value.to_string()];
                        if !ctx.stable {
                            rec.push(micros(*mean).to_string());
                        }
                        rec
                    }
                    Err(_) => vec![r.method.to_string(), "skipped".into(), String::new(), String::new()],
                };
                if !ctx.stable && record.len() == 4 {
                    record.push(String::new());
                }
                w.write_record(&record)?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let methods: Vec<Value> = rows
                .iter()
                .map(|r| match &r.outcome {
                    Ok((value, terms, mean)) => {
                        let mut v = json!({
                            "method": r.method.name(),
                            "status": "ok",
                            "terms": terms.to_string(),
                            "value": value.to_string(),
                        });
                        if !ctx.stable {
                            v["mean_us"] = json!(micros(*mean).to_string());
                        }
                        v
                    }
                    Err(reason) => json!({
                        "method": r.method.name(),
                        "status": "skipped",
                        "reason": reason,
                    }),
                })
                .collect();
            write_json(
                out,
                &json!({
                    "n": n,
                    "repeats": args.repeats,
                    "partitions": partition_count,
                    "compositions": composition_count(n).to_string(),
                    "solutions": solution_count,
                    "methods": methods,
                }),
            )?;
        }
    }
    Ok(if agree { ExitStatus::Success } else { ExitStatus::Mismatch })
}

fn cmd_list(format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    match format {
        OutputFormat::Plain => {
            for e in CatalogEntry::ALL {
                writeln!(out, "{}  {}  n>={}", e.name(), e.description(), e.valid_from())?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            w.write_record(["name", "description", "valid_from"])?;
            for e in CatalogEntry::ALL {
                w.write_record([e.name(), e.description(), &e.valid_from().to_string()])?;
            }
            w.flush()?;
        }
        OutputFormat::Json => {
            let entries: Vec<Value> = CatalogEntry::ALL
                .iter()
                .map(|e| json!({ "name": e.name(), "description": e.description(), "valid_from": e.valid_from() }))
                .collect();
            write_json(out, &json!(entries))?;
        }
    }
    Ok(ExitStatus::Success)
}
