//! Command-line front end: sequence tables and verification reports.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use bpdq::identities::Mode;
use bpdq::report::{render_quat, CheckReport, DualQuatJson, ParamsView, QuatJson, REPORT_VERSION};
use bpdq::sequence::{BiperiodicParams, SequenceCache};
use bpdq::verify::{default_matrix, run_suite, Suite, VerifyOptions};
use bpdq::{parse_rational, render_rational, Error, Rational};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Debug, Parser)]
#[command(name = "bpdq", version, about = "Bi-periodic dual Fibonacci quaternions, computed exactly")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a range of sequence values.
    Seq(SeqArgs),
    /// Check closed forms and identities against the recurrence.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    /// Even-step multiplier, e.g. 2 or 3/2.
    #[arg(long, allow_hyphen_values = true, requires = "b", conflicts_with = "preset")]
    pub a: Option<String>,
    /// Odd-step multiplier.
    #[arg(long, allow_hyphen_values = true, requires = "a", conflicts_with = "preset")]
    pub b: Option<String>,
    /// fibonacci (a=b=1), pell (a=b=2) or k-fibonacci:K (a=b=K).
    #[arg(long)]
    pub preset: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, env = "BPDQ_FORMAT", default_value = "text")]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Scalar,
    Dual,
    Quat,
    Dualquat,
}

#[derive(Debug, Clone, Args)]
pub struct SeqArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "scalar")]
    pub kind: Kind,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    pub from: i64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 10)]
    pub to: i64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Binet,
    Gf,
    Catalan,
    Cassini,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Binet => vec![Suite::Binet],
            SuiteArg::Gf => vec![Suite::Gf],
            SuiteArg::Catalan => vec![Suite::Catalan],
            SuiteArg::Cassini => vec![Suite::Cassini],
            SuiteArg::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Without --a/--b or --preset the default parameter matrix is used.
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long, value_enum, default_value = "all")]
    pub suite: SuiteArg,
    /// Highest index for Binet and identity checks.
    #[arg(long, default_value_t = 20)]
    pub to: i64,
    /// Truncation order of the dual-quaternion generating function.
    #[arg(long, default_value_t = bpdq::genfunc::DEFAULT_QUAT_ORDER)]
    pub order: i64,
    /// Truncation order of the scalar generating function.
    #[arg(long, default_value_t = bpdq::genfunc::DEFAULT_SCALAR_ORDER)]
    pub scalar_order: i64,
    /// Largest r in the Catalan grid (even unless --exploratory).
    #[arg(long, default_value_t = 4)]
    pub rmax: i64,
    /// Also evaluate odd r, tagged as outside the identity's hypothesis.
    #[arg(long)]
    pub exploratory: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// `fibonacci`, `pell` or `k-fibonacci:K`.
pub fn parse_preset(s: &str) -> Result<BiperiodicParams> {
    let p = match s.trim() {
        "fibonacci" => BiperiodicParams::fibonacci(),
        "pell" => BiperiodicParams::pell(),
        other => match other.strip_prefix("k-fibonacci:") {
            Some(k) => BiperiodicParams::k_fibonacci(parse_rational(k)?)?,
            None => bail!("unknown preset {other:?} (expected fibonacci, pell or k-fibonacci:K)"),
        },
    };
    Ok(p)
}

impl ParamArgs {
    /// `None` when neither explicit parameters nor a preset were given.
    pub fn resolve(&self) -> Result<Option<BiperiodicParams>> {
        match (&self.a, &self.b, &self.preset) {
            (Some(_), _, Some(_)) | (_, Some(_), Some(_)) => bail!("--preset cannot be combined with --a/--b"),
            (Some(a), Some(b), None) => {
                let a: Rational = parse_rational(a)?;
                let b: Rational = parse_rational(b)?;
                Ok(Some(BiperiodicParams::new(a, b)?))
            }
            (None, None, Some(p)) => parse_preset(p).map(Some),
            (None, None, None) => Ok(None),
            _ => bail!("--a and --b must be given together"),
        }
    }
}

fn emit(output: &OutputArgs, body: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct SeqDoc<'a> {
    version: &'static str,
    params: ParamsView,
    kind: &'static str,
    rows: Vec<SeqRow<'a>>,
}

#[derive(Serialize)]
struct SeqRow<'a> {
    n: i64,
    value: SeqValue<'a>,
}

#[derive(Serialize)]
#[serde(untagged)]
enum SeqValue<'a> {
    Scalar(String),
    Dual { real: String, dual: String },
    Quat(QuatJson<'a>),
    DualQuat(DualQuatJson<'a>),
}

fn kind_name(kind: Kind) -> &'static str {
    match kind {
        Kind::Scalar => "scalar",
        Kind::Dual => "dual",
        Kind::Quat => "quat",
        Kind::Dualquat => "dualquat",
    }
}

/// Renders `seq` output; the text and CSV forms list one row per index.
pub fn render_seq(params: &BiperiodicParams, kind: Kind, from: i64, to: i64, format: Format) -> Result<String> {
    if from > to {
        bail!("empty range: --from {from} is greater than --to {to}");
    }
    let mut cache = SequenceCache::new(params.clone());
    cache.fill(from.min(0), (to + 4).max(1));
    let f = |n: i64| cache.get(n).expect("filled").clone();
    let quats: Vec<_> = (from..=to).map(|n| (cache.quat(n).expect("filled"), cache.dual_quat(n).expect("filled"))).collect();

    let mut out = String::new();
    match format {
        Format::Text => {
            for (i, n) in (from..=to).enumerate() {
                let v = match kind {
                    Kind::Scalar => render_rational(&f(n)),
                    Kind::Dual => format!("{} ε:{}", render_rational(&f(n)), render_rational(&f(n + 1))),
                    Kind::Quat => render_quat(&quats[i].0),
                    Kind::Dualquat => format!("{} ε:{}", render_quat(&quats[i].1.primal), render_quat(&quats[i].1.dual)),
                };
                writeln!(out, "{n}\t{v}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let header: &[&str] = match kind {
                Kind::Scalar => &["n", "value"],
                Kind::Dual => &["n", "real", "ε:dual"],
                Kind::Quat => &["n", "w", "x", "y", "z"],
                Kind::Dualquat => &["n", "w", "x", "y", "z", "ε:w", "ε:x", "ε:y", "ε:z"],
            };
            w.write_record(header)?;
            for (i, n) in (from..=to).enumerate() {
                let mut row = vec![n.to_string()];
                match kind {
                    Kind::Scalar => row.push(render_rational(&f(n))),
                    Kind::Dual => row.extend([render_rational(&f(n)), render_rational(&f(n + 1))]),
                    Kind::Quat => row.extend(quats[i].0.components().map(render_rational)),
                    Kind::Dualquat => row.extend(quats[i].1.coefficients().map(render_rational)),
                }
                w.write_record(&row)?;
            }
            out = String::from_utf8(w.into_inner()?)?;
        }
        Format::Json => {
            let rows = (from..=to)
                .enumerate()
                .map(|(i, n)| SeqRow {
                    n,
                    value: match kind {
                        Kind::Scalar => SeqValue::Scalar(render_rational(&f(n))),
                        Kind::Dual => SeqValue::Dual { real: render_rational(&f(n)), dual: render_rational(&f(n + 1)) },
                        Kind::Quat => SeqValue::Quat(QuatJson(&quats[i].0)),
                        Kind::Dualquat => SeqValue::DualQuat(DualQuatJson(&quats[i].1)),
                    },
                })
                .collect();
            let doc = SeqDoc { version: REPORT_VERSION, params: params.into(), kind: kind_name(kind), rows };
            out = serde_json::to_string_pretty(&doc)?;
            out.push('\n');
        }
    }
    Ok(out)
}

/// Runs every requested suite over every parameter set, in matrix order
/// then suite order.
pub fn verify_reports(args: &VerifyArgs) -> Result<Vec<CheckReport>> {
    let matrix = match args.params.resolve()? {
        Some(p) => vec![p],
        None => default_matrix(),
    };
    let opts = VerifyOptions {
        to: args.to,
        order: args.order,
        scalar_order: args.scalar_order,
        rmax: args.rmax,
        mode: if args.exploratory { Mode::Exploratory } else { Mode::Strict },
    };
    let mut reports = Vec::new();
    for params in &matrix {
        for suite in args.suite.suites() {
            let report = run_suite(params, suite, &opts).map_err(|e| match e {
                Error::DegenerateParameters { .. } => anyhow::anyhow!(
                    "the Binet closed forms need ab != 0 and ab + 4 != 0 (distinct roots of x^2 - ab x - ab): {e}"
                ),
                other => other.into(),
            })?;
            reports.push(report);
        }
    }
    Ok(reports)
}

pub fn render_verify(reports: &[CheckReport], format: Format) -> Result<String> {
    let mut out = String::new();
    match format {
        Format::Json => {
            out = match reports {
                [single] => serde_json::to_string_pretty(single)?,
                many => serde_json::to_string_pretty(many)?,
            };
            out.push('\n');
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<String> = ["a", "b", "suite", "identity", "n", "r", "status"].map(String::from).to_vec();
            for side in ["lhs", "rhs"] {
                for part in ["p", "d"] {
                    for c in ["w", "x", "y", "z"] {
                        header.push(format!("{side}_{part}{c}"));
                    }
                }
            }
            w.write_record(&header)?;
            for report in reports {
                for case in &report.cases {
                    let mut row = vec![
                        report.params.a.clone(),
                        report.params.b.clone(),
                        report.suite.clone(),
                        case.identity.clone(),
                        case.n.to_string(),
                        case.r.map(|r| r.to_string()).unwrap_or_default(),
                        serde_json::to_value(case.status)?.as_str().unwrap_or_default().to_string(),
                    ];
                    row.extend(case.lhs.flatten());
                    match &case.rhs {
                        Some(v) => row.extend(v.flatten()),
                        None => row.extend(std::iter::repeat(String::new()).take(8)),
                    }
                    w.write_record(&row)?;
                }
            }
            out = String::from_utf8(w.into_inner()?)?;
        }
        Format::Text => {
            for report in reports {
                let verdict = serde_json::to_value(report.verdict)?;
                writeln!(
                    out,
                    "a={} b={} {}: {} ({}/{} matched){}",
                    report.params.a,
                    report.params.b,
                    report.suite,
                    verdict.as_str().unwrap_or_default(),
                    report.summary.matched,
                    report.summary.total,
                    if report.passed() { "" } else { " FAIL" }
                )?;
                for c in &report.consistency {
                    let tag = if c.required { "" } else { " (exploratory)" };
                    writeln!(out, "  [{}] {}{}", if c.holds { "ok" } else { "!!" }, c.check, tag)?;
                }
                for case in report.cases.iter().filter(|c| c.status == bpdq::identities::Status::Mismatch) {
                    let r = case.r.map(|r| format!(" r={r}")).unwrap_or_default();
                    let delta = case.delta.as_ref().map(|d| d.to_string()).unwrap_or_else(|| "n/a".into());
                    writeln!(out, "  mismatch {} n={}{}: delta {}", case.identity, case.n, r, delta)?;
                    if let Some(note) = &case.note {
                        writeln!(out, "    {note}")?;
                    }
                }
                let mut variant_misses: Vec<(&str, usize)> = Vec::new();
                for case in &report.cases {
                    for v in case.variants.iter().filter(|v| v.status == bpdq::identities::Status::Mismatch) {
                        match variant_misses.iter_mut().find(|(name, _)| *name == v.variant) {
                            Some((_, count)) => *count += 1,
                            None => variant_misses.push((&v.variant, 1)),
                        }
                    }
                }
                for (name, count) in variant_misses {
                    writeln!(out, "  variant {name}: {count} case(s) differ from the recurrence")?;
                }
                for note in &report.notes {
                    writeln!(out, "  note: {note}")?;
                }
            }
        }
    }
    Ok(out)
}

/// Runs the parsed command; the returned flag is `true` when every check
/// passed.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Seq(args) => {
            let params = args.params.resolve()?.context("seq needs --a and --b, or --preset")?;
            let body = render_seq(&params, args.kind, args.from, args.to, args.output.format)?;
            emit(&args.output, &body)?;
            Ok(true)
        }
        Command::Verify(args) => {
            let reports = verify_reports(&args)?;
            emit(&args.output, &render_verify(&reports, args.output.format)?)?;
            Ok(reports.iter().all(CheckReport::passed))
        }
    }
}
