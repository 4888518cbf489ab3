//! Subcommand bodies. Each returns the text to print or a `Failure` with its exit code.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tracecurve_core::count::{count_auto, count_brute, count_with, curve_ingest, qr_trace_count};
use tracecurve_core::numtheory::prime_power;
use tracecurve_core::{ClosedOutcome, CountReport, Error, FieldContext, FieldElement, Method};

use crate::literal::ElementLiteral;
use crate::{Cli, Command, FieldArgs, MethodArg};

/// Fields at most this large get an enumeration cross-check in auto mode.
pub const CROSS_CHECK_LIMIT: u64 = 100_000;

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_NUMERIC: u8 = 3;
pub const EXIT_DISAGREE: u8 = 4;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// partial output still worth printing (tables, verify summaries)
    pub output: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into(), output: None }
    }

    fn disagree(message: impl Into<String>) -> Self {
        Failure { code: EXIT_DISAGREE, message: message.into(), output: None }
    }

    fn with_output(mut self, out: String) -> Self {
        self.output = Some(out);
        self
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NumericallyUnstable { .. } | Error::NonIntegerResult(_) => EXIT_NUMERIC,
        _ => EXIT_USAGE,
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: exit_code(&e), message: e.to_string(), output: None }
    }
}

type CmdResult = Result<String, Failure>;

pub fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Count { field, d, a, b, method } => cmd_count(cli, *field, *d, a, b, *method),
        Command::Table { a, b, q_list, n_list, d } => cmd_table(cli, a, b, q_list, n_list, *d),
        Command::Verify { field, max_d, trials, seed } => cmd_verify(cli, *field, *max_d, *trials, *seed),
        Command::QrCount { field } => cmd_qr_count(cli, *field),
        Command::FieldInfo { field } => cmd_field_info(cli, *field),
    }
}

fn context(f: FieldArgs, cap: u64) -> Result<FieldContext, Failure> {
    Ok(FieldContext::build(f.p, f.s, f.n, cap)?)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string(v).expect("serializable");
    s.push('\n');
    s
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Brute => "brute",
        Method::Gauss => "gauss",
        Method::ClosedD2 => "closed_d2",
        Method::ClosedB0 => "closed_b0",
        Method::ClosedBnz => "closed_bnz",
    }
}

fn render_report(r: &CountReport) -> String {
    let mut out = String::new();
    let q = r.p.pow(r.s);
    let _ = writeln!(out, "field      F_{}^{} (p={}, s={})", q, r.n, r.p, r.s);
    let _ = writeln!(out, "curve      y^{} = a*x*Tr(x) + b   (d_raw={})", r.d, r.d_raw);
    let _ = writeln!(out, "a, b       {:?}, {:?}", r.a, r.b);
    let _ = writeln!(out, "v, D       {}, {}", r.v, r.big_d);
    let _ = writeln!(out, "method     {}", method_name(r.method));
    let _ = writeln!(out, "count      {}", r.count);
    let _ = writeln!(out, "N          {}", r.n_term);
    if let (Some(b), Some(hw)) = (r.bound, r.hw_bound) {
        let _ = writeln!(out, "bound      {b:.3}  (hasse-weil {hw:.3})");
    }
    let _ = writeln!(out, "checked    {}", r.oracle_checked);
    out
}

fn compute(ctx: &FieldContext, d: u64, a: FieldElement, b: FieldElement, method: MethodArg) -> Result<CountReport, Failure> {
    let spec = curve_ingest(ctx, d, a, b)?;
    let core_method = match method {
        MethodArg::Auto => {
            let mut report = count_auto(ctx, &spec)?;
            if ctx.has_tables() && ctx.size() <= CROSS_CHECK_LIMIT {
                let brute = if report.method == Method::Brute { report.clone() } else { count_brute(ctx, &spec)? };
                if brute.count != report.count {
                    return Err(Failure::disagree(format!(
                        "{} gives {}, enumeration gives {}",
                        method_name(report.method),
                        report.count,
                        brute.count
                    ))
                    .with_output(to_json(&report)));
                }
                report.oracle_checked = true;
            }
            return Ok(report);
        }
        MethodArg::Brute => Method::Brute,
        MethodArg::Gauss => Method::Gauss,
        MethodArg::D2 => Method::ClosedD2,
        MethodArg::B0 => Method::ClosedB0,
        MethodArg::Bnz => Method::ClosedBnz,
    };
    match count_with(ctx, &spec, core_method)? {
        ClosedOutcome::Count(r) => Ok(*r),
        ClosedOutcome::NotApplicable(why) => Err(Failure::usage(format!("{} not applicable: {why}", method_name(core_method)))),
    }
}

fn cmd_count(cli: &Cli, f: FieldArgs, d: u64, a: &ElementLiteral, b: &ElementLiteral, method: MethodArg) -> CmdResult {
    let ctx = context(f, cli.cap)?;
    let (a, b) = (a.resolve(&ctx)?, b.resolve(&ctx)?);
    let report = compute(&ctx, d, a, b, method)?;
    Ok(if cli.json { to_json(&report) } else { render_report(&report) })
}

#[derive(Serialize)]
struct Cell {
    q: u64,
    n: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    method: Option<Method>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn cmd_table(cli: &Cli, a: &ElementLiteral, b: &ElementLiteral, q_list: &[u64], n_list: &[u32], d: u64) -> CmdResult {
    let mut cells = Vec::new();
    let mut first_failure: Option<u8> = None;
    for &q in q_list {
        for &n in n_list {
            let cell = (|| -> Result<CountReport, Failure> {
                let (p, s) = prime_power(q).ok_or_else(|| Failure::usage(format!("{q} is not a prime power")))?;
                let ctx = context(FieldArgs { p, s, n }, cli.cap)?;
                let (a, b) = (a.resolve(&ctx)?, b.resolve(&ctx)?);
                let spec = curve_ingest(&ctx, d, a, b)?;
                Ok(count_auto(&ctx, &spec)?)
            })();
            cells.push(match cell {
                Ok(r) => Cell { q, n, count: Some(r.count), method: Some(r.method), error: None },
                Err(f) => {
                    first_failure.get_or_insert(f.code);
                    Cell { q, n, count: None, method: None, error: Some(f.message) }
                }
            });
        }
    }
    let out = if cli.json {
        to_json(&cells)
    } else {
        let mut out = String::from("q,n,count\n");
        for c in &cells {
            match (c.count, &c.error) {
                (Some(v), _) => {
                    let _ = writeln!(out, "{},{},{}", c.q, c.n, v);
                }
                (None, e) => {
                    let msg = e.as_deref().unwrap_or("").replace(',', ";");
                    let _ = writeln!(out, "{},{},ERROR: {}", c.q, c.n, msg);
                }
            }
        }
        out
    };
    match first_failure {
        None => Ok(out),
        Some(code) => Err(Failure { code, message: "some cells failed".into(), output: Some(out) }),
    }
}

#[derive(Serialize, Default)]
struct Tally {
    run: u32,
    agree: u32,
}

#[derive(Serialize)]
struct Disagreement {
    trial: u32,
    d: u64,
    a: Vec<u64>,
    b: Vec<u64>,
    method: Method,
    value: u64,
    brute: u64,
}

#[derive(Serialize)]
struct VerifySummary {
    p: u64,
    s: u32,
    n: u32,
    seed: u64,
    trials: u32,
    checked: u32,
    skipped_degenerate: u32,
    methods: BTreeMap<&'static str, Tally>,
    bound_violations: u32,
    disagreements: Vec<Disagreement>,
}

fn cmd_verify(cli: &Cli, f: FieldArgs, max_d: u64, trials: u32, seed: u64) -> CmdResult {
    if max_d < 2 {
        return Err(Failure::usage("--max-d must be at least 2"));
    }
    let ctx = context(f, cli.cap)?;
    if !ctx.has_tables() {
        return Err(Failure::usage(format!("field of size {} is beyond the table cap {}", ctx.size(), cli.cap)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = VerifySummary {
        p: f.p,
        s: f.s,
        n: f.n,
        seed,
        trials,
        checked: 0,
        skipped_degenerate: 0,
        methods: BTreeMap::new(),
        bound_violations: 0,
        disagreements: Vec::new(),
    };
    for trial in 0..trials {
        let d = rng.gen_range(2..=max_d);
        let a = FieldElement::from_code(rng.gen_range(0..ctx.size()));
        let b = FieldElement::from_code(rng.gen_range(0..ctx.size()));
        let spec = curve_ingest(&ctx, d, a, b)?;
        if spec.is_degenerate() {
            sum.skipped_degenerate += 1;
            continue;
        }
        sum.checked += 1;
        let brute = count_brute(&ctx, &spec)?;
        let mut methods = vec![Method::Gauss, Method::ClosedB0, Method::ClosedBnz];
        if spec.d == 2 {
            methods.push(Method::ClosedD2);
        }
        for m in methods {
            let value = match count_with(&ctx, &spec, m)? {
                ClosedOutcome::Count(r) => r.count,
                ClosedOutcome::NotApplicable(_) => continue,
            };
            let t = sum.methods.entry(method_name(m)).or_default();
            t.run += 1;
            if value == brute.count {
                t.agree += 1;
            } else {
                sum.disagreements.push(Disagreement {
                    trial,
                    d: spec.d,
                    a: ctx.digits(a),
                    b: ctx.digits(b),
                    method: m,
                    value,
                    brute: brute.count,
                });
            }
        }
        if let Some(bound) = brute.bound {
            if (brute.n_term as f64).abs() > bound + 1e-6 * bound.max(1.0) {
                sum.bound_violations += 1;
            }
        }
    }
    let out = if cli.json {
        to_json(&sum)
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "field F_{}^{}  seed {}  trials {}", f.p.pow(f.s), f.n, seed, trials);
        let _ = writeln!(out, "checked {}  skipped-degenerate {}", sum.checked, sum.skipped_degenerate);
        for (name, t) in &sum.methods {
            let _ = writeln!(out, "{name:<11} {}/{} agree", t.agree, t.run);
        }
        let _ = writeln!(out, "bound violations {}", sum.bound_violations);
        for d in &sum.disagreements {
            let _ = writeln!(
                out,
                "MISMATCH trial {} d={} a={:?} b={:?}: {} {} vs brute {}",
                d.trial,
                d.d,
                d.a,
                d.b,
                method_name(d.method),
                d.value,
                d.brute
            );
        }
        out
    };
    if !sum.disagreements.is_empty() || sum.bound_violations > 0 {
        let msg = format!("{} disagreements, {} bound violations", sum.disagreements.len(), sum.bound_violations);
        return Err(Failure::disagree(msg).with_output(out));
    }
    Ok(out)
}

#[derive(Serialize)]
struct QrReport {
    p: u64,
    s: u32,
    n: u32,
    formula: u64,
    brute: Option<u64>,
    agree: Option<bool>,
}

fn cmd_qr_count(cli: &Cli, f: FieldArgs) -> CmdResult {
    if f.n % 2 == 0 {
        return Err(Failure::usage(format!("qr-count needs odd n, got {}", f.n)));
    }
    // enumerate only small fields; larger ones are formula-only
    let ctx = context(f, cli.cap.min(CROSS_CHECK_LIMIT))?;
    let qr = qr_trace_count(&ctx)?;
    let rep = QrReport { p: f.p, s: f.s, n: f.n, formula: qr.formula, brute: qr.brute, agree: qr.brute.map(|b| b == qr.formula) };
    let out = if cli.json {
        to_json(&rep)
    } else {
        let mut out = format!("{}\n", qr.formula);
        if let Some(b) = qr.brute {
            let _ = writeln!(out, "brute {b} ({})", if b == qr.formula { "agree" } else { "DISAGREE" });
        }
        out
    };
    if rep.agree == Some(false) {
        return Err(Failure::disagree("formula and census differ").with_output(out));
    }
    Ok(out)
}

fn cmd_field_info(cli: &Cli, f: FieldArgs) -> CmdResult {
    let ctx = context(f, cli.cap)?;
    let summary = ctx.summary();
    if cli.json {
        return Ok(to_json(&summary));
    }
    let mut out = String::new();
    let _ = writeln!(out, "F_{}^{} over F_{}", ctx.q(), f.n, f.p);
    let _ = writeln!(out, "size           {}", ctx.size());
    let _ = writeln!(out, "modulus        {:?} (constant term first)", summary.modulus_coeffs);
    let _ = writeln!(out, "generator      {:?}", summary.generator_index_coeffs);
    let _ = writeln!(out, "tables         {}", ctx.has_tables());
    Ok(out)
}
