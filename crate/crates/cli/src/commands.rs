use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::json;

use minrem::brocot::{counts, farey_level, x_level, z_level, LevelKind, LevelSet};
use minrem::cfkit::{
    convert_ordinary_to_minimal, expand_minimal, expand_ordinary, expand_reduced, sum_s, MinimalCF,
    OrdinaryCF, Variant,
};
use minrem::singfun::{empirical_f_on, f_closed, g_lambda, kappa, qmark, SplitRatio};
use minrem::singlab::{difference_quotients, g_sequence, Side};
use minrem::verify::Suite;
use minrem::Rational;

use crate::output::{emit_table, print_json, OutputMode};
use crate::{Command, Form, Function, SetKind, SideArg, SuiteArg};

pub struct Config {
    pub mode: OutputMode,
    pub prec: u32,
    pub max_level: u32,
    pub force: bool,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(minrem::Error),
    Io(String),
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::VerifyFailed(_) => 1,
            _ => 2,
        }
    }

    pub fn is_verify_failure(&self) -> bool {
        matches!(self, CliError::VerifyFailed(_))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Io(msg) => write!(f, "i/o error: {msg}"),
            CliError::VerifyFailed(n) => write!(f, "{n} verification failures"),
        }
    }
}

impl From<minrem::Error> for CliError {
    fn from(e: minrem::Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn fraction(num: &str, den: &str) -> Result<Rational> {
    let parse = |s: &str| {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| CliError::Usage(format!("not an integer: {s:?}")))
    };
    let (p, q) = (parse(num)?, parse(den)?);
    if q <= BigInt::from(0) {
        return Err(CliError::Usage(format!(
            "denominator must be positive, got {q}"
        )));
    }
    Ok(Rational::new(p, q)?)
}

fn in_unit_interval(x: &Rational) -> bool {
    x.signum() >= 0 && *x <= 1
}

fn check_level(n: u32, cfg: &Config) -> Result<()> {
    if n > cfg.max_level && !cfg.force {
        return Err(CliError::Usage(format!(
            "level {n} exceeds --max-level {}; pass --force to run it anyway",
            cfg.max_level
        )));
    }
    Ok(())
}

fn no_csv(cfg: &Config, what: &str) -> Result<()> {
    if matches!(cfg.mode, OutputMode::CsvFile(_)) {
        return Err(CliError::Usage(format!(
            "{what} has no tabular output; drop --csv"
        )));
    }
    Ok(())
}

fn float_digits(prec: u32) -> usize {
    (f64::from(prec) * std::f64::consts::LOG10_2).ceil() as usize
}

pub fn run(command: Command, cfg: &Config) -> Result<()> {
    match command {
        Command::Expand { num, den, form } => expand(&fraction(&num, &den)?, form, cfg),
        Command::Convert { cf } => convert(&cf, cfg),
        Command::Convergents { cf } => convergents(&cf, cfg),
        Command::Levels { set, n } => levels(set, n, cfg),
        Command::Counts { n } => {
            check_level(n, cfg)?;
            emit_table(&cfg.mode, &counts(n)?)
        }
        Command::Eval {
            function,
            num,
            den,
            lambda_real,
            alpha,
            exact,
        } => eval(
            function,
            &fraction(&num, &den)?,
            lambda_real,
            alpha,
            exact,
            cfg,
        ),
        Command::Emp { n, num, den } => emp(n, &fraction(&num, &den)?, cfg),
        Command::Verify { suite, max_n } => verify(suite, max_n, cfg),
        Command::Deriv {
            num,
            den,
            side,
            kmax,
        } => deriv(&fraction(&num, &den)?, side, kmax, cfg),
        Command::Gseq { cf, depth } => gseq(&cf, depth, cfg),
    }
}

fn expand(x: &Rational, form: Form, cfg: &Config) -> Result<()> {
    no_csv(cfg, "expand")?;
    if form != Form::Ocf && !in_unit_interval(x) {
        return Err(CliError::Usage(format!(
            "{x} is outside [0, 1]; rrcf and mrcf need 0 <= x <= 1"
        )));
    }
    let (name, text, structured) = match form {
        Form::Ocf => {
            let cf = expand_ordinary(x);
            ("ocf", cf.to_string(), serde_json::to_value(&cf))
        }
        Form::Rrcf => {
            let cf = expand_reduced(x);
            ("rrcf", cf.to_string(), serde_json::to_value(&cf))
        }
        Form::Mrcf => {
            let cf = expand_minimal(x);
            ("mrcf", cf.to_string(), serde_json::to_value(&cf))
        }
    };
    if cfg.mode == OutputMode::Json {
        let structured = structured.map_err(|e| CliError::Io(e.to_string()))?;
        return print_json(&json!({"x": x, "form": name, "text": text, "cf": structured}));
    }
    if form == Form::Rrcf {
        println!("# a0 - 1/(a1 - 1/(a2 - ...))");
    }
    println!("{text}");
    Ok(())
}

fn convert(text: &str, cfg: &Config) -> Result<()> {
    no_csv(cfg, "convert")?;
    let ordinary: OrdinaryCF = text.parse()?;
    let minimal = convert_ordinary_to_minimal(&ordinary);
    if cfg.mode == OutputMode::Json {
        return print_json(&json!({
            "ordinary": ordinary.to_string(),
            "minimal": minimal.to_string(),
            "value": ordinary.evaluate(),
        }));
    }
    println!("{minimal}");
    Ok(())
}

#[derive(Serialize)]
struct ConvergentRow {
    n: usize,
    convergent: Rational,
}

fn convergents(text: &str, cfg: &Config) -> Result<()> {
    let cf: MinimalCF = text.parse()?;
    let rows: Vec<ConvergentRow> = cf
        .convergents()
        .into_iter()
        .enumerate()
        .map(|(n, convergent)| ConvergentRow { n, convergent })
        .collect();
    emit_table(&cfg.mode, &rows)
}

#[derive(Serialize)]
struct LevelRow {
    level: u64,
    p: String,
    q: String,
    #[serde(rename = "S")]
    s: String,
    x_float: f64,
}

fn levels(set: SetKind, n: u32, cfg: &Config) -> Result<()> {
    check_level(n, cfg)?;
    let level: LevelSet = match set {
        SetKind::X => x_level(n)?,
        SetKind::Z => z_level(n)?,
        SetKind::F => farey_level(n)?,
    };
    let rows: Vec<LevelRow> = level
        .elements
        .iter()
        .map(|x| {
            let s = sum_s(x, Variant::Minimal);
            // the level at which x first appears in this family
            let first = match level.kind {
                LevelKind::Farey => sum_s(x, Variant::Ordinary),
                LevelKind::X | LevelKind::Z => s.clone(),
            };
            LevelRow {
                level: (first - BigInt::from(1)).to_u64().unwrap_or(0),
                p: x.numer().to_string(),
                q: x.denom().to_string(),
                s: s.to_string(),
                x_float: x.to_f64(),
            }
        })
        .collect();
    emit_table(&cfg.mode, &rows)
}

/// `p/q`, or just `p` for integers.
fn plain(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        r.to_string()
    }
}

fn require<T>(v: Option<T>, flag: &str, function: &str) -> Result<T> {
    v.ok_or_else(|| CliError::Usage(format!("eval {function} needs {flag}")))
}

fn eval(
    function: Function,
    x: &Rational,
    lambda_real: Option<f64>,
    alpha: Option<f64>,
    exact: bool,
    cfg: &Config,
) -> Result<()> {
    no_csv(cfg, "eval")?;
    if exact && function != Function::F {
        return Err(CliError::Usage("--exact applies to F only".into()));
    }
    let json = cfg.mode == OutputMode::Json;
    match function {
        Function::F => {
            let v = f_closed(x)?;
            let float = v.exact.to_decimal_string(cfg.prec)?;
            if json {
                return print_json(&json!({"x": x, "exact": v.exact, "float": float}));
            }
            if exact {
                let e = &v.exact;
                println!(
                    "c0={}, c1={}, c2={}",
                    plain(&e.c0),
                    plain(&e.c1),
                    plain(&e.c2)
                );
            }
            println!("{float}");
        }
        Function::Qmark => {
            let v = qmark(x)?;
            if json {
                let float = v.to_decimal(float_digits(cfg.prec));
                return print_json(&json!({"x": x, "value": v, "float": float}));
            }
            println!("{v}");
        }
        Function::Glambda => {
            let lam = require(lambda_real, "--lambda-real", "glambda")?;
            let v = g_lambda(x, lam, cfg.prec)?;
            if json {
                return print_json(&json!({"x": x, "lambda": lam, "value": v}));
            }
            println!("{v}");
        }
        Function::Kappa => {
            let a = require(alpha, "--alpha", "kappa")?;
            let v = kappa(x, a)?;
            if json {
                return print_json(&json!({"x": x, "alpha": a, "value": v}));
            }
            println!("{v}");
        }
    }
    Ok(())
}

fn emp(n: u32, x: &Rational, cfg: &Config) -> Result<()> {
    no_csv(cfg, "emp")?;
    check_level(n, cfg)?;
    let f = f_closed(x)?;
    let empirical = empirical_f_on(&z_level(n)?, x);
    let digits = float_digits(cfg.prec);
    let f_float = f.exact.to_decimal_string(cfg.prec)?;
    let gap = (empirical.to_f64() - f.to_f64()).abs();
    if cfg.mode == OutputMode::Json {
        return print_json(&json!({
            "n": n,
            "x": x,
            "empirical": empirical,
            "empirical_float": empirical.to_decimal(digits),
            "float": f_float,
            "abs_diff": gap,
        }));
    }
    println!("empirical = {empirical} = {}", empirical.to_decimal(digits));
    println!("F         = {f_float}");
    println!("|diff|    = {gap:e}");
    Ok(())
}

fn verify(suite: SuiteArg, max_n: u32, cfg: &Config) -> Result<()> {
    no_csv(cfg, "verify")?;
    let suite = match suite {
        SuiteArg::Recurrence => Suite::Recurrence,
        SuiteArg::Functional => Suite::Functional,
        SuiteArg::Ratios => Suite::Ratios,
        SuiteArg::Oracle => Suite::Oracle,
        SuiteArg::Monotone => Suite::Monotone,
        SuiteArg::Conversion => Suite::Conversion,
        SuiteArg::Qmark => Suite::Qmark,
    };
    if suite != Suite::Conversion {
        check_level(max_n, cfg)?;
    }
    let report = suite.run(max_n)?;
    if cfg.mode == OutputMode::Json {
        print_json(&report)?;
    } else {
        println!(
            "{} n={}: {} checked, {} failures",
            report.suite,
            report.level,
            report.checked,
            report.failures.len()
        );
        for f in &report.failures {
            println!("  {}: expected {}, got {}", f.input, f.expected, f.got);
        }
    }
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::VerifyFailed(report.failures.len()))
    }
}

#[derive(Serialize)]
struct DerivRow {
    k: u32,
    y_k: Rational,
    #[serde(rename = "F")]
    f: f64,
    d_k: f64,
}

fn deriv(x: &Rational, side: SideArg, kmax: u32, cfg: &Config) -> Result<()> {
    let side = match side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let rows: Vec<DerivRow> = difference_quotients(x, side, kmax)?
        .into_iter()
        .map(|p| DerivRow {
            k: p.k,
            y_k: p.y,
            f: p.f_y,
            d_k: p.d,
        })
        .collect();
    emit_table(&cfg.mode, &rows)
}

fn ratio_label(r: SplitRatio) -> &'static str {
    match r {
        SplitRatio::COverLambda => "c/lambda",
        SplitRatio::COverLambda2 => "c/lambda^2",
        SplitRatio::InvLambda => "1/lambda",
        SplitRatio::InvCLambda => "1/(c*lambda)",
    }
}

#[derive(Serialize)]
struct GRowOut {
    n: usize,
    left: Rational,
    right: Rational,
    ratio: &'static str,
    ratio_float: f64,
    g: f64,
}

fn gseq(text: &str, depth: usize, cfg: &Config) -> Result<()> {
    let cf: MinimalCF = text.parse()?;
    let rows: Vec<GRowOut> = g_sequence(&cf, depth)?
        .into_iter()
        .map(|r| GRowOut {
            n: r.n,
            left: r.left,
            right: r.right,
            ratio: ratio_label(r.ratio),
            ratio_float: r.ratio_float,
            g: r.g,
        })
        .collect();
    emit_table(&cfg.mode, &rows)
}
