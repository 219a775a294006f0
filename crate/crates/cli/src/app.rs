//! Subcommand dispatch. [`run`] never touches the process: it returns the
//! exit code and both output streams so the same path serves `main` and the
//! tests.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::{Pow, ToPrimitive};
use serde_json::{json, Map, Value};
use thiserror::Error;

use puiseux_core::{
    characteristic_of_branch, distinguished_exponents, normalize_denominator, nth_root_series,
    puiseux_pairs, quasi_ordinary_monomials, span, stabilizer, verify_corollary, verify_root,
    DistinguishedResult, ExponentVector, ExtScalar, MonomialOrdering, QSeries,
};

use crate::format::{format_series, json_uint, json_vector};
use crate::parse::{parse_series, ParseError};

#[derive(Debug, Parser)]
#[command(name = "puiseux", version, about = "Distinguished exponents of Puiseux series")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Series expression, e.g. "T^(2/4) + T^(3/4)" or "X1^(1/2)*X2 + X2^(3/2)".
    series: Option<String>,

    /// Read the series from a file instead.
    #[arg(long, conflicts_with = "series")]
    file: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderArg> for MonomialOrdering {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Lex => MonomialOrdering::Lex,
            OrderArg::Grlex => MonomialOrdering::GrLex,
            OrderArg::Grevlex => MonomialOrdering::GrevLex,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distinguished exponents, gcd chain and extension degree.
    Distinguished {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "grlex")]
        order: OrderArg,
        #[arg(long)]
        json: bool,
        /// Re-derive span and degree by subgroup enumeration; fail on mismatch.
        #[arg(long)]
        oracle: bool,
        /// Run on the denominator as written instead of the minimal one.
        #[arg(long)]
        no_normalize: bool,
    },
    /// Characteristic exponents and Puiseux pairs of a plane branch.
    Pairs {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Quasi-ordinary characteristic monomials (graded orderings only).
    Qo {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "grlex")]
        order: OrderArg,
        #[arg(long)]
        json: bool,
    },
    /// Degree of the extension generated by the series.
    Degree {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
        #[arg(long)]
        no_normalize: bool,
    },
    /// Truncated n-th root of a power series in T.
    Root {
        #[command(flatten)]
        input: Input,
        /// Root exponent.
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Truncation order: rootⁿ agrees with the series below T^trunc.
        #[arg(long = "trunc", visible_alias = "order", default_value_t = 10)]
        trunc: u64,
        #[arg(long)]
        json: bool,
    },
    /// Rewrite a series over its minimal denominator.
    Normalize {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {err}")]
    Io { path: String, err: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] puiseux_core::Error),
    #[error("oracle mismatch: {0}")]
    Oracle(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (including the program name) and executes the subcommand.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn read_input(input: &Input) -> Result<QSeries, CliError> {
    let text = match (&input.series, &input.file) {
        (Some(s), None) => s.clone(),
        (None, Some(path)) => std::fs::read_to_string(path)
            .map_err(|err| CliError::Io {
                path: path.display().to_string(),
                err: err.to_string(),
            })?
            .trim()
            .to_string(),
        _ => return Err(CliError::Usage("provide a series argument or --file".into())),
    };
    Ok(parse_series(&text)?)
}

fn support_of(zeta: &QSeries) -> Vec<ExponentVector> {
    zeta.support().into_iter().collect()
}

fn prepared(zeta: QSeries, normalize: bool) -> Result<QSeries, CliError> {
    if normalize {
        Ok(normalize_denominator(&zeta)?)
    } else {
        Ok(zeta)
    }
}

fn vectors_text(vs: &[ExponentVector]) -> String {
    if vs.is_empty() {
        return "none".into();
    }
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn numbers_text(xs: &[BigUint]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn distinguished_json(res: &DistinguishedResult) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("m".into(), json_uint(&res.m));
    obj.insert("pairs".into(), Value::Array(res.pairs.iter().map(json_vector).collect()));
    obj.insert("gcd_chain".into(), Value::Array(res.gcd_chain.iter().map(json_uint).collect()));
    obj.insert("degree".into(), json_uint(&res.degree));
    obj
}

/// Re-derives the result by explicit enumeration in `(ℤ/mℤ)^r`.
fn oracle_check(support: &[ExponentVector], res: &DistinguishedResult) -> Result<(), CliError> {
    let m = res
        .m
        .to_u64()
        .ok_or_else(|| CliError::Oracle("denominator too large to enumerate".into()))?;
    let r = support[0].len();
    let full = span(r, support, m)?;
    let generated = span(r, &res.pairs, m)?;
    if full != generated {
        return Err(CliError::Oracle(format!(
            "selected exponents generate {} residues, the support generates {}",
            generated.order(),
            full.order()
        )));
    }
    let stab = stabilizer(r, support, m)?;
    let expected = BigUint::from(m).pow(r as u32) / BigUint::from(stab.order());
    if expected != res.degree || BigUint::from(full.order()) != res.degree {
        return Err(CliError::Oracle(format!(
            "degree {} but enumeration gives m^r/|stabilizer| = {expected}",
            res.degree
        )));
    }
    if !verify_corollary(support, &res.pairs, m)? {
        return Err(CliError::Oracle("support not contained in the generated lattice".into()));
    }
    Ok(())
}

fn to_json(obj: Map<String, Value>) -> String {
    format!("{}\n", Value::Object(obj))
}

fn execute(cmd: Command) -> Result<String, CliError> {
    let mut out = String::new();
    match cmd {
        Command::Distinguished { input, order, json, oracle, no_normalize } => {
            let zeta = read_input(&input)?;
            if zeta.is_zero() {
                return Err(puiseux_core::Error::Domain("the series is zero".into()).into());
            }
            let zeta = prepared(zeta, !no_normalize)?;
            let support = support_of(&zeta);
            let ord = MonomialOrdering::from(order);
            let res = distinguished_exponents(&support, zeta.denominator(), ord)?;
            if oracle {
                oracle_check(&support, &res)?;
            }
            if json {
                let mut obj = distinguished_json(&res);
                if oracle {
                    obj.insert("oracle".into(), Value::from("pass"));
                }
                out = to_json(obj);
            } else {
                writeln!(out, "m          {}", res.m).unwrap();
                writeln!(out, "ordering   {ord}").unwrap();
                writeln!(out, "pairs      {}", vectors_text(&res.pairs)).unwrap();
                writeln!(out, "gcd chain  {}", numbers_text(&res.gcd_chain)).unwrap();
                writeln!(out, "degree     {}", res.degree).unwrap();
                if oracle {
                    writeln!(out, "oracle     pass").unwrap();
                }
            }
        }
        Command::Pairs { input, json } => {
            let zeta = read_input(&input)?;
            let c = characteristic_of_branch(&zeta)?;
            let pairs = puiseux_pairs(&c)?;
            if json {
                let mut obj = Map::new();
                obj.insert("m".into(), json_uint(c.m()));
                obj.insert("betas".into(), Value::Array(c.betas().iter().map(json_uint).collect()));
                obj.insert("e_chain".into(), Value::Array(c.e_chain().iter().map(json_uint).collect()));
                obj.insert(
                    "pairs".into(),
                    Value::Array(pairs.iter().map(|p| json!([json_uint(&p.p), json_uint(&p.q)])).collect()),
                );
                out = to_json(obj);
            } else if pairs.is_empty() {
                out.push_str("none\n");
            } else {
                let text: Vec<String> = pairs.iter().map(ToString::to_string).collect();
                writeln!(out, "{}", text.join(" ")).unwrap();
            }
        }
        Command::Qo { input, order, json } => {
            let zeta = read_input(&input)?;
            let rep = quasi_ordinary_monomials(&zeta, order.into())?;
            if json {
                let mut obj = distinguished_json(&rep.result);
                obj.insert("minimal".into(), json!(rep.minimal));
                obj.insert("irredundant".into(), json!(rep.irredundant));
                out = to_json(obj);
            } else {
                writeln!(out, "m          {}", rep.result.m).unwrap();
                writeln!(out, "gcd chain  {}", numbers_text(&rep.result.gcd_chain)).unwrap();
                writeln!(out, "degree     {}", rep.result.degree).unwrap();
                writeln!(out, "{:<16} {:<8} irredundant", "exponent", "minimal").unwrap();
                for ((p, min), irr) in rep.result.pairs.iter().zip(&rep.minimal).zip(&rep.irredundant) {
                    writeln!(out, "{:<16} {:<8} {}", p.to_string(), min, irr).unwrap();
                }
            }
        }
        Command::Degree { input, json, no_normalize } => {
            let zeta = read_input(&input)?;
            if zeta.is_zero() {
                return Err(puiseux_core::Error::Domain("the series is zero".into()).into());
            }
            let zeta = prepared(zeta, !no_normalize)?;
            let res = distinguished_exponents(&support_of(&zeta), zeta.denominator(), MonomialOrdering::GrLex)?;
            if json {
                let mut obj = Map::new();
                obj.insert("m".into(), json_uint(&res.m));
                obj.insert("degree".into(), json_uint(&res.degree));
                out = to_json(obj);
            } else {
                writeln!(out, "{}", res.degree).unwrap();
            }
        }
        Command::Root { input, n, trunc, json } => {
            let zeta = read_input(&input)?;
            let root = nth_root_series(&zeta, n, trunc)?;
            let lifted = zeta.map_coeffs(|c| ExtScalar::constant(c.clone()));
            if !verify_root(&root, &lifted, trunc) {
                return Err(puiseux_core::Error::Domain(format!(
                    "computed root failed verification at order {trunc}"
                ))
                .into());
            }
            let ext = root.terms().values().find_map(|c| c.extension().cloned());
            if json {
                let mut terms = Map::new();
                for (e, c) in root.terms_with_exponents() {
                    terms.insert(e.to_string(), Value::from(c.to_string()));
                }
                let mut obj = Map::new();
                obj.insert("lambda0".into(), Value::from(root.lambda0()));
                obj.insert("terms".into(), Value::Object(terms));
                obj.insert("verified_order".into(), Value::from(trunc));
                if let Some(ext) = &ext {
                    obj.insert("adjoined".into(), Value::from(ext.to_string()));
                }
                out = to_json(obj);
            } else {
                if let Some(ext) = &ext {
                    writeln!(out, "adjoined   {ext}").unwrap();
                }
                let lambdas: Vec<String> = root.lambdas().iter().map(ToString::to_string).collect();
                writeln!(out, "lambdas    {}", lambdas.join(" ")).unwrap();
                writeln!(out, "verified   below T^{trunc}").unwrap();
                for (e, c) in root.terms_with_exponents() {
                    writeln!(out, "T^({e})  {c}").unwrap();
                }
            }
        }
        Command::Normalize { input, json } => {
            let zeta = normalize_denominator(&read_input(&input)?)?;
            if json {
                let mut obj = Map::new();
                obj.insert("m".into(), json_uint(zeta.denominator()));
                obj.insert("series".into(), Value::from(format_series(&zeta)));
                out = to_json(obj);
            } else {
                writeln!(out, "{}", format_series(&zeta)).unwrap();
            }
        }
    }
    Ok(out)
}
