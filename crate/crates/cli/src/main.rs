use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use umbral::exactalg::{Poly1, Rational, DEFAULT_TRUNC};
use umbral::families::{family_p, family_q, family_sequence, Family, FamilyParams, FamilySpec};
use umbral::operators::expand_in_xd;
use umbral::random::random_sequence;
use umbral::sequence::PolySeq;
use umbral::sheffer::{generalized_sheffer, verify_convolution};

mod suites;

#[derive(Parser)]
#[command(name = "umbral", version, about = "Exact umbral calculus over the rationals")]
struct Cli {
    /// Output format; json mode prints a single JSON document on stdout.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Truncation degree N.
    #[arg(short = 'n', long = "degree", default_value_t = DEFAULT_TRUNC, global = true)]
    degree: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print a named family together with its lowering and Sheffer operators.
    Family {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run the generalized Sheffer construction on a sequence.
    Construct {
        /// JSON file holding the sequence, or `-` for stdin.
        input: Option<PathBuf>,
        /// Use a seeded random sequence instead of an input file.
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Family to verify (all suites except sym).
        #[arg(long)]
        family: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        /// Shift constant for the coalgebra suite's E^(y-c) checks, or the
        /// scale factor for the scaled-elementary sym sequence.
        #[arg(long, allow_hyphen_values = true)]
        c: Option<Rational>,
        /// Sequence for the sym suite.
        #[arg(long, value_enum)]
        sequence: Option<SymSequence>,
    },
}

#[derive(Args, Clone, Default)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,
}

impl From<ParamArgs> for FamilyParams {
    fn from(p: ParamArgs) -> FamilyParams {
        FamilyParams {
            nu: p.nu,
            alpha: p.alpha,
            a: p.a,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Convolution,
    Sheffer,
    Cauchy,
    Generator,
    Coalgebra,
    Sym,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymSequence {
    Elementary,
    Complete,
    MConjugate,
    ScaledElementary,
}

/// Result of a command: whether every check passed, plus both renderings.
pub struct Outcome {
    pub ok: bool,
    pub json: Value,
    pub text: String,
}

pub enum CliError {
    /// Bad arguments or unreadable input (exit code 2).
    Usage(String),
    /// The input violates a contract of the computation (exit code 1).
    Failed(String),
}

impl From<umbral::Error> for CliError {
    fn from(e: umbral::Error) -> CliError {
        match e {
            umbral::Error::InvalidParameter(_) | umbral::Error::Parse(_) => CliError::Usage(e.to_string()),
            other => CliError::Failed(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Family { name, params } => cmd_family(&name, params, cli.degree),
        Command::Construct { input, random, seed } => cmd_construct(input, random, seed, cli.degree),
        Command::Verify {
            suite,
            family,
            params,
            c,
            sequence,
        } => {
            let spec = family
                .map(|name| Family::from_parts(&name, params.into()).map(|f| FamilySpec::new(f, cli.degree)))
                .transpose()
                .map_err(CliError::from);
            spec.and_then(|spec| match suite {
                Suite::Convolution => suites::convolution(need_family(spec)?),
                Suite::Sheffer => suites::sheffer(need_family(spec)?),
                Suite::Cauchy => suites::cauchy(need_family(spec)?),
                Suite::Generator => suites::generator(need_family(spec)?),
                Suite::Coalgebra => suites::coalgebra(spec, c, cli.degree),
                Suite::Sym => suites::sym(sequence, c, cli.degree),
            })
        }
    };
    match result {
        Ok(outcome) => {
            let rendered = match cli.format {
                Format::Json => serde_json::to_string_pretty(&outcome.json).expect("serializable") + "\n",
                Format::Text => outcome.text,
            };
            // A closed pipe downstream is not an error of the computation.
            let _ = std::io::stdout().lock().write_all(rendered.as_bytes());
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn need_family(spec: Option<FamilySpec>) -> Result<FamilySpec, CliError> {
    spec.ok_or_else(|| CliError::Usage("this suite requires --family".into()))
}

fn xd_text(q: &[Poly1]) -> String {
    let mut out = String::new();
    for (k, a) in q.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
        let d = match k {
            0 => String::new(),
            1 => "D".to_string(),
            _ => format!("D^{k}"),
        };
        let mut nonzero = a.coeffs().iter().filter(|c| !c.is_zero());
        let (neg, a) = match (nonzero.next(), nonzero.next()) {
            (Some(c), None) if c.is_negative() => (true, a.scale(&-Rational::one())),
            _ => (false, a.clone()),
        };
        let single_term = a.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        let coeff = match (a == Poly1::one(), single_term) {
            (true, _) if !d.is_empty() => String::new(),
            (_, true) if !d.is_empty() => format!("{a}*"),
            _ if d.is_empty() => a.to_string(),
            _ => format!("({a})*"),
        };
        match (out.is_empty(), neg) {
            (true, true) => out.push('-'),
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
            (true, false) => {}
        }
        out.push_str(&coeff);
        out.push_str(&d);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn cmd_family(name: &str, params: ParamArgs, degree: usize) -> Result<Outcome, CliError> {
    let family = Family::from_parts(name, params.into())?;
    let spec = FamilySpec::new(family, degree);
    let seq = family_sequence(&spec)?;
    let q_xd = expand_in_xd(&family_q(&spec));
    let p = match family_p(&spec) {
        Ok(p) => Some(p),
        Err(umbral::Error::NoStatedOperator(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let mut text = format!("{} (N = {degree})\n", spec.family);
    for (n, pn) in seq.polys().iter().enumerate() {
        text += &format!("p_{n} = {pn}\n");
    }
    text += &format!("Q = {}\n", xd_text(&q_xd));
    match &p {
        Some(p) => {
            text += "P:\n";
            for (n, col) in p.columns().iter().enumerate() {
                text += &format!("  P x^{n} = {col}\n");
            }
        }
        None => text += "P: no closed form\n",
    }
    let json = json!({
        "family": spec.family.to_string(),
        "trunc": degree,
        "polys": seq.polys(),
        "q_xd": q_xd,
        "p": p,
    });
    Ok(Outcome { ok: true, json, text })
}

fn read_sequence(input: Option<PathBuf>) -> Result<PolySeq, CliError> {
    let raw = match input {
        None => {
            return Err(CliError::Usage(
                "construct needs an input file, `-`, or --random".into(),
            ))
        }
        Some(path) if path.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
            s
        }
        Some(path) => {
            std::fs::read_to_string(&path).map_err(|e| CliError::Usage(format!("reading {}: {e}", path.display())))?
        }
    };
    // Accept either {"trunc": N, "polys": [...]} or a bare list of polynomials;
    // parse the shape first so that degree violations are reported separately.
    let value: Value = serde_json::from_str(&raw).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    let polys = match value {
        Value::Object(mut obj) => {
            let polys = obj
                .remove("polys")
                .ok_or_else(|| CliError::Usage("missing field `polys`".into()))?;
            let polys: Vec<Poly1> =
                serde_json::from_value(polys).map_err(|e| CliError::Usage(format!("invalid polynomial: {e}")))?;
            if let Some(t) = obj.get("trunc") {
                let t = t
                    .as_u64()
                    .ok_or_else(|| CliError::Usage("`trunc` must be an integer".into()))?;
                if t as usize + 1 != polys.len() {
                    return Err(CliError::Usage(format!(
                        "`trunc` is {t} but {} polynomials were given",
                        polys.len()
                    )));
                }
            }
            polys
        }
        other => serde_json::from_value(other).map_err(|e| CliError::Usage(format!("invalid polynomial: {e}")))?,
    };
    Ok(PolySeq::new(polys)?)
}

fn cmd_construct(input: Option<PathBuf>, random: bool, seed: u64, degree: usize) -> Result<Outcome, CliError> {
    let seq = if random {
        if input.is_some() {
            return Err(CliError::Usage(
                "give either an input file or --random, not both".into(),
            ));
        }
        random_sequence(seed, degree)
    } else {
        read_sequence(input)?
    };
    let data = generalized_sheffer(&seq)?;
    let report = verify_convolution(&data.f, &seq);
    let q_xd = expand_in_xd(&data.q);
    let mut text = format!("sequence (N = {}):\n", seq.trunc());
    for (n, pn) in seq.polys().iter().enumerate() {
        text += &format!("  p_{n} = {pn}\n");
    }
    text += &format!("Q = {}\n", xd_text(&q_xd));
    text += "basic sequence:\n";
    for (n, qn) in data.basic.polys().iter().enumerate() {
        text += &format!("  q_{n} = {qn}\n");
    }
    text += "F:\n";
    for (n, img) in data.f.images().iter().enumerate() {
        text += &format!("  F x^{n} = {img}\n");
    }
    text += &format!("convolution identity: {report}\n");
    let json = json!({
        "sequence": seq,
        "q_xd": q_xd,
        "q": data.q,
        "basic": data.basic,
        "p": data.p,
        "g": data.g,
        "f": data.f,
        "report": report,
    });
    Ok(Outcome {
        ok: report.ok(),
        json,
        text,
    })
}
