//! Command-line front end. [`run`] is the whole program minus process I/O.

use std::fmt::Write as _;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::algebra::{homology_with_jobs, Coefficients};
use crate::category::{
    check_certificate, degree_one_consequences, detectability, ls_category, ls_category_complex, verify_ganea,
    CatResult, CatValue, Certificate,
};
use crate::complex::{parse_dcx, write_dcx, DeltaComplex};
use crate::error::Error;
use crate::manifold::{facts, triangulate_expr, ManifoldExpr};
use crate::pi1::{classify_space, spine_presentation};
use crate::ring::{cup_length, ring_table};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTE: i32 = 2;
pub const EXIT_CERT: i32 = 3;

const GRAMMAR: &str = "\
expressions: term { \"#\" term }, term := S3 | S1xS2 | S1~S2 | T3 | RP2xS1 | RP3 | L(p,q) | Poinc | Q8
files: paths ending in .dcx (or --format dcx) are read as DCX complexes";

#[derive(Parser, Debug)]
#[command(name = "lscat", version, about = "Lusternik-Schnirelmann category of closed 3-manifolds", after_help = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Expr,
    Dcx,
}

#[derive(clap::Args, Debug)]
struct InputArgs {
    /// Connected-sum expression or path to a DCX file.
    input: String,
    /// How to read the input; `.dcx` paths default to dcx.
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(clap::Args, Debug)]
struct CertArgs {
    /// Print the full certificate.
    #[arg(long)]
    cert: bool,
    /// Re-check the certificate; exit 3 if it fails.
    #[arg(long)]
    verify: bool,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Category with upper and lower traces.
    Cat {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Detectability verdict.
    Detect {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Category of M x S^n.
    Ganea {
        expr: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[command(flatten)]
        cert: CertArgs,
    },
    /// Homology groups.
    Homology {
        #[command(flatten)]
        input: InputArgs,
        /// Coefficients: a modulus m >= 2, or Z.
        #[arg(long, default_value = "2")]
        coeffs: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Cohomology ring table over Z/p.
    Ring {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        coeffs: u64,
    },
    /// Cup-length over Z/p with a witness.
    Cuplength {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 2)]
        coeffs: u64,
    },
    /// Fundamental group class.
    Pi1 {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Consequences of a degree-one map SOURCE -> TARGET.
    Degree1 { source: String, target: String },
    /// Check a certificate file.
    Check { file: String },
    /// Print the DCX triangulation of an expression.
    Gen { expr: String },
}

/// Exit code and the text for standard output and standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Input {
    Expr(ManifoldExpr),
    Complex(DeltaComplex),
}

struct Failure(i32, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::BadLensParams { .. } | Error::UnknownGenerator(_) => EXIT_USAGE,
            _ => EXIT_COMPUTE,
        };
        let hint = if code == EXIT_USAGE { format!("\n{GRAMMAR}") } else { String::new() };
        Failure(code, format!("error: {e}{hint}"))
    }
}

fn read_input(a: &InputArgs) -> Result<Input, Failure> {
    let dcx = match a.format {
        Some(f) => f == Format::Dcx,
        None => a.input.ends_with(".dcx"),
    };
    if dcx {
        let text = std::fs::read_to_string(Path::new(&a.input))
            .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot read {}: {e}", a.input)))?;
        Ok(Input::Complex(parse_dcx(&text)?))
    } else {
        Ok(Input::Expr(ManifoldExpr::parse_normalized(&a.input)?))
    }
}

fn complex_of(input: Input) -> Result<DeltaComplex, Failure> {
    match input {
        Input::Complex(x) => Ok(x),
        Input::Expr(e) => Ok(triangulate_expr(&e)?),
    }
}

fn parse_coeffs(s: &str) -> Result<Coefficients, Failure> {
    if s == "Z" || s == "0" {
        return Ok(Coefficients::Integers);
    }
    match s.parse::<u64>() {
        Ok(m) if m >= 2 => Ok(Coefficients::Mod(m)),
        _ => Err(Failure(EXIT_USAGE, format!("error: bad --coeffs `{s}`: expected Z or a modulus >= 2"))),
    }
}

fn value_line(name: &str, v: CatValue) -> String {
    match v {
        CatValue::Exact(k) => format!("{name} = {k}\n"),
        CatValue::Interval(lo, hi) => format!("{name} in [{lo}, {hi}]\n"),
    }
}

fn report(r: &CatResult, name: &str, c: &CertArgs, out: &mut String) -> i32 {
    out.push_str(&value_line(name, r.value));
    out.push_str(&r.trace());
    if c.cert {
        out.push_str(&r.certificate.to_string());
    }
    if c.verify {
        let rep = check_certificate(&r.certificate);
        return verdict(&rep, out);
    }
    EXIT_OK
}

fn verdict(rep: &crate::category::CheckReport, out: &mut String) -> i32 {
    for f in &rep.catalog_facts {
        let _ = writeln!(out, "catalog fact: {f}");
    }
    if rep.ok {
        out.push_str("certificate verified\n");
        EXIT_OK
    } else {
        for d in &rep.diagnostics {
            let _ = writeln!(out, "violation: {d}");
        }
        out.push_str("certificate REJECTED\n");
        EXIT_CERT
    }
}

fn dispatch(verb: Verb, out: &mut String) -> Result<i32, Failure> {
    match verb {
        Verb::Cat { input, cert } => {
            let r = match read_input(&input)? {
                Input::Expr(e) => ls_category(&e)?,
                Input::Complex(x) => ls_category_complex(&x)?,
            };
            Ok(report(&r, "cat", &cert, out))
        }
        Verb::Detect { input } => {
            let d = match read_input(&input)? {
                Input::Expr(e) => detectability(&e),
                Input::Complex(x) => ls_category_complex(&x)?.detect,
            };
            let _ = writeln!(out, "{d}");
            Ok(EXIT_OK)
        }
        Verb::Ganea { expr, n, cert } => {
            let e = ManifoldExpr::parse_normalized(&expr)?;
            let r = verify_ganea(&e, n)?;
            Ok(report(&r, &format!("cat(M x S^{n})"), &cert, out))
        }
        Verb::Homology { input, coeffs, jobs } => {
            let c = parse_coeffs(&coeffs)?;
            let x = complex_of(read_input(&input)?)?;
            out.push_str(&homology_with_jobs(&x, c, jobs.max(1))?.table());
            Ok(EXIT_OK)
        }
        Verb::Ring { input, coeffs } => {
            let x = complex_of(read_input(&input)?)?;
            let r = ring_table(&x, coeffs)?;
            for (k, l) in r.labels.iter().enumerate() {
                let _ = writeln!(out, "H^{k} dim {}: {}", l.len(), l.join(" "));
            }
            for p in 1..=r.top_degree {
                for q in p..=r.top_degree - p {
                    for i in 0..r.dim(p) {
                        for j in 0..r.dim(q) {
                            let c = r.basis_product(p, i, q, j);
                            let terms: Vec<String> = c
                                .iter()
                                .enumerate()
                                .filter(|(_, &v)| v != 0)
                                .map(|(t, &v)| {
                                    let name = &r.labels[p + q][t];
                                    if v == 1 { name.clone() } else { format!("{v}*{name}") }
                                })
                                .collect();
                            if !terms.is_empty() {
                                let _ = writeln!(out, "{} * {} = {}", r.labels[p][i], r.labels[q][j], terms.join(" + "));
                            }
                        }
                    }
                }
            }
            if let Some(f) = &r.fundamental_pairing {
                let vals: Vec<String> = f.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "fundamental class: {}", vals.join(" "));
            }
            Ok(EXIT_OK)
        }
        Verb::Cuplength { input, coeffs } => {
            let x = complex_of(read_input(&input)?)?;
            let r = ring_table(&x, coeffs)?;
            let (cl, w) = cup_length(&r);
            let _ = writeln!(out, "cl = {cl}");
            if cl > 0 {
                let names: Vec<&str> = w.factors.iter().map(|&(d, i)| r.labels[d][i].as_str()).collect();
                let _ = writeln!(out, "witness: {} != 0", names.join(" * "));
            }
            Ok(EXIT_OK)
        }
        Verb::Pi1 { input } => {
            let x = match read_input(&input)? {
                Input::Expr(e) => {
                    let _ = writeln!(out, "pi1 = {} (catalog)", facts(&e).pi1);
                    if !e.triangulable() {
                        return Ok(EXIT_OK);
                    }
                    triangulate_expr(&e)?
                }
                Input::Complex(x) => x,
            };
            let p = spine_presentation(&x)?;
            let c = classify_space(&x)?;
            let _ = writeln!(out, "computed = {}", c.tag);
            let _ = writeln!(out, "presentation {p}");
            for ev in &c.evidence {
                let _ = writeln!(out, "evidence: {ev}");
            }
            Ok(EXIT_OK)
        }
        Verb::Degree1 { source, target } => {
            let s = ManifoldExpr::parse_normalized(&source)?;
            let t = ManifoldExpr::parse_normalized(&target)?;
            let _ = writeln!(out, "{}", degree_one_consequences(&s, &t)?);
            Ok(EXIT_OK)
        }
        Verb::Check { file } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Failure(EXIT_USAGE, format!("error: cannot read {file}: {e}")))?;
            let cert = Certificate::parse(&text)?;
            let rep = check_certificate(&cert);
            Ok(verdict(&rep, out))
        }
        Verb::Gen { expr } => {
            let e = ManifoldExpr::parse_normalized(&expr)?;
            out.push_str(&write_dcx(&triangulate_expr(&e)?));
            Ok(EXIT_OK)
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let mut out = String::new();
    match dispatch(cli.verb, &mut out) {
        Ok(code) => Output {
            code,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure(code, msg)) => Output {
            code,
            stdout: out,
            stderr: msg + "\n",
        },
    }
}
