//! The `hopf` command line. [`run`] is the whole program minus process exit,
//! so tests can drive it in-process.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 a parse or argument error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::error::{Error, Result};
use crate::expr::{self, Algebra, Value};
use crate::hopf_trees::{epsilon, kappa, tree_multiplicity};
use crate::lincomb::LinComb;
use crate::mzv::{RelationReport, ZetaEvaluator};
use crate::sym::abelianize;
use crate::trees::enumerate_trees;
use crate::verify::{self, Config, OutputFormat};
use crate::words::{admissible_words_of_weight, ohno_action, shuffle, tau, tau_admissible, AdmissibleWord, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hopf", version, about = "Exact computations in QSym, NSym, rooted-tree Hopf algebras and multiple zeta values")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Degree cap for `verify all` and `qsym expand`.
    #[arg(long, global = true, default_value_t = 5)]
    max_degree: u32,
    /// Truncation point for multiple zeta values (`1000000` or `1e6`).
    #[arg(long = "N", global = true, default_value = "1000000", value_parser = parse_count)]
    truncation_n: u64,
    /// Tolerance for numeric relations.
    #[arg(long, global = true, default_value_t = 1e-4)]
    tol: f64,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Products, coproducts, antipodes and series of algebra elements.
    Qsym {
        #[command(subcommand)]
        op: QsymOp,
    },
    /// The word algebra Q<x,y>.
    Word {
        #[command(subcommand)]
        op: WordOp,
    },
    /// Multiple zeta values by truncated summation.
    Mzv {
        #[command(subcommand)]
        op: MzvOp,
    },
    /// Rooted trees and the Grossman-Larson algebra.
    Tree {
        #[command(subcommand)]
        op: TreeOp,
    },
    /// Identity suites.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
}

#[derive(Subcommand, Debug)]
enum QsymOp {
    /// Product of two elements of the same algebra.
    Mul { a: String, b: String },
    /// Coproduct.
    Coprod { a: String },
    /// Antipode.
    Antipode { a: String },
    /// Monomial expansion of a QSym or Sym element.
    Expand {
        a: String,
        /// Number of variables (default: --max-degree).
        #[arg(long)]
        vars: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum WordOp {
    /// Shuffle product.
    Shuffle { u: String, v: String },
    /// The antiautomorphism exchanging x and y.
    Tau { w: String },
    /// The slotwise action of h_i on admissible words.
    Ohno {
        #[arg(long, allow_negative_numbers = true)]
        i: i64,
        w: String,
    },
}

#[derive(Subcommand, Debug)]
enum MzvOp {
    /// Truncated value of a combination of M(...) or W(...) terms.
    ///
    /// M(p1,...,pk) is zeta(pk,...,p1): the largest index carries the last part.
    Eval { expr: String },
    /// Checks that a combination vanishes, or runs an Ohno family.
    Verify {
        /// Check zeta(h_i w) = zeta(h_i tau(w)) for every admissible w of weight W - i.
        #[arg(long)]
        ohno: bool,
        /// Total weight W after the action (with --ohno).
        #[arg(long)]
        weight: Option<usize>,
        /// The index i of h_i (with --ohno).
        #[arg(long, allow_negative_numbers = true)]
        i: Option<i64>,
        expr: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum TreeOp {
    /// All rooted trees with n vertices.
    Enum { n: usize },
    /// Order of the automorphism group.
    Symm { t: String },
    /// Grossman-Larson product.
    Glmul { a: String, b: String },
    /// kappa_n, the sum of trees with n non-root vertices over their symmetry orders.
    Kappa { n: usize },
    /// epsilon_n = (-1)^n S(kappa_n).
    Epsilon { n: usize },
    /// Tree multiplicity n(.; t).
    Mult { t: String },
}

#[derive(Subcommand, Debug)]
enum VerifyOp {
    /// Every identity suite up to --max-degree.
    All,
}

fn parse_count(s: &str) -> std::result::Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64 => Ok(x as u64),
        _ => Err(format!("expected a nonnegative integer, found {:?}", s)),
    }
}

/// Runs the program on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let format = if cli.global.json { OutputFormat::Json } else { OutputFormat::Text };
    let cfg = match Config::new(cli.global.max_degree, cli.global.truncation_n, cli.global.tol, format) {
        Ok(cfg) => cfg,
        Err(e) => {
            let _ = writeln!(err, "error: {}", e);
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli.command, &cfg) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(CliError { error, input }) => {
            let _ = writeln!(err, "error: {}", error);
            if let (Error::Parse { pos, .. }, Some(input)) = (&error, input) {
                let _ = writeln!(err, "  {}", input);
                let _ = writeln!(err, "  {}^", " ".repeat(*pos));
            }
            EXIT_USAGE
        }
    }
}

struct CliError {
    error: Error,
    /// The argument being parsed, for the caret line.
    input: Option<String>,
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        Self { error, input: None }
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn with_input<T>(text: &str, r: Result<T>) -> CliResult<T> {
    r.map_err(|error| CliError { error, input: Some(text.to_string()) })
}

fn element(text: &str) -> CliResult<Value> {
    with_input(text, expr::parse(text))
}

fn element_in(text: &str, algebra: Algebra) -> CliResult<Value> {
    with_input(text, expr::parse_in(text, algebra))
}

/// A bare `xxy` or a `W(...)` combination.
fn word_comb(text: &str) -> CliResult<LinComb<Word>> {
    let trimmed = text.trim();
    if trimmed.chars().all(|c| c == 'x' || c == 'y') {
        return Ok(LinComb::basis(with_input(text, trimmed.parse())?));
    }
    match element_in(text, Algebra::Word)? {
        Value::Word(w) => Ok(w),
        _ => unreachable!("parse_in returns the requested algebra"),
    }
}

fn admissible_comb(text: &str) -> CliResult<LinComb<AdmissibleWord>> {
    let words = word_comb(text)?;
    with_input(text, words.try_map_linear(|w| AdmissibleWord::new(w.clone()).map(LinComb::basis)))
}

fn show_value(cfg: &Config, v: &Value) -> String {
    match cfg.format {
        OutputFormat::Text => format!("{}\n", v),
        OutputFormat::Json => json!({ "algebra": v.algebra().name(), "element": v.to_string() }).to_string() + "\n",
    }
}

fn show_json(v: serde_json::Value) -> String {
    v.to_string() + "\n"
}

fn show_scalar(cfg: &Config, key: &str, subject: &str, n: impl std::fmt::Display) -> String {
    match cfg.format {
        OutputFormat::Text => format!("{}\n", n),
        OutputFormat::Json => {
            let number: serde_json::Value = serde_json::from_str(&n.to_string()).expect("integers are JSON numbers");
            show_json(json!({ "tree": subject, key: number }))
        }
    }
}

fn report_json(r: &RelationReport) -> serde_json::Value {
    serde_json::to_value(r).expect("plain data serializes")
}

fn dispatch(cmd: &Command, cfg: &Config) -> CliResult<(String, i32)> {
    let ok = |s: String| Ok((s, EXIT_OK));
    match cmd {
        Command::Qsym { op } => match op {
            QsymOp::Mul { a, b } => {
                let (a, b) = unify(element(a)?, element(b)?)?;
                ok(show_value(cfg, &a.mul(&b)?))
            }
            QsymOp::Coprod { a } => {
                let v = element(a)?;
                let t = v.coproduct()?;
                ok(match cfg.format {
                    OutputFormat::Text => format!("{}\n", t),
                    OutputFormat::Json => {
                        let alg = v.algebra().name();
                        show_json(json!({ "algebra": format!("{}⊗{}", alg, alg), "tensor": t.to_string() }))
                    }
                })
            }
            QsymOp::Antipode { a } => ok(show_value(cfg, &element(a)?.antipode()?)),
            QsymOp::Expand { a, vars } => {
                let vars = vars.unwrap_or(cfg.max_degree as usize);
                if vars == 0 {
                    return Err(Error::InvalidArgument("--vars must be at least 1".into()).into());
                }
                let p = element(a)?.expand(vars, cfg.max_degree)?;
                ok(match cfg.format {
                    OutputFormat::Text => format!("{}\n", p),
                    OutputFormat::Json => {
                        show_json(json!({ "vars": vars, "max_degree": cfg.max_degree, "polynomial": p.to_string() }))
                    }
                })
            }
        },
        Command::Word { op } => {
            let result = match op {
                WordOp::Shuffle { u, v } => {
                    let (u, v) = (word_comb(u)?, word_comb(v)?);
                    u.bilinear(&v, shuffle)
                }
                WordOp::Tau { w } => word_comb(w)?.map_linear(|x| LinComb::basis(tau(x))),
                WordOp::Ohno { i, w } => {
                    let w = admissible_comb(w)?;
                    w.try_map_linear(|x| ohno_action(*i, x))?.map_linear(|x| LinComb::basis(x.clone().into_word()))
                }
            };
            ok(show_value(cfg, &Value::Word(result)))
        }
        Command::Mzv { op } => {
            let mut z = ZetaEvaluator::new(cfg.truncation_n)?;
            match op {
                MzvOp::Eval { expr } => {
                    let value = match element(expr)? {
                        Value::QSym(a) => z.eval(a.terms())?,
                        Value::Word(w) => z.eval(&w)?,
                        other => return Err(not_zeta(&other).into()),
                    };
                    ok(show_json(serde_json::to_value(value).expect("plain data serializes")))
                }
                MzvOp::Verify { ohno: false, expr: Some(expr), weight: None, i: None } => {
                    let rep = match element(expr)? {
                        Value::QSym(a) => z.verify(a.terms(), cfg.tolerance)?,
                        Value::Word(w) => z.verify(&w, cfg.tolerance)?,
                        other => return Err(not_zeta(&other).into()),
                    };
                    Ok((show_json(report_json(&rep)), if rep.pass { EXIT_OK } else { EXIT_FAILED }))
                }
                MzvOp::Verify { ohno: true, weight: Some(weight), i: Some(i), expr } => {
                    let base = usize::try_from(*i)
                        .ok()
                        .and_then(|i| weight.checked_sub(i))
                        .filter(|&b| b >= 2)
                        .ok_or_else(|| Error::InvalidArgument("need i >= 0 and weight - i >= 2".into()))?;
                    let words: Vec<AdmissibleWord> = match expr {
                        Some(text) => {
                            let words: Vec<_> = admissible_comb(text)?.keys().cloned().collect();
                            if let Some(w) = words.iter().find(|w| w.len() != base) {
                                let msg = format!("{} does not have weight {} - {}", w, weight, i);
                                return Err(Error::InvalidArgument(msg).into());
                            }
                            words
                        }
                        None => admissible_words_of_weight(base),
                    };
                    let mut worst: Option<RelationReport> = None;
                    let mut all_pass = true;
                    for w in &words {
                        let rel = &ohno_action(*i, w)? - &ohno_action(*i, &tau_admissible(w))?;
                        let rep = z.verify(&rel, cfg.tolerance)?;
                        all_pass &= rep.pass;
                        if worst.as_ref().is_none_or(|b| rep.value.abs() > b.value.abs()) {
                            worst = Some(rep);
                        }
                    }
                    let Some(worst) = worst else {
                        return Err(Error::InvalidArgument("no words to check".into()).into());
                    };
                    let mut doc = report_json(&RelationReport { pass: all_pass, ..worst });
                    doc["relations"] = json!(words.len());
                    Ok((show_json(doc), if all_pass { EXIT_OK } else { EXIT_FAILED }))
                }
                MzvOp::Verify { .. } => Err(Error::InvalidArgument(
                    "use `mzv verify EXPR` or `mzv verify --ohno --weight W --i I [WORD]`".into(),
                )
                .into()),
            }
        }
        Command::Tree { op } => match op {
            TreeOp::Enum { n } => {
                let trees = enumerate_trees(*n)?;
                ok(match cfg.format {
                    OutputFormat::Text => trees.iter().map(|t| format!("{}\n", t)).collect(),
                    OutputFormat::Json => {
                        let list: Vec<String> = trees.iter().map(|t| t.to_string()).collect();
                        show_json(json!({ "n": n, "count": list.len(), "trees": list }))
                    }
                })
            }
            TreeOp::Symm { t } => {
                let tree = with_input(t, expr::parse_tree(t))?;
                ok(show_scalar(cfg, "symm_order", &tree.to_string(), tree.symm_order()))
            }
            TreeOp::Glmul { a, b } => {
                let (a, b) = (element_in(a, Algebra::T)?, element_in(b, Algebra::T)?);
                ok(show_value(cfg, &a.mul(&b)?))
            }
            TreeOp::Kappa { n } => ok(show_value(cfg, &Value::T(kappa(*n)?))),
            TreeOp::Epsilon { n } => ok(show_value(cfg, &Value::T(epsilon(*n)?))),
            TreeOp::Mult { t } => {
                let tree = with_input(t, expr::parse_tree(t))?;
                ok(show_scalar(cfg, "multiplicity", &tree.to_string(), tree_multiplicity(&tree)))
            }
        },
        Command::Verify { op: VerifyOp::All } => {
            let reports = verify::run_all(cfg);
            let code = if reports.iter().all(|r| r.pass) { EXIT_OK } else { EXIT_FAILED };
            Ok((verify::render(cfg, &reports), code))
        }
    }
}

/// An NSym argument next to a Sym one (`e(...)` alone parses as NSym) is abelianized.
fn unify(a: Value, b: Value) -> Result<(Value, Value)> {
    match (a, b) {
        (Value::NSym(a), b @ Value::Sym(_)) => Ok((Value::Sym(abelianize(&a)), b)),
        (a @ Value::Sym(_), Value::NSym(b)) => Ok((a, Value::Sym(abelianize(&b)))),
        (a, b) if a.algebra() == b.algebra() => Ok((a, b)),
        (a, b) => Err(Error::AlgebraMismatch(format!("cannot multiply {} by {}", a.algebra(), b.algebra()))),
    }
}

fn not_zeta(v: &Value) -> Error {
    Error::InvalidArgument(format!("zeta is defined on QSym (M terms) and words (W terms), not {}", v.algebra()))
}
