use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use mouldcalc::expr::{self, Value};
use mouldcalc::json::{lincomb, rational};
use mouldcalc::report::Bounds;
use mouldcalc::specs::{parse_arbomould, parse_mould};
use mouldcalc::{suites, Error, Result};
use mouldcalc_core::arbomoulds::{arborify_mould, check_separative};
use mouldcalc_core::forests::Forest;
use mouldcalc_core::linalg::{parse_rational, BasisDisplay};
use mouldcalc_core::moulds::{
    audit_composition, audit_product, check_symmetral, check_symmetrel, gen_symmetrel,
    growth_audit, Mould, PairCounterexample,
};
use mouldcalc_core::qsym::{deconcat_oracle, gamma_oracle, q, OrderedAlphabet};
use mouldcalc_core::surjections::{
    enumerate_qsh, enumerate_qsh_all, enumerate_wqsh, factorize_wqsh, fiber_qsh, standardize,
    SplitSurjection,
};
use mouldcalc_core::words::{words_up_to_len, Word};
use mouldcalc_core::{LinComb, Nat};

#[derive(Parser)]
#[command(name = "mouldcalc", version, about = "Exact mould calculus on words and rooted forests")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct BoundArgs {
    #[arg(long, default_value_t = 4)]
    max_len: usize,
    #[arg(long, default_value_t = 6)]
    max_weight: u32,
    #[arg(long, default_value_t = 8)]
    growth_weight: u32,
    #[arg(long, default_value_t = 4)]
    max_vertices: usize,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2, 3])]
    letters: Vec<u32>,
    #[arg(long, value_delimiter = ',', default_values_t = [1, 2])]
    decorations: Vec<u32>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl BoundArgs {
    fn bounds(&self) -> Bounds {
        Bounds {
            letters: self.letters.clone(),
            max_len: self.max_len,
            max_weight: self.max_weight,
            growth_weight: self.growth_weight,
            max_vertices: self.max_vertices,
            decorations: self.decorations.clone(),
            seed: self.seed,
        }
    }

    fn nats(&self) -> Result<Vec<Nat>> {
        nats(&self.letters)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression such as `qsh [1] [2]` or `arborify 3(1,2)`.
    Eval {
        expr: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
    },
    /// Word moulds.
    Mould {
        #[command(subcommand)]
        op: MouldOp,
    },
    /// Arborescent moulds.
    Arbomould {
        #[command(subcommand)]
        op: ArboOp,
    },
    /// Run a verification suite.
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[command(flatten)]
        bounds: BoundArgs,
    },
    /// Split surjections.
    Surj {
        #[command(subcommand)]
        op: SurjOp,
    },
    /// Quasi-symmetric functions.
    Qsym {
        #[command(subcommand)]
        op: QsymOp,
    },
}

#[derive(Subcommand)]
enum MouldOp {
    /// Evaluate a mould on a word.
    Eval { mould: String, word: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Evaluate the product `left x right` on a word.
    Mul { left: String, right: String, word: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Evaluate the composition `left o right` on a word.
    Comp { left: String, right: String, word: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Evaluate `left <> right` on a word.
    Diamond { left: String, right: String, word: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Exit 1 with a counterexample if the mould is not symmetrel.
    CheckSymmetrel { mould: String, #[command(flatten)] bounds: BoundArgs },
    /// Exit 1 with a counterexample if the mould is not symmetral.
    CheckSymmetral { mould: String, #[command(flatten)] bounds: BoundArgs },
    /// Print a generated symmetrel mould on every word up to the bounds.
    GenSymmetrel { #[command(flatten)] bounds: BoundArgs },
    /// Audit `|M^w| <= C kappa^{weight}`, or a product/composition bound with `--with`.
    GrowthAudit {
        mould: String,
        #[arg(long, default_value = "1")]
        c: String,
        #[arg(long, default_value = "1")]
        kappa: String,
        /// Second mould as `SPEC:C:KAPPA`.
        #[arg(long)]
        with: Option<String>,
        #[arg(long, value_parser = ["product", "composition"], default_value = "product")]
        op: String,
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
    },
}

#[derive(Subcommand)]
enum ArboOp {
    /// Evaluate an arborescent mould on a forest.
    Eval { mould: String, forest: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Product over admissible cuts, evaluated on a forest.
    Mul { left: String, right: String, forest: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Composition over covering subforests, evaluated on a forest.
    Comp { left: String, right: String, forest: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// `left <> right` evaluated on a forest.
    Diamond { left: String, right: String, forest: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Evaluate the contracting arborification of a word mould.
    Arborify { mould: String, forest: String, #[arg(long, default_value_t = 6)] max_weight: u32 },
    /// Check separativity, or run a suite with `--suite`.
    Check {
        #[arg(long)]
        suite: Option<String>,
        #[arg(long)]
        mould: Option<String>,
        #[command(flatten)]
        bounds: BoundArgs,
    },
}

#[derive(Subcommand)]
enum SurjOp {
    /// Factorize a weak quasi-shuffle, e.g. `1224|113`.
    Factorize { phi: String },
    /// The fiber of quasi-shuffles over a weak quasi-shuffle.
    Fiber { phi: String },
    /// List quasi-shuffles (`qsh`, optionally of kind `--kind r`), or weak ones (`wqsh`).
    Enumerate {
        #[arg(value_parser = ["qsh", "wqsh"])]
        kind: String,
        p: usize,
        q: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Standardization of a packed word such as `13224`.
    Std { word: String },
}

#[derive(Subcommand)]
enum QsymOp {
    /// Expand `Q_w(X)` with `X` of the given size.
    Q { word: String, #[arg(long, default_value_t = 3)] size: usize },
    /// Read `Gamma(w)` off `Q_w(XY)`.
    Gamma { word: String, #[arg(long, default_value_t = 4)] size: usize },
    /// Read `Delta(w)` off `Q_w(X+Y)`.
    Deconcat { word: String, #[arg(long, default_value_t = 4)] size: usize },
}

fn nats(v: &[u32]) -> Result<Vec<Nat>> {
    v.iter()
        .map(|&x| Nat::new(x).ok_or_else(|| Error::Usage(format!("letter {} is not positive", x))))
        .collect()
}

fn word(s: &str) -> Result<Word> {
    Ok(s.parse()?)
}

fn forest(s: &str) -> Result<Forest> {
    Ok(s.parse()?)
}

fn split(s: &str) -> Result<SplitSurjection> {
    Ok(s.parse()?)
}

struct Out {
    json: bool,
    text: String,
    value: serde_json::Value,
    failed: bool,
}

impl Out {
    fn new(json: bool) -> Self {
        Out { json, text: String::new(), value: serde_json::Value::Null, failed: false }
    }

    fn scalar(mut self, r: &mouldcalc_core::Rational) -> Self {
        self.text = r.to_string();
        self.value = rational(r);
        self
    }

    fn lc<B: Ord + BasisDisplay>(mut self, lc: &LinComb<B>) -> Self {
        self.text = lc.to_string();
        self.value = lincomb(lc);
        self
    }
}

fn pair_report(out: &mut Out, name: &str, cx: Option<PairCounterexample>) {
    match cx {
        None => {
            out.text = format!("{} PASS", name);
            out.value = json!({"check": name, "outcome": "PASS"});
        }
        Some(c) => {
            out.failed = true;
            out.text = format!("{} FAIL\n  u={} v={}\n  lhs: {}\n  rhs: {}", name, c.u, c.v, c.lhs, c.rhs);
            out.value = json!({
                "check": name, "outcome": "FAIL",
                "counterexample": {"u": c.u.to_string(), "v": c.v.to_string(),
                                   "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string()},
            });
        }
    }
}

fn mould_op(op: MouldOp, json: bool) -> Result<Out> {
    let out = Out::new(json);
    let bin = |l: &str, r: &str, w: u32, f: fn(&Mould, &Mould) -> Mould| -> Result<Mould> {
        Ok(f(&parse_mould(l, w)?, &parse_mould(r, w)?))
    };
    Ok(match op {
        MouldOp::Eval { mould, word: w, max_weight } => out.scalar(&parse_mould(&mould, max_weight)?.eval(&word(&w)?)),
        MouldOp::Mul { left, right, word: w, max_weight } => {
            out.scalar(&bin(&left, &right, max_weight, Mould::mul)?.eval(&word(&w)?))
        }
        MouldOp::Comp { left, right, word: w, max_weight } => {
            out.scalar(&bin(&left, &right, max_weight, Mould::comp)?.eval(&word(&w)?))
        }
        MouldOp::Diamond { left, right, word: w, max_weight } => {
            out.scalar(&bin(&left, &right, max_weight, Mould::diamond)?.eval(&word(&w)?))
        }
        MouldOp::CheckSymmetrel { mould, bounds } => {
            let m = parse_mould(&mould, bounds.max_weight)?;
            let mut out = out;
            pair_report(&mut out, "symmetrel", check_symmetrel(&m, &bounds.nats()?, bounds.max_len));
            out
        }
        MouldOp::CheckSymmetral { mould, bounds } => {
            let m = parse_mould(&mould, bounds.max_weight)?;
            let mut out = out;
            pair_report(&mut out, "symmetral", check_symmetral(&m, &bounds.nats()?, bounds.max_len));
            out
        }
        MouldOp::GenSymmetrel { bounds } => {
            let m = gen_symmetrel(bounds.seed, bounds.max_weight.max(1))?;
            let values: LinComb<Word> = words_up_to_len(&bounds.nats()?, bounds.max_len)
                .into_iter()
                .map(|w| {
                    let v = m.eval(&w);
                    (w, v)
                })
                .collect();
            out.lc(&values)
        }
        MouldOp::GrowthAudit { mould, c, kappa, with, op, max_weight } => {
            let m = parse_mould(&mould, max_weight)?;
            let (c, kappa) = (parse_rational(&c)?, parse_rational(&kappa)?);
            let result = match with {
                None => growth_audit(&m, &c, &kappa, max_weight),
                Some(spec) => {
                    let mut parts = spec.rsplitn(3, ':');
                    let (k2, c2, n) = match (parts.next(), parts.next(), parts.next()) {
                        (Some(k), Some(c), Some(n)) => (k, c, n),
                        _ => return Err(Error::Usage("--with expects SPEC:C:KAPPA".into())),
                    };
                    let n = parse_mould(n, max_weight)?;
                    let (c2, k2) = (parse_rational(c2)?, parse_rational(k2)?);
                    if op == "product" {
                        audit_product(&m, &n, (&c, &kappa), (&c2, &k2), max_weight)
                    } else {
                        audit_composition(&m, &n, (&c, &kappa), (&c2, &k2), max_weight)
                    }
                }
            };
            let mut out = out;
            match result {
                Ok(()) => {
                    out.text = format!("growth PASS (weight <= {})", max_weight);
                    out.value = json!({"check": "growth", "outcome": "PASS", "max_weight": max_weight});
                }
                Err(v) => {
                    out.failed = true;
                    out.text = format!("growth FAIL\n  word: {}\n  value: {}\n  bound: {}", v.word, v.value, v.bound);
                    out.value = json!({"check": "growth", "outcome": "FAIL", "word": v.word.to_string(),
                                       "value": rational(&v.value), "bound": rational(&v.bound)});
                }
            }
            out
        }
    })
}

fn run_suites(name: &str, b: &Bounds, json: bool) -> Result<Out> {
    let reports = suites::run(name, b)?;
    for r in &reports {
        eprintln!("{} {:.3}s", r.suite, r.elapsed.as_secs_f64());
    }
    let mut out = Out::new(json);
    out.failed = reports.iter().any(|r| !r.passed());
    out.text = reports.iter().map(|r| r.to_text()).collect::<Vec<_>>().join("\n");
    out.text.truncate(out.text.trim_end().len());
    out.value = json!(reports.iter().map(|r| r.to_json()).collect::<Vec<_>>());
    Ok(out)
}

fn arbo_op(op: ArboOp, json: bool) -> Result<Out> {
    let out = Out::new(json);
    let bin = |l: &str, r: &str, w: u32| -> Result<_> { Ok((parse_arbomould(l, w)?, parse_arbomould(r, w)?)) };
    Ok(match op {
        ArboOp::Eval { mould, forest: f, max_weight } => out.scalar(&parse_arbomould(&mould, max_weight)?.eval(&forest(&f)?)),
        ArboOp::Mul { left, right, forest: f, max_weight } => {
            let (m, n) = bin(&left, &right, max_weight)?;
            out.scalar(&m.mul(&n).eval(&forest(&f)?))
        }
        ArboOp::Comp { left, right, forest: f, max_weight } => {
            let (m, n) = bin(&left, &right, max_weight)?;
            out.scalar(&m.comp(&n).eval(&forest(&f)?))
        }
        ArboOp::Diamond { left, right, forest: f, max_weight } => {
            let (m, n) = bin(&left, &right, max_weight)?;
            out.scalar(&m.diamond(&n).eval(&forest(&f)?))
        }
        ArboOp::Arborify { mould, forest: f, max_weight } => {
            out.scalar(&arborify_mould(&parse_mould(&mould, max_weight)?).eval(&forest(&f)?))
        }
        ArboOp::Check { suite, mould, bounds } => match (suite, mould) {
            (Some(s), None) => run_suites(&s, &bounds.bounds(), json)?,
            (None, Some(m)) => {
                let n = parse_arbomould(&m, bounds.max_weight)?;
                let mut out = out;
                match check_separative(&n, &nats(&bounds.decorations)?, bounds.max_vertices) {
                    Ok(()) => {
                        out.text = "separative PASS".into();
                        out.value = json!({"check": "separative", "outcome": "PASS"});
                    }
                    Err(c) => {
                        out.failed = true;
                        out.text = format!(
                            "separative FAIL\n  F={} G={}\n  lhs: {}\n  rhs: {}",
                            c.left, c.right, c.lhs, c.rhs
                        );
                        out.value = json!({"check": "separative", "outcome": "FAIL",
                            "counterexample": {"left": c.left.to_string(), "right": c.right.to_string(),
                                               "lhs": rational(&c.lhs), "rhs": rational(&c.rhs)}});
                    }
                }
                out
            }
            _ => return Err(Error::Usage("arbomould check needs exactly one of --suite or --mould".into())),
        },
    })
}

fn surj_op(op: SurjOp, json: bool) -> Result<Out> {
    let mut out = Out::new(json);
    match op {
        SurjOp::Factorize { phi } => {
            let (sigma, delta) = factorize_wqsh(&split(&phi)?)?;
            out.text = format!("delta {}\nsigma {}", delta, sigma);
            out.value = json!({"delta": delta.to_string(), "sigma": sigma.to_string()});
        }
        SurjOp::Fiber { phi } => {
            let fiber = fiber_qsh(&split(&phi)?)?;
            let width = fiber.iter().map(|e| e.eta.to_string().len()).max().unwrap_or(3).max(3);
            let mut lines = vec![format!("{:<width$}  sigma", "eta", width = width)];
            for e in &fiber {
                lines.push(format!("{:<width$}  {}", e.eta.to_string(), e.sigma, width = width));
            }
            lines.push(format!("{} elements", fiber.len()));
            out.text = lines.join("\n");
            out.value = json!({
                "count": fiber.len(),
                "entries": fiber.iter().map(|e| json!({"eta": e.eta.to_string(), "sigma": e.sigma.to_string()})).collect::<Vec<_>>(),
            });
        }
        SurjOp::Enumerate { kind, p, q, r } => {
            let list = match (kind.as_str(), r) {
                ("qsh", Some(r)) => enumerate_qsh(p, q, r),
                ("qsh", None) => enumerate_qsh_all(p, q),
                (_, None) => enumerate_wqsh(p, q),
                (_, Some(_)) => return Err(Error::Usage("--r applies to qsh only".into())),
            };
            let items: Vec<String> = list.iter().map(|s| s.to_string()).collect();
            out.text = format!("{}\n{} elements", items.join("\n"), items.len());
            out.text = out.text.trim_start().to_string();
            out.value = json!({"count": items.len(), "items": items});
        }
        SurjOp::Std { word } => {
            let values: Vec<u32> = word
                .chars()
                .map(|c| c.to_digit(10).filter(|&d| d > 0))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Usage(format!("`{}` is not a packed word of digits 1-9", word)))?;
            let s = standardize(&values);
            out.text = s.to_string();
            out.value = json!(s.to_string());
        }
    }
    Ok(out)
}

fn qsym_op(op: QsymOp, json: bool) -> Result<Out> {
    let out = Out::new(json);
    let xy = |n| (OrderedAlphabet::named("x", n), OrderedAlphabet::named("y", n));
    Ok(match op {
        QsymOp::Q { word: w, size } => out.lc(&q(&word(&w)?, &OrderedAlphabet::named("x", size))),
        QsymOp::Gamma { word: w, size } => {
            let (x, y) = xy(size);
            out.lc(&gamma_oracle(&word(&w)?, &x, &y)?)
        }
        QsymOp::Deconcat { word: w, size } => {
            let (x, y) = xy(size);
            out.lc(&deconcat_oracle(&word(&w)?, &x, &y)?)
        }
    })
}

fn eval_op(parts: Vec<String>, max_weight: u32, json: bool) -> Result<Out> {
    if parts.is_empty() {
        return Err(Error::Usage("eval needs an expression".into()));
    }
    let v: Value = expr::eval(&parts.join(" "), max_weight)?;
    let mut out = Out::new(json);
    out.text = v.to_string();
    out.value = v.to_json();
    Ok(out)
}

fn run(cli: Cli) -> Result<Out> {
    let json = cli.json;
    match cli.command {
        Command::Eval { expr, max_weight } => eval_op(expr, max_weight, json),
        Command::Mould { op } => mould_op(op, json),
        Command::Arbomould { op } => arbo_op(op, json),
        Command::Check { suite, bounds } => run_suites(&suite, &bounds.bounds(), json),
        Command::Surj { op } => surj_op(op, json),
        Command::Qsym { op } => qsym_op(op, json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            let text = if out.json {
                serde_json::to_string_pretty(&out.value).unwrap_or_default()
            } else {
                out.text
            };
            let mut stdout = std::io::stdout().lock();
            let _ = writeln!(stdout, "{}", text);
            ExitCode::from(if out.failed { 1 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
