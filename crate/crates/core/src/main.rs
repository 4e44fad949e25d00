use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use greenring::algtest::{self, Budgets, ShiftBudget, VerdictKind};
use greenring::homalg::{self, Pims};
use greenring::meataxe::{self, Options};
use greenring::sl2tilt::{self, Symbol, TiltingWord};
use greenring::{io, Error, FieldSpec, Group, GroupSpec, ModuleRep, Result, SubgroupSpec};

const ORDER_CAP: usize = 1 << 20;

#[derive(Parser)]
#[command(name = "greenring", version, about = "Modules over finite fields: decomposition, syzygies, tensor closures")]
struct Cli {
    #[command(flatten)]
    cfg: RunConfig,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct RunConfig {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long = "budget-classes", global = true, default_value_t = 64)]
    max_classes: usize,
    #[arg(long = "budget-dim", global = true, default_value_t = 4096)]
    max_dim: usize,
    #[arg(long = "budget-depth", global = true, default_value_t = 16)]
    max_depth: usize,
    #[arg(long = "budget-iso", global = true, default_value_t = 128)]
    iso_trials: usize,
    #[arg(long = "budget-fitting", global = true, default_value_t = 64)]
    fitting_trials: usize,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

/// A module file, optionally attached to a permutation group.
#[derive(Args, Clone)]
struct ModuleIn {
    /// module bundle
    #[arg(long)]
    module: PathBuf,
    /// permutation group the module's generators belong to; by default the
    /// group generated by the module's own matrices
    #[arg(long)]
    group: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Module constructions
    #[command(subcommand)]
    Rep(RepCmd),
    /// Composition factors
    Chop {
        #[command(flatten)]
        m: ModuleIn,
    },
    /// Indecomposable summands
    Decompose {
        #[command(flatten)]
        m: ModuleIn,
        /// split free summands first (the acting group must be a p-group)
        #[arg(long)]
        pgroup: bool,
    },
    /// Isomorphism test with a certificate
    Isotest {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        with: PathBuf,
    },
    /// Projectivity on restriction to a p-subgroup
    Projtest {
        #[command(flatten)]
        m: ModuleIn,
        /// words of the p-subgroup; all generators by default
        #[arg(long)]
        sylow: Option<PathBuf>,
    },
    /// Heller shift Ω^n over a p-group
    Omega {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(short, long, default_value_t = 1, allow_hyphen_values = true)]
        n: i32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// rad(kP)/soc(kP) of a p-group
    Heart {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Jennings radical layers of a p-group
    Jennings {
        #[arg(long)]
        group: PathBuf,
    },
    /// Tensor closure with the algebraicity rules
    Closure {
        #[command(flatten)]
        m: ModuleIn,
        /// words of a Sylow subgroup; all generators by default
        #[arg(long)]
        sylow: Option<PathBuf>,
    },
    /// Klein-four restriction test (characteristic 2)
    V4test {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        words: PathBuf,
        /// accept dihedral 2-groups generated by two involutions
        #[arg(long)]
        dihedral: bool,
    },
    /// The rule registry with citations
    Rules,
    /// Symbolic SL2(q) calculus
    #[command(subcommand)]
    Sl2(Sl2Cmd),
}

#[derive(Subcommand)]
enum RepCmd {
    /// Dimension, field, group order and generator orders
    Info {
        #[command(flatten)]
        m: ModuleIn,
    },
    /// Tensor product with another module
    Tensor {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        with: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Contragredient module
    Dual {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Direct sum with another module
    Sum {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        with: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Restriction to a subgroup given by generator words
    Restrict {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        words: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Symmetric power
    Sym {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        power: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exterior power
    Ext {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Frobenius twist
    Twist {
        #[command(flatten)]
        m: ModuleIn,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Permutation module of a permutation group
    Perm {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        field: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Sl2Cmd {
    /// L(λ) ⊗ L(μ) for restricted λ, μ
    Tensor {
        #[arg(short)]
        p: u32,
        lambda: u32,
        mu: u32,
    },
    /// Closure of the natural module of SL2(p^n)
    Closure {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: usize,
        /// compare with the matrix closure (q <= 27)
        #[arg(long)]
        crosscheck: bool,
    },
    /// Matrix model of a word such as `T3,L1` (one symbol per level)
    Realize {
        #[arg(short)]
        p: u32,
        #[arg(short)]
        n: u32,
        word: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

struct Outcome {
    result: Value,
    /// rule ids whose citations go into the report
    rules: Vec<String>,
    verdict: Option<VerdictKind>,
}

impl Outcome {
    fn plain(result: Value) -> Self {
        Outcome {
            result,
            rules: vec![],
            verdict: None,
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn with_file<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { line, msg } => Error::Parse {
            line,
            msg: format!("{}: {msg}", path.display()),
        },
        e => e,
    })
}

fn load_group(path: &Path) -> Result<Group> {
    let name = path.file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned());
    with_file(path, io::parse_perm_group(&name, &read(path)?))
}

fn load_words(path: &Path) -> Result<SubgroupSpec> {
    with_file(path, io::parse_words(&read(path)?))
}

fn load_module(m: &ModuleIn) -> Result<ModuleRep> {
    let text = read(&m.module)?;
    match &m.group {
        Some(g) => with_file(&m.module, io::parse_module(&text, Some(&load_group(g)?))),
        None => {
            let raw = with_file(&m.module, io::parse_module(&text, None))?;
            let g = GroupSpec::from_matrices("module", raw.action().to_vec())?;
            raw.with_group(&g)
        }
    }
}

/// A second module on the first one's group.
fn load_partner(first: &ModuleRep, path: &Path) -> Result<ModuleRep> {
    with_file(path, io::parse_module(&read(path)?, Some(first.group())))
}

fn emit_module(m: &ModuleRep, out: &Option<PathBuf>) -> Result<Outcome> {
    let text = io::write_module(m);
    let mut r = json!({ "dim": m.dim(), "ngens": m.ngens() });
    match out {
        Some(p) => {
            fs::write(p, &text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            r["written"] = json!(p.display().to_string());
        }
        None => r["module"] = json!(text),
    }
    Ok(Outcome::plain(r))
}

/// Elements of the acting group, which must be a p-group.
fn acting_pgroup(m: &ModuleRep) -> Result<greenring::group::Elements> {
    m.group().enumerate(&SubgroupSpec::all_generators(m.ngens()), ORDER_CAP)
}

fn prime_power(n: usize) -> Option<u32> {
    let p = (2..=n).find(|d| n % d == 0)?;
    let mut k = n;
    while k % p == 0 {
        k /= p;
    }
    (k == 1).then_some(p as u32)
}

fn parse_word(p: u32, n: usize, s: &str) -> Result<TiltingWord> {
    let mut factors = Vec::new();
    for t in s.split(',').map(str::trim) {
        let bad = || Error::Io(format!("bad symbol `{t}`; expected L<a> or T<b>"));
        let (kind, num) = t.split_at(t.char_indices().nth(1).map_or(t.len(), |c| c.0));
        let v: u32 = num.trim_matches(|c| c == '(' || c == ')').parse().map_err(|_| bad())?;
        factors.push(match kind {
            "L" => Symbol::L(v),
            "T" => Symbol::T(v),
            _ => return Err(bad()),
        });
    }
    while factors.len() < n {
        factors.push(Symbol::L(0));
    }
    if factors.len() != n {
        return Err(Error::OutOfRange(factors.len()));
    }
    TiltingWord::new(p, factors)
}

fn run(cmd: &Cmd, opts: &Options, budgets: &Budgets) -> Result<Outcome> {
    match cmd {
        Cmd::Rep(r) => rep(r),
        Cmd::Chop { m } => {
            let m = load_module(m)?;
            let factors: Vec<Value> = meataxe::chop(&m, opts)?
                .iter()
                .map(|(s, k)| json!({ "dim": s.dim(), "multiplicity": k }))
                .collect();
            Ok(Outcome::plain(json!({ "dim": m.dim(), "factors": factors })))
        }
        Cmd::Decompose { m, pgroup } => {
            let m = load_module(m)?;
            let d = if *pgroup {
                meataxe::decompose_with(&m, opts, Some(&acting_pgroup(&m)?))?
            } else {
                meataxe::decompose(&m, opts)?
            };
            let summands: Vec<Value> = d
                .summands
                .iter()
                .map(|s| json!({ "dim": s.module.dim(), "multiplicity": s.multiplicity, "free": s.free, "fingerprint": s.fingerprint }))
                .collect();
            Ok(Outcome::plain(json!({ "dim": m.dim(), "summands": summands, "events": d.events })))
        }
        Cmd::Isotest { m, with } => {
            let a = load_module(m)?;
            let b = load_partner(&a, with)?;
            match meataxe::find_isomorphism(&a, &b, opts) {
                Ok(x) => Ok(Outcome::plain(json!({ "isomorphic": x.is_some() }))),
                Err(Error::Unknown) => Ok(Outcome {
                    result: json!({ "isomorphic": "unknown" }),
                    rules: vec![],
                    verdict: Some(VerdictKind::Inconclusive),
                }),
                Err(e) => Err(e),
            }
        }
        Cmd::Projtest { m, sylow } => {
            let m = load_module(m)?;
            let words = match sylow {
                Some(p) => load_words(p)?,
                None => SubgroupSpec::all_generators(m.ngens()),
            };
            let el = m.group().enumerate(&words, ORDER_CAP)?;
            Ok(Outcome::plain(json!({ "projective": meataxe::is_projective(&m, &el)?, "subgroup_order": el.len() })))
        }
        Cmd::Omega { m, n, out } => {
            let m = load_module(m)?;
            let pims = Pims::PGroup(acting_pgroup(&m)?);
            let r = homalg::omega(&m, *n, &pims, opts)?;
            let mut o = emit_module(&r.module, out)?;
            o.result["projective_multiplicity_removed"] = json!(r.projective_multiplicity_removed);
            Ok(o)
        }
        Cmd::Heart { group, out } => {
            let g = load_group(group)?;
            let all = SubgroupSpec::all_generators(g.ngens);
            let order = g.order(ORDER_CAP)?;
            let p = prime_power(order).ok_or(Error::NotPGroup(order))?;
            let h = homalg::heart(&g, &all, &FieldSpec::prime(p)?)?;
            let mut o = emit_module(&h, out)?;
            o.rules.push("heart".into());
            Ok(o)
        }
        Cmd::Jennings { group } => {
            let g = load_group(group)?;
            let el = g.enumerate(&SubgroupSpec::all_generators(g.ngens), ORDER_CAP)?;
            let p = prime_power(el.len()).ok_or(Error::NotPGroup(el.len()))?;
            let jb = homalg::jennings(&el, &FieldSpec::prime(p)?)?;
            let layers = jb.layer_dims();
            let cumulative: Vec<usize> = layers.iter().scan(0, |a, x| {
                *a += x;
                Some(*a)
            }).collect();
            Ok(Outcome::plain(json!({
                "p": p,
                "order": el.len(),
                "layers": layers,
                "dim_kP_mod_rad_power": cumulative,
            })))
        }
        Cmd::Closure { m, sylow } => closure(m, sylow, opts, budgets),
        Cmd::V4test { m, words, dihedral } => {
            let m = load_module(m)?;
            let v = algtest::v4_test(&m, &load_words(words)?, *dihedral, opts)?;
            Ok(Outcome {
                result: json!({ "verdict": v.kind, "reason": v.reason, "witness": v.witness }),
                rules: vec![v.reason.clone()],
                verdict: Some(v.kind),
            })
        }
        Cmd::Rules => {
            let rows = |rs: Vec<algtest::Rule>| -> Vec<Value> {
                rs.iter()
                    .map(|r| json!({ "id": r.id, "predicate": r.predicate, "verdict": r.verdict, "citation": r.citation }))
                    .collect()
            };
            Ok(Outcome::plain(json!({ "registry": rows(algtest::rule_registry()), "engine": rows(algtest::engine_rules()) })))
        }
        Cmd::Sl2(s) => sl2(s, opts, budgets),
    }
}

fn rep(r: &RepCmd) -> Result<Outcome> {
    match r {
        RepCmd::Info { m } => {
            let m = load_module(m)?;
            let f = m.field();
            let order = m.group().order(ORDER_CAP).ok();
            let fp = meataxe::fingerprint(&m, &Options::default())?;
            Ok(Outcome::plain(json!({
                "field": format!("GF({}^{})", f.p(), f.k()),
                "dim": m.dim(),
                "ngens": m.ngens(),
                "group_order": order,
                "fingerprint": fp,
            })))
        }
        RepCmd::Tensor { m, with, out } => {
            let a = load_module(m)?;
            emit_module(&a.tensor(&load_partner(&a, with)?)?, out)
        }
        RepCmd::Dual { m, out } => emit_module(&load_module(m)?.dual(), out),
        RepCmd::Sum { m, with, out } => {
            let a = load_module(m)?;
            emit_module(&a.direct_sum(&load_partner(&a, with)?)?, out)
        }
        RepCmd::Restrict { m, words, out } => emit_module(&load_module(m)?.restrict(&load_words(words)?)?, out),
        RepCmd::Sym { m, power, out } => emit_module(&load_module(m)?.sym_power(*power)?, out),
        RepCmd::Ext { m, out } => emit_module(&load_module(m)?.ext_square()?, out),
        RepCmd::Twist { m, out } => emit_module(&load_module(m)?.frobenius_twist(), out),
        RepCmd::Perm { group, field, out } => {
            emit_module(&ModuleRep::perm_module(&load_group(group)?, &FieldSpec::prime(*field)?)?, out)
        }
    }
}

fn closure(m: &ModuleIn, sylow: &Option<PathBuf>, opts: &Options, budgets: &Budgets) -> Result<Outcome> {
    let input = m.module.display().to_string();
    let m = load_module(m)?;
    let words = match sylow {
        Some(p) => load_words(p)?,
        None => SubgroupSpec::all_generators(m.ngens()),
    };
    let el = m.group().enumerate(&words, ORDER_CAP)?;
    let t0 = Instant::now();
    let (st, mut verdict) = algtest::tensor_closure(&m, &el, budgets, opts)?;
    let mut timings = vec![("closure".to_string(), t0.elapsed().as_millis())];
    if !st.is_closed() && words.words == SubgroupSpec::all_generators(m.ngens()).words {
        // the acting group is the p-group: syzygies are available
        let t1 = Instant::now();
        if let Some(v) = algtest::omega_shift_rule(&st, &Pims::PGroup(el), &ShiftBudget::default(), opts)? {
            verdict = v;
        }
        timings.push(("omega-shift".to_string(), t1.elapsed().as_millis()));
    }
    let report = algtest::Report::new(&input, opts, &st, &verdict, timings);
    let mut result = serde_json::to_value(&report).map_err(|e| Error::Io(e.to_string()))?;
    result["growth"] = json!(st.growth);
    result["status"] = json!(st.status);
    Ok(Outcome {
        result,
        rules: vec![verdict.reason.clone()],
        verdict: Some(verdict.kind),
    })
}

fn sl2(s: &Sl2Cmd, opts: &Options, budgets: &Budgets) -> Result<Outcome> {
    match s {
        Sl2Cmd::Tensor { p, lambda, mu } => {
            let sum = sl2tilt::fundamental_tensor(*lambda, *mu, *p)?;
            Ok(Outcome::plain(json!({ "product": sum.to_string(), "dim": sum.dim() })))
        }
        Sl2Cmd::Closure { p, n, crosscheck } => {
            let c = sl2tilt::v1_closure(*p, *n, 1 << 16)?;
            let mut r = json!({
                "closed": c.closed,
                "pair_words": c.pairs.len(),
                "classes": c.classes.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "saturated": c.saturated.len(),
            });
            let mut verdict = if c.closed { VerdictKind::Algebraic } else { VerdictKind::Inconclusive };
            if *crosscheck {
                let x = sl2tilt::crosscheck(&c, budgets, opts)?;
                r["crosscheck"] = json!({ "pass": x.pass(), "detail": x });
                if !x.pass() {
                    verdict = VerdictKind::Inconclusive;
                }
            }
            Ok(Outcome {
                result: r,
                rules: vec!["tensor-closure".into()],
                verdict: Some(verdict),
            })
        }
        Sl2Cmd::Realize { p, n, word, out } => {
            let w = parse_word(*p, *n as usize, word)?;
            let v1 = sl2tilt::realize_on_matrices(*p, *n)?;
            let m = sl2tilt::realize_word(&w, &v1, opts)?;
            let mut o = emit_module(&m, out)?;
            o.result["word"] = json!(w.to_string());
            o.result["character_dim"] = json!(w.dim());
            Ok(o)
        }
    }
}

fn citations(ids: &[String]) -> Vec<Value> {
    let all: Vec<algtest::Rule> = algtest::rule_registry().into_iter().chain(algtest::engine_rules()).collect();
    ids.iter()
        .filter_map(|id| all.iter().find(|r| r.id == id))
        .map(|r| json!({ "rule": r.id, "citation": r.citation }))
        .collect()
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::String(s) if s.contains('\n') => {
                        out.push_str(&format!("{pad}{k}:\n{s}"));
                    }
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 2, out);
                    }
                    Value::String(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    _ => out.push_str(&format!("{pad}{k}: {x}\n")),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{v}\n")),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let c = &cli.cfg;
    let opts = Options {
        seed: c.seed,
        fitting_trials: c.fitting_trials,
        iso_trials: c.iso_trials,
        ..Options::default()
    };
    let budgets = Budgets {
        max_classes: c.max_classes,
        max_dim: c.max_dim,
        max_depth: c.max_depth,
    };
    let outcome = match run(&cli.cmd, &opts, &budgets) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let mut report = Map::new();
    report.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    report.insert(
        "config".into(),
        json!({
            "seed": c.seed,
            "budgets": budgets,
            "iso_trials": c.iso_trials,
            "fitting_trials": c.fitting_trials,
            "args": std::env::args().skip(1).collect::<Vec<_>>(),
        }),
    );
    report.insert("result".into(), outcome.result);
    if let Some(v) = outcome.verdict {
        report.insert("verdict".into(), json!(v));
    }
    report.insert("citations".into(), json!(citations(&outcome.rules)));
    let report = Value::Object(report);
    match c.format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("serializable")),
        Format::Text => {
            let mut s = String::new();
            render_text(&report["result"], 0, &mut s);
            if let Some(v) = report.get("verdict") {
                s.push_str(&format!("verdict: {v}\n"));
            }
            for c in report["citations"].as_array().into_iter().flatten() {
                s.push_str(&format!("[{}] {}\n", c["rule"].as_str().unwrap_or(""), c["citation"].as_str().unwrap_or("")));
            }
            print!("{s}");
        }
    }
    match outcome.verdict {
        Some(VerdictKind::Inconclusive) => ExitCode::from(2),
        _ => ExitCode::SUCCESS,
    }
}
