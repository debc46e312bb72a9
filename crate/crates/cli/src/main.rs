use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use schurkit::expansion::{lr_expand, ribbon_expand};
use schurkit::posets::{full_poset, Order, OrderedFamily};
use schurkit::shapes::{partitions, Composition, Partition, Ribbon, SkewShape};
use schurkit::tableaux::Filling;
use schurkit::theorems::{self, Report};
use schurkit::ExpansionMemo;

#[derive(Parser)]
#[command(
    name = "schurkit",
    version,
    about = "Skew Schur expansions and the posets they induce"
)]
struct Cli {
    /// Worker threads for poset builds and verifications.
    #[arg(long, global = true, env = "SCHURKIT_JOBS")]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Schur expansion of a skew shape by the Littlewood-Richardson rule.
    Expand { shape: ShapeArg },
    /// Schur expansion of a ribbon, counting tableaux by descent set.
    RibbonExpand { alpha: Composition },
    /// Partitions with nonzero coefficient.
    Support { shape: ShapeArg },
    /// Compare two shapes of equal size.
    Compare {
        a: ShapeArg,
        b: ShapeArg,
        #[arg(long, value_enum, default_value_t = OrderArg::Schur)]
        order: OrderArg,
    },
    /// Build the poset of all skew shapes with N boxes.
    Poset {
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Schur)]
        order: OrderArg,
        /// Keep only connected classes.
        #[arg(long)]
        connected: bool,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Maximal classes among the connected ones.
    Maximal {
        n: usize,
        #[arg(long, value_enum, default_value_t = OrderArg::Schur)]
        order: OrderArg,
        #[command(flatten)]
        budget: Budget,
    },
    /// Run a verification and print its report. Exits 1 on a counterexample.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[arg(long)]
        n: Option<usize>,
        /// Row lengths for `minrib`; without it every partition of N is tried.
        #[arg(long)]
        lam: Option<Partition>,
        #[command(flatten)]
        budget: Budget,
    },
    /// A standard tableau of shape LAMBDA with the descent set of ALPHA.
    Witness {
        alpha: Composition,
        lambda: Partition,
        /// Print every recursion step.
        #[arg(long, conflicts_with = "inner")]
        trace: bool,
        /// Run a single extension step from this inner tableau, written row
        /// by row as in `1,2,3/4,5`.
        #[arg(long)]
        inner: Option<TableauArg>,
    },
    /// Equitable ribbons with N boxes and L rows, and their common support.
    Equitable { n: usize, l: usize },
    /// The ribbon traced by the diagonal of an L x (N - L + 1) grid.
    Billiard { n: usize, l: usize },
    /// Whether the support fills the whole dominance interval.
    FullSupport { shape: ShapeArg },
}

#[derive(Args)]
struct Budget {
    /// Largest N allowed for full poset builds.
    #[arg(long, default_value_t = 8)]
    budget: usize,
}

impl Budget {
    fn check(&self, n: usize) -> Result<(), String> {
        if n > self.budget {
            Err(format!(
                "N = {n} exceeds the poset budget {}; pass --budget {n} to proceed",
                self.budget
            ))
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Schur,
    Support,
}

impl From<OrderArg> for Order {
    fn from(o: OrderArg) -> Order {
        match o {
            OrderArg::Schur => Order::Schur,
            OrderArg::Support => Order::Support,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Check {
    Main,
    Support,
    Max,
    Minrib,
    Extreme,
}

/// A skew shape written `outer/inner` or `outer`, or a ribbon written `rib(α)`.
#[derive(Clone)]
struct ShapeArg(SkewShape);

impl FromStr for ShapeArg {
    type Err = schurkit::Error;

    fn from_str(s: &str) -> schurkit::Result<Self> {
        if let Some(rows) = s.strip_prefix("rib(").and_then(|r| r.strip_suffix(')')) {
            return Ok(ShapeArg(Ribbon::new(rows.parse()?).to_skew()));
        }
        s.parse().map(ShapeArg)
    }
}

/// A straight-shape filling written `1,2,3/4,5`.
#[derive(Clone)]
struct TableauArg(Filling);

impl FromStr for TableauArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let rows = s
            .split('/')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|_| format!("bad entry {x:?}")))
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>, String>>()?;
        Filling::straight(rows).map(TableauArg).map_err(|e| e.to_string())
    }
}

enum Failure {
    Usage(String),
    Counterexample(Value),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("schurkit: cannot set up {jobs} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli.command) {
        Ok(out) => emit(&out, ExitCode::SUCCESS),
        Err(Failure::Counterexample(report)) => emit(&pretty(&report), ExitCode::from(1)),
        Err(Failure::Usage(msg)) => {
            eprintln!("schurkit: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Writes to stdout; a closed pipe is not an error worth reporting.
fn emit(out: &str, code: ExitCode) -> ExitCode {
    match writeln!(std::io::stdout().lock(), "{out}") {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
            eprintln!("schurkit: {e}");
            ExitCode::from(2)
        }
        _ => code,
    }
}

/// Indented JSON, except that arrays without objects inside stay on one line.
fn pretty(v: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0);
    out
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (k, (key, val)) in map.iter().enumerate() {
                write!(out, "{}{}: ", pad(depth + 1), Value::String(key.clone())).unwrap();
                write_value(out, val, depth + 1);
                out.push_str(if k + 1 < map.len() { ",\n" } else { "\n" });
            }
            write!(out, "{}}}", pad(depth)).unwrap();
        }
        Value::Array(items) if items.iter().any(has_object) => {
            out.push_str("[\n");
            for (k, item) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_value(out, item, depth + 1);
                out.push_str(if k + 1 < items.len() { ",\n" } else { "\n" });
            }
            write!(out, "{}]", pad(depth)).unwrap();
        }
        Value::Array(items) => {
            out.push('[');
            for (k, item) in items.iter().enumerate() {
                if k > 0 {
                    out.push_str(", ");
                }
                write_value(out, item, depth);
            }
            out.push(']');
        }
        _ => out.push_str(&serde_json::to_string(v).unwrap()),
    }
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(m) => !m.is_empty(),
        Value::Array(items) => items.iter().any(has_object),
        _ => false,
    }
}

fn to_value<T: serde::Serialize + ?Sized>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn lib<T>(r: schurkit::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::Usage(e.to_string()))
}

fn run(command: Command) -> Result<String, Failure> {
    let memo = ExpansionMemo::new();
    let out = match command {
        Command::Expand { shape } => to_value(&lr_expand(&shape.0)),
        Command::RibbonExpand { alpha } => to_value(&ribbon_expand(&alpha)),
        Command::Support { shape } => {
            json!({"shape": shape.0, "support": memo.expand(&shape.0).support()})
        }
        Command::Compare { a, b, order } => compare(&a.0, &b.0, order.into(), &memo),
        Command::Poset {
            n,
            order,
            connected,
            dot,
            json: _,
            budget,
        } => {
            budget.check(n).map_err(Failure::Usage)?;
            let mut poset = full_poset(n, order.into(), &memo);
            if connected {
                poset = poset.connected_subposet();
            }
            if dot {
                return Ok(poset.to_dot().trim_end().to_string());
            }
            to_value(&poset)
        }
        Command::Maximal { n, order, budget } => {
            budget.check(n).map_err(Failure::Usage)?;
            maximal(&full_poset(n, order.into(), &memo))
        }
        Command::Verify { check, n, lam, budget } => {
            let report = verify(check, n, lam, &budget, &memo)?;
            let value = to_value(&report);
            if !report.pass {
                return Err(Failure::Counterexample(value));
            }
            value
        }
        Command::Witness {
            alpha,
            lambda,
            trace,
            inner,
        } => {
            if let Some(inner) = inner {
                to_value(&lib(theorems::extend_witness(&alpha, &lambda, &inner.0))?)
            } else if trace {
                to_value(&lib(theorems::witness_trace(&alpha, &lambda))?)
            } else {
                let t = lib(theorems::construct_witness_syt(&alpha, &lambda))?;
                json!({
                    "alpha": alpha,
                    "lambda": lambda,
                    "descents": lib(t.descent_set())?,
                    "tableau": t,
                })
            }
        }
        Command::Equitable { n, l } => {
            if l == 0 || l > n {
                return Err(Failure::Usage(format!("need 1 <= l <= n, got n = {n}, l = {l}")));
            }
            json!({
                "n": n,
                "l": l,
                "ribbons": theorems::enumerate_equitable(n, l),
                "support": theorems::predicted_support(n, l),
            })
        }
        Command::Billiard { n, l } => {
            let r = lib(theorems::conjectured_max_ribbon(n, l))?;
            json!({
                "n": n,
                "l": l,
                "ribbon": r.rows(),
                "shape": r.to_skew(),
                "boundary_word": theorems::boundary_word(&r),
                "upper_boundary_word": theorems::upper_boundary_word(&r),
            })
        }
        Command::FullSupport { shape } => {
            let s = &shape.0;
            let lo = s.rows_of();
            let hi = s.cols_of().transpose();
            json!({
                "shape": s,
                "full_support": theorems::has_full_support(s),
                "interval": [lo, hi],
                "interval_size": theorems::dominance_interval(&lo, &hi).len(),
                "support_size": memo.expand(s).len(),
            })
        }
    };
    Ok(pretty(&out))
}

fn compare(a: &SkewShape, b: &SkewShape, order: Order, memo: &ExpansionMemo) -> Value {
    let (ea, eb) = (memo.expand(a), memo.expand(b));
    let leq = |x: &schurkit::SchurExpansion, y: &schurkit::SchurExpansion| match order {
        Order::Schur => x.is_dominated_by(y),
        Order::Support => x.degree() == y.degree() && x.support().is_subset(&y.support()),
    };
    let b_leq_a = leq(&eb, &ea);
    let a_leq_b = leq(&ea, &eb);
    let relation = match (a_leq_b, b_leq_a) {
        (true, true) => "equal",
        (true, false) => "less",
        (false, true) => "greater",
        (false, false) => "incomparable",
    };
    json!({"order": order, "a": a, "b": b, "a_leq_b": a_leq_b, "b_leq_a": b_leq_a, "relation": relation})
}

fn maximal(poset: &OrderedFamily) -> Value {
    let classes: Vec<Value> = poset
        .maximal_connected()
        .into_iter()
        .map(|i| {
            let c = &poset.classes[i];
            json!({"rows": c.num_rows(), "members": c.members, "support": c.support.as_ref()})
        })
        .collect();
    json!({"n": poset.n, "order": poset.order, "maximal_connected": classes})
}

fn verify(
    check: Check,
    n: Option<usize>,
    lam: Option<Partition>,
    budget: &Budget,
    memo: &ExpansionMemo,
) -> Result<Report, Failure> {
    let need_n = || n.ok_or_else(|| Failure::Usage("this check needs --n".into()));
    Ok(match check {
        Check::Main => {
            let n = need_n()?;
            budget.check(n).map_err(Failure::Usage)?;
            theorems::verify_theorem_main(n, memo)
        }
        Check::Support => theorems::verify_support_prediction(need_n()?, memo),
        Check::Max => {
            let n = need_n()?;
            budget.check(n).map_err(Failure::Usage)?;
            theorems::verify_conjecture_max(n, memo)
        }
        Check::Extreme => theorems::verify_lemma_extreme(need_n()?, memo),
        Check::Minrib => match lam {
            Some(lam) => lib(theorems::verify_conjecture_minrib(&lam, memo))?,
            None => {
                let n = need_n()?;
                let mut bad = Vec::new();
                for lam in partitions(n) {
                    bad.extend(lib(theorems::verify_conjecture_minrib(&lam, memo))?.counterexamples);
                }
                Report::new("minrib", n, bad)
            }
        },
    })
}
