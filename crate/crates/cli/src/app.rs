use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rbgf_core::egf::{compose, divided_power, egf_kfold, egf_product};
use rbgf_core::rational::parse_rational;
use rbgf_core::verify::{self, Identity};
use rbgf_core::{AlgebraContext, LambdaEGF, ProductBackend, RBAElement, Rational};
use serde_json::{json, Map, Value};

use crate::expr::{eval_expr, parse_expr};
use crate::table::{self, Cell, Table};

const EXIT_OK: u8 = 0;
const EXIT_UNEQUAL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rbgf",
    version,
    about = "Exact computation in free commutative Rota-Baxter algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an algebra expression such as "w(0,1,2)*w(0,3)".
    Eval {
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a table of one number family.
    Table {
        #[arg(value_enum)]
        family: FamilyArg,
        #[command(flatten)]
        args: TableArgs,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Operate on λ-exponential generating functions.
    Egf {
        #[arg(value_enum)]
        op: EgfOp,
        /// Sequence spec: ones, ones-from-1, delta:K or list:a0,a1,...
        #[arg(long = "f", required = true)]
        f: Vec<String>,
        #[arg(long = "g")]
        g: Option<String>,
        /// Divided-power index, or number of repetitions of the f list for kfold.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check a named identity up to a truncation order.
    Verify {
        #[arg(value_parser = parse_identity)]
        identity: Identity,
        #[arg(long, default_value_t = 10)]
        trunc: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    /// Weight as p/q.
    #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_lambda)]
    lambda: Rational,
    #[arg(long, default_value_t = 10)]
    trunc: usize,
    #[arg(long, value_enum, default_value_t = BackendArg::Recursive)]
    backend: BackendArg,
}

impl AlgebraArgs {
    fn context(&self) -> AlgebraContext {
        let backend = match self.backend {
            BackendArg::Recursive => ProductBackend::Recursive,
            BackendArg::Stuffle => ProductBackend::Stuffle,
        };
        AlgebraContext::new(self.lambda.clone(), self.trunc).with_backend(backend)
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    nmax: Option<usize>,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long)]
    lmax: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Recursive,
    Stuffle,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    Stirling,
    Bell,
    GenStirling,
    GenBell,
    Cover,
    CoverDistinctMax,
    COfType,
    CTotal,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum EgfOp {
    Product,
    Kfold,
    DividedPower,
    Compose,
}

fn parse_lambda(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn parse_identity(s: &str) -> Result<Identity, String> {
    s.parse().map_err(|_| {
        let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
        format!(
            "unknown identity {s:?}; expected one of {}",
            names.join(", ")
        )
    })
}

/// Outcome of a subcommand: text for standard output and an exit code, or
/// a message for standard error.
type Outcome = Result<(String, u8), String>;

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Eval {
            expr,
            algebra,
            format,
        } => run_eval(&expr, &algebra, format),
        Command::Table {
            family,
            args,
            format,
        } => run_table(family, &args, format),
        Command::Egf {
            op,
            f,
            g,
            k,
            algebra,
            format,
        } => run_egf(op, &f, g.as_deref(), k, &algebra, format),
        Command::Verify {
            identity,
            trunc,
            format,
        } => run_verify(identity, trunc, format),
    }
}

fn run_eval(src: &str, algebra: &AlgebraArgs, format: Format) -> Outcome {
    let ast = parse_expr(src).map_err(|e| e.to_string())?;
    let value = eval_expr(&ast, &algebra.context()).map_err(|e| e.render(src))?;
    Ok((render_element(&value, format), EXIT_OK))
}

fn render_element(e: &RBAElement, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(e).expect("serializable") + "\n",
        Format::Text => format!("{e}\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["word", "coeff"]).expect("in-memory write");
            for (word, c) in e.terms() {
                let exps: Vec<String> = word.exponents().iter().map(|x| x.to_string()).collect();
                w.write_record([exps.join(" "), c.to_string()])
                    .expect("in-memory write");
            }
            csv_string(w)
        }
    }
}

fn csv_string(w: csv::Writer<Vec<u8>>) -> String {
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn require(value: Option<usize>, flag: &str, family: &str) -> Result<usize, String> {
    value.ok_or_else(|| format!("table {family} needs --{flag}"))
}

fn run_table(family: FamilyArg, a: &TableArgs, format: Format) -> Outcome {
    let name = family
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string();
    let t = match family {
        FamilyArg::Stirling => table::stirling(require(a.nmax, "nmax", &name)?),
        FamilyArg::Bell => table::bell_numbers(require(a.nmax, "nmax", &name)?),
        FamilyArg::GenStirling => table::gen_stirling(require(a.nmax, "nmax", &name)?),
        FamilyArg::GenBell => table::gen_bell_numbers(require(a.nmax, "nmax", &name)?),
        FamilyArg::Cover | FamilyArg::CoverDistinctMax => table::covers(
            matches!(family, FamilyArg::CoverDistinctMax),
            require(a.kmax, "kmax", &name)?,
            require(a.lmax, "lmax", &name)?,
        ),
        FamilyArg::COfType => {
            table::c_of_type(require(a.n, "n", &name)?, require(a.k, "k", &name)?)
        }
        FamilyArg::CTotal => table::c_total(
            require(a.nmax, "nmax", &name)?,
            require(a.kmax, "kmax", &name)?,
        ),
    }
    .map_err(|e| e.to_string())?;
    Ok((render_table(&t, format), EXIT_OK))
}

fn cell_text(c: &Cell) -> String {
    match c {
        Cell::Arg(n) => n.to_string(),
        Cell::Parts(ps) => ps
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(" "),
        Cell::Value(v) => v.to_string(),
    }
}

fn render_table(t: &Table, format: Format) -> String {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&t.header).expect("in-memory write");
            for row in &t.rows {
                w.write_record(row.iter().map(cell_text))
                    .expect("in-memory write");
            }
            csv_string(w)
        }
        Format::Json => {
            let rows: Vec<Value> = t
                .rows
                .iter()
                .map(|row| {
                    let mut m = Map::new();
                    for (h, c) in t.header.iter().zip(row) {
                        let v = match c {
                            Cell::Arg(n) => json!(n),
                            Cell::Parts(ps) => json!(ps),
                            Cell::Value(v) => json!(v.to_string()),
                        };
                        m.insert(h.clone(), v);
                    }
                    Value::Object(m)
                })
                .collect();
            serde_json::to_string(&rows).expect("serializable") + "\n"
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = std::iter::once(t.header.clone())
                .chain(t.rows.iter().map(|r| r.iter().map(cell_text).collect()))
                .collect();
            let widths: Vec<usize> = (0..t.header.len())
                .map(|i| cells.iter().map(|r| r[i].len()).max().unwrap_or(0))
                .collect();
            let mut s = String::new();
            for r in &cells {
                let line: Vec<String> = r
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect();
                s.push_str(line.join("  ").trim_end());
                s.push('\n');
            }
            s
        }
    }
}

/// Parses `ones`, `ones-from-1`, `delta:K` or `list:a0,a1,...`.
fn parse_spec(spec: &str, ctx: &AlgebraContext) -> Result<LambdaEGF, String> {
    let bad = || {
        format!("bad sequence spec {spec:?}; expected ones, ones-from-1, delta:K or list:a0,a1,...")
    };
    match spec {
        "ones" => Ok(LambdaEGF::ones(ctx)),
        "ones-from-1" => Ok(LambdaEGF::ones_from_1(ctx)),
        _ => {
            if let Some(k) = spec.strip_prefix("delta:") {
                let k: usize = k.trim().parse().map_err(|_| bad())?;
                Ok(LambdaEGF::delta(k, ctx))
            } else if let Some(list) = spec.strip_prefix("list:") {
                let coeffs = list
                    .split(',')
                    .map(parse_rational)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| e.to_string())?;
                Ok(LambdaEGF::new(coeffs, ctx))
            } else {
                Err(bad())
            }
        }
    }
}

fn run_egf(
    op: EgfOp,
    fs: &[String],
    g: Option<&str>,
    k: Option<usize>,
    algebra: &AlgebraArgs,
    format: Format,
) -> Outcome {
    let ctx = algebra.context();
    let fs = fs
        .iter()
        .map(|s| parse_spec(s, &ctx))
        .collect::<Result<Vec<_>, _>>()?;
    let g = g.map(|s| parse_spec(s, &ctx)).transpose()?;
    let single_f = || match fs.as_slice() {
        [f] => Ok(f),
        _ => Err("this operation takes exactly one --f".to_string()),
    };
    let need_g = || {
        g.as_ref()
            .ok_or_else(|| "this operation needs --g".to_string())
    };
    let result = match op {
        EgfOp::Product => egf_product(single_f()?, need_g()?),
        EgfOp::Kfold => {
            let mut all: Vec<LambdaEGF> = Vec::new();
            for _ in 0..k.unwrap_or(1) {
                all.extend(fs.iter().cloned());
            }
            all.extend(g.clone());
            egf_kfold(&all)
        }
        EgfOp::DividedPower => {
            let k = k.ok_or_else(|| "divided-power needs --k".to_string())?;
            divided_power(single_f()?, k)
        }
        EgfOp::Compose => compose(need_g()?, single_f()?),
    }
    .map_err(|e| e.to_string())?;
    let text = match format {
        Format::Json => {
            let coeffs: Vec<String> = result.coeffs().iter().map(|c| c.to_string()).collect();
            serde_json::to_string(&coeffs).expect("serializable") + "\n"
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["n", "coeff"]).expect("in-memory write");
            for (n, c) in result.coeffs().iter().enumerate() {
                w.write_record([n.to_string(), c.to_string()])
                    .expect("in-memory write");
            }
            csv_string(w)
        }
        Format::Text => format!("{}\n", result.to_element()),
    };
    Ok((text, EXIT_OK))
}

fn run_verify(identity: Identity, trunc: usize, format: Format) -> Outcome {
    let report = verify::run(identity, trunc).map_err(|e| e.to_string())?;
    let code = if report.equal { EXIT_OK } else { EXIT_UNEQUAL };
    let text = match format {
        Format::Json => serde_json::to_string(&report).expect("serializable") + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["identity", "trunc", "equal", "first_mismatch"])
                .expect("in-memory write");
            let mismatch = report
                .first_mismatch
                .map(|m| m.to_string())
                .unwrap_or_default();
            w.write_record([
                report.identity.clone(),
                trunc.to_string(),
                report.equal.to_string(),
                mismatch,
            ])
            .expect("in-memory write");
            csv_string(w)
        }
        Format::Text => match report.first_mismatch {
            None => format!("{identity} holds to order {trunc}\n"),
            Some(m) => format!("{identity} fails; first mismatch at {m}\n"),
        },
    };
    Ok((text, code))
}
