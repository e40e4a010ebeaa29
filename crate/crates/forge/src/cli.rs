//! Argument parsing and dispatch.

use std::ffi::OsString;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use resultant_core::cascade::build_cascade;
use resultant_core::geometry::{chow_degree, diagonal_initial_ideal, dim_and_degree};
use resultant_core::groebner::{
    buchberger_with, chart_equal_with, check_s_pairs, eliminate_x_with, ideal_equal_with, reduces_to_zero,
    IdealPresentation, Limits,
};
use resultant_core::minors::{enumerate_generators, generators_for_basis, generators_of_depth, GeneratorRecord};
use resultant_core::ordering::{build_diagonal_weights, diagonal_order, verify_diagonal_property};
use resultant_core::polyring::{column_major_ranking, rational_to_string, row_major_ranking, Polynomial, TermOrder};
use resultant_core::verify::{membership_scan, planted_vanishing, sample_generic, sample_planted_with_root};
use resultant_core::walks::{enumerate_reduced, enumerate_walks, walk_leading_monomial, MinorWalk};
use serde_json::{json, Value};

use crate::export::{export, ExportOptions, Format};
use crate::formats::{ideal_from_json, parse_limits, polynomial_to_json, tuple_from_json, tuple_to_json, TupleJson};

pub const LIMITS_ENV: &str = "RESULTANT_FORGE_LIMITS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "resultant-forge",
    version,
    about = "Determinantal generators of resultant ideals and their certification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the cascade matrix M_k.
    Cascade {
        #[command(flatten)]
        shape: Shape,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: MatrixFormat,
    },
    /// Export the maximal-minor generators.
    Gens {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        select: Select,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Name variables a_i, b_i, c_i by coefficient column (d = 2 only).
        #[arg(long)]
        alias: bool,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List minor walks as [u, v] pairs or as leading monomials.
    Walks {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        select: Select,
        #[arg(long)]
        monomials: bool,
    },
    /// Leading terms of the generators, or of a Gröbner basis with --basis.
    Leadterms {
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        select: Select,
        #[command(flatten)]
        order: OrderArgs,
        #[arg(long)]
        basis: bool,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Components, dimension and degree of the initial ideal of G.
    Components {
        #[command(flatten)]
        shape: Shape,
    },
    /// Degree of the mixed-degree resultant variety via the Chow ring.
    Degree {
        #[arg(long, value_delimiter = ',', required = true)]
        degrees: Vec<u32>,
    },
    /// Run one certification check and print a JSON report.
    Verify {
        #[arg(value_enum)]
        check: Check,
        #[command(flatten)]
        shape: Shape,
        #[command(flatten)]
        limits: LimitArgs,
    },
    /// Evaluate every generator at a coefficient tuple and consult the root oracle.
    Eval {
        #[arg(long)]
        coeffs: PathBuf,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Sample a coefficient tuple.
    Sample {
        #[command(flatten)]
        shape: Shape,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Plant a common rational root.
        #[arg(long)]
        planted: bool,
    },
    /// Convert an ideal presentation (JSON) to another format.
    Export {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        alias: bool,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Limits for rechecking a stored basis.
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct Shape {
    /// Degree of each polynomial.
    #[arg(long)]
    d: usize,
    /// Number of polynomials.
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug, Clone, Copy)]
struct Select {
    /// Only the maximal minors of M_k.
    #[arg(long, conflicts_with = "reduced")]
    k: Option<usize>,
    /// Only the minors indexed by reduced walks.
    #[arg(long)]
    reduced: bool,
}

#[derive(Args, Debug, Clone, Copy)]
struct OrderArgs {
    #[arg(long, value_enum, default_value = "degrevlex")]
    order: OrderName,
    /// Variable ranking for degrevlex and lex.
    #[arg(long, value_enum, default_value = "column")]
    ranking: Ranking,
}

#[derive(Args, Debug, Clone, Copy)]
struct LimitArgs {
    #[arg(long)]
    max_pairs: Option<u64>,
    /// Wall-clock budget in seconds.
    #[arg(long)]
    timeout: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum MatrixFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OrderName {
    Degrevlex,
    Lex,
    Diagonal,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Ranking {
    /// a_{1,0} > a_{2,0} > … > a_{n,0} > a_{1,1} > …
    Column,
    /// a_{1,0} > a_{1,1} > … > a_{1,d} > a_{2,0} > …
    Row,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    /// S-pair certification of the reduced-walk minors under the diagonal order.
    Groebner,
    /// The maximal minors generate the elimination ideal.
    Elimination,
    /// Top-depth minors and all minors agree on the chart a_{1,0} = 1.
    Chart,
    /// Every minor leads with its diagonal under the diagonal order.
    Diagonal,
    /// A planted common root annihilates every generator.
    Planted,
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Exhausted(String),
    Other(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<resultant_core::Error>() {
            Some(resultant_core::Error::ResourceExhausted(why)) => Failure::Exhausted(why.clone()),
            Some(resultant_core::Error::OutOfRange(why)) => Failure::Usage(why.clone()),
            _ => Failure::Other(e),
        }
    }
}

impl From<resultant_core::Error> for Failure {
    fn from(e: resultant_core::Error) -> Self {
        Failure::from(anyhow::Error::new(e))
    }
}

/// Successful dispatch: what to print and whether the check held.
struct Report {
    text: String,
    code: i32,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: EXIT_OK }
    }

    fn json(v: &Value) -> Self {
        Self::ok(pretty(v))
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize") + "\n"
}

/// Parses `args` (program name first) and runs the subcommand, reading
/// limit overrides from the environment.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env(args, std::env::var(LIMITS_ENV).ok())
}

/// As [`run`], with the limits variable passed explicitly.
pub fn run_with_env<I, T>(args: I, limits_env: Option<String>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(cli.command, limits_env.as_deref()) {
        Ok(r) => Outcome { code: r.code, stdout: r.text, stderr: String::new() },
        Err(Failure::Usage(msg)) => {
            Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {msg}\n") }
        }
        Err(Failure::Exhausted(msg)) => {
            Outcome { code: EXIT_EXHAUSTED, stdout: String::new(), stderr: format!("resource exhausted: {msg}\n") }
        }
        Err(Failure::Other(e)) => {
            Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: format!("error: {e:#}\n") }
        }
    }
}

fn limits(args: &LimitArgs, env: Option<&str>) -> Result<Limits, Failure> {
    let mut l = Limits::default();
    if let Some(spec) = env {
        l = parse_limits(spec, l).with_context(|| format!("invalid {LIMITS_ENV}"))?;
    }
    if let Some(p) = args.max_pairs {
        l.max_pairs = p;
    }
    Ok(l)
}

fn deadline(args: &LimitArgs) -> impl Fn() -> bool {
    let end = args.timeout.map(|s| Instant::now() + Duration::from_secs(s));
    move || end.is_some_and(|e| Instant::now() >= e)
}

fn order_for(args: &OrderArgs, d: usize, n: usize) -> Result<TermOrder, Failure> {
    let ranking = match args.ranking {
        Ranking::Column => column_major_ranking(d, n),
        Ranking::Row => row_major_ranking(d, n),
    };
    Ok(match args.order {
        OrderName::Degrevlex => TermOrder::DegRevLex(ranking),
        OrderName::Lex => TermOrder::Lex(ranking),
        OrderName::Diagonal => diagonal_order(&build_diagonal_weights(d, n)?),
    })
}

fn selected(shape: Shape, select: Select) -> Result<Vec<GeneratorRecord>, Failure> {
    let Shape { d, n } = shape;
    Ok(match (select.k, select.reduced) {
        (Some(k), _) => generators_of_depth(d, n, k)?,
        (None, true) => generators_for_basis(d, n)?,
        (None, false) => enumerate_generators(d, n)?,
    })
}

fn write_or_return(text: String, output: Option<PathBuf>) -> Result<Report, Failure> {
    match output {
        Some(path) => {
            std::fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?;
            Ok(Report::ok(String::new()))
        }
        None => Ok(Report::ok(text)),
    }
}

fn walk_json(w: &MinorWalk) -> Value {
    Value::Array(w.steps().iter().map(|&(u, v)| json!([u, v])).collect())
}

fn dispatch(command: Command, env: Option<&str>) -> Result<Report, Failure> {
    match command {
        Command::Cascade { shape, k, format } => {
            let m = build_cascade(shape.d, shape.n, k)?;
            Ok(match format {
                MatrixFormat::Text => Report::ok(m.to_string()),
                MatrixFormat::Json => {
                    let rows: Vec<Value> = (0..m.num_rows())
                        .map(|r| {
                            let cells = (0..m.num_cols())
                                .map(|c| m.variable_at(r, c).map_or_else(|| json!("0"), |v| json!(v.to_string())));
                            Value::Array(cells.collect())
                        })
                        .collect();
                    Report::json(&json!({"d": shape.d, "n": shape.n, "k": k, "rows": rows}))
                }
            })
        }
        Command::Gens { shape, select, format, alias, order, output } => {
            let gens = selected(shape, select)?;
            let order = order_for(&order, shape.d, shape.n)?;
            let ideal = IdealPresentation::new(gens.into_iter().map(|g| g.poly).collect(), order)?;
            let whole = select.k.is_none() && !select.reduced;
            let opts = ExportOptions { alias, cascade: (whole && format == Format::M2).then_some((shape.d, shape.n)) };
            let text = export(&ideal, format, &opts).map_err(|e| Failure::Usage(format!("{e:#}")))?;
            write_or_return(text, output)
        }
        Command::Walks { shape, select, monomials } => {
            let Shape { d, n } = shape;
            let walks = match (select.k, select.reduced) {
                (Some(k), _) => enumerate_walks(d, n, k)?,
                (None, true) => enumerate_reduced(d, n)?,
                (None, false) => {
                    let mut all = Vec::new();
                    for k in 1..=d {
                        all.extend(enumerate_walks(d, n, k)?);
                    }
                    all
                }
            };
            let items: Vec<Value> = walks
                .iter()
                .map(|w| if monomials { json!(walk_leading_monomial(w).to_string()) } else { walk_json(w) })
                .collect();
            // one walk per line keeps long listings readable
            let lines: Vec<String> = items.iter().map(Value::to_string).collect();
            let body = if lines.is_empty() { String::new() } else { format!("\n  {}\n", lines.join(",\n  ")) };
            Ok(Report::ok(format!("[{body}]\n")))
        }
        Command::Leadterms { shape, select, order, basis, limits: lim } => {
            let gens: Vec<Polynomial> = selected(shape, select)?.into_iter().map(|g| g.poly).collect();
            let term_order = order_for(&order, shape.d, shape.n)?;
            let polys = if basis {
                let l = limits(&lim, env)?;
                let (ideal, _) = buchberger_with(gens, term_order.clone(), &l, &deadline(&lim))?;
                ideal.certified_basis.unwrap_or_default()
            } else {
                gens
            };
            let compiled = term_order.compile()?;
            let leads = polys
                .iter()
                .map(|p| Ok(json!(p.leading_term_compiled(&compiled)?.0.to_string())))
                .collect::<Result<Vec<_>, resultant_core::Error>>()?;
            Ok(Report::json(&json!({
                "order": format!("{:?}", order.order).to_lowercase(),
                "basis": basis,
                "leading_terms": leads,
            })))
        }
        Command::Components { shape } => {
            let ideal = diagonal_initial_ideal(shape.d, shape.n)?;
            let dd = dim_and_degree(&ideal, shape.n * (shape.d + 1));
            let comps: Vec<Value> =
                dd.components.iter().map(|c| Value::Array(c.iter().map(|v| json!(v.to_string())).collect())).collect();
            Ok(Report::json(&json!({
                "components": comps,
                "dim": dd.dim,
                "degree": dd.degree,
                "equidimensional": dd.equidimensional,
            })))
        }
        Command::Degree { degrees } => {
            let big_d = chow_degree(&degrees)?;
            Ok(Report::json(&json!({"degrees": degrees, "D": big_d as i64})))
        }
        Command::Verify { check, shape, limits: lim } => verify(check, shape, &limits(&lim, env)?, &deadline(&lim)),
        Command::Eval { coeffs, d, n } => {
            let text = std::fs::read_to_string(&coeffs).with_context(|| format!("reading {}", coeffs.display()))?;
            let tj: TupleJson = serde_json::from_str(&text).with_context(|| format!("parsing {}", coeffs.display()))?;
            if d.is_some_and(|d| d != tj.d) || n.is_some_and(|n| n != tj.n) {
                return Err(Failure::Usage(format!("file holds a tuple with d = {}, n = {}", tj.d, tj.n)));
            }
            let c = tuple_from_json(&tj)?;
            let rep = membership_scan(&c)?;
            let gens: Vec<Value> = rep
                .values
                .iter()
                .map(|g| {
                    let rows: Vec<Value> = g.selection.rows().iter().map(|r| json!([r.block, r.poly])).collect();
                    json!({"k": g.k, "rows": rows, "value": rational_to_string(&g.value), "vanishes": num_traits::Zero::is_zero(&g.value)})
                })
                .collect();
            let out = json!({
                "root": {
                    "has_affine_common_root": rep.root.has_affine_common_root,
                    "all_leading_zero": rep.root.all_leading_zero,
                    "gcd_degree": rep.root.gcd_degree,
                    "gcd": rep.root.gcd.coeffs().iter().rev().map(rational_to_string).collect::<Vec<_>>(),
                },
                "generators": gens,
                "all_vanish": rep.all_vanish,
                "top_vanish": rep.top_vanish,
                "consistent": rep.consistent,
            });
            Ok(Report { text: pretty(&out), code: if rep.consistent { EXIT_OK } else { EXIT_CHECK_FAILED } })
        }
        Command::Sample { shape, seed, planted } => {
            let v = if planted {
                let (c, r) = sample_planted_with_root(shape.d, shape.n, seed)?;
                let mut v = serde_json::to_value(tuple_to_json(&c)).context("serializing tuple")?;
                v["root"] = json!(rational_to_string(&r));
                v
            } else {
                serde_json::to_value(tuple_to_json(&sample_generic(shape.d, shape.n, seed)?))
                    .context("serializing tuple")?
            };
            Ok(Report::json(&v))
        }
        Command::Export { input, format, alias, output, limits: lim } => {
            let text = std::fs::read_to_string(&input).with_context(|| format!("reading {}", input.display()))?;
            let j = serde_json::from_str(&text).with_context(|| format!("parsing {}", input.display()))?;
            let ideal = ideal_from_json(&j, &limits(&lim, env)?)?;
            let out = export(&ideal, format, &ExportOptions { alias, cascade: None })
                .map_err(|e| Failure::Usage(format!("{e:#}")))?;
            write_or_return(out, output)
        }
    }
}

fn verify_report(claim: &str, shape: Shape, limits: &Limits, passed: bool, witnesses: Value) -> Report {
    let v = json!({
        "claim": claim,
        "parameters": {"d": shape.d, "n": shape.n, "max_pairs": limits.max_pairs, "max_basis": limits.max_basis, "max_degree": limits.max_degree},
        "status": if passed { "pass" } else { "fail" },
        "witnesses": witnesses,
    });
    Report { text: pretty(&v), code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED } }
}

fn verify(check: Check, shape: Shape, limits: &Limits, interrupt: &dyn Fn() -> bool) -> Result<Report, Failure> {
    let Shape { d, n } = shape;
    match check {
        Check::Groebner => {
            let order = diagonal_order(&build_diagonal_weights(d, n)?);
            let g: Vec<Polynomial> = generators_for_basis(d, n)?.into_iter().map(|r| r.poly).collect();
            let rep = check_s_pairs(&g, &order, false)?;
            let residues: Vec<Value> = rep
                .failures
                .iter()
                .map(|(i, j, r)| json!({"pair": [i, j], "remainder": polynomial_to_json(r)}))
                .collect();
            Ok(verify_report(
                "reduced-walk-minors-form-groebner-basis",
                shape,
                limits,
                rep.is_groebner(),
                json!({"basis_size": rep.basis_size, "pairs_checked": rep.pairs_checked, "nonzero_remainders": residues}),
            ))
        }
        Check::Elimination => {
            let elim = eliminate_x_with(d, n, limits, interrupt)?;
            let basis = elim.basis().unwrap_or_default().to_vec();
            let order = TermOrder::DegRevLex(row_major_ranking(d, n));
            let gens: Vec<Polynomial> = enumerate_generators(d, n)?.into_iter().map(|g| g.poly).collect();
            let mut outside = Vec::new();
            for (idx, g) in gens.iter().enumerate() {
                if !reduces_to_zero(g, &basis, &order)? {
                    outside.push(idx);
                }
            }
            let minors = IdealPresentation::new(gens.clone(), order)?;
            let equal = outside.is_empty() && ideal_equal_with(&minors, &elim, limits, interrupt)?;
            Ok(verify_report(
                "maximal-minors-generate-resultant-ideal",
                shape,
                limits,
                equal,
                json!({"minors": gens.len(), "elimination_basis_size": basis.len(), "minors_outside_elimination_ideal": outside}),
            ))
        }
        Check::Chart => {
            let rep = chart_equal_with(d, n, limits, interrupt)?;
            Ok(verify_report(
                "top-minors-agree-with-all-minors-on-chart",
                shape,
                limits,
                rep.equal,
                json!({"chart": "a_1_0 = 1", "top_basis_size": rep.top_basis_size, "all_basis_size": rep.all_basis_size}),
            ))
        }
        Check::Diagonal => {
            let rep = verify_diagonal_property(d, n)?;
            let violations: Vec<Value> = rep
                .violations
                .iter()
                .map(|v| json!({"k": v.k, "walk": walk_json(&v.walk), "expected": v.expected.to_string(), "found": v.found.to_string()}))
                .collect();
            Ok(verify_report(
                "minors-lead-with-diagonal",
                shape,
                limits,
                rep.passed(),
                json!({"minors_checked": rep.checked, "violations": violations, "weak_dominance": rep.weak_dominance}),
            ))
        }
        Check::Planted => {
            let rep = planted_vanishing(d, n)?;
            let survivors: Vec<Value> = rep
                .nonvanishing
                .iter()
                .map(|(g, image)| json!({"k": g.k, "walk": walk_json(&g.walk), "image": polynomial_to_json(image)}))
                .collect();
            Ok(verify_report(
                "common-root-annihilates-generators",
                shape,
                limits,
                rep.passed(),
                json!({"generators_checked": rep.generators_checked, "nonvanishing": survivors}),
            ))
        }
    }
}
