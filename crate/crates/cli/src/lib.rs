//! Command-line front end: argument parsing, dispatch and report rendering.
//!
//! [`run`] never prints; it returns the exit code together with the report
//! text so tests can compare output byte for byte.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use rspin_core::field::{default_prime, PRIME_ENV_VAR};
use rspin_core::moduli::{chi, deformation_dimension, enumerate_assignments, type_conventions};
use rspin_core::spin::power::tier_presentation;
use rspin_core::suites::{run_all, SuiteBounds};
use rspin_core::{
    power_map, product_map, tier_twists, AlgebraWindow, FieldConfig, NodeRing, OracleModel,
    PrimeField,
};

pub mod document;

pub use document::GraphDocument;

pub const REPORT_TAG: &str = "# rspin report v1";

#[derive(Debug, Parser)]
#[command(
    name = "rspin",
    version,
    about = "Local algebra of twisted r-spin curves"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Euler characteristic χ of the spin bundle of type m on a smooth curve.
    Chi {
        g: u32,
        n: u32,
        r: u32,
        #[arg(allow_negative_numbers = true)]
        m: Vec<i64>,
    },
    /// Admissible twist assignments on the dual graph in a JSON file.
    Strata { graph: PathBuf },
    /// Presentations and maps of the local model at a node.
    LocalModel {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        i: u32,
        /// Power maps between all tiers.
        #[arg(long, group = "view")]
        tiers: bool,
        /// Product maps between tiers.
        #[arg(long, group = "view")]
        products: bool,
        /// Graded algebra window of radius D.
        #[arg(long, group = "view", value_name = "D")]
        window: Option<u32>,
    },
    /// Runs every property suite up to the given level.
    VerifyAlgebra {
        #[arg(long)]
        max_r: u32,
    },
    /// Evaluates expressions in the monomial model K[t][z,w,S^±1]/(zw - t).
    Oracle {
        /// Polynomial in t, z, w, S; repeat to multiply.
        #[arg(long, required = true, allow_hyphen_values = true)]
        expr: Vec<String>,
        #[arg(long)]
        l: u32,
        /// Character of S.
        #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
        b: i64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Invalid(String),
    Suites(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Invalid(s)
    }
}

impl From<rspin_core::Error> for Failure {
    fn from(e: rspin_core::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

type Run = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let echo: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let mut out = String::new();
    writeln!(out, "{REPORT_TAG}").unwrap();
    writeln!(out, "command: rspin {}", echo.join(" ")).unwrap();
    let result = match cli.command {
        Command::Chi { g, n, r, m } => run_chi(&mut out, g, n, r, &m),
        Command::Strata { graph } => run_strata(&mut out, &graph),
        Command::LocalModel {
            r,
            l,
            i,
            tiers,
            products,
            window,
        } => run_local_model(&mut out, r, l, i, tiers, products, window),
        Command::VerifyAlgebra { max_r } => run_verify(&mut out, max_r),
        Command::Oracle { expr, l, b } => run_oracle(&mut out, &expr, l, b),
    };
    match result {
        Ok(()) => Outcome {
            code: 0,
            stdout: out,
            stderr: String::new(),
        },
        Err(Failure::Invalid(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Suites(msg)) => Outcome {
            code: 2,
            stdout: out,
            stderr: format!("error: {msg}\n"),
        },
    }
}

/// The override from the environment, if set.
fn env_prime() -> Result<Option<u64>, String> {
    match std::env::var(PRIME_ENV_VAR) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| format!("{PRIME_ENV_VAR}={v} is not an integer")),
        Err(_) => Ok(None),
    }
}

fn field_config(r: u32) -> Result<FieldConfig, Failure> {
    Ok(match env_prime()? {
        Some(p) => FieldConfig::new(p, r)?,
        None => FieldConfig::with_default_prime(r)?,
    })
}

fn divisors(r: u32) -> Vec<u32> {
    (1..=r).filter(|d| r % d == 0).collect()
}

fn run_chi(out: &mut String, g: u32, n: u32, r: u32, m: &[i64]) -> Run {
    let value = chi(g, n, r, m)?;
    writeln!(out, "chi = {value}").unwrap();
    Ok(())
}

fn run_strata(out: &mut String, path: &PathBuf) -> Run {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let doc = GraphDocument::from_json(&text)?;
    let graph = doc.graph()?;
    let r = doc.r;
    let p = match (doc.field_prime, env_prime()?) {
        (Some(p), _) | (None, Some(p)) => FieldConfig::new(p, r)?.p(),
        (None, None) => default_prime(r),
    };
    let m = doc.types_by_marking();
    let (g, n) = (graph.genus(), graph.n());
    if !graph.is_stable() {
        return Err(Failure::Invalid("graph is not stable".into()));
    }
    writeln!(out, "r = {r}").unwrap();
    writeln!(out, "field = F_{p}").unwrap();
    writeln!(out, "genus = {g}").unwrap();
    writeln!(out, "markings = {n}").unwrap();
    writeln!(out, "vertices = {}", graph.vertices().len()).unwrap();
    writeln!(out, "edges = {}", graph.edges().len()).unwrap();
    writeln!(out, "dimension = {}", deformation_dimension(g, n, 0)?).unwrap();
    writeln!(out, "chi = {}", chi(g, n, r, &m)?).unwrap();
    for (k, &mk) in m.iter().enumerate() {
        let (residue, shifted) = type_conventions(mk, r);
        writeln!(
            out,
            "type m{} = {mk}: residue {residue}, shifted {shifted}",
            k + 1
        )
        .unwrap();
    }
    let found = enumerate_assignments(&graph, r, &m)?;
    writeln!(out, "assignments = {}", found.len()).unwrap();
    for (n_a, a) in found.iter().enumerate() {
        writeln!(out, "assignment {}", n_a + 1).unwrap();
        for (k, leg) in a.leg_data(r)?.iter().enumerate() {
            writeln!(out, "  leg {}: {leg}", k + 1).unwrap();
        }
        for (e, ((x, y), (t1, t2))) in graph.edges().iter().zip(a.node_data(r)?).enumerate() {
            let (vx, vy) = (&graph.vertices()[*x].id, &graph.vertices()[*y].id);
            writeln!(out, "  edge {} ({vx}, {vy}): {t1} | {t2}", e + 1).unwrap();
        }
    }
    Ok(())
}

fn run_local_model(
    out: &mut String,
    r: u32,
    l: u32,
    i: u32,
    tiers: bool,
    products: bool,
    window: Option<u32>,
) -> Run {
    if l == 0 || r == 0 || r % l != 0 {
        return Err(Failure::Invalid(format!("l = {l} must divide r = {r}")));
    }
    if i >= l {
        return Err(Failure::Invalid(format!("i = {i} must lie in [0, {l})")));
    }
    let j = if i == 0 { 0 } else { l - i };
    let config = field_config(r)?;
    let ring = NodeRing::generic(l, config.field())?;
    writeln!(out, "ring = {ring}").unwrap();
    writeln!(out, "field = {}", config.field()).unwrap();
    writeln!(out, "top = E_{{{i},{j}}}").unwrap();
    let divs = divisors(r);
    for &d in divs.iter().rev() {
        let t = tier_twists(i, j, l, r, d)?;
        writeln!(out, "tier F_{d} = E_{{{},{}}}", t.i, t.j).unwrap();
    }
    if tiers {
        for &d in divs.iter().rev() {
            for &e in divs.iter().filter(|&&e| d % e == 0 && e < d).rev() {
                let c = power_map(ring, d, e, i, j, r)?;
                writeln!(out).unwrap();
                writeln!(out, "c_{{{d}->{e}}}: {c}", c = c.to_string().trim_end()).unwrap();
                writeln!(out, "  cokernel length at t=0: {}", c.cokernel_length()?).unwrap();
            }
        }
    }
    if products {
        for (n, &d) in divs.iter().enumerate() {
            for &e in &divs[n..] {
                let a = tier_presentation(ring, i, j, r, d)?;
                let b = tier_presentation(ring, i, j, r, e)?;
                let map = product_map(ring, (a.i(), a.j()), (b.i(), b.j()))?;
                writeln!(out).unwrap();
                writeln!(out, "F_{d} ⊗ F_{e}: {}", map.to_string().trim_end()).unwrap();
            }
        }
    }
    if let Some(radius) = window {
        let w = AlgebraWindow::new(ring, i, j, r, radius)?;
        writeln!(out).unwrap();
        writeln!(out, "window radius = {radius}").unwrap();
        for (d, pres) in w.tiers() {
            writeln!(out, "  G_{d} = {pres}").unwrap();
        }
        writeln!(
            out,
            "unit laws: {}",
            if w.unit_laws_hold() { "hold" } else { "fail" }
        )
        .unwrap();
        match w.associativity_failure()? {
            None => writeln!(out, "associativity: holds").unwrap(),
            Some((a, b, c)) => {
                writeln!(out, "associativity: fails at degrees ({a}, {b}, {c})").unwrap()
            }
        }
    }
    Ok(())
}

fn run_verify(out: &mut String, max_r: u32) -> Run {
    if max_r == 0 {
        return Err(Failure::Invalid("--max-r must be positive".into()));
    }
    let mut bounds = SuiteBounds::for_max_r(max_r);
    if let Some(p) = env_prime()? {
        PrimeField::new(p)?;
        bounds.prime = p;
    }
    writeln!(out, "max_r = {max_r}").unwrap();
    writeln!(out, "prime = {}", bounds.prime).unwrap();
    let reports = run_all(bounds);
    let mut failed = Vec::new();
    for report in &reports {
        writeln!(out, "{report}").unwrap();
        for f in &report.failures {
            writeln!(out, "  {f}").unwrap();
        }
        if !report.passed() {
            failed.push(report.name);
        }
    }
    let passed = reports.len() - failed.len();
    writeln!(out, "summary: {passed}/{} suites passed", reports.len()).unwrap();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Suites(format!(
            "failing suites: {}",
            failed.join(", ")
        )))
    }
}

fn run_oracle(out: &mut String, exprs: &[String], l: u32, b: i64) -> Run {
    let p = env_prime()?.unwrap_or_else(|| default_prime(l));
    let model = OracleModel::new(l, b, PrimeField::new(p)?)?;
    writeln!(out, "model: l = {l}, S ↦ {}, field = F_{p}", model.b()).unwrap();
    let mut product = model.monomial(1, 0, 0, 0, 0);
    for (k, e) in exprs.iter().enumerate() {
        let value = model.parse(e)?;
        writeln!(out, "expr {} = {value}", k + 1).unwrap();
        product = &product * &value;
    }
    if exprs.len() > 1 {
        writeln!(out, "product = {product}").unwrap();
    }
    writeln!(
        out,
        "invariant = {}",
        if product.is_invariant() { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(out, "invariant part = {}", product.invariant_part()).unwrap();
    Ok(())
}
