//! Command-line front end. The binary only forwards `std::env::args` here so
//! the whole surface can be driven in-process.
//!
//! Exit codes: 0 success (for `verify`: every order agreed), 1 a verification
//! mismatch, 2 usage, parse or precision errors.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::families::{iterate_second_production, orthogonal_polys, Family};
use crate::gfexpr::evaluate_str;
use crate::oeis::{load_stripped, resolve_dump_path, DUMP_ENV_VAR};
use crate::production::{nth_production_matrix, production_matrix, verify_orders};
use crate::riordan::RiordanElement;
use crate::series::{format_coefficient_exact, Coefficient, TruncatedSeries};

pub const DEFAULT_SIZE: usize = 8;

/// Extra series order added on top of `size + n` when building elements.
pub const HEADROOM: usize = 2;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "riordan", about = "Riordan arrays and their production matrices, computed exactly")]
pub struct Cli {
    /// Emit JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the matrix of an element.
    Show {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        size: usize,
    },
    /// Print the n-th production matrix.
    Prod {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        size: usize,
    },
    /// Compare produced matrices with their closed forms for a range of orders.
    Verify {
        #[command(flatten)]
        element: ElementArgs,
        /// A single order or an inclusive range `a..b`.
        #[arg(long, default_value = "2", value_parser = parse_order_range)]
        n: OrderRange,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        size: usize,
    },
    /// Look up a triangle (read by rows) or a value list in an OEIS stripped dump.
    Identify {
        #[command(flatten)]
        element: ElementArgs,
        /// Comma-separated integers to look up instead of a triangle.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        values: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        size: usize,
        /// Path to the stripped dump; falls back to $OEIS_STRIPPED_PATH.
        #[arg(long)]
        oeis: Option<PathBuf>,
    },
    /// Print a named family: its matrix, production matrix and extras.
    Family {
        /// pascal, binomial:r, catalan, moment:r or a085478
        name: String,
        #[arg(long, default_value_t = DEFAULT_SIZE)]
        size: usize,
        /// Also apply the second-production process this many times.
        #[arg(long)]
        iterate: Option<usize>,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct ElementArgs {
    /// Generating function g(x), e.g. "1/(1-x)".
    #[arg(long = "g", requires = "f_expr", conflicts_with = "family")]
    pub g_expr: Option<String>,
    /// Generating function f(x), e.g. "x/(1-x)^2".
    #[arg(long = "f", requires = "g_expr")]
    pub f_expr: Option<String>,
    /// A named family instead of expressions.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderRange {
    pub start: usize,
    pub end: usize,
}

impl OrderRange {
    pub fn orders(&self) -> Vec<usize> {
        (self.start..=self.end).collect()
    }
}

fn parse_order_range(text: &str) -> Result<OrderRange, String> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("'{s}' is not a non-negative integer"));
    let (start, end) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(text)?;
            (n, n)
        }
    };
    if start == 0 || start > end {
        return Err(format!("invalid order range '{text}': need 1 <= a <= b"));
    }
    Ok(OrderRange { start, end })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(stderr: String) -> Self {
        Self { code: EXIT_USAGE, stdout: String::new(), stderr }
    }
}

/// Parses arguments (including the program name) and runs one command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::usage(text),
            };
        }
    };
    match execute(&cli) {
        Ok(outcome) => outcome,
        Err(message) => Outcome::usage(format!("error: {message}\n")),
    }
}

fn element_from_args(args: &ElementArgs, order: usize) -> Result<RiordanElement, String> {
    match (&args.family, &args.g_expr, &args.f_expr) {
        (Some(name), _, _) => Ok(name.parse::<Family>().map_err(|e| e.to_string())?.element(order)),
        (None, Some(g), Some(f)) => {
            let g_series = evaluate_str(g, order).map_err(|e| format!("in --g: {e}"))?;
            let f_series = evaluate_str(f, order).map_err(|e| format!("in --f: {e}"))?;
            RiordanElement::new(g_series, f_series).map_err(|e| e.to_string())
        }
        _ => Err("give either --family <name> or both --g <expr> and --f <expr>".to_string()),
    }
}

fn series_json(s: &TruncatedSeries) -> Value {
    json!(s.coeffs().iter().map(format_coefficient_exact).collect::<Vec<_>>())
}

fn element_json(e: &RiordanElement) -> Value {
    json!({ "g": series_json(e.g()), "f": series_json(e.f()) })
}

fn render(json_mode: bool, value: Value, text: String) -> String {
    if json_mode {
        let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
        s.push('\n');
        s
    } else {
        text
    }
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    let json_mode = cli.json;
    match &cli.command {
        Command::Show { element, size } => {
            let e = element_from_args(element, size + 1 + HEADROOM)?;
            let m = e.matrix(*size).map_err(|e| e.to_string())?;
            let value = json!({ "command": "show", "size": size, "element": element_json(&e), "matrix": m.to_json() });
            Ok(Outcome::ok(render(json_mode, value, m.to_string())))
        }
        Command::Prod { element, n, size } => {
            let e = element_from_args(element, size + n + HEADROOM)?;
            let p = nth_production_matrix(&e, *n, *size).map_err(|err| {
                format!("{err} (the element is built at order size + n + {HEADROOM}; try a smaller --size)")
            })?;
            let value =
                json!({ "command": "prod", "n": n, "size": size, "element": element_json(&e), "matrix": p.to_json() });
            Ok(Outcome::ok(render(json_mode, value, p.to_string())))
        }
        Command::Verify { element, n, size } => verify(json_mode, element, n, *size),
        Command::Identify { element, values, size, oeis } => {
            identify(json_mode, element, values.as_deref(), *size, oeis.as_deref())
        }
        Command::Family { name, size, iterate } => family(json_mode, name, *size, *iterate),
    }
}

fn verify(json_mode: bool, element: &ElementArgs, range: &OrderRange, size: usize) -> Result<Outcome, String> {
    let e = element_from_args(element, size + range.end + HEADROOM)?;
    let mut reports = Vec::new();
    for result in verify_orders(&e, &range.orders(), size) {
        reports.push(result.map_err(|err| err.to_string())?);
    }
    let all_equal = reports.iter().all(|r| r.equal);
    let mut text = String::new();
    for r in &reports {
        match &r.first_mismatch {
            None => writeln!(text, "n={} size={}: equal", r.n, r.size),
            Some(m) => writeln!(
                text,
                "n={} size={}: MISMATCH at ({}, {}): produced {}, closed form {}",
                r.n, r.size, m.row, m.col, m.produced, m.closed_form
            ),
        }
        .expect("write to string");
    }
    let value = json!({ "command": "verify", "all_equal": all_equal, "reports": reports });
    Ok(Outcome {
        code: if all_equal { EXIT_OK } else { EXIT_MISMATCH },
        stdout: render(json_mode, value, text),
        stderr: String::new(),
    })
}

fn identify(
    json_mode: bool,
    element: &ElementArgs,
    values: Option<&[String]>,
    size: usize,
    oeis: Option<&std::path::Path>,
) -> Result<Outcome, String> {
    let query: Vec<BigInt> = match values {
        Some(vs) => vs
            .iter()
            .map(|v| v.trim().parse::<BigInt>().map_err(|_| format!("'{v}' is not an integer")))
            .collect::<Result<_, _>>()?,
        None => {
            let e = element_from_args(element, size + 1 + HEADROOM)?;
            let m = e.matrix(size).map_err(|e| e.to_string())?;
            crate::oeis::flatten_triangle(&m).map_err(|e| e.to_string())?
        }
    };
    if query.len() < crate::oeis::MIN_QUERY_LEN {
        return Err(crate::oeis::OeisError::TooFewValues(query.len()).to_string());
    }
    let path = resolve_dump_path(oeis).map_err(|e| e.to_string())?;
    let index = load_stripped(&path).map_err(|e| format!("{e} (set --oeis or {DUMP_ENV_VAR})"))?;
    let matches = index.identify_sequence(&query).map_err(|e| e.to_string())?;
    let mut text = String::new();
    if matches.is_empty() {
        text.push_str("no match\n");
    }
    for m in &matches {
        writeln!(text, "{} (offset {})", m.a_number, m.offset).expect("write to string");
    }
    let value = json!({
        "command": "identify",
        "query": query.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "matches": matches,
    });
    Ok(Outcome::ok(render(json_mode, value, text)))
}

fn family(json_mode: bool, name: &str, size: usize, iterate: Option<usize>) -> Result<Outcome, String> {
    let fam: Family = name.parse().map_err(|e: crate::families::FamilyError| e.to_string())?;
    let steps = iterate.unwrap_or(0);
    let e = fam.element(size + 1 + steps + HEADROOM);
    let m = e.matrix(size).map_err(|e| e.to_string())?;
    let p = production_matrix(&e, size).map_err(|e| e.to_string())?;
    let mut text = format!("{fam}\n\nmatrix:\n{m}\nproduction matrix:\n{p}");
    let mut value = json!({
        "command": "family",
        "family": fam.to_string(),
        "size": size,
        "element": element_json(&e),
        "matrix": m.to_json(),
        "production_matrix": p.to_json(),
    });
    if let Family::Moment(r) = &fam {
        let rows = orthogonal_polys(r, size);
        text.push_str("\npolynomial coefficients (ascending powers):\n");
        let cells: Vec<Vec<Coefficient>> = rows.iter().map(|row| row.coeffs().to_vec()).collect();
        let coeff_matrix = crate::matrix::Matrix::from_rows(&cells, size);
        write!(text, "{coeff_matrix}").expect("write to string");
        for (n, row) in rows.iter().enumerate() {
            writeln!(text, "P_{n}(x) = {row}").expect("write to string");
        }
        value["polynomials"] = json!(rows
            .iter()
            .map(|row| row.coeffs().iter().map(format_coefficient_exact).collect::<Vec<_>>())
            .collect::<Vec<_>>());
    }
    if steps > 0 {
        let chain = iterate_second_production(&e, steps).map_err(|e| e.to_string())?;
        let mut items = Vec::new();
        text.push_str("\niterated second production (each element shown through its inverse):\n");
        for (j, step) in chain.iter().enumerate() {
            let inv = step.inverse().map_err(|e| e.to_string())?;
            writeln!(text, "step {j}: ({}, {})^-1", inv.g(), inv.f()).expect("write to string");
            let sm = step.matrix(size).map_err(|e| e.to_string())?;
            items.push(json!({ "step": j, "element": element_json(step), "inverse": element_json(&inv), "matrix": sm.to_json() }));
        }
        value["iterates"] = json!(items);
    }
    Ok(Outcome::ok(render(json_mode, value, text)))
}
