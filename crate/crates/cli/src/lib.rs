//! Argument parsing, dispatch and rendering for the `fatpoints` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::json;

use fatpoints::{
    acm_certificate, default_window, first_difference, hf, hf_ideal, hf_omega, hf_omega_acm_thickening,
    hf_omega_oracle, is_aci, is_cbp, is_ci, kaehler_different_hf, minimal_generators, minimal_separators, read_scheme,
    sequence_formula, tuples, BiDegree, Error, FatPointScheme, GeneratedIdeal, HilbertMatrix, SchemeInput,
};

/// Window used for generator files, which carry no stabilization data.
pub const GENERATOR_WINDOW: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    /// Hilbert function of the scheme.
    Hf,
    /// Hilbert function of the module of Kähler differentials.
    Omega,
    /// Hilbert function of the Kähler different (ACM schemes).
    Theta,
    /// Row and column tuples.
    Tuples,
    /// Whether the scheme is ACM, with a regular sequence.
    Acm,
    /// Cayley-Bacharach property (reduced schemes).
    Cbp,
    /// Complete intersection test (reduced schemes).
    Ci,
    /// Almost complete intersection test (reduced schemes).
    Aci,
    /// Minimal separators of a point.
    Separators,
    /// First difference of a Hilbert function.
    Diff,
    /// Minimal generators of the vanishing ideal.
    Generators,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Pretty,
    Csv,
    Json,
}

/// Function whose first difference `diff` prints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Hf,
    Omega,
    Theta,
}

/// One invocation of the binary.
#[derive(Clone, Debug, PartialEq, Eq, Parser)]
#[command(name = "fatpoints", version, about = "Bigraded Hilbert functions of fat point schemes in P1xP1")]
pub struct Command {
    #[arg(value_enum)]
    pub verb: Verb,
    /// JSON file with a point list or ideal generators.
    #[arg(long)]
    pub scheme: PathBuf,
    /// Window rows; defaults to the stabilization window.
    #[arg(long)]
    pub rows: Option<usize>,
    /// Window columns; defaults to the stabilization window.
    #[arg(long)]
    pub cols: Option<usize>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: Format,
    /// Also compute Ω from its presentation and compare.
    #[arg(long)]
    pub oracle: bool,
    /// Use the closed formula for an ACM thickening.
    #[arg(long)]
    pub closed: bool,
    /// Point index for `separators`; all points when omitted.
    #[arg(long)]
    pub point: Option<usize>,
    /// Function differenced by `diff`.
    #[arg(long, value_enum, default_value = "omega")]
    pub of: Target,
}

/// Parses an argument list that includes the program name.
pub fn parse_args<I, T>(argv: I) -> Result<Command, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    Command::try_parse_from(argv)
}

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => 3,
        Error::MalformedScheme(_) | Error::Parse(_) => 4,
        _ => 1,
    }
}

/// The JSON shape of a rendered window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<i64>>,
    pub eventual: Option<i64>,
}

impl From<&HilbertMatrix> for MatrixJson {
    fn from(h: &HilbertMatrix) -> Self {
        MatrixJson { rows: h.rows(), cols: h.cols(), data: h.data().clone(), eventual: h.eventual }
    }
}

fn pretty(h: &HilbertMatrix) -> String {
    let width = h.data().iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(1);
    let mut out = String::new();
    for row in h.data() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    match (h.row_bound, h.col_bound, h.eventual) {
        (Some(r), Some(c), Some(e)) => writeln!(out, "# constant {e} for i >= {r}, j >= {c}").unwrap(),
        _ => writeln!(out, "# stabilization not known").unwrap(),
    }
    out
}

/// Renders a window: aligned columns with an annotation line, plain CSV
/// rows, or a JSON object.
pub fn render_matrix(h: &HilbertMatrix, format: Format) -> String {
    match format {
        Format::Pretty => pretty(h),
        Format::Csv => {
            h.data().iter().map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(",") + "\n").collect()
        }
        Format::Json => serde_json::to_string(&MatrixJson::from(h)).expect("plain data serializes") + "\n",
    }
}

/// Reads back the JSON rendering of a window.
pub fn parse_matrix_json(text: &str) -> Result<HilbertMatrix, serde_json::Error> {
    let m: MatrixJson = serde_json::from_str(text)?;
    let mut h = HilbertMatrix::new(m.data);
    h.eventual = m.eventual;
    Ok(h)
}

fn window(cmd: &Command, y: Option<&FatPointScheme>) -> (usize, usize) {
    let (r, c) = y.map_or((GENERATOR_WINDOW, GENERATOR_WINDOW), default_window);
    (cmd.rows.unwrap_or(r), cmd.cols.unwrap_or(c))
}

fn degree_json(d: BiDegree) -> serde_json::Value {
    json!([d.i, d.j])
}

fn render_comparison(formula: &HilbertMatrix, oracle: &HilbertMatrix, format: Format) -> String {
    let verdict = if formula.data() == oracle.data() { "EQUAL" } else { "DIFFER" };
    match format {
        Format::Json => {
            json!({
                "formula": MatrixJson::from(formula),
                "oracle": MatrixJson::from(oracle),
                "verdict": verdict,
            })
            .to_string()
                + "\n"
        }
        _ => {
            let (a, b) = (render_matrix(formula, format), render_matrix(oracle, format));
            format!("formula\n{a}\noracle\n{b}\n{verdict}\n")
        }
    }
}

fn render_flag(name: &str, value: bool, format: Format) -> String {
    match format {
        Format::Json => json!({ name: value }).to_string() + "\n",
        Format::Csv => format!("{value}\n"),
        Format::Pretty => format!("{name}: {}\n", if value { "yes" } else { "no" }),
    }
}

fn render_polys(items: &[(String, BiDegree)], key: &str, format: Format) -> String {
    match format {
        Format::Json => {
            let list: Vec<_> = items.iter().map(|(p, d)| json!({"degree": degree_json(*d), "poly": p})).collect();
            json!({ key: list }).to_string() + "\n"
        }
        Format::Csv => items.iter().map(|(p, d)| format!("{},{},{p}\n", d.i, d.j)).collect(),
        Format::Pretty => items.iter().map(|(p, d)| format!("{d}  {p}\n")).collect(),
    }
}

fn omega_for_generators(cmd: &Command, ideal: &GeneratedIdeal) -> String {
    let (rows, cols) = window(cmd, None);
    let formula = sequence_formula(&hf_ideal(ideal, rows, cols), &hf_ideal(&ideal.square(), rows, cols));
    if cmd.oracle {
        render_comparison(&formula, &hf_omega_oracle(ideal, rows, cols), cmd.format)
    } else {
        render_matrix(&formula, cmd.format)
    }
}

/// Executes a command and returns its standard output.
pub fn run(cmd: &Command) -> Result<String, Error> {
    let input = read_scheme(&cmd.scheme)?;
    let y = match (input, cmd.verb) {
        (SchemeInput::Generators(ideal), Verb::Hf) => {
            let (rows, cols) = window(cmd, None);
            return Ok(render_matrix(&hf_ideal(&ideal, rows, cols), cmd.format));
        }
        (SchemeInput::Generators(ideal), Verb::Omega) => return Ok(omega_for_generators(cmd, &ideal)),
        (input, _) => input.into_points()?,
    };
    let (rows, cols) = window(cmd, Some(&y));
    let out = match cmd.verb {
        Verb::Hf => render_matrix(&hf(&y, rows, cols), cmd.format),
        Verb::Omega if cmd.closed => render_matrix(&hf_omega_acm_thickening(&y, rows, cols)?, cmd.format),
        Verb::Omega if cmd.oracle => {
            render_comparison(&hf_omega(&y, rows, cols), &hf_omega_oracle(&y, rows, cols), cmd.format)
        }
        Verb::Omega => render_matrix(&hf_omega(&y, rows, cols), cmd.format),
        Verb::Theta => render_matrix(&kaehler_different_hf(&y, rows, cols)?, cmd.format),
        Verb::Diff => {
            let h = match cmd.of {
                Target::Hf => hf(&y, rows, cols),
                Target::Omega => hf_omega(&y, rows, cols),
                Target::Theta => kaehler_different_hf(&y, rows, cols)?,
            };
            render_matrix(&HilbertMatrix::new(first_difference(h.data())), cmd.format)
        }
        Verb::Tuples => {
            let t = tuples(&y);
            let value = json!({
                "alpha": t.alpha, "beta": t.beta,
                "alpha_star": t.alpha_star, "beta_star": t.beta_star,
                "alpha_hat": t.alpha_hat, "beta_hat": t.beta_hat,
                "l": t.l, "l_prime": t.l_prime, "r": t.r, "t": t.t,
            });
            match cmd.format {
                Format::Json => value.to_string() + "\n",
                _ => value.as_object().expect("object literal").iter().map(|(k, v)| format!("{k}: {v}\n")).collect(),
            }
        }
        Verb::Acm => match (acm_certificate(&y), cmd.format) {
            (Some(p), Format::Json) => json!({"acm": true, "c1": p.c1, "c2": p.c2}).to_string() + "\n",
            (Some(p), Format::Pretty) => format!("acm: yes (L1 = {}, L2 = {})\n", p.l1(), p.l2()),
            (None, f) => render_flag("acm", false, f),
            (Some(_), f) => render_flag("acm", true, f),
        },
        Verb::Cbp => render_flag("cbp", is_cbp(&y)?, cmd.format),
        Verb::Ci => render_flag("ci", is_ci(&y)?, cmd.format),
        Verb::Aci => render_flag("aci", is_aci(&y)?, cmd.format),
        Verb::Generators => {
            let g = minimal_generators(&y)?;
            let items: Vec<_> = g.gens.iter().map(|(p, d)| (p.to_string(), *d)).collect();
            render_polys(&items, "generators", cmd.format)
        }
        Verb::Separators => {
            let points: Vec<usize> = match cmd.point {
                Some(k) => vec![k],
                None => (0..y.len()).collect(),
            };
            let mut out = String::new();
            for k in points {
                let items: Vec<_> = minimal_separators(&y, k)?.iter().map(|(p, d)| (p.to_string(), *d)).collect();
                if cmd.format == Format::Pretty {
                    writeln!(out, "point {k}: {}", y.point(k)).unwrap();
                }
                out.push_str(&render_polys(&items, "separators", cmd.format));
            }
            out
        }
    };
    Ok(out)
}
