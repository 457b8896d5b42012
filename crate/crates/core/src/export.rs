//! Text renderings of matrices and coordinate vectors.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{PolyCoords, TriangularMatrix};
use crate::rational::Rational;

/// Significant digits of the display-only decimal format.
pub const DECIMAL_DIGITS: usize = 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixFormat {
    Json,
    Csv,
    Latex,
    Decimal,
}

impl FromStr for MatrixFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(MatrixFormat::Json),
            "csv" => Ok(MatrixFormat::Csv),
            "latex" => Ok(MatrixFormat::Latex),
            "decimal" => Ok(MatrixFormat::Decimal),
            _ => Err(Error::Parse(format!(
                "unknown format '{s}' (expected json, csv, latex or decimal)"
            ))),
        }
    }
}

#[derive(Serialize)]
struct Params {
    from: Vec<Rational>,
    to: Vec<Rational>,
}

#[derive(Serialize)]
struct MatrixJson<'a> {
    from: String,
    to: String,
    degree: usize,
    params: Params,
    entries: Vec<&'a Rational>,
}

/// `{from, to, degree, params: {from, to}, entries}` with `entries` the
/// row-major list of `"p/q"` strings.
pub fn to_json(m: &TriangularMatrix) -> String {
    let size = m.size();
    let doc = MatrixJson {
        from: m.domain().to_string(),
        to: m.range().to_string(),
        degree: m.degree(),
        params: Params {
            from: m.domain().params(),
            to: m.range().params(),
        },
        entries: (0..size)
            .flat_map(|i| (0..size).map(move |j| (i, j)))
            .map(|(i, j)| m.get(i, j))
            .collect(),
    };
    serde_json::to_string(&doc).expect("matrix serializes")
}

fn render_rows(m: &TriangularMatrix, cell: impl Fn(&Rational) -> String, sep: &str, end: &str) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(&cell).collect();
        out.push_str(&cells.join(sep));
        out.push_str(end);
    }
    out
}

pub fn to_csv(m: &TriangularMatrix) -> String {
    render_rows(m, Rational::to_string, ",", "\n")
}

fn latex_cell(q: &Rational) -> String {
    if q.is_integer() {
        return q.to_string();
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let abs = q.abs();
    format!("{sign}\\frac{{{}}}{{{}}}", abs.numer(), abs.denom())
}

pub fn to_latex(m: &TriangularMatrix) -> String {
    let mut out = String::from("\\begin{pmatrix}\n");
    let size = m.size();
    for (i, row) in m.rows().iter().enumerate() {
        let cells: Vec<String> = row.iter().map(latex_cell).collect();
        out.push_str(&cells.join(" & "));
        out.push_str(if i + 1 < size { " \\\\\n" } else { "\n" });
    }
    out.push_str("\\end{pmatrix}\n");
    out
}

/// Display only: every cell is the correctly rounded 17-digit decimal.
pub fn to_decimal(m: &TriangularMatrix) -> String {
    render_rows(m, |q| q.to_scientific(DECIMAL_DIGITS), " ", "\n")
}

pub fn render(m: &TriangularMatrix, format: MatrixFormat) -> String {
    match format {
        MatrixFormat::Json => to_json(m),
        MatrixFormat::Csv => to_csv(m),
        MatrixFormat::Latex => to_latex(m),
        MatrixFormat::Decimal => to_decimal(m),
    }
}

/// Comma-separated ascending coefficients.
pub fn coords_to_string(coords: &PolyCoords) -> String {
    let mut out = String::new();
    for (i, c) in coords.coeffs.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write!(out, "{c}").expect("writing to a String");
    }
    out
}

/// Parses `"c0,c1,...,cn"`. Whitespace around entries is tolerated.
pub fn parse_coeffs(text: &str) -> Result<Vec<Rational>> {
    if text.trim().is_empty() {
        return Err(Error::Parse("empty coefficient list".into()));
    }
    text.split(',')
        .enumerate()
        .map(|(i, item)| {
            item.trim()
                .parse::<Rational>()
                .map_err(|e| Error::Parse(format!("coefficient {i} ('{}'): {e}", item.trim())))
        })
        .collect()
}
