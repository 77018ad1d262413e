//! Hodge-diamond files and series serialization (text, JSON, CSV).

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hodge::{HodgeDiamond, Theory};
use crate::{QSeries, Rational, YPolynomial};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Non-empty lines with comments stripped, as `(line number, column of
/// first token, tokens with columns)`.
fn significant_lines(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (col, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    tokens.push((s + 1, &content[s..col]));
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push((i + 1, tokens));
        }
    }
    out
}

/// Parses the Hodge file format:
///
/// ```text
/// # comment
/// dim 1
/// theory hodge      # optional; or b-side
/// 1 0
/// 0 1
/// ```
///
/// Rows are indexed by `p`, columns by `q`. Errors carry 1-based line and
/// column positions.
pub fn parse_hodge(text: &str) -> Result<HodgeDiamond> {
    let lines = significant_lines(text);
    let mut it = lines.iter().peekable();

    let (ln, toks) = it.next().ok_or_else(|| parse_err(1, 1, "empty file; expected `dim <d>`"))?;
    if toks[0].1 != "dim" || toks.len() != 2 {
        return Err(parse_err(*ln, toks[0].0, "expected `dim <d>`"));
    }
    let dim: usize = toks[1]
        .1
        .parse()
        .map_err(|_| parse_err(*ln, toks[1].0, format!("dimension {:?} is not a non-negative integer", toks[1].1)))?;
    crate::guards::check_bound("Hodge file dimension", dim as u128, 64)?;

    let mut theory = Theory::Hodge;
    if let Some((ln, toks)) = it.peek() {
        if toks[0].1 == "theory" {
            if toks.len() != 2 {
                return Err(parse_err(*ln, toks[0].0, "expected `theory hodge|b-side`"));
            }
            theory = Theory::parse(toks[1].1)
                .ok_or_else(|| parse_err(*ln, toks[1].0, format!("unknown theory {:?}", toks[1].1)))?;
            it.next();
        }
    }

    let mut rows = Vec::with_capacity(dim + 1);
    let mut last_line = *ln;
    for (ln, toks) in it {
        last_line = *ln;
        if rows.len() == dim + 1 {
            return Err(parse_err(*ln, toks[0].0, format!("expected {} rows, found more", dim + 1)));
        }
        if toks.len() != dim + 1 {
            let col = toks.get(dim + 1).map_or(toks[toks.len() - 1].0, |t| t.0);
            return Err(parse_err(
                *ln,
                col,
                format!("expected {} entries, found {}", dim + 1, toks.len()),
            ));
        }
        let row = toks
            .iter()
            .map(|(col, t)| {
                t.parse::<u64>()
                    .map_err(|_| parse_err(*ln, *col, format!("entry {t:?} is not a non-negative integer")))
            })
            .collect::<Result<Vec<u64>>>()?;
        rows.push(row);
    }
    if rows.len() != dim + 1 {
        return Err(parse_err(
            last_line + 1,
            1,
            format!("expected {} rows, found {}", dim + 1, rows.len()),
        ));
    }
    HodgeDiamond::new(dim, rows, theory)
}

/// Inverse of [`parse_hodge`].
pub fn format_hodge(h: &HodgeDiamond) -> String {
    let mut s = format!("dim {}\ntheory {}\n", h.dim(), h.theory().name());
    for row in h.rows() {
        let cells: Vec<String> = row.iter().map(u64::to_string).collect();
        s.push_str(&cells.join(" "));
        s.push('\n');
    }
    s
}

/// Output format for series.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::Invalid(format!("unknown format {s:?}"))),
        }
    }
}

/// JSON shape of a series: `coefficients[k]` lists `[u_exp, "num/den"]`
/// pairs of the `q^k` coefficient, `u = y^{1/2}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct SeriesJson {
    pub variable: String,
    pub trunc: usize,
    pub coefficients: Vec<Vec<(i64, String)>>,
}

fn rational_text(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Invalid(format!("bad rational {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl SeriesJson {
    pub fn from_series(s: &QSeries) -> Self {
        SeriesJson {
            variable: "q".into(),
            trunc: s.trunc(),
            coefficients: s
                .coeffs()
                .iter()
                .map(|c| c.terms().map(|(u, v)| (u, rational_text(v))).collect())
                .collect(),
        }
    }

    pub fn to_series(&self) -> Result<QSeries> {
        if self.coefficients.len() != self.trunc + 1 {
            return Err(Error::Invalid(format!(
                "trunc {} needs {} coefficients, found {}",
                self.trunc,
                self.trunc + 1,
                self.coefficients.len()
            )));
        }
        let coeffs = self
            .coefficients
            .iter()
            .map(|terms| {
                let mut p = YPolynomial::zero();
                for (u, v) in terms {
                    p.add_term(*u, parse_rational(v)?);
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(QSeries::from_coeffs(self.trunc, coeffs))
    }
}

pub fn series_to_json(s: &QSeries) -> String {
    serde_json::to_string(&SeriesJson::from_series(s)).expect("plain data serializes")
}

pub fn series_from_json(text: &str) -> Result<QSeries> {
    let parsed: SeriesJson =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.column(), e.to_string()))?;
    parsed.to_series()
}

/// One row `q_power,u_exp,numerator,denominator` per nonzero term, with a
/// header line.
pub fn series_to_csv(s: &QSeries) -> String {
    let mut out = String::from("q_power,u_exp,numerator,denominator\n");
    for (k, c) in s.coeffs().iter().enumerate() {
        for (u, v) in c.terms() {
            let _ = writeln!(out, "{k},{u},{},{}", v.numer(), v.denom());
        }
    }
    out
}

pub fn render_series(s: &QSeries, format: Format) -> String {
    match format {
        Format::Text => s.to_text(),
        Format::Json => {
            let mut j = series_to_json(s);
            j.push('\n');
            j
        }
        Format::Csv => series_to_csv(s),
    }
}
