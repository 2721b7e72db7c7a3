//! The B-coefficient tables for triples of weight at most 3: generation,
//! rendering, and comparison against the shipped fixture.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{KronError, Result};
use crate::genfunc::{cached_b_series, Form};
use crate::par::Execution;
use crate::partitions::{partitions_up_to, Partition};

/// Shipped reference values, one row per table line.
pub const FIXTURE_CSV: &str = include_str!("../fixtures/tables.csv");
pub const FIXTURE_SHA256: &str = "3846b4fc73fe3c647c1d979b533d8b577241c80f338abd6ad91c7552a70ff744";

/// Columns `B_{α,β,γ}`, `B_{β,α,γ}`, `B_{γ,α,β}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub b_abc: i64,
    pub b_bac: i64,
    pub b_gab: i64,
}

impl TableRow {
    pub fn key(&self) -> [Partition; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn columns(&self) -> [(&'static str, i64); 3] {
        [("b_abc", self.b_abc), ("b_bac", self.b_bac), ("b_gab", self.b_gab)]
    }
}

/// Table row keys: `α ≥ β ≥ γ`, each listed in display order.
pub fn row_keys(max_weight: u32) -> Vec<[Partition; 3]> {
    let ps = partitions_up_to(max_weight);
    let mut out = Vec::new();
    for a in &ps {
        for b in ps.iter().filter(|b| *b <= a) {
            for c in ps.iter().filter(|c| *c <= b) {
                out.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    out
}

pub fn generate_table(max_weight: u32, exec: Execution) -> Result<Vec<TableRow>> {
    let series = cached_b_series(Form::Theorem, [max_weight; 3])?;
    let keys = row_keys(max_weight);
    exec.map(&keys, |[a, b, c]| {
        Ok(TableRow {
            alpha: a.clone(),
            beta: b.clone(),
            gamma: c.clone(),
            b_abc: series.coefficient(a, b, c)?,
            b_bac: series.coefficient(b, a, c)?,
            b_gab: series.coefficient(c, a, b)?,
        })
    })
    .into_iter()
    .collect()
}

/// `(2, 1)`; `-` for the empty partition.
pub fn render_partition(p: &Partition) -> String {
    if p.is_empty() {
        "-".to_string()
    } else {
        p.to_tuple_string()
    }
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\ep".to_string()
    } else {
        p.to_tuple_string()
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Csv,
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = KronError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            other => Err(KronError::UnknownFormat(other.to_string())),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CsvRow {
    alpha: String,
    beta: String,
    gamma: String,
    b_abc: i64,
    b_bac: i64,
    b_gab: i64,
}

impl From<&TableRow> for CsvRow {
    fn from(r: &TableRow) -> Self {
        CsvRow {
            alpha: render_partition(&r.alpha),
            beta: render_partition(&r.beta),
            gamma: render_partition(&r.gamma),
            b_abc: r.b_abc,
            b_bac: r.b_bac,
            b_gab: r.b_gab,
        }
    }
}

pub fn render(rows: &[TableRow], format: Format) -> Result<String> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            if rows.is_empty() {
                w.write_record(["alpha", "beta", "gamma", "b_abc", "b_bac", "b_gab"])?;
            }
            for r in rows {
                w.serialize(CsvRow::from(r))?;
            }
            let bytes = w.into_inner().map_err(|e| KronError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
        }
        Format::Json => {
            let list: Vec<CsvRow> = rows.iter().map(CsvRow::from).collect();
            Ok(serde_json::to_string_pretty(&list)? + "\n")
        }
        Format::Latex => {
            let mut out = String::new();
            out.push_str("\\providecommand{\\ep}{\\emptyset}\n");
            out.push_str("\\begin{tabular}{lll|rrr}\n");
            out.push_str(
                "$\\alpha$ & $\\beta$ & $\\gamma$ & $B_{\\alpha,\\beta,\\gamma}$ & \
                 $B_{\\beta,\\alpha,\\gamma}$ & $B_{\\gamma,\\alpha,\\beta}$ \\\\\n\\hline\n",
            );
            for r in rows {
                writeln!(
                    out,
                    "${}$ & ${}$ & ${}$ & {} & {} & {} \\\\",
                    latex_partition(&r.alpha),
                    latex_partition(&r.beta),
                    latex_partition(&r.gamma),
                    r.b_abc,
                    r.b_bac,
                    r.b_gab
                )
                .expect("writing to a String");
            }
            out.push_str("\\end{tabular}\n");
            Ok(out)
        }
    }
}

/// Inverse of `render(_, Format::Csv)`.
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    reader
        .deserialize::<CsvRow>()
        .map(|rec| {
            let rec = rec?;
            Ok(TableRow {
                alpha: rec.alpha.parse()?,
                beta: rec.beta.parse()?,
                gamma: rec.gamma.parse()?,
                b_abc: rec.b_abc,
                b_bac: rec.b_bac,
                b_gab: rec.b_gab,
            })
        })
        .collect()
}

/// One fixture line; `ssk`, `a`, `c` are carried but never computed.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct FixtureRow {
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub ssk: i64,
    pub a: i64,
    pub b_abc: i64,
    pub b_bac: i64,
    pub b_gab: i64,
    pub c: i64,
    /// Space-separated names of the columns checked by this crate.
    pub verified: String,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub rows: Vec<(TableRow, FixtureRow)>,
}

impl Fixture {
    pub fn get(&self, key: &[Partition; 3]) -> Option<&TableRow> {
        self.rows.iter().map(|(r, _)| r).find(|r| r.key() == *key)
    }

    pub fn table_rows(&self) -> Vec<TableRow> {
        self.rows.iter().map(|(r, _)| r.clone()).collect()
    }
}

fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// The shipped fixture, after checking its digest.
pub fn load_fixture() -> Result<Fixture> {
    parse_fixture(FIXTURE_CSV, Some(FIXTURE_SHA256))
}

pub fn parse_fixture(text: &str, sha256: Option<&str>) -> Result<Fixture> {
    if let Some(expected) = sha256 {
        let actual = sha256_hex(text.as_bytes());
        if actual != expected {
            return Err(KronError::Fixture(format!(
                "checksum {actual} does not match {expected}"
            )));
        }
    }
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for rec in reader.deserialize::<FixtureRow>() {
        let f = rec?;
        let row = TableRow {
            alpha: f.alpha.parse()?,
            beta: f.beta.parse()?,
            gamma: f.gamma.parse()?,
            b_abc: f.b_abc,
            b_bac: f.b_bac,
            b_gab: f.b_gab,
        };
        rows.push((row, f));
    }
    Ok(Fixture { rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub key: String,
    pub column: &'static str,
    pub expected: Option<i64>,
    pub actual: i64,
}

fn key_label(r: &TableRow) -> String {
    format!(
        "{} {} {}",
        render_partition(&r.alpha),
        render_partition(&r.beta),
        render_partition(&r.gamma)
    )
}

/// Cells of `rows` that disagree with `fixture`; keys absent from the fixture
/// are reported with `expected: None`.
pub fn diff_rows(rows: &[TableRow], fixture: &Fixture) -> Vec<Mismatch> {
    let mut out = Vec::new();
    for r in rows {
        let expected = fixture.get(&r.key());
        for (i, (column, actual)) in r.columns().into_iter().enumerate() {
            let want = expected.map(|e| e.columns()[i].1);
            if want != Some(actual) {
                out.push(Mismatch {
                    key: key_label(r),
                    column,
                    expected: want,
                    actual,
                });
            }
        }
    }
    out
}

pub fn diff_against_fixture(rows: &[TableRow]) -> Result<Vec<Mismatch>> {
    Ok(diff_rows(rows, &load_fixture()?))
}
