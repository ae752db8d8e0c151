//! Table, CSV and JSON renderings of computed results.
//!
//! The capacity CSV schema is fixed:
//!
//! ```text
//! k,value_rational,value_decimal,witness,branch[,oracle_rational]
//! ```
//!
//! `value_rational` is always `p/q` (or `inf`), `value_decimal` has 20
//! significant digits rounded half-to-even, and `witness` joins the lattice
//! vector entries with `;` (empty when the branch has no witness).

use std::fmt::Write as _;

use serde_json::{json, Value};
use toricap::embedding::ObstructionReport;
use toricap::{Branch, CapacitySequence, ExtendedRational, LatticeVector, Rational, SlopeReport};

pub const CSV_HEADER: &str = "k,value_rational,value_decimal,witness,branch";
pub const DECIMAL_DIGITS: u32 = 20;

fn approx(r: &ExtendedRational) -> String {
    match r {
        ExtendedRational::Finite(x) => x.to_fixed(6),
        ExtendedRational::Infinity => "inf".into(),
    }
}

/// `2/3 (≈0.666667)`
pub fn human(r: &Rational) -> String {
    format!("{r} (≈{})", r.to_fixed(6))
}

fn witness_csv(w: &Option<LatticeVector>) -> String {
    w.as_ref()
        .map(|v| {
            v.entries()
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(";")
        })
        .unwrap_or_default()
}

fn pad_table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| format!("{s:<width$}", width = widths[c]))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn caps_table(seq: &CapacitySequence, oracle: Option<&[Rational]>) -> String {
    let mut header = vec!["k", "value", "decimal", "witness", "branch"];
    if oracle.is_some() {
        header.extend(["oracle", "match"]);
    }
    let mut rows = vec![header.into_iter().map(String::from).collect::<Vec<_>>()];
    for (i, r) in seq.values.iter().enumerate() {
        let mut row = vec![
            r.k.to_string(),
            r.value.to_string(),
            approx(&r.value),
            r.witness
                .as_ref()
                .map(ToString::to_string)
                .unwrap_or_default(),
            r.branch.to_string(),
        ];
        if let Some(o) = oracle {
            let same = r.value == ExtendedRational::Finite(o[i].clone());
            row.push(o[i].to_string());
            row.push(if same { "ok" } else { "MISMATCH" }.into());
        }
        rows.push(row);
    }
    format!("# {}\n{}", seq.domain, pad_table(&rows))
}

pub fn caps_csv(seq: &CapacitySequence, oracle: Option<&[Rational]>) -> String {
    let mut out = String::from(CSV_HEADER);
    if oracle.is_some() {
        out.push_str(",oracle_rational");
    }
    out.push('\n');
    for (i, r) in seq.values.iter().enumerate() {
        write!(
            out,
            "{},{},{},{},{}",
            r.k,
            r.value.to_fraction_string(),
            r.value.to_significant(DECIMAL_DIGITS),
            witness_csv(&r.witness),
            r.branch
        )
        .unwrap();
        if let Some(o) = oracle {
            write!(out, ",{}", o[i].to_fraction_string()).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn caps_json(domain: Value, seq: &CapacitySequence, oracle: Option<&[Rational]>) -> String {
    let rows: Vec<Value> = seq
        .values
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = json!({
                "k": r.k,
                "value": r.value.to_fraction_string(),
                "decimal": r.value.to_significant(DECIMAL_DIGITS),
                "witness": r.witness.as_ref().map(|w| w.entries().to_vec()),
                "branch": r.branch.as_str(),
            });
            if let Some(o) = oracle {
                row["oracle"] = Value::String(o[i].to_fraction_string());
            }
            row
        })
        .collect();
    let doc = json!({ "domain": domain, "kmax": seq.len(), "capacities": rows });
    serde_json::to_string_pretty(&doc).unwrap() + "\n"
}

/// A parsed row of the capacity CSV.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvRow {
    pub k: u64,
    pub value: ExtendedRational,
    pub decimal: String,
    pub witness: Option<LatticeVector>,
    pub branch: Branch,
    pub oracle: Option<Rational>,
}

/// Reads back the output of [`caps_csv`].
pub fn parse_caps_csv(text: &str) -> Result<Vec<CsvRow>, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty CSV")?;
    let with_oracle = match header {
        h if h == CSV_HEADER => false,
        h if h == format!("{CSV_HEADER},oracle_rational") => true,
        h => return Err(format!("unexpected header {h:?}")),
    };
    lines
        .enumerate()
        .map(|(i, line)| {
            let line_no = i + 2;
            let f: Vec<&str> = line.split(',').collect();
            let want = if with_oracle { 6 } else { 5 };
            if f.len() != want {
                return Err(format!(
                    "line {line_no}: expected {want} fields, got {}",
                    f.len()
                ));
            }
            let err = |what: &str| format!("line {line_no}: bad {what}");
            let witness = if f[3].is_empty() {
                None
            } else {
                Some(LatticeVector::new(
                    f[3].split(';')
                        .map(|x| x.parse::<u64>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| err("witness"))?,
                ))
            };
            Ok(CsvRow {
                k: f[0].parse().map_err(|_| err("k"))?,
                value: f[1].parse().map_err(|_| err("value_rational"))?,
                decimal: f[2].to_string(),
                witness,
                branch: f[4].parse().map_err(|_| err("branch"))?,
                oracle: if with_oracle {
                    Some(f[5].parse().map_err(|_| err("oracle_rational"))?)
                } else {
                    None
                },
            })
        })
        .collect()
}

/// A single named quantity, e.g. the cube capacity.
pub fn scalar(format: Format, quantity: &str, label: &str, value: &Rational) -> String {
    match format {
        Format::Table => format!("{label}{}\n", human(value)),
        Format::Csv => format!(
            "quantity,value_rational,value_decimal\n{quantity},{},{}\n",
            value.to_fraction_string(),
            value.to_significant(DECIMAL_DIGITS)
        ),
        Format::Json => {
            let doc = json!({
                "quantity": quantity,
                "value": value.to_fraction_string(),
                "decimal": value.to_significant(DECIMAL_DIGITS),
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    }
}

pub fn obstruction(format: Format, source: &str, target: &str, r: &ObstructionReport) -> String {
    let verdict = match r.first_violation {
        Some(k) => format!("violation at k={k}"),
        None => format!("no violation up to k={}", r.kmax),
    };
    match format {
        Format::Table => {
            let mut rows = vec![["k", "source", "target", ""].map(String::from).to_vec()];
            for row in &r.rows {
                rows.push(vec![
                    row.k.to_string(),
                    row.source.to_string(),
                    row.target.to_string(),
                    if row.violates() { ">" } else { "" }.into(),
                ]);
            }
            format!(
                "# source {source}\n# target {target}\n{}{verdict}\n",
                pad_table(&rows)
            )
        }
        Format::Csv => {
            let mut out = String::from("k,source_rational,target_rational,violation\n");
            for row in &r.rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    row.k,
                    row.source.to_fraction_string(),
                    row.target.to_fraction_string(),
                    row.violates()
                )
                .unwrap();
            }
            out
        }
        Format::Json => {
            let rows: Vec<Value> = r
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "k": row.k,
                        "source": row.source.to_fraction_string(),
                        "target": row.target.to_fraction_string(),
                        "violation": row.violates(),
                    })
                })
                .collect();
            let doc = json!({
                "source": source,
                "target": target,
                "kmax": r.kmax,
                "first_violation": r.first_violation,
                "rows": rows,
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    }
}

pub fn slope(format: Format, domain: &str, r: &SlopeReport) -> String {
    let exact = r.exact.clone().expect("slope reports carry the limit");
    match format {
        Format::Table => format!(
            "# {domain}\nK = {}\nc_K = {}\nc_K/K = {}\nlimit (cube capacity) = {}\nbracket: {} <= c_K/K <= {}\n",
            r.kmax,
            r.c_kmax,
            human(&r.estimate),
            human(&exact),
            r.lower,
            r.upper
        ),
        Format::Csv => format!(
            "kmax,c_kmax,estimate_rational,estimate_decimal,exact_rational,lower_rational,upper_rational\n{},{},{},{},{},{},{}\n",
            r.kmax,
            r.c_kmax.to_fraction_string(),
            r.estimate.to_fraction_string(),
            r.estimate.to_significant(DECIMAL_DIGITS),
            exact.to_fraction_string(),
            r.lower.to_fraction_string(),
            r.upper.to_fraction_string()
        ),
        Format::Json => {
            let doc = json!({
                "domain": domain,
                "kmax": r.kmax,
                "c_kmax": r.c_kmax.to_fraction_string(),
                "estimate": r.estimate.to_fraction_string(),
                "estimate_decimal": r.estimate.to_significant(DECIMAL_DIGITS),
                "exact": exact.to_fraction_string(),
                "lower": r.lower.to_fraction_string(),
                "upper": r.upper.to_fraction_string(),
            });
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}
