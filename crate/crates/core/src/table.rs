//! Deterministic tabular output: TSV for diffing, JSON lines for machines.
//! Both forms open with a record naming the table.

use serde_json::{Map, Value};

use crate::bijections::{count_strict_by_parts_rank, iota, theorem34_rhs, RankCase};
use crate::error::Result;
use crate::partitions::{enumerate_strict_partitions, partition_count_table};
use crate::qseries::s_coefficients;
use crate::verify::even_plus_triangular_count;

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub title: String,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Tsv,
    JsonLines,
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Tsv => self.to_tsv(),
            Format::JsonLines => self.to_json_lines(),
        }
    }

    pub fn to_tsv(&self) -> String {
        let mut out = format!("# {}\n{}\n", self.title, self.header.join("\t"));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(cell_text).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
        out
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = serde_json::json!({ "record": "header", "table": self.title }).to_string();
        out.push('\n');
        for row in &self.rows {
            let mut obj = Map::new();
            for (key, value) in self.header.iter().zip(row) {
                obj.insert((*key).to_string(), value.clone());
            }
            out.push_str(&Value::Object(obj).to_string());
            out.push('\n');
        }
        out
    }
}

fn cell_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Strict partitions of `n` and their images `(t, Δ)` under `iota`.
pub fn iota_table(n: u64) -> Result<Table> {
    let mut rows = Vec::new();
    for s in enumerate_strict_partitions(n, None) {
        let img = iota(&s)?;
        rows.push(vec![
            Value::from(s.to_sum_string()),
            Value::from(img.t),
            Value::from(img.delta.to_string()),
        ]);
    }
    Ok(Table { title: format!("iota-image n={n}"), header: vec!["partition", "t", "delta"], rows })
}

/// Nonzero coefficients of `x^a y^b q^n` in `S(x, y)`.
pub fn s_coefficient_table(max_a: usize, max_b: usize, order: usize) -> Result<Table> {
    let table = s_coefficients(max_a, max_b, order)?;
    let rows = table
        .iter()
        .filter(|&(_, _, _, c)| c != 0)
        .map(|(a, b, n, c)| vec![Value::from(a), Value::from(b), Value::from(n), Value::from(c)])
        .collect();
    Ok(Table {
        title: format!("gf-coefficients a<={max_a} b<={max_b} n<={order}"),
        header: vec!["a", "b", "n", "coefficient"],
        rows,
    })
}

/// Both sides of the rank-and-parts count over the admissible part of the grid.
pub fn theorem34_table(k_min: i64, k_max: i64, m_max: usize, n_max: u64) -> Table {
    let mut rows = Vec::new();
    for k in k_min..=k_max {
        for m in 1..=m_max {
            let Some(case) = RankCase::classify(k, m as i64) else {
                continue;
            };
            for n in (m * (m + 1) / 2) as u64..=n_max {
                rows.push(vec![
                    Value::from(k),
                    Value::from(m),
                    Value::from(n),
                    Value::from(case.label()),
                    Value::from(count_strict_by_parts_rank(k, m, n)),
                    Value::from(theorem34_rhs(k, m, n)),
                ]);
            }
        }
    }
    Table {
        title: format!("strict-by-parts-and-rank k={k_min}..{k_max} m<={m_max} n<={n_max}"),
        header: vec!["k", "m", "n", "case", "strict", "rhs"],
        rows,
    }
}

/// Per weight: `p(n)`, strict partitions, even-plus-triangular pairs.
pub fn counts_table(n_max: u64) -> Result<Table> {
    let p = partition_count_table(n_max as usize)?;
    let rows = (0..=n_max)
        .map(|n| {
            vec![
                Value::from(n),
                Value::from(p[n as usize]),
                Value::from(enumerate_strict_partitions(n, None).len()),
                Value::from(even_plus_triangular_count(n)),
            ]
        })
        .collect();
    Ok(Table {
        title: format!("counts n<={n_max}"),
        header: vec!["n", "partitions", "strict", "even_plus_triangular"],
        rows,
    })
}
