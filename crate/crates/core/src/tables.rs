// SPDX-License-Identifier: Apache-2.0

//! Published θ-cyclic generators and a local best-known-distance snapshot.
//!
//! Both ship as data files under `data/` and are compiled in.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::code::SkewCyclicCode;
use crate::error::{Error, Result};
use crate::io::{load_field, parse_poly};
use crate::skew::{SkewPoly, SkewRing};

const TABLE_JSON: &str = include_str!("../data/tables.json");
const REFERENCE_CSV: &str = include_str!("../data/reference.csv");

/// One published code: field preset, parameters, how many codes were
/// reported with them, and one generator in descending text form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub field: String,
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub count: usize,
    pub generator: String,
}

impl TableRow {
    /// The ring `GF(q)[X; θ]` with `θ` the Frobenius `x ↦ x^p`.
    pub fn ring(&self) -> Result<Arc<SkewRing>> {
        SkewRing::new(load_field(&self.field)?, 1)
    }

    pub fn generator_poly(&self) -> Result<SkewPoly> {
        let ring = self.ring()?;
        let coeffs = parse_poly(ring.field(), &self.generator, 'X')?;
        ring.poly(coeffs)
    }

    pub fn code(&self) -> Result<SkewCyclicCode> {
        SkewCyclicCode::new(self.n, &self.generator_poly()?)
    }

    pub fn label(&self) -> String {
        format!("{} ({},{},{})", self.field, self.n, self.k, self.d)
    }
}

pub fn table_rows() -> Vec<TableRow> {
    serde_json::from_str(TABLE_JSON).expect("bundled table data is valid")
}

/// Outcome of the structural checks on one generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub label: String,
    /// Remainder of `X^n - 1` on the right by the generator.
    pub remainder: String,
    pub divides: bool,
    pub dimension: Option<usize>,
    pub dimension_ok: bool,
    /// Generator-matrix rows whose θ-shift left the code.
    pub shift_failures: Vec<usize>,
}

impl RowCheck {
    pub fn passed(&self) -> bool {
        self.divides && self.dimension_ok && self.shift_failures.is_empty()
    }

    /// One-line summary naming every failing check.
    pub fn summary(&self) -> String {
        if self.passed() {
            return format!("PASS {}", self.label);
        }
        let mut why = Vec::new();
        if !self.divides {
            why.push(format!("remainder {}", self.remainder));
        }
        if !self.dimension_ok {
            why.push(format!("dimension {:?}", self.dimension));
        }
        if !self.shift_failures.is_empty() {
            why.push(format!(
                "shift leaves the code at rows {:?}",
                self.shift_failures
            ));
        }
        format!("FAIL {}: {}", self.label, why.join("; "))
    }
}

/// Right-divisibility of `X^n - 1`, dimension `k` and θ-shift closure of
/// every generator-matrix row.
pub fn verify_generator(label: &str, g: &SkewPoly, n: usize, k: usize) -> RowCheck {
    let ring = g.ring();
    let rem = match ring.xn_minus_1(n).right_divmod(&g.monic()) {
        Ok((_, r)) => r,
        Err(e) => {
            return RowCheck {
                label: label.into(),
                remainder: e.to_string(),
                divides: false,
                dimension: None,
                dimension_ok: false,
                shift_failures: Vec::new(),
            }
        }
    };
    let mut check = RowCheck {
        label: label.into(),
        remainder: rem.to_string(),
        divides: rem.is_zero(),
        dimension: None,
        dimension_ok: false,
        shift_failures: Vec::new(),
    };
    if let Ok(code) = SkewCyclicCode::new(n, g) {
        check.dimension = Some(code.dimension());
        check.dimension_ok = code.dimension() == k;
        check.shift_failures = code
            .generator_matrix()
            .iter()
            .enumerate()
            .filter(|(_, row)| !code.is_codeword(&code.theta_shift(row)).unwrap_or(false))
            .map(|(i, _)| i)
            .collect();
    }
    check
}

pub fn verify_row(row: &TableRow) -> Result<RowCheck> {
    let g = row.generator_poly()?;
    Ok(verify_generator(&row.label(), &g, row.n, row.k))
}

pub fn verify_tables() -> Result<Vec<RowCheck>> {
    table_rows().iter().map(verify_row).collect()
}

/// Best-known minimum distances keyed by `(q, n, k)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReferenceTable {
    rows: BTreeMap<(u32, usize, usize), usize>,
}

#[derive(Deserialize)]
struct ReferenceRecord {
    q: u32,
    n: usize,
    k: usize,
    best_known_d: usize,
}

/// How a found distance compares with the reference.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Comparison {
    Beats,
    Meets,
    Below,
    Unknown,
}

impl ReferenceTable {
    pub fn bundled() -> Self {
        Self::from_csv(REFERENCE_CSV).expect("bundled reference table is valid")
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = BTreeMap::new();
        for rec in csv::Reader::from_reader(text.as_bytes()).deserialize() {
            let r: ReferenceRecord = rec.map_err(|e| Error::Parse(e.to_string()))?;
            if rows.insert((r.q, r.n, r.k), r.best_known_d).is_some() {
                return Err(Error::Parse(format!(
                    "duplicate reference row ({}, {}, {})",
                    r.q, r.n, r.k
                )));
            }
        }
        Ok(ReferenceTable { rows })
    }

    pub fn best_known(&self, q: u32, n: usize, k: usize) -> Option<usize> {
        self.rows.get(&(q, n, k)).copied()
    }

    pub fn compare(&self, q: u32, n: usize, k: usize, d: usize) -> Comparison {
        match self.best_known(q, n, k) {
            None => Comparison::Unknown,
            Some(b) if d > b => Comparison::Beats,
            Some(b) if d == b => Comparison::Meets,
            Some(_) => Comparison::Below,
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}
