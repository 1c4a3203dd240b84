// SPDX-License-Identifier: Apache-2.0

//! Search for good θ-cyclic codes: collect right divisors of `X^n - 1` of
//! each requested degree, build the codes, and measure their distance.

use std::io::Write;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::SkewCyclicCode;
use crate::distance::{DistanceOptions, DEFAULT_DISTANCE_BUDGET};
use crate::divisors::{DivisorMode, DivisorQuery, DEFAULT_EXHAUSTION_BUDGET};
use crate::error::{Error, Result};
use crate::skew::SkewRing;
use crate::tables::{Comparison, ReferenceTable};

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub lengths: Vec<usize>,
    /// Generator degrees `n - k`.
    pub degrees: Vec<usize>,
    pub mode: DivisorMode,
    /// Random right gcds per `(n, degree)` in random mode.
    pub trials: u64,
    pub seed: u64,
    /// Cap on `q^degree` for exhaustive divisor scans.
    pub divisor_budget: u64,
    /// Cap on `q^k` for exact distance; larger codes are sampled.
    pub distance_budget: u64,
    /// Random codewords per code when the distance is sampled.
    pub sample_trials: u64,
    /// At most this many divisors per `(n, degree)` are evaluated.
    pub max_codes: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams {
            lengths: Vec::new(),
            degrees: Vec::new(),
            mode: DivisorMode::Exhaustive,
            trials: 10_000,
            seed: 0,
            divisor_budget: DEFAULT_EXHAUSTION_BUDGET,
            distance_budget: DEFAULT_DISTANCE_BUDGET,
            sample_trials: 100_000,
            max_codes: 5000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchResultRow {
    pub n: usize,
    pub k: usize,
    /// Exact minimum distance, or an upper bound when `exact` is false.
    pub d: usize,
    pub exact: bool,
    pub mode: DivisorMode,
    pub generator: String,
    pub seconds: f64,
    pub vs_best_known: Comparison,
}

pub fn run_search(
    ring: &Arc<SkewRing>,
    params: &SearchParams,
    reference: &ReferenceTable,
) -> Result<Vec<SearchResultRow>> {
    let order = ring.theta().order() as usize;
    if let Some(&n) = params.lengths.iter().find(|&&n| n == 0 || n % order != 0) {
        return Err(Error::LengthNotMultipleOfOrder {
            length: n,
            order: order as u32,
        });
    }
    let q = ring.field().order();
    let mut jobs = Vec::new();
    for &n in &params.lengths {
        for &degree in params.degrees.iter().filter(|&&d| d < n) {
            let query = DivisorQuery {
                trials: params.trials,
                seed: params.seed,
                budget: params.divisor_budget,
                ..DivisorQuery::new(n, degree, params.mode)
            };
            let mut divisors = query.run(ring)?;
            divisors.truncate(params.max_codes);
            jobs.extend(divisors.into_iter().map(|g| (n, g)));
        }
    }
    let mut rows: Vec<SearchResultRow> = jobs
        .par_iter()
        .map(|(n, g)| {
            let start = Instant::now();
            let code = SkewCyclicCode::new(*n, g)?;
            let k = code.dimension();
            let options = DistanceOptions {
                budget: params.distance_budget,
                target: None,
            };
            let report = match code.min_distance_exact(&options) {
                Ok(r) => r,
                Err(Error::BudgetExceeded { .. }) => {
                    code.min_distance_upper(params.sample_trials, params.seed)
                }
                Err(e) => return Err(e),
            };
            let d = report.distance;
            let vs_best_known = match reference.compare(q, *n, k, d) {
                // an upper bound cannot be said to beat anything
                Comparison::Beats if !report.exact() => Comparison::Unknown,
                c => c,
            };
            Ok(SearchResultRow {
                n: *n,
                k,
                d,
                exact: report.exact(),
                mode: params.mode,
                generator: code.generator().to_string(),
                seconds: start.elapsed().as_secs_f64(),
                vs_best_known,
            })
        })
        .collect::<Result<_>>()?;
    rows.sort_by(|a, b| {
        (a.n, a.k, std::cmp::Reverse(a.d), &a.generator).cmp(&(
            b.n,
            b.k,
            std::cmp::Reverse(b.d),
            &b.generator,
        ))
    });
    Ok(rows)
}

/// Writes the rows with a header line, also when there are none.
pub fn write_csv<W: Write>(rows: &[SearchResultRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record([
        "n",
        "k",
        "d",
        "exact",
        "mode",
        "generator",
        "seconds",
        "vs_best_known",
    ])
    .map_err(io)?;
    for row in rows {
        w.serialize(row).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::io::parse_poly;

    fn f4(power: u32) -> Arc<SkewRing> {
        SkewRing::new(Arc::new(Field::gf4()), power).unwrap()
    }

    #[test]
    fn empty_degree_range_gives_header_only() {
        let params = SearchParams {
            lengths: vec![6],
            ..SearchParams::default()
        };
        let rows = run_search(&f4(1), &params, &ReferenceTable::default()).unwrap();
        assert!(rows.is_empty());
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "n,k,d,exact,mode,generator,seconds,vs_best_known\n"
        );
    }

    #[test]
    fn rows_are_sorted_and_reparse() {
        let ring = f4(1);
        let params = SearchParams {
            lengths: vec![4, 6],
            degrees: vec![1, 2, 3],
            ..SearchParams::default()
        };
        let rows = run_search(&ring, &params, &ReferenceTable::default()).unwrap();
        assert!(!rows.is_empty());
        for w in rows.windows(2) {
            assert!((w[0].n, w[0].k) <= (w[1].n, w[1].k));
            if (w[0].n, w[0].k) == (w[1].n, w[1].k) {
                assert!(w[0].d >= w[1].d);
            }
        }
        for row in &rows {
            assert!(row.exact);
            assert!(row.d <= row.n - row.k + 1);
            let g = ring
                .poly(parse_poly(ring.field(), &row.generator, 'X').unwrap())
                .unwrap();
            assert!(crate::divisors::is_right_divisor(&g, row.n).unwrap());
            assert_eq!(g.to_string(), row.generator);
        }
    }

    #[test]
    fn rejects_bad_length() {
        let params = SearchParams {
            lengths: vec![5],
            degrees: vec![1],
            ..SearchParams::default()
        };
        assert!(run_search(&f4(1), &params, &ReferenceTable::default()).is_err());
    }
}
