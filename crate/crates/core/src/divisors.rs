// SPDX-License-Identifier: Apache-2.0

//! Monic right divisors of `X^n - 1`: the generator polynomials of θ-cyclic
//! codes of length `n`.
//!
//! Three strategies are available. Exhaustive scanning is ground truth at
//! small sizes; random right gcds with `X^n - 1` scale further but only find
//! what they happen to hit; peeling linear right factors finds the divisors
//! that split completely.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Elem;
use crate::skew::{trim, SkewPoly, SkewRing};

/// Default cap on `q^d` for exhaustive scans.
pub const DEFAULT_EXHAUSTION_BUDGET: u64 = 1 << 24;

const SAMPLE_BLOCK: u64 = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DivisorMode {
    Exhaustive,
    Random,
    Dfs,
}

impl fmt::Display for DivisorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DivisorMode::Exhaustive => "exhaustive",
            DivisorMode::Random => "random",
            DivisorMode::Dfs => "dfs",
        })
    }
}

impl FromStr for DivisorMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(DivisorMode::Exhaustive),
            "random" | "random-rgcd" => Ok(DivisorMode::Random),
            "dfs" | "linear-dfs" => Ok(DivisorMode::Dfs),
            _ => Err(Error::InvalidParameter(format!(
                "unknown divisor mode {s:?}"
            ))),
        }
    }
}

/// A request for the monic right divisors of `X^n - 1` of one degree.
#[derive(Clone, Debug)]
pub struct DivisorQuery {
    pub n: usize,
    pub degree: usize,
    pub mode: DivisorMode,
    pub trials: u64,
    pub seed: u64,
    pub budget: u64,
}

impl DivisorQuery {
    pub fn new(n: usize, degree: usize, mode: DivisorMode) -> Self {
        DivisorQuery {
            n,
            degree,
            mode,
            trials: 10_000,
            seed: 0,
            budget: DEFAULT_EXHAUSTION_BUDGET,
        }
    }

    pub fn validate(&self, ring: &SkewRing) -> Result<()> {
        if self.degree > self.n || self.n == 0 {
            return Err(Error::InvalidParameter(format!(
                "need 0 <= degree <= n and n >= 1, got degree {} and n {}",
                self.degree, self.n
            )));
        }
        let order = ring.theta().order();
        if !self.n.is_multiple_of(order as usize) {
            return Err(Error::LengthNotMultipleOfOrder {
                length: self.n,
                order,
            });
        }
        Ok(())
    }

    pub fn run(&self, ring: &Arc<SkewRing>) -> Result<Vec<SkewPoly>> {
        self.validate(ring)?;
        match self.mode {
            DivisorMode::Exhaustive => {
                enumerate_right_divisors(ring, self.n, self.degree, self.budget)
            }
            DivisorMode::Random => Ok(sample_right_divisors(
                ring,
                self.n,
                self.degree,
                self.trials,
                self.seed,
            )),
            DivisorMode::Dfs => Ok(dfs_split_divisors(ring, self.n, self.degree)
                .into_iter()
                .filter(|g| g.degree() == Some(self.degree))
                .collect()),
        }
    }
}

/// Whether `g` right-divides `X^n - 1`.
pub fn is_right_divisor(g: &SkewPoly, n: usize) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(g.ring().divides_xn_minus_1_monic(n, g.monic().coeffs()))
}

/// All `β` with `X - β` a right factor of `f`.
pub fn linear_right_factors(f: &SkewPoly) -> Vec<Elem> {
    let ring = f.ring();
    ring.field()
        .elements()
        .filter(|&b| ring.eval_rem_linear_raw(f.coeffs(), b).is_zero())
        .collect()
}

fn canonical(ring: &Arc<SkewRing>, set: BTreeSet<Vec<Elem>>) -> Vec<SkewPoly> {
    set.into_iter()
        .map(|c| SkewPoly::from_raw(ring.clone(), c))
        .collect()
}

/// Scans all `q^d` monic polynomials of degree `d`.
pub fn enumerate_right_divisors(
    ring: &Arc<SkewRing>,
    n: usize,
    d: usize,
    budget: u64,
) -> Result<Vec<SkewPoly>> {
    if d > n {
        return Ok(Vec::new());
    }
    if d == n {
        return Ok(vec![ring.xn_minus_1(n)]);
    }
    let q = ring.field().order() as u64;
    let count = search_space(q, d);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: count,
            budget,
        });
    }
    let count = count as u64;
    let found: Vec<Vec<Elem>> = (0..count)
        .into_par_iter()
        .map_init(
            || vec![Elem::ZERO; d + 1],
            |cand, idx| {
                let mut v = idx;
                for c in cand[..d].iter_mut() {
                    *c = Elem::from_packed((v % q) as u32);
                    v /= q;
                }
                cand[d] = Elem::ONE;
                ring.divides_xn_minus_1_monic(n, cand).then(|| cand.clone())
            },
        )
        .flatten()
        .collect();
    Ok(canonical(ring, found.into_iter().collect()))
}

/// Right gcds of `X^n - 1` with uniformly random polynomials of degree
/// `< n`, keeping those of degree `d`. Deterministic for a given seed.
pub fn sample_right_divisors(
    ring: &Arc<SkewRing>,
    n: usize,
    d: usize,
    trials: u64,
    seed: u64,
) -> Vec<SkewPoly> {
    let q = ring.field().order();
    let modulus = ring.xn_minus_1(n);
    let blocks = trials.div_ceil(SAMPLE_BLOCK);
    let found: BTreeSet<Vec<Elem>> = (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(block);
            let todo = SAMPLE_BLOCK.min(trials - block * SAMPLE_BLOCK);
            let mut local = BTreeSet::new();
            for _ in 0..todo {
                let mut r: Vec<Elem> = (0..n)
                    .map(|_| Elem::from_packed(rng.random_range(0..q)))
                    .collect();
                trim(&mut r);
                if r.is_empty() {
                    continue;
                }
                let mut a = modulus.coeffs().to_vec();
                let mut b = r;
                while !b.is_empty() {
                    let (_, rem) = ring.right_divmod_raw(&a, &b);
                    a = std::mem::replace(&mut b, rem);
                }
                if a.len() == d + 1 {
                    ring.monic_raw(&mut a);
                    local.insert(a);
                }
            }
            local
        })
        .reduce(BTreeSet::new, |mut a, b| {
            a.extend(b);
            a
        });
    canonical(ring, found)
}

/// Divisors obtained by repeatedly peeling linear right factors off the
/// cofactor of `X^n - 1`, of every degree up to `d_max`. Includes `1`.
pub fn dfs_split_divisors(ring: &Arc<SkewRing>, n: usize, d_max: usize) -> Vec<SkewPoly> {
    let one = vec![Elem::ONE];
    let mut all: BTreeSet<Vec<Elem>> = BTreeSet::new();
    all.insert(one.clone());
    // (divisor, cofactor) with X^n - 1 = cofactor · divisor
    let mut level: Vec<(Vec<Elem>, Vec<Elem>)> = vec![(one, ring.xn_minus_1(n).into_coeffs())];
    for _ in 0..d_max.min(n) {
        let next: BTreeSet<(Vec<Elem>, Vec<Elem>)> = level
            .par_iter()
            .flat_map_iter(|(div, cof)| {
                let roots: Vec<Elem> = ring
                    .field()
                    .elements()
                    .filter(|&b| ring.eval_rem_linear_raw(cof, b).is_zero())
                    .collect();
                roots.into_iter().map(move |beta| {
                    let lin = vec![ring.field().neg(beta), Elem::ONE];
                    let (new_cof, rem) = ring.right_divmod_raw(cof, &lin);
                    debug_assert!(rem.is_empty());
                    (ring.mul_raw(&lin, div), new_cof)
                })
            })
            .collect();
        if next.is_empty() {
            break;
        }
        level = next.into_iter().collect();
        all.extend(level.iter().map(|(d, _)| d.clone()));
    }
    canonical(ring, all)
}

/// `q^d`, saturating.
pub(crate) fn search_space(q: u64, d: usize) -> u128 {
    (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX)
}

/// Number of monic right divisors per degree, from an exhaustive scan.
pub fn divisor_counts(ring: &Arc<SkewRing>, n: usize, budget: u64) -> Result<Vec<usize>> {
    (0..=n)
        .map(|d| enumerate_right_divisors(ring, n, d, budget).map(|v| v.len()))
        .collect()
}
