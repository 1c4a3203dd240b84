// SPDX-License-Identifier: Apache-2.0

//! Minimum distance of a linear code by Gray-code enumeration of the
//! message space.
//!
//! The code is viewed as a GF(p)-space spanned by `e_j·row_i`, where `e_j`
//! runs over the coordinate basis of GF(q). In the `p`-ary modular Gray code
//! the step from counter `t - 1` to `t` increments exactly the digit at the
//! `p`-adic valuation of `t`, so each successive codeword differs from the
//! previous one by a single basis vector. The space is split by fixing the
//! top digits; every block walks the low digits independently.
//!
//! In characteristic 2 with `n <= 64` codewords are bit-sliced into `m`
//! words of 64 bits and the weight is the popcount of their union.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::{hamming_weight, SkewCyclicCode};
use crate::divisors::search_space;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Default cap on `q^k` for exhaustive enumeration.
pub const DEFAULT_DISTANCE_BUDGET: u64 = 1 << 33;

/// Above this many codewords an exhaustive run takes hours.
pub const SLOW_WARNING: u64 = 1 << 30;

/// Maximum number of fixed top digits.
const MAX_SPLIT_DIGITS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceKind {
    /// Every nonzero codeword was enumerated.
    Exact,
    /// Enumeration stopped once a codeword of weight `<= target` was found;
    /// the value is an upper bound.
    TargetReached,
    /// Minimum over random codewords; an upper bound.
    Sampled,
}

#[derive(Clone, Debug)]
pub struct DistanceReport {
    pub kind: DistanceKind,
    pub distance: usize,
    /// Number of nonzero codewords examined.
    pub enumerated: u64,
    pub elapsed: Duration,
    /// A codeword of weight `distance`.
    pub witness: Option<Vec<Elem>>,
}

impl DistanceReport {
    pub fn exact(&self) -> bool {
        self.kind == DistanceKind::Exact
    }
}

#[derive(Clone, Debug)]
pub struct DistanceOptions {
    pub budget: u64,
    /// Stop as soon as a codeword of at most this weight is found.
    pub target: Option<usize>,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            budget: DEFAULT_DISTANCE_BUDGET,
            target: None,
        }
    }
}

/// Basis of the code over the prime field: `e_j·row_i`.
fn prime_basis(code: &SkewCyclicCode) -> Vec<Vec<Elem>> {
    let f = code.ring().field();
    let mut unit = 1u32;
    let units: Vec<Elem> = (0..f.degree())
        .map(|_| {
            let e = Elem::from_packed(unit);
            unit *= f.characteristic();
            e
        })
        .collect();
    let mut basis = Vec::new();
    for row in code.generator_matrix() {
        for &u in &units {
            basis.push(row.iter().map(|&c| f.mul(u, c)).collect());
        }
    }
    basis
}

fn to_planes<const M: usize>(word: &[Elem]) -> [u64; M] {
    let mut planes = [0u64; M];
    for (i, c) in word.iter().enumerate() {
        for (j, plane) in planes.iter_mut().enumerate() {
            *plane |= (((c.packed() >> j) & 1) as u64) << i;
        }
    }
    planes
}

fn from_planes<const M: usize>(planes: &[u64; M], n: usize) -> Vec<Elem> {
    (0..n)
        .map(|i| {
            let v = (0..M).fold(0u32, |acc, j| acc | ((((planes[j] >> i) & 1) as u32) << j));
            Elem::from_packed(v)
        })
        .collect()
}

#[inline(always)]
fn plane_weight<const M: usize>(planes: &[u64; M]) -> u32 {
    planes.iter().fold(0u64, |acc, p| acc | p).count_ones()
}

/// Best weight found in a block, with the block index for deterministic
/// tie-breaking.
#[derive(Clone, Debug)]
struct BlockBest {
    weight: usize,
    block: u64,
    witness: Option<Vec<Elem>>,
    enumerated: u64,
}

impl BlockBest {
    fn none(block: u64) -> Self {
        BlockBest {
            weight: usize::MAX,
            block,
            witness: None,
            enumerated: 0,
        }
    }

    fn merge(self, other: BlockBest) -> BlockBest {
        let enumerated = self.enumerated + other.enumerated;
        let mut best = if (other.weight, other.block) < (self.weight, self.block) {
            other
        } else {
            self
        };
        best.enumerated = enumerated;
        best
    }
}

struct Walk<'a> {
    low_digits: usize,
    blocks: u64,
    stop_at: usize,
    global: &'a AtomicUsize,
}

fn walk_binary<const M: usize>(basis: &[Vec<Elem>], n: usize, walk: &Walk<'_>) -> BlockBest {
    let planes: Vec<[u64; M]> = basis.iter().map(|b| to_planes::<M>(b)).collect();
    let (low, high) = planes.split_at(walk.low_digits);
    (0..walk.blocks)
        .into_par_iter()
        .map(|block| {
            let mut best = BlockBest::none(block);
            if walk.global.load(Ordering::Relaxed) <= walk.stop_at {
                return best;
            }
            let mut cur = [0u64; M];
            for (h, b) in high.iter().enumerate() {
                if (block >> h) & 1 == 1 {
                    for j in 0..M {
                        cur[j] ^= b[j];
                    }
                }
            }
            let mut best_planes = cur;
            let mut best_w = usize::MAX;
            if block != 0 {
                best_w = plane_weight(&cur) as usize;
                best.enumerated += 1;
            }
            let steps = 1u64 << low.len();
            let mut t = 1u64;
            while t < steps {
                let b = &low[t.trailing_zeros() as usize];
                for j in 0..M {
                    cur[j] ^= b[j];
                }
                let w = plane_weight(&cur) as usize;
                if w < best_w {
                    best_w = w;
                    best_planes = cur;
                    if w <= walk.stop_at {
                        t += 1;
                        break;
                    }
                }
                t += 1;
            }
            best.enumerated += t - 1;
            if best_w != usize::MAX {
                best.weight = best_w;
                best.witness = Some(from_planes(&best_planes, n));
                walk.global.fetch_min(best_w, Ordering::Relaxed);
            }
            best
        })
        .reduce(|| BlockBest::none(u64::MAX), BlockBest::merge)
}

fn walk_generic(field: &Field, basis: &[Vec<Elem>], n: usize, walk: &Walk<'_>) -> BlockBest {
    let p = field.characteristic() as u64;
    let supports: Vec<Vec<(usize, Elem)>> = basis
        .iter()
        .map(|b| {
            b.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, &c)| (i, c))
                .collect()
        })
        .collect();
    let (low, high) = supports.split_at(walk.low_digits);
    let low_steps = p.pow(low.len() as u32);
    (0..walk.blocks)
        .into_par_iter()
        .map(|block| {
            let mut best = BlockBest::none(block);
            if walk.global.load(Ordering::Relaxed) <= walk.stop_at {
                return best;
            }
            let mut cur = vec![Elem::ZERO; n];
            let mut digits = block;
            for sup in high {
                let times = digits % p;
                digits /= p;
                for _ in 0..times {
                    for &(i, c) in sup {
                        cur[i] = field.add(cur[i], c);
                    }
                }
            }
            let mut weight = hamming_weight(&cur);
            if block != 0 {
                best.weight = weight;
                best.witness = Some(cur.clone());
                best.enumerated += 1;
            }
            let mut t = 1u64;
            while t < low_steps {
                let mut v = 0;
                let mut x = t;
                while x.is_multiple_of(p) {
                    x /= p;
                    v += 1;
                }
                for &(i, c) in &low[v] {
                    let old = cur[i];
                    let new = field.add(old, c);
                    cur[i] = new;
                    weight = weight + usize::from(!new.is_zero()) - usize::from(!old.is_zero());
                }
                if weight < best.weight {
                    best.weight = weight;
                    best.witness = Some(cur.clone());
                    if weight <= walk.stop_at {
                        t += 1;
                        break;
                    }
                }
                t += 1;
            }
            best.enumerated += t - 1;
            if best.weight != usize::MAX {
                walk.global.fetch_min(best.weight, Ordering::Relaxed);
            }
            best
        })
        .reduce(|| BlockBest::none(u64::MAX), BlockBest::merge)
}

/// Exact minimum distance over all `q^k - 1` nonzero codewords.
pub fn min_distance_exact(
    code: &SkewCyclicCode,
    options: &DistanceOptions,
) -> Result<DistanceReport> {
    let start = Instant::now();
    let field = code.ring().field();
    let n = code.length();
    let k = code.dimension();
    let required = search_space(field.order() as u64, k);
    if required > options.budget as u128 {
        return Err(Error::BudgetExceeded {
            required,
            budget: options.budget,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "the zero code has no distance".into(),
        ));
    }
    let basis = prime_basis(code);
    let digits = basis.len();
    let p = field.characteristic() as u64;
    // fix up to 8 top digits, keeping at least 12 free ones
    let high = digits.saturating_sub(12).min(MAX_SPLIT_DIGITS);
    let global = AtomicUsize::new(usize::MAX);
    let walk = Walk {
        low_digits: digits - high,
        blocks: p.pow(high as u32),
        stop_at: options.target.unwrap_or(0),
        global: &global,
    };
    let best = if p == 2 && n <= 64 {
        match field.degree() {
            1 => walk_binary::<1>(&basis, n, &walk),
            2 => walk_binary::<2>(&basis, n, &walk),
            3 => walk_binary::<3>(&basis, n, &walk),
            4 => walk_binary::<4>(&basis, n, &walk),
            5 => walk_binary::<5>(&basis, n, &walk),
            6 => walk_binary::<6>(&basis, n, &walk),
            7 => walk_binary::<7>(&basis, n, &walk),
            8 => walk_binary::<8>(&basis, n, &walk),
            9 => walk_binary::<9>(&basis, n, &walk),
            10 => walk_binary::<10>(&basis, n, &walk),
            _ => walk_generic(field, &basis, n, &walk),
        }
    } else {
        walk_generic(field, &basis, n, &walk)
    };
    let total = required as u64 - 1;
    let kind = if best.enumerated == total {
        DistanceKind::Exact
    } else {
        DistanceKind::TargetReached
    };
    Ok(DistanceReport {
        kind,
        distance: best.weight,
        enumerated: best.enumerated,
        elapsed: start.elapsed(),
        witness: best.witness,
    })
}

const SAMPLE_BLOCK: u64 = 1 << 16;

/// Minimum weight over `trials` random nonzero codewords. Falls back to exact
/// enumeration when `trials` covers the whole code.
pub fn min_distance_upper(code: &SkewCyclicCode, trials: u64, seed: u64) -> DistanceReport {
    let field = code.ring().field();
    let space = search_space(field.order() as u64, code.dimension());
    if space <= trials as u128 && space <= DEFAULT_DISTANCE_BUDGET as u128 {
        if let Ok(report) = min_distance_exact(code, &DistanceOptions::default()) {
            return report;
        }
    }
    let start = Instant::now();
    let basis = prime_basis(code);
    let n = code.length();
    let blocks = trials.div_ceil(SAMPLE_BLOCK);
    let best = if field.characteristic() == 2 && n <= 64 && field.degree() <= 4 {
        match field.degree() {
            1 => sample_binary::<1>(&basis, n, trials, seed, blocks),
            2 => sample_binary::<2>(&basis, n, trials, seed, blocks),
            3 => sample_binary::<3>(&basis, n, trials, seed, blocks),
            _ => sample_binary::<4>(&basis, n, trials, seed, blocks),
        }
    } else {
        sample_generic(code, trials, seed, blocks)
    };
    DistanceReport {
        kind: DistanceKind::Sampled,
        distance: best.weight,
        enumerated: best.enumerated,
        elapsed: start.elapsed(),
        witness: best.witness,
    }
}

fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

fn sample_binary<const M: usize>(
    basis: &[Vec<Elem>],
    n: usize,
    trials: u64,
    seed: u64,
    blocks: u64,
) -> BlockBest {
    let planes: Vec<[u64; M]> = basis.iter().map(|b| to_planes::<M>(b)).collect();
    (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = block_rng(seed, block);
            let todo = SAMPLE_BLOCK.min(trials - block * SAMPLE_BLOCK);
            let mut best = BlockBest::none(block);
            let mut best_planes = [0u64; M];
            let mut done = 0;
            while done < todo {
                let mut cur = [0u64; M];
                let mut any = false;
                for chunk in planes.chunks(64) {
                    let mut bits: u64 = rng.random();
                    if chunk.len() < 64 {
                        bits &= (1u64 << chunk.len()) - 1;
                    }
                    while bits != 0 {
                        let b = &chunk[bits.trailing_zeros() as usize];
                        for j in 0..M {
                            cur[j] ^= b[j];
                        }
                        bits &= bits - 1;
                        any = true;
                    }
                }
                if !any {
                    continue;
                }
                done += 1;
                let w = plane_weight(&cur) as usize;
                if w < best.weight {
                    best.weight = w;
                    best_planes = cur;
                }
            }
            best.enumerated = done;
            if best.weight != usize::MAX {
                best.witness = Some(from_planes(&best_planes, n));
            }
            best
        })
        .reduce(|| BlockBest::none(u64::MAX), BlockBest::merge)
}

fn sample_generic(code: &SkewCyclicCode, trials: u64, seed: u64, blocks: u64) -> BlockBest {
    let field = code.ring().field();
    let q = field.order();
    let k = code.dimension();
    (0..blocks)
        .into_par_iter()
        .map(|block| {
            let mut rng = block_rng(seed, block);
            let todo = SAMPLE_BLOCK.min(trials - block * SAMPLE_BLOCK);
            let mut best = BlockBest::none(block);
            let mut done = 0;
            while done < todo {
                let msg: Vec<Elem> = (0..k)
                    .map(|_| Elem::from_packed(rng.random_range(0..q)))
                    .collect();
                if msg.iter().all(|m| m.is_zero()) {
                    continue;
                }
                done += 1;
                let word = code.encode(&msg).expect("message length is k");
                let w = hamming_weight(&word);
                if w < best.weight {
                    best.weight = w;
                    best.witness = Some(word);
                }
            }
            best.enumerated = done;
            best
        })
        .reduce(|| BlockBest::none(u64::MAX), BlockBest::merge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::skew::SkewRing;
    use std::sync::Arc;

    /// Plain enumeration of all messages, independent of the Gray walk.
    fn brute_force(code: &SkewCyclicCode) -> usize {
        let q = code.ring().field().order() as u64;
        let k = code.dimension();
        let mut best = usize::MAX;
        for idx in 1..q.pow(k as u32) {
            let mut v = idx;
            let msg: Vec<Elem> = (0..k)
                .map(|_| {
                    let e = Elem::from_packed((v % q) as u32);
                    v /= q;
                    e
                })
                .collect();
            best = best.min(hamming_weight(&code.encode(&msg).unwrap()));
        }
        best
    }

    #[test]
    fn repetition_code_over_f4() {
        let r = SkewRing::new(Arc::new(Field::gf4()), 1).unwrap();
        let code = SkewCyclicCode::new(2, &r.linear(Elem::ONE)).unwrap();
        let rep = code
            .min_distance_exact(&DistanceOptions::default())
            .unwrap();
        assert_eq!(rep.distance, 2);
        assert_eq!(brute_force(&code), 2);
        assert!(rep.exact());
        assert_eq!(rep.enumerated, 3);
        let full = SkewCyclicCode::new(4, &r.one()).unwrap();
        assert_eq!(
            full.min_distance_exact(&DistanceOptions::default())
                .unwrap()
                .distance,
            1
        );
    }

    #[test]
    fn gray_walk_matches_brute_force() {
        for (field, power, n) in [
            (Field::gf4(), 1, 6),
            (Field::gf9(), 1, 4),
            (Field::gf4(), 0, 5),
        ] {
            let r = SkewRing::new(Arc::new(field), power).unwrap();
            for d in 1..n {
                let divs = crate::divisors::enumerate_right_divisors(&r, n, d, 1 << 16).unwrap();
                for g in divs.iter().take(6) {
                    let code = SkewCyclicCode::new(n, g).unwrap();
                    let rep = code
                        .min_distance_exact(&DistanceOptions::default())
                        .unwrap();
                    assert_eq!(rep.distance, brute_force(&code), "{g}");
                    let w = rep.witness.unwrap();
                    assert_eq!(hamming_weight(&w), rep.distance);
                    assert!(code.is_codeword(&w).unwrap());
                }
            }
        }
    }

    #[test]
    fn budget_and_sampling() {
        let r = SkewRing::new(Arc::new(Field::gf4()), 1).unwrap();
        let code = SkewCyclicCode::new(6, &r.one()).unwrap();
        let tight = DistanceOptions {
            budget: 100,
            target: None,
        };
        assert!(matches!(
            code.min_distance_exact(&tight),
            Err(Error::BudgetExceeded { .. })
        ));
        let sampled = code.min_distance_upper(100, 3);
        assert_eq!(sampled.kind, DistanceKind::Sampled);
        assert!(sampled.distance >= 1);
        let covered = code.min_distance_upper(5000, 3);
        assert!(covered.exact());
        assert_eq!(covered.distance, 1);
    }
}
