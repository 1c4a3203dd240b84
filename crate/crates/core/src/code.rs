// SPDX-License-Identifier: Apache-2.0

//! θ-cyclic codes: the left ideal generated by a right divisor `G` of
//! `X^n - 1` in `GF(q)[X; θ]/(X^n - 1)`.

use std::sync::Arc;

use crate::distance::{self, DistanceOptions, DistanceReport};
use crate::error::{Error, Result};
use crate::field::{Automorphism, Elem};
use crate::skew::{SkewPoly, SkewRing};

#[derive(Clone, Debug)]
pub struct SkewCyclicCode {
    ring: Arc<SkewRing>,
    n: usize,
    generator: SkewPoly,
    /// Row `i` is `X^i·G`, `i < k`.
    matrix: Vec<Vec<Elem>>,
}

impl SkewCyclicCode {
    /// Builds the code of length `n` generated by `generator`, which is made
    /// monic first.
    pub fn new(n: usize, generator: &SkewPoly) -> Result<Self> {
        let ring = generator.ring().clone();
        let order = ring.theta().order();
        if n == 0 || !n.is_multiple_of(order as usize) {
            return Err(Error::LengthNotMultipleOfOrder { length: n, order });
        }
        let deg = generator
            .degree()
            .ok_or_else(|| Error::InvalidGenerator("zero polynomial".into()))?;
        if deg >= n {
            return Err(Error::InvalidGenerator(format!(
                "degree {deg} leaves no message symbols at length {n}"
            )));
        }
        let g = generator.monic();
        let (_, rem) = ring.xn_minus_1(n).right_divmod(&g)?;
        if !rem.is_zero() {
            return Err(Error::NotRightDivisor {
                n,
                remainder: rem.to_string(),
            });
        }
        let k = n - deg;
        let matrix = (0..k)
            .map(|i| (&ring.monomial(Elem::ONE, i) * &g).to_vector(n))
            .collect();
        Ok(SkewCyclicCode {
            ring,
            n,
            generator: g,
            matrix,
        })
    }

    pub fn ring(&self) -> &Arc<SkewRing> {
        &self.ring
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.matrix.len()
    }

    pub fn generator(&self) -> &SkewPoly {
        &self.generator
    }

    /// `k × n` generator matrix, rows `X^i·G`.
    pub fn generator_matrix(&self) -> &[Vec<Elem>] {
        &self.matrix
    }

    pub fn word_to_poly(&self, word: &[Elem]) -> Result<SkewPoly> {
        self.check_len(word)?;
        self.ring.poly(word.to_vec())
    }

    pub fn poly_to_word(&self, poly: &SkewPoly) -> Result<Vec<Elem>> {
        let reduced = poly.mod_xn_minus_1(self.n)?;
        Ok(reduced.to_vector(self.n))
    }

    fn check_len(&self, word: &[Elem]) -> Result<()> {
        if word.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: word.len(),
            });
        }
        Ok(())
    }

    /// `message × generator matrix`, i.e. `(Σ m_i X^i)·G`.
    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.dimension() {
            return Err(Error::LengthMismatch {
                expected: self.dimension(),
                actual: message.len(),
            });
        }
        let f = self.ring.field();
        let mut word = vec![Elem::ZERO; self.n];
        for (&m, row) in message.iter().zip(&self.matrix) {
            if m.is_zero() {
                continue;
            }
            for (w, &r) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(m, r));
            }
        }
        Ok(word)
    }

    pub fn is_codeword(&self, word: &[Elem]) -> Result<bool> {
        self.check_len(word)?;
        let (_, rem) = self.ring.right_divmod_raw(word, self.generator.coeffs());
        Ok(rem.is_empty())
    }

    pub fn theta_shift(&self, word: &[Elem]) -> Vec<Elem> {
        theta_shift(self.ring.theta(), word)
    }

    /// The rows `α_i^s = α^((2^i - 1)s)`, `s = 1..d-1`, of the check matrix
    /// given by the linear right factors `X - α^s` of a skew-BCH generator.
    pub fn check_matrix_h1(&self, d: usize) -> Result<Vec<Vec<Elem>>> {
        crate::bch::check_setting(&self.ring, self.n)?;
        let f = self.ring.field();
        for s in 1..d {
            if !self
                .generator
                .eval_rem_linear(f.alpha_pow(s as i64))
                .is_zero()
            {
                return Err(Error::DecoderSetting(format!(
                    "X - a^{s} does not right-divide the generator"
                )));
            }
        }
        let q1 = (f.order() - 1) as u64;
        Ok((1..d as u64)
            .map(|s| {
                (0..self.n)
                    .map(|i| {
                        let e = ((1u64 << i) - 1) % q1 * s % q1;
                        f.alpha_pow(e as i64)
                    })
                    .collect()
            })
            .collect())
    }

    pub fn min_distance_exact(&self, options: &DistanceOptions) -> Result<DistanceReport> {
        distance::min_distance_exact(self, options)
    }

    pub fn min_distance_upper(&self, trials: u64, seed: u64) -> DistanceReport {
        distance::min_distance_upper(self, trials, seed)
    }
}

/// `(a_0, ..., a_{n-1}) ↦ (θ(a_{n-1}), θ(a_0), ..., θ(a_{n-2}))`.
pub fn theta_shift(theta: &Automorphism, word: &[Elem]) -> Vec<Elem> {
    let n = word.len();
    (0..n).map(|i| theta.apply(word[(i + n - 1) % n])).collect()
}

pub fn hamming_weight(word: &[Elem]) -> usize {
    word.iter().filter(|c| !c.is_zero()).count()
}
