// SPDX-License-Identifier: Apache-2.0

//! Skew-BCH codes over GF(2^n) with `θ(α) = α^2`, and their decoder.
//!
//! By the remainder formula for `X - β`, the syndromes of a received word
//! are evaluations of the commutative polynomial `ẽ(z) = Σ e_i z^(2^i - 1)`
//! at `α, ..., α^(d-1)`. Decoding therefore follows the classical BCH
//! pipeline with locators `α^(2^i - 1)`: Euclid on the key equation, root
//! search, magnitudes from the evaluator, then recovery of the positions
//! `i` from the locator exponents and a right-division check of each
//! candidate error.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::code::SkewCyclicCode;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::skew::{SkewPoly, SkewRing};
use crate::tilde::TildePoly;

/// Upper bound on the number of candidate errors tried in one decode.
const MAX_CANDIDATES: usize = 1 << 20;

/// The decoder needs `q = 2^n`, `n` even and `θ` the squaring Frobenius.
pub(crate) fn check_setting(ring: &SkewRing, n: usize) -> Result<()> {
    let f = ring.field();
    if f.characteristic() != 2 {
        return Err(Error::DecoderSetting("characteristic must be 2".into()));
    }
    if f.degree() as usize != n {
        return Err(Error::DecoderSetting(format!(
            "length {n} must equal the extension degree {}",
            f.degree()
        )));
    }
    if !n.is_multiple_of(2) {
        return Err(Error::DecoderSetting(format!("length {n} must be even")));
    }
    if ring.theta().power() != 1 {
        return Err(Error::DecoderSetting(
            "θ must be the squaring Frobenius".into(),
        ));
    }
    Ok(())
}

/// `lclm(X - α, X - α^2, ..., X - α^(d-1))`.
pub fn bch_generator(ring: &Arc<SkewRing>, n: usize, d: usize) -> Result<SkewPoly> {
    check_setting(ring, n)?;
    if d < 2 || d > n + 1 {
        return Err(Error::InvalidParameter(format!(
            "designed distance {d} outside [2, {}]",
            n + 1
        )));
    }
    let f = ring.field();
    let mut g = ring.linear(f.alpha_pow(1));
    for k in 2..d {
        g = g.lclm(&ring.linear(f.alpha_pow(k as i64)))?;
    }
    let (_, rem) = ring.xn_minus_1(n).right_divmod(&g)?;
    if !rem.is_zero() {
        return Err(Error::NotRightDivisor {
            n,
            remainder: rem.to_string(),
        });
    }
    Ok(g)
}

/// `S_d(z) = Σ_{k=1}^{d-1} Rem(b, X - α^k) z^(k-1)`.
pub fn syndrome(b: &SkewPoly, d: usize) -> TildePoly {
    let f = b.ring().field();
    let coeffs: Vec<Elem> = (1..d)
        .map(|k| b.eval_rem_linear(f.alpha_pow(k as i64)))
        .collect();
    TildePoly::from_dense(f.clone(), &coeffs)
}

/// One row of the Euclid table: `U·S_d + V·z^(d-1) = r`.
#[derive(Clone, Debug)]
pub struct EuclidRow {
    pub quotient: Option<TildePoly>,
    pub r: TildePoly,
    pub u: TildePoly,
    pub v: TildePoly,
}

/// The full Euclid run on `(z^(d-1), S_d)` and its normalized output.
#[derive(Clone, Debug)]
pub struct KeyEquationState {
    /// Rows for `i = -1, 0, 1, ..., stop`.
    pub rows: Vec<EuclidRow>,
    /// The index `k` at which Euclid stopped.
    pub stop: usize,
    /// Pseudo-locator `σ = U_k / U_k(0)`.
    pub sigma: TildePoly,
    /// Evaluator `w = r_k / U_k(0)`.
    pub omega: TildePoly,
}

impl KeyEquationState {
    pub fn final_row(&self) -> &EuclidRow {
        self.rows.last().expect("at least two rows")
    }
}

/// Runs Euclid on `z^(d-1)` and `S_d` until `deg r_k < t`.
pub fn key_equation_solve(syndrome: &TildePoly, d: usize, t: usize) -> Result<KeyEquationState> {
    let f = syndrome.field().clone();
    if syndrome.is_zero() {
        return Err(Error::KeyEquation("zero syndrome".into()));
    }
    let zero = TildePoly::zero(f.clone());
    let one = TildePoly::constant(f.clone(), Elem::ONE);
    let mut rows = vec![
        EuclidRow {
            quotient: None,
            r: TildePoly::monomial(f.clone(), Elem::ONE, (d - 1) as u64),
            u: zero.clone(),
            v: one.clone(),
        },
        EuclidRow {
            quotient: None,
            r: syndrome.clone(),
            u: one,
            v: zero,
        },
    ];
    let below_t = |r: &TildePoly| r.degree().is_none_or(|deg| deg < t as u64);
    while !below_t(&rows[rows.len() - 1].r) {
        let prev = &rows[rows.len() - 2];
        let cur = &rows[rows.len() - 1];
        let (q, r) = prev.r.divmod(&cur.r)?;
        let u = prev.u.sub(&q.mul(&cur.u));
        let v = prev.v.sub(&q.mul(&cur.v));
        rows.push(EuclidRow {
            quotient: Some(q),
            r,
            u,
            v,
        });
    }
    let last = &rows[rows.len() - 1];
    let u0 = last.u.coeff(0);
    if u0.is_zero() {
        return Err(Error::KeyEquation("U_k(0) = 0".into()));
    }
    let inv = f.inv_nonzero(u0);
    let sigma = last.u.scale(inv);
    let omega = last.r.scale(inv);
    Ok(KeyEquationState {
        stop: rows.len() - 2,
        rows,
        sigma,
        omega,
    })
}

/// Roots `ρ` of `σ` among the nonzero elements, as `j = -log ρ mod (q-1)`,
/// ascending.
pub fn locate(sigma: &TildePoly) -> Result<Vec<u32>> {
    let f = sigma.field();
    let q1 = f.order() - 1;
    let mut js: Vec<u32> = f
        .elements()
        .skip(1)
        .filter(|&rho| sigma.eval(rho).is_zero())
        .map(|rho| (q1 - f.log_raw(rho)) % q1)
        .collect();
    js.sort_unstable();
    let deg = sigma.degree().unwrap_or(0) as usize;
    if sigma.is_zero() || js.len() != deg {
        return Err(Error::Locator(format!(
            "σ of degree {deg} has {} distinct nonzero roots",
            js.len()
        )));
    }
    Ok(js)
}

/// `e_k = α^(-j_k) w(α^(-j_k)) / Π_{l≠k} (1 - α^(j_l - j_k))`.
pub fn magnitudes(omega: &TildePoly, js: &[u32]) -> Result<Vec<Elem>> {
    let f = omega.field();
    js.iter()
        .enumerate()
        .map(|(k, &jk)| {
            let x = f.alpha_pow(-(jk as i64));
            let num = f.mul(x, omega.eval(x));
            let den =
                js.iter()
                    .enumerate()
                    .filter(|&(l, _)| l != k)
                    .fold(Elem::ONE, |acc, (_, &jl)| {
                        let term = f.sub(Elem::ONE, f.alpha_pow(jl as i64 - jk as i64));
                        f.mul(acc, term)
                    });
            f.div(num, den)
                .map_err(|_| Error::Locator(format!("repeated locator exponent {jk}")))
        })
        .collect()
}

/// Positions `i < n` consistent with a locator exponent `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionCandidates {
    /// `2^i - 1 ≡ j (mod n)`.
    pub congruence: Vec<usize>,
    /// `2^i - 1 ≡ j (mod q - 1)`; a subset of `congruence`.
    pub refined: Vec<usize>,
}

fn pow2_mod(i: usize, m: u64) -> u64 {
    let mut acc = 1 % m;
    for _ in 0..i {
        acc = acc * 2 % m;
    }
    acc
}

pub fn position_candidates(j: u32, n: usize, q: u32) -> Result<PositionCandidates> {
    let nn = n as u64;
    let q1 = (q - 1) as u64;
    let congruence: Vec<usize> = (0..n)
        .filter(|&i| (pow2_mod(i, nn) + nn - 1) % nn == j as u64 % nn)
        .collect();
    if congruence.is_empty() {
        return Err(Error::Uncorrectable(format!(
            "no position i with 2^i - 1 ≡ {j} (mod {n})"
        )));
    }
    let refined = congruence
        .iter()
        .copied()
        .filter(|&i| (pow2_mod(i, q1) + q1 - 1) % q1 == j as u64 % q1)
        .collect();
    Ok(PositionCandidates {
        congruence,
        refined,
    })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DecodeStrategy {
    /// Try the positions determined modulo `q - 1` first, then fall back to
    /// the full congruence list.
    #[default]
    Refined,
    /// Trial-divide every candidate from the congruences modulo `n`.
    Congruence,
}

#[derive(Clone, Debug)]
pub struct DecodeResult {
    pub error: SkewPoly,
    pub corrected: SkewPoly,
    /// Candidate errors from the congruences modulo `n`.
    pub candidates: Vec<SkewPoly>,
    /// Candidates actually checked with a right division, in order.
    pub trialed: Vec<SkewPoly>,
    pub division_tests: usize,
    pub key_equation: Option<KeyEquationState>,
    pub locators: Vec<u32>,
    pub magnitudes: Vec<Elem>,
}

/// A skew-BCH code: a θ-cyclic code whose generator has the right factors
/// `X - α^k` for `k = 1..d-1`.
#[derive(Clone, Debug)]
pub struct SkewBchCode {
    code: SkewCyclicCode,
    designed: usize,
}

impl SkewBchCode {
    /// Builds the generator `lclm(X - α^k)` over the given field, `n = m`.
    pub fn new(field: Arc<Field>, d: usize) -> Result<Self> {
        let n = field.degree() as usize;
        let ring = SkewRing::new(field, 1)?;
        let g = bch_generator(&ring, n, d)?;
        Self::from_code(SkewCyclicCode::new(n, &g)?, d)
    }

    /// Wraps an existing code after checking the decoder setting and the
    /// linear right factors of its generator.
    pub fn from_code(code: SkewCyclicCode, d: usize) -> Result<Self> {
        check_setting(code.ring(), code.length())?;
        if d < 2 {
            return Err(Error::InvalidParameter(
                "designed distance must be >= 2".into(),
            ));
        }
        let f = code.ring().field();
        for k in 1..d {
            if !code
                .generator()
                .eval_rem_linear(f.alpha_pow(k as i64))
                .is_zero()
            {
                return Err(Error::DecoderSetting(format!(
                    "X - a^{k} does not right-divide the generator"
                )));
            }
        }
        Ok(SkewBchCode { code, designed: d })
    }

    pub fn code(&self) -> &SkewCyclicCode {
        &self.code
    }

    pub fn designed_distance(&self) -> usize {
        self.designed
    }

    /// Correction capacity `⌊(d-1)/2⌋`.
    pub fn t(&self) -> usize {
        (self.designed - 1) / 2
    }

    pub fn decode(&self, received: &[Elem]) -> Result<DecodeResult> {
        self.decode_with(received, DecodeStrategy::default())
    }

    pub fn decode_with(&self, received: &[Elem], strategy: DecodeStrategy) -> Result<DecodeResult> {
        let code = &self.code;
        let ring = code.ring();
        let field = ring.field();
        let n = code.length();
        let b = code.word_to_poly(received)?;
        let s = syndrome(&b, self.designed);
        if s.is_zero() {
            return Ok(DecodeResult {
                error: ring.zero(),
                corrected: b,
                candidates: Vec::new(),
                trialed: Vec::new(),
                division_tests: 0,
                key_equation: None,
                locators: Vec::new(),
                magnitudes: Vec::new(),
            });
        }
        let state = key_equation_solve(&s, self.designed, self.t())?;
        let js = locate(&state.sigma)?;
        if js.len() > self.t() {
            return Err(Error::Uncorrectable(format!(
                "{} errors located, capacity is {}",
                js.len(),
                self.t()
            )));
        }
        let mags = magnitudes(&state.omega, &js)?;
        if mags.iter().any(|m| m.is_zero()) {
            return Err(Error::Uncorrectable("zero error magnitude".into()));
        }
        let positions: Vec<PositionCandidates> = js
            .iter()
            .map(|&j| position_candidates(j, n, field.order()))
            .collect::<Result<_>>()?;

        let build = |choice: &[usize]| -> SkewPoly {
            let mut e = vec![Elem::ZERO; n];
            for (&i, &m) in choice.iter().zip(&mags) {
                e[i] = m;
            }
            SkewPoly::from_raw(ring.clone(), e)
        };
        let congruence_sets: Vec<&[usize]> =
            positions.iter().map(|p| p.congruence.as_slice()).collect();
        let candidates: Vec<SkewPoly> = cartesian(&congruence_sets)?
            .iter()
            .map(|c| build(c))
            .collect();

        let mut trialed = Vec::new();
        let mut survivors = Vec::new();
        let test = |e: &SkewPoly,
                    trialed: &mut Vec<SkewPoly>,
                    survivors: &mut Vec<(SkewPoly, SkewPoly)>|
         -> Result<()> {
            let corrected = b.try_sub(e)?;
            let ok = code.is_codeword(&corrected.to_vector(n))?;
            trialed.push(e.clone());
            if ok {
                survivors.push((e.clone(), corrected));
            }
            Ok(())
        };
        if strategy == DecodeStrategy::Refined && positions.iter().all(|p| !p.refined.is_empty()) {
            let refined_sets: Vec<&[usize]> =
                positions.iter().map(|p| p.refined.as_slice()).collect();
            for choice in cartesian(&refined_sets)? {
                test(&build(&choice), &mut trialed, &mut survivors)?;
            }
        }
        if survivors.is_empty() {
            let already = trialed.clone();
            for e in candidates.iter().filter(|e| !already.contains(e)) {
                test(e, &mut trialed, &mut survivors)?;
            }
        }
        let (error, corrected) = match survivors.len() {
            0 => {
                return Err(Error::Uncorrectable(format!(
                    "none of {} candidate errors yields a codeword",
                    trialed.len()
                )))
            }
            1 => survivors.pop().expect("one survivor"),
            k => return Err(Error::AmbiguousDecoding(k)),
        };
        Ok(DecodeResult {
            error,
            corrected,
            candidates,
            division_tests: trialed.len(),
            trialed,
            key_equation: Some(state),
            locators: js,
            magnitudes: mags,
        })
    }
}

/// All choices of one entry per set with pairwise distinct entries.
fn cartesian(sets: &[&[usize]]) -> Result<Vec<Vec<usize>>> {
    let total = sets
        .iter()
        .try_fold(1usize, |acc, s| acc.checked_mul(s.len()));
    if total.is_none_or(|t| t > MAX_CANDIDATES) {
        return Err(Error::Uncorrectable("too many candidate errors".into()));
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new()];
    for set in sets {
        let mut next = Vec::with_capacity(out.len() * set.len());
        for prefix in &out {
            for &i in set.iter().filter(|i| !prefix.contains(i)) {
                let mut v = prefix.clone();
                v.push(i);
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

/// Outcome of a batch of random encode/corrupt/decode trials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundtripReport {
    pub trials: u64,
    pub successes: u64,
    /// `(trial index, reason)` for every failed trial.
    pub failures: Vec<(u64, String)>,
}

/// Random codeword plus a random error of weight `0..=max_errors`, decoded
/// and compared. Trial `i` draws from its own stream of the seeded generator.
pub fn roundtrip(code: &SkewBchCode, trials: u64, max_errors: usize, seed: u64) -> RoundtripReport {
    let inner = code.code();
    let field = inner.ring().field();
    let (n, k, q) = (inner.length(), inner.dimension(), field.order());
    let failures: Vec<(u64, String)> = (0..trials)
        .into_par_iter()
        .filter_map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(trial);
            let msg: Vec<Elem> = (0..k)
                .map(|_| Elem::from_packed(rng.random_range(0..q)))
                .collect();
            let word = inner.encode(&msg).expect("message of length k");
            let weight = rng.random_range(0..=max_errors.min(n));
            let mut positions: Vec<usize> = (0..n).collect();
            for i in 0..weight {
                let j = rng.random_range(i..n);
                positions.swap(i, j);
            }
            let mut received = word.clone();
            for &i in &positions[..weight] {
                let e = Elem::from_packed(rng.random_range(1..q));
                received[i] = field.add(received[i], e);
            }
            match code.decode(&received) {
                Ok(res) if res.corrected.to_vector(n) == word => None,
                Ok(res) => Some((
                    trial,
                    format!("decoded to a different word ({})", res.error),
                )),
                Err(e) => Some((trial, e.to_string())),
            }
        })
        .collect();
    RoundtripReport {
        trials,
        successes: trials - failures.len() as u64,
        failures,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_for_length_ten() {
        let p = position_candidates(0, 10, 1024).unwrap();
        assert_eq!(p.congruence, vec![0]);
        assert_eq!(p.refined, vec![0]);
        let p = position_candidates(511, 10, 1024).unwrap();
        assert_eq!(p.congruence, vec![1, 5, 9]);
        assert_eq!(p.refined, vec![9]);
        let p = position_candidates(255, 10, 1024).unwrap();
        assert_eq!(p.congruence, vec![4, 8]);
        assert_eq!(p.refined, vec![8]);
        // 2^i - 1 is never ≡ 2 (mod 10)
        assert!(position_candidates(2, 10, 1024).is_err());
    }

    #[test]
    fn setting_is_checked() {
        let f4 = Arc::new(Field::gf4());
        let r = SkewRing::new(f4.clone(), 1).unwrap();
        assert!(bch_generator(&r, 2, 2).is_ok());
        assert!(bch_generator(&r, 4, 2).is_err());
        let id = SkewRing::new(f4, 0).unwrap();
        assert!(matches!(
            bch_generator(&id, 2, 2),
            Err(Error::DecoderSetting(_))
        ));
        let f9 = Arc::new(Field::gf9());
        let r9 = SkewRing::new(f9, 1).unwrap();
        assert!(matches!(
            bch_generator(&r9, 2, 2),
            Err(Error::DecoderSetting(_))
        ));
    }

    #[test]
    fn d2_generator_is_linear() {
        let f = Arc::new(Field::gf1024());
        let r = SkewRing::new(f.clone(), 1).unwrap();
        assert_eq!(bch_generator(&r, 10, 2).unwrap(), r.linear(f.alpha_pow(1)));
    }

    #[test]
    fn single_error_at_position_zero() {
        // S = e0 (1 + z + z^2 + z^3) and z^4 = (z + 1)/e0 · S + 1
        let f = Arc::new(Field::gf1024());
        let r = SkewRing::new(f.clone(), 1).unwrap();
        let e0 = f.alpha_pow(77);
        let e = r.constant(e0);
        let s = syndrome(&e, 5);
        assert_eq!(s, TildePoly::from_dense(f.clone(), &[e0; 4]));
        let st = key_equation_solve(&s, 5, 2).unwrap();
        assert_eq!(st.stop, 1);
        assert_eq!(st.sigma, TildePoly::from_dense(f.clone(), &[Elem::ONE, Elem::ONE]));
        assert_eq!(st.omega, TildePoly::constant(f.clone(), e0));
        assert_eq!(locate(&st.sigma).unwrap(), vec![0]);
        assert_eq!(magnitudes(&st.omega, &[0]).unwrap(), vec![e0]);
    }

    #[test]
    fn cartesian_skips_repeats() {
        let a: &[usize] = &[1, 2];
        let b: &[usize] = &[2, 3];
        let out = cartesian(&[a, b]).unwrap();
        assert_eq!(out, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
    }
}
