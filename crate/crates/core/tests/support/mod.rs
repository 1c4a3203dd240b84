// SPDX-License-Identifier: Apache-2.0

//! Property suites and brute-force oracles shared by the test targets.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::{Arc, OnceLock};

use proptest::collection::vec;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use skewcyclic::bch::{self, SkewBchCode};
use skewcyclic::divisors;
use skewcyclic::{Elem, Field, SkewCyclicCode, SkewPoly, SkewRing, TildePoly};

pub const CASES: u32 = 10_000;

pub fn runner(seed: u8, cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(
        config,
        TestRng::from_seed(RngAlgorithm::ChaCha, &[seed; 32]),
    )
}

fn field(p: u32, m: u32, modulus: &[u32]) -> Arc<Field> {
    Arc::new(Field::new(p, m, modulus, None).unwrap())
}

/// Rings over GF(4), GF(8), GF(9), GF(16), GF(25), GF(27), GF(64) and
/// GF(2^10), with every Frobenius power including the identity.
pub fn rings() -> &'static [Arc<SkewRing>] {
    static RINGS: OnceLock<Vec<Arc<SkewRing>>> = OnceLock::new();
    RINGS.get_or_init(|| {
        let fields = [
            Arc::new(Field::gf4()),
            field(2, 3, &[1, 1, 0, 1]),
            Arc::new(Field::gf9()),
            field(2, 4, &[1, 1, 0, 0, 1]),
            field(5, 2, &[2, 1, 1]),
            field(3, 3, &[1, 2, 0, 1]),
            field(2, 6, &[1, 1, 0, 0, 0, 0, 1]),
            Arc::new(Field::gf1024()),
        ];
        let mut out = Vec::new();
        for f in fields {
            let powers = if f.degree() > 4 {
                vec![0, 1, 2]
            } else {
                (0..f.degree()).collect()
            };
            for s in powers {
                out.push(SkewRing::new(f.clone(), s).unwrap());
            }
        }
        out
    })
}

pub fn poly(ring: &Arc<SkewRing>, raw: &[u32]) -> SkewPoly {
    let q = ring.field().order();
    ring.poly(raw.iter().map(|&c| Elem::from_packed(c % q)).collect())
        .unwrap()
}

fn elem(ring: &SkewRing, raw: u32) -> Elem {
    Elem::from_packed(raw % ring.field().order())
}

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<u32>> {
    vec(any::<u32>(), 0..max_len)
}

fn ring_index() -> impl Strategy<Value = usize> {
    0..rings().len()
}

fn report<T: std::fmt::Debug>(
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

fn deg(p: &SkewPoly) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

/// Associativity, both distributive laws, unit, and `deg fg = deg f + deg g`.
pub fn ring_axioms() -> Result<(), String> {
    let strat = (ring_index(), coeffs(8), coeffs(8), coeffs(8));
    report(runner(1, CASES).run(&strat, |(ri, a, b, c)| {
        let r = &rings()[ri];
        let (a, b, c) = (poly(r, &a), poly(r, &b), poly(r, &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &r.one(), a.clone());
        prop_assert_eq!(&r.one() * &a, a.clone());
        prop_assert!((&(&a - &b) + &b) == a);
        let ab = &a * &b;
        if a.is_zero() || b.is_zero() {
            prop_assert!(ab.is_zero());
        } else {
            prop_assert_eq!(deg(&ab), deg(&a) + deg(&b));
        }
        Ok(())
    }))
}

/// `f = q·g + r` and `f = g·q' + r'` with both remainders of lower degree.
pub fn division_reassembly() -> Result<(), String> {
    let strat = (ring_index(), coeffs(12), coeffs(6));
    report(runner(2, CASES).run(&strat, |(ri, f, g)| {
        let r = &rings()[ri];
        let (f, g) = (poly(r, &f), poly(r, &g));
        if g.is_zero() {
            prop_assert!(f.right_divmod(&g).is_err());
            prop_assert!(f.left_divmod(&g).is_err());
            return Ok(());
        }
        let (q, rem) = f.right_divmod(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &rem, f.clone());
        prop_assert!(deg(&rem) < deg(&g));
        let (q, rem) = f.left_divmod(&g).unwrap();
        prop_assert_eq!(&(&g * &q) + &rem, f.clone());
        prop_assert!(deg(&rem) < deg(&g));
        Ok(())
    }))
}

/// The closed-form remainder by `X - β` equals the right-division remainder.
pub fn eval_rem_linear() -> Result<(), String> {
    let strat = (ring_index(), coeffs(16), any::<u32>());
    report(runner(3, CASES).run(&strat, |(ri, f, beta)| {
        let r = &rings()[ri];
        let f = poly(r, &f);
        let beta = elem(r, beta);
        let (_, rem) = f.right_divmod(&r.linear(beta)).unwrap();
        prop_assert_eq!(rem.coeff(0), f.eval_rem_linear(beta));
        prop_assert!(deg(&rem) <= 0);
        Ok(())
    }))
}

/// `deg rgcd + deg lclm = deg f + deg g`, the rgcd right-divides both and
/// both right-divide the lclm.
pub fn rgcd_lclm() -> Result<(), String> {
    let strat = (ring_index(), coeffs(7), coeffs(7), coeffs(4));
    report(runner(4, CASES).run(&strat, |(ri, f, g, common)| {
        let r = &rings()[ri];
        // a shared right factor makes nontrivial gcds common
        let c = poly(r, &common);
        let c = if c.is_zero() { r.one() } else { c };
        let f = &poly(r, &f) * &c;
        let g = &poly(r, &g) * &c;
        if f.is_zero() || g.is_zero() {
            return Ok(());
        }
        let d = f.rgcd(&g).unwrap();
        let l = f.lclm(&g).unwrap();
        prop_assert!(d.is_monic() && l.is_monic());
        prop_assert_eq!(deg(&d) + deg(&l), deg(&f) + deg(&g));
        prop_assert!(f.is_right_divisible_by(&d).unwrap());
        prop_assert!(g.is_right_divisible_by(&d).unwrap());
        prop_assert!(c.is_zero() || d.is_right_divisible_by(&c.monic()).unwrap());
        prop_assert!(l.is_right_divisible_by(&f).unwrap());
        prop_assert!(l.is_right_divisible_by(&g).unwrap());
        let ext = f.extended_rgcd(&g).unwrap();
        prop_assert_eq!(&(&ext.u * &f) + &(&ext.v * &g), ext.gcd.clone());
        Ok(())
    }))
}

/// `is_central` holds exactly when the polynomial commutes with `X` and
/// with the primitive element.
pub fn centrality() -> Result<(), String> {
    let strat = (ring_index(), any::<bool>(), coeffs(5), coeffs(12));
    report(
        runner(5, CASES).run(&strat, |(ri, build_central, fixed, generic)| {
            let r = &rings()[ri];
            let f = if build_central {
                let field = r.field();
                let fixed_elems: Vec<Elem> =
                    field.elements().filter(|&x| r.theta().fixes(x)).collect();
                let order = r.theta().order() as usize;
                let mut c = vec![Elem::ZERO; fixed.len() * order + 1];
                for (i, &raw) in fixed.iter().enumerate() {
                    c[i * order] = fixed_elems[raw as usize % fixed_elems.len()];
                }
                r.poly(c).unwrap()
            } else {
                poly(r, &generic)
            };
            let x = r.x();
            let a = r.constant(r.field().generator());
            let commutes = &f * &x == &x * &f && &f * &a == &a * &f;
            prop_assert_eq!(f.is_central(), commutes);
            if build_central {
                prop_assert!(f.is_central());
            }
            Ok(())
        }),
    )
}

/// Skew-BCH codes over GF(2^m), `m = 4, 6, 8, 10`, for every designed distance.
pub fn bch_codes() -> &'static [SkewBchCode] {
    static CODES: OnceLock<Vec<SkewBchCode>> = OnceLock::new();
    CODES.get_or_init(|| {
        let fields = [
            field(2, 4, &[1, 1, 0, 0, 1]),
            field(2, 6, &[1, 1, 0, 0, 0, 0, 1]),
            field(2, 8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
            Arc::new(Field::gf1024()),
        ];
        let mut out = Vec::new();
        for f in fields {
            let n = f.degree() as usize;
            for d in 2..=n + 1 {
                if let Ok(c) = SkewBchCode::new(f.clone(), d) {
                    out.push(c);
                }
            }
        }
        out
    })
}

/// Every Euclid row satisfies `U_i·S + V_i·z^(d-1) = r_i`, remainder
/// degrees fall strictly, the stop rule holds, `σ·S ≡ w mod z^(d-1)`, and
/// the decoder returns the injected error.
pub fn key_equation_ledger() -> Result<(), String> {
    let strat = (
        0..bch_codes().len(),
        vec(any::<u32>(), 10),
        vec((any::<usize>(), 1u32..u32::MAX), 0..6),
    );
    report(runner(6, CASES).run(&strat, |(ci, msg, errs)| {
        let code = &bch_codes()[ci];
        let inner = code.code();
        let ring = inner.ring();
        let f = ring.field();
        let (n, k, t, d) = (
            inner.length(),
            inner.dimension(),
            code.t(),
            code.designed_distance(),
        );
        let msg: Vec<Elem> = msg.iter().take(k).map(|&m| elem(ring, m)).collect();
        let word = inner.encode(&msg).unwrap();
        let mut e = vec![Elem::ZERO; n];
        for &(pos, val) in errs.iter().take(t) {
            let v = Elem::from_packed(1 + val % (f.order() - 1));
            e[pos % n] = v;
        }
        let received: Vec<Elem> = word.iter().zip(&e).map(|(&a, &b)| f.add(a, b)).collect();
        let e_poly = ring.poly(e.clone()).unwrap();
        let s = bch::syndrome(&ring.poly(received.clone()).unwrap(), d);
        prop_assert_eq!(&s, &bch::syndrome(&e_poly, d));
        if e_poly.is_zero() {
            prop_assert!(s.is_zero());
            return Ok(());
        }
        let state = bch::key_equation_solve(&s, d, t).unwrap();
        let zd = TildePoly::monomial(f.clone(), Elem::ONE, (d - 1) as u64);
        let mut prev_deg = u64::MAX;
        for row in &state.rows {
            prop_assert_eq!(&row.u.mul(&s).add(&row.v.mul(&zd)), &row.r);
            let rd = row.r.degree().unwrap_or(0);
            prop_assert!(row.r.is_zero() || rd < prev_deg);
            prev_deg = rd;
        }
        let last = state.final_row();
        prop_assert!(last.r.degree().is_none_or(|x| x < t as u64));
        let before = &state.rows[state.rows.len() - 2];
        prop_assert!(before.r.degree().is_some_and(|x| x >= t as u64));
        prop_assert_eq!(state.sigma.coeff(0), Elem::ONE);
        prop_assert!(state.sigma.degree().unwrap_or(0) <= t as u64);
        prop_assert_eq!(
            state.sigma.mul(&s).truncate((d - 1) as u64),
            state.omega.clone()
        );
        let res = code.decode(&received).unwrap();
        prop_assert_eq!(res.error, e_poly);
        prop_assert_eq!(res.corrected.to_vector(n), word);
        Ok(())
    }))
}

/// Codes from random right divisors `rgcd(X^n - 1, r)` are closed under the
/// θ-shift, row by row and for a random codeword.
pub fn shift_closure() -> Result<(), String> {
    let strat = (ring_index(), 1usize..7, coeffs(14), coeffs(14));
    report(runner(7, CASES).run(&strat, |(ri, mult, r_raw, msg_raw)| {
        let ring = &rings()[ri];
        let n = mult * ring.theta().order() as usize;
        if n > 14 {
            return Ok(());
        }
        let r = poly(ring, &r_raw[..r_raw.len().min(n)]);
        if r.is_zero() {
            return Ok(());
        }
        let g = ring.xn_minus_1(n).rgcd(&r).unwrap();
        let code = SkewCyclicCode::new(n, &g).unwrap();
        prop_assert!(divisors::is_right_divisor(&g, n).unwrap());
        for row in code.generator_matrix() {
            prop_assert!(code.is_codeword(&code.theta_shift(row)).unwrap());
        }
        let k = code.dimension();
        let mut msg: Vec<Elem> = msg_raw.iter().take(k).map(|&m| elem(ring, m)).collect();
        msg.resize(k, Elem::ZERO);
        let word = code.encode(&msg).unwrap();
        prop_assert!(code.is_codeword(&code.theta_shift(&word)).unwrap());
        Ok(())
    }))
}

pub type Suite = fn() -> Result<(), String>;

pub const PROPERTY_SUITES: [(&str, Suite); 7] = [
    ("ring axioms and degree additivity", ring_axioms),
    ("division reassembly", division_reassembly),
    ("remainder by X - beta", eval_rem_linear),
    ("rgcd/lclm degrees and divisibility", rgcd_lclm),
    ("centrality iff commutation", centrality),
    ("key equation ledger", key_equation_ledger),
    ("shift closure", shift_closure),
];

/// Monic polynomials of degree `d`, all `q^d` of them.
pub fn monic_polys(ring: &Arc<SkewRing>, d: usize) -> Vec<Vec<Elem>> {
    let q = ring.field().order() as u64;
    (0..q.pow(d as u32))
        .map(|mut idx| {
            let mut c: Vec<Elem> = (0..d)
                .map(|_| {
                    let e = Elem::from_packed((idx % q) as u32);
                    idx /= q;
                    e
                })
                .collect();
            c.push(Elem::ONE);
            c
        })
        .collect()
}

/// Right divisors of degree `d` found by multiplying every monic `h` of
/// degree `n - d` with every monic `g` of degree `d`.
pub fn product_oracle(ring: &Arc<SkewRing>, n: usize, d: usize) -> BTreeSet<Vec<Elem>> {
    let target = ring.xn_minus_1(n);
    let hs: Vec<SkewPoly> = monic_polys(ring, n - d)
        .into_iter()
        .map(|c| ring.poly(c).unwrap())
        .collect();
    monic_polys(ring, d)
        .into_iter()
        .filter(|g| {
            let g = ring.poly(g.clone()).unwrap();
            hs.iter().any(|h| h * &g == target)
        })
        .collect()
}

/// Plain commutative product over the field, ascending coefficients.
fn commutative_mul(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}

/// Monic divisors of degree `d` of `X^n - 1` in the commutative ring.
pub fn commutative_oracle(field: &Arc<Field>, n: usize, d: usize) -> BTreeSet<Vec<Elem>> {
    let ring = SkewRing::new(field.clone(), 0).unwrap();
    let mut target = vec![Elem::ZERO; n + 1];
    target[0] = field.neg(Elem::ONE);
    target[n] = Elem::ONE;
    let hs = monic_polys(&ring, n - d);
    monic_polys(&ring, d)
        .into_iter()
        .filter(|g| hs.iter().any(|h| commutative_mul(field, h, g) == target))
        .collect()
}

fn as_set(v: Vec<SkewPoly>) -> BTreeSet<Vec<Elem>> {
    v.into_iter().map(|p| p.into_coeffs()).collect()
}

/// Exhaustive enumeration matches the product oracle, sampling and DFS
/// return subsets, and with `θ = id` the divisors are the commutative ones.
pub fn divisor_oracles(lengths: &[usize]) -> Result<(), String> {
    let f4 = Arc::new(Field::gf4());
    let frob = SkewRing::new(f4.clone(), 1).unwrap();
    let id = SkewRing::new(f4.clone(), 0).unwrap();
    for &n in lengths {
        let dfs = as_set(divisors::dfs_split_divisors(&frob, n, n));
        for d in 0..=n {
            let oracle = product_oracle(&frob, n, d);
            let found = as_set(divisors::enumerate_right_divisors(&frob, n, d, 1 << 20).unwrap());
            if found != oracle {
                return Err(format!(
                    "n={n} d={d}: enumeration {} vs oracle {}",
                    found.len(),
                    oracle.len()
                ));
            }
            let sampled = as_set(divisors::sample_right_divisors(&frob, n, d, 2000, n as u64));
            if !sampled.is_subset(&oracle) {
                return Err(format!("n={n} d={d}: sampling outside the oracle"));
            }
            if !dfs
                .iter()
                .filter(|c| c.len() == d + 1)
                .all(|c| oracle.contains(c))
            {
                return Err(format!("n={n} d={d}: dfs outside the oracle"));
            }
            let commutative = commutative_oracle(&f4, n, d);
            let found_id = as_set(divisors::enumerate_right_divisors(&id, n, d, 1 << 20).unwrap());
            if found_id != commutative {
                return Err(format!(
                    "n={n} d={d}: identity θ disagrees with commutative factorization"
                ));
            }
        }
    }
    Ok(())
}

/// The monic degree-1 pairs `(X + a)(X + b) = X^2 + 1` over GF(4) with the
/// Frobenius, as `(a, b)` exponents with `None` for zero.
pub fn x2_plus_1_factorizations() -> Vec<(Option<u32>, Option<u32>)> {
    let f4 = Arc::new(Field::gf4());
    let ring = SkewRing::new(f4.clone(), 1).unwrap();
    let target = ring.xn_minus_1(2);
    let mut out = Vec::new();
    for a in f4.elements() {
        for b in f4.elements() {
            let left = ring.poly(vec![a, Elem::ONE]).unwrap();
            let right = ring.poly(vec![b, Elem::ONE]).unwrap();
            if &left * &right == target {
                out.push((f4.log(a).ok(), f4.log(b).ok()));
            }
        }
    }
    out
}
