// SPDX-License-Identifier: Apache-2.0

//! A three-error decode over GF(2^10) with designed distance 7, traced
//! through every intermediate value.

use std::sync::Arc;

use skewcyclic::bch::{self, DecodeStrategy};
use skewcyclic::io::parse_poly;
use skewcyclic::{Elem, Field, SkewBchCode, SkewPoly, SkewRing, TildePoly};

fn field() -> Arc<Field> {
    Arc::new(Field::gf1024())
}

fn skew(ring: &Arc<SkewRing>, text: &str) -> SkewPoly {
    ring.poly(parse_poly(ring.field(), text, 'X').unwrap())
        .unwrap()
}

fn tilde(f: &Arc<Field>, text: &str) -> TildePoly {
    TildePoly::from_dense(f.clone(), &parse_poly(f, text, 'z').unwrap())
}

fn setup() -> (Arc<SkewRing>, SkewBchCode) {
    let f = field();
    let code = SkewBchCode::new(f.clone(), 7).unwrap();
    (code.code().ring().clone(), code)
}

const CODEWORD: &str = "a^654*X^9 + a^547*X^8 + a^650*X^7 + a^16*X^6 + a^567*X^5 \
                        + a^29*X^4 + a^87*X^3 + a^696*X^2 + a^252*X + a^555";
const RECEIVED: &str = "a^818*X^9 + a^775*X^8 + a^650*X^7 + a^16*X^6 + a^567*X^5 \
                        + a^29*X^4 + a^87*X^3 + a^696*X^2 + a^252*X + a^557";

#[test]
fn generator() {
    let (ring, code) = setup();
    let expected = skew(
        &ring,
        "X^6 + a^345*X^5 + a^643*X^4 + a^878*X^3 + a^670*X^2 + a^1020*X + a^777",
    );
    assert_eq!(code.code().generator(), &expected);
    assert_eq!(code.code().dimension(), 4);
    assert_eq!(code.t(), 3);
}

#[test]
fn codeword_and_error() {
    let (ring, code) = setup();
    let a = skew(&ring, CODEWORD);
    let b = skew(&ring, RECEIVED);
    assert!(code.code().is_codeword(&a.to_vector(10)).unwrap());
    let e = skew(&ring, "a^341*X^9 + a^682*X^8 + a^682");
    assert_eq!(&a + &e, b);
}

#[test]
fn pipeline_constants() {
    let (ring, code) = setup();
    let f = ring.field().clone();
    let b = skew(&ring, RECEIVED);

    let s = bch::syndrome(&b, 7);
    assert_eq!(
        s,
        tilde(
            &f,
            "a^404*z^5 + a^403*z^4 + a^601*z^3 + a^645*z^2 + a^614*z + a^406"
        )
    );

    let state = bch::key_equation_solve(&s, 7, code.t()).unwrap();
    assert_eq!(
        state.sigma,
        tilde(&f, "a^766*z^3 + a^642*z^2 + a^241*z + 1")
    );
    assert_eq!(state.omega, tilde(&f, "a^84*z^2 + a^185*z + a^406"));

    let roots: Vec<Elem> = f
        .elements()
        .filter(|&x| state.sigma.eval(x).is_zero())
        .collect();
    let mut expected_roots = vec![Elem::ONE, f.alpha_pow(512), f.alpha_pow(768)];
    expected_roots.sort();
    let mut roots_sorted = roots;
    roots_sorted.sort();
    assert_eq!(roots_sorted, expected_roots);

    let js = bch::locate(&state.sigma).unwrap();
    assert_eq!(js, vec![0, 255, 511]);
    let mags = bch::magnitudes(&state.omega, &js).unwrap();
    assert_eq!(
        mags,
        vec![f.alpha_pow(682), f.alpha_pow(682), f.alpha_pow(341)]
    );

    let congruence: Vec<Vec<usize>> = js
        .iter()
        .map(|&j| bch::position_candidates(j, 10, 1024).unwrap().congruence)
        .collect();
    assert_eq!(congruence, vec![vec![0], vec![4, 8], vec![1, 5, 9]]);
}

#[test]
fn decode_both_strategies() {
    let (ring, code) = setup();
    let b = skew(&ring, RECEIVED).to_vector(10);
    let a = skew(&ring, CODEWORD);
    let e = skew(&ring, "a^341*X^9 + a^682*X^8 + a^682");

    for strategy in [DecodeStrategy::Refined, DecodeStrategy::Congruence] {
        let res = code.decode_with(&b, strategy).unwrap();
        assert_eq!(res.error, e);
        assert_eq!(res.corrected, a);
        assert_eq!(res.candidates.len(), 6);
        assert!(res.candidates.contains(&e));
    }
    let res = code.decode_with(&b, DecodeStrategy::Congruence).unwrap();
    assert_eq!(res.division_tests, 6);
    let res = code.decode(&b).unwrap();
    assert_eq!(res.division_tests, 1);

    // exactly one of the six candidates leaves a codeword
    let survivors = res
        .candidates
        .iter()
        .filter(|c| {
            let w = (&skew(&ring, RECEIVED) - *c).to_vector(10);
            code.code().is_codeword(&w).unwrap()
        })
        .count();
    assert_eq!(survivors, 1);
}
