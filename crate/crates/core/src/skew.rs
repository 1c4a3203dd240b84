// SPDX-License-Identifier: Apache-2.0

//! The skew polynomial ring `GF(q)[X; θ]` with `X·a = θ(a)·X`.
//!
//! Coefficients are written on the left of the powers of `X` and stored in
//! ascending order. The ring is left and right Euclidean; most of the coding
//! theory only needs right division (`f = quotient·g + remainder`).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Automorphism, Elem, Field};
use crate::tilde::TildePoly;

/// `GF(q)[X; θ]` for a Frobenius power `θ`.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewRing {
    field: Arc<Field>,
    theta: Automorphism,
}

impl fmt::Debug for SkewRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[X; {:?}]", self.field.order(), self.theta)
    }
}

/// Drops trailing zero coefficients so the last entry is the leading one.
pub(crate) fn trim(v: &mut Vec<Elem>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl SkewRing {
    pub fn new(field: Arc<Field>, theta_power: u32) -> Result<Arc<Self>> {
        let theta = Automorphism::new(field.clone(), theta_power)?;
        Ok(Arc::new(SkewRing { field, theta }))
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn theta(&self) -> &Automorphism {
        &self.theta
    }

    /// `Σ_{i+j=t} f_i θ^i(g_j)`.
    pub(crate) fn mul_raw(&self, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let field = &*self.field;
        let n = (field.order() - 1) as u64;
        let g_logs: Vec<Option<u64>> = g
            .iter()
            .map(|&c| (!c.is_zero()).then(|| field.log_raw(c) as u64))
            .collect();
        let mut out = vec![Elem::ZERO; f.len() + g.len() - 1];
        for (i, &fi) in f.iter().enumerate() {
            if fi.is_zero() {
                continue;
            }
            let lf = field.log_raw(fi) as u64;
            let mult = self.theta.log_multiplier(i as i64);
            for (j, lg) in g_logs.iter().enumerate() {
                if let Some(lg) = lg {
                    let term = field.exp_raw((lf + lg * mult % n) as usize);
                    out[i + j] = field.add(out[i + j], term);
                }
            }
        }
        trim(&mut out);
        out
    }

    /// Right division `f = quotient·g + remainder`, `g` nonzero.
    pub(crate) fn right_divmod_raw(&self, f: &[Elem], g: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let field = &*self.field;
        let dg = g.len() - 1;
        let lead_inv = field.inv_nonzero(g[dg]);
        let mut r = f.to_vec();
        trim(&mut r);
        if r.len() <= dg {
            return (Vec::new(), r);
        }
        let mut quot = vec![Elem::ZERO; r.len() - dg];
        while r.len() > dg {
            let top = r.len() - 1;
            let shift = top - dg;
            // c·X^shift·g has leading coefficient c·θ^shift(lc(g))
            let c = field.mul(r[top], self.theta.apply_pow(lead_inv, shift as i64));
            quot[shift] = c;
            for (j, &gj) in g.iter().enumerate() {
                let t = field.mul(c, self.theta.apply_pow(gj, shift as i64));
                r[shift + j] = field.sub(r[shift + j], t);
            }
            debug_assert!(r[top].is_zero());
            trim(&mut r);
        }
        trim(&mut quot);
        (quot, r)
    }

    /// Left division `f = g·quotient + remainder`, `g` nonzero.
    pub(crate) fn left_divmod_raw(&self, f: &[Elem], g: &[Elem]) -> (Vec<Elem>, Vec<Elem>) {
        let field = &*self.field;
        let dg = g.len() - 1;
        let lead_inv = field.inv_nonzero(g[dg]);
        let mut r = f.to_vec();
        trim(&mut r);
        if r.len() <= dg {
            return (Vec::new(), r);
        }
        let mut quot = vec![Elem::ZERO; r.len() - dg];
        while r.len() > dg {
            let top = r.len() - 1;
            let shift = top - dg;
            // g·c·X^shift has leading coefficient lc(g)·θ^dg(c)
            let c = self
                .theta
                .apply_pow(field.mul(lead_inv, r[top]), -(dg as i64));
            quot[shift] = c;
            for (j, &gj) in g.iter().enumerate() {
                let t = field.mul(gj, self.theta.apply_pow(c, j as i64));
                r[shift + j] = field.sub(r[shift + j], t);
            }
            debug_assert!(r[top].is_zero());
            trim(&mut r);
        }
        trim(&mut quot);
        (quot, r)
    }

    /// Scales so the leading coefficient is one (a degree-zero left factor).
    pub(crate) fn monic_raw(&self, f: &mut [Elem]) {
        if let Some(&lc) = f.last() {
            let inv = self.field.inv_nonzero(lc);
            for c in f.iter_mut() {
                *c = self.field.mul(inv, *c);
            }
        }
    }

    pub(crate) fn add_raw(&self, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; f.len().max(g.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let a = f.get(i).copied().unwrap_or_default();
            let b = g.get(i).copied().unwrap_or_default();
            *o = self.field.add(a, b);
        }
        trim(&mut out);
        out
    }

    pub(crate) fn sub_raw(&self, f: &[Elem], g: &[Elem]) -> Vec<Elem> {
        let mut out = vec![Elem::ZERO; f.len().max(g.len())];
        for (i, o) in out.iter_mut().enumerate() {
            let a = f.get(i).copied().unwrap_or_default();
            let b = g.get(i).copied().unwrap_or_default();
            *o = self.field.sub(a, b);
        }
        trim(&mut out);
        out
    }

    /// `Σ a_k N_k(β)` with `N_0 = 1`, `N_{k+1} = N_k θ^k(β)`.
    pub(crate) fn eval_rem_linear_raw(&self, f: &[Elem], beta: Elem) -> Elem {
        let field = &*self.field;
        let mut acc = Elem::ZERO;
        let mut norm = Elem::ONE;
        for (k, &a) in f.iter().enumerate() {
            acc = field.add(acc, field.mul(a, norm));
            norm = field.mul(norm, self.theta.apply_pow(beta, k as i64));
        }
        acc
    }

    /// Right remainder of `X^n` by a monic `g` of positive degree, computed by
    /// repeated `r ← X·r mod g`.
    pub(crate) fn x_pow_rem_monic(&self, n: usize, g: &[Elem]) -> Vec<Elem> {
        let field = &*self.field;
        let dg = g.len() - 1;
        debug_assert!(dg >= 1 && g[dg] == Elem::ONE);
        let mut r = vec![Elem::ZERO; dg];
        r[0] = Elem::ONE;
        for _ in 0..n {
            let top = self.theta.apply(r[dg - 1]);
            for j in (1..dg).rev() {
                r[j] = self.theta.apply(r[j - 1]);
            }
            r[0] = Elem::ZERO;
            if !top.is_zero() {
                for j in 0..dg {
                    r[j] = field.sub(r[j], field.mul(top, g[j]));
                }
            }
        }
        r
    }

    /// Whether monic `g` right-divides `X^n - 1`.
    pub(crate) fn divides_xn_minus_1_monic(&self, n: usize, g: &[Elem]) -> bool {
        if g.len() <= 1 {
            return true;
        }
        let r = self.x_pow_rem_monic(n, g);
        r[0] == Elem::ONE && r[1..].iter().all(|c| c.is_zero())
    }

    pub fn poly(self: &Arc<Self>, coeffs: Vec<Elem>) -> Result<SkewPoly> {
        let q = self.field.order();
        if let Some(c) = coeffs.iter().find(|c| c.packed() >= q) {
            return Err(Error::InvalidElement(format!(
                "packed value {}",
                c.packed()
            )));
        }
        Ok(SkewPoly::from_raw(self.clone(), coeffs))
    }

    pub fn zero(self: &Arc<Self>) -> SkewPoly {
        SkewPoly::from_raw(self.clone(), Vec::new())
    }

    pub fn one(self: &Arc<Self>) -> SkewPoly {
        self.constant(Elem::ONE)
    }

    pub fn constant(self: &Arc<Self>, c: Elem) -> SkewPoly {
        SkewPoly::from_raw(self.clone(), vec![c])
    }

    /// `c·X^k`.
    pub fn monomial(self: &Arc<Self>, c: Elem, k: usize) -> SkewPoly {
        let mut v = vec![Elem::ZERO; k + 1];
        v[k] = c;
        SkewPoly::from_raw(self.clone(), v)
    }

    pub fn x(self: &Arc<Self>) -> SkewPoly {
        self.monomial(Elem::ONE, 1)
    }

    /// `X - β`.
    pub fn linear(self: &Arc<Self>, beta: Elem) -> SkewPoly {
        SkewPoly::from_raw(self.clone(), vec![self.field.neg(beta), Elem::ONE])
    }

    /// `X^n - 1`.
    pub fn xn_minus_1(self: &Arc<Self>, n: usize) -> SkewPoly {
        let mut v = vec![Elem::ZERO; n + 1];
        v[0] = self.field.neg(Elem::ONE);
        v[n] = self.field.add(v[n], Elem::ONE);
        SkewPoly::from_raw(self.clone(), v)
    }
}

/// An element of `GF(q)[X; θ]`. The zero polynomial has no coefficients.
#[derive(Clone)]
pub struct SkewPoly {
    ring: Arc<SkewRing>,
    coeffs: Vec<Elem>,
}

impl PartialEq for SkewPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.same_ring(other)
    }
}

impl Eq for SkewPoly {}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::io::render_poly(&self.ring.field, &self.coeffs, "X")
        )
    }
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::io::render_poly(&self.ring.field, &self.coeffs, "X")
        )
    }
}

impl SkewPoly {
    pub(crate) fn from_raw(ring: Arc<SkewRing>, mut coeffs: Vec<Elem>) -> Self {
        trim(&mut coeffs);
        SkewPoly { ring, coeffs }
    }

    fn same_ring(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    fn wrap(&self, coeffs: Vec<Elem>) -> Self {
        SkewPoly::from_raw(self.ring.clone(), coeffs)
    }

    pub fn ring(&self) -> &Arc<SkewRing> {
        &self.ring
    }

    /// Ascending coefficients, no trailing zeros.
    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<Elem> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(Elem::ONE)
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.ring.add_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.ring.sub_raw(&self.coeffs, &other.coeffs)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.wrap(self.ring.mul_raw(&self.coeffs, &other.coeffs)))
    }

    /// `c·f`, scalar on the left.
    pub fn scale_left(&self, c: Elem) -> Self {
        let f = &self.ring.field;
        self.wrap(self.coeffs.iter().map(|&a| f.mul(c, a)).collect())
    }

    /// Leading coefficient made one by a left scalar factor. Zero stays zero.
    pub fn monic(&self) -> Self {
        let mut v = self.coeffs.clone();
        self.ring.monic_raw(&mut v);
        self.wrap(v)
    }

    /// `f = quotient·g + remainder` with `deg remainder < deg g`.
    pub fn right_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.ring.right_divmod_raw(&self.coeffs, &g.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    /// `f = g·quotient + remainder` with `deg remainder < deg g`.
    pub fn left_divmod(&self, g: &Self) -> Result<(Self, Self)> {
        self.check(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = self.ring.left_divmod_raw(&self.coeffs, &g.coeffs);
        Ok((self.wrap(q), self.wrap(r)))
    }

    pub fn right_rem(&self, g: &Self) -> Result<Self> {
        Ok(self.right_divmod(g)?.1)
    }

    /// Whether `g` right-divides `self`, i.e. `self = h·g`.
    pub fn is_right_divisible_by(&self, g: &Self) -> Result<bool> {
        Ok(self.right_rem(g)?.is_zero())
    }

    /// Monic greatest common right divisor.
    pub fn rgcd(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        if self.is_zero() && g.is_zero() {
            return Err(Error::InvalidParameter("rgcd(0, 0) is undefined".into()));
        }
        let (mut a, mut b) = (self.coeffs.clone(), g.coeffs.clone());
        while !b.is_empty() {
            let (_, r) = self.ring.right_divmod_raw(&a, &b);
            a = std::mem::replace(&mut b, r);
        }
        self.ring.monic_raw(&mut a);
        Ok(self.wrap(a))
    }

    /// Extended right Euclid: returns `(gcd, u, v)` with `u·self + v·g = gcd`
    /// (gcd not normalized) together with the terminating cofactors `(u', v')`
    /// satisfying `u'·self + v'·g = 0`.
    pub fn extended_rgcd(&self, g: &Self) -> Result<ExtendedRgcd> {
        self.check(g)?;
        let ring = &self.ring;
        let one = vec![Elem::ONE];
        let (mut r0, mut r1) = (self.coeffs.clone(), g.coeffs.clone());
        let (mut u0, mut u1) = (one.clone(), Vec::new());
        let (mut v0, mut v1) = (Vec::new(), one);
        while !r1.is_empty() {
            let (quot, rem) = ring.right_divmod_raw(&r0, &r1);
            let u2 = ring.sub_raw(&u0, &ring.mul_raw(&quot, &u1));
            let v2 = ring.sub_raw(&v0, &ring.mul_raw(&quot, &v1));
            (r0, r1) = (r1, rem);
            (u0, u1) = (u1, u2);
            (v0, v1) = (v1, v2);
        }
        Ok(ExtendedRgcd {
            gcd: self.wrap(r0),
            u: self.wrap(u0),
            v: self.wrap(v0),
            u_final: self.wrap(u1),
            v_final: self.wrap(v1),
        })
    }

    /// Monic least common left multiple.
    pub fn lclm(&self, g: &Self) -> Result<Self> {
        self.check(g)?;
        if self.is_zero() || g.is_zero() {
            return Err(Error::InvalidParameter("lclm needs nonzero inputs".into()));
        }
        let ext = self.extended_rgcd(g)?;
        Ok(ext.u_final.try_mul(self)?.monic())
    }

    /// Central iff every nonzero coefficient sits at an exponent divisible by
    /// the order of `θ` and is fixed by `θ`.
    pub fn is_central(&self) -> bool {
        let theta = &self.ring.theta;
        let order = theta.order() as usize;
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, &c)| c.is_zero() || (i % order == 0 && theta.fixes(c)))
    }

    /// Remainder of the right division by `X - β`.
    pub fn eval_rem_linear(&self, beta: Elem) -> Elem {
        self.ring.eval_rem_linear_raw(&self.coeffs, beta)
    }

    /// The commutative polynomial `Σ a_k z^(2^k - 1)`; only defined for the
    /// squaring Frobenius.
    pub fn tilde(&self) -> Result<TildePoly> {
        let f = &self.ring.field;
        if f.characteristic() != 2 || self.ring.theta.power() != 1 {
            return Err(Error::NotSquaringFrobenius);
        }
        if self.coeffs.len() > 64 {
            return Err(Error::InvalidParameter(
                "degree too large for z^(2^k - 1)".into(),
            ));
        }
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, &c)| (((1u128 << k) - 1) as u64, c))
            .collect();
        Ok(TildePoly::from_terms(f.clone(), terms))
    }

    /// Canonical representative modulo `X^n - 1`: `a·X^(n+t)` folds onto
    /// `a·X^t` because `a·X^(n+t) = a·X^t·(X^n - 1) + a·X^t`.
    pub fn mod_xn_minus_1(&self, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("n must be positive".into()));
        }
        let f = &self.ring.field;
        let mut v = self.coeffs.clone();
        for i in (n..v.len()).rev() {
            let c = v[i];
            v[i - n] = f.add(v[i - n], c);
        }
        v.truncate(n);
        Ok(self.wrap(v))
    }

    /// Coefficient vector padded with zeros to length `n`.
    pub fn to_vector(&self, n: usize) -> Vec<Elem> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), Elem::ZERO);
        v
    }
}

/// Output of the extended right Euclidean algorithm.
#[derive(Clone, Debug)]
pub struct ExtendedRgcd {
    pub gcd: SkewPoly,
    pub u: SkewPoly,
    pub v: SkewPoly,
    pub u_final: SkewPoly,
    pub v_final: SkewPoly,
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: Self) -> SkewPoly {
        self.try_add(rhs).expect("ring mismatch")
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: Self) -> SkewPoly {
        self.try_sub(rhs).expect("ring mismatch")
    }
}

impl Mul for &SkewPoly {
    type Output = SkewPoly;
    fn mul(self, rhs: Self) -> SkewPoly {
        self.try_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        let f = &self.ring.field;
        self.wrap(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}
