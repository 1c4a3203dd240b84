// SPDX-License-Identifier: Apache-2.0

//! Finite fields GF(p^m) backed by log/antilog tables, and their Frobenius
//! automorphisms.
//!
//! Elements are stored as packed coefficient vectors: the residue
//! `c_0 + c_1 y + ... + c_{m-1} y^{m-1}` modulo the field modulus is the
//! integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`. In characteristic 2 this is
//! the usual bit representation and addition is XOR.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order for which tables are built unless a bound is given.
pub const DEFAULT_MAX_ORDER: u64 = 1 << 20;

/// Conway polynomial `y^10 + y^6 + y^5 + y^3 + y^2 + y + 1`, ascending.
pub const CONWAY_2_10: [u32; 11] = [1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1];

/// A field element as a packed coefficient vector. Only meaningful together
/// with the [`Field`] it came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub const fn from_packed(v: u32) -> Self {
        Elem(v)
    }

    pub const fn packed(self) -> u32 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// GF(p^m) with a designated primitive element `α`.
pub struct Field {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: Elem,
    /// `exp[i] = α^i` for `i < 2(q-1)`, so sums of two logs need no reduction.
    exp: Vec<Elem>,
    log: Vec<u32>,
    /// Addition table for odd characteristic when `q` is small.
    add_table: Option<Vec<Elem>>,
    /// `p^j mod (q-1)` for `j < m`; Frobenius powers act on logs through these.
    frob_mult: Vec<u64>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.m == other.m
            && self.modulus == other.modulus
            && self.generator == other.generator
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl Field {
    /// Builds GF(p^m) from a monic modulus given in ascending coefficient
    /// order. Without a generator the smallest primitive element (by packed
    /// value) is chosen.
    pub fn new(p: u32, m: u32, modulus: &[u32], generator: Option<Elem>) -> Result<Self> {
        Self::with_bound(p, m, modulus, generator, DEFAULT_MAX_ORDER)
    }

    pub fn with_bound(
        p: u32,
        m: u32,
        modulus: &[u32],
        generator: Option<Elem>,
        max_order: u64,
    ) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidModulus(
                "extension degree must be positive".into(),
            ));
        }
        let order = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if order > max_order || order > u32::MAX as u64 / 2 {
            return Err(Error::FieldTooLarge {
                order,
                bound: max_order,
            });
        }
        if modulus.len() != m as usize + 1 {
            return Err(Error::InvalidModulus(format!(
                "expected {} coefficients, got {}",
                m + 1,
                modulus.len()
            )));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidModulus(format!(
                "coefficients must lie in [0, {p})"
            )));
        }
        if modulus[m as usize] != 1 {
            return Err(Error::InvalidModulus("modulus must be monic".into()));
        }
        if !is_irreducible(p, modulus) {
            return Err(Error::ReducibleModulus(modulus.to_vec(), p));
        }

        let q = order as u32;
        let mut field = Field {
            p,
            m,
            q,
            modulus: modulus.to_vec(),
            generator: Elem::ONE,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            frob_mult: Vec::new(),
        };
        let factors = prime_factors((q - 1) as u64);
        let generator = match generator {
            Some(g) => {
                if g.0 >= q || !field.is_primitive_slow(g, &factors) {
                    return Err(Error::NotPrimitive(format!("{:?}", field.digits(g))));
                }
                g
            }
            None => (1..q)
                .map(Elem)
                .find(|&g| field.is_primitive_slow(g, &factors))
                .expect("the multiplicative group of a finite field is cyclic"),
        };
        field.generator = generator;
        field.build_tables();
        Ok(field)
    }

    /// GF(4) as `GF(2)[y]/(y^2 + y + 1)` with `α = y`.
    pub fn gf4() -> Self {
        Self::new(2, 2, &[1, 1, 1], Some(Elem(2))).expect("valid field")
    }

    /// GF(9) as `GF(3)[y]/(y^2 - y - 1)` with `α = y`.
    pub fn gf9() -> Self {
        Self::new(3, 2, &[2, 2, 1], Some(Elem(3))).expect("valid field")
    }

    /// GF(2^10) under the Conway polynomial with `α = y`.
    pub fn gf1024() -> Self {
        Self::new(2, 10, &CONWAY_2_10, Some(Elem(2))).expect("valid field")
    }

    fn build_tables(&mut self) {
        let n = (self.q - 1) as usize;
        let mut exp = Vec::with_capacity(2 * n);
        let mut log = vec![0u32; self.q as usize];
        let mut x = Elem::ONE;
        for i in 0..n {
            exp.push(x);
            log[x.0 as usize] = i as u32;
            x = self.mul_slow(x, self.generator);
        }
        debug_assert_eq!(x, Elem::ONE);
        exp.extend_from_within(..);
        if n == 0 {
            exp.push(Elem::ONE);
        }
        self.exp = exp;
        self.log = log;

        if self.p != 2 && self.q <= 256 {
            let q = self.q as usize;
            let mut table = vec![Elem::ZERO; q * q];
            for a in 0..q {
                for b in 0..q {
                    table[a * q + b] = self.add_digitwise(Elem(a as u32), Elem(b as u32));
                }
            }
            self.add_table = Some(table);
        }

        let modulus = (self.q - 1).max(1) as u64;
        let mut mult = 1u64 % modulus;
        self.frob_mult = (0..self.m)
            .map(|_| {
                let cur = mult;
                mult = mult * self.p as u64 % modulus;
                cur
            })
            .collect();
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The primitive element `α` used by power notation.
    pub fn generator(&self) -> Elem {
        self.generator
    }

    /// All elements, zero first.
    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q).map(Elem)
    }

    /// Checks that a packed value is an element of this field.
    pub fn element(&self, packed: u32) -> Result<Elem> {
        if packed < self.q {
            Ok(Elem(packed))
        } else {
            Err(Error::InvalidElement(format!(
                "packed value {packed} outside GF({})",
                self.q
            )))
        }
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Elem> {
        if digits.len() > self.m as usize || digits.iter().any(|&d| d >= self.p) {
            return Err(Error::InvalidElement(format!("{digits:?}")));
        }
        Ok(Elem(
            digits.iter().rev().fold(0, |acc, &d| acc * self.p + d),
        ))
    }

    /// Coefficient vector of length `m`, ascending.
    pub fn digits(&self, a: Elem) -> Vec<u32> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let d = v % self.p;
                v /= self.p;
                d
            })
            .collect()
    }

    /// Image of an integer under `Z -> GF(p)`.
    pub fn from_int(&self, c: i64) -> Elem {
        Elem(c.rem_euclid(self.p as i64) as u32)
    }

    /// `α^k`; negative exponents are allowed.
    pub fn alpha_pow(&self, k: i64) -> Elem {
        let n = (self.q - 1) as i64;
        self.exp[k.rem_euclid(n) as usize]
    }

    /// Discrete logarithm to the base `α`, in `[0, q-1)`.
    pub fn log(&self, a: Elem) -> Result<u32> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.log[a.0 as usize])
        }
    }

    /// `α^k` for a table index `k < 2(q-1)`.
    #[inline]
    pub(crate) fn exp_raw(&self, k: usize) -> Elem {
        self.exp[k]
    }

    #[inline]
    pub(crate) fn log_raw(&self, a: Elem) -> u32 {
        self.log[a.0 as usize]
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else if let Some(t) = &self.add_table {
            t[(a.0 * self.q + b.0) as usize]
        } else {
            self.add_digitwise(a, b)
        }
    }

    fn add_digitwise(&self, a: Elem, b: Elem) -> Elem {
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0, 1);
        for _ in 0..self.m {
            out += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out, mut place) = (a.0, 0, 1);
        for _ in 0..self.m {
            out += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        Elem(out)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            Elem(a.0 ^ b.0)
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize]
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_nonzero(a))
    }

    #[inline]
    pub(crate) fn inv_nonzero(&self, a: Elem) -> Elem {
        debug_assert!(!a.is_zero());
        let l = self.log[a.0 as usize];
        if l == 0 {
            Elem::ONE
        } else {
            self.exp[(self.q - 1 - l) as usize]
        }
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; a negative exponent requires `a != 0`.
    pub fn pow(&self, a: Elem, e: i64) -> Result<Elem> {
        if a.is_zero() {
            return match e {
                0 => Ok(Elem::ONE),
                e if e > 0 => Ok(Elem::ZERO),
                _ => Err(Error::DivisionByZero),
            };
        }
        let n = (self.q - 1) as i128;
        let l = (self.log[a.0 as usize] as i128 * e as i128).rem_euclid(n);
        Ok(self.exp[l as usize])
    }

    /// `a^(p^j)`.
    #[inline]
    pub fn frobenius_pow(&self, a: Elem, j: u32) -> Elem {
        if a.is_zero() {
            return a;
        }
        let mult = self.frob_mult[(j % self.m) as usize];
        let l = self.log[a.0 as usize] as u64 * mult % (self.q - 1) as u64;
        self.exp[l as usize]
    }

    pub(crate) fn frobenius_multiplier(&self, j: u32) -> u64 {
        self.frob_mult[(j % self.m) as usize]
    }

    /// Multiplication by polynomial arithmetic modulo the modulus. Used to
    /// build the tables and as an independent check on them.
    pub fn mul_slow(&self, a: Elem, b: Elem) -> Elem {
        let (p, m) = (self.p as u64, self.m as usize);
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        for top in (m..2 * m).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (j, &mc) in self.modulus[..m].iter().enumerate() {
                let k = top - m + j;
                prod[k] = (prod[k] + (p - c) * mc as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..m].iter().map(|&d| d as u32).collect();
        self.from_digits(&digits).expect("reduced digits")
    }

    fn pow_slow(&self, a: Elem, mut e: u64) -> Elem {
        let (mut base, mut acc) = (a, Elem::ONE);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn is_primitive_slow(&self, g: Elem, factors: &[u64]) -> bool {
        if g.is_zero() {
            return false;
        }
        let n = (self.q - 1) as u64;
        self.pow_slow(g, n) == Elem::ONE
            && factors
                .iter()
                .all(|&r| self.pow_slow(g, n / r) != Elem::ONE)
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u32> {
        let l = self.log(a)? as u64;
        let n = (self.q - 1) as u64;
        Ok((n / gcd(n, l)) as u32)
    }

    pub fn is_primitive(&self, a: Elem) -> bool {
        self.element_order(a).is_ok_and(|o| o == self.q - 1)
    }
}

/// An element together with its field; arithmetic checks that both operands
/// come from the same field.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<Field>,
    value: Elem,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.field.log(self.value) {
            Ok(k) => write!(f, "a^{k}"),
            Err(_) => write!(f, "0"),
        }
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && same_field(&self.field, &other.field)
    }
}

impl Eq for FieldElement {}

fn same_field(a: &Arc<Field>, b: &Arc<Field>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FieldElement {
    pub fn new(field: Arc<Field>, value: Elem) -> Result<Self> {
        field.element(value.packed())?;
        Ok(FieldElement { field, value })
    }

    pub fn zero(field: Arc<Field>) -> Self {
        FieldElement {
            field,
            value: Elem::ZERO,
        }
    }

    pub fn alpha_pow(field: Arc<Field>, k: i64) -> Self {
        let value = field.alpha_pow(k);
        FieldElement { field, value }
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_field(&self.field, &other.field) {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: Elem) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        Ok(self.with(self.field.pow(self.value, e)?))
    }

    pub fn log(&self) -> Result<u32> {
        self.field.log(self.value)
    }

    pub fn frobenius(&self, theta: &Automorphism) -> Result<Self> {
        if !same_field(&self.field, &theta.field) {
            return Err(Error::FieldMismatch);
        }
        Ok(self.with(theta.apply(self.value)))
    }
}

impl Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> FieldElement {
        self.try_add(rhs).expect("field mismatch")
    }
}

impl Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> FieldElement {
        self.try_sub(rhs).expect("field mismatch")
    }
}

impl Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> FieldElement {
        self.try_mul(rhs).expect("field mismatch")
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg(self.value))
    }
}

/// The Frobenius power `θ: x ↦ x^(p^s)`.
#[derive(Clone)]
pub struct Automorphism {
    field: Arc<Field>,
    power: u32,
    order: u32,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Frobenius^{} (order {})", self.power, self.order)
    }
}

impl PartialEq for Automorphism {
    fn eq(&self, other: &Self) -> bool {
        self.power == other.power && same_field(&self.field, &other.field)
    }
}

impl Eq for Automorphism {}

impl Automorphism {
    pub fn new(field: Arc<Field>, power: u32) -> Result<Self> {
        let m = field.degree();
        if power >= m {
            return Err(Error::InvalidAutomorphism { power, degree: m });
        }
        let order = m / gcd(m as u64, power as u64) as u32;
        Ok(Automorphism {
            field,
            power,
            order,
        })
    }

    pub fn identity(field: Arc<Field>) -> Self {
        Automorphism {
            field,
            power: 0,
            order: 1,
        }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// The Frobenius exponent `s`.
    pub fn power(&self) -> u32 {
        self.power
    }

    /// Order of `θ` in the automorphism group.
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.power == 0
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.field.frobenius_pow(x, self.power)
    }

    /// `θ^i(x)`; negative `i` applies the inverse.
    #[inline]
    pub fn apply_pow(&self, x: Elem, i: i64) -> Elem {
        let j = (self.power as i64 * i).rem_euclid(self.field.degree() as i64);
        self.field.frobenius_pow(x, j as u32)
    }

    /// Multiplier that `θ^i` applies to discrete logarithms.
    #[inline]
    pub(crate) fn log_multiplier(&self, i: i64) -> u64 {
        let j = (self.power as i64 * i).rem_euclid(self.field.degree() as i64);
        self.field.frobenius_multiplier(j as u32)
    }

    pub fn fixes(&self, x: Elem) -> bool {
        self.apply(x) == x
    }

    /// Size of the fixed field, `p^gcd(m, s)`.
    pub fn fixed_field_order(&self) -> u32 {
        let f = &self.field;
        let g = gcd(f.degree() as u64, self.power as u64) as u32;
        f.characteristic().pow(g)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Trial division by every monic polynomial of degree `1..=m/2` over GF(p).
fn is_irreducible(p: u32, modulus: &[u32]) -> bool {
    let m = modulus.len() - 1;
    for deg in 1..=m / 2 {
        let count = (p as u64).pow(deg as u32);
        for idx in 0..count {
            let mut divisor = Vec::with_capacity(deg + 1);
            let mut v = idx;
            for _ in 0..deg {
                divisor.push((v % p as u64) as u32);
                v /= p as u64;
            }
            divisor.push(1);
            if prime_poly_rem(p, modulus, &divisor).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` by the monic `g` over GF(p).
fn prime_poly_rem(p: u32, f: &[u32], g: &[u32]) -> Vec<u32> {
    let p = p as u64;
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64).collect();
    let dg = g.len() - 1;
    while r.len() > dg {
        let top = r.len() - 1;
        let c = r[top];
        if c != 0 {
            for (j, &gc) in g.iter().enumerate() {
                let k = top - dg + j;
                r[k] = (r[k] + (p - c) * gc as u64 % p) % p;
            }
        }
        r.pop();
    }
    r.into_iter().map(|c| c as u32).collect()
}
