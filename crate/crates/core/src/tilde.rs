// SPDX-License-Identifier: Apache-2.0

//! Sparse commutative polynomials in `z` over GF(q).
//!
//! These carry the linearized images `Σ a_k z^(2^k - 1)` of skew polynomials
//! as well as the syndrome, locator and evaluator polynomials of the decoder.
//! Arithmetic goes through a dense form, so it is meant for small degrees.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Largest degree accepted by the dense arithmetic.
const DENSE_LIMIT: u64 = 1 << 20;

#[derive(Clone)]
pub struct TildePoly {
    field: Arc<Field>,
    /// Strictly increasing exponents, nonzero coefficients.
    terms: Vec<(u64, Elem)>,
}

impl PartialEq for TildePoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for TildePoly {}

impl fmt::Debug for TildePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for TildePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::io::render_sparse(&self.field, &self.terms, "z")
        )
    }
}

impl TildePoly {
    /// Builds from arbitrary `(exponent, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(field: Arc<Field>, mut terms: Vec<(u64, Elem)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut merged: Vec<(u64, Elem)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match merged.last_mut() {
                Some(last) if last.0 == e => last.1 = field.add(last.1, c),
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|t| !t.1.is_zero());
        TildePoly {
            field,
            terms: merged,
        }
    }

    /// From ascending dense coefficients.
    pub fn from_dense(field: Arc<Field>, coeffs: &[Elem]) -> Self {
        let terms = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, &c)| (i as u64, c))
            .collect();
        TildePoly { field, terms }
    }

    pub fn zero(field: Arc<Field>) -> Self {
        TildePoly {
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: Arc<Field>, c: Elem) -> Self {
        Self::from_terms(field, vec![(0, c)])
    }

    /// `c·z^e`.
    pub fn monomial(field: Arc<Field>, c: Elem, e: u64) -> Self {
        Self::from_terms(field, vec![(e, c)])
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn terms(&self) -> &[(u64, Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<u64> {
        self.terms.last().map(|t| t.0)
    }

    pub fn coeff(&self, e: u64) -> Elem {
        self.terms
            .binary_search_by_key(&e, |t| t.0)
            .map(|i| self.terms[i].1)
            .unwrap_or_default()
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &*self.field;
        if x.is_zero() {
            return self.coeff(0);
        }
        let n = (f.order() - 1) as u64;
        let lx = f.log_raw(x) as u64;
        self.terms.iter().fold(Elem::ZERO, |acc, &(e, c)| {
            let term = f.mul(c, f.exp_raw(((e % n) * lx % n) as usize));
            f.add(acc, term)
        })
    }

    pub fn to_dense(&self) -> Result<Vec<Elem>> {
        let len = match self.degree() {
            None => return Ok(Vec::new()),
            Some(d) if d >= DENSE_LIMIT => {
                return Err(Error::InvalidParameter(format!("degree {d} too large")))
            }
            Some(d) => d as usize + 1,
        };
        let mut v = vec![Elem::ZERO; len];
        for &(e, c) in &self.terms {
            v[e as usize] = c;
        }
        Ok(v)
    }

    fn dense(&self) -> Vec<Elem> {
        self.to_dense()
            .expect("dense arithmetic on a sparse high-degree polynomial")
    }

    fn wrap(&self, coeffs: &[Elem]) -> Self {
        Self::from_dense(self.field.clone(), coeffs)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        terms.extend_from_slice(&other.terms);
        Self::from_terms(self.field.clone(), terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().map(|&(e, c)| (e, f.neg(c))));
        Self::from_terms(self.field.clone(), terms)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for &(e1, c1) in &self.terms {
            for &(e2, c2) in &other.terms {
                terms.push((e1 + e2, f.mul(c1, c2)));
            }
        }
        Self::from_terms(self.field.clone(), terms)
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        let terms = self.terms.iter().map(|&(e, a)| (e, f.mul(c, a))).collect();
        Self::from_terms(self.field.clone(), terms)
    }

    /// Euclidean division `self = quotient·divisor + remainder`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let f = &*self.field;
        let g = divisor.to_dense()?;
        let Some(&lead) = g.last() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = f.inv_nonzero(lead);
        let mut r = self.to_dense()?;
        let dg = g.len() - 1;
        if r.len() <= dg {
            return Ok((Self::zero(self.field.clone()), self.clone()));
        }
        let mut quot = vec![Elem::ZERO; r.len() - dg];
        for top in (dg..r.len()).rev() {
            let c = f.mul(r[top], lead_inv);
            if c.is_zero() {
                continue;
            }
            let shift = top - dg;
            quot[shift] = c;
            for (j, &gj) in g.iter().enumerate() {
                r[shift + j] = f.sub(r[shift + j], f.mul(c, gj));
            }
        }
        r.truncate(dg);
        Ok((self.wrap(&quot), self.wrap(&r)))
    }

    /// Truncation modulo `z^k`.
    pub fn truncate(&self, k: u64) -> Self {
        TildePoly {
            field: self.field.clone(),
            terms: self.terms.iter().copied().filter(|t| t.0 < k).collect(),
        }
    }

    /// Dense coefficient vector padded to `len`.
    pub fn dense_padded(&self, len: usize) -> Vec<Elem> {
        let mut v = self.dense();
        v.resize(len.max(v.len()), Elem::ZERO);
        v
    }
}
