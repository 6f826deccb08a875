//! Dense univariate polynomials, low degree first.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::exactring::{ExactInt, Ring};

#[derive(Clone, Debug)]
pub struct UniPoly<R: Ring> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for UniPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<R: Ring> UniPoly<R> {
    /// From coefficients `c0, c1, …`; trailing zeros are dropped.
    pub fn new(ring: R, mut coeffs: Vec<R::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| ring.is_zero(c)) {
            coeffs.pop();
        }
        UniPoly { ring, coeffs }
    }

    pub fn zero(ring: R) -> Self {
        UniPoly { ring, coeffs: Vec::new() }
    }

    pub fn one(ring: R) -> Self {
        let c = ring.one();
        Self::new(ring, vec![c])
    }

    pub fn constant(ring: R, c: R::Elem) -> Self {
        Self::new(ring, vec![c])
    }

    /// `c·Z^k`.
    pub fn monomial(ring: R, k: usize, c: R::Elem) -> Self {
        let mut v = vec![ring.zero(); k + 1];
        v[k] = c;
        Self::new(ring, v)
    }

    /// `Z - a`.
    pub fn linear(ring: R, a: &R::Elem) -> Self {
        let v = vec![ring.neg(a), ring.one()];
        Self::new(ring, v)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R::Elem {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lead(&self) -> R::Elem {
        self.coeffs.last().cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.ring.is_one(c))
    }

    pub fn eval(&self, x: &R::Elem) -> R::Elem {
        let mut acc = self.ring.zero();
        for c in self.coeffs.iter().rev() {
            acc = self.ring.add(&self.ring.mul(&acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| self.ring.mul(c, &self.ring.from_i64(k as i64)))
            .collect();
        Self::new(self.ring.clone(), v)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|k| self.ring.add(&self.coeff(k), &other.coeff(k))).collect();
        Self::new(self.ring.clone(), v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let v = (0..n).map(|k| self.ring.sub(&self.coeff(k), &other.coeff(k))).collect();
        Self::new(self.ring.clone(), v)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.ring.clone());
        }
        let mut v = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                let t = self.ring.mul(a, b);
                self.ring.add_assign(&mut v[i + j], &t);
            }
        }
        Self::new(self.ring.clone(), v)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Self::new(self.ring.clone(), self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect())
    }

    /// Quotient and remainder; the divisor's leading coefficient must be a unit.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let li = self.ring.inv(&d.lead())?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(self.ring.clone()), self.clone()));
        }
        let mut q = vec![self.ring.zero(); r.len() - dd];
        for k in (dd..r.len()).rev() {
            let c = self.ring.mul(&r[k], &li);
            if self.ring.is_zero(&c) {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = self.ring.mul(&c, dc);
                r[k - dd + j] = self.ring.sub(&r[k - dd + j], &t);
            }
            q[k - dd] = c;
        }
        r.truncate(dd);
        Ok((Self::new(self.ring.clone(), q), Self::new(self.ring.clone(), r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self> {
        Ok(self.divrem(d)?.1)
    }

    pub fn monic(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let li = self.ring.inv(&self.lead())?;
        Ok(self.scale(&li))
    }

    /// Monic greatest common divisor over a field.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^k mod m`.
    pub fn powmod(&self, k: &ExactInt, m: &Self) -> Result<Self> {
        let base = self.rem(m)?;
        let mut acc = Self::one(self.ring.clone()).rem(m)?;
        let bits = k.bits();
        for b in (0..bits).rev() {
            acc = acc.mul(&acc).rem(m)?;
            if k.bit(b) {
                acc = acc.mul(&base).rem(m)?;
            }
        }
        Ok(acc)
    }

    /// Resultant over a field, by the Euclidean remainder sequence.
    pub fn resultant(&self, other: &Self) -> Result<R::Elem> {
        let ring = self.ring.clone();
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut acc = ring.one();
        loop {
            let (Some(m), Some(n)) = (a.degree(), b.degree()) else {
                return Ok(ring.zero());
            };
            if n == 0 {
                return Ok(ring.mul(&acc, &ring.pow(&b.lead(), m as u64)));
            }
            let r = a.rem(&b)?;
            let Some(k) = r.degree() else {
                return Ok(ring.zero());
            };
            if (m * n) % 2 == 1 {
                acc = ring.neg(&acc);
            }
            acc = ring.mul(&acc, &ring.pow(&b.lead(), (m - k) as u64));
            a = b;
            b = r;
        }
    }

    pub fn map_coeffs<S: Ring>(&self, ring: &S, mut f: impl FnMut(&R::Elem) -> Result<S::Elem>) -> Result<UniPoly<S>> {
        let v = self.coeffs.iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(UniPoly::new(ring.clone(), v))
    }

    /// Reads a polynomial that involves only variable `var`.
    pub fn from_multi(p: &MultiPoly<R>, var: usize) -> Self {
        let d = p.degree_in(var) as usize;
        let mut v = vec![p.ring().zero(); d + 1];
        for (m, c) in p.terms() {
            v[m.exp(var) as usize] = c.clone();
        }
        Self::new(p.ring().clone(), v)
    }

    /// Embeds as a polynomial in `T_{var+1}` among `n` variables.
    pub fn to_multi(&self, n: usize, var: usize) -> MultiPoly<R> {
        let mut p = MultiPoly::zero(self.ring.clone(), n);
        for (k, c) in self.coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, var, k as u32), c.clone());
        }
        p
    }
}

/// Prints in the variable `Z`.
impl<R: Ring> fmt::Display for UniPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = alloc::format!("{}", self.to_multi(1, 0));
        f.write_str(&s.replace("T1", "Z"))
    }
}

/// Cauchy's bound `1 + max |a_k|` for a monic rational polynomial: every
/// complex root lies strictly inside the disc of that radius.
pub fn cauchy_bound(f: &UniPoly<crate::exactring::Rationals>) -> crate::exactring::Rational {
    let n = f.coeffs.len().saturating_sub(1);
    let m = f.coeffs[..n].iter().map(|c| c.abs()).max().unwrap_or_else(Zero::zero);
    m + crate::exactring::Rational::one()
}

/// Content-free integer primitive part of a rational polynomial.
pub fn integer_multiple(f: &UniPoly<crate::exactring::Rationals>) -> (ExactInt, Vec<ExactInt>) {
    let c = f.coeffs.iter().fold(ExactInt::one(), |acc, q| acc.lcm(q.denom()));
    let v = f.coeffs.iter().map(|q| (q * crate::exactring::Rational::from_integer(c.clone())).to_integer()).collect();
    (c, v)
}
