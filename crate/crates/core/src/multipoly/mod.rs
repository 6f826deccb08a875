//! Sparse multivariate polynomials in `T1, …, Tn` with lexicographic order
//! `T1 < … < Tn`, plus dense univariate polynomials and triangular sets.

pub mod text;
pub mod triangular;
pub mod unipoly;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::exactring::Ring;

pub use triangular::TriangularBasis;
pub use unipoly::UniPoly;

/// An exponent vector. Ordered lexicographically with the last variable most
/// significant, so `T1 < T1^2 < T2 < T1*T2`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    /// `T_{i+1}^k` (variables are indexed from zero).
    pub fn var(n: usize, i: usize, k: u32) -> Self {
        let mut e = vec![0; n];
        e[i] = k;
        Monomial(e)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self` when `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if self.divides(other) {
            Some(Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn with_exp(&self, i: usize, k: u32) -> Monomial {
        let mut e = self.0.clone();
        e[i] = k;
        Monomial(e)
    }

    /// Highest variable with positive exponent.
    pub fn main_variable(&self) -> Option<usize> {
        self.0.iter().rposition(|&e| e > 0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev()).then(self.0.len().cmp(&other.0.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "T{}", i + 1)?;
            if e > 1 {
                write!(f, "^{}", e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// A polynomial over `R` in a fixed number of variables, stored as a map
/// from monomials to nonzero coefficients.
#[derive(Clone, Debug)]
pub struct MultiPoly<R: Ring> {
    ring: R,
    n: usize,
    terms: BTreeMap<Monomial, R::Elem>,
}

impl<R: Ring> PartialEq for MultiPoly<R> {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.terms == other.terms
    }
}

impl<R: Ring> MultiPoly<R> {
    pub fn zero(ring: R, n: usize) -> Self {
        MultiPoly { ring, n, terms: BTreeMap::new() }
    }

    pub fn constant(ring: R, n: usize, c: R::Elem) -> Self {
        Self::term(ring, Monomial::one(n), c)
    }

    pub fn one(ring: R, n: usize) -> Self {
        let c = ring.one();
        Self::constant(ring, n, c)
    }

    /// The variable `T_{i+1}`.
    pub fn var(ring: R, n: usize, i: usize) -> Self {
        let c = ring.one();
        Self::term(ring, Monomial::var(n, i, 1), c)
    }

    pub fn term(ring: R, m: Monomial, c: R::Elem) -> Self {
        let n = m.arity();
        let mut p = Self::zero(ring, n);
        p.add_term(m, c);
        p
    }

    pub fn from_terms(ring: R, n: usize, terms: impl IntoIterator<Item = (Monomial, R::Elem)>) -> Result<Self> {
        let mut p = Self::zero(ring, n);
        for (m, c) in terms {
            if m.arity() != n {
                return Err(Error::ArityMismatch { expected: n, found: m.arity() });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &R::Elem)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn coeff(&self, m: &Monomial) -> R::Elem {
        self.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &R::Elem)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(i)).max().unwrap_or(0)
    }

    /// Highest variable occurring in the polynomial.
    pub fn main_variable(&self) -> Option<usize> {
        self.leading_term().and_then(|(m, _)| m.main_variable())
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: R::Elem) {
        if self.ring.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                self.ring.add_assign(o.get_mut(), &c);
                if self.ring.is_zero(o.get()) {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            Err(Error::ArityMismatch { expected: self.n, found: other.n })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), c.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut r = self.clone();
        for (m, c) in &other.terms {
            r.add_term(m.clone(), self.ring.neg(c));
        }
        Ok(r)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut r = Self::zero(self.ring.clone(), self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                r.add_term(m1.mul(m2), self.ring.mul(c1, c2));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut r = Self::zero(self.ring.clone(), self.n);
        for (m, a) in &self.terms {
            r.add_term(m.clone(), self.ring.mul(a, c));
        }
        r
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &R::Elem) -> Self {
        let mut r = Self::zero(self.ring.clone(), self.n);
        for (m2, a) in &self.terms {
            r.add_term(m.mul(m2), self.ring.mul(a, c));
        }
        r
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.ring.clone(), self.n);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn evaluate(&self, point: &[R::Elem]) -> Result<R::Elem> {
        if point.len() != self.n {
            return Err(Error::ArityMismatch { expected: self.n, found: point.len() });
        }
        let mut powers: Vec<Vec<R::Elem>> = Vec::with_capacity(self.n);
        for (i, x) in point.iter().enumerate() {
            let d = self.degree_in(i) as usize;
            let mut pw = Vec::with_capacity(d + 1);
            pw.push(self.ring.one());
            for k in 1..=d {
                pw.push(self.ring.mul(&pw[k - 1], x));
            }
            powers.push(pw);
        }
        let mut acc = self.ring.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = self.ring.mul(&t, &powers[i][e as usize]);
                }
            }
            self.ring.add_assign(&mut acc, &t);
        }
        Ok(acc)
    }

    /// Applies `f` to every coefficient, possibly changing the ring.
    pub fn map_coeffs<S: Ring>(
        &self,
        ring: &S,
        mut f: impl FnMut(&R::Elem) -> Result<S::Elem>,
    ) -> Result<MultiPoly<S>> {
        let mut r = MultiPoly::zero(ring.clone(), self.n);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), f(c)?);
        }
        Ok(r)
    }

    /// Re-embeds into `n` variables; shrinking requires the dropped variables to be absent.
    pub fn with_arity(&self, n: usize) -> Result<Self> {
        let mut r = Self::zero(self.ring.clone(), n);
        for (m, c) in &self.terms {
            if m.exps()[n.min(self.n)..].iter().any(|&e| e > 0) {
                return Err(Error::ArityMismatch { expected: n, found: self.n });
            }
            let mut e = m.exps()[..n.min(self.n)].to_vec();
            e.resize(n, 0);
            r.add_term(Monomial::new(e), c.clone());
        }
        Ok(r)
    }

    /// Whether only `T1, …, Tk` occur.
    pub fn uses_only_first(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.exps()[k..].iter().all(|&e| e == 0))
    }

    /// Writes the polynomial as `Σ_k c_k · T_{i+1}^k`; returns the `c_k` by `k`.
    pub fn coefficients_in(&self, i: usize) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.exp(i))
                .or_insert_with(|| Self::zero(self.ring.clone(), self.n))
                .add_term(m.with_exp(i, 0), c.clone());
        }
        out
    }
}

impl<'a, R: Ring> Add<&'a MultiPoly<R>> for &'a MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn add(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        self.checked_add(rhs).expect("polynomial arity mismatch")
    }
}

impl<'a, R: Ring> Sub<&'a MultiPoly<R>> for &'a MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn sub(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        self.checked_sub(rhs).expect("polynomial arity mismatch")
    }
}

impl<'a, R: Ring> Mul<&'a MultiPoly<R>> for &'a MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn mul(self, rhs: &'a MultiPoly<R>) -> MultiPoly<R> {
        self.checked_mul(rhs).expect("polynomial arity mismatch")
    }
}

impl<R: Ring> Neg for &MultiPoly<R> {
    type Output = MultiPoly<R>;
    fn neg(self) -> MultiPoly<R> {
        let mut r = MultiPoly::zero(self.ring.clone(), self.n);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), self.ring.neg(c));
        }
        r
    }
}

/// Terms in descending order, `T2 + T1^3 - 3*T1 + 2` style.
impl<R: Ring> fmt::Display for MultiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = self.ring.is_negative(c);
            let mag = if neg { self.ring.neg(c) } else { c.clone() };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{}", mag)?;
            } else if self.ring.is_one(&mag) {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", mag, m)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::text::parse_poly;
    use super::*;
    use crate::exactring::{ExactInt, ModRing, Rational, Rationals};
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(s: &str, n: usize) -> MultiPoly<Rationals> {
        parse_poly(s, Some(n)).unwrap()
    }

    #[test]
    fn monomial_order_is_lex_with_last_variable_largest() {
        let a = Monomial::new(vec![5, 0]);
        let b = Monomial::new(vec![0, 1]);
        let c = Monomial::new(vec![1, 1]);
        assert!(a < b && b < c);
        assert!(Monomial::new(vec![1, 0]) < Monomial::new(vec![2, 0]));
    }

    #[test]
    fn arithmetic_examples() {
        let p = &q("T1 + 1", 1) * &q("T1 - 1", 1);
        assert_eq!(p, q("T1^2 - 1", 1));
        let f2 = q("T2 + T1^3 - 3*T1 + 2", 2);
        assert_eq!(&f2 + &MultiPoly::zero(Rationals, 2), f2);
        assert_eq!(&f2 * &MultiPoly::one(Rationals, 2), f2);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let a = q("T1", 1);
        let b = q("T2", 2);
        assert!(matches!(a.checked_add(&b), Err(Error::ArityMismatch { .. })));
        assert!(a.evaluate(&[Rational::from_integer(1.into()), Rational::from_integer(2.into())]).is_err());
    }

    #[test]
    fn evaluation_examples() {
        let c = q("7/3", 2);
        let pt = [Rational::from_integer(5.into()), Rational::from_integer(8.into())];
        assert_eq!(c.evaluate(&pt).unwrap(), Rational::new(7.into(), 3.into()));
        let t = q("T1*T2", 2);
        let pt = [Rational::from_integer(3.into()), Rational::from_integer(5.into())];
        assert_eq!(t.evaluate(&pt).unwrap(), Rational::from_integer(15.into()));
    }

    #[test]
    fn printing_is_descending_lex() {
        let p = q("2 - 3*T1 + T1^3 + T2", 2);
        assert_eq!(p.to_string(), "T2 + T1^3 - 3*T1 + 2");
        let p = q("-T1^4*T2^3*2/13 + T2^4", 2);
        assert_eq!(p.to_string(), "T2^4 - 2/13*T1^4*T2^3");
        assert_eq!(MultiPoly::zero(Rationals, 3).to_string(), "0");
    }

    #[test]
    fn coefficients_in_a_variable() {
        let p = q("T2^2*T1 + 3*T2^2 + T1", 2);
        let cs = p.coefficients_in(1);
        assert_eq!(cs[&2], q("T1 + 3", 2));
        assert_eq!(cs[&0], q("T1", 2));
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, n), -5i64..6), 0..6)
    }

    fn build<R: Ring>(ring: &R, n: usize, t: &[(Vec<u32>, i64)]) -> MultiPoly<R> {
        MultiPoly::from_terms(ring.clone(), n, t.iter().map(|(e, c)| (Monomial::new(e.clone()), ring.from_i64(*c))))
            .unwrap()
    }

    proptest! {
        #[test]
        fn distributive_over_rationals(a in small_poly(3), b in small_poly(3), c in small_poly(3)) {
            let (a, b, c) = (build(&Rationals, 3, &a), build(&Rationals, 3, &b), build(&Rationals, 3, &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn distributive_over_fp(a in small_poly(2), b in small_poly(2), c in small_poly(2)) {
            let r = ModRing::new(&ExactInt::from(13), 1).unwrap();
            let (a, b, c) = (build(&r, 2, &a), build(&r, 2, &b), build(&r, 2, &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in small_poly(3), b in small_poly(3), pt in proptest::collection::vec(0i64..97, 3)) {
            let r = ModRing::new(&ExactInt::from(97), 2).unwrap();
            let (a, b) = (build(&r, 3, &a), build(&r, 3, &b));
            let pt: Vec<ExactInt> = pt.into_iter().map(ExactInt::from).collect();
            let lhs = (&a * &b).evaluate(&pt).unwrap();
            let rhs = r.mul(&a.evaluate(&pt).unwrap(), &b.evaluate(&pt).unwrap());
            prop_assert_eq!(lhs, rhs);
            let lhs = (&a + &b).evaluate(&pt).unwrap();
            let rhs = r.add(&a.evaluate(&pt).unwrap(), &b.evaluate(&pt).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn text_roundtrip(a in small_poly(3)) {
            let p = build(&Rationals, 3, &a);
            let back = parse_poly(&p.to_string(), Some(3)).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
