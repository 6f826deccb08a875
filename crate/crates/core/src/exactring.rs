//! Exact coefficient rings: ℤ, ℚ and ℤ/pᵉ behind a single [`Ring`] trait.

use alloc::string::ToString;
use alloc::sync::Arc;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type ExactInt = BigInt;
pub type Rational = BigRational;

/// A commutative ring with exact arithmetic.
///
/// The ring value is a context (for ℤ/pᵉ it carries the modulus); elements
/// are plain values interpreted relative to it.
#[allow(clippy::wrong_self_convention)]
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn from_int(&self, n: &ExactInt) -> Self::Elem;
    /// Multiplicative inverse; fails when `a` is not a unit.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem>;
    /// Whether every nonzero element is a unit.
    fn is_field(&self) -> bool;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.from_int(&ExactInt::from(n))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn pow(&self, a: &Self::Elem, mut k: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Used by printers to write `a - b` rather than `a + -b`.
    fn is_negative(&self, _a: &Self::Elem) -> bool {
        false
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }
}

/// The rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = Rational;

    fn zero(&self) -> Rational {
        Rational::zero()
    }
    fn one(&self) -> Rational {
        Rational::one()
    }
    fn is_zero(&self, a: &Rational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &Rational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &Rational, b: &Rational) -> Rational {
        a + b
    }
    fn sub(&self, a: &Rational, b: &Rational) -> Rational {
        a - b
    }
    fn neg(&self, a: &Rational) -> Rational {
        -a
    }
    fn mul(&self, a: &Rational, b: &Rational) -> Rational {
        a * b
    }
    fn from_int(&self, n: &ExactInt) -> Rational {
        Rational::from_integer(n.clone())
    }
    fn inv(&self, a: &Rational) -> Result<Rational> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(a.recip())
        }
    }
    fn is_field(&self) -> bool {
        true
    }
    fn is_negative(&self, a: &Rational) -> bool {
        a.is_negative()
    }
    fn add_assign(&self, a: &mut Rational, b: &Rational) {
        *a += b;
    }
}

/// The rational integers; only ±1 are invertible.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = ExactInt;

    fn zero(&self) -> ExactInt {
        ExactInt::zero()
    }
    fn one(&self) -> ExactInt {
        ExactInt::one()
    }
    fn is_zero(&self, a: &ExactInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &ExactInt, b: &ExactInt) -> ExactInt {
        a + b
    }
    fn sub(&self, a: &ExactInt, b: &ExactInt) -> ExactInt {
        a - b
    }
    fn neg(&self, a: &ExactInt) -> ExactInt {
        -a
    }
    fn mul(&self, a: &ExactInt, b: &ExactInt) -> ExactInt {
        a * b
    }
    fn from_int(&self, n: &ExactInt) -> ExactInt {
        n.clone()
    }
    fn inv(&self, a: &ExactInt) -> Result<ExactInt> {
        if a.abs().is_one() {
            Ok(a.clone())
        } else if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Err(Error::NotAUnit { value: a.to_string(), modulus: "ℤ".into() })
        }
    }
    fn is_field(&self) -> bool {
        false
    }
    fn is_negative(&self, a: &ExactInt) -> bool {
        a.is_negative()
    }
    fn add_assign(&self, a: &mut ExactInt, b: &ExactInt) {
        *a += b;
    }
}

#[derive(PartialEq, Eq)]
struct ModInner {
    p: ExactInt,
    e: u32,
    modulus: ExactInt,
    half: ExactInt,
}

/// The ring ℤ/pᵉ for an odd prime `p`. Elements are residues in `[0, pᵉ)`.
#[derive(Clone)]
pub struct ModRing {
    inner: Arc<ModInner>,
}

impl PartialEq for ModRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || *self.inner == *other.inner
    }
}

impl fmt::Debug for ModRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.inner.p, self.inner.e)
    }
}

impl ModRing {
    pub fn new(p: &ExactInt, e: u32) -> Result<Self> {
        if e == 0 {
            return Err(Error::InvalidInput("exponent must be at least 1".into()));
        }
        if *p == ExactInt::from(2) {
            return Err(Error::BadPrime { p: p.to_string(), reason: "p = 2 is not supported".into() });
        }
        if !is_prime(p) {
            return Err(Error::BadPrime { p: p.to_string(), reason: "not an odd prime".into() });
        }
        let modulus = num_traits::pow(p.clone(), e as usize);
        let half = (&modulus - 1u32) / 2u32;
        Ok(ModRing { inner: Arc::new(ModInner { p: p.clone(), e, modulus, half }) })
    }

    pub fn p(&self) -> &ExactInt {
        &self.inner.p
    }

    pub fn exponent(&self) -> u32 {
        self.inner.e
    }

    /// pᵉ.
    pub fn modulus(&self) -> &ExactInt {
        &self.inner.modulus
    }

    /// The same prime with another exponent.
    pub fn with_exponent(&self, e: u32) -> Result<Self> {
        ModRing::new(&self.inner.p, e)
    }

    pub fn reduce(&self, n: &ExactInt) -> ExactInt {
        n.mod_floor(&self.inner.modulus)
    }

    /// Image of a rational number whose denominator is prime to p.
    pub fn from_rational(&self, q: &Rational) -> Result<ExactInt> {
        let den = self.inv(&self.reduce(q.denom()))?;
        Ok(self.mul(&self.reduce(q.numer()), &den))
    }

    /// The representative in `[-(pᵉ-1)/2, (pᵉ-1)/2]`.
    pub fn symmetric_lift(&self, r: &ExactInt) -> ExactInt {
        let r = self.reduce(r);
        if r > self.inner.half {
            r - &self.inner.modulus
        } else {
            r
        }
    }

    pub fn elem(&self, n: &ExactInt) -> ModRingElem {
        ModRingElem { ring: self.clone(), residue: self.reduce(n) }
    }
}

impl Ring for ModRing {
    type Elem = ExactInt;

    fn zero(&self) -> ExactInt {
        ExactInt::zero()
    }
    fn one(&self) -> ExactInt {
        ExactInt::one()
    }
    fn is_zero(&self, a: &ExactInt) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &ExactInt, b: &ExactInt) -> ExactInt {
        let s = a + b;
        if s >= self.inner.modulus {
            s - &self.inner.modulus
        } else {
            s
        }
    }
    fn sub(&self, a: &ExactInt, b: &ExactInt) -> ExactInt {
        let s = a - b;
        if s.is_negative() {
            s + &self.inner.modulus
        } else {
            s
        }
    }
    fn neg(&self, a: &ExactInt) -> ExactInt {
        if a.is_zero() {
            a.clone()
        } else {
            &self.inner.modulus - a
        }
    }
    /// Printing uses the symmetric representatives.
    fn is_negative(&self, a: &ExactInt) -> bool {
        a * 2u32 > self.inner.modulus
    }
    fn mul(&self, a: &ExactInt, b: &ExactInt) -> ExactInt {
        (a * b) % &self.inner.modulus
    }
    fn from_int(&self, n: &ExactInt) -> ExactInt {
        self.reduce(n)
    }
    fn inv(&self, a: &ExactInt) -> Result<ExactInt> {
        let a = self.reduce(a);
        let g = a.extended_gcd(&self.inner.modulus);
        if !g.gcd.is_one() {
            return Err(Error::NotAUnit { value: a.to_string(), modulus: self.inner.modulus.to_string() });
        }
        Ok(self.reduce(&g.x))
    }
    fn is_field(&self) -> bool {
        self.inner.e == 1
    }
    fn add_assign(&self, a: &mut ExactInt, b: &ExactInt) {
        *a += b;
        if *a >= self.inner.modulus {
            *a -= &self.inner.modulus;
        }
    }
}

/// A residue paired with its modulus.
#[derive(Clone, PartialEq, Debug)]
pub struct ModRingElem {
    ring: ModRing,
    residue: ExactInt,
}

impl ModRingElem {
    pub fn ring(&self) -> &ModRing {
        &self.ring
    }

    pub fn residue(&self) -> &ExactInt {
        &self.residue
    }

    pub fn symmetric_lift(&self) -> ExactInt {
        self.ring.symmetric_lift(&self.residue)
    }

    pub fn mod_inverse(&self) -> Result<ModRingElem> {
        Ok(ModRingElem { ring: self.ring.clone(), residue: self.ring.inv(&self.residue)? })
    }
}

impl fmt::Display for ModRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.residue, self.ring.modulus())
    }
}

fn mulmod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod_u64(mut a: u64, mut k: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while k > 0 {
        if k & 1 == 1 {
            acc = mulmod_u64(acc, a, m);
        }
        a = mulmod_u64(a, a, m);
        k >>= 1;
    }
    acc
}

const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &WITNESSES {
        if n.is_multiple_of(q) {
            return n == q;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = powmod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test: deterministic below 2⁶⁴, strong probable prime above.
pub fn is_prime(n: &ExactInt) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    if n.is_negative() || n.is_even() {
        return false;
    }
    let one = ExactInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'witness: for &a in &WITNESSES {
        let mut x = ExactInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The smallest prime `>= n`.
pub fn next_prime(n: &ExactInt) -> ExactInt {
    let mut c = if *n < ExactInt::from(2) { ExactInt::from(2) } else { n.clone() };
    while !is_prime(&c) {
        c += 1u32;
    }
    c
}

/// Least common multiple of the denominators of `qs`.
pub fn denominator_lcm<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> ExactInt {
    qs.into_iter().fold(ExactInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Smallest integer `>= q`.
pub fn ceil(q: &Rational) -> ExactInt {
    q.ceil().to_integer()
}

/// `q^k` for a possibly negative exponent.
pub fn rational_pow(q: &Rational, k: i64) -> Result<Rational> {
    if k < 0 && q.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let r = num_traits::pow(q.clone(), k.unsigned_abs() as usize);
    Ok(if k < 0 { r.recip() } else { r })
}

/// Binomial coefficient.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = ExactInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}
