//! p-adic approximation of the roots and the precision bookkeeping that
//! makes modular reconstruction exact.
//!
//! For monic `f ∈ ℚ[Z]` with denominators clearing to `γ`, the integer
//! `Δᵢ = γ^{n(n−1)⌈i/2⌉+dᵢ} d(f)^{⌈i/2⌉}` makes `Δᵢ f̂ᵢ` integral, and every
//! such integer coefficient is bounded by `λᵢ`. Roots known modulo `p^e`
//! with `p^e > 2λᵢ − 1` then pin `Δᵢ f̂ᵢ` down from its symmetric residues.

use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactring::{self, ExactInt, ModRing, Rational, Rationals, Ring};
use crate::multipoly::unipoly::cauchy_bound;
use crate::multipoly::UniPoly;
use crate::permgrp::Perm;

/// Below this bound split primes are recognised by evaluating at every residue.
const BRUTE_FORCE_LIMIT: u64 = 10_000;

pub const DEFAULT_PRIME_SEARCH_CAP: usize = 1_000_000;

/// `∏_{r<s}(x_r − x_s)²`, via `(−1)^{n(n−1)/2} Res(f, f′) / lc(f)`.
pub fn discriminant(f: &UniPoly<Rationals>) -> Result<Rational> {
    let n = f.degree().ok_or(Error::InvalidInput("the zero polynomial has no discriminant".into()))?;
    if n == 0 {
        return Err(Error::InvalidInput("a constant has no discriminant".into()));
    }
    let r = f.resultant(&f.derivative())?;
    let r = r / f.lead();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -r } else { r })
}

/// `γ = c`: the lcm of the coefficient denominators, so that `γ·x_j` are algebraic integers.
pub fn gamma(f: &UniPoly<Rationals>) -> ExactInt {
    exactring::denominator_lcm(f.coeffs())
}

fn require_monic(f: &UniPoly<Rationals>) -> Result<usize> {
    match f.degree() {
        Some(n) if n >= 1 && f.is_monic() => Ok(n),
        _ => Err(Error::InvalidInput(format!("`{}` is not a monic polynomial of positive degree", f))),
    }
}

/// `f` reduced modulo `p^e`; `p` must not divide any denominator.
pub fn reduce_poly(f: &UniPoly<Rationals>, ring: &ModRing) -> Result<UniPoly<ModRing>> {
    f.map_coeffs(ring, |q| ring.from_rational(q))
}

fn prime_is_admissible(p: &ExactInt, c: &ExactInt, disc: &Rational) -> bool {
    p != &ExactInt::from(2)
        && !c.is_multiple_of(p)
        && !disc.numer().is_multiple_of(p)
        && !disc.denom().is_multiple_of(p)
}

/// Whether `f mod p` has `deg f` distinct roots in `𝔽_p`.
fn splits_mod(f: &UniPoly<Rationals>, p: &ExactInt) -> Result<bool> {
    let ring = ModRing::new(p, 1)?;
    let fp = reduce_poly(f, &ring)?;
    let n = fp.degree().unwrap_or(0);
    if let Some(small) = p.to_u64().filter(|&q| q < BRUTE_FORCE_LIMIT) {
        if (small as usize) < n {
            return Ok(false);
        }
        let mut count = 0;
        for a in 0..small {
            if ring.is_zero(&fp.eval(&ExactInt::from(a))) {
                count += 1;
            }
        }
        return Ok(count == n);
    }
    let z = UniPoly::monomial(ring.clone(), 1, ring.one());
    let zp = z.powmod(p, &fp)?;
    if !zp.sub(&z).rem(&fp)?.is_zero() {
        return Ok(false);
    }
    Ok(fp.gcd(&fp.derivative())?.degree() == Some(0))
}

/// The smallest admissible odd prime `p ≥ start` at which `f` splits into
/// distinct linear factors, testing at most `cap` primes.
pub fn find_split_prime(f: &UniPoly<Rationals>, start: &ExactInt, cap: usize) -> Result<ExactInt> {
    require_monic(f)?;
    let c = gamma(f);
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::InvalidInput("f has a repeated root".into()));
    }
    let mut p = exactring::next_prime(&start.max(&ExactInt::from(3)).clone());
    for _ in 0..cap {
        if prime_is_admissible(&p, &c, &disc) && splits_mod(f, &p)? {
            return Ok(p);
        }
        p = exactring::next_prime(&(p + 1u32));
    }
    Err(Error::NoSplitPrimeFound { start: start.to_string(), cap: cap.to_string() })
}

/// Checks that `p` is admissible and that `f` splits there.
pub fn check_split_prime(f: &UniPoly<Rationals>, p: &ExactInt) -> Result<()> {
    require_monic(f)?;
    if !exactring::is_prime(p) || p == &ExactInt::from(2) {
        return Err(Error::BadPrime { p: p.to_string(), reason: "not an odd prime".into() });
    }
    let disc = discriminant(f)?;
    if !prime_is_admissible(p, &gamma(f), &disc) {
        return Err(Error::BadPrime { p: p.to_string(), reason: "divides a denominator or the discriminant".into() });
    }
    if !splits_mod(f, p)? {
        return Err(Error::BadPrime {
            p: p.to_string(),
            reason: "f does not split into distinct linear factors".into(),
        });
    }
    Ok(())
}

/// Roots of a squarefree, fully split `g` over `𝔽_p` by equal-degree
/// splitting with the deterministic shifts `Z + 1, Z + 2, …`.
fn split_linear(g: &UniPoly<ModRing>, out: &mut Vec<ExactInt>) -> Result<()> {
    let ring = g.ring().clone();
    match g.degree() {
        None | Some(0) => return Ok(()),
        Some(1) => {
            let r = ring.neg(&ring.mul(&g.coeff(0), &ring.inv(&g.coeff(1))?));
            out.push(r);
            return Ok(());
        }
        _ => {}
    }
    let half: ExactInt = (ring.p() - 1u32) / 2u32;
    let mut a = ExactInt::one();
    loop {
        let shift = UniPoly::new(ring.clone(), vec![ring.reduce(&a), ring.one()]);
        let h = shift.powmod(&half, g)?.sub(&UniPoly::one(ring.clone()));
        let d = h.gcd(g)?;
        let dd = d.degree().unwrap_or(0);
        if dd > 0 && Some(dd) < g.degree() {
            let (q, _) = g.divrem(&d)?;
            split_linear(&d, out)?;
            split_linear(&q, out)?;
            return Ok(());
        }
        a += 1u32;
        if &a >= ring.p() {
            return Err(Error::BadPrime { p: ring.p().to_string(), reason: "polynomial does not split".into() });
        }
    }
}

/// The roots of `f` in `𝔽_p`, in increasing order of residue.
pub fn roots_mod_p(f: &UniPoly<Rationals>, p: &ExactInt) -> Result<Vec<ExactInt>> {
    let ring = ModRing::new(p, 1)?;
    let fp = reduce_poly(f, &ring)?.monic()?;
    let mut out = Vec::new();
    if let Some(small) = p.to_u64().filter(|&q| q < BRUTE_FORCE_LIMIT) {
        for a in 0..small {
            let a = ExactInt::from(a);
            if ring.is_zero(&fp.eval(&a)) {
                out.push(a);
            }
        }
    } else {
        split_linear(&fp, &mut out)?;
        out.sort();
    }
    Ok(out)
}

/// A prime `p`, a precision `e`, and a labelled tuple of roots of `f` in `ℤ/p^e`.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSystem {
    f: UniPoly<Rationals>,
    ring: ModRing,
    roots: Vec<ExactInt>,
}

impl RootSystem {
    /// Validates that the residues are roots of `f` modulo `p^e`, distinct modulo `p`.
    pub fn new(f: UniPoly<Rationals>, ring: ModRing, roots: Vec<ExactInt>) -> Result<Self> {
        let n = require_monic(&f)?;
        if roots.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: roots.len() });
        }
        let fm = reduce_poly(&f, &ring)?;
        let roots: Vec<ExactInt> = roots.iter().map(|r| ring.reduce(r)).collect();
        for r in &roots {
            if !ring.is_zero(&fm.eval(r)) {
                return Err(Error::InvalidInput(format!("{} is not a root of f modulo {}", r, ring.modulus())));
            }
        }
        let mut low: Vec<ExactInt> = roots.iter().map(|r| r.mod_floor(ring.p())).collect();
        low.sort();
        low.dedup();
        if low.len() != n {
            return Err(Error::BadPrime { p: ring.p().to_string(), reason: "roots collide modulo p".into() });
        }
        Ok(RootSystem { f, ring, roots })
    }

    pub fn f(&self) -> &UniPoly<Rationals> {
        &self.f
    }

    pub fn ring(&self) -> &ModRing {
        &self.ring
    }

    pub fn p(&self) -> &ExactInt {
        self.ring.p()
    }

    pub fn exponent(&self) -> u32 {
        self.ring.exponent()
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    /// Residues in `[0, p^e)`.
    pub fn roots(&self) -> &[ExactInt] {
        &self.roots
    }

    /// The residues modulo `p`.
    pub fn residues_mod_p(&self) -> Vec<ExactInt> {
        self.roots.iter().map(|r| r.mod_floor(self.ring.p())).collect()
    }

    /// The tuple `(x_{λ(1)}, …, x_{λ(n)})`.
    pub fn relabel(&self, lambda: &Perm) -> Result<Self> {
        if lambda.degree() != self.n() {
            return Err(Error::ArityMismatch { expected: self.n(), found: lambda.degree() });
        }
        let roots = (0..self.n()).map(|i| self.roots[lambda.apply(i)].clone()).collect();
        Ok(RootSystem { f: self.f.clone(), ring: self.ring.clone(), roots })
    }

    /// The same roots modulo `p^{e'}` for `e' ≤ e`.
    pub fn truncate(&self, e: u32) -> Result<Self> {
        if e > self.exponent() {
            return Err(Error::InsufficientPrecision { needed: e, have: self.exponent() });
        }
        let ring = self.ring.with_exponent(e)?;
        let roots = self.roots.iter().map(|r| ring.reduce(r)).collect();
        Ok(RootSystem { f: self.f.clone(), ring, roots })
    }

    /// Newton-lifts every root to precision `p^e`, keeping the labels.
    pub fn lift(&self, e: u32) -> Result<Self> {
        if e <= self.exponent() {
            return self.truncate(e);
        }
        let df = self.f.derivative();
        let mut k = self.exponent();
        let mut roots = self.roots.clone();
        while k < e {
            let k2 = (2 * k).min(e);
            let ring = self.ring.with_exponent(k2)?;
            let fm = reduce_poly(&self.f, &ring)?;
            let dfm = reduce_poly(&df, &ring)?;
            for r in roots.iter_mut() {
                let d = dfm.eval(r);
                let di = ring.inv(&d).map_err(|_| Error::BadPrime {
                    p: self.p().to_string(),
                    reason: "f' vanishes at a root modulo p".into(),
                })?;
                *r = ring.sub(r, &ring.mul(&fm.eval(r), &di));
            }
            k = k2;
        }
        RootSystem::new(self.f.clone(), self.ring.with_exponent(e)?, roots)
    }
}

/// The roots of `f` modulo `p^e`, labelled by increasing residue modulo `p`.
pub fn hensel_lift(f: &UniPoly<Rationals>, p: &ExactInt, e: u32) -> Result<RootSystem> {
    let base = roots_mod_p(f, p)?;
    RootSystem::new(f.clone(), ModRing::new(p, 1)?, base)?.lift(e)
}

/// Lifts a given labelling of the roots modulo `p`.
pub fn lift_labelled(f: &UniPoly<Rationals>, p: &ExactInt, residues: &[ExactInt], e: u32) -> Result<RootSystem> {
    RootSystem::new(f.clone(), ModRing::new(p, 1)?, residues.to_vec())?.lift(e)
}

fn ceil_half(i: usize) -> u64 {
    i.div_ceil(2) as u64
}

/// `Δᵢ = γ^{n(n−1)⌈i/2⌉+dᵢ} d(f)^{⌈i/2⌉}` for one-based `i`.
///
/// With `γ` clearing the denominators, `γ^{n(n−1)} d(f)` is an integer, so the
/// value is integral for every rational `f`.
pub fn clearing_constant(n: usize, i: usize, gamma: &ExactInt, disc: &Rational, degrees: &[u32]) -> Result<ExactInt> {
    let h = ceil_half(i);
    let a = (n * (n - 1)) as u64 * h + degrees[i - 1] as u64;
    let g = Rational::from_integer(gamma.clone());
    let v = Rationals.pow(&g, a) * Rationals.pow(disc, h);
    if !v.is_integer() {
        return Err(Error::InvalidInput(format!("clearing constant {} is not an integer", v)));
    }
    Ok(v.to_integer())
}

/// `λᵢ = max(|Δᵢ|, γ^A M^{dᵢ} D^E ∏_{j≤i} max_k binom(d_j−1, k−1) M^{k−1})`
/// with `A = n(n−1)⌈i/2⌉ + dᵢ` and `E = n(n−1)⌈i/2⌉ − Σ_{j≤i} d_j + i`.
pub fn coefficient_bound(
    n: usize,
    i: usize,
    gamma: &ExactInt,
    m: &Rational,
    d: &Rational,
    degrees: &[u32],
    delta: &ExactInt,
) -> Result<Rational> {
    if m < &Rational::one() || d < &Rational::one() {
        return Err(Error::InvalidInput("root bounds must be at least 1".into()));
    }
    let h = ceil_half(i) as i64;
    let nn = (n * (n - 1)) as i64;
    let di = degrees[i - 1] as i64;
    let sum: i64 = degrees[..i].iter().map(|&x| x as i64).sum();
    let a = nn * h + di;
    let e = nn * h - sum + i as i64;
    let mut prod = exactring::rational_pow(&Rational::from_integer(gamma.clone()), a)?
        * exactring::rational_pow(m, di)?
        * exactring::rational_pow(d, e)?;
    for &dj in &degrees[..i] {
        let best = (1..=dj as u64)
            .map(|k| {
                Rational::from_integer(exactring::binomial(dj as u64 - 1, k - 1))
                    * exactring::rational_pow(m, k as i64 - 1).unwrap()
            })
            .max()
            .unwrap_or_else(Rational::one);
        prod *= best;
    }
    let dl = Rational::from_integer(delta.abs());
    Ok(if dl > prod { dl } else { prod })
}

/// The least `e ≥ 1` with `p^e > ⌈2λ⌉ − 1`, by exact comparison.
pub fn precision_exponent(lambda: &Rational, p: &ExactInt) -> u32 {
    let target = exactring::ceil(&(lambda * Rational::from_integer(2.into()))) - 1u32;
    let mut e = 1;
    let mut pe = p.clone();
    while pe <= target {
        pe *= p;
        e += 1;
    }
    e
}

/// Every constant that enters the precision choice for one `f`, group shape and prime.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundData {
    pub gamma: ExactInt,
    pub c: ExactInt,
    pub discriminant: Rational,
    /// Strict upper bound on every complex root modulus.
    pub m: Rational,
    /// Strict upper bound on every difference of two roots.
    pub d: Rational,
    pub deltas: Vec<ExactInt>,
    pub lambdas: Vec<Rational>,
    pub exponents: Vec<u32>,
}

impl BoundData {
    pub fn new(f: &UniPoly<Rationals>, degrees: &[u32], p: &ExactInt) -> Result<Self> {
        let n = require_monic(f)?;
        if degrees.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: degrees.len() });
        }
        let c = gamma(f);
        let disc = discriminant(f)?;
        let m = cauchy_bound(f);
        let d = &m * Rational::from_integer(2.into());
        let mut deltas = Vec::with_capacity(n);
        let mut lambdas = Vec::with_capacity(n);
        let mut exponents = Vec::with_capacity(n);
        for i in 1..=n {
            let delta = clearing_constant(n, i, &c, &disc, degrees)?;
            let lambda = coefficient_bound(n, i, &c, &m, &d, degrees, &delta)?;
            exponents.push(precision_exponent(&lambda, p));
            deltas.push(delta);
            lambdas.push(lambda);
        }
        Ok(BoundData { gamma: c.clone(), c, discriminant: disc, m, d, deltas, lambdas, exponents })
    }

    /// The single exponent `max eᵢ` used for one lift.
    pub fn exponent(&self) -> u32 {
        self.exponents.iter().copied().max().unwrap_or(1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::text::parse_univariate;
    use proptest::prelude::*;

    const F1: &str = "Z^5 - Z^4 - 4*Z^3 + 3*Z^2 + 3*Z - 1";
    const F2: &str = "Z^5 - Z^4 + 2*Z^3 - 4*Z^2 + Z - 1";
    const F5: &str = "Z^7 - Z^6 - 12*Z^5 + 7*Z^4 + 28*Z^3 - 14*Z^2 - 9*Z - 1";

    fn f(s: &str) -> UniPoly<Rationals> {
        parse_univariate(s).unwrap()
    }

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn discriminants() {
        assert_eq!(discriminant(&f(F1)).unwrap(), Rational::from_integer(int(14641)));
        assert_eq!(discriminant(&f(F2)).unwrap(), Rational::from_integer(int(35152)));
        assert_eq!(discriminant(&f("Z^2 - 2")).unwrap(), Rational::from_integer(int(8)));
        // b² − 4c for Z² + Z + 1 is −3
        assert_eq!(discriminant(&f("Z^2 + Z + 1")).unwrap(), Rational::from_integer(int(-3)));
    }

    #[test]
    fn split_primes() {
        assert_eq!(find_split_prime(&f(F1), &int(3), 1000).unwrap(), int(23));
        assert_eq!(find_split_prime(&f("Z^2 - 2"), &int(3), 1000).unwrap(), int(7));
        assert!(check_split_prime(&f(F5), &int(41)).is_ok());
        assert!(check_split_prime(&f(F1), &int(19)).is_err());
        // Z² + 1 splits only at p ≡ 1 mod 4
        assert_eq!(find_split_prime(&f("Z^2 + 1"), &int(7), 1000).unwrap(), int(13));
        assert!(matches!(find_split_prime(&f("Z^2 + 1"), &int(7), 1), Err(Error::NoSplitPrimeFound { .. })));
    }

    #[test]
    fn primes_below_the_split_prime_fail_by_root_count() {
        for p in [3, 5, 7, 13, 17, 19] {
            let roots = roots_mod_p(&f(F1), &int(p)).unwrap();
            assert!(roots.len() < 5, "p = {}", p);
        }
    }

    #[test]
    fn roots_at_a_large_prime_agree_with_evaluation() {
        // 10007 ≡ 1 mod 4 fails, 10009 ≡ 1 mod 4 splits Z² + 1
        let p = int(10009);
        let r = roots_mod_p(&f("Z^2 + 1"), &p).unwrap();
        assert_eq!(r.len(), 2);
        for x in &r {
            assert!(((x * x) + 1u32).is_multiple_of(&p));
        }
        let p = find_split_prime(&f(F1), &int(10_000), 10_000).unwrap();
        let r = roots_mod_p(&f(F1), &p).unwrap();
        assert_eq!(r.len(), 5);
        let ring = ModRing::new(&p, 1).unwrap();
        let fp = reduce_poly(&f(F1), &ring).unwrap();
        assert!(r.iter().all(|x| fp.eval(x).is_zero()));
    }

    #[test]
    fn lifting() {
        let rs = hensel_lift(&f(F1), &int(23), 1).unwrap();
        let mut got = rs.roots().to_vec();
        got.sort();
        assert_eq!(got, [9, 12, 13, 17, 19].map(int));
        let r4 = hensel_lift(&f(F1), &int(23), 4).unwrap();
        let ring = r4.ring().clone();
        let fm = reduce_poly(&f(F1), &ring).unwrap();
        for (a, b) in r4.roots().iter().zip(rs.roots()) {
            assert_eq!(&a.mod_floor(&int(23)), b);
            assert!(fm.eval(a).is_zero());
        }
        assert_eq!(r4.truncate(2).unwrap(), hensel_lift(&f(F1), &int(23), 2).unwrap());
        assert!(matches!(rs.truncate(3), Err(Error::InsufficientPrecision { .. })));
    }

    #[test]
    fn rejects_bad_root_systems() {
        let ring = ModRing::new(&int(23), 1).unwrap();
        assert!(RootSystem::new(f(F1), ring.clone(), [19, 9, 13, 17, 17].map(int).to_vec()).is_err());
        assert!(RootSystem::new(f(F1), ring.clone(), [19, 9, 13, 17, 1].map(int).to_vec()).is_err());
        assert!(RootSystem::new(f(F1), ring, [19, 9, 13, 17].map(int).to_vec()).is_err());
    }

    #[test]
    fn clearing_constants_and_exponents() {
        let d = Rational::from_integer(int(14641));
        let deg = [5, 1, 1, 1, 1];
        assert_eq!(clearing_constant(5, 1, &int(1), &d, &deg).unwrap(), int(14641));
        assert_eq!(clearing_constant(5, 2, &int(1), &d, &deg).unwrap(), int(14641));
        assert_eq!(clearing_constant(5, 3, &int(1), &d, &deg).unwrap(), int(14641).pow(2));
        assert_eq!(clearing_constant(4, 3, &int(1), &Rational::one(), &[1, 1, 1, 1]).unwrap(), int(1));
        assert_eq!(precision_exponent(&Rational::one(), &int(23)), 1);
        assert_eq!(precision_exponent(&Rational::from_integer(int(14641)), &int(23)), 4);
        let half = Rational::from_integer((int(23).pow(3) - 1) / 2);
        assert_eq!(precision_exponent(&half, &int(23)), 3);
    }

    #[test]
    fn trivial_bound() {
        let one = Rational::one();
        let l = coefficient_bound(3, 2, &int(1), &one, &one, &[1, 1, 1], &int(1)).unwrap();
        assert_eq!(l, one);
        assert!(
            coefficient_bound(3, 2, &int(1), &Rational::new(1.into(), 2.into()), &one, &[1, 1, 1], &int(1)).is_err()
        );
    }

    #[test]
    fn bound_dominates_the_cyclic_quintic_basis() {
        let b = BoundData::new(&f(F1), &[5, 1, 1, 1, 1], &int(23)).unwrap();
        assert_eq!(b.m, Rational::from_integer(int(5)));
        assert_eq!(b.deltas[1], int(14641));
        assert!(b.lambdas[1] >= Rational::from_integer(int(14641)));
        // Δ₂·(T2 + T1^2 - 2) has coefficients 14641 and -29282
        assert!(b.lambdas[1] >= Rational::from_integer(int(29282)));
        assert!(b.exponent() >= 4);
    }

    #[test]
    fn rational_input_uses_denominator_lcm() {
        let g = f("Z^2 - 1/4*Z - 3/8");
        assert_eq!(gamma(&g), int(8));
        let b = BoundData::new(&g, &[2, 1], &int(7)).unwrap();
        assert!(b.deltas.iter().all(|d| !d.is_zero()));
    }

    proptest! {
        #[test]
        fn doubling_m_never_decreases_lambda(i in 1usize..5, k in 1i64..20) {
            let m = Rational::from_integer(int(k));
            let m2 = &m * Rational::from_integer(int(2));
            let deg = [4, 3, 1, 1];
            let delta = int(7);
            let a = coefficient_bound(4, i, &int(1), &m, &(&m * Rational::from_integer(int(2))), &deg, &delta).unwrap();
            let b = coefficient_bound(4, i, &int(1), &m2, &(&m * Rational::from_integer(int(2))), &deg, &delta).unwrap();
            prop_assert!(b >= a);
        }

        #[test]
        fn precision_exponent_is_minimal(l in 1u64..10_000_000, p in prop::sample::select(vec![3u64, 5, 23, 191])) {
            let lambda = Rational::from_integer(ExactInt::from(l));
            let e = precision_exponent(&lambda, &int(p as i64));
            let p = int(p as i64);
            prop_assert!(Rational::from_integer(p.pow(e)) > &lambda * Rational::from_integer(int(2)) - Rational::one());
            if e > 1 {
                prop_assert!(Rational::from_integer(p.pow(e - 1)) <= &lambda * Rational::from_integer(int(2)) - Rational::one());
            }
        }

        #[test]
        fn lift_is_consistent_under_truncation(e in 1u32..8, e2 in 1u32..8) {
            let (lo, hi) = if e <= e2 { (e, e2) } else { (e2, e) };
            let a = hensel_lift(&f(F1), &int(23), hi).unwrap().truncate(lo).unwrap();
            let b = hensel_lift(&f(F1), &int(23), lo).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
