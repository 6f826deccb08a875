//! Arithmetic in the splitting field `L ≅ ℚ[T]/I`, with elements
//! represented by their normal forms modulo the triangular basis of `I`.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactring::{Rational, Rationals, Ring};
use crate::linalg::{self, Echelon, Insert};
use crate::multipoly::{Monomial, MultiPoly, TriangularBasis, UniPoly};

#[derive(Debug)]
struct Inner {
    basis: TriangularBasis,
    monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

/// The field attached to one triangular basis; cheap to clone.
#[derive(Clone, Debug)]
pub struct SplitField {
    inner: Arc<Inner>,
}

impl PartialEq for SplitField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.basis == other.inner.basis
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FieldElem {
    field: SplitField,
    rep: MultiPoly<Rationals>,
}

impl SplitField {
    pub fn new(basis: TriangularBasis) -> Self {
        let monomials = basis.order_ideal();
        let index = monomials.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        SplitField { inner: Arc::new(Inner { basis, monomials, index }) }
    }

    pub fn basis(&self) -> &TriangularBasis {
        &self.inner.basis
    }

    /// `∏ dᵢ`.
    pub fn dimension(&self) -> usize {
        self.inner.monomials.len()
    }

    /// The monomial basis `𝒪` of `L` over ℚ, increasing.
    pub fn monomials(&self) -> &[Monomial] {
        &self.inner.monomials
    }

    /// The class of `p`.
    pub fn elem(&self, p: &MultiPoly<Rationals>) -> Result<FieldElem> {
        Ok(FieldElem { field: self.clone(), rep: self.inner.basis.normal_form(p)? })
    }

    pub fn from_rational(&self, q: Rational) -> FieldElem {
        FieldElem { field: self.clone(), rep: MultiPoly::constant(Rationals, self.basis().n(), q) }
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { field: self.clone(), rep: MultiPoly::zero(Rationals, self.basis().n()) }
    }

    pub fn one(&self) -> FieldElem {
        self.from_rational(Rationals.one())
    }

    /// The root `x_{i+1}`, i.e. the class of `T_{i+1}`.
    pub fn root(&self, i: usize) -> Result<FieldElem> {
        self.elem(&MultiPoly::var(Rationals, self.basis().n(), i))
    }

    fn coords(&self, p: &MultiPoly<Rationals>) -> Vec<Rational> {
        let mut v = vec![Rationals.zero(); self.dimension()];
        for (m, c) in p.terms() {
            v[self.inner.index[m]] = c.clone();
        }
        v
    }

    fn coords_to_poly(&self, v: &[Rational]) -> MultiPoly<Rationals> {
        let mut p = MultiPoly::zero(Rationals, self.basis().n());
        for (m, c) in self.inner.monomials.iter().zip(v) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl FieldElem {
    pub fn field(&self) -> &SplitField {
        &self.field
    }

    /// The normal-form representative.
    pub fn rep(&self) -> &MultiPoly<Rationals> {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::InvalidInput("elements belong to different fields".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(FieldElem { field: self.field.clone(), rep: &self.rep + &other.rep })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        Ok(FieldElem { field: self.field.clone(), rep: &self.rep - &other.rep })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        self.field.elem(&(&self.rep * &other.rep))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut acc = self.field.one();
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Matrix of multiplication by `self` on `𝒪`: column `k` holds `self · o_k`.
    fn mul_matrix(&self) -> Result<Vec<Vec<Rational>>> {
        let f = &self.field;
        let dim = f.dimension();
        let mut a = vec![vec![Rationals.zero(); dim]; dim];
        for (k, m) in f.monomials().iter().enumerate() {
            let prod = f.basis().normal_form(&self.rep.mul_term(m, &Rationals.one()))?;
            for (r, c) in f.coords(&prod).into_iter().enumerate() {
                a[r][k] = c;
            }
        }
        Ok(a)
    }

    /// `b` with `NF(self·b) = 1`; a singular system means the basis does
    /// not describe a field.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let a = self.mul_matrix()?;
        let one = f.coords(&MultiPoly::one(Rationals, f.basis().n()));
        let x = linalg::solve(&Rationals, &a, &one)
            .map_err(|_| Error::InvalidBasis("multiplication map is singular, so the ideal is not maximal".into()))?;
        Ok(FieldElem { field: f.clone(), rep: f.coords_to_poly(&x) })
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.inv()?)
    }

    /// The monic minimal polynomial of `self` over ℚ, from the first linear
    /// dependency among `1, a, a², …`.
    pub fn minimal_poly(&self) -> Result<UniPoly<Rationals>> {
        let f = &self.field;
        let mut ech = Echelon::new(Rationals);
        let mut power = f.one();
        loop {
            match ech.insert(f.coords(&power.rep)) {
                Insert::Independent => power = power.mul(self)?,
                Insert::Dependent(c) => {
                    let mut coeffs: Vec<Rational> = c.iter().map(|x| Rationals.neg(x)).collect();
                    coeffs.push(Rationals.one());
                    return Ok(UniPoly::new(Rationals, coeffs));
                }
            }
        }
    }

    /// `q(self)` for a univariate `q`.
    pub fn substitute(&self, q: &UniPoly<Rationals>) -> Result<Self> {
        let mut acc = self.field.zero();
        for c in q.coeffs().iter().rev() {
            acc = acc.mul(self)?.add(&self.field.from_rational(c.clone()))?;
        }
        Ok(acc)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.rep, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{ExactInt, ModRing};
    use crate::multipoly::text::{parse_poly, parse_univariate};
    use crate::padiclift::lift_labelled;
    use proptest::prelude::*;

    const B1: [&str; 5] = [
        "T1^5 - T1^4 - 4*T1^3 + 3*T1^2 + 3*T1 - 1",
        "T2 + T1^2 - 2",
        "T3 + T1^4 - 4*T1^2 + 2",
        "T4 - T1^3 + 3*T1",
        "T5 - T1^4 + T1^3 + 3*T1^2 - 2*T1 - 1",
    ];

    // D4 acting on the roots of Z^4 - 2: x1 = a, x2 = -a, x3 = i·a, x4 = -i·a
    const B_D4: [&str; 4] = ["T1^4 - 2", "T2 + T1", "T3^2 + T1^2", "T4 + T3"];

    fn field(src: &[&str]) -> SplitField {
        let n = src.len();
        SplitField::new(TriangularBasis::new(src.iter().map(|s| parse_poly(s, Some(n)).unwrap()).collect()).unwrap())
    }

    fn el(k: &SplitField, s: &str) -> FieldElem {
        k.elem(&parse_poly(s, Some(k.basis().n())).unwrap()).unwrap()
    }

    #[test]
    fn multiplication_reduces() {
        let k = field(&B1);
        assert_eq!(k.dimension(), 5);
        let a = el(&k, "T1");
        assert_eq!(a.mul(&el(&k, "T1^4")).unwrap(), el(&k, "T1^4 + 4*T1^3 - 3*T1^2 - 3*T1 + 1"));
        assert_eq!(a.mul(&k.one()).unwrap(), a);
        let d = field(&B_D4);
        assert_eq!(d.dimension(), 8);
        let t3 = el(&d, "T3");
        assert_eq!(t3.mul(&t3).unwrap(), el(&d, "-T1^2"));
    }

    #[test]
    fn inverses() {
        let k = field(&B1);
        assert_eq!(k.one().inv().unwrap(), k.one());
        let q = k.from_rational(Rational::new(3.into(), 7.into()));
        assert_eq!(q.inv().unwrap(), k.from_rational(Rational::new(7.into(), 3.into())));
        let a = el(&k, "T1");
        assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), k.one());
        assert_eq!(k.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn a_non_maximal_ideal_is_detected() {
        // T1^2 - 1 is reducible, so T1 - 1 is a zero divisor
        let k = field(&["T1^2 - 1"]);
        assert!(matches!(el(&k, "T1 - 1").inv(), Err(Error::InvalidBasis(_))));
    }

    #[test]
    fn minimal_polynomials() {
        let k = field(&B1);
        assert_eq!(
            el(&k, "T1").minimal_poly().unwrap(),
            parse_univariate("Z^5 - Z^4 - 4*Z^3 + 3*Z^2 + 3*Z - 1").unwrap()
        );
        assert_eq!(
            k.from_rational(Rational::from_integer(4.into())).minimal_poly().unwrap(),
            parse_univariate("Z - 4").unwrap()
        );
        assert_eq!(k.zero().minimal_poly().unwrap(), parse_univariate("Z").unwrap());
        let d = field(&B_D4);
        // (i·a)^4 = 2 and (i·a²)² = -2
        assert_eq!(el(&d, "T3").minimal_poly().unwrap(), parse_univariate("Z^4 - 2").unwrap());
        assert_eq!(el(&d, "T1*T3").minimal_poly().unwrap(), parse_univariate("Z^2 + 2").unwrap());
        // a·(1 + 2i) generates the whole field
        let m = el(&d, "T1 + 2*T3").minimal_poly().unwrap();
        assert_eq!(m.degree(), Some(8));
        assert!(el(&d, "T1 + 2*T3").substitute(&m).unwrap().is_zero());
        assert_eq!(el(&d, "T1 + T3").minimal_poly().unwrap(), parse_univariate("Z^4 + 8").unwrap());
    }

    #[test]
    fn elements_of_different_fields_do_not_mix() {
        let a = field(&B1).one();
        let b = field(&["T1^2 - 2"]).one();
        assert!(a.mul(&b).is_err());
    }

    fn arb_elem() -> impl Strategy<Value = MultiPoly<Rationals>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, 4), -6i64..7, 1i64..4), 0..6).prop_map(|ts| {
            MultiPoly::from_terms(
                Rationals,
                4,
                ts.into_iter().map(|(e, a, b)| (Monomial::new(e), Rational::new(a.into(), b.into()))),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            let k = field(&B_D4);
            let (a, b, c) = (k.elem(&a).unwrap(), k.elem(&b).unwrap(), k.elem(&c).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.mul(&b.add(&c).unwrap()).unwrap(), a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap());
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()).unwrap(), k.one());
            }
        }

        #[test]
        fn reduction_commutes_with_evaluation(a in arb_elem(), b in arb_elem()) {
            // Z^4 - 2 splits modulo 73 with a = 18 and i·a = 48
            let k = field(&B_D4);
            let f = parse_univariate("Z^4 - 2").unwrap();
            let p = ExactInt::from(73);
            let rs = lift_labelled(&f, &p, &[18, 55, 48, 25].map(ExactInt::from), 3).unwrap();
            let r: ModRing = rs.ring().clone();
            let ev = |x: &MultiPoly<Rationals>| x.map_coeffs(&r, |c| r.from_rational(c)).unwrap().evaluate(rs.roots()).unwrap();
            let prod = k.elem(&a).unwrap().mul(&k.elem(&b).unwrap()).unwrap();
            prop_assert_eq!(ev(prod.rep()), r.mul(&ev(&a), &ev(&b)));
        }
    }
}
