//! Triangular sets `f̂₁(T1), f̂₂(T1,T2), …, f̂ₙ(T1..Tn)` and reduction modulo them.

use alloc::format;
use alloc::vec::Vec;

use super::{Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::exactring::{Rationals, Ring};

/// The reduced lex Gröbner basis of a zero-dimensional ideal in triangular
/// shape: `f̂ᵢ` involves only `T1..Ti`, is monic of degree `dᵢ` in `Ti`, and
/// has degree below `d_j` in every earlier `Tj`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularBasis {
    degrees: Vec<u32>,
    polys: Vec<MultiPoly<Rationals>>,
}

/// Checks the triangular shape over any ring; returns the degree profile.
pub fn triangular_degrees<R: Ring>(polys: &[MultiPoly<R>]) -> Result<Vec<u32>> {
    let n = polys.len();
    let mut degrees = Vec::with_capacity(n);
    for (i, p) in polys.iter().enumerate() {
        if p.arity() != n {
            return Err(Error::ArityMismatch { expected: n, found: p.arity() });
        }
        if !p.uses_only_first(i + 1) {
            return Err(Error::InvalidBasis(format!("polynomial {} involves variables beyond T{}", i + 1, i + 1)));
        }
        let d = p.degree_in(i);
        if d == 0 {
            return Err(Error::InvalidBasis(format!("polynomial {} does not involve T{}", i + 1, i + 1)));
        }
        let lead = p.coefficients_in(i).remove(&d).unwrap_or_else(|| MultiPoly::zero(p.ring().clone(), n));
        if lead != MultiPoly::one(p.ring().clone(), n) {
            return Err(Error::InvalidBasis(format!("polynomial {} is not monic in T{}", i + 1, i + 1)));
        }
        for (j, &dj) in degrees.iter().enumerate() {
            if p.degree_in(j) >= dj {
                return Err(Error::InvalidBasis(format!(
                    "polynomial {} has degree {} in T{}, expected below {}",
                    i + 1,
                    p.degree_in(j),
                    j + 1,
                    dj
                )));
            }
        }
        degrees.push(d);
    }
    Ok(degrees)
}

/// Removes every term with `Ti`-degree at least `d` using the monic `g`.
fn reduce_by<R: Ring>(p: &mut MultiPoly<R>, g: &MultiPoly<R>, i: usize, d: u32) -> bool {
    let ring = p.ring().clone();
    let tail: Vec<(Monomial, R::Elem)> =
        g.terms().filter(|(m, _)| m.exp(i) < d).map(|(m, c)| (m.clone(), ring.neg(c))).collect();
    let mut changed = false;
    loop {
        let Some((m, c)) = p.terms().rev().find(|(m, _)| m.exp(i) >= d).map(|(m, c)| (m.clone(), c.clone())) else {
            break;
        };
        changed = true;
        let q = m.with_exp(i, m.exp(i) - d);
        p.add_term(m, ring.neg(&c));
        for (tm, tc) in &tail {
            p.add_term(q.mul(tm), ring.mul(&c, tc));
        }
    }
    changed
}

/// Normal form modulo a triangular set, reducing the highest variable first.
pub fn normal_form_generic<R: Ring>(p: &MultiPoly<R>, polys: &[MultiPoly<R>], degrees: &[u32]) -> Result<MultiPoly<R>> {
    let n = polys.len();
    let mut r = if p.arity() == n { p.clone() } else { p.with_arity(n)? };
    for i in (0..n).rev() {
        reduce_by(&mut r, &polys[i], i, degrees[i]);
    }
    Ok(r)
}

impl TriangularBasis {
    pub fn new(polys: Vec<MultiPoly<Rationals>>) -> Result<Self> {
        let degrees = triangular_degrees(&polys)?;
        Ok(TriangularBasis { degrees, polys })
    }

    pub fn n(&self) -> usize {
        self.polys.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn polys(&self) -> &[MultiPoly<Rationals>] {
        &self.polys
    }

    /// `f̂_{i+1}`.
    pub fn poly(&self, i: usize) -> &MultiPoly<Rationals> {
        &self.polys[i]
    }

    /// `∏ dᵢ`, the dimension of the residue algebra.
    pub fn dimension(&self) -> u64 {
        self.degrees.iter().map(|&d| d as u64).product()
    }

    /// The monomials `T^β` with `βᵢ < dᵢ`, in increasing order.
    pub fn order_ideal(&self) -> Vec<Monomial> {
        let n = self.n();
        let mut out = Vec::with_capacity(self.dimension() as usize);
        let mut e = alloc::vec![0u32; n];
        loop {
            out.push(Monomial::new(e.clone()));
            let mut k = 0;
            while k < n {
                e[k] += 1;
                if e[k] < self.degrees[k] {
                    break;
                }
                e[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
        }
        out.sort();
        out
    }

    /// Whether every monomial of `p` lies in the order ideal.
    pub fn is_reduced(&self, p: &MultiPoly<Rationals>) -> bool {
        p.terms().all(|(m, _)| m.exps().iter().zip(&self.degrees).all(|(e, d)| e < d))
    }

    pub fn normal_form(&self, p: &MultiPoly<Rationals>) -> Result<MultiPoly<Rationals>> {
        normal_form_generic(p, &self.polys, &self.degrees)
    }

    /// Normal form reducing by the basis members in the given index order,
    /// repeated until nothing changes.
    pub fn normal_form_in_order(&self, p: &MultiPoly<Rationals>, order: &[usize]) -> Result<MultiPoly<Rationals>> {
        let n = self.n();
        let mut r = if p.arity() == n { p.clone() } else { p.with_arity(n)? };
        loop {
            let mut changed = false;
            for &i in order {
                changed |= reduce_by(&mut r, &self.polys[i], i, self.degrees[i]);
            }
            if !changed {
                break;
            }
        }
        Ok(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multipoly::text::parse_poly;
    use proptest::prelude::*;

    const CYCLIC5: [&str; 5] = [
        "T1^5 - T1^4 - 4*T1^3 + 3*T1^2 + 3*T1 - 1",
        "T2 + T1^3 - 3*T1 + 2",
        "T3 - T1^4 + 2*T1^3 - T1^2 - T1 + 1",
        "T4 + T1^4 - T1^3 - 2*T1^2 + 2*T1 - 1",
        "T5 - 2*T1^3 + 3*T1^2 + 2*T1 - 2",
    ];

    fn basis(src: &[&str]) -> TriangularBasis {
        TriangularBasis::new(src.iter().map(|s| parse_poly(s, Some(src.len())).unwrap()).collect()).unwrap()
    }

    fn q(s: &str) -> MultiPoly<Rationals> {
        parse_poly(s, Some(5)).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let b = basis(&CYCLIC5);
        assert!(b.normal_form(b.poly(1)).unwrap().is_zero());
        assert_eq!(b.normal_form(&q("T1^5")).unwrap(), q("T1^4 + 4*T1^3 - 3*T1^2 - 3*T1 + 1"));
        assert_eq!(b.normal_form(&q("T2")).unwrap(), q("-T1^3 + 3*T1 - 2"));
        assert_eq!(b.degrees(), &[5, 1, 1, 1, 1]);
        assert_eq!(b.order_ideal().len(), 5);
    }

    #[test]
    fn shape_violations_are_rejected() {
        let bad = |src: &[&str]| TriangularBasis::new(src.iter().map(|s| parse_poly(s, Some(2)).unwrap()).collect());
        assert!(bad(&["T1^2 - 2", "T2*T1 - 1"]).is_err());
        assert!(bad(&["T1^2 - 2", "2*T2 - 1"]).is_err());
        assert!(bad(&["T1^2 - 2", "T2 + T1^2"]).is_err());
        assert!(bad(&["T1^2 + T2", "T2 - 1"]).is_err());
        assert!(bad(&["T1^2 - 2", "T2^2 - T1"]).is_ok());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly<Rationals>> {
        proptest::collection::vec((proptest::collection::vec(0u32..4, 3), -9i64..10), 0..8).prop_map(|ts| {
            MultiPoly::from_terms(Rationals, 3, ts.into_iter().map(|(e, c)| (Monomial::new(e), Rationals.from_i64(c))))
                .unwrap()
        })
    }

    fn small_basis() -> TriangularBasis {
        TriangularBasis::new(alloc::vec![
            parse_poly("T1^3 - T1 - 1", Some(3)).unwrap(),
            parse_poly("T2^2 + T1*T2 + T1^2 - 1", Some(3)).unwrap(),
            parse_poly("T3 + T2 + T1", Some(3)).unwrap(),
        ])
        .unwrap()
    }

    proptest! {
        #[test]
        fn normal_form_is_idempotent_and_reduced(p in arb_poly()) {
            let b = small_basis();
            let r = b.normal_form(&p).unwrap();
            prop_assert!(b.is_reduced(&r));
            prop_assert_eq!(b.normal_form(&r).unwrap(), r);
        }

        #[test]
        fn normal_form_is_linear(p in arb_poly(), s in arb_poly(), c in -5i64..6) {
            let b = small_basis();
            let c = Rationals.from_i64(c);
            let lhs = b.normal_form(&(&p.scale(&c) + &s)).unwrap();
            let rhs = &b.normal_form(&p).unwrap().scale(&c) + &b.normal_form(&s).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reduction_order_does_not_matter(p in arb_poly(), perm in Just([0usize, 1, 2]).prop_shuffle()) {
            let b = small_basis();
            prop_assert_eq!(b.normal_form_in_order(&p, &perm).unwrap(), b.normal_form(&p).unwrap());
        }
    }
}
