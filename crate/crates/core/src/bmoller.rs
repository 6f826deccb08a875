//! The Buchberger–Möller algorithm: the reduced lex Gröbner basis of the
//! vanishing ideal of a finite point set over a field, together with the
//! order ideal and the separators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::Ring;
use crate::linalg::{self, Echelon, Insert};
use crate::multipoly::{Monomial, MultiPoly};

pub const DEFAULT_POINT_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq)]
pub struct PointSet<R: Ring> {
    ring: R,
    n: usize,
    points: Vec<Vec<R::Elem>>,
}

impl<R: Ring> PointSet<R> {
    /// Rejects duplicate points and points of the wrong length.
    pub fn new(ring: R, n: usize, points: Vec<Vec<R::Elem>>) -> Result<Self> {
        for (k, p) in points.iter().enumerate() {
            if p.len() != n {
                return Err(Error::ArityMismatch { expected: n, found: p.len() });
            }
            if points[..k].contains(p) {
                return Err(Error::InvalidInput(format!("point {} is repeated", k + 1)));
            }
        }
        Ok(PointSet { ring, n, points })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[Vec<R::Elem>] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BmResult<R: Ring> {
    /// Reduced Gröbner basis, by increasing leading monomial.
    pub groebner: Vec<MultiPoly<R>>,
    /// `𝒪(X)` in increasing order.
    pub order_ideal: Vec<Monomial>,
    /// One separator per point, in input order.
    pub separators: Vec<MultiPoly<R>>,
    /// The leading monomials of the Gröbner basis.
    pub corners: Vec<Monomial>,
}

pub fn buchberger_moeller<R: Ring>(x: &PointSet<R>) -> Result<BmResult<R>> {
    buchberger_moeller_with_cap(x, DEFAULT_POINT_CAP)
}

pub fn buchberger_moeller_with_cap<R: Ring>(x: &PointSet<R>, cap: usize) -> Result<BmResult<R>> {
    let ring = x.ring.clone();
    if !ring.is_field() {
        return Err(Error::InvalidInput("Buchberger–Möller needs a field".into()));
    }
    if x.len() > cap {
        return Err(Error::InvalidInput(format!("{} points exceed the cap of {}", x.len(), cap)));
    }
    let n = x.n;
    if x.is_empty() {
        return Ok(BmResult {
            groebner: vec![MultiPoly::one(ring, n)],
            order_ideal: Vec::new(),
            separators: Vec::new(),
            corners: vec![Monomial::one(n)],
        });
    }
    let mut ech = Echelon::new(ring.clone());
    // every inserted monomial, in insertion order, with its evaluation vector when in 𝒪
    let mut inserted: Vec<Monomial> = Vec::new();
    let mut evals: BTreeMap<Monomial, Vec<R::Elem>> = BTreeMap::new();
    let mut order_ideal = Vec::new();
    let mut corners: Vec<Monomial> = Vec::new();
    let mut groebner = Vec::new();
    // candidate -> (parent in 𝒪, variable)
    let mut cand: BTreeMap<Monomial, Option<(Monomial, usize)>> = BTreeMap::new();
    cand.insert(Monomial::one(n), None);
    while let Some((t, parent)) = cand.pop_first() {
        if corners.iter().any(|c| c.divides(&t)) {
            continue;
        }
        let v: Vec<R::Elem> = match &parent {
            None => vec![ring.one(); x.len()],
            Some((m, k)) => evals[m].iter().zip(&x.points).map(|(a, p)| ring.mul(a, &p[*k])).collect(),
        };
        inserted.push(t.clone());
        match ech.insert(v.clone()) {
            Insert::Dependent(c) => {
                let mut g = MultiPoly::term(ring.clone(), t.clone(), ring.one());
                for (m, ck) in inserted.iter().zip(&c) {
                    g.add_term(m.clone(), ring.neg(ck));
                }
                groebner.push(g);
                corners.push(t);
            }
            Insert::Independent => {
                for k in 0..n {
                    let next = t.with_exp(k, t.exp(k) + 1);
                    cand.entry(next).or_insert_with(|| Some((t.clone(), k)));
                }
                evals.insert(t.clone(), v);
                order_ideal.push(t);
            }
        }
    }
    let separators = separators_on(&ring, x, &order_ideal, &evals)?;
    Ok(BmResult { groebner, order_ideal, separators, corners })
}

fn separators_on<R: Ring>(
    ring: &R,
    x: &PointSet<R>,
    order_ideal: &[Monomial],
    evals: &BTreeMap<Monomial, Vec<R::Elem>>,
) -> Result<Vec<MultiPoly<R>>> {
    // A[point][k] = o_k(point); the separator of point j has coefficients column j of A⁻¹
    let a: Vec<Vec<R::Elem>> =
        (0..x.len()).map(|j| order_ideal.iter().map(|o| evals[o][j].clone()).collect()).collect();
    let inv = linalg::inverse(ring, &a)?;
    Ok((0..x.len())
        .map(|j| {
            let mut h = MultiPoly::zero(ring.clone(), x.n);
            for (k, o) in order_ideal.iter().enumerate() {
                h.add_term(o.clone(), inv[k][j].clone());
            }
            h
        })
        .collect())
}

/// The unique interpolant supported on `𝒪(X)` taking `values` at the points.
pub fn interpolate_values<R: Ring>(x: &PointSet<R>, values: &[R::Elem]) -> Result<MultiPoly<R>> {
    if values.len() != x.len() {
        return Err(Error::ArityMismatch { expected: x.len(), found: values.len() });
    }
    let bm = buchberger_moeller(x)?;
    let ring = x.ring();
    let mut out = MultiPoly::zero(ring.clone(), x.n);
    for (h, v) in bm.separators.iter().zip(values) {
        out = &out + &h.scale(v);
    }
    Ok(out)
}

/// Whether `ideal` is downward closed: all divisors of members are members.
pub fn is_order_ideal(ideal: &[Monomial]) -> bool {
    let set: BTreeSet<&Monomial> = ideal.iter().collect();
    ideal.iter().all(|m| (0..m.arity()).all(|k| m.exp(k) == 0 || set.contains(&m.with_exp(k, m.exp(k) - 1))))
}
