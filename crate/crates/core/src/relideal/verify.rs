//! Independent checks of a candidate basis.
//!
//! A basis is accepted when it has the staircase shape of the group, its
//! cleared coefficients are integral and within the bounds, it vanishes at
//! every conjugate of a labelling of the roots at a second split prime, and
//! each member reduces to zero under the basis itself.

use alloc::format;
use alloc::string::String;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactring::{ExactInt, ModRing, Rational, Rationals, Ring};
use crate::multipoly::{MultiPoly, TriangularBasis, UniPoly};
use crate::padiclift::{self, BoundData};
use crate::permgrp::PermGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
    /// The second prime and the labelling found there, if any.
    pub second_prime: Option<ExactInt>,
    pub second_labeling: Option<Vec<ExactInt>>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(&mut self, name: &'static str, passed: bool, detail: String) {
        self.checks.push(CheckResult { name, passed, detail });
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Exponent at the second prime; defaults to the precision exponent at `p`.
    pub exponent: Option<u32>,
    /// Use this prime instead of the next split prime after `p`.
    pub second_prime: Option<ExactInt>,
}

pub const SHAPE: &str = "shape";
pub const INTEGRALITY: &str = "integrality-and-bound";
pub const VANISHING: &str = "vanishing-at-second-prime";
pub const NORMAL_FORM: &str = "normal-form";

fn check_shape(basis: &TriangularBasis, f: &UniPoly<Rationals>, group: &PermGroup) -> core::result::Result<(), String> {
    let n = basis.n();
    if group.degree() != n || f.degree() != Some(n) {
        return Err(format!(
            "basis has {} members for a group of degree {} and f of degree {:?}",
            n,
            group.degree(),
            f.degree()
        ));
    }
    let idx = group.stab_chain().indices().to_vec();
    if basis.degrees() != idx.as_slice() {
        return Err(format!("degree profile {:?}, group indices {:?}", basis.degrees(), idx));
    }
    if basis.poly(0) != &f.to_multi(n, 0) {
        return Err("first member is not f(T1)".into());
    }
    Ok(())
}

fn check_integrality(basis: &TriangularBasis, bounds: &BoundData) -> core::result::Result<(), String> {
    for (i, p) in basis.polys().iter().enumerate() {
        let delta = Rational::from_integer(bounds.deltas[i].clone());
        for (m, c) in p.terms() {
            let v = c * &delta;
            if !v.is_integer() {
                return Err(format!("Δ{}·coefficient of {} is {}, not an integer", i + 1, m, v));
            }
            if v.abs() > bounds.lambdas[i] {
                return Err(format!("Δ{}·coefficient of {} exceeds λ{}", i + 1, m, i + 1));
            }
        }
    }
    Ok(())
}

fn denominators_coprime(basis: &TriangularBasis, p: &ExactInt) -> bool {
    basis.polys().iter().all(|q| q.terms().all(|(_, c)| !c.denom().is_multiple_of(p)))
}

/// Backtracking: `x₁` is fixed to `first`, then each `x_i` is chosen among the
/// unused roots so that `f̂ᵢ(x₁, …, xᵢ) = 0`.
fn find_zero(polys: &[MultiPoly<ModRing>], roots: &[ExactInt], first: usize) -> Option<Vec<usize>> {
    let n = polys.len();
    let ring = polys[0].ring().clone();
    let mut chosen = vec![first];
    let mut point: Vec<ExactInt> = vec![ring.zero(); n];
    point[0] = roots[first].clone();
    let mut next = vec![0usize; n];
    if !ring.is_zero(&polys[0].evaluate(&point).ok()?) {
        return None;
    }
    loop {
        let i = chosen.len();
        if i == n {
            return Some(chosen);
        }
        let mut found = None;
        while next[i] < n {
            let k = next[i];
            next[i] += 1;
            if chosen.contains(&k) {
                continue;
            }
            point[i] = roots[k].clone();
            if ring.is_zero(&polys[i].evaluate(&point).ok()?) {
                found = Some(k);
                break;
            }
        }
        match found {
            Some(k) => chosen.push(k),
            None => {
                next[i] = 0;
                point[i] = ring.zero();
                chosen.pop()?;
                if chosen.is_empty() {
                    return None;
                }
            }
        }
    }
}

fn check_vanishing(
    basis: &TriangularBasis,
    f: &UniPoly<Rationals>,
    group: &PermGroup,
    p2: &ExactInt,
    e: u32,
) -> Result<core::result::Result<Vec<ExactInt>, String>> {
    let n = basis.n();
    let rs = padiclift::hensel_lift(f, p2, e)?;
    let ring = rs.ring().clone();
    let polys: Vec<MultiPoly<ModRing>> =
        basis.polys().iter().map(|q| q.map_coeffs(&ring, |c| ring.from_rational(c))).collect::<Result<_>>()?;
    let starts: Vec<usize> = if group.is_transitive() { vec![0] } else { (0..n).collect() };
    let Some(lab) = starts.into_iter().find_map(|s| find_zero(&polys, rs.roots(), s)) else {
        return Ok(Err(format!("no labelling of the roots modulo {}^{} is a common zero", p2, e)));
    };
    let x: Vec<ExactInt> = lab.iter().map(|&k| rs.roots()[k].clone()).collect();
    for s in group.elements() {
        let pt: Vec<ExactInt> = (0..n).map(|j| x[s.apply(j)].clone()).collect();
        for (i, q) in polys.iter().enumerate() {
            if !ring.is_zero(&q.evaluate(&pt)?) {
                return Ok(Err(format!("f̂{} does not vanish at the conjugate by {}", i + 1, s)));
            }
        }
    }
    Ok(Ok(x.iter().map(|r| r.mod_floor(p2)).collect()))
}

/// Runs every check; only failures to even set up a check (no second prime,
/// malformed input) are returned as errors.
pub fn verify_basis(
    basis: &TriangularBasis,
    f: &UniPoly<Rationals>,
    group: &PermGroup,
    p: &ExactInt,
    opts: &VerifyOptions,
) -> Result<VerifyReport> {
    let mut report = VerifyReport { checks: Vec::new(), second_prime: None, second_labeling: None };
    let shape = check_shape(basis, f, group);
    let shape_ok = shape.is_ok();
    report.push(SHAPE, shape_ok, shape.err().unwrap_or_default());
    if !shape_ok {
        return Ok(report);
    }
    let bounds = BoundData::new(f, basis.degrees(), p)?;
    let integ = check_integrality(basis, &bounds);
    report.push(INTEGRALITY, integ.is_ok(), integ.err().unwrap_or_default());
    let e = opts.exponent.unwrap_or_else(|| bounds.exponent());
    let p2 = match &opts.second_prime {
        Some(q) => {
            padiclift::check_split_prime(f, q)?;
            q.clone()
        }
        None => {
            let mut q = padiclift::find_split_prime(f, &(p + 1u32), padiclift::DEFAULT_PRIME_SEARCH_CAP)?;
            while !denominators_coprime(basis, &q) {
                q = padiclift::find_split_prime(f, &(q + 1u32), padiclift::DEFAULT_PRIME_SEARCH_CAP)?;
            }
            q
        }
    };
    if !denominators_coprime(basis, &p2) {
        return Err(Error::BadPrime { p: p2.to_string(), reason: "divides a coefficient denominator".into() });
    }
    report.second_prime = Some(p2.clone());
    match check_vanishing(basis, f, group, &p2, e)? {
        Ok(lab) => {
            report.push(VANISHING, true, format!("p' = {}, e' = {}", p2, e));
            report.second_labeling = Some(lab);
        }
        Err(msg) => report.push(VANISHING, false, msg),
    }
    let mut nf_fail = None;
    for (i, q) in basis.polys().iter().enumerate() {
        if !basis.normal_form(q)?.is_zero() {
            nf_fail = Some(format!("f̂{} does not reduce to zero", i + 1));
            break;
        }
    }
    report.push(NORMAL_FORM, nf_fail.is_none(), nf_fail.unwrap_or_default());
    Ok(report)
}
