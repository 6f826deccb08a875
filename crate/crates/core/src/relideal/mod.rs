//! The relation ideal of a polynomial from its Galois group and p-adic roots.
//!
//! [`orbit`] holds the interpolation over a group orbit, valid over any exact
//! ring in which the needed differences are units. [`reconstruct_basis`]
//! runs it over `ℤ/p^e` at the lifted roots and recovers the rational
//! coefficients; [`verify`] checks a basis independently at a second prime,
//! and [`align`] searches for a root labelling that matches a given group.

pub mod align;
pub mod orbit;
pub mod verify;

use alloc::format;
use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::exactring::{ExactInt, Rational, Rationals, Ring};
use crate::multipoly::{MultiPoly, TriangularBasis, UniPoly};
use crate::padiclift::{BoundData, RootSystem};
use crate::permgrp::{Perm, PermGroup};

pub use align::{align_action, Alignment};
pub use orbit::{orbit_ideal_basis, OrbitConfig};
pub use verify::{verify_basis, CheckResult, VerifyOptions, VerifyReport};

/// Where a reconstructed basis came from.
#[derive(Clone, Debug, PartialEq)]
pub struct Provenance {
    pub p: ExactInt,
    pub e: u32,
    pub bounds: BoundData,
    /// The root labelling as residues modulo `p`: `x_i ≡ labeling[i-1]`.
    pub labeling: Vec<ExactInt>,
    /// The permutation of the sorted roots that gave this labelling, when found by search.
    pub relabeling: Option<Perm>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ReconstructedBasis {
    pub basis: TriangularBasis,
    pub provenance: Provenance,
    /// Least common multiple of the coefficient denominators of each `f̂ᵢ`.
    pub denominators: Vec<ExactInt>,
}

/// Multiplies by `Δ`, lifts symmetrically, checks `|c| ≤ λ` and divides by `Δ` over ℚ.
fn lift_generator(
    g: &MultiPoly<crate::exactring::ModRing>,
    i: usize,
    delta: &ExactInt,
    lambda: &Rational,
) -> Result<MultiPoly<Rationals>> {
    let ring = g.ring();
    let d = ring.reduce(delta);
    let dq = Rational::from_integer(delta.clone());
    g.map_coeffs(&Rationals, |c| {
        let z = ring.symmetric_lift(&ring.mul(c, &d));
        if Rational::from_integer(z.abs()) > *lambda {
            return Err(Error::InconsistentLabeling {
                index: i,
                reason: format!("cleared coefficient {} exceeds the bound", z),
            });
        }
        Ok(Rational::from_integer(z) / &dq)
    })
}

/// `Δᵢ f̂ᵢ` recovered from the orbit generator at the labelled roots, for
/// `i` in `indices` (one-based); stops at the first failure.
pub(crate) fn reconstruct_indices(
    cfg: &OrbitConfig<crate::exactring::ModRing>,
    bounds: &BoundData,
    indices: impl IntoIterator<Item = usize>,
) -> Result<Vec<MultiPoly<Rationals>>> {
    indices
        .into_iter()
        .map(|i| lift_generator(&cfg.generator(i), i, &bounds.deltas[i - 1], &bounds.lambdas[i - 1]))
        .collect()
}

/// The triangular basis of the relation ideal, assuming `G` acts on
/// `roots` as the Galois group does: `σ(xᵢ) = x_{σ(i)}`.
pub fn reconstruct_basis(f: &UniPoly<Rationals>, group: &PermGroup, roots: &RootSystem) -> Result<ReconstructedBasis> {
    reconstruct_basis_observed(f, group, roots, &mut |_| {})
}

/// As [`reconstruct_basis`], calling `done(i)` once `f̂ᵢ` has been recovered.
pub fn reconstruct_basis_observed(
    f: &UniPoly<Rationals>,
    group: &PermGroup,
    roots: &RootSystem,
    done: &mut dyn FnMut(usize),
) -> Result<ReconstructedBasis> {
    let n = roots.n();
    if group.degree() != n {
        return Err(Error::ArityMismatch { expected: n, found: group.degree() });
    }
    let chain = group.stab_chain();
    let bounds = BoundData::new(f, chain.indices(), roots.p())?;
    let e = bounds.exponent();
    if roots.exponent() < e {
        return Err(Error::InsufficientPrecision { needed: e, have: roots.exponent() });
    }
    let cfg = OrbitConfig::new(roots.ring().clone(), roots.roots().to_vec(), group.clone())?;
    let polys = (1..=n)
        .map(|i| {
            let q = reconstruct_indices(&cfg, &bounds, [i])?.remove(0);
            done(i);
            Ok(q)
        })
        .collect::<Result<Vec<_>>>()?;
    let f1 = f.map_coeffs(&Rationals, |c| Ok(c.clone()))?.to_multi(n, 0);
    if polys[0] != f1 {
        return Err(Error::InconsistentLabeling { index: 1, reason: "first polynomial differs from f".into() });
    }
    let basis =
        TriangularBasis::new(polys).map_err(|e| Error::InconsistentLabeling { index: 0, reason: format!("{}", e) })?;
    let denominators =
        basis.polys().iter().map(|p| crate::exactring::denominator_lcm(p.terms().map(|(_, c)| c))).collect();
    Ok(ReconstructedBasis {
        basis,
        provenance: Provenance {
            p: roots.p().clone(),
            e: roots.exponent(),
            bounds,
            labeling: roots.residues_mod_p(),
            relabeling: None,
        },
        denominators,
    })
}

/// `xᵢ` as a polynomial in the earlier roots.
#[derive(Clone, Debug, PartialEq)]
pub enum RootExpression {
    /// `f̂ᵢ = Tᵢ − P`.
    Polynomial(MultiPoly<Rationals>),
    /// `dᵢ > 1`: `xᵢ` is not a polynomial in `x₁, …, x_{i−1}`.
    NotExpressible { degree: u32 },
}

/// For `dᵢ = 1` returns `P` with `xᵢ = P(x₁, …, x_{i−1})`; `i` is one-based.
pub fn express_root(basis: &TriangularBasis, i: usize) -> Result<RootExpression> {
    if i == 0 || i > basis.n() {
        return Err(Error::InvalidInput(format!("index {} outside 1..{}", i, basis.n())));
    }
    let d = basis.degrees()[i - 1];
    if d != 1 {
        return Ok(RootExpression::NotExpressible { degree: d });
    }
    let n = basis.n();
    let ti = MultiPoly::var(Rationals, n, i - 1);
    Ok(RootExpression::Polynomial(&ti - basis.poly(i - 1)))
}

/// Residues of the orbit generators `g₁, …, gₙ` modulo `p^e`, lifted symmetrically.
pub fn modular_basis(group: &PermGroup, roots: &RootSystem) -> Result<Vec<MultiPoly<crate::exactring::Integers>>> {
    let cfg = OrbitConfig::new(roots.ring().clone(), roots.roots().to_vec(), group.clone())?;
    let ring = roots.ring();
    cfg.basis().iter().map(|g| g.map_coeffs(&crate::exactring::Integers, |c| Ok(ring.symmetric_lift(c)))).collect()
}
