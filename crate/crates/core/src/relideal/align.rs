//! Searching for a root labelling under which a given permutation group
//! acts as the Galois group.
//!
//! Valid labellings come in right cosets: if `λ` works, so does `λ∘σ` for
//! every `σ ∈ G`. For transitive `G` the search may therefore fix `λ(1) = 1`
//! without losing the lex-least solution.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::Rationals;
use crate::multipoly::UniPoly;
use crate::padiclift::{BoundData, RootSystem};
use crate::permgrp::{Perm, PermGroup};

use super::orbit::OrbitConfig;
use super::verify::{verify_basis, VerifyOptions};
use super::{reconstruct_basis, reconstruct_indices, ReconstructedBasis};

/// Largest degree for which all labellings are tried.
pub const EXHAUSTIVE_LIMIT: usize = 8;

/// Extra p-adic digits used while searching, so that a wrong labelling
/// almost never passes the coefficient bound by accident.
pub const DEFAULT_MARGIN: u32 = 2;

#[derive(Clone, Debug, Default)]
pub struct AlignOptions {
    /// Labellings to try instead of the exhaustive search, as permutations of the input roots.
    pub candidates: Option<Vec<Perm>>,
    pub margin: Option<u32>,
    pub verify: VerifyOptions,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Alignment {
    /// `x_i` is input root number `labeling(i)`.
    pub labeling: Perm,
    pub basis: ReconstructedBasis,
    /// Labellings rejected before full verification.
    pub rejected: usize,
}

/// Advances to the next permutation of `v[from..]` in lex order.
fn next_permutation(v: &mut [u32], from: usize) -> bool {
    let s = &mut v[from..];
    if s.len() < 2 {
        return false;
    }
    let mut i = s.len() - 1;
    while i > 0 && s[i - 1] >= s[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = s.len() - 1;
    while s[j] <= s[i - 1] {
        j -= 1;
    }
    s.swap(i - 1, j);
    s[i..].reverse();
    true
}

fn all_labelings(n: usize, fix_first: bool) -> Vec<Perm> {
    let mut v: Vec<u32> = (0..n as u32).collect();
    let mut out = Vec::new();
    let from = if fix_first { 1 } else { 0 };
    loop {
        out.push(Perm::from_images(v.clone()).expect("permutation"));
        if !next_permutation(&mut v, from) {
            break;
        }
    }
    out
}

/// The lex-least labelling `λ` of `roots` for which reconstruction and
/// verification both succeed.
pub fn align_action(
    f: &UniPoly<Rationals>,
    group: &PermGroup,
    roots: &RootSystem,
    opts: &AlignOptions,
) -> Result<Alignment> {
    let n = roots.n();
    if group.degree() != n {
        return Err(Error::ArityMismatch { expected: n, found: group.degree() });
    }
    let mut candidates = match &opts.candidates {
        Some(c) => c.clone(),
        None if n <= EXHAUSTIVE_LIMIT => all_labelings(n, group.is_transitive()),
        None => {
            return Err(Error::InvalidInput(alloc::format!(
                "exhaustive labelling search is limited to degree {}; supply candidate labellings",
                EXHAUSTIVE_LIMIT
            )))
        }
    };
    candidates.sort();
    let bounds = BoundData::new(f, group.stab_chain().indices(), roots.p())?;
    let e = bounds.exponent() + opts.margin.unwrap_or(DEFAULT_MARGIN);
    let lifted = roots.lift(e.max(roots.exponent()))?;
    let mut rejected = 0;
    for lam in candidates {
        let rs = lifted.relabel(&lam)?;
        if n >= 2 {
            let cfg = OrbitConfig::new(rs.ring().clone(), rs.roots().to_vec(), group.clone())?;
            if reconstruct_indices(&cfg, &bounds, [2]).is_err() {
                rejected += 1;
                continue;
            }
        }
        let Ok(mut basis) = reconstruct_basis(f, group, &rs) else {
            rejected += 1;
            continue;
        };
        let report = verify_basis(&basis.basis, f, group, roots.p(), &opts.verify)?;
        if report.passed() {
            basis.provenance.relabeling = Some(lam.clone());
            return Ok(Alignment { labeling: lam, basis, rejected });
        }
        rejected += 1;
    }
    Err(Error::ActionMismatch)
}
