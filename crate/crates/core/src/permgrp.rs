//! Permutation groups on `{1..n}`: enumeration, the pointwise stabilizer
//! chain `G ⊇ G₁ ⊇ … ⊇ Gₙ = 1`, coset representatives and the sibling sets
//! used by the interpolation formula.
//!
//! Permutations are stored zero-based; text input and output are one-based.
//! Composition is `(σ∘τ)(i) = σ(τ(i))`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u32).collect())
    }

    /// From zero-based images.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::InvalidInput(format!("{:?} is not a permutation", images)));
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    /// From one-based images, as in `[2, 3, 1]`.
    pub fn from_one_based(images: &[u32]) -> Result<Self> {
        if images.contains(&0) {
            return Err(Error::InvalidInput("images are numbered from 1".into()));
        }
        Self::from_images(images.iter().map(|&i| i - 1).collect())
    }

    /// Parses disjoint-cycle notation such as `(1 2 3)(4 5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let mut img: Vec<u32> = (0..n as u32).collect();
        let mut seen = vec![false; n];
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected `(` in `{}`", s)))?;
            let close = body.find(')').ok_or_else(|| Error::Parse(format!("missing `)` in `{}`", s)))?;
            let pts = body[..close]
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad point `{}`", t))))
                .collect::<Result<Vec<_>>>()?;
            for &p in &pts {
                if p == 0 || p > n {
                    return Err(Error::InvalidInput(format!("point {} outside 1..{}", p, n)));
                }
                if seen[p - 1] {
                    return Err(Error::InvalidInput(format!("point {} repeated in `{}`", p, s)));
                }
                seen[p - 1] = true;
            }
            for k in 0..pts.len() {
                img[pts[k] - 1] = (pts[(k + 1) % pts.len()] - 1) as u32;
            }
            rest = body[close + 1..].trim_start();
        }
        Ok(Perm(img))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    /// Image of the zero-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// One-based images.
    pub fn to_one_based(&self) -> Vec<u32> {
        self.0.iter().map(|&i| i + 1).collect()
    }

    /// Disjoint-cycle notation, one-based.
    pub fn to_cycles(&self) -> String {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            out.push('(');
            let mut i = s;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                first = false;
                out.push_str(&format!("{}", i + 1));
                i = self.0[i] as usize;
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycles())
    }
}

/// A permutation group with all of its elements enumerated, sorted by image tuple.
#[derive(Clone, Debug, PartialEq)]
pub struct PermGroup {
    n: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    pub fn generate(n: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::generate_with_cap(n, generators, DEFAULT_GROUP_CAP)
    }

    /// Breadth-first closure of the identity under right multiplication by the generators.
    pub fn generate_with_cap(n: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        for g in &generators {
            if g.degree() != n {
                return Err(Error::ArityMismatch { expected: n, found: g.degree() });
            }
        }
        let id = Perm::identity(n);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.compose(g);
                if !seen.contains(&y) {
                    if seen.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        Ok(PermGroup { n, generators, elements: seen.into_iter().collect() })
    }

    pub fn trivial(n: usize) -> Self {
        PermGroup { n, generators: Vec::new(), elements: vec![Perm::identity(n)] }
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut cyc: Vec<u32> = (1..n as u32).collect();
            cyc.push(0);
            gens.push(Perm(cyc));
            let mut t: Vec<u32> = (0..n as u32).collect();
            t.swap(0, 1);
            gens.push(Perm(t));
        }
        Self::generate(n, gens)
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    /// All elements in increasing order of image tuples; the identity comes first.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_transitive(&self) -> bool {
        let mut orbit = vec![false; self.n];
        for g in &self.elements {
            if let Some(&i) = g.0.first() {
                orbit[i as usize] = true;
            }
        }
        self.n == 0 || orbit.iter().all(|&b| b)
    }

    /// The group `λ⁻¹ G λ`, i.e. the same action after renaming point `i` to `λ⁻¹(i)`.
    pub fn conjugate(&self, lambda: &Perm) -> Result<Self> {
        let li = lambda.inverse();
        let gens = self.generators.iter().map(|g| li.compose(g).compose(lambda)).collect();
        let mut elements: Vec<Perm> = self.elements.iter().map(|g| li.compose(g).compose(lambda)).collect();
        elements.sort();
        Ok(PermGroup { n: self.n, generators: gens, elements })
    }

    pub fn stab_chain(&self) -> StabChain {
        StabChain::new(self)
    }
}

/// One node of the coset tree: the prefix `(ρ(1), …, ρ(j))` shared by a left coset `ρGⱼ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetNode {
    /// `ρ(j)`, zero-based; meaningless at the root.
    pub point: u32,
    pub parent: usize,
    /// Range of child indices in the next level.
    pub children: core::ops::Range<usize>,
    /// Index into the group's element list of the lex-least element with this prefix.
    pub representative: usize,
}

/// The pointwise stabilizers `Gᵢ = {σ : σ(j) = j for j ≤ i}` with indices
/// `dᵢ = [Gᵢ₋₁ : Gᵢ]` and their left-coset tree.
#[derive(Clone, Debug, PartialEq)]
pub struct StabChain {
    n: usize,
    degrees: Vec<u32>,
    /// `levels[j]` holds the nodes of depth `j`; `levels[0]` is the root.
    levels: Vec<Vec<CosetNode>>,
}

impl StabChain {
    pub fn new(g: &PermGroup) -> Self {
        let n = g.degree();
        let els = g.elements();
        let mut levels: Vec<Vec<CosetNode>> = Vec::with_capacity(n + 1);
        levels.push(vec![CosetNode { point: 0, parent: 0, children: 0..0, representative: 0 }]);
        // Elements are sorted by image tuple, so each node's elements are contiguous.
        #[allow(clippy::single_range_in_vec_init)]
        let mut spans: Vec<core::ops::Range<usize>> = vec![0..els.len()];
        for j in 0..n {
            let mut next = Vec::new();
            let mut next_spans = Vec::new();
            for (k, span) in spans.iter().enumerate() {
                let start = next.len();
                let mut s = span.start;
                while s < span.end {
                    let pt = els[s].0[j];
                    let mut e = s;
                    while e < span.end && els[e].0[j] == pt {
                        e += 1;
                    }
                    next.push(CosetNode { point: pt, parent: k, children: 0..0, representative: s });
                    next_spans.push(s..e);
                    s = e;
                }
                levels[j][k].children = start..next.len();
            }
            levels.push(next);
            spans = next_spans;
        }
        let degrees = (0..n).map(|j| (levels[j + 1].len() / levels[j].len().max(1)) as u32).collect();
        StabChain { n, degrees, levels }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    /// `(d₁, …, dₙ)`.
    pub fn indices(&self) -> &[u32] {
        &self.degrees
    }

    pub fn levels(&self) -> &[Vec<CosetNode>] {
        &self.levels
    }

    /// Representatives (indices into the element list) of `G/Gᵢ`, one per left coset.
    pub fn coset_representatives(&self, i: usize) -> Vec<usize> {
        self.levels[i].iter().map(|c| c.representative).collect()
    }

    /// Order of `Gᵢ`.
    pub fn stabilizer_order(&self, i: usize) -> u64 {
        self.degrees[i..].iter().map(|&d| d as u64).product()
    }

    /// Zero-based positions `σ(i)` for `σ` with `σ(l) = ρ(l)` for `l < i`,
    /// excluding `ρ(i)` itself; `i` is one-based.
    pub fn b_positions(&self, rho: &Perm, i: usize) -> Vec<usize> {
        let mut node = 0;
        for l in 0..i - 1 {
            let want = rho.0[l];
            node = self.levels[l][node]
                .children
                .clone()
                .find(|&c| self.levels[l + 1][c].point == want)
                .expect("permutation is not in the group");
        }
        self.levels[i - 1][node]
            .children
            .clone()
            .map(|c| self.levels[i][c].point as usize)
            .filter(|&p| p as u32 != rho.0[i - 1])
            .collect()
    }

    /// The set `B(ρ,i)` of root values, `i` one-based.
    pub fn b_set<T: Clone>(&self, rho: &Perm, i: usize, roots: &[T]) -> Vec<T> {
        self.b_positions(rho, i).into_iter().map(|p| roots[p].clone()).collect()
    }
}

/// Orbits of the group on points, smallest point first.
pub fn orbits(g: &PermGroup) -> Vec<Vec<usize>> {
    let mut owner: BTreeMap<usize, usize> = BTreeMap::new();
    let mut out: Vec<Vec<usize>> = Vec::new();
    for s in 0..g.degree() {
        if owner.contains_key(&s) {
            continue;
        }
        let mut orb: BTreeSet<usize> = BTreeSet::new();
        for e in g.elements() {
            orb.insert(e.apply(s));
        }
        for &p in &orb {
            owner.insert(p, out.len());
        }
        out.push(orb.into_iter().collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn group(n: usize, gens: &[&str]) -> PermGroup {
        PermGroup::generate(n, gens.iter().map(|g| Perm::parse_cycles(g, n).unwrap()).collect()).unwrap()
    }

    fn f20() -> PermGroup {
        group(5, &["(1 2 3 4 5)", "(2 3 5 4)"])
    }

    #[test]
    fn cycle_notation_roundtrip() {
        let p = Perm::parse_cycles("(1 2 3)(4 5)", 6).unwrap();
        assert_eq!(p.to_one_based(), [2, 3, 1, 5, 4, 6]);
        assert_eq!(p.to_cycles(), "(1 2 3)(4 5)");
        assert_eq!(Perm::identity(3).to_cycles(), "()");
        assert!(Perm::parse_cycles("(1 2)(2 3)", 3).is_err());
        assert!(Perm::parse_cycles("(1 4)", 3).is_err());
    }

    #[test]
    fn composition_is_right_to_left() {
        let a = Perm::parse_cycles("(1 2)", 3).unwrap();
        let b = Perm::parse_cycles("(2 3)", 3).unwrap();
        // a∘b sends 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(a.compose(&b).to_cycles(), "(1 2 3)");
    }

    #[test]
    fn orders() {
        assert_eq!(group(5, &["(1 2 3 4 5)"]).order(), 5);
        assert_eq!(f20().order(), 20);
        assert_eq!(PermGroup::generate(3, Vec::new()).unwrap().order(), 1);
        assert_eq!(PermGroup::symmetric(5).unwrap().order(), 120);
    }

    #[test]
    fn group_cap_is_enforced() {
        let s = PermGroup::symmetric(5).unwrap();
        let r = PermGroup::generate_with_cap(5, s.generators().to_vec(), 100);
        assert!(matches!(r, Err(Error::GroupTooLarge { cap: 100 })));
    }

    #[test]
    fn index_sequences() {
        assert_eq!(group(5, &["(1 2 3 4 5)"]).stab_chain().indices(), &[5, 1, 1, 1, 1]);
        assert_eq!(f20().stab_chain().indices(), &[5, 4, 1, 1, 1]);
        assert_eq!(PermGroup::trivial(4).stab_chain().indices(), &[1, 1, 1, 1]);
        assert_eq!(PermGroup::symmetric(4).unwrap().stab_chain().indices(), &[4, 3, 2, 1]);
    }

    /// Brute force: `Gᵢ` by filtering all elements.
    fn stabilizer_order(g: &PermGroup, i: usize) -> usize {
        g.elements().iter().filter(|s| (0..i).all(|j| s.apply(j) == j)).count()
    }

    #[test]
    fn indices_agree_with_brute_force_stabilizers() {
        for g in [f20(), group(6, &["(1 2 3 4 5 6)", "(1 6)(2 5)(3 4)"]), group(6, &["(1 2 3)", "(1 4)(2 5)(3 6)"])] {
            let c = g.stab_chain();
            for i in 1..=g.degree() {
                assert_eq!(c.indices()[i - 1] as usize, stabilizer_order(&g, i - 1) / stabilizer_order(&g, i));
            }
        }
    }

    #[test]
    fn b_sets() {
        let c5 = group(5, &["(1 2 3 4 5)"]);
        let roots = [19u32, 9, 13, 17, 12];
        let mut b = c5.stab_chain().b_set(&Perm::identity(5), 1, &roots);
        b.sort();
        assert_eq!(b, [9, 12, 13, 17]);
        for i in 2..=5 {
            assert!(c5.stab_chain().b_set(&Perm::identity(5), i, &roots).is_empty());
        }
        // brute force over σ fixing 1 in F(5)
        let g = f20();
        let b = g.stab_chain().b_positions(&Perm::identity(5), 2);
        let brute: BTreeSet<usize> =
            g.elements().iter().filter(|s| s.apply(0) == 0).map(|s| s.apply(1)).filter(|&p| p != 1).collect();
        assert_eq!(b.len(), 3);
        assert_eq!(b.into_iter().collect::<BTreeSet<_>>(), brute);
    }

    #[test]
    fn coset_representatives_are_lex_least() {
        let g = f20();
        let c = g.stab_chain();
        let reps = c.coset_representatives(1);
        assert_eq!(reps.len(), 5);
        for &r in &reps {
            let rho = &g.elements()[r];
            let least = g.elements().iter().filter(|s| s.apply(0) == rho.apply(0)).min().unwrap();
            assert_eq!(rho, least);
        }
    }

    fn arb_group() -> impl Strategy<Value = PermGroup> {
        (2usize..6).prop_flat_map(|n| {
            proptest::collection::vec(Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(), 0..3).prop_map(
                move |gs| {
                    PermGroup::generate(n, gs.into_iter().map(|g| Perm::from_images(g).unwrap()).collect()).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn closure_and_lagrange(g in arb_group()) {
            let n = g.degree();
            let mut fact = 1usize;
            for k in 2..=n { fact *= k; }
            prop_assert_eq!(fact % g.order(), 0);
            for a in g.elements() {
                prop_assert!(g.contains(&a.inverse()));
                for b in g.elements().iter().take(6) {
                    prop_assert!(g.contains(&a.compose(b)));
                }
            }
            let c = g.stab_chain();
            prop_assert_eq!(c.indices().iter().map(|&d| d as usize).product::<usize>(), g.order());
        }

        #[test]
        fn b_sets_have_size_index_minus_one(g in arb_group()) {
            let c = g.stab_chain();
            for rho in g.elements() {
                for i in 1..=g.degree() {
                    prop_assert_eq!(c.b_positions(rho, i).len() as u32, c.indices()[i - 1] - 1);
                }
            }
        }

        #[test]
        fn b_sets_depend_only_on_the_prefix(g in arb_group()) {
            let c = g.stab_chain();
            let els = g.elements();
            for i in 1..=g.degree() {
                for a in els {
                    for b in els {
                        if (0..i - 1).all(|l| a.apply(l) == b.apply(l)) {
                            let mut x = c.b_positions(a, i);
                            let mut y = c.b_positions(b, i);
                            x.push(a.apply(i - 1));
                            y.push(b.apply(i - 1));
                            x.sort();
                            y.sort();
                            prop_assert_eq!(x, y);
                        }
                    }
                }
            }
        }

        #[test]
        fn coset_factorization_is_unique(g in arb_group()) {
            let c = g.stab_chain();
            let els = g.elements();
            for i in 0..=g.degree() {
                let reps = c.coset_representatives(i);
                let stab: Vec<&Perm> = els.iter().filter(|s| (0..i).all(|j| s.apply(j) == j)).collect();
                let mut products: Vec<Perm> = reps.iter().flat_map(|&r| stab.iter().map(move |t| els[r].compose(t))).collect();
                prop_assert_eq!(products.len(), els.len());
                products.sort();
                prop_assert_eq!(&products[..], els);
            }
        }
    }
}
