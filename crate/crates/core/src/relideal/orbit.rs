//! Interpolation on a free group orbit `X = {σ(x) ; σ ∈ G}`.
//!
//! Every separator is a product of one univariate Lagrange factor per
//! variable, and the factor for `Tj` only depends on the prefix
//! `(ρ(x)₁, …, ρ(x)_j)`, i.e. on the node of `ρ` in the coset tree. Sums over
//! `G/Gᵢ` are therefore evaluated bottom-up on that tree as dense tensors
//! over the box `∏ [0, d_j)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::Ring;
use crate::multipoly::{Monomial, MultiPoly};
use crate::permgrp::{Perm, PermGroup, StabChain};

/// A base point together with the group acting on it by `σ(x)ᵢ = x_{σ(i)}`.
#[derive(Clone, Debug)]
pub struct OrbitConfig<R: Ring> {
    ring: R,
    x: Vec<R::Elem>,
    group: PermGroup,
    chain: StabChain,
    /// `factors[j][k]`: Lagrange factor in `Tj` of node `k` at depth `j`, low degree first.
    factors: Vec<Vec<Vec<R::Elem>>>,
}

/// `∏_{y}(T − y)/(v − y)` as a coefficient vector.
fn lagrange_factor<R: Ring>(ring: &R, v: &R::Elem, others: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let mut num = vec![ring.one()];
    let mut den = ring.one();
    for y in others {
        let mut next = vec![ring.zero(); num.len() + 1];
        for (k, c) in num.iter().enumerate() {
            ring.add_assign(&mut next[k + 1], c);
            let t = ring.mul(c, y);
            next[k] = ring.sub(&next[k], &t);
        }
        num = next;
        den = ring.mul(&den, &ring.sub(v, y));
    }
    let inv = ring.inv(&den)?;
    Ok(num.iter().map(|c| ring.mul(c, &inv)).collect())
}

impl<R: Ring> OrbitConfig<R> {
    /// Fails with `NotAUnit` when two coordinates differ by a non-unit.
    pub fn new(ring: R, x: Vec<R::Elem>, group: PermGroup) -> Result<Self> {
        let n = group.degree();
        if x.len() != n {
            return Err(Error::ArityMismatch { expected: n, found: x.len() });
        }
        let chain = group.stab_chain();
        let levels = chain.levels();
        let mut factors = vec![Vec::new()];
        for j in 1..=n {
            let mut fj = Vec::with_capacity(levels[j].len());
            for node in &levels[j] {
                let parent = &levels[j - 1][node.parent];
                let others: Vec<R::Elem> = parent
                    .children
                    .clone()
                    .map(|c| levels[j][c].point)
                    .filter(|&p| p != node.point)
                    .map(|p| x[p as usize].clone())
                    .collect();
                fj.push(lagrange_factor(&ring, &x[node.point as usize], &others)?);
            }
            factors.push(fj);
        }
        Ok(OrbitConfig { ring, x, group, chain, factors })
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn base_point(&self) -> &[R::Elem] {
        &self.x
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    /// `σ(x) = (x_{σ(1)}, …, x_{σ(n)})`.
    pub fn point(&self, sigma: &Perm) -> Vec<R::Elem> {
        (0..self.n()).map(|i| self.x[sigma.apply(i)].clone()).collect()
    }

    /// All orbit points, in the order of the group's element list.
    pub fn points(&self) -> Vec<Vec<R::Elem>> {
        self.group.elements().iter().map(|s| self.point(s)).collect()
    }

    /// Node indices of `ρ` at depths `1..=n`.
    fn path(&self, rho: &Perm) -> Result<Vec<usize>> {
        let levels = self.chain.levels();
        let mut node = 0;
        let mut out = Vec::with_capacity(self.n());
        for j in 0..self.n() {
            let want = rho.apply(j) as u32;
            node = levels[j][node]
                .children
                .clone()
                .find(|&c| levels[j + 1][c].point == want)
                .ok_or_else(|| Error::InvalidInput("permutation is not in the group".into()))?;
            out.push(node);
        }
        Ok(out)
    }

    fn univariate(&self, var: usize, coeffs: &[R::Elem]) -> MultiPoly<R> {
        let n = self.n();
        let mut p = MultiPoly::zero(self.ring.clone(), n);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(n, var, k as u32), c.clone());
        }
        p
    }

    /// The separator `h_{ρ(x)}`: 1 at `ρ(x)`, 0 elsewhere on the orbit.
    pub fn separator(&self, rho: &Perm) -> Result<MultiPoly<R>> {
        let path = self.path(rho)?;
        let mut h = MultiPoly::one(self.ring.clone(), self.n());
        for (j, &node) in path.iter().enumerate() {
            h = &h * &self.univariate(j, &self.factors[j + 1][node]);
        }
        Ok(h)
    }

    /// Dense tensor over `T_{j}..T_{depth}` (one-based `j` of `node`) of the
    /// subtree sum, weighting each node at `depth` by `weight(node)`.
    fn subtree<W: Fn(usize) -> R::Elem + Sync>(&self, j: usize, node: usize, depth: usize, weight: &W) -> Vec<R::Elem> {
        let l = &self.factors[j][node];
        if j == depth {
            let w = weight(node);
            return l.iter().map(|c| self.ring.mul(c, &w)).collect();
        }
        let children = self.chain.levels()[j][node].children.clone();
        let mut inner: Option<Vec<R::Elem>> = None;
        for c in children {
            let t = self.subtree(j + 1, c, depth, weight);
            inner = Some(match inner {
                None => t,
                Some(mut acc) => {
                    for (a, b) in acc.iter_mut().zip(&t) {
                        self.ring.add_assign(a, b);
                    }
                    acc
                }
            });
        }
        let inner = inner.unwrap_or_default();
        let mut out = Vec::with_capacity(l.len() * inner.len());
        for c in l {
            out.extend(inner.iter().map(|t| self.ring.mul(c, t)));
        }
        out
    }

    fn root_sum<W: Fn(usize) -> R::Elem + Sync>(&self, depth: usize, weight: &W) -> Vec<R::Elem> {
        let roots = self.chain.levels()[0][0].children.clone();
        let add = |mut a: Vec<R::Elem>, b: Vec<R::Elem>| {
            if a.is_empty() {
                return b;
            }
            for (x, y) in a.iter_mut().zip(&b) {
                self.ring.add_assign(x, y);
            }
            a
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            roots.into_par_iter().map(|c| self.subtree(1, c, depth, weight)).reduce(Vec::new, add)
        }
        #[cfg(not(feature = "parallel"))]
        {
            roots.map(|c| self.subtree(1, c, depth, weight)).fold(Vec::new(), add)
        }
    }

    /// Turns a dense tensor over `T1..T_depth` into a polynomial.
    fn tensor_to_poly(&self, depth: usize, t: &[R::Elem]) -> MultiPoly<R> {
        let n = self.n();
        let dims = &self.chain.indices()[..depth];
        let mut p = MultiPoly::zero(self.ring.clone(), n);
        let mut e = vec![0u32; n];
        for c in t {
            if !self.ring.is_zero(c) {
                p.add_term(Monomial::new(e.clone()), c.clone());
            }
            // last variable varies fastest
            let mut k = depth;
            while k > 0 {
                k -= 1;
                e[k] += 1;
                if e[k] < dims[k] {
                    break;
                }
                e[k] = 0;
            }
        }
        p
    }

    /// `gᵢ = Tᵢ^{dᵢ} − Σ_{ρ∈G/Gᵢ} ρ(x)ᵢ^{dᵢ} ∏_{j≤i} L_{ρ,j}(Tj)`, one-based `i`.
    pub fn generator(&self, i: usize) -> MultiPoly<R> {
        let di = self.chain.indices()[i - 1] as u64;
        let level = &self.chain.levels()[i];
        let weight = |node: usize| self.ring.pow(&self.x[level[node].point as usize], di);
        let t = self.root_sum(i, &weight);
        let mut g = -&self.tensor_to_poly(i, &t);
        g.add_term(Monomial::var(self.n(), i - 1, di as u32), self.ring.one());
        g
    }

    /// `(g₁, …, gₙ)`.
    pub fn basis(&self) -> Vec<MultiPoly<R>> {
        (1..=self.n()).map(|i| self.generator(i)).collect()
    }

    /// The `𝒪`-supported interpolant of `values`, given in the order of the group's element list.
    pub fn interpolate(&self, values: &[R::Elem]) -> Result<MultiPoly<R>> {
        let n = self.n();
        if values.len() != self.group.order() {
            return Err(Error::ArityMismatch { expected: self.group.order(), found: values.len() });
        }
        if n == 0 {
            return Ok(MultiPoly::constant(self.ring.clone(), 0, values[0].clone()));
        }
        let level = &self.chain.levels()[n];
        let weight = |node: usize| values[level[node].representative].clone();
        Ok(self.tensor_to_poly(n, &self.root_sum(n, &weight)))
    }

    /// `gᵢ` from the uncollapsed sum over all of `G` with full separators.
    pub fn generator_direct(&self, i: usize) -> Result<MultiPoly<R>> {
        let di = self.chain.indices()[i - 1];
        let mut g = MultiPoly::term(self.ring.clone(), Monomial::var(self.n(), i - 1, di), self.ring.one());
        for s in self.group.elements() {
            let c = self.ring.pow(&self.x[s.apply(i - 1)], di as u64);
            g = &g - &self.separator(s)?.scale(&c);
        }
        Ok(g)
    }
}

/// `(g₁, …, gₙ)` for the orbit of `x` under `group`.
pub fn orbit_ideal_basis<R: Ring>(ring: R, x: Vec<R::Elem>, group: PermGroup) -> Result<Vec<MultiPoly<R>>> {
    Ok(OrbitConfig::new(ring, x, group)?.basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{ExactInt, ModRing, Rationals};
    use crate::multipoly::triangular::triangular_degrees;
    use proptest::prelude::*;

    fn f23() -> ModRing {
        ModRing::new(&ExactInt::from(23), 1).unwrap()
    }

    fn cyc5() -> PermGroup {
        PermGroup::generate(5, vec![Perm::parse_cycles("(1 2 3 4 5)", 5).unwrap()]).unwrap()
    }

    fn f20() -> PermGroup {
        let g = ["(1 2 3 4 5)", "(2 3 5 4)"].map(|s| Perm::parse_cycles(s, 5).unwrap());
        PermGroup::generate(5, g.to_vec()).unwrap()
    }

    fn roots() -> Vec<ExactInt> {
        [19, 9, 13, 17, 12].map(ExactInt::from).to_vec()
    }

    #[test]
    fn trivial_group_gives_the_point_ideal() {
        let x: Vec<_> = [3, 5, 8].map(|v| Rationals.from_i64(v)).to_vec();
        let b = orbit_ideal_basis(Rationals, x, PermGroup::trivial(3)).unwrap();
        let want = ["T1 - 3", "T2 - 5", "T3 - 8"];
        for (g, w) in b.iter().zip(want) {
            assert_eq!(g, &crate::multipoly::text::parse_poly(w, Some(3)).unwrap());
        }
        let cfg =
            OrbitConfig::new(Rationals, vec![Rationals.from_i64(1), Rationals.from_i64(2)], PermGroup::trivial(2))
                .unwrap();
        assert_eq!(cfg.separator(&Perm::identity(2)).unwrap(), MultiPoly::one(Rationals, 2));
    }

    #[test]
    fn cyclic_separator_is_a_kronecker_delta() {
        let cfg = OrbitConfig::new(f23(), roots(), cyc5()).unwrap();
        let h = cfg.separator(&Perm::identity(5)).unwrap();
        for s in cfg.group().elements() {
            let v = h.evaluate(&cfg.point(s)).unwrap();
            assert_eq!(v, ExactInt::from(s.is_identity() as u8));
        }
    }

    #[test]
    fn generators_vanish_and_have_the_staircase_shape() {
        for g in [cyc5(), f20()] {
            let cfg = OrbitConfig::new(f23(), roots(), g).unwrap();
            let b = cfg.basis();
            assert_eq!(triangular_degrees(&b).unwrap(), cfg.chain().indices());
            for s in cfg.group().elements() {
                let pt = cfg.point(s);
                for p in &b {
                    assert!(p.evaluate(&pt).unwrap() == ExactInt::from(0));
                }
            }
        }
    }

    #[test]
    fn first_generator_is_the_product_of_linear_factors() {
        let cfg = OrbitConfig::new(f23(), roots(), cyc5()).unwrap();
        let r = f23();
        let mut want = MultiPoly::one(r.clone(), 5);
        for x in roots() {
            let lin = &MultiPoly::var(r.clone(), 5, 0) - &MultiPoly::constant(r.clone(), 5, x);
            want = &want * &lin;
        }
        assert_eq!(cfg.generator(1), want);
    }

    #[test]
    fn collapsed_and_direct_sums_agree() {
        let cfg = OrbitConfig::new(f23(), roots(), f20()).unwrap();
        for i in 1..=5 {
            assert_eq!(cfg.generator(i), cfg.generator_direct(i).unwrap());
        }
    }

    #[test]
    fn non_unit_differences_are_reported() {
        let r = ModRing::new(&ExactInt::from(5), 2).unwrap();
        let x = [1, 6, 2].map(ExactInt::from).to_vec();
        let g = PermGroup::symmetric(3).unwrap();
        assert!(matches!(OrbitConfig::new(r, x, g), Err(Error::NotAUnit { .. })));
    }

    fn arb_config() -> impl Strategy<Value = (PermGroup, Vec<i64>, u64)> {
        (2usize..5, prop::sample::select(vec![29u64, 31, 37, 41, 97])).prop_flat_map(|(n, p)| {
            (
                proptest::collection::vec(Just((0..n as u32).collect::<Vec<_>>()).prop_shuffle(), 0..3),
                Just((0..p as i64).collect::<Vec<_>>()).prop_shuffle(),
                Just(p),
            )
                .prop_map(move |(gs, pts, p)| {
                    let g = PermGroup::generate(n, gs.into_iter().map(|g| Perm::from_images(g).unwrap()).collect())
                        .unwrap();
                    (g, pts[..n].to_vec(), p)
                })
        })
    }

    proptest! {
        #[test]
        fn separators_sum_to_one((g, x, p) in arb_config()) {
            let r = ModRing::new(&ExactInt::from(p), 1).unwrap();
            let n = g.degree();
            let cfg = OrbitConfig::new(r.clone(), x.iter().map(|&v| ExactInt::from(v)).collect(), g).unwrap();
            let mut total = MultiPoly::zero(r.clone(), n);
            for s in cfg.group().elements() {
                total = &total + &cfg.separator(s).unwrap();
            }
            prop_assert_eq!(total, MultiPoly::one(r.clone(), n));
            let ones = vec![r.one(); cfg.group().order()];
            prop_assert_eq!(cfg.interpolate(&ones).unwrap(), MultiPoly::one(r, n));
        }

        #[test]
        fn interpolation_reproduces_values((g, x, p) in arb_config(), seed in 0u64..1000) {
            let r = ModRing::new(&ExactInt::from(p), 1).unwrap();
            let cfg = OrbitConfig::new(r.clone(), x.iter().map(|&v| ExactInt::from(v)).collect(), g).unwrap();
            let vals: Vec<ExactInt> = (0..cfg.group().order() as u64).map(|k| r.reduce(&ExactInt::from(seed * 7919 + k * k * 31))).collect();
            let h = cfg.interpolate(&vals).unwrap();
            for (s, v) in cfg.group().elements().iter().zip(&vals) {
                prop_assert_eq!(&h.evaluate(&cfg.point(s)).unwrap(), v);
            }
        }

        #[test]
        fn collapse_identity_holds((g, x, p) in arb_config()) {
            let r = ModRing::new(&ExactInt::from(p), 1).unwrap();
            let cfg = OrbitConfig::new(r, x.iter().map(|&v| ExactInt::from(v)).collect(), g).unwrap();
            for i in 1..=cfg.n() {
                prop_assert_eq!(cfg.generator(i), cfg.generator_direct(i).unwrap());
            }
        }
    }
}
