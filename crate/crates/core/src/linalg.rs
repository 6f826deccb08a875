//! Dense exact linear algebra over a field.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::exactring::Ring;

/// Pivot column, normalised row, and its combination tag.
type Row<E> = (usize, Vec<E>, Vec<E>);

/// An incrementally built row-echelon basis. Every stored row also carries
/// its expression as a combination of the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<R: Ring> {
    ring: R,
    rows: Vec<Row<R::Elem>>,
    inserted: usize,
}

pub enum Insert<E> {
    /// The vector was independent and is now a new row.
    Independent,
    /// `v_new = Σ c_k v_k` over the earlier inserted vectors.
    Dependent(Vec<E>),
}

impl<R: Ring> Echelon<R> {
    pub fn new(ring: R) -> Self {
        Echelon { ring, rows: Vec::new(), inserted: 0 }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v` as input number `inserted`; pivots at the first nonzero entry.
    pub fn insert(&mut self, v: Vec<R::Elem>) -> Insert<R::Elem> {
        let r = &self.ring;
        let k = self.inserted;
        self.inserted += 1;
        let mut w = v;
        // tag: w = v_k − Σ c_j v_j
        let mut tag = vec![r.zero(); k + 1];
        tag[k] = r.one();
        for (p, row, rtag) in &self.rows {
            let c = w[*p].clone();
            if r.is_zero(&c) {
                continue;
            }
            for (a, b) in w.iter_mut().zip(row) {
                *a = r.sub(a, &r.mul(&c, b));
            }
            for (a, b) in tag.iter_mut().zip(rtag) {
                *a = r.sub(a, &r.mul(&c, b));
            }
        }
        match w.iter().position(|c| !r.is_zero(c)) {
            None => {
                // 0 = v_k − Σ c_j v_j
                tag.pop();
                Insert::Dependent(tag.iter().map(|c| r.neg(c)).collect())
            }
            Some(p) => {
                let inv = r.inv(&w[p]).expect("nonzero pivot in a field");
                let w = w.iter().map(|c| r.mul(c, &inv)).collect();
                let tag = tag.iter().map(|c| r.mul(c, &inv)).collect();
                self.rows.push((p, w, tag));
                Insert::Independent
            }
        }
    }
}

/// Solves `A x = b` for square `A` (row-major); fails on a singular matrix.
pub fn solve<R: Ring>(ring: &R, a: &[Vec<R::Elem>], b: &[R::Elem]) -> Result<Vec<R::Elem>> {
    let cols: Vec<Vec<R::Elem>> = b.iter().map(|c| vec![c.clone()]).collect();
    Ok(solve_many(ring, a, &cols)?.into_iter().map(|mut r| r.remove(0)).collect())
}

/// Solves `A X = B` by Gauss–Jordan elimination.
pub fn solve_many<R: Ring>(ring: &R, a: &[Vec<R::Elem>], b: &[Vec<R::Elem>]) -> Result<Vec<Vec<R::Elem>>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidInput("matrix is not square".into()));
    }
    let m = b.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<R::Elem>> = a.iter().zip(b).map(|(r, s)| r.iter().chain(s).cloned().collect()).collect();
    for col in 0..n {
        let piv =
            (col..n).find(|&r| !ring.is_zero(&aug[r][col])).ok_or(Error::InvalidBasis("singular system".into()))?;
        aug.swap(col, piv);
        let inv = ring.inv(&aug[col][col])?;
        for c in aug[col].iter_mut() {
            *c = ring.mul(c, &inv);
        }
        let prow = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || ring.is_zero(&row[col]) {
                continue;
            }
            let f = row[col].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                *x = ring.sub(x, &ring.mul(&f, y));
            }
        }
    }
    Ok(aug.into_iter().map(|r| r[n..n + m].to_vec()).collect())
}

pub fn inverse<R: Ring>(ring: &R, a: &[Vec<R::Elem>]) -> Result<Vec<Vec<R::Elem>>> {
    let n = a.len();
    let id: Vec<Vec<R::Elem>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { ring.one() } else { ring.zero() }).collect()).collect();
    solve_many(ring, a, &id)
}
