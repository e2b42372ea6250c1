//! Subspaces of `k^n` in canonical reduced row echelon form.

use crate::algebra::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

/// Row space of a matrix, kept in reduced row echelon form.
///
/// Rows are sorted by pivot column, every pivot is 1 and is the only
/// nonzero entry of its column. Equal subspaces have identical rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    rows: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            rows: (0..ambient_dim).map(SparseVec::unit).collect(),
        }
    }

    pub fn span<'a, I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = &'a SparseVec>,
    {
        let mut s = Subspace::zero(ambient_dim);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn span_elements(ambient_dim: usize, elements: &[Element]) -> Result<Self> {
        let mut s = Subspace::zero(ambient_dim);
        for e in elements {
            if e.dim() != ambient_dim {
                return Err(Error::DimensionMismatch {
                    expected: ambient_dim,
                    found: e.dim(),
                });
            }
            s.insert(&e.to_sparse());
        }
        Ok(s)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn row_elements(&self) -> Vec<Element> {
        self.rows
            .iter()
            .map(|r| Element::from_sparse(r, self.ambient_dim))
            .collect()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(pivot).collect()
    }

    /// Column indices that carry no pivot, in increasing order.
    pub fn non_pivots(&self) -> Vec<usize> {
        let pivots = self.pivots();
        let mut it = pivots.iter().peekable();
        (0..self.ambient_dim)
            .filter(|c| {
                if it.peek() == Some(&c) {
                    it.next();
                    false
                } else {
                    true
                }
            })
            .collect()
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut r = v.clone();
        for row in &self.rows {
            let c = r.get(pivot(row));
            if !c.is_zero() {
                r = r.add_scaled(&-c, row);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn contains_element(&self, e: &Element) -> bool {
        self.contains(&e.to_sparse())
    }

    /// Coordinates of `v` in the row basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.iter().map(|row| v.get(pivot(row))).collect())
    }

    /// Adds `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        if let Some(k) = v.max_index() {
            assert!(k < self.ambient_dim, "vector longer than ambient space");
        }
        let r = self.reduce(v);
        let Some(&(p, ref lead)) = r.entries().first() else {
            return false;
        };
        let r = r.scale(&lead.inverse().expect("nonzero lead"));
        for row in &mut self.rows {
            let c = row.get(p);
            if !c.is_zero() {
                *row = row.add_scaled(&-c, &r);
            }
        }
        let pos = self.rows.partition_point(|row| pivot(row) < p);
        self.rows.insert(pos, r);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut s = self.clone();
        for r in &other.rows {
            s.insert(r);
        }
        s
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim && self.rows.iter().all(|r| other.contains(r))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // Kernel of (a, b) -> a*rows(self) - b*rows(other), projected to the first factor.
        let n = self.ambient_dim;
        let images: Vec<SparseVec> = self
            .rows
            .iter()
            .cloned()
            .chain(other.rows.iter().map(SparseVec::neg))
            .collect();
        let kernel = kernel(n, &images);
        let mut out = Subspace::zero(n);
        for k in kernel.rows() {
            let mut v = SparseVec::zero();
            for (i, c) in k.iter() {
                if i < self.rows.len() {
                    v = v.add_scaled(c, &self.rows[i]);
                }
            }
            out.insert(&v);
        }
        out
    }
}

fn pivot(row: &SparseVec) -> usize {
    row.entries()[0].0
}

/// Kernel of the linear map sending `e_i` to `images[i]`, where every image
/// lives in `k^codomain_dim`. Returned as a subspace of `k^images.len()`.
pub fn kernel(codomain_dim: usize, images: &[SparseVec]) -> Subspace {
    let n = images.len();
    let mut aug = Subspace::zero(codomain_dim + n);
    for (i, img) in images.iter().enumerate() {
        let mut pairs: Vec<(usize, Scalar)> = img.iter().map(|(k, c)| (k, c.clone())).collect();
        pairs.push((codomain_dim + i, Scalar::one()));
        aug.insert(&SparseVec::from_pairs(pairs));
    }
    let tails = aug.rows().iter().filter(|r| pivot(r) >= codomain_dim).map(|r| {
        SparseVec::from_pairs(r.iter().map(|(k, c)| (k - codomain_dim, c.clone())).collect())
    });
    let tails: Vec<SparseVec> = tails.collect();
    Subspace::span(n, &tails)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> SparseVec {
        SparseVec::from_dense(&xs.iter().map(|&x| Scalar::from_int(x)).collect::<Vec<_>>())
    }

    #[test]
    fn span_basics() {
        assert!(Subspace::span(3, &[]).is_zero());
        let s = Subspace::span(3, &[v(&[1, 0, 0]), v(&[2, 0, 0])]);
        assert_eq!(s.dim(), 1);
        assert!(Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 0, 1])]).is_full());
    }

    #[test]
    fn canonical_form_is_rref() {
        let s = Subspace::span(3, &[v(&[2, 4, 6]), v(&[1, 3, 4])]);
        assert_eq!(s.rows(), &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert_eq!(s.pivots(), vec![0, 1]);
        assert_eq!(s.non_pivots(), vec![2]);
        let t = Subspace::span(3, &[v(&[0, 1, 1]), v(&[1, 1, 2])]);
        assert_eq!(s, t);
    }

    #[test]
    fn coordinates_in_row_basis() {
        let s = Subspace::span(3, &[v(&[1, 0, 1]), v(&[0, 1, 1])]);
        assert_eq!(s.coordinates(&v(&[2, 3, 5])), Some(vec![Scalar::from_int(2), Scalar::from_int(3)]));
        assert_eq!(s.coordinates(&v(&[0, 0, 1])), None);
    }

    #[test]
    fn kernel_of_rank_one_map() {
        // e0 -> (1,1), e1 -> (2,2), e2 -> (0,1)
        let k = kernel(2, &[v(&[1, 1]), v(&[2, 2]), v(&[0, 1])]);
        assert_eq!(k, Subspace::span(3, &[v(&[-2, 1, 0])]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersection(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
    }

    fn vectors() -> impl Strategy<Value = Vec<SparseVec>> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, 5).prop_map(|xs| v(&xs)), 0..7)
    }

    proptest! {
        #[test]
        fn span_is_order_independent(vs in vectors()) {
            let a = Subspace::span(5, &vs);
            let rev: Vec<SparseVec> = vs.iter().rev().cloned().collect();
            prop_assert_eq!(&a, &Subspace::span(5, &rev));
            for x in &vs {
                prop_assert!(a.contains(x));
            }
        }

        #[test]
        fn rank_nullity(vs in vectors()) {
            let rank = Subspace::span(5, &vs).dim();
            let k = kernel(5, &vs);
            prop_assert_eq!(rank + k.dim(), vs.len());
            for row in k.rows() {
                let mut sum = SparseVec::zero();
                for (i, c) in row.iter() {
                    sum = sum.add_scaled(c, &vs[i]);
                }
                prop_assert!(sum.is_zero());
            }
        }
    }
}
