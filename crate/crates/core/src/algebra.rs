//! Finite-dimensional anticommutative algebras given by structure constants.
//!
//! Only the products `e_i e_j` with `i < j` are stored. The remaining
//! products are synthesized: `e_j e_i = -(e_i e_j)` and `e_i e_i = 0`, so
//! anticommutativity holds by construction and cannot be broken by data.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

/// Dense coordinate vector over the basis of some algebra.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn zero(dim: usize) -> Self {
        Element {
            coords: vec![Scalar::zero(); dim],
        }
    }

    pub fn basis(dim: usize, index: usize) -> Self {
        let mut e = Element::zero(dim);
        e.coords[index] = Scalar::one();
        e
    }

    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        Element { coords }
    }

    pub fn from_sparse(v: &SparseVec, dim: usize) -> Self {
        Element {
            coords: v.to_dense(dim),
        }
    }

    pub fn to_sparse(&self) -> SparseVec {
        SparseVec::from_dense(&self.coords)
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    fn check_dim(&self, other: &Element) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Element) -> Result<Element> {
        self.check_dim(other)?;
        Ok(Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element> {
        self.check_dim(other)?;
        Ok(Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        })
    }
}

/// Panics on dimension mismatch; use [`Element::try_add`] for a checked version.
impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("element dimensions differ")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("element dimensions differ")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element {
            coords: self.coords.iter().map(|x| -x).collect(),
        }
    }
}

/// Exact coordinatewise equality.
pub fn element_equal(u: &Element, v: &Element) -> Result<bool> {
    u.check_dim(v)?;
    Ok(u.coords == v.coords)
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Algebra {
    dim: usize,
    labels: Vec<String>,
    // rows[i] holds (j, e_i e_j) for j > i with nonzero product, sorted by j.
    rows: Vec<Vec<(usize, SparseVec)>>,
}

/// Collects structure constants before freezing them into an [`Algebra`].
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    dim: usize,
    labels: Vec<String>,
    rows: Vec<Vec<(usize, SparseVec)>>,
}

impl AlgebraBuilder {
    pub fn new(labels: Vec<String>) -> Self {
        let dim = labels.len();
        AlgebraBuilder {
            dim,
            labels,
            rows: vec![Vec::new(); dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Records `e_i e_j = value` for `i < j`. Repeating a pair is an error.
    pub fn set(&mut self, i: usize, j: usize, value: SparseVec) -> Result<&mut Self> {
        if i >= j {
            return Err(Error::InvalidArgument(format!(
                "structure constants are stored only for i < j, got ({i}, {j})"
            )));
        }
        if j >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: j + 1,
            });
        }
        if let Some(k) = value.max_index() {
            if k >= self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: k + 1,
                });
            }
        }
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(_) => Err(Error::InvalidArgument(format!("duplicate product ({i}, {j})"))),
            Err(pos) => {
                row.insert(pos, (j, value));
                Ok(self)
            }
        }
    }

    /// Like [`set`](Self::set) but accepts either orientation and adds to an
    /// existing entry instead of rejecting it. `i == j` must carry zero.
    pub fn accumulate(&mut self, i: usize, j: usize, value: &SparseVec) -> Result<&mut Self> {
        if i == j {
            return if value.is_zero() {
                Ok(self)
            } else {
                Err(Error::InvalidArgument(format!("square e_{i} e_{i} must vanish")))
            };
        }
        let (i, j, value) = if i < j { (i, j, value.clone()) } else { (j, i, value.neg()) };
        if j >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: j + 1,
            });
        }
        let row = &mut self.rows[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(pos) => row[pos].1 = row[pos].1.add(&value),
            Err(pos) => row.insert(pos, (j, value)),
        }
        Ok(self)
    }

    pub fn build(mut self) -> Algebra {
        for row in &mut self.rows {
            row.retain(|(_, v)| !v.is_zero());
        }
        Algebra {
            dim: self.dim,
            labels: self.labels,
            rows: self.rows,
        }
    }
}

impl Algebra {
    pub fn builder(labels: Vec<String>) -> AlgebraBuilder {
        AlgebraBuilder::new(labels)
    }

    /// Algebra with the zero product.
    pub fn abelian(labels: Vec<String>) -> Algebra {
        AlgebraBuilder::new(labels).build()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Algebra> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Stored constant `e_i e_j` for `i < j`, `None` if the product is zero.
    pub fn stored_product(&self, i: usize, j: usize) -> Option<&SparseVec> {
        debug_assert!(i < j);
        let row = &self.rows[i];
        row.binary_search_by_key(&j, |(c, _)| *c).ok().map(|pos| &row[pos].1)
    }

    /// `e_i e_j` for any pair of basis indices.
    pub fn basis_product(&self, i: usize, j: usize) -> SparseVec {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => SparseVec::zero(),
            Less => self.stored_product(i, j).cloned().unwrap_or_default(),
            Greater => self.stored_product(j, i).map(SparseVec::neg).unwrap_or_default(),
        }
    }

    /// All stored `(i, j, e_i e_j)` with `i < j` and nonzero product, in
    /// lexicographic order of `(i, j)`.
    pub fn nonzero_products(&self) -> impl Iterator<Item = (usize, usize, &SparseVec)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn is_abelian(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    /// Bilinear product on sparse coordinates. This is the evaluation hot path.
    pub fn mul_sparse(&self, u: &SparseVec, v: &SparseVec) -> SparseVec {
        if u.is_zero() || v.is_zero() {
            return SparseVec::zero();
        }
        let mut acc: Vec<(usize, Scalar)> = Vec::new();
        for (i, a) in u.iter() {
            for (j, b) in v.iter() {
                let (product, negate) = match i.cmp(&j) {
                    std::cmp::Ordering::Equal => continue,
                    std::cmp::Ordering::Less => (self.stored_product(i, j), false),
                    std::cmp::Ordering::Greater => (self.stored_product(j, i), true),
                };
                let Some(product) = product else { continue };
                let mut ab = a * b;
                if negate {
                    ab = -ab;
                }
                if ab.is_one() {
                    acc.extend(product.iter().map(|(k, c)| (k, c.clone())));
                } else {
                    acc.extend(product.iter().map(|(k, c)| (k, &ab * c)));
                }
            }
        }
        SparseVec::from_pairs(acc)
    }

    /// `(xy)z + (yz)x + (zx)y` on sparse coordinates.
    pub fn jacobian_sparse(&self, x: &SparseVec, y: &SparseVec, z: &SparseVec) -> SparseVec {
        let a = self.mul_sparse(&self.mul_sparse(x, y), z);
        let b = self.mul_sparse(&self.mul_sparse(y, z), x);
        let c = self.mul_sparse(&self.mul_sparse(z, x), y);
        a.add(&b).add(&c)
    }

    fn check(&self, u: &Element) -> Result<()> {
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: u.dim(),
            });
        }
        Ok(())
    }

    pub fn multiply(&self, u: &Element, v: &Element) -> Result<Element> {
        self.check(u)?;
        self.check(v)?;
        Ok(Element::from_sparse(&self.mul_sparse(&u.to_sparse(), &v.to_sparse()), self.dim))
    }

    pub fn jacobian(&self, x: &Element, y: &Element, z: &Element) -> Result<Element> {
        self.check(x)?;
        self.check(y)?;
        self.check(z)?;
        let j = self.jacobian_sparse(&x.to_sparse(), &y.to_sparse(), &z.to_sparse());
        Ok(Element::from_sparse(&j, self.dim))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::basis(self.dim, i)
    }

    /// Linear combination such as `2*[x1,x2] - v`, using basis labels.
    pub fn format_sparse(&self, v: &SparseVec) -> String {
        format_combination(v.iter().map(|(i, c)| (c, self.label(i))))
    }

    pub fn format_element(&self, e: &Element) -> String {
        self.format_sparse(&e.to_sparse())
    }

    /// Parses a combination of basis labels, e.g. `x1 - 1/2*[x1,x2] + 3*v`.
    pub fn parse_element(&self, src: &str) -> Result<Element> {
        let mut coords = vec![Scalar::zero(); self.dim];
        let bad = |m: &str| Error::InvalidArgument(format!("element `{src}`: {m}"));
        let mut rest = src.trim();
        if rest.is_empty() {
            return Err(bad("empty"));
        }
        if rest == "0" {
            return Ok(Element::from_coords(coords));
        }
        let mut first = true;
        while !rest.is_empty() {
            let mut sign = Scalar::one();
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r.trim_start();
            } else if !first {
                return Err(bad("expected `+` or `-`"));
            }
            first = false;
            // A term runs until the next top-level `+`/`-`; labels never contain those.
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let term = rest[..end].trim();
            rest = rest[end..].trim_start();
            let (coef, label) = match term.split_once('*') {
                Some((c, l)) => (c.trim().parse::<Scalar>()?, l.trim()),
                None => (Scalar::one(), term),
            };
            let idx = self
                .index_of(label)
                .ok_or_else(|| bad(&format!("unknown basis label `{label}`")))?;
            coords[idx] += sign * coef;
        }
        Ok(Element::from_coords(coords))
    }
}

pub(crate) fn format_combination<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Scalar, &'a str)>,
{
    let mut out = String::new();
    for (c, name) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(name);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Antisymmetric bilinear form; only `i < j` values are stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BilinearForm {
    dim: usize,
    entries: std::collections::BTreeMap<(usize, usize), Scalar>,
}

impl BilinearForm {
    pub fn zero(dim: usize) -> Self {
        BilinearForm {
            dim,
            entries: Default::default(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `ψ(e_i, e_j) = value` (and implicitly `ψ(e_j, e_i) = -value`).
    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<()> {
        if i.max(j) >= self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: i.max(j) + 1,
            });
        }
        if i == j {
            return if value.is_zero() {
                Ok(())
            } else {
                Err(Error::InvalidArgument(format!("ψ(e_{i}, e_{i}) must vanish")))
            };
        }
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), -value) };
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
        Ok(())
    }

    pub fn value(&self, i: usize, j: usize) -> Scalar {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Scalar::zero(),
            Less => self.entries.get(&(i, j)).cloned().unwrap_or_default(),
            Greater => self.entries.get(&(j, i)).map(|x| -x).unwrap_or_default(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn evaluate(&self, u: &Element, v: &Element) -> Result<Scalar> {
        for e in [u, v] {
            if e.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: e.dim(),
                });
            }
        }
        let mut total = Scalar::zero();
        for (&(i, j), c) in &self.entries {
            let term = u.coord(i) * v.coord(j) - u.coord(j) * v.coord(i);
            if !term.is_zero() {
                total += c * &term;
            }
        }
        Ok(total)
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::format::write_algebra(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn labels(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("e{i}")).collect()
    }

    /// e1 e2 = e3, e2 e3 = e1, e3 e1 = e2.
    fn cross() -> Algebra {
        let mut b = Algebra::builder(labels(3));
        b.set(0, 1, SparseVec::unit(2)).unwrap();
        b.set(1, 2, SparseVec::unit(0)).unwrap();
        b.set(0, 2, SparseVec::single(1, Scalar::from_int(-1))).unwrap();
        b.build()
    }

    #[test]
    fn builder_rejects_bad_pairs() {
        let mut b = Algebra::builder(labels(3));
        assert!(b.set(1, 0, SparseVec::unit(2)).is_err());
        assert!(b.set(1, 1, SparseVec::unit(2)).is_err());
        assert!(b.set(0, 5, SparseVec::unit(2)).is_err());
        assert!(b.set(0, 1, SparseVec::unit(7)).is_err());
        b.set(0, 1, SparseVec::unit(2)).unwrap();
        assert!(b.set(0, 1, SparseVec::unit(2)).is_err());
    }

    #[test]
    fn anticommutativity_sweep() {
        let a = cross();
        for i in 0..3 {
            assert!(a.basis_product(i, i).is_zero());
            for j in 0..3 {
                assert_eq!(a.basis_product(i, j), a.basis_product(j, i).neg());
            }
        }
        let x = Element::from_coords(vec![Scalar::from_int(2), Scalar::ratio(1, 3), Scalar::from_int(-5)]);
        assert!(a.multiply(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn jacobian_vanishes_on_cross_product_algebra() {
        let a = cross();
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    let (x, y, z) = (a.basis_element(i), a.basis_element(j), a.basis_element(k));
                    assert!(a.jacobian(&x, &y, &z).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn dimension_mismatch_errors() {
        let a = cross();
        let short = Element::zero(2);
        let ok = Element::zero(3);
        assert!(matches!(a.multiply(&short, &ok), Err(Error::DimensionMismatch { .. })));
        assert!(a.jacobian(&ok, &ok, &short).is_err());
        assert!(element_equal(&short, &ok).is_err());
        assert!(element_equal(&ok, &Element::zero(3)).unwrap());
    }

    #[test]
    fn element_labels_round_trip() {
        let a = cross();
        let e = a.parse_element("e1 - 1/2*e3 + 2*e1").unwrap();
        assert_eq!(a.format_element(&e), "3*e1 - 1/2*e3");
        assert!(a.parse_element("e9").is_err());
        assert!(a.parse_element("0").unwrap().is_zero());
    }

    #[test]
    fn bilinear_form_is_antisymmetric() {
        let mut psi = BilinearForm::zero(3);
        psi.set(2, 0, Scalar::from_int(4)).unwrap();
        assert_eq!(psi.value(0, 2), Scalar::from_int(-4));
        assert_eq!(psi.value(2, 0), Scalar::from_int(4));
        assert!(psi.value(1, 1).is_zero());
        assert!(psi.set(1, 1, Scalar::one()).is_err());
        let u = Element::basis(3, 2);
        let v = Element::basis(3, 0);
        assert_eq!(psi.evaluate(&u, &v).unwrap(), Scalar::from_int(4));
        assert_eq!(psi.evaluate(&v, &u).unwrap(), Scalar::from_int(-4));
    }

    fn small_scalar() -> impl Strategy<Value = Scalar> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Scalar::ratio(n, d))
    }

    fn element3() -> impl Strategy<Value = Element> {
        proptest::collection::vec(small_scalar(), 3).prop_map(Element::from_coords)
    }

    /// Non-Lie sample: e1 e2 = e1 + e3, e1 e3 = 2 e2, e2 e3 = -1/3 e1.
    fn skewed() -> Algebra {
        let mut b = Algebra::builder(labels(3));
        b.set(0, 1, SparseVec::from_pairs(vec![(0, Scalar::one()), (2, Scalar::one())])).unwrap();
        b.set(0, 2, SparseVec::single(1, Scalar::from_int(2))).unwrap();
        b.set(1, 2, SparseVec::single(0, Scalar::ratio(-1, 3))).unwrap();
        b.build()
    }

    proptest! {
        #[test]
        fn multiply_is_bilinear(alpha in small_scalar(), u in element3(), u2 in element3(), v in element3()) {
            let a = skewed();
            let lhs = a.multiply(&(&u.scale(&alpha) + &u2), &v).unwrap();
            let rhs = &a.multiply(&u, &v).unwrap().scale(&alpha) + &a.multiply(&u2, &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn jacobian_is_alternating(x in element3(), y in element3(), z in element3()) {
            let a = skewed();
            let j = a.jacobian(&x, &y, &z).unwrap();
            prop_assert!(a.jacobian(&x, &x, &z).unwrap().is_zero());
            prop_assert!(a.jacobian(&x, &y, &y).unwrap().is_zero());
            prop_assert_eq!(a.jacobian(&y, &x, &z).unwrap(), -&j);
            prop_assert_eq!(a.jacobian(&x, &z, &y).unwrap(), -&j);
            prop_assert_eq!(a.jacobian(&z, &y, &x).unwrap(), -&j);
        }
    }
}
