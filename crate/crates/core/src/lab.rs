//! Subspace calculus inside an algebra: products of subspaces, powers,
//! the Lie kernel, Jacobian spans, ideals, quotients and subalgebras.

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;
use crate::subspace::{kernel, Subspace};

fn check_ambient(alg: &Algebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

pub fn span(alg: &Algebra, gens: &[Element]) -> Result<Subspace> {
    Subspace::span_elements(alg.dim(), gens)
}

/// Span of `uv` over spanning rows `u` of `U` and `v` of `V`.
pub fn product_subspace(alg: &Algebra, u: &Subspace, v: &Subspace) -> Result<Subspace> {
    check_ambient(alg, u)?;
    check_ambient(alg, v)?;
    let mut out = Subspace::zero(alg.dim());
    for a in u.rows() {
        for b in v.rows() {
            let p = alg.mul_sparse(a, b);
            if !p.is_zero() {
                out.insert(&p);
            }
        }
    }
    Ok(out)
}

/// Span of `J(u, v, w)` over spanning rows.
pub fn jacobian_span(alg: &Algebra, u: &Subspace, v: &Subspace, w: &Subspace) -> Result<Subspace> {
    for s in [u, v, w] {
        check_ambient(alg, s)?;
    }
    let mut out = Subspace::zero(alg.dim());
    for a in u.rows() {
        for b in v.rows() {
            let ab = alg.mul_sparse(a, b);
            for c in w.rows() {
                let j = alg
                    .mul_sparse(&ab, c)
                    .add(&alg.mul_sparse(&alg.mul_sparse(b, c), a))
                    .add(&alg.mul_sparse(&alg.mul_sparse(c, a), b));
                if !j.is_zero() {
                    out.insert(&j);
                }
            }
        }
    }
    Ok(out)
}

/// `[A^1, ..., A^k_max]` with `A^k = sum_{i+j=k} A^i A^j`.
pub fn power_chain(alg: &Algebra, k_max: usize) -> Result<Vec<Subspace>> {
    if k_max == 0 {
        return Err(Error::InvalidArgument("k_max must be at least 1".into()));
    }
    let mut powers = vec![Subspace::full(alg.dim())];
    for k in 2..=k_max {
        let mut p = Subspace::zero(alg.dim());
        for i in 1..=k / 2 {
            let prod = product_subspace(alg, &powers[i - 1], &powers[k - i - 1])?;
            p = p.sum(&prod);
        }
        powers.push(p);
    }
    Ok(powers)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nilpotency {
    pub nilpotent: bool,
    /// Smallest `c` with `A^c = 0`.
    pub class: Option<usize>,
    /// Dimensions of `A^1, A^2, ...` as far as they were computed.
    pub power_dims: Vec<usize>,
}

/// Computes powers until one vanishes or the chain is provably stationary.
///
/// If `A^k = A^{k+1} = ... = A^{2k}`, every later power equals `A^k`, so a
/// nonzero plateau of that length proves the algebra is not nilpotent.
pub fn is_nilpotent(alg: &Algebra) -> Nilpotency {
    let mut powers: Vec<Subspace> = vec![Subspace::full(alg.dim())];
    let mut plateau_start = 1;
    loop {
        let k = powers.len();
        if powers[k - 1].is_zero() {
            return Nilpotency {
                nilpotent: true,
                class: Some(k),
                power_dims: powers.iter().map(Subspace::dim).collect(),
            };
        }
        if k >= 2 * plateau_start && powers[plateau_start - 1] == powers[k - 1] {
            return Nilpotency {
                nilpotent: false,
                class: None,
                power_dims: powers.iter().map(Subspace::dim).collect(),
            };
        }
        let next_k = k + 1;
        let mut p = Subspace::zero(alg.dim());
        for i in 1..=next_k / 2 {
            let prod = product_subspace(alg, &powers[i - 1], &powers[next_k - i - 1]).expect("same ambient");
            p = p.sum(&prod);
        }
        if p != powers[k - 1] {
            plateau_start = next_k;
        }
        powers.push(p);
    }
}

/// `N(A) = { x : J(x, A, A) = 0 }`.
pub fn lie_kernel(alg: &Algebra) -> Subspace {
    let d = alg.dim();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|j| (j + 1..d).map(move |k| (j, k))).collect();
    let images: Vec<SparseVec> = (0..d)
        .map(|i| {
            let x = SparseVec::unit(i);
            let mut parts = Vec::new();
            for (p, &(j, k)) in pairs.iter().enumerate() {
                let jac = alg.jacobian_sparse(&x, &SparseVec::unit(j), &SparseVec::unit(k));
                parts.extend(jac.iter().map(|(l, c)| (p * d + l, c.clone())));
            }
            SparseVec::from_pairs(parts)
        })
        .collect();
    kernel(pairs.len() * d, &images)
}

/// First `(row, basis index)` whose product leaves `s`, if any.
fn escaping_product(alg: &Algebra, s: &Subspace) -> Option<(usize, usize)> {
    for (r, row) in s.rows().iter().enumerate() {
        for j in 0..alg.dim() {
            let p = alg.mul_sparse(row, &SparseVec::unit(j));
            if !s.contains(&p) {
                return Some((r, j));
            }
        }
    }
    None
}

pub fn is_ideal(alg: &Algebra, s: &Subspace) -> bool {
    s.ambient_dim() == alg.dim() && escaping_product(alg, s).is_none()
}

/// Smallest ideal containing `u`.
pub fn ideal_closure(alg: &Algebra, u: &Subspace) -> Result<Subspace> {
    check_ambient(alg, u)?;
    let mut cur = u.clone();
    loop {
        let mut next = cur.clone();
        for row in cur.rows() {
            for j in 0..alg.dim() {
                let p = alg.mul_sparse(row, &SparseVec::unit(j));
                if !p.is_zero() {
                    next.insert(&p);
                }
            }
        }
        if next.dim() == cur.dim() {
            return Ok(cur);
        }
        cur = next;
    }
}

/// `A / I` with basis the non-pivot coordinates of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Algebra,
    ideal: Subspace,
    complement: Vec<usize>,
}

impl Quotient {
    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    /// Coordinates of the ambient algebra that survive as the quotient basis.
    pub fn complement(&self) -> &[usize] {
        &self.complement
    }

    pub fn project_sparse(&self, v: &SparseVec) -> SparseVec {
        let r = self.ideal.reduce(v);
        SparseVec::from_pairs(
            self.complement
                .iter()
                .enumerate()
                .map(|(q, &c)| (q, r.get(c)))
                .collect(),
        )
    }

    pub fn project(&self, e: &Element) -> Element {
        Element::from_sparse(&self.project_sparse(&e.to_sparse()), self.complement.len())
    }
}

pub fn quotient_algebra(alg: &Algebra, ideal: &Subspace) -> Result<Quotient> {
    check_ambient(alg, ideal)?;
    if let Some((r, j)) = escaping_product(alg, ideal) {
        let row = &ideal.rows()[r];
        let p = alg.mul_sparse(row, &SparseVec::unit(j));
        return Err(Error::NotAnIdeal(format!(
            "({}) * {} = {} is not in the subspace",
            alg.format_sparse(row),
            alg.label(j),
            alg.format_sparse(&p)
        )));
    }
    let complement = ideal.non_pivots();
    let labels = complement.iter().map(|&c| alg.label(c).to_string()).collect();
    let mut q = Quotient {
        algebra: Algebra::abelian(Vec::new()),
        ideal: ideal.clone(),
        complement: complement.clone(),
    };
    let mut builder = Algebra::builder(labels);
    for (a, &ca) in complement.iter().enumerate() {
        for (b, &cb) in complement.iter().enumerate().skip(a + 1) {
            let p = q.project_sparse(&alg.basis_product(ca, cb));
            if !p.is_zero() {
                builder.set(a, b, p)?;
            }
        }
    }
    q.algebra = builder.build();
    Ok(q)
}

/// Algebra structure on a subspace closed under the product, with the
/// echelon rows as basis.
pub fn restrict(alg: &Algebra, s: &Subspace) -> Result<Algebra> {
    check_ambient(alg, s)?;
    let labels = s
        .rows()
        .iter()
        .enumerate()
        .map(|(k, r)| match r.entries() {
            [(i, c)] if c.is_one() => alg.label(*i).to_string(),
            _ => format!("s{k}"),
        })
        .collect();
    let mut builder = Algebra::builder(labels);
    for (a, ra) in s.rows().iter().enumerate() {
        for (b, rb) in s.rows().iter().enumerate().skip(a + 1) {
            let p = alg.mul_sparse(ra, rb);
            let coords = s.coordinates(&p).ok_or_else(|| {
                Error::NotASubalgebra(format!(
                    "({}) * ({}) = {} leaves the subspace",
                    alg.format_sparse(ra),
                    alg.format_sparse(rb),
                    alg.format_sparse(&p)
                ))
            })?;
            let v = SparseVec::from_pairs(coords.into_iter().enumerate().collect::<Vec<(usize, Scalar)>>());
            if !v.is_zero() {
                builder.set(a, b, v)?;
            }
        }
    }
    Ok(builder.build())
}

#[derive(Clone, Debug)]
pub struct Subalgebra {
    pub subspace: Subspace,
    pub algebra: Algebra,
}

/// Closes `gens` under the product, one breadth-first round at a time.
pub fn subalgebra_generate(alg: &Algebra, gens: &[Element]) -> Result<Subalgebra> {
    let mut s = span(alg, gens)?;
    loop {
        let rows = s.rows().to_vec();
        let mut next = s.clone();
        for (a, ra) in rows.iter().enumerate() {
            for rb in &rows[a + 1..] {
                let p = alg.mul_sparse(ra, rb);
                if !p.is_zero() {
                    next.insert(&p);
                }
            }
        }
        if next.dim() == s.dim() {
            break;
        }
        s = next;
    }
    let algebra = restrict(alg, &s)?;
    Ok(Subalgebra { subspace: s, algebra })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize, p: &str) -> Vec<String> {
        (1..=n).map(|i| format!("{p}{i}")).collect()
    }

    fn heisenberg() -> Algebra {
        let mut b = Algebra::builder(vec!["x".into(), "y".into(), "z".into()]);
        b.set(0, 1, SparseVec::unit(2)).unwrap();
        b.build()
    }

    fn cross() -> Algebra {
        let mut b = Algebra::builder(names(3, "e"));
        b.set(0, 1, SparseVec::unit(2)).unwrap();
        b.set(1, 2, SparseVec::unit(0)).unwrap();
        b.set(0, 2, SparseVec::single(1, Scalar::from_int(-1))).unwrap();
        b.build()
    }

    /// a1 a2 = a4, a4 a3 = a5: anticommutative, not Lie.
    fn non_lie() -> Algebra {
        let mut b = Algebra::builder(names(5, "a"));
        b.set(0, 1, SparseVec::unit(3)).unwrap();
        b.set(2, 3, SparseVec::single(4, Scalar::from_int(-1))).unwrap();
        b.build()
    }

    #[test]
    fn products_with_zero() {
        let a = heisenberg();
        let full = Subspace::full(3);
        assert!(product_subspace(&a, &full, &Subspace::zero(3)).unwrap().is_zero());
        assert_eq!(product_subspace(&a, &full, &full).unwrap(), Subspace::span(3, &[SparseVec::unit(2)]));
        assert!(product_subspace(&a, &full, &Subspace::full(4)).is_err());
    }

    #[test]
    fn nilpotency_classes() {
        let ab = Algebra::abelian(names(3, "e"));
        let n = is_nilpotent(&ab);
        assert_eq!((n.nilpotent, n.class), (true, Some(2)));
        assert_eq!(is_nilpotent(&heisenberg()).class, Some(3));
        let c = is_nilpotent(&cross());
        assert!(!c.nilpotent);
        assert_eq!(is_nilpotent(&non_lie()).class, Some(4));
        assert_eq!(power_chain(&non_lie(), 4).unwrap().iter().map(Subspace::dim).collect::<Vec<_>>(), vec![5, 2, 1, 0]);
        assert!(power_chain(&ab, 0).is_err());
        assert_eq!(is_nilpotent(&Algebra::abelian(vec![])).class, Some(1));
    }

    #[test]
    fn lie_kernels() {
        assert!(lie_kernel(&cross()).is_full());
        // Only J(a1,a2,a3) and its permutations are nonzero.
        let k = lie_kernel(&non_lie());
        assert_eq!(k, Subspace::span(5, &[SparseVec::unit(3), SparseVec::unit(4)]));
    }

    #[test]
    fn jacobian_span_of_lie_algebra_vanishes() {
        let a = cross();
        let f = Subspace::full(3);
        assert!(jacobian_span(&a, &f, &f, &f).unwrap().is_zero());
        let b = non_lie();
        let g = Subspace::full(5);
        assert_eq!(jacobian_span(&b, &g, &g, &g).unwrap(), Subspace::span(5, &[SparseVec::unit(4)]));
    }

    #[test]
    fn ideal_closures() {
        let a = non_lie();
        assert!(ideal_closure(&a, &Subspace::full(5)).unwrap().is_full());
        assert!(ideal_closure(&a, &Subspace::zero(5)).unwrap().is_zero());
        let c = ideal_closure(&a, &Subspace::span(5, &[SparseVec::unit(2)])).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(is_ideal(&a, &c));
    }

    #[test]
    fn quotients() {
        let a = non_lie();
        let q = quotient_algebra(&a, &Subspace::full(5)).unwrap();
        assert_eq!(q.algebra.dim(), 0);
        let q0 = quotient_algebra(&a, &Subspace::zero(5)).unwrap();
        assert_eq!(q0.algebra, a);
        let i = Subspace::span(5, &[SparseVec::unit(4)]);
        let q = quotient_algebra(&a, &i).unwrap();
        assert_eq!(q.algebra.labels(), &["a1", "a2", "a3", "a4"]);
        assert_eq!(q.complement(), &[0, 1, 2, 3]);
        assert!(q.algebra.basis_product(2, 3).is_zero());
        assert!(!q.algebra.basis_product(0, 1).is_zero());
        let bad = quotient_algebra(&a, &Subspace::span(5, &[SparseVec::unit(2)])).unwrap_err();
        assert!(matches!(bad, Error::NotAnIdeal(_)), "{bad}");
        // Projection is an algebra map on every basis pair.
        for x in 0..5 {
            for y in 0..5 {
                let lhs = q.project_sparse(&a.basis_product(x, y));
                let rhs = q.algebra.mul_sparse(&q.project_sparse(&SparseVec::unit(x)), &q.project_sparse(&SparseVec::unit(y)));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn generated_subalgebras() {
        let a = non_lie();
        let one = subalgebra_generate(&a, &[a.basis_element(0)]).unwrap();
        assert_eq!(one.subspace.dim(), 1);
        assert!(one.algebra.is_abelian());
        let two = subalgebra_generate(&a, &[a.basis_element(0), a.basis_element(1)]).unwrap();
        assert_eq!(two.subspace.dim(), 3);
        assert_eq!(two.algebra.labels(), &["a1", "a2", "a4"]);
        let three = subalgebra_generate(&a, &[a.basis_element(0), a.basis_element(1), a.basis_element(2)]).unwrap();
        assert!(three.subspace.is_full());
        assert_eq!(three.algebra, a);
        let err = restrict(&a, &Subspace::span(5, &[SparseVec::unit(0), SparseVec::unit(1)])).unwrap_err();
        assert!(matches!(err, Error::NotASubalgebra(_)));
    }
}
