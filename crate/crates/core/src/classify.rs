//! Type classification: Lie, Malcev, first type, second type.

use std::collections::BTreeMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::identity::{check_identity_with, lookup, CheckOptions, CheckReport, Counterexample};
use crate::lab::{ideal_closure, jacobian_span, product_subspace};
use crate::subspace::Subspace;

/// Identities consulted by [`classify`], in evaluation order.
pub const CLASSIFY_IDENTITIES: &[&str] = &[
    "anticommutativity",
    "jacobi",
    "malcev",
    "second_type_left",
    "second_type_right",
    "jacobian_product_zero",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeVerdict {
    pub anticommutative: bool,
    pub malcev: bool,
    pub first_type: bool,
    pub second_type: bool,
    pub lie: bool,
    /// Failed identity name to its first counterexample.
    pub witnesses: BTreeMap<String, Counterexample>,
    pub reports: Vec<CheckReport>,
}

impl TypeVerdict {
    pub fn is_consistent(&self) -> bool {
        (!self.lie || self.malcev) && (!self.malcev || self.anticommutative) && (!self.first_type || self.second_type)
    }

    /// Most specific type: `lie`, `first_type`, `second_type`, `malcev`
    /// or `anticommutative`.
    pub fn summary(&self) -> &'static str {
        if self.lie {
            "lie"
        } else if self.first_type {
            "first_type"
        } else if self.second_type {
            "second_type"
        } else if self.malcev {
            "malcev"
        } else {
            "anticommutative"
        }
    }

    pub fn report(&self, name: &str) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.name == name)
    }
}

pub fn classify(alg: &Algebra) -> TypeVerdict {
    classify_with(alg, &CheckOptions::default())
}

pub fn classify_with(alg: &Algebra, opts: &CheckOptions) -> TypeVerdict {
    let reports: Vec<CheckReport> = CLASSIFY_IDENTITIES
        .iter()
        .map(|name| check_identity_with(alg, &lookup(name).expect("catalog identity"), opts))
        .collect();
    let holds = |name: &str| reports.iter().any(|r| r.name == name && r.holds());
    let anticommutative = holds("anticommutativity");
    let malcev = anticommutative && holds("malcev");
    let lie = anticommutative && holds("jacobi");
    let second_type = malcev && holds("second_type_left") && holds("second_type_right");
    let first_type = malcev && holds("jacobian_product_zero");
    let witnesses = reports
        .iter()
        .filter_map(|r| r.counterexample.clone().map(|c| (r.name.clone(), c)))
        .collect();
    let verdict = TypeVerdict {
        anticommutative,
        malcev,
        first_type,
        second_type,
        lie,
        witnesses,
        reports,
    };
    assert!(verdict.is_consistent(), "inconsistent verdict {verdict:?}");
    verdict
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiprimeWitness {
    /// Ideal generated by `J(A, A, A)`.
    pub ideal: Subspace,
    pub square_is_zero: bool,
}

/// A nonzero square-zero ideal, proving `alg` is not semiprime.
///
/// Requires both second-type identities. Returns `None` when the Jacobian
/// vanishes identically.
pub fn semiprime_witness(alg: &Algebra) -> Result<Option<SemiprimeWitness>> {
    semiprime_witness_with(alg, &CheckOptions::default())
}

pub fn semiprime_witness_with(alg: &Algebra, opts: &CheckOptions) -> Result<Option<SemiprimeWitness>> {
    for name in ["second_type_left", "second_type_right"] {
        let r = check_identity_with(alg, &lookup(name).expect("catalog identity"), opts);
        if let Some(c) = r.counterexample {
            return Err(Error::Precondition(format!("{name} fails at {}", c.describe(alg))));
        }
    }
    let full = Subspace::full(alg.dim());
    let j = jacobian_span(alg, &full, &full, &full)?;
    if j.is_zero() {
        return Ok(None);
    }
    let ideal = ideal_closure(alg, &j)?;
    let square_is_zero = product_subspace(alg, &ideal, &ideal)?.is_zero();
    Ok(Some(SemiprimeWitness { ideal, square_is_zero }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use crate::sparse::SparseVec;

    fn cross() -> Algebra {
        let mut b = Algebra::builder(vec!["e1".into(), "e2".into(), "e3".into()]);
        b.set(0, 1, SparseVec::unit(2)).unwrap();
        b.set(1, 2, SparseVec::unit(0)).unwrap();
        b.set(0, 2, SparseVec::single(1, Scalar::from_int(-1))).unwrap();
        b.build()
    }

    #[test]
    fn lie_algebras_are_first_type() {
        let v = classify(&cross());
        assert!(v.lie && v.malcev && v.first_type && v.second_type);
        assert!(v.witnesses.is_empty());
        assert_eq!(v.summary(), "lie");
        assert_eq!(semiprime_witness(&cross()).unwrap(), None);
    }

    #[test]
    fn non_malcev_algebra() {
        let mut b = Algebra::builder((1..=5).map(|i| format!("a{i}")).collect());
        b.set(0, 1, SparseVec::unit(3)).unwrap();
        b.set(2, 3, SparseVec::unit(4)).unwrap();
        let a = b.build();
        let v = classify(&a);
        assert!(v.anticommutative && !v.lie);
        assert!(v.witnesses.contains_key("jacobi"));
        assert!(!v.first_type || v.second_type);
    }

    #[test]
    fn dimension_zero() {
        let v = classify(&Algebra::abelian(vec![]));
        assert_eq!(v.summary(), "lie");
    }
}
