use std::collections::BTreeSet;

use crate::algebra::{Algebra, BilinearForm};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

use super::free::WordAlgebra;

/// `A + kv` with `(a, s)(b, t) = (ab, psi(a, b) v)`.
pub fn central_extension(alg: &Algebra, psi: &BilinearForm) -> Result<Algebra> {
    if psi.dim() != alg.dim() {
        return Err(Error::DimensionMismatch {
            expected: alg.dim(),
            found: psi.dim(),
        });
    }
    let v = alg.dim();
    let mut labels = alg.labels().to_vec();
    labels.push("v".into());
    let mut b = Algebra::builder(labels);
    for (i, j, p) in alg.nonzero_products() {
        b.accumulate(i, j, p)?;
    }
    for ((i, j), c) in psi.entries() {
        b.accumulate(i, j, &SparseVec::single(v, c.clone()))?;
    }
    Ok(b.build())
}

/// Reads lines `psi <word> <word> <value>`. Words use label syntax and
/// are canonicalized with sign, so entries may be written in any order.
pub fn parse_psi(base: &WordAlgebra, src: &str) -> Result<BilinearForm> {
    let mut psi = BilinearForm::zero(base.algebra.dim());
    let mut seen = BTreeSet::new();
    for (n, raw) in src.lines().enumerate() {
        let line_no = n + 1;
        let err = |message: String| Error::Format { line: line_no, message };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [kw, a, b, c] = toks[..] else {
            return Err(err(format!("expected `psi <word> <word> <value>`, got `{line}`")));
        };
        if kw != "psi" {
            return Err(err(format!("unknown keyword `{kw}`")));
        }
        let (i, si) = base.resolve(a).map_err(|e| err(e.to_string()))?;
        let (j, sj) = base.resolve(b).map_err(|e| err(e.to_string()))?;
        if i == j {
            return Err(err(format!("psi({a}, {b}) pairs a word with itself")));
        }
        if !seen.insert((i.min(j), i.max(j))) {
            return Err(err(format!("duplicate entry for the pair {a}, {b}")));
        }
        let value: Scalar = c.parse().map_err(|e: Error| err(e.to_string()))?;
        psi.set(i, j, value * Scalar::from_int((si * sj) as i64))?;
    }
    Ok(psi)
}
