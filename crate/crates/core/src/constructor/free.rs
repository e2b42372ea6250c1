use std::collections::HashMap;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

use super::word::Word;

pub const DEFAULT_WORD_CAP: usize = 10_000;

/// An algebra whose basis is a list of words, with word-label names.
#[derive(Clone, Debug)]
pub struct WordAlgebra {
    pub algebra: Algebra,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
    n_gens: usize,
    nil_class: usize,
}

impl WordAlgebra {
    fn new(words: Vec<Word>, n_gens: usize, nil_class: usize, table: impl Fn(&Word, &Word) -> Option<(Word, i8)>) -> Self {
        let index: HashMap<Word, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let mut b = Algebra::builder(words.iter().map(Word::label).collect());
        for (i, a) in words.iter().enumerate() {
            for (j, c) in words.iter().enumerate().skip(i + 1) {
                if a.degree() + c.degree() >= nil_class {
                    continue;
                }
                if let Some((w, s)) = table(a, c) {
                    if let Some(&k) = index.get(&w) {
                        b.set(i, j, SparseVec::single(k, Scalar::from_int(s as i64)))
                            .expect("fresh pair");
                    }
                }
            }
        }
        WordAlgebra {
            algebra: b.build(),
            words,
            index,
            n_gens,
            nil_class,
        }
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn word(&self, i: usize) -> &Word {
        &self.words[i]
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn nil_class(&self) -> usize {
        self.nil_class
    }

    /// Number of basis words of each degree `1..nil_class`.
    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.nil_class.saturating_sub(1)];
        for w in &self.words {
            out[w.degree() - 1] += 1;
        }
        out
    }

    /// Basis index of the canonical form of a label, with its sign.
    pub fn resolve(&self, label: &str) -> Result<(usize, i8)> {
        let raw = Word::parse(label)?;
        if raw.letters().iter().any(|&g| g >= self.n_gens) {
            return Err(Error::InvalidWord(format!("{label} uses a generator outside x1..x{}", self.n_gens)));
        }
        let (w, s) = raw
            .canonicalize()
            .ok_or_else(|| Error::InvalidWord(format!("{label} is zero")))?;
        let i = self
            .index_of(&w)
            .ok_or_else(|| Error::InvalidWord(format!("{label} is not a basis word")))?;
        Ok((i, s))
    }
}

pub fn free_anticommutative(n_gens: usize, nil_class: usize) -> Result<WordAlgebra> {
    free_anticommutative_capped(n_gens, nil_class, DEFAULT_WORD_CAP)
}

/// Free anticommutative algebra on `n_gens` generators modulo all words of
/// degree `>= nil_class`.
pub fn free_anticommutative_capped(n_gens: usize, nil_class: usize, cap: usize) -> Result<WordAlgebra> {
    if n_gens == 0 {
        return Err(Error::InvalidArgument("at least one generator is required".into()));
    }
    if nil_class < 2 {
        return Err(Error::InvalidArgument("nilpotency class must be at least 2".into()));
    }
    let mut layers: Vec<Vec<Word>> = vec![(0..n_gens).map(Word::gen).collect()];
    let mut count = n_gens;
    if count > cap {
        return Err(Error::CapExceeded { count, cap });
    }
    for d in 2..nil_class {
        let mut layer = Vec::new();
        // The left factor has the larger degree.
        for dl in d.div_ceil(2)..d {
            let dr = d - dl;
            for a in &layers[dl - 1] {
                for b in &layers[dr - 1] {
                    if a < b {
                        layer.push(Word::node(a.clone(), b.clone()));
                        count += 1;
                        if count > cap {
                            return Err(Error::CapExceeded { count, cap });
                        }
                    }
                }
            }
        }
        layer.sort();
        layers.push(layer);
    }
    let words = layers.into_iter().flatten().collect();
    Ok(WordAlgebra::new(words, n_gens, nil_class, Word::mul))
}

/// Quotient by the ideal spanned by words with a repeated letter.
pub fn multilinear_quotient(f: &WordAlgebra) -> WordAlgebra {
    let words = f.words.iter().filter(|w| w.is_multilinear()).cloned().collect();
    WordAlgebra::new(words, f.n_gens, f.nil_class, Word::mul)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let f = free_anticommutative(2, 3).unwrap();
        assert_eq!(f.algebra.labels(), &["x1", "x2", "[x1,x2]"]);
        assert_eq!(free_anticommutative(4, 4).unwrap().layer_sizes(), vec![4, 6, 24]);
        assert_eq!(free_anticommutative(3, 5).unwrap().layer_sizes(), vec![3, 3, 9, 30]);
        assert_eq!(free_anticommutative(1, 6).unwrap().algebra.dim(), 1);
    }

    #[test]
    fn guards() {
        assert!(free_anticommutative(0, 3).is_err());
        assert!(free_anticommutative(2, 1).is_err());
        assert_eq!(
            free_anticommutative_capped(4, 4, 20).unwrap_err(),
            Error::CapExceeded { count: 21, cap: 20 }
        );
        assert!(matches!(free_anticommutative(6, 7), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn products() {
        let f = free_anticommutative(4, 4).unwrap();
        let a = &f.algebra;
        let (x12, _) = f.resolve("[x1,x2]").unwrap();
        let (x123, s) = f.resolve("[x1,x2,x3]").unwrap();
        assert_eq!(s, 1);
        assert_eq!(a.basis_product(x12, 2), SparseVec::unit(x123));
        assert_eq!(a.basis_product(2, x12), SparseVec::single(x123, Scalar::from_int(-1)));
        assert_eq!(a.basis_product(1, 0), SparseVec::single(x12, Scalar::from_int(-1)));
        assert!(a.basis_product(x123, 3).is_zero());
        let q = multilinear_quotient(&f);
        assert_eq!(q.layer_sizes(), vec![4, 6, 12]);
        let (q12, _) = q.resolve("[x1,x2]").unwrap();
        assert!(q.algebra.basis_product(q12, 0).is_zero());
        assert!(q.resolve("[x1,x2,x1]").is_err());
        assert!(q.resolve("[x1,x5]").is_err());
    }
}
