use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// Binary product tree over variable indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Term {
    Var(usize),
    Mul(Box<Term>, Box<Term>),
}

impl Term {
    pub fn product(a: Term, b: Term) -> Term {
        Term::Mul(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Mul(a, b) => a.degree() + b.degree(),
        }
    }

    /// Adds the number of occurrences of each variable to `degrees`.
    pub fn count_vars(&self, degrees: &mut [u32]) {
        match self {
            Term::Var(v) => degrees[*v] += 1,
            Term::Mul(a, b) => {
                a.count_vars(degrees);
                b.count_vars(degrees);
            }
        }
    }

    /// Replaces the `k`-th leaf (in left-to-right order) with `f(k, var)`.
    pub(crate) fn map_leaves(&self, counter: &mut usize, f: &mut impl FnMut(usize, usize) -> usize) -> Term {
        match self {
            Term::Var(v) => {
                let k = *counter;
                *counter += 1;
                Term::Var(f(k, *v))
            }
            Term::Mul(a, b) => {
                let l = a.map_leaves(counter, f);
                let r = b.map_leaves(counter, f);
                Term::product(l, r)
            }
        }
    }

    pub(crate) fn leaves(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Mul(a, b) => {
                a.leaves(out);
                b.leaves(out);
            }
        }
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> TermDisplay<'a> {
        TermDisplay { term: self, names }
    }
}

pub struct TermDisplay<'a> {
    term: &'a Term,
    names: &'a [String],
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &Term, names: &[String], f: &mut fmt::Formatter<'_>, nested: bool) -> fmt::Result {
            match t {
                Term::Var(v) => f.write_str(&names[*v]),
                Term::Mul(a, b) => {
                    if nested {
                        f.write_str("(")?;
                    }
                    go(a, names, f, true)?;
                    f.write_str("*")?;
                    go(b, names, f, true)?;
                    if nested {
                        f.write_str(")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self.term, self.names, f, false)
    }
}

/// Formal linear combination of product trees. Structurally equal trees
/// are merged; anticommutativity is not applied.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Polynomial {
    terms: Vec<(Scalar, Term)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn var(v: usize) -> Self {
        Polynomial {
            terms: vec![(Scalar::one(), Term::Var(v))],
        }
    }

    /// Merges repeated trees, keeping first-occurrence order, and drops zeros.
    pub fn from_terms(raw: Vec<(Scalar, Term)>) -> Self {
        let mut index: BTreeMap<Term, usize> = BTreeMap::new();
        let mut terms: Vec<(Scalar, Term)> = Vec::new();
        for (c, t) in raw {
            match index.get(&t) {
                Some(&i) => terms[i].0 += c,
                None => {
                    index.insert(t.clone(), terms.len());
                    terms.push((c, t));
                }
            }
        }
        terms.retain(|(c, _)| !c.is_zero());
        Polynomial { terms }
    }

    pub fn terms(&self) -> &[(Scalar, Term)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().chain(&other.terms).cloned().collect())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(a, t)| (a * c, t.clone())).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    /// Bilinear product of formal sums.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut raw = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, s) in &self.terms {
            for (b, t) in &other.terms {
                raw.push((a * b, Term::product(s.clone(), t.clone())));
            }
        }
        Polynomial::from_terms(raw)
    }

    /// `(xy)z + (yz)x + (zx)y`.
    pub fn jacobian(x: &Polynomial, y: &Polynomial, z: &Polynomial) -> Polynomial {
        x.mul(y).mul(z).add(&y.mul(z).mul(x)).add(&z.mul(x).mul(y))
    }

    pub fn display<'a>(&'a self, names: &'a [String]) -> PolynomialDisplay<'a> {
        PolynomialDisplay { poly: self, names }
    }
}

pub struct PolynomialDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolynomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (k, (c, t)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if !mag.is_one() {
                write!(f, "{mag} ")?;
            }
            write!(f, "{}", t.display(self.names))?;
        }
        Ok(())
    }
}
