//! Polynomial identities in anticommutative algebras: a small DSL, full
//! linearization, and exhaustive verification over basis tuples.

mod catalog;
mod check;
mod parser;
mod term;

use std::fmt;

use crate::error::{Error, Result};

pub use catalog::{builtin_catalog, builtin_maps, catalog_entries, lookup, lookup_map, CatalogEntry};
pub use check::{
    check_identity, check_identity_with, check_skew_symmetric, check_skew_symmetric_with, evaluate,
    random_element, random_substitution_check, CheckOptions, CheckReport, CheckStatus, Counterexample, Program,
};
pub use term::{Polynomial, Term};

use parser::Parser;

/// `lhs - rhs ≡ 0`, multihomogeneous in the declared variables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Identity {
    name: String,
    variables: Vec<String>,
    lhs: Polynomial,
    rhs: Polynomial,
    degrees: Vec<u32>,
}

impl Identity {
    pub fn new(name: &str, variables: Vec<String>, lhs: Polynomial, rhs: Polynomial) -> Result<Self> {
        let degrees = multidegree(&variables, [&lhs, &rhs])?;
        Ok(Identity {
            name: name.to_string(),
            variables,
            lhs,
            rhs,
            degrees,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn lhs(&self) -> &Polynomial {
        &self.lhs
    }

    pub fn rhs(&self) -> &Polynomial {
        &self.rhs
    }

    /// Degree of each declared variable, in declaration order.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree_of(&self, var: &str) -> Option<u32> {
        self.variables.iter().position(|v| v == var).map(|i| self.degrees[i])
    }

    pub fn is_multilinear(&self) -> bool {
        self.degrees.iter().all(|&d| d == 1)
    }

    /// `lhs - rhs` as a single formal sum.
    pub fn residual(&self) -> Polynomial {
        self.lhs.sub(&self.rhs)
    }

    pub fn renamed(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Full linearization: each variable of degree `d > 1` becomes `d`
    /// fresh variables, and only the component of degree one in every
    /// fresh variable is kept. Over characteristic zero the result holds in
    /// an algebra exactly when the original identity does.
    pub fn linearize(&self) -> Identity {
        if self.is_multilinear() {
            return self.clone();
        }
        // For each old variable, the indices of its replacements.
        let mut new_vars: Vec<String> = Vec::new();
        let mut replacement: Vec<Vec<usize>> = Vec::new();
        for (v, &d) in self.variables.iter().zip(&self.degrees) {
            if d == 1 {
                replacement.push(vec![new_vars.len()]);
                new_vars.push(v.clone());
            } else {
                let mut ids = Vec::new();
                for k in 1..=d {
                    let mut name = format!("{v}{k}");
                    while self.variables.contains(&name) || new_vars.contains(&name) {
                        name.push('\'');
                    }
                    ids.push(new_vars.len());
                    new_vars.push(name);
                }
                replacement.push(ids);
            }
        }
        let lin = |p: &Polynomial| {
            let mut raw = Vec::new();
            for (c, t) in p.terms() {
                for t2 in linearize_term(t, &replacement) {
                    raw.push((c.clone(), t2));
                }
            }
            Polynomial::from_terms(raw)
        };
        let (lhs, rhs) = (lin(&self.lhs), lin(&self.rhs));
        let degrees = vec![1; new_vars.len()];
        Identity {
            name: format!("{}_linearized", self.name),
            variables: new_vars,
            lhs,
            rhs,
            degrees,
        }
    }
}

/// All terms obtained by distributing the replacement variables of each
/// repeated variable bijectively over its occurrences.
fn linearize_term(t: &Term, replacement: &[Vec<usize>]) -> Vec<Term> {
    let mut leaves = Vec::new();
    t.leaves(&mut leaves);
    // Positions of every old variable's occurrences, in leaf order.
    let mut occurrences: Vec<Vec<usize>> = vec![Vec::new(); replacement.len()];
    for (pos, &v) in leaves.iter().enumerate() {
        occurrences[v].push(pos);
    }
    let mut assignments: Vec<Vec<usize>> = vec![leaves.clone()];
    for (v, occ) in occurrences.iter().enumerate() {
        let ids = &replacement[v];
        if ids.len() == 1 {
            for a in &mut assignments {
                for &p in occ {
                    a[p] = ids[0];
                }
            }
            continue;
        }
        let mut next = Vec::new();
        for a in &assignments {
            for perm in permutations(ids.len()) {
                let mut b = a.clone();
                for (k, &p) in occ.iter().enumerate() {
                    b[p] = ids[perm[k]];
                }
                next.push(b);
            }
        }
        assignments = next;
    }
    assignments
        .into_iter()
        .map(|a| {
            let mut counter = 0;
            t.map_leaves(&mut counter, &mut |k, _| a[k])
        })
        .collect()
}

/// Permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn multidegree<'a>(variables: &[String], sides: impl IntoIterator<Item = &'a Polynomial>) -> Result<Vec<u32>> {
    let mut reference: Option<(Vec<u32>, String)> = None;
    for side in sides {
        for (_, t) in side.terms() {
            let mut d = vec![0; variables.len()];
            t.count_vars(&mut d);
            match &reference {
                None => reference = Some((d, t.display(variables).to_string())),
                Some((r, first)) if *r != d => {
                    return Err(Error::InconsistentMultidegree(format!(
                        "`{}` has degrees {} but `{first}` has {}",
                        t.display(variables),
                        fmt_degrees(variables, &d),
                        fmt_degrees(variables, r),
                    )));
                }
                _ => {}
            }
        }
    }
    let degrees = match reference {
        Some((d, _)) => d,
        None => return Err(Error::InconsistentMultidegree("identity has no terms".into())),
    };
    if let Some(i) = degrees.iter().position(|&d| d == 0) {
        return Err(Error::InconsistentMultidegree(format!(
            "variable `{}` is declared but never used",
            variables[i]
        )));
    }
    Ok(degrees)
}

fn fmt_degrees(variables: &[String], d: &[u32]) -> String {
    let parts: Vec<String> = variables.iter().zip(d).map(|(v, k)| format!("{v}:{k}")).collect();
    format!("({})", parts.join(", "))
}

/// Parses `name : x,y,... | expr = expr`.
pub fn parse_identity(src: &str) -> Result<Identity> {
    let mut p = Parser::new(src);
    let header = p.header()?;
    let lhs = p.sum()?;
    p.expect_equals()?;
    let rhs = p.sum()?;
    p.finish()?;
    Identity::new(&header.name, header.variables, lhs, rhs)
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} : {} | {} = {}",
            self.name,
            self.variables.join(","),
            self.lhs.display(&self.variables),
            self.rhs.display(&self.variables)
        )
    }
}

/// A multilinear map `A^n -> A` given by a formal sum, e.g. `J(x1,x2,x3*x4)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultilinearMap {
    name: String,
    variables: Vec<String>,
    body: Polynomial,
}

impl MultilinearMap {
    pub fn new(name: &str, variables: Vec<String>, body: Polynomial) -> Result<Self> {
        let degrees = multidegree(&variables, [&body])?;
        if let Some(i) = degrees.iter().position(|&d| d != 1) {
            return Err(Error::NotMultilinear(format!(
                "`{}` has degree {} in `{}`",
                name, degrees[i], variables[i]
            )));
        }
        Ok(MultilinearMap {
            name: name.to_string(),
            variables,
            body,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn arity(&self) -> usize {
        self.variables.len()
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }
}

impl fmt::Display for MultilinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} : {} | {}", self.name, self.variables.join(","), self.body.display(&self.variables))
    }
}

/// Parses `name : x1,...,xn | expr`. The expression must be multilinear.
pub fn parse_map(src: &str) -> Result<MultilinearMap> {
    let mut p = Parser::new(src);
    let header = p.header()?;
    let body = p.sum()?;
    p.finish()?;
    MultilinearMap::new(&header.name, header.variables, body)
}
