//! Exhaustive evaluation over basis tuples.
//!
//! For a multilinear identity, vanishing on every tuple of basis elements
//! is equivalent to vanishing everywhere, so enumeration decides it.
//! Tuples are visited in lexicographic order of basis indices and the
//! first failing tuple in that order is reported, also when the work is
//! split across threads.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;
use rayon::prelude::*;

use crate::algebra::{Algebra, Element};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

use super::term::{Polynomial, Term};
use super::{Identity, MultilinearMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckOptions {
    /// Worker threads; `0` uses every available core, `1` runs inline.
    pub jobs: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { jobs: 1 }
    }
}

impl CheckOptions {
    pub fn parallel() -> Self {
        CheckOptions { jobs: 0 }
    }

    pub fn with_jobs(jobs: usize) -> Self {
        CheckOptions { jobs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Holds,
    Fails,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub variables: Vec<String>,
    pub tuple: Vec<usize>,
    pub residual: SparseVec,
    /// Swapped argument positions, for skew-symmetry violations.
    pub transposition: Option<(usize, usize)>,
}

impl Counterexample {
    /// `(x=x1, y=x2, ...) -> -3*v` in basis-label notation.
    pub fn describe(&self, alg: &Algebra) -> String {
        let args: Vec<String> = self
            .variables
            .iter()
            .zip(&self.tuple)
            .map(|(v, &i)| format!("{v}={}", alg.label(i)))
            .collect();
        let swap = match self.transposition {
            Some((i, j)) => format!(" swapping {} and {}", self.variables[i], self.variables[j]),
            None => String::new(),
        };
        format!("({}){swap} -> {}", args.join(", "), alg.format_sparse(&self.residual))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub status: CheckStatus,
    pub counterexample: Option<Counterexample>,
    pub tuples_checked: u64,
    /// Whether the identity was linearized before enumeration.
    pub linearized: bool,
}

impl CheckReport {
    pub fn holds(&self) -> bool {
        self.status == CheckStatus::Holds
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Holds => "holds",
            CheckStatus::Fails => "fails",
        })
    }
}

#[derive(Clone, Debug)]
enum Node {
    Var(usize),
    Mul(usize, usize),
}

/// A polynomial compiled to a DAG of shared products.
#[derive(Clone, Debug)]
pub struct Program {
    arity: usize,
    nodes: Vec<Node>,
    outputs: Vec<(Scalar, usize)>,
    // refresh[p]: nodes depending on some variable >= p, in topological order.
    refresh: Vec<Vec<usize>>,
}

impl Program {
    pub fn compile(arity: usize, poly: &Polynomial) -> Program {
        let mut nodes = Vec::new();
        let mut max_var = Vec::new();
        let mut ids: HashMap<Term, usize> = HashMap::new();
        fn intern(
            t: &Term,
            nodes: &mut Vec<Node>,
            max_var: &mut Vec<usize>,
            ids: &mut HashMap<Term, usize>,
        ) -> usize {
            if let Some(&id) = ids.get(t) {
                return id;
            }
            let (node, mv) = match t {
                Term::Var(v) => (Node::Var(*v), *v),
                Term::Mul(a, b) => {
                    let ia = intern(a, nodes, max_var, ids);
                    let ib = intern(b, nodes, max_var, ids);
                    (Node::Mul(ia, ib), max_var[ia].max(max_var[ib]))
                }
            };
            nodes.push(node);
            max_var.push(mv);
            ids.insert(t.clone(), nodes.len() - 1);
            nodes.len() - 1
        }
        let mut outputs: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (c, t) in poly.terms() {
            let id = intern(t, &mut nodes, &mut max_var, &mut ids);
            *outputs.entry(id).or_default() += c;
        }
        let refresh = (0..arity.max(1))
            .map(|p| (0..nodes.len()).filter(|&n| max_var[n] >= p).collect())
            .collect();
        Program {
            arity,
            nodes,
            outputs: outputs.into_iter().filter(|(_, c)| !c.is_zero()).map(|(n, c)| (c, n)).collect(),
            refresh,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    fn compute(&self, alg: &Algebra, node: usize, args: &[SparseVec], values: &[SparseVec]) -> SparseVec {
        match self.nodes[node] {
            Node::Var(v) => args[v].clone(),
            Node::Mul(a, b) => alg.mul_sparse(&values[a], &values[b]),
        }
    }

    fn output(&self, values: &[SparseVec]) -> SparseVec {
        let mut r = SparseVec::zero();
        for (c, n) in &self.outputs {
            r = r.add_scaled(c, &values[*n]);
        }
        r
    }

    /// Value at arbitrary sparse arguments.
    pub fn eval(&self, alg: &Algebra, args: &[SparseVec]) -> SparseVec {
        assert_eq!(args.len(), self.arity);
        let mut values = vec![SparseVec::zero(); self.nodes.len()];
        for n in 0..self.nodes.len() {
            values[n] = self.compute(alg, n, args, &values);
        }
        self.output(&values)
    }

    /// Visits every basis tuple whose first entry is `first`, in
    /// lexicographic order, until `visit` returns `true`. Returns the
    /// number of tuples visited.
    fn scan_prefix(
        &self,
        alg: &Algebra,
        first: usize,
        mut visit: impl FnMut(&[usize], SparseVec) -> bool,
    ) -> u64 {
        let dim = alg.dim();
        let n = self.arity;
        let mut tuple = vec![0usize; n];
        tuple[0] = first;
        let mut args: Vec<SparseVec> = tuple.iter().map(|&i| SparseVec::unit(i)).collect();
        let mut values = vec![SparseVec::zero(); self.nodes.len()];
        let mut refresh_from = 0;
        let mut visited = 0u64;
        loop {
            for &node in &self.refresh[refresh_from] {
                values[node] = self.compute(alg, node, &args, &values);
            }
            visited += 1;
            if visit(&tuple, self.output(&values)) {
                return visited;
            }
            // Advance the odometer over positions 1..n.
            let mut p = n;
            while p > 1 {
                p -= 1;
                if tuple[p] + 1 < dim {
                    tuple[p] += 1;
                    args[p] = SparseVec::unit(tuple[p]);
                    for q in p + 1..n {
                        tuple[q] = 0;
                        args[q] = SparseVec::unit(0);
                    }
                    refresh_from = p;
                    break;
                }
                if p == 1 {
                    return visited;
                }
            }
            if n <= 1 {
                return visited;
            }
        }
    }

    /// First tuple (lexicographic) with nonzero value.
    fn first_nonzero(&self, alg: &Algebra, opts: &CheckOptions) -> Option<(Vec<usize>, SparseVec)> {
        let find = |first: usize| {
            let mut hit = None;
            self.scan_prefix(alg, first, |t, v| {
                if v.is_zero() {
                    false
                } else {
                    hit = Some((t.to_vec(), v));
                    true
                }
            });
            hit
        };
        run_ordered(alg.dim(), opts, find)
    }

    /// Every tuple with nonzero value, in lexicographic order.
    fn all_nonzero(&self, alg: &Algebra, opts: &CheckOptions) -> Vec<(Vec<usize>, SparseVec)> {
        let collect = |first: usize| {
            let mut out = Vec::new();
            self.scan_prefix(alg, first, |t, v| {
                if !v.is_zero() {
                    out.push((t.to_vec(), v));
                }
                false
            });
            out
        };
        let dim = alg.dim();
        let chunks: Vec<Vec<(Vec<usize>, SparseVec)>> = match opts.jobs {
            1 => (0..dim).map(collect).collect(),
            _ => with_pool(opts, || (0..dim).into_par_iter().map(collect).collect()),
        };
        chunks.into_iter().flatten().collect()
    }
}

fn with_pool<T: Send>(opts: &CheckOptions, f: impl FnOnce() -> T + Send) -> T {
    if opts.jobs == 0 {
        return f();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(opts.jobs).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}

/// Runs `f` over `0..dim` and returns the result for the smallest index
/// that produced one.
fn run_ordered<T: Send>(dim: usize, opts: &CheckOptions, f: impl Fn(usize) -> Option<T> + Sync + Send) -> Option<T> {
    match opts.jobs {
        1 => (0..dim).find_map(f),
        _ => with_pool(opts, || (0..dim).into_par_iter().find_map_first(f)),
    }
}

fn tuple_count(dim: usize, arity: usize) -> u64 {
    (dim as u64).saturating_pow(arity as u32)
}

/// Lexicographic rank of `tuple` plus one.
fn tuples_through(dim: usize, tuple: &[usize]) -> u64 {
    tuple.iter().fold(0u64, |acc, &i| acc * dim as u64 + i as u64) + 1
}

pub fn check_identity(alg: &Algebra, id: &Identity) -> CheckReport {
    check_identity_with(alg, id, &CheckOptions::default())
}

/// Linearizes when needed, then evaluates `lhs - rhs` on every basis tuple.
pub fn check_identity_with(alg: &Algebra, id: &Identity, opts: &CheckOptions) -> CheckReport {
    let linearized = !id.is_multilinear();
    let lin = id.linearize();
    let program = Program::compile(lin.variables().len(), &lin.residual());
    let dim = alg.dim();
    let hit = if dim == 0 { None } else { program.first_nonzero(alg, opts) };
    match hit {
        None => CheckReport {
            name: id.name().to_string(),
            status: CheckStatus::Holds,
            counterexample: None,
            tuples_checked: tuple_count(dim, program.arity()),
            linearized,
        },
        Some((tuple, residual)) => CheckReport {
            name: id.name().to_string(),
            status: CheckStatus::Fails,
            tuples_checked: tuples_through(dim, &tuple),
            counterexample: Some(Counterexample {
                variables: lin.variables().to_vec(),
                tuple,
                residual,
                transposition: None,
            }),
            linearized,
        },
    }
}

pub fn check_skew_symmetric(alg: &Algebra, map: &MultilinearMap) -> CheckReport {
    check_skew_symmetric_with(alg, map, &CheckOptions::default())
}

/// Checks `f(..., a, b, ...) = -f(..., b, a, ...)` for every adjacent
/// transposition on every basis tuple. Adjacent transpositions generate
/// the symmetric group, so this is full skew-symmetry.
pub fn check_skew_symmetric_with(alg: &Algebra, map: &MultilinearMap, opts: &CheckOptions) -> CheckReport {
    let n = map.arity();
    let dim = alg.dim();
    let program = Program::compile(n, map.body());
    let table: HashMap<Vec<usize>, SparseVec> = if dim == 0 {
        HashMap::new()
    } else {
        program.all_nonzero(alg, opts).into_iter().collect()
    };
    // A violation at (t, i) is also one at (swap_i t, i), so scanning the
    // nonzero entries finds every violating tuple.
    let mut first: Option<(Vec<usize>, usize, SparseVec)> = None;
    for (t, val) in &table {
        for i in 0..n.saturating_sub(1) {
            let mut s = t.clone();
            s.swap(i, i + 1);
            let sum = match table.get(&s) {
                Some(w) => val.add(w),
                None => val.clone(),
            };
            if sum.is_zero() {
                continue;
            }
            let cand = if s < *t { s } else { t.clone() };
            let better = match &first {
                None => true,
                Some((ft, fi, _)) => (&cand, i) < (ft, *fi),
            };
            if better {
                first = Some((cand, i, sum));
            }
        }
    }
    let total = tuple_count(dim, n);
    match first {
        None => CheckReport {
            name: map.name().to_string(),
            status: CheckStatus::Holds,
            counterexample: None,
            tuples_checked: total,
            linearized: false,
        },
        Some((tuple, i, residual)) => CheckReport {
            name: map.name().to_string(),
            status: CheckStatus::Fails,
            counterexample: Some(Counterexample {
                variables: map.variables().to_vec(),
                tuple,
                residual,
                transposition: Some((i, i + 1)),
            }),
            tuples_checked: total,
            linearized: false,
        },
    }
}

/// `lhs - rhs` of `id` (not linearized) at the given elements.
pub fn evaluate(alg: &Algebra, id: &Identity, args: &[Element]) -> Result<Element> {
    if args.len() != id.variables().len() {
        return Err(Error::InvalidArgument(format!(
            "`{}` takes {} arguments, got {}",
            id.name(),
            id.variables().len(),
            args.len()
        )));
    }
    for a in args {
        if a.dim() != alg.dim() {
            return Err(Error::DimensionMismatch {
                expected: alg.dim(),
                found: a.dim(),
            });
        }
    }
    let program = Program::compile(args.len(), &id.residual());
    let sparse: Vec<SparseVec> = args.iter().map(Element::to_sparse).collect();
    Ok(Element::from_sparse(&program.eval(alg, &sparse), alg.dim()))
}

/// Random element with small rational coordinates.
pub fn random_element<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Element {
    Element::from_coords(
        (0..dim)
            .map(|_| Scalar::ratio(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
            .collect(),
    )
}

/// Evaluates the original identity at `samples` random substitutions.
/// Returns the index of the first nonzero sample, if any.
pub fn random_substitution_check<R: Rng + ?Sized>(
    alg: &Algebra,
    id: &Identity,
    samples: usize,
    rng: &mut R,
) -> Option<usize> {
    let program = Program::compile(id.variables().len(), &id.residual());
    (0..samples).find(|_| {
        let args: Vec<SparseVec> = (0..program.arity())
            .map(|_| random_element(alg.dim(), rng).to_sparse())
            .collect();
        !program.eval(alg, &args).is_zero()
    })
}
