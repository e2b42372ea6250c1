//! Line-oriented text format for algebras and subspaces.
//!
//! ```text
//! dim 3
//! label 0 x1
//! sc 0 1 -> 2:1          # e0*e1 = e2
//! sc 1 2 -> 0:-1/2 2:3
//! ```
//!
//! Only `i < j` products may appear, each pair at most once. Labels default
//! to `e<i>` when omitted. `#` starts a comment.

use std::fmt::Write;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::sparse::SparseVec;
use crate::subspace::Subspace;

pub fn write_algebra(alg: &Algebra) -> String {
    let mut out = String::new();
    writeln!(out, "dim {}", alg.dim()).unwrap();
    for (i, l) in alg.labels().iter().enumerate() {
        writeln!(out, "label {i} {l}").unwrap();
    }
    for (i, j, v) in alg.nonzero_products() {
        write!(out, "sc {i} {j} ->").unwrap();
        for (k, c) in v.iter() {
            write!(out, " {k}:{c}").unwrap();
        }
        writeln!(out, "    # {} * {}", alg.label(i), alg.label(j)).unwrap();
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    }
}

pub fn read_algebra(src: &str) -> Result<Algebra> {
    let mut dim: Option<usize> = None;
    let mut labels: Vec<Option<String>> = Vec::new();
    let mut products: Vec<(usize, usize, usize, SparseVec)> = Vec::new();

    for (n, raw) in src.lines().enumerate() {
        let line_no = n + 1;
        let err = |m: String| Error::Format {
            line: line_no,
            message: m,
        };
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match keyword {
            "dim" => {
                if dim.is_some() {
                    return Err(err("duplicate `dim` line".into()));
                }
                let d: usize = rest.parse().map_err(|_| err(format!("bad dimension `{rest}`")))?;
                dim = Some(d);
                labels = vec![None; d];
            }
            "label" => {
                let d = dim.ok_or_else(|| err("`label` before `dim`".into()))?;
                let (idx, name) = rest
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err("expected `label <index> <name>`".into()))?;
                let idx: usize = idx.parse().map_err(|_| err(format!("bad index `{idx}`")))?;
                if idx >= d {
                    return Err(err(format!("label index {idx} out of range")));
                }
                if labels[idx].is_some() {
                    return Err(err(format!("duplicate label for index {idx}")));
                }
                labels[idx] = Some(name.trim().to_string());
            }
            "sc" => {
                let d = dim.ok_or_else(|| err("`sc` before `dim`".into()))?;
                let (pair, rhs) = rest
                    .split_once("->")
                    .ok_or_else(|| err("expected `sc i j -> k:c ...`".into()))?;
                let ij: Vec<&str> = pair.split_whitespace().collect();
                if ij.len() != 2 {
                    return Err(err("expected two indices before `->`".into()));
                }
                let i: usize = ij[0].parse().map_err(|_| err(format!("bad index `{}`", ij[0])))?;
                let j: usize = ij[1].parse().map_err(|_| err(format!("bad index `{}`", ij[1])))?;
                if i >= j {
                    return Err(err(format!("only i < j products allowed, got ({i}, {j})")));
                }
                if j >= d {
                    return Err(err(format!("index {j} out of range")));
                }
                let mut pairs = Vec::new();
                for tok in rhs.split_whitespace() {
                    let (k, c) = tok
                        .split_once(':')
                        .ok_or_else(|| err(format!("bad coefficient entry `{tok}`")))?;
                    let k: usize = k.parse().map_err(|_| err(format!("bad index `{k}`")))?;
                    if k >= d {
                        return Err(err(format!("index {k} out of range")));
                    }
                    let c: Scalar = c.parse().map_err(|e: Error| err(e.to_string()))?;
                    pairs.push((k, c));
                }
                products.push((line_no, i, j, SparseVec::from_pairs(pairs)));
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }

    if dim.is_none() {
        return Err(Error::Format {
            line: 0,
            message: "missing `dim` line".into(),
        });
    }
    let labels = labels
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.unwrap_or_else(|| format!("e{i}")))
        .collect();
    let mut builder = Algebra::builder(labels);
    for (line, i, j, v) in products {
        builder.set(i, j, v).map_err(|e| Error::Format {
            line,
            message: e.to_string(),
        })?;
    }
    Ok(builder.build())
}

/// One row per line, coordinates separated by spaces.
pub fn write_subspace(s: &Subspace) -> String {
    let mut out = String::new();
    for row in s.rows() {
        let dense = row.to_dense(s.ambient_dim());
        let line: Vec<String> = dense.iter().map(Scalar::to_string).collect();
        writeln!(out, "{}", line.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
dim 3
label 0 x1
label 1 x2
label 2 [x1,x2]
sc 0 1 -> 2:1          # e0*e1 = 1*e2
";

    #[test]
    fn parse_sample() {
        let a = read_algebra(SAMPLE).unwrap();
        assert_eq!(a.dim(), 3);
        assert_eq!(a.label(2), "[x1,x2]");
        assert_eq!(a.basis_product(1, 0), SparseVec::single(2, Scalar::from_int(-1)));
    }

    #[test]
    fn write_read_round_trip() {
        let src = "dim 4\nsc 0 1 -> 2:1/2 3:-3\nsc 2 3 -> 0:7\n";
        let a = read_algebra(src).unwrap();
        let b = read_algebra(&write_algebra(&a)).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.label(3), "e3");
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("sc 0 1 -> 2:1\n", "before `dim`"),
            ("dim 3\nsc 1 0 -> 2:1\n", "i < j"),
            ("dim 3\nsc 0 0 -> 2:1\n", "i < j"),
            ("dim 3\nsc 0 1 -> 2:1\nsc 0 1 -> 2:1\n", "duplicate"),
            ("dim 3\nsc 0 1 -> 5:1\n", "out of range"),
            ("dim 3\nsc 0 1 -> 2:x\n", "invalid scalar"),
            ("dim 3\nfoo\n", "unknown keyword"),
            ("label 0 x\n", "before `dim`"),
            ("", "missing"),
        ];
        for (src, needle) in cases {
            let e = read_algebra(src).unwrap_err().to_string();
            assert!(e.contains(needle), "{src:?}: {e}");
        }
    }

    #[test]
    fn reports_line_numbers() {
        let e = read_algebra("dim 2\n\n# c\nsc 1 0 -> 0:1\n").unwrap_err();
        assert!(matches!(e, Error::Format { line: 4, .. }));
    }
}
