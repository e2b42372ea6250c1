//! Reference algebras used as a test corpus.

use crate::algebra::Algebra;
use crate::scalar::Scalar;
use crate::sparse::SparseVec;

use super::example::atilde;
use super::free::free_anticommutative;

#[derive(Clone, Debug)]
pub struct ZooEntry {
    pub name: String,
    pub description: &'static str,
    pub algebra: Algebra,
}

/// `(n, c)` pairs of the free truncations included in [`zoo`].
pub const FREE_TRUNCATIONS: &[(usize, usize)] = &[(2, 3), (3, 3), (2, 4), (2, 5), (3, 4)];

pub fn names() -> Vec<String> {
    let mut out: Vec<String> = (1..=5).map(|d| format!("abelian-{d}")).collect();
    out.extend(["so3", "heisenberg", "malcev7", "atilde", "a22"].map(String::from));
    out.extend(FREE_TRUNCATIONS.iter().map(|(n, c)| format!("free-{n}-{c}")));
    out
}

pub fn zoo() -> Vec<ZooEntry> {
    names().into_iter().map(|n| get(&n).expect("listed name")).collect()
}

pub fn get(name: &str) -> Option<ZooEntry> {
    let entry = |description, algebra| {
        Some(ZooEntry {
            name: name.to_string(),
            description,
            algebra,
        })
    };
    if let Some(d) = name.strip_prefix("abelian-") {
        let d: usize = d.parse().ok().filter(|d| (1..=5).contains(d))?;
        return entry("abelian", abelian(d));
    }
    if let Some(rest) = name.strip_prefix("free-") {
        let (n, c) = rest.split_once('-')?;
        let key = (n.parse().ok()?, c.parse().ok()?);
        if !FREE_TRUNCATIONS.contains(&key) {
            return None;
        }
        let f = free_anticommutative(key.0, key.1).expect("small parameters");
        return entry("free anticommutative truncation", f.algebra);
    }
    match name {
        "so3" => entry("3-dimensional simple Lie algebra (cross product)", so3()),
        "heisenberg" => entry("3-dimensional Heisenberg Lie algebra", heisenberg()),
        "malcev7" => entry("7-dimensional simple Malcev algebra from the octonions", malcev7()),
        "atilde" => entry("23-dimensional central extension of the multilinear quotient", atilde().algebra),
        "a22" => entry("22-dimensional multilinear quotient of the free algebra on 4 generators", atilde().base.algebra),
        _ => None,
    }
}

fn labels(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

pub fn abelian(dim: usize) -> Algebra {
    Algebra::abelian(labels("e", dim))
}

pub fn so3() -> Algebra {
    let mut b = Algebra::builder(labels("e", 3));
    b.set(0, 1, SparseVec::unit(2)).expect("fresh");
    b.set(1, 2, SparseVec::unit(0)).expect("fresh");
    b.set(0, 2, SparseVec::single(1, Scalar::from_int(-1))).expect("fresh");
    b.build()
}

pub fn heisenberg() -> Algebra {
    let mut b = Algebra::builder(vec!["x".into(), "y".into(), "z".into()]);
    b.set(0, 1, SparseVec::unit(2)).expect("fresh");
    b.build()
}

/// Quaternion-like triples `e_i e_j = e_k` on the imaginary octonion units.
const FANO: [[usize; 3]; 7] = [[1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 7], [5, 6, 1], [6, 7, 2], [7, 1, 3]];

/// Product of octonion units `e_i e_j` as `(sign, k)`, with `e_0 = 1`.
fn octonion_unit_product(i: usize, j: usize) -> (i64, usize) {
    if i == 0 {
        return (1, j);
    }
    if j == 0 {
        return (1, i);
    }
    if i == j {
        return (-1, 0);
    }
    for t in FANO {
        for r in 0..3 {
            let (a, b, c) = (t[r], t[(r + 1) % 3], t[(r + 2) % 3]);
            if (a, b) == (i, j) {
                return (1, c);
            }
            if (b, a) == (i, j) {
                return (-1, c);
            }
        }
    }
    unreachable!("every pair of distinct units lies on one line")
}

fn octonion_mul(x: &[i64; 8], y: &[i64; 8]) -> [i64; 8] {
    let mut out = [0; 8];
    for (i, &a) in x.iter().enumerate() {
        for (j, &b) in y.iter().enumerate() {
            if a != 0 && b != 0 {
                let (s, k) = octonion_unit_product(i, j);
                out[k] += s * a * b;
            }
        }
    }
    out
}

/// Checks the linearized left and right alternative laws on all unit
/// triples, which proves the table defines an alternative algebra.
pub fn octonion_table_is_alternative() -> bool {
    let unit = |i: usize| {
        let mut e = [0; 8];
        e[i] = 1;
        e
    };
    let assoc = |a: usize, b: usize, c: usize| {
        let (a, b, c) = (unit(a), unit(b), unit(c));
        let l = octonion_mul(&octonion_mul(&a, &b), &c);
        let r = octonion_mul(&a, &octonion_mul(&b, &c));
        let mut d = [0; 8];
        for k in 0..8 {
            d[k] = l[k] - r[k];
        }
        d
    };
    (0..8).all(|a| {
        (0..8).all(|b| {
            (0..8).all(|c| {
                let abc = assoc(a, b, c);
                let bac = assoc(b, a, c);
                let acb = assoc(a, c, b);
                (0..8).all(|k| abc[k] + bac[k] == 0 && abc[k] + acb[k] == 0)
            })
        })
    })
}

/// Imaginary octonions under `[x, y] = (xy - yx) / 2`.
pub fn malcev7() -> Algebra {
    assert!(octonion_table_is_alternative(), "octonion table is not alternative");
    let mut b = Algebra::builder(labels("e", 7));
    for i in 1..=7 {
        for j in i + 1..=7 {
            let (s, k) = octonion_unit_product(i, j);
            let (t, l) = octonion_unit_product(j, i);
            debug_assert_eq!((s, k), (-t, l));
            b.set(i - 1, j - 1, SparseVec::single(k - 1, Scalar::from_int(s))).expect("fresh");
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zoo_listing() {
        let z = zoo();
        assert!(z.len() >= 7);
        let dims: Vec<(String, usize)> = z.iter().map(|e| (e.name.clone(), e.algebra.dim())).collect();
        assert!(dims.contains(&("malcev7".into(), 7)));
        assert!(dims.contains(&("atilde".into(), 23)));
        assert!(dims.contains(&("a22".into(), 22)));
        assert!(dims.contains(&("free-2-3".into(), 3)));
        assert!(get("abelian-6").is_none());
        assert!(get("free-9-9").is_none());
        assert!(get("nope").is_none());
    }

    #[test]
    fn octonions_are_alternative() {
        assert!(octonion_table_is_alternative());
        assert_eq!(octonion_unit_product(1, 2), (1, 4));
        assert_eq!(octonion_unit_product(2, 1), (-1, 4));
        assert_eq!(octonion_unit_product(4, 1), (1, 2));
    }
}
