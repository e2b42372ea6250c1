//! Basis words of free anticommutative algebras.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A binary tree over generator indices.
///
/// A word is canonical when at every internal node the left child
/// precedes the right one. Words are ordered by descending degree, then
/// left children, then right children, so canonical words of degree three
/// have the left-normed shape `((xi xj) xk)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Word {
    Gen(usize),
    Mul(Box<Word>, Box<Word>, usize),
}

impl Word {
    pub fn gen(i: usize) -> Word {
        Word::Gen(i)
    }

    /// Raw product with no reordering.
    pub fn node(a: Word, b: Word) -> Word {
        let d = a.degree() + b.degree();
        Word::Mul(Box::new(a), Box::new(b), d)
    }

    pub fn degree(&self) -> usize {
        match self {
            Word::Gen(_) => 1,
            Word::Mul(_, _, d) => *d,
        }
    }

    pub fn children(&self) -> Option<(&Word, &Word)> {
        match self {
            Word::Gen(_) => None,
            Word::Mul(a, b, _) => Some((a, b)),
        }
    }

    /// Product of two canonical words: `None` for equal factors, else the
    /// canonical word and the sign picked up by reordering.
    pub fn mul(a: &Word, b: &Word) -> Option<(Word, i8)> {
        match a.cmp(b) {
            Ordering::Equal => None,
            Ordering::Less => Some((Word::node(a.clone(), b.clone()), 1)),
            Ordering::Greater => Some((Word::node(b.clone(), a.clone()), -1)),
        }
    }

    /// Canonical form of an arbitrary tree with its sign, or `None` when
    /// the tree is zero in every anticommutative algebra.
    pub fn canonicalize(&self) -> Option<(Word, i8)> {
        match self {
            Word::Gen(_) => Some((self.clone(), 1)),
            Word::Mul(a, b, _) => {
                let (ca, sa) = a.canonicalize()?;
                let (cb, sb) = b.canonicalize()?;
                let (w, s) = Word::mul(&ca, &cb)?;
                Some((w, s * sa * sb))
            }
        }
    }

    pub fn is_canonical(&self) -> bool {
        match self {
            Word::Gen(_) => true,
            Word::Mul(a, b, _) => a < b && a.is_canonical() && b.is_canonical(),
        }
    }

    /// The tree with the two children of the root swapped.
    pub fn mirror(&self) -> Word {
        match self {
            Word::Gen(_) => self.clone(),
            Word::Mul(a, b, _) => Word::node((**b).clone(), (**a).clone()),
        }
    }

    /// Generator indices from left to right.
    pub fn letters(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<usize>) {
        match self {
            Word::Gen(i) => out.push(*i),
            Word::Mul(a, b, _) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    pub fn is_multilinear(&self) -> bool {
        let mut l = self.letters();
        l.sort_unstable();
        l.windows(2).all(|w| w[0] != w[1])
    }

    /// Left-normed product `[...[[a1, a2], a3], ...]`.
    pub fn left_normed(parts: &[Word]) -> Option<Word> {
        let (first, rest) = parts.split_first()?;
        Some(rest.iter().fold(first.clone(), |acc, w| Word::node(acc, w.clone())))
    }

    /// Generator letters of a left-normed chain ending in generators.
    fn left_normed_letters(&self) -> Option<Vec<usize>> {
        match self {
            Word::Gen(i) => Some(vec![*i]),
            Word::Mul(a, b, _) => match **b {
                Word::Gen(j) => {
                    let mut l = a.left_normed_letters()?;
                    l.push(j);
                    Some(l)
                }
                _ => None,
            },
        }
    }

    /// `x1`, `[x1,x2]`, `[x1,x2,x3]`, `[[x1,x2],[x3,x4]]`.
    pub fn label(&self) -> String {
        self.to_string()
    }

    /// Parses label syntax. Brackets are left-normed, so `[a,b,c]` is
    /// `((ab)c)`; the result is not canonicalized.
    pub fn parse(src: &str) -> Result<Word> {
        let s: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        let w = parse_word(&s, &mut pos).ok_or_else(|| Error::InvalidWord(src.to_string()))?;
        if pos != s.len() {
            return Err(Error::InvalidWord(src.to_string()));
        }
        Ok(w)
    }
}

fn parse_word(s: &[char], pos: &mut usize) -> Option<Word> {
    match s.get(*pos)? {
        'x' => {
            *pos += 1;
            let start = *pos;
            while s.get(*pos).is_some_and(char::is_ascii_digit) {
                *pos += 1;
            }
            let n: usize = s[start..*pos].iter().collect::<String>().parse().ok()?;
            n.checked_sub(1).map(Word::Gen)
        }
        '[' => {
            *pos += 1;
            let mut parts = vec![parse_word(s, pos)?];
            while s.get(*pos) == Some(&',') {
                *pos += 1;
                parts.push(parse_word(s, pos)?);
            }
            if s.get(*pos) != Some(&']') || parts.len() < 2 {
                return None;
            }
            *pos += 1;
            Word::left_normed(&parts)
        }
        _ => None,
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        other.degree().cmp(&self.degree()).then_with(|| match (self, other) {
            (Word::Gen(i), Word::Gen(j)) => i.cmp(j),
            (Word::Mul(a, b, _), Word::Mul(c, d, _)) => a.cmp(c).then_with(|| b.cmp(d)),
            _ => unreachable!("equal degrees"),
        })
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.left_normed_letters() {
            if l.len() == 1 {
                return write!(f, "x{}", l[0] + 1);
            }
            let parts: Vec<String> = l.iter().map(|i| format!("x{}", i + 1)).collect();
            return write!(f, "[{}]", parts.join(","));
        }
        let (a, b) = self.children().expect("internal node");
        write!(f, "[{a},{b}]")
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(i: usize) -> Word {
        Word::gen(i - 1)
    }

    #[test]
    fn labels() {
        let w = Word::left_normed(&[x(1), x(2), x(3)]).unwrap();
        assert_eq!(w.label(), "[x1,x2,x3]");
        assert!(w.is_canonical());
        let p = Word::node(Word::node(x(1), x(2)), Word::node(x(3), x(4)));
        assert_eq!(p.label(), "[[x1,x2],[x3,x4]]");
        assert_eq!(Word::parse("[[x1,x2],[x3,x4]]").unwrap(), p);
        assert_eq!(Word::parse(" [x1, x2, x3] ").unwrap(), w);
        for bad in ["", "x0", "[x1]", "[x1,x2", "y1", "[x1,x2]x3"] {
            assert!(Word::parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_signs() {
        // [x3,x1,x2] = ((x3 x1) x2) = -((x1 x3) x2)
        let (w, s) = Word::parse("[x3,x1,x2]").unwrap().canonicalize().unwrap();
        assert_eq!((w.label(), s), ("[x1,x3,x2]".to_string(), -1));
        // x4 (x1 x2) = -((x1 x2) x4)
        let (w, s) = Word::node(x(4), Word::node(x(2), x(1))).canonicalize().unwrap();
        assert_eq!((w.label(), s), ("[x1,x2,x4]".to_string(), 1));
        assert!(Word::parse("[x1,x1]").unwrap().canonicalize().is_none());
        let sq = Word::node(Word::node(x(1), x(2)), Word::node(x(2), x(1)));
        assert!(sq.canonicalize().is_none());
    }

    #[test]
    fn order_is_degree_descending() {
        let a = Word::node(x(1), x(2));
        assert!(a < x(1));
        assert!(x(1) < x(2));
        assert!(Word::node(x(1), x(3)) > a);
        assert!(!a.is_multilinear() || a.letters() == vec![0, 1]);
        assert!(!Word::parse("[x1,x2,x1]").unwrap().is_multilinear());
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        let leaf = (0usize..3).prop_map(Word::gen);
        leaf.prop_recursive(4, 16, 2, |inner| (inner.clone(), inner).prop_map(|(a, b)| Word::node(a, b)))
    }

    proptest! {
        #[test]
        fn mirror_flips_sign(w in arb_word()) {
            prop_assume!(w.degree() > 1);
            match (w.canonicalize(), w.mirror().canonicalize()) {
                (None, None) => {}
                (Some((a, s)), Some((b, t))) => {
                    prop_assert_eq!(a, b);
                    prop_assert_eq!(s, -t);
                }
                _ => prop_assert!(false, "zero on one side only"),
            }
        }

        #[test]
        fn canonical_is_fixed_point(w in arb_word()) {
            if let Some((c, _)) = w.canonicalize() {
                prop_assert!(c.is_canonical());
                prop_assert_eq!(c.canonicalize(), Some((c.clone(), 1)));
                prop_assert_eq!(Word::parse(&c.label()).unwrap(), c);
            }
        }
    }
}
