//! Recursive-descent parser for the identity DSL.
//!
//! ```text
//! identity := name ':' vars '|' sum '=' sum
//! map      := name ':' vars '|' sum
//! sum      := ['+'|'-'] monomial (('+'|'-') monomial)*
//! monomial := number | [number ['*']] product
//! product  := factor ['*' factor]
//! factor   := var | 'J(' sum ',' sum ',' sum ')' | '(' sum ')'
//! ```
//!
//! A product has at most two factors: `x*y*z` is rejected, write `(x*y)*z`.
//! A bare number is only allowed if it is `0`.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::term::Polynomial;

pub(crate) struct Header {
    pub name: String,
    pub variables: Vec<String>,
}

pub(crate) struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    variables: Vec<String>,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str) -> Self {
        Parser {
            src,
            chars: src.char_indices().collect(),
            pos: 0,
            variables: Vec::new(),
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| normalize(c))
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.error(format!("expected `{c}`, found `{found}`")),
                None => self.error(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            let ok = if self.pos == start {
                c.is_alphabetic() || c == '_'
            } else {
                c.is_alphanumeric() || c == '_' || c == '\''
            };
            if !ok {
                break;
            }
            self.pos += 1;
        }
        if self.pos == start {
            return self.error("expected identifier");
        }
        Ok(self.slice(start, self.pos).to_string())
    }

    fn slice(&self, from: usize, to: usize) -> &'a str {
        let a = self.chars.get(from).map_or(self.src.len(), |&(b, _)| b);
        let b = self.chars.get(to).map_or(self.src.len(), |&(b, _)| b);
        &self.src[a..b]
    }

    fn number(&mut self) -> Result<Option<Scalar>> {
        self.skip_ws();
        let start = self.pos;
        let digits = |p: &mut Self| {
            let s = p.pos;
            while p.chars.get(p.pos).is_some_and(|&(_, c)| c.is_ascii_digit()) {
                p.pos += 1;
            }
            p.pos > s
        };
        if !digits(self) {
            return Ok(None);
        }
        if self.chars.get(self.pos).is_some_and(|&(_, c)| c == '/') {
            self.pos += 1;
            if !digits(self) {
                return self.error("expected denominator after `/`");
            }
        }
        let text = self.slice(start, self.pos);
        match text.parse::<Scalar>() {
            Ok(x) => Ok(Some(x)),
            Err(_) => {
                self.pos = start;
                self.error(format!("invalid number `{text}`"))
            }
        }
    }

    pub fn header(&mut self) -> Result<Header> {
        let name = self.ident()?;
        self.expect(':')?;
        let mut variables = vec![self.ident()?];
        while self.eat(',') {
            variables.push(self.ident()?);
        }
        for (i, v) in variables.iter().enumerate() {
            if variables[..i].contains(v) {
                return self.error(format!("variable `{v}` declared twice"));
            }
            if v == "J" {
                return self.error("`J` is reserved for the Jacobian");
            }
        }
        self.expect('|')?;
        self.variables = variables.clone();
        Ok(Header { name, variables })
    }

    pub fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(format!("unexpected `{c}`")),
        }
    }

    pub fn sum(&mut self) -> Result<Polynomial> {
        let mut total = Polynomial::zero();
        let mut first = true;
        loop {
            let negative = if self.eat('-') {
                true
            } else if self.eat('+') || first {
                false
            } else {
                break;
            };
            first = false;
            let m = self.monomial()?;
            total = if negative { total.sub(&m) } else { total.add(&m) };
            match self.peek() {
                Some('+') | Some('-') => continue,
                _ => break,
            }
        }
        Ok(total)
    }

    fn monomial(&mut self) -> Result<Polynomial> {
        let at = self.pos;
        let coef = self.number()?;
        let starts_factor = |c: Option<char>| matches!(c, Some(c) if c == '(' || c.is_alphabetic() || c == '_');
        match coef {
            Some(c) => {
                let had_star = self.eat('*');
                if !had_star && !starts_factor(self.peek()) {
                    if c.is_zero() {
                        return Ok(Polynomial::zero());
                    }
                    self.pos = at;
                    return self.error("constant terms are not allowed");
                }
                Ok(self.product()?.scale(&c))
            }
            None => self.product(),
        }
    }

    fn product(&mut self) -> Result<Polynomial> {
        let left = self.factor()?;
        if !self.eat('*') {
            return Ok(left);
        }
        let right = self.factor()?;
        if self.peek() == Some('*') {
            return self.error("products are binary: parenthesize nested products");
        }
        Ok(left.mul(&right))
    }

    fn factor(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let s = self.sum()?;
                self.expect(')')?;
                Ok(s)
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let at = self.pos;
                let name = self.ident()?;
                if name == "J" && self.peek() == Some('(') {
                    self.pos += 1;
                    let x = self.sum()?;
                    self.expect(',')?;
                    let y = self.sum()?;
                    self.expect(',')?;
                    let z = self.sum()?;
                    self.expect(')')?;
                    return Ok(Polynomial::jacobian(&x, &y, &z));
                }
                match self.variables.iter().position(|v| *v == name) {
                    Some(i) => Ok(Polynomial::var(i)),
                    None => {
                        self.pos = at;
                        Err(Error::UnknownVariable(name))
                    }
                }
            }
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("unexpected end of input"),
        }
    }
}

fn normalize(c: char) -> char {
    match c {
        '−' | '–' => '-',
        '·' => '*',
        other => other,
    }
}

impl Parser<'_> {
    pub fn expect_equals(&mut self) -> Result<()> {
        self.expect('=')
    }
}
