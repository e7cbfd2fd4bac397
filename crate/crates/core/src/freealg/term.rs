//! User-level terms: binary trees over generators with `a*b`, `[a,b]` and parentheses.

use std::fmt::Write as _;

use super::word::Word;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(usize),
    Dot(Box<Term>, Box<Term>),
    Bracket(Box<Term>, Box<Term>),
}

impl Term {
    pub fn dot(a: Term, b: Term) -> Term {
        Term::Dot(Box::new(a), Box::new(b))
    }

    pub fn bracket(a: Term, b: Term) -> Term {
        Term::Bracket(Box::new(a), Box::new(b))
    }

    pub fn degree(&self) -> usize {
        match self {
            Term::Gen(_) => 1,
            Term::Dot(a, b) | Term::Bracket(a, b) => a.degree() + b.degree(),
        }
    }

    /// The word with dot products flattened.
    pub fn to_word(&self) -> Word {
        match self {
            Term::Gen(i) => Word::Gen(*i as u32),
            Term::Dot(a, b) => Word::dot(a.to_word(), b.to_word()),
            Term::Bracket(a, b) => Word::bracket(a.to_word(), b.to_word()),
        }
    }

    pub fn parse(s: &str, gens: &[String]) -> Result<Term> {
        let mut p = Parser { src: s.as_bytes(), pos: 0, gens };
        let t = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(t)
    }

    pub fn format(&self, gens: &[String]) -> String {
        let mut s = String::new();
        self.write(gens, &mut s, false);
        s
    }

    fn write(&self, gens: &[String], out: &mut String, in_dot_right: bool) {
        match self {
            Term::Gen(i) => out.push_str(&gens[*i]),
            Term::Dot(a, b) => {
                if in_dot_right {
                    out.push('(');
                }
                a.write(gens, out, false);
                out.push('*');
                b.write(gens, out, true);
                if in_dot_right {
                    out.push(')');
                }
            }
            Term::Bracket(a, b) => {
                out.push('[');
                a.write(gens, out, false);
                out.push(',');
                b.write(gens, out, false);
                out.push(']');
            }
        }
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    gens: &'a [String],
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let mut s = String::new();
        let _ = write!(s, "{msg} at column {}", self.pos + 1);
        Error::Parse(s)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Term> {
        let mut t = self.atom()?;
        while self.eat(b'*') {
            let r = self.atom()?;
            t = Term::dot(t, r);
        }
        Ok(t)
    }

    fn atom(&mut self) -> Result<Term> {
        self.skip_ws();
        if self.eat(b'(') {
            let t = self.expr()?;
            if !self.eat(b')') {
                return Err(self.err("expected `)`"));
            }
            return Ok(t);
        }
        if self.eat(b'[') {
            let a = self.expr()?;
            if !self.eat(b',') {
                return Err(self.err("expected `,`"));
            }
            let b = self.expr()?;
            if !self.eat(b']') {
                return Err(self.err("expected `]`"));
            }
            return Ok(Term::bracket(a, b));
        }
        let start = self.pos;
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a generator, `(` or `[`"));
        }
        let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        self.gens
            .iter()
            .position(|g| g == name)
            .map(Term::Gen)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gens() -> Vec<String> {
        vec!["x".into(), "y".into(), "z".into()]
    }

    #[test]
    fn parse_and_print() {
        let t = Term::parse("[x*y, z] * (x*y)", &gens()).unwrap();
        assert_eq!(t.degree(), 5);
        assert_eq!(t.format(&gens()), "[x*y,z]*(x*y)");
        assert_eq!(Term::parse(&t.format(&gens()), &gens()).unwrap(), t);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Term::parse("[x,", &gens()), Err(Error::Parse(_))));
        assert!(matches!(Term::parse("w", &gens()), Err(Error::UnknownGenerator(_))));
        assert!(matches!(Term::parse("x y", &gens()), Err(Error::Parse(_))));
    }
}
