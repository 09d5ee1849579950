//! Tiny parser for linear combinations and brackets of basis labels.
//!
//! ```text
//! expr  := ['+'|'-'] term (('+'|'-') term)*
//! term  := [coef ['*']] atom
//! atom  := label | '(' expr ')' | '[' expr ',' expr ']'
//! coef  := int ['/' int]
//! ```
//! Labels are matched longest first, so names containing `-`, `(` or `,`
//! such as `v(1,-1,1)` or `R(1,-3)` need no quoting.

use super::{Element, SuperAlgebra};
use crate::error::{Error, Result};

struct P<'a> {
    alg: &'a SuperAlgebra,
    s: &'a str,
    pos: usize,
    labels: Vec<&'a str>,
}

pub(super) fn parse(alg: &SuperAlgebra, s: &str) -> Result<Element> {
    if s.trim() == "0" {
        return Ok(alg.zero());
    }
    let mut labels: Vec<&str> = alg.label_names().collect();
    labels.sort_by_key(|l| std::cmp::Reverse(l.len()));
    let mut p = P { alg, s, pos: 0, labels };
    let x = p.expr()?;
    p.ws();
    if p.pos != s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(x)
}

impl<'a> P<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at offset {} in {:?}", self.pos, self.s))
    }

    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.alg.zero();
        let mut first = true;
        loop {
            let neg = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else if first {
                false
            } else {
                return Ok(acc);
            };
            first = false;
            let t = self.term()?;
            acc = if neg { acc.sub(&t)? } else { acc.add(&t)? };
        }
    }

    fn number(&mut self) -> Option<&'a str> {
        self.ws();
        let r = self.rest();
        let n = r.bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return None;
        }
        // A digit run that is the prefix of a label is not a coefficient.
        if self.labels.iter().any(|l| r.starts_with(l) && l.len() > n) {
            return None;
        }
        self.pos += n;
        Some(&r[..n])
    }

    fn term(&mut self) -> Result<Element> {
        let f = self.alg.field();
        let coef = match self.number() {
            Some(n) => {
                let mut c = f.parse(n)?;
                let save = self.pos;
                if self.eat('/') {
                    match self.number() {
                        Some(d) => c = c.try_div(&f.parse(d)?)?,
                        None => self.pos = save,
                    }
                }
                self.eat('*');
                Some(c)
            }
            None => None,
        };
        let x = self.atom()?;
        Ok(match coef {
            Some(c) => x.scale(&c),
            None => x,
        })
    }

    fn atom(&mut self) -> Result<Element> {
        self.ws();
        let r = self.rest();
        if let Some(l) = self.labels.iter().find(|l| r.starts_with(**l)) {
            self.pos += l.len();
            return self.alg.label(l);
        }
        if self.eat('(') {
            let x = self.expr()?;
            if !self.eat(')') {
                return Err(self.err("expected ')'"));
            }
            return Ok(x);
        }
        if self.eat('[') {
            let x = self.expr()?;
            if !self.eat(',') {
                return Err(self.err("expected ','"));
            }
            let y = self.expr()?;
            if !self.eat(']') {
                return Err(self.err("expected ']'"));
            }
            return self.alg.bracket(&x, &y);
        }
        Err(self.err("expected a label"))
    }
}
