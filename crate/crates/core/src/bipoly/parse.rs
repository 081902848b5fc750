//! Text grammar: variables x0,x1,y0,y1,y2; + - * ^; rational literals p/q;
//! parentheses; whitespace ignored. Juxtaposition also multiplies.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::{BiMonomial, BiPoly, Var};
use crate::error::Error;
use crate::scalars::{Field, Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Var(Var),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(s: &str) -> Result<Vec<Tok>, Error> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        match c {
            _ if c.is_whitespace() => i += 1,
            '0'..='9' => {
                let start = i;
                while i < cs.len() && cs[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = cs[start..i].iter().collect();
                out.push(Tok::Num(text.parse().unwrap()));
            }
            'x' | 'y' => {
                let idx = cs.get(i + 1).and_then(|d| d.to_digit(10));
                let v = match (c, idx) {
                    ('x', Some(0)) => Var::X0,
                    ('x', Some(1)) => Var::X1,
                    ('y', Some(0)) => Var::Y0,
                    ('y', Some(1)) => Var::Y1,
                    ('y', Some(2)) => Var::Y2,
                    _ => return Err(Error::Parse(format!("unknown variable at position {i}"))),
                };
                out.push(Tok::Var(v));
                i += 2;
            }
            '+' => {
                out.push(Tok::Plus);
                i += 1;
            }
            '-' | '\u{2212}' => {
                out.push(Tok::Minus);
                i += 1;
            }
            '*' => {
                out.push(Tok::Star);
                i += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                i += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1;
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} at position {i}"))),
        }
    }
    Ok(out)
}

/// Not-necessarily-homogeneous polynomial used during parsing.
type Raw = BTreeMap<BiMonomial, Rational>;

fn raw_const(q: Rational) -> Raw {
    let mut r = Raw::new();
    if !Field::is_zero(&q) {
        r.insert(BiMonomial::one(), q);
    }
    r
}

fn raw_add(a: &Raw, b: &Raw, sign: i64) -> Raw {
    let mut r = a.clone();
    for (m, c) in b {
        let e = r.entry(*m).or_insert_with(|| <Rational as Field>::zero());
        *e += c * Rational::from_integer(sign.into());
        if Field::is_zero(e) {
            r.remove(m);
        }
    }
    r
}

fn raw_mul(a: &Raw, b: &Raw) -> Raw {
    let mut r = Raw::new();
    for (m1, c1) in a {
        for (m2, c2) in b {
            let m = m1.mul(m2);
            let e = r.entry(m).or_insert_with(|| <Rational as Field>::zero());
            *e += c1 * c2;
            if Field::is_zero(e) {
                r.remove(&m);
            }
        }
    }
    r
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<Raw, Error> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = raw_add(&acc, &t, 1);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = raw_add(&acc, &t, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Raw, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    let u = self.unary()?;
                    acc = raw_mul(&acc, &u);
                }
                Some(Tok::Num(_)) | Some(Tok::Var(_)) | Some(Tok::LParen) => {
                    let u = self.power()?;
                    acc = raw_mul(&acc, &u);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Raw, Error> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                let u = self.unary()?;
                Ok(raw_add(&Raw::new(), &u, -1))
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Raw, Error> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            let e = match self.next() {
                Some(Tok::Num(n)) => u32::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?,
                _ => return Err(Error::Parse("expected integer exponent after '^'".into())),
            };
            if e > 64 {
                return Err(Error::Parse("exponent too large".into()));
            }
            let mut r = raw_const(<Rational as Field>::one());
            for _ in 0..e {
                r = raw_mul(&r, &base);
            }
            return Ok(r);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Raw, Error> {
        match self.next() {
            Some(Tok::Num(n)) => {
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.next() {
                        Some(Tok::Num(d)) if d != BigInt::from(0) => Ok(raw_const(Rational::new(n, d))),
                        Some(Tok::Num(_)) => Err(Error::Parse("zero denominator".into())),
                        _ => Err(Error::Parse("expected integer denominator after '/'".into())),
                    }
                } else {
                    Ok(raw_const(Rational::from_integer(n)))
                }
            }
            Some(Tok::Var(v)) => {
                let mut r = Raw::new();
                r.insert(BiMonomial::var(v), <Rational as Field>::one());
                Ok(r)
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(Error::Parse("unbalanced parentheses".into())),
                }
            }
            Some(t) => Err(Error::Parse(format!("unexpected token {t:?}"))),
            None => Err(Error::Parse("unexpected end of input".into())),
        }
    }
}

/// Parse a bihomogeneous polynomial of any bidegree. The zero polynomial gets
/// bidegree (2,2).
pub fn parse_bidegree(text: &str) -> Result<BiPoly, Error> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let raw = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    let Some(bd) = raw.keys().next().map(|m| m.bidegree()) else {
        return Ok(BiPoly::zero((2, 2)));
    };
    if raw.keys().any(|m| m.bidegree() != bd) {
        return Err(Error::Parse("polynomial is not bihomogeneous".into()));
    }
    BiPoly::from_terms(bd, raw.into_iter().map(|(m, c)| (m, Scalar::Rat(c))))
}

/// Parse a polynomial that must have bidegree (2,2).
pub fn parse(text: &str) -> Result<BiPoly, Error> {
    let p = parse_bidegree(text)?;
    if p.bidegree() != (2, 2) {
        return Err(Error::Parse(format!("expected bidegree (2,2), found {:?}", p.bidegree())));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_parse_and_print() {
        let f = parse("x0*x1*(y0*y2 + y1^2)").unwrap();
        assert_eq!(f.len(), 2);
        assert_eq!(f.to_text(), "x0*x1*y0*y2 + x0*x1*y1^2");
        let g = parse("-1/2 x0^2 y0^2 + 3*x1^2*y2^2").unwrap();
        assert_eq!(g.to_text(), "-1/2*x0^2*y0^2 + 3*x1^2*y2^2");
        assert_eq!(parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(parse("x0^2*y0").is_err());
        assert!(parse("x0^2*y0^2 + x0*y0^2").is_err());
        assert!(parse("x0*(y0").is_err());
        assert!(parse("z^2").is_err());
        assert!(parse("x0*x1*y0^2 / x0").is_err());
        assert!(parse_bidegree("x0*y1").unwrap().bidegree() == (1, 1));
    }
}
