//! Text format:
//!
//! ```text
//! ring p=3 vars a,b:2,c:2,d:2; order grevlex;
//! a^4 - b*c, a^2*(b - d) - c*d
//! ```
//!
//! Generators are separated by `,` or `;`. `lex(...)` lists variables from
//! largest to smallest, by name or 1-based index; plain `lex` keeps the
//! declaration order.

use super::field;
use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::ring::{MonomialOrder, Ring, RingContext};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
    peeked: Option<(Tok, usize, usize)>,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0, line: 1, col: 1, peeked: None }
    }

    fn bump(&mut self) -> u8 {
        let c = self.src[self.pos];
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() {
            let c = self.src[self.pos];
            if c == b'#' {
                while self.pos < self.src.len() && self.src[self.pos] != b'\n' {
                    self.bump();
                }
            } else if c.is_ascii_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn lex(&mut self) -> Result<(Tok, usize, usize)> {
        self.skip_ws();
        let (line, col) = (self.line, self.col);
        if self.pos >= self.src.len() {
            return Ok((Tok::End, line, col));
        }
        let c = self.src[self.pos];
        let tok = if c.is_ascii_alphabetic() {
            let start = self.pos;
            while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                self.bump();
            }
            Tok::Ident(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
        } else if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.bump();
            }
            Tok::Int(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
        } else if b"=:,;()+-*^".contains(&c) {
            self.bump();
            Tok::Sym(c as char)
        } else {
            return Err(Error::Parse { line, col, msg: format!("unexpected character `{}`", c as char) });
        };
        Ok((tok, line, col))
    }

    fn peek(&mut self) -> Result<&(Tok, usize, usize)> {
        if self.peeked.is_none() {
            let t = self.lex()?;
            self.peeked = Some(t);
        }
        Ok(self.peeked.as_ref().unwrap())
    }

    fn next(&mut self) -> Result<(Tok, usize, usize)> {
        match self.peeked.take() {
            Some(t) => Ok(t),
            None => self.lex(),
        }
    }

    fn err<T>(&mut self, msg: impl Into<String>) -> Result<T> {
        let (_, line, col) = self.peek()?.clone();
        Err(Error::Parse { line, col, msg: msg.into() })
    }

    fn expect_sym(&mut self, s: char) -> Result<()> {
        match self.next()? {
            (Tok::Sym(c), _, _) if c == s => Ok(()),
            (t, line, col) => Err(Error::Parse { line, col, msg: format!("expected `{s}`, found {t:?}") }),
        }
    }

    fn expect_ident(&mut self, word: Option<&str>) -> Result<String> {
        match self.next()? {
            (Tok::Ident(s), line, col) => match word {
                Some(w) if w != s => Err(Error::Parse { line, col, msg: format!("expected `{w}`") }),
                _ => Ok(s),
            },
            (t, line, col) => Err(Error::Parse { line, col, msg: format!("expected identifier, found {t:?}") }),
        }
    }

    fn expect_int(&mut self) -> Result<u64> {
        match self.next()? {
            (Tok::Int(s), line, col) => {
                s.parse().map_err(|_| Error::Parse { line, col, msg: "integer too large".into() })
            }
            (t, line, col) => Err(Error::Parse { line, col, msg: format!("expected integer, found {t:?}") }),
        }
    }

    fn at_sym(&mut self, s: char) -> Result<bool> {
        Ok(matches!(self.peek()?.0, Tok::Sym(c) if c == s))
    }
}

fn parse_header(lx: &mut Lexer) -> Result<Ring> {
    lx.expect_ident(Some("ring"))?;
    lx.expect_ident(Some("p"))?;
    lx.expect_sym('=')?;
    let p = lx.expect_int()?;
    lx.expect_ident(Some("vars"))?;
    let mut vars = Vec::new();
    let mut weights = Vec::new();
    loop {
        vars.push(lx.expect_ident(None)?);
        if lx.at_sym(':')? {
            lx.next()?;
            let w = lx.expect_int()?;
            weights.push(u32::try_from(w).map_err(|_| Error::InvalidRing("weight too large".into()))?);
        } else {
            weights.push(1);
        }
        if lx.at_sym(',')? {
            lx.next()?;
        } else {
            break;
        }
    }
    lx.expect_sym(';')?;
    lx.expect_ident(Some("order"))?;
    let kind = lx.expect_ident(None)?;
    let n = vars.len();
    let order = match kind.as_str() {
        "grevlex" | "lex" if !lx.at_sym('(')? => {
            if kind == "lex" {
                MonomialOrder::lex(n)
            } else {
                MonomialOrder::grevlex(n)
            }
        }
        "grevlex" | "lex" => {
            lx.next()?;
            let mut perm = Vec::new();
            loop {
                let idx = match lx.next()? {
                    (Tok::Ident(s), line, col) => vars
                        .iter()
                        .position(|v| *v == s)
                        .ok_or(Error::Parse { line, col, msg: format!("unknown variable `{s}` in order") })?,
                    (Tok::Int(s), line, col) => {
                        let k: usize = s.parse().unwrap_or(0);
                        if k == 0 || k > n {
                            return Err(Error::Parse { line, col, msg: format!("variable index {s} out of range") });
                        }
                        k - 1
                    }
                    (t, line, col) => return Err(Error::Parse { line, col, msg: format!("unexpected {t:?} in order") }),
                };
                perm.push(idx);
                if lx.at_sym(',')? {
                    lx.next()?;
                } else {
                    break;
                }
            }
            lx.expect_sym(')')?;
            if kind == "lex" {
                MonomialOrder::Lex(perm)
            } else {
                MonomialOrder::GRevLex(perm)
            }
        }
        _ => return lx.err(format!("unknown order `{kind}`")),
    };
    lx.expect_sym(';')?;
    RingContext::new(p, vars, weights, order)
}

struct ExprParser<'r> {
    ring: &'r Ring,
}

impl ExprParser<'_> {
    fn int(&self, s: &str) -> Polynomial {
        let p = self.ring.p() as u64;
        let v = s.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p);
        Polynomial::constant(self.ring, v as i64)
    }

    fn expr(&self, lx: &mut Lexer) -> Result<Polynomial> {
        let mut acc = self.term(lx)?;
        loop {
            if lx.at_sym('+')? {
                lx.next()?;
                acc = &acc + &self.term(lx)?;
            } else if lx.at_sym('-')? {
                lx.next()?;
                acc = &acc - &self.term(lx)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&self, lx: &mut Lexer) -> Result<Polynomial> {
        let mut acc = self.unary(lx)?;
        while lx.at_sym('*')? {
            lx.next()?;
            acc = &acc * &self.unary(lx)?;
        }
        Ok(acc)
    }

    fn unary(&self, lx: &mut Lexer) -> Result<Polynomial> {
        if lx.at_sym('-')? {
            lx.next()?;
            return Ok(-&self.unary(lx)?);
        }
        if lx.at_sym('+')? {
            lx.next()?;
            return self.unary(lx);
        }
        self.power(lx)
    }

    fn power(&self, lx: &mut Lexer) -> Result<Polynomial> {
        let base = self.atom(lx)?;
        if lx.at_sym('^')? {
            lx.next()?;
            let e = lx.expect_int()?;
            let e = u32::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            if base.len() == 1 {
                let (m, c) = base.terms()[0].clone();
                let m = m.checked_pow(e).ok_or(Error::ExponentOverflow)?;
                return Ok(Polynomial::monomial(self.ring, m, field::pow(c, e as u64, self.ring.p())));
            }
            if base.max_exponent() as u64 * e as u64 > u16::MAX as u64 {
                return Err(Error::ExponentOverflow);
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&self, lx: &mut Lexer) -> Result<Polynomial> {
        match lx.next()? {
            (Tok::Int(s), _, _) => Ok(self.int(&s)),
            (Tok::Ident(s), line, col) => match self.ring.var_index(&s) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err(Error::Parse { line, col, msg: format!("unknown variable `{s}`") }),
            },
            (Tok::Sym('('), _, _) => {
                let e = self.expr(lx)?;
                lx.expect_sym(')')?;
                Ok(e)
            }
            (t, line, col) => Err(Error::Parse { line, col, msg: format!("unexpected {t:?}") }),
        }
    }
}

/// Parse a single polynomial over `ring`.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<Polynomial> {
    let mut lx = Lexer::new(src);
    let f = ExprParser { ring }.expr(&mut lx)?;
    match lx.peek()?.0 {
        Tok::End => Ok(f),
        _ => lx.err("trailing input"),
    }
}

/// Parse a ring header alone.
pub fn parse_ring(src: &str) -> Result<Ring> {
    let mut lx = Lexer::new(src);
    let r = parse_header(&mut lx)?;
    match lx.peek()?.0 {
        Tok::End => Ok(r),
        _ => lx.err("trailing input after ring header"),
    }
}

/// Parse a header followed by a list of generators.
pub fn parse_ideal(src: &str) -> Result<(Ring, Vec<Polynomial>)> {
    let mut lx = Lexer::new(src);
    let ring = parse_header(&mut lx)?;
    let ep = ExprParser { ring: &ring };
    let mut gens = Vec::new();
    loop {
        while lx.at_sym(',')? || lx.at_sym(';')? {
            lx.next()?;
        }
        if lx.peek()?.0 == Tok::End {
            break;
        }
        gens.push(ep.expr(&mut lx)?);
        match lx.peek()?.0 {
            Tok::End | Tok::Sym(',') | Tok::Sym(';') => {}
            _ => return lx.err("expected `,` between generators"),
        }
    }
    Ok((ring, gens))
}

/// Monomial from exponent list, convenience for tests and tables.
pub fn monomial(exps: &[u16]) -> Monomial {
    Monomial::from_exps(exps)
}
