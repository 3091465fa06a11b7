//! Text syntax for polynomials and Laurent polynomials.
//!
//! Precedence, tightest first: `^` (integer exponent, possibly negative), unary `-`,
//! `*` `/` and juxtaposition, binary `+` `-`. An integer literal followed by `/` and another
//! integer literal is a single rational literal.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{LaurentPoly, Poly, Ring, Scalar};

/// Syntax tree of an expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    /// `a/b` written with two integer literals.
    Rational(BigInt, BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    /// Written `*` or by juxtaposition.
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Group(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c.is_ascii_digit() {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            out.push((pos, Tok::Int(src[pos..end].parse().expect("digits"))));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let mut end = pos;
            while let Some(&(p, d)) = chars.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = p + d.len_utf8();
                chars.next();
            }
            out.push((pos, Tok::Ident(src[pos..end].to_string())));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(Error::Parse { offset: pos, message: format!("unexpected character `{c}`") }),
        };
        out.push((pos, tok));
        chars.next();
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    src: &'a str,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.src.len(), |(o, _)| *o)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse { offset: self.offset(), message: message.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.product()?;
        loop {
            if self.eat(&Tok::Plus) {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.product()?));
            } else if self.eat(&Tok::Minus) {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.product()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat(&Tok::Slash) {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Int(_) | Tok::Ident(_) | Tok::LParen)) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(&Tok::Minus) {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let mut base = self.primary()?;
        while self.eat(&Tok::Caret) {
            base = Expr::Pow(Box::new(base), self.exponent()?);
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i64> {
        let paren = self.eat(&Tok::LParen);
        let negative = self.eat(&Tok::Minus);
        let Some(Tok::Int(k)) = self.peek().cloned() else {
            return self.err("expected an integer exponent");
        };
        let Ok(k) = i64::try_from(&k) else {
            return self.err("exponent out of range");
        };
        self.pos += 1;
        if paren && !self.eat(&Tok::RParen) {
            return self.err("expected `)` after exponent");
        }
        Ok(if negative { -k } else { k })
    }

    fn primary(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(a)) => {
                self.pos += 1;
                if let (Some(Tok::Slash), Some((_, Tok::Int(b)))) = (self.peek(), self.toks.get(self.pos + 1)) {
                    let b = b.clone();
                    self.pos += 2;
                    return Ok(Expr::Rational(a, b));
                }
                Ok(Expr::Int(a))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                Ok(Expr::Var(name))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.sum()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                Ok(Expr::Group(Box::new(inner)))
            }
            Some(t) => self.err(format!("unexpected `{}`", tok_text(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn tok_text(t: &Tok) -> String {
    match t {
        Tok::Int(k) => k.to_string(),
        Tok::Ident(s) => s.clone(),
        Tok::Plus => "+".into(),
        Tok::Minus => "-".into(),
        Tok::Star => "*".into(),
        Tok::Slash => "/".into(),
        Tok::Caret => "^".into(),
        Tok::LParen => "(".into(),
        Tok::RParen => ")".into(),
    }
}

/// Parses one expression; trailing input is an error.
pub fn parse_expr(src: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(src)?, pos: 0, src };
    let e = p.sum()?;
    if p.pos < p.toks.len() {
        return p.err(format!("unexpected `{}`", tok_text(&p.toks[p.pos].1)));
    }
    Ok(e)
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(k) => write!(f, "{k}"),
            Expr::Rational(a, b) => write!(f, "{a}/{b}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Neg(e) => write!(f, "-{e}"),
            Expr::Add(a, b) => write!(f, "{a} + {b}"),
            Expr::Sub(a, b) => write!(f, "{a} - {b}"),
            Expr::Mul(a, b) => write!(f, "{a}*{b}"),
            Expr::Div(a, b) => write!(f, "{a}/{b}"),
            Expr::Pow(a, k) => write!(f, "{a}^{k}"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}

/// Where an expression is evaluated: a polynomial ring, optionally with one of its variables
/// allowed negative exponents.
#[derive(Clone, Debug)]
pub struct ParseContext {
    ring: Ring,
    laurent: Option<String>,
    coeff_ring: Option<Ring>,
}

impl ParseContext {
    pub fn new(ring: &Ring) -> Self {
        ParseContext { ring: ring.clone(), laurent: None, coeff_ring: None }
    }

    /// `var` must be a variable of `ring`; values become Laurent polynomials in `var` over
    /// the remaining variables.
    pub fn laurent(ring: &Ring, var: &str) -> Result<Self> {
        let coeff_ring = ring.without_var(var)?;
        Ok(ParseContext { ring: ring.clone(), laurent: Some(var.to_string()), coeff_ring: Some(coeff_ring) })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn laurent_var(&self) -> Option<&str> {
        self.laurent.as_deref()
    }
}

/// A parsed value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Poly(Poly),
    Laurent(LaurentPoly),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Poly(p) => write!(f, "{p}"),
            Value::Laurent(l) => write!(f, "{l}"),
        }
    }
}

/// Evaluation keeps everything Laurent; without a Laurent variable no negative power appears.
struct Eval<'a> {
    ctx: &'a ParseContext,
    var: String,
    coeffs: Ring,
}

impl Eval<'_> {
    fn scalar(&self, s: Scalar) -> LaurentPoly {
        LaurentPoly::monomial(&self.var, &self.coeffs, s, 0)
    }

    /// `c·var^k` with a nonzero scalar `c`, when a Laurent variable is declared.
    fn unit_parts(&self, x: &LaurentPoly) -> Option<(Scalar, i64)> {
        let terms = x.scalar_terms()?;
        if terms.len() != 1 {
            return None;
        }
        let (k, c) = terms.into_iter().next()?;
        (k == 0 || self.ctx.laurent.is_some()).then_some((c, k))
    }

    fn inverse(&self, x: &LaurentPoly, what: &str) -> Result<LaurentPoly> {
        let (c, k) = self.unit_parts(x).ok_or_else(|| Error::DivisionByNonUnit(format!("{what} = {x}")))?;
        let inv = c.inv().map_err(|_| Error::DivisionByNonUnit(format!("{what} = {x}")))?;
        Ok(LaurentPoly::monomial(&self.var, &self.coeffs, inv, -k))
    }

    fn eval(&self, e: &Expr) -> Result<LaurentPoly> {
        let field = self.ctx.ring.field();
        Ok(match e {
            Expr::Int(k) => self.scalar(field.from_bigint(k)),
            Expr::Rational(a, b) => {
                if b.is_zero() {
                    return Err(Error::DivisionByNonUnit(format!("{a}/{b}")));
                }
                let q = BigRational::new(a.clone(), b.clone());
                self.scalar(field.from_rational(&q).map_err(|_| Error::DivisionByNonUnit(format!("{a}/{b} in {field}")))?)
            }
            Expr::Var(name) => {
                if self.ctx.laurent.as_deref() == Some(name.as_str()) {
                    LaurentPoly::monomial(&self.var, &self.coeffs, field.one(), 1)
                } else {
                    let p = self.coeffs.var(name).map_err(|_| Error::UnknownVariable(name.clone()))?;
                    LaurentPoly::term(&self.var, p, 0)
                }
            }
            Expr::Neg(a) => self.eval(a)?.neg(),
            Expr::Add(a, b) => &self.eval(a)? + &self.eval(b)?,
            Expr::Sub(a, b) => &self.eval(a)? - &self.eval(b)?,
            Expr::Mul(a, b) => &self.eval(a)? * &self.eval(b)?,
            Expr::Div(a, b) => &self.eval(a)? * &self.inverse(&self.eval(b)?, &b.to_string())?,
            Expr::Pow(a, k) => {
                let base = self.eval(a)?;
                let base = if *k < 0 {
                    if self.ctx.laurent.is_none() || self.unit_parts(&base).is_none() {
                        return Err(Error::Precondition(format!(
                            "negative exponent on {a}; only the Laurent variable may carry one"
                        )));
                    }
                    self.inverse(&base, &a.to_string())?
                } else {
                    base
                };
                let k = k.unsigned_abs();
                let mut acc = self.scalar(field.one());
                for _ in 0..k {
                    acc = &acc * &base;
                }
                acc
            }
            Expr::Group(a) => self.eval(a)?,
        })
    }
}

/// Evaluates `e` in the context; Laurent contexts give [`Value::Laurent`].
pub fn eval_expr(e: &Expr, ctx: &ParseContext) -> Result<Value> {
    let (var, coeffs) = match (&ctx.laurent, &ctx.coeff_ring) {
        (Some(v), Some(c)) => (v.clone(), c.clone()),
        _ => (ctx.ring.fresh_var("laurent"), ctx.ring.clone()),
    };
    let out = Eval { ctx, var, coeffs }.eval(e)?;
    if ctx.laurent.is_some() {
        return Ok(Value::Laurent(out));
    }
    Ok(Value::Poly(out.coeff(0)))
}

pub fn parse_value(src: &str, ctx: &ParseContext) -> Result<Value> {
    let toks = lex(src)?;
    for (k, (offset, t)) in toks.iter().enumerate() {
        if let Tok::Ident(name) = t {
            if ctx.ring.var_index(name).is_err() {
                return Err(Error::Parse { offset: *offset, message: format!("unknown variable `{name}`") });
            }
        }
        let next = |d: usize| toks.get(k + d).map(|x| &x.1);
        let negative_exponent = matches!(t, Tok::Caret)
            && (matches!(next(1), Some(Tok::Minus)) || matches!((next(1), next(2)), (Some(Tok::LParen), Some(Tok::Minus))));
        if negative_exponent && ctx.laurent.is_none() {
            return Err(Error::Parse { offset: *offset, message: "negative exponent without a Laurent variable".into() });
        }
    }
    let e = parse_expr(src)?;
    eval_expr(&e, ctx)
}

pub fn parse_poly(src: &str, ring: &Ring) -> Result<Poly> {
    match parse_value(src, &ParseContext::new(ring))? {
        Value::Poly(p) => Ok(p),
        Value::Laurent(_) => unreachable!("no Laurent variable declared"),
    }
}

/// Parses a Laurent polynomial in `var`, a variable of `ring`, over the other variables.
pub fn parse_laurent(src: &str, ring: &Ring, var: &str) -> Result<LaurentPoly> {
    match parse_value(src, &ParseContext::laurent(ring, var)?)? {
        Value::Laurent(l) => Ok(l),
        Value::Poly(_) => unreachable!("Laurent variable declared"),
    }
}

/// Comma-separated polynomials; empty input gives an empty list. Offsets refer to `src`.
pub fn parse_poly_list(src: &str, ring: &Ring) -> Result<Vec<Poly>> {
    if src.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut start = 0;
    for piece in src.split(',') {
        let p = parse_poly(piece, ring).map_err(|e| shift(e, start))?;
        out.push(p);
        start += piece.len() + 1;
    }
    Ok(out)
}

/// Moves a parse error offset by `by` bytes.
pub fn shift(err: Error, by: usize) -> Error {
    match err {
        Error::Parse { offset, message } => Error::Parse { offset: offset + by, message },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Field;

    fn ring() -> Ring {
        Ring::new(Field::Rationals, &["x", "y", "u"]).unwrap()
    }

    #[test]
    fn precedence() {
        let e = parse_expr("-x^2 + 2x y").unwrap();
        assert_eq!(e.to_string(), "-x^2 + 2*x*y");
        assert_eq!(parse_expr(&e.to_string()).unwrap(), e);
        let r = ring();
        let p = parse_poly("x^4 + y^4 + x^2*y^2", &r).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert!(parse_poly("0", &r).unwrap().is_zero());
        assert_eq!(parse_poly("(x+y)(x-y)", &r).unwrap(), parse_poly("x^2 - y^2", &r).unwrap());
        assert_eq!(parse_poly("1/2 x + x/2", &r).unwrap(), parse_poly("x", &r).unwrap());
    }

    #[test]
    fn laurent_values() {
        let r = ring();
        let l = parse_laurent("u^-1 + 3", &r, "u").unwrap();
        assert_eq!(l.ord(), Some(-1));
        assert_eq!(l.to_string(), "3 + u^-1");
        assert_eq!(parse_laurent("x/u^2", &r, "u").unwrap().ord(), Some(-2));
    }

    #[test]
    fn errors_carry_offsets() {
        let r = ring();
        assert!(matches!(parse_poly("x + z", &r), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_poly("x + ", &r), Err(Error::Parse { offset: 4, .. })));
        assert!(matches!(parse_poly("x^y", &r), Err(Error::Parse { offset: 2, .. })));
        assert!(matches!(parse_poly("x^-1", &r), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(parse_poly("x/y", &r), Err(Error::DivisionByNonUnit(_))));
        assert!(parse_laurent("x^-1", &r, "u").is_err());
        assert!(matches!(parse_poly_list("x, y $", &r), Err(Error::Parse { offset: 5, .. })));
    }
}
