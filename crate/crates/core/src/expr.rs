//! Text grammar shared by every command: variables `z` / `x, y` / `X, Y, Z`,
//! `+ - * / ^`, parentheses, integer or decimal literals (read exactly),
//! rational constants via `/`, the imaginary unit `i`, and implicit
//! multiplication (`3x^2y`, `2i`, `(z-1)(z+1)`).

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::intersection::{BivariatePolynomialQ, MPoly, TernaryForm};
use crate::numeric::{q_to_f64, Polynomial, RationalFunction, Scalar, Q};

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Q),
    I,
    Var(char),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
}

impl Expr {
    fn has_i(&self) -> bool {
        match self {
            Expr::I => true,
            Expr::Num(_) | Expr::Var(_) => false,
            Expr::Neg(a) | Expr::Pow(a, _) => a.has_i(),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => a.has_i() || b.has_i(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Q),
    Ident(char),
    Op(char),
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        if c.is_whitespace() {
            k += 1;
        } else if c.is_ascii_digit() || c == '.' {
            let start = k;
            while k < chars.len() && (chars[k].is_ascii_digit() || chars[k] == '.') {
                k += 1;
            }
            let text: String = chars[start..k].iter().collect();
            out.push((start, Tok::Num(decimal(&text)?)));
        } else if c.is_ascii_alphabetic() {
            out.push((k, Tok::Ident(c)));
            k += 1;
        } else if "+-*/^()".contains(c) {
            out.push((k, Tok::Op(c)));
            k += 1;
        } else {
            return Err(parse_err(format!("unexpected character '{c}' at {k}")));
        }
    }
    Ok(out)
}

fn decimal(text: &str) -> Result<Q> {
    let (int, frac) = text.split_once('.').unwrap_or((text, ""));
    if frac.contains('.') || (int.is_empty() && frac.is_empty()) {
        return Err(parse_err(format!("bad number '{text}'")));
    }
    let digits = format!("{int}{frac}");
    let n: BigInt = digits.parse().map_err(|_| parse_err(format!("bad number '{text}'")))?;
    Ok(Q::new(n, num_traits::pow(BigInt::from(10), frac.len())))
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn where_(&self) -> String {
        match self.toks.get(self.pos) {
            Some((at, _)) => format!("at {at}"),
            None => "at end of input".into(),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else if matches!(self.peek(), Some(Tok::Num(_) | Tok::Ident(_) | Tok::Op('('))) {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else if self.eat('+') {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let paren = self.eat('(');
        let neg = self.eat('-');
        let e = match self.toks.get(self.pos) {
            Some((_, Tok::Num(n))) if n.is_integer() => {
                let v: i64 = n
                    .to_integer()
                    .try_into()
                    .map_err(|_| parse_err("exponent too large"))?;
                self.pos += 1;
                v
            }
            _ => return Err(parse_err(format!("expected an integer exponent {}", self.where_()))),
        };
        if paren && !self.eat(')') {
            return Err(parse_err(format!("expected ')' {}", self.where_())));
        }
        Ok(Expr::Pow(Box::new(base), if neg { -e } else { e }))
    }

    fn primary(&mut self) -> Result<Expr> {
        let tok = self.peek().cloned();
        match tok {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident('i')) => {
                self.pos += 1;
                Ok(Expr::I)
            }
            Some(Tok::Ident(c)) => {
                self.pos += 1;
                Ok(Expr::Var(c))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(parse_err(format!("expected ')' {}", self.where_())));
                }
                Ok(e)
            }
            _ => Err(parse_err(format!("expected a number, variable or '(' {}", self.where_()))),
        }
    }
}

pub fn parse_expr(s: &str) -> Result<Expr> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(parse_err("empty expression"));
    }
    let mut p = Parser { toks, pos: 0 };
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(parse_err(format!("trailing input {}", p.where_())));
    }
    Ok(e)
}

/// Unreduced quotient used while folding; reduced once at the end.
struct Frac<T: Scalar> {
    num: Polynomial<T>,
    den: Polynomial<T>,
}

fn fold_rational<T: Scalar>(e: &Expr, var: char, lift: &dyn Fn(&Q) -> T, unit: Option<T>) -> Result<Frac<T>> {
    let poly = |p: Polynomial<T>| Frac { num: p, den: Polynomial::one() };
    Ok(match e {
        Expr::Num(n) => poly(Polynomial::constant(lift(n))),
        Expr::I => match &unit {
            Some(u) => poly(Polynomial::constant(u.clone())),
            None => return Err(parse_err("'i' needs complex coefficients")),
        },
        Expr::Var(c) if *c == var => poly(Polynomial::identity()),
        Expr::Var(c) => return Err(parse_err(format!("unknown variable '{c}' (expected {var})"))),
        Expr::Neg(a) => {
            let a = fold_rational(a, var, lift, unit)?;
            Frac { num: a.num.neg(), den: a.den }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let a = fold_rational(a, var, lift, unit.clone())?;
            let mut b = fold_rational(b, var, lift, unit)?;
            if matches!(e, Expr::Sub(..)) {
                b.num = b.num.neg();
            }
            Frac { num: a.num.mul(&b.den).add(&b.num.mul(&a.den)), den: a.den.mul(&b.den) }
        }
        Expr::Mul(a, b) => {
            let a = fold_rational(a, var, lift, unit.clone())?;
            let b = fold_rational(b, var, lift, unit)?;
            Frac { num: a.num.mul(&b.num), den: a.den.mul(&b.den) }
        }
        Expr::Div(a, b) => {
            let a = fold_rational(a, var, lift, unit.clone())?;
            let b = fold_rational(b, var, lift, unit)?;
            if b.num.is_zero() {
                return Err(Error::domain("division by zero"));
            }
            Frac { num: a.num.mul(&b.den), den: a.den.mul(&b.num) }
        }
        Expr::Pow(a, k) => {
            let a = fold_rational(a, var, lift, unit)?;
            let m = k.unsigned_abs() as u32;
            if *k >= 0 {
                Frac { num: a.num.pow(m), den: a.den.pow(m) }
            } else if a.num.is_zero() {
                return Err(Error::domain("zero to a negative power"));
            } else {
                Frac { num: a.den.pow(m), den: a.num.pow(m) }
            }
        }
    })
}

/// Rational function of `z` with exact rational coefficients.
pub fn parse_rational_q(s: &str) -> Result<RationalFunction<Q>> {
    parse_rational_q_in(s, 'z')
}

/// Same grammar with another variable name, e.g. `x` for the base of a cover.
pub fn parse_rational_q_in(s: &str, var: char) -> Result<RationalFunction<Q>> {
    let f = fold_rational(&parse_expr(s)?, var, &|n: &Q| n.clone(), None)?;
    RationalFunction::new(f.num, f.den)
}

/// Rational function of `z` with complex coefficients (`i` allowed).
pub fn parse_rational_complex(s: &str) -> Result<RationalFunction<Complex64>> {
    let lift = |n: &Q| Complex64::new(q_to_f64(n), 0.0);
    let f = fold_rational(&parse_expr(s)?, 'z', &lift, Some(Complex64::i()))?;
    RationalFunction::new(f.num, f.den)
}

/// A parsed rational function: exact when the text has no `i`.
#[derive(Clone, Debug)]
pub enum ParsedRational {
    Exact(RationalFunction<Q>),
    Complex(RationalFunction<Complex64>),
}

impl ParsedRational {
    pub fn to_complex(&self) -> RationalFunction<Complex64> {
        match self {
            ParsedRational::Exact(f) => f.to_complex(),
            ParsedRational::Complex(f) => f.clone(),
        }
    }
}

pub fn parse_rational(s: &str) -> Result<ParsedRational> {
    let e = parse_expr(s)?;
    if e.has_i() {
        parse_rational_complex(s).map(ParsedRational::Complex)
    } else {
        parse_rational_q(s).map(ParsedRational::Exact)
    }
}

/// Polynomial in `z` (no division by non-constants).
pub fn parse_polynomial_complex(s: &str) -> Result<Polynomial<Complex64>> {
    let f = parse_rational_complex(s)?;
    if f.den().degree() != Some(0) {
        return Err(parse_err("expected a polynomial"));
    }
    let c = f.den().coeff(0);
    Ok(f.num().scale(&(Complex64::one() / c)))
}

pub fn parse_polynomial_q(s: &str) -> Result<Polynomial<Q>> {
    parse_polynomial_q_in(s, 'z')
}

pub fn parse_polynomial_q_in(s: &str, var: char) -> Result<Polynomial<Q>> {
    let f = parse_rational_q_in(s, var)?;
    if f.den().degree() != Some(0) {
        return Err(parse_err("expected a polynomial"));
    }
    let c = f.den().coeff(0);
    Ok(f.num().scale(&(Q::one() / c)))
}

fn fold_mpoly<const N: usize>(e: &Expr, var: &dyn Fn(char) -> Option<usize>) -> Result<MPoly<N>> {
    Ok(match e {
        Expr::Num(n) => MPoly::constant(n.clone()),
        Expr::I => return Err(parse_err("'i' is not allowed in polynomials over Q")),
        Expr::Var(c) => match var(*c) {
            Some(k) => MPoly::var(k),
            None => return Err(parse_err(format!("unknown variable '{c}'"))),
        },
        Expr::Neg(a) => fold_mpoly::<N>(a, var)?.neg(),
        Expr::Add(a, b) => fold_mpoly::<N>(a, var)?.add(&fold_mpoly(b, var)?),
        Expr::Sub(a, b) => fold_mpoly::<N>(a, var)?.sub(&fold_mpoly(b, var)?),
        Expr::Mul(a, b) => fold_mpoly::<N>(a, var)?.mul(&fold_mpoly(b, var)?),
        Expr::Div(a, b) => {
            let d = fold_mpoly::<N>(b, var)?;
            if d.total_degree() != Some(0) {
                return Err(parse_err("only division by nonzero constants is allowed in polynomials"));
            }
            let c = d.coeff([0; N]);
            if c.is_zero() {
                return Err(Error::domain("division by zero"));
            }
            fold_mpoly::<N>(a, var)?.scale(&(Q::one() / c))
        }
        Expr::Pow(a, k) => {
            if *k < 0 {
                return Err(parse_err("negative exponent in a polynomial"));
            }
            fold_mpoly::<N>(a, var)?.pow(*k as u32)
        }
    })
}

/// Polynomial in `x, y` over Q.
pub fn parse_bivariate(s: &str) -> Result<BivariatePolynomialQ> {
    fold_mpoly(&parse_expr(s)?, &|c| match c {
        'x' => Some(0),
        'y' => Some(1),
        _ => None,
    })
}

/// Homogeneous form in `X, Y, Z` (lower case accepted).
pub fn parse_form(s: &str) -> Result<TernaryForm> {
    let f: TernaryForm = fold_mpoly(&parse_expr(s)?, &|c| match c.to_ascii_uppercase() {
        'X' => Some(0),
        'Y' => Some(1),
        'Z' => Some(2),
        _ => None,
    })?;
    if !f.is_homogeneous() {
        return Err(parse_err(format!("'{s}' is not homogeneous")));
    }
    Ok(f)
}

/// Real or complex number, e.g. `0.5`, `-1/3`, `2-3i`.
pub fn parse_complex(s: &str) -> Result<Complex64> {
    let f = parse_rational_complex(s)?;
    if f.num().degree().unwrap_or(0) > 0 || f.den().degree() != Some(0) {
        return Err(parse_err(format!("'{s}' is not a constant")));
    }
    Ok(f.num().coeff(0) / f.den().coeff(0))
}

pub fn parse_q(s: &str) -> Result<Q> {
    let p = parse_polynomial_q(s)?;
    if p.degree().unwrap_or(0) > 0 {
        return Err(parse_err(format!("'{s}' is not a constant")));
    }
    Ok(p.coeff(0))
}
