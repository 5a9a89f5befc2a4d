//! Text grammar for polynomials and their canonical printing.
//!
//! ```text
//! poly   := ['-'] term ( ('+'|'-') term )*
//! term   := coeff ('*' factor)* | factor ('*' factor)*
//! factor := var ('^' nat)?
//! coeff  := nat ('/' nat)?
//! var    := 'x' nat
//! ```
//!
//! Families over the parameter line additionally accept the variable `s`,
//! which is stored as the last variable.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{format_rational, Polynomial, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VarNames {
    /// When set, the last variable prints (and parses) as `s`.
    pub param_last: bool,
}

impl VarNames {
    pub fn plain() -> Self {
        VarNames { param_last: false }
    }

    pub fn with_param() -> Self {
        VarNames { param_last: true }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Nat(BigInt),
    Var(usize),
    Param,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(text: &str, allow_param: bool) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b's' if allow_param => out.push((start, Tok::Param)),
            b'x' => {
                let mut j = i + 1;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                if j == i + 1 {
                    return Err(Error::Syntax { position: start, message: "expected variable index after 'x'".into() });
                }
                let idx: usize = text[i + 1..j]
                    .parse()
                    .map_err(|_| Error::Syntax { position: start, message: "variable index too large".into() })?;
                out.push((start, Tok::Var(idx)));
                i = j;
                continue;
            }
            b'0'..=b'9' => {
                let mut j = i;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    j += 1;
                }
                out.push((start, Tok::Nat(text[i..j].parse().unwrap())));
                i = j;
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    position: start,
                    message: format!("unexpected character {:?}", text[start..].chars().next().unwrap()),
                })
            }
        }
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    pos: usize,
    end: usize,
    nvars: usize,
    param: bool,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, message: &str) -> Result<T> {
        Err(Error::Syntax { position: self.here(), message: message.into() })
    }

    fn total_vars(&self) -> usize {
        self.nvars + usize::from(self.param)
    }

    fn nat_u32(&mut self) -> Result<u32> {
        match self.peek().cloned() {
            Some(Tok::Nat(n)) => {
                let pos = self.here();
                self.pos += 1;
                u32::try_from(n).map_err(|_| Error::Syntax { position: pos, message: "exponent too large".into() })
            }
            _ => self.err("expected natural number"),
        }
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        let pos = self.here();
        let idx = match self.peek().cloned() {
            Some(Tok::Var(i)) => {
                if i < 1 || i > self.nvars {
                    return Err(Error::VariableOutOfRange { index: i, nvars: self.nvars });
                }
                i - 1
            }
            Some(Tok::Param) => self.nvars,
            _ => return Err(Error::Syntax { position: pos, message: "expected variable".into() }),
        };
        self.pos += 1;
        let e = if self.peek() == Some(&Tok::Caret) {
            self.pos += 1;
            self.nat_u32()?
        } else {
            1
        };
        exps[idx] += e;
        Ok(())
    }

    fn term(&mut self) -> Result<(Monomial, Rational)> {
        let mut exps = vec![0u32; self.total_vars()];
        let mut coeff = Rational::one();
        match self.peek().cloned() {
            Some(Tok::Nat(n)) => {
                self.pos += 1;
                let mut c = Rational::from_integer(n);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let dpos = self.here();
                    match self.peek().cloned() {
                        Some(Tok::Nat(d)) => {
                            self.pos += 1;
                            if d.is_zero() {
                                return Err(Error::ZeroDenominator { position: dpos });
                            }
                            c /= Rational::from_integer(d);
                        }
                        _ => return self.err("expected denominator"),
                    }
                }
                coeff = c;
            }
            Some(Tok::Var(_)) | Some(Tok::Param) => self.factor(&mut exps)?,
            _ => return self.err("expected term"),
        }
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            self.factor(&mut exps)?;
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn poly(&mut self) -> Result<Polynomial> {
        let mut p = Polynomial::zero(self.total_vars());
        let mut negate = false;
        if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            negate = true;
        }
        loop {
            let (m, c) = self.term()?;
            p.add_term(m, if negate { -c } else { c });
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                None => break,
                _ => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(p)
    }
}

fn parse_with(text: &str, nvars: usize, param: bool) -> Result<Polynomial> {
    let toks = tokenize(text, param)?;
    if toks.is_empty() {
        return Err(Error::Syntax { position: 0, message: "empty polynomial".into() });
    }
    let mut p = Parser { toks: &toks, pos: 0, end: text.len(), nvars, param };
    p.poly()
}

/// Parses a polynomial in `x1..xn`.
pub fn parse_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    parse_with(text, nvars, false)
}

/// Parses a polynomial in `x1..xn` and the parameter `s` (stored as variable `n+1`).
pub fn parse_family_polynomial(text: &str, nvars: usize) -> Result<Polynomial> {
    parse_with(text, nvars, true)
}

/// Parses a comma-separated generator list.
pub fn parse_polynomial_list(text: &str, nvars: usize) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for piece in text.split(',') {
        let p = parse_polynomial(piece, nvars).map_err(|e| shift_position(e, offset))?;
        out.push(p);
        offset += piece.len() + 1;
    }
    Ok(out)
}

fn shift_position(e: Error, offset: usize) -> Error {
    match e {
        Error::Syntax { position, message } => Error::Syntax { position: position + offset, message },
        Error::ZeroDenominator { position } => Error::ZeroDenominator { position: position + offset },
        other => other,
    }
}

/// Largest variable index `j` such that `xj` occurs in `text` (0 when none).
pub fn max_variable_index(text: &str) -> usize {
    let bytes = text.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] == b'x' {
            let mut j = i + 1;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = text[i + 1..j].parse::<usize>() {
                best = best.max(v);
            }
            i = j;
        } else {
            i += 1;
        }
    }
    best
}

pub(crate) fn write_monomial(f: &mut impl fmt::Write, m: &Monomial, names: &VarNames) -> fmt::Result {
    let n = m.nvars();
    let mut first = true;
    for (j, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            f.write_char('*')?;
        }
        first = false;
        if names.param_last && j + 1 == n {
            f.write_char('s')?;
        } else {
            write!(f, "x{}", j + 1)?;
        }
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    if first {
        f.write_char('1')?;
    }
    Ok(())
}

pub(crate) fn write_polynomial(f: &mut impl fmt::Write, p: &Polynomial, names: &VarNames) -> fmt::Result {
    if p.is_zero() {
        return f.write_char('0');
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(b.0, a.0));
    for (k, (m, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => f.write_char('-')?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let a = c.abs();
        if m.is_one() {
            f.write_str(&format_rational(&a))?;
        } else {
            if !a.is_one() {
                write!(f, "{}*", format_rational(&a))?;
            }
            write_monomial(f, m, names)?;
        }
    }
    Ok(())
}

/// Canonical text of a polynomial, optionally naming the last variable `s`.
pub fn format_polynomial(p: &Polynomial, names: VarNames) -> String {
    let mut s = String::new();
    write_polynomial(&mut s, p, &names).unwrap();
    s
}

pub fn format_polynomial_list(ps: &[Polynomial]) -> String {
    ps.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ")
}
