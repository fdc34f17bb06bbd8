//! A small expression reader for polynomials and rational functions.
//!
//! Accepts the canonical text form produced by `Display` as well as a
//! shorthand convenient for writing tables by hand:
//! `F0'''` or `F0_3` for F[g=0,v=(3)], `F1_1_0` for F[g=1,v=(1,0)],
//! `F2` for the valence-free vertex, `k` for the scalar propagator,
//! `k12` for kappa[1,2], `I3` for I[3]. Juxtaposition multiplies.

use super::atom::Atom;
use super::monomial::Monomial;
use super::poly::Poly;
use super::ratfn::RationalFn;
use super::rational::Rational;
use crate::error::Error;

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    Atom(Atom),
    Op(char),
}

fn shorthand(word: &str, n_labels: usize) -> Result<Atom, Error> {
    let bad = || Error::Parse(format!("unknown symbol `{}`", word));
    if word == "k" {
        return Ok(Atom::scalar_kappa());
    }
    if let Some(rest) = word.strip_prefix('k') {
        let d: Vec<u32> = rest.chars().map(|c| c.to_digit(10).ok_or_else(bad)).collect::<Result<_, _>>()?;
        if d.len() == 2 {
            return Ok(Atom::kappa(d[0], d[1]));
        }
        return Err(bad());
    }
    if let Some(rest) = word.strip_prefix('I') {
        return Ok(Atom::CoordI(rest.parse().map_err(|_| bad())?));
    }
    if let Some(rest) = word.strip_prefix('F') {
        let primes = rest.chars().rev().take_while(|c| *c == '\'').count();
        let rest = &rest[..rest.len() - primes];
        let mut parts = rest.split('_');
        let g: u32 = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
        let mut v: Vec<u32> = parts.map(|p| p.parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
        if primes > 0 {
            if !v.is_empty() || n_labels != 1 {
                return Err(bad());
            }
            v.push(primes as u32);
        }
        if v.is_empty() {
            v = vec![0; n_labels];
        }
        if v.len() != n_labels {
            return Err(bad());
        }
        return Ok(Atom::Vertex { genus: g, valence: v });
    }
    Err(bad())
}

fn lex(s: &str, n_labels: usize) -> Result<Vec<Tok>, Error> {
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Num(text.parse().map_err(|_| Error::Parse(text.clone()))?));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            if i < chars.len() && chars[i] == '[' {
                let close = chars[i..]
                    .iter()
                    .position(|&x| x == ']')
                    .ok_or_else(|| Error::Parse(format!("unterminated `{}`", word)))?;
                let full: String = chars[start..i + close + 1].iter().collect();
                i += close + 1;
                out.push(Tok::Atom(full.parse()?));
            } else if matches!(word.as_str(), "kappa" | "T" | "c") {
                out.push(Tok::Atom(word.parse()?));
            } else {
                out.push(Tok::Atom(shorthand(&word, n_labels)?));
            }
        } else {
            return Err(Error::Parse(format!("unexpected character `{}`", c)));
        }
    }
    Ok(out)
}

struct Reader {
    toks: Vec<Tok>,
    pos: usize,
}

impl Reader {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<RationalFn, Error> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(op @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if op == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFn, Error> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                Some(Tok::Num(_)) | Some(Tok::Atom(_)) | Some(Tok::Op('(')) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<RationalFn, Error> {
        if let Some(Tok::Op('-')) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        self.power()
    }

    fn power(&mut self) -> Result<RationalFn, Error> {
        let base = self.base()?;
        if let Some(Tok::Op('^')) = self.peek() {
            self.pos += 1;
            let neg = if let Some(Tok::Op('-')) = self.peek() {
                self.pos += 1;
                true
            } else {
                false
            };
            let e = match self.next() {
                Some(Tok::Num(q)) if q.is_integer() => {
                    q.to_integer().to_string().parse::<i32>().map_err(|_| Error::Parse("exponent too large".into()))?
                }
                _ => return Err(Error::Parse("expected integer exponent".into())),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<RationalFn, Error> {
        match self.next() {
            Some(Tok::Num(q)) => Ok(RationalFn::constant(q)),
            Some(Tok::Atom(a)) => Ok(RationalFn::atom(a)),
            Some(Tok::Op('(')) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::Op(')')) => Ok(e),
                    _ => Err(Error::Parse("expected `)`".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {:?}", other))),
        }
    }
}

/// Read a rational function. `n_labels` fixes the length of shorthand
/// vertex valences.
pub fn parse_ratfn(s: &str, n_labels: usize) -> Result<RationalFn, Error> {
    let mut r = Reader { toks: lex(s, n_labels)?, pos: 0 };
    let e = r.expr()?;
    if r.pos != r.toks.len() {
        return Err(Error::Parse(format!("trailing input in `{}`", s)));
    }
    Ok(e)
}

/// Read a (Laurent) polynomial; denominators must be monomials.
pub fn parse_poly(s: &str, n_labels: usize) -> Result<Poly, Error> {
    let f = parse_ratfn(s, n_labels)?;
    let den = f.den();
    if den.len() != 1 {
        return Err(Error::Parse(format!("`{}` is not a polynomial", s)));
    }
    let (m, c): (&Monomial, &Rational) = den.leading().expect("non-zero denominator");
    Ok(f.num().mul_monomial(&m.inverse()).scale(&(Rational::from_integer(1.into()) / c)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn shorthand_and_canonical_agree() {
        let a = parse_poly("5/24 k^3 F0'''^2 + 1/8 k^2 F0''''", 1).unwrap();
        let b = parse_poly("5/24*F[g=0,v=(3)]^2*kappa^3 + 1/8*F[g=0,v=(4)]*kappa^2", 1).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn display_round_trip() {
        let p = parse_poly("F2 - 1/2 k F1'' + 3 k12 F1_1_0 F1_0_1 + c^-3", 2);
        assert!(p.is_err(), "primes are one-label only");
        let p = parse_poly("F2 - 1/2 k12 F1_2_0 + 3 k12 F1_1_0 F1_0_1 + c^-3", 2).unwrap();
        assert_eq!(parse_poly(&p.to_string(), 2).unwrap(), p);
    }

    #[test]
    fn rational_functions() {
        let f = parse_ratfn("3/(4 (c^2-1)^2) + 5/(6 (c^2-1)^3)", 1).unwrap();
        let g = parse_ratfn("(9 c^2 + 1)/(12 (c^2 - 1)^3)", 1).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_ratfn("5/(48 c^3)", 1).unwrap().num(), &Poly::constant(rat(5, 48)));
    }
}
