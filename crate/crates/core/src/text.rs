//! Text format for polynomials and operators.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := coeff | var ('^' nat)? | '(' expr ')' ('^' nat)?
//! coeff  := int ('/' nat)?
//! ```
//!
//! Products are evaluated in the algebra, so `Dx*x` means `x*Dx + 1` in a Weyl algebra.
//! Rendering writes each standard monomial in variable order, which reparses to the same element.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{DmodError, Result};
use crate::galgebra::GAlgebra;
use crate::polyarith::{Poly, Term};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
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

fn lex(s: &str) -> Result<Vec<(usize, Tok)>> {
    let b = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let c = b[i] as char;
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < b.len() && (b[i] as char).is_ascii_digit() {
                i += 1;
            }
            out.push((start, Tok::Int(s[start..i].parse().expect("digits parse"))));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            while i < b.len() && ((b[i] as char).is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(DmodError::Parse { pos: start, msg: format!("unexpected character '{c}'") }),
        };
        out.push((start, t));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    alg: &'a GAlgebra<Rational>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(DmodError::Parse { pos: self.here(), msg: msg.into() })
    }

    fn eat(&mut self, t: &Tok) -> bool {
        if self.peek() == Some(t) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => self.err("expected a non-negative integer"),
        }
    }

    fn exponent(&mut self) -> Result<u32> {
        if !self.eat(&Tok::Caret) {
            return Ok(1);
        }
        let at = self.here();
        let n = self.nat()?;
        u32::try_from(&n).ok().filter(|&e| e <= u16::MAX as u32).ok_or(DmodError::Parse { pos: at, msg: "exponent too large".into() })
    }

    fn expr(&mut self) -> Result<Poly<Rational>> {
        let ord = self.alg.order();
        let neg = if self.eat(&Tok::Minus) {
            true
        } else {
            self.eat(&Tok::Plus);
            false
        };
        let mut acc = self.term()?;
        if neg {
            acc = acc.neg();
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.term()?, ord);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.term()?, ord);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly<Rational>> {
        let mut acc = self.factor()?;
        while self.eat(&Tok::Star) {
            let f = self.factor()?;
            acc = self.alg.star_mul(&acc, &f);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Poly<Rational>> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                let mut c = Rational::from_integer(n);
                if self.eat(&Tok::Slash) {
                    let at = self.here();
                    let d = self.nat()?;
                    if d.is_zero() {
                        return Err(DmodError::Parse { pos: at, msg: "zero denominator".into() });
                    }
                    c /= Rational::from_integer(d);
                }
                Ok(self.alg.constant(c))
            }
            Some(Tok::Ident(name)) => {
                let at = self.here();
                self.pos += 1;
                let Some(i) = self.alg.index_of(&name) else {
                    return Err(DmodError::Parse { pos: at, msg: format!("unknown variable '{name}'") });
                };
                let e = self.exponent()?;
                Ok(self.alg.pow(&self.alg.var(i), e))
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Tok::RParen) {
                    return self.err("expected ')'");
                }
                let e = self.exponent()?;
                Ok(self.alg.pow(&inner, e))
            }
            _ => self.err("expected a number, a variable or '('"),
        }
    }
}

/// Parses `text` as an element of `alg`.
pub fn parse_poly(text: &str, alg: &GAlgebra<Rational>) -> Result<Poly<Rational>> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return Err(DmodError::Parse { pos: 0, msg: "empty expression".into() });
    }
    let mut p = Parser { toks, pos: 0, end: text.len(), alg };
    let out = p.expr()?;
    if p.pos < p.toks.len() {
        return p.err("unexpected token after the end of the expression");
    }
    Ok(out)
}

pub fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn render_terms(terms: &[Term<Rational>], alg: &GAlgebra<Rational>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        let neg = t.coeff.is_negative();
        let abs = t.coeff.abs();
        if neg {
            out.push('-');
        } else if k > 0 {
            out.push('+');
        }
        let mono = alg.render_monomial(&t.exp);
        if t.exp.is_one() {
            out.push_str(&render_rational(&abs));
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&render_rational(&abs));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// Renders an algebra element in the input grammar.
pub fn render_poly(p: &Poly<Rational>, alg: &GAlgebra<Rational>) -> String {
    render_terms(p.terms(), alg)
}

/// Renders a free-module element as `[p_0, p_1, ..]` with `rank` slots.
pub fn render_vector(p: &Poly<Rational>, alg: &GAlgebra<Rational>, rank: usize) -> String {
    let parts: Vec<String> = (0..rank as u32).map(|c| render_poly(&p.component(c, alg.order()), alg)).collect();
    format!("[{}]", parts.join(", "))
}

fn is_digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Names the D-module constructions add to a ring; input variables may not use them.
fn reserved(name: &str, ring: &[String]) -> bool {
    name == "s"
        || name == "h"
        || name == "t"
        || name == "Dt"
        || name.strip_prefix('t').is_some_and(is_digits)
        || name.strip_prefix("Dt").is_some_and(is_digits)
        || name.strip_prefix('s').is_some_and(is_digits)
        || name.strip_prefix('D').is_some_and(|rest| ring.iter().any(|v| v == rest))
}

/// Parses a comma-separated list of distinct, non-reserved variable names.
pub fn parse_ring(spec: &str) -> Result<Vec<String>> {
    let names: Vec<String> = spec.split(',').map(|s| s.trim().to_string()).collect();
    let mut offset = 0;
    for (i, n) in names.iter().enumerate() {
        let bad = |msg: String| Err(DmodError::Parse { pos: offset, msg });
        let mut chars = n.chars();
        let ok = chars.next().is_some_and(|c| c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return bad(format!("'{n}' is not a variable name"));
        }
        if names[..i].contains(n) {
            return bad(format!("variable '{n}' appears twice"));
        }
        if reserved(n, &names) {
            return bad(format!("'{n}' is reserved for the operator algebras"));
        }
        offset += n.len() + 1;
    }
    Ok(names)
}

/// A polynomial line with its 1-based line number.
pub type NumberedLine = (usize, String);

/// Splits an ideal file into its ring line and polynomial lines (with 1-based line numbers).
pub fn parse_ideal_file(text: &str) -> Result<(Vec<String>, Vec<NumberedLine>)> {
    let mut ring = None;
    let mut polys = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if ring.is_none() {
            let Some(rest) = line.strip_prefix("ring:") else {
                return Err(DmodError::Parse { pos: 0, msg: format!("line {}: expected 'ring: <names>'", k + 1) });
            };
            ring = Some(parse_ring(rest)?);
            continue;
        }
        polys.push((k + 1, line.to_string()));
    }
    let ring = ring.ok_or(DmodError::Parse { pos: 0, msg: "missing 'ring:' line".into() })?;
    Ok((ring, polys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::galgebra::{commutative, weyl};

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn coefficients_and_signs() {
        let r = commutative(&names(&["x", "y"])).unwrap();
        let p = parse_poly("-3/4*x*y + 1", &r).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(render_poly(&p, &r), "-3/4*x*y+1");
    }

    #[test]
    fn parenthesized_exponent_is_rejected() {
        let r = commutative(&names(&["x"])).unwrap();
        assert!(matches!(parse_poly("x^(2)", &r), Err(DmodError::Parse { pos: 2, .. })));
        assert!(matches!(parse_poly("x y", &r), Err(DmodError::Parse { .. })));
        assert!(matches!(parse_poly("1/0", &r), Err(DmodError::Parse { .. })));
        assert!(matches!(parse_poly("z", &r), Err(DmodError::Parse { pos: 0, .. })));
    }

    #[test]
    fn products_follow_the_relations() {
        let d = weyl(&names(&["x"])).unwrap();
        assert_eq!(render_poly(&parse_poly("Dx*x", &d).unwrap(), &d), "x*Dx+1");
    }

    #[test]
    fn reserved_names() {
        assert!(parse_ring("x,y").is_ok());
        for bad in ["s", "x,Dx", "t1", "Dt", "h", "s12", "x,x", "1a"] {
            assert!(parse_ring(bad).is_err(), "{bad}");
        }
        assert!(parse_ring("D").is_ok());
    }

    #[test]
    fn ideal_file() {
        let (ring, polys) = parse_ideal_file("# comment\nring: x,y\nx^2 # square\n\ny-1\n").unwrap();
        assert_eq!(ring, names(&["x", "y"]));
        assert_eq!(polys, vec![(3, "x^2".to_string()), (5, "y-1".to_string())]);
    }
}
