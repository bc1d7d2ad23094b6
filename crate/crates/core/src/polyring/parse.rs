//! Parser for the polynomial text grammar.
//!
//! Accepts sums and products of integers, `a/b`, `j` (bound to ζ_N of the ambient
//! order), variables `x3`, `x_3` or `z[3]`, powers `^k`, parentheses, and
//! juxtaposition as multiplication (`3 x0^2 (x1 + x2)`).

use super::{MultiPoly, PolyError};
use crate::exactnum::{zeta, Cyclotomic};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(u64),
    Var(usize),
    J,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn err(pos: usize, msg: impl Into<String>) -> PolyError {
    PolyError::Parse {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, PolyError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |i: &mut usize| -> Option<u64> {
        let s = *i;
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        src[s..*i].parse().ok()
    };
    while i < b.len() {
        let c = b[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let v = digits(&mut i).ok_or_else(|| err(start, "integer too large"))?;
                out.push((start, Tok::Int(v)));
                continue;
            }
            b'x' => {
                i += 1;
                if i < b.len() && b[i] == b'_' {
                    i += 1;
                }
                let v = digits(&mut i).ok_or_else(|| err(start, "expected variable index"))?;
                out.push((start, Tok::Var(v as usize)));
                continue;
            }
            b'z' => {
                i += 1;
                if i >= b.len() || b[i] != b'[' {
                    return Err(err(start, "expected '[' after z"));
                }
                i += 1;
                let v = digits(&mut i).ok_or_else(|| err(start, "expected variable index"))?;
                if i >= b.len() || b[i] != b']' {
                    return Err(err(i, "expected ']'"));
                }
                i += 1;
                out.push((start, Tok::Var(v as usize)));
                continue;
            }
            b'j' => out.push((start, Tok::J)),
            b'+' => out.push((start, Tok::Plus)),
            b'-' => out.push((start, Tok::Minus)),
            b'*' => out.push((start, Tok::Star)),
            b'/' => out.push((start, Tok::Slash)),
            b'^' => out.push((start, Tok::Caret)),
            b'(' | b'[' => out.push((start, Tok::LParen)),
            b')' | b']' => out.push((start, Tok::RParen)),
            _ => return Err(err(start, format!("unexpected character '{}'", c as char))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    nvars: usize,
    order: u32,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(_, t)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Var(_)) | Some(Tok::J) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<MultiPoly, PolyError> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Some(Tok::Slash) => {
                    self.bump();
                    let p = self.pos();
                    let d = self.power()?;
                    let c = d
                        .as_constant()
                        .ok_or_else(|| err(p, "divisor must be constant"))?;
                    let inv = c.inv().map_err(|_| err(p, "division by zero"))?;
                    acc = acc.scale(&inv);
                }
                _ if self.starts_factor() => acc = &acc * &self.power()?,
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly, PolyError> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                Ok(-self.unary()?)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly, PolyError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let p = self.pos();
            match self.bump() {
                Some(Tok::Int(k)) if k <= 64 => Ok(base.pow(k as u32)),
                _ => Err(err(p, "expected small integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly, PolyError> {
        let p = self.pos();
        match self.bump() {
            Some(Tok::Int(v)) => Ok(MultiPoly::constant(
                self.nvars,
                Cyclotomic::from_rational(num_bigint::BigInt::from(v).into()),
            )),
            Some(Tok::Var(i)) if i < self.nvars => Ok(MultiPoly::var(self.nvars, i)),
            Some(Tok::Var(i)) => Err(err(p, format!("variable x{i} out of range"))),
            Some(Tok::J) => {
                let z = zeta(self.order, 1).map_err(|e| err(p, e.to_string()))?;
                Ok(MultiPoly::constant(self.nvars, z))
            }
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => Err(err(self.pos(), "expected ')'")),
                }
            }
            Some(t) => Err(err(p, format!("unexpected token {t:?}"))),
            None => Err(err(p, "unexpected end of input")),
        }
    }
}

/// Parse a polynomial in `nvars` variables; `j` denotes ζ_order.
pub fn parse_poly(src: &str, nvars: usize, order: u32) -> Result<MultiPoly, PolyError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        nvars,
        order,
        end: src.len(),
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return Err(err(p.pos(), "trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use proptest::prelude::*;

    #[test]
    fn grammar_basics() {
        let p = parse_poly("3*x0^2*x1 + (j^2)*x2", 3, 3).unwrap();
        assert_eq!(p.render_in(3), "3*x0^2*x1 + (j^2)*x2");
        let q = parse_poly("1/2 x_0 - z[1]", 2, 1).unwrap();
        assert_eq!(q.coeff(&[1, 0]), Cyclotomic::from_rational(rat(1, 2)));
        assert_eq!(q.coeff(&[0, 1]), Cyclotomic::from_int(-1));
        let r = parse_poly("3 z[0]^4 (z[1]^2 + 2 z[0] z[1])", 2, 1).unwrap();
        assert_eq!(r.num_terms(), 2);
        let s = parse_poly("1 + j + j^2", 1, 3).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_poly("x5", 3, 1), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("(x0", 3, 1), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x0 ? x1", 3, 1), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("x0/x1", 3, 1), Err(PolyError::Parse { .. })));
        assert!(matches!(parse_poly("1/0", 3, 1), Err(PolyError::Parse { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn render_parse_round_trip(
            ts in prop::collection::vec((prop::collection::vec(0u32..=3, 3), -6i64..=6, 1i64..=3, 0i64..6), 0..6)
        ) {
            let p = MultiPoly::from_terms(3, ts.into_iter().map(|(e, a, b, k)| {
                let c = &Cyclotomic::from_rational(rat(a, b)) * &crate::exactnum::zeta(6, k).unwrap();
                (e, c)
            }));
            let back = parse_poly(&p.render_in(6), 3, 6).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
