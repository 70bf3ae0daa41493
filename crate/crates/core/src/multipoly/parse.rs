//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := ['-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := base ['^' UINT]
//! base   := INT | VAR | '(' expr ')'
//! VAR    := 'x' UINT
//! ```
//!
//! Whitespace is ignored. Positions in errors are byte offsets into the source.

use std::str::FromStr;

use num_bigint::BigInt;
use thiserror::Error;

use super::polynomial::Polynomial;
use crate::exactmath::{Field, Scalar};

/// Largest total degree an expression may reach.
pub const MAX_DEGREE: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable x{index} at position {position} (ring has {nvars} variables)")]
    UnknownVariable { position: usize, index: String, nvars: usize },
    #[error("exponent overflow at position {position}: degree would exceed {MAX_DEGREE}")]
    ExponentOverflow { position: usize },
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Var(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let digits = |mut j: usize| {
        while j < bytes.len() && bytes[j].is_ascii_digit() {
            j += 1;
        }
        j
    };
    while i < bytes.len() {
        let c = bytes[i];
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                let end = digits(i);
                out.push((Tok::Int(src[i..end].to_string()), i));
                i = end;
                continue;
            }
            b'x' => {
                let end = digits(i + 1);
                if end == i + 1 {
                    return Err(ParseError::Syntax {
                        position: i,
                        message: "expected a variable index after 'x'".into(),
                    });
                }
                out.push((Tok::Var(src[i + 1..end].to_string()), i));
                i = end;
                continue;
            }
            _ => {
                let ch = src[i..].chars().next().unwrap_or('?');
                return Err(ParseError::Syntax {
                    position: i,
                    message: format!("unexpected character {ch:?}"),
                });
            }
        };
        out.push((tok, i));
        i += 1;
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    nvars: usize,
    field: Field,
}

type Parsed = (Polynomial, u64);

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn syntax<T>(&self, message: &str) -> Result<T, ParseError> {
        Err(ParseError::Syntax { position: self.offset(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Parsed, ParseError> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let (first, mut deg) = self.term()?;
        let mut acc = if negate { -&first } else { first };
        loop {
            let sub = match self.peek() {
                Tok::Plus => false,
                Tok::Minus => true,
                _ => break,
            };
            self.bump();
            let (t, d) = self.term()?;
            deg = deg.max(d);
            acc = if sub { &acc - &t } else { &acc + &t };
        }
        Ok((acc, deg))
    }

    fn term(&mut self) -> Result<Parsed, ParseError> {
        let start = self.offset();
        let (mut acc, mut deg) = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            let (f, d) = self.factor()?;
            deg += d;
            if deg > MAX_DEGREE {
                return Err(ParseError::ExponentOverflow { position: start });
            }
            acc = &acc * &f;
        }
        Ok((acc, deg))
    }

    fn factor(&mut self) -> Result<Parsed, ParseError> {
        let (base, deg) = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok((base, deg));
        }
        self.bump();
        let (tok, at) = self.bump();
        let Tok::Int(digits) = tok else {
            self.pos -= 1;
            return self.syntax("expected an unsigned integer exponent after '^'");
        };
        let e: u64 = digits.parse().map_err(|_| ParseError::ExponentOverflow { position: at })?;
        let total = deg.checked_mul(e).filter(|&t| t <= MAX_DEGREE && e <= MAX_DEGREE);
        let Some(total) = total else {
            return Err(ParseError::ExponentOverflow { position: at });
        };
        Ok((base.pow(e as u32), total))
    }

    fn base(&mut self) -> Result<Parsed, ParseError> {
        let at = self.offset();
        match self.peek().clone() {
            Tok::Int(digits) => {
                self.bump();
                let v = BigInt::from_str(&digits).expect("digit string");
                Ok((Polynomial::constant(self.nvars, Scalar::from_bigint(self.field, &v)), 0))
            }
            Tok::Var(index) => {
                self.bump();
                match index.parse::<usize>() {
                    Ok(i) if i < self.nvars => Ok((Polynomial::var(self.nvars, self.field, i), 1)),
                    _ => Err(ParseError::UnknownVariable { position: at, index, nvars: self.nvars }),
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.syntax("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => self.syntax("unexpected end of input"),
            _ => self.syntax("expected a number, a variable or '('"),
        }
    }
}

/// Parses `source` into a polynomial in `x0..x{num_vars-1}` over `field`.
pub fn parse_polynomial(source: &str, num_vars: usize, field: Field) -> Result<Polynomial, ParseError> {
    let toks = tokenize(source)?;
    let mut p = Parser { toks, pos: 0, nvars: num_vars, field };
    let (poly, _) = p.expr()?;
    if *p.peek() != Tok::End {
        return p.syntax("unexpected trailing input");
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(s: &str) -> Result<Polynomial, ParseError> {
        parse_polynomial(s, 4, Field::Rational)
    }

    #[test]
    fn quadric_equation() {
        let g = parse("x0*x3 - x1*x2").unwrap();
        assert!(g.is_homogeneous());
        assert_eq!(g.len(), 2);
        assert_eq!(g.to_string(), "-x1*x2 + x0*x3");
    }

    #[test]
    fn zero_and_identities() {
        assert!(parse("0").unwrap().is_zero());
        let p = parse("(x0 + x1)^2 - x0^2 - 2*x0*x1").unwrap();
        assert_eq!(p, parse("x1^2").unwrap());
        assert_eq!(parse("-(x0 - x1)").unwrap(), parse("x1 - x0").unwrap());
        assert_eq!(parse(" 3 * x2 ^ 0 ").unwrap().to_string(), "3");
    }

    #[test]
    fn prime_field_reduces_integers() {
        let p = parse_polynomial("7*x0 + 9*x1", 2, Field::Prime(7)).unwrap();
        assert_eq!(p.to_string(), "2*x1");
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(
            parse("x0 + x7"),
            Err(ParseError::UnknownVariable { position: 5, index: "7".into(), nvars: 4 })
        );
        assert!(matches!(parse("x0 + "), Err(ParseError::Syntax { position: 5, .. })));
        assert!(matches!(parse("x0 * -x1"), Err(ParseError::Syntax { position: 5, .. })));
        assert!(matches!(parse("x0^x1"), Err(ParseError::Syntax { position: 3, .. })));
        assert!(matches!(parse("x0^2^2"), Err(ParseError::Syntax { position: 4, .. })));
        assert!(matches!(parse("(x0"), Err(ParseError::Syntax { position: 3, .. })));
        assert!(matches!(parse("x"), Err(ParseError::Syntax { position: 0, .. })));
        assert!(matches!(parse("x0 % 2"), Err(ParseError::Syntax { position: 3, .. })));
        assert!(matches!(parse("x0^99999999999"), Err(ParseError::ExponentOverflow { position: 3 })));
        assert!(matches!(parse("(x0^60000)^2"), Err(ParseError::ExponentOverflow { .. })));
    }

    fn small_poly() -> impl Strategy<Value = String> {
        let term = (0i64..6, proptest::collection::vec(0u32..3, 3)).prop_map(|(c, e)| {
            let mut s = format!("{c}");
            for (i, k) in e.iter().enumerate() {
                if *k > 0 {
                    s.push_str(&format!("*x{i}^{k}"));
                }
            }
            s
        });
        let signed = (any::<bool>(), term).prop_map(|(neg, t)| (if neg { " - " } else { " + " }, t));
        proptest::collection::vec(signed, 1..5).prop_map(|ts| {
            let mut out = String::new();
            for (i, (sign, t)) in ts.into_iter().enumerate() {
                if i == 0 {
                    out.push_str(sign.trim_start().trim_start_matches('+').trim_start());
                } else {
                    out.push_str(sign);
                }
                out.push_str(&t);
            }
            out
        })
    }

    proptest! {
        #[test]
        fn print_parse_fixed_point(src in small_poly()) {
            let p = parse_polynomial(&src, 3, Field::Rational).unwrap();
            let printed = p.to_string();
            let q = parse_polynomial(&printed, 3, Field::Rational).unwrap();
            prop_assert_eq!(&p, &q);
            prop_assert_eq!(q.to_string(), printed);
        }
    }
}
