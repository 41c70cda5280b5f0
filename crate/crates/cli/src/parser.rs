//! Recursive-descent parsers for variety and bundle expressions.
//!
//! ```text
//! variety := "P(" INT ")" | "CI(" INT ";" INT ("," INT)* ")"
//! expr    := term (("+" | "-") term)*
//! term    := atom ("*" atom)*
//! atom    := "O(" twist ")" | "Omega" | "T" | "K"
//!          | "Jet(" INT "," expr ")" | "Sym(" INT "," expr ")"
//!          | "dual(" expr ")" | "det(" expr ")" | "(" expr ")"
//! twist   := ["+" | "-"] INT | "N" [("+" | "-") INT]
//! ```
//!
//! Whitespace is ignored between tokens. Errors carry a byte offset into the
//! input.

use std::fmt;

use indexcalc::operator::MAX_ORDER;
use indexcalc::CompleteIntersection;
use thiserror::Error;

use crate::ast::{BundleExpr, Twist};

pub const MAX_SYM: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    Unexpected {
        expected: Vec<&'static str>,
        found: String,
    },
    Invalid(String),
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Unexpected { expected, found } => {
                let list: Vec<String> = expected.iter().map(|e| format!("`{e}`")).collect();
                if list.len() == 1 {
                    write!(f, "expected {}, found {found}", list[0])
                } else {
                    write!(f, "expected one of {}, found {found}", list.join(", "))
                }
            }
            ParseErrorKind::Invalid(msg) => f.write_str(msg),
        }
    }
}

/// Either a syntax error or a well-formed variety that fails validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VarietyError {
    #[error("{0}")]
    Syntax(ParseError),
    #[error("{0}")]
    Invalid(indexcalc::Error),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(u64),
    Sym(char),
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    /// Offset and value of the next token, without consuming it.
    fn peek(&mut self) -> Result<(usize, Tok, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let Some(c) = rest.chars().next() else {
            return Ok((start, Tok::End, start));
        };
        if c.is_ascii_alphabetic() {
            let len = rest
                .find(|ch: char| !ch.is_ascii_alphanumeric() && ch != '_')
                .unwrap_or(rest.len());
            return Ok((start, Tok::Ident(rest[..len].to_string()), start + len));
        }
        if c.is_ascii_digit() {
            let len = rest.find(|ch: char| !ch.is_ascii_digit()).unwrap_or(rest.len());
            let value = rest[..len].parse().map_err(|_| ParseError {
                offset: start,
                kind: ParseErrorKind::Invalid(format!("integer `{}` is out of range", &rest[..len])),
            })?;
            return Ok((start, Tok::Int(value), start + len));
        }
        if "()+-*,;".contains(c) {
            return Ok((start, Tok::Sym(c), start + 1));
        }
        Err(ParseError {
            offset: start,
            kind: ParseErrorKind::Invalid(format!("unexpected character `{c}`")),
        })
    }

    fn next(&mut self) -> Result<(usize, Tok), ParseError> {
        let (start, tok, end) = self.peek()?;
        self.pos = end;
        Ok((start, tok))
    }

    fn unexpected<T>(&self, offset: usize, expected: &[&'static str], found: &Tok) -> Result<T, ParseError> {
        Err(ParseError {
            offset,
            kind: ParseErrorKind::Unexpected {
                expected: expected.to_vec(),
                found: found.describe(),
            },
        })
    }

    fn expect_sym(&mut self, c: char, name: &'static str) -> Result<(), ParseError> {
        match self.next()? {
            (_, Tok::Sym(got)) if got == c => Ok(()),
            (at, tok) => self.unexpected(at, &[name], &tok),
        }
    }

    fn expect_int(&mut self) -> Result<(usize, u64), ParseError> {
        match self.next()? {
            (at, Tok::Int(n)) => Ok((at, n)),
            (at, tok) => self.unexpected(at, &["integer"], &tok),
        }
    }

    fn expect_end(&mut self, expected: &[&'static str]) -> Result<(), ParseError> {
        match self.next()? {
            (_, Tok::End) => Ok(()),
            (at, tok) => self.unexpected(at, expected, &tok),
        }
    }

    fn small_int(&mut self, what: &str) -> Result<u32, ParseError> {
        let (at, n) = self.expect_int()?;
        u32::try_from(n).map_err(|_| ParseError {
            offset: at,
            kind: ParseErrorKind::Invalid(format!("{what} `{n}` is out of range")),
        })
    }

    fn signed_int(&mut self, negative: bool) -> Result<i64, ParseError> {
        let (at, n) = self.expect_int()?;
        let value = i64::try_from(n).map_err(|_| ParseError {
            offset: at,
            kind: ParseErrorKind::Invalid(format!("integer `{n}` is out of range")),
        })?;
        Ok(if negative { -value } else { value })
    }

    fn variety(&mut self) -> Result<(u32, Vec<u32>), ParseError> {
        let (at, head) = self.next()?;
        let ci = match &head {
            Tok::Ident(s) if s == "P" => false,
            Tok::Ident(s) if s == "CI" => true,
            _ => return self.unexpected(at, &["P", "CI"], &head),
        };
        self.expect_sym('(', "(")?;
        let ambient = self.small_int("ambient dimension")?;
        let mut degrees = Vec::new();
        if ci {
            self.expect_sym(';', ";")?;
            degrees.push(self.small_int("degree")?);
            loop {
                match self.next()? {
                    (_, Tok::Sym(',')) => degrees.push(self.small_int("degree")?),
                    (_, Tok::Sym(')')) => break,
                    (at, tok) => return self.unexpected(at, &[",", ")"], &tok),
                }
            }
        } else {
            self.expect_sym(')', ")")?;
        }
        self.expect_end(&["end of input"])?;
        Ok((ambient, degrees))
    }

    fn expr(&mut self) -> Result<BundleExpr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek()? {
                (_, Tok::Sym('+'), end) => {
                    self.pos = end;
                    lhs = BundleExpr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                (_, Tok::Sym('-'), end) => {
                    self.pos = end;
                    lhs = BundleExpr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<BundleExpr, ParseError> {
        let mut lhs = self.atom()?;
        while let (_, Tok::Sym('*'), end) = self.peek()? {
            self.pos = end;
            lhs = BundleExpr::Mul(Box::new(lhs), Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<BundleExpr, ParseError> {
        const ATOMS: &[&str] = &["O", "Omega", "T", "K", "Jet", "Sym", "dual", "det", "("];
        let (at, tok) = self.next()?;
        let name = match &tok {
            Tok::Sym('(') => {
                let inner = self.expr()?;
                self.expect_sym(')', ")")?;
                return Ok(inner);
            }
            Tok::Ident(name) => name.as_str(),
            _ => return self.unexpected(at, ATOMS, &tok),
        };
        match name {
            "Omega" => Ok(BundleExpr::Omega),
            "T" => Ok(BundleExpr::Tangent),
            "K" => Ok(BundleExpr::Canonical),
            "O" => {
                self.expect_sym('(', "(")?;
                let twist = self.twist()?;
                self.expect_sym(')', ")")?;
                Ok(BundleExpr::Line(twist))
            }
            "Jet" | "Sym" => {
                let is_jet = name == "Jet";
                self.expect_sym('(', "(")?;
                self.skip_ws();
                let order_at = self.pos;
                let order = self.small_int("order")?;
                let cap = if is_jet { MAX_ORDER } else { MAX_SYM };
                if order > cap {
                    return Err(ParseError {
                        offset: order_at,
                        kind: ParseErrorKind::Invalid(format!(
                            "{name} order {order} exceeds the maximum of {cap}"
                        )),
                    });
                }
                self.expect_sym(',', ",")?;
                let inner = Box::new(self.expr()?);
                self.expect_sym(')', ")")?;
                Ok(if is_jet {
                    BundleExpr::Jet(order, inner)
                } else {
                    BundleExpr::Sym(order, inner)
                })
            }
            "dual" | "det" => {
                self.expect_sym('(', "(")?;
                let inner = Box::new(self.expr()?);
                self.expect_sym(')', ")")?;
                Ok(if name == "dual" {
                    BundleExpr::Dual(inner)
                } else {
                    BundleExpr::Det(inner)
                })
            }
            _ => self.unexpected(at, ATOMS, &tok),
        }
    }

    fn twist(&mut self) -> Result<Twist, ParseError> {
        let (at, tok, end) = self.peek()?;
        match tok {
            Tok::Sym(c @ ('+' | '-')) => {
                self.pos = end;
                Ok(Twist::constant(self.signed_int(c == '-')?))
            }
            Tok::Int(_) => Ok(Twist::constant(self.signed_int(false)?)),
            Tok::Ident(ref s) if s == "N" => {
                self.pos = end;
                match self.peek()? {
                    (_, Tok::Sym(c @ ('+' | '-')), end) => {
                        self.pos = end;
                        Ok(Twist::n_plus(self.signed_int(c == '-')?))
                    }
                    _ => Ok(Twist::n_plus(0)),
                }
            }
            _ => self.unexpected(at, &["N", "integer", "-"], &tok),
        }
    }
}

pub fn parse_variety(text: &str) -> Result<CompleteIntersection, VarietyError> {
    let (ambient, degrees) = Parser::new(text).variety().map_err(VarietyError::Syntax)?;
    CompleteIntersection::new(ambient, degrees).map_err(VarietyError::Invalid)
}

pub fn parse_bundle(text: &str) -> Result<BundleExpr, ParseError> {
    let mut p = Parser::new(text);
    let expr = p.expr()?;
    p.expect_end(&["+", "-", "*", "end of input"])?;
    Ok(expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line(t: Twist) -> Box<BundleExpr> {
        Box::new(BundleExpr::Line(t))
    }

    #[test]
    fn varieties() {
        let x = parse_variety("CI(3;2,2)").unwrap();
        assert_eq!((x.ambient_dim(), x.multidegrees(), x.dim()), (3, &[2, 2][..], 1));
        assert_eq!(x.degree().to_string(), "4");
        let p = parse_variety(" P( 4 ) ").unwrap();
        assert_eq!((p.ambient_dim(), p.dim()), (4, 4));
        assert!(matches!(parse_variety("CI(2;3,3)"), Err(VarietyError::Invalid(_))));
    }

    #[test]
    fn variety_syntax_errors() {
        let err = |s| match parse_variety(s) {
            Err(VarietyError::Syntax(e)) => e,
            other => panic!("{other:?}"),
        };
        assert_eq!(err("CI(3;2,2").offset, 8);
        assert_eq!(err("Q(3)").offset, 0);
        assert_eq!(err("CI(3)").offset, 4);
        assert_eq!(err("P(3) x").offset, 5);
        assert_eq!(
            err("CI(3;2 2)").to_string(),
            "at byte 7: expected one of `,`, `)`, found `2`"
        );
    }

    #[test]
    fn bundles() {
        assert_eq!(
            parse_bundle("Jet(1, O(0)) - O(0)").unwrap(),
            BundleExpr::Sub(Box::new(BundleExpr::Jet(1, line(Twist::constant(0)))), line(Twist::constant(0)))
        );
        assert_eq!(
            parse_bundle("O(N+2)*dual(Omega)").unwrap(),
            BundleExpr::Mul(line(Twist::n_plus(2)), Box::new(BundleExpr::Dual(Box::new(BundleExpr::Omega))))
        );
        assert_eq!(parse_bundle("O(-3)").unwrap(), *line(Twist::constant(-3)));
        assert_eq!(parse_bundle("O( N - 1 )").unwrap(), *line(Twist::n_plus(-1)));
        assert_eq!(parse_bundle("(K)").unwrap(), BundleExpr::Canonical);
    }

    #[test]
    fn precedence_and_associativity() {
        let e = parse_bundle("T + Omega * K - T").unwrap();
        let expected = BundleExpr::Sub(
            Box::new(BundleExpr::Add(
                Box::new(BundleExpr::Tangent),
                Box::new(BundleExpr::Mul(Box::new(BundleExpr::Omega), Box::new(BundleExpr::Canonical))),
            )),
            Box::new(BundleExpr::Tangent),
        );
        assert_eq!(e, expected);
    }

    #[test]
    fn order_caps() {
        let e = parse_bundle("Sym(4, T)").unwrap_err();
        assert_eq!(e.offset, 4);
        assert!(e.to_string().contains("exceeds the maximum of 3"));
        assert!(parse_bundle("Jet(4, T)").is_err());
        assert!(parse_bundle("Sym(3, T)").is_ok());
    }

    #[test]
    fn bundle_syntax_errors() {
        let e = parse_bundle("O(N+2) *").unwrap_err();
        assert_eq!(e.offset, 8);
        assert!(e.to_string().contains("found end of input"));
        let e = parse_bundle("Omegaa").unwrap_err();
        assert_eq!(e.offset, 0);
        let e = parse_bundle("O(N^2)").unwrap_err();
        assert_eq!(e.offset, 3);
        let e = parse_bundle("O(2N)").unwrap_err();
        assert_eq!(e.offset, 3);
        let e = parse_bundle("T $").unwrap_err();
        assert_eq!(e.to_string(), "at byte 2: unexpected character `$`");
    }
}
