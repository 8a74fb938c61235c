//! Text grammar for polynomials and instance files.
//!
//! Grammar: integer or rational literals (`a/b`, no spaces around the slash),
//! identifiers from the ring context, `+ - * ^`, parentheses, unary minus.
//! Products need an explicit `*`; exponents are nonnegative integers.
//! Printing is deterministic and the output re-parses to the same polynomial.

use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::{Context, Integer, Monomial, MonomialOrder, Polynomial, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Number(r) => write!(f, "number {r}"),
            Token::Ident(s) => write!(f, "identifier {s}"),
            Token::Plus => f.write_str("'+'"),
            Token::Minus => f.write_str("'-'"),
            Token::Star => f.write_str("'*'"),
            Token::Caret => f.write_str("'^'"),
            Token::LParen => f.write_str("'('"),
            Token::RParen => f.write_str("')'"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\r' | '\n' => i += 1,
            '+' => {
                tokens.push((i, Token::Plus));
                i += 1;
            }
            '-' => {
                tokens.push((i, Token::Minus));
                i += 1;
            }
            '*' => {
                tokens.push((i, Token::Star));
                i += 1;
            }
            '^' => {
                tokens.push((i, Token::Caret));
                i += 1;
            }
            '(' => {
                tokens.push((i, Token::LParen));
                i += 1;
            }
            ')' => {
                tokens.push((i, Token::RParen));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: Integer = text[start..i].parse().expect("digits");
                // rational literal a/b, slash directly after the digits
                if i < bytes.len() && bytes[i] == b'/' {
                    let slash = i;
                    i += 1;
                    let dstart = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if dstart == i {
                        return err(slash, "expected digits after '/' in rational literal");
                    }
                    let denom: Integer = text[dstart..i].parse().expect("digits");
                    if denom.is_zero() {
                        return err(dstart, "zero denominator in rational literal");
                    }
                    tokens.push((start, Token::Number(Rational::new(numer, denom))));
                } else {
                    tokens.push((start, Token::Number(Rational::from_integer(numer))));
                }
            }
            'a'..='z' | 'A'..='Z' | '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => return err(i, format!("unexpected character '{c}'")),
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    ctx: &'a Context,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Token)> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<(usize, Token)> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: &Token) -> Result<(), ParseError> {
        match self.next() {
            Some((_, t)) if &t == want => Ok(()),
            Some((p, t)) => err(p, format!("expected {want}, found {t}")),
            None => err(self.end, format!("expected {want}, found end of input")),
        }
    }

    // expr := term (('+'|'-') term)*
    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.term()?;
        while let Some((_, t)) = self.peek() {
            match t {
                Token::Plus => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Token::Minus => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    // term := factor ('*' factor)*
    fn term(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while let Some((_, Token::Star)) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    // factor := '-' factor | power
    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        if let Some((_, Token::Minus)) = self.peek() {
            self.pos += 1;
            return Ok(self.factor()?.neg());
        }
        self.power()
    }

    // power := atom ('^' nat)?
    fn power(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.atom()?;
        if let Some((_, Token::Caret)) = self.peek() {
            self.pos += 1;
            let (p, tok) = match self.next() {
                Some(t) => t,
                None => return err(self.end, "expected exponent, found end of input"),
            };
            match tok {
                Token::Number(r) => {
                    if !r.is_integer() || r.is_negative() {
                        return err(p, "exponent must be a nonnegative integer");
                    }
                    let e: u32 = r.to_integer().try_into().map_err(|_| ParseError {
                        position: p,
                        message: "exponent too large".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                other => {
                    return err(
                        p,
                        format!("exponent must be a nonnegative integer, found {other}"),
                    )
                }
            }
        }
        Ok(base)
    }

    // atom := number | ident | '(' expr ')'
    fn atom(&mut self) -> Result<Polynomial, ParseError> {
        match self.next() {
            Some((_, Token::Number(r))) => Ok(Polynomial::constant(self.ctx, r)),
            Some((p, Token::Ident(name))) => match self.ctx.var_index(&name) {
                Some(i) => Ok(Polynomial::variable(self.ctx, i)),
                None => err(p, format!("unknown variable '{name}'")),
            },
            Some((_, Token::LParen)) => {
                let inner = self.expr()?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            Some((p, t)) => err(p, format!("expected a term, found {t}")),
            None => err(self.end, "expected a term, found end of input"),
        }
    }
}

/// Parses `text` into an exact polynomial over `ctx`, expanding all products
/// and parenthesized powers.
pub fn parse_polynomial(text: &str, ctx: &Context) -> Result<Polynomial, ParseError> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return err(0, "empty input");
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        ctx,
        end: text.len(),
    };
    let poly = parser.expr()?;
    if let Some((p, t)) = parser.peek() {
        return err(*p, format!("unexpected {t} after expression"));
    }
    Ok(poly)
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn format_monomial(m: &Monomial, ctx: &Context) -> String {
    let factors: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                ctx.var_name(i).to_string()
            } else {
                format!("{}^{}", ctx.var_name(i), e)
            }
        })
        .collect();
    factors.join("*")
}

/// Deterministic printer: terms in strictly decreasing `order`, coefficients
/// in lowest terms. The output re-parses to the same polynomial.
pub fn print_polynomial(p: &Polynomial, order: MonomialOrder) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let ctx = p.context();
    let mut out = String::new();
    for (k, (m, c)) in p.sorted_terms(order).into_iter().enumerate() {
        let neg = c.is_negative();
        let mag = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(m, ctx);
        if mono.is_empty() {
            out.push_str(&format_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rational(&mag));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}

/// A parsed instance file: a ring plus named generator polynomials and an
/// optional explicit sum (`g = ...` line). When no sum line is present the
/// instance's target polynomial is the sum of squares of the generators.
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub context: Context,
    pub generators: Vec<(String, Polynomial)>,
    pub explicit_sum: Option<Polynomial>,
}

/// Parses the instance file format: a `vars: n=<k>` header, then lines
/// `p<i> = <polynomial>` (and optionally `g = <polynomial>`). Blank lines and
/// `#` comments are ignored.
pub fn parse_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut context: Option<Context> = None;
    let mut generators: Vec<(String, Polynomial)> = Vec::new();
    let mut explicit_sum: Option<Polynomial> = None;
    let mut offset = 0usize;

    for line in text.split('\n') {
        let line_start = offset;
        offset += line.len() + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("vars:") {
            if context.is_some() {
                return err(line_start, "duplicate vars header");
            }
            let rest = rest.trim();
            let Some(count) = rest.strip_prefix("n=") else {
                return err(line_start, "vars header must look like 'vars: n=<k>'");
            };
            let n: usize = count.trim().parse().map_err(|_| ParseError {
                position: line_start,
                message: format!("bad variable count '{count}'"),
            })?;
            if n == 0 {
                return err(line_start, "variable count must be positive");
            }
            context = Some(crate::poly::RingContext::new(n));
            continue;
        }
        let Some(ctx) = context.as_ref() else {
            return err(
                line_start,
                "expected 'vars: n=<k>' header before polynomial lines",
            );
        };
        let Some(eq) = line.find('=') else {
            return err(line_start, "expected '<name> = <polynomial>'");
        };
        let name = line[..eq].trim().to_string();
        let body = &line[eq + 1..];
        let poly = parse_polynomial(body, ctx).map_err(|e| ParseError {
            position: line_start + eq + 1 + e.position,
            message: e.message,
        })?;
        if name == "g" {
            if explicit_sum.is_some() {
                return err(line_start, "duplicate 'g =' line");
            }
            explicit_sum = Some(poly);
        } else if name.starts_with('p')
            && name[1..].chars().all(|c| c.is_ascii_digit())
            && name.len() > 1
        {
            generators.push((name, poly));
        } else {
            return err(
                line_start,
                format!("unexpected line name '{name}' (want p<i> or g)"),
            );
        }
    }

    match context {
        None => err(text.len(), "missing 'vars: n=<k>' header"),
        Some(context) => {
            if generators.is_empty() {
                return err(text.len(), "instance declares no generators");
            }
            Ok(InstanceFile {
                context,
                generators,
                explicit_sum,
            })
        }
    }
}
