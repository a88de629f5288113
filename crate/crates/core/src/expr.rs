//! Text syntax for polynomials and tensors: `-Z + X*Y`, `1/2*Y^2`,
//! `1@Z + X@Y + Z@1`.
//!
//! Parsing only resolves names and collects words in written order; turning a
//! word into a normal form is the algebra's job.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A product of generator powers, in the order written.
pub type Word = Vec<(usize, u32)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    /// 1-based character column within the parsed text.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ExprError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    At,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Num(s.parse().expect("digits")), col));
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '\u{2212}' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '@' => Tok::At,
            _ => {
                return Err(ExprError {
                    column: col,
                    message: format!("unexpected character `{c}`"),
                })
            }
        };
        toks.push((tok, col));
        i += 1;
    }
    Ok(toks)
}

struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    end: usize,
    names: &'a [String],
    allow_tensor: bool,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(_, c)| *c)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            column: self.col(),
            message: message.into(),
        })
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    /// factor ('*' factor)*, folding numbers into the coefficient.
    fn product(&mut self, coeff: &mut Scalar) -> Result<Word, ExprError> {
        let mut word = Word::new();
        loop {
            match self.bump() {
                Some(Tok::Num(n)) => {
                    let mut value = Scalar::from_integer(n);
                    if self.peek() == Some(&Tok::Slash) {
                        self.pos += 1;
                        match self.bump() {
                            Some(Tok::Num(d)) if !d.is_zero() => value /= Scalar::from_integer(d),
                            Some(Tok::Num(_)) => {
                                self.pos -= 1;
                                return self.err("zero denominator");
                            }
                            _ => {
                                self.pos -= 1;
                                return self.err("expected denominator after `/`");
                            }
                        }
                    }
                    *coeff *= value;
                }
                Some(Tok::Ident(name)) => {
                    let idx = match self.names.iter().position(|n| *n == name) {
                        Some(i) => i,
                        None => {
                            self.pos -= 1;
                            return self.err(format!("undeclared generator `{name}`"));
                        }
                    };
                    let mut exp = 1u32;
                    if self.peek() == Some(&Tok::Caret) {
                        self.pos += 1;
                        match self.bump() {
                            Some(Tok::Num(n)) => {
                                exp = n.try_into().map_err(|_| ExprError {
                                    column: self.col(),
                                    message: "exponent too large".into(),
                                })?
                            }
                            _ => {
                                self.pos -= 1;
                                return self.err("expected integer exponent after `^`");
                            }
                        }
                    }
                    if exp > 0 {
                        word.push((idx, exp));
                    }
                }
                _ => {
                    self.pos -= 1;
                    return self.err("expected a number or generator name");
                }
            }
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else {
                return Ok(word);
            }
        }
    }

    fn terms(&mut self) -> Result<Vec<(Scalar, Vec<Word>)>, ExprError> {
        let mut out = Vec::new();
        let mut sign = Scalar::one();
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -sign;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            None => return self.err("empty expression"),
            _ => {}
        }
        loop {
            let mut coeff = sign.clone();
            let mut legs = vec![self.product(&mut coeff)?];
            while self.peek() == Some(&Tok::At) {
                if !self.allow_tensor {
                    return self.err("tensor syntax not allowed here");
                }
                self.pos += 1;
                legs.push(self.product(&mut coeff)?);
            }
            out.push((coeff, legs));
            match self.bump() {
                None => return Ok(out),
                Some(Tok::Plus) => sign = Scalar::one(),
                Some(Tok::Minus) => sign = -Scalar::one(),
                Some(_) => {
                    self.pos -= 1;
                    return self.err("expected `+` or `-` between terms");
                }
            }
        }
    }
}

fn parser<'a>(text: &str, names: &'a [String], allow_tensor: bool) -> Result<Parser<'a>, ExprError> {
    Ok(Parser {
        toks: lex(text)?,
        pos: 0,
        end: text.chars().count() + 1,
        names,
        allow_tensor,
    })
}

/// Parses a polynomial into `(coefficient, word)` terms.
pub fn parse_poly(text: &str, names: &[String]) -> Result<Vec<(Scalar, Word)>, ExprError> {
    let mut p = parser(text, names, false)?;
    Ok(p.terms()?
        .into_iter()
        .map(|(c, mut legs)| (c, legs.remove(0)))
        .collect())
}

/// Parses a tensor expression; every term must have `arity` legs.
pub fn parse_tensor(
    text: &str,
    names: &[String],
    arity: usize,
) -> Result<Vec<(Scalar, Vec<Word>)>, ExprError> {
    let mut p = parser(text, names, true)?;
    let terms = p.terms()?;
    if let Some((_, legs)) = terms.iter().find(|(_, legs)| legs.len() != arity) {
        return Err(ExprError {
            column: 1,
            message: format!("tensor term has {} legs, expected {arity}", legs.len()),
        });
    }
    Ok(terms)
}

/// Writes a word back in the same syntax (`1` for the empty word).
pub fn format_word(word: &Word, names: &[String]) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    word.iter()
        .map(|&(g, e)| {
            if e == 1 {
                names[g].clone()
            } else {
                format!("{}^{e}", names[g])
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}
