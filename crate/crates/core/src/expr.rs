//! Expression syntax for algebra elements.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := atom ('^' posint)?
//! atom   := int ['/' int] | ('x' | 'y') int | ('x' | 'y') '[' ints ']'
//!         | '(' expr ')' | '[' expr ',' expr ']'
//! ```
//!
//! Whitespace is ignored, operators are left associative, and juxtaposition
//! is an error. `x12` is the single generator with index 12. The word forms
//! `x[1,2]` and `y[2,1]` denote `x_1 x_2` and `y_2 y_1`; together with the
//! leading minus and fractions they let every printed element parse back.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Fraction(BigInt, BigInt),
    Gen(Generator, usize),
    Word(Generator, Vec<usize>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Bracket(Box<Expr>, Box<Expr>),
    Group(Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Gen(Generator),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(i) => write!(f, "integer {i}"),
            Tok::Gen(g) => write!(f, "'{}'", g.symbol()),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Slash => f.write_str("'/'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::Comma => f.write_str("','"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = input.char_indices().peekable();
    while let Some(&(pos, ch)) = chars.peek() {
        let tok = match ch {
            c if c.is_whitespace() => {
                chars.next();
                continue;
            }
            '0'..='9' => {
                let mut end = pos;
                while let Some(&(i, c)) = chars.peek() {
                    if !c.is_ascii_digit() {
                        break;
                    }
                    end = i + c.len_utf8();
                    chars.next();
                }
                out.push((pos, Tok::Int(input[pos..end].parse().expect("digits"))));
                continue;
            }
            'x' => Tok::Gen(Generator::X),
            'y' => Tok::Gen(Generator::Y),
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            other => {
                return Err(ParseError {
                    position: pos,
                    message: format!("unexpected character {other:?}"),
                })
            }
        };
        chars.next();
        out.push((pos, tok));
    }
    out.push((input.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { position: self.pos(), message: message.into() })
    }

    fn expect(&mut self, tok: Tok) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            self.error(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = if *self.peek() == Tok::Minus {
            self.bump();
            Expr::Neg(Box::new(self.term()?))
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let pos = self.pos();
        match self.bump() {
            Tok::Int(e) => match e.to_u32() {
                Some(e) if e >= 1 => Ok(Expr::Pow(Box::new(base), e)),
                _ => Err(ParseError {
                    position: pos,
                    message: format!("exponent must be a positive integer below 2^32, found {e}"),
                }),
            },
            other => Err(ParseError { position: pos, message: format!("expected exponent, found {other}") }),
        }
    }

    fn index(&mut self) -> Result<usize, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(i) => i.to_usize().ok_or(ParseError {
                position: pos,
                message: format!("index {i} too large"),
            }),
            other => Err(ParseError { position: pos, message: format!("expected index, found {other}") }),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Int(a) => {
                if *self.peek() == Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    match self.bump() {
                        Tok::Int(b) => Ok(Expr::Fraction(a, b)),
                        other => Err(ParseError {
                            position: pos,
                            message: format!("expected denominator, found {other}"),
                        }),
                    }
                } else {
                    Ok(Expr::Int(a))
                }
            }
            Tok::Gen(g) => {
                if *self.peek() == Tok::LBracket {
                    self.bump();
                    let mut letters = Vec::new();
                    if *self.peek() != Tok::RBracket {
                        letters.push(self.index()?);
                        while *self.peek() == Tok::Comma {
                            self.bump();
                            letters.push(self.index()?);
                        }
                    }
                    self.expect(Tok::RBracket)?;
                    Ok(Expr::Word(g, letters))
                } else {
                    Ok(Expr::Gen(g, self.index()?))
                }
            }
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen)?;
                Ok(Expr::Group(Box::new(inner)))
            }
            Tok::LBracket => {
                let a = self.expr()?;
                self.expect(Tok::Comma)?;
                let b = self.expr()?;
                self.expect(Tok::RBracket)?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            other => Err(ParseError { position: pos, message: format!("unexpected {other}") }),
        }
    }
}

pub fn parse(input: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(input)?, at: 0 };
    let e = p.expr()?;
    match p.peek() {
        Tok::End => Ok(e),
        other => p.error(format!("expected an operator or end of input, found {other}")),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Level {
    Sum,
    Term,
    Factor,
    Atom,
}

impl Expr {
    fn level(&self) -> Level {
        match self {
            Expr::Add(..) | Expr::Sub(..) | Expr::Neg(..) => Level::Sum,
            Expr::Mul(..) => Level::Term,
            Expr::Pow(..) => Level::Factor,
            _ => Level::Atom,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, need: Level) -> fmt::Result {
        if self.level() < need {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(i) => write!(f, "{i}"),
            Expr::Fraction(a, b) => write!(f, "{a}/{b}"),
            Expr::Gen(g, i) => write!(f, "{}{i}", g.symbol()),
            Expr::Word(g, letters) => {
                write!(f, "{}[", g.symbol())?;
                for (k, l) in letters.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{l}")?;
                }
                f.write_str("]")
            }
            Expr::Neg(e) => {
                f.write_str("-")?;
                e.write_at(f, Level::Term)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                a.fmt(f)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                b.write_at(f, Level::Term)
            }
            Expr::Mul(a, b) => {
                a.write_at(f, Level::Term)?;
                f.write_str("*")?;
                b.write_at(f, Level::Factor)
            }
            Expr::Pow(b, e) => {
                b.write_at(f, Level::Atom)?;
                write!(f, "^{e}")
            }
            Expr::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            Expr::Group(e) => write!(f, "({e})"),
        }
    }
}
