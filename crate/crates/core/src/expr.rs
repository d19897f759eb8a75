//! Graph expressions built from complete graphs `K<n>` by disjoint union
//! (`+`), join (`*`), repetition (`m G`) and complement (`~`).
//!
//! Grammar, whitespace-insensitive between tokens:
//!
//! ```text
//! expr  := union ;
//! union := join { "+" join } ;
//! join  := rep { "*" rep } ;
//! rep   := [ INT ] atom ;
//! atom  := "K" INT | "~" atom | "(" expr ")" ;
//! ```
//!
//! Both binary operators are left-associative; repetition binds tightest.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest vertex count an expression may denote.
pub const MAX_ORDER: u64 = 1 << 32;

/// Deepest parenthesis / complement nesting the parser accepts.
pub const MAX_DEPTH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    Complete(u64),
    Union(Box<GraphExpr>, Box<GraphExpr>),
    Join(Box<GraphExpr>, Box<GraphExpr>),
    Repeat(u64, Box<GraphExpr>),
    Complement(Box<GraphExpr>),
}

impl GraphExpr {
    /// `K_n`. Panics when `n` is zero.
    pub fn complete(n: u64) -> Self {
        assert!(n >= 1, "K_n needs at least one vertex");
        GraphExpr::Complete(n)
    }

    pub fn union(left: GraphExpr, right: GraphExpr) -> Self {
        GraphExpr::Union(Box::new(left), Box::new(right))
    }

    pub fn join(left: GraphExpr, right: GraphExpr) -> Self {
        GraphExpr::Join(Box::new(left), Box::new(right))
    }

    /// `m` disjoint copies of `inner`. Panics when `m` is zero.
    pub fn repeat(m: u64, inner: GraphExpr) -> Self {
        assert!(m >= 1, "repetition count must be positive");
        GraphExpr::Repeat(m, Box::new(inner))
    }

    pub fn complement(inner: GraphExpr) -> Self {
        GraphExpr::Complement(Box::new(inner))
    }

    pub fn order(&self) -> u64 {
        match self {
            GraphExpr::Complete(n) => *n,
            GraphExpr::Union(l, r) | GraphExpr::Join(l, r) => l.order() + r.order(),
            GraphExpr::Repeat(m, e) => m * e.order(),
            GraphExpr::Complement(e) => e.order(),
        }
    }

    /// Like [`order`](Self::order) but `None` on `u64` overflow.
    pub fn checked_order(&self) -> Option<u64> {
        match self {
            GraphExpr::Complete(n) => Some(*n),
            GraphExpr::Union(l, r) | GraphExpr::Join(l, r) => {
                l.checked_order()?.checked_add(r.checked_order()?)
            }
            GraphExpr::Repeat(m, e) => m.checked_mul(e.checked_order()?),
            GraphExpr::Complement(e) => e.checked_order(),
        }
    }

    pub fn edge_count(&self) -> u64 {
        match self {
            GraphExpr::Complete(n) => n * (n - 1) / 2,
            GraphExpr::Union(l, r) => l.edge_count() + r.edge_count(),
            GraphExpr::Join(l, r) => l.edge_count() + r.edge_count() + l.order() * r.order(),
            GraphExpr::Repeat(m, e) => m * e.edge_count(),
            GraphExpr::Complement(e) => {
                let n = e.order();
                n * (n - 1) / 2 - e.edge_count()
            }
        }
    }

    /// Fully parenthesized canonical text; `parse(render(e)) == e`.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Complete(n) => write!(f, "K{n}"),
            GraphExpr::Union(l, r) => write!(f, "({l} + {r})"),
            GraphExpr::Join(l, r) => write!(f, "({l} * {r})"),
            // `23K1` or `~3K1` would not parse back, so a repeated operand
            // of a prefix operator gets its own parentheses.
            GraphExpr::Repeat(m, e) if matches!(**e, GraphExpr::Repeat(..)) => {
                write!(f, "{m}({e})")
            }
            GraphExpr::Repeat(m, e) => write!(f, "{m}{e}"),
            GraphExpr::Complement(e) if matches!(**e, GraphExpr::Repeat(..)) => {
                write!(f, "~({e})")
            }
            GraphExpr::Complement(e) => write!(f, "~{e}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("count must be at least 1")]
    ZeroCount,
    #[error("integer literal too large")]
    LiteralOverflow,
    #[error("expression order exceeds {MAX_ORDER} vertices")]
    OrderOverflow,
    #[error("nesting deeper than {MAX_DEPTH}")]
    TooDeep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Int(u64),
    K,
    Tilde,
    Plus,
    Star,
    LParen,
    RParen,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Int(v) => format!("integer {v}"),
            Token::K => "'K'".into(),
            Token::Tilde => "'~'".into(),
            Token::Plus => "'+'".into(),
            Token::Star => "'*'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                let mut value: u64 = 0;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(u64::from(bytes[i] - b'0')))
                        .filter(|v| *v <= MAX_ORDER)
                        .ok_or(ParseError {
                            position: start,
                            kind: ParseErrorKind::LiteralOverflow,
                        })?;
                    i += 1;
                }
                if value == 0 {
                    return Err(ParseError {
                        position: start,
                        kind: ParseErrorKind::ZeroCount,
                    });
                }
                tokens.push((Token::Int(value), start));
                continue;
            }
            b'K' => Token::K,
            b'~' => Token::Tilde,
            b'+' => Token::Plus,
            b'*' => Token::Star,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(ParseError {
                    position: start,
                    kind: ParseErrorKind::UnexpectedChar(ch),
                });
            }
        };
        tokens.push((tok, start));
        i += 1;
    }
    tokens.push((Token::End, text.len()));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    depth: usize,
}

impl Parser {
    fn peek(&self) -> Token {
        self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> Token {
        let t = self.peek();
        if t != Token::End {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, expected: &'static str) -> ParseError {
        ParseError {
            position: self.offset(),
            kind: ParseErrorKind::Unexpected {
                expected,
                found: self.peek().describe(),
            },
        }
    }

    fn enter(&mut self) -> Result<(), ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError {
                position: self.offset(),
                kind: ParseErrorKind::TooDeep,
            });
        }
        Ok(())
    }

    fn union(&mut self) -> Result<GraphExpr, ParseError> {
        let mut left = self.join()?;
        while self.peek() == Token::Plus {
            self.bump();
            let right = self.join()?;
            left = GraphExpr::union(left, right);
        }
        Ok(left)
    }

    fn join(&mut self) -> Result<GraphExpr, ParseError> {
        let mut left = self.rep()?;
        while self.peek() == Token::Star {
            self.bump();
            let right = self.rep()?;
            left = GraphExpr::join(left, right);
        }
        Ok(left)
    }

    fn rep(&mut self) -> Result<GraphExpr, ParseError> {
        if let Token::Int(m) = self.peek() {
            self.bump();
            let inner = self.atom()?;
            return Ok(GraphExpr::Repeat(m, Box::new(inner)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<GraphExpr, ParseError> {
        match self.peek() {
            Token::K => {
                self.bump();
                match self.peek() {
                    Token::Int(n) => {
                        self.bump();
                        Ok(GraphExpr::Complete(n))
                    }
                    _ => Err(self.unexpected("vertex count after 'K'")),
                }
            }
            Token::Tilde => {
                self.bump();
                self.enter()?;
                let inner = self.atom()?;
                self.depth -= 1;
                Ok(GraphExpr::Complement(Box::new(inner)))
            }
            Token::LParen => {
                self.bump();
                self.enter()?;
                let inner = self.union()?;
                self.depth -= 1;
                if self.peek() != Token::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("'K', '~' or '('")),
        }
    }
}

pub fn parse(text: &str) -> Result<GraphExpr, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        depth: 0,
    };
    let expr = parser.union()?;
    if parser.peek() != Token::End {
        return Err(parser.unexpected("'+', '*' or end of input"));
    }
    match expr.checked_order() {
        Some(n) if n <= MAX_ORDER => Ok(expr),
        _ => Err(ParseError {
            position: 0,
            kind: ParseErrorKind::OrderOverflow,
        }),
    }
}

impl FromStr for GraphExpr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
