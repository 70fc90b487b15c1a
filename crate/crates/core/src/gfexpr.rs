//! A small expression language for generating functions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := unary (('*' | '/') unary)*
//! unary    := '-' unary | power
//! power    := atom ('^' exponent)?
//! exponent := '-'? INT ('^' exponent)?  |  '(' '-'? INT ')' ('^' exponent)?
//! atom     := INT | 'x' | 'sqrt' '(' expr ')' | 'c' '(' expr ')' | '(' expr ')'
//! ```
//!
//! Exponents are integer literals; a chain `a^b^c` groups to the right and is
//! folded at parse time. There is no implicit multiplication. `c(e)` is the
//! Catalan generating function composed with `e`, which needs `e(0) = 0`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::series::{catalan_gf, Coefficient, SeriesError, TruncatedSeries};

/// Extra working orders tried, in turn, when cancelling divisions eat precision.
const HEADROOM_STEPS: [usize; 7] = [0, 2, 4, 8, 16, 32, 64];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown identifier '{0}'")]
    UnknownIdentifier(String),
    #[error("exponent out of range")]
    ExponentOverflow,
    #[error(transparent)]
    Series(SeriesError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ExprError {
    pub kind: ExprErrorKind,
    /// 0-based character offset into the source text.
    pub offset: usize,
}

impl ExprError {
    fn syntax(msg: impl Into<String>, offset: usize) -> Self {
        Self { kind: ExprErrorKind::Syntax(msg.into()), offset }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    Literal(BigInt),
    Var,
    Neg(Box<GfExpression>),
    Add(Box<GfExpression>, Box<GfExpression>),
    Sub(Box<GfExpression>, Box<GfExpression>),
    Mul(Box<GfExpression>, Box<GfExpression>),
    Div(Box<GfExpression>, Box<GfExpression>),
    Pow(Box<GfExpression>, i64),
    Sqrt(Box<GfExpression>),
    Catalan(Box<GfExpression>),
}

/// A parsed expression. `offset` points at the node's operator or first
/// character; equality ignores it.
#[derive(Debug, Clone)]
pub struct GfExpression {
    pub kind: ExprKind,
    pub offset: usize,
}

impl PartialEq for GfExpression {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
    }
}

impl GfExpression {
    pub fn new(kind: ExprKind) -> Self {
        Self { kind, offset: 0 }
    }

    pub fn literal(n: i64) -> Self {
        Self::new(ExprKind::Literal(n.into()))
    }

    pub fn var() -> Self {
        Self::new(ExprKind::Var)
    }

    fn precedence(&self) -> u8 {
        match self.kind {
            ExprKind::Add(..) | ExprKind::Sub(..) => 1,
            ExprKind::Mul(..) | ExprKind::Div(..) => 2,
            ExprKind::Neg(..) => 3,
            ExprKind::Pow(..) => 4,
            _ => 5,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, context: u8) -> fmt::Result {
        let wrap = self.precedence() < context;
        if wrap {
            write!(f, "(")?;
        }
        match &self.kind {
            ExprKind::Literal(n) => write!(f, "{n}")?,
            ExprKind::Var => write!(f, "x")?,
            ExprKind::Neg(a) => {
                write!(f, "-")?;
                a.write_at(f, 3)?;
            }
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) => {
                a.write_at(f, 1)?;
                write!(f, "{}", if matches!(self.kind, ExprKind::Add(..)) { "+" } else { "-" })?;
                b.write_at(f, 2)?;
            }
            ExprKind::Mul(a, b) | ExprKind::Div(a, b) => {
                a.write_at(f, 2)?;
                write!(f, "{}", if matches!(self.kind, ExprKind::Mul(..)) { "*" } else { "/" })?;
                b.write_at(f, 3)?;
            }
            ExprKind::Pow(a, k) => {
                a.write_at(f, 5)?;
                if *k < 0 {
                    write!(f, "^({k})")?;
                } else {
                    write!(f, "^{k}")?;
                }
            }
            ExprKind::Sqrt(a) => write!(f, "sqrt({a})")?,
            ExprKind::Catalan(a) => write!(f, "c({a})")?,
        }
        if wrap {
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Prints with the fewest parentheses that reparse to the same tree.
impl fmt::Display for GfExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let token = match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                tokens.push((Token::Int(digits.parse().expect("ascii digits")), start));
                continue;
            }
            _ if c.is_alphabetic() => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                tokens.push((Token::Ident(chars[start..i].iter().collect()), start));
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(ExprError::syntax(format!("unexpected character '{other}'"), start)),
        };
        tokens.push((token, start));
        i += 1;
    }
    tokens.push((Token::End, chars.len()));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].0
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].1
    }

    fn bump(&mut self) -> (Token, usize) {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, wanted: &str) -> ExprError {
        let found = match self.peek() {
            Token::End => "end of input".to_string(),
            Token::Int(n) => format!("'{n}'"),
            Token::Ident(s) => format!("'{s}'"),
            t => format!("{t:?}"),
        };
        ExprError::syntax(format!("expected {wanted}, found {found}"), self.offset())
    }

    fn expect(&mut self, token: Token, wanted: &str) -> Result<(), ExprError> {
        if *self.peek() == token {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(wanted))
        }
    }

    fn expr(&mut self) -> Result<GfExpression, ExprError> {
        let mut lhs = self.term()?;
        loop {
            let make: fn(Box<GfExpression>, Box<GfExpression>) -> ExprKind = match self.peek() {
                Token::Plus => ExprKind::Add,
                Token::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            let (_, offset) = self.bump();
            let rhs = self.term()?;
            lhs = GfExpression { kind: make(Box::new(lhs), Box::new(rhs)), offset };
        }
    }

    fn term(&mut self) -> Result<GfExpression, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let make: fn(Box<GfExpression>, Box<GfExpression>) -> ExprKind = match self.peek() {
                Token::Star => ExprKind::Mul,
                Token::Slash => ExprKind::Div,
                _ => return Ok(lhs),
            };
            let (_, offset) = self.bump();
            let rhs = self.unary()?;
            lhs = GfExpression { kind: make(Box::new(lhs), Box::new(rhs)), offset };
        }
    }

    fn unary(&mut self) -> Result<GfExpression, ExprError> {
        if *self.peek() == Token::Minus {
            let (_, offset) = self.bump();
            let inner = self.unary()?;
            return Ok(GfExpression { kind: ExprKind::Neg(Box::new(inner)), offset });
        }
        self.power()
    }

    fn power(&mut self) -> Result<GfExpression, ExprError> {
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        let (_, offset) = self.bump();
        let k = self.exponent()?;
        Ok(GfExpression { kind: ExprKind::Pow(Box::new(base), k), offset })
    }

    fn exponent(&mut self) -> Result<i64, ExprError> {
        let start = self.offset();
        let parenthesized = *self.peek() == Token::LParen;
        if parenthesized {
            self.bump();
        }
        let negative = *self.peek() == Token::Minus;
        if negative {
            self.bump();
        }
        let value = match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                n
            }
            _ => return Err(self.unexpected("an integer exponent")),
        };
        if parenthesized {
            self.expect(Token::RParen, "')'")?;
        }
        let overflow = ExprError { kind: ExprErrorKind::ExponentOverflow, offset: start };
        let mut k = i64::try_from(if negative { -value } else { value }).map_err(|_| overflow.clone())?;
        if *self.peek() == Token::Caret {
            self.bump();
            let outer = self.exponent()?;
            let outer = u32::try_from(outer).map_err(|_| overflow.clone())?;
            k = k.checked_pow(outer).ok_or(overflow)?;
        }
        Ok(k)
    }

    fn atom(&mut self) -> Result<GfExpression, ExprError> {
        let offset = self.offset();
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                Ok(GfExpression { kind: ExprKind::Literal(n), offset })
            }
            Token::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(inner)
            }
            Token::Ident(name) => {
                self.bump();
                let wrap: fn(Box<GfExpression>) -> ExprKind = match name.as_str() {
                    "x" => return Ok(GfExpression { kind: ExprKind::Var, offset }),
                    "sqrt" => ExprKind::Sqrt,
                    "c" => ExprKind::Catalan,
                    _ => return Err(ExprError { kind: ExprErrorKind::UnknownIdentifier(name), offset }),
                };
                self.expect(Token::LParen, "'(' after function name")?;
                let arg = self.expr()?;
                self.expect(Token::RParen, "')'")?;
                Ok(GfExpression { kind: wrap(Box::new(arg)), offset })
            }
            _ => Err(self.unexpected("an expression")),
        }
    }
}

pub fn parse(text: &str) -> Result<GfExpression, ExprError> {
    let mut parser = Parser { tokens: tokenize(text)?, pos: 0 };
    let e = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(e)
}

fn eval_at(e: &GfExpression, order: usize) -> Result<TruncatedSeries, ExprError> {
    let at = |err: SeriesError| ExprError { kind: ExprErrorKind::Series(err), offset: e.offset };
    Ok(match &e.kind {
        ExprKind::Literal(n) => TruncatedSeries::constant(Coefficient::from_integer(n.clone()), order),
        ExprKind::Var => TruncatedSeries::x(order),
        ExprKind::Neg(a) => -&eval_at(a, order)?,
        ExprKind::Add(a, b) => eval_at(a, order)?.add(&eval_at(b, order)?),
        ExprKind::Sub(a, b) => eval_at(a, order)?.sub(&eval_at(b, order)?),
        ExprKind::Mul(a, b) => eval_at(a, order)?.mul(&eval_at(b, order)?),
        ExprKind::Div(a, b) => eval_at(a, order)?.div_cancelling_x(&eval_at(b, order)?).map_err(at)?,
        ExprKind::Pow(a, k) => eval_at(a, order)?.pow(*k).map_err(at)?,
        ExprKind::Sqrt(a) => eval_at(a, order)?.sqrt().map_err(at)?,
        ExprKind::Catalan(a) => {
            let inner = eval_at(a, order)?;
            catalan_gf(inner.order()).compose(&inner).map_err(at)?
        }
    })
}

/// Evaluates to a series of exactly the requested order.
///
/// Divisions that cancel powers of `x` lower the order of intermediate
/// results, so evaluation is retried at increasing working orders until the
/// result reaches `order`. The last failure is reported if none does.
pub fn evaluate(e: &GfExpression, order: usize) -> Result<TruncatedSeries, ExprError> {
    let mut last = None;
    for extra in HEADROOM_STEPS {
        match eval_at(e, order + extra) {
            Ok(s) if s.order() >= order => return Ok(s.truncate(order)),
            Ok(s) => {
                last = Some(ExprError {
                    kind: ExprErrorKind::Series(SeriesError::OutOfPrecision { index: order, order: s.order() }),
                    offset: e.offset,
                })
            }
            Err(err) => last = Some(err),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Parses and evaluates in one step.
pub fn evaluate_str(text: &str, order: usize) -> Result<TruncatedSeries, ExprError> {
    evaluate(&parse(text)?, order)
}
