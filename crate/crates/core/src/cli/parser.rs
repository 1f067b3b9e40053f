//! Recursive-descent parser for session expressions.
//!
//! Precedence, loosest first: binary `+ -`; `&w &c &dw` (left-assoc);
//! `* /`; unary minus; `^`. Blade atoms are `Id`, `e1we2we3`, the alias
//! `e123` (single-digit indices) and, in dotted mode, `e1We2`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{pos}: {msg}")]
pub struct ParseError {
    pub pos: Pos,
    pub msg: String,
}

pub const FUNCTIONS: &[&str] = &[
    "LC", "RC", "reversion", "gradeinv", "grade", "w2d", "d2w", "cmul", "wedge", "dwedge",
];

/// Functions that take an optional `[Form]` index before the argument list.
const INDEXED: &[&str] = &["cmul", "dwedge", "LC", "RC", "reversion", "w2d", "d2w"];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigRational),
    Sym(String),
    Entry { form: String, row: usize, col: usize },
    /// Index sequence as written; reordered during evaluation.
    Blade { indices: Vec<usize>, dotted: bool },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Wedge(Box<Expr>, Box<Expr>),
    Cmul(Box<Expr>, Box<Expr>, Option<String>),
    Dwedge(Box<Expr>, Box<Expr>, Option<String>),
    Call {
        name: String,
        index: Option<String>,
        args: Vec<Expr>,
    },
}

fn fmt_index(idx: &Option<String>) -> String {
    idx.as_ref().map_or(String::new(), |k| format!("[{k}]"))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Expr::Num(q) => write!(f, "({}/{})", q.numer(), q.denom()),
            Expr::Sym(s) => f.write_str(s),
            Expr::Entry { form, row, col } => write!(f, "{form}[{row},{col}]"),
            Expr::Blade { indices, dotted } => {
                if indices.is_empty() {
                    return f.write_str("Id");
                }
                let sep = if *dotted { "We" } else { "we" };
                let parts: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
                write!(f, "e{}", parts.join(sep))
            }
            Expr::Neg(a) => write!(f, "(-{a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
            Expr::Div(a, b) => write!(f, "({a} / {b})"),
            Expr::Pow(a, n) => write!(f, "({a} ^ {n})"),
            Expr::Wedge(a, b) => write!(f, "({a} &w {b})"),
            Expr::Cmul(a, b, k) => write!(f, "({a} &c{} {b})", fmt_index(k)),
            Expr::Dwedge(a, b, k) => write!(f, "({a} &dw{} {b})", fmt_index(k)),
            Expr::Call { name, index, args } => {
                let parts: Vec<String> = args.iter().map(|a| a.to_string()).collect();
                write!(f, "{name}{}({})", fmt_index(index), parts.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigRational),
    Ident(String),
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
    AmpW,
    AmpC,
    AmpDw,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(q) => write!(f, "number {q}"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::AmpW => f.write_str("`&w`"),
            Tok::AmpC => f.write_str("`&c`"),
            Tok::AmpDw => f.write_str("`&dw`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(src: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let err = |pos: Pos, msg: String| ParseError { pos, msg };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c == '\n' {
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        let start = i;
        let tok = if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit())) {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let int_part: String = chars[start..i].iter().collect();
            let mut value = if int_part.is_empty() {
                BigRational::zero()
            } else {
                BigRational::from_integer(int_part.parse::<BigInt>().expect("digits"))
            };
            if i < chars.len() && chars[i] == '.' {
                i += 1;
                let frac_start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let frac: String = chars[frac_start..i].iter().collect();
                if !frac.is_empty() {
                    let num: BigInt = frac.parse().expect("digits");
                    let den = num_traits::pow(BigInt::from(10), frac.len());
                    value += BigRational::new(num, den);
                }
            }
            Tok::Num(value)
        } else if c.is_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            Tok::Ident(chars[start..i].iter().collect())
        } else if c == '&' {
            i += 1;
            // longest known operator wins, so `e4&ce4` reads as `e4 &c e4`
            let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
            if rest.starts_with("dw") {
                i += 2;
                Tok::AmpDw
            } else if rest.starts_with('w') {
                i += 1;
                Tok::AmpW
            } else if rest.starts_with('c') {
                i += 1;
                Tok::AmpC
            } else {
                return Err(err(pos, format!("unknown operator `&{rest}`")));
            }
        } else {
            i += 1;
            match c {
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
                other => return Err(err(pos, format!("unexpected character `{other}`"))),
            }
        };
        col += i - start;
        out.push((tok, pos));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

/// Classifies an identifier as a blade; `Ok(None)` means it is a plain symbol.
fn blade_of(word: &str, dim: usize, pos: Pos) -> Result<Option<Expr>, ParseError> {
    if word == "Id" {
        return Ok(Some(Expr::Blade {
            indices: vec![],
            dotted: false,
        }));
    }
    let Some(rest) = word.strip_prefix('e') else {
        return Ok(None);
    };
    if rest.is_empty() || !rest.starts_with(|c: char| c.is_ascii_digit()) {
        return Ok(None);
    }
    let (parts, dotted): (Vec<&str>, bool) = if rest.contains("We") {
        (rest.split("We").collect(), true)
    } else {
        (rest.split("we").collect(), false)
    };
    if parts.iter().any(|p| p.is_empty() || !p.chars().all(|c| c.is_ascii_digit())) {
        return Ok(None);
    }
    let indices: Vec<usize> = if parts.len() == 1 {
        parts[0].chars().map(|c| c.to_digit(10).unwrap() as usize).collect()
    } else {
        parts.iter().map(|p| p.parse().unwrap_or(usize::MAX)).collect()
    };
    if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > dim) {
        let shown = if bad == usize::MAX { "too large".to_string() } else { bad.to_string() };
        return Err(ParseError {
            pos,
            msg: format!("basis index {shown} out of range 1..{dim} in `{word}`"),
        });
    }
    Ok(Some(Expr::Blade { indices, dotted }))
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    dim: usize,
    dotted: bool,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek_at(&self, k: usize) -> &Tok {
        &self.toks[(self.at + k).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, t: Tok) -> Result<(), ParseError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {t}, found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> Result<String, ParseError> {
        match self.bump() {
            Tok::Ident(s) => Ok(s),
            other => {
                self.at -= 1;
                self.fail(format!("expected a name, found {other}"))
            }
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.amp()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.amp()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.amp()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn form_index(&mut self) -> Result<Option<String>, ParseError> {
        if *self.peek() != Tok::LBracket {
            return Ok(None);
        }
        self.bump();
        let name = self.ident()?;
        self.expect(Tok::RBracket)?;
        Ok(Some(name))
    }

    fn amp(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.mul()?;
        loop {
            let op = self.peek().clone();
            match op {
                Tok::AmpW => {
                    self.bump();
                    lhs = Expr::Wedge(Box::new(lhs), Box::new(self.mul()?));
                }
                Tok::AmpC => {
                    self.bump();
                    let k = self.form_index()?;
                    lhs = Expr::Cmul(Box::new(lhs), Box::new(self.mul()?), k);
                }
                Tok::AmpDw => {
                    self.bump();
                    let k = self.form_index()?;
                    lhs = Expr::Dwedge(Box::new(lhs), Box::new(self.mul()?), k);
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn mul(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Tok::Slash => {
                    self.bump();
                    let pos = self.pos();
                    let rhs = self.unary()?;
                    lhs = match (lhs, rhs) {
                        (_, Expr::Num(d)) if d.is_zero() => {
                            return Err(ParseError {
                                pos,
                                msg: "division by zero".into(),
                            })
                        }
                        (Expr::Num(n), Expr::Num(d)) => Expr::Num(n / d),
                        (l, r) => Expr::Div(Box::new(l), Box::new(r)),
                    };
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.primary()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Num(q) if q.is_integer() => {
                let n: u32 = q.numer().try_into().map_err(|_| ParseError {
                    pos: self.pos(),
                    msg: "exponent too large".into(),
                })?;
                Ok(Expr::Pow(Box::new(base), n))
            }
            other => {
                self.at -= 1;
                self.fail(format!("expected a non-negative integer exponent, found {other}"))
            }
        }
    }

    fn small_int(&mut self) -> Result<usize, ParseError> {
        match self.bump() {
            Tok::Num(q) if q.is_integer() => q
                .numer()
                .try_into()
                .map_err(|_| ParseError {
                    pos: self.pos(),
                    msg: "index too large".into(),
                }),
            other => {
                self.at -= 1;
                self.fail(format!("expected an index, found {other}"))
            }
        }
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(q) => Ok(Expr::Num(q)),
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen)?;
                Ok(e)
            }
            Tok::Ident(word) => self.after_ident(word, pos),
            other => {
                self.at -= 1;
                self.fail(format!("expected an operand, found {other}"))
            }
        }
    }

    fn after_ident(&mut self, word: String, pos: Pos) -> Result<Expr, ParseError> {
        let is_fn = FUNCTIONS.contains(&word.as_str());
        let indexed_call = *self.peek() == Tok::LBracket
            && matches!(self.peek_at(1), Tok::Ident(_))
            && *self.peek_at(2) == Tok::RBracket;
        if indexed_call {
            if !INDEXED.contains(&word.as_str()) {
                return Err(ParseError {
                    pos,
                    msg: format!("unknown function `{word}`"),
                });
            }
            let index = self.form_index()?;
            return self.call(word, index, pos);
        }
        if *self.peek() == Tok::LParen {
            if !is_fn {
                return Err(ParseError {
                    pos,
                    msg: format!("unknown function `{word}`"),
                });
            }
            return self.call(word, None, pos);
        }
        if *self.peek() == Tok::LBracket {
            self.bump();
            let row = self.small_int()?;
            self.expect(Tok::Comma)?;
            let col = self.small_int()?;
            self.expect(Tok::RBracket)?;
            if !(1..=9).contains(&row) || !(1..=9).contains(&col) {
                return Err(ParseError {
                    pos,
                    msg: format!("form entry {word}[{row},{col}] outside 1..9"),
                });
            }
            return Ok(Expr::Entry { form: word, row, col });
        }
        if is_fn {
            return Err(ParseError {
                pos,
                msg: format!("function `{word}` needs an argument list"),
            });
        }
        match blade_of(&word, self.dim, pos)? {
            Some(Expr::Blade { dotted: true, .. }) if !self.dotted => Err(ParseError {
                pos,
                msg: format!("dotted blade `{word}` requires the dotted basis mode"),
            }),
            Some(b) => Ok(b),
            None => Ok(Expr::Sym(word)),
        }
    }

    fn call(&mut self, name: String, index: Option<String>, pos: Pos) -> Result<Expr, ParseError> {
        self.expect(Tok::LParen)?;
        let mut args = Vec::new();
        if *self.peek() != Tok::RParen {
            loop {
                args.push(self.sum()?);
                if *self.peek() == Tok::Comma {
                    self.bump();
                } else {
                    break;
                }
            }
        }
        self.expect(Tok::RParen)?;
        let (lo, hi) = match name.as_str() {
            "LC" | "RC" => (2, 3),
            "reversion" | "w2d" | "d2w" => (1, 2),
            "gradeinv" => (1, 1),
            "grade" => (2, 2),
            _ => (1, usize::MAX),
        };
        if args.len() < lo || args.len() > hi {
            return Err(ParseError {
                pos,
                msg: format!("`{name}` takes {} arguments, got {}", arity(lo, hi), args.len()),
            });
        }
        Ok(Expr::Call { name, index, args })
    }
}

fn arity(lo: usize, hi: usize) -> String {
    match (lo, hi) {
        (a, b) if a == b => a.to_string(),
        (a, usize::MAX) => format!("at least {a}"),
        (a, b) => format!("{a} to {b}"),
    }
}

/// Parses one expression over a space of dimension `dim`.
pub fn parse(src: &str, dim: usize, dotted: bool) -> Result<Expr, ParseError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        dim,
        dotted,
    };
    if *p.peek() == Tok::Eof {
        return p.fail("empty expression");
    }
    let e = p.sum()?;
    if *p.peek() != Tok::Eof {
        return p.fail(format!("unexpected {} after expression", p.peek()));
    }
    Ok(e)
}
