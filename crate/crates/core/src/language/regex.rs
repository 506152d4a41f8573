use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::LanguageError;
use crate::alphabet::{Symbol, SymbolNames};

/// Regular expressions over `Σ`. `Empty` is `∅`, `Id` the empty word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Regex {
    #[default]
    Empty,
    Id,
    Sym(Symbol),
    Concat(Vec<Regex>),
    Union(Vec<Regex>),
    Star(Box<Regex>),
}

impl Regex {
    /// Union with nested unions flattened, `∅` dropped and repeats removed.
    pub fn union<I: IntoIterator<Item = Regex>>(parts: I) -> Regex {
        let mut out: Vec<Regex> = Vec::new();
        for part in parts {
            match part {
                Regex::Empty => {}
                Regex::Union(inner) => {
                    for r in inner {
                        if !out.contains(&r) {
                            out.push(r);
                        }
                    }
                }
                r => {
                    if !out.contains(&r) {
                        out.push(r);
                    }
                }
            }
        }
        match out.len() {
            0 => Regex::Empty,
            1 => out.pop().expect("one part"),
            _ => Regex::Union(out),
        }
    }

    /// Concatenation with nested concatenations flattened, `id` dropped and
    /// `∅` absorbing.
    pub fn concat<I: IntoIterator<Item = Regex>>(parts: I) -> Regex {
        let mut out: Vec<Regex> = Vec::new();
        for part in parts {
            match part {
                Regex::Empty => return Regex::Empty,
                Regex::Id => {}
                Regex::Concat(inner) => out.extend(inner),
                r => out.push(r),
            }
        }
        match out.len() {
            0 => Regex::Id,
            1 => out.pop().expect("one part"),
            _ => Regex::Concat(out),
        }
    }

    pub fn star(inner: Regex) -> Regex {
        match inner {
            Regex::Empty | Regex::Id => Regex::Id,
            Regex::Star(r) => Regex::Star(r),
            r => Regex::Star(Box::new(r)),
        }
    }

    pub fn symbols<I: IntoIterator<Item = Symbol>>(symbols: I) -> Regex {
        Regex::union(symbols.into_iter().map(Regex::Sym))
    }

    pub fn or(self, other: Regex) -> Regex {
        Regex::union([self, other])
    }

    pub fn then(self, other: Regex) -> Regex {
        Regex::concat([self, other])
    }

    /// Rebuilds bottom-up through the simplifying constructors:
    /// `∅+r → r`, `r+r → r`, `∅r → ∅`, `r∅ → ∅`, `id r → r`, `r id → r`,
    /// `∅* → id`, `id* → id`, `(r*)* → r*`.
    pub fn simplify(&self) -> Regex {
        match self {
            Regex::Empty | Regex::Id | Regex::Sym(_) => self.clone(),
            Regex::Concat(parts) => Regex::concat(parts.iter().map(Regex::simplify)),
            Regex::Union(parts) => Regex::union(parts.iter().map(Regex::simplify)),
            Regex::Star(inner) => Regex::star(inner.simplify()),
        }
    }

    /// `id ∈ L(r)`.
    pub fn nullable(&self) -> bool {
        match self {
            Regex::Empty | Regex::Sym(_) => false,
            Regex::Id | Regex::Star(_) => true,
            Regex::Concat(parts) => parts.iter().all(Regex::nullable),
            Regex::Union(parts) => parts.iter().any(Regex::nullable),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Regex::Empty | Regex::Id | Regex::Sym(_) => 1,
            Regex::Concat(parts) | Regex::Union(parts) => {
                1 + parts.iter().map(Regex::size).sum::<usize>()
            }
            Regex::Star(inner) => 1 + inner.size(),
        }
    }

    /// Printed in the text grammar: juxtaposition, `+`, postfix `*`, `0`, `id`.
    pub fn display<'a, N: SymbolNames + ?Sized>(&'a self, names: &'a N) -> impl fmt::Display + 'a {
        RegexDisplay { regex: self, names }
    }

    pub(crate) fn write<N: SymbolNames + ?Sized>(
        &self,
        f: &mut fmt::Formatter<'_>,
        names: &N,
        prec: u8,
    ) -> fmt::Result {
        match self {
            Regex::Empty => f.write_str("0"),
            Regex::Id => f.write_str("id"),
            Regex::Sym(s) => f.write_str(names.symbol_name(*s)),
            Regex::Union(parts) => {
                if prec > 0 {
                    f.write_str("(")?;
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    p.write(f, names, 1)?;
                }
                if prec > 0 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Regex::Concat(parts) => {
                if prec > 1 {
                    f.write_str("(")?;
                }
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    p.write(f, names, 1)?;
                }
                if prec > 1 {
                    f.write_str(")")?;
                }
                Ok(())
            }
            Regex::Star(inner) => {
                inner.write(f, names, 2)?;
                f.write_str("*")
            }
        }
    }
}

struct RegexDisplay<'a, N: ?Sized> {
    regex: &'a Regex,
    names: &'a N,
}

impl<N: SymbolNames + ?Sized> fmt::Display for RegexDisplay<'_, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.regex.write(f, self.names, 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Zero,
    Open,
    Close,
    Plus,
    Star,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, LanguageError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' | b'\n' | b'\r' | b'|' => i += 1,
            b'(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            b')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            b'+' => {
                out.push((i, Token::Plus));
                i += 1;
            }
            b'*' => {
                out.push((i, Token::Star));
                i += 1;
            }
            b'0' => {
                out.push((i, Token::Zero));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Token::Ident(text[start..i].to_string())));
            }
            _ => {
                return Err(LanguageError::Parse {
                    position: i,
                    message: alloc::format!(
                        "unexpected character `{}`",
                        text[i..].chars().next().unwrap_or('?')
                    ),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a, N: ?Sized> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    names: &'a N,
}

impl<N: SymbolNames + ?Sized> Parser<'_, N> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn error(&self, message: &str) -> LanguageError {
        LanguageError::Parse {
            position: self.offset(),
            message: message.to_string(),
        }
    }

    fn union(&mut self) -> Result<Regex, LanguageError> {
        let mut parts = alloc::vec![self.concat()?];
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            parts.push(self.concat()?);
        }
        Ok(if parts.len() == 1 {
            parts.pop().expect("one part")
        } else {
            Regex::Union(parts)
        })
    }

    fn concat(&mut self) -> Result<Regex, LanguageError> {
        let mut parts = Vec::new();
        while matches!(
            self.peek(),
            Some(Token::Ident(_) | Token::Zero | Token::Open)
        ) {
            parts.push(self.postfix()?);
        }
        match parts.len() {
            0 => Err(self.error("expected an expression")),
            1 => Ok(parts.pop().expect("one part")),
            _ => Ok(Regex::Concat(parts)),
        }
    }

    fn postfix(&mut self) -> Result<Regex, LanguageError> {
        let mut r = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            r = Regex::Star(Box::new(r));
        }
        Ok(r)
    }

    fn atom(&mut self) -> Result<Regex, LanguageError> {
        let offset = self.offset();
        match self.tokens.get(self.pos).map(|(_, t)| t.clone()) {
            Some(Token::Open) => {
                self.pos += 1;
                let r = self.union()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(r)
            }
            Some(Token::Zero) => {
                self.pos += 1;
                Ok(Regex::Empty)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                if name == "id" || name.starts_with("id_") {
                    return Ok(Regex::Id);
                }
                self.names.lookup_symbol(&name).map(Regex::Sym).ok_or(
                    LanguageError::UnknownSymbol {
                        position: offset,
                        name,
                    },
                )
            }
            _ => Err(self.error("expected a symbol, `0`, `id` or `(`")),
        }
    }
}

/// Parses the text grammar. `|` is ignored, so term-style expressions such
/// as `(y1+y2)|b2` read as plain concatenations.
pub fn parse_regex<N: SymbolNames + ?Sized>(text: &str, names: &N) -> Result<Regex, LanguageError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
        names,
    };
    let r = parser.union()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected token"));
    }
    Ok(r)
}
