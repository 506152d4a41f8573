//! The line-oriented presentation file format.
//!
//! ```text
//! objects A : A1 A2
//! arrows A : a1 : A1 -> A2 ; a2 : A2 -> A1
//! objects B : B1 B2 B3
//! arrows B : b1 : B1 -> B2 ; b2 : B2 -> B3 ; b3 : B3 -> B1 ; b4 : B1 -> B1 ; b5 : B1 -> B3
//! relations B : b1 b2 b3 = b4
//! X A1 : x1 x2 x3
//! X A2 : y1 y2
//! X a1 : x1 -> y1 ; x2 -> y2 ; x3 -> y1
//! X a2 : y1 -> x1 ; y2 -> x2
//! F A1 : B1
//! F A2 : B2
//! F a1 : b1
//! F a2 : b2 b3
//! order : x1 x2 x3 y1 y2 b1 b2 b3 b4 b5
//! ```
//!
//! `A` names the generating graph of the domain, `B` that of the codomain.
//! `X` and `F` lines are keyed by a domain object or arrow. Everything after
//! `#` is a comment.

use std::fmt::Write as _;

use kanext_core::presentation::{RawArrow, RawPath};
use kanext_core::{KanPresentation, RawPresentation};

use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Semi,
    Arrow,
    Equals,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    column: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

fn lex(line_no: usize, text: &str) -> Result<Vec<Token>, Error> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        let tok = match c {
            '#' => break,
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            ':' => Tok::Colon,
            ';' => Tok::Semi,
            '=' => Tok::Equals,
            '-' if chars.get(i + 1) == Some(&'>') => {
                i += 1;
                Tok::Arrow
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i + 1 < chars.len()
                    && (chars[i + 1].is_ascii_alphanumeric() || chars[i + 1] == '_')
                {
                    i += 1;
                }
                Tok::Ident(chars[start..=i].iter().collect())
            }
            c => {
                return Err(syntax(
                    line_no,
                    column,
                    format!("unexpected character `{c}`"),
                ))
            }
        };
        out.push(Token { tok, column });
        i += 1;
    }
    Ok(out)
}

struct Line {
    no: usize,
    tokens: Vec<Token>,
    pos: usize,
    end_column: usize,
}

impl Line {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn column(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map_or(self.end_column, |t| t.column)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        syntax(self.no, self.column(), message)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn ident(&mut self, what: &str) -> Result<(String, usize), Error> {
        let column = self.column();
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let name = name.clone();
                self.pos += 1;
                Ok((name, column))
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), Error> {
        if self.peek() == Some(&tok) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{what}`")))
        }
    }

    fn names(&mut self) -> Result<Vec<String>, Error> {
        let mut out = Vec::new();
        while !self.at_end() {
            out.push(self.ident("a name")?.0);
        }
        Ok(out)
    }

    /// Identifiers up to the next `;`, `=` or end of line.
    fn path(&mut self) -> Result<RawPath, Error> {
        let column = self.column();
        let mut words = Vec::new();
        while let Some(Tok::Ident(name)) = self.peek() {
            words.push(name.clone());
            self.pos += 1;
        }
        if words.is_empty() {
            return Err(syntax(self.no, column, "expected a path"));
        }
        kanext_core::presentation::parse_raw_path(&words.join(" "))
            .map_err(|e| syntax(self.no, column, e.to_string()))
    }

    /// `item ; item ; ...`, possibly empty.
    fn separated<T>(
        &mut self,
        mut item: impl FnMut(&mut Line) -> Result<T, Error>,
    ) -> Result<Vec<T>, Error> {
        let mut out = Vec::new();
        if self.at_end() {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.at_end() {
                return Ok(out);
            }
            self.expect(Tok::Semi, ";")?;
        }
    }
}

enum Keyed {
    Names(Vec<String>),
    Maps(Vec<(String, String)>),
    Path(RawPath),
}

struct KeyedLine {
    line: usize,
    column: usize,
    key: String,
    body: Keyed,
}

fn graph_side(line: &mut Line) -> Result<bool, Error> {
    let (name, column) = line.ident("`A` or `B`")?;
    match name.as_str() {
        "A" => Ok(false),
        "B" => Ok(true),
        _ => Err(syntax(
            line.no,
            column,
            format!("expected `A` or `B`, found `{name}`"),
        )),
    }
}

/// Parses file contents into unvalidated presentation data.
pub fn parse_raw(text: &str) -> Result<RawPresentation, Error> {
    let mut raw = RawPresentation::default();
    let mut x_lines = Vec::new();
    let mut f_lines = Vec::new();
    let mut saw_statement = false;

    for (index, text_line) in text.lines().enumerate() {
        let no = index + 1;
        let tokens = lex(no, text_line)?;
        if tokens.is_empty() {
            continue;
        }
        saw_statement = true;
        let mut line = Line {
            no,
            tokens,
            pos: 0,
            end_column: text_line.chars().count() + 1,
        };
        let (keyword, keyword_column) = line.ident("a keyword")?;
        match keyword.as_str() {
            "objects" => {
                let delta = graph_side(&mut line)?;
                line.expect(Tok::Colon, ":")?;
                let names = line.names()?;
                let graph = if delta {
                    &mut raw.delta
                } else {
                    &mut raw.gamma
                };
                graph.objects.extend(names);
            }
            "arrows" => {
                let delta = graph_side(&mut line)?;
                line.expect(Tok::Colon, ":")?;
                let arrows = line.separated(|l| {
                    let (name, _) = l.ident("an arrow name")?;
                    l.expect(Tok::Colon, ":")?;
                    let (src, _) = l.ident("a source object")?;
                    l.expect(Tok::Arrow, "->")?;
                    let (tgt, _) = l.ident("a target object")?;
                    Ok(RawArrow { name, src, tgt })
                })?;
                let graph = if delta {
                    &mut raw.delta
                } else {
                    &mut raw.gamma
                };
                graph.arrows.extend(arrows);
            }
            "relations" => {
                let column = line.column();
                if !graph_side(&mut line)? {
                    return Err(syntax(no, column, "relations are only allowed on `B`"));
                }
                line.expect(Tok::Colon, ":")?;
                let relations = line.separated(|l| {
                    let lhs = l.path()?;
                    l.expect(Tok::Equals, "=")?;
                    let rhs = l.path()?;
                    Ok((lhs, rhs))
                })?;
                raw.relations.extend(relations);
            }
            "X" | "F" => {
                let (key, column) = line.ident("a domain object or arrow")?;
                line.expect(Tok::Colon, ":")?;
                let maps = line.tokens[line.pos..].iter().any(|t| t.tok == Tok::Arrow);
                let body = if keyword == "F" {
                    Keyed::Path(line.path()?)
                } else if maps {
                    Keyed::Maps(line.separated(|l| {
                        let (x, _) = l.ident("an element")?;
                        l.expect(Tok::Arrow, "->")?;
                        let (y, _) = l.ident("an element")?;
                        Ok((x, y))
                    })?)
                } else {
                    Keyed::Names(line.names()?)
                };
                let keyed = KeyedLine {
                    line: no,
                    column,
                    key,
                    body,
                };
                if keyword == "X" {
                    x_lines.push(keyed);
                } else {
                    f_lines.push(keyed);
                }
            }
            "order" => {
                line.expect(Tok::Colon, ":")?;
                let names = line.names()?;
                if raw.order.is_some() {
                    return Err(syntax(no, keyword_column, "`order` is given twice"));
                }
                raw.order = Some(names);
            }
            other => {
                return Err(syntax(
                    no,
                    keyword_column,
                    format!("unknown keyword `{other}`"),
                ));
            }
        }
        if !line.at_end() {
            return Err(line.error("unexpected trailing input"));
        }
    }

    if !saw_statement {
        return Err(syntax(1, 1, "empty presentation"));
    }

    let is_object = |name: &str| raw.gamma.objects.iter().any(|o| o == name);
    let is_arrow = |name: &str| raw.gamma.arrows.iter().any(|a| a.name == name);
    let mut elements = Vec::new();
    let mut actions = Vec::new();
    for x in x_lines {
        match x.body {
            Keyed::Names(names) if is_object(&x.key) => elements.push((x.key, names)),
            Keyed::Names(names) if is_arrow(&x.key) && names.is_empty() => {
                actions.push((x.key, Vec::new()))
            }
            Keyed::Maps(pairs) if is_arrow(&x.key) => actions.push((x.key, pairs)),
            Keyed::Maps(_) if is_object(&x.key) => {
                return Err(syntax(
                    x.line,
                    x.column,
                    format!("`X {}` lists elements, not a map", x.key),
                ));
            }
            Keyed::Names(_) if is_arrow(&x.key) => {
                return Err(syntax(
                    x.line,
                    x.column,
                    format!("`X {}` needs a map `x -> y ; ...`", x.key),
                ));
            }
            _ => {
                return Err(syntax(
                    x.line,
                    x.column,
                    format!("`{}` is not an object or arrow of `A`", x.key),
                ));
            }
        }
    }
    let mut functor_objects = Vec::new();
    let mut functor_arrows = Vec::new();
    for f in f_lines {
        let Keyed::Path(path) = f.body else {
            unreachable!()
        };
        if is_object(&f.key) {
            match (path.start, path.arrows.as_slice()) {
                (None, [object]) => functor_objects.push((f.key, object.clone())),
                _ => {
                    return Err(syntax(
                        f.line,
                        f.column,
                        format!("`F {}` must name one object", f.key),
                    ));
                }
            }
        } else if is_arrow(&f.key) {
            functor_arrows.push((f.key, path));
        } else {
            return Err(syntax(
                f.line,
                f.column,
                format!("`{}` is not an object or arrow of `A`", f.key),
            ));
        }
    }
    raw.elements = elements;
    raw.actions = actions;
    raw.functor_objects = functor_objects;
    raw.functor_arrows = functor_arrows;
    Ok(raw)
}

/// Parses and validates a presentation file.
pub fn parse_presentation(text: &str) -> Result<KanPresentation, Error> {
    let raw = parse_raw(text)?;
    Ok(KanPresentation::from_raw(&raw)?)
}

fn path_text(p: &RawPath) -> String {
    if p.arrows.is_empty() {
        match &p.start {
            Some(b) => format!("id_{b}"),
            None => "id".to_string(),
        }
    } else {
        p.arrows.join(" ")
    }
}

fn list_line(out: &mut String, head: &str, items: &[String]) {
    out.push_str(head);
    out.push_str(" :");
    for item in items {
        out.push(' ');
        out.push_str(item);
    }
    out.push('\n');
}

fn joined_line(out: &mut String, head: &str, items: Vec<String>) {
    if !items.is_empty() {
        let _ = writeln!(out, "{head} : {}", items.join(" ; "));
    }
}

/// Prints a presentation in the file format; parsing the output gives back
/// the same presentation.
pub fn print_presentation(p: &KanPresentation) -> String {
    let raw = p.to_raw();
    let mut out = String::new();
    for (label, graph) in [("A", &raw.gamma), ("B", &raw.delta)] {
        list_line(&mut out, &format!("objects {label}"), &graph.objects);
        joined_line(
            &mut out,
            &format!("arrows {label}"),
            graph
                .arrows
                .iter()
                .map(|a| format!("{} : {} -> {}", a.name, a.src, a.tgt))
                .collect(),
        );
    }
    joined_line(
        &mut out,
        "relations B",
        raw.relations
            .iter()
            .map(|(l, r)| format!("{} = {}", path_text(l), path_text(r)))
            .collect(),
    );
    for (a, xs) in &raw.elements {
        list_line(&mut out, &format!("X {a}"), xs);
    }
    for (a, pairs) in &raw.actions {
        if pairs.is_empty() {
            let _ = writeln!(out, "X {a} :");
        } else {
            joined_line(
                &mut out,
                &format!("X {a}"),
                pairs.iter().map(|(x, y)| format!("{x} -> {y}")).collect(),
            );
        }
    }
    for (a, b) in &raw.functor_objects {
        let _ = writeln!(out, "F {a} : {b}");
    }
    for (a, path) in &raw.functor_arrows {
        let _ = writeln!(out, "F {a} : {}", path_text(path));
    }
    list_line(&mut out, "order", raw.order.as_deref().unwrap_or_default());
    out
}
