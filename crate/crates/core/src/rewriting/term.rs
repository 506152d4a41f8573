use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::alphabet::{shortlex, Alphabet, ObjectId, Symbol, SymbolNames};
use crate::presentation::{KanPresentation, Path, PresentationError};

/// A term `x|b1⋯bn`: an element of some `XA` followed by a composable word
/// of `Δ`-arrows starting at `FA`.
///
/// Ordered shortlex on the flattening `x b1 ⋯ bn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub(crate) element: Symbol,
    pub(crate) word: Vec<Symbol>,
}

impl Term {
    /// `None` unless `element` is an element and `word` composes from its base.
    pub fn new(alphabet: &Alphabet, element: Symbol, word: Vec<Symbol>) -> Option<Self> {
        alphabet.walk(alphabet.element_base(element)?, &word)?;
        Some(Term { element, word })
    }

    /// Reads a flattened string back as a term.
    pub fn from_flat(alphabet: &Alphabet, flat: &[Symbol]) -> Option<Self> {
        let (&element, word) = flat.split_first()?;
        Term::new(alphabet, element, word.to_vec())
    }

    pub fn element(&self) -> Symbol {
        self.element
    }

    pub fn word(&self) -> &[Symbol] {
        &self.word
    }

    /// Length of the flattening.
    pub fn len(&self) -> usize {
        self.word.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The flattening `σ(x|p) = x p`.
    pub fn flatten(&self) -> Vec<Symbol> {
        let mut out = Vec::with_capacity(self.len());
        out.push(self.element);
        out.extend_from_slice(&self.word);
        out
    }

    /// `τ(t)`: where the word part ends.
    pub fn target(&self, alphabet: &Alphabet) -> ObjectId {
        let base = alphabet.element_base(self.element).expect("term element");
        alphabet.walk(base, &self.word).expect("composable term")
    }

    /// The word part as a path from the element's base.
    pub fn word_path(&self, alphabet: &Alphabet) -> Path {
        Path {
            start: alphabet.element_base(self.element).expect("term element"),
            arrows: self.word.clone(),
        }
    }

    pub(crate) fn with_word(element: Symbol, word: Vec<Symbol>) -> Self {
        Term { element, word }
    }

    /// Parses `x | b1 b2`, `x | id` or `x b1 b2`.
    pub fn parse(p: &KanPresentation, text: &str) -> Result<Self, PresentationError> {
        let alphabet = p.alphabet();
        let (head, tail) = match text.split_once('|') {
            Some((h, t)) => (h.trim(), t.trim()),
            None => {
                let t = text.trim();
                match t.split_once(char::is_whitespace) {
                    Some((h, rest)) => (h, rest.trim()),
                    None => (t, "id"),
                }
            }
        };
        if head.is_empty() || head.contains(char::is_whitespace) {
            return Err(PresentationError::Syntax(
                "a term starts with exactly one element".to_string(),
            ));
        }
        let element = alphabet
            .lookup_symbol(head)
            .filter(|&s| alphabet.is_element(s))
            .ok_or_else(|| PresentationError::UnknownElement(head.to_string()))?;
        let base = alphabet.element_base(element).expect("element");
        let tail = if tail.is_empty() { "id" } else { tail };
        let path = p.parse_path(tail, Some(base))?;
        if path.start() != base {
            return Err(PresentationError::NonComposablePath(String::from(
                text.trim(),
            )));
        }
        Ok(Term {
            element,
            word: path.arrows,
        })
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        TermDisplay {
            term: self,
            alphabet,
        }
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.element.cmp(&other.element))
            .then_with(|| shortlex(&self.word, &other.word))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct TermDisplay<'a> {
    term: &'a Term,
    alphabet: &'a Alphabet,
}

impl fmt::Display for TermDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = self.alphabet.symbol_name(self.term.element);
        if self.term.word.is_empty() {
            write!(f, "{x} | id")
        } else {
            write!(f, "{x} | {}", self.alphabet.format_word(&self.term.word))
        }
    }
}
