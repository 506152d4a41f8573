//! Finite automata over `Σ`, the recogniser for `T`, and the per-object
//! automaton `A_B` whose language is `Σ* − irr(T_B)`.

mod construct;
mod dfa;
mod nfa;

use alloc::collections::BTreeSet;
use alloc::string::String;
use core::fmt;

use crate::alphabet::{Alphabet, ObjectId, Symbol, SymbolNames};
use crate::presentation::Path;
use crate::rewriting::Term;

pub use construct::{build_reducible_nfa, build_t_automaton};
pub use dfa::{Dfa, LanguageSize};
pub use nfa::Nfa;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomatonError {
    UnknownSymbol(Symbol),
    /// Complementing needs a complete machine.
    Incomplete,
    AlphabetMismatch {
        left: usize,
        right: usize,
    },
    /// `A_B` is only correct for a complete rewrite system.
    SystemNotComplete,
    UnknownObject(ObjectId),
}

impl fmt::Display for AutomatonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonError::UnknownSymbol(s) => write!(f, "symbol #{} is not in the alphabet", s.0),
            AutomatonError::Incomplete => f.write_str("automaton is not complete"),
            AutomatonError::AlphabetMismatch { left, right } => {
                write!(f, "alphabets differ ({left} vs {right} symbols)")
            }
            AutomatonError::SystemNotComplete => f.write_str("rewrite system is not complete"),
            AutomatonError::UnknownObject(b) => write!(f, "object #{} does not exist", b.0),
        }
    }
}

impl core::error::Error for AutomatonError {}

/// Structured state names. Variant order fixes how sets of states print:
/// prefixes before objects, the dump last.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateLabel {
    Start,
    Elem(Symbol),
    TPrefix(Term),
    PPrefix(Path),
    Obj(ObjectId),
    Dump,
    Subset(BTreeSet<StateLabel>),
    Num(u32),
}

impl StateLabel {
    pub fn contains_dump(&self) -> bool {
        match self {
            StateLabel::Dump => true,
            StateLabel::Subset(set) => set.iter().any(StateLabel::contains_dump),
            _ => false,
        }
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> impl fmt::Display + 'a {
        LabelDisplay {
            label: self,
            alphabet,
        }
    }
}

struct LabelDisplay<'a> {
    label: &'a StateLabel,
    alphabet: &'a Alphabet,
}

impl fmt::Display for LabelDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.alphabet;
        match self.label {
            StateLabel::Start => f.write_str("s0"),
            StateLabel::Dump => f.write_str("d"),
            StateLabel::Obj(b) => f.write_str(a.object_name(*b)),
            StateLabel::Elem(x) => f.write_str(a.symbol_name(*x)),
            StateLabel::TPrefix(t) => {
                let word: String = a.format_word(t.word());
                write!(f, "{}|{}", a.symbol_name(t.element()), word)
            }
            StateLabel::PPrefix(p) => f.write_str(&a.format_word(p.arrows())),
            StateLabel::Num(i) => write!(f, "q{i}"),
            StateLabel::Subset(set) => {
                f.write_str("{")?;
                for (i, l) in set.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}", l.display(a))?;
                }
                f.write_str("}")
            }
        }
    }
}
