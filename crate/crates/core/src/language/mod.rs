//! Regular expressions, right-linear language equations and their solution
//! by Arden's rule.

mod equations;
mod format;
mod glushkov;
mod regex;

use core::fmt;

use alloc::string::String;

pub use equations::{arden, Equation, EquationSystem};
pub use format::{format_term_regex, TermRegex};
pub use glushkov::regex_to_nfa;
pub use regex::{parse_regex, Regex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LanguageError {
    /// Arden's rule needs `id ∉ L(A)`.
    NullableCoefficient,
    /// An elimination order that is not a permutation of the unknowns.
    InvalidOrder,
    UnknownUnknown(usize),
    Parse {
        position: usize,
        message: String,
    },
    UnknownSymbol {
        position: usize,
        name: String,
    },
    SymbolOutOfRange(u32),
}

impl fmt::Display for LanguageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LanguageError::NullableCoefficient => f.write_str("coefficient accepts the empty word"),
            LanguageError::InvalidOrder => {
                f.write_str("elimination order must list every unknown exactly once")
            }
            LanguageError::UnknownUnknown(i) => {
                write!(f, "equation refers to X{i}, which does not exist")
            }
            LanguageError::Parse { position, message } => {
                write!(f, "regex syntax error at offset {position}: {message}")
            }
            LanguageError::UnknownSymbol { position, name } => {
                write!(f, "unknown symbol `{name}` at offset {position}")
            }
            LanguageError::SymbolOutOfRange(s) => write!(f, "symbol #{s} is outside the alphabet"),
        }
    }
}

impl core::error::Error for LanguageError {}
