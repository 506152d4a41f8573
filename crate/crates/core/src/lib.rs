//! Induced actions from finite presentations.
//!
//! A presentation `kan<Γ|Δ|RelB|X|F>` determines a two-sorted rewrite system
//! on terms `x|p`. Once that system is completed, every object `B` of `Δ`
//! gets an automaton recognising the irreducible terms with target `B`, and
//! solving the right-linear equations of that automaton yields a regular
//! expression for the (possibly infinite) set `KB`.
//!
//! This crate is `no_std` and only needs `alloc`. File formats, rendering and
//! the command-line front end live in the `kanext` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod alphabet;
pub mod automata;
pub mod language;
pub mod presentation;
pub mod rewriting;

#[cfg(test)]
mod fixtures;

pub use alphabet::{shortlex, Alphabet, ObjectId, Symbol, SymbolKind, SymbolNames};
pub use automata::{AutomatonError, Dfa, LanguageSize, Nfa, StateLabel};
pub use language::{EquationSystem, LanguageError, Regex};
pub use presentation::{KanPresentation, Path, PresentationError, RawPresentation};
pub use rewriting::{RewriteError, RewriteSystem, Term};
