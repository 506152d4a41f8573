use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{LanguageError, Regex};
use crate::alphabet::Symbol;
use crate::automata::{Nfa, StateLabel};

struct Linear {
    nullable: bool,
    first: BTreeSet<usize>,
    last: BTreeSet<usize>,
}

struct Positions {
    symbols: Vec<Symbol>,
    follow: Vec<BTreeSet<usize>>,
}

impl Positions {
    fn analyse(&mut self, r: &Regex) -> Linear {
        match r {
            Regex::Empty => Linear {
                nullable: false,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            },
            Regex::Id => Linear {
                nullable: true,
                first: BTreeSet::new(),
                last: BTreeSet::new(),
            },
            Regex::Sym(s) => {
                let p = self.symbols.len();
                self.symbols.push(*s);
                self.follow.push(BTreeSet::new());
                Linear {
                    nullable: false,
                    first: BTreeSet::from([p]),
                    last: BTreeSet::from([p]),
                }
            }
            Regex::Union(parts) => {
                let mut acc = Linear {
                    nullable: false,
                    first: BTreeSet::new(),
                    last: BTreeSet::new(),
                };
                for part in parts {
                    let info = self.analyse(part);
                    acc.nullable |= info.nullable;
                    acc.first.extend(info.first);
                    acc.last.extend(info.last);
                }
                acc
            }
            Regex::Concat(parts) => {
                let mut acc = Linear {
                    nullable: true,
                    first: BTreeSet::new(),
                    last: BTreeSet::new(),
                };
                for part in parts {
                    let info = self.analyse(part);
                    for &l in &acc.last {
                        self.follow[l].extend(info.first.iter().copied());
                    }
                    if acc.nullable {
                        acc.first.extend(info.first.iter().copied());
                    }
                    acc.last = if info.nullable {
                        acc.last.union(&info.last).copied().collect()
                    } else {
                        info.last
                    };
                    acc.nullable &= info.nullable;
                }
                acc
            }
            Regex::Star(inner) => {
                let info = self.analyse(inner);
                for &l in &info.last {
                    self.follow[l].extend(info.first.iter().copied());
                }
                Linear {
                    nullable: true,
                    first: info.first,
                    last: info.last,
                }
            }
        }
    }
}

/// Position (Glushkov) automaton: one state per symbol occurrence plus a
/// start state, with no ε-moves.
pub fn regex_to_nfa(r: &Regex, alphabet_len: usize) -> Result<Nfa, LanguageError> {
    let mut positions = Positions {
        symbols: Vec::new(),
        follow: Vec::new(),
    };
    let info = positions.analyse(r);
    if let Some(bad) = positions.symbols.iter().find(|s| s.index() >= alphabet_len) {
        return Err(LanguageError::SymbolOutOfRange(bad.0));
    }
    let mut nfa = Nfa::new(alphabet_len);
    let start = nfa.add_state(StateLabel::Start, info.nullable);
    nfa.add_initial(start);
    let ids: Vec<usize> = (0..positions.symbols.len())
        .map(|p| nfa.add_state(StateLabel::Num(p as u32), info.last.contains(&p)))
        .collect();
    for &p in &info.first {
        nfa.add_transition(start, positions.symbols[p], ids[p]);
    }
    for (q, follow) in positions.follow.iter().enumerate() {
        for &p in follow {
            nfa.add_transition(ids[q], positions.symbols[p], ids[p]);
        }
    }
    Ok(nfa)
}

#[cfg(test)]
mod tests {
    use alloc::string::{String, ToString};

    use proptest::prelude::*;

    use super::*;
    use crate::fixtures::{all_words, arb_regex, regex_matches};
    use crate::language::parse_regex;

    fn names() -> Vec<String> {
        ["a", "b"].iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn small_cases() {
        let empty = regex_to_nfa(&Regex::Empty, 2).unwrap();
        assert!(all_words(2, 4).iter().all(|w| !empty.accepts(w).unwrap()));
        let star = regex_to_nfa(&parse_regex("a*", &names()).unwrap(), 2).unwrap();
        for w in [&[][..], &[Symbol(0)], &[Symbol(0), Symbol(0)]] {
            assert!(star.accepts(w).unwrap());
        }
        assert!(!star.accepts(&[Symbol(1)]).unwrap());
        assert_eq!(
            regex_to_nfa(&Regex::Sym(Symbol(5)), 2).unwrap_err(),
            LanguageError::SymbolOutOfRange(5)
        );
    }

    proptest! {
        #[test]
        fn agrees_with_direct_matching(r in arb_regex(2)) {
            let n = regex_to_nfa(&r, 2).unwrap();
            let d = n.determinize();
            for w in all_words(2, 7) {
                let expected = regex_matches(&r, &w);
                prop_assert_eq!(n.accepts(&w).unwrap(), expected);
                prop_assert_eq!(d.accepts(&w).unwrap(), expected);
            }
        }
    }
}
