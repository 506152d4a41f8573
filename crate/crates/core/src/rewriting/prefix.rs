use alloc::collections::BTreeSet;

use super::{RewriteSystem, Term};
use crate::presentation::Path;

/// `l`, `pl` and `ppl` for one sort of rule.
///
/// Term prefixes always carry at least one arrow: the bare element `x|id`
/// is tracked by the element's own automaton state, so it is only listed
/// (in `l` and `pl`) when it is itself a left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixSet<T: Ord> {
    pub l: BTreeSet<T>,
    pub pl: BTreeSet<T>,
    pub ppl: BTreeSet<T>,
}

impl<T: Ord> Default for PrefixSet<T> {
    fn default() -> Self {
        PrefixSet {
            l: BTreeSet::new(),
            pl: BTreeSet::new(),
            ppl: BTreeSet::new(),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PrefixSets {
    pub terms: PrefixSet<Term>,
    pub paths: PrefixSet<Path>,
}

impl RewriteSystem {
    pub fn lhs_sets(&self) -> PrefixSets {
        let mut sets = PrefixSets::default();
        for rule in &self.t_rules {
            let lhs = &rule.lhs;
            sets.terms.l.insert(lhs.clone());
            sets.terms.pl.insert(lhs.clone());
            for k in 1..lhs.word.len() {
                let prefix = Term::with_word(lhs.element, lhs.word[..k].to_vec());
                sets.terms.pl.insert(prefix.clone());
                sets.terms.ppl.insert(prefix);
            }
        }
        for rule in &self.p_rules {
            let lhs = &rule.lhs;
            sets.paths.l.insert(lhs.clone());
            sets.paths.pl.insert(lhs.clone());
            for k in 1..lhs.len() {
                let prefix = Path {
                    start: lhs.start,
                    arrows: lhs.arrows[..k].to_vec(),
                };
                sets.paths.pl.insert(prefix.clone());
                sets.paths.ppl.insert(prefix);
            }
        }
        sets
    }
}
