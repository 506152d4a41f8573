//! Critical pairs and completion.
//!
//! Overlaps considered:
//! - word/word: a proper suffix of one left-hand side is a proper prefix of
//!   another, or one left-hand side occurs inside another;
//! - term/term: two term rules on the same element whose words are
//!   prefix-related;
//! - term/word: a nonempty suffix of a term rule's word is a proper prefix
//!   of a word rule's left-hand side, or the word rule's left-hand side
//!   occurs inside the term rule's word.

use alloc::vec::Vec;

use super::{PRule, RewriteError, RewriteSystem, TRule, Term};
use crate::alphabet::{shortlex, Symbol};
use crate::presentation::Path;

/// Both descendants of an overlap, already reduced to normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CriticalPair {
    Terms {
        overlap: Term,
        left: Term,
        right: Term,
    },
    Paths {
        overlap: Path,
        left: Path,
        right: Path,
    },
}

impl CriticalPair {
    pub fn is_joined(&self) -> bool {
        match self {
            CriticalPair::Terms { left, right, .. } => left == right,
            CriticalPair::Paths { left, right, .. } => left == right,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub system: RewriteSystem,
    /// Rounds of critical-pair computation that added at least one rule.
    pub rounds: usize,
    /// Rules of the result that were not in the input system.
    pub rules_added: usize,
}

fn concat(a: &[Symbol], b: &[Symbol]) -> Vec<Symbol> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out
}

fn occurrences<'a>(haystack: &'a [Symbol], needle: &[Symbol]) -> impl Iterator<Item = usize> + 'a {
    let needle = needle.to_vec();
    (0..=haystack.len().saturating_sub(needle.len()))
        .filter(move |&i| haystack.len() >= needle.len() && haystack[i..].starts_with(&needle))
}

enum Pending {
    T(TRule),
    P(PRule),
}

impl Pending {
    fn key(&self) -> (Vec<Symbol>, u8) {
        match self {
            Pending::T(r) => (r.lhs.flatten(), 0),
            Pending::P(r) => (r.lhs.arrows().to_vec(), 1),
        }
    }
}

impl RewriteSystem {
    /// Unreduced descendants of every overlap.
    fn overlaps(&self) -> Vec<CriticalPair> {
        let mut out = Vec::new();

        for (i, r1) in self.p_rules.iter().enumerate() {
            let l1 = r1.lhs.arrows();
            for (j, r2) in self.p_rules.iter().enumerate() {
                let l2 = r2.lhs.arrows();
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let tail = &l2[k..];
                        out.push(CriticalPair::Paths {
                            overlap: r1.lhs.then(tail),
                            left: r1.rhs.then(tail),
                            right: Path {
                                start: r1.lhs.start(),
                                arrows: concat(&l1[..l1.len() - k], r2.rhs.arrows()),
                            },
                        });
                    }
                }
                if i != j {
                    for pos in occurrences(l1, l2) {
                        let mut arrows = l1[..pos].to_vec();
                        arrows.extend_from_slice(r2.rhs.arrows());
                        arrows.extend_from_slice(&l1[pos + l2.len()..]);
                        out.push(CriticalPair::Paths {
                            overlap: r1.lhs.clone(),
                            left: r1.rhs.clone(),
                            right: Path {
                                start: r1.lhs.start(),
                                arrows,
                            },
                        });
                    }
                }
            }
        }

        for (i, r1) in self.t_rules.iter().enumerate() {
            for (j, r2) in self.t_rules.iter().enumerate() {
                if i == j || r1.lhs.element != r2.lhs.element {
                    continue;
                }
                if r2.lhs.word.starts_with(&r1.lhs.word) {
                    let rest = &r2.lhs.word[r1.lhs.word.len()..];
                    out.push(CriticalPair::Terms {
                        overlap: r2.lhs.clone(),
                        left: r2.rhs.clone(),
                        right: Term::with_word(r1.rhs.element, concat(&r1.rhs.word, rest)),
                    });
                }
            }
        }

        for tr in &self.t_rules {
            let u = &tr.lhs.word;
            for pr in &self.p_rules {
                let l = pr.lhs.arrows();
                for pos in occurrences(u, l) {
                    let mut word = u[..pos].to_vec();
                    word.extend_from_slice(pr.rhs.arrows());
                    word.extend_from_slice(&u[pos + l.len()..]);
                    out.push(CriticalPair::Terms {
                        overlap: tr.lhs.clone(),
                        left: tr.rhs.clone(),
                        right: Term::with_word(tr.lhs.element, word),
                    });
                }
                for k in 1..=u.len().min(l.len().saturating_sub(1)) {
                    if u[u.len() - k..] == l[..k] {
                        let tail = &l[k..];
                        out.push(CriticalPair::Terms {
                            overlap: Term::with_word(tr.lhs.element, concat(u, tail)),
                            left: Term::with_word(tr.rhs.element, concat(&tr.rhs.word, tail)),
                            right: Term::with_word(
                                tr.lhs.element,
                                concat(&u[..u.len() - k], pr.rhs.arrows()),
                            ),
                        });
                    }
                }
            }
        }
        out
    }

    /// All critical pairs with both sides reduced.
    pub fn critical_pairs(&self) -> Result<Vec<CriticalPair>, RewriteError> {
        self.overlaps()
            .into_iter()
            .map(|pair| {
                Ok(match pair {
                    CriticalPair::Terms {
                        overlap,
                        left,
                        right,
                    } => CriticalPair::Terms {
                        overlap,
                        left: self.reduce(&left)?,
                        right: self.reduce(&right)?,
                    },
                    CriticalPair::Paths {
                        overlap,
                        left,
                        right,
                    } => CriticalPair::Paths {
                        overlap,
                        left: self.reduce_path(&left)?,
                        right: self.reduce_path(&right)?,
                    },
                })
            })
            .collect()
    }

    /// Every critical pair joins. A system whose reductions exhaust the step
    /// budget is reported as not complete.
    pub fn is_complete(&self) -> bool {
        self.critical_pairs()
            .map(|pairs| pairs.iter().all(CriticalPair::is_joined))
            .unwrap_or(false)
    }

    fn unresolved(&self) -> Result<Vec<Pending>, RewriteError> {
        let mut pending = Vec::new();
        for pair in self.critical_pairs()? {
            match pair {
                CriticalPair::Terms { left, right, .. } => {
                    if let Some(rule) = self.orient_terms(left, right)? {
                        pending.push(Pending::T(rule));
                    }
                }
                CriticalPair::Paths { left, right, .. } => {
                    if let Some(rule) = self.orient_paths(left, right)? {
                        pending.push(Pending::P(rule));
                    }
                }
            }
        }
        pending.sort_by(|a, b| {
            let (ka, ta) = a.key();
            let (kb, tb) = b.key();
            shortlex(&ka, &kb).then(ta.cmp(&tb))
        });
        Ok(pending)
    }

    /// Knuth–Bendix style completion under the shortlex order. Each round
    /// computes the unresolved critical pairs, then adds them smallest
    /// larger-side first, inter-reducing after every addition.
    pub fn complete(&self, max_rounds: usize) -> Result<Completion, RewriteError> {
        let mut system = self.clone();
        system.inter_reduce()?;
        let mut rounds = 0;
        loop {
            let pending = system.unresolved()?;
            if pending.is_empty() {
                let rules_added = system
                    .t_rules
                    .iter()
                    .filter(|r| !self.t_rules.contains(r))
                    .count()
                    + system
                        .p_rules
                        .iter()
                        .filter(|r| !self.p_rules.contains(r))
                        .count();
                return Ok(Completion {
                    system,
                    rounds,
                    rules_added,
                });
            }
            if rounds >= max_rounds {
                return Err(RewriteError::RoundsExhausted {
                    rounds,
                    partial: alloc::boxed::Box::new(system),
                });
            }
            rounds += 1;
            for pair in pending {
                let added = match pair {
                    Pending::T(rule) => {
                        let a = system.reduce(&rule.lhs)?;
                        let b = system.reduce(&rule.rhs)?;
                        match system.orient_terms(a, b)? {
                            Some(rule) => system.insert_t(rule),
                            None => false,
                        }
                    }
                    Pending::P(rule) => {
                        let a = system.reduce_path(&rule.lhs)?;
                        let b = system.reduce_path(&rule.rhs)?;
                        match system.orient_paths(a, b)? {
                            Some(rule) => system.insert_p(rule),
                            None => false,
                        }
                    }
                };
                if added {
                    system.inter_reduce()?;
                }
            }
        }
    }

    fn t_lhs_reducible_by_others(&self, i: usize) -> bool {
        let lhs = &self.t_rules[i].lhs;
        let by_t = self.t_rules.iter().enumerate().any(|(j, r)| {
            j != i && r.lhs.element == lhs.element && lhs.word.starts_with(&r.lhs.word)
        });
        by_t || self
            .p_rules
            .iter()
            .any(|r| occurrences(&lhs.word, r.lhs.arrows()).next().is_some())
    }

    fn p_lhs_reducible_by_others(&self, i: usize) -> bool {
        let lhs = self.p_rules[i].lhs.arrows();
        self.p_rules
            .iter()
            .enumerate()
            .any(|(j, r)| j != i && occurrences(lhs, r.lhs.arrows()).next().is_some())
    }

    /// Drops rules whose left-hand side another rule reduces (re-adding the
    /// normalised equation when it is still non-trivial), then normalises
    /// every right-hand side.
    pub(crate) fn inter_reduce(&mut self) -> Result<(), RewriteError> {
        loop {
            if let Some(i) = (0..self.t_rules.len())
                .rev()
                .find(|&i| self.t_lhs_reducible_by_others(i))
            {
                let rule = self.t_rules.remove(i);
                let a = self.reduce(&rule.lhs)?;
                let b = self.reduce(&rule.rhs)?;
                if let Some(rule) = self.orient_terms(a, b)? {
                    self.insert_t(rule);
                }
                continue;
            }
            if let Some(i) = (0..self.p_rules.len())
                .rev()
                .find(|&i| self.p_lhs_reducible_by_others(i))
            {
                let rule = self.p_rules.remove(i);
                let a = self.reduce_path(&rule.lhs)?;
                let b = self.reduce_path(&rule.rhs)?;
                if let Some(rule) = self.orient_paths(a, b)? {
                    self.insert_p(rule);
                }
                continue;
            }
            break;
        }

        let mut t_rules = core::mem::take(&mut self.t_rules);
        let mut p_rules = core::mem::take(&mut self.p_rules);
        let snapshot = RewriteSystem {
            alphabet: self.alphabet.clone(),
            t_rules: t_rules.clone(),
            p_rules: p_rules.clone(),
            step_budget: self.step_budget,
        };
        for rule in &mut t_rules {
            rule.rhs = snapshot.reduce(&rule.rhs)?;
        }
        for rule in &mut p_rules {
            rule.rhs = snapshot.reduce_path(&rule.rhs)?;
        }
        t_rules.sort();
        t_rules.dedup();
        p_rules.sort();
        p_rules.dedup();
        self.t_rules = t_rules;
        self.p_rules = p_rules;
        Ok(())
    }
}
