//! Two-sorted rewriting on terms: term rules `x|u → y|v` act on the
//! element-rooted prefix, word rules `l → r` act inside the word part.

mod completion;
mod prefix;
mod term;

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::alphabet::{Alphabet, ObjectId, Symbol, SymbolNames};
use crate::presentation::{KanPresentation, Path};

pub use completion::{Completion, CriticalPair};
pub use prefix::{PrefixSet, PrefixSets};
pub use term::Term;

pub const DEFAULT_STEP_BUDGET: usize = 1_000_000;
pub const DEFAULT_MAX_ROUNDS: usize = 1000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RewriteError {
    /// `τ(t) ≠ src(p)` when acting.
    NotComposable,
    StepBudgetExceeded(usize),
    UnknownElement(String),
    /// Two distinct sides with the same flattening.
    Unorientable(String),
    /// A rule whose sides are not strictly decreasing, or which changes the
    /// target object.
    InvalidRule(String),
    RoundsExhausted {
        rounds: usize,
        partial: Box<RewriteSystem>,
    },
}

impl fmt::Display for RewriteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RewriteError::NotComposable => f.write_str("path does not start at the term's target"),
            RewriteError::StepBudgetExceeded(n) => {
                write!(f, "reduction exceeded the step budget of {n}")
            }
            RewriteError::UnknownElement(x) => write!(f, "unknown element `{x}`"),
            RewriteError::Unorientable(s) => write!(f, "cannot orient `{s}`"),
            RewriteError::InvalidRule(s) => write!(f, "invalid rule `{s}`"),
            RewriteError::RoundsExhausted { rounds, partial } => write!(
                f,
                "completion did not finish within {rounds} rounds ({} rules so far)",
                partial.rule_count()
            ),
        }
    }
}

impl core::error::Error for RewriteError {}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TRule {
    pub lhs: Term,
    pub rhs: Term,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PRule {
    pub lhs: Path,
    pub rhs: Path,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Term(TRule),
    Path(PRule),
}

/// `R = (R_T, R_P)` over the alphabet of a presentation. Rules are kept
/// sorted shortlex by left-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteSystem {
    alphabet: Alphabet,
    t_rules: Vec<TRule>,
    p_rules: Vec<PRule>,
    step_budget: usize,
}

impl RewriteSystem {
    /// `R_ε = {x|F(a) → x·a|id}` together with `RelB`, each oriented shortlex.
    pub fn initial(p: &KanPresentation) -> Result<Self, RewriteError> {
        let mut system = RewriteSystem::empty(p.alphabet().clone());
        for (a, arrow) in p.gamma().arrows.iter().enumerate() {
            let image = p.functor_arrow(a);
            for &x in p.elements_of(arrow.src) {
                let y = p.act_on_element(a, x).expect("total action");
                let lhs = Term::with_word(x, image.arrows().to_vec());
                let rhs = Term::with_word(y, Vec::new());
                if let Some(rule) = system.orient_terms(lhs, rhs)? {
                    system.insert_t(rule);
                }
            }
        }
        for (l, r) in p.relations() {
            if let Some(rule) = system.orient_paths(l.clone(), r.clone())? {
                system.insert_p(rule);
            }
        }
        Ok(system)
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        RewriteSystem {
            alphabet,
            t_rules: Vec::new(),
            p_rules: Vec::new(),
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }

    /// Builds a system from explicit rules, checking orientation and that
    /// every rule preserves the target object.
    pub fn from_rules(
        alphabet: Alphabet,
        t_rules: Vec<TRule>,
        p_rules: Vec<PRule>,
    ) -> Result<Self, RewriteError> {
        let mut system = RewriteSystem::empty(alphabet);
        for rule in t_rules {
            let ok = rule.lhs > rule.rhs
                && rule.lhs.target(&system.alphabet) == rule.rhs.target(&system.alphabet);
            if !ok {
                return Err(RewriteError::InvalidRule(system.format_t_rule(&rule)));
            }
            system.insert_t(rule);
        }
        for rule in p_rules {
            let ok = !rule.lhs.is_identity()
                && rule.lhs > rule.rhs
                && rule.lhs.start() == rule.rhs.start()
                && rule.lhs.target(&system.alphabet) == rule.rhs.target(&system.alphabet);
            if !ok {
                return Err(RewriteError::InvalidRule(system.format_p_rule(&rule)));
            }
            system.insert_p(rule);
        }
        Ok(system)
    }

    pub fn with_step_budget(mut self, budget: usize) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn step_budget(&self) -> usize {
        self.step_budget
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn t_rules(&self) -> &[TRule] {
        &self.t_rules
    }

    pub fn p_rules(&self) -> &[PRule] {
        &self.p_rules
    }

    pub fn rules(&self) -> impl Iterator<Item = Rule> + '_ {
        self.t_rules
            .iter()
            .cloned()
            .map(Rule::Term)
            .chain(self.p_rules.iter().cloned().map(Rule::Path))
    }

    pub fn rule_count(&self) -> usize {
        self.t_rules.len() + self.p_rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rule_count() == 0
    }

    pub fn format_t_rule(&self, rule: &TRule) -> String {
        alloc::format!(
            "{} -> {}",
            rule.lhs.display(&self.alphabet),
            rule.rhs.display(&self.alphabet)
        )
    }

    pub fn format_p_rule(&self, rule: &PRule) -> String {
        let side = |p: &Path| {
            if p.is_identity() {
                "id".to_string()
            } else {
                self.alphabet.format_word(p.arrows())
            }
        };
        alloc::format!("{} -> {}", side(&rule.lhs), side(&rule.rhs))
    }

    pub(crate) fn insert_t(&mut self, rule: TRule) -> bool {
        match self.t_rules.binary_search(&rule) {
            Ok(_) => false,
            Err(i) => {
                self.t_rules.insert(i, rule);
                true
            }
        }
    }

    pub(crate) fn insert_p(&mut self, rule: PRule) -> bool {
        match self.p_rules.binary_search(&rule) {
            Ok(_) => false,
            Err(i) => {
                self.p_rules.insert(i, rule);
                true
            }
        }
    }

    /// Larger side on the left; `None` when the sides coincide.
    pub(crate) fn orient_terms(&self, a: Term, b: Term) -> Result<Option<TRule>, RewriteError> {
        Ok(match a.cmp(&b) {
            Ordering::Greater => Some(TRule { lhs: a, rhs: b }),
            Ordering::Less => Some(TRule { lhs: b, rhs: a }),
            Ordering::Equal => None,
        })
    }

    pub(crate) fn orient_paths(&self, a: Path, b: Path) -> Result<Option<PRule>, RewriteError> {
        if a.arrows() == b.arrows() {
            if a.start() != b.start() {
                return Err(RewriteError::Unorientable(alloc::format!(
                    "{} = {}",
                    a.display(&self.alphabet),
                    b.display(&self.alphabet)
                )));
            }
            return Ok(None);
        }
        Ok(match a.cmp(&b) {
            Ordering::Greater => Some(PRule { lhs: a, rhs: b }),
            _ => Some(PRule { lhs: b, rhs: a }),
        })
    }

    pub fn tau(&self, t: &Term) -> ObjectId {
        t.target(&self.alphabet)
    }

    /// One rewrite at the leftmost position; term rules before word rules,
    /// smallest left-hand side first.
    pub fn reduce_once(&self, t: &Term) -> Option<Term> {
        if let Some(rule) = self
            .t_rules
            .iter()
            .find(|r| r.lhs.element == t.element && t.word.starts_with(&r.lhs.word))
        {
            let mut word = rule.rhs.word.clone();
            word.extend_from_slice(&t.word[rule.lhs.word.len()..]);
            return Some(Term::with_word(rule.rhs.element, word));
        }
        let word = self.rewrite_word_once(&t.word)?;
        Some(Term::with_word(t.element, word))
    }

    fn rewrite_word_once(&self, word: &[Symbol]) -> Option<Vec<Symbol>> {
        for pos in 0..word.len() {
            if let Some(rule) = self
                .p_rules
                .iter()
                .find(|r| word[pos..].starts_with(r.lhs.arrows()))
            {
                let mut out = word[..pos].to_vec();
                out.extend_from_slice(rule.rhs.arrows());
                out.extend_from_slice(&word[pos + rule.lhs.len()..]);
                return Some(out);
            }
        }
        None
    }

    /// Every term reachable in exactly one rewrite, by any rule at any position.
    pub fn rewrites(&self, t: &Term) -> Vec<Term> {
        let mut out = Vec::new();
        for rule in &self.t_rules {
            if rule.lhs.element == t.element && t.word.starts_with(&rule.lhs.word) {
                let mut word = rule.rhs.word.clone();
                word.extend_from_slice(&t.word[rule.lhs.word.len()..]);
                out.push(Term::with_word(rule.rhs.element, word));
            }
        }
        for pos in 0..t.word.len() {
            for rule in &self.p_rules {
                if t.word[pos..].starts_with(rule.lhs.arrows()) {
                    let mut word = t.word[..pos].to_vec();
                    word.extend_from_slice(rule.rhs.arrows());
                    word.extend_from_slice(&t.word[pos + rule.lhs.len()..]);
                    out.push(Term::with_word(t.element, word));
                }
            }
        }
        out
    }

    pub fn is_irreducible(&self, t: &Term) -> bool {
        self.reduce_once(t).is_none()
    }

    /// `irr(t)`.
    pub fn reduce(&self, t: &Term) -> Result<Term, RewriteError> {
        let mut current = t.clone();
        for _ in 0..self.step_budget {
            match self.reduce_once(&current) {
                Some(next) => current = next,
                None => return Ok(current),
            }
        }
        if self.is_irreducible(&current) {
            Ok(current)
        } else {
            Err(RewriteError::StepBudgetExceeded(self.step_budget))
        }
    }

    /// The full sequence `t = t0 → t1 → ⋯ → irr(t)`.
    pub fn reduce_trace(&self, t: &Term) -> Result<Vec<Term>, RewriteError> {
        let mut trace = alloc::vec![t.clone()];
        while let Some(next) = self.reduce_once(trace.last().expect("nonempty")) {
            if trace.len() > self.step_budget {
                return Err(RewriteError::StepBudgetExceeded(self.step_budget));
            }
            trace.push(next);
        }
        Ok(trace)
    }

    /// Normal form of a path under the word rules alone.
    pub fn reduce_path(&self, p: &Path) -> Result<Path, RewriteError> {
        let mut word = p.arrows().to_vec();
        for _ in 0..self.step_budget {
            match self.rewrite_word_once(&word) {
                Some(next) => word = next,
                None => {
                    return Ok(Path {
                        start: p.start(),
                        arrows: word,
                    })
                }
            }
        }
        Err(RewriteError::StepBudgetExceeded(self.step_budget))
    }

    /// `irr(t·p)`.
    pub fn act(&self, t: &Term, p: &Path) -> Result<Term, RewriteError> {
        if self.tau(t) != p.start() {
            return Err(RewriteError::NotComposable);
        }
        let mut word = t.word.clone();
        word.extend_from_slice(p.arrows());
        self.reduce(&Term::with_word(t.element, word))
    }

    /// `ε(x) = irr(x|id_FA)`.
    pub fn epsilon(&self, x: Symbol) -> Result<Term, RewriteError> {
        if x.index() >= self.alphabet.len() || !self.alphabet.is_element(x) {
            return Err(RewriteError::UnknownElement(alloc::format!("#{}", x.0)));
        }
        self.reduce(&Term::with_word(x, Vec::new()))
    }

    /// [`epsilon`](Self::epsilon) by element name.
    pub fn epsilon_named(&self, name: &str) -> Result<Term, RewriteError> {
        let x = self
            .alphabet
            .lookup_symbol(name)
            .filter(|&s| self.alphabet.is_element(s))
            .ok_or_else(|| RewriteError::UnknownElement(name.to_string()))?;
        self.epsilon(x)
    }
}

#[cfg(test)]
pub(crate) mod tests;
