use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::{AutomatonError, Dfa, StateLabel};
use crate::alphabet::Symbol;

/// A nondeterministic automaton without ε-moves. Alphabet symbols are
/// `Symbol(0)..Symbol(alphabet_len)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Nfa {
    alphabet_len: usize,
    labels: Vec<StateLabel>,
    initial: BTreeSet<usize>,
    accepting: Vec<bool>,
    delta: Vec<Vec<BTreeSet<usize>>>,
}

impl Nfa {
    pub fn new(alphabet_len: usize) -> Self {
        Nfa {
            alphabet_len,
            labels: Vec::new(),
            initial: BTreeSet::new(),
            accepting: Vec::new(),
            delta: Vec::new(),
        }
    }

    pub fn add_state(&mut self, label: StateLabel, accepting: bool) -> usize {
        debug_assert!(!self.labels.contains(&label), "duplicate state label");
        self.labels.push(label);
        self.accepting.push(accepting);
        self.delta.push(vec![BTreeSet::new(); self.alphabet_len]);
        self.labels.len() - 1
    }

    pub fn add_initial(&mut self, state: usize) {
        self.initial.insert(state);
    }

    pub fn add_transition(&mut self, from: usize, symbol: Symbol, to: usize) {
        self.delta[from][symbol.index()].insert(to);
    }

    pub fn set_accepting(&mut self, state: usize, accepting: bool) {
        self.accepting[state] = accepting;
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet_len
    }

    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, state: usize) -> &StateLabel {
        &self.labels[state]
    }

    pub fn find_state(&self, label: &StateLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn initial(&self) -> &BTreeSet<usize> {
        &self.initial
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn successors(&self, state: usize, symbol: Symbol) -> &BTreeSet<usize> {
        &self.delta[state][symbol.index()]
    }

    pub fn transition_count(&self) -> usize {
        self.delta.iter().flatten().map(BTreeSet::len).sum()
    }

    pub fn step(&self, from: &BTreeSet<usize>, symbol: Symbol) -> BTreeSet<usize> {
        from.iter()
            .flat_map(|&s| self.delta[s][symbol.index()].iter().copied())
            .collect()
    }

    /// `δ*(S₀, w)`.
    pub fn run(&self, word: &[Symbol]) -> Result<BTreeSet<usize>, AutomatonError> {
        let mut current = self.initial.clone();
        for &s in word {
            if s.index() >= self.alphabet_len {
                return Err(AutomatonError::UnknownSymbol(s));
            }
            current = self.step(&current, s);
        }
        Ok(current)
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool, AutomatonError> {
        Ok(self.run(word)?.iter().any(|&s| self.accepting[s]))
    }

    /// Subset construction from the initial set. Only nonempty subsets become
    /// states, so the result may be incomplete.
    pub fn determinize(&self) -> Dfa {
        let label_of = |set: &BTreeSet<usize>| {
            StateLabel::Subset(set.iter().map(|&s| self.labels[s].clone()).collect())
        };
        let accepting_of = |set: &BTreeSet<usize>| set.iter().any(|&s| self.accepting[s]);

        let mut dfa = Dfa::new(
            self.alphabet_len,
            label_of(&self.initial),
            accepting_of(&self.initial),
        );
        let mut ids: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        ids.insert(self.initial.clone(), 0);
        let mut queue = VecDeque::from([self.initial.clone()]);
        while let Some(set) = queue.pop_front() {
            let from = ids[&set];
            for a in 0..self.alphabet_len {
                let symbol = Symbol(a as u32);
                let next = self.step(&set, symbol);
                if next.is_empty() {
                    continue;
                }
                let to = match ids.get(&next) {
                    Some(&id) => id,
                    None => {
                        let id = dfa.add_state(label_of(&next), accepting_of(&next));
                        ids.insert(next.clone(), id);
                        queue.push_back(next);
                        id
                    }
                };
                dfa.set_transition(from, symbol, to);
            }
        }
        dfa
    }
}
