use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::{AutomatonError, Nfa, StateLabel};
use crate::alphabet::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LanguageSize {
    /// Saturates at `u128::MAX`.
    Finite(u128),
    Infinite,
}

/// A deterministic automaton, possibly incomplete. A missing transition is
/// a crash, which rejects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet_len: usize,
    labels: Vec<StateLabel>,
    initial: usize,
    accepting: Vec<bool>,
    delta: Vec<Vec<Option<usize>>>,
}

impl Dfa {
    /// A machine with a single (initial) state and no transitions.
    pub fn new(alphabet_len: usize, initial: StateLabel, accepting: bool) -> Self {
        Dfa {
            alphabet_len,
            labels: vec![initial],
            initial: 0,
            accepting: vec![accepting],
            delta: vec![vec![None; alphabet_len]],
        }
    }

    pub fn add_state(&mut self, label: StateLabel, accepting: bool) -> usize {
        debug_assert!(!self.labels.contains(&label), "duplicate state label");
        self.labels.push(label);
        self.accepting.push(accepting);
        self.delta.push(vec![None; self.alphabet_len]);
        self.labels.len() - 1
    }

    pub fn set_transition(&mut self, from: usize, symbol: Symbol, to: usize) {
        self.delta[from][symbol.index()] = Some(to);
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

    pub fn initial(&self) -> usize {
        self.initial
    }

    pub fn label(&self, state: usize) -> &StateLabel {
        &self.labels[state]
    }

    pub fn find_state(&self, label: &StateLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn transition(&self, state: usize, symbol: Symbol) -> Option<usize> {
        self.delta[state][symbol.index()]
    }

    /// `δ` is total.
    pub fn is_complete(&self) -> bool {
        self.delta.iter().flatten().all(Option::is_some)
    }

    /// `δ*(s₀, w)`, or `None` if the machine crashes.
    pub fn run(&self, word: &[Symbol]) -> Result<Option<usize>, AutomatonError> {
        let mut state = self.initial;
        for &s in word {
            if s.index() >= self.alphabet_len {
                return Err(AutomatonError::UnknownSymbol(s));
            }
            match self.delta[state][s.index()] {
                Some(next) => state = next,
                None => {
                    if let Some(&bad) = word.iter().find(|s| s.index() >= self.alphabet_len) {
                        return Err(AutomatonError::UnknownSymbol(bad));
                    }
                    return Ok(None);
                }
            }
        }
        Ok(Some(state))
    }

    pub fn accepts(&self, word: &[Symbol]) -> Result<bool, AutomatonError> {
        Ok(self.run(word)?.is_some_and(|s| self.accepting[s]))
    }

    pub fn to_nfa(&self) -> Nfa {
        let mut nfa = Nfa::new(self.alphabet_len);
        for (label, &acc) in self.labels.iter().zip(&self.accepting) {
            nfa.add_state(label.clone(), acc);
        }
        nfa.add_initial(self.initial);
        for (s, row) in self.delta.iter().enumerate() {
            for (a, to) in row.iter().enumerate() {
                if let Some(to) = to {
                    nfa.add_transition(s, Symbol(a as u32), *to);
                }
            }
        }
        nfa
    }

    /// Routes every missing transition to one new non-accepting dump state.
    pub fn completed(&self) -> Dfa {
        if self.is_complete() {
            return self.clone();
        }
        let mut out = self.clone();
        let dump_label = if out.labels.contains(&StateLabel::Dump) {
            StateLabel::Num(out.labels.len() as u32)
        } else {
            StateLabel::Dump
        };
        let dump = out.add_state(dump_label, false);
        for row in &mut out.delta {
            for slot in row.iter_mut() {
                slot.get_or_insert(dump);
            }
        }
        out
    }

    /// Swaps accepting and non-accepting states of a complete machine.
    pub fn complement(&self) -> Result<Dfa, AutomatonError> {
        if !self.is_complete() {
            return Err(AutomatonError::Incomplete);
        }
        let mut out = self.clone();
        for acc in &mut out.accepting {
            *acc = !*acc;
        }
        Ok(out)
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[self.initial] = true;
        let mut stack = vec![self.initial];
        while let Some(s) = stack.pop() {
            for &to in self.delta[s].iter().flatten() {
                if !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }

    fn coaccessible(&self) -> Vec<bool> {
        let n = self.state_count();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, row) in self.delta.iter().enumerate() {
            for &to in row.iter().flatten() {
                preds[to].push(s);
            }
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &preds[s] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Keeps the states marked in `keep`; transitions into dropped states
    /// disappear. The initial state must be kept.
    fn restrict(&self, keep: &[bool]) -> Dfa {
        debug_assert!(keep[self.initial]);
        let mut map = vec![None; self.state_count()];
        let mut out = Dfa {
            alphabet_len: self.alphabet_len,
            labels: Vec::new(),
            initial: 0,
            accepting: Vec::new(),
            delta: Vec::new(),
        };
        for s in (0..self.state_count()).filter(|&s| keep[s]) {
            map[s] = Some(out.labels.len());
            out.labels.push(self.labels[s].clone());
            out.accepting.push(self.accepting[s]);
        }
        out.initial = map[self.initial].expect("initial kept");
        for s in (0..self.state_count()).filter(|&s| keep[s]) {
            out.delta.push(
                self.delta[s]
                    .iter()
                    .map(|to| to.and_then(|t| map[t]))
                    .collect(),
            );
        }
        out
    }

    fn empty_like(&self) -> Dfa {
        Dfa::new(self.alphabet_len, self.labels[self.initial].clone(), false)
    }

    /// Drops states that are unreachable or cannot reach acceptance. The
    /// empty language trims to a single non-accepting state.
    pub fn trim(&self) -> Dfa {
        let reach = self.reachable();
        let live = self.coaccessible();
        if !live[self.initial] {
            return self.empty_like();
        }
        let keep: Vec<bool> = reach.iter().zip(&live).map(|(&r, &l)| r && l).collect();
        self.restrict(&keep)
    }

    /// Drops non-accepting states whose label involves the dump state. In a
    /// complemented subset construction of `A_B` these are exactly the
    /// states that have already seen a reducible or invalid prefix.
    pub fn without_dump(&self) -> Dfa {
        let keep: Vec<bool> = (0..self.state_count())
            .map(|s| self.accepting[s] || !self.labels[s].contains_dump())
            .collect();
        if !keep[self.initial] {
            return self.empty_like();
        }
        self.restrict(&keep)
    }

    /// States in breadth-first order from the initial state, symbols in
    /// alphabet order. Unreachable states are omitted.
    pub fn bfs_order(&self) -> Vec<usize> {
        let mut seen = vec![false; self.state_count()];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        seen[self.initial] = true;
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for &to in self.delta[s].iter().flatten() {
                if !seen[to] {
                    seen[to] = true;
                    queue.push_back(to);
                }
            }
        }
        order
    }

    /// The reachable part, renumbered in [`bfs_order`](Self::bfs_order), so
    /// the initial state is state 0.
    pub fn renumbered(&self) -> Dfa {
        let order = self.bfs_order();
        let mut map = vec![None; self.state_count()];
        for (i, &s) in order.iter().enumerate() {
            map[s] = Some(i);
        }
        Dfa {
            alphabet_len: self.alphabet_len,
            labels: order.iter().map(|&s| self.labels[s].clone()).collect(),
            initial: 0,
            accepting: order.iter().map(|&s| self.accepting[s]).collect(),
            delta: order
                .iter()
                .map(|&s| {
                    self.delta[s]
                        .iter()
                        .map(|to| to.and_then(|t| map[t]))
                        .collect()
                })
                .collect(),
        }
    }

    /// The minimal complete machine for the same language, states numbered
    /// breadth-first and labelled `Num(i)`. Two machines accept the same
    /// language iff their minimisations are equal.
    pub fn minimize(&self) -> Dfa {
        let d = self.completed().renumbered();
        let n = d.state_count();
        let mut class: Vec<usize> = d.accepting.iter().map(|&a| usize::from(a)).collect();
        let mut count = normalise(&mut class);
        loop {
            let mut sigs: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
            let mut next = vec![0; n];
            for s in 0..n {
                let sig = (
                    class[s],
                    d.delta[s]
                        .iter()
                        .map(|t| class[t.expect("complete")])
                        .collect(),
                );
                let fresh = sigs.len();
                next[s] = *sigs.entry(sig).or_insert(fresh);
            }
            let new_count = normalise(&mut next);
            class = next;
            if new_count == count {
                break;
            }
            count = new_count;
        }

        let mut quotient = Dfa {
            alphabet_len: d.alphabet_len,
            labels: (0..count).map(|i| StateLabel::Num(i as u32)).collect(),
            initial: class[d.initial],
            accepting: vec![false; count],
            delta: vec![vec![None; d.alphabet_len]; count],
        };
        for s in 0..n {
            let c = class[s];
            quotient.accepting[c] = d.accepting[s];
            for (a, t) in d.delta[s].iter().enumerate() {
                quotient.delta[c][a] = Some(class[t.expect("complete")]);
            }
        }
        let mut out = quotient.renumbered();
        for (i, label) in out.labels.iter_mut().enumerate() {
            *label = StateLabel::Num(i as u32);
        }
        out
    }

    /// Language equality, by comparing minimal machines.
    pub fn equivalent(&self, other: &Dfa) -> Result<bool, AutomatonError> {
        if self.alphabet_len != other.alphabet_len {
            return Err(AutomatonError::AlphabetMismatch {
                left: self.alphabet_len,
                right: other.alphabet_len,
            });
        }
        let a = self.minimize();
        let b = other.minimize();
        Ok(a.accepting == b.accepting && a.delta == b.delta)
    }

    /// Accepted words of length at most `max_len`, in shortlex order.
    pub fn enumerate(&self, max_len: usize) -> Vec<Vec<Symbol>> {
        let t = self.trim();
        let mut out = Vec::new();
        if !t.accepting.iter().any(|&a| a) {
            return out;
        }
        let mut frontier: Vec<(Vec<Symbol>, usize)> = vec![(Vec::new(), t.initial)];
        for len in 0..=max_len {
            out.extend(
                frontier
                    .iter()
                    .filter(|(_, s)| t.accepting[*s])
                    .map(|(w, _)| w.clone()),
            );
            if len == max_len {
                break;
            }
            let mut next = Vec::new();
            for (w, s) in &frontier {
                for (a, to) in t.delta[*s].iter().enumerate() {
                    if let Some(to) = to {
                        let mut w2 = w.clone();
                        w2.push(Symbol(a as u32));
                        next.push((w2, *to));
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        out
    }

    pub fn count_language(&self) -> LanguageSize {
        let t = self.trim();
        if !t.accepting.iter().any(|&a| a) {
            return LanguageSize::Finite(0);
        }
        // 0 unvisited, 1 on the stack, 2 done
        let n = t.state_count();
        let mut color = vec![0u8; n];
        let mut count = vec![0u128; n];
        let mut stack = vec![(t.initial, 0usize)];
        color[t.initial] = 1;
        while let Some(&mut (s, ref mut next_symbol)) = stack.last_mut() {
            if *next_symbol < t.alphabet_len {
                let a = *next_symbol;
                *next_symbol += 1;
                if let Some(to) = t.delta[s][a] {
                    match color[to] {
                        0 => {
                            color[to] = 1;
                            stack.push((to, 0));
                        }
                        1 => return LanguageSize::Infinite,
                        _ => {}
                    }
                }
            } else {
                let mut total = u128::from(t.accepting[s]);
                for &to in t.delta[s].iter().flatten() {
                    total = total.saturating_add(count[to]);
                }
                count[s] = total;
                color[s] = 2;
                stack.pop();
            }
        }
        LanguageSize::Finite(count[t.initial])
    }
}

/// Renames classes by first occurrence; returns the number of classes.
fn normalise(class: &mut [usize]) -> usize {
    let mut names = BTreeMap::new();
    for c in class.iter_mut() {
        let fresh = names.len();
        *c = *names.entry(*c).or_insert(fresh);
    }
    names.len()
}
