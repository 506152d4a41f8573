use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::presentation::{KanPresentation, RawArrow, RawGraph, RawPath, RawPresentation};

fn names(text: &str) -> Vec<String> {
    text.split_whitespace().map(ToString::to_string).collect()
}

fn graph(objects: &str, arrows: &[(&str, &str, &str)]) -> RawGraph {
    RawGraph {
        objects: names(objects),
        arrows: arrows
            .iter()
            .map(|(n, s, t)| RawArrow {
                name: n.to_string(),
                src: s.to_string(),
                tgt: t.to_string(),
            })
            .collect(),
    }
}

fn path(text: &str) -> RawPath {
    RawPath {
        start: None,
        arrows: names(text),
    }
}

pub(crate) fn example_raw() -> RawPresentation {
    RawPresentation {
        gamma: graph("A1 A2", &[("a1", "A1", "A2"), ("a2", "A2", "A1")]),
        delta: graph(
            "B1 B2 B3",
            &[
                ("b1", "B1", "B2"),
                ("b2", "B2", "B3"),
                ("b3", "B3", "B1"),
                ("b4", "B1", "B1"),
                ("b5", "B1", "B3"),
            ],
        ),
        relations: alloc::vec![(path("b1 b2 b3"), path("b4"))],
        elements: alloc::vec![
            ("A1".to_string(), names("x1 x2 x3")),
            ("A2".to_string(), names("y1 y2")),
        ],
        actions: alloc::vec![
            (
                "a1".to_string(),
                alloc::vec![
                    ("x1".to_string(), "y1".to_string()),
                    ("x2".to_string(), "y2".to_string()),
                    ("x3".to_string(), "y1".to_string()),
                ],
            ),
            (
                "a2".to_string(),
                alloc::vec![
                    ("y1".to_string(), "x1".to_string()),
                    ("y2".to_string(), "x2".to_string()),
                ],
            ),
        ],
        functor_objects: alloc::vec![
            ("A1".to_string(), "B1".to_string()),
            ("A2".to_string(), "B2".to_string()),
        ],
        functor_arrows: alloc::vec![
            ("a1".to_string(), path("b1")),
            ("a2".to_string(), path("b2 b3"))
        ],
        order: Some(names("x1 x2 x3 y1 y2 b1 b2 b3 b4 b5")),
    }
}

pub(crate) fn example() -> KanPresentation {
    KanPresentation::from_raw(&example_raw()).expect("example presentation is valid")
}

/// Every term of `p` whose flattening has length at most `max_len`, in
/// shortlex order of flattenings.
pub(crate) fn all_terms(p: &KanPresentation, max_len: usize) -> Vec<crate::rewriting::Term> {
    use crate::rewriting::Term;
    let a = p.alphabet();
    let mut layer: Vec<Term> = a
        .elements()
        .map(|x| Term::new(a, x, Vec::new()).expect("element term"))
        .collect();
    let mut out = Vec::new();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for t in &layer {
            for b in a.arrows() {
                let mut word = t.word().to_vec();
                word.push(b);
                if let Some(longer) = Term::new(a, t.element(), word) {
                    next.push(longer);
                }
            }
        }
        out.append(&mut layer);
        layer = next;
    }
    out.sort();
    out
}

/// Every path of `p` with at most `max_len` arrows, identities included.
pub(crate) fn all_paths(p: &KanPresentation, max_len: usize) -> Vec<crate::presentation::Path> {
    use crate::presentation::Path;
    let a = p.alphabet();
    let mut layer: Vec<Path> = a.objects().map(Path::identity).collect();
    let mut out = Vec::new();
    for _ in 0..=max_len {
        let next = layer
            .iter()
            .flat_map(|q| {
                a.arrows()
                    .filter(move |&b| a.arrow_ends(b).expect("arrow").0 == q.target(a))
                    .map(move |b| q.then(&[b]))
            })
            .collect();
        out.append(&mut layer);
        layer = next;
    }
    out
}

/// Membership by direct recursion on the expression, independent of any
/// automaton construction.
pub(crate) fn regex_matches(r: &crate::language::Regex, w: &[crate::alphabet::Symbol]) -> bool {
    use crate::language::Regex;
    fn seq(parts: &[Regex], w: &[crate::alphabet::Symbol]) -> bool {
        match parts.split_first() {
            None => w.is_empty(),
            Some((first, rest)) => {
                (0..=w.len()).any(|k| regex_matches(first, &w[..k]) && seq(rest, &w[k..]))
            }
        }
    }
    match r {
        Regex::Empty => false,
        Regex::Id => w.is_empty(),
        Regex::Sym(s) => w == [*s],
        Regex::Union(parts) => parts.iter().any(|p| regex_matches(p, w)),
        Regex::Concat(parts) => seq(parts, w),
        Regex::Star(inner) => {
            w.is_empty()
                || (1..=w.len()).any(|k| regex_matches(inner, &w[..k]) && regex_matches(r, &w[k..]))
        }
    }
}

/// All words over the first `letters` symbols with length at most `max_len`.
pub(crate) fn all_words(letters: u32, max_len: usize) -> Vec<Vec<crate::alphabet::Symbol>> {
    use crate::alphabet::Symbol;
    let mut out = alloc::vec![Vec::new()];
    let mut layer = alloc::vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..letters {
                let mut longer: Vec<Symbol> = w.clone();
                longer.push(Symbol(a));
                next.push(longer);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// A transition table with its own simulation, used as the reference
/// machine for randomized tests.
#[derive(Clone, Debug)]
pub(crate) struct Table {
    pub letters: usize,
    pub delta: Vec<Vec<Option<usize>>>,
    pub accepting: Vec<bool>,
}

impl Table {
    pub(crate) fn accepts(&self, w: &[crate::alphabet::Symbol]) -> bool {
        let mut s = 0;
        for a in w {
            match self.delta[s][a.index()] {
                Some(t) => s = t,
                None => return false,
            }
        }
        self.accepting[s]
    }

    pub(crate) fn to_dfa(&self) -> crate::automata::Dfa {
        use crate::alphabet::Symbol;
        use crate::automata::{Dfa, StateLabel};
        let mut d = Dfa::new(self.letters, StateLabel::Num(0), self.accepting[0]);
        for s in 1..self.delta.len() {
            d.add_state(StateLabel::Num(s as u32), self.accepting[s]);
        }
        for (s, row) in self.delta.iter().enumerate() {
            for (a, to) in row.iter().enumerate() {
                if let Some(to) = to {
                    d.set_transition(s, Symbol(a as u32), *to);
                }
            }
        }
        d
    }
}

pub(crate) fn arb_table(
    max_states: usize,
    letters: usize,
) -> impl proptest::strategy::Strategy<Value = Table> {
    use proptest::prelude::*;
    (1..=max_states).prop_flat_map(move |n| {
        (
            proptest::collection::vec(
                proptest::collection::vec(proptest::option::weighted(0.8, 0..n), letters),
                n,
            ),
            proptest::collection::vec(any::<bool>(), n),
        )
            .prop_map(move |(delta, accepting)| Table {
                letters,
                delta,
                accepting,
            })
    })
}

pub(crate) fn arb_regex(
    letters: u32,
) -> impl proptest::strategy::Strategy<Value = crate::language::Regex> {
    use crate::alphabet::Symbol;
    use crate::language::Regex;
    use alloc::boxed::Box;
    use proptest::prelude::*;
    let leaf = prop_oneof![
        1 => Just(Regex::Empty),
        1 => Just(Regex::Id),
        6 => (0..letters).prop_map(|i| Regex::Sym(Symbol(i))),
    ];
    leaf.prop_recursive(4, 24, 3, |inner| {
        prop_oneof![
            proptest::collection::vec(inner.clone(), 2..4).prop_map(Regex::Concat),
            proptest::collection::vec(inner.clone(), 2..4).prop_map(Regex::Union),
            inner.prop_map(|r| Regex::Star(Box::new(r))),
        ]
    })
}
