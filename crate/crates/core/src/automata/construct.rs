use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use super::{AutomatonError, Dfa, Nfa, StateLabel};
use crate::alphabet::{ObjectId, Symbol};
use crate::presentation::{KanPresentation, Path};
use crate::rewriting::{RewriteSystem, Term};

/// The complete DFA on `{s₀, d} ∪ ObΔ` accepting exactly the flattened
/// terms: `s₀` reads one element and moves to its base object, object states
/// follow composable arrows, everything else falls into `d`.
pub fn build_t_automaton(p: &KanPresentation) -> Dfa {
    let alphabet = p.alphabet();
    let mut dfa = Dfa::new(alphabet.len(), StateLabel::Start, false);
    let objects: Vec<usize> = alphabet
        .objects()
        .map(|b| dfa.add_state(StateLabel::Obj(b), true))
        .collect();
    let dump = dfa.add_state(StateLabel::Dump, false);
    for s in alphabet.symbols() {
        let from_start = match alphabet.element_base(s) {
            Some(base) => objects[base.index()],
            None => dump,
        };
        dfa.set_transition(0, s, from_start);
        for b in alphabet.objects() {
            let to = match alphabet.arrow_ends(s) {
                Some((src, tgt)) if src == b => objects[tgt.index()],
                _ => dump,
            };
            dfa.set_transition(objects[b.index()], s, to);
        }
        dfa.set_transition(dump, s, dump);
    }
    dfa
}

/// `A_B`: accepts `w` iff `w` is not the flattening of an irreducible term
/// with target `target`.
///
/// Three kinds of state run side by side. Object states check that the word
/// composes and remember where it has got to; term-prefix states follow the
/// left-hand sides of term rules from the element; path-prefix states follow
/// left-hand sides of word rules from every position. Completing a
/// left-hand side, reading an element after the first letter, or a
/// non-composable arrow leads to the absorbing accepting state `d`.
pub fn build_reducible_nfa(r: &RewriteSystem, target: ObjectId) -> Result<Nfa, AutomatonError> {
    let alphabet = r.alphabet();
    if target.index() >= alphabet.object_count() {
        return Err(AutomatonError::UnknownObject(target));
    }
    if !r.is_complete() {
        return Err(AutomatonError::SystemNotComplete);
    }
    let sets = r.lhs_sets();
    let lhs_t = &sets.terms.l;
    let ppl_t = &sets.terms.ppl;
    let lhs_p: BTreeSet<&[Symbol]> = sets.paths.l.iter().map(Path::arrows).collect();
    let ppl_p: BTreeMap<&[Symbol], &Path> =
        sets.paths.ppl.iter().map(|p| (p.arrows(), p)).collect();

    let mut nfa = Nfa::new(alphabet.len());
    let mut ids: BTreeMap<StateLabel, usize> = BTreeMap::new();
    let mut add = |nfa: &mut Nfa, label: StateLabel, accepting: bool| {
        let id = nfa.add_state(label.clone(), accepting);
        ids.insert(label, id);
    };
    add(&mut nfa, StateLabel::Start, true);
    for x in alphabet.elements() {
        let base = alphabet.element_base(x).expect("element");
        add(&mut nfa, StateLabel::Elem(x), base != target);
    }
    for u in ppl_t {
        add(&mut nfa, StateLabel::TPrefix(u.clone()), false);
    }
    for b in alphabet.objects() {
        add(&mut nfa, StateLabel::Obj(b), b != target);
    }
    for q in &sets.paths.ppl {
        add(&mut nfa, StateLabel::PPrefix(q.clone()), false);
    }
    add(&mut nfa, StateLabel::Dump, true);
    nfa.add_initial(ids[&StateLabel::Start]);

    let dump = ids[&StateLabel::Dump];
    let obj = |b: ObjectId| ids[&StateLabel::Obj(b)];
    let path_prefix = |word: &[Symbol]| {
        ppl_p
            .get(word)
            .map(|p| ids[&StateLabel::PPrefix((*p).clone())])
    };

    // Successors of a position whose next arrow `b` composes: the object
    // branch continues and `b` may open a word-rule prefix.
    let arrow_step = |b: Symbol| -> Option<Vec<usize>> {
        if lhs_p.contains(&[b][..]) {
            return None;
        }
        let (_, tgt) = alphabet.arrow_ends(b).expect("arrow");
        let mut out = alloc::vec![obj(tgt)];
        out.extend(path_prefix(&[b]));
        Some(out)
    };

    for state in 0..nfa.state_count() {
        let label = nfa.label(state).clone();
        for s in alphabet.symbols() {
            let targets: Option<Vec<usize>> = match (&label, alphabet.arrow_ends(s)) {
                (StateLabel::Dump, _) => None,
                (StateLabel::Start, None) => {
                    let bare = Term::new(alphabet, s, Vec::new()).expect("element");
                    (!lhs_t.contains(&bare)).then(|| alloc::vec![ids[&StateLabel::Elem(s)]])
                }
                (_, None) | (StateLabel::Start, Some(_)) => None,
                (StateLabel::Elem(x), Some((src, _))) => {
                    let base = alphabet.element_base(*x).expect("element");
                    let extended = Term::new(alphabet, *x, alloc::vec![s]);
                    match extended {
                        Some(t) if src == base && !lhs_t.contains(&t) => {
                            arrow_step(s).map(|mut out| {
                                if ppl_t.contains(&t) {
                                    out.push(ids[&StateLabel::TPrefix(t)]);
                                }
                                out
                            })
                        }
                        _ => None,
                    }
                }
                (StateLabel::TPrefix(u), Some((src, tgt))) => {
                    if u.target(alphabet) != src {
                        None
                    } else {
                        let mut word = u.word().to_vec();
                        word.push(s);
                        let extended = Term::new(alphabet, u.element(), word).expect("composable");
                        if lhs_t.contains(&extended) {
                            None
                        } else {
                            let mut out = alloc::vec![obj(tgt)];
                            if ppl_t.contains(&extended) {
                                out.push(ids[&StateLabel::TPrefix(extended)]);
                            }
                            Some(out)
                        }
                    }
                }
                (StateLabel::Obj(b), Some((src, _))) => {
                    if *b != src {
                        None
                    } else {
                        arrow_step(s)
                    }
                }
                (StateLabel::PPrefix(q), Some((src, tgt))) => {
                    if q.target(alphabet) != src {
                        None
                    } else {
                        let mut word = q.arrows().to_vec();
                        word.push(s);
                        if lhs_p.contains(word.as_slice()) {
                            None
                        } else {
                            let mut out = alloc::vec![obj(tgt)];
                            out.extend(path_prefix(&word));
                            Some(out)
                        }
                    }
                }
                (StateLabel::Subset(_) | StateLabel::Num(_), _) => unreachable!(),
            };
            match targets {
                Some(list) => {
                    for to in list {
                        nfa.add_transition(state, s, to);
                    }
                }
                None => nfa.add_transition(state, s, dump),
            }
        }
    }
    Ok(nfa)
}
