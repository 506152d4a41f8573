mod common;

use kanext_core::automata::build_reducible_nfa;
use kanext_core::language::{format_term_regex, parse_regex, regex_to_nfa};
use kanext_core::{Dfa, EquationSystem, LanguageSize, Term};

use common::{completed, example};

fn k_machine(b: &str) -> Dfa {
    let p = example();
    let r = completed(&p);
    let b = p.alphabet().lookup_object(b).unwrap();
    build_reducible_nfa(&r, b)
        .unwrap()
        .determinize()
        .completed()
        .complement()
        .unwrap()
}

#[test]
fn solved_expressions_match_the_printed_ones() {
    let p = example();
    let a = p.alphabet();
    let printed = [
        ("B1", "(x1+x2+x3)|(b5 b3 (b4+b5 b3)* + id)"),
        ("B2", "(x1+x2+x3)|b5 b3 (b4+b5 b3)* b1 + (y1+y2)|id"),
        (
            "B3",
            "(x1+x2+x3)|(b5 b3 (b4+b5 b3)* (b1 b2+b5) + b5) + (y1+y2)|b2",
        ),
    ];
    for (b, text) in printed {
        let k = k_machine(b).minimize().trim();
        let solved = EquationSystem::from_dfa(&k).solve().swap_remove(0);
        let back = regex_to_nfa(&solved, a.len()).unwrap().determinize();
        let printed = regex_to_nfa(&parse_regex(text, a).unwrap(), a.len())
            .unwrap()
            .determinize();
        assert!(back.equivalent(&printed).unwrap(), "{b}");
        assert!(k.equivalent(&printed).unwrap(), "{b}");
        assert!(format_term_regex(&solved, a).factored);
        assert_eq!(k.count_language(), LanguageSize::Infinite);
    }
}

#[test]
fn members_of_k_b2() {
    let p = example();
    let words: Vec<String> = k_machine("B2")
        .enumerate(1)
        .iter()
        .map(|w| p.alphabet().format_word(w))
        .collect();
    assert_eq!(words, ["y1", "y2"]);
    assert!(k_machine("B1").enumerate(0).is_empty());
}

#[test]
fn members_are_normal_forms() {
    let p = example();
    let r = completed(&p);
    for b in ["B1", "B2", "B3"] {
        let target = p.alphabet().lookup_object(b).unwrap();
        for w in k_machine(b).enumerate(7) {
            let t = Term::from_flat(p.alphabet(), &w).unwrap();
            assert_eq!(r.tau(&t), target);
            assert!(r.is_irreducible(&t));
        }
    }
}
