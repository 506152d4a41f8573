use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::*;
use crate::fixtures::{all_paths, all_terms, example};
use crate::presentation::KanPresentation;

const GOLDEN: [&str; 9] = [
    "x1 | b1 -> y1 | id",
    "x2 | b1 -> y2 | id",
    "x3 | b1 -> y1 | id",
    "y1 | b2 b3 -> x1 | id",
    "y2 | b2 b3 -> x2 | id",
    "x1 | b4 -> x1 | id",
    "x2 | b4 -> x2 | id",
    "x3 | b4 -> x1 | id",
    "b1 b2 b3 -> b4",
];

fn dump(r: &RewriteSystem) -> BTreeSet<String> {
    r.t_rules()
        .iter()
        .map(|t| r.format_t_rule(t))
        .chain(r.p_rules().iter().map(|p| r.format_p_rule(p)))
        .collect()
}

fn completed(p: &KanPresentation) -> RewriteSystem {
    RewriteSystem::initial(p)
        .unwrap()
        .complete(DEFAULT_MAX_ROUNDS)
        .unwrap()
        .system
}

fn term(p: &KanPresentation, text: &str) -> Term {
    Term::parse(p, text).unwrap()
}

fn show(r: &RewriteSystem, t: &Term) -> String {
    t.display(r.alphabet()).to_string()
}

#[test]
fn initial_system() {
    let p = example();
    let r = RewriteSystem::initial(&p).unwrap();
    let rules = dump(&r);
    assert_eq!(rules.len(), 6);
    assert!(rules.contains("x1 | b1 -> y1 | id"));
    assert!(rules.contains("y1 | b2 b3 -> x1 | id"));
    assert!(rules.contains("b1 b2 b3 -> b4"));
    assert_eq!(r.p_rules().len(), 1);
}

#[test]
fn relations_are_oriented() {
    let mut raw = crate::fixtures::example_raw();
    let (l, rr) = raw.relations.pop().unwrap();
    raw.relations.push((rr, l));
    let p = KanPresentation::from_raw(&raw).unwrap();
    let r = RewriteSystem::initial(&p).unwrap();
    assert_eq!(r.format_p_rule(&r.p_rules()[0]), "b1 b2 b3 -> b4");
}

#[test]
fn empty_system() {
    let raw = crate::presentation::RawPresentation {
        delta: crate::presentation::RawGraph {
            objects: alloc::vec!["B".to_string()],
            arrows: Vec::new(),
        },
        order: Some(Vec::new()),
        ..Default::default()
    };
    let p = KanPresentation::from_raw(&raw).unwrap();
    let r = RewriteSystem::initial(&p).unwrap();
    assert!(r.is_empty());
    assert!(r.is_complete());
    let c = r.complete(DEFAULT_MAX_ROUNDS).unwrap();
    assert!(c.system.is_empty());
    assert_eq!(c.rules_added, 0);
    let sets = c.system.lhs_sets();
    assert!(sets.terms.l.is_empty() && sets.terms.pl.is_empty() && sets.terms.ppl.is_empty());
    assert!(sets.paths.l.is_empty() && sets.paths.pl.is_empty() && sets.paths.ppl.is_empty());
}

#[test]
fn shortlex_on_terms() {
    let p = example();
    assert!(term(&p, "y1 | b2 b3") > term(&p, "x1 | id"));
    assert!(term(&p, "x1 | b4") < term(&p, "x2 | b4"));
    assert_eq!(
        p.parse_path("b4", None)
            .unwrap()
            .cmp(&p.parse_path("b4", None).unwrap()),
        Ordering::Equal
    );
}

#[test]
fn golden_completion() {
    let p = example();
    let r = completed(&p);
    let expected: BTreeSet<String> = GOLDEN.iter().map(|s| s.to_string()).collect();
    assert_eq!(dump(&r), expected);
    assert!(r.is_complete());
    assert!(!RewriteSystem::initial(&p).unwrap().is_complete());
}

#[test]
fn completion_is_a_fixed_point() {
    let p = example();
    let r = completed(&p);
    let again = r.complete(DEFAULT_MAX_ROUNDS).unwrap();
    assert_eq!(again.system, r);
    assert_eq!(again.rounds, 0);
}

#[test]
fn completion_round_budget() {
    let p = example();
    let err = RewriteSystem::initial(&p).unwrap().complete(0).unwrap_err();
    match err {
        RewriteError::RoundsExhausted { rounds, partial } => {
            assert_eq!(rounds, 0);
            assert_eq!(partial.rule_count(), 6);
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn critical_pairs_of_initial_system() {
    let p = example();
    let r = RewriteSystem::initial(&p).unwrap();
    let pairs = r.critical_pairs().unwrap();
    let find = |overlap: &str| {
        let o = term(&p, overlap);
        pairs
            .iter()
            .find_map(|c| match c {
                CriticalPair::Terms {
                    overlap,
                    left,
                    right,
                } if *overlap == o => Some(BTreeSet::from([show(&r, left), show(&r, right)])),
                _ => None,
            })
            .unwrap_or_else(|| panic!("no pair on {overlap}"))
    };
    assert_eq!(
        find("x1 | b1 b2 b3"),
        BTreeSet::from(["x1 | id".to_string(), "x1 | b4".to_string()])
    );
    assert_eq!(
        find("x3 | b1 b2 b3"),
        BTreeSet::from(["x1 | id".to_string(), "x3 | b4".to_string()])
    );
}

#[test]
fn disjoint_rules_have_no_critical_pairs() {
    let p = example();
    let a = p.alphabet();
    let t = |text: &str| term(&p, text);
    let rules = alloc::vec![
        TRule {
            lhs: t("x1 | b4 b4"),
            rhs: t("x1 | b4")
        },
        TRule {
            lhs: t("y1 | b2 b3"),
            rhs: t("x1 | id")
        },
    ];
    let r = RewriteSystem::from_rules(a.clone(), rules, Vec::new()).unwrap();
    assert!(r.critical_pairs().unwrap().is_empty());
}

#[test]
fn reduce_once_examples() {
    let p = example();
    let r = completed(&p);
    let once = |text: &str| r.reduce_once(&term(&p, text)).map(|t| show(&r, &t));
    assert_eq!(once("x1 | b1 b2").as_deref(), Some("y1 | b2"));
    assert_eq!(once("x1 | b5 b3"), None);
    assert_eq!(once("y1 | b2 b3 b4").as_deref(), Some("x1 | b4"));
}

#[test]
fn reduce_examples() {
    let p = example();
    let r = completed(&p);
    let nf = |text: &str| show(&r, &r.reduce(&term(&p, text)).unwrap());
    assert_eq!(nf("y1 | b2 b3 b4"), "x1 | id");
    assert_eq!(nf("x3 | b4"), "x1 | id");
    assert_eq!(nf("x1 | b5 b3"), "x1 | b5 b3");
}

#[test]
fn step_budget_is_enforced() {
    let p = example();
    let r = completed(&p).with_step_budget(1);
    assert_eq!(
        r.reduce(&term(&p, "y1 | b2 b3 b4")),
        Err(RewriteError::StepBudgetExceeded(1))
    );
}

#[test]
fn tau_examples() {
    let p = example();
    let r = completed(&p);
    let a = p.alphabet();
    let obj = |n: &str| a.lookup_object(n).unwrap();
    assert_eq!(r.tau(&term(&p, "x1 | b5 b3")), obj("B1"));
    assert_eq!(r.tau(&term(&p, "y1 | id")), obj("B2"));
    assert_eq!(r.tau(&term(&p, "x1 | b5")), obj("B3"));
}

#[test]
fn act_examples() {
    let p = example();
    let r = completed(&p);
    let act = |t: &str, path: &str| {
        r.act(&term(&p, t), &p.parse_path(path, None).unwrap())
            .map(|t| show(&r, &t))
    };
    assert_eq!(act("x1 | id", "b4").unwrap(), "x1 | id");
    assert_eq!(act("x1 | b5", "b3").unwrap(), "x1 | b5 b3");
    assert_eq!(act("y1 | id", "b2 b3").unwrap(), "x1 | id");
    assert_eq!(act("x1 | id", "b2"), Err(RewriteError::NotComposable));
}

#[test]
fn epsilon_examples() {
    let p = example();
    let r = completed(&p);
    assert_eq!(show(&r, &r.epsilon_named("x1").unwrap()), "x1 | id");
    assert_eq!(show(&r, &r.epsilon_named("y2").unwrap()), "y2 | id");
    assert!(matches!(
        r.epsilon_named("b1"),
        Err(RewriteError::UnknownElement(_))
    ));

    let t = |text: &str| term(&p, text);
    let collapse = RewriteSystem::from_rules(
        p.alphabet().clone(),
        alloc::vec![TRule {
            lhs: t("x2 | id"),
            rhs: t("x1 | id")
        }],
        Vec::new(),
    )
    .unwrap();
    assert_eq!(
        show(&collapse, &collapse.epsilon_named("x2").unwrap()),
        "x1 | id"
    );
}

#[test]
fn unorientable_rules_are_rejected() {
    let p = example();
    let a = p.alphabet();
    let t = term(&p, "x1 | b4");
    assert!(matches!(
        RewriteSystem::from_rules(
            a.clone(),
            alloc::vec![TRule {
                lhs: t.clone(),
                rhs: t
            }],
            Vec::new()
        ),
        Err(RewriteError::InvalidRule(_))
    ));
}

#[test]
fn golden_prefix_sets() {
    let p = example();
    let r = completed(&p);
    let sets = r.lhs_sets();
    let terms: BTreeSet<String> = sets.terms.ppl.iter().map(|t| show(&r, t)).collect();
    let paths: BTreeSet<String> = sets
        .paths
        .ppl
        .iter()
        .map(|q| q.display(p.alphabet()).to_string())
        .collect();
    assert_eq!(
        terms,
        BTreeSet::from(["y1 | b2".to_string(), "y2 | b2".to_string()])
    );
    assert_eq!(
        paths,
        BTreeSet::from(["b1".to_string(), "b1 b2".to_string()])
    );
    let l: Vec<String> = sets
        .paths
        .l
        .iter()
        .map(|q| q.display(p.alphabet()).to_string())
        .collect();
    assert_eq!(l, ["b1 b2 b3"]);
    assert!(sets.terms.ppl.is_subset(&sets.terms.pl));
    assert!(sets.terms.l.is_subset(&sets.terms.pl));
    assert!(sets.paths.ppl.is_subset(&sets.paths.pl));
    assert!(sets.paths.l.is_subset(&sets.paths.pl));
}

#[test]
fn reduction_strictly_decreases_and_preserves_tau() {
    let p = example();
    let r = completed(&p);
    for t in all_terms(&p, 8) {
        let trace = r.reduce_trace(&t).unwrap();
        for pair in trace.windows(2) {
            assert!(pair[1] < pair[0], "{} did not decrease", show(&r, &pair[0]));
            assert!(r.rewrites(&pair[0]).contains(&pair[1]));
        }
        let nf = trace.last().unwrap();
        assert!(r.is_irreducible(nf));
        assert_eq!(r.tau(nf), r.tau(&t));
        assert_eq!(*nf, r.reduce(&t).unwrap());
    }
}

fn random_normal_form(r: &RewriteSystem, t: &Term, rng: &mut StdRng) -> Term {
    let mut current = t.clone();
    loop {
        let next = r.rewrites(&current);
        if next.is_empty() {
            return current;
        }
        current = next[rng.gen_range(0..next.len())].clone();
    }
}

#[test]
fn randomized_reduction_is_confluent() {
    let p = example();
    let r = completed(&p);
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for t in all_terms(&p, 8) {
        let expected = r.reduce(&t).unwrap();
        for _ in 0..4 {
            assert_eq!(random_normal_form(&r, &t, &mut rng), expected);
        }
    }
}

#[test]
fn initial_system_is_not_confluent() {
    let p = example();
    let r = RewriteSystem::initial(&p).unwrap();
    let t = term(&p, "x1 | b1 b2 b3");
    let mut normal_forms = BTreeSet::new();
    let mut rng = StdRng::seed_from_u64(1);
    for _ in 0..32 {
        normal_forms.insert(random_normal_form(&r, &t, &mut rng));
    }
    assert_eq!(normal_forms.len(), 2);
}

#[test]
fn act_is_associative_on_normal_forms() {
    let p = example();
    let r = completed(&p);
    let a = p.alphabet();
    let paths = all_paths(&p, 5);
    for t in all_terms(&p, 6) {
        for q1 in paths.iter().filter(|q| q.start() == r.tau(&t)) {
            let mid = r.act(&t, q1).unwrap();
            for q2 in paths.iter().filter(|q| q.start() == q1.target(a)) {
                if t.len() + q1.len() + q2.len() > 6 {
                    continue;
                }
                let stepwise = r.act(&mid, q2).unwrap();
                let joint = r.act(&t, &q1.then(q2.arrows())).unwrap();
                assert_eq!(stepwise, joint);
            }
        }
    }
}

proptest! {
    #[test]
    fn random_terms_reduce_consistently(
        element in 0usize..5,
        choices in proptest::collection::vec(0usize..3, 0..12),
        seed in any::<u64>(),
    ) {
        let p = example();
        let r = completed(&p);
        let a = p.alphabet();
        let x = a.elements().nth(element).unwrap();
        let mut word = Vec::new();
        let mut at = a.element_base(x).unwrap();
        for c in choices {
            let out: Vec<Symbol> = a.arrows().filter(|&b| a.arrow_ends(b).unwrap().0 == at).collect();
            let b = out[c % out.len()];
            at = a.arrow_ends(b).unwrap().1;
            word.push(b);
        }
        let t = Term::new(a, x, word).unwrap();
        let nf = r.reduce(&t).unwrap();
        let mut rng = StdRng::seed_from_u64(seed);
        prop_assert_eq!(&random_normal_form(&r, &t, &mut rng), &nf);
        prop_assert_eq!(r.tau(&nf), r.tau(&t));
        prop_assert!(nf <= t);
    }
}
