#![allow(dead_code)]

use kanext_core::presentation::{RawArrow, RawGraph, RawPath};
use kanext_core::{KanPresentation, RawPresentation, RewriteSystem, Symbol};

fn names(text: &str) -> Vec<String> {
    text.split_whitespace().map(str::to_string).collect()
}

fn path(text: &str) -> RawPath {
    RawPath {
        start: None,
        arrows: names(text),
    }
}

fn pairs(items: &[(&str, &str)]) -> Vec<(String, String)> {
    items
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect()
}

pub fn example() -> KanPresentation {
    let arrows = |list: &[(&str, &str, &str)]| {
        list.iter()
            .map(|(n, s, t)| RawArrow {
                name: n.to_string(),
                src: s.to_string(),
                tgt: t.to_string(),
            })
            .collect()
    };
    let raw = RawPresentation {
        gamma: RawGraph {
            objects: names("A1 A2"),
            arrows: arrows(&[("a1", "A1", "A2"), ("a2", "A2", "A1")]),
        },
        delta: RawGraph {
            objects: names("B1 B2 B3"),
            arrows: arrows(&[
                ("b1", "B1", "B2"),
                ("b2", "B2", "B3"),
                ("b3", "B3", "B1"),
                ("b4", "B1", "B1"),
                ("b5", "B1", "B3"),
            ]),
        },
        relations: vec![(path("b1 b2 b3"), path("b4"))],
        elements: vec![
            ("A1".to_string(), names("x1 x2 x3")),
            ("A2".to_string(), names("y1 y2")),
        ],
        actions: vec![
            (
                "a1".to_string(),
                pairs(&[("x1", "y1"), ("x2", "y2"), ("x3", "y1")]),
            ),
            ("a2".to_string(), pairs(&[("y1", "x1"), ("y2", "x2")])),
        ],
        functor_objects: pairs(&[("A1", "B1"), ("A2", "B2")]),
        functor_arrows: vec![
            ("a1".to_string(), path("b1")),
            ("a2".to_string(), path("b2 b3")),
        ],
        order: Some(names("x1 x2 x3 y1 y2 b1 b2 b3 b4 b5")),
    };
    KanPresentation::from_raw(&raw).unwrap()
}

pub fn completed(p: &KanPresentation) -> RewriteSystem {
    RewriteSystem::initial(p)
        .unwrap()
        .complete(100)
        .unwrap()
        .system
}

pub fn words(letters: u32, max_len: usize) -> Vec<Vec<Symbol>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let next: Vec<Vec<Symbol>> = layer
            .iter()
            .flat_map(|w: &Vec<Symbol>| {
                (0..letters).map(move |a| {
                    let mut v = w.clone();
                    v.push(Symbol(a));
                    v
                })
            })
            .collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
