use std::collections::BTreeSet;
use std::io::Write as _;
use std::path::PathBuf;

use kanext::{cli, parse_presentation};
use kanext_core::Term;
use tempfile::NamedTempFile;

fn example() -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("presentations/example.kan")
        .display()
        .to_string()
}

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn kanext(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("kanext").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn file_with(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

#[test]
fn check() {
    let r = kanext(&["check", &example()]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("ok:"));

    let text = std::fs::read_to_string(example()).unwrap();
    let no_order: String = text
        .lines()
        .filter(|l| !l.starts_with("order"))
        .map(|l| format!("{l}\n"))
        .collect();
    let f = file_with(&no_order);
    let r = kanext(&["check", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("order"), "{}", r.err);

    let f = file_with("");
    let r = kanext(&["check", f.path().to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.err.contains("line 1"), "{}", r.err);

    let r = kanext(&["check", "/nonexistent/file.kan"]);
    assert_eq!(r.code, 1);
}

#[test]
fn complete() {
    let r = kanext(&["complete", &example()]);
    assert_eq!(r.code, 0);
    assert_eq!(r.out.lines().count(), 9);
    assert!(r.out.contains("y1 | b2 b3 -> x1 | id\n"));
    assert!(r.out.ends_with("b1 b2 b3 -> b4\n"));

    let f = file_with("objects A :\nobjects B :\norder :\n");
    let r = kanext(&["complete", f.path().to_str().unwrap()]);
    assert_eq!((r.code, r.out.as_str()), (0, ""));

    let r = kanext(&["complete", &example(), "--max-rounds", "0"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.out.lines().count(), 6);
    assert!(!r.err.is_empty());
}

#[test]
fn complete_json() {
    let r = kanext(&["--format", "json", "complete", &example()]);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["complete"], true);
    assert_eq!(v["rules"].as_array().unwrap().len(), 9);
    assert_eq!(v["completion"]["rules_added"], 3);
}

#[test]
fn normalform() {
    for (term, nf) in [
        ("y1 | b2 b3 b4", "x1 | id"),
        ("x1 | b5 b3", "x1 | b5 b3"),
        ("x3 | b4", "x1 | id"),
    ] {
        let r = kanext(&["normalform", &example(), term]);
        assert_eq!((r.code, r.out.trim_end()), (0, nf), "{term}");
    }
    assert_eq!(kanext(&["normalform", &example(), "x1 | b2"]).code, 1);
    assert_eq!(kanext(&["normalform", &example(), "| b1"]).code, 1);
}

#[test]
fn action() {
    let r = kanext(&["action", &example(), "x1 | id", "b4"]);
    assert_eq!(r.out, "x1 | id\n");
    let r = kanext(&["action", &example(), "x1 | b5", "b3"]);
    assert_eq!(r.out, "x1 | b5 b3\n");
    let r = kanext(&["action", &example(), "x1 | b5", "b4"]);
    assert_eq!(r.code, 1);
}

#[test]
fn regex() {
    let r = kanext(&["regex", &example(), "--object", "B1"]);
    assert_eq!(r.code, 0);
    assert_eq!(
        r.out,
        "B1 : (x1 + x2 + x3) | (id + b5 (b3 b4* b5)* b3 b4*)\n  Infinite\n"
    );
    let all = kanext(&["regex", &example()]);
    let heads: Vec<&str> = all.out.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(heads.len(), 3);
    assert!(heads[1].starts_with("B2 : "));
    assert_eq!(kanext(&["regex", &example(), "--object", "B9"]).code, 1);
}

#[test]
fn regex_of_a_finite_action() {
    let f = file_with(
        "objects A : A1\nobjects B : B1 B2\narrows B : b : B1 -> B2\nX A1 : x y\nF A1 : B1\norder : x y b\n",
    );
    let r = kanext(&["regex", f.path().to_str().unwrap(), "--object", "B2"]);
    assert_eq!(r.out, "B2 : (x + y) | b\n  Finite(2)\n");
    let r = kanext(&[
        "members",
        f.path().to_str().unwrap(),
        "--object",
        "B1",
        "--max-len",
        "50",
    ]);
    assert_eq!(r.out, "x\ny\n");
}

#[test]
fn automaton() {
    let r = kanext(&["automaton", &example(), "--object", "B3"]);
    assert_eq!(r.code, 0);
    let lines: Vec<&str> = r.out.lines().collect();
    let row = |name: &str| -> Vec<String> {
        let line = lines
            .iter()
            .find(|l| l.trim_start_matches(['>', '*']).split_whitespace().next() == Some(name))
            .unwrap();
        line.split("  ")
            .map(str::trim)
            .filter(|c| !c.is_empty())
            .map(String::from)
            .collect()
    };
    assert!(row("y1").contains(&"B3, y1|b2".to_string()));
    assert!(row("d").iter().skip(1).all(|c| c == "d"));

    let dot = kanext(&[
        "automaton",
        &example(),
        "--object",
        "B3",
        "--stage",
        "complement",
        "--dot",
    ]);
    assert!(dot.out.starts_with("digraph"));
    assert!(dot.out.trim_end().ends_with('}'));
    assert_eq!(dot.out.matches('{').count(), dot.out.matches('}').count());

    let dfa = kanext(&["automaton", &example(), "--object", "B3", "--stage", "dfa"]);
    assert!(dfa.out.contains("= {y1|b2, B3}"));

    let json = kanext(&[
        "--format",
        "json",
        "automaton",
        &example(),
        "--object",
        "B1",
        "--stage",
        "dfa",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json.out).unwrap();
    assert_eq!(v["states"].as_array().unwrap().len(), 17);
}

#[test]
fn dot_only_for_automata() {
    let r = kanext(&["--format", "dot", "regex", &example()]);
    assert_eq!(r.code, 1);
    assert!(r.out.is_empty());
}

#[test]
fn equations() {
    let r = kanext(&["equations", &example(), "--object", "B1"]);
    assert!(
        r.out
            .lines()
            .any(|l| l == "X9 = b1 X10 + b4 X9 + b5 X6 + id"),
        "{}",
        r.out
    );
    let m = kanext(&["equations", &example(), "--object", "B1", "--minimal"]);
    assert!(m.out.starts_with("X0 = (x1 + x2 + x3) X1\n"), "{}", m.out);
}

#[test]
fn members() {
    let r = kanext(&["members", &example(), "--object", "B2", "--max-len", "1"]);
    assert_eq!(r.out, "y1\ny2\n");
    let r = kanext(&["members", &example(), "--object", "B1", "--max-len", "0"]);
    assert_eq!((r.code, r.out.as_str()), (0, ""));
}

/// Brute force: parse every string over the alphabet and keep the
/// irreducible terms with the right target.
#[test]
fn members_match_parse_all_strings() {
    let text = std::fs::read_to_string(example()).unwrap();
    let p = parse_presentation(&text).unwrap();
    let r = kanext_core::RewriteSystem::initial(&p)
        .unwrap()
        .complete(100)
        .unwrap()
        .system;
    let a = p.alphabet();
    let max_len = 5;
    let mut all: Vec<Vec<kanext_core::Symbol>> = vec![Vec::new()];
    let mut layer = all.clone();
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                a.symbols().map(move |s| {
                    let mut v = w.clone();
                    v.push(s);
                    v
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    for b in ["B1", "B2", "B3"] {
        let target = a.lookup_object(b).unwrap();
        let expected: BTreeSet<String> = all
            .iter()
            .filter_map(|w| Term::from_flat(a, w))
            .filter(|t| t.target(a) == target && r.is_irreducible(t))
            .map(|t| a.format_word(&t.flatten()))
            .collect();
        let out = kanext(&[
            "members",
            &example(),
            "--object",
            b,
            "--max-len",
            &max_len.to_string(),
        ])
        .out;
        let got: BTreeSet<String> = out.lines().map(String::from).collect();
        assert_eq!(got, expected, "{b}");
    }
}

#[test]
fn semigroup() {
    let r = kanext(&["semigroup", &example()]);
    assert!(r
        .out
        .starts_with("generators : 0 x1 x2 x3 y1 y2 b1 b2 b3 b4 b5\n"));
    let lines: Vec<&str> = r.out.lines().collect();
    let unique: BTreeSet<&&str> = lines.iter().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(
        unique.len(),
        lines.iter().filter(|l| !l.starts_with('#')).count()
    );
    assert!(lines.contains(&"0 0 = 0"));
    assert_eq!(kanext(&["semigroup", &example()]).out, r.out);
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["regex", "EX"],
        vec!["--format", "json", "regex", "EX"],
        vec!["automaton", "EX", "--object", "B1", "--stage", "complement"],
    ] {
        let ex = example();
        let args: Vec<&str> = args
            .iter()
            .map(|a| if *a == "EX" { ex.as_str() } else { a })
            .collect();
        assert_eq!(kanext(&args).out, kanext(&args).out);
    }
}

#[test]
fn usage() {
    assert_eq!(kanext(&["frobnicate"]).code, 1);
    assert_eq!(kanext(&[]).code, 1);
    let help = kanext(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.out.contains("normalform"));
    assert_eq!(kanext(&["--version"]).code, 0);
}
