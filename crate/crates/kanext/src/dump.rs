//! Plain-text dumps: rule sets, equation systems and semigroup presentations.

use std::fmt::Write as _;

use kanext_core::presentation::{Generator, RelationFamily, SemigroupPresentation};
use kanext_core::{Alphabet, EquationSystem, RewriteSystem, SymbolNames};

/// One rule per line, term rules first, each group in shortlex order of
/// left-hand sides.
pub fn rules(r: &RewriteSystem) -> String {
    let mut out = String::new();
    for rule in r.t_rules() {
        let _ = writeln!(out, "{}", r.format_t_rule(rule));
    }
    for rule in r.p_rules() {
        let _ = writeln!(out, "{}", r.format_p_rule(rule));
    }
    out
}

pub fn rule_lines(r: &RewriteSystem) -> Vec<String> {
    rules(r).lines().map(str::to_string).collect()
}

pub fn equations(system: &EquationSystem, alphabet: &Alphabet) -> String {
    system.display(alphabet).to_string()
}

pub fn generator_word(word: &[Generator], alphabet: &Alphabet) -> String {
    if word.is_empty() {
        return "id".to_string();
    }
    word.iter()
        .map(|g| match g {
            Generator::Zero => "0",
            Generator::Symbol(s) => alphabet.symbol_name(*s),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn family_name(family: RelationFamily) -> &'static str {
    match family {
        RelationFamily::ZeroAbsorbs => "zero",
        RelationFamily::ElementNotFirst => "element-not-first",
        RelationFamily::ElementArrowMismatch => "element-arrow-mismatch",
        RelationFamily::ArrowsMismatch => "arrows-mismatch",
        RelationFamily::Action => "action",
        RelationFamily::Relation => "relation",
    }
}

const FAMILIES: [RelationFamily; 6] = [
    RelationFamily::ZeroAbsorbs,
    RelationFamily::ElementNotFirst,
    RelationFamily::ElementArrowMismatch,
    RelationFamily::ArrowsMismatch,
    RelationFamily::Action,
    RelationFamily::Relation,
];

/// Generators on the first line, then each relation family under a
/// `# family` heading.
pub fn semigroup(s: &SemigroupPresentation, alphabet: &Alphabet) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "generators : {}",
        generator_word(&s.generators, alphabet)
    );
    for family in FAMILIES {
        let mut members = s.family(family).peekable();
        if members.peek().is_none() {
            continue;
        }
        let _ = writeln!(out, "# {}", family_name(family));
        for r in members {
            let _ = writeln!(
                out,
                "{} = {}",
                generator_word(&r.lhs, alphabet),
                generator_word(&r.rhs, alphabet)
            );
        }
    }
    out
}
