use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use super::Regex;
use crate::alphabet::Alphabet;

/// A regex printed as terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermRegex {
    pub text: String,
    /// Every summand split as `elements | word`. When false, at least one
    /// summand is printed as a plain regex.
    pub factored: bool,
}

fn element_only(r: &Regex, alphabet: &Alphabet) -> bool {
    match r {
        Regex::Sym(s) => alphabet.is_element(*s),
        Regex::Union(parts) => parts.iter().all(|p| element_only(p, alphabet)),
        _ => false,
    }
}

fn render(r: &Regex, alphabet: &Alphabet, prec: u8) -> String {
    struct Show<'a>(&'a Regex, &'a Alphabet, u8);
    impl core::fmt::Display for Show<'_> {
        fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
            self.0.write(f, self.1, self.2)
        }
    }
    let mut out = String::new();
    let _ = write!(out, "{}", Show(r, alphabet, prec));
    out
}

/// Prints each summand as `head | rest` when it factors as a union of
/// elements followed by a word expression, e.g. `(y1 + y2) | b2`. Summands
/// sharing the same word part are merged first.
pub fn format_term_regex(r: &Regex, alphabet: &Alphabet) -> TermRegex {
    let summands: Vec<&Regex> = match r {
        Regex::Empty => {
            return TermRegex {
                text: String::from("0"),
                factored: true,
            }
        }
        Regex::Union(parts) => parts.iter().collect(),
        r => alloc::vec![r],
    };
    let mut groups: Vec<(Vec<Regex>, Regex)> = Vec::new();
    let mut raw: Vec<&Regex> = Vec::new();
    for s in summands {
        let split = if element_only(s, alphabet) {
            Some((s.clone(), Regex::Id))
        } else if let Regex::Concat(parts) = s {
            element_only(&parts[0], alphabet)
                .then(|| (parts[0].clone(), Regex::concat(parts[1..].iter().cloned())))
        } else {
            None
        };
        match split {
            Some((head, rest)) => match groups.iter_mut().find(|(_, r)| *r == rest) {
                Some((heads, _)) => heads.push(head),
                None => groups.push((alloc::vec![head], rest)),
            },
            None => raw.push(s),
        }
    }
    let mut pieces: Vec<String> = groups
        .into_iter()
        .map(|(heads, rest)| {
            alloc::format!(
                "{} | {}",
                render(&Regex::union(heads), alphabet, 1),
                render(&rest, alphabet, 1)
            )
        })
        .collect();
    pieces.extend(raw.iter().map(|s| render(s, alphabet, 1)));
    TermRegex {
        text: pieces.join(" + "),
        factored: raw.is_empty(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::example;
    use crate::language::parse_regex;

    fn show(text: &str) -> TermRegex {
        let p = example();
        let r = parse_regex(text, p.alphabet()).unwrap().simplify();
        format_term_regex(&r, p.alphabet())
    }

    #[test]
    fn worked_example_shapes() {
        assert_eq!(
            show("(x1+x2+x3)|(b5 b3 (b4+b5 b3)* + id)").text,
            "(x1 + x2 + x3) | (b5 b3 (b4 + b5 b3)* + id)"
        );
        assert_eq!(
            show("(x1+x2+x3)|b5 b3 (b4+b5 b3)* b1 + (y1+y2)|id").text,
            "(x1 + x2 + x3) | b5 b3 (b4 + b5 b3)* b1 + (y1 + y2) | id"
        );
        assert_eq!(
            show("(x1+x2+x3)|(b5 b3 (b4+b5 b3)* (b1 b2+b5) + b5) + (y1+y2)|b2").text,
            "(x1 + x2 + x3) | (b5 b3 (b4 + b5 b3)* (b1 b2 + b5) + b5) + (y1 + y2) | b2"
        );
    }

    #[test]
    fn single_elements_and_grouping() {
        assert_eq!(show("y1").text, "y1 | id");
        assert_eq!(show("x1 b4 + x2 b4").text, "(x1 + x2) | b4");
        assert_eq!(show("0").text, "0");
        assert!(show("x1 b4").factored);
    }

    #[test]
    fn fallback_prints_summands() {
        let t = show("(x1 + b4) b5 + y1");
        assert!(!t.factored);
        assert_eq!(t.text, "y1 | id + (x1 + b4) b5");
    }
}
