//! Transition tables, DOT and JSON views of automata.
//!
//! States are numbered breadth-first from the initial states, symbols taken
//! in alphabet order; states that cannot be reached come last.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use kanext_core::{Alphabet, Dfa, Nfa, Symbol, SymbolNames};
use serde::Serialize;

/// A machine flattened to what every output format needs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MachineView {
    pub states: Vec<StateView>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StateView {
    pub id: usize,
    pub label: String,
    pub initial: bool,
    pub accepting: bool,
    /// Symbol name to successor ids; symbols without successors are absent.
    pub transitions: BTreeMap<String, Vec<usize>>,
}

fn bfs(count: usize, initial: &[usize], successors: impl Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut seen = vec![false; count];
    let mut order = Vec::with_capacity(count);
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in initial {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(s) = queue.pop_front() {
        order.push(s);
        for t in successors(s) {
            if !seen[t] {
                seen[t] = true;
                queue.push_back(t);
            }
        }
    }
    order.extend((0..count).filter(|&s| !seen[s]));
    order
}

impl MachineView {
    pub fn of_nfa(n: &Nfa, alphabet: &Alphabet) -> Self {
        let initial: Vec<usize> = n.initial().iter().copied().collect();
        let order = bfs(n.state_count(), &initial, |s| {
            alphabet
                .symbols()
                .flat_map(|a| n.successors(s, a).iter().copied().collect::<Vec<_>>())
                .collect()
        });
        let index = renumbering(&order);
        let states = order
            .iter()
            .enumerate()
            .map(|(id, &s)| StateView {
                id,
                label: n.label(s).display(alphabet).to_string(),
                initial: n.initial().contains(&s),
                accepting: n.is_accepting(s),
                transitions: alphabet
                    .symbols()
                    .filter(|&a| !n.successors(s, a).is_empty())
                    .map(|a| {
                        let mut to: Vec<usize> =
                            n.successors(s, a).iter().map(|&t| index[t]).collect();
                        to.sort_unstable();
                        (alphabet.symbol_name(a).to_string(), to)
                    })
                    .collect(),
            })
            .collect();
        MachineView { states }
    }

    pub fn of_dfa(d: &Dfa, alphabet: &Alphabet) -> Self {
        let order = bfs(d.state_count(), &[d.initial()], |s| {
            alphabet
                .symbols()
                .filter_map(|a| d.transition(s, a))
                .collect()
        });
        let index = renumbering(&order);
        let states = order
            .iter()
            .enumerate()
            .map(|(id, &s)| StateView {
                id,
                label: d.label(s).display(alphabet).to_string(),
                initial: s == d.initial(),
                accepting: d.is_accepting(s),
                transitions: alphabet
                    .symbols()
                    .filter_map(|a| {
                        d.transition(s, a)
                            .map(|t| (alphabet.symbol_name(a).to_string(), vec![index[t]]))
                    })
                    .collect(),
            })
            .collect();
        MachineView { states }
    }

    /// Rows are states, columns are symbols, cells list successor labels
    /// (`-` for none). `>` marks initial states and `*` accepting ones.
    pub fn table(&self, alphabet: &Alphabet) -> String {
        let symbols: Vec<Symbol> = alphabet.symbols().collect();
        let mut rows: Vec<Vec<String>> = Vec::new();
        let mut header = vec![String::new(), "state".to_string()];
        header.extend(symbols.iter().map(|&a| alphabet.symbol_name(a).to_string()));
        rows.push(header);
        for s in &self.states {
            let marks = format!(
                "{}{}",
                if s.initial { ">" } else { "" },
                if s.accepting { "*" } else { "" }
            );
            let mut row = vec![marks, s.label.clone()];
            for &a in &symbols {
                let cell = match s.transitions.get(alphabet.symbol_name(a)) {
                    Some(to) => to
                        .iter()
                        .map(|&t| self.states[t].label.as_str())
                        .collect::<Vec<_>>()
                        .join(", "),
                    None => "-".to_string(),
                };
                row.push(cell);
            }
            rows.push(row);
        }
        align(&rows)
    }

    /// Like [`table`](Self::table) but naming states `S0, S1, ...` and
    /// listing what each stands for underneath. Suits determinised machines
    /// whose labels are sets.
    pub fn numbered_table(&self, alphabet: &Alphabet) -> String {
        let named = MachineView {
            states: self
                .states
                .iter()
                .map(|s| StateView {
                    label: format!("S{}", s.id),
                    ..s.clone()
                })
                .collect(),
        };
        let mut out = named.table(alphabet);
        out.push('\n');
        for s in &self.states {
            let _ = writeln!(out, "S{} = {}", s.id, s.label);
        }
        out
    }

    pub fn dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=circle];\n");
        for s in &self.states {
            let shape = if s.accepting {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(
                out,
                "  q{} [label=\"{}\", shape={shape}];",
                s.id,
                escape(&s.label)
            );
        }
        for s in self.states.iter().filter(|s| s.initial) {
            let _ = writeln!(out, "  start{0} [shape=point];\n  start{0} -> q{0};", s.id);
        }
        for s in &self.states {
            let mut edges: BTreeMap<usize, Vec<&str>> = BTreeMap::new();
            for (symbol, to) in &s.transitions {
                for &t in to {
                    edges.entry(t).or_default().push(symbol);
                }
            }
            for (t, labels) in edges {
                let _ = writeln!(
                    out,
                    "  q{} -> q{t} [label=\"{}\"];",
                    s.id,
                    escape(&labels.join(", "))
                );
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn accepting_count(&self) -> usize {
        self.states.iter().filter(|s| s.accepting).count()
    }
}

fn renumbering(order: &[usize]) -> Vec<usize> {
    let mut index = vec![0; order.len()];
    for (i, &s) in order.iter().enumerate() {
        index[s] = i;
    }
    index
}

fn escape(text: &str) -> String {
    text.replace('\\', "\\\\").replace('"', "\\\"")
}

fn align(rows: &[Vec<String>]) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c > 0 {
                line.push_str("  ");
            }
            let _ = write!(line, "{cell:<width$}", width = widths[c]);
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
