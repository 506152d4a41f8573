use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{LanguageError, Regex};
use crate::alphabet::{Symbol, SymbolNames};
use crate::automata::Dfa;

/// `X = A X + E` with `id ∉ A` has the unique solution `A* E`.
pub fn arden(a: &Regex, e: &Regex) -> Result<Regex, LanguageError> {
    if a.nullable() {
        return Err(LanguageError::NullableCoefficient);
    }
    Ok(Regex::star(a.clone()).then(e.clone()))
}

/// `X_i = Σ_j A_ij X_j + E_i`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Equation {
    pub coefficients: BTreeMap<usize, Regex>,
    pub constant: Regex,
}

/// A right-linear system whose coefficients never contain the empty word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquationSystem {
    equations: Vec<Equation>,
}

impl EquationSystem {
    pub fn new(equations: Vec<Equation>) -> Result<Self, LanguageError> {
        let n = equations.len();
        for eq in &equations {
            for (&j, a) in &eq.coefficients {
                if j >= n {
                    return Err(LanguageError::UnknownUnknown(j));
                }
                if a.nullable() {
                    return Err(LanguageError::NullableCoefficient);
                }
            }
        }
        Ok(EquationSystem { equations })
    }

    /// One unknown per state, numbered breadth-first so that `X0` belongs to
    /// the initial state and solves to the machine's language. `A_ij` is the
    /// union of the letters leading from state `i` to state `j`; `E_i` is
    /// `id` for accepting states and `∅` otherwise.
    pub fn from_dfa(d: &Dfa) -> Self {
        let d = d.renumbered();
        let equations = (0..d.state_count())
            .map(|i| {
                let mut letters: BTreeMap<usize, Vec<Symbol>> = BTreeMap::new();
                for a in 0..d.alphabet_len() {
                    let symbol = Symbol(a as u32);
                    if let Some(j) = d.transition(i, symbol) {
                        letters.entry(j).or_default().push(symbol);
                    }
                }
                Equation {
                    coefficients: letters
                        .into_iter()
                        .map(|(j, syms)| (j, Regex::symbols(syms)))
                        .collect(),
                    constant: if d.is_accepting(i) {
                        Regex::Id
                    } else {
                        Regex::Empty
                    },
                }
            })
            .collect();
        EquationSystem { equations }
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    pub fn equations(&self) -> &[Equation] {
        &self.equations
    }

    /// Eliminates `X_{n-1}` first and `X_0` last.
    pub fn solve(&self) -> Vec<Regex> {
        let order: Vec<usize> = (0..self.len()).rev().collect();
        self.solve_with_order(&order)
            .expect("descending order is a permutation")
    }

    /// Eliminates unknowns in `order`: Arden's rule removes the self-loop,
    /// the result is substituted into every equation not yet eliminated,
    /// and the eliminated unknowns are then solved in reverse order.
    pub fn solve_with_order(&self, order: &[usize]) -> Result<Vec<Regex>, LanguageError> {
        let n = self.len();
        let mut seen = vec![false; n];
        if order.len() != n {
            return Err(LanguageError::InvalidOrder);
        }
        for &k in order {
            if k >= n || core::mem::replace(&mut seen[k], true) {
                return Err(LanguageError::InvalidOrder);
            }
        }

        let mut live: Vec<Option<Equation>> = self.equations.iter().cloned().map(Some).collect();
        let mut eliminated: Vec<(usize, Equation)> = Vec::with_capacity(n);
        for &k in order {
            let mut eq = live[k].take().expect("not yet eliminated");
            if let Some(a) = eq.coefficients.remove(&k) {
                let loop_star = Regex::star(a);
                for c in eq.coefficients.values_mut() {
                    *c = loop_star.clone().then(core::mem::take(c));
                }
                eq.constant = arden_star(&loop_star, core::mem::take(&mut eq.constant));
            }
            for other in live.iter_mut().flatten() {
                if let Some(c) = other.coefficients.remove(&k) {
                    for (&j, cj) in &eq.coefficients {
                        let term = c.clone().then(cj.clone());
                        let slot = other.coefficients.entry(j).or_default();
                        *slot = core::mem::take(slot).or(term);
                    }
                    other.constant =
                        core::mem::take(&mut other.constant).or(c.then(eq.constant.clone()));
                }
            }
            eliminated.push((k, eq));
        }

        let mut solution = vec![Regex::Empty; n];
        for (k, eq) in eliminated.into_iter().rev() {
            let mut parts = vec![eq.constant];
            for (j, c) in eq.coefficients {
                parts.push(c.then(solution[j].clone()));
            }
            solution[k] = Regex::union(parts);
        }
        Ok(solution)
    }

    pub fn display<'a, N: SymbolNames + ?Sized>(&'a self, names: &'a N) -> impl fmt::Display + 'a {
        SystemDisplay {
            system: self,
            names,
        }
    }
}

fn arden_star(loop_star: &Regex, constant: Regex) -> Regex {
    loop_star.clone().then(constant)
}

fn first_letter(r: &Regex) -> Option<Symbol> {
    match r {
        Regex::Sym(s) => Some(*s),
        Regex::Union(parts) | Regex::Concat(parts) => parts.iter().filter_map(first_letter).min(),
        Regex::Star(inner) => first_letter(inner),
        Regex::Empty | Regex::Id => None,
    }
}

struct SystemDisplay<'a, N: ?Sized> {
    system: &'a EquationSystem,
    names: &'a N,
}

/// One line per unknown, `X4 = b1 X2 + b4 X4 + b5 X3 + id`; terms appear in
/// the order of their first letter.
impl<N: SymbolNames + ?Sized> fmt::Display for SystemDisplay<'_, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, eq) in self.system.equations.iter().enumerate() {
            write!(f, "X{i} =")?;
            let mut terms: Vec<(&usize, &Regex)> = eq.coefficients.iter().collect();
            terms.sort_by_key(|&(j, c)| (first_letter(c), *j));
            let mut first = true;
            for (j, c) in terms {
                if !first {
                    f.write_str(" +")?;
                }
                first = false;
                f.write_str(" ")?;
                c.write(f, self.names, 1)?;
                write!(f, " X{j}")?;
            }
            match (&eq.constant, first) {
                (Regex::Empty, true) => f.write_str(" 0")?,
                (Regex::Empty, false) => {}
                (c, true) => {
                    f.write_str(" ")?;
                    c.write(f, self.names, 0)?;
                }
                (c, false) => {
                    f.write_str(" + ")?;
                    c.write(f, self.names, 1)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
