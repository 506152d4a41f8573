//! Presentation to completed system to per-object automata to expressions.

use kanext_core::automata::build_reducible_nfa;
use kanext_core::language::{format_term_regex, Regex};
use kanext_core::rewriting::{DEFAULT_MAX_ROUNDS, DEFAULT_STEP_BUDGET};
use kanext_core::{
    Dfa, EquationSystem, KanPresentation, LanguageSize, Nfa, ObjectId, RewriteSystem,
};
use serde::Serialize;

use crate::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_rounds: usize,
    pub max_steps: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_rounds: DEFAULT_MAX_ROUNDS,
            max_steps: DEFAULT_STEP_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PresentationSummary {
    pub domain_objects: usize,
    pub domain_arrows: usize,
    pub codomain_objects: usize,
    pub codomain_arrows: usize,
    pub relations: usize,
    pub elements: usize,
}

impl PresentationSummary {
    pub fn of(p: &KanPresentation) -> Self {
        PresentationSummary {
            domain_objects: p.gamma().objects.len(),
            domain_arrows: p.gamma().arrows.len(),
            codomain_objects: p.delta().objects.len(),
            codomain_arrows: p.delta().arrows.len(),
            relations: p.relations().len(),
            elements: p.element_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompletionSummary {
    pub initial_rules: usize,
    pub rules: usize,
    pub rules_added: usize,
    pub rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "count", rename_all = "lowercase")]
pub enum Size {
    Finite(u128),
    Infinite,
}

impl From<LanguageSize> for Size {
    fn from(s: LanguageSize) -> Self {
        match s {
            LanguageSize::Finite(n) => Size::Finite(n),
            LanguageSize::Infinite => Size::Infinite,
        }
    }
}

impl std::fmt::Display for Size {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Size::Finite(n) => write!(f, "Finite({n})"),
            Size::Infinite => f.write_str("Infinite"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StageSizes {
    pub nfa_states: usize,
    pub nfa_transitions: usize,
    pub dfa_states: usize,
    pub complement_states: usize,
    pub minimal_states: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObjectReport {
    pub object: String,
    pub stages: StageSizes,
    pub equations: usize,
    pub regex: String,
    /// Whether every summand printed as `elements | word`.
    pub factored: bool,
    pub size: Size,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PipelineReport {
    pub presentation: PresentationSummary,
    pub completion: CompletionSummary,
    pub objects: Vec<ObjectReport>,
}

/// Runs the initial system through completion.
pub fn complete(
    p: &KanPresentation,
    budget: Budget,
) -> Result<(RewriteSystem, CompletionSummary), Error> {
    let initial = RewriteSystem::initial(p)?.with_step_budget(budget.max_steps);
    let initial_rules = initial.rule_count();
    let done = initial.complete(budget.max_rounds)?;
    let summary = CompletionSummary {
        initial_rules,
        rules: done.system.rule_count(),
        rules_added: done.rules_added,
        rounds: done.rounds,
    };
    Ok((done.system, summary))
}

pub fn lookup_object(p: &KanPresentation, name: &str) -> Result<ObjectId, Error> {
    p.alphabet()
        .lookup_object(name)
        .ok_or_else(|| Error::UnknownObject(name.to_string()))
}

/// Every machine built for one object `B`.
#[derive(Clone, Debug)]
pub struct ObjectStages {
    pub object: ObjectId,
    /// `A_B`, accepting everything except the irreducible terms with target `B`.
    pub nfa: Nfa,
    pub dfa: Dfa,
    /// Accepts exactly the normal forms with target `B`.
    pub complement: Dfa,
    pub minimal: Dfa,
    /// The right-linear system of the trimmed minimal machine.
    pub equations: EquationSystem,
    pub regex: Regex,
}

impl ObjectStages {
    pub fn build(r: &RewriteSystem, object: ObjectId) -> Result<Self, Error> {
        let nfa = build_reducible_nfa(r, object)?;
        let dfa = nfa.determinize();
        let complement = dfa.completed().complement()?;
        let minimal = complement.minimize();
        let equations = EquationSystem::from_dfa(&minimal.trim());
        let regex = equations.solve().swap_remove(0);
        Ok(ObjectStages {
            object,
            nfa,
            dfa,
            complement,
            minimal,
            equations,
            regex,
        })
    }

    /// The equations of the complement before minimisation, with states
    /// that have already seen a reducible prefix left out.
    pub fn unminimised_equations(&self) -> EquationSystem {
        EquationSystem::from_dfa(&self.complement.without_dump())
    }

    pub fn report(&self, r: &RewriteSystem) -> ObjectReport {
        let alphabet = r.alphabet();
        let formatted = format_term_regex(&self.regex, alphabet);
        ObjectReport {
            object: alphabet.object_name(self.object).to_string(),
            stages: StageSizes {
                nfa_states: self.nfa.state_count(),
                nfa_transitions: self.nfa.transition_count(),
                dfa_states: self.dfa.state_count(),
                complement_states: self.complement.state_count(),
                minimal_states: self.minimal.state_count(),
            },
            equations: self.equations.len(),
            regex: formatted.text,
            factored: formatted.factored,
            size: self.minimal.count_language().into(),
        }
    }
}

/// Builds the stages for each listed object on its own thread and returns
/// them in the order given.
pub fn build_objects(r: &RewriteSystem, objects: &[ObjectId]) -> Result<Vec<ObjectStages>, Error> {
    std::thread::scope(|scope| {
        let handles: Vec<_> = objects
            .iter()
            .map(|&b| scope.spawn(move || ObjectStages::build(r, b)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("object pipeline panicked"))
            .collect()
    })
}

/// The whole pipeline, for `only` or for every codomain object.
pub fn run(
    p: &KanPresentation,
    budget: Budget,
    only: Option<ObjectId>,
) -> Result<PipelineReport, Error> {
    let (r, completion) = complete(p, budget)?;
    let objects: Vec<ObjectId> = match only {
        Some(b) => vec![b],
        None => p.alphabet().objects().collect(),
    };
    let stages = build_objects(&r, &objects)?;
    Ok(PipelineReport {
        presentation: PresentationSummary::of(p),
        completion,
        objects: stages.iter().map(|s| s.report(&r)).collect(),
    })
}
