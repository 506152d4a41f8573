//! Command-line front end.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kanext_core::{KanPresentation, RewriteError, SymbolNames, Term};
use serde_json::json;

use crate::pipeline::{self, Budget, ObjectStages, PresentationSummary};
use crate::render::MachineView;
use crate::{dump, format, Error};

#[derive(Debug, Parser)]
#[command(
    name = "kanext",
    version,
    about = "Compute induced actions from finite presentations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Stage {
    /// The nondeterministic automaton of reducible or invalid words.
    Nfa,
    /// Its subset construction.
    Dfa,
    /// The complete complement, accepting the normal forms.
    Complement,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Maximum completion rounds.
    #[arg(long, default_value_t = kanext_core::rewriting::DEFAULT_MAX_ROUNDS)]
    pub max_rounds: usize,

    /// Maximum rewrite steps for a single reduction.
    #[arg(long, default_value_t = kanext_core::rewriting::DEFAULT_STEP_BUDGET)]
    pub max_steps: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget {
            max_rounds: self.max_rounds,
            max_steps: self.max_steps,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse and validate a presentation file.
    Check { file: PathBuf },
    /// Print the completed rewrite system.
    Complete {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the normal form of a term such as `x1 | b1 b2`.
    Normalform {
        file: PathBuf,
        term: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Act on a term by a path and print the normal form.
    Action {
        file: PathBuf,
        term: String,
        path: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a regular expression for the normal forms with target B.
    Regex {
        file: PathBuf,
        /// Codomain object; every object when omitted.
        #[arg(long)]
        object: Option<String>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print one of the automata built for B.
    Automaton {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, value_enum, default_value_t = Stage::Nfa)]
        stage: Stage,
        /// Same as `--format dot`.
        #[arg(long)]
        dot: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the right-linear equations of the complement automaton for B.
    Equations {
        file: PathBuf,
        #[arg(long)]
        object: String,
        /// Use the minimal machine the solver works on.
        #[arg(long)]
        minimal: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// List the normal forms with target B up to a length.
    Members {
        file: PathBuf,
        #[arg(long)]
        object: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print the equivalent semigroup presentation.
    Semigroup { file: PathBuf },
}

fn read_presentation(path: &PathBuf) -> Result<KanPresentation, Error> {
    let io = |source| Error::Io {
        path: path.display().to_string(),
        source,
    };
    let text = if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        text
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    format::parse_presentation(&text)
}

fn json_line(value: serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(&value).expect("json values serialise");
    text.push('\n');
    text
}

fn no_dot(format: OutputFormat) -> Result<(), Error> {
    if format == OutputFormat::Dot {
        return Err(Error::Usage(
            "DOT output is only available for `automaton`".to_string(),
        ));
    }
    Ok(())
}

fn object_stages(
    p: &KanPresentation,
    object: &str,
    budget: &BudgetArgs,
) -> Result<(kanext_core::RewriteSystem, ObjectStages), Error> {
    let b = pipeline::lookup_object(p, object)?;
    let (r, _) = pipeline::complete(p, budget.budget())?;
    let stages = ObjectStages::build(&r, b)?;
    Ok((r, stages))
}

/// What a command wrote, and its exit status.
struct Outcome {
    stdout: String,
    code: i32,
}

impl From<String> for Outcome {
    fn from(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn execute(cli: &Cli) -> Result<Outcome, Error> {
    let format = cli.format;
    match &cli.command {
        Command::Check { file } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let s = PresentationSummary::of(&p);
            Ok(match format {
                OutputFormat::Json => json_line(json!({ "valid": true, "presentation": s })),
                _ => format!(
                    "ok: {} domain objects, {} domain arrows, {} codomain objects, {} codomain arrows, {} relations, {} elements\n",
                    s.domain_objects, s.domain_arrows, s.codomain_objects, s.codomain_arrows, s.relations, s.elements
                ),
            }
            .into())
        }
        Command::Complete { file, budget } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            match pipeline::complete(&p, budget.budget()) {
                Ok((r, summary)) => Ok(match format {
                    OutputFormat::Json => json_line(json!({
                        "complete": true,
                        "rules": dump::rule_lines(&r),
                        "completion": summary,
                    })),
                    _ => dump::rules(&r),
                }
                .into()),
                Err(Error::Rewrite(RewriteError::RoundsExhausted { rounds, partial })) => {
                    let stdout = match format {
                        OutputFormat::Json => json_line(json!({
                            "complete": false,
                            "rounds": rounds,
                            "rules": dump::rule_lines(&partial),
                        })),
                        _ => dump::rules(&partial),
                    };
                    Ok(Outcome {
                        stdout,
                        code: Error::Rewrite(RewriteError::RoundsExhausted { rounds, partial })
                            .exit_code(),
                    })
                }
                Err(e) => Err(e),
            }
        }
        Command::Normalform { file, term, budget } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let t = Term::parse(&p, term)?;
            let (r, _) = pipeline::complete(&p, budget.budget())?;
            let nf = r.reduce(&t)?;
            let text = nf.display(p.alphabet()).to_string();
            Ok(match format {
                OutputFormat::Json => json_line(json!({ "term": text })),
                _ => format!("{text}\n"),
            }
            .into())
        }
        Command::Action {
            file,
            term,
            path,
            budget,
        } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let t = Term::parse(&p, term)?;
            let q = p.parse_path(path, Some(t.target(p.alphabet())))?;
            let (r, _) = pipeline::complete(&p, budget.budget())?;
            let result = r.act(&t, &q)?;
            let text = result.display(p.alphabet()).to_string();
            Ok(match format {
                OutputFormat::Json => json_line(json!({ "term": text })),
                _ => format!("{text}\n"),
            }
            .into())
        }
        Command::Regex {
            file,
            object,
            budget,
        } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let only = object
                .as_deref()
                .map(|b| pipeline::lookup_object(&p, b))
                .transpose()?;
            let report = pipeline::run(&p, budget.budget(), only)?;
            Ok(match format {
                OutputFormat::Json => {
                    json_line(serde_json::to_value(&report).expect("report serialises"))
                }
                _ => {
                    let mut out = String::new();
                    for o in &report.objects {
                        out.push_str(&format!("{} : {}\n  {}\n", o.object, o.regex, o.size));
                        if !o.factored {
                            out.push_str(
                                "  note: some summands do not factor as elements | word\n",
                            );
                        }
                    }
                    out
                }
            }
            .into())
        }
        Command::Automaton {
            file,
            object,
            stage,
            dot,
            budget,
        } => {
            let p = read_presentation(file)?;
            let (_, stages) = object_stages(&p, object, budget)?;
            let a = p.alphabet();
            let view = match stage {
                Stage::Nfa => MachineView::of_nfa(&stages.nfa, a),
                Stage::Dfa => MachineView::of_dfa(&stages.dfa, a),
                Stage::Complement => MachineView::of_dfa(&stages.complement, a),
            };
            let format = if *dot { OutputFormat::Dot } else { format };
            Ok(match format {
                OutputFormat::Dot => view.dot(&format!("{}_{}", stage_name(*stage), object)),
                OutputFormat::Json => json_line(json!({
                    "object": object,
                    "stage": stage_name(*stage),
                    "states": view.states,
                })),
                OutputFormat::Text => match stage {
                    Stage::Nfa => view.table(a),
                    _ => view.numbered_table(a),
                },
            }
            .into())
        }
        Command::Equations {
            file,
            object,
            minimal,
            budget,
        } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let (_, stages) = object_stages(&p, object, budget)?;
            let system = if *minimal {
                stages.equations.clone()
            } else {
                stages.unminimised_equations()
            };
            let text = dump::equations(&system, p.alphabet());
            Ok(match format {
                OutputFormat::Json => json_line(json!({
                    "object": object,
                    "equations": text.lines().collect::<Vec<_>>(),
                })),
                _ => text,
            }
            .into())
        }
        Command::Members {
            file,
            object,
            max_len,
            budget,
        } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let (_, stages) = object_stages(&p, object, budget)?;
            let words: Vec<String> = stages
                .minimal
                .enumerate(*max_len)
                .iter()
                .map(|w| p.alphabet().format_word(w))
                .collect();
            Ok(match format {
                OutputFormat::Json => {
                    json_line(json!({ "object": object, "max_len": max_len, "words": words }))
                }
                _ => words.iter().map(|w| format!("{w}\n")).collect(),
            }
            .into())
        }
        Command::Semigroup { file } => {
            no_dot(format)?;
            let p = read_presentation(file)?;
            let s = p.semigroup_presentation();
            let a = p.alphabet();
            Ok(match format {
                OutputFormat::Json => {
                    let generators: Vec<&str> = s
                        .generators
                        .iter()
                        .map(|g| match g {
                            kanext_core::presentation::Generator::Zero => "0",
                            kanext_core::presentation::Generator::Symbol(x) => a.symbol_name(*x),
                        })
                        .collect();
                    let relations: Vec<_> = s
                        .relations
                        .iter()
                        .map(|r| {
                            json!({
                                "family": dump::family_name(r.family),
                                "lhs": dump::generator_word(&r.lhs, a),
                                "rhs": dump::generator_word(&r.rhs, a),
                            })
                        })
                        .collect();
                    json_line(json!({ "generators": generators, "relations": relations }))
                }
                _ => dump::semigroup(&s, a),
            }
            .into())
        }
    }
}

fn stage_name(stage: Stage) -> &'static str {
    match stage {
        Stage::Nfa => "nfa",
        Stage::Dfa => "dfa",
        Stage::Complement => "complement",
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code: 0 success, 1 input error, 2 budget exhausted, 3 internal error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let informational = !e.use_stderr();
            let text = e.render().to_string();
            if informational {
                let _ = out.write_all(text.as_bytes());
                return 0;
            }
            let _ = err.write_all(text.as_bytes());
            return 1;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            if outcome.code == 2 {
                let _ = writeln!(
                    err,
                    "error: completion did not finish; partial system printed"
                );
            }
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
