//! The `teamlogic` command line.
//!
//! Exit status is 0 for success or a true verdict, 1 for a false verdict and
//! 2 for any usage, parse, guard or signature error.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bisim::{hintikka, kbisim_classes};
use crate::dimension::dim_report;
use crate::error::{Error, ParseError};
use crate::fixtures;
use crate::kripke::{KripkeModel, Team};
use crate::semantics;
use crate::syntax::{parse, Formula};
use crate::translate::{emdl_to_mlidis, mlidis_to_emdl, to_normal_form};

pub const EXIT_TRUE: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "teamlogic",
    version,
    about = "Model checking, bisimulation, translations and dimension analysis for modal team logics",
    after_help = "MODEL is a path to a model file or the name of a shipped fixture \
                  (M1, M2, M3, FULL2, M1dup)."
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide K,T ⊨ φ; prints `true` or `false`
    Check {
        #[arg(short = 'm', value_name = "MODEL")]
        model: String,
        #[arg(short = 'f', value_name = "FORMULA")]
        formula: String,
        /// Comma-separated worlds; defaults to the model's `team` line, else all worlds
        #[arg(short = 't', value_name = "WORLDS")]
        team: Option<String>,
    },
    /// Decide k-bisimilarity of two worlds, or of two teams with --teams
    Bisim(BisimArgs),
    /// Print the k-th Hintikka formula of a world
    Hintikka {
        #[arg(short = 'm', value_name = "MODEL")]
        model: String,
        #[arg(short = 'w', value_name = "WORLD")]
        world: String,
        #[arg(short = 'k')]
        k: usize,
    },
    /// Translate ML(⊻) to EMDL or (E)MDL to ML(⊻)
    Translate {
        #[arg(long = "to", value_enum)]
        to: Target,
        #[arg(short = 'f', value_name = "FORMULA")]
        formula: String,
    },
    /// Print Ψ with φ ≡ ⊻Ψ, one formula per line
    Normalform {
        #[arg(short = 'f', value_name = "FORMULA")]
        formula: String,
    },
    /// Maximal satisfying and minimal falsifying teams on each model
    Dim {
        /// Comma-separated list of models
        #[arg(short = 'm', value_name = "MODEL[,MODEL...]")]
        models: String,
        #[arg(short = 'f', value_name = "FORMULA")]
        formula: String,
    },
    /// Print the least fragment containing the formula
    Classify {
        #[arg(short = 'f', value_name = "FORMULA")]
        formula: String,
    },
}

#[derive(Debug, Args)]
struct BisimArgs {
    #[arg(short = 'm', value_name = "MODEL")]
    left: String,
    /// World, or comma-separated team with --teams
    #[arg(short = 'w', value_name = "WORLD")]
    left_point: String,
    /// Second model; defaults to the first
    #[arg(short = 'n', value_name = "MODEL")]
    right: Option<String>,
    #[arg(short = 'x', value_name = "WORLD")]
    right_point: String,
    #[arg(short = 'k')]
    k: usize,
    /// Compare teams instead of worlds
    #[arg(long)]
    teams: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    Emdl,
    Mlidis,
}

/// A failure with the context it should be reported under.
struct Failure {
    context: String,
    error: Error,
}

fn fail(context: impl Into<String>) -> impl FnOnce(Error) -> Failure {
    let context = context.into();
    move |error| Failure { context, error }
}

type Outcome = std::result::Result<(u8, String), Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_TRUE
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((code, text)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(Failure { context, error }) => {
            let _ = writeln!(err, "error: {context}: {error}");
            if let Error::Parse(ParseError { pos, .. }) = &error {
                let _ = writeln!(err, "  {}", formula_text(&context));
                let _ = writeln!(err, "  {}^", " ".repeat(*pos));
            }
            EXIT_ERROR
        }
    }
}

// The formula text is carried in the context of parse failures.
fn formula_text(context: &str) -> &str {
    context
        .strip_prefix("formula ")
        .unwrap_or(context)
        .trim_matches('`')
}

fn parse_formula(text: &str) -> Result<Formula, Failure> {
    parse(text).map_err(|e| Failure {
        context: format!("formula `{text}`"),
        error: e.into(),
    })
}

fn load_model(spec: &str) -> Result<KripkeModel, Failure> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| Failure {
            context: spec.to_string(),
            error: Error::Io {
                path: spec.to_string(),
                source,
            },
        })?;
        return KripkeModel::parse(&text).map_err(fail(spec));
    }
    if let Some(model) = fixtures::load(spec) {
        return Ok(model);
    }
    Err(Failure {
        context: spec.to_string(),
        error: Error::Io {
            path: spec.to_string(),
            source: std::io::Error::new(
                std::io::ErrorKind::NotFound,
                "no such file and not a shipped fixture",
            ),
        },
    })
}

fn split_list(list: &str) -> Vec<&str> {
    list.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .collect()
}

fn parse_team(model: &KripkeModel, spec: &str, list: &str) -> Result<Team, Failure> {
    model.team(&split_list(list)).map_err(fail(spec))
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Check {
            model,
            formula,
            team,
        } => {
            let k = load_model(&model)?;
            let f = parse_formula(&formula)?;
            let t = match &team {
                Some(list) => parse_team(&k, &model, list)?,
                None => k.default_team().cloned().unwrap_or_else(|| k.full_team()),
            };
            let verdict = semantics::eval(&k, &t, &f).map_err(fail(&model))?;
            Ok(if verdict {
                (EXIT_TRUE, "true\n".into())
            } else {
                (EXIT_FALSE, "false\n".into())
            })
        }
        Command::Bisim(args) => bisim(args),
        Command::Hintikka { model, world, k } => {
            let m = load_model(&model)?;
            let w = m.world(&world).map_err(fail(&model))?;
            Ok((EXIT_TRUE, format!("{}\n", hintikka(&m, w, k))))
        }
        Command::Translate { to, formula } => {
            let f = parse_formula(&formula)?;
            let g = match to {
                Target::Emdl => mlidis_to_emdl(&f),
                Target::Mlidis => emdl_to_mlidis(&f),
            }
            .map_err(fail(format!("formula `{formula}`")))?;
            Ok((EXIT_TRUE, format!("{g}\n")))
        }
        Command::Normalform { formula } => {
            let f = parse_formula(&formula)?;
            let psi = to_normal_form(&f).map_err(fail(format!("formula `{formula}`")))?;
            Ok((EXIT_TRUE, psi.iter().map(|g| format!("{g}\n")).collect()))
        }
        Command::Dim { models, formula } => {
            let f = parse_formula(&formula)?;
            let mut loaded = Vec::new();
            for spec in split_list(&models) {
                loaded.push((spec.to_string(), load_model(spec)?));
            }
            if loaded.is_empty() {
                return Err(Failure {
                    context: "-m".into(),
                    error: Error::Invalid("no models given".into()),
                });
            }
            let report = dim_report(&loaded, &f).map_err(fail(models.as_str()))?;
            Ok((EXIT_TRUE, report.to_string()))
        }
        Command::Classify { formula } => {
            let f = parse_formula(&formula)?;
            let fragment = f.classify().map_err(fail(format!("formula `{formula}`")))?;
            Ok((EXIT_TRUE, format!("{fragment}\n")))
        }
    }
}

fn bisim(args: BisimArgs) -> Outcome {
    let left = load_model(&args.left)?;
    let right_spec = args.right.as_deref().unwrap_or(&args.left);
    let right = load_model(right_spec)?;
    let classes = kbisim_classes(&left, &right, args.k)
        .map_err(fail(format!("{} and {right_spec}", args.left)))?;
    let level = if args.teams {
        let t = parse_team(&left, &args.left, &args.left_point)?;
        let u = parse_team(&right, right_spec, &args.right_point)?;
        classes.team_distinguishing_level(&t, &u)
    } else {
        let w = left.world(&args.left_point).map_err(fail(&args.left))?;
        let v = right.world(&args.right_point).map_err(fail(right_spec))?;
        classes.distinguishing_level(w, v)
    };
    Ok(match level {
        None => (EXIT_TRUE, "bisimilar\n".into()),
        Some(j) => (EXIT_FALSE, format!("not-bisimilar level={j}\n")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (u8, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("teamlogic").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn check_examples() {
        assert_eq!(
            call(&["check", "-m", "M1", "-f", "p | q", "-t", "a,b"]).0,
            0
        );
        assert_eq!(
            call(&["check", "-m", "M1", "-f", "p", "-t", "a,b"]).1,
            "false\n"
        );
        assert_eq!(call(&["check", "-m", "M1", "-f", "p", "-t", ""]).0, 0);
        // M3 declares `team a`
        assert_eq!(call(&["check", "-m", "M3", "-f", "~p & ~q"]).0, 0);
        // M1 has no team line: the full team is used
        assert_eq!(call(&["check", "-m", "M1", "-f", "p"]).0, 1);
    }

    #[test]
    fn classify_and_translate() {
        assert_eq!(call(&["classify", "-f", "dep(<>p; q)"]).1, "EMDL\n");
        let (code, out, _) = call(&["translate", "--to", "mlidis", "-f", "dep(; p)"]);
        assert_eq!((code, out.as_str()), (0, "p \\/ ~p\n"));
        let (_, out, _) = call(&["normalform", "-f", "(p \\/ q) & r"]);
        assert_eq!(out, "p & r\nq & r\n");
    }

    #[test]
    fn bisim_examples() {
        let (code, out, _) = call(&[
            "bisim", "-m", "M1", "-w", "a", "-n", "M1dup", "-x", "a", "-k", "3",
        ]);
        assert_eq!((code, out.as_str()), (0, "bisimilar\n"));
        let (code, out, _) = call(&["bisim", "-m", "M1", "-w", "a", "-x", "b", "-k", "2"]);
        assert_eq!((code, out.as_str()), (1, "not-bisimilar level=0\n"));
        let (code, _, _) = call(&[
            "bisim", "--teams", "-m", "M1", "-w", "a,b", "-n", "M1dup", "-x", "a,b1", "-k", "2",
        ]);
        assert_eq!(code, 0);
    }

    #[test]
    fn errors_exit_2() {
        let (code, _, err) = call(&["check", "-m", "M1", "-f", "p &", "-t", "a"]);
        assert_eq!(code, 2);
        assert!(err.contains("position 3"), "{err}");
        let (code, _, err) = call(&["check", "-m", "M1", "-f", "r"]);
        assert_eq!(code, 2);
        assert!(err.contains("unknown proposition `r`"), "{err}");
        assert_eq!(call(&["check", "-m", "nope.kripke", "-f", "p"]).0, 2);
        assert_eq!(call(&["check", "-m", "M1", "-f", "p", "-t", "z"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["translate", "--to", "emdl", "-f", "dep(p; q)"]).0, 2);
        assert_eq!(
            call(&["bisim", "-m", "M1", "-w", "a", "-n", "FULL2", "-x", "zz", "-k", "1"]).0,
            2
        );
    }

    #[test]
    fn help_exits_0() {
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("check"));
    }
}
