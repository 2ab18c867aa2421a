use std::io::Read as _;
use std::process::ExitCode;

use anyhow::anyhow;
use brauer_core::diagram::{enumerate_noncrossing, DiagramParseError};
use brauer_core::render::{render_ascii, render_tikz};
use brauer_core::rep::{faithfulness_report_with, rep_checked_term, RepError};
use brauer_core::verify::{axiom_sweep, commutant_sweep, functor_sweep, CheckReport};
use brauer_core::{
    compose, enumerate_diagrams, parse, represent, CheckedTerm, Diagram, ExactMatrix, Execution,
    LoopValue, Term, WeightedDiagram,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "brauer",
    version,
    about = "Brauer diagrams, self-adjunction terms and their matrices"
)]
struct Cli {
    /// Run batch checks on one thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compose two diagrams, the first drawn on top.
    Compose {
        upper: Option<String>,
        lower: Option<String>,
        /// JSON array `[upper, lower]` of diagrams; `-` reads stdin.
        #[arg(long, conflicts_with_all = ["upper", "lower"])]
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Matrix of a diagram or a term at loop value p.
    Represent {
        input: Option<String>,
        #[arg(long)]
        p: u32,
        /// Diagram or term as JSON (or text); `-` reads stdin.
        #[arg(long, conflicts_with = "input")]
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run a verification suite; exits 5 if any law fails.
    Check {
        #[command(subcommand)]
        suite: Suite,
    },
    /// Dimension and rank of the represented algebra.
    Faithfulness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u32,
        /// Restrict to non-crossing diagrams.
        #[arg(long)]
        tl: bool,
    },
    /// List every m>n diagram in canonical order.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        noncrossing: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw a diagram.
    Render {
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
    },
    /// Type and links of a term.
    EvalTerm {
        input: Option<String>,
        #[arg(long, conflicts_with = "input")]
        file: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// The eight equations and naturality, through links and optionally matrices.
    Axioms {
        #[arg(long, default_value_t = 3)]
        max_power: usize,
        /// Loop values for the matrix check (repeatable).
        #[arg(long)]
        p: Vec<u32>,
    },
    /// R(d2 o d1) = R(d2) R(d1) over all composable pairs.
    Functor {
        #[arg(long, default_value_t = 3)]
        max_size: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
    /// Diagram matrices commute with orthogonal tensor powers.
    Commutant {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        p: u32,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Ascii,
    Tikz,
}

/// An error with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl Failure {
    fn parse(e: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 2,
            error: e.into(),
        }
    }
    fn shape(e: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 3,
            error: e.into(),
        }
    }
    fn typing(e: impl Into<anyhow::Error>) -> Self {
        Failure {
            code: 4,
            error: e.into(),
        }
    }
}

type Outcome = Result<String, Failure>;

const MAX_CHECK_SIZE: usize = 4;
const MAX_CHECK_POWER: usize = 6;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::default()
    };
    match run(cli.command, exec) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure { code, error }) => {
            if code == 5 {
                print!("{error}");
            } else {
                eprintln!("error: {error:#}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(command: Command, exec: Execution) -> Outcome {
    match command {
        Command::Compose {
            upper,
            lower,
            file,
            format,
        } => {
            let (d1, d2) = match file {
                Some(path) => {
                    let values: Vec<serde_json::Value> =
                        serde_json::from_str(&read_source(&path)?).map_err(Failure::parse)?;
                    let [a, b]: [serde_json::Value; 2] = values.try_into().map_err(|_| {
                        Failure::parse(anyhow!("expected a JSON array of two diagrams"))
                    })?;
                    (diagram_value(a)?, diagram_value(b)?)
                }
                None => (
                    diagram_arg(upper.as_deref())?,
                    diagram_arg(lower.as_deref())?,
                ),
            };
            let w = compose(&d1, &d2).map_err(Failure::shape)?;
            Ok(match format {
                Format::Json => json_line(json!(w)),
                _ => format!("{w}\n"),
            })
        }
        Command::Represent {
            input,
            p,
            file,
            format,
        } => {
            let p = loop_value(p)?;
            match read_input(input, file)? {
                Input::Diagram(d) => Ok(matrix_output(&represent(&d.into(), p), format)),
                Input::Term(t) => {
                    let t = t.check().map_err(Failure::typing)?;
                    let links = t.links();
                    let m = rep_checked_term(&t, p);
                    Ok(match format {
                        Format::Json => json_line(json!({ "links": links, "matrix": m })),
                        Format::Csv => format!("# links: {links}\n{}", m.to_csv()),
                        Format::Text => format!("links: {links}\n{}", m.to_grid()),
                    })
                }
            }
        }
        Command::Check { suite } => {
            let report = match suite {
                Suite::Axioms { max_power, p } => {
                    guard(max_power <= MAX_CHECK_POWER, "--max-power", MAX_CHECK_POWER)?;
                    let ps = p
                        .into_iter()
                        .map(loop_value)
                        .collect::<Result<Vec<_>, _>>()?;
                    axiom_sweep(max_power, &ps, exec)
                }
                Suite::Functor { max_size, p } => {
                    guard(max_size <= MAX_CHECK_SIZE, "--max-size", MAX_CHECK_SIZE)?;
                    functor_sweep(max_size, loop_value(p)?, exec)
                }
                Suite::Commutant { n, p } => {
                    guard(n <= MAX_CHECK_SIZE, "--n", MAX_CHECK_SIZE)?;
                    commutant_sweep(n, loop_value(p)?, exec)
                }
            };
            report_outcome(report)
        }
        Command::Faithfulness { n, p, tl } => {
            let report =
                faithfulness_report_with(n, loop_value(p)?, tl, exec).map_err(|e| match e {
                    RepError::Type(_) => Failure::typing(e),
                    _ => Failure::shape(e),
                })?;
            Ok(format!("{report}\n"))
        }
        Command::Enumerate {
            m,
            n,
            noncrossing,
            format,
        } => {
            let ds = if noncrossing {
                enumerate_noncrossing(m, n)
            } else {
                enumerate_diagrams(m, n)
            };
            Ok(match format {
                Format::Json => json_line(json!(ds)),
                _ => ds.iter().map(|d| format!("{d}\n")).collect(),
            })
        }
        Command::Render { input, file, style } => {
            let d = match read_input(input, file)? {
                Input::Diagram(d) => d,
                Input::Term(_) => return Err(Failure::parse(anyhow!("render expects a diagram"))),
            };
            Ok(match style {
                Style::Ascii => render_ascii(&d),
                Style::Tikz => render_tikz(&d),
            })
        }
        Command::EvalTerm {
            input,
            file,
            format,
        } => {
            let t = match read_input(input, file)? {
                Input::Term(t) => t,
                Input::Diagram(_) => {
                    return Err(Failure::parse(anyhow!("eval-term expects a term")))
                }
            };
            let t: CheckedTerm = t.check().map_err(Failure::typing)?;
            let links: WeightedDiagram = t.links();
            Ok(match format {
                Format::Json => json_line(json!({
                    "term": t.term(),
                    "source": t.source(),
                    "target": t.target(),
                    "links": links,
                })),
                _ => format!(
                    "{}\ntype: {} -> {}\nlinks: {links}\n",
                    t.term(),
                    t.source().0,
                    t.target().0
                ),
            })
        }
    }
}

enum Input {
    Diagram(Diagram),
    Term(Term),
}

fn read_source(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(Failure::parse)?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::parse(anyhow!("{path}: {e}")))?;
    }
    Ok(s)
}

fn read_input(input: Option<String>, file: Option<String>) -> Result<Input, Failure> {
    match (input, file) {
        (Some(text), _) => parse_input(&text),
        (None, Some(path)) => {
            let src = read_source(&path)?;
            let trimmed = src.trim_start();
            if trimmed.starts_with('{') {
                let value: serde_json::Value =
                    serde_json::from_str(trimmed).map_err(Failure::parse)?;
                if value.get("kind").is_some() {
                    serde_json::from_value(value)
                        .map(Input::Term)
                        .map_err(Failure::parse)
                } else {
                    serde_json::from_value(value)
                        .map(Input::Diagram)
                        .map_err(Failure::parse)
                }
            } else {
                parse_input(&src)
            }
        }
        (None, None) => Err(Failure::parse(anyhow!(
            "missing input: give it inline or with --file"
        ))),
    }
}

fn parse_input(text: &str) -> Result<Input, Failure> {
    if text.contains('>') {
        diagram_text(text).map(Input::Diagram)
    } else {
        parse(text).map(Input::Term).map_err(Failure::parse)
    }
}

fn diagram_text(text: &str) -> Result<Diagram, Failure> {
    text.parse().map_err(|e| match e {
        DiagramParseError::Invalid(_) => Failure::shape(e),
        DiagramParseError::Syntax { .. } => Failure::parse(e),
    })
}

fn diagram_arg(text: Option<&str>) -> Result<Diagram, Failure> {
    diagram_text(text.ok_or_else(|| Failure::parse(anyhow!("compose needs two diagrams")))?)
}

/// A diagram given either as its text form or as a JSON object.
fn diagram_value(value: serde_json::Value) -> Result<Diagram, Failure> {
    match value {
        serde_json::Value::String(text) => diagram_text(&text),
        other => serde_json::from_value(other).map_err(Failure::parse),
    }
}

fn loop_value(p: u32) -> Result<LoopValue, Failure> {
    LoopValue::new(p).map_err(Failure::shape)
}

fn guard(ok: bool, flag: &str, max: usize) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::shape(anyhow!("{flag} is limited to {max}")))
    }
}

fn report_outcome(report: CheckReport) -> Outcome {
    let text = format!("{report}\n");
    if report.all_pass() {
        Ok(text)
    } else {
        Err(Failure {
            code: 5,
            error: anyhow!(text),
        })
    }
}

fn matrix_output(m: &ExactMatrix, format: Format) -> String {
    match format {
        Format::Json => json_line(json!(m)),
        Format::Csv => m.to_csv(),
        Format::Text => m.to_grid(),
    }
}

fn json_line(value: serde_json::Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}
