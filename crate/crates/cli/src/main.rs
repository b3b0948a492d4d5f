use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;
use std::process::ExitCode;

use adflp::adf::KleeneKind;
use adflp::syntax::{parse_adf, parse_program, parse_setaf};
use adflp::translate::{p_of_xi, setaf_to_adf, xi, xi2};
use adflp::verify::{run_check, CheckReport, GenConfig, CHECKS, EXPLORATORY};
use adflp::{check_adfplus, Adf, Error, Interpretation, Limits, LinkClass, LpKind};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(
    name = "adflp",
    version,
    about = "Semantics of ADFs and normal logic programs, and translations between them"
)]
struct Cli {
    #[command(flatten)]
    global: Global,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Largest framework or program to enumerate.
    #[arg(long, global = true, default_value_t = adflp::DEFAULT_MAX_STATEMENTS)]
    max_statements: usize,

    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,

    /// Base seed for `verify`; trial i uses seed + i.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Render negation as ¬ instead of ~.
    #[arg(long, global = true)]
    unicode: bool,

    /// Reject ADF input that has a non-attacking link.
    #[arg(long, global = true)]
    assert_adfplus: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Nlp,
    Adf,
    Setaf,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Semantics {
    Complete,
    Grounded,
    Preferred,
    Stable,
    Lstable,
    Admissible,
    Partialstable,
    Regular,
    Semistable,
    Psm,
    Wellfounded,
    Lpregular,
    Lpstable,
    Lplstable,
}

impl Semantics {
    fn lp_kind(self) -> Option<LpKind> {
        Some(match self {
            Semantics::Psm => LpKind::PartialStable,
            Semantics::Wellfounded => LpKind::WellFounded,
            Semantics::Lpregular => LpKind::Regular,
            Semantics::Lpstable => LpKind::Stable,
            Semantics::Lplstable => LpKind::LStable,
            _ => return None,
        })
    }

    fn name(self) -> String {
        self.to_possible_value().unwrap().get_name().to_string()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the models of a framework or program.
    Solve {
        /// Input file, or `-` for stdin.
        path: String,
        /// Input format; inferred from the extension when omitted.
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, value_enum)]
        semantics: Semantics,
    },
    /// Translate between programs, ADFs and SETAFs.
    Translate {
        path: String,
        #[arg(long, value_enum)]
        from: Format,
        #[arg(long, value_enum)]
        to: Format,
        /// Use one acceptance disjunct per rule body instead of supports.
        #[arg(long)]
        naive: bool,
    },
    /// Classify every link of an ADF.
    Links {
        path: String,
        /// Print the framework with redundant links removed instead.
        #[arg(long)]
        prune_redundant: bool,
    },
    /// Run randomized property checks.
    Verify {
        /// Checks to run; all standard checks when empty.
        names: Vec<String>,
        /// Also run the exploratory checks.
        #[arg(long)]
        exploratory: bool,
        #[arg(long, default_value_t = 200)]
        trials: usize,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Capacity { .. }) {
            3
        } else {
            2
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn input_error(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

struct Outcome {
    stdout: String,
    stderr: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Failure> {
    let g = &cli.global;
    let limits = Limits {
        max_statements: g.max_statements,
        ..Limits::default()
    };
    match &cli.command {
        Command::Solve {
            path,
            format,
            semantics,
        } => {
            let format = match format {
                Some(f) => *f,
                None => infer_format(path)?,
            };
            solve(g, &limits, &read_input(path)?, format, *semantics)
        }
        Command::Translate {
            path,
            from,
            to,
            naive,
        } => translate(g, &limits, &read_input(path)?, *from, *to, *naive).map(Outcome::ok),
        Command::Links {
            path,
            prune_redundant,
        } => links(g, &read_input(path)?, *prune_redundant),
        Command::Verify {
            names,
            exploratory,
            trials,
        } => verify(g, names, *exploratory, *trials),
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| input_error(format!("cannot read {path}: {e}")))?;
    Ok(text)
}

fn infer_format(path: &str) -> Result<Format, Failure> {
    let ext = Path::new(path)
        .extension()
        .and_then(|e| e.to_str())
        .unwrap_or("");
    match ext {
        "lp" | "nlp" => Ok(Format::Nlp),
        "adf" | "dl" => Ok(Format::Adf),
        "setaf" | "af" => Ok(Format::Setaf),
        _ => Err(input_error(format!(
            "cannot infer the format of `{path}`; pass --format nlp|adf|setaf"
        ))),
    }
}

fn load_adf(g: &Global, text: &str, format: Format) -> Result<Adf, Failure> {
    let adf = match format {
        Format::Adf => parse_adf(text)?,
        Format::Setaf => setaf_to_adf(&parse_setaf(text)?)?.into_adf(),
        Format::Nlp => unreachable!("programs are not loaded as frameworks"),
    };
    if g.assert_adfplus {
        check_adfplus(&adf)?;
    }
    Ok(adf)
}

fn solve(
    g: &Global,
    limits: &Limits,
    text: &str,
    format: Format,
    sem: Semantics,
) -> Result<Outcome, Failure> {
    let mut stderr = String::new();
    let models = match (format, sem.lp_kind()) {
        (Format::Nlp, Some(kind)) => parse_program(text)?.semantics(kind, limits)?,
        (Format::Nlp, None) => {
            return Err(input_error(format!(
                "`{}` is a framework semantics; for programs use psm, wellfounded, lpregular, lpstable or lplstable",
                sem.name()
            )))
        }
        (_, Some(_)) => {
            return Err(input_error(format!(
                "`{}` is a program semantics; use --format nlp, or a framework semantics such as complete",
                sem.name()
            )))
        }
        (_, None) => {
            let adf = load_adf(g, text, format)?;
            let kleene = |kind| adf.kleene_semantics(kind, limits);
            match sem {
                Semantics::Complete => adf.complete_models(limits)?,
                Semantics::Grounded => vec![adf.grounded_model()],
                Semantics::Preferred => adf.preferred_models(limits)?,
                Semantics::Stable => adf.stable_models(limits)?,
                Semantics::Lstable => {
                    if check_adfplus(&adf).is_err() {
                        stderr.push_str("note: input is not an ADF⁺; computing L-stable (Part II definition)\n");
                    }
                    adflp::adfplus::l_stable_models(&adf, limits)?
                }
                Semantics::Admissible => kleene(KleeneKind::Admissible)?,
                Semantics::Partialstable => kleene(KleeneKind::PartialStable)?,
                Semantics::Regular => kleene(KleeneKind::Regular)?,
                Semantics::Semistable => kleene(KleeneKind::SemiStable)?,
                _ => unreachable!("program semantics handled above"),
            }
        }
    };
    let models: BTreeSet<Interpretation> = models.into_iter().collect();
    let stdout = render_models(&models, g.output, g.unicode);
    let code = if models.is_empty() { 1 } else { 0 };
    Ok(Outcome {
        stdout,
        stderr,
        code,
    })
}

fn render_models(models: &BTreeSet<Interpretation>, output: Output, unicode: bool) -> String {
    match output {
        Output::Text => models
            .iter()
            .map(|m| m.to_set_string(unicode) + "\n")
            .collect(),
        Output::Json => {
            let list: Vec<Value> = models
                .iter()
                .map(|m| {
                    let obj: Map<String, Value> = m
                        .universe()
                        .names()
                        .iter()
                        .zip(m.values())
                        .map(|(n, v)| (n.clone(), Value::from(v.symbol())))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            json!({ "models": list }).to_string() + "\n"
        }
    }
}

fn translate(
    g: &Global,
    limits: &Limits,
    text: &str,
    from: Format,
    to: Format,
    naive: bool,
) -> Result<String, Failure> {
    let (body, kind) = match (from, to) {
        (Format::Nlp, Format::Adf) => {
            let p = parse_program(text)?;
            let adf = if naive { xi2(&p) } else { xi(&p, limits)?.into_adf() };
            (adf.to_text(), "adf")
        }
        (Format::Adf, Format::Nlp) => (p_of_xi(&load_adf(g, text, Format::Adf)?)?.to_text(), "nlp"),
        (Format::Setaf, Format::Adf) => (setaf_to_adf(&parse_setaf(text)?)?.to_text(), "adf"),
        _ => {
            return Err(input_error(
                "supported translations: --from nlp --to adf, --from adf --to nlp, --from setaf --to adf",
            ))
        }
    };
    if naive && from != Format::Nlp {
        return Err(input_error("--naive only applies to --from nlp --to adf"));
    }
    Ok(match g.output {
        Output::Text => body,
        Output::Json => json!({ "format": kind, "text": body }).to_string() + "\n",
    })
}

fn links(g: &Global, text: &str, prune: bool) -> Result<Outcome, Failure> {
    let adf = load_adf(g, text, Format::Adf)?;
    let plus = check_adfplus(&adf);
    if prune {
        let pruned =
            plus.map_err(|e| input_error(format!("--prune-redundant needs an ADF⁺ input: {e}")))?;
        let pruned = pruned.without_redundant_links()?;
        let out = match g.output {
            Output::Text => pruned.to_text(),
            Output::Json => json!({ "format": "adf", "text": pruned.to_text() }).to_string() + "\n",
        };
        return Ok(Outcome::ok(out));
    }
    let classes: Vec<((usize, usize), LinkClass)> = match &plus {
        Ok(p) => {
            let redundant: BTreeSet<_> = p.redundant_links_by_count().into_iter().collect();
            adf.links()
                .into_iter()
                .map(|l| {
                    (
                        l,
                        if redundant.contains(&l) {
                            LinkClass::Redundant
                        } else {
                            LinkClass::Attacking
                        },
                    )
                })
                .collect()
        }
        Err(_) => adf.classify_links()?,
    };
    let name = |i: usize| adf.statements().name(i).to_string();
    let out = match g.output {
        Output::Text => classes
            .iter()
            .map(|((r, s), c)| format!("({},{}): {c}\n", name(*r), name(*s)))
            .collect(),
        Output::Json => {
            let list: Vec<Value> = classes
                .iter()
                .map(|((r, s), c)| json!({ "from": name(*r), "to": name(*s), "class": c.to_string() }))
                .collect();
            json!({ "links": list }).to_string() + "\n"
        }
    };
    Ok(Outcome::ok(out))
}

fn verify(
    g: &Global,
    names: &[String],
    exploratory: bool,
    trials: usize,
) -> Result<Outcome, Failure> {
    let cfg = GenConfig {
        seed: g.seed,
        trials,
        ..GenConfig::default()
    };
    let mut selected: Vec<String> = if names.is_empty() {
        CHECKS.iter().map(|s| s.to_string()).collect()
    } else {
        names.to_vec()
    };
    if exploratory {
        selected.extend(EXPLORATORY.iter().map(|s| s.to_string()));
    }
    let reports = selected
        .iter()
        .map(|n| run_check(n, &cfg))
        .collect::<Result<Vec<CheckReport>, Error>>()?;
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let stdout = match g.output {
        Output::Json => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        Output::Text => {
            let mut s = String::new();
            for r in &reports {
                let verdict = if r.passed() { "PASS" } else { "FAIL" };
                s += &format!(
                    "{verdict} {} ({} trials, {} failures)\n",
                    r.check,
                    r.trials,
                    r.failures.len()
                );
                for f in &r.failures {
                    let seed = f.seed.map_or("fixed".to_string(), |s| s.to_string());
                    s += &format!("  seed {seed}\n");
                    for line in f.instance.lines() {
                        s += &format!("    {line}\n");
                    }
                    s += &format!("    expected: {}\n    actual:   {}\n", f.expected, f.actual);
                }
                for note in &r.notes {
                    s += &format!("  note: {note}\n");
                }
            }
            s
        }
    };
    Ok(Outcome {
        stdout,
        stderr: String::new(),
        code: if failed > 0 { 1 } else { 0 },
    })
}
