//! `ordcalc` — ordinal arithmetic and function-space classification from the
//! shell.
//!
//! Expressions use a small ASCII grammar (`w` for the first infinite ordinal,
//! `w_1`/`w_[...]` for uncountable initial ordinals, `+ * ^` with ordinal
//! semantics), and space expressions wrap ordinals as `C(x)`, `C(x, l_p)`, or
//! `K(C(l, l_p), C(x, l_q))`.  Results go to stdout, diagnostics to stderr,
//! and the exit code tells scripts what happened:
//!
//! | code | meaning                                   |
//! |------|-------------------------------------------|
//! | 0    | success (including `Undecided` verdicts)  |
//! | 1    | expression syntax error                   |
//! | 2    | domain error (bad exponent, bad flag use) |
//! | 3    | `OutOfScope` verdict                      |
//! | 4    | self-test found a mismatch                |
//!
//! Every invocation is deterministic: the same command line and inputs
//! produce byte-identical output, in both plain and `--json` form.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ordcalc_core::{
    canonical_pair, classify_pair, differential_check, parse_normal, parse_space, verdict_to_json,
    AxiomContext, GridSpec, NormalOrdinal, Outcome, PsiMode, SpaceParseError, Verdict,
};

#[derive(Parser)]
#[command(
    name = "ordcalc",
    version,
    about = "Ordinal calculator and function-space classifier",
    after_help = "Ordinals: w, w_1, w_[w], sums/products/powers, e.g. 'w^w*2 + w_1'.\n\
                  Spaces:   C(w^2), C(w_1, l_2), K(C(w,l_2), C(w^w,l_2)).\n\
                  Batch files hold one query per line ('#' starts a comment)."
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    /// Which window rule the canonical index uses on uncountable targets
    /// with a finite left index.
    #[arg(long, value_enum, default_value_t = PsiModeArg::Repaired, global = true)]
    psi_mode: PsiModeArg,

    /// Whether to grant the set-theoretic assumption that rules out real-valued
    /// measurable cardinals below the relevant index cardinality.
    #[arg(long, value_name = "BOOL", default_value_t = true, action = ArgAction::Set, global = true)]
    assume_no_rvm: bool,

    /// Annotate plain results with the decision trace and its citations.
    #[arg(long, global = true)]
    explain: bool,

    /// Run queries from FILE instead of the command line (one per line).
    #[arg(long, value_name = "FILE")]
    batch: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PsiModeArg {
    /// Collapse every countably infinite quotient (the corrected rule).
    Repaired,
    /// Collapse only quotients of at most w (the rule as first stated).
    Literal,
}

impl From<PsiModeArg> for PsiMode {
    fn from(value: PsiModeArg) -> Self {
        match value {
            PsiModeArg::Repaired => PsiMode::Repaired,
            PsiModeArg::Literal => PsiMode::Literal,
        }
    }
}

#[derive(Subcommand, Clone)]
enum Command {
    /// Parse an ordinal expression and print its normal form.
    Norm { expr: String },
    /// Evaluate an ordinal expression (synonym of `norm`: evaluation and
    /// normalization are the same computation).
    Calc { expr: String },
    /// Compare two ordinals; prints Less, Equal, or Greater.
    Cmp { a: String, b: String },
    /// Print the cardinality of an ordinal.
    Card { expr: String },
    /// Print the cofinality of an ordinal.
    Cof { expr: String },
    /// Print the canonical second index of the compact-operator space with
    /// left index LAMBDA and target index XI.
    Psi { lambda: String, xi: String },
    /// Decide whether two spaces are isomorphic.
    Classify { a: String, b: String },
    /// Run the differential suites against the independent oracles.
    Selftest {
        /// Which named grid to run on.
        #[arg(long, default_value = "tiny-v1")]
        grid: String,
    },
}

/// Options shared by every query in an invocation.
struct Opts {
    json: bool,
    explain: bool,
    ctx: AxiomContext,
}

/// A result to print on stdout, with the exit code it implies.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

/// A diagnostic to print on stderr, with the exit code it implies.
enum Failure {
    Parse(String),
    Domain(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Parse(_) => 1,
            Failure::Domain(_) => 2,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Parse(m) | Failure::Domain(m) => m,
        }
    }
}

impl From<ordcalc_core::ParseError> for Failure {
    fn from(e: ordcalc_core::ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<SpaceParseError> for Failure {
    fn from(e: SpaceParseError) -> Self {
        match e {
            SpaceParseError::Syntax(inner) => Failure::Parse(inner.to_string()),
            domain => Failure::Domain(domain.to_string()),
        }
    }
}

impl From<ordcalc_core::DomainError> for Failure {
    fn from(e: ordcalc_core::DomainError) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = Opts {
        json: cli.json,
        explain: cli.explain,
        ctx: AxiomContext {
            assume_no_rvm: cli.assume_no_rvm,
            psi_mode: cli.psi_mode.into(),
        },
    };
    let code = match (&cli.batch, &cli.command) {
        (Some(path), None) => run_batch(path, &opts),
        (None, Some(command)) => match run_command(command, &opts) {
            Ok(out) => {
                emit(&out.text);
                out.code
            }
            Err(failure) => {
                eprintln!("{}", failure.message());
                failure.code()
            }
        },
        (Some(_), Some(_)) => {
            eprintln!("--batch replaces the subcommand; give one or the other");
            2
        }
        (None, None) => {
            eprintln!("a subcommand or --batch FILE is required (see --help)");
            2
        }
    };
    ExitCode::from(code)
}

fn run_command(command: &Command, opts: &Opts) -> Result<Output, Failure> {
    match command {
        Command::Norm { expr } | Command::Calc { expr } => {
            let value = parse_normal(expr)?;
            if opts.json {
                Ok(Output::ok(compact(&json!({
                    "input": expr,
                    "normal": value.to_string(),
                }))))
            } else {
                Ok(Output::ok(value.to_string()))
            }
        }
        Command::Cmp { a, b } => {
            let left = parse_normal(a)?;
            let right = parse_normal(b)?;
            let order = format!("{:?}", left.cmp(&right));
            if opts.json {
                Ok(Output::ok(compact(&json!({
                    "left": a,
                    "right": b,
                    "order": order,
                }))))
            } else {
                Ok(Output::ok(order))
            }
        }
        Command::Card { expr } => {
            let value = parse_normal(expr)?;
            let rank = value.cardinality().to_string();
            if opts.json {
                Ok(Output::ok(compact(&json!({
                    "input": expr,
                    "cardinality": rank,
                }))))
            } else {
                Ok(Output::ok(rank))
            }
        }
        Command::Cof { expr } => {
            let value = parse_normal(expr)?;
            let cof = value.cofinality().to_string();
            if opts.json {
                Ok(Output::ok(compact(&json!({
                    "input": expr,
                    "cofinality": cof,
                }))))
            } else {
                Ok(Output::ok(cof))
            }
        }
        Command::Psi { lambda, xi } => {
            let lambda = parse_normal(lambda)?;
            let xi = parse_normal(xi)?;
            Ok(psi_output(&lambda, &xi, opts))
        }
        Command::Classify { a, b } => {
            let left = parse_space(a)?;
            let right = parse_space(b)?;
            let verdict = classify_pair(&left, &right, &opts.ctx)?;
            Ok(verdict_output(&verdict, opts))
        }
        Command::Selftest { grid } => {
            let spec = GridSpec::by_name(grid).ok_or_else(|| {
                Failure::Domain(format!(
                    "unknown grid '{grid}' (expected one of: {})",
                    GridSpec::known_names().join(", ")
                ))
            })?;
            let report = differential_check(&[], &spec)?;
            let mismatches = report.total_mismatches();
            let code = if mismatches == 0 { 0 } else { 4 };
            if opts.json {
                Ok(Output {
                    text: compact(&report.to_json()),
                    code,
                })
            } else {
                let status = if mismatches == 0 {
                    "selftest: ok (no mismatches)".to_string()
                } else {
                    format!("selftest: FAILED ({mismatches} mismatches)")
                };
                Ok(Output {
                    text: format!("{}{status}", report.render_text()),
                    code,
                })
            }
        }
    }
}

fn psi_output(lambda: &NormalOrdinal, xi: &NormalOrdinal, opts: &Opts) -> Output {
    let pair = canonical_pair(lambda, xi, &opts.ctx);
    if opts.json {
        return Output::ok(compact(&json!({
            "lambda": lambda.to_string(),
            "xi": xi.to_string(),
            "lambda0": pair.lambda0.to_string(),
            "psi": pair.psi.to_string(),
            "psi_mode": opts.ctx.psi_mode.to_string(),
        })));
    }
    let mut text = pair.psi.to_string();
    if opts.explain {
        text.push_str(&format!(
            "\n# psi-mode: {}\n# assume-no-rvm: {}\n# lambda0: {}",
            opts.ctx.psi_mode, opts.ctx.assume_no_rvm, pair.lambda0
        ));
    }
    Output::ok(text)
}

fn verdict_output(verdict: &Verdict, opts: &Opts) -> Output {
    let code = if verdict.outcome == Outcome::OutOfScope {
        3
    } else {
        0
    };
    if opts.json {
        return Output {
            text: compact(&verdict_to_json(verdict, &opts.ctx)),
            code,
        };
    }
    let mut text = verdict.outcome.to_string();
    if opts.explain {
        text.push_str(&format!(
            "\n# psi-mode: {}\n# assume-no-rvm: {}",
            opts.ctx.psi_mode, opts.ctx.assume_no_rvm
        ));
        if let Some((left, right)) = &verdict.canonical {
            text.push_str(&format!(
                "\n# canonical left: lambda0 = {}, psi = {}\n# canonical right: lambda0 = {}, psi = {}",
                left.lambda0, left.psi, right.lambda0, right.psi
            ));
        }
        for tag in &verdict.assumptions {
            text.push_str(&format!("\n# assumption: {tag}"));
        }
        if let Some(reason) = &verdict.reason {
            text.push_str(&format!("\n# reason: {reason}"));
        }
        if !verdict.trace.is_empty() {
            text.push_str("\n# trace:");
            for entry in &verdict.trace {
                text.push_str(&format!("\n#   {}: {}", entry.case, entry.citation));
            }
        }
    }
    Output { text, code }
}

/// Prints one result line, exiting quietly if the reader went away: a
/// closed pipe (`ordcalc ... | head`) must not look like a crash.
fn emit(text: &str) {
    use std::io::{ErrorKind, Write};
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = writeln!(stdout, "{text}") {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        let _ = writeln!(std::io::stderr(), "cannot write to stdout: {e}");
        std::process::exit(2);
    }
}

fn run_batch(path: &Path, opts: &Opts) -> u8 {
    let content = match std::fs::read_to_string(path) {
        Ok(content) => content,
        Err(e) => {
            eprintln!("cannot read batch file {}: {e}", path.display());
            return 2;
        }
    };
    let mut first_nonzero = 0u8;
    let mut record = |code: u8| {
        if first_nonzero == 0 {
            first_nonzero = code;
        }
    };
    for (index, line) in content.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let outcome = split_query(line)
            .and_then(|tokens| command_from_tokens(&tokens))
            .and_then(|command| run_command(&command, opts));
        match outcome {
            Ok(out) => {
                emit(&out.text);
                record(out.code);
            }
            Err(failure) => {
                eprintln!("line {}: {}", index + 1, failure.message());
                record(failure.code());
            }
        }
    }
    first_nonzero
}

/// Splits a batch line into arguments.  Whitespace separates tokens, but not
/// inside parentheses, brackets, or double quotes, so space expressions can
/// be written either bare — `classify C(w, l_2) C(w^w, l_2)` — or quoted.
fn split_query(line: &str) -> Result<Vec<String>, Failure> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut depth = 0i64;
    let mut quoted = false;
    for c in line.chars() {
        match c {
            '"' => quoted = !quoted,
            '(' | '[' if !quoted => {
                depth += 1;
                current.push(c);
            }
            ')' | ']' if !quoted => {
                depth -= 1;
                current.push(c);
            }
            c if c.is_whitespace() && depth == 0 && !quoted => {
                if !current.is_empty() {
                    tokens.push(std::mem::take(&mut current));
                }
            }
            c => current.push(c),
        }
    }
    if !current.is_empty() {
        tokens.push(current);
    }
    if quoted {
        return Err(Failure::Parse("unclosed quote in query".to_string()));
    }
    if depth != 0 {
        return Err(Failure::Parse("unbalanced brackets in query".to_string()));
    }
    Ok(tokens)
}

fn command_from_tokens(tokens: &[String]) -> Result<Command, Failure> {
    let expect = |n: usize| -> Result<(), Failure> {
        if tokens.len() - 1 == n {
            Ok(())
        } else {
            Err(Failure::Parse(format!(
                "'{}' expects {n} argument{}, got {}",
                tokens[0],
                if n == 1 { "" } else { "s" },
                tokens.len() - 1
            )))
        }
    };
    match tokens[0].as_str() {
        "norm" => {
            expect(1)?;
            Ok(Command::Norm {
                expr: tokens[1].clone(),
            })
        }
        "calc" => {
            expect(1)?;
            Ok(Command::Calc {
                expr: tokens[1].clone(),
            })
        }
        "cmp" => {
            expect(2)?;
            Ok(Command::Cmp {
                a: tokens[1].clone(),
                b: tokens[2].clone(),
            })
        }
        "card" => {
            expect(1)?;
            Ok(Command::Card {
                expr: tokens[1].clone(),
            })
        }
        "cof" => {
            expect(1)?;
            Ok(Command::Cof {
                expr: tokens[1].clone(),
            })
        }
        "psi" => {
            expect(2)?;
            Ok(Command::Psi {
                lambda: tokens[1].clone(),
                xi: tokens[2].clone(),
            })
        }
        "classify" => {
            expect(2)?;
            Ok(Command::Classify {
                a: tokens[1].clone(),
                b: tokens[2].clone(),
            })
        }
        "selftest" => {
            let grid = match tokens.len() {
                1 => "tiny-v1".to_string(),
                2 => tokens[1].clone(),
                3 if tokens[1] == "--grid" => tokens[2].clone(),
                _ => {
                    return Err(Failure::Parse(
                        "'selftest' takes at most a grid name".to_string(),
                    ))
                }
            };
            Ok(Command::Selftest { grid })
        }
        other => Err(Failure::Parse(format!("unknown subcommand '{other}'"))),
    }
}

fn compact(value: &serde_json::Value) -> String {
    serde_json::to_string(value).expect("JSON rendering cannot fail")
}
