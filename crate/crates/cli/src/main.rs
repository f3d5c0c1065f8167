mod render;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dyck_updown::bijection::{ins, InsertionStep};
use dyck_updown::paths::{count_wd, PathRecord, WeightedPaths};
use dyck_updown::perm::{PermRecord, UpDownAvoiders};
use dyck_updown::verify::{run_all, run_suite, RunOptions, SuiteId};
use dyck_updown::{beta, invert, Permutation, SplitRule, WeightedDyckPath, REFERENCE_COUNTS};

#[derive(Parser)]
#[command(
    name = "dyck-updown",
    version,
    about = "Weighted Dyck paths and 1234-avoiding up-down permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every object of one family in canonical order.
    Enumerate {
        #[arg(long, value_enum)]
        family: Family,
        /// Semilength.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Map weighted paths (`UUDD;0,1,1,0`) to permutations.
    Map {
        /// Path text, or `-` to read one per line from standard input.
        input: String,
        /// Also print one JSON record per inserted step.
        #[arg(long)]
        trace: bool,
        #[arg(long, default_value_t = SplitRule::CeilHalf)]
        split_rule: SplitRule,
    },
    /// Recover the weighted path of a permutation (`2,4,1,3`).
    Invert {
        /// Permutation text, or `-` to read one per line from standard input.
        input: String,
        #[arg(long, default_value_t = SplitRule::CeilHalf)]
        split_rule: SplitRule,
    },
    /// Count weighted paths for each semilength against the reference values.
    Count {
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Run property suites and print one JSON report per suite.
    Verify {
        /// A suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Defaults to each suite's own cap.
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = SplitRule::CeilHalf)]
        split_rule: SplitRule,
        #[arg(long)]
        threads: Option<usize>,
        /// Include the n = 7 count when running all suites.
        #[arg(long)]
        stretch: bool,
    },
    /// Draw a weighted path.
    Render {
        /// Path text, or `-` for standard input.
        input: String,
        #[arg(long, value_enum, default_value_t = Style::Ascii)]
        style: Style,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Wd,
    Perm,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum Style {
    Ascii,
}

#[derive(Serialize)]
struct TraceLine<'a> {
    factor: usize,
    side: &'static str,
    #[serde(flatten)]
    step: &'a InsertionStep,
}

/// A domain failure: printed to stderr, exit code 1.
struct Failed(String);

impl<E: std::fmt::Display> From<E> for Failed {
    fn from(e: E) -> Self {
        Failed(e.to_string())
    }
}

type Outcome = Result<bool, Failed>;

fn inputs(input: &str) -> io::Result<Vec<String>> {
    if input != "-" {
        return Ok(vec![input.to_string()]);
    }
    let mut lines = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        if !line.trim().is_empty() {
            lines.push(line.trim().to_string());
        }
    }
    Ok(lines)
}

fn enumerate(
    out: &mut impl Write,
    family: Family,
    n: usize,
    format: Format,
    limit: Option<usize>,
) -> Outcome {
    let limit = limit.unwrap_or(usize::MAX);
    match family {
        Family::Wd => {
            for wd in WeightedPaths::new(n).take(limit) {
                match format {
                    Format::Text => writeln!(out, "{wd}")?,
                    Format::Records => {
                        writeln!(out, "{}", serde_json::to_string(&PathRecord::from(&wd))?)?
                    }
                }
            }
        }
        Family::Perm => {
            for a in UpDownAvoiders::new(n).take(limit) {
                match format {
                    Format::Text => writeln!(out, "{a}")?,
                    Format::Records => writeln!(
                        out,
                        "{}",
                        serde_json::to_string(&PermRecord::from(a.perm()))?
                    )?,
                }
            }
        }
    }
    Ok(true)
}

fn map(out: &mut impl Write, input: &str, trace: bool, rule: SplitRule) -> Outcome {
    for line in inputs(input)? {
        let wd: WeightedDyckPath = line.parse()?;
        writeln!(out, "{}", beta(&wd, rule)?)?;
        if trace {
            for (factor, f) in wd.factor_irreducible().iter().enumerate() {
                for (side, g) in [("bot", f.clone()), ("top", f.reflect())] {
                    let (_, t) = ins(&g, rule)?;
                    for step in &t.steps {
                        let line = TraceLine { factor, side, step };
                        writeln!(out, "{}", serde_json::to_string(&line)?)?;
                    }
                }
            }
        }
    }
    Ok(true)
}

fn invert_cmd(out: &mut impl Write, input: &str, rule: SplitRule) -> Outcome {
    for line in inputs(input)? {
        let sigma: Permutation = line.parse()?;
        writeln!(out, "{}", invert(&sigma, rule)?)?;
    }
    Ok(true)
}

fn count(out: &mut impl Write, max_n: usize) -> Outcome {
    let mut ok = true;
    for n in 0..=max_n {
        let c = count_wd(n);
        match REFERENCE_COUNTS.get(n) {
            Some(&r) if c == r.into() => writeln!(out, "{n}: {c} (ref {r})")?,
            Some(&r) => {
                ok = false;
                writeln!(out, "{n}: {c} (ref {r}) MISMATCH")?
            }
            None => writeln!(out, "{n}: {c}")?,
        }
    }
    Ok(ok)
}

fn verify(out: &mut impl Write, suite: &str, max_n: Option<usize>, opts: &RunOptions) -> Outcome {
    let reports = if suite == "all" {
        run_all(max_n.unwrap_or(usize::MAX), opts)
    } else {
        let id: SuiteId = suite.parse().map_err(|e| Failed(format!("{e}")))?;
        vec![run_suite(
            id,
            max_n.unwrap_or(id.default_cap(opts.stretch)),
            opts,
        )]
    };
    for r in &reports {
        writeln!(out, "{}", serde_json::to_string(r)?)?;
        out.flush()?;
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn render_cmd(out: &mut impl Write, input: &str, style: Style) -> Outcome {
    for line in inputs(input)? {
        let wd: WeightedDyckPath = line.parse()?;
        match style {
            Style::Ascii => out.write_all(render::ascii(&wd).as_bytes())?,
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Command::Verify { suite, .. } = &cli.command {
        if suite != "all" {
            if let Err(e) = suite.parse::<SuiteId>() {
                use clap::CommandFactory;
                Cli::command()
                    .error(clap::error::ErrorKind::InvalidValue, e)
                    .exit();
            }
        }
    }
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Enumerate {
            family,
            n,
            format,
            limit,
        } => enumerate(&mut out, family, n, format, limit),
        Command::Map {
            input,
            trace,
            split_rule,
        } => map(&mut out, &input, trace, split_rule),
        Command::Invert { input, split_rule } => invert_cmd(&mut out, &input, split_rule),
        Command::Count { max_n } => count(&mut out, max_n),
        Command::Verify {
            suite,
            max_n,
            split_rule,
            threads,
            stretch,
        } => {
            let opts = RunOptions {
                split_rule,
                threads,
                stretch,
                cancel: None,
            };
            verify(&mut out, &suite, max_n, &opts)
        }
        Command::Render { input, style } => render_cmd(&mut out, &input, style),
    };
    let flushed = out.flush();
    match result {
        Ok(true) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(Failed(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
