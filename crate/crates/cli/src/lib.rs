//! Command-line front end for the `taft-depth` pipeline.
//!
//! [`run`] turns a [`RunConfig`] into an [`Outcome`]: the rendered report and
//! whether every check passed. JSON is the canonical output and text renders
//! the same data for reading.

use std::path::PathBuf;

use serde::Serialize;
use taft_depth::double::quotient_module_from_double;
use taft_depth::greenring::{tensor_labels, tensor_rule, GreenElement, IndecLabel, TensorRule};
use taft_depth::qarith::{q_binomial, Order};
use taft_depth::taftmod::{decompose, module_of_q_direct, ModuleFile};
use taft_depth::verify::{
    depth_certificate, depth_report_from_class, verify_all, CheckResult, VerifyOptions, EXPLICIT_LIMIT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    QBinom { k: i64, j: i64 },
    GreenTensor { left: String, right: String },
    Decompose { path: PathBuf },
    BuildQ,
    Verify,
    DepthReport,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::QBinom { .. } => "qbinom",
            Command::GreenTensor { .. } => "green-tensor",
            Command::Decompose { .. } => "decompose",
            Command::BuildQ => "build-q",
            Command::Verify => "verify",
            Command::DepthReport => "depth-report",
        }
    }

    /// Whether the oracle flag changes what this command computes.
    fn uses_oracle(&self) -> bool {
        matches!(self, Command::BuildQ | Command::Verify | Command::DepthReport)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub n: u32,
    pub command: Command,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    /// `None` picks the default for `n`.
    pub oracle: Option<bool>,
}

impl RunConfig {
    pub fn new(n: u32, command: Command) -> Self {
        RunConfig {
            n,
            command,
            output_path: None,
            format: Format::Json,
            oracle: None,
        }
    }

    pub fn order(&self) -> Result<Order, CliError> {
        Order::new(self.n).map_err(|e| CliError::Usage(format!("--n {}: {e}", self.n)))
    }

    /// The oracle setting after defaults and limits are applied.
    pub fn resolved_oracle(&self) -> Result<bool, CliError> {
        let order = self.order()?;
        match self.oracle {
            Some(true) if self.command.uses_oracle() && self.n > EXPLICIT_LIMIT => {
                Err(CliError::Usage(format!(
                    "--oracle on is limited to n <= {EXPLICIT_LIMIT} for {}",
                    self.command.name()
                )))
            }
            Some(v) => Ok(v),
            None => Ok(VerifyOptions::default_for(order).oracle),
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("ingest error: {0}")]
    Ingest(String),
    #[error("{0}")]
    Core(#[from] taft_depth::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Ingest(_) | CliError::Io(_) => 3,
            CliError::Core(_) => 1,
        }
    }
}

/// A rendered report and the verdict it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
    /// Names of the checks that failed.
    pub failures: Vec<String>,
}

impl Outcome {
    fn ok(report: String) -> Self {
        Outcome {
            report,
            passed: true,
            failures: Vec::new(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports always serialize");
    s.push('\n');
    s
}

fn line(s: impl std::fmt::Display) -> String {
    format!("{s}\n")
}

fn rule_name(rule: TensorRule) -> &'static str {
    match rule {
        TensorRule::Simple => "simple",
        TensorRule::Projective => "projective",
        TensorRule::Ladder => "ladder",
        TensorRule::Overflow => "overflow",
    }
}

#[derive(Serialize)]
struct QBinomOut {
    n: u32,
    k: i64,
    j: i64,
    value: String,
}

#[derive(Serialize)]
struct TensorOut {
    n: u32,
    left: IndecLabel,
    right: IndecLabel,
    rule: &'static str,
    result: GreenElement,
    text: String,
}

#[derive(Serialize)]
struct DecomposeOut {
    n: u32,
    dim: usize,
    decomposition: GreenElement,
    text: String,
}

fn parse_label(text: &str, order: Order) -> Result<IndecLabel, CliError> {
    IndecLabel::parse(text, order).map_err(|e| CliError::Usage(format!("label {text:?}: {e}")))
}

fn load_module_file(path: &PathBuf, order: Order) -> Result<ModuleFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Ingest(format!("{}: {e}", path.display())))?;
    let file = ModuleFile::from_json(&text)
        .map_err(|e| CliError::Ingest(format!("{}: {e}", path.display())))?;
    if file.n != order.get() {
        return Err(CliError::Usage(format!(
            "{} was saved with n = {}, but --n is {}",
            path.display(),
            file.n,
            order
        )));
    }
    Ok(file)
}

fn build_q(order: Order, oracle: bool, format: Format) -> Result<Outcome, CliError> {
    let q = module_of_q_direct(order);
    let mut out = Outcome::ok(String::new());
    if oracle {
        let (from_double, _) = quotient_module_from_double(order)?;
        if from_double != q {
            out.passed = false;
            out.failures.push("dual_construction".into());
        }
    }
    out.report = match format {
        Format::Json => json(&ModuleFile::from_module(&q)),
        Format::Text => {
            let file = ModuleFile::from_module(&q);
            let mut s = format!(
                "Q for n={} (dim {}), double construction {}\n",
                order,
                file.dim,
                match (oracle, out.passed) {
                    (false, _) => "not run",
                    (true, true) => "agrees",
                    (true, false) => "DISAGREES",
                }
            );
            for (name, rows) in [("B", &file.b), ("A", &file.a)] {
                s.push_str(&format!("{name}:\n"));
                for row in rows {
                    s.push_str(&format!("  [{}]\n", row.join(", ")));
                }
            }
            s
        }
    };
    Ok(out)
}

/// Executes one command. Errors are usage, ingest or internal failures;
/// failed checks come back as an [`Outcome`] with `passed = false`.
pub fn run(config: &RunConfig) -> Result<Outcome, CliError> {
    let order = config.order()?;
    let oracle = config.resolved_oracle()?;
    let n = order.get();
    let fmt = config.format;
    let outcome = match &config.command {
        Command::QBinom { k, j } => {
            let v = q_binomial(*k, *j, order).map_err(|e| CliError::Usage(e.to_string()))?;
            Outcome::ok(match fmt {
                Format::Json => json(&QBinomOut {
                    n,
                    k: *k,
                    j: *j,
                    value: v.to_string(),
                }),
                Format::Text => line(v),
            })
        }
        Command::GreenTensor { left, right } => {
            let (x, y) = (parse_label(left, order)?, parse_label(right, order)?);
            let result = tensor_labels(x, y, order)?;
            let text = result.to_string();
            Outcome::ok(match fmt {
                Format::Json => json(&TensorOut {
                    n,
                    left: x,
                    right: y,
                    rule: rule_name(tensor_rule(x, y, order)?),
                    result,
                    text,
                }),
                Format::Text => line(text),
            })
        }
        Command::Decompose { path } => {
            let file = load_module_file(path, order)?;
            let module = file
                .to_module()
                .map_err(|e| CliError::Ingest(format!("{}: {e}", path.display())))?;
            let decomposition = decompose(&module)?;
            let text = decomposition.to_string();
            Outcome::ok(match fmt {
                Format::Json => json(&DecomposeOut {
                    n,
                    dim: module.dim(),
                    decomposition,
                    text,
                }),
                Format::Text => line(text),
            })
        }
        Command::BuildQ => build_q(order, oracle, fmt)?,
        Command::Verify => {
            let r = verify_all(order, VerifyOptions { oracle })?;
            Outcome {
                report: match fmt {
                    Format::Json => json(&r),
                    Format::Text => r.to_text(),
                },
                passed: r.all_passed(),
                failures: r.failures(),
            }
        }
        Command::DepthReport => {
            let mut r = depth_certificate(order)?;
            if oracle {
                let (q, _) = quotient_module_from_double(order)?;
                let d = depth_report_from_class(order, &decompose(&q)?)?;
                let same = d.q_decomposition == r.q_decomposition
                    && d.depth_q == r.depth_q
                    && d.q2_indec_count == r.q2_indec_count
                    && d.q3_indec_count == r.q3_indec_count;
                r.checks.insert(
                    "double_agrees".into(),
                    CheckResult::from_bool(same, format!("double-built Q = {}", d.q_decomposition)),
                );
            }
            Outcome {
                report: match fmt {
                    Format::Json => json(&r),
                    Format::Text => r.to_text(),
                },
                passed: r.all_passed(),
                failures: r.failures(),
            }
        }
    };
    if let Some(path) = &config.output_path {
        std::fs::write(path, &outcome.report)?;
    }
    Ok(outcome)
}

/// Caps the rayon pool from `TAFT_DEPTH_THREADS`, if set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("TAFT_DEPTH_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| CliError::Usage(format!("TAFT_DEPTH_THREADS={value:?} is not a positive integer")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}
