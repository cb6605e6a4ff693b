//! `weyl-reduce`: reduce, verify, sweep and classify from the shell.
//!
//! Exit codes: 0 verified non-empty (or check passed), 1 Kottwitz mismatch
//! (or verification / sweep failure), 2 bad input.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use weyl_reduce::parse::{parse_cocharacter, parse_finite};
use weyl_reduce::reduction::{candidate_set, check_hypotheses};
use weyl_reduce::suites::{run_suite, Suite, SweepConfig};
use weyl_reduce::wire::WireCertificate;
use weyl_reduce::{
    nonemptiness, verify_certificate, AffineElement, Group, GroupMode, KottwitzPoint, LemmaReport,
};

#[derive(Parser)]
#[command(
    name = "weyl-reduce",
    version,
    about = "Certified non-emptiness for additive affine Weyl group elements"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduce an element to an elliptic one and decide non-emptiness.
    Reduce {
        #[command(flatten)]
        element: ElementArgs,
        /// Integer representative of the Kottwitz point of b; defaults to that of x.
        #[arg(long, allow_hyphen_values = true)]
        kappa: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Re-check a certificate file (`-` reads stdin).
    Verify { file: String },
    /// Run an exhaustive verification suite.
    Sweep {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Random cocharacters for the length suite.
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        /// Cocharacter for the reduction suite; repeat for several.
        #[arg(long = "mu", allow_hyphen_values = true)]
        mus: Vec<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the additive, Reuman-type and elliptic flags of one element.
    Classify {
        #[command(flatten)]
        element: ElementArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct GroupArgs {
    /// GL, SL, C2 or G2 (or GL5 / SL5 with the size included).
    #[arg(long, default_value = "GL")]
    group: String,
    /// Matrix size n for GL_n / SL_n.
    #[arg(long)]
    rank: Option<usize>,
}

#[derive(Args)]
struct ElementArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// Dominant cocharacter; the translation is v(mu).
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    /// Chamber element v as a word or bracketed permutation (default e).
    #[arg(long)]
    v: Option<String>,
    /// Translation given directly; cross-checked against --mu/--v if both appear.
    #[arg(long, allow_hyphen_values = true)]
    lambda: Option<String>,
    /// Finite part, e.g. 4321234, "4 3 2 1" or [5,2,3,4,1].
    #[arg(long)]
    w: String,
}

impl GroupArgs {
    fn build(&self) -> Result<Group> {
        let name = self.group.trim().to_ascii_uppercase();
        let mode = match (name.as_str(), self.rank) {
            ("GL" | "SL", None) => bail!("--rank is required for {name}"),
            ("GL", Some(n)) => GroupMode::GL(n),
            ("SL", Some(n)) => GroupMode::SL(n),
            (_, rank) => {
                let mode: GroupMode = name.parse()?;
                match (mode, rank) {
                    (GroupMode::C2 | GroupMode::G2, Some(r)) if r != 2 => {
                        bail!("{mode} has rank 2, got --rank {r}")
                    }
                    (GroupMode::GL(n) | GroupMode::SL(n), Some(r)) if r != n => {
                        bail!("--group {name} conflicts with --rank {r}")
                    }
                    _ => mode,
                }
            }
        };
        Ok(Group::new(mode)?)
    }
}

impl ElementArgs {
    fn build(&self) -> Result<(Group, AffineElement)> {
        let group = self.group.build()?;
        let sys = group.weyl();
        let w = parse_finite(sys, &self.w).context("--w")?;
        let from_parts = match &self.mu {
            Some(mu) => {
                let mu = parse_cocharacter(mu).context("--mu")?;
                sys.check_dim(&mu)?;
                if !sys.is_dominant(&mu) {
                    bail!("--mu {mu} is not dominant");
                }
                let v = match &self.v {
                    Some(v) => parse_finite(sys, v).context("--v")?,
                    None => sys.identity(),
                };
                Some(sys.act_cocharacter(&v, &mu))
            }
            None if self.v.is_some() => bail!("--v needs --mu"),
            None => None,
        };
        let lambda = match (&self.lambda, from_parts) {
            (Some(l), parts) => {
                let l = parse_cocharacter(l).context("--lambda")?;
                if let Some(p) = parts {
                    if p != l {
                        bail!("--lambda {l} disagrees with v(mu) = {p}");
                    }
                }
                l
            }
            (None, Some(p)) => p,
            (None, None) => bail!("give --mu (with optional --v) or --lambda"),
        };
        let x = group.element(lambda.into_vec(), w)?;
        Ok((group, x))
    }
}

/// Maps library precondition errors to exit code 2.
fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e:#}");
    ExitCode::from(2)
}

fn cmd_reduce(element: &ElementArgs, kappa: Option<i64>, format: Format) -> Result<ExitCode> {
    let (group, x) = element.build()?;
    let b_kappa = match kappa {
        Some(k) => group.kappa_from_integer(k)?,
        None => group.kottwitz_point(&x),
    };
    let out = nonemptiness(&group, &x, b_kappa)?;
    let cert = &out.certificate;
    match format {
        Format::Json => println!("{}", WireCertificate::from_certificate(&group, cert).to_json()),
        Format::Text => {
            println!("group {}  x = {}", group.name(), cert.start);
            for (i, s) in cert.steps.iter().enumerate() {
                println!(
                    "{:>3}. s{} case {:<2} lengths {:?} -> {}",
                    i + 1,
                    s.generator,
                    s.case.as_str(),
                    s.lengths.to_array(),
                    s.after
                );
            }
            println!(
                "terminal {} (elliptic: {})",
                cert.terminal, cert.terminal_elliptic
            );
            println!("kappa(x) = {}, kappa(b) = {b_kappa}", cert.kappa);
        }
    }
    if out.nonempty {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "Kottwitz mismatch: kappa(x) = {}, kappa(b) = {b_kappa}",
            cert.kappa
        );
        Ok(ExitCode::from(1))
    }
}

fn cmd_verify(file: &str) -> Result<ExitCode> {
    let text = if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(file).with_context(|| format!("reading {file}"))?
    };
    let (group, cert) = WireCertificate::from_json(&text)?.to_certificate()?;
    match verify_certificate(&group, &cert) {
        Ok(()) => {
            println!(
                "ok: {} steps, terminal {} elliptic",
                cert.steps.len(),
                cert.terminal
            );
            Ok(ExitCode::SUCCESS)
        }
        Err(f) => {
            println!("failed: {f}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_sweep(
    group: &GroupArgs,
    suite: &str,
    samples: usize,
    seed: u64,
    mus: &[String],
    format: Format,
) -> Result<ExitCode> {
    let suite: Suite = suite.parse()?;
    let group = group.build()?;
    let mus = if mus.is_empty() {
        None
    } else {
        let sys = group.weyl();
        let parsed = mus
            .iter()
            .map(|m| {
                let mu = parse_cocharacter(m)?;
                group.check_cocharacter(&mu)?;
                if !(sys.is_dominant(&mu) && sys.is_regular(&mu)) {
                    bail!("--mu {mu} is not regular dominant");
                }
                Ok(mu)
            })
            .collect::<Result<Vec<_>>>()?;
        Some(parsed)
    };
    let cfg = SweepConfig { samples, seed, mus };
    let reports = run_suite(&group, suite, &cfg);
    print_reports(&reports, format);
    Ok(if reports.iter().all(LemmaReport::ok) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn print_reports(reports: &[LemmaReport], format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(reports).expect("reports serialise")
        ),
        Format::Text => {
            for r in reports {
                let status = serde_json::to_value(r.status).expect("status serialises");
                println!(
                    "{:<7} {:<5} {:<40} checked {:>8}{}",
                    status.as_str().unwrap_or("?"),
                    r.group,
                    r.lemma,
                    r.checked,
                    r.note.as_deref().map(|n| format!("  ({n})")).unwrap_or_default()
                );
                for c in &r.counterexamples {
                    println!("        counterexample: {c}");
                }
            }
        }
    }
}

fn cmd_classify(element: &ElementArgs, format: Format) -> Result<ExitCode> {
    let (group, x) = element.build()?;
    let sys = group.weyl();
    let regular = sys.is_regular(x.translation());
    let d = sys.decompose(x.translation());
    let candidates = check_hypotheses(&group, &x)
        .and_then(|_| candidate_set(&group, &x))
        .ok()
        .map(|s| s.iter().collect::<Vec<_>>());
    let kappa: KottwitzPoint = group.kottwitz_point(&x);
    let v = json!({
        "group": group.name(),
        "element": x.to_string(),
        "v": sys.reduced_word(&d.v),
        "mu": d.mu.coords(),
        "regular": regular,
        "additive": sys.is_additive(&x),
        "reuman_type": sys.is_reuman_type(&x),
        "reuman_criterion": sys.reuman_criterion(&x).ok(),
        "elliptic": sys.is_elliptic(x.finite()),
        "finite_length": sys.length(x.finite()),
        "length": sys.affine_length_oracle(&x),
        "kappa": kappa.to_integer(),
        "candidates": candidates,
    });
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&v)?),
        Format::Text => {
            for (k, val) in v.as_object().expect("object") {
                println!("{k:<17} {val}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn configure_threads() -> Result<()> {
    if let Ok(n) = std::env::var("WEYL_REDUCE_THREADS") {
        let n: usize = n
            .trim()
            .parse()
            .context("WEYL_REDUCE_THREADS must be a positive integer")?;
        if n == 0 {
            bail!("WEYL_REDUCE_THREADS must be a positive integer");
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        return input_error(e);
    }
    let result = match &cli.command {
        Command::Reduce {
            element,
            kappa,
            format,
        } => cmd_reduce(element, *kappa, *format),
        Command::Verify { file } => cmd_verify(file),
        Command::Sweep {
            group,
            suite,
            samples,
            seed,
            mus,
            format,
        } => cmd_sweep(group, suite, *samples, *seed, mus, *format),
        Command::Classify { element, format } => cmd_classify(element, *format),
    };
    result.unwrap_or_else(input_error)
}
