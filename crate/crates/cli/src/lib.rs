//! Command-line front end for `omkit`.
//!
//! Every subcommand produces one or more [`Report`]s. Exit status is 3 if any
//! report is a theorem violation, 2 if any is a refusal (bad input, failed
//! hypothesis, size limit), 0 otherwise; a `none` result is not an error.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use omkit::altwords::{
    alternation_number, oracle_words, parse_words, solve_words, OracleMode, Word,
    ORACLE_MAX_PERMUTATION_N,
};
use omkit::campaign::{
    random_conic_instance, random_convex_instance, random_topes, random_uniform, trial_rng,
};
use omkit::colorful::{
    conic_pipeline, eh_order_complex, find_rainbow_conic, find_rainbow_convex, ConicInstance,
    PIPELINE_MAX_EXTENDED,
};
use omkit::om::{
    axiom_failure, check_height_bound, cocircuits, covectors, positive_vectors_eh, topes, vectors,
    Chirotope, RationalMatrix, SignVector,
};
use omkit::rainbow::{build_chain_family, parse_labels, rainbow_from_chains, read_family_dir};
use omkit::simplicial::{reduced_betti_numbers, reduced_homology_trivial_up_to};
use omkit::transversal::{
    common_elements, find_partition_transversal, find_transversal, jj_order_complex,
    li_cellular_betti, verify_common_element, TopeCollection,
};
use omkit::{Error, Limits, Result};

/// Version of the JSON report layout.
pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Certified,
    None,
    TheoremViolation,
    Refused,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Certified => "certified",
            Status::None => "none",
            Status::TheoremViolation => "theorem-violation",
            Status::Refused => "refused",
        }
    }
}

/// One result line.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub command: String,
    /// SHA-256 of the instance text.
    pub instance: String,
    pub status: Status,
    pub witness: Option<String>,
    pub detail: Option<String>,
    /// Replayable instance text; always present for theorem violations.
    pub instance_dump: Option<String>,
    pub elapsed_ms: u64,
    pub seed: Option<u64>,
    pub trial: Option<u64>,
}

#[derive(Parser, Debug)]
#[command(name = "omkit", version, about = "Oriented-matroid workbench")]
struct Cli {
    /// Emit one JSON report per line.
    #[arg(long, global = true)]
    json: bool,
    /// Largest simplicial complex, in faces.
    #[arg(long, global = true)]
    limit_faces: Option<usize>,
    /// Largest ground set for exhaustive enumerations.
    #[arg(long, global = true)]
    limit_n: Option<usize>,
    /// Report elapsed_ms as 0 so that reports are byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Write a random uniform chirotope (or the alternating one).
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        alternating: bool,
        #[arg(long)]
        out: PathBuf,
        /// Also write the generating matrix.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
    },
    /// Check the chirotope axioms.
    Check {
        #[arg(long)]
        om: PathBuf,
    },
    /// List circuits, cocircuits, vectors, covectors or topes.
    Enumerate {
        #[arg(long)]
        om: PathBuf,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Write the dual chirotope.
    Dual {
        #[arg(long)]
        om: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Search for and verify certificates.
    Verify {
        #[command(subcommand)]
        what: VerifyCmd,
    },
    /// Alternating-word solver.
    Words {
        #[command(subcommand)]
        cmd: WordsCmd,
    },
    /// Rainbow simplex of a complex family.
    Rainbow {
        #[arg(long)]
        family: PathBuf,
        #[arg(long)]
        labels: PathBuf,
    },
    /// Counterexample searches.
    Explore {
        #[command(subcommand)]
        cmd: ExploreCmd,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum What {
    Circuits,
    Cocircuits,
    Vectors,
    Covectors,
    Topes,
}

#[derive(Args, Debug)]
struct ColorfulArgs {
    #[arg(long, required_unless_present = "random")]
    om: Option<PathBuf>,
    #[arg(long, required_unless_present = "random")]
    circuits: Option<PathBuf>,
    /// Distinguished element (1-based), conic search only.
    #[arg(long)]
    e: Option<usize>,
    /// Run a seeded campaign instead of reading files.
    #[arg(long)]
    random: bool,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rank for random instances; drawn from {2, 3} when absent.
    #[arg(long)]
    r: Option<usize>,
    /// Ground set size for random instances; drawn from r+1..=8 when absent.
    #[arg(long)]
    n: Option<usize>,
    /// Also run the topological pipeline (conic, matrix input or random, n ≤ 6).
    #[arg(long)]
    pipeline: bool,
}

#[derive(Subcommand, Debug)]
enum VerifyCmd {
    /// Positive circuit through e with elements drawn from distinct C_i.
    Conic(ColorfulArgs),
    /// Positive circuit with elements drawn from distinct C_i, given r + 1 circuits.
    Convex(ColorfulArgs),
    /// Transversal of n topes (k = n).
    Transversal {
        #[arg(long)]
        om: PathBuf,
        #[arg(long)]
        topes: PathBuf,
        /// Search even when the chirotope is not uniform.
        #[arg(long)]
        force: bool,
    },
    /// Partition transversal of rank-many topes with multiplicities.
    RankR {
        #[arg(long)]
        om: PathBuf,
        #[arg(long)]
        topes: PathBuf,
        /// Comma-separated multiplicities summing to n.
        #[arg(long)]
        mult: String,
    },
    /// Transversal of n alternation-≤2 words, cross-checked against the tope search.
    #[command(name = "rank-2")]
    Rank2 {
        #[arg(long)]
        words: PathBuf,
    },
    /// |supp X| <= rank + height(X) for every vector.
    HeightBound {
        #[arg(long)]
        om: PathBuf,
    },
    /// Homology of the covectors with prescribed signs on J+ and J−.
    LemmaJj {
        #[arg(long)]
        om: PathBuf,
        /// Comma-separated 1-based elements.
        #[arg(long, default_value = "")]
        jplus: String,
        #[arg(long, default_value = "")]
        jminus: String,
    },
    /// Connectivity of the order complex of positive vectors through e of height ≤ h.
    LemmaHh {
        #[arg(long)]
        om: PathBuf,
        #[arg(long)]
        e: usize,
        #[arg(long)]
        h: usize,
    },
    /// Connectivity of the simplotope complexes of a tope collection.
    LemmaLi {
        #[arg(long)]
        om: PathBuf,
        #[arg(long)]
        topes: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
enum WordsCmd {
    /// Permutation whose diagonal word has alternation number at most two.
    Solve {
        #[arg(long = "in")]
        input: PathBuf,
        /// Cross-check existence with the brute-force oracle.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Subcommand, Debug)]
enum ExploreCmd {
    /// Random uniform instances with random topes; reports every NONE.
    Q14 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

struct Ctx {
    limits: Limits,
    timing: bool,
}

/// Successful outcome of one check.
enum Outcome {
    Certified {
        witness: String,
        detail: Option<String>,
    },
    None {
        witness: Option<String>,
        detail: String,
    },
}

fn certified(witness: impl Into<String>) -> Outcome {
    Outcome::Certified {
        witness: witness.into(),
        detail: None,
    }
}

/// The identity of an instance, plus the run it belongs to.
struct Instance {
    text: String,
    seed: Option<u64>,
    trial: Option<u64>,
}

impl Instance {
    fn from_text(text: String) -> Instance {
        Instance {
            text,
            seed: None,
            trial: None,
        }
    }
}

fn report(
    ctx: &Ctx,
    command: &str,
    inst: &Instance,
    started: Instant,
    outcome: Result<Outcome>,
) -> Report {
    let (status, witness, detail, dump) = match outcome {
        Ok(Outcome::Certified { witness, detail }) => {
            (Status::Certified, Some(witness), detail, None)
        }
        Ok(Outcome::None { witness, detail }) => (Status::None, witness, Some(detail), None),
        Err(Error::TheoremViolation { what, instance }) => {
            (Status::TheoremViolation, None, Some(what), Some(instance))
        }
        Err(Error::Invariant(msg)) => (
            Status::TheoremViolation,
            None,
            Some(msg),
            Some(inst.text.clone()),
        ),
        Err(e) => (Status::Refused, None, Some(e.to_string()), None),
    };
    Report {
        schema: SCHEMA,
        command: command.to_string(),
        instance: hex_digest(&inst.text),
        status,
        witness,
        detail,
        instance_dump: dump,
        elapsed_ms: if ctx.timing {
            started.elapsed().as_millis() as u64
        } else {
            0
        },
        seed: inst.seed,
        trial: inst.trial,
    }
}

fn hex_digest(text: &str) -> String {
    Sha256::digest(text.as_bytes())
        .iter()
        .fold(String::new(), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
}

fn exit_code(reports: &[Report]) -> i32 {
    if reports.iter().any(|r| r.status == Status::TheoremViolation) {
        3
    } else if reports.iter().any(|r| r.status == Status::Refused) {
        2
    } else {
        0
    }
}

/// Parse `argv` (program name first), run, and return the exit code and the
/// text that belongs on standard output.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let reports = run_reports(&cli);
    let mut out = String::new();
    for r in &reports {
        if cli.json {
            out.push_str(&serde_json::to_string(r).expect("reports serialize"));
        } else {
            let _ = write!(out, "{:<17} {}", r.status.as_str(), r.command);
            if let Some(t) = r.trial {
                let _ = write!(out, " #{t}");
            }
            for text in [&r.witness, &r.detail].into_iter().flatten() {
                let _ = write!(out, "  {text}");
            }
            if let Some(d) = &r.instance_dump {
                let _ = write!(out, "\n  instance: {d}");
            }
        }
        out.push('\n');
    }
    (exit_code(&reports), out)
}

/// Parse `argv` and return the reports without rendering them.
pub fn run_reports_from<I, T>(argv: I) -> std::result::Result<Vec<Report>, String>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    Ok(run_reports(&cli))
}

fn run_reports(cli: &Cli) -> Vec<Report> {
    let mut limits = Limits::default();
    if let Some(f) = cli.limit_faces {
        limits.max_faces = f;
    }
    if let Some(n) = cli.limit_n {
        limits.max_n = n;
    }
    let ctx = Ctx {
        limits,
        timing: !cli.no_timing,
    };
    match &cli.cmd {
        Cmd::Gen {
            n,
            r,
            seed,
            alternating,
            out,
            matrix_out,
        } => {
            let inst = Instance {
                text: format!("gen n={n} r={r} alternating={alternating}"),
                seed: Some(*seed),
                trial: None,
            };
            single(
                &ctx,
                "gen",
                || Ok(inst),
                |_| gen(*n, *r, *seed, *alternating, out, matrix_out.as_deref()),
            )
        }
        Cmd::Check { om } => single(&ctx, "check", || read_all(&[om]), |_| check(&ctx, om)),
        Cmd::Enumerate { om, what } => single(
            &ctx,
            "enumerate",
            || read_all(&[om]),
            |_| enumerate(&ctx, om, *what),
        ),
        Cmd::Dual { om, out } => single(
            &ctx,
            "dual",
            || read_all(&[om]),
            |_| {
                let chi = load_om(om)?.0.dual();
                fs::write(out, chi.to_string())?;
                Ok(certified(one_line(&chi)))
            },
        ),
        Cmd::Verify { what } => verify(&ctx, what),
        Cmd::Words {
            cmd: WordsCmd::Solve { input, oracle },
        } => single(
            &ctx,
            "words solve",
            || read_all(&[input]),
            |_| words_solve(input, *oracle),
        ),
        Cmd::Rainbow { family, labels } => single(
            &ctx,
            "rainbow",
            || {
                let mut text = read_all(&[labels])?.text;
                let mut names: Vec<PathBuf> = fs::read_dir(family)?
                    .map(|e| e.map(|e| e.path()))
                    .collect::<std::io::Result<_>>()?;
                names.sort();
                for p in names {
                    if p.extension().is_some_and(|x| x == "cpx") {
                        let _ = write!(
                            text,
                            "\0{}\0{}",
                            p.file_name().unwrap_or_default().to_string_lossy(),
                            fs::read_to_string(&p)?
                        );
                    }
                }
                Ok(Instance::from_text(text))
            },
            |_| rainbow(&ctx, family, labels),
        ),
        Cmd::Explore {
            cmd: ExploreCmd::Q14 { n, r, trials, seed },
        } => campaign(&ctx, "explore q14", *seed, *trials, |rng| {
            let (m, chi) = random_uniform(rng, *r, *n)?;
            let ts = random_topes(rng, &chi, *n, &ctx.limits)?;
            let text = format!("matrix={} topes={}", matrix_line(&m), join(&ts));
            let outcome = (|| {
                let tc = TopeCollection::new(chi, ts, None, false, &ctx.limits)?;
                transversal_outcome(&tc)
            })();
            Ok((text, outcome))
        }),
    }
}

/// One report for a single instance; failures reading the instance are refusals.
fn single<L, F>(ctx: &Ctx, command: &str, load: L, f: F) -> Vec<Report>
where
    L: FnOnce() -> Result<Instance>,
    F: FnOnce(&Instance) -> Result<Outcome>,
{
    let started = Instant::now();
    match load() {
        Ok(inst) => {
            let outcome = f(&inst);
            vec![report(ctx, command, &inst, started, outcome)]
        }
        Err(e) => vec![report(
            ctx,
            command,
            &Instance::from_text(String::new()),
            started,
            Err(e),
        )],
    }
}

/// Seeded trials, run in parallel and reported in trial order.
fn campaign<F>(ctx: &Ctx, command: &str, seed: u64, trials: u64, f: F) -> Vec<Report>
where
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> Result<(String, Result<Outcome>)> + Sync,
{
    (0..trials)
        .into_par_iter()
        .map(|t| {
            let started = Instant::now();
            let mut rng = trial_rng(seed, t);
            let (text, outcome) = match f(&mut rng) {
                Ok(pair) => pair,
                Err(e) => (String::new(), Err(e)),
            };
            let inst = Instance {
                text,
                seed: Some(seed),
                trial: Some(t),
            };
            report(ctx, command, &inst, started, outcome)
        })
        .collect()
}

fn read_all(paths: &[&Path]) -> Result<Instance> {
    let mut text = String::new();
    for (i, p) in paths.iter().enumerate() {
        if i > 0 {
            text.push('\0');
        }
        text.push_str(&fs::read_to_string(p)?);
    }
    Ok(Instance::from_text(text))
}

/// A chirotope file, or a matrix file (rows of integers or `p/q`), whose
/// matrix is kept.
fn load_om(path: &Path) -> Result<(Chirotope, Option<RationalMatrix>)> {
    let text = fs::read_to_string(path)?;
    if let Ok(chi) = text.parse::<Chirotope>() {
        return Ok((chi, None));
    }
    let m: RationalMatrix = text.parse().map_err(|e| {
        Error::Parse(format!(
            "{}: neither a chirotope nor a matrix ({e})",
            path.display()
        ))
    })?;
    let chi = Chirotope::from_matrix(&m.row_basis())?;
    Ok((chi, Some(m)))
}

/// Sign vectors, one per line; blank lines and `#` comments skipped.
fn load_sign_vectors(path: &Path) -> Result<Vec<SignVector>> {
    fs::read_to_string(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(str::parse)
        .collect()
}

/// Comma-separated 1-based elements as a 0-based mask.
fn parse_elements(list: &str, n: usize) -> Result<u64> {
    let mut mask = 0u64;
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let j: usize = tok
            .parse()
            .map_err(|_| Error::Parse(format!("bad element {tok:?}")))?;
        if j == 0 || j > n {
            return Err(Error::InvalidInput(format!("element {j} outside 1..={n}")));
        }
        mask |= 1 << (j - 1);
    }
    Ok(mask)
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn one_line(chi: &Chirotope) -> String {
    chi.to_string().trim_end().replace('\n', " ")
}

fn matrix_line(m: &RationalMatrix) -> String {
    m.to_string().trim_end().replace('\n', "; ")
}

fn gen(
    n: usize,
    r: usize,
    seed: u64,
    alternating: bool,
    out: &Path,
    matrix_out: Option<&Path>,
) -> Result<Outcome> {
    let (chi, m) = if alternating {
        (Chirotope::alternating(n, r)?, None)
    } else {
        let (m, chi) = random_uniform(&mut trial_rng(seed, 0), r, n)?;
        (chi, Some(m))
    };
    fs::write(out, chi.to_string())?;
    if let Some(path) = matrix_out {
        let m = m.as_ref().ok_or_else(|| {
            Error::InvalidInput("the alternating chirotope is written without a matrix".into())
        })?;
        fs::write(path, m.to_string())?;
    }
    Ok(Outcome::Certified {
        witness: one_line(&chi),
        detail: m.map(|m| format!("matrix {}", matrix_line(&m))),
    })
}

fn check(ctx: &Ctx, om: &Path) -> Result<Outcome> {
    let text = fs::read_to_string(om)?;
    let chi = match text.parse::<Chirotope>() {
        Ok(chi) => chi,
        Err(_) => load_om(om)?.0,
    };
    Ok(match axiom_failure(&chi, &ctx.limits)? {
        None => certified(if chi.is_uniform() {
            "valid uniform"
        } else {
            "valid non-uniform"
        }),
        Some(msg) => Outcome::None {
            witness: None,
            detail: format!("not a chirotope: {msg}"),
        },
    })
}

fn enumerate(ctx: &Ctx, om: &Path, what: What) -> Result<Outcome> {
    let chi = load_om(om)?.0;
    let list = match what {
        What::Circuits => chi.circuits(),
        What::Cocircuits => cocircuits(&chi),
        What::Vectors => vectors(&chi, &ctx.limits)?,
        What::Covectors => covectors(&chi, &ctx.limits)?,
        What::Topes => topes(&chi, &ctx.limits)?,
    };
    Ok(Outcome::Certified {
        witness: join(&list),
        detail: Some(format!("{} sign vectors", list.len())),
    })
}

fn verify(ctx: &Ctx, what: &VerifyCmd) -> Vec<Report> {
    match what {
        VerifyCmd::Conic(a) if a.random => campaign(ctx, "verify conic", a.seed, a.trials, |rng| {
            let r = a.r.unwrap_or_else(|| rng.gen_range(2..=3));
            let n = a.n.unwrap_or_else(|| rng.gen_range(r + 1..=8));
            let (m, inst) = random_conic_instance(rng, r, n)?;
            let text = format!(
                "matrix={} e={} circuits={}",
                matrix_line(&m),
                inst.e + 1,
                join(&inst.circuits)
            );
            Ok((text, conic_outcome(ctx, &inst, a.pipeline.then_some(&m))))
        }),
        VerifyCmd::Conic(a) => {
            let (om, cs) = (
                a.om.as_deref().expect("required"),
                a.circuits.as_deref().expect("required"),
            );
            single(
                ctx,
                "verify conic",
                || read_all(&[om, cs]),
                |_| {
                    let (chi, m) = load_om(om)?;
                    let e =
                        a.e.ok_or_else(|| Error::InvalidInput("--e is required".into()))?;
                    if e == 0 {
                        return Err(Error::InvalidInput("elements are 1-based".into()));
                    }
                    let inst = ConicInstance::new(chi, e - 1, load_sign_vectors(cs)?)?;
                    let m = if a.pipeline {
                        Some(m.ok_or_else(|| {
                            Error::InvalidInput("the pipeline needs a matrix file".into())
                        })?)
                    } else {
                        None
                    };
                    conic_outcome(ctx, &inst, m.as_ref())
                },
            )
        }
        VerifyCmd::Convex(a) if a.random => {
            campaign(ctx, "verify convex", a.seed, a.trials, |rng| {
                let r = a.r.unwrap_or_else(|| rng.gen_range(2..=3));
                let n = a.n.unwrap_or_else(|| rng.gen_range(r + 1..=8));
                let (m, chi, cs) = random_convex_instance(rng, r, n)?;
                let text = format!("matrix={} circuits={}", matrix_line(&m), join(&cs));
                Ok((text, convex_outcome(&chi, &cs)))
            })
        }
        VerifyCmd::Convex(a) => {
            let (om, cs) = (
                a.om.as_deref().expect("required"),
                a.circuits.as_deref().expect("required"),
            );
            single(
                ctx,
                "verify convex",
                || read_all(&[om, cs]),
                |_| convex_outcome(&load_om(om)?.0, &load_sign_vectors(cs)?),
            )
        }
        VerifyCmd::Transversal { om, topes, force } => single(
            ctx,
            "verify transversal",
            || read_all(&[om, topes]),
            |_| {
                let tc = TopeCollection::new(
                    load_om(om)?.0,
                    load_sign_vectors(topes)?,
                    None,
                    *force,
                    &ctx.limits,
                )?;
                transversal_outcome(&tc)
            },
        ),
        VerifyCmd::RankR { om, topes, mult } => single(
            ctx,
            "verify rank-r",
            || read_all(&[om, topes]),
            |_| {
                let mult = mult
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad multiplicity {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let tc = TopeCollection::new(
                    load_om(om)?.0,
                    load_sign_vectors(topes)?,
                    Some(mult),
                    false,
                    &ctx.limits,
                )?;
                let cert = find_partition_transversal(&tc)?;
                cert.verify(&tc)?;
                Ok(certified(cert.to_string()))
            },
        ),
        VerifyCmd::Rank2 { words } => single(
            ctx,
            "verify rank-2",
            || read_all(&[words]),
            |_| rank2(ctx, words),
        ),
        VerifyCmd::HeightBound { om } => single(
            ctx,
            "verify height-bound",
            || read_all(&[om]),
            |inst| {
                if check_height_bound(&load_om(om)?.0, &ctx.limits)? {
                    Ok(certified("|supp X| <= rank + height(X) for every vector"))
                } else {
                    Err(Error::TheoremViolation {
                        what: "a vector exceeds rank + height".into(),
                        instance: inst.text.clone(),
                    })
                }
            },
        ),
        VerifyCmd::LemmaJj { om, jplus, jminus } => single(
            ctx,
            "verify lemma-jj",
            || read_all(&[om]),
            |inst| {
                let chi = load_om(om)?.0;
                let (p, m) = (
                    parse_elements(jplus, chi.n())?,
                    parse_elements(jminus, chi.n())?,
                );
                lemma_jj(ctx, &chi, p, m, &inst.text)
            },
        ),
        VerifyCmd::LemmaHh { om, e, h } => single(
            ctx,
            "verify lemma-hh",
            || read_all(&[om]),
            |inst| {
                let chi = load_om(om)?.0;
                if *e == 0 || *e > chi.n() || *h == 0 {
                    return Err(Error::InvalidInput("need 1 <= e <= n and h >= 1".into()));
                }
                lemma_hh(ctx, &chi, e - 1, *h, &inst.text)
            },
        ),
        VerifyCmd::LemmaLi { om, topes } => single(
            ctx,
            "verify lemma-li",
            || read_all(&[om, topes]),
            |inst| {
                let chi = load_om(om)?.0;
                lemma_li(ctx, &chi, &load_sign_vectors(topes)?, &inst.text)
            },
        ),
    }
}

fn conic_outcome(
    ctx: &Ctx,
    inst: &ConicInstance,
    pipeline: Option<&RationalMatrix>,
) -> Result<Outcome> {
    let cert = find_rainbow_conic(inst)?;
    cert.verify_conic(&inst.chi, inst.e, &inst.circuits)?;
    let detail = match pipeline {
        Some(m) if m.cols() <= 6 => {
            let extended = 1 + inst
                .circuits
                .iter()
                .map(|c| c.support_size() - 1)
                .sum::<usize>();
            if extended > PIPELINE_MAX_EXTENDED {
                Some(format!("pipeline skipped: {extended} extended elements"))
            } else {
                let wide = Limits {
                    max_n: ctx.limits.max_n.max(PIPELINE_MAX_EXTENDED),
                    ..ctx.limits
                };
                let pc = conic_pipeline(m, inst.e, &inst.circuits, &wide)?;
                pc.verify_conic(&inst.chi, inst.e, &inst.circuits)?;
                Some(format!("pipeline {pc}"))
            }
        }
        Some(m) => Some(format!("pipeline skipped: n = {} > 6", m.cols())),
        None => None,
    };
    Ok(Outcome::Certified {
        witness: cert.to_string(),
        detail,
    })
}

fn convex_outcome(chi: &Chirotope, cs: &[SignVector]) -> Result<Outcome> {
    let cert = find_rainbow_convex(chi, cs)?;
    cert.verify_convex(chi, cs)?;
    Ok(certified(cert.to_string()))
}

fn transversal_outcome(tc: &TopeCollection) -> Result<Outcome> {
    let shared = common_elements(&tc.topes);
    if !shared.is_empty() && tc.chi.is_uniform() {
        let cert = verify_common_element(tc)?;
        return Ok(Outcome::Certified {
            witness: cert.to_string(),
            detail: Some(format!("topes share element {}", shared[0] + 1)),
        });
    }
    Ok(match find_transversal(tc)? {
        Some(cert) => {
            cert.verify(tc)?;
            certified(cert.to_string())
        }
        None => Outcome::None {
            witness: Some(join(&tc.topes)),
            detail: "no tope agrees with each T_i on a distinct element".into(),
        },
    })
}

fn words_solve(input: &Path, oracle: bool) -> Result<Outcome> {
    let words = parse_words(&fs::read_to_string(input)?)?;
    let sol = solve_words(&words)?;
    let perm: Vec<usize> = sol.perm.iter().map(|p| p + 1).collect();
    let witness = format!(
        "shift={} perm={} word={}",
        sol.shift,
        join(&perm),
        sol.result
    );
    let mut detail = format!(
        "offset={} crossings={}",
        sol.selection.cycle.offset,
        sol.selection.crossings.len()
    );
    if oracle {
        let mode = if words.len() <= ORACLE_MAX_PERMUTATION_N {
            OracleMode::Permutations
        } else {
            OracleMode::Candidates
        };
        let found = oracle_words(&words, mode)?.ok_or_else(|| Error::TheoremViolation {
            what: "oracle finds no permutation where the solver found one".into(),
            instance: join(&words),
        })?;
        let composed = Word::new((0..words.len()).map(|c| words[found[c]].get(c)).collect())?;
        if alternation_number(&composed) > 2 {
            return Err(Error::Invariant(format!("oracle returned {composed}")));
        }
        detail.push_str(" oracle=agrees");
    }
    Ok(Outcome::Certified {
        witness,
        detail: Some(detail),
    })
}

fn rank2(ctx: &Ctx, path: &Path) -> Result<Outcome> {
    let words = parse_words(&fs::read_to_string(path)?)?;
    let sol = solve_words(&words)?;
    let n = words.len();
    let chi = Chirotope::alternating(n, 2)?;
    let ts = words
        .iter()
        .map(|w| w.to_string().parse::<SignVector>())
        .collect::<Result<Vec<_>>>()?;
    let tc = TopeCollection::new(chi, ts, None, false, &ctx.limits)?;
    let cert = find_transversal(&tc)?.ok_or_else(|| Error::TheoremViolation {
        what: "tope search finds no transversal where the word solver found one".into(),
        instance: join(&words),
    })?;
    cert.verify(&tc)?;
    let perm: Vec<usize> = sol.perm.iter().map(|p| p + 1).collect();
    Ok(Outcome::Certified {
        witness: format!(
            "shift={} perm={} word={}",
            sol.shift,
            join(&perm),
            sol.result
        ),
        detail: Some(format!("tope search {cert}")),
    })
}

fn betti_text(betti: &[usize]) -> String {
    format!("reduced betti (from dim -1) {}", join(betti))
}

fn lemma_jj(ctx: &Ctx, chi: &Chirotope, jplus: u64, jminus: u64, text: &str) -> Result<Outcome> {
    let k = jj_order_complex(chi, jplus, jminus, &ctx.limits)?;
    let betti = reduced_betti_numbers(&k, &ctx.limits)?;
    let violation = |what: &str| Error::TheoremViolation {
        what: format!("{what}: {}", betti_text(&betti)),
        instance: text.to_string(),
    };
    if jplus | jminus == 0 {
        let r = chi.rank();
        let sphere = (0..betti.len()).all(|i| betti[i] == usize::from(i == r));
        return if sphere {
            Ok(certified(format!(
                "sphere of dimension {}: {}",
                r as isize - 1,
                betti_text(&betti)
            )))
        } else {
            Err(violation("not a homology sphere of dimension rank - 1"))
        };
    }
    let all = topes(chi, &ctx.limits)?;
    let has_tope = k.vertices().iter().any(|x| all.binary_search(x).is_ok());
    if !has_tope {
        return Ok(Outcome::None {
            witness: Some(betti_text(&betti)),
            detail: "the covector set contains no tope".into(),
        });
    }
    if betti.iter().all(|&b| b == 0) {
        Ok(certified(format!("acyclic: {}", betti_text(&betti))))
    } else {
        Err(violation("not acyclic"))
    }
}

fn lemma_hh(ctx: &Ctx, chi: &Chirotope, e: usize, h: usize, text: &str) -> Result<Outcome> {
    if positive_vectors_eh(chi, e, h, &ctx.limits)?.is_empty() {
        return Ok(Outcome::None {
            witness: None,
            detail: "no positive vector qualifies".into(),
        });
    }
    let k = eh_order_complex(chi, e, h, &ctx.limits)?;
    let betti = reduced_betti_numbers(&k, &ctx.limits)?;
    if reduced_homology_trivial_up_to(&k, h as isize - 2, &ctx.limits)? {
        Ok(certified(format!(
            "{}-connected: {}",
            h as isize - 2,
            betti_text(&betti)
        )))
    } else {
        Err(Error::TheoremViolation {
            what: format!("not {}-connected: {}", h as isize - 2, betti_text(&betti)),
            instance: text.to_string(),
        })
    }
}

fn lemma_li(ctx: &Ctx, chi: &Chirotope, ts: &[SignVector], text: &str) -> Result<Outcome> {
    let tc = TopeCollection::new(chi.clone(), ts.to_vec(), None, false, &ctx.limits)?;
    let r = chi.rank();
    let mut lines = vec![];
    for mask in 1..1u64 << tc.k() {
        let members: Vec<SignVector> = (0..tc.k())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| tc.topes[i])
            .collect();
        let betti = li_cellular_betti(chi, &tc.topes, mask, &ctx.limits)?;
        let upto = if common_elements(&members).is_empty() {
            r
        } else {
            betti.len()
        };
        let colors: Vec<usize> = (0..tc.k())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| i + 1)
            .collect();
        if betti.iter().take(upto).any(|&b| b != 0) {
            return Err(Error::TheoremViolation {
                what: format!("L^{colors:?} fails: {}", betti_text(&betti)),
                instance: text.to_string(),
            });
        }
        lines.push(format!("{colors:?}:{}", join(&betti)));
    }
    Ok(Outcome::Certified {
        witness: format!("{} subsets pass", lines.len()),
        detail: Some(lines.join(" ")),
    })
}

fn rainbow(ctx: &Ctx, family: &Path, labels: &Path) -> Result<Outcome> {
    let fam = read_family_dir(family, &ctx.limits)?;
    let lab = parse_labels(&fs::read_to_string(labels)?, &fam)?;
    let chains = build_chain_family(&fam, &ctx.limits)?;
    chains.verify(&fam)?;
    let found = rainbow_from_chains(&fam, &chains, &lab)?;
    let by_color: Vec<String> = found
        .by_color
        .iter()
        .enumerate()
        .map(|(i, v)| format!("{}:{v}", i + 1))
        .collect();
    Ok(certified(by_color.join(" ")))
}
