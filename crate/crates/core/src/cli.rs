//! Command-line front end behind the `grh` binary.
//!
//! Every file artifact embeds a [`Provenance`] block (full run configuration
//! plus a SHA-256 digest of the inputs). JSON artifacts carry it under the
//! `provenance` key; CSV artifacts carry it as a leading `#` comment line.
//! Outputs never depend on the thread count.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::Value;

use crate::acceptance::{run_criterion, Outcome, Suite};
use crate::config::{Provenance, RunConfig, THREADS_ENV};
use crate::determinants::{cauchy_det, cauchy_matrix, exact_det, factorial_det_formula, factorial_matrix};
use crate::error::{Error, Result};
use crate::grassmann::{haar_sample, principal_cosines, RescalingFlow, Subspace};
use crate::partitions::{count_types, density, enumerate_types, TypePredicate};
use crate::pde::{density_bound_check, growth_fit, kernel_dims, mu_kernel_dim, reduce_operator, DiffOp};
use crate::poly::dim_p;
use crate::rational::{self, Rational};
use crate::stats::stream_rng;
use crate::transforms::{classify_table, family_for, spectrum, MultiplierTable, Operator, SpectrumConfig, Verdict};
use crate::zonal::{build_family, MomentOracle};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ASSERTION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "grh", version, about = "Harmonic analysis on real Grassmannians")]
pub struct Cli {
    /// Worker threads (results are identical for any value).
    #[arg(long, global = true, env = THREADS_ENV)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// O(n)-type counts and densities.
    #[command(subcommand)]
    Partitions(PartitionsCmd),
    /// Haar samples and the rescaling flow.
    #[command(subcommand)]
    Grassmann(GrassmannCmd),
    /// Zonal families.
    #[command(subcommand)]
    Zonal(ZonalCmd),
    /// Transform spectra.
    #[command(subcommand)]
    Transform(TransformCmd),
    /// Kernels of polynomial-coefficient differential operators.
    #[command(subcommand)]
    Pde(PdeCmd),
    /// Exact determinant identities.
    #[command(subcommand)]
    Det(DetCmd),
    /// Run the acceptance suite.
    Accept {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Args)]
pub struct OutArg {
    /// Output file (stdout when absent).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum PartitionsCmd {
    /// CSV rows `2m,count` with count = |Λ_k(2m)|.
    Count {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_weight: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// CSV rows `2m,count,density_num,density_den`.
    Density {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_weight: u32,
        /// Predicate: all, l2le:B, l2ge:B, trunc:J, cos_image:A, radon_image:N:P, not:...
        #[arg(long)]
        pred: String,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum GrassmannCmd {
    /// Haar-random frames as JSON (each an n×k array of rows).
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Principal cosines of g_ε E against E₀ = span(e₁..e_k) and η_{g_ε}(E),
    /// as CSV, for Haar-random E.
    Flow {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Comma-separated ε values.
        #[arg(long, default_value = "1,0.1,0.01,0.001,0.00001")]
        eps: String,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum ZonalCmd {
    /// Build P_λ for all types up to the weight bound.
    Build {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_weight: u32,
        #[arg(long, default_value_t = 1_000_000)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        /// auto (quadrature when κ = 1), mc or quadrature.
        #[arg(long, default_value = "auto")]
        method: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum TransformCmd {
    /// Estimate the multiplier of every type.
    Spectrum {
        /// cos, alpha:A or radon:P.
        #[arg(long)]
        op: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_weight: u32,
        #[arg(long)]
        samples: usize,
        #[arg(long)]
        seed: u64,
        /// Samples for the zonal family (default: --samples).
        #[arg(long)]
        family_samples: Option<usize>,
        /// Radon inner draws per outer sample.
        #[arg(long)]
        inner: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Classify a table against a predicted surviving set.
    Classify {
        #[arg(long)]
        table: PathBuf,
        /// Types predicted to survive.
        #[arg(long)]
        pred: String,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Subcommand)]
pub enum PdeCmd {
    /// dim(Ker D ∩ P_m) for m = 0..=m_max.
    KernelDims {
        /// Operator JSON file.
        #[arg(long)]
        op: PathBuf,
        #[arg(long)]
        m_max: u32,
        /// Cross-check against the μ-matrix of the reduced operator.
        #[arg(long)]
        mu_check: bool,
        /// Compare densities at m = 2Nm′ ≤ m_max with 1 − 1/(2N)^k.
        #[arg(long)]
        density_bound: bool,
        /// CSV output (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// JSON report (growth fit and optional checks).
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum DetCmd {
    /// det[1/(k+i+j)!] for 0 ≤ i,j < n.
    Factorial {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        verify: bool,
    },
    /// det[1/(x_i − y_j)].
    Cauchy {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long)]
        verify: bool,
    },
}

/// What a subcommand reports besides its artifacts.
enum Status {
    Ok,
    Failed(String),
    Inconclusive(String),
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        // A second initialization (tests running in one process) is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(cli.command) {
        Ok(Status::Ok) => ExitCode::from(EXIT_OK),
        Ok(Status::Failed(msg)) => {
            eprintln!("assertion failed: {msg}");
            ExitCode::from(EXIT_ASSERTION)
        }
        Ok(Status::Inconclusive(msg)) => {
            eprintln!("inconclusive: {msg}; rerun with more samples or another seed");
            ExitCode::from(EXIT_INCONCLUSIVE)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Exit code for a library error.
pub fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Inconclusive(_) | Error::InsufficientSamples { .. } => EXIT_INCONCLUSIVE,
        Error::Degenerate(_) => EXIT_ASSERTION,
        _ => EXIT_USAGE,
    }
}

fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::Partitions(c) => partitions(c),
        Command::Grassmann(c) => grassmann(c),
        Command::Zonal(c) => zonal(c),
        Command::Transform(c) => transform(c),
        Command::Pde(c) => pde(c),
        Command::Det(c) => det(c),
        Command::Accept { suite } => accept(&suite),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn outputs(paths: &[Option<&Path>]) -> Vec<String> {
    paths.iter().flatten().map(|p| p.display().to_string()).collect()
}

fn csv_header(prov: &Provenance) -> Result<String> {
    Ok(format!("# provenance: {}\n", serde_json::to_string(prov)?))
}

/// `{"provenance": .., key: value}` as pretty JSON with a trailing newline.
fn json_artifact(prov: &Provenance, key: &str, value: Value) -> Result<String> {
    let mut map = serde_json::Map::new();
    map.insert("provenance".into(), serde_json::to_value(prov)?);
    map.insert(key.into(), value);
    let mut s = serde_json::to_string_pretty(&Value::Object(map))?;
    s.push('\n');
    Ok(s)
}

fn partitions(c: PartitionsCmd) -> Result<Status> {
    match c {
        PartitionsCmd::Count { k, max_weight, out } => {
            let mut cfg = RunConfig::new("partitions count");
            cfg.k = Some(k);
            cfg.max_weight = Some(max_weight);
            cfg.outputs = outputs(&[out.out.as_deref()]);
            let mut s = csv_header(&Provenance::new(cfg, &[]))?;
            s.push_str("weight,count\n");
            for w in (0..=max_weight).step_by(2) {
                writeln!(s, "{w},{}", count_types(k, w)?).expect("string write");
            }
            emit(out.out.as_deref(), &s)?;
        }
        PartitionsCmd::Density { k, max_weight, pred, out } => {
            let p = TypePredicate::parse(&pred)?;
            let mut cfg = RunConfig::new("partitions density").arg("pred", &pred);
            cfg.k = Some(k);
            cfg.max_weight = Some(max_weight);
            cfg.outputs = outputs(&[out.out.as_deref()]);
            let mut s = csv_header(&Provenance::new(cfg, &[]))?;
            s.push_str("weight,count,density_num,density_den\n");
            for w in (0..=max_weight).step_by(2) {
                let d = density(&p, k, w)?;
                writeln!(s, "{w},{},{},{}", count_types(k, w)?, d.numer(), d.denom()).expect("string write");
            }
            emit(out.out.as_deref(), &s)?;
        }
    }
    Ok(Status::Ok)
}

fn check_nk(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidArgument(format!("need 0 < k < n, got n={n} k={k}")));
    }
    Ok(())
}

fn frame_rows(e: &Subspace) -> Vec<Vec<f64>> {
    let f = e.frame();
    (0..f.nrows()).map(|r| f.row(r).iter().copied().collect()).collect()
}

fn grassmann(c: GrassmannCmd) -> Result<Status> {
    match c {
        GrassmannCmd::Sample { n, k, count, seed, out } => {
            check_nk(n, k)?;
            let mut rng = stream_rng(seed, 0);
            let frames = (0..count)
                .map(|_| haar_sample(n, k, &mut rng).map(|e| frame_rows(&e)))
                .collect::<Result<Vec<_>>>()?;
            let mut cfg = RunConfig::new("grassmann sample").arg("count", count);
            (cfg.n, cfg.k, cfg.seed) = (Some(n), Some(k), Some(seed));
            cfg.outputs = outputs(&[out.out.as_deref()]);
            let s = json_artifact(&Provenance::new(cfg, &[]), "frames", serde_json::to_value(frames)?)?;
            emit(out.out.as_deref(), &s)?;
        }
        GrassmannCmd::Flow { n, k, eps, count, seed, out } => {
            check_nk(n, k)?;
            let eps_values: Vec<f64> = eps
                .split(',')
                .map(|t| t.trim().parse::<f64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse(format!("bad --eps {eps:?}: {e}")))?;
            if eps_values.iter().any(|e| !(*e > 0.0 && e.is_finite())) {
                return Err(Error::InvalidArgument("ε values must be positive".into()));
            }
            let base = Subspace::canonical(n, k)?;
            let flow = RescalingFlow::new(base.clone());
            let kappa = base.kappa();
            let mut cfg = RunConfig::new("grassmann flow").arg("eps", &eps).arg("count", count);
            (cfg.n, cfg.k, cfg.seed) = (Some(n), Some(k), Some(seed));
            cfg.outputs = outputs(&[out.out.as_deref()]);
            let mut s = csv_header(&Provenance::new(cfg, &[]))?;
            s.push_str("sample,eps");
            for i in 1..=kappa {
                write!(s, ",y{i}").expect("string write");
            }
            s.push_str(",eta,inv_abs_cos\n");
            let mut rng = stream_rng(seed, 0);
            for i in 0..count {
                let e = haar_sample(n, k, &mut rng)?;
                let limit = 1.0 / crate::grassmann::abs_cosine(&e, &base)?;
                for &eps in &eps_values {
                    let moved = flow.apply(eps, &e)?;
                    let y = principal_cosines(&moved, &base)?;
                    write!(s, "{i},{eps}").expect("string write");
                    for v in y.values() {
                        write!(s, ",{v}").expect("string write");
                    }
                    writeln!(s, ",{},{limit}", flow.jacobian_factor(eps, &e)?).expect("string write");
                }
            }
            emit(out.out.as_deref(), &s)?;
        }
    }
    Ok(Status::Ok)
}

fn zonal(c: ZonalCmd) -> Result<Status> {
    let ZonalCmd::Build { n, k, max_weight, samples, seed, method, out } = c;
    check_nk(n, k)?;
    let kappa = k.min(n - k);
    let family = match method.as_str() {
        "auto" => family_for(n, k, max_weight, samples, seed)?,
        "mc" => build_family(n, k, max_weight, &mut MomentOracle::monte_carlo(n, k, samples, seed)?)?,
        "quadrature" if kappa == 1 => build_family(
            n,
            k,
            max_weight,
            &mut MomentOracle::quadrature_kappa1(n, k, (max_weight as usize / 2 + 1).max(16))?,
        )?,
        "quadrature" => return Err(Error::InvalidArgument("quadrature needs κ = 1".into())),
        _ => return Err(Error::InvalidArgument(format!("unknown method {method:?}"))),
    };
    let mut cfg = RunConfig::new("zonal build").arg("method", &method);
    (cfg.n, cfg.k, cfg.max_weight, cfg.samples, cfg.seed) = (Some(n), Some(k), Some(max_weight), Some(samples), Some(seed));
    cfg.outputs = outputs(&[Some(&out)]);
    let body: Value = serde_json::from_str(&family.to_json()?)?;
    let violations = family.orthogonality_violations(crate::transforms::VANISH_SIGMAS, 0.0);
    std::fs::write(&out, json_artifact(&Provenance::new(cfg, &[]), "family", body)?)?;
    println!("{} polynomials written to {}", family.len(), out.display());
    if violations.is_empty() {
        Ok(Status::Ok)
    } else {
        Ok(Status::Inconclusive(format!(
            "{} held-out Gram entries exceed 3 sigma",
            violations.len()
        )))
    }
}

/// Reads a table file written by `transform spectrum` (or a bare table).
fn read_table(path: &Path) -> Result<(MultiplierTable, Vec<u8>)> {
    let bytes = std::fs::read(path)?;
    let v: Value = serde_json::from_slice(&bytes)?;
    let table = match v.get("table") {
        Some(t) => t.clone(),
        None => v,
    };
    Ok((MultiplierTable::from_json(&table.to_string())?, bytes))
}

#[derive(Serialize)]
struct ClassifySummary {
    #[serde(with = "rational::serde_str")]
    surviving_density: Rational,
    #[serde(with = "rational::serde_str")]
    predicted_density: Rational,
    mismatches: usize,
    inconclusive: usize,
}

fn transform(c: TransformCmd) -> Result<Status> {
    match c {
        TransformCmd::Spectrum { op, n, k, max_weight, samples, seed, family_samples, inner, out } => {
            check_nk(n, k)?;
            let operator: Operator = op.parse()?;
            let mut sc = SpectrumConfig::new(operator, n, k, max_weight, samples, seed);
            if let Some(f) = family_samples {
                sc.family_samples = f;
            }
            if let Some(i) = inner {
                sc.inner = i;
            }
            let table = spectrum(&sc)?;
            let mut cfg = RunConfig::new("transform spectrum")
                .arg("op", &op)
                .arg("family_samples", sc.family_samples)
                .arg("inner", sc.inner);
            (cfg.n, cfg.k, cfg.max_weight, cfg.samples, cfg.seed) =
                (Some(n), Some(k), Some(max_weight), Some(samples), Some(seed));
            cfg.outputs = outputs(&[Some(&out)]);
            let undecided = table.entries.iter().filter(|e| e.verdict() == Verdict::Inconclusive).count();
            std::fs::write(&out, json_artifact(&Provenance::new(cfg, &[]), "table", serde_json::to_value(&table)?)?)?;
            println!("{} multipliers written to {}", table.entries.len(), out.display());
            if undecided > 0 {
                return Ok(Status::Inconclusive(format!("{undecided} types stayed between the thresholds")));
            }
        }
        TransformCmd::Classify { table, pred, out } => {
            let p = TypePredicate::parse(&pred)?;
            let (t, bytes) = read_table(&table)?;
            let rows = classify_table(&t, &p);
            let types = enumerate_types(t.kappa(), t.max_weight)?;
            let surviving = rows.iter().filter(|r| r.verdict == Verdict::Surviving).count();
            let summary = ClassifySummary {
                surviving_density: rational::ratio(surviving as i64, rows.len().max(1) as i64),
                predicted_density: crate::partitions::density_of(&types, &p),
                mismatches: rows.iter().filter(|r| r.matches() == Some(false)).count(),
                inconclusive: rows.iter().filter(|r| r.matches().is_none()).count(),
            };
            let mut cfg = RunConfig::new("transform classify")
                .arg("table", table.display())
                .arg("pred", &pred);
            cfg.outputs = outputs(&[out.out.as_deref()]);
            let mut s = csv_header(&Provenance::new(cfg, &[&bytes]))?;
            s.push_str("partition,mean,stderr,verdict,predicted,match\n");
            for r in &rows {
                let m = match r.matches() {
                    Some(true) => "yes",
                    Some(false) => "no",
                    None => "undecided",
                };
                let predicted = if r.predicted_surviving { "surviving" } else { "vanishing" };
                writeln!(s, "\"{}\",{},{},{},{predicted},{m}", r.partition, r.mean, r.stderr, r.verdict)
                    .expect("string write");
            }
            writeln!(
                s,
                "# surviving_density {}; predicted_density {}",
                rational::format(&summary.surviving_density),
                rational::format(&summary.predicted_density)
            )
            .expect("string write");
            emit(out.out.as_deref(), &s)?;
            if summary.mismatches > 0 {
                return Ok(Status::Failed(format!("{} types contradict {pred}", summary.mismatches)));
            }
            if summary.inconclusive > 0 {
                return Ok(Status::Inconclusive(format!("{} types undecided", summary.inconclusive)));
            }
        }
    }
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct MuCheck {
    reduced_operator: DiffOp,
    shift: Vec<u32>,
    mismatched_m: Vec<u32>,
}

fn pde(c: PdeCmd) -> Result<Status> {
    let PdeCmd::KernelDims { op, m_max, mu_check, density_bound, out, report } = c;
    let bytes = std::fs::read(&op)?;
    let d = DiffOp::from_json(std::str::from_utf8(&bytes).map_err(|e| Error::Parse(e.to_string()))?)?;
    let k = d.k();
    let dims = kernel_dims(&d, m_max);

    let mut cfg = RunConfig::new("pde kernel-dims").arg("op", op.display());
    cfg.k = Some(k);
    cfg = cfg.arg("m_max", m_max).arg("mu_check", mu_check).arg("density_bound", density_bound);
    cfg.outputs = outputs(&[out.as_deref(), report.as_deref()]);
    let prov = Provenance::new(cfg, &[&bytes]);

    let mut s = csv_header(&prov)?;
    s.push_str("m,dimP,dimKer,density_num,density_den\n");
    for (m, ker) in dims.iter().enumerate() {
        let dp = dim_p(m as u64, k as u64);
        let r = Rational::new(ker.clone(), dp.clone());
        writeln!(s, "{m},{dp},{ker},{},{}", r.numer(), r.denom()).expect("string write");
    }
    emit(out.as_deref(), &s)?;

    let mut status = Status::Ok;
    let mut body = serde_json::Map::new();
    body.insert("operator".into(), serde_json::to_value(&d)?);
    let ms: Vec<u32> = (1..=m_max).collect();
    let fit = if ms.len() >= 5 { Some(growth_fit(&d, &ms)?) } else { None };
    body.insert("growth".into(), serde_json::to_value(&fit)?);
    if mu_check {
        let (reduced, shift) = reduce_operator(&d)?;
        let direct = kernel_dims(&reduced, m_max);
        let mut mismatched_m = Vec::new();
        for m in 0..=m_max {
            if mu_kernel_dim(&reduced, m)? != direct[m as usize] {
                mismatched_m.push(m);
            }
        }
        if !mismatched_m.is_empty() {
            status = Status::Failed(format!("mu-matrix kernel differs at m = {mismatched_m:?}"));
        }
        body.insert("mu_check".into(), serde_json::to_value(MuCheck { reduced_operator: reduced, shift, mismatched_m })?);
    }
    if density_bound {
        let n = reduce_operator(&d)?.0.order().max(1);
        let m_primes: Vec<u32> = (1..).take_while(|mp| 2 * n * mp <= m_max).collect();
        body.insert("density_bound".into(), serde_json::to_value(density_bound_check(&d, &m_primes)?)?);
    }
    if let Some(path) = report {
        std::fs::write(&path, json_artifact(&prov, "report", Value::Object(body))?)?;
    }
    Ok(status)
}

fn det(c: DetCmd) -> Result<Status> {
    let (value, elimination) = match c {
        DetCmd::Factorial { k, n, verify } => {
            let v = factorial_det_formula(k, n);
            (v, if verify { Some(exact_det(&factorial_matrix(k, n))?) } else { None })
        }
        DetCmd::Cauchy { x, y, verify } => {
            let (x, y) = (rational::parse_list(&x)?, rational::parse_list(&y)?);
            let v = cauchy_det(&x, &y)?;
            (v, if verify { Some(exact_det(&cauchy_matrix(&x, &y)?)?) } else { None })
        }
    };
    println!("{}", rational::format(&value));
    match elimination {
        Some(e) if e != value => Ok(Status::Failed(format!(
            "closed form {} but elimination gives {}",
            rational::format(&value),
            rational::format(&e)
        ))),
        Some(_) => {
            println!("verified by elimination");
            Ok(Status::Ok)
        }
        None => Ok(Status::Ok),
    }
}

fn accept(suite: &str) -> Result<Status> {
    let suite: Suite = suite.parse()?;
    let mut failed = Vec::new();
    let mut inconclusive = Vec::new();
    for id in suite.ids() {
        let r = run_criterion(id);
        println!("{r}");
        match r.outcome {
            Outcome::Pass => {}
            Outcome::Fail => failed.push(id),
            Outcome::Inconclusive => inconclusive.push(id),
        }
    }
    Ok(if !failed.is_empty() {
        Status::Failed(format!("criteria {failed:?}"))
    } else if !inconclusive.is_empty() {
        Status::Inconclusive(format!("criteria {inconclusive:?}"))
    } else {
        Status::Ok
    })
}
