//! Spectral multipliers of the α-cosine and Radon transforms on each O(n)-type.
//!
//! An O(n)-equivariant operator T acts on the type λ by a scalar e_λ, and
//! e_λ · Z_λ(E₀) = (T Z_λ)(E₀) = E_Haar[K(y) Z_λ(y)] when T has the invariant
//! kernel K. For the α-cosine transform K(y) = ∏ y_j^{α/2}.
//!
//! The Monte Carlo numerator uses a fresh sample per type, on which P_λ is
//! re-orthogonalized against the lower family members. Lower-type components
//! of K then cancel exactly on that sample, so a slightly inaccurate family
//! cannot leak the large low-order multipliers into a vanishing one.

use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{haar_sample, Subspace};
use crate::partitions::{enumerate_types, Partition, TypePredicate};
use crate::rational::{self, Rational};
use crate::sampling::CosineSampler;
use crate::stats::{chunked, derive_seed, Estimate, Moments};
use crate::zonal::{build_family, JacobiFamily, MomentOracle};

/// |mean| ≤ this many standard errors counts as vanishing.
pub const VANISH_SIGMAS: f64 = 3.0;
/// |mean| ≥ this many standard errors counts as surviving.
pub const SURVIVE_SIGMAS: f64 = 5.0;
/// |mean| at or below this is rounding residue and counts as vanishing
/// whatever its standard error: exact cancellations in the re-projected
/// estimator leave values near 1e-19 with even smaller spread.
pub const ROUNDOFF_FLOOR: f64 = 1e-12;
/// Sample multiplier applied when a first estimate is inconclusive.
pub const RETRY_FACTOR: usize = 4;
/// Inner samples per outer point for the Radon estimator.
pub const DEFAULT_INNER: usize = 4;
const FAMILY_STREAM: u64 = 0x0066_616d;
const RETRY_STREAM: u64 = 0x7265_7472;

/// Which transform a multiplier belongs to.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Operator {
    Cos,
    AlphaCos { alpha: f64 },
    /// ‖R_{k,p} Z_λ‖², the squared norm of the Radon image on Gr_p.
    RadonAdjoint { p: usize },
    /// A table built from a predicate rather than estimated.
    Synthetic { vanishing: String },
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Cos => write!(f, "cos"),
            Self::AlphaCos { alpha } => write!(f, "alpha:{alpha}"),
            Self::RadonAdjoint { p } => write!(f, "radon:{p}"),
            Self::Synthetic { vanishing } => write!(f, "synthetic:{vanishing}"),
        }
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown operator {s:?}; expected cos, alpha:A or radon:P"));
        if s == "cos" {
            return Ok(Self::Cos);
        }
        let (head, arg) = s.split_once(':').ok_or_else(bad)?;
        match head {
            "alpha" => Ok(Self::AlphaCos {
                alpha: arg.parse().map_err(|_| bad())?,
            }),
            "radon" => Ok(Self::RadonAdjoint {
                p: arg.parse().map_err(|_| bad())?,
            }),
            _ => Err(bad()),
        }
    }
}

/// The estimated multiplier of one type.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplierEstimate {
    pub partition: Partition,
    pub mean: f64,
    pub stderr: f64,
    pub samples: u64,
    pub operator: Operator,
}

impl MultiplierEstimate {
    pub fn estimate(&self) -> Estimate {
        Estimate {
            mean: self.mean,
            stderr: self.stderr,
            samples: self.samples,
        }
    }

    pub fn verdict(&self) -> Verdict {
        classify(&self.estimate(), VANISH_SIGMAS, SURVIVE_SIGMAS)
    }
}

/// Zero versus nonzero, decided at fixed σ thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Vanishing,
    Surviving,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Vanishing => "vanishing",
            Self::Surviving => "surviving",
            Self::Inconclusive => "inconclusive",
        })
    }
}

pub fn classify(e: &Estimate, vanish_sigmas: f64, survive_sigmas: f64) -> Verdict {
    let m = e.mean.abs();
    if m <= vanish_sigmas * e.stderr || m <= ROUNDOFF_FLOOR {
        Verdict::Vanishing
    } else if m >= survive_sigmas * e.stderr {
        Verdict::Surviving
    } else {
        Verdict::Inconclusive
    }
}

fn sampler_for(family: &JacobiFamily) -> Result<CosineSampler> {
    match family.provenance().base {
        None => CosineSampler::canonical(family.n(), family.k()),
        Some(_) => Ok(CosineSampler::about(family.base()?)),
    }
}

/// Multiplier of T_α on the type λ.
pub fn alpha_cosine_multiplier(
    alpha: f64,
    lambda: &Partition,
    family: &JacobiFamily,
    samples: usize,
    seed: u64,
) -> Result<MultiplierEstimate> {
    if alpha.is_nan() || alpha <= -1.0 {
        return Err(Error::InvalidArgument(format!("need alpha > -1, got {alpha}")));
    }
    let operator = if alpha == 1.0 {
        Operator::Cos
    } else {
        Operator::AlphaCos { alpha }
    };
    kernel_multiplier(
        move |y: &[f64]| y.iter().map(|v| v.powf(alpha / 2.0)).product(),
        operator,
        lambda,
        family,
        samples,
        seed,
    )
}

/// Multiplier of the cosine transform Cos = T₁ on the type λ.
pub fn cosine_multiplier(lambda: &Partition, family: &JacobiFamily, samples: usize, seed: u64) -> Result<MultiplierEstimate> {
    alpha_cosine_multiplier(1.0, lambda, family, samples, seed)
}

fn kernel_multiplier(
    kernel: impl Fn(&[f64]) -> f64 + Sync,
    operator: Operator,
    lambda: &Partition,
    family: &JacobiFamily,
    samples: usize,
    seed: u64,
) -> Result<MultiplierEstimate> {
    if samples < 2 {
        return Err(Error::InvalidArgument("need at least 2 samples".into()));
    }
    let i = family.index_of(lambda)?;
    let at_one = family.value_at_one(lambda)?;
    if at_one.mean.abs() < 5.0 * at_one.stderr {
        return Err(Error::InsufficientSamples {
            partition: lambda.to_string(),
            pivot: at_one.mean,
            stderr: at_one.stderr,
        });
    }
    let sampler = sampler_for(family)?;
    let kappa = sampler.kappa();
    let d = i + 1;
    let stream = derive_seed(seed, i as u64);

    // First pass: Gram of P_0..P_i and ⟨K, P_j⟩ on this sample.
    let points: Vec<f64> = chunked(samples, stream, |rng, count| {
        let mut out = vec![0.0; count * kappa];
        for y in out.chunks_mut(kappa) {
            sampler.sample(rng, y);
        }
        out
    })
    .concat();
    let accum = chunked_points(&points, kappa, |chunk| {
        let mut ev = family.evaluator();
        let mut vals = vec![0.0; family.len()];
        let mut g = vec![0.0; d * d + d];
        for y in chunk.chunks(kappa) {
            ev.eval_all(y, &mut vals);
            let kv = kernel(y);
            for r in 0..d {
                for c in 0..=r {
                    g[r * d + c] += vals[r] * vals[c];
                }
                g[d * d + r] += kv * vals[r];
            }
        }
        g
    });
    let mut g = vec![0.0; d * d + d];
    for part in &accum {
        for (a, b) in g.iter_mut().zip(part) {
            *a += b;
        }
    }
    let lower = DMatrix::from_fn(i, i, |r, c| g[r.max(c) * d + r.min(c)]);
    let cross_p = DVector::from_fn(i, |r, _| g[i * d + r]);
    let cross_k = DVector::from_fn(i, |r, _| g[d * d + r]);
    let (beta, gamma) = if i == 0 {
        (DVector::zeros(0), DVector::zeros(0))
    } else {
        let chol = lower.cholesky().ok_or(Error::Degenerate(0.0))?;
        (chol.solve(&cross_p), chol.solve(&cross_k))
    };

    // Second pass: z = (K − Π K)·(P_i − Π P_i), whose mean is ⟨K, P̃_i⟩.
    let parts = chunked_points(&points, kappa, |chunk| {
        let mut ev = family.evaluator();
        let mut vals = vec![0.0; family.len()];
        let mut m = Moments::default();
        for y in chunk.chunks(kappa) {
            ev.eval_all(y, &mut vals);
            let mut p = vals[i];
            let mut r = kernel(y);
            for j in 0..i {
                p -= beta[j] * vals[j];
                r -= gamma[j] * vals[j];
            }
            m.push(r * p);
        }
        m
    });
    let mut total = Moments::default();
    for p in &parts {
        total.merge(p);
    }
    let mut ones = vec![0.0; family.len()];
    family.evaluator().eval_all(&vec![1.0; kappa], &mut ones);
    let denom = ones[i] - (0..i).map(|j| beta[j] * ones[j]).sum::<f64>();
    let est = total.estimate();
    Ok(MultiplierEstimate {
        partition: family.types()[i].clone(),
        mean: est.mean / denom,
        stderr: est.stderr / denom.abs(),
        samples: samples as u64,
        operator,
    })
}

fn chunked_points<T: Send>(points: &[f64], kappa: usize, f: impl Fn(&[f64]) -> T + Sync + Send) -> Vec<T> {
    use rayon::prelude::*;
    points
        .par_chunks(crate::stats::CHUNK * kappa)
        .map(f)
        .collect()
}

/// ‖R_{k,p} Z_λ‖² = E_{E ∈ Gr_p}[(E_{F ⊃ E} Z_λ(F))²].
///
/// F is drawn as E ⊕ (a Haar (k−p)-subspace of E^⊥). The inner square is
/// estimated without bias by the U-statistic over `inner` draws of F.
pub fn radon_adjoint_norm(
    p: usize,
    lambda: &Partition,
    family: &JacobiFamily,
    outer: usize,
    inner: usize,
    seed: u64,
) -> Result<MultiplierEstimate> {
    let (n, k) = (family.n(), family.k());
    if p == 0 || p >= k {
        return Err(Error::InvalidArgument(format!("need 1 <= p < k, got p={p}, k={k}")));
    }
    if family.provenance().base.is_some() {
        return Err(Error::InvalidArgument(
            "the Radon estimator needs a family about span(e_1..e_k)".into(),
        ));
    }
    if inner < 2 || outer < 2 {
        return Err(Error::InvalidArgument("need at least 2 inner and 2 outer samples".into()));
    }
    let i = family.index_of(lambda)?;
    let kappa = family.kappa();
    let stream = derive_seed(seed, i as u64);
    let parts = chunked(outer, stream, |rng, count| -> Result<Moments> {
        let mut ev = family.evaluator();
        let mut vals = vec![0.0; family.len()];
        let mut y = vec![0.0; kappa];
        let mut m = Moments::default();
        for _ in 0..count {
            let e = haar_sample(n, p, rng)?;
            let perp = e.orthogonal_complement();
            let (mut s, mut s2) = (0.0, 0.0);
            for _ in 0..inner {
                let f = containing_subspace(&e, &perp, k - p, rng)?;
                base_cosines(&f, kappa, &mut y);
                ev.eval_all(&y, &mut vals);
                s += vals[i];
                s2 += vals[i] * vals[i];
            }
            let m_in = inner as f64;
            m.push((s * s - s2) / (m_in * (m_in - 1.0)));
        }
        Ok(m)
    });
    let mut total = Moments::default();
    for part in parts {
        total.merge(&part?);
    }
    let est = total.estimate();
    Ok(MultiplierEstimate {
        partition: family.types()[i].clone(),
        mean: est.mean,
        stderr: est.stderr,
        samples: outer as u64,
        operator: Operator::RadonAdjoint { p },
    })
}

/// E ⊕ G with G a Haar `extra`-dimensional subspace of E^⊥.
fn containing_subspace<R: Rng + ?Sized>(e: &Subspace, perp: &Subspace, extra: usize, rng: &mut R) -> Result<Subspace> {
    let g = haar_sample_in(perp.k(), extra, rng)?;
    let cols = perp.frame() * g;
    let mut frame = DMatrix::zeros(e.n(), e.k() + extra);
    frame.columns_mut(0, e.k()).copy_from(e.frame());
    frame.columns_mut(e.k(), extra).copy_from(&cols);
    Subspace::new(frame)
}

/// Orthonormal d×j frame of a Haar j-subspace of ℝ^d (allowing j = d).
fn haar_sample_in<R: Rng + ?Sized>(d: usize, j: usize, rng: &mut R) -> Result<DMatrix<f64>> {
    if j < d {
        return Ok(haar_sample(d, j, rng)?.frame().clone());
    }
    let g = DMatrix::from_fn(d, d, |_, _| rng.sample::<f64, _>(StandardNormal));
    Ok(g.qr().q())
}

/// The κ smallest squared singular values of the top k×k block of F's
/// frame, i.e. the nontrivial squared cosines with span(e₁..e_k).
fn base_cosines(f: &Subspace, kappa: usize, out: &mut [f64]) {
    let k = f.k();
    let x = f.frame().rows(0, k);
    let mut ev: Vec<f64> = (x.transpose() * x)
        .symmetric_eigenvalues()
        .iter()
        .map(|v| v.clamp(0.0, 1.0))
        .collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    out.copy_from_slice(&ev[k - kappa..]);
}

/// A full table of multipliers over Λ_κ(max_weight).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultiplierTable {
    pub n: usize,
    pub k: usize,
    pub max_weight: u32,
    pub operator: Operator,
    pub samples: usize,
    pub seed: u64,
    /// Provenance of the zonal family the multipliers were measured against.
    pub family: Option<crate::zonal::FamilyProvenance>,
    pub entries: Vec<MultiplierEstimate>,
}

impl MultiplierTable {
    pub fn kappa(&self) -> usize {
        self.k.min(self.n - self.k)
    }

    pub fn get(&self, lambda: &Partition) -> Option<&MultiplierEstimate> {
        self.entries.iter().find(|e| &e.partition == lambda)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let t: Self = serde_json::from_str(s)?;
        let types = enumerate_types(t.kappa(), t.max_weight)?;
        let have: Vec<&Partition> = t.entries.iter().map(|e| &e.partition).collect();
        if have != types.iter().collect::<Vec<_>>() {
            return Err(Error::Parse(
                "table must list every type up to max_weight exactly once, in graded order".into(),
            ));
        }
        Ok(t)
    }
}

/// Settings for [`spectrum`].
#[derive(Clone, Debug)]
pub struct SpectrumConfig {
    pub n: usize,
    pub k: usize,
    pub max_weight: u32,
    pub operator: Operator,
    pub samples: usize,
    pub seed: u64,
    /// Samples for the Monte Carlo zonal family (ignored when κ = 1, where
    /// quadrature is used).
    pub family_samples: usize,
    pub inner: usize,
    /// Re-estimate inconclusive types once with [`RETRY_FACTOR`]× samples.
    pub retry: bool,
}

impl SpectrumConfig {
    pub fn new(operator: Operator, n: usize, k: usize, max_weight: u32, samples: usize, seed: u64) -> Self {
        Self {
            n,
            k,
            max_weight,
            operator,
            samples,
            seed,
            family_samples: samples,
            inner: DEFAULT_INNER,
            retry: true,
        }
    }
}

/// The zonal family a spectrum is measured against.
pub fn family_for(n: usize, k: usize, max_weight: u32, samples: usize, seed: u64) -> Result<JacobiFamily> {
    let mut oracle = if k.min(n.saturating_sub(k)) == 1 {
        MomentOracle::quadrature_kappa1(n, k, (max_weight as usize / 2 + 1).max(16))?
    } else {
        MomentOracle::monte_carlo(n, k, samples, derive_seed(seed, FAMILY_STREAM))?
    };
    build_family(n, k, max_weight, &mut oracle)
}

/// Estimates the multiplier of every type up to `max_weight`.
pub fn spectrum(cfg: &SpectrumConfig) -> Result<MultiplierTable> {
    let family = family_for(cfg.n, cfg.k, cfg.max_weight, cfg.family_samples, cfg.seed)?;
    spectrum_with_family(cfg, &family)
}

pub fn spectrum_with_family(cfg: &SpectrumConfig, family: &JacobiFamily) -> Result<MultiplierTable> {
    let one = |lambda: &Partition, samples: usize, seed: u64| match &cfg.operator {
        Operator::Cos => cosine_multiplier(lambda, family, samples, seed),
        Operator::AlphaCos { alpha } => alpha_cosine_multiplier(*alpha, lambda, family, samples, seed),
        Operator::RadonAdjoint { p } => radon_adjoint_norm(*p, lambda, family, samples, cfg.inner, seed),
        Operator::Synthetic { .. } => Err(Error::InvalidArgument("synthetic tables are not estimated".into())),
    };
    let mut entries = Vec::with_capacity(family.len());
    for lambda in family.types() {
        let mut e = one(lambda, cfg.samples, cfg.seed)?;
        if cfg.retry && e.verdict() == Verdict::Inconclusive {
            e = one(lambda, cfg.samples * RETRY_FACTOR, derive_seed(cfg.seed, RETRY_STREAM))?;
        }
        entries.push(e);
    }
    Ok(MultiplierTable {
        n: cfg.n,
        k: cfg.k,
        max_weight: cfg.max_weight,
        operator: cfg.operator.clone(),
        samples: cfg.samples,
        seed: cfg.seed,
        family: Some(family.provenance().clone()),
        entries,
    })
}

/// A table on Λ_κ(max_weight) that is exactly zero on `vanishing` and one
/// elsewhere, with unit-free error bars of 10⁻³.
pub fn synthetic_table(kappa: usize, max_weight: u32, vanishing: &TypePredicate) -> Result<MultiplierTable> {
    let operator = Operator::Synthetic {
        vanishing: vanishing.name().to_string(),
    };
    let entries = enumerate_types(kappa, max_weight)?
        .into_iter()
        .map(|l| MultiplierEstimate {
            mean: if vanishing.eval(&l) { 0.0 } else { 1.0 },
            stderr: 1e-3,
            samples: 0,
            operator: operator.clone(),
            partition: l,
        })
        .collect();
    Ok(MultiplierTable {
        n: 2 * kappa,
        k: kappa,
        max_weight,
        operator,
        samples: 0,
        seed: 0,
        family: None,
        entries,
    })
}

/// Result of classifying a table by |mean| against a σ threshold.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityReport {
    pub max_weight: u32,
    pub total: usize,
    pub surviving: usize,
    #[serde(with = "rational::serde_str")]
    pub density: Rational,
    pub vanishing_types: Vec<Partition>,
}

/// Splits a table into vanishing (|mean| ≤ threshold·stderr) and surviving
/// types and returns the exact surviving density.
pub fn support_density_demo(table: &MultiplierTable, vanish_threshold_sigmas: f64) -> DensityReport {
    let vanishing_types: Vec<Partition> = table
        .entries
        .iter()
        .filter(|e| e.mean.abs() <= vanish_threshold_sigmas * e.stderr || e.mean.abs() <= ROUNDOFF_FLOOR)
        .map(|e| e.partition.clone())
        .collect();
    let total = table.entries.len();
    let surviving = total - vanishing_types.len();
    DensityReport {
        max_weight: table.max_weight,
        total,
        surviving,
        density: rational::ratio(surviving as i64, total.max(1) as i64),
        vanishing_types,
    }
}

/// One row of a classification against a predicted surviving set.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Classification {
    pub partition: Partition,
    pub mean: f64,
    pub stderr: f64,
    pub verdict: Verdict,
    pub predicted_surviving: bool,
}

impl Classification {
    /// Inconclusive rows neither match nor contradict.
    pub fn matches(&self) -> Option<bool> {
        match self.verdict {
            Verdict::Inconclusive => None,
            v => Some((v == Verdict::Surviving) == self.predicted_surviving),
        }
    }
}

/// Classifies each entry at the standard thresholds and pairs it with the
/// prediction `surviving`.
pub fn classify_table(table: &MultiplierTable, surviving: &TypePredicate) -> Vec<Classification> {
    table
        .entries
        .iter()
        .map(|e| Classification {
            partition: e.partition.clone(),
            mean: e.mean,
            stderr: e.stderr,
            verdict: e.verdict(),
            predicted_surviving: surviving.eval(&e.partition),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::density;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn operator_parsing() {
        assert_eq!("cos".parse::<Operator>().unwrap(), Operator::Cos);
        assert_eq!("alpha:2.5".parse::<Operator>().unwrap(), Operator::AlphaCos { alpha: 2.5 });
        assert_eq!("radon:1".parse::<Operator>().unwrap(), Operator::RadonAdjoint { p: 1 });
        assert!("sin".parse::<Operator>().is_err());
        assert!("radon:x".parse::<Operator>().is_err());
    }

    #[test]
    fn verdict_thresholds() {
        let e = |mean, stderr| Estimate { mean, stderr, samples: 1 };
        assert_eq!(classify(&e(0.0, 0.0), 3.0, 5.0), Verdict::Vanishing);
        assert_eq!(classify(&e(0.3, 0.1), 3.0, 5.0), Verdict::Vanishing);
        assert_eq!(classify(&e(0.4, 0.1), 3.0, 5.0), Verdict::Inconclusive);
        assert_eq!(classify(&e(-0.5, 0.1), 3.0, 5.0), Verdict::Surviving);
        assert_eq!(classify(&e(2e-19, 2e-20), 3.0, 5.0), Verdict::Vanishing);
    }

    #[test]
    fn circle_cosine_multipliers() {
        let family = family_for(2, 1, 6, 0, 0).unwrap();
        for m in 0..=3u32 {
            let e = cosine_multiplier(&part(&[2 * m]), &family, 200_000, 4).unwrap();
            let mf = m as f64;
            let expect = if m == 0 {
                2.0 / std::f64::consts::PI
            } else {
                2.0 * (-1f64).powi(m as i32 + 1) / (std::f64::consts::PI * (4.0 * mf * mf - 1.0))
            };
            assert!(e.estimate().within_sigmas(expect, 3.0), "m={m}: {e:?} vs {expect}");
        }
    }

    #[test]
    fn averaging_operator() {
        let family = family_for(4, 2, 4, 100_000, 1).unwrap();
        for l in family.types() {
            let e = alpha_cosine_multiplier(0.0, l, &family, 10_000, 2).unwrap();
            let expect = if l.weight() == 0 { 1.0 } else { 0.0 };
            assert!((e.mean - expect).abs() <= 3.0 * e.stderr + 1e-12, "{l}: {e:?}");
        }
        assert!(alpha_cosine_multiplier(-1.0, &part(&[0, 0]), &family, 10, 2).is_err());
    }

    #[test]
    fn synthetic_density() {
        let t = synthetic_table(2, 20, &TypePredicate::second_part_at_most(2)).unwrap();
        let r = support_density_demo(&t, 3.0);
        assert_eq!(r.density, rational::ratio(4, 9));
        assert_eq!(r.total, 36);
        let ones = synthetic_table(2, 20, &TypePredicate::always().negate()).unwrap();
        assert_eq!(support_density_demo(&ones, 3.0).density, rational::int(1));
        let d = density(&TypePredicate::second_part_at_least(4), 2, 20).unwrap();
        assert_eq!(r.density, d);
    }

    #[test]
    fn radon_constant_type() {
        let family = family_for(4, 2, 4, 200_000, 3).unwrap();
        let e = radon_adjoint_norm(1, &part(&[0, 0]), &family, 2_000, 3, 5).unwrap();
        assert!((e.mean - 1.0).abs() < 1e-12);
    }

    #[test]
    fn table_json_round_trip() {
        let t = synthetic_table(2, 8, &TypePredicate::second_part_at_most(2)).unwrap();
        let s = t.to_json().unwrap();
        assert_eq!(MultiplierTable::from_json(&s).unwrap(), t);
        let mut broken = t.clone();
        broken.entries.pop();
        assert!(MultiplierTable::from_json(&broken.to_json().unwrap()).is_err());
    }
}
