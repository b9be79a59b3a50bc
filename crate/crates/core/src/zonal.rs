//! Generalized Jacobi polynomials P_λ and zonal harmonics Z_λ(E) = P_λ(y(E, E₀)).
//!
//! The inner product of H-invariant functions is E_Haar[p(y) q(y)]. It is
//! realized either by Monte Carlo over sampled cosines or, when κ = 1, by
//! Gauss quadrature against the one-angle law y ~ Beta(1/2, (n−1)/2).
//! The family is the monic Gram–Schmidt of the monomial symmetric functions
//! m_λ in graded order.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, SymmetricEigen};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::{haar_sample, principal_cosines, Subspace};
use crate::partitions::{enumerate_types, Partition};
use crate::poly::{monomial_symmetric, MultiPoly, SymmetricPoly};
use crate::rational;
use crate::sampling::CosineSampler;
use crate::stats::{chunked, derive_seed, Estimate, Moments, CHUNK};

/// Number of contiguous groups used for jackknife error bars.
pub const JACKKNIFE_GROUPS: usize = 32;
/// A Gram pivot must exceed this many standard errors.
pub const PIVOT_SIGMAS: f64 = 5.0;
const HOLDOUT_STREAM: u64 = 0x686f_6c64;

/// The monomial symmetric functions m_λ, λ ∈ Λ_κ(max_weight), in graded order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    kappa: usize,
    max_degree: usize,
    types: Vec<Partition>,
    exponents: Vec<Vec<Vec<u32>>>,
}

impl MonomialBasis {
    pub fn new(kappa: usize, max_weight: u32) -> Result<Self> {
        let types = enumerate_types(kappa, max_weight)?;
        let exponents = types
            .iter()
            .map(|t| {
                monomial_symmetric(t, kappa)
                    .map(|m| m.poly().terms().keys().map(|e| e.0.clone()).collect())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            kappa,
            max_degree: (max_weight / 2) as usize,
            types,
            exponents,
        })
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn types(&self) -> &[Partition] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    /// Writes m_λ(y) for every λ into `out`; `powers` is scratch space.
    pub fn eval_into(&self, y: &[f64], powers: &mut Vec<f64>, out: &mut [f64]) {
        let stride = self.max_degree + 1;
        powers.clear();
        for &v in y {
            let mut p = 1.0;
            for _ in 0..stride {
                powers.push(p);
                p *= v;
            }
        }
        for (o, exps) in out.iter_mut().zip(&self.exponents) {
            *o = exps
                .iter()
                .map(|e| {
                    e.iter()
                        .enumerate()
                        .map(|(i, &d)| powers[i * stride + d as usize])
                        .product::<f64>()
                })
                .sum();
        }
    }
}

/// How inner products are computed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Method {
    MonteCarlo { samples: usize, seed: u64 },
    QuadratureKappa1 { nodes: usize },
}

/// E_Haar over y(E, E₀), backed by stored sample points or quadrature nodes.
#[derive(Clone, Debug)]
pub struct MomentOracle {
    n: usize,
    k: usize,
    method: Method,
    sampler: CosineSampler,
    points: Vec<f64>,
    weights: Vec<f64>,
    cache: BTreeMap<(Partition, Partition), Estimate>,
}

impl MomentOracle {
    /// Monte Carlo about the canonical base point span(e₁..e_k).
    pub fn monte_carlo(n: usize, k: usize, samples: usize, seed: u64) -> Result<Self> {
        Self::with_sampler(CosineSampler::canonical(n, k)?, k, samples, seed)
    }

    /// Monte Carlo about an arbitrary base point, via full frames.
    pub fn monte_carlo_about(base: Subspace, samples: usize, seed: u64) -> Result<Self> {
        let k = base.k();
        Self::with_sampler(CosineSampler::about(base), k, samples, seed)
    }

    fn with_sampler(sampler: CosineSampler, k: usize, samples: usize, seed: u64) -> Result<Self> {
        if samples < 2 {
            return Err(Error::InvalidArgument("need at least 2 samples".into()));
        }
        let points = draw_points(&sampler, samples, seed);
        Ok(Self {
            n: sampler.n(),
            k,
            method: Method::MonteCarlo { samples, seed },
            sampler,
            points,
            weights: Vec::new(),
            cache: BTreeMap::new(),
        })
    }

    /// Gauss quadrature for κ = 1 against the density of y = cos²θ, which is
    /// Beta(1/2, (n−1)/2).
    pub fn quadrature_kappa1(n: usize, k: usize, nodes: usize) -> Result<Self> {
        let sampler = CosineSampler::canonical(n, k)?;
        if sampler.kappa() != 1 {
            return Err(Error::InvalidArgument(format!(
                "quadrature needs min(k, n-k) = 1, got n={n}, k={k}"
            )));
        }
        if nodes == 0 {
            return Err(Error::InvalidArgument("need at least one node".into()));
        }
        let (points, weights) = beta_quadrature(n, nodes);
        Ok(Self {
            n,
            k,
            method: Method::QuadratureKappa1 { nodes },
            sampler,
            points,
            weights,
            cache: BTreeMap::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kappa(&self) -> usize {
        self.sampler.kappa()
    }

    pub fn method(&self) -> &Method {
        &self.method
    }

    pub fn is_exact(&self) -> bool {
        !self.weights.is_empty()
    }

    /// The base point, when it is not span(e₁..e_k).
    pub fn base(&self) -> Option<&Subspace> {
        match &self.sampler {
            CosineSampler::Base(b) => Some(b),
            CosineSampler::Canonical { .. } => None,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len() / self.kappa()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Stored points, κ values per point.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Quadrature weights (empty for Monte Carlo).
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// E[f(y)] with its standard error (zero for quadrature).
    pub fn expectation(&self, f: impl Fn(&[f64]) -> f64 + Sync) -> Estimate {
        let kappa = self.kappa();
        if self.is_exact() {
            let mean = self
                .points
                .chunks(kappa)
                .zip(&self.weights)
                .map(|(y, w)| w * f(y))
                .sum();
            return Estimate {
                mean,
                stderr: 0.0,
                samples: self.weights.len() as u64,
            };
        }
        let parts: Vec<Moments> = self
            .points
            .par_chunks(CHUNK * kappa)
            .map(|c| {
                let mut m = Moments::default();
                for y in c.chunks(kappa) {
                    m.push(f(y));
                }
                m
            })
            .collect();
        let mut total = Moments::default();
        for p in &parts {
            total.merge(p);
        }
        total.estimate()
    }

    /// ⟨p, q⟩ = E_Haar[p(y) q(y)].
    pub fn inner_product(&self, p: &SymmetricPoly, q: &SymmetricPoly) -> Result<Estimate> {
        for s in [p, q] {
            if s.poly().nvars() != self.kappa() {
                return Err(Error::NvarsMismatch {
                    left: s.poly().nvars(),
                    right: self.kappa(),
                });
            }
        }
        let (fp, fq) = (FloatPoly::new(p.poly()), FloatPoly::new(q.poly()));
        Ok(self.expectation(|y| fp.eval(y) * fq.eval(y)))
    }

    /// ⟨m_λ, m_μ⟩, cached.
    pub fn moment(&mut self, lambda: &Partition, mu: &Partition) -> Result<Estimate> {
        let key = if lambda <= mu {
            (lambda.clone(), mu.clone())
        } else {
            (mu.clone(), lambda.clone())
        };
        if let Some(e) = self.cache.get(&key) {
            return Ok(*e);
        }
        let kappa = self.kappa();
        let a = monomial_symmetric(&pad(lambda, kappa)?, kappa)?;
        let b = monomial_symmetric(&pad(mu, kappa)?, kappa)?;
        let e = self.inner_product(&a, &b)?;
        self.cache.insert(key, e);
        Ok(e)
    }

    pub fn cached(&self) -> &BTreeMap<(Partition, Partition), Estimate> {
        &self.cache
    }

    fn fresh_points(&self, seed: u64) -> Vec<f64> {
        draw_points(&self.sampler, self.len(), seed)
    }
}

fn pad(lambda: &Partition, kappa: usize) -> Result<Partition> {
    let mut parts = lambda.parts().to_vec();
    if parts.len() > kappa {
        if parts[kappa..].iter().any(|&p| p != 0) {
            return Err(Error::InvalidArgument(format!(
                "{lambda} has more than {kappa} nonzero parts"
            )));
        }
        parts.truncate(kappa);
    }
    parts.resize(kappa, 0);
    Partition::new(parts)
}

fn draw_points(sampler: &CosineSampler, samples: usize, seed: u64) -> Vec<f64> {
    let kappa = sampler.kappa();
    chunked(samples, seed, |rng, count| {
        let mut out = vec![0.0; count * kappa];
        for y in out.chunks_mut(kappa) {
            sampler.sample(rng, y);
        }
        out
    })
    .concat()
}

/// Gauss nodes and weights for Beta(1/2, (n−1)/2) on [0, 1], by Golub–Welsch
/// on the Jacobi weight (1−x)^a (1+x)^b with x = 2y − 1, a = (n−3)/2, b = −1/2.
fn beta_quadrature(n: usize, nodes: usize) -> (Vec<f64>, Vec<f64>) {
    let a = (n as f64 - 3.0) / 2.0;
    let b = -0.5;
    let ab = a + b;
    let mut t = DMatrix::<f64>::zeros(nodes, nodes);
    for j in 0..nodes {
        let jf = j as f64;
        t[(j, j)] = if j == 0 {
            (b - a) / (ab + 2.0)
        } else {
            (b * b - a * a) / ((2.0 * jf + ab) * (2.0 * jf + ab + 2.0))
        };
        if j + 1 < nodes {
            let i = jf + 1.0;
            let beta = if j == 0 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
            } else {
                4.0 * i * (i + a) * (i + b) * (i + ab)
                    / ((2.0 * i + ab).powi(2) * (2.0 * i + ab + 1.0) * (2.0 * i + ab - 1.0))
            };
            t[(j, j + 1)] = beta.sqrt();
            t[(j + 1, j)] = beta.sqrt();
        }
    }
    let eig = SymmetricEigen::new(t);
    let mut pairs: Vec<(f64, f64)> = (0..nodes)
        .map(|i| {
            let v = eig.eigenvectors[(0, i)];
            ((eig.eigenvalues[i] + 1.0) / 2.0, v * v)
        })
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let total: f64 = pairs.iter().map(|p| p.1).sum();
    pairs.into_iter().map(|(y, w)| (y, w / total)).unzip()
}

/// A polynomial with coefficients rounded to f64 for fast evaluation.
struct FloatPoly(Vec<(Vec<u32>, f64)>);

impl FloatPoly {
    fn new(p: &MultiPoly) -> Self {
        Self(
            p.terms()
                .iter()
                .map(|(m, c)| (m.0.clone(), rational::to_f64(c)))
                .collect(),
        )
    }

    fn eval(&self, y: &[f64]) -> f64 {
        self.0
            .iter()
            .map(|(e, c)| c * e.iter().zip(y).map(|(&d, v)| v.powi(d as i32)).product::<f64>())
            .sum()
    }
}

/// Per-group sums of m_a m_b and (m_a m_b)² over the oracle's points.
struct GroupSums {
    weight: f64,
    sum: Vec<f64>,
    sum_sq: Vec<f64>,
}

fn group_sums(points: &[f64], weights: &[f64], basis: &MonomialBasis, groups: usize) -> Vec<GroupSums> {
    let kappa = basis.kappa();
    let npts = points.len() / kappa;
    let b = basis.len();
    let bounds: Vec<(usize, usize)> = (0..groups)
        .map(|g| (g * npts / groups, (g + 1) * npts / groups))
        .collect();
    bounds
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut s = GroupSums {
                weight: 0.0,
                sum: vec![0.0; b * b],
                sum_sq: vec![0.0; b * b],
            };
            let mut powers = Vec::new();
            let mut m = vec![0.0; b];
            for i in lo..hi {
                basis.eval_into(&points[i * kappa..(i + 1) * kappa], &mut powers, &mut m);
                let w = if weights.is_empty() { 1.0 } else { weights[i] };
                s.weight += w;
                for r in 0..b {
                    for c in 0..=r {
                        let v = m[r] * m[c];
                        s.sum[r * b + c] += w * v;
                        s.sum_sq[r * b + c] += w * v * v;
                    }
                }
            }
            for r in 0..b {
                for c in 0..r {
                    s.sum[c * b + r] = s.sum[r * b + c];
                    s.sum_sq[c * b + r] = s.sum_sq[r * b + c];
                }
            }
            s
        })
        .collect()
}

/// Monic Gram–Schmidt in the inner product `gram` (row-major b×b). Returns
/// unit lower-triangular coefficients (row i = P_i in the m basis) and the
/// pivots ⟨P_i, P_i⟩.
fn monic_gram_schmidt(gram: &[f64], b: usize) -> (Vec<Vec<f64>>, Vec<f64>) {
    let inner = |u: &[f64], v: &[f64]| -> f64 {
        let mut s = 0.0;
        for r in 0..b {
            if u[r] == 0.0 {
                continue;
            }
            for c in 0..b {
                s += u[r] * gram[r * b + c] * v[c];
            }
        }
        s
    };
    let mut coeffs: Vec<Vec<f64>> = Vec::with_capacity(b);
    let mut pivots: Vec<f64> = Vec::with_capacity(b);
    for i in 0..b {
        let mut c = vec![0.0; b];
        c[i] = 1.0;
        for j in 0..i {
            let t = inner(&c, &coeffs[j]) / pivots[j];
            for (x, y) in c.iter_mut().zip(&coeffs[j]) {
                *x -= t * y;
            }
        }
        pivots.push(inner(&c, &c));
        coeffs.push(c);
    }
    (coeffs, pivots)
}

fn jackknife(values: &[f64]) -> f64 {
    let g = values.len() as f64;
    let mean = values.iter().sum::<f64>() / g;
    ((g - 1.0) / g * values.iter().map(|v| (v - mean).powi(2)).sum::<f64>()).sqrt()
}

/// Where a family's inner products came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyProvenance {
    pub method: Method,
    /// Seed of the independent sample used for the reported Gram matrix.
    pub holdout_seed: Option<u64>,
    /// Frame rows of the base point, when it is not span(e₁..e_k).
    pub base: Option<Vec<Vec<f64>>>,
}

/// The generalized Jacobi polynomials P_λ for |λ| ≤ max_weight, monic in
/// their leading m_λ.
#[derive(Clone, Debug)]
pub struct JacobiFamily {
    n: usize,
    k: usize,
    max_weight: u32,
    basis: MonomialBasis,
    coeffs: Vec<Vec<f64>>,
    coeff_stderr: Vec<Vec<f64>>,
    norms: Vec<Estimate>,
    at_one: Vec<Estimate>,
    gram: Vec<Vec<Estimate>>,
    provenance: FamilyProvenance,
}

/// Builds the family by Gram–Schmidt of {m_λ} against `oracle`.
///
/// Monte Carlo error bars are jackknife estimates over contiguous groups of
/// the sample. The reported Gram matrix of the family is measured on an
/// independent sample; its error bar combines the noise of both samples,
/// because the family is exactly orthogonal on the sample it was built from.
pub fn build_family(n: usize, k: usize, max_weight: u32, oracle: &mut MomentOracle) -> Result<JacobiFamily> {
    if oracle.n() != n || oracle.k() != k {
        return Err(Error::InvalidArgument(format!(
            "oracle is for Gr_{}(R^{}), asked for Gr_{k}(R^{n})",
            oracle.k(),
            oracle.n()
        )));
    }
    let kappa = oracle.kappa();
    let basis = MonomialBasis::new(kappa, max_weight)?;
    let b = basis.len();
    let exact = oracle.is_exact();
    let groups = if exact { 1 } else { JACKKNIFE_GROUPS.min(oracle.len()) };
    let sums = group_sums(&oracle.points, &oracle.weights, &basis, groups);
    let total_w: f64 = sums.iter().map(|s| s.weight).sum();
    let mut gram = vec![0.0; b * b];
    let mut gram_sq = vec![0.0; b * b];
    for s in &sums {
        for i in 0..b * b {
            gram[i] += s.sum[i];
            gram_sq[i] += s.sum_sq[i];
        }
    }
    for r in 0..b {
        for c in 0..b {
            let i = r * b + c;
            let est = if exact {
                Estimate {
                    mean: gram[i] / total_w,
                    stderr: 0.0,
                    samples: oracle.len() as u64,
                }
            } else {
                Moments {
                    n: oracle.len() as u64,
                    sum: gram[i],
                    sum_sq: gram_sq[i],
                }
                .estimate()
            };
            let key = (basis.types[r.min(c)].clone(), basis.types[r.max(c)].clone());
            oracle.cache.insert(key, est);
        }
    }
    for v in gram.iter_mut() {
        *v /= total_w;
    }
    let (coeffs, pivots) = monic_gram_schmidt(&gram, b);

    let mut coeff_stderr = vec![vec![0.0; b]; b];
    let mut pivot_stderr = vec![0.0; b];
    let mut one_stderr = vec![0.0; b];
    if !exact {
        let loo: Vec<(Vec<Vec<f64>>, Vec<f64>)> = sums
            .iter()
            .map(|s| {
                let w = total_w - s.weight;
                let g: Vec<f64> = (0..b * b)
                    .map(|i| (gram[i] * total_w - s.sum[i]) / w)
                    .collect();
                monic_gram_schmidt(&g, b)
            })
            .collect();
        let ones = basis_at_one(&basis);
        for i in 0..b {
            for j in 0..=i {
                let vals: Vec<f64> = loo.iter().map(|(c, _)| c[i][j]).collect();
                coeff_stderr[i][j] = jackknife(&vals);
            }
            let piv: Vec<f64> = loo.iter().map(|(_, p)| p[i]).collect();
            pivot_stderr[i] = jackknife(&piv);
            let at1: Vec<f64> = loo.iter().map(|(c, _)| dot(&c[i], &ones)).collect();
            one_stderr[i] = jackknife(&at1);
        }
    }
    for i in 0..b {
        let fails = if exact {
            pivots[i] <= 0.0
        } else {
            pivots[i] < PIVOT_SIGMAS * pivot_stderr[i] || pivots[i] <= 0.0
        };
        if fails {
            return Err(Error::InsufficientSamples {
                partition: basis.types[i].to_string(),
                pivot: pivots[i],
                stderr: pivot_stderr[i],
            });
        }
    }
    let ones = basis_at_one(&basis);
    let norms = (0..b)
        .map(|i| Estimate {
            mean: pivots[i],
            stderr: pivot_stderr[i],
            samples: oracle.len() as u64,
        })
        .collect();
    let at_one = (0..b)
        .map(|i| Estimate {
            mean: dot(&coeffs[i], &ones),
            stderr: one_stderr[i],
            samples: oracle.len() as u64,
        })
        .collect();

    let (holdout_seed, family_gram) = match oracle.method {
        Method::MonteCarlo { seed, .. } => {
            let hs = derive_seed(seed, HOLDOUT_STREAM);
            let held = oracle.fresh_points(hs);
            let train = family_moments(&oracle.points, &basis, &coeffs);
            let test = family_moments(&held, &basis, &coeffs);
            let g = (0..b)
                .map(|r| {
                    (0..b)
                        .map(|c| {
                            let t = test[r * b + c].estimate();
                            let s = train[r * b + c].stderr();
                            Estimate {
                                mean: t.mean,
                                stderr: (t.stderr * t.stderr + s * s).sqrt(),
                                samples: t.samples,
                            }
                        })
                        .collect()
                })
                .collect();
            (Some(hs), g)
        }
        Method::QuadratureKappa1 { .. } => {
            let g = (0..b)
                .map(|r| {
                    (0..b)
                        .map(|c| Estimate {
                            mean: quad_form(&coeffs[r], &gram, &coeffs[c]),
                            stderr: 0.0,
                            samples: oracle.len() as u64,
                        })
                        .collect()
                })
                .collect();
            (None, g)
        }
    };
    let base = oracle.base().map(|s| {
        let f = s.frame();
        (0..f.nrows()).map(|r| f.row(r).iter().copied().collect()).collect()
    });
    Ok(JacobiFamily {
        n,
        k,
        max_weight,
        basis,
        coeffs,
        coeff_stderr,
        norms,
        at_one,
        gram: family_gram,
        provenance: FamilyProvenance {
            method: oracle.method.clone(),
            holdout_seed,
            base,
        },
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn quad_form(u: &[f64], g: &[f64], v: &[f64]) -> f64 {
    let b = u.len();
    (0..b)
        .map(|r| u[r] * (0..b).map(|c| g[r * b + c] * v[c]).sum::<f64>())
        .sum()
}

fn basis_at_one(basis: &MonomialBasis) -> Vec<f64> {
    let mut out = vec![0.0; basis.len()];
    basis.eval_into(&vec![1.0; basis.kappa()], &mut Vec::new(), &mut out);
    out
}

/// Moments of P_r P_c over `points`, merged over chunks in order.
fn family_moments(points: &[f64], basis: &MonomialBasis, coeffs: &[Vec<f64>]) -> Vec<Moments> {
    let kappa = basis.kappa();
    let b = basis.len();
    let parts: Vec<Vec<Moments>> = points
        .par_chunks(CHUNK * kappa)
        .map(|chunk| {
            let mut acc = vec![Moments::default(); b * b];
            let mut powers = Vec::new();
            let mut m = vec![0.0; b];
            let mut p = vec![0.0; b];
            for y in chunk.chunks(kappa) {
                basis.eval_into(y, &mut powers, &mut m);
                for (pi, c) in p.iter_mut().zip(coeffs) {
                    *pi = dot(c, &m);
                }
                for r in 0..b {
                    for c in 0..b {
                        acc[r * b + c].push(p[r] * p[c]);
                    }
                }
            }
            acc
        })
        .collect();
    let mut total = vec![Moments::default(); b * b];
    for part in &parts {
        for (t, x) in total.iter_mut().zip(part) {
            t.merge(x);
        }
    }
    total
}

/// Evaluates every P_λ of a family at a point, reusing scratch buffers.
pub struct FamilyEvaluator<'a> {
    family: &'a JacobiFamily,
    powers: Vec<f64>,
    m: Vec<f64>,
}

impl FamilyEvaluator<'_> {
    pub fn eval_all(&mut self, y: &[f64], out: &mut [f64]) {
        self.family.basis.eval_into(y, &mut self.powers, &mut self.m);
        for (o, c) in out.iter_mut().zip(&self.family.coeffs) {
            *o = dot(c, &self.m);
        }
    }
}

impl JacobiFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn kappa(&self) -> usize {
        self.basis.kappa()
    }

    pub fn max_weight(&self) -> u32 {
        self.max_weight
    }

    pub fn types(&self) -> &[Partition] {
        self.basis.types()
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn provenance(&self) -> &FamilyProvenance {
        &self.provenance
    }

    pub fn index_of(&self, lambda: &Partition) -> Result<usize> {
        let l = pad(lambda, self.kappa())?;
        self.basis
            .types
            .binary_search(&l)
            .map_err(|_| Error::InvalidArgument(format!("{lambda} is not in the family")))
    }

    /// Coefficients of P_λ in the m_μ basis, in family order.
    pub fn coefficients(&self, lambda: &Partition) -> Result<&[f64]> {
        Ok(&self.coeffs[self.index_of(lambda)?])
    }

    pub fn coefficient_stderr(&self, lambda: &Partition) -> Result<&[f64]> {
        Ok(&self.coeff_stderr[self.index_of(lambda)?])
    }

    /// ‖P_λ‖² on the construction sample.
    pub fn norm_sq(&self, lambda: &Partition) -> Result<Estimate> {
        Ok(self.norms[self.index_of(lambda)?])
    }

    /// P_λ(1, …, 1) = Z_λ(E₀), with its construction error.
    pub fn value_at_one(&self, lambda: &Partition) -> Result<Estimate> {
        Ok(self.at_one[self.index_of(lambda)?])
    }

    /// Gram matrix ⟨P_λ, P_μ⟩ in family order (independent sample for Monte
    /// Carlo families).
    pub fn gram(&self) -> &[Vec<Estimate>] {
        &self.gram
    }

    /// Off-diagonal Gram entries further than `sigmas` error bars from zero,
    /// ignoring deviations below `floor` (for exact oracles).
    pub fn orthogonality_violations(&self, sigmas: f64, floor: f64) -> Vec<(Partition, Partition, Estimate)> {
        let mut out = Vec::new();
        for r in 0..self.len() {
            for c in 0..r {
                let e = self.gram[r][c];
                if e.mean.abs() > (sigmas * e.stderr).max(floor) {
                    out.push((self.basis.types[r].clone(), self.basis.types[c].clone(), e));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, lambda: &Partition, y: &[f64]) -> Result<f64> {
        if y.len() != self.kappa() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} cosines, got {}",
                self.kappa(),
                y.len()
            )));
        }
        let i = self.index_of(lambda)?;
        let mut m = vec![0.0; self.len()];
        self.basis.eval_into(y, &mut Vec::new(), &mut m);
        Ok(dot(&self.coeffs[i], &m))
    }

    pub fn evaluator(&self) -> FamilyEvaluator<'_> {
        FamilyEvaluator {
            family: self,
            powers: Vec::new(),
            m: vec![0.0; self.len()],
        }
    }

    /// P_λ as an exact symmetric polynomial (each float coefficient converted
    /// exactly).
    pub fn poly(&self, lambda: &Partition) -> Result<SymmetricPoly> {
        let i = self.index_of(lambda)?;
        let kappa = self.kappa();
        let mut p = MultiPoly::zero(kappa);
        for (j, &c) in self.coeffs[i].iter().enumerate() {
            if c != 0.0 {
                let m = monomial_symmetric(&self.basis.types[j], kappa)?;
                p = p.add(&m.poly().scale(&rational::from_f64(c)))?;
            }
        }
        SymmetricPoly::new(p)
    }

    /// The base point E₀ of the family.
    pub fn base(&self) -> Result<Subspace> {
        match &self.provenance.base {
            None => Subspace::canonical(self.n, self.k),
            Some(rows) => {
                let n = rows.len();
                let k = rows.first().map_or(0, Vec::len);
                Subspace::new(DMatrix::from_fn(n, k, |r, c| rows[r][c]))
            }
        }
    }

    pub fn to_json(&self) -> Result<String> {
        let file = FamilyFile {
            n: self.n,
            k: self.k,
            kappa: self.kappa(),
            max_weight: self.max_weight,
            provenance: self.provenance.clone(),
            polys: (0..self.len())
                .map(|i| {
                    Ok(PolyEntry {
                        partition: self.basis.types[i].clone(),
                        poly: self.poly(&self.basis.types[i])?.into_poly(),
                        coefficients: self.coeffs[i][..=i].to_vec(),
                        coefficient_stderr: self.coeff_stderr[i][..=i].to_vec(),
                        norm_sq: self.norms[i],
                        value_at_one: self.at_one[i],
                    })
                })
                .collect::<Result<_>>()?,
            gram: self.gram.clone(),
        };
        Ok(serde_json::to_string_pretty(&file)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let file: FamilyFile = serde_json::from_str(s)?;
        let basis = MonomialBasis::new(file.kappa, file.max_weight)?;
        let b = basis.len();
        if file.polys.len() != b || file.gram.len() != b {
            return Err(Error::Parse(format!("expected {b} polynomials")));
        }
        let widen = |v: &[f64]| {
            let mut w = v.to_vec();
            w.resize(b, 0.0);
            w
        };
        for (p, t) in file.polys.iter().zip(basis.types()) {
            if &p.partition != t {
                return Err(Error::Parse(format!("expected {t}, found {}", p.partition)));
            }
        }
        Ok(Self {
            n: file.n,
            k: file.k,
            max_weight: file.max_weight,
            coeffs: file.polys.iter().map(|p| widen(&p.coefficients)).collect(),
            coeff_stderr: file.polys.iter().map(|p| widen(&p.coefficient_stderr)).collect(),
            norms: file.polys.iter().map(|p| p.norm_sq).collect(),
            at_one: file.polys.iter().map(|p| p.value_at_one).collect(),
            basis,
            gram: file.gram,
            provenance: file.provenance,
        })
    }
}

#[derive(Serialize, Deserialize)]
struct PolyEntry {
    partition: Partition,
    poly: MultiPoly,
    coefficients: Vec<f64>,
    coefficient_stderr: Vec<f64>,
    norm_sq: Estimate,
    value_at_one: Estimate,
}

#[derive(Serialize, Deserialize)]
struct FamilyFile {
    n: usize,
    k: usize,
    kappa: usize,
    max_weight: u32,
    provenance: FamilyProvenance,
    polys: Vec<PolyEntry>,
    gram: Vec<Vec<Estimate>>,
}

/// Z_λ(E) = P_λ(y(E, E₀)).
pub fn evaluate_zonal(family: &JacobiFamily, lambda: &Partition, e: &Subspace) -> Result<f64> {
    let y = principal_cosines(e, &family.base()?)?;
    family.evaluate(lambda, y.values())
}

/// Monte Carlo estimate of ⟨f, Z_λ⟩ = E_Haar[f(E) Z_λ(E)].
pub fn spectral_component(
    f: impl Fn(&Subspace) -> f64 + Sync,
    lambda: &Partition,
    family: &JacobiFamily,
    samples: usize,
    seed: u64,
) -> Result<Estimate> {
    let base = family.base()?;
    let index = family.index_of(lambda)?;
    let (n, k) = (family.n(), family.k());
    let parts = chunked(samples, seed, |rng, count| -> Result<Moments> {
        let mut m = Moments::default();
        let mut vals = vec![0.0; family.len()];
        let mut ev = family.evaluator();
        for _ in 0..count {
            let e = haar_sample(n, k, rng)?;
            let y = principal_cosines(&e, &base)?;
            ev.eval_all(y.values(), &mut vals);
            m.push(f(&e) * vals[index]);
        }
        Ok(m)
    });
    let mut total = Moments::default();
    for p in parts {
        total.merge(&p?);
    }
    Ok(total.estimate())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// E[y^j] for y ~ Beta(1/2, (n−1)/2).
    fn beta_moment(n: usize, j: u32) -> f64 {
        (0..j).map(|i| (0.5 + i as f64) / (n as f64 / 2.0 + i as f64)).product()
    }

    #[test]
    fn quadrature_reproduces_beta_moments() {
        for n in [2, 3, 4, 7] {
            let o = MomentOracle::quadrature_kappa1(n, 1, 12).unwrap();
            for j in 0..=20 {
                let e = o.expectation(|y| y[0].powi(j as i32));
                assert!((e.mean - beta_moment(n, j)).abs() < 1e-13, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn one_angle_law_agrees_with_sampling() {
        use crate::stats::{ks_one_sample, ks_two_sample, stream_rng};
        use rand::Rng;
        use rand_distr::Beta;
        for n in [3, 4, 6] {
            let mc = MomentOracle::monte_carlo(n, 1, 50_000, 9).unwrap();
            let law = Beta::new(0.5, (n as f64 - 1.0) / 2.0).unwrap();
            let mut rng = stream_rng(10, 0);
            let beta: Vec<f64> = (0..50_000).map(|_| rng.sample(law)).collect();
            let ks = ks_two_sample(mc.points(), &beta);
            assert!(ks.p_value > 0.01, "n={n}: {ks:?}");
        }
        // n = 3 has the closed form F(y) = √y
        let mc = MomentOracle::monte_carlo(3, 1, 50_000, 11).unwrap();
        let ks = ks_one_sample(mc.points(), |y| y.sqrt());
        assert!(ks.p_value > 0.01, "{ks:?}");
    }

    #[test]
    fn trivial_inner_products() {
        let o = MomentOracle::monte_carlo(4, 1, 100_000, 5).unwrap();
        let one = SymmetricPoly::new(MultiPoly::one(1)).unwrap();
        let e = o.inner_product(&one, &one).unwrap();
        assert_eq!(e.mean, 1.0);
        assert_eq!(e.stderr, 0.0);
        let y = SymmetricPoly::new(MultiPoly::var(1, 0)).unwrap();
        assert!(o.inner_product(&y, &one).unwrap().within_sigmas(0.25, 3.0));
    }

    #[test]
    fn first_polynomials_kappa1() {
        let mut q = MomentOracle::quadrature_kappa1(4, 1, 16).unwrap();
        let f = build_family(4, 1, 8, &mut q).unwrap();
        assert_eq!(f.coefficients(&part(&[0])).unwrap()[0], 1.0);
        let c = f.coefficients(&part(&[2])).unwrap();
        assert!((c[0] + 0.25).abs() < 1e-14 && c[1] == 1.0);
        assert!(f.orthogonality_violations(3.0, 1e-12).is_empty());
        let y0 = f.evaluate(&part(&[2]), &[0.0]).unwrap();
        assert!((y0 + 0.25).abs() < 1e-14);
    }

    #[test]
    fn complement_grassmannian_uses_kappa() {
        let mut q = MomentOracle::quadrature_kappa1(4, 3, 8).unwrap();
        let f = build_family(4, 3, 4, &mut q).unwrap();
        assert_eq!(f.kappa(), 1);
        assert!(MomentOracle::quadrature_kappa1(5, 2, 8).is_err());
    }

    #[test]
    fn pivot_guard_trips_on_tiny_samples() {
        let mut o = MomentOracle::monte_carlo(5, 2, 200, 1).unwrap();
        assert!(matches!(
            build_family(5, 2, 12, &mut o),
            Err(Error::InsufficientSamples { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let mut o = MomentOracle::monte_carlo(5, 2, 40_000, 3).unwrap();
        let f = build_family(5, 2, 4, &mut o).unwrap();
        let s = f.to_json().unwrap();
        let g = JacobiFamily::from_json(&s).unwrap();
        assert_eq!(g.to_json().unwrap(), s);
        let l = part(&[2, 2]);
        assert_eq!(f.evaluate(&l, &[0.3, 0.1]).unwrap(), g.evaluate(&l, &[0.3, 0.1]).unwrap());
    }

    #[test]
    fn zonal_at_base_point() {
        let mut q = MomentOracle::quadrature_kappa1(3, 1, 8).unwrap();
        let f = build_family(3, 1, 6, &mut q).unwrap();
        let base = Subspace::canonical(3, 1).unwrap();
        for l in f.types().to_vec() {
            let z = evaluate_zonal(&f, &l, &base).unwrap();
            assert!((z - f.value_at_one(&l).unwrap().mean).abs() < 1e-12);
        }
        let z0 = evaluate_zonal(&f, &part(&[0]), &Subspace::canonical(3, 1).unwrap()).unwrap();
        assert_eq!(z0, 1.0);
    }
}
