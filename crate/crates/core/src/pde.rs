//! Polynomial kernels of linear differential operators with polynomial
//! coefficients, D = Σ c_{αβ} x^β ∂^α, computed exactly.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::{integerize, ExactMatrix, SparseEchelon};
use crate::poly::{dim_p, falling_factorial, monomials_up_to, Monomial, MultiPoly};
use crate::rational::{self, Rational};
use crate::stats::stream_rng;

/// A differential operator on ℂ[x₁..x_k]; terms are keyed by (α, β) for
/// c x^β ∂^α.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffOp {
    k: usize,
    terms: BTreeMap<(Vec<u32>, Vec<u32>), Rational>,
}

impl DiffOp {
    /// Builds an operator from (α, β, c) triples, rejecting repeated keys and
    /// zero coefficients.
    pub fn new(k: usize, terms: impl IntoIterator<Item = (Vec<u32>, Vec<u32>, Rational)>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        let mut map = BTreeMap::new();
        for (a, b, c) in terms {
            if a.len() != k || b.len() != k {
                return Err(Error::DimensionMismatch(format!(
                    "multi-indices must have length {k}"
                )));
            }
            if c.is_zero() {
                return Err(Error::InvalidArgument("zero coefficient".into()));
            }
            if map.insert((a.clone(), b.clone()), c).is_some() {
                return Err(Error::InvalidArgument(format!(
                    "repeated term dx={a:?} x={b:?}"
                )));
            }
        }
        Ok(Self { k, terms: map })
    }

    /// Sums like terms and drops zeros, for internal construction.
    fn collect(k: usize, terms: impl IntoIterator<Item = (Vec<u32>, Vec<u32>, Rational)>) -> Self {
        let mut map: BTreeMap<(Vec<u32>, Vec<u32>), Rational> = BTreeMap::new();
        for (a, b, c) in terms {
            *map.entry((a, b)).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { k, terms: map }
    }

    /// ∂_i.
    pub fn partial(k: usize, i: usize) -> Self {
        let mut a = vec![0; k];
        a[i] = 1;
        Self::collect(k, [(a, vec![0; k], Rational::one())])
    }

    /// Σ x_i ∂_i − d.
    pub fn euler(k: usize, d: i64) -> Self {
        let mut terms: Vec<_> = (0..k)
            .map(|i| {
                let mut e = vec![0; k];
                e[i] = 1;
                (e.clone(), e, Rational::one())
            })
            .collect();
        terms.push((vec![0; k], vec![0; k], rational::int(-d)));
        Self::collect(k, terms)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// (α, β, c) for each term c x^β ∂^α.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &[u32], &Rational)> {
        self.terms.iter().map(|((a, b), c)| (a.as_slice(), b.as_slice(), c))
    }

    /// N = 1 + max ‖α‖_∞, so every α lies in {‖α‖_∞ ≤ N − 1}.
    pub fn order(&self) -> u32 {
        1 + self
            .terms
            .keys()
            .flat_map(|(a, _)| a.iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// M = max(|β| − |α|, 0), so D maps P_m into P_{m+M}.
    pub fn degree_shift(&self) -> u32 {
        self.terms
            .keys()
            .map(|(a, b)| {
                let (sa, sb): (u32, u32) = (a.iter().sum(), b.iter().sum());
                sb.saturating_sub(sa)
            })
            .max()
            .unwrap_or(0)
    }

    /// Every term has α ≥ β componentwise.
    pub fn is_reduced(&self) -> bool {
        self.terms
            .keys()
            .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x >= y))
    }

    /// ∂_i ∘ self, by ∂_i x^β ∂^α = β_i x^{β−e_i} ∂^α + x^β ∂^{α+e_i}.
    pub fn compose_partial(&self, i: usize) -> Self {
        let mut out = Vec::new();
        for ((a, b), c) in &self.terms {
            if b[i] > 0 {
                let mut b2 = b.clone();
                b2[i] -= 1;
                out.push((a.clone(), b2, c * Rational::from_integer(BigInt::from(b[i]))));
            }
            let mut a2 = a.clone();
            a2[i] += 1;
            out.push((a2, b.clone(), c.clone()));
        }
        Self::collect(self.k, out)
    }

    /// SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        crate::config::digest_hex(serde_json::to_string(self).expect("serializable").as_bytes())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

#[derive(Serialize, Deserialize)]
struct TermFile {
    dx: Vec<u32>,
    x: Vec<u32>,
    #[serde(with = "rational::serde_str")]
    c: Rational,
}

#[derive(Serialize, Deserialize)]
struct OpFile {
    k: usize,
    terms: Vec<TermFile>,
}

impl Serialize for DiffOp {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        OpFile {
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| TermFile {
                    dx: a.clone(),
                    x: b.clone(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for DiffOp {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let f = OpFile::deserialize(d)?;
        DiffOp::new(f.k, f.terms.into_iter().map(|t| (t.dx, t.x, t.c))).map_err(serde::de::Error::custom)
    }
}

/// D(x^γ) as (monomial, coefficient) pairs: Σ c · γ!/(γ−α)! · x^{γ−α+β}.
fn apply_monomial(d: &DiffOp, gamma: &[u32]) -> BTreeMap<Monomial, Rational> {
    let mut out: BTreeMap<Monomial, Rational> = BTreeMap::new();
    for ((a, b), c) in &d.terms {
        if gamma.iter().zip(a).any(|(g, x)| g < x) {
            continue;
        }
        let mut f = BigInt::one();
        for (&g, &x) in gamma.iter().zip(a) {
            f *= falling_factorial(g, x);
        }
        let e: Vec<u32> = (0..d.k).map(|i| gamma[i] - a[i] + b[i]).collect();
        *out.entry(Monomial(e)).or_insert_with(Rational::zero) += c * Rational::from_integer(f);
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// D p, exactly.
pub fn apply(d: &DiffOp, p: &MultiPoly) -> Result<MultiPoly> {
    if p.nvars() != d.k {
        return Err(Error::NvarsMismatch {
            left: d.k,
            right: p.nvars(),
        });
    }
    let mut out = MultiPoly::zero(d.k);
    for (m, c) in p.terms() {
        let img = apply_monomial(d, &m.0);
        let part = MultiPoly::from_terms(d.k, img.into_iter().map(|(m, v)| (m.0, v * c)))?;
        out = out.add(&part)?;
    }
    Ok(out)
}

/// dim(Ker D ∩ P_m) for every m in 0..=m_max.
///
/// The columns D(x^γ) are fed to one fraction-free echelon form in order of
/// increasing |γ|; the rank after all |γ| ≤ m is the rank of D_m.
pub fn kernel_dims(d: &DiffOp, m_max: u32) -> Vec<BigInt> {
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut echelon = SparseEchelon::new();
    let mut out = Vec::with_capacity(m_max as usize + 1);
    let mut columns = monomials_up_to(d.k, m_max).into_iter().peekable();
    for m in 0..=m_max {
        while let Some(g) = columns.next_if(|g| g.degree() <= m) {
            let img = apply_monomial(d, &g.0);
            let v: BTreeMap<usize, Rational> = img
                .into_iter()
                .map(|(mono, c)| {
                    let next = index.len();
                    (*index.entry(mono).or_insert(next), c)
                })
                .collect();
            if !v.is_empty() {
                echelon.insert(integerize(&v));
            }
        }
        out.push(dim_p(m as u64, d.k as u64) - BigInt::from(echelon.rank()));
    }
    out
}

pub fn kernel_dim(d: &DiffOp, m: u32) -> BigInt {
    kernel_dims(d, m).pop().expect("m_max + 1 entries")
}

/// The matrix of D_m : P_m → P_{m+M} in graded monomial bases.
pub fn assemble(d: &DiffOp, m: u32) -> ExactMatrix {
    let cols = monomials_up_to(d.k, m);
    let rows = monomials_up_to(d.k, m + d.degree_shift());
    let row_index: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, r)| (r, i)).collect();
    let mut mat = ExactMatrix::zeros(rows.len(), cols.len());
    for (j, g) in cols.iter().enumerate() {
        for (mono, c) in apply_monomial(d, &g.0) {
            mat[(row_index[&mono], j)] = c;
        }
    }
    mat
}

/// Composes D with partial derivatives until every term has α ≥ β. Returns
/// the reduced operator and the multi-index of the derivatives applied.
pub fn reduce_operator(d: &DiffOp) -> Result<(DiffOp, Vec<u32>)> {
    if d.is_zero() {
        return Err(Error::InvalidArgument("zero operator".into()));
    }
    let mut cur = d.clone();
    let mut applied = vec![0; d.k];
    while let Some(i) = (0..d.k).find(|&i| cur.terms.keys().any(|(a, b)| b[i] > a[i])) {
        cur = cur.compose_partial(i);
        applied[i] += 1;
    }
    Ok((cur, applied))
}

fn inv_factorial_diff(g: &[u32], a: &[u32]) -> Option<Rational> {
    let mut f = BigInt::one();
    for (&x, &y) in g.iter().zip(a) {
        if x < y {
            return None;
        }
        f *= crate::poly::factorial(x - y);
    }
    Some(Rational::new(BigInt::one(), f))
}

/// μ_σγ = Σ_{α−β=γ−σ} c_{αβ}/(γ−α)!, with 1/r! = 0 for negative r.
fn mu_entry(d: &DiffOp, sigma: &[u32], gamma: &[u32]) -> Rational {
    let mut s = Rational::zero();
    for ((a, b), c) in &d.terms {
        let matches = (0..d.k).all(|i| a[i] as i64 - b[i] as i64 == gamma[i] as i64 - sigma[i] as i64);
        if matches {
            if let Some(w) = inv_factorial_diff(gamma, a) {
                s += c * w;
            }
        }
    }
    s
}

/// The μ-matrix of a reduced operator on P_m, rows σ and columns γ in
/// graded order. A vector (a_γ γ!) lies in its kernel iff Σ a_γ x^γ ∈ Ker D.
pub fn mu_matrix(d: &DiffOp, m: u32) -> Result<ExactMatrix> {
    if !d.is_reduced() {
        return Err(Error::NotReduced(d.to_json()));
    }
    let basis = monomials_up_to(d.k, m);
    Ok(ExactMatrix::from_fn(basis.len(), basis.len(), |r, c| {
        mu_entry(d, &basis[r].0, &basis[c].0)
    }))
}

/// dim P_m − rank μ.
pub fn mu_kernel_dim(d: &DiffOp, m: u32) -> Result<BigInt> {
    let mu = mu_matrix(d, m)?;
    Ok(BigInt::from(mu.cols() - mu.rank()))
}

/// μ_σγ ≠ 0 only when σ ≤ γ componentwise.
pub fn mu_is_triangular(d: &DiffOp, m: u32) -> Result<bool> {
    let mu = mu_matrix(d, m)?;
    let basis = monomials_up_to(d.k, m);
    for r in 0..basis.len() {
        for c in 0..basis.len() {
            if !mu[(r, c)].is_zero() && !basis[c].dominates(&basis[r]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// All j ∈ ℕ^k (entries ≥ 1) with Σ j ≤ m′.
fn block_indices(k: usize, m_prime: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let remaining = (k - cur.len() - 1) as u32;
        for j in 1..=left.saturating_sub(remaining) {
            cur.push(j);
            rec(k, left - j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if m_prime as usize >= k {
        rec(k, m_prime, &mut Vec::new(), &mut out);
    }
    out
}

fn box_points(lo: &[u32], hi: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for (&l, &h) in lo.iter().zip(hi) {
        out = out
            .into_iter()
            .flat_map(|p| {
                (l..=h).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out
}

/// Rank of the block (μ_σγ) with σ ∈ I_j and γ ∈ I′_j for each j ∈ J(m′),
/// where I_j = Π[2(j_i−1)N, 2j_iN−1] and I′_j = Π[2j_iN−N, 2j_iN−1].
pub fn block_ranks(d: &DiffOp, m_prime: u32) -> Result<Vec<(Vec<u32>, usize)>> {
    if !d.is_reduced() {
        return Err(Error::NotReduced(d.to_json()));
    }
    let n = d.order();
    Ok(block_indices(d.k, m_prime)
        .into_iter()
        .map(|j| {
            let lo: Vec<u32> = j.iter().map(|&x| 2 * (x - 1) * n).collect();
            let hi: Vec<u32> = j.iter().map(|&x| 2 * x * n - 1).collect();
            let lo2: Vec<u32> = j.iter().map(|&x| 2 * x * n - n).collect();
            let rows = box_points(&lo, &hi);
            let cols = box_points(&lo2, &hi);
            let block = ExactMatrix::from_fn(rows.len(), cols.len(), |r, c| mu_entry(d, &rows[r], &cols[c]));
            (j, block.rank())
        })
        .collect())
}

/// Exact kernel dimensions with a log–log growth fit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelReport {
    pub operator_digest: String,
    pub k: usize,
    pub rows: Vec<KernelRow>,
    /// Least-squares slope of log dim Ker against log m over rows with
    /// m ≥ 1 and dim Ker ≥ 1; absent with fewer than two such rows.
    pub slope: Option<f64>,
    /// slope ± 2 standard errors of the fit.
    pub band: Option<(f64, f64)>,
    pub threshold: f64,
    pub violation: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelRow {
    pub m: u32,
    #[serde(with = "bigint_str")]
    pub dim_p: BigInt,
    #[serde(with = "bigint_str")]
    pub dim_ker: BigInt,
}

mod bigint_str {
    use num_bigint::BigInt;
    use serde::Serializer;

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }
}

/// Slack added to k − 1 before a fitted exponent counts as too fast.
pub const GROWTH_SLACK: f64 = 0.25;

/// Fits the growth of dim(Ker D ∩ P_m) over `m_list` (at least five
/// increasing values).
pub fn growth_fit(d: &DiffOp, m_list: &[u32]) -> Result<KernelReport> {
    if m_list.len() < 5 || m_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument("need at least 5 increasing m values".into()));
    }
    let dims = kernel_dims(d, *m_list.last().expect("nonempty"));
    let rows: Vec<KernelRow> = m_list
        .iter()
        .map(|&m| KernelRow {
            m,
            dim_p: dim_p(m as u64, d.k as u64),
            dim_ker: dims[m as usize].clone(),
        })
        .collect();
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .filter(|r| r.m >= 1 && r.dim_ker.is_positive())
        .map(|r| ((r.m as f64).ln(), r.dim_ker.to_f64().expect("finite").ln()))
        .collect();
    let (slope, band) = match fit_line(&pts) {
        Some((s, se)) => (Some(s), Some((s - 2.0 * se, s + 2.0 * se))),
        None => (None, None),
    };
    let threshold = d.k as f64 - 1.0 + GROWTH_SLACK;
    Ok(KernelReport {
        operator_digest: d.digest(),
        k: d.k,
        violation: slope.is_some_and(|s| s > threshold),
        rows,
        slope,
        band,
        threshold,
    })
}

/// Least-squares slope and its standard error (zero with two points).
fn fit_line(pts: &[(f64, f64)]) -> Option<(f64, f64)> {
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let se = if pts.len() > 2 {
        let rss: f64 = pts
            .iter()
            .map(|p| (p.1 - my - slope * (p.0 - mx)).powi(2))
            .sum();
        (rss / (n - 2.0) / sxx).sqrt()
    } else {
        0.0
    };
    Some((slope, se))
}

/// One m = 2Nm′ of the density check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityRow {
    pub m_prime: u32,
    pub m: u32,
    #[serde(with = "rational::serde_str")]
    pub density: Rational,
    /// 1 − C(m′, k)/dim P_m: the finite-m bound from rank μ ≥ |J(m′)|.
    #[serde(with = "rational::serde_str")]
    pub block_bound: Rational,
    pub within_block_bound: bool,
    pub within_limit_bound: bool,
}

/// Kernel densities along m = 2Nm′ against 1 − 1/(2N)^k, with N the order
/// of the reduced operator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DensityBoundReport {
    pub operator_digest: String,
    pub k: usize,
    pub order: u32,
    #[serde(with = "rational::serde_str")]
    pub limit_bound: Rational,
    pub rows: Vec<DensityRow>,
    /// Every computed density is at most the limit bound.
    pub holds_at_all_m: bool,
    /// The densities do not increase along the computed m (consistent with
    /// a limsup below the bound when they also sit under it at the end).
    pub trend_consistent: bool,
}

fn binomial(n: u64, r: u64) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn density_bound_check(d: &DiffOp, m_primes: &[u32]) -> Result<DensityBoundReport> {
    let (reduced, _) = reduce_operator(d)?;
    let n = reduced.order();
    let k = d.k;
    let limit_bound = Rational::one() - Rational::new(BigInt::one(), BigInt::from(2 * n).pow(k as u32));
    let m_max = m_primes.iter().map(|&mp| 2 * n * mp).max().unwrap_or(0);
    let dims = kernel_dims(d, m_max);
    let rows: Vec<DensityRow> = m_primes
        .iter()
        .map(|&mp| {
            let m = 2 * n * mp;
            let dp = dim_p(m as u64, k as u64);
            let density = Rational::new(dims[m as usize].clone(), dp.clone());
            let block_bound = Rational::one() - Rational::new(binomial(mp as u64, k as u64), dp);
            DensityRow {
                m_prime: mp,
                m,
                within_block_bound: density <= block_bound,
                within_limit_bound: density <= limit_bound,
                density,
                block_bound,
            }
        })
        .collect();
    Ok(DensityBoundReport {
        operator_digest: d.digest(),
        k,
        order: n,
        holds_at_all_m: rows.iter().all(|r| r.within_limit_bound),
        trend_consistent: rows.windows(2).all(|w| w[1].density <= w[0].density)
            && rows.last().is_none_or(|r| r.within_limit_bound),
        limit_bound,
        rows,
    })
}

/// A seeded random operator: up to `max_terms` terms with coefficients in
/// {−3..3}∖{0}, ‖α‖_∞ < `order`, and |β_i| ≤ `max_x`. With `reduced`,
/// β ≤ α is enforced instead of the `max_x` bound.
pub fn random_operator(k: usize, order: u32, max_x: u32, max_terms: usize, reduced: bool, seed: u64) -> DiffOp {
    let mut rng = stream_rng(seed, 0x6f70);
    loop {
        let count = rng.random_range(1..=max_terms.max(1));
        let terms = (0..count).map(|_| {
            let a: Vec<u32> = (0..k).map(|_| rng.random_range(0..order.max(1))).collect();
            let b: Vec<u32> = if reduced {
                a.iter().map(|&x| rng.random_range(0..=x)).collect()
            } else {
                (0..k).map(|_| rng.random_range(0..=max_x)).collect()
            };
            let mut c = rng.random_range(1..=3i64);
            if rng.random_bool(0.5) {
                c = -c;
            }
            (a, b, rational::int(c))
        });
        let d = DiffOp::collect(k, terms.collect::<Vec<_>>());
        if !d.is_zero() {
            return d;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(k: usize, terms: &[(&[u32], &[u32], i64)]) -> DiffOp {
        DiffOp::new(k, terms.iter().map(|(a, b, c)| (a.to_vec(), b.to_vec(), rational::int(*c)))).unwrap()
    }

    fn x(k: usize, e: &[u32]) -> MultiPoly {
        MultiPoly::from_terms(k, [(e.to_vec(), rational::int(1))]).unwrap()
    }

    #[test]
    fn apply_examples() {
        let d = DiffOp::partial(1, 0);
        assert_eq!(apply(&d, &x(1, &[2])).unwrap(), x(1, &[1]).scale(&rational::int(2)));
        let e = op(1, &[(&[1], &[1], 1)]);
        assert_eq!(apply(&e, &x(1, &[5])).unwrap(), x(1, &[5]).scale(&rational::int(5)));
        let rot = op(2, &[(&[0, 1], &[1, 0], 1), (&[1, 0], &[0, 1], -1)]);
        let r2 = x(2, &[2, 0]).add(&x(2, &[0, 2])).unwrap();
        assert!(apply(&rot, &r2).unwrap().is_zero());
    }

    #[test]
    fn kernel_examples() {
        let d = DiffOp::partial(2, 0);
        let dims = kernel_dims(&d, 10);
        for (m, v) in dims.iter().enumerate() {
            assert_eq!(*v, BigInt::from(m + 1));
        }
        assert_eq!(kernel_dim(&DiffOp::partial(1, 0), 7), BigInt::from(1));
        let e = DiffOp::euler(2, 3);
        assert_eq!(kernel_dim(&e, 2), BigInt::zero());
        assert_eq!(kernel_dim(&e, 3), BigInt::from(4));
        assert_eq!(kernel_dim(&e, 9), BigInt::from(4));
        let shifted = op(1, &[(&[1], &[1], 1), (&[0], &[0], -8)]);
        assert_eq!(kernel_dim(&shifted, 5), BigInt::zero());
    }

    #[test]
    fn reduction_examples() {
        let xd = op(1, &[(&[1], &[1], 1)]);
        assert_eq!(reduce_operator(&xd).unwrap().0, xd);
        let mult = op(1, &[(&[0], &[1], 1)]);
        let (r, applied) = reduce_operator(&mult).unwrap();
        assert_eq!(applied, vec![1]);
        assert_eq!(r, op(1, &[(&[1], &[1], 1), (&[0], &[0], 1)]));
    }

    #[test]
    fn mu_examples() {
        let d = DiffOp::partial(1, 0);
        assert_eq!(mu_kernel_dim(&d, 6).unwrap(), BigInt::from(1));
        let e = op(1, &[(&[1], &[1], 1), (&[0], &[0], -2)]);
        assert_eq!(mu_kernel_dim(&e, 5).unwrap(), BigInt::from(1));
        assert!(mu_is_triangular(&e, 5).unwrap());
        assert!(mu_matrix(&op(1, &[(&[0], &[1], 1)]), 3).is_err());
    }

    #[test]
    fn growth_examples() {
        let r = growth_fit(&DiffOp::euler(2, 2), &[4, 6, 8, 10, 12]).unwrap();
        assert!(r.slope.unwrap().abs() < 1e-12 && !r.violation);
        let r = growth_fit(&DiffOp::partial(2, 0), &[4, 8, 12, 16, 20]).unwrap();
        let s = r.slope.unwrap();
        assert!(s > 0.8 && s <= 1.0, "{s}");
        assert!(growth_fit(&DiffOp::partial(2, 0), &[1, 2, 3]).is_err());
    }

    #[test]
    fn density_examples() {
        let d = DiffOp::partial(1, 0);
        let rep = density_bound_check(&d, &[1, 2, 3, 4]).unwrap();
        assert_eq!(rep.order, 2);
        assert_eq!(rep.limit_bound, rational::ratio(3, 4));
        assert!(rep.holds_at_all_m);
        assert_eq!(rep.rows[0].density, rational::ratio(1, 5));
        let e = DiffOp::euler(2, 0);
        let rep = density_bound_check(&e, &[1, 2, 3]).unwrap();
        assert!(rep.holds_at_all_m && rep.rows.iter().all(|r| r.within_block_bound));
    }

    #[test]
    fn block_ranks_nonzero() {
        for seed in 0..5 {
            let d = random_operator(2, 3, 0, 6, true, seed);
            for (j, rank) in block_ranks(&d, 3).unwrap() {
                assert!(rank >= 1, "seed {seed} block {j:?}");
            }
        }
        assert_eq!(block_indices(2, 3).len(), 3);
    }

    #[test]
    fn json_format() {
        let d = op(2, &[(&[1, 0], &[0, 1], 3)]);
        let s = d.to_json();
        assert_eq!(s, r#"{"k":2,"terms":[{"dx":[1,0],"x":[0,1],"c":"3/1"}]}"#);
        assert_eq!(DiffOp::from_json(&s).unwrap(), d);
        assert!(DiffOp::from_json(r#"{"k":1,"terms":[{"dx":[1],"x":[0],"c":"0/1"}]}"#).is_err());
        assert!(DiffOp::from_json(
            r#"{"k":1,"terms":[{"dx":[1],"x":[0],"c":"1/1"},{"dx":[1],"x":[0],"c":"2/1"}]}"#
        )
        .is_err());
    }
}
