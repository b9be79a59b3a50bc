//! O(n)-types of a real Grassmannian: partitions with even, non-increasing
//! parts, their enumeration by weight, and counting densities of type sets.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// An O(n)-type λ, stored with exactly `len` parts (trailing zeros explicit).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|p| p % 2 != 0) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} has an odd part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition {parts:?} is not non-increasing"
            )));
        }
        Ok(Self { parts })
    }

    pub fn zero(len: usize) -> Self {
        Self {
            parts: vec![0; len],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the sum of the parts.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// λ_i with 1-based `i`; parts beyond the stored length are zero.
    pub fn part(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|j| self.parts.get(j))
            .copied()
            .unwrap_or(0)
    }

    /// Halved parts λ_i / 2, the exponents of the monomial symmetric function.
    pub fn half_parts(&self) -> Vec<u32> {
        self.parts.iter().map(|p| p / 2).collect()
    }

    /// Key for the graded order: weight first, then lexicographic on parts.
    /// Within one weight, lexicographically smaller partitions come first,
    /// which refines dominance.
    pub fn graded_key(&self) -> (u32, &[u32]) {
        (self.weight(), &self.parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.graded_key().cmp(&other.graded_key())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

fn check_weight(max_weight: u32) -> Result<()> {
    if !max_weight.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "max_weight must be even, got {max_weight}"
        )));
    }
    Ok(())
}

/// All partitions of `m` into at most `k` parts, padded to length `k`,
/// in lexicographically increasing order.
fn partitions_of(m: u32, k: usize) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // The remaining slots can absorb at most `max * slots`.
        if rest > max.saturating_mul(slots as u32) {
            return;
        }
        let lo = rest.div_ceil(slots as u32);
        for p in lo..=max.min(rest) {
            cur.push(p);
            rec(rest - p, p, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(m, m, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Every λ ∈ Λ_k with |λ| ≤ `max_weight`, in graded order.
pub fn enumerate_types(k: usize, max_weight: u32) -> Result<Vec<Partition>> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    check_weight(max_weight)?;
    let mut out = Vec::new();
    for half in 0..=max_weight / 2 {
        for parts in partitions_of(half, k) {
            out.push(Partition {
                parts: parts.into_iter().map(|p| 2 * p).collect(),
            });
        }
    }
    Ok(out)
}

/// P(m, k): partitions of `m` into at most `k` parts, by the standard
/// recurrence p(m, k) = p(m, k-1) + p(m-k, k).
pub fn restricted_partition_count(m: u64, k: usize) -> BigInt {
    let m = m as usize;
    // row[j] = number of partitions of j into parts of size at most i
    let mut row = vec![BigInt::zero(); m + 1];
    row[0] = BigInt::from(1);
    for i in 1..=k.min(m.max(1)) {
        for j in i..=m {
            let add = row[j - i].clone();
            row[j] += add;
        }
    }
    row[m].clone()
}

/// Lower and upper bounds on P(m, k):
/// C(m+k−1, k−1)/k! ≤ P(m, k) ≤ C(m + C(k+1, 2) − 1, k−1)/k!.
pub fn restricted_partition_bounds(m: u64, k: usize) -> (Rational, Rational) {
    assert!(k >= 1, "k must be positive");
    let kf: BigInt = (1..=k as u64).map(BigInt::from).product();
    let k = k as u64;
    let lo = binomial(m + k - 1, k - 1);
    let hi = binomial(m + k * (k + 1) / 2 - 1, k - 1);
    (Rational::new(lo, kf.clone()), Rational::new(hi, kf))
}

fn binomial(n: u64, r: u64) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// |Λ_k(2m)| for `max_weight = 2m`.
pub fn count_types(k: usize, max_weight: u32) -> Result<BigInt> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    check_weight(max_weight)?;
    Ok((0..=max_weight as u64 / 2)
        .map(|h| restricted_partition_count(h, k))
        .sum())
}

/// A named boolean test on types.
#[derive(Clone)]
pub struct TypePredicate {
    name: String,
    test: Arc<dyn Fn(&Partition) -> bool + Send + Sync>,
}

impl fmt::Debug for TypePredicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TypePredicate")
            .field("name", &self.name)
            .finish()
    }
}

impl TypePredicate {
    pub fn new(name: impl Into<String>, test: impl Fn(&Partition) -> bool + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            test: Arc::new(test),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, lambda: &Partition) -> bool {
        (self.test)(lambda)
    }

    pub fn always() -> Self {
        Self::new("all", |_| true)
    }

    /// λ₂ ≤ `bound`.
    pub fn second_part_at_most(bound: u32) -> Self {
        Self::new(format!("l2le:{bound}"), move |l| l.part(2) <= bound)
    }

    /// λ₂ ≥ `bound`.
    pub fn second_part_at_least(bound: u32) -> Self {
        Self::new(format!("l2ge:{bound}"), move |l| l.part(2) >= bound)
    }

    /// λ_{j+1} = 0: at most `j` nonzero parts.
    pub fn at_most_parts(j: usize) -> Self {
        Self::new(format!("trunc:{j}"), move |l| l.part(j + 1) == 0)
    }

    /// Types in the image of the α-cosine transform for integer α ≥ 0:
    /// λ₂ ≤ 1 + α.
    pub fn cosine_image(alpha: u32) -> Self {
        Self::new(format!("cos_image:{alpha}"), move |l| l.part(2) <= 1 + alpha)
    }

    /// Types in the image of the Radon transform from Gr_p(ℝⁿ):
    /// λ_{min(p, n-p)+1} = 0.
    pub fn radon_image(n: usize, p: usize) -> Self {
        let j = p.min(n - p);
        Self::new(format!("radon_image:{n}:{p}"), move |l| l.part(j + 1) == 0)
    }

    pub fn negate(&self) -> Self {
        let inner = self.test.clone();
        Self {
            name: format!("not:{}", self.name),
            test: Arc::new(move |l| !inner(l)),
        }
    }

    /// Parses `NAME[:PARAM...]`. Accepted names: `all`, `l2le:T`, `l2ge:T`,
    /// `trunc:J`, `cos_image:A`, `radon_image:N:P`, each optionally prefixed
    /// by `not:`.
    pub fn parse(text: &str) -> Result<Self> {
        if let Some(rest) = text.strip_prefix("not:") {
            return Ok(Self::parse(rest)?.negate());
        }
        let mut it = text.split(':');
        let name = it.next().unwrap_or_default();
        let mut arg = |what: &str| -> Result<u32> {
            it.next()
                .ok_or_else(|| Error::Parse(format!("predicate {name} needs {what}")))?
                .parse()
                .map_err(|_| Error::Parse(format!("bad {what} in predicate {text:?}")))
        };
        let pred = match name {
            "all" => Self::always(),
            "l2le" => Self::second_part_at_most(arg("bound")?),
            "l2ge" => Self::second_part_at_least(arg("bound")?),
            "trunc" => Self::at_most_parts(arg("part count")? as usize),
            "cos_image" => Self::cosine_image(arg("alpha")?),
            "radon_image" => {
                let n = arg("n")? as usize;
                let p = arg("p")? as usize;
                if p == 0 || p >= n {
                    return Err(Error::Parse(format!("radon_image needs 0 < p < n: {text}")));
                }
                Self::radon_image(n, p)
            }
            _ => return Err(Error::Parse(format!("unknown predicate {text:?}"))),
        };
        Ok(pred)
    }
}

/// |{λ ∈ Λ_k(2m) : pred(λ)}| / |Λ_k(2m)| as an exact rational.
pub fn density(pred: &TypePredicate, k: usize, max_weight: u32) -> Result<Rational> {
    let types = enumerate_types(k, max_weight)?;
    Ok(density_of(types.iter(), pred))
}

/// Fraction of the given types satisfying `pred`; 0 for an empty set.
pub fn density_of<'a>(types: impl IntoIterator<Item = &'a Partition>, pred: &TypePredicate) -> Rational {
    let (hits, total) = types.into_iter().fold((0u64, 0u64), |(h, t), l| {
        (h + u64::from(pred.eval(l)), t + 1)
    });
    if total == 0 {
        return Rational::zero();
    }
    Rational::new(BigInt::from(hits), BigInt::from(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_types(1, 4).unwrap(), vec![p(&[0]), p(&[2]), p(&[4])]);
        assert_eq!(
            enumerate_types(2, 4).unwrap(),
            vec![p(&[0, 0]), p(&[2, 0]), p(&[2, 2]), p(&[4, 0])]
        );
        assert_eq!(enumerate_types(2, 0).unwrap(), vec![p(&[0, 0])]);
        assert!(enumerate_types(2, 3).is_err());
        assert!(enumerate_types(0, 2).is_err());
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let types = enumerate_types(3, 16).unwrap();
        assert!(types.windows(2).all(|w| w[0] < w[1]));
        for t in &types {
            assert_eq!(t.len(), 3);
            assert!(t.weight() <= 16);
            assert!(Partition::new(t.parts().to_vec()).is_ok());
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![2, 3]).is_err());
        assert!(Partition::new(vec![2, 4]).is_err());
        assert_eq!("(4,2,0)".parse::<Partition>().unwrap(), p(&[4, 2, 0]));
        assert_eq!(p(&[4, 2, 0]).to_string(), "(4,2,0)");
        assert_eq!(p(&[4, 2]).part(3), 0);
        assert_eq!(p(&[4, 2]).half_parts(), vec![2, 1]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_types(1, 20).unwrap(), BigInt::from(11));
        assert_eq!(count_types(2, 4).unwrap(), BigInt::from(4));
        assert_eq!(count_types(2, 20).unwrap(), BigInt::from(36));
        assert_eq!(restricted_partition_count(5, 5), BigInt::from(7));
        assert_eq!(restricted_partition_count(0, 3), BigInt::from(1));
        assert_eq!(restricted_partition_count(10, 1), BigInt::from(1));
    }

    #[test]
    fn densities() {
        assert_eq!(density(&TypePredicate::always(), 2, 20).unwrap(), int(1));
        assert_eq!(
            density(&TypePredicate::second_part_at_most(2), 2, 20).unwrap(),
            ratio(5, 9)
        );
        assert_eq!(
            density(&TypePredicate::second_part_at_least(4), 2, 20).unwrap(),
            ratio(4, 9)
        );
    }

    #[test]
    fn predicate_parsing() {
        let l = p(&[6, 2, 0]);
        assert!(TypePredicate::parse("l2le:2").unwrap().eval(&l));
        assert!(!TypePredicate::parse("not:l2le:2").unwrap().eval(&l));
        assert!(!TypePredicate::parse("trunc:1").unwrap().eval(&l));
        assert!(TypePredicate::parse("trunc:2").unwrap().eval(&l));
        assert!(TypePredicate::parse("cos_image:1").unwrap().eval(&l));
        assert!(!TypePredicate::parse("radon_image:5:1").unwrap().eval(&l));
        assert!(TypePredicate::parse("bogus").is_err());
        assert!(TypePredicate::parse("l2le").is_err());
    }
}
