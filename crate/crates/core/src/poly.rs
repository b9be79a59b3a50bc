//! Sparse multivariate polynomials with exact rational coefficients,
//! symmetric polynomials in the squared cosines, and the change of
//! coordinates from elementary symmetric functions σ_j to the variables y_j.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::partitions::{self, Partition};
use crate::rational::{self, Rational};

/// Exponent vector, ordered graded reverse-lexicographically: total degree
/// first; among equal degrees the monomial with the smaller exponent in the
/// last differing variable is larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    /// Componentwise `self >= other`.
    pub fn dominates(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// γ! = ∏ γ_i!.
    pub fn factorial(&self) -> BigInt {
        self.0.iter().map(|&g| factorial(g)).product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(&other.0).rev() {
                if a != b {
                    return b.cmp(a);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

/// All exponent vectors in `nvars` variables of total degree ≤ `max_degree`,
/// in ascending graded reverse-lexicographic order.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if slots == 1 {
            cur.push(rest);
            out.push(Monomial(cur.clone()));
            cur.pop();
            return;
        }
        for e in 0..=rest {
            cur.push(e);
            rec(rest - e, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for d in 0..=max_degree {
        let mut layer = Vec::new();
        if nvars == 0 {
            if d == 0 {
                layer.push(Monomial(Vec::new()));
            }
        } else {
            rec(d, nvars, &mut Vec::with_capacity(nvars), &mut layer);
        }
        layer.sort();
        out.extend(layer);
    }
    out
}

/// Sparse polynomial over ℚ. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    /// The coordinate x_i (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::term(Monomial(e), Rational::one())
    }

    pub fn term(m: Monomial, c: Rational) -> Self {
        let mut p = Self::zero(m.nvars());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, summing duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::NvarsMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(Monomial(e), c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(e.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &MultiPoly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Result<MultiPoly> {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// ∂^α p, with coefficients multiplied by the falling factorial γ!/(γ-α)!.
    pub fn differentiate(&self, alpha: &[u32]) -> Result<MultiPoly> {
        if alpha.len() != self.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: alpha.len(),
            });
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (m, c) in &self.terms {
            if !m.0.iter().zip(alpha).all(|(g, a)| g >= a) {
                continue;
            }
            let mut factor = BigInt::one();
            let mut e = Vec::with_capacity(self.nvars);
            for (&g, &a) in m.0.iter().zip(alpha) {
                factor *= falling_factorial(g, a);
                e.push(g - a);
            }
            out.add_term(Monomial(e), c * Rational::from_integer(factor));
        }
        Ok(out)
    }

    /// Replaces x_i by `values[i]` (all in a common ring of `target_nvars`).
    pub fn substitute(&self, values: &[MultiPoly]) -> Result<MultiPoly> {
        if values.len() != self.nvars {
            return Err(Error::NvarsMismatch {
                left: self.nvars,
                right: values.len(),
            });
        }
        let target = values.first().map_or(0, MultiPoly::nvars);
        let mut powers: Vec<Vec<MultiPoly>> = values.iter().map(|v| vec![MultiPoly::one(v.nvars)]).collect();
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().expect("nonempty").mul(&values[i])?;
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize])?;
            }
            out = out.add(&t)?;
        }
        Ok(out)
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                rational::to_f64(c)
                    * m.0
                        .iter()
                        .zip(x)
                        .map(|(&e, &v)| v.powi(e as i32))
                        .product::<f64>()
            })
            .sum()
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            let mono = m
                .0
                .iter()
                .zip(x)
                .fold(Rational::one(), |a, (&e, v)| a * num_traits::pow(v.clone(), e as usize));
            acc + c * mono
        })
    }

    /// Swaps variables `i` and `j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut e = m.0.clone();
                    e.swap(i, j);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Invariance under all adjacent transpositions.
    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }
}

pub fn falling_factorial(g: u32, a: u32) -> BigInt {
    (g - a + 1..=g).map(BigInt::from).product::<BigInt>().max(BigInt::one())
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{e}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    e: Vec<u32>,
    #[serde(with = "rational::serde_str")]
    c: Rational,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Serialize for MultiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermJson {
                    e: m.0.clone(),
                    c: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolyJson::deserialize(d)?;
        MultiPoly::from_terms(raw.nvars, raw.terms.into_iter().map(|t| (t.e, t.c)))
            .map_err(serde::de::Error::custom)
    }
}

/// A polynomial invariant under every permutation of its variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MultiPoly", into = "MultiPoly")]
pub struct SymmetricPoly(MultiPoly);

impl TryFrom<MultiPoly> for SymmetricPoly {
    type Error = Error;
    fn try_from(p: MultiPoly) -> Result<Self> {
        SymmetricPoly::new(p)
    }
}

impl From<SymmetricPoly> for MultiPoly {
    fn from(p: SymmetricPoly) -> Self {
        p.0
    }
}

impl SymmetricPoly {
    pub fn new(p: MultiPoly) -> Result<Self> {
        if !p.is_symmetric() {
            return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
        }
        Ok(Self(p))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultiPoly {
        self.0
    }

    /// Coefficient of the monomial symmetric function m_λ (the coefficient of
    /// y^{λ/2} with exponents in non-increasing order).
    pub fn monomial_coeff(&self, lambda: &Partition) -> Rational {
        self.0.coeff(&lambda.half_parts())
    }
}

/// m_λ(y₁..y_k): the sum over distinct permutations of y^{λ/2}.
pub fn monomial_symmetric(lambda: &Partition, k: usize) -> Result<SymmetricPoly> {
    if lambda.parts().iter().skip(k).any(|&p| p != 0) {
        return Err(Error::InvalidArgument(format!(
            "{lambda} has more than {k} nonzero parts"
        )));
    }
    let mut e: Vec<u32> = lambda.half_parts();
    e.resize(k, 0);
    e.sort_unstable();
    let mut p = MultiPoly::zero(k);
    loop {
        p.add_term(Monomial(e.clone()), Rational::one());
        if !next_permutation(&mut e) {
            break;
        }
    }
    Ok(SymmetricPoly(p))
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// e_j(y₁..y_k), the j-th elementary symmetric polynomial.
pub fn elementary_symmetric(j: usize, k: usize) -> SymmetricPoly {
    let mut parts = vec![2u32; j.min(k)];
    parts.resize(k, 0);
    if j > k {
        return SymmetricPoly(MultiPoly::zero(k));
    }
    monomial_symmetric(&Partition::new(parts).expect("valid"), k).expect("fits")
}

/// The algebra map σ_j ↦ e_j(y): takes a polynomial in σ₁..σ_k to the
/// corresponding symmetric polynomial in y₁..y_k.
pub fn sigma_to_y(p: &MultiPoly) -> Result<SymmetricPoly> {
    let k = p.nvars();
    let images: Vec<MultiPoly> = (1..=k).map(|j| elementary_symmetric(j, k).into_poly()).collect();
    Ok(SymmetricPoly(p.substitute(&images)?))
}

/// dim P_m in k variables: C(m + k, k).
pub fn dim_p(m: u64, k: u64) -> BigInt {
    binomial(BigInt::from(m + k), BigInt::from(k))
}

/// dim of the symmetric polynomials of degree ≤ m in k variables, which is
/// |Λ_k(2m)|.
pub fn dim_ps(m: u32, k: usize) -> Result<BigInt> {
    partitions::count_types(k, 2 * m)
}

/// Matrix whose columns are the coefficient vectors of `polys` in the
/// monomial basis of degree ≤ `max_degree`.
pub fn coefficient_matrix(polys: &[MultiPoly], nvars: usize, max_degree: u32) -> ExactMatrix {
    let basis = monomials_up_to(nvars, max_degree);
    ExactMatrix::from_fn(basis.len(), polys.len(), |i, j| {
        polys[j]
            .terms()
            .get(&basis[i])
            .cloned()
            .unwrap_or_else(Rational::zero)
    })
}

/// Checks that every m_λ with |λ|/2 ≤ m lies in the image under σ ↦ e(y) of
/// the σ-polynomials of degree ≤ m.
pub fn symmetric_reachable_from_sigma(k: usize, m: u32) -> Result<bool> {
    let images: Vec<MultiPoly> = monomials_up_to(k, m)
        .into_iter()
        .map(|mono| sigma_to_y(&MultiPoly::term(mono, Rational::one())).map(SymmetricPoly::into_poly))
        .collect::<Result<_>>()?;
    let top = k as u32 * m;
    let span = coefficient_matrix(&images, k, top);
    let basis = monomials_up_to(k, top);
    for lambda in partitions::enumerate_types(k, 2 * m)? {
        let target = monomial_symmetric(&lambda, k)?.into_poly();
        let b: Vec<Rational> = basis
            .iter()
            .map(|mono| target.terms().get(mono).cloned().unwrap_or_else(Rational::zero))
            .collect();
        if !span.column_span_contains(&b)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn poly(nvars: usize, terms: &[(&[u32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(nvars, terms.iter().map(|(e, c)| (e.to_vec(), int(*c)))).unwrap()
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn ring_operations() {
        let x1 = MultiPoly::var(2, 0);
        let x2 = MultiPoly::var(2, 1);
        assert_eq!(x1.mul(&x2).unwrap(), poly(2, &[(&[1, 1], 1)]));
        let s = x1.add(&x2).unwrap();
        assert_eq!(
            s.pow(2).unwrap(),
            poly(2, &[(&[2, 0], 1), (&[1, 1], 2), (&[0, 2], 1)])
        );
        assert!(s.mul(&MultiPoly::zero(2)).unwrap().terms().is_empty());
        assert!(x1.sub(&x1).unwrap().is_zero());
        assert!(matches!(x1.add(&MultiPoly::var(3, 0)), Err(Error::NvarsMismatch { .. })));
    }

    #[test]
    fn differentiation() {
        assert_eq!(
            poly(1, &[(&[3], 1)]).differentiate(&[2]).unwrap(),
            poly(1, &[(&[1], 6)])
        );
        assert_eq!(
            poly(2, &[(&[1, 1], 1)]).differentiate(&[1, 1]).unwrap(),
            MultiPoly::one(2)
        );
        assert!(poly(2, &[(&[0, 3], 1)]).differentiate(&[1, 0]).unwrap().is_zero());
    }

    #[test]
    fn graded_reverse_lex() {
        let a = Monomial(vec![2, 0, 0]);
        let b = Monomial(vec![1, 1, 0]);
        let c = Monomial(vec![0, 0, 1]);
        let d = Monomial(vec![1, 0, 1]);
        assert!(c < a);
        assert!(b < a);
        assert!(d < b);
        let all = monomials_up_to(3, 3);
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn monomial_symmetric_functions() {
        assert_eq!(
            monomial_symmetric(&part(&[2, 0]), 2).unwrap().into_poly(),
            poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
        );
        assert_eq!(
            monomial_symmetric(&part(&[2, 2]), 2).unwrap().into_poly(),
            poly(2, &[(&[1, 1], 1)])
        );
        assert_eq!(
            monomial_symmetric(&part(&[4, 2]), 2).unwrap().into_poly(),
            poly(2, &[(&[2, 1], 1), (&[1, 2], 1)])
        );
        assert_eq!(monomial_symmetric(&part(&[2, 0, 0]), 3).unwrap().poly().terms().len(), 3);
        assert!(monomial_symmetric(&part(&[2, 2]), 1).is_err());
        assert!(SymmetricPoly::new(poly(2, &[(&[1, 0], 1)])).is_err());
    }

    #[test]
    fn sigma_substitution() {
        let s1 = MultiPoly::var(2, 0);
        let s2 = MultiPoly::var(2, 1);
        assert_eq!(sigma_to_y(&s1).unwrap().into_poly(), poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
        assert_eq!(sigma_to_y(&s2).unwrap().into_poly(), poly(2, &[(&[1, 1], 1)]));
        let newton = s1.pow(2).unwrap().sub(&s2.scale(&int(2))).unwrap();
        assert_eq!(
            sigma_to_y(&newton).unwrap().into_poly(),
            poly(2, &[(&[2, 0], 1), (&[0, 2], 1)])
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim_p(3, 2), BigInt::from(10));
        assert_eq!(dim_ps(2, 2).unwrap(), BigInt::from(4));
        for m in 0..10 {
            assert_eq!(dim_ps(m, 1).unwrap(), BigInt::from(m + 1));
        }
    }

    #[test]
    fn json_format() {
        let p = MultiPoly::from_terms(2, [(vec![1, 0], ratio(1, 2)), (vec![0, 2], int(-3))]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"nvars":2,"terms":[{"e":[1,0],"c":"1/2"},{"e":[0,2],"c":"-3/1"}]}"#);
        let back: MultiPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<MultiPoly>(r#"{"nvars":2,"terms":[{"e":[1],"c":"1"}]}"#).is_err());
    }

    #[test]
    fn reachability_small() {
        assert!(symmetric_reachable_from_sigma(2, 3).unwrap());
    }
}
