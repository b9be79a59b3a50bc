//! Exact linear algebra over the rationals.
//!
//! Dense work goes through fraction-free Bareiss elimination on a
//! denominator-cleared integer copy. Large sparse systems (operator matrices)
//! use [`SparseEchelon`], an incremental integer echelon basis.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Dense matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Rational::zero(), |acc, l| {
                acc + &self[(i, l)] * &other[(l, j)]
            })
        }))
    }

    /// Integer copy with each row scaled by the lcm of its denominators.
    /// Returns the scaled rows and the product of the scale factors.
    fn cleared_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let row = self.row(i);
                let l = rational::denominator_lcm(row);
                let out = row
                    .iter()
                    .map(|v| (v * Rational::from_integer(l.clone())).to_integer())
                    .collect();
                scale *= &l;
                out
            })
            .collect();
        (rows, scale)
    }

    /// Exact determinant by fraction-free Bareiss elimination.
    pub fn det(&self) -> Result<Rational> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Rational::one());
        }
        let (mut a, scale) = self.cleared_rows();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        let det = Rational::new(a[n - 1][n - 1].clone() * sign, scale);
        Ok(det)
    }

    /// Exact rank by fraction-free elimination with row pivoting.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.cleared_rows();
        let (m, n) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(p, r);
            for i in r + 1..m {
                for j in c + 1..n {
                    let v = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                    a[i][j] = v / &prev;
                }
                a[i][c] = BigInt::zero();
            }
            prev = a[r][c].clone();
            r += 1;
        }
        r
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&i| !a[(i, c)].is_zero())?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let pivot = a[(c, c)].clone();
            for j in 0..n {
                a[(c, j)] = &a[(c, j)] / &pivot;
                inv[(c, j)] = &inv[(c, j)] / &pivot;
            }
            for i in 0..n {
                if i == c || a[(i, c)].is_zero() {
                    continue;
                }
                let f = a[(i, c)].clone();
                for j in 0..n {
                    let t = &f * &a[(c, j)];
                    a[(i, j)] -= t;
                    let t = &f * &inv[(c, j)];
                    inv[(i, j)] -= t;
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Whether `b` lies in the column span.
    pub fn column_span_contains(&self, b: &[Rational]) -> Result<bool> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch("right-hand side length".into()));
        }
        let augmented = ExactMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        Ok(augmented.rank() == self.rank())
    }
}

impl std::ops::Index<(usize, usize)> for ExactMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

/// Sparse integer vector keyed by coordinate index.
pub type SparseVec = BTreeMap<usize, BigInt>;

/// Clears denominators of a sparse rational vector (scaling does not change
/// linear dependence).
pub fn integerize(v: &BTreeMap<usize, Rational>) -> SparseVec {
    let l = Rational::from_integer(rational::denominator_lcm(v.values()));
    v.iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(&i, c)| (i, (c * &l).to_integer()))
        .collect()
}

/// Incremental echelon basis over the integers.
///
/// Each stored vector is keyed by its leading (largest) coordinate. Inserting
/// a vector reduces it against the stored leaders with fraction-free updates
/// `v <- lead(b) * v - v_lead * b`, followed by content removal. A vector that
/// reduces to zero is dependent on the basis.
#[derive(Debug, Default)]
pub struct SparseEchelon {
    basis: HashMap<usize, SparseVec>,
    tracks: HashMap<usize, SparseVec>,
    track: bool,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    /// Keeps, for every basis vector, the combination of inserted vectors that
    /// produced it, so dependent insertions yield explicit relations.
    pub fn with_tracking() -> Self {
        Self {
            track: true,
            ..Self::default()
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Inserts `v`. Returns `true` if `v` was independent of the current basis.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        self.insert_tagged(v, usize::MAX).is_none()
    }

    /// Inserts `v` labelled `tag`. When `v` is dependent and tracking is on,
    /// returns the integer relation among tagged insertions that sums to zero.
    pub fn insert_tagged(&mut self, mut v: SparseVec, tag: usize) -> Option<SparseVec> {
        let mut t: SparseVec = SparseVec::new();
        if self.track {
            t.insert(tag, BigInt::one());
        }
        v.retain(|_, c| !c.is_zero());
        loop {
            let Some((&lead, coef)) = v.iter().next_back() else {
                return Some(t);
            };
            let coef = coef.clone();
            match self.basis.get(&lead) {
                None => {
                    normalize(&mut v, &mut t, self.track);
                    self.basis.insert(lead, v);
                    if self.track {
                        self.tracks.insert(lead, t);
                    }
                    return None;
                }
                Some(b) => {
                    let b_lead = b[&lead].clone();
                    axpy(&mut v, &b_lead, &coef, b);
                    if self.track {
                        axpy(&mut t, &b_lead, &coef, &self.tracks[&lead]);
                    }
                    normalize(&mut v, &mut t, self.track);
                }
            }
        }
    }
}

/// `v <- s * v - c * b`, dropping zeros.
fn axpy(v: &mut SparseVec, s: &BigInt, c: &BigInt, b: &SparseVec) {
    if !s.is_one() {
        for x in v.values_mut() {
            *x *= s;
        }
    }
    for (&i, bi) in b {
        let e = v.entry(i).or_insert_with(BigInt::zero);
        *e -= c * bi;
        if e.is_zero() {
            v.remove(&i);
        }
    }
}

fn normalize(v: &mut SparseVec, t: &mut SparseVec, track: bool) {
    let mut g = rational::content(v.values());
    if track {
        g = num_integer::Integer::gcd(&g, &rational::content(t.values()));
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.values_mut() {
        *x /= &g;
    }
    if track {
        for x in t.values_mut() {
            *x /= &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(ExactMatrix::identity(4).det().unwrap(), int(1));
        assert_eq!(m(&[&[1, 2], &[1, 2]]).det().unwrap(), int(0));
        assert_eq!(m(&[&[0, 1], &[1, 0]]).det().unwrap(), int(-1));
        assert_eq!(m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).det().unwrap(), int(6));
        let h = ExactMatrix::from_fn(2, 2, |i, j| ratio(1, (i + j + 1) as i64));
        assert_eq!(h.det().unwrap(), ratio(1, 12));
        assert!(m(&[&[1, 2, 3]]).det().is_err());
    }

    #[test]
    fn rank_and_inverse() {
        assert_eq!(m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]).rank(), 2);
        assert_eq!(m(&[&[0, 0], &[0, 0]]).rank(), 0);
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert!(a.column_span_contains(&[int(1), int(5)]).unwrap());
        assert!(!m(&[&[1], &[1]]).column_span_contains(&[int(1), int(2)]).unwrap());
    }

    #[test]
    fn sparse_echelon_relations() {
        let v = |pairs: &[(usize, i64)]| -> SparseVec {
            pairs.iter().map(|&(i, c)| (i, BigInt::from(c))).collect()
        };
        let mut e = SparseEchelon::with_tracking();
        assert!(e.insert_tagged(v(&[(0, 1), (2, 1)]), 0).is_none());
        assert!(e.insert_tagged(v(&[(1, 1), (2, 1)]), 1).is_none());
        let rel = e.insert_tagged(v(&[(0, 2), (1, -2)]), 2).unwrap();
        // 2*v0 - 2*v1 - v2 = 0, up to scale
        let c = |i: usize| rel.get(&i).cloned().unwrap_or_default();
        assert_eq!(c(0) * BigInt::from(-1), c(2) * BigInt::from(2));
        assert_eq!(c(1), -c(0));
        assert_eq!(e.rank(), 2);
    }
}
