//! Exact determinants of factorial and Cauchy matrices against generic
//! elimination.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::rational::{self, Rational};

static FACTORIALS: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();

/// n!, memoized across calls.
pub fn factorial(n: usize) -> BigInt {
    let table = FACTORIALS.get_or_init(|| Mutex::new(vec![BigInt::one()]));
    let mut t = table.lock().expect("factorial table poisoned");
    while t.len() <= n {
        let next = t.last().expect("nonempty") * BigInt::from(t.len());
        t.push(next);
    }
    t[n].clone()
}

fn inv_factorial(n: usize) -> Rational {
    Rational::new(BigInt::one(), factorial(n))
}

/// The (n+1)×(n+1) matrix with entries 1/(k+i+j−2)! for 1-based i, j.
pub fn factorial_matrix(k: usize, n: usize) -> ExactMatrix {
    ExactMatrix::from_fn(n + 1, n + 1, |i, j| inv_factorial(k + i + j))
}

/// Closed form (−1)^{n(n+1)/2} ∏_{i=0}^{n} i! / (k+n+i)!.
pub fn factorial_det_formula(k: usize, n: usize) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..=n {
        num *= factorial(i);
        den *= factorial(k + n + i);
    }
    if (n * (n + 1) / 2) % 2 == 1 {
        num = -num;
    }
    Rational::new(num, den)
}

fn check_cauchy(x: &[Rational], y: &[Rational]) -> Result<()> {
    if x.len() != y.len() {
        return Err(Error::CauchyPrecondition(format!(
            "|x| = {} but |y| = {}",
            x.len(),
            y.len()
        )));
    }
    for (label, v) in [("x", x), ("y", y)] {
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] == v[j] {
                    return Err(Error::CauchyPrecondition(format!(
                        "{label}[{i}] = {label}[{j}] = {}",
                        rational::format(&v[i])
                    )));
                }
            }
        }
    }
    for (i, xi) in x.iter().enumerate() {
        for (j, yj) in y.iter().enumerate() {
            if xi == yj {
                return Err(Error::CauchyPrecondition(format!(
                    "x[{i}] = y[{j}] = {}",
                    rational::format(xi)
                )));
            }
        }
    }
    Ok(())
}

/// The matrix (1/(x_i − y_j)).
pub fn cauchy_matrix(x: &[Rational], y: &[Rational]) -> Result<ExactMatrix> {
    check_cauchy(x, y)?;
    Ok(ExactMatrix::from_fn(x.len(), y.len(), |i, j| {
        (&x[i] - &y[j]).recip()
    }))
}

/// Closed form ∏_{i<j} (x_i − x_j)(y_j − y_i) / ∏_{i,j} (x_i − y_j).
pub fn cauchy_det(x: &[Rational], y: &[Rational]) -> Result<Rational> {
    check_cauchy(x, y)?;
    let n = x.len();
    let mut num = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= (&x[i] - &x[j]) * (&y[j] - &y[i]);
        }
    }
    let mut den = Rational::one();
    for xi in x {
        for yj in y {
            den *= xi - yj;
        }
    }
    Ok(num / den)
}

/// det(1/(k+i+j−1))_{i,j=1..n}, the Cauchy specialization x_i = k+i−1,
/// y_j = −j, in product form ∏_{i=0}^{n−1} (i!)² (k+i)! / (k+n+i)!.
pub fn shifted_hilbert_det_formula(k: usize, n: usize) -> Rational {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        num *= factorial(i) * factorial(i) * factorial(k + i);
        den *= factorial(k + n + i);
    }
    Rational::new(num, den)
}

/// Determinant by fraction-free elimination.
pub fn exact_det(m: &ExactMatrix) -> Result<Rational> {
    m.det()
}

/// The N×N matrix (1/(z − ν)!) with rows z = start, …, start+N−1 and
/// columns ν = 0, …, N−1. Requires start ≥ N − 1 so no factorial argument
/// is negative.
pub fn shifted_factorial_block(start: usize, size: usize) -> Result<ExactMatrix> {
    if size > 0 && start + 1 < size {
        return Err(Error::InvalidArgument(format!(
            "block start {start} too small for size {size}"
        )));
    }
    Ok(ExactMatrix::from_fn(size, size, |i, nu| inv_factorial(start + i - nu)))
}

/// Whether the block for block index `j` (rows 2jN−N … 2jN−1) is invertible.
pub fn block_is_invertible(size: usize, j: usize) -> Result<bool> {
    if j == 0 {
        return Err(Error::InvalidArgument("block index starts at 1".into()));
    }
    let start = 2 * j * size - size;
    Ok(!shifted_factorial_block(start, size)?.det()?.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn factorial_matrix_entries() {
        let m = factorial_matrix(0, 1);
        assert_eq!(m, ExactMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), ratio(1, 2)]]).unwrap());
        assert_eq!(factorial_matrix(1, 0), ExactMatrix::identity(1));
        let m = factorial_matrix(2, 2);
        assert_eq!(m.rows(), 3);
        assert_eq!(m[(0, 0)], ratio(1, 2));
        assert_eq!(m[(2, 2)], ratio(1, 720));
    }

    #[test]
    fn factorial_det_small() {
        assert_eq!(factorial_det_formula(0, 1), ratio(-1, 2));
        assert_eq!(exact_det(&factorial_matrix(0, 1)).unwrap(), ratio(-1, 2));
        assert_eq!(factorial_det_formula(0, 0), int(1));
        assert_eq!(
            factorial_det_formula(3, 2),
            exact_det(&factorial_matrix(3, 2)).unwrap()
        );
    }

    #[test]
    fn cauchy_examples() {
        assert_eq!(cauchy_det(&[int(0)], &[int(-1)]).unwrap(), int(1));
        let x = [int(0), int(1)];
        let y = [int(-1), int(-2)];
        assert_eq!(cauchy_det(&x, &y).unwrap(), ratio(1, 12));
        assert_eq!(exact_det(&cauchy_matrix(&x, &y).unwrap()).unwrap(), ratio(1, 12));
    }

    #[test]
    fn cauchy_preconditions() {
        let e = cauchy_det(&[int(1), int(1)], &[int(2), int(3)]).unwrap_err();
        assert!(e.to_string().contains("x[0] = x[1]"), "{e}");
        let e = cauchy_det(&[int(1), int(2)], &[int(2), int(3)]).unwrap_err();
        assert!(e.to_string().contains("x[1] = y[0]"), "{e}");
        assert!(cauchy_det(&[int(1)], &[]).is_err());
    }

    #[test]
    fn blocks() {
        assert!(shifted_factorial_block(0, 2).is_err());
        assert!(block_is_invertible(3, 1).unwrap());
        assert!(block_is_invertible(3, 0).is_err());
        assert_eq!(factorial(20), "2432902008176640000".parse::<BigInt>().unwrap());
    }
}
