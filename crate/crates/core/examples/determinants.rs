//! Closed-form determinants checked against exact elimination.

use grassmann_harmonics::determinants::{cauchy_det, cauchy_matrix, exact_det, factorial_det_formula, factorial_matrix, shifted_hilbert_det_formula};
use grassmann_harmonics::rational::{self, Rational};

fn main() -> grassmann_harmonics::Result<()> {
    for (k, n) in [(0, 1), (2, 3), (3, 2), (5, 5)] {
        let formula = factorial_det_formula(k, n);
        let elim = exact_det(&factorial_matrix(k, n))?;
        println!("det[1/(k+i+j)!] k={k} n={n}: {} (elimination agrees: {})", rational::format(&formula), formula == elim);
    }

    let x = rational::parse_list("0,1/2,3")?;
    let y = rational::parse_list("-1,-5/3,7")?;
    let closed = cauchy_det(&x, &y)?;
    println!("\nCauchy det: {} (elimination agrees: {})", rational::format(&closed), closed == exact_det(&cauchy_matrix(&x, &y)?)?);

    // x_i = k+i-1, y_j = -j gives a shifted Hilbert matrix.
    let (k, n) = (2usize, 4usize);
    let xs: Vec<Rational> = (1..=n).map(|i| rational::int((k + i - 1) as i64)).collect();
    let ys: Vec<Rational> = (1..=n).map(|j| rational::int(-(j as i64))).collect();
    println!("shifted Hilbert k={k} n={n}: {} = {}", rational::format(&cauchy_det(&xs, &ys)?), rational::format(&shifted_hilbert_det_formula(k, n)));
    Ok(())
}
