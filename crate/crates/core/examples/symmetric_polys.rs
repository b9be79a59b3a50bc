//! Exact symmetric polynomials and the substitution sigma_j -> e_j(y).

use grassmann_harmonics::poly::{monomial_symmetric, sigma_to_y, symmetric_reachable_from_sigma};
use grassmann_harmonics::rational;
use grassmann_harmonics::{MultiPoly, Partition};

fn main() -> grassmann_harmonics::Result<()> {
    let l = Partition::new(vec![4, 2])?;
    println!("m_(4,2) in two variables: {}", monomial_symmetric(&l, 2)?.poly());

    // sigma_1^2 - 2 sigma_2 is the power sum y_1^2 + y_2^2.
    let p = MultiPoly::from_terms(2, [(vec![2, 0], rational::int(1)), (vec![0, 1], rational::int(-2))])?;
    println!("sigma_1^2 - 2 sigma_2 -> {}", sigma_to_y(&p)?.poly());

    let json = serde_json::to_string(&p)?;
    println!("as polynomial JSON: {json}");

    for k in 1..=3 {
        println!("k={k}: every m_lambda with |lambda| <= 8 reachable from sigma: {}", symmetric_reachable_from_sigma(k, 4)?);
    }
    Ok(())
}
