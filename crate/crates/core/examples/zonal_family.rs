//! Builds generalized Jacobi polynomials by Gram-Schmidt against Haar
//! moments, first with exact quadrature (one angle) and then by sampling.

use grassmann_harmonics::zonal::{build_family, MomentOracle};

fn main() -> grassmann_harmonics::Result<()> {
    let mut quad = MomentOracle::quadrature_kappa1(4, 1, 16)?;
    let line = build_family(4, 1, 6, &mut quad)?;
    for l in line.types() {
        // Coefficients of y^0, y^1, ... ; P_(2) = y - 1/4.
        println!("Gr_1(R^4)  {l}: {:?}", line.coefficients(l)?);
    }

    let mut mc = MomentOracle::monte_carlo(5, 2, 200_000, 11)?;
    let planes = build_family(5, 2, 4, &mut mc)?;
    for l in planes.types() {
        let norm = planes.norm_sq(l)?;
        println!("Gr_2(R^5)  {l}: coefficients {:?}, |P|^2 = {:.5} +- {:.1e}", planes.coefficients(l)?, norm.mean, norm.stderr);
    }
    let bad = planes.orthogonality_violations(3.0, 0.0);
    println!("held-out Gram entries above 3 sigma: {}", bad.len());
    Ok(())
}
