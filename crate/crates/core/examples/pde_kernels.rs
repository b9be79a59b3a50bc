//! Exact kernel dimensions of polynomial-coefficient operators on P_m,
//! the growth fit, and the mu-matrix cross-check.

use grassmann_harmonics::pde::{density_bound_check, growth_fit, kernel_dims, mu_kernel_dim, random_operator, reduce_operator, DiffOp};

fn main() -> grassmann_harmonics::Result<()> {
    let euler = DiffOp::from_json(r#"{"k":2,"terms":[{"dx":[1,0],"x":[1,0],"c":"1/1"},{"dx":[0,1],"x":[0,1],"c":"1/1"}]}"#)?;
    println!("x1 d1 + x2 d2: dim ker on P_m, m=0..8: {:?}", kernel_dims(&euler, 8));

    let d = random_operator(2, 3, 2, 5, false, 4);
    println!("\nrandom operator {}", d.to_json());
    let fit = growth_fit(&d, &(8..=20).step_by(2).collect::<Vec<_>>())?;
    for r in &fit.rows {
        println!("  m={:<3} dim P={:<4} dim ker={}", r.m, r.dim_p, r.dim_ker);
    }
    println!("  log-log slope {:?} (threshold {})", fit.slope, fit.threshold);

    let (reduced, shift) = reduce_operator(&d)?;
    println!("\nreduced by d^{shift:?}: {}", reduced.to_json());
    let direct = kernel_dims(&reduced, 6);
    for m in 0..=6 {
        println!("  m={m}: direct {} mu {}", direct[m as usize], mu_kernel_dim(&reduced, m)?);
    }

    let report = density_bound_check(&d, &[1, 2, 3])?;
    println!("\nN={} limit bound {}", report.order, grassmann_harmonics::rational::format(&report.limit_bound));
    for r in &report.rows {
        println!("  m={:<3} density {}", r.m, grassmann_harmonics::rational::format(&r.density));
    }
    Ok(())
}
