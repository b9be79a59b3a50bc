//! Principal cosines and the rescaling flow g_eps = P_E0 + eps P_F.
//! As eps -> 0 every transversal E collapses onto E0 and the Jacobian
//! factor tends to 1/|cos(E, E0)|.

use grassmann_harmonics::grassmann::{abs_cosine, haar_sample, principal_cosines, RescalingFlow, Subspace};
use grassmann_harmonics::stats::stream_rng;

fn main() -> grassmann_harmonics::Result<()> {
    let (n, k) = (5, 2);
    let base = Subspace::canonical(n, k)?;
    let flow = RescalingFlow::new(base.clone());
    let mut rng = stream_rng(2024, 0);
    let e = haar_sample(n, k, &mut rng)?;

    println!("y(E, E0) = {:?}", principal_cosines(&e, &base)?.values());
    println!("1/|cos| = {:.9}", 1.0 / abs_cosine(&e, &base)?);
    println!("{:>8}  {:>24}  {:>12}", "eps", "y(g_eps E, E0)", "eta");
    for eps in [1.0, 0.3, 0.1, 1e-2, 1e-3, 1e-5] {
        let y = principal_cosines(&flow.apply(eps, &e)?, &base)?;
        let v = y.values();
        println!("{eps:>8}  {:>11.9} {:>11.9}  {:>12.9}", v[0], v[1], flow.jacobian_factor(eps, &e)?);
    }

    // g_s g_t = g_st
    let lhs = flow.apply(0.5, &flow.apply(0.2, &e)?)?;
    let rhs = flow.apply(0.1, &e)?;
    println!("semigroup defect: {:.2e}", (lhs.projector() - rhs.projector()).amax());
    Ok(())
}
