//! Squared norms of Radon images R: Gr_2(R^4) -> Gr_1(R^4) on each type.
//! Only types with a single nonzero part survive.

use grassmann_harmonics::transforms::{family_for, radon_adjoint_norm};
use grassmann_harmonics::partitions::enumerate_types;

fn main() -> grassmann_harmonics::Result<()> {
    let family = family_for(4, 2, 6, 500_000, 3)?;
    for l in enumerate_types(2, 6)? {
        let e = radon_adjoint_norm(1, &l, &family, 50_000, 4, 5)?;
        println!("{:<7} |R Z|^2 = {:>11.3e} +- {:.1e}  {}", l.to_string(), e.mean, e.stderr, e.verdict());
    }
    Ok(())
}
