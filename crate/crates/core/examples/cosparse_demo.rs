//! A multiplier operator that kills exactly the types with second part at
//! most 2. Its surviving set is co-sparse: the density climbs toward 1.

use grassmann_harmonics::rational;
use grassmann_harmonics::transforms::{support_density_demo, synthetic_table};
use grassmann_harmonics::TypePredicate;

fn main() -> grassmann_harmonics::Result<()> {
    let killed = TypePredicate::second_part_at_most(2);
    for m in [10u32, 20, 50, 100] {
        let r = support_density_demo(&synthetic_table(2, 2 * m, &killed)?, 3.0);
        println!(
            "2m={:<4} surviving {:>5}/{:<5} = {:.4}",
            2 * m,
            r.surviving,
            r.total,
            rational::to_f64(&r.density)
        );
    }
    Ok(())
}
