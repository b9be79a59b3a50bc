//! O(n)-types of Gr_k: counts, the restricted-partition bracket, and
//! densities of the sparse sets the image theorems are about.
//!
//! ```text
//! cargo run --example type_counts
//! ```

use grassmann_harmonics::partitions::{
    count_types, density, enumerate_types, restricted_partition_bounds, restricted_partition_count,
};
use grassmann_harmonics::rational;
use grassmann_harmonics::TypePredicate;

fn main() -> grassmann_harmonics::Result<()> {
    let types = enumerate_types(2, 8)?;
    let listed: Vec<String> = types.iter().map(|t| t.to_string()).collect();
    println!("Lambda_2(8) = {{{}}}", listed.join(", "));

    println!("\nweight  |Lambda_3|  P(m,3)  lower..upper");
    for m in [5u64, 10, 20, 40] {
        let (lo, hi) = restricted_partition_bounds(m, 3);
        println!(
            "{:>6}  {:>9}  {:>6}  {:.1}..{:.1}",
            2 * m,
            count_types(3, 2 * m as u32)?,
            restricted_partition_count(m, 3),
            rational::to_f64(&lo),
            rational::to_f64(&hi)
        );
    }

    // l2<=2 is the image of Cos; its complement is co-sparse.
    let sparse = TypePredicate::second_part_at_most(2);
    println!("\n2m    density(l2<=2)");
    for m in [10u32, 25, 50, 100] {
        let d = density(&sparse, 2, 2 * m)?;
        println!("{:<5} {} ~ {:.4}", 2 * m, rational::format(&d), rational::to_f64(&d));
    }
    Ok(())
}
