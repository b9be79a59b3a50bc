//! Multipliers of the cosine transform on Gr_2(R^4). Types with second
//! part at least 4 should vanish, the rest should survive.
//!
//! Small sample counts keep this quick; the acceptance suite uses 4e6.

use grassmann_harmonics::transforms::{classify_table, spectrum, Operator, SpectrumConfig};
use grassmann_harmonics::TypePredicate;

fn main() -> grassmann_harmonics::Result<()> {
    let cfg = SpectrumConfig::new(Operator::Cos, 4, 2, 8, 300_000, 7);
    let table = spectrum(&cfg)?;
    let image = TypePredicate::cosine_image(1);
    println!("{:<8} {:>13} {:>10} {:>12}  predicted", "type", "multiplier", "stderr", "verdict");
    for row in classify_table(&table, &image) {
        println!(
            "{:<8} {:>13.6e} {:>10.1e} {:>12}  {}",
            row.partition.to_string(),
            row.mean,
            row.stderr,
            row.verdict.to_string(),
            if row.predicted_surviving { "surviving" } else { "vanishing" }
        );
    }
    Ok(())
}
