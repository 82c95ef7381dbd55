//! Checking that pushouts of generated squares preserve equivalences.

use permcat::cli::generate::{Generator, GeneratorConfig};
use permcat::modelcat::properness_check;
use permcat::smfunctor::find_section;

fn main() -> permcat::Result<()> {
    let mut g = Generator::new(GeneratorConfig::with_seed(7))?;
    for i in 0..5 {
        let sq = g.square()?;
        let sec = find_section(&sq.fibration, 2)?;
        let report = properness_check(&sec, &sq.cofibration, 2);
        println!(
            "square {i}: {} -> {}, cobase change {}",
            sq.fibration.domain,
            sq.fibration.codomain,
            if report.passes("cobase_fully_faithful") && report.passes("cobase_essentially_surjective") {
                "is an equivalence"
            } else {
                "FAILS"
            }
        );
    }
    Ok(())
}
