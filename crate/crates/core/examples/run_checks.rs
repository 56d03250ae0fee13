//! Runs a few catalog checks and prints the text report.

use liekit::verify::{emit_report, run_specs, CheckId, CheckSpec, Format, Overrides, Summary};

fn main() -> liekit::Result<()> {
    let specs = vec![
        CheckSpec::rank(CheckId::DimsTable, 4)?,
        CheckSpec::pq(CheckId::LemmaA2, 1, 2)?,
        CheckSpec::pq(CheckId::SymmetricPairs, 1, 2)?,
    ];
    let reports = run_specs(&specs, &Overrides::default(), true);
    emit_report(&reports, Format::Text, &mut std::io::stdout())?;
    std::process::exit(if Summary::of(&reports).all_passed() { 0 } else { 1 })
}
