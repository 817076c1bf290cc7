//! Running the identity suites programmatically.

use starlog::verify::{run_suite, Suite};
use starlog::{BasicDomainSpec, DomainKind};

fn main() -> starlog::Result<()> {
    let d = BasicDomainSpec::rectangle(-1.0, 1.0, 0.0, 1.0, DomainKind::Slice).with_step(0.0625);
    let report = run_suite(Suite::All, &d)?;
    for c in &report.checks {
        println!("{c}");
    }
    println!("passed: {}", report.passed());
    Ok(())
}
