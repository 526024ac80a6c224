//! Runs the theorem suites in process, then again with the positive part
//! deliberately defined as x ^ 0.

use fuzzy_riesz::mutation::{with_mutant, Mutant};
use fuzzy_riesz::suites::{run_suite, Suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { seed: 42, cases: 100, ..SuiteConfig::default() };
    for r in run_suite(Suite::All, &cfg) {
        println!("{:<12} {} checks, {} failures", r.suite, r.checks.len(), r.failures());
    }
    let broken = with_mutant(Mutant::LiteralPositivePart, || run_suite(Suite::Riesz, &cfg));
    for r in &broken {
        for c in r.checks.iter().filter(|c| c.failures > 0) {
            println!("mutant breaks {}: {}", c.tag, c.counterexample.as_deref().unwrap_or(""));
        }
    }
}
