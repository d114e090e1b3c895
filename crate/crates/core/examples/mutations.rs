//! Each named coefficient perturbation, and the checks it breaks.

use rectw::cli::{run_suite, SuiteConfig};
use rectw::mutation::Mutation;

fn main() {
    for mu in Mutation::ALL {
        let suite = mu.suite().parse().unwrap();
        let (m, n, l) = match mu {
            Mutation::PhiX01Alpha => (3, 0, 2),
            Mutation::EvH1Hbar => (3, 0, 1),
            _ => (2, 1, 2),
        };
        let cfg = SuiteConfig { suite, m, n, l, cutoff: 1, c_zero: false, jobs: None, mutate: Some(mu.id().into()) };
        let r = run_suite(&cfg, None).expect("valid config");
        let first = r.checks.iter().find(|c| !c.passed()).map(|c| c.id.as_str()).unwrap_or("-");
        println!("{:<16} {}/{} checks fail, first {first}", mu.id(), r.summary.failed, r.summary.total);
    }
}
