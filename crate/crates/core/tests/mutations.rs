//! Every mutation breaks its suite, and the same configuration passes without it.

use rectw::cli::{run_suite, Suite, SuiteConfig};
use rectw::mutation::Mutation;

fn cfg(mu: Mutation) -> SuiteConfig {
    let suite: Suite = mu.suite().parse().unwrap();
    let (m, n, l, cutoff) = match suite {
        Suite::Phi => (3, 0, 2, 1),
        Suite::Ev => (3, 0, 1, 1),
        _ => (2, 1, 2, 1),
    };
    SuiteConfig { suite, m, n, l, cutoff, c_zero: false, jobs: None, mutate: Some(mu.id().into()) }
}

#[test]
fn each_mutation_fails_its_suite() {
    assert!(Mutation::ALL.len() >= 5);
    for mu in Mutation::ALL {
        let mutated = run_suite(&cfg(mu), None).unwrap();
        assert!(mutated.summary.failed > 0, "{mu} left every check passing");
        let clean = run_suite(&SuiteConfig { mutate: None, ..cfg(mu) }, None).unwrap();
        assert_eq!(clean.summary.failed, 0, "{mu} baseline fails");
        assert_eq!(clean.summary.total, mutated.summary.total);
    }
}

#[test]
fn phi_mutation_breaks_the_x_plus_relations() {
    let r = run_suite(&SuiteConfig { cutoff: 2, ..cfg(Mutation::PhiX01Alpha) }, None).unwrap();
    let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed()).map(|c| c.id.as_str()).collect();
    assert!(failed.iter().any(|id| id.starts_with("phi.xx1")), "{failed:?}");
    assert!(r.checks.iter().filter(|c| !c.passed()).all(|c| c.residual.is_some()));
}

#[test]
fn mutation_rejected_by_other_suite() {
    let bad = SuiteConfig { suite: Suite::D0, ..cfg(Mutation::OpeW2W2) };
    assert!(run_suite(&bad, None).is_err());
    let unknown = SuiteConfig { mutate: Some("nope".into()), ..cfg(Mutation::OpeW2W2) };
    assert!(run_suite(&unknown, None).is_err());
}
