use std::collections::BTreeMap;

use rectw::foundation::sgn;
use rectw::superalgebra::{Algebra, GenId};
use rectw::{Instance, Scalar};

type Vec1 = BTreeMap<GenId, i64>;

fn br(alg: &Algebra, x: &Vec1, y: &Vec1) -> Vec1 {
    let mut out = Vec1::new();
    for (&a, &ca) in x {
        for (&b, &cb) in y {
            for &(g, k) in alg.bracket(a, b) {
                *out.entry(g).or_default() += ca * cb * k;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn unit(g: GenId) -> Vec1 {
    Vec1::from([(g, 1)])
}

fn add(x: &Vec1, y: &Vec1, k: i64) -> Vec1 {
    let mut out = x.clone();
    for (&g, &c) in y {
        *out.entry(g).or_default() += k * c;
    }
    out.retain(|_, c| *c != 0);
    out
}

fn form(alg: &Algebra, x: &Vec1, y: &Vec1) -> Scalar {
    let mut s = Scalar::zero();
    for (&a, &ca) in x {
        for (&b, &cb) in y {
            s = s.add(&alg.form(a, b).scale_int(ca * cb));
        }
    }
    s
}

fn check_lie(alg: &Algebra) {
    let n = alg.len() as GenId;
    for x in 0..n {
        for y in 0..n {
            let pxy = sgn(alg.parity(x) & alg.parity(y));
            let skew = add(&br(alg, &unit(x), &unit(y)), &br(alg, &unit(y), &unit(x)), pxy);
            assert!(skew.is_empty(), "skew symmetry {} {}", alg.label(x), alg.label(y));
            assert_eq!(alg.form(x, y), &alg.form(y, x).scale_int(pxy));
            for z in 0..n {
                let lhs = br(alg, &unit(x), &br(alg, &unit(y), &unit(z)));
                let r1 = br(alg, &br(alg, &unit(x), &unit(y)), &unit(z));
                let r2 = br(alg, &unit(y), &br(alg, &unit(x), &unit(z)));
                let diff = add(&add(&lhs, &r1, -1), &r2, -pxy);
                assert!(diff.is_empty(), "Jacobi {} {} {}", alg.label(x), alg.label(y), alg.label(z));
                let inv = form(alg, &br(alg, &unit(x), &unit(y)), &unit(z)).sub(&form(alg, &unit(x), &br(alg, &unit(y), &unit(z))));
                assert!(inv.is_zero(), "invariance {} {} {}", alg.label(x), alg.label(y), alg.label(z));
            }
        }
    }
}

#[test]
fn a_mn_is_a_lie_superalgebra_with_invariant_form() {
    for (m, n, l) in [(2, 1, 2), (1, 1, 2), (3, 0, 2), (1, 2, 3)] {
        check_lie(&Algebra::a_mn(Instance::new(m, n, l).unwrap()));
    }
}

#[test]
fn gl_forms_are_invariant() {
    check_lie(&Algebra::gl_str(2, 1, Scalar::alpha()));
    check_lie(&Algebra::gl_kappa(Instance::new(2, 1, 2).unwrap()));
    check_lie(&Algebra::gl_kappa(Instance::new(3, 0, 2).unwrap()));
}
