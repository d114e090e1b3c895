//! Randomized invariants: scalar ring laws, serialization, vertex algebra
//! identities, d₀ as an odd derivation, mode expressions and grading.

use proptest::prelude::*;
use rectw::appendix_suite::{grade_parts, leading_component, word_grade};
use rectw::cli::{run_suite, Suite, SuiteConfig};
use rectw::foundation::{Scalar, Q};
use rectw::superalgebra::{Algebra, Kind};
use rectw::vertex::basis::words_up_to;
use rectw::vertex::props::{borcherds, derivation, quasi_symmetry, translation_axiom};
use rectw::vertex::serial::{from_json, to_json};
use rectw::vertex::{State, Word};
use rectw::w_construct::{Ambient, D0Reading, D0};
use rectw::yangian::ModeExpr;
use rectw::Instance;
use std::sync::OnceLock;

fn amb() -> &'static Ambient {
    static A: OnceLock<Ambient> = OnceLock::new();
    A.get_or_init(|| Ambient::new(Instance::new(2, 1, 2).unwrap()))
}

fn words(d: u32) -> &'static [Word] {
    static W: OnceLock<Vec<Vec<Word>>> = OnceLock::new();
    &W.get_or_init(|| (0..=3).map(|d| words_up_to(&amb().vx.alg, d)).collect())[d as usize]
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((0u32..3, 0u32..3, -4i64..5), 0..4).prop_map(|ts| {
        ts.into_iter().fold(Scalar::zero(), |s, (i, j, k)| s.add(&Scalar::alpha().pow(i).mul(&Scalar::c().pow(j)).scale_int(k)))
    })
}

fn word(d: u32) -> impl Strategy<Value = Word> {
    (0..words(d).len()).prop_map(move |k| words(d)[k].clone())
}

fn state(d: u32) -> impl Strategy<Value = State> {
    prop::collection::vec((word(d), scalar()), 1..4).prop_map(|ts| {
        ts.into_iter().fold(State::zero(), |s, (w, c)| s.add(&State::word(w, c)))
    })
}

fn homogeneous(d: u32) -> impl Strategy<Value = State> {
    (word(d), word(d), scalar(), scalar()).prop_filter_map("mixed parity", |(a, b, x, y)| {
        let alg = &amb().vx.alg;
        let s = State::word(a, x).add(&State::word(b, y));
        s.parity(alg).map(|_| s)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_ring_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert!(a.terms().iter().all(|(_, q)| !q.is_zero()));
        prop_assert_eq!(a.mul(&b).specialize_c0(), a.specialize_c0().mul(&b.specialize_c0()));
        let (x, y) = (Q::int(3), Q::int(-2));
        prop_assert_eq!(a.mul(&b).eval(&x, &y), a.eval(&x, &y).mul(&b.eval(&x, &y)));
        prop_assert_eq!(Scalar::from_string_map(&a.to_string_map()).unwrap(), a);
    }

    #[test]
    fn state_json_round_trip(s in state(3)) {
        let alg = &amb().vx.alg;
        prop_assert_eq!(from_json(alg, &to_json(alg, &s)).unwrap(), s);
    }

    #[test]
    fn vertex_identities(u in homogeneous(2), v in homogeneous(2), n in -2i64..3) {
        let vx = &amb().vx;
        prop_assert!(quasi_symmetry(vx, &u, n, &v).is_zero());
        prop_assert!(translation_axiom(vx, &u, n, &v).is_zero());
        prop_assert!(derivation(vx, &u, n, &v).is_zero());
    }

    #[test]
    fn borcherds_commutator(u in word(1), v in word(1), w in state(2), a in -2i64..3, b in -2i64..3) {
        let vx = &amb().vx;
        let (u, v) = (State::word(u, Scalar::one()), State::word(v, Scalar::one()));
        prop_assert!(borcherds(vx, &u, a, &v, b, &w).is_zero());
    }

    #[test]
    fn weight_and_parity_of_products(u in word(2), v in word(2), n in -2i64..3) {
        let vx = &amb().vx;
        let alg = &vx.alg;
        let (u, v) = (State::word(u, Scalar::one()), State::word(v, Scalar::one()));
        let p = vx.nth_product(&u, n, &v);
        if !p.is_zero() {
            let wt = u.weight() + v.weight() - n - 1;
            prop_assert_eq!((p.min_weight(), p.weight()), (wt, wt));
            prop_assert_eq!(p.parity(alg), Some(u.parity(alg).unwrap() ^ v.parity(alg).unwrap()));
        }
    }

    #[test]
    fn d0_is_odd_derivation(u in word(1), v in word(1)) {
        let a = amb();
        let alg = &a.vx.alg;
        let ghost_free = |w: &Word| w.iter().all(|x| alg.gen(x.gen()).kind == Kind::Current);
        prop_assume!(ghost_free(&u) && ghost_free(&v));
        let d0 = D0::new(a, D0Reading::ADOPTED);
        let (u, v) = (State::word(u, Scalar::one()), State::word(v, Scalar::one()));
        let pu = u.parity(alg).unwrap();
        let lhs = d0.apply(&a.vx.nop(&u, &v)).unwrap();
        let rhs = a.vx.nop(&d0.apply(&u).unwrap(), &v).add(&a.vx.nop(&u, &d0.apply(&v).unwrap()).scale(&Scalar::int(if pu == 0 { 1 } else { -1 })));
        prop_assert_eq!(&lhs, &rhs);
        if let Some(p) = lhs.parity(alg).filter(|_| !lhs.is_zero()) {
            prop_assert_eq!(p, pu ^ v.parity(alg).unwrap() ^ 1);
        }
    }

    #[test]
    fn mode_expressions_are_linear(x in word(1), y in word(1), k in -1i64..2, v in state(2), w in state(2), s in scalar(), t in scalar()) {
        let vx = &amb().vx;
        let alg = &vx.alg;
        let (x, y) = (State::word(x, Scalar::one()), State::word(y, Scalar::one()));
        let e = ModeExpr::mode(&x, k).then(&ModeExpr::mode(&y, 0)).unwrap();
        let f = ModeExpr::mode(&y, k);
        let comb = v.scale(&s).add(&w.scale(&t));
        prop_assert_eq!(e.apply(vx, &comb), e.apply(vx, &v).scale(&s).add(&e.apply(vx, &w).scale(&t)));
        let ef = e.clone().plus(f.clone(), &s);
        prop_assert_eq!(ef.apply(vx, &v), e.apply(vx, &v).add(&f.apply(vx, &v).scale(&s)));
        let out = e.apply(vx, &v);
        if let (Some(pv), false) = (v.parity(alg), out.is_zero()) {
            prop_assert_eq!(out.parity(alg), Some(pv ^ x.parity(alg).unwrap() ^ y.parity(alg).unwrap()));
        }
    }

    #[test]
    fn leading_component_is_a_projection(u in state(2), v in state(2), s in scalar()) {
        let alg = &amb().vx.alg;
        let lu = leading_component(alg, &u);
        prop_assert_eq!(leading_component(alg, &lu), lu.clone());
        prop_assert_eq!(grade_parts(alg, &u).values().fold(State::zero(), |a, b| a.add(b)), u.clone());
        let g = |x: &State| grade_parts(alg, x).keys().next().copied();
        if g(&u) == g(&v) && g(&u) == g(&u.add(&v.scale(&s))) && g(&v).is_some() {
            let sum = u.add(&v.scale(&s));
            prop_assert_eq!(leading_component(alg, &sum), lu.add(&leading_component(alg, &v).scale(&s)));
        }
    }

    #[test]
    fn grade_is_additive(u in word(2), v in word(2), n in -2i64..2) {
        let vx = &amb().vx;
        let alg = &vx.alg;
        let (gu, gv) = (word_grade(alg, &u), word_grade(alg, &v));
        let p = vx.nth_product(&State::word(u, Scalar::one()), n, &State::word(v, Scalar::one()));
        for (w, _) in p.terms() {
            prop_assert_eq!(word_grade(alg, w), gu + gv);
        }
    }
}

#[test]
fn b_has_nonpositive_grades_and_super_parity() {
    for (m, n, l) in [(2, 1, 2), (3, 0, 3), (1, 2, 2)] {
        let alg = Algebra::a_mn(Instance::new(m, n, l).unwrap());
        for g in alg.gens() {
            assert!(g.grade <= 0);
            if n == 0 {
                assert_eq!(g.parity, u8::from(g.kind == Kind::Ghost));
            }
        }
        for x in 0..alg.len() as u16 {
            for y in 0..alg.len() as u16 {
                for &(z, _) in alg.bracket(x, y) {
                    assert_eq!(alg.parity(z), alg.parity(x) ^ alg.parity(y));
                    assert_eq!(alg.gen(z).grade, alg.gen(x).grade + alg.gen(y).grade);
                }
            }
        }
    }
}

#[test]
fn reports_are_deterministic_modulo_timing() {
    let cfg = SuiteConfig { suite: Suite::Gen, m: 2, n: 1, l: 2, cutoff: 1, c_zero: false, jobs: Some(2), mutate: None };
    let strip = |mut r: rectw::cli::RunReport| {
        r.summary.millis = 0;
        r.checks.iter_mut().for_each(|c| c.millis = 0);
        serde_json::to_string(&r).unwrap()
    };
    assert_eq!(strip(run_suite(&cfg, None).unwrap()), strip(run_suite(&cfg, None).unwrap()));
}
